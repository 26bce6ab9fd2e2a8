#pragma once

// Cyclic q-Racah sequences theta_i = a q^(-2i) + a^(-1) q^(2i), i mod dbar.

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "uaw/chebyshev.hpp"
#include "uaw/cyclotomic.hpp"

namespace uaw {

enum class SequenceType { D, O2, Om2, E2, Eq, Unclassified };

inline std::string to_string(SequenceType t) {
  switch (t) {
    case SequenceType::D: return "D";
    case SequenceType::O2: return "O(2)";
    case SequenceType::Om2: return "O(-2)";
    case SequenceType::E2: return "E(2)";
    case SequenceType::Eq: return "E(q+q^-1)";
    case SequenceType::Unclassified: return "unclassified";
  }
  return "unclassified";
}

inline long mod(long i, long n) {
  long r = i % n;
  return r < 0 ? r + n : r;
}

struct QRacahSequence {
  Cyclotomic a;
  std::vector<Cyclotomic> thetas;
  SequenceType type = SequenceType::Unclassified;

  int dbar() const { return static_cast<int>(thetas.size()); }
  const FieldContext& context() const { return a.context(); }
  const Cyclotomic& theta(long i) const { return thetas[static_cast<std::size_t>(mod(i, dbar()))]; }
};

inline QRacahSequence generate(const Cyclotomic& a) {
  const FieldContext& ctx = a.context();
  if (a.is_zero()) throw ZeroParameter("q-Racah parameter must be nonzero");
  QRacahSequence s;
  s.a = a;
  for (int i = 0; i < ctx.dbar(); ++i) s.thetas.push_back(qracah_theta(a, i));
  return s;
}

// a^2 is not a power of q^2.
inline bool is_type_d_parameter(const Cyclotomic& a) {
  const FieldContext& ctx = a.context();
  const Cyclotomic a2 = a * a;
  for (int i = 0; i < ctx.dbar(); ++i)
    if (a2 == Cyclotomic::q_power(ctx, 2 * i)) return false;
  return true;
}

struct RecurrenceReport {
  std::vector<bool> sum_ok;      // theta_{i-1} + theta_{i+1} = (q^2 + q^-2) theta_i
  std::vector<bool> product_ok;  // theta_{i-1} theta_{i+1} = theta_i^2 + (q^2 - q^-2)^2
  bool all_pass() const {
    for (std::size_t i = 0; i < sum_ok.size(); ++i)
      if (!sum_ok[i] || !product_ok[i]) return false;
    return true;
  }
  std::optional<std::size_t> first_failure() const {
    for (std::size_t i = 0; i < sum_ok.size(); ++i)
      if (!sum_ok[i] || !product_ok[i]) return i;
    return std::nullopt;
  }
};

inline RecurrenceReport recurrence_check(const QRacahSequence& s) {
  QScalars k(s.context());
  const Cyclotomic shift = k.q2_minus_qm2 * k.q2_minus_qm2;
  RecurrenceReport r;
  for (long i = 0; i < s.dbar(); ++i) {
    const auto &prev = s.theta(i - 1), &cur = s.theta(i), &next = s.theta(i + 1);
    r.sum_ok.push_back(prev + next == k.q2_plus_qm2 * cur);
    r.product_ok.push_back(prev * next == cur * cur + shift);
  }
  return r;
}

// The four conditions of the "theta_i in {2, -2}" characterisation, per index.
struct PlusMinusTwoConditions {
  bool neighbours_equal;  // theta_{i-1} = theta_{i+1}
  bool left_relation;     // (q^2 + q^-2) theta_i = 2 theta_{i-1}
  bool right_relation;    // (q^2 + q^-2) theta_i = 2 theta_{i+1}
  bool is_plus_minus_two;
  bool consistent() const {
    return neighbours_equal == left_relation && left_relation == right_relation &&
           right_relation == is_plus_minus_two;
  }
};

inline PlusMinusTwoConditions plus_minus_two_conditions(const QRacahSequence& s, long i) {
  QScalars k(s.context());
  const FieldContext& ctx = s.context();
  const Cyclotomic two = Cyclotomic::from_integer(ctx, 2);
  const auto &prev = s.theta(i - 1), &cur = s.theta(i), &next = s.theta(i + 1);
  return {prev == next, k.q2_plus_qm2 * cur == two * prev, k.q2_plus_qm2 * cur == two * next,
          cur == two || cur == -two};
}

inline Cyclotomic canonical_parameter(const FieldContext& ctx, SequenceType t) {
  switch (t) {
    case SequenceType::O2:
    case SequenceType::E2: return Cyclotomic::one(ctx);
    case SequenceType::Om2: return -Cyclotomic::one(ctx);
    case SequenceType::Eq: return Cyclotomic::q_power(ctx, 1);
    default: throw Error("no canonical sequence for type " + to_string(t));
  }
}

inline std::vector<SequenceType> canonical_types(const FieldContext& ctx) {
  if (ctx.dbar() % 2 == 1) return {SequenceType::O2, SequenceType::Om2};
  return {SequenceType::E2, SequenceType::Eq};
}

inline QRacahSequence canonical_sequence(const FieldContext& ctx, SequenceType t) {
  QRacahSequence s = generate(canonical_parameter(ctx, t));
  s.type = t;
  return s;
}

inline bool same_values(const QRacahSequence& x, const QRacahSequence& y, long shift = 0) {
  if (x.dbar() != y.dbar()) return false;
  for (long i = 0; i < x.dbar(); ++i)
    if (x.theta(i) != y.theta(i + shift)) return false;
  return true;
}

// Tags by exact match: D from the parameter, the others by literal equality
// with the canonical sequences. Anything else stays Unclassified.
inline QRacahSequence classify(QRacahSequence s) {
  if (is_type_d_parameter(s.a)) {
    s.type = SequenceType::D;
    return s;
  }
  s.type = SequenceType::Unclassified;
  for (SequenceType t : canonical_types(s.context()))
    if (same_values(s, canonical_sequence(s.context(), t))) {
      s.type = t;
      break;
    }
  return s;
}

struct Congruence {
  long shift = 0;  // theta_i = canonical.theta(i + shift)
  QRacahSequence canonical;
};

inline Congruence normalize_congruence(const QRacahSequence& s) {
  if (is_type_d_parameter(s.a)) throw TypeDInput("type D sequences have no canonical form");
  for (SequenceType t : canonical_types(s.context())) {
    const QRacahSequence c = canonical_sequence(s.context(), t);
    for (long j = 0; j < s.dbar(); ++j)
      if (same_values(s, c, j)) return {j, c};
  }
  throw Error("sequence is congruent to no canonical type");
}

// Number of (type, shift) pairs that map s onto a canonical sequence.
inline int congruence_match_count(const QRacahSequence& s) {
  int n = 0;
  for (SequenceType t : canonical_types(s.context())) {
    const QRacahSequence c = canonical_sequence(s.context(), t);
    for (long j = 0; j < s.dbar(); ++j)
      if (same_values(s, c, j)) ++n;
  }
  return n;
}

// The type of s up to congruence (D, or the canonical type it shifts onto).
inline SequenceType congruence_type(const QRacahSequence& s) {
  if (is_type_d_parameter(s.a)) return SequenceType::D;
  return normalize_congruence(s).canonical.type;
}

struct MultiplicityClass {
  Cyclotomic value;
  std::vector<int> indices;
};

// Indices grouped by equal value, in order of first occurrence.
inline std::vector<MultiplicityClass> multiplicity_profile(const QRacahSequence& s) {
  std::vector<MultiplicityClass> out;
  for (int i = 0; i < s.dbar(); ++i) {
    bool placed = false;
    for (auto& cls : out)
      if (cls.value == s.thetas[static_cast<std::size_t>(i)]) {
        cls.indices.push_back(i);
        placed = true;
        break;
      }
    if (!placed) out.push_back({s.thetas[static_cast<std::size_t>(i)], {i}});
  }
  return out;
}

// Predicted equality pattern for a canonical sequence: theta_i = theta_j iff
// i in {j, -j} (O, E(2)) or i in {j, 1 - j} (E(q+q^-1)); all distinct for D.
inline bool predicted_equal(SequenceType t, long i, long j, long dbar) {
  switch (t) {
    case SequenceType::D: return mod(i - j, dbar) == 0;
    case SequenceType::O2:
    case SequenceType::Om2:
    case SequenceType::E2: return mod(i - j, dbar) == 0 || mod(i + j, dbar) == 0;
    case SequenceType::Eq: return mod(i - j, dbar) == 0 || mod(i + j - 1, dbar) == 0;
    default: return false;
  }
}

inline bool profile_matches_prediction(const QRacahSequence& s, SequenceType t) {
  for (long i = 0; i < s.dbar(); ++i)
    for (long j = 0; j < s.dbar(); ++j)
      if ((s.theta(i) == s.theta(j)) != predicted_equal(t, i, j, s.dbar())) return false;
  return true;
}

// Deterministic parameter samples: q^j times each of 1, -1, 1+q, (1+q)^-1,
// 2, 1/2, 3, 1/3, without repeats.
inline std::vector<Cyclotomic> parameter_pool(const FieldContext& ctx) {
  const Cyclotomic one = Cyclotomic::one(ctx);
  const Cyclotomic opq = one + Cyclotomic::q_power(ctx, 1);
  const std::vector<Cyclotomic> scales{one,
                                       -one,
                                       opq,
                                       opq.inverse(),
                                       Cyclotomic::from_integer(ctx, 2),
                                       Cyclotomic::from_rational(ctx, Rational(1, 2)),
                                       Cyclotomic::from_integer(ctx, 3),
                                       Cyclotomic::from_rational(ctx, Rational(1, 3))};
  std::vector<Cyclotomic> out;
  for (const auto& s : scales)
    for (int j = 0; j < ctx.order(); ++j) {
      Cyclotomic v = s * Cyclotomic::q_power(ctx, j);
      bool dup = false;
      for (const auto& w : out)
        if (w == v) {
          dup = true;
          break;
        }
      if (!dup) out.push_back(std::move(v));
    }
  return out;
}

}  // namespace uaw
