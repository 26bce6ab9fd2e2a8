#pragma once

// Noncommutative polynomials in A, B, C with central symbols Omega, alpha,
// beta, gamma, and a rewriting system whose irreducible words are the PBW
// words A^i B^j C^k (ijk = 0).

#include <algorithm>
#include <array>
#include <cstdint>
#include <map>
#include <memory>
#include <mutex>
#include <set>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

#include "uaw/chebyshev.hpp"
#include "uaw/cyclotomic.hpp"
#include "uaw/qexpr.hpp"

namespace uaw {

enum class Central : std::size_t { Omega = 0, Alpha = 1, Beta = 2, Gamma = 3 };

// Text letters for the central symbols, indexed by Central.
inline constexpr std::array<char, 4> kCentralLetters{'W', 'a', 'b', 'g'};

using CentralExps = std::array<std::uint16_t, 4>;

struct Monomial {
  std::string word;  // letters A, B, C
  CentralExps central{};

  bool is_pure() const noexcept { return central == CentralExps{}; }
  auto operator<=>(const Monomial&) const = default;
};

inline CentralExps add_exps(const CentralExps& a, const CentralExps& b) {
  CentralExps r;
  for (std::size_t k = 0; k < 4; ++k) r[k] = static_cast<std::uint16_t>(a[k] + b[k]);
  return r;
}

inline int inversion_count(std::string_view w) {
  int inv = 0;
  for (std::size_t i = 0; i < w.size(); ++i)
    for (std::size_t j = i + 1; j < w.size(); ++j)
      if (w[i] > w[j]) ++inv;
  return inv;
}

// Rewriting order: word length, inversion count (A < B < C), lexicographic,
// then central exponents.
inline bool term_order_less(const Monomial& x, const Monomial& y) {
  if (x.word.size() != y.word.size()) return x.word.size() < y.word.size();
  const int ix = inversion_count(x.word), iy = inversion_count(y.word);
  if (ix != iy) return ix < iy;
  if (x.word != y.word) return x.word < y.word;
  return x.central < y.central;
}

class NCPoly {
 public:
  using TermMap = std::map<Monomial, Cyclotomic>;

  NCPoly() = default;
  explicit NCPoly(const FieldContext& ctx) : ctx_(&ctx) {}

  static NCPoly scalar(const Cyclotomic& c) {
    NCPoly p(c.context());
    p.add_term(Monomial{}, c);
    return p;
  }
  static NCPoly one(const FieldContext& ctx) { return scalar(Cyclotomic::one(ctx)); }
  static NCPoly word(const FieldContext& ctx, std::string w) {
    for (char ch : w)
      if (ch != 'A' && ch != 'B' && ch != 'C') throw Error("word letters must be A, B or C");
    NCPoly p(ctx);
    p.add_term(Monomial{std::move(w), {}}, Cyclotomic::one(ctx));
    return p;
  }
  static NCPoly central(const FieldContext& ctx, Central which, std::uint16_t power = 1) {
    NCPoly p(ctx);
    Monomial m;
    m.central[static_cast<std::size_t>(which)] = power;
    p.add_term(m, Cyclotomic::one(ctx));
    return p;
  }

  const FieldContext& context() const {
    if (!ctx_) throw ContextMismatch("polynomial has no field context");
    return *ctx_;
  }
  const FieldContext* context_ptr() const noexcept { return ctx_; }
  const TermMap& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }
  std::size_t size() const noexcept { return terms_.size(); }

  std::size_t max_word_length() const {
    std::size_t m = 0;
    for (const auto& [mono, c] : terms_) m = std::max(m, mono.word.size());
    return m;
  }

  Cyclotomic coefficient(const Monomial& m) const {
    auto it = terms_.find(m);
    return it == terms_.end() ? Cyclotomic::zero(context()) : it->second;
  }

  void add_term(const Monomial& m, const Cyclotomic& c) {
    if (c.is_zero()) return;
    adopt(c.context_ptr());
    auto [it, inserted] = terms_.try_emplace(m, c);
    if (!inserted) {
      it->second += c;
      if (it->second.is_zero()) terms_.erase(it);
    }
  }

  // this += c * p * (central monomial shift)
  void add_scaled(const NCPoly& p, const Cyclotomic& c, const CentralExps& shift = {}) {
    if (p.is_zero() || c.is_zero()) return;
    adopt(p.ctx_);
    for (const auto& [m, v] : p.terms_) add_term(Monomial{m.word, add_exps(m.central, shift)}, v * c);
  }

  // Leading monomial under term_order_less.
  const std::pair<const Monomial, Cyclotomic>& leading() const {
    if (terms_.empty()) throw Error("leading term of zero polynomial");
    auto best = terms_.begin();
    for (auto it = std::next(terms_.begin()); it != terms_.end(); ++it)
      if (term_order_less(best->first, it->first)) best = it;
    return *best;
  }

  NCPoly operator-() const {
    NCPoly r = *this;
    for (auto& [m, c] : r.terms_) c = -c;
    return r;
  }
  NCPoly& operator+=(const NCPoly& o) {
    adopt(o.ctx_);
    for (const auto& [m, c] : o.terms_) add_term(m, c);
    return *this;
  }
  NCPoly& operator-=(const NCPoly& o) {
    adopt(o.ctx_);
    for (const auto& [m, c] : o.terms_) add_term(m, -c);
    return *this;
  }
  friend NCPoly operator+(NCPoly a, const NCPoly& b) { return a += b; }
  friend NCPoly operator-(NCPoly a, const NCPoly& b) { return a -= b; }
  friend NCPoly operator*(const Cyclotomic& s, const NCPoly& p) {
    NCPoly r(s.context());
    r.add_scaled(p, s);
    return r;
  }
  friend NCPoly operator*(const NCPoly& p, const Cyclotomic& s) { return s * p; }

  // Concatenation product; central symbols commute and collect on the right.
  friend NCPoly operator*(const NCPoly& a, const NCPoly& b) {
    NCPoly r;
    r.adopt(a.ctx_);
    r.adopt(b.ctx_);
    for (const auto& [ma, ca] : a.terms_)
      for (const auto& [mb, cb] : b.terms_)
        r.add_term(Monomial{ma.word + mb.word, add_exps(ma.central, mb.central)}, ca * cb);
    return r;
  }

  friend bool operator==(const NCPoly& a, const NCPoly& b) { return a.terms_ == b.terms_; }

  std::string to_string() const;

 private:
  void adopt(const FieldContext* c) {
    if (!c) return;
    if (!ctx_) ctx_ = c;
    else if (ctx_ != c) throw ContextMismatch("polynomials belong to different fields");
  }

  const FieldContext* ctx_ = nullptr;
  TermMap terms_;
};

inline NCPoly multiply(const NCPoly& p, const NCPoly& r) { return p * r; }
inline NCPoly commutator(const NCPoly& p, const NCPoly& r) { return p * r - r * p; }

inline std::string monomial_text(const Monomial& m) {
  std::string out;
  auto emit = [&](char letter, std::size_t count) {
    if (count == 0) return;
    if (!out.empty()) out += '*';
    out += letter;
    if (count > 1) out += "^" + std::to_string(count);
  };
  for (std::size_t i = 0; i < m.word.size();) {
    std::size_t j = i;
    while (j < m.word.size() && m.word[j] == m.word[i]) ++j;
    emit(m.word[i], j - i);
    i = j;
  }
  for (std::size_t k = 0; k < 4; ++k) emit(kCentralLetters[k], m.central[k]);
  return out;
}

inline std::string NCPoly::to_string() const {
  if (terms_.empty()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [m, c] : terms_) {
    const std::string mono = monomial_text(m);
    std::string cs = c.to_string();
    std::string text;
    bool neg = false;
    const bool compound = cs.find(' ') != std::string::npos;
    if (!compound && cs[0] == '-') {
      neg = true;
      cs.erase(0, 1);
    }
    if (mono.empty()) text = compound ? "(" + cs + ")" : cs;
    else if (cs == "1") text = mono;
    else text = (compound ? "(" + cs + ")" : cs) + "*" + mono;
    if (first) out += (neg ? "-" : "") + text;
    else out += (neg ? " - " : " + ") + text;
    first = false;
  }
  return out;
}

namespace detail {

struct NCPolyTraits {
  using Value = NCPoly;
  const FieldContext* ctx;

  Value integer(const Integer& n) const { return NCPoly::scalar(Cyclotomic::from_rational(*ctx, Rational(n))); }
  Value q() const { return NCPoly::scalar(Cyclotomic::q_power(*ctx, 1)); }
  Value letter(char c, std::size_t at) const {
    if (c == 'A' || c == 'B' || c == 'C') return NCPoly::word(*ctx, std::string(1, c));
    for (std::size_t k = 0; k < 4; ++k)
      if (kCentralLetters[k] == c) return NCPoly::central(*ctx, static_cast<Central>(k));
    throw ParseError("unknown symbol '" + std::string(1, c) + "'", at);
  }
  Value add(const Value& a, const Value& b) const { return a + b; }
  Value sub(const Value& a, const Value& b) const { return a - b; }
  Value mul(const Value& a, const Value& b) const { return a * b; }
  Value neg(const Value& a) const { return -a; }
  static const Cyclotomic* as_scalar(const Value& v) {
    if (v.size() != 1) return nullptr;
    const auto& [m, c] = *v.terms().begin();
    return (m.word.empty() && m.is_pure()) ? &c : nullptr;
  }
  Value div(const Value& a, const Value& b, std::size_t at) const {
    const Cyclotomic* s = as_scalar(b);
    if (!s) throw ParseError("division by a non-scalar", at);
    return a * s->inverse();
  }
  Value pow(const Value& a, long e, std::size_t at) const {
    if (const Cyclotomic* s = as_scalar(a)) return NCPoly::scalar(uaw::pow(*s, e));
    if (a.is_zero()) {
      if (e < 0) throw ParseError("negative power of zero", at);
      return e == 0 ? NCPoly::one(*ctx) : a;
    }
    if (e < 0) throw ParseError("negative power of a non-scalar", at);
    NCPoly r = NCPoly::one(*ctx);
    for (long k = 0; k < e; ++k) r = r * a;
    return r;
  }
};

}  // namespace detail

inline NCPoly parse_ncpoly(const FieldContext& ctx, std::string_view text) {
  detail::NCPolyTraits t{&ctx};
  NCPoly p = detail::ExprParser<detail::NCPolyTraits>(text, t).parse();
  if (!p.context_ptr()) p = NCPoly(ctx);
  return p;
}

// ---------------------------------------------------------------------------
// Distinguished elements

enum class CentralExpr { Alpha, Beta, Gamma };

// (q + q^-1) * (X + (q Y Z - q^-1 Z Y) / (q^2 - q^-2)) for the cyclic triples
// (A, B, C), (B, C, A), (C, A, B).
inline NCPoly defining_element(const FieldContext& ctx, CentralExpr which) {
  QScalars s(ctx);
  std::string x, y, z;
  switch (which) {
    case CentralExpr::Alpha: x = "A", y = "B", z = "C"; break;
    case CentralExpr::Beta: x = "B", y = "C", z = "A"; break;
    case CentralExpr::Gamma: x = "C", y = "A", z = "B"; break;
  }
  const Cyclotomic f = s.q_plus_qinv / s.q2_minus_qm2;
  NCPoly p = s.q_plus_qinv * NCPoly::word(ctx, x);
  p += (f * s.q) * NCPoly::word(ctx, y + z);
  p -= (f * s.qinv) * NCPoly::word(ctx, z + y);
  return p;
}

inline Central central_symbol(CentralExpr which) {
  switch (which) {
    case CentralExpr::Alpha: return Central::Alpha;
    case CentralExpr::Beta: return Central::Beta;
    case CentralExpr::Gamma: return Central::Gamma;
  }
  return Central::Gamma;
}

// q ABC + q^2 A^2 + q^-2 B^2 + q^2 C^2 - q A alpha - q^-1 B beta - q C gamma
inline NCPoly casimir(const FieldContext& ctx) {
  QScalars s(ctx);
  NCPoly p = s.q * NCPoly::word(ctx, "ABC");
  p += s.q2 * NCPoly::word(ctx, "AA");
  p += s.qm2 * NCPoly::word(ctx, "BB");
  p += s.q2 * NCPoly::word(ctx, "CC");
  p -= s.q * (NCPoly::word(ctx, "A") * NCPoly::central(ctx, Central::Alpha));
  p -= s.qinv * (NCPoly::word(ctx, "B") * NCPoly::central(ctx, Central::Beta));
  p -= s.q * (NCPoly::word(ctx, "C") * NCPoly::central(ctx, Central::Gamma));
  return p;
}

// Right-hand sides expressing alpha and beta through A, B and gamma.
inline NCPoly alpha_from_ab(const FieldContext& ctx) {
  QScalars s(ctx);
  const Cyclotomic inv_den = (s.q_minus_qinv * s.q2_minus_qm2).inverse();
  NCPoly p = NCPoly::word(ctx, "BBA");
  p -= s.q2_plus_qm2 * NCPoly::word(ctx, "BAB");
  p += NCPoly::word(ctx, "ABB");
  p += (s.q2_minus_qm2 * s.q2_minus_qm2) * NCPoly::word(ctx, "A");
  p += (s.q_minus_qinv * s.q_minus_qinv) * (NCPoly::word(ctx, "B") * NCPoly::central(ctx, Central::Gamma));
  return inv_den * p;
}

inline NCPoly beta_from_ab(const FieldContext& ctx) {
  QScalars s(ctx);
  const Cyclotomic inv_den = (s.q_minus_qinv * s.q2_minus_qm2).inverse();
  NCPoly p = NCPoly::word(ctx, "AAB");
  p -= s.q2_plus_qm2 * NCPoly::word(ctx, "ABA");
  p += NCPoly::word(ctx, "BAA");
  p += (s.q2_minus_qm2 * s.q2_minus_qm2) * NCPoly::word(ctx, "B");
  p += (s.q_minus_qinv * s.q_minus_qinv) * (NCPoly::word(ctx, "A") * NCPoly::central(ctx, Central::Gamma));
  return inv_den * p;
}

// C = gamma / (q + q^-1) - (q AB - q^-1 BA) / (q^2 - q^-2)
inline NCPoly c_from_ab(const FieldContext& ctx) {
  QScalars s(ctx);
  NCPoly p = s.q_plus_qinv.inverse() * NCPoly::central(ctx, Central::Gamma);
  const Cyclotomic f = s.q2_minus_qm2.inverse();
  p -= (f * s.q) * NCPoly::word(ctx, "AB");
  p += (f * s.qinv) * NCPoly::word(ctx, "BA");
  return p;
}

// T_n evaluated at a generator.
inline NCPoly cheb_image(const FieldContext& ctx, char g, int n) {
  const IntPolynomial t = cheb_poly(n);
  NCPoly p(ctx);
  for (std::size_t k = 0; k < t.coeffs.size(); ++k) {
    if (sgn(t.coeffs[k]) == 0) continue;
    p.add_term(Monomial{std::string(k, g), {}}, Cyclotomic::from_rational(ctx, Rational(t.coeffs[k])));
  }
  return p;
}

// ---------------------------------------------------------------------------
// Rewriting

struct RewriteRule {
  std::string lhs;
  NCPoly rhs;
};

// Solves relation == 0 for the given word: word -> -(relation - c*word)/c.
inline RewriteRule rule_from_relation(const NCPoly& relation, const std::string& word) {
  const Monomial target{word, {}};
  const Cyclotomic c = relation.coefficient(target);
  if (c.is_zero()) throw CompletionFailure("relation does not contain " + word);
  NCPoly rest = relation;
  rest.add_term(target, -c);
  return RewriteRule{word, (-c.inverse()) * rest};
}

// p with every term on the pure word `word` replaced by `replacement` (one
// level, not recursive).
inline NCPoly substitute_word(const NCPoly& p, const std::string& word, const NCPoly& replacement) {
  NCPoly out(p.context());
  for (const auto& [m, c] : p.terms()) {
    if (m.word == word) out.add_scaled(replacement, c, m.central);
    else out.add_term(m, c);
  }
  return out;
}

// The four defining relations, each as "expression - symbol".
inline std::vector<std::pair<NCPoly, std::string>> base_relations(const FieldContext& ctx) {
  std::vector<std::pair<NCPoly, std::string>> rel;
  rel.emplace_back(defining_element(ctx, CentralExpr::Gamma) - NCPoly::central(ctx, Central::Gamma), "BA");
  rel.emplace_back(defining_element(ctx, CentralExpr::Beta) - NCPoly::central(ctx, Central::Beta), "CA");
  rel.emplace_back(defining_element(ctx, CentralExpr::Alpha) - NCPoly::central(ctx, Central::Alpha), "CB");
  rel.emplace_back(casimir(ctx) - NCPoly::central(ctx, Central::Omega), "ABC");
  return rel;
}

struct CompletionStats {
  int base_rules = 0;
  int added_rules = 0;
  int ambiguities_checked = 0;
  std::size_t completed_length = 0;  // all ambiguities up to this word length resolved
  std::vector<std::string> added_lhs;
};

// Rewriting system for one field. Completion is truncated by word length and
// extended on demand: before reducing an input whose longest word has length
// L, every ambiguity of length <= L is resolved. Rules never lengthen words,
// so this makes normal forms of such inputs unique.
class RewriteSystem {
 public:
  static constexpr std::size_t kDefaultDegreeCap = 24;

  // Shared per field.
  static const RewriteSystem& for_field(const FieldContext& ctx) {
    static std::mutex mu;
    static std::map<const FieldContext*, std::unique_ptr<RewriteSystem>> registry;
    std::lock_guard lock(mu);
    auto& slot = registry[&ctx];
    if (!slot) slot.reset(new RewriteSystem(ctx));
    return *slot;
  }

  const FieldContext& context() const noexcept { return *ctx_; }

  std::vector<RewriteRule> rules() const {
    std::lock_guard lock(mu_);
    return rules_;
  }
  CompletionStats completion() const {
    std::lock_guard lock(mu_);
    return stats_;
  }
  // Completes through the given word length and returns the statistics.
  CompletionStats complete_to(std::size_t length) const {
    std::lock_guard lock(mu_);
    ensure_complete(length);
    return stats_;
  }

  NCPoly normal_form(const NCPoly& p, std::size_t cap = kDefaultDegreeCap) const {
    NCPoly out(*ctx_);
    if (p.is_zero()) return out;
    if (p.context_ptr() != ctx_) throw ContextMismatch("polynomial and rewriting system differ in field");
    const std::size_t len = p.max_word_length();
    if (len > cap)
      throw DegreeOverflow("word length " + std::to_string(len) + " exceeds cap " + std::to_string(cap));
    std::lock_guard lock(mu_);
    ensure_complete(len);
    for (const auto& [m, c] : p.terms()) out.add_scaled(nf_word(m.word), c, m.central);
    return out;
  }

  bool is_normal_word(std::string_view w) const {
    std::lock_guard lock(mu_);
    ensure_complete(w.size());
    return find_redex(w).first == npos;
  }

 private:
  static constexpr std::size_t npos = static_cast<std::size_t>(-1);

  explicit RewriteSystem(const FieldContext& ctx) : ctx_(&ctx) {
    for (auto& [rel, word] : base_relations(ctx)) {
      RewriteRule r = rule_from_relation(rel, word);
      if (!substitute_word(rel, r.lhs, r.rhs).is_zero())
        throw CompletionFailure("rule for " + word + " failed re-substitution");
      rules_.push_back(std::move(r));
    }
    stats_.base_rules = static_cast<int>(rules_.size());
  }

  // (position, rule index) of the leftmost redex.
  std::pair<std::size_t, std::size_t> find_redex(std::string_view w) const {
    for (std::size_t pos = 0; pos < w.size(); ++pos)
      for (std::size_t r = 0; r < rules_.size(); ++r) {
        const std::string& l = rules_[r].lhs;
        if (pos + l.size() <= w.size() && w.compare(pos, l.size(), l) == 0) return {pos, r};
      }
    return {npos, npos};
  }

  NCPoly apply_at(const std::string& w, std::size_t pos, std::size_t r) const {
    const RewriteRule& rule = rules_[r];
    const std::string prefix = w.substr(0, pos), suffix = w.substr(pos + rule.lhs.size());
    NCPoly out(*ctx_);
    for (const auto& [m, c] : rule.rhs.terms()) out.add_term(Monomial{prefix + m.word + suffix, m.central}, c);
    return out;
  }

  // Caller holds mu_.
  const NCPoly& nf_word(const std::string& w) const {
    if (auto it = memo_.find(w); it != memo_.end()) return it->second;
    NCPoly out(*ctx_);
    auto [pos, r] = find_redex(w);
    if (pos == npos) {
      out.add_term(Monomial{w, {}}, Cyclotomic::one(*ctx_));
    } else {
      const NCPoly step = apply_at(w, pos, r);
      for (const auto& [m, c] : step.terms()) out.add_scaled(nf_word(m.word), c, m.central);
    }
    return memo_.emplace(w, std::move(out)).first->second;
  }

  NCPoly nf_poly(const NCPoly& p) const {
    NCPoly out(*ctx_);
    for (const auto& [m, c] : p.terms()) out.add_scaled(nf_word(m.word), c, m.central);
    return out;
  }

  struct Ambiguity {
    std::string word;
    std::size_t rule1, pos1, rule2, pos2;
  };

  // All overlap and inclusion ambiguities between the current rules whose
  // word length is exactly `length`.
  std::vector<Ambiguity> ambiguities_of_length(std::size_t length) const {
    std::vector<Ambiguity> out;
    for (std::size_t i = 0; i < rules_.size(); ++i)
      for (std::size_t j = 0; j < rules_.size(); ++j) {
        const std::string& l1 = rules_[i].lhs;
        const std::string& l2 = rules_[j].lhs;
        for (std::size_t k = 1; k < std::min(l1.size(), l2.size()); ++k) {
          if (l1.size() + l2.size() - k != length) continue;
          if (l1.compare(l1.size() - k, k, l2, 0, k) != 0) continue;
          out.push_back({l1 + l2.substr(k), i, 0, j, l1.size() - k});
        }
        if (i != j && l2.size() < l1.size() && l1.size() == length)
          for (std::size_t pos = 0; pos + l2.size() <= l1.size(); ++pos)
            if (l1.compare(pos, l2.size(), l2) == 0) out.push_back({l1, i, 0, j, pos});
      }
    return out;
  }

  // Caller holds mu_.
  void ensure_complete(std::size_t length) const {
    while (stats_.completed_length < length) {
      const std::size_t len = stats_.completed_length + 1;
      bool changed = true;
      while (changed) {
        changed = false;
        for (const Ambiguity& a : ambiguities_of_length(len)) {
          if (resolved_.count(key(a))) continue;
          if (resolve(a)) {
            changed = true;
            break;
          }
          resolved_.insert(key(a));
        }
      }
      stats_.completed_length = len;
    }
  }

  static std::string key(const Ambiguity& a) {
    return a.word + "|" + std::to_string(a.rule1) + "," + std::to_string(a.pos1) + "," + std::to_string(a.rule2) +
           "," + std::to_string(a.pos2);
  }

  bool resolve(const Ambiguity& a) const {
    ++stats_.ambiguities_checked;
    NCPoly diff = nf_poly(apply_at(a.word, a.pos1, a.rule1)) - nf_poly(apply_at(a.word, a.pos2, a.rule2));
    if (diff.is_zero()) return false;
    const auto& [lead, c] = diff.leading();
    if (!lead.is_pure()) throw CompletionFailure("ambiguity " + a.word + " leads with a central monomial");
    const std::string lhs = lead.word;
    rules_.push_back(rule_from_relation(diff, lhs));
    ++stats_.added_rules;
    stats_.added_lhs.push_back(lhs);
    memo_.clear();
    return true;
  }

  const FieldContext* ctx_;
  mutable std::mutex mu_;
  mutable std::vector<RewriteRule> rules_;
  mutable CompletionStats stats_;
  mutable std::set<std::string> resolved_;
  mutable std::unordered_map<std::string, NCPoly> memo_;
};

inline NCPoly normal_form(const NCPoly& p, std::size_t cap = RewriteSystem::kDefaultDegreeCap) {
  return RewriteSystem::for_field(p.context()).normal_form(p, cap);
}

// ---------------------------------------------------------------------------
// Basis counts

// PBW words A^i B^j C^k with i, j, k < dbar and ijk = 0.
inline long bounded_pbw_count(int dbar) {
  long n = 0;
  for (int i = 0; i < dbar; ++i)
    for (int j = 0; j < dbar; ++j)
      for (int k = 0; k < dbar; ++k)
        if (i == 0 || j == 0 || k == 0) ++n;
  return n;
}

// Normal words A^i B^j C^k (ijk = 0) with i + j + k <= N.
inline long abc_normal_word_count(int N) {
  long n = 0;
  for (int i = 0; i <= N; ++i)
    for (int j = 0; i + j <= N; ++j)
      for (int k = 0; i + j + k <= N; ++k)
        if (i == 0 || j == 0 || k == 0) ++n;
  return n;
}

// Full PBW words with central symbols, weighted by their degree in A, B, C:
// A, B, C have degree 1, alpha, beta, gamma degree 2 and Omega degree 3.
inline long weighted_pbw_count(int N) {
  // central monomials of weight w: Omega^l (alpha beta gamma)^{r,s,t}
  std::vector<long> central(static_cast<std::size_t>(N) + 1, 0);
  for (int l = 0; 3 * l <= N; ++l)
    for (int r = 0; 3 * l + 2 * r <= N; ++r)
      for (int s = 0; 3 * l + 2 * (r + s) <= N; ++s)
        for (int t = 0; 3 * l + 2 * (r + s + t) <= N; ++t) ++central[static_cast<std::size_t>(3 * l + 2 * (r + s + t))];
  long n = 0;
  for (int v = 0; v <= N; ++v) n += central[static_cast<std::size_t>(v)] * abc_normal_word_count(N - v);
  return n;
}

}  // namespace uaw
