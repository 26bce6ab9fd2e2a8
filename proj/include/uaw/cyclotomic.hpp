#pragma once

// Exact arithmetic in Q(q), q a primitive d-th root of unity.
//
// An element is stored as an integer vector over the power basis
// 1, q, ..., q^(phi-1) together with one positive common denominator, kept
// fully reduced (gcd of all numerators and the denominator is 1). With that
// normalisation two values are equal iff their stored data are identical.

#include <gmpxx.h>

#include <cstddef>
#include <functional>
#include <map>
#include <memory>
#include <mutex>
#include <ostream>
#include <span>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "uaw/errors.hpp"

namespace uaw {

using Integer = mpz_class;
using Rational = mpq_class;

namespace detail {

using ZPoly = std::vector<Integer>;  // lowest degree first
using QPoly = std::vector<Rational>;

inline void trim(ZPoly& p) {
  while (!p.empty() && sgn(p.back()) == 0) p.pop_back();
}

inline void trim(QPoly& p) {
  while (!p.empty() && sgn(p.back()) == 0) p.pop_back();
}

// Exact quotient of num by a monic divisor; throws if the division leaves a
// remainder.
inline ZPoly divide_exact_monic(ZPoly num, const ZPoly& divisor) {
  trim(num);
  const std::size_t dd = divisor.size() - 1;
  if (num.size() < divisor.size()) throw Error("divide_exact_monic: degree too small");
  ZPoly quo(num.size() - dd, 0);
  for (std::size_t k = num.size(); k-- > dd;) {
    Integer c = num[k];
    if (sgn(c) == 0) continue;
    quo[k - dd] = c;
    for (std::size_t j = 0; j <= dd; ++j) num[k - dd + j] -= c * divisor[j];
  }
  trim(num);
  if (!num.empty()) throw Error("divide_exact_monic: nonzero remainder");
  trim(quo);
  return quo;
}

inline std::pair<QPoly, QPoly> divmod(QPoly num, const QPoly& den) {
  QPoly d = den;
  trim(d);
  trim(num);
  if (d.empty()) throw DivisionByZero("polynomial division by zero");
  if (num.size() < d.size()) return {QPoly{}, num};
  QPoly quo(num.size() - d.size() + 1);
  const Rational lead = d.back();
  for (std::size_t k = num.size(); k-- >= d.size();) {
    if (sgn(num[k]) == 0) continue;
    Rational c = num[k] / lead;
    quo[k - (d.size() - 1)] = c;
    for (std::size_t j = 0; j < d.size(); ++j) num[k - (d.size() - 1) + j] -= c * d[j];
  }
  trim(num);
  trim(quo);
  return {quo, num};
}

inline QPoly sub_mul(const QPoly& a, const QPoly& b, const QPoly& c) {
  // a - b*c
  QPoly out = a;
  if (!b.empty() && !c.empty()) {
    if (out.size() < b.size() + c.size() - 1) out.resize(b.size() + c.size() - 1);
    for (std::size_t i = 0; i < b.size(); ++i)
      for (std::size_t j = 0; j < c.size(); ++j) out[i + j] -= b[i] * c[j];
  }
  trim(out);
  return out;
}

}  // namespace detail

// Coefficients of the d-th cyclotomic polynomial, obtained by dividing
// x^d - 1 by the cyclotomic polynomials of all proper divisors of d.
inline detail::ZPoly cyclotomic_polynomial(int d) {
  if (d < 1) throw DisallowedOrder("cyclotomic order must be positive");
  static std::mutex mu;
  static std::map<int, detail::ZPoly> cache;
  {
    std::lock_guard lock(mu);
    if (auto it = cache.find(d); it != cache.end()) return it->second;
  }
  detail::ZPoly p(static_cast<std::size_t>(d) + 1, 0);
  p[0] = -1;
  p[static_cast<std::size_t>(d)] = 1;
  for (int e = 1; e < d; ++e)
    if (d % e == 0) p = detail::divide_exact_monic(std::move(p), cyclotomic_polynomial(e));
  std::lock_guard lock(mu);
  cache.emplace(d, p);
  return p;
}

class FieldContext {
 public:
  FieldContext(const FieldContext&) = delete;
  FieldContext& operator=(const FieldContext&) = delete;

  int order() const noexcept { return d_; }
  // Multiplicative order of q^2.
  int dbar() const noexcept { return d_ % 2 == 1 ? d_ : d_ / 2; }
  int degree() const noexcept { return phi_; }
  const detail::ZPoly& modulus() const noexcept { return modulus_; }

  // x^k mod the modulus, as an integer vector of length phi.
  const detail::ZPoly& reduced_power(std::size_t k) const { return powers_.at(k); }
  std::size_t power_table_size() const noexcept { return powers_.size(); }

 private:
  friend const FieldContext& make_field(int d);

  explicit FieldContext(int d) : d_(d), modulus_(cyclotomic_polynomial(d)) {
    phi_ = static_cast<int>(modulus_.size()) - 1;
    const std::size_t phi = static_cast<std::size_t>(phi_);
    const std::size_t table = std::max<std::size_t>(static_cast<std::size_t>(d), 2 * phi);
    powers_.reserve(table);
    detail::ZPoly cur(phi, 0);
    cur[0] = 1;
    for (std::size_t k = 0; k < table; ++k) {
      powers_.push_back(cur);
      // multiply by x and reduce with the monic modulus
      Integer top = cur[phi - 1];
      for (std::size_t j = phi - 1; j > 0; --j) cur[j] = cur[j - 1];
      cur[0] = 0;
      if (sgn(top) != 0)
        for (std::size_t j = 0; j < phi; ++j) cur[j] -= top * modulus_[j];
    }
  }

  int d_;
  int phi_ = 0;
  detail::ZPoly modulus_;
  std::vector<detail::ZPoly> powers_;
};

inline bool is_admissible_order(int d) noexcept { return d >= 3 && d != 4; }

// Interned per order; the returned reference stays valid for the program's
// lifetime.
inline const FieldContext& make_field(int d) {
  if (d < 1) throw DisallowedOrder("order of q must be positive, got " + std::to_string(d));
  if (d == 1 || d == 2 || d == 4)
    throw DisallowedOrder("q^4 must differ from 1; order " + std::to_string(d) + " is not allowed");
  static std::mutex mu;
  static std::map<int, std::unique_ptr<FieldContext>> registry;
  std::lock_guard lock(mu);
  auto& slot = registry[d];
  if (!slot) slot.reset(new FieldContext(d));
  return *slot;
}

class Cyclotomic {
 public:
  // Detached zero. Arithmetic with a detached value raises ContextMismatch
  // unless the other operand is detached as well.
  Cyclotomic() = default;

  static Cyclotomic zero(const FieldContext& ctx) {
    Cyclotomic z;
    z.ctx_ = &ctx;
    z.num_.assign(static_cast<std::size_t>(ctx.degree()), 0);
    z.den_ = 1;
    return z;
  }
  static Cyclotomic one(const FieldContext& ctx) { return from_integer(ctx, 1); }
  static Cyclotomic from_integer(const FieldContext& ctx, long v) {
    Cyclotomic z = zero(ctx);
    z.num_[0] = v;
    return z;
  }
  static Cyclotomic from_rational(const FieldContext& ctx, const Rational& r) {
    Cyclotomic z = zero(ctx);
    z.num_[0] = r.get_num();
    z.den_ = r.get_den();
    return z;
  }
  // q^k for any integer k.
  static Cyclotomic q_power(const FieldContext& ctx, long k) {
    const long d = ctx.order();
    long e = k % d;
    if (e < 0) e += d;
    Cyclotomic z = zero(ctx);
    z.num_ = ctx.reduced_power(static_cast<std::size_t>(e));
    return z;
  }
  // Reduces sum_k coeffs[k] q^k (any length) into canonical form.
  static Cyclotomic from_coefficients(const FieldContext& ctx, std::span<const Rational> coeffs) {
    Integer den = 1;
    for (const auto& c : coeffs) den = lcm(den, Integer(c.get_den()));
    detail::ZPoly ints;
    ints.reserve(coeffs.size());
    for (const auto& c : coeffs) ints.push_back(Integer(c.get_num()) * (den / c.get_den()));
    Cyclotomic z = zero(ctx);
    z.den_ = den;
    z.accumulate_reduced(ints);
    z.normalize();
    return z;
  }

  bool has_context() const noexcept { return ctx_ != nullptr; }
  const FieldContext& context() const {
    if (!ctx_) throw ContextMismatch("value has no field context");
    return *ctx_;
  }
  const FieldContext* context_ptr() const noexcept { return ctx_; }

  std::vector<Rational> coefficients() const {
    std::vector<Rational> out;
    out.reserve(num_.size());
    for (const auto& n : num_) {
      Rational r(n, den_);
      r.canonicalize();
      out.push_back(r);
    }
    return out;
  }
  const detail::ZPoly& numerators() const noexcept { return num_; }
  const Integer& denominator() const noexcept { return den_; }

  bool is_zero() const noexcept {
    for (const auto& n : num_)
      if (sgn(n) != 0) return false;
    return true;
  }
  bool is_one() const noexcept {
    if (num_.empty() || den_ != 1 || num_[0] != 1) return false;
    for (std::size_t k = 1; k < num_.size(); ++k)
      if (sgn(num_[k]) != 0) return false;
    return true;
  }
  bool is_rational() const noexcept {
    for (std::size_t k = 1; k < num_.size(); ++k)
      if (sgn(num_[k]) != 0) return false;
    return true;
  }

  Cyclotomic inverse() const;

  Cyclotomic operator-() const {
    Cyclotomic r = *this;
    for (auto& n : r.num_) n = -n;
    return r;
  }

  Cyclotomic& operator+=(const Cyclotomic& o) { return add_scaled(o, 1); }
  Cyclotomic& operator-=(const Cyclotomic& o) { return add_scaled(o, -1); }
  Cyclotomic& operator*=(const Cyclotomic& o) {
    *this = *this * o;
    return *this;
  }
  Cyclotomic& operator/=(const Cyclotomic& o) {
    *this = *this * o.inverse();
    return *this;
  }

  friend Cyclotomic operator+(Cyclotomic a, const Cyclotomic& b) { return a += b; }
  friend Cyclotomic operator-(Cyclotomic a, const Cyclotomic& b) { return a -= b; }
  friend Cyclotomic operator/(const Cyclotomic& a, const Cyclotomic& b) { return a * b.inverse(); }
  friend Cyclotomic operator*(const Cyclotomic& a, const Cyclotomic& b) {
    const FieldContext* ctx = common_context(a, b);
    if (!ctx) return Cyclotomic{};
    if (a.is_zero() || b.is_zero()) return zero(*ctx);
    const std::size_t phi = a.num_.size();
    detail::ZPoly prod(2 * phi - 1);
    for (std::size_t i = 0; i < phi; ++i) {
      if (sgn(a.num_[i]) == 0) continue;
      for (std::size_t j = 0; j < phi; ++j) {
        if (sgn(b.num_[j]) == 0) continue;
        mpz_addmul(prod[i + j].get_mpz_t(), a.num_[i].get_mpz_t(), b.num_[j].get_mpz_t());
      }
    }
    Cyclotomic r = zero(*ctx);
    r.den_ = a.den_ * b.den_;
    r.accumulate_reduced(prod);
    r.normalize();
    return r;
  }
  friend Cyclotomic operator*(const Cyclotomic& a, long s) {
    Cyclotomic r = a;
    for (auto& n : r.num_) n *= s;
    r.normalize();
    return r;
  }
  friend Cyclotomic operator*(long s, const Cyclotomic& a) { return a * s; }

  friend bool operator==(const Cyclotomic& a, const Cyclotomic& b) {
    if (a.ctx_ != b.ctx_) {
      // a detached zero equals any zero
      if (!a.ctx_) return b.is_zero();
      if (!b.ctx_) return a.is_zero();
      return false;
    }
    return a.den_ == b.den_ && a.num_ == b.num_;
  }
  friend bool operator!=(const Cyclotomic& a, const Cyclotomic& b) { return !(a == b); }

  // Deterministic total order on values of one context (coefficient-wise);
  // used only for canonical sorting, not an ordering of the field.
  friend bool canonical_less(const Cyclotomic& a, const Cyclotomic& b) {
    if (a.den_ != b.den_) return a.den_ < b.den_;
    return a.num_ < b.num_;
  }

  std::size_t hash() const noexcept {
    std::size_t h = std::hash<unsigned long>{}(mpz_get_ui(den_.get_mpz_t()));
    for (const auto& n : num_)
      h = h * 1000003u ^ (std::hash<unsigned long>{}(mpz_get_ui(n.get_mpz_t())) + (sgn(n) < 0 ? 7u : 0u));
    return h;
  }

  // Human-readable polynomial in q, e.g. "3 + 1/2*q - q^3". The same
  // grammar is accepted by parse_qexpr.
  std::string to_string() const;

  friend std::ostream& operator<<(std::ostream& os, const Cyclotomic& c) { return os << c.to_string(); }

 private:
  static const FieldContext* common_context(const Cyclotomic& a, const Cyclotomic& b) {
    if (a.ctx_ == b.ctx_) return a.ctx_;
    throw ContextMismatch("operands belong to different fields");
  }

  Cyclotomic& add_scaled(const Cyclotomic& o, int sign) {
    const FieldContext* ctx = common_context(*this, o);
    if (!ctx) return *this;
    if (den_ == o.den_) {
      for (std::size_t k = 0; k < num_.size(); ++k) {
        if (sign > 0) num_[k] += o.num_[k];
        else num_[k] -= o.num_[k];
      }
    } else {
      for (std::size_t k = 0; k < num_.size(); ++k) {
        num_[k] *= o.den_;
        if (sign > 0) mpz_addmul(num_[k].get_mpz_t(), o.num_[k].get_mpz_t(), den_.get_mpz_t());
        else mpz_submul(num_[k].get_mpz_t(), o.num_[k].get_mpz_t(), den_.get_mpz_t());
      }
      den_ *= o.den_;
    }
    normalize();
    return *this;
  }

  // num_ += sum_k ints[k] * (x^k mod modulus)
  void accumulate_reduced(const detail::ZPoly& ints) {
    const std::size_t phi = num_.size();
    for (std::size_t k = 0; k < ints.size(); ++k) {
      if (sgn(ints[k]) == 0) continue;
      if (k < phi) {
        num_[k] += ints[k];
        continue;
      }
      const detail::ZPoly* red;
      detail::ZPoly big;
      if (k < ctx_->power_table_size()) {
        red = &ctx_->reduced_power(k);
      } else {
        big = ctx_->reduced_power(k % static_cast<std::size_t>(ctx_->order()));
        red = &big;
      }
      for (std::size_t m = 0; m < phi; ++m)
        if (sgn((*red)[m]) != 0) mpz_addmul(num_[m].get_mpz_t(), ints[k].get_mpz_t(), (*red)[m].get_mpz_t());
    }
  }

  void normalize() {
    if (den_ < 0) {
      den_ = -den_;
      for (auto& n : num_) n = -n;
    }
    if (den_ == 1) return;
    Integer g = den_;
    bool all_zero = true;
    for (const auto& n : num_) {
      if (sgn(n) == 0) continue;
      all_zero = false;
      mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), n.get_mpz_t());
      if (g == 1) return;
    }
    if (all_zero) {
      den_ = 1;
      return;
    }
    for (auto& n : num_) mpz_divexact(n.get_mpz_t(), n.get_mpz_t(), g.get_mpz_t());
    mpz_divexact(den_.get_mpz_t(), den_.get_mpz_t(), g.get_mpz_t());
  }

  const FieldContext* ctx_ = nullptr;
  detail::ZPoly num_;
  Integer den_ = 1;
};

inline Cyclotomic Cyclotomic::inverse() const {
  const FieldContext& ctx = context();
  if (is_zero()) throw DivisionByZero("inverse of zero");
  // Extended Euclid in Q[x]: find s with s*self = 1 mod modulus.
  detail::QPoly r0(ctx.modulus().begin(), ctx.modulus().end());
  detail::QPoly r1;
  for (const auto& n : num_) r1.emplace_back(n);
  detail::trim(r1);
  detail::QPoly s0, s1{Rational(1)};
  while (!r1.empty()) {
    auto [quo, rem] = detail::divmod(r0, r1);
    detail::QPoly s2 = detail::sub_mul(s0, quo, s1);
    r0 = std::move(r1);
    r1 = std::move(rem);
    s0 = std::move(s1);
    s1 = std::move(s2);
  }
  // r0 is a nonzero constant because the modulus is irreducible.
  if (r0.size() != 1) throw Error("inverse: modulus not coprime to argument");
  Rational scale = Rational(den_) / r0[0];
  for (auto& c : s0) c *= scale;
  return from_coefficients(ctx, s0);
}

inline std::string Cyclotomic::to_string() const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  const auto coeffs = coefficients();
  for (std::size_t k = 0; k < coeffs.size(); ++k) {
    Rational c = coeffs[k];
    if (sgn(c) == 0) continue;
    const bool neg = sgn(c) < 0;
    if (neg) c = -c;
    std::string mag;
    if (k == 0) {
      mag = c.get_str();
    } else {
      const std::string mono = k == 1 ? "q" : "q^" + std::to_string(k);
      mag = (c == 1) ? mono : c.get_str() + "*" + mono;
    }
    if (first) os << (neg ? "-" : "") << mag;
    else os << (neg ? " - " : " + ") << mag;
    first = false;
  }
  return os.str();
}

inline Cyclotomic pow(Cyclotomic base, long e) {
  const FieldContext& ctx = base.context();
  if (e < 0) {
    base = base.inverse();
    e = -e;
  }
  Cyclotomic r = Cyclotomic::one(ctx);
  while (e > 0) {
    if (e & 1) r *= base;
    base *= base;
    e >>= 1;
  }
  return r;
}

// Convenience scalars that show up throughout the algebra.
struct QScalars {
  explicit QScalars(const FieldContext& c)
      : ctx(&c),
        q(Cyclotomic::q_power(c, 1)),
        qinv(Cyclotomic::q_power(c, -1)),
        q2(Cyclotomic::q_power(c, 2)),
        qm2(Cyclotomic::q_power(c, -2)),
        q_plus_qinv(q + qinv),
        q_minus_qinv(q - qinv),
        q2_plus_qm2(q2 + qm2),
        q2_minus_qm2(q2 - qm2) {}

  const FieldContext* ctx;
  Cyclotomic q, qinv, q2, qm2;
  Cyclotomic q_plus_qinv;    // q + q^-1
  Cyclotomic q_minus_qinv;   // q - q^-1
  Cyclotomic q2_plus_qm2;    // q^2 + q^-2
  Cyclotomic q2_minus_qm2;   // q^2 - q^-2
};

}  // namespace uaw

template <>
struct std::hash<uaw::Cyclotomic> {
  std::size_t operator()(const uaw::Cyclotomic& c) const noexcept { return c.hash(); }
};
