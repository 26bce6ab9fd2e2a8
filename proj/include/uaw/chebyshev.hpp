#pragma once

#include <gmpxx.h>

#include <vector>

#include "uaw/cyclotomic.hpp"

namespace uaw {

// Integer polynomial, lowest degree first, no trailing zeros.
struct IntPolynomial {
  std::vector<Integer> coeffs;

  int degree() const { return static_cast<int>(coeffs.size()) - 1; }
  bool is_zero() const { return coeffs.empty(); }
  friend bool operator==(const IntPolynomial&, const IntPolynomial&) = default;
};

// Binomial coefficient with the conventions C(-1,-1) = 1 and C(n,-1) = 0.
inline Integer binomial_ext(long n, long k) {
  if (k == -1) return n == -1 ? 1 : 0;
  if (k < 0 || n < 0 || k > n) return 0;
  Integer r;
  mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
  return r;
}

// T_n(x) = sum_{i=0}^{n/2} (-1)^i (C(n-i,i) + C(n-i-1,i-1)) x^(n-2i); T_0 = 2.
inline IntPolynomial cheb_poly(int n) {
  if (n < 0) throw Error("cheb_poly: negative degree");
  IntPolynomial p;
  p.coeffs.assign(static_cast<std::size_t>(n) + 1, 0);
  for (long i = 0; 2 * i <= n; ++i) {
    Integer c = binomial_ext(n - i, i) + binomial_ext(n - i - 1, i - 1);
    if (i % 2 == 1) c = -c;
    p.coeffs[static_cast<std::size_t>(n - 2 * i)] = c;
  }
  detail::trim(p.coeffs);
  return p;
}

inline Cyclotomic eval(const IntPolynomial& p, const Cyclotomic& x) {
  const FieldContext& ctx = x.context();
  Cyclotomic acc = Cyclotomic::zero(ctx);
  for (std::size_t k = p.coeffs.size(); k-- > 0;) {
    acc *= x;
    acc += Cyclotomic::from_rational(ctx, Rational(p.coeffs[k]));
  }
  return acc;
}

inline Cyclotomic cheb_eval(int n, const Cyclotomic& x) { return eval(cheb_poly(n), x); }

// theta_i = a q^(-2i) + a^(-1) q^(2i)
inline Cyclotomic qracah_theta(const Cyclotomic& a, long i) {
  const FieldContext& ctx = a.context();
  return a * Cyclotomic::q_power(ctx, -2 * i) + a.inverse() * Cyclotomic::q_power(ctx, 2 * i);
}

// Coefficients (lowest first) of prod_{i mod dbar} (x - theta_i) + a^dbar +
// a^-dbar minus those of T_dbar. Identically zero when the identity holds.
inline std::vector<Cyclotomic> factorization_residual(const Cyclotomic& a) {
  const FieldContext& ctx = a.context();
  if (a.is_zero()) throw ZeroParameter("factorization_residual: a must be nonzero");
  const int dbar = ctx.dbar();
  std::vector<Cyclotomic> prod{Cyclotomic::one(ctx)};
  for (int i = 0; i < dbar; ++i) {
    const Cyclotomic th = qracah_theta(a, i);
    std::vector<Cyclotomic> next(prod.size() + 1, Cyclotomic::zero(ctx));
    for (std::size_t k = 0; k < prod.size(); ++k) {
      next[k + 1] += prod[k];
      next[k] -= th * prod[k];
    }
    prod = std::move(next);
  }
  prod[0] += pow(a, dbar) + pow(a, -dbar);
  const IntPolynomial t = cheb_poly(dbar);
  for (std::size_t k = 0; k < prod.size(); ++k)
    if (k < t.coeffs.size()) prod[k] -= Cyclotomic::from_rational(ctx, Rational(t.coeffs[k]));
  return prod;
}

inline bool residual_is_zero(const std::vector<Cyclotomic>& r) {
  for (const auto& c : r)
    if (!c.is_zero()) return false;
  return true;
}

}  // namespace uaw
