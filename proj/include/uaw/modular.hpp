#pragma once

// Reduction of Q(q) modulo a prime p = 1 (mod d), with q sent to a primitive
// d-th root of unity in Z/p. Ranks can only drop under reduction, so a full
// rank modulo p certifies full rank over Q(q).

#include <cstdint>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <vector>

#include "uaw/matrix.hpp"

namespace uaw {

class ModularImage {
 public:
  explicit ModularImage(const FieldContext& ctx) : ctx_(&ctx) {
    const std::uint64_t d = static_cast<std::uint64_t>(ctx.order());
    std::uint64_t p = ((std::uint64_t{1} << 31) / d) * d + 1;
    for (;; p -= d)
      if (is_prime(p) && find_root(p)) break;
  }

  std::uint64_t prime() const { return p_; }

  std::optional<std::uint64_t> reduce(const Cyclotomic& x) const {
    const std::uint64_t den = mod_of(x.denominator());
    if (den == 0) return std::nullopt;
    std::uint64_t acc = 0, rk = 1;
    for (const auto& n : x.numerators()) {
      acc = (acc + mod_of(n) * rk) % p_;
      rk = rk * root_ % p_;
    }
    return acc * inv(den) % p_;
  }

  std::optional<std::vector<std::uint64_t>> reduce(const ExactMatrix& m) const {
    std::vector<std::uint64_t> out;
    out.reserve(m.data().size());
    for (const auto& x : m.data()) {
      auto r = reduce(x);
      if (!r) return std::nullopt;
      out.push_back(*r);
    }
    return out;
  }

  std::uint64_t mul(std::uint64_t a, std::uint64_t b) const { return a * b % p_; }
  std::uint64_t add(std::uint64_t a, std::uint64_t b) const { return (a + b) % p_; }
  std::uint64_t sub(std::uint64_t a, std::uint64_t b) const { return (a + p_ - b) % p_; }
  std::uint64_t inv(std::uint64_t a) const { return power(a, p_ - 2); }

  // n x n row-major product
  std::vector<std::uint64_t> matmul(const std::vector<std::uint64_t>& a, const std::vector<std::uint64_t>& b,
                                    std::size_t n) const {
    std::vector<std::uint64_t> r(n * n, 0);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t k = 0; k < n; ++k) {
        const std::uint64_t x = a[i * n + k];
        if (!x) continue;
        for (std::size_t j = 0; j < n; ++j) r[i * n + j] = (r[i * n + j] + x * b[k * n + j]) % p_;
      }
    return r;
  }

 private:
  static bool is_prime(std::uint64_t n) {
    if (n < 2) return false;
    for (std::uint64_t f = 2; f * f <= n; ++f)
      if (n % f == 0) return false;
    return true;
  }

  std::uint64_t power(std::uint64_t b, std::uint64_t e) const {
    std::uint64_t r = 1;
    b %= p_;
    while (e) {
      if (e & 1) r = r * b % p_;
      b = b * b % p_;
      e >>= 1;
    }
    return r;
  }

  std::uint64_t mod_of(const Integer& z) const {
    Integer r = z % static_cast<unsigned long>(p_);
    if (sgn(r) < 0) r += static_cast<unsigned long>(p_);
    return r.get_ui();
  }

  // A root of the cyclotomic modulus in Z/p, i.e. an element of order d.
  bool find_root(std::uint64_t p) {
    p_ = p;
    const std::uint64_t d = static_cast<std::uint64_t>(ctx_->order());
    for (std::uint64_t x = 2; x < 200; ++x) {
      const std::uint64_t r = power(x, (p - 1) / d);
      std::uint64_t acc = 0, rk = 1;
      for (const auto& c : ctx_->modulus()) {
        acc = (acc + mod_of(c) * rk) % p;
        rk = rk * r % p;
      }
      if (acc == 0) {
        root_ = r;
        return true;
      }
    }
    return false;
  }

  const FieldContext* ctx_;
  std::uint64_t p_ = 0, root_ = 0;
};

class ModEchelon {
 public:
  ModEchelon(const ModularImage& m, std::size_t width) : m_(&m), width_(width) {}

  std::size_t size() const { return rows_.size(); }

  bool insert(std::vector<std::uint64_t> v) {
    for (std::size_t k = 0; k < rows_.size(); ++k) {
      const std::uint64_t f = v[pivots_[k]];
      if (!f) continue;
      for (std::size_t j = 0; j < width_; ++j)
        if (rows_[k][j]) v[j] = m_->sub(v[j], m_->mul(f, rows_[k][j]));
    }
    std::size_t p = 0;
    while (p < width_ && v[p] == 0) ++p;
    if (p == width_) return false;
    const std::uint64_t inv = m_->inv(v[p]);
    for (auto& x : v) x = m_->mul(x, inv);
    rows_.push_back(std::move(v));
    pivots_.push_back(p);
    return true;
  }

 private:
  const ModularImage* m_;
  std::size_t width_;
  std::vector<std::vector<std::uint64_t>> rows_;
  std::vector<std::size_t> pivots_;
};

inline const ModularImage& modular_image(const FieldContext& ctx) {
  static std::mutex mu;
  static std::map<const FieldContext*, std::unique_ptr<ModularImage>> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto& slot = cache[&ctx];
  if (!slot) slot = std::make_unique<ModularImage>(ctx);
  return *slot;
}

}  // namespace uaw
