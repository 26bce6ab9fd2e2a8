#pragma once

// Dense matrices over Q(q) with exact Gaussian elimination.

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "uaw/cyclotomic.hpp"

namespace uaw {

class ExactMatrix {
 public:
  ExactMatrix() = default;
  ExactMatrix(const FieldContext& ctx, std::size_t rows, std::size_t cols)
      : ctx_(&ctx), rows_(rows), cols_(cols), data_(rows * cols, Cyclotomic::zero(ctx)) {}

  static ExactMatrix identity(const FieldContext& ctx, std::size_t n) {
    ExactMatrix m(ctx, n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = Cyclotomic::one(ctx);
    return m;
  }
  static ExactMatrix scalar(const Cyclotomic& c, std::size_t n) {
    ExactMatrix m(c.context(), n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = c;
    return m;
  }
  // Column matrix from a vector.
  static ExactMatrix column(const FieldContext& ctx, const std::vector<Cyclotomic>& v) {
    ExactMatrix m(ctx, v.size(), 1);
    for (std::size_t i = 0; i < v.size(); ++i) m(i, 0) = v[i];
    return m;
  }

  const FieldContext& context() const {
    if (!ctx_) throw ContextMismatch("matrix has no field context");
    return *ctx_;
  }
  const FieldContext* context_ptr() const noexcept { return ctx_; }
  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  bool is_square() const noexcept { return rows_ == cols_; }

  Cyclotomic& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Cyclotomic& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }
  const std::vector<Cyclotomic>& data() const noexcept { return data_; }

  std::vector<Cyclotomic> col(std::size_t c) const {
    std::vector<Cyclotomic> v;
    v.reserve(rows_);
    for (std::size_t r = 0; r < rows_; ++r) v.push_back((*this)(r, c));
    return v;
  }

  bool is_zero() const {
    for (const auto& x : data_)
      if (!x.is_zero()) return false;
    return true;
  }
  std::size_t nonzero_count() const {
    std::size_t n = 0;
    for (const auto& x : data_)
      if (!x.is_zero()) ++n;
    return n;
  }

  // lambda with M = lambda I, if any.
  std::optional<Cyclotomic> scalar_value() const {
    if (!is_square() || rows_ == 0) return std::nullopt;
    const Cyclotomic lam = (*this)(0, 0);
    for (std::size_t r = 0; r < rows_; ++r)
      for (std::size_t c = 0; c < cols_; ++c)
        if ((*this)(r, c) != (r == c ? lam : Cyclotomic::zero(*ctx_))) return std::nullopt;
    return lam;
  }

  ExactMatrix transpose() const {
    ExactMatrix t(context(), cols_, rows_);
    for (std::size_t r = 0; r < rows_; ++r)
      for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
    return t;
  }

  ExactMatrix operator-() const {
    ExactMatrix m = *this;
    for (auto& x : m.data_) x = -x;
    return m;
  }
  ExactMatrix& operator+=(const ExactMatrix& o) {
    check_same_shape(o);
    for (std::size_t k = 0; k < data_.size(); ++k) data_[k] += o.data_[k];
    return *this;
  }
  ExactMatrix& operator-=(const ExactMatrix& o) {
    check_same_shape(o);
    for (std::size_t k = 0; k < data_.size(); ++k) data_[k] -= o.data_[k];
    return *this;
  }
  friend ExactMatrix operator+(ExactMatrix a, const ExactMatrix& b) { return a += b; }
  friend ExactMatrix operator-(ExactMatrix a, const ExactMatrix& b) { return a -= b; }
  friend ExactMatrix operator*(const Cyclotomic& s, ExactMatrix m) {
    for (auto& x : m.data_) x *= s;
    return m;
  }
  friend ExactMatrix operator*(const ExactMatrix& a, const ExactMatrix& b) {
    if (a.cols_ != b.rows_) throw ShapeMismatch("matrix product shape mismatch");
    if (a.ctx_ != b.ctx_) throw ContextMismatch("matrices belong to different fields");
    ExactMatrix r(a.context(), a.rows_, b.cols_);
    for (std::size_t i = 0; i < a.rows_; ++i)
      for (std::size_t k = 0; k < a.cols_; ++k) {
        const Cyclotomic& x = a(i, k);
        if (x.is_zero()) continue;
        for (std::size_t j = 0; j < b.cols_; ++j)
          if (!b(k, j).is_zero()) r(i, j) += x * b(k, j);
      }
    return r;
  }
  friend bool operator==(const ExactMatrix& a, const ExactMatrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }

  // M - lambda I
  ExactMatrix shifted(const Cyclotomic& lambda) const {
    ExactMatrix m = *this;
    for (std::size_t i = 0; i < std::min(rows_, cols_); ++i) m(i, i) -= lambda;
    return m;
  }

  ExactMatrix pow(unsigned e) const {
    ExactMatrix r = identity(context(), rows_);
    for (unsigned k = 0; k < e; ++k) r = r * *this;
    return r;
  }

  // Columns side by side.
  ExactMatrix hstack(const ExactMatrix& o) const {
    if (o.rows_ != rows_) throw ShapeMismatch("hstack row mismatch");
    ExactMatrix r(context(), rows_, cols_ + o.cols_);
    for (std::size_t i = 0; i < rows_; ++i) {
      for (std::size_t j = 0; j < cols_; ++j) r(i, j) = (*this)(i, j);
      for (std::size_t j = 0; j < o.cols_; ++j) r(i, cols_ + j) = o(i, j);
    }
    return r;
  }

  ExactMatrix block(std::size_t r0, std::size_t c0, std::size_t nr, std::size_t nc) const {
    ExactMatrix r(context(), nr, nc);
    for (std::size_t i = 0; i < nr; ++i)
      for (std::size_t j = 0; j < nc; ++j) r(i, j) = (*this)(r0 + i, c0 + j);
    return r;
  }

  // Reduced row echelon form in place; returns pivot columns. The first
  // nonzero entry in a column is taken as pivot.
  std::vector<std::size_t> rref_in_place() {
    std::vector<std::size_t> pivots;
    std::size_t row = 0;
    for (std::size_t c = 0; c < cols_ && row < rows_; ++c) {
      std::size_t p = row;
      while (p < rows_ && (*this)(p, c).is_zero()) ++p;
      if (p == rows_) continue;
      if (p != row)
        for (std::size_t j = 0; j < cols_; ++j) std::swap((*this)(p, j), (*this)(row, j));
      const Cyclotomic inv = (*this)(row, c).inverse();
      for (std::size_t j = c; j < cols_; ++j) (*this)(row, j) *= inv;
      for (std::size_t r = 0; r < rows_; ++r) {
        if (r == row || (*this)(r, c).is_zero()) continue;
        const Cyclotomic f = (*this)(r, c);
        for (std::size_t j = c; j < cols_; ++j)
          if (!(*this)(row, j).is_zero()) (*this)(r, j) -= f * (*this)(row, j);
      }
      pivots.push_back(c);
      ++row;
    }
    return pivots;
  }

  ExactMatrix rref(std::vector<std::size_t>* pivots = nullptr) const {
    ExactMatrix m = *this;
    auto p = m.rref_in_place();
    if (pivots) *pivots = std::move(p);
    return m;
  }

  std::size_t rank() const {
    if (rows_ == 0 || cols_ == 0) return 0;
    ExactMatrix m = *this;
    return m.rref_in_place().size();
  }

  // Basis of the right kernel, as the columns of a cols x k matrix.
  ExactMatrix nullspace() const {
    std::vector<std::size_t> pivots;
    ExactMatrix r = rref(&pivots);
    std::vector<bool> is_pivot(cols_, false);
    for (auto p : pivots) is_pivot[p] = true;
    std::vector<std::size_t> free;
    for (std::size_t c = 0; c < cols_; ++c)
      if (!is_pivot[c]) free.push_back(c);
    ExactMatrix basis(context(), cols_, free.size());
    for (std::size_t k = 0; k < free.size(); ++k) {
      basis(free[k], k) = Cyclotomic::one(*ctx_);
      for (std::size_t i = 0; i < pivots.size(); ++i) basis(pivots[i], k) = -r(i, free[k]);
    }
    return basis;
  }

  // A basis of the column space (a subset of the columns).
  ExactMatrix column_basis() const {
    std::vector<std::size_t> pivots;
    rref(&pivots);
    ExactMatrix b(context(), rows_, pivots.size());
    for (std::size_t k = 0; k < pivots.size(); ++k)
      for (std::size_t i = 0; i < rows_; ++i) b(i, k) = (*this)(i, pivots[k]);
    return b;
  }

  // Coefficients (lowest degree first, monic) of det(x I - M), by the
  // Faddeev-LeVerrier recursion.
  std::vector<Cyclotomic> charpoly() const {
    if (!is_square()) throw ShapeMismatch("charpoly of a non-square matrix");
    const std::size_t n = rows_;
    std::vector<Cyclotomic> c(n + 1, Cyclotomic::zero(context()));
    c[n] = Cyclotomic::one(*ctx_);
    ExactMatrix mk(context(), n, n);  // M_0 = 0
    for (std::size_t k = 1; k <= n; ++k) {
      mk = *this * mk;
      for (std::size_t i = 0; i < n; ++i) mk(i, i) += c[n - k + 1];
      ExactMatrix am = *this * mk;
      Cyclotomic tr = Cyclotomic::zero(*ctx_);
      for (std::size_t i = 0; i < n; ++i) tr += am(i, i);
      c[n - k] = -tr * Cyclotomic::from_rational(*ctx_, Rational(1, static_cast<long>(k)));
    }
    return c;
  }

 private:
  void check_same_shape(const ExactMatrix& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_) throw ShapeMismatch("matrix shapes differ");
    if (ctx_ != o.ctx_) throw ContextMismatch("matrices belong to different fields");
  }

  const FieldContext* ctx_ = nullptr;
  std::size_t rows_ = 0, cols_ = 0;
  std::vector<Cyclotomic> data_;
};

inline ExactMatrix commutator(const ExactMatrix& x, const ExactMatrix& y) { return x * y - y * x; }

// span(cols of x) is contained in span(cols of y).
inline bool column_span_contains(const ExactMatrix& y, const ExactMatrix& x) {
  if (x.cols() == 0) return true;
  if (y.cols() == 0) return x.is_zero();
  return y.hstack(x).rank() == y.rank();
}

// Incrementally maintained row echelon basis for independence tests.
class Echelon {
 public:
  explicit Echelon(const FieldContext& ctx, std::size_t width) : ctx_(&ctx), width_(width) {}

  std::size_t size() const noexcept { return rows_.size(); }

  // Adds v if it is independent of the current rows; returns whether it was.
  bool insert(std::vector<Cyclotomic> v) {
    if (v.size() != width_) throw ShapeMismatch("echelon vector width mismatch");
    for (std::size_t k = 0; k < rows_.size(); ++k) {
      const std::size_t p = pivots_[k];
      if (v[p].is_zero()) continue;
      const Cyclotomic f = v[p];
      for (std::size_t j = 0; j < width_; ++j)
        if (!rows_[k][j].is_zero()) v[j] -= f * rows_[k][j];
    }
    std::size_t p = 0;
    while (p < width_ && v[p].is_zero()) ++p;
    if (p == width_) return false;
    const Cyclotomic inv = v[p].inverse();
    for (auto& x : v) x *= inv;
    rows_.push_back(std::move(v));
    pivots_.push_back(p);
    return true;
  }

  bool contains(std::vector<Cyclotomic> v) const {
    for (std::size_t k = 0; k < rows_.size(); ++k) {
      const std::size_t p = pivots_[k];
      if (v[p].is_zero()) continue;
      const Cyclotomic f = v[p];
      for (std::size_t j = 0; j < width_; ++j)
        if (!rows_[k][j].is_zero()) v[j] -= f * rows_[k][j];
    }
    for (const auto& x : v)
      if (!x.is_zero()) return false;
    return true;
  }

 private:
  const FieldContext* ctx_;
  std::size_t width_;
  std::vector<std::vector<Cyclotomic>> rows_;
  std::vector<std::size_t> pivots_;
};

}  // namespace uaw
