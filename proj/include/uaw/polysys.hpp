#pragma once

// Sparse commutative polynomials over Q(q) and a small elimination solver:
// linear equations are eliminated by row reduction, univariate equations are
// solved by testing candidate roots, and remaining freedom is sampled.

#include <algorithm>
#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <random>
#include <unordered_set>
#include <vector>

#include "uaw/cyclotomic.hpp"
#include "uaw/errors.hpp"
#include "uaw/matrix.hpp"

namespace uaw {

class MPoly {
 public:
  using Exps = std::vector<std::uint8_t>;

  MPoly() = default;
  MPoly(const FieldContext& ctx, std::size_t nvars) : ctx_(&ctx), nvars_(nvars) {}

  static MPoly constant(const Cyclotomic& c, std::size_t nvars) {
    MPoly p(c.context(), nvars);
    if (!c.is_zero()) p.terms_[Exps(nvars, 0)] = c;
    return p;
  }
  static MPoly variable(const FieldContext& ctx, std::size_t nvars, std::size_t v) {
    MPoly p(ctx, nvars);
    Exps e(nvars, 0);
    e[v] = 1;
    p.terms_[e] = Cyclotomic::one(ctx);
    return p;
  }

  const FieldContext& context() const { return *ctx_; }
  std::size_t nvars() const { return nvars_; }
  const std::map<Exps, Cyclotomic>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  int degree() const {
    int d = 0;
    for (const auto& [e, c] : terms_) {
      int s = 0;
      for (auto x : e) s += x;
      d = std::max(d, s);
    }
    return d;
  }
  bool is_constant() const { return terms_.empty() || (terms_.size() == 1 && degree() == 0); }
  Cyclotomic constant_term() const {
    auto it = terms_.find(Exps(nvars_, 0));
    return it == terms_.end() ? Cyclotomic::zero(*ctx_) : it->second;
  }
  bool uses(std::size_t v) const {
    for (const auto& [e, c] : terms_)
      if (e[v]) return true;
    return false;
  }
  std::vector<std::size_t> variables() const {
    std::vector<std::size_t> out;
    for (std::size_t v = 0; v < nvars_; ++v)
      if (uses(v)) out.push_back(v);
    return out;
  }
  // Coefficient of x_v in a polynomial of degree <= 1.
  Cyclotomic linear_coefficient(std::size_t v) const {
    Exps e(nvars_, 0);
    e[v] = 1;
    auto it = terms_.find(e);
    return it == terms_.end() ? Cyclotomic::zero(*ctx_) : it->second;
  }

  void add_term(const Exps& e, const Cyclotomic& c) {
    if (c.is_zero()) return;
    auto [it, fresh] = terms_.try_emplace(e, c);
    if (!fresh) {
      it->second += c;
      if (it->second.is_zero()) terms_.erase(it);
    }
  }

  MPoly& operator+=(const MPoly& o) {
    adopt(o);
    for (const auto& [e, c] : o.terms_) add_term(e, c);
    return *this;
  }
  MPoly& operator-=(const MPoly& o) {
    adopt(o);
    for (const auto& [e, c] : o.terms_) add_term(e, -c);
    return *this;
  }
  friend MPoly operator+(MPoly a, const MPoly& b) { return a += b; }
  friend MPoly operator-(MPoly a, const MPoly& b) { return a -= b; }
  friend MPoly operator*(const Cyclotomic& s, const MPoly& p) {
    MPoly r(s.context(), p.nvars_);
    if (s.is_zero()) return r;
    for (const auto& [e, c] : p.terms_) r.terms_[e] = s * c;
    return r;
  }
  friend MPoly operator*(const MPoly& a, const MPoly& b) {
    if (a.is_zero() || b.is_zero()) return MPoly(a.ctx_ ? *a.ctx_ : *b.ctx_, std::max(a.nvars_, b.nvars_));
    MPoly r(*a.ctx_, a.nvars_);
    for (const auto& [ea, ca] : a.terms_)
      for (const auto& [eb, cb] : b.terms_) {
        Exps e(a.nvars_);
        for (std::size_t k = 0; k < e.size(); ++k) e[k] = static_cast<std::uint8_t>(ea[k] + eb[k]);
        r.add_term(e, ca * cb);
      }
    return r;
  }
  friend bool operator==(const MPoly& a, const MPoly& b) { return a.terms_ == b.terms_; }

  MPoly substitute(std::size_t v, const MPoly& value) const {
    if (!uses(v)) return *this;
    MPoly out(*ctx_, nvars_);
    std::vector<MPoly> powers{MPoly::constant(Cyclotomic::one(*ctx_), nvars_)};
    for (const auto& [e, c] : terms_) {
      while (powers.size() <= e[v]) powers.push_back(powers.back() * value);
      Exps rest = e;
      rest[v] = 0;
      MPoly mono(*ctx_, nvars_);
      mono.terms_[rest] = c;
      out += mono * powers[e[v]];
    }
    return out;
  }

  Cyclotomic evaluate_univariate(std::size_t v, const Cyclotomic& x) const {
    Cyclotomic acc = Cyclotomic::zero(*ctx_);
    for (const auto& [e, c] : terms_) acc += c * pow(x, e[v]);
    return acc;
  }

 private:
  void adopt(const MPoly& o) {
    if (!ctx_) {
      ctx_ = o.ctx_;
      nvars_ = o.nvars_;
    }
  }

  const FieldContext* ctx_ = nullptr;
  std::size_t nvars_ = 0;
  std::map<Exps, Cyclotomic> terms_;
};

struct SolverOptions {
  int degree_cap = 4;
  std::size_t max_solutions = 4;
  std::size_t samples_per_branch = 3;
  std::uint64_t seed = 0;
};

struct SolverStats {
  std::size_t branches = 0;
  std::size_t dead_branches = 0;
  std::size_t unresolved_univariate = 0;
};

// A point of the solution set: value[v] is an expression in the variables
// still marked free; `free` lists them.
struct PartialSolution {
  std::vector<MPoly> value;
  std::vector<bool> free;

  Cyclotomic at(std::size_t v) const { return value[v].constant_term(); }
  bool fully_assigned() const { return std::none_of(free.begin(), free.end(), [](bool b) { return b; }); }
};

inline PartialSolution initial_solution(const FieldContext& ctx, std::size_t nvars) {
  PartialSolution s;
  for (std::size_t v = 0; v < nvars; ++v) s.value.push_back(MPoly::variable(ctx, nvars, v));
  s.free.assign(nvars, true);
  return s;
}

// Deterministic sample values for free variables.
class SamplePool {
 public:
  SamplePool(const FieldContext& ctx, std::uint64_t seed) : ctx_(&ctx), rng_(seed) {}

  Cyclotomic next() {
    static constexpr long kNum[] = {1, 2, 3, -1, -2, 5, 7, -3};
    static constexpr long kDen[] = {1, 2, 3, 5};
    std::uniform_int_distribution<int> num(0, 7), den(0, 3), qp(0, ctx_->order() - 1);
    Cyclotomic v = Cyclotomic::from_rational(*ctx_, Rational(kNum[num(rng_)], kDen[den(rng_)]));
    return v * Cyclotomic::q_power(*ctx_, qp(rng_));
  }

 private:
  const FieldContext* ctx_;
  std::mt19937_64 rng_;
};

// Candidate roots tried for univariate equations of degree >= 2.
inline std::vector<Cyclotomic> root_candidates(const FieldContext& ctx) {
  std::vector<Cyclotomic> out;
  const Cyclotomic one = Cyclotomic::one(ctx);
  const std::vector<Cyclotomic> scales{one,
                                       Cyclotomic::from_integer(ctx, 2),
                                       Cyclotomic::from_rational(ctx, Rational(1, 2)),
                                       Cyclotomic::from_integer(ctx, 3),
                                       Cyclotomic::from_rational(ctx, Rational(1, 3)),
                                       one + Cyclotomic::q_power(ctx, 1)};
  std::unordered_set<Cyclotomic> seen;
  auto push = [&](const Cyclotomic& v) {
    if (seen.insert(v).second) out.push_back(v);
  };
  push(Cyclotomic::zero(ctx));
  for (const auto& s : scales)
    for (int j = 0; j < ctx.order(); ++j) {
      const Cyclotomic v = s * Cyclotomic::q_power(ctx, j);
      push(v);
      push(-v);
      push(v + v.inverse());
      push(-(v + v.inverse()));
    }
  return out;
}

class PolySolver {
 public:
  PolySolver(const FieldContext& ctx, SolverOptions opt) : ctx_(&ctx), opt_(opt), pool_(ctx, opt.seed) {}

  const SolverStats& stats() const { return stats_; }

  // All branches of `start` compatible with eqs, up to max_solutions. Free
  // variables are left free.
  std::vector<PartialSolution> solve(const PartialSolution& start, std::vector<MPoly> eqs) {
    std::vector<PartialSolution> out;
    run(start, std::move(eqs), out);
    return out;
  }

  // Assigns sampled values to every variable still free.
  void sample_free(PartialSolution& s) {
    for (std::size_t v = 0; v < s.free.size(); ++v)
      if (s.free[v]) assign(s, v, MPoly::constant(pool_.next(), s.free.size()));
  }

  static void assign(PartialSolution& s, std::size_t v, const MPoly& value) {
    for (auto& x : s.value) x = x.substitute(v, value);
    s.free[v] = false;
  }

 private:
  static void substitute_all(std::vector<MPoly>& eqs, std::size_t v, const MPoly& value) {
    for (auto& e : eqs) e = e.substitute(v, value);
  }

  void run(PartialSolution s, std::vector<MPoly> eqs, std::vector<PartialSolution>& out) {
    ++stats_.branches;
    const std::size_t nv = s.free.size();
    for (;;) {
      if (out.size() >= opt_.max_solutions) return;
      std::vector<MPoly> live;
      for (auto& e : eqs) {
        if (e.is_zero()) continue;
        if (e.is_constant()) {
          ++stats_.dead_branches;
          return;
        }
        if (e.degree() > opt_.degree_cap)
          throw SolverDegreeExceeded("equation of degree " + std::to_string(e.degree()) + " exceeds solver cap " +
                                     std::to_string(opt_.degree_cap));
        live.push_back(std::move(e));
      }
      eqs = std::move(live);
      if (eqs.empty()) {
        out.push_back(std::move(s));
        return;
      }

      // linear equations
      std::vector<const MPoly*> linear;
      for (const auto& e : eqs)
        if (e.degree() == 1) linear.push_back(&e);
      if (!linear.empty()) {
        ExactMatrix m(*ctx_, linear.size(), nv + 1);
        for (std::size_t r = 0; r < linear.size(); ++r) {
          for (std::size_t v = 0; v < nv; ++v) m(r, v) = linear[r]->linear_coefficient(v);
          m(r, nv) = linear[r]->constant_term();
        }
        std::vector<std::size_t> piv;
        const ExactMatrix red = m.rref(&piv);
        if (!piv.empty() && piv.back() == nv) {
          ++stats_.dead_branches;
          return;
        }
        for (std::size_t r = piv.size(); r-- > 0;) {
          const std::size_t p = piv[r];
          MPoly value = MPoly::constant(-red(r, nv), nv);
          for (std::size_t v = p + 1; v < nv; ++v)
            if (!red(r, v).is_zero()) value -= red(r, v) * MPoly::variable(*ctx_, nv, v);
          // later pivots are already eliminated from this row by rref
          assign(s, p, value);
          substitute_all(eqs, p, value);
        }
        continue;
      }

      // univariate equations
      for (const auto& e : eqs) {
        const auto vars = e.variables();
        if (vars.size() != 1) continue;
        const std::size_t v = vars[0];
        bool any = false;
        for (const auto& r : root_candidates(*ctx_)) {
          if (!e.evaluate_univariate(v, r).is_zero()) continue;
          any = true;
          PartialSolution t = s;
          const MPoly value = MPoly::constant(r, nv);
          assign(t, v, value);
          std::vector<MPoly> teqs = eqs;
          substitute_all(teqs, v, value);
          run(std::move(t), std::move(teqs), out);
          if (out.size() >= opt_.max_solutions) return;
        }
        if (!any) ++stats_.unresolved_univariate;
        return;
      }

      // sample the highest-index variable of the lowest-degree equation
      const MPoly* pick = &eqs.front();
      for (const auto& e : eqs)
        if (e.degree() < pick->degree()) pick = &e;
      const std::size_t v = pick->variables().back();
      for (std::size_t k = 0; k < opt_.samples_per_branch; ++k) {
        PartialSolution t = s;
        const MPoly value = MPoly::constant(pool_.next(), nv);
        assign(t, v, value);
        std::vector<MPoly> teqs = eqs;
        substitute_all(teqs, v, value);
        run(std::move(t), std::move(teqs), out);
        if (out.size() >= opt_.max_solutions) return;
      }
      return;
    }
  }

  const FieldContext* ctx_;
  SolverOptions opt_;
  SamplePool pool_;
  SolverStats stats_;
};

// Dense square matrices of polynomials, enough to write down the module
// equations for an ansatz.
class PolyMatrix {
 public:
  PolyMatrix(const FieldContext& ctx, std::size_t n, std::size_t nvars)
      : n_(n), nvars_(nvars), data_(n * n, MPoly(ctx, nvars)) {}

  static PolyMatrix from_exact(const ExactMatrix& m, std::size_t nvars) {
    PolyMatrix p(m.context(), m.rows(), nvars);
    for (std::size_t i = 0; i < m.rows(); ++i)
      for (std::size_t j = 0; j < m.cols(); ++j) p(i, j) = MPoly::constant(m(i, j), nvars);
    return p;
  }

  std::size_t size() const { return n_; }
  MPoly& operator()(std::size_t i, std::size_t j) { return data_[i * n_ + j]; }
  const MPoly& operator()(std::size_t i, std::size_t j) const { return data_[i * n_ + j]; }

  friend PolyMatrix operator+(PolyMatrix a, const PolyMatrix& b) {
    for (std::size_t k = 0; k < a.data_.size(); ++k) a.data_[k] += b.data_[k];
    return a;
  }
  friend PolyMatrix operator-(PolyMatrix a, const PolyMatrix& b) {
    for (std::size_t k = 0; k < a.data_.size(); ++k) a.data_[k] -= b.data_[k];
    return a;
  }
  friend PolyMatrix operator*(const Cyclotomic& s, PolyMatrix a) {
    for (auto& x : a.data_) x = s * x;
    return a;
  }
  friend PolyMatrix operator*(const PolyMatrix& a, const PolyMatrix& b) {
    PolyMatrix r(a.data_[0].context(), a.n_, a.nvars_);
    for (std::size_t i = 0; i < a.n_; ++i)
      for (std::size_t k = 0; k < a.n_; ++k) {
        if (a(i, k).is_zero()) continue;
        for (std::size_t j = 0; j < a.n_; ++j)
          if (!b(k, j).is_zero()) r(i, j) += a(i, k) * b(k, j);
      }
    return r;
  }

  std::vector<MPoly> entries() const { return data_; }

  PolyMatrix substituted(const PartialSolution& s) const {
    PolyMatrix r = *this;
    for (auto& x : r.data_)
      for (std::size_t v = 0; v < s.free.size(); ++v)
        if (!s.free[v]) x = x.substitute(v, s.value[v]);
    return r;
  }

  ExactMatrix evaluate(const PartialSolution& s) const {
    const PolyMatrix r = substituted(s);
    ExactMatrix m(data_[0].context(), n_, n_);
    for (std::size_t i = 0; i < n_; ++i)
      for (std::size_t j = 0; j < n_; ++j) {
        if (!r(i, j).is_constant()) throw Error("matrix entry still depends on a free variable");
        m(i, j) = r(i, j).constant_term();
      }
    return m;
  }

 private:
  std::size_t n_, nvars_;
  std::vector<MPoly> data_;
};

}  // namespace uaw
