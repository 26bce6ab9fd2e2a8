#pragma once

// Explicit modules: the 1-dimensional family, the irreducibility criterion
// for V_n(a,b,c), a tridiagonal ansatz solver and the sweep that catalogs
// what it finds.

#include <optional>
#include <string>
#include <vector>

#include "uaw/polysys.hpp"
#include "uaw/repkit.hpp"

namespace uaw {

inline Representation one_dim(const Cyclotomic& a0, const Cyclotomic& b0, const Cyclotomic& gamma0) {
  return assemble(ExactMatrix::scalar(a0, 1), ExactMatrix::scalar(b0, 1), gamma0);
}

struct ModuleSpec {
  int n = 0;
  Cyclotomic a, b, c;
};

inline void check_spec(const ModuleSpec& s) {
  if (s.a.is_zero() || s.b.is_zero() || s.c.is_zero()) throw ZeroParameter("a, b, c must be nonzero");
}

inline bool criterion(const ModuleSpec& s) {
  check_spec(s);
  const FieldContext& ctx = s.a.context();
  if (s.n < 0 || s.n > ctx.dbar() - 1) return false;
  const Cyclotomic abc = s.a * s.b * s.c;
  const std::vector<Cyclotomic> products{abc, abc / (s.a * s.a), abc / (s.b * s.b), abc / (s.c * s.c)};
  for (int i = 1; i <= s.n; ++i) {
    const Cyclotomic f = Cyclotomic::q_power(ctx, 2 * i - s.n - 1);
    for (const auto& p : products)
      if (p == f) return false;
  }
  return true;
}

// {p q^(2i-n) + p^-1 q^(n-2i) : i = 0..n}
inline std::vector<Cyclotomic> leonard_spectrum(const Cyclotomic& p, int n) {
  const FieldContext& ctx = p.context();
  const Cyclotomic pinv = p.inverse();
  std::vector<Cyclotomic> out;
  for (int i = 0; i <= n; ++i)
    out.push_back(p * Cyclotomic::q_power(ctx, 2 * i - n) + pinv * Cyclotomic::q_power(ctx, n - 2 * i));
  return out;
}

struct SchurScalars {
  Cyclotomic alpha, beta, gamma;
};

inline SchurScalars spec_scalars(const ModuleSpec& s) {
  check_spec(s);
  const FieldContext& ctx = s.a.context();
  const Cyclotomic ta = s.a + s.a.inverse(), tb = s.b + s.b.inverse(), tc = s.c + s.c.inverse();
  const Cyclotomic tn = Cyclotomic::q_power(ctx, s.n + 1) + Cyclotomic::q_power(ctx, -s.n - 1);
  return {tb * tc + ta * tn, tc * ta + tb * tn, ta * tb + tc * tn};
}

// Monic polynomial with the given roots, coefficients low degree first.
inline std::vector<Cyclotomic> poly_from_roots(const FieldContext& ctx, const std::vector<Cyclotomic>& roots) {
  std::vector<Cyclotomic> p{Cyclotomic::one(ctx)};
  for (const auto& r : roots) {
    std::vector<Cyclotomic> next(p.size() + 1, Cyclotomic::zero(ctx));
    for (std::size_t k = 0; k < p.size(); ++k) {
      next[k + 1] += p[k];
      next[k] -= r * p[k];
    }
    p = std::move(next);
  }
  return p;
}

// ---------------------------------------------------------------------------
// Tridiagonal ansatz

struct TridiagonalAnsatz {
  std::vector<Cyclotomic> thetas;  // diagonal of B
  Cyclotomic gamma;
  bool gauge_fixed = true;            // superdiagonal of A all ones
  std::optional<Cyclotomic> corner;   // periodic variant: A(n,0) fixed, A(0,n) unknown
  std::optional<Cyclotomic> alpha00;  // pin alpha(0,0)
  std::optional<Cyclotomic> beta00;   // pin beta(0,0)
};

struct AnsatzLayout {
  std::size_t n1 = 0, nvars = 0;
  std::size_t x0 = 0, y0 = 0, w = 0, u0 = 0;
  bool periodic = false, gauge_free = false;
};

inline AnsatzLayout layout_of(const TridiagonalAnsatz& z) {
  AnsatzLayout l;
  l.n1 = z.thetas.size();
  l.periodic = z.corner.has_value();
  l.gauge_free = !z.gauge_fixed;
  l.x0 = 0;
  l.y0 = l.n1;
  l.nvars = 2 * l.n1 - 1;
  if (l.periodic) l.w = l.nvars++;
  l.u0 = l.nvars;
  if (l.gauge_free) l.nvars += l.n1 - 1;
  return l;
}

inline PolyMatrix ansatz_matrix(const FieldContext& ctx, const TridiagonalAnsatz& z, const AnsatzLayout& l) {
  PolyMatrix A(ctx, l.n1, l.nvars);
  for (std::size_t k = 0; k < l.n1; ++k) A(k, k) = MPoly::variable(ctx, l.nvars, l.x0 + k);
  for (std::size_t k = 1; k < l.n1; ++k) {
    A(k, k - 1) = MPoly::variable(ctx, l.nvars, l.y0 + k - 1);
    A(k - 1, k) = l.gauge_free ? MPoly::variable(ctx, l.nvars, l.u0 + k - 1)
                               : MPoly::constant(Cyclotomic::one(ctx), l.nvars);
  }
  if (l.periodic) {
    A(l.n1 - 1, 0) += MPoly::constant(*z.corner, l.nvars);
    A(0, l.n1 - 1) += MPoly::variable(ctx, l.nvars, l.w);
  }
  return A;
}

// Symbolic A and B over a set of unknowns, with the scalars to pin.
struct AnsatzShape {
  PolyMatrix A, B;
  std::size_t nvars = 0;
  Cyclotomic gamma;
  std::optional<Cyclotomic> alpha00, beta00;
  // Impose alpha and beta scalar directly instead of their commutators;
  // only modules with scalar central actions are found.
  bool scalar_central = false;
};

inline AnsatzShape shape_of(const FieldContext& ctx, const TridiagonalAnsatz& z) {
  if (z.thetas.empty()) throw ShapeMismatch("ansatz needs at least one eigenvalue");
  if (z.corner && z.thetas.size() < 3) throw ShapeMismatch("periodic ansatz needs dimension at least 3");
  const AnsatzLayout l = layout_of(z);
  ExactMatrix Bm(ctx, l.n1, l.n1);
  for (std::size_t i = 0; i < l.n1; ++i) Bm(i, i) = z.thetas[i];
  return {ansatz_matrix(ctx, z, l), PolyMatrix::from_exact(Bm, l.nvars), l.nvars, z.gamma, z.alpha00, z.beta00};
}

// Split form: A lower bidiagonal with the given diagonal and ones below it,
// B upper bidiagonal with the given diagonal and unknowns above it.
struct SplitAnsatz {
  std::vector<Cyclotomic> a_thetas, b_thetas;
  Cyclotomic gamma;
  std::optional<Cyclotomic> alpha00, beta00;
};

inline AnsatzShape shape_of(const FieldContext& ctx, const SplitAnsatz& z) {
  if (z.a_thetas.size() != z.b_thetas.size() || z.a_thetas.empty())
    throw ShapeMismatch("split ansatz needs two diagonals of equal length");
  const std::size_t n1 = z.a_thetas.size(), nv = n1 - 1;
  AnsatzShape sh{PolyMatrix(ctx, n1, nv), PolyMatrix(ctx, n1, nv), nv, z.gamma, z.alpha00, z.beta00};
  for (std::size_t i = 0; i < n1; ++i) {
    sh.A(i, i) = MPoly::constant(z.a_thetas[i], nv);
    sh.B(i, i) = MPoly::constant(z.b_thetas[i], nv);
  }
  for (std::size_t k = 1; k < n1; ++k) {
    sh.A(k, k - 1) = MPoly::constant(Cyclotomic::one(ctx), nv);
    sh.B(k - 1, k) = MPoly::variable(ctx, nv, k - 1);
  }
  return sh;
}

struct SolveOutcome {
  std::vector<Representation> reps;
  SolverStats stats;
  std::size_t unsound = 0;  // solutions rejected by check_module
};

inline void append_entries(std::vector<MPoly>& eqs, const PolyMatrix& m) {
  for (auto& e : m.entries()) eqs.push_back(std::move(e));
}

inline SolveOutcome solve_shape(const FieldContext& ctx, const AnsatzShape& sh, const SolverOptions& opt) {
  const QScalars k(ctx);
  const Cyclotomic dinv = (k.q_minus_qinv * k.q2_minus_qm2).inverse();
  const Cyclotomic s2 = k.q2_minus_qm2 * k.q2_minus_qm2;
  const Cyclotomic g2 = k.q_minus_qinv * k.q_minus_qinv * sh.gamma;

  auto alpha_of = [&](const PolyMatrix& A, const PolyMatrix& B) {
    return dinv * (B * B * A - k.q2_plus_qm2 * (B * A * B) + A * B * B + s2 * A + g2 * B);
  };
  auto beta_of = [&](const PolyMatrix& A, const PolyMatrix& B) {
    return dinv * (A * A * B - k.q2_plus_qm2 * (A * B * A) + B * A * A + s2 * B + g2 * A);
  };
  auto pin = [&](std::vector<MPoly>& eqs, const MPoly& lhs, const std::optional<Cyclotomic>& v) {
    if (v) eqs.push_back(lhs - MPoly::constant(*v, sh.nvars));
  };

  PolySolver solver(ctx, opt);
  std::vector<PartialSolution> branches{initial_solution(ctx, sh.nvars)};

  auto stage = [&](auto&& make_eqs) {
    std::vector<PartialSolution> next;
    for (const auto& s : branches)
      for (auto& t : solver.solve(s, make_eqs(sh.A.substituted(s), sh.B.substituted(s)))) next.push_back(std::move(t));
    branches = std::move(next);
  };

  auto scalar_eqs = [&](const PolyMatrix& m, const std::optional<Cyclotomic>& pinned) {
    std::vector<MPoly> eqs;
    for (std::size_t i = 0; i < m.size(); ++i)
      for (std::size_t j = 0; j < m.size(); ++j)
        if (i != j) eqs.push_back(m(i, j));
        else if (i > 0) eqs.push_back(m(i, i) - m(0, 0));
    pin(eqs, m(0, 0), pinned);
    return eqs;
  };

  if (sh.scalar_central) {
    stage([&](const PolyMatrix& A, const PolyMatrix& B) { return scalar_eqs(alpha_of(A, B), sh.alpha00); });
    stage([&](const PolyMatrix& A, const PolyMatrix& B) { return scalar_eqs(beta_of(A, B), sh.beta00); });
  } else {
  stage([&](const PolyMatrix& A, const PolyMatrix& B) {
    const PolyMatrix al = alpha_of(A, B);
    std::vector<MPoly> eqs;
    append_entries(eqs, al * B - B * al);
    append_entries(eqs, al * A - A * al);
    pin(eqs, al(0, 0), sh.alpha00);
    return eqs;
  });
  stage([&](const PolyMatrix& A, const PolyMatrix& B) {
    const PolyMatrix be = beta_of(A, B);
    std::vector<MPoly> eqs;
    append_entries(eqs, be * B - B * be);
    pin(eqs, be(0, 0), sh.beta00);
    return eqs;
  });
  stage([&](const PolyMatrix& A, const PolyMatrix& B) {
    const PolyMatrix be = beta_of(A, B);
    std::vector<MPoly> eqs;
    append_entries(eqs, be * A - A * be);
    return eqs;
  });
  }

  SolveOutcome out;
  for (auto& s : branches) {
    solver.sample_free(s);
    Representation rep = assemble(sh.A.evaluate(s), sh.B.evaluate(s), sh.gamma);
    if (check_module(rep).pass) out.reps.push_back(std::move(rep));
    else ++out.unsound;
  }
  out.stats = solver.stats();
  return out;
}

inline SolveOutcome solve_ansatz(const FieldContext& ctx, const TridiagonalAnsatz& z, const SolverOptions& opt) {
  return solve_shape(ctx, shape_of(ctx, z), opt);
}

inline std::vector<Representation> solve_tridiagonal(const FieldContext& ctx, const TridiagonalAnsatz& z,
                                                     const SolverOptions& opt = {}) {
  SolveOutcome o = solve_ansatz(ctx, z, opt);
  if (o.reps.empty()) throw NoSolution("tridiagonal ansatz has no solution for these eigenvalues");
  return o.reps;
}

// The ansatz aimed at V_n(a,b,c): B diagonal on the b-spectrum, gamma,
// alpha and beta pinned to the predicted scalars.
inline TridiagonalAnsatz ansatz_for(const ModuleSpec& s) {
  const SchurScalars sc = spec_scalars(s);
  TridiagonalAnsatz z;
  z.thetas = leonard_spectrum(s.b, s.n);
  z.gamma = sc.gamma;
  z.alpha00 = sc.alpha;
  z.beta00 = sc.beta;
  return z;
}

// Jordan form: B is the Jordan matrix of a non-D canonical sequence, one
// block per summand of its eigenspace decomposition, and A is an unknown
// block-tridiagonal matrix over those summands.
struct JordanAnsatz {
  SequenceType type = SequenceType::D;
  Cyclotomic gamma;
  std::optional<Cyclotomic> alpha00, beta00;
};

inline AnsatzShape shape_of(const FieldContext& ctx, const JordanAnsatz& z) {
  if (z.type == SequenceType::D || z.type == SequenceType::Unclassified)
    throw ShapeMismatch("Jordan ansatz needs a non-D sequence type");
  const QRacahSequence s = canonical_sequence(ctx, z.type);
  std::vector<std::size_t> block_of;
  std::vector<Cyclotomic> diag;
  std::vector<bool> chained;
  std::size_t b = 0;
  for (auto [i, order] : block_pattern(z.type, ctx.dbar())) {
    for (int r = 0; r < order; ++r) {
      block_of.push_back(b);
      diag.push_back(s.theta(i));
      chained.push_back(r > 0);
    }
    ++b;
  }
  const std::size_t n = diag.size(), nv = n * n;
  ExactMatrix Bm(ctx, n, n);
  for (std::size_t k = 0; k < n; ++k) {
    Bm(k, k) = diag[k];
    if (chained[k]) Bm(k - 1, k) = Cyclotomic::one(ctx);
  }
  AnsatzShape sh{PolyMatrix(ctx, n, nv), PolyMatrix::from_exact(Bm, nv), nv, z.gamma, z.alpha00, z.beta00, true};
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (block_of[i] + 1 >= block_of[j] && block_of[j] + 1 >= block_of[i])
        sh.A(i, j) = MPoly::variable(ctx, nv, i * n + j);
  return sh;
}

inline SplitAnsatz split_ansatz_for(const ModuleSpec& s) {
  const SchurScalars sc = spec_scalars(s);
  return {leonard_spectrum(s.a, s.n), leonard_spectrum(s.b, s.n), sc.gamma, sc.alpha, sc.beta};
}

// Conjugates a tridiagonal A by a diagonal matrix so its superdiagonal
// becomes all ones. Requires a nowhere-zero superdiagonal.
inline ExactMatrix normalize_gauge(const ExactMatrix& A) {
  const std::size_t n = A.rows();
  std::vector<Cyclotomic> dg{Cyclotomic::one(A.context())};
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (A(k, k + 1).is_zero()) throw Error("superdiagonal entry is zero");
    dg.push_back(dg.back() / A(k, k + 1));
  }
  ExactMatrix r = A;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) r(i, j) = A(i, j) * dg[j] / dg[i];
  return r;
}

struct GaugeCheck {
  bool ok = false;
  std::size_t free_solutions = 0;
  std::string detail;
};

// Solves the ansatz with the superdiagonal as unknowns, brings each solution
// to the all-ones gauge and checks that the gauge-fixed solver, pinned to
// the same alpha and beta, reproduces it.
inline GaugeCheck gauge_completeness(const FieldContext& ctx, std::vector<Cyclotomic> thetas, const Cyclotomic& gamma,
                                     const Cyclotomic& alpha00, SolverOptions opt) {
  GaugeCheck g;
  TridiagonalAnsatz free_z;
  free_z.thetas = thetas;
  free_z.gamma = gamma;
  free_z.alpha00 = alpha00;
  free_z.gauge_fixed = false;
  opt.max_solutions = 2;
  const SolveOutcome fo = solve_ansatz(ctx, free_z, opt);
  g.free_solutions = fo.reps.size();
  if (fo.reps.empty()) {
    g.detail = "no gauge-free solution";
    return g;
  }
  g.ok = true;
  for (const auto& rep : fo.reps) {
    ExactMatrix An = normalize_gauge(rep.A);
    TridiagonalAnsatz z;
    z.thetas = thetas;
    z.gamma = gamma;
    z.alpha00 = alpha00;
    z.beta00 = rep.beta(0, 0);
    SolverOptions o2 = opt;
    o2.max_solutions = 8;
    const SolveOutcome fixed = solve_ansatz(ctx, z, o2);
    bool found = false;
    for (const auto& r : fixed.reps)
      if (r.A == An) found = true;
    if (!found) {
      g.ok = false;
      g.detail = "normalized solution missing from the gauge-fixed family";
    }
  }
  return g;
}

// ---------------------------------------------------------------------------
// Analysis of one module instance

struct SpecMatch {
  ModuleSpec spec;
  bool criterion = false;
};

// Parameters (a, b, c) from the sample pool whose predicted spectra and
// Schur scalars reproduce the module.
inline std::vector<SpecMatch> match_spec(const Representation& r) {
  const FieldContext& ctx = r.context();
  const int n = static_cast<int>(r.n) - 1;
  std::vector<SpecMatch> out;
  const auto alpha = r.alpha.scalar_value(), beta = r.beta.scalar_value();
  if (!alpha || !beta) return out;
  const auto pa = r.A.charpoly(), pb = r.B.charpoly(), pc = r.C.charpoly();
  std::vector<Cyclotomic> as, bs, cs;
  for (const auto& p : parameter_pool(ctx)) {
    const auto target = poly_from_roots(ctx, leonard_spectrum(p, n));
    if (target == pa) as.push_back(p);
    if (target == pb) bs.push_back(p);
    if (target == pc) cs.push_back(p);
  }
  for (const auto& a : as)
    for (const auto& b : bs)
      for (const auto& c : cs) {
        ModuleSpec s{n, a, b, c};
        const SchurScalars sc = spec_scalars(s);
        if (sc.alpha == *alpha && sc.beta == *beta && sc.gamma == r.gamma) out.push_back({s, criterion(s)});
      }
  return out;
}

enum class Branch { None, A, B };

inline const char* to_string(Branch b) {
  switch (b) {
    case Branch::A: return "a";
    case Branch::B: return "b";
    case Branch::None: return "none";
  }
  return "none";
}

struct Analysis {
  bool module_ok = false;
  bool irreducible = false;
  std::size_t span_dim = 0;
  std::string sequence_type = "none";
  Branch branch = Branch::None;
  std::vector<SpecMatch> matches;
  Report report;
};

inline Analysis analyze(const Representation& r) {
  Analysis an;
  an.report = verify_module_basics(r);
  an.module_ok = check_module(r).pass;
  const BurnsideResult bs = burnside_irreducible(r);
  an.irreducible = bs.irreducible;
  an.span_dim = bs.span_dim;
  an.matches = match_spec(r);
  if (!an.module_ok || !an.irreducible) return an;

  bool scalars = true;
  std::string missing;
  for (auto w : kAllCentralActions) {
    try {
      scalar_action(r, w);
    } catch (const NotScalar&) {
      scalars = false;
      missing += std::string(" ") + to_string(w);
    }
  }
  an.report.add("schur.scalar_actions", scalars, missing);

  QRacahSequence s;
  try {
    s = match_sequence(r.B);
  } catch (const NoQRacahMatch&) {
    an.report.skip("vanishing.product_of_B_shifts", "spectrum of B outside the sampled sequences");
    return an;
  }
  an.sequence_type = to_string(s.type);
  Decomposition dec;
  try {
    dec = decompose(r, s);
  } catch (const VanishingFails& e) {
    an.report.add("vanishing.product_of_B_shifts", false, e.what());
    return an;
  }
  an.report.add("vanishing.product_of_B_shifts", true);
  an.report.add("decomposition.block_pattern", dec.pattern_ok, to_string(s.type));
  const SectionFiveOps ops = section5_ops(r, dec);
  an.report.append(verify_operator_props(r, dec, ops));
  const Report dims = verify_dimension_theorems(r, dec, ops);
  an.report.append(dims);
  if (const auto* e = dims.find("dimension.injectivity_dichotomy"))
    an.branch = e->detail == "branch a" ? Branch::A : Branch::B;
  return an;
}

// ---------------------------------------------------------------------------
// Sweep

struct CatalogEntry {
  std::string origin;
  std::optional<ModuleSpec> target;
  Representation rep;
  Analysis analysis;
};

struct Catalog {
  int d = 0;
  std::vector<CatalogEntry> entries;
  std::size_t unsolved = 0;
  std::size_t unsound = 0;
  std::vector<std::string> notes;

  bool has_irreducible_of_dim(std::size_t n) const {
    for (const auto& e : entries)
      if (e.analysis.irreducible && e.rep.n == n) return true;
    return false;
  }
  std::size_t irreducible_above(std::size_t n) const {
    std::size_t k = 0;
    for (const auto& e : entries)
      if (e.analysis.irreducible && e.rep.n > n) ++k;
    return k;
  }
};

struct SweepItem {
  std::string origin;
  std::optional<ModuleSpec> spec;
  AnsatzShape shape;
};

inline std::vector<SweepItem> sweep_grid(const FieldContext& ctx, std::uint64_t seed) {
  const int dbar = ctx.dbar();
  const Cyclotomic one = Cyclotomic::one(ctx);
  const Cyclotomic two = Cyclotomic::from_integer(ctx, 2), three = Cyclotomic::from_integer(ctx, 3);
  const Cyclotomic half = Cyclotomic::from_rational(ctx, Rational(1, 2));
  const Cyclotomic opq = one + Cyclotomic::q_power(ctx, 1);
  auto qp = [&](long k) { return Cyclotomic::q_power(ctx, k); };

  std::vector<SweepItem> items;
  auto add_spec = [&](const std::string& origin, ModuleSpec s) {
    items.push_back({origin, s, shape_of(ctx, ansatz_for(s))});
  };
  auto add_split = [&](const std::string& origin, ModuleSpec s) {
    items.push_back({origin, s, shape_of(ctx, split_ansatz_for(s))});
  };
  for (int n = 0; n <= dbar - 1; ++n) {
    add_spec("leonard", {n, two, three, opq});
    add_spec("leonard", {n, half * qp(1), three * qp(2), two});
    if (n >= 1) add_spec("leonard-degenerate", {n, two, half, qp(1 - n)});
  }
  // b-spectra lying on the non-D canonical sequences
  const int n = dbar - 1;
  for (const ModuleSpec& s : std::vector<ModuleSpec>{{n, two, qp(n), opq}, {n, two, -qp(n), opq}, {n, two, qp(n - 1), opq}}) {
    add_spec("leonard-nonD", s);
    add_split("split-nonD", s);
  }
  add_split("split", {n, two, three, opq});
  // one past the bound
  add_spec("oversize", {dbar, two, three, opq});

  SamplePool pool(ctx, seed ^ 0x9e3779b97f4a7c15ULL);
  for (const auto& a : {two, three * qp(1)}) {
    TridiagonalAnsatz z;
    z.thetas = generate(a).thetas;
    z.gamma = pool.next();
    z.alpha00 = pool.next();
    z.corner = pool.next();
    items.push_back({"periodic", std::nullopt, shape_of(ctx, z)});
  }
  for (SequenceType t : canonical_types(ctx)) {
    JordanAnsatz z;
    z.type = t;
    z.gamma = pool.next();
    items.push_back({"jordan", std::nullopt, shape_of(ctx, z)});
  }
  return items;
}

inline Catalog sweep(const FieldContext& ctx, const SolverOptions& opt, const std::function<void(const std::string&)>& progress = {}) {
  Catalog cat;
  cat.d = ctx.order();
  cat.notes.push_back(
      "search space: A tridiagonal with nowhere-zero superdiagonal and B diagonal; A lower and B upper bidiagonal; "
      "B in Jordan form on a non-D sequence with A block-tridiagonal");
  std::size_t idx = 0;
  for (const auto& item : sweep_grid(ctx, opt.seed)) {
    ++idx;
    if (progress) progress("d=" + std::to_string(ctx.order()) + " item " + std::to_string(idx) + " " + item.origin);
    SolverOptions o = opt;
    o.seed = opt.seed + idx;
    SolveOutcome out;
    try {
      out = solve_shape(ctx, item.shape, o);
    } catch (const SolverDegreeExceeded& e) {
      cat.notes.push_back("item " + std::to_string(idx) + ": " + e.what());
      ++cat.unsolved;
      continue;
    }
    cat.unsound += out.unsound;
    if (out.reps.empty()) {
      ++cat.unsolved;
      continue;
    }
    for (auto& rep : out.reps) {
      CatalogEntry e{item.origin, item.spec, rep, analyze(rep)};
      cat.entries.push_back(std::move(e));
    }
  }
  return cat;
}

}  // namespace uaw
