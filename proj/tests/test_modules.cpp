#include <gtest/gtest.h>

#include <random>

#include "uaw/io.hpp"
#include "uaw/verify.hpp"

using namespace uaw;

namespace {

Cyclotomic Q(const FieldContext& ctx, long k) { return Cyclotomic::q_power(ctx, k); }
Cyclotomic Z(const FieldContext& ctx, long v) { return Cyclotomic::from_integer(ctx, v); }

ExactMatrix diag(const std::vector<Cyclotomic>& v) {
  ExactMatrix m(v.front().context(), v.size(), v.size());
  for (std::size_t i = 0; i < v.size(); ++i) m(i, i) = v[i];
  return m;
}

const Catalog& catalog(int d) {
  static CatalogCache cache;
  static VerifyConfig cfg;
  return cache.get(make_field(d), cfg);
}

const Representation& irreducible_of_dbar(int d) {
  const Catalog& cat = catalog(d);
  for (const auto& e : cat.entries)
    if (e.analysis.irreducible && e.rep.n == static_cast<std::size_t>(make_field(d).dbar())) return e.rep;
  throw std::runtime_error("no irreducible module of dimension dbar");
}

}  // namespace

// ---------------------------------------------------------------------------
// repkit

TEST(Repkit, AssembleOneDimensional) {
  const FieldContext& ctx = make_field(5);
  const Cyclotomic g0 = Z(ctx, 3);
  const Representation r = one_dim(Cyclotomic::zero(ctx), Cyclotomic::zero(ctx), g0);
  EXPECT_EQ(r.C(0, 0), g0 / (Q(ctx, 1) + Q(ctx, -1)));
  EXPECT_TRUE(r.alpha.is_zero());
  EXPECT_TRUE(r.beta.is_zero());
  EXPECT_TRUE(check_module(r).pass);
  EXPECT_EQ(gamma_readback(r), ExactMatrix::scalar(g0, 1));
}

TEST(Repkit, AssembleRejectsBadShapes) {
  const FieldContext& ctx = make_field(3);
  EXPECT_THROW(assemble(ExactMatrix(ctx, 2, 2), ExactMatrix(ctx, 3, 3), Z(ctx, 1)), ShapeMismatch);
  EXPECT_THROW(assemble(ExactMatrix(ctx, 2, 3), ExactMatrix(ctx, 2, 3), Z(ctx, 1)), ShapeMismatch);
  EXPECT_THROW(assemble(ExactMatrix(ctx, 1, 1), ExactMatrix(ctx, 1, 1), Z(make_field(5), 1)), ContextMismatch);
}

TEST(Repkit, AlphaMatchesRelationEvaluation) {
  const Representation& r = irreducible_of_dbar(5);
  EXPECT_EQ(evaluate(defining_element(r.context(), CentralExpr::Alpha), r.assignment()), r.alpha);
  EXPECT_EQ(evaluate(defining_element(r.context(), CentralExpr::Beta), r.assignment()), r.beta);
  EXPECT_EQ(gamma_readback(r), ExactMatrix::scalar(r.gamma, r.n));
}

TEST(Repkit, RandomMatricesAreNotModules) {
  const FieldContext& ctx = make_field(5);
  std::mt19937_64 rng(5);
  ExactMatrix A(ctx, 2, 2), B(ctx, 2, 2);
  for (std::size_t i = 0; i < 2; ++i)
    for (std::size_t j = 0; j < 2; ++j) {
      A(i, j) = random_scalar(ctx, rng);
      B(i, j) = random_scalar(ctx, rng);
    }
  EXPECT_FALSE(check_module(assemble(A, B, Z(ctx, 1))).pass);
}

TEST(Repkit, ScalarActions) {
  const FieldContext& ctx = make_field(5);
  const Representation r = one_dim(Z(ctx, 2), Cyclotomic::zero(ctx), Z(ctx, 1));
  EXPECT_EQ(scalar_action(r, CentralAction::ChebA), cheb_eval(ctx.dbar(), Z(ctx, 2)));
  const Representation& irr = irreducible_of_dbar(5);
  for (auto w : kAllCentralActions) EXPECT_NO_THROW(scalar_action(irr, w)) << to_string(w);
}

TEST(Repkit, DirectSumIsNotScalar) {
  VerifyConfig cfg;
  CatalogCache cache;
  const Report r = suite_modules(make_field(5), cfg, cache);
  const ReportEntry* e = r.find("modules.direct_sum_not_scalar");
  ASSERT_NE(e, nullptr);
  EXPECT_EQ(e->status, Status::Pass);

  const FieldContext& ctx = make_field(5);
  const Representation x = one_dim(Z(ctx, 2), Z(ctx, 3), Z(ctx, 1));
  const Representation y = one_dim(Z(ctx, 5), Z(ctx, 3), Z(ctx, 1));
  const Representation sum = assemble(direct_sum(x.A, y.A), direct_sum(x.B, y.B), Z(ctx, 1));
  EXPECT_TRUE(check_module(sum).pass);
  EXPECT_THROW(scalar_action(sum, CentralAction::ChebA), NotScalar);
}

TEST(Repkit, Burnside) {
  const FieldContext& ctx = make_field(3);
  const BurnsideResult one = burnside_irreducible(one_dim(Z(ctx, 2), Z(ctx, 2), Z(ctx, 1)));
  EXPECT_TRUE(one.irreducible);
  EXPECT_EQ(one.span_dim, 1u);
  const ExactMatrix I = ExactMatrix::identity(ctx, 2);
  const BurnsideResult scalar = burnside_irreducible(assemble(I, I, Z(ctx, 1)));
  EXPECT_FALSE(scalar.irreducible);
  EXPECT_EQ(scalar.span_dim, 1u);
  const Representation& irr = irreducible_of_dbar(3);
  const BurnsideResult full = burnside_irreducible(irr);
  EXPECT_TRUE(full.irreducible);
  EXPECT_EQ(full.span_dim, irr.n * irr.n);
  EXPECT_EQ(burnside_span_exact(irr), irr.n * irr.n);
}

TEST(Repkit, DecomposeTypeD) {
  const FieldContext& ctx = make_field(5);
  const QRacahSequence s = classify(generate(Z(ctx, 2)));
  ASSERT_EQ(s.type, SequenceType::D);
  const Representation r = assemble(ExactMatrix(ctx, 3, 3), diag({s.theta(0), s.theta(2), s.theta(2)}), Z(ctx, 1));
  const Decomposition dec = decompose(r, s);
  EXPECT_TRUE(dec.pattern_ok);
  std::size_t total = 0;
  for (const auto& b : dec.blocks) {
    EXPECT_EQ(b.order, 1);
    total += b.dim;
  }
  EXPECT_EQ(total, 3u);
  EXPECT_EQ(dec.V1(2).cols(), 2u);
}

TEST(Repkit, DecomposeJordanCell) {
  const FieldContext& ctx = make_field(8);
  const QRacahSequence s = classify(generate(Q(ctx, 1)));
  ASSERT_EQ(s.type, SequenceType::Eq);
  ExactMatrix B = diag({s.theta(1), s.theta(1)});
  B(0, 1) = Z(ctx, 1);
  const Decomposition dec = decompose(assemble(ExactMatrix(ctx, 2, 2), B, Z(ctx, 1)), s);
  EXPECT_TRUE(dec.pattern_ok);
  EXPECT_EQ(dec.V1(1).cols(), 1u);
  EXPECT_EQ(dec.V2(1).cols(), 2u);
  ASSERT_EQ(dec.blocks.size(), 2u);
  EXPECT_EQ(dec.blocks[0].order, 2);
  EXPECT_EQ(dec.blocks[0].dim, 2u);
}

TEST(Repkit, DecomposeRequiresVanishing) {
  const FieldContext& ctx = make_field(5);
  const QRacahSequence s = classify(generate(Z(ctx, 2)));
  const Representation r = one_dim(Z(ctx, 0), Z(ctx, 7), Z(ctx, 1));
  EXPECT_THROW(decompose(r, s), VanishingFails);
  EXPECT_THROW(match_sequence(ExactMatrix::scalar(Z(ctx, 7) / Z(ctx, 13), 1)), NoQRacahMatch);
}

TEST(Repkit, OperatorsOnIrreducibleInstance) {
  for (int d : {3, 5, 6}) {
    const Representation& r = irreducible_of_dbar(d);
    const Decomposition dec = decompose(r, match_sequence(r.B));
    const SectionFiveOps ops = section5_ops(r, dec);
    for (long i = 0; i < dec.sequence.dbar(); ++i) {
      const ExactMatrix& V = dec.V1(i);
      if (V.cols() == 0) continue;
      EXPECT_TRUE((ops.T[0][static_cast<std::size_t>(i)] * V).is_zero()) << d << " " << i;
    }
    const Report rep = verify_operator_props(r, dec, ops);
    for (const auto& e : rep.entries) EXPECT_NE(e.status, Status::Fail) << d << " " << e.statement << " " << e.detail;
  }
}

TEST(Repkit, OneDimensionalModuleDimensionChecks) {
  const FieldContext& ctx = make_field(5);
  const Representation r = one_dim(Z(ctx, 2), Z(ctx, 2), Q(ctx, 1));
  const Decomposition dec = decompose(r, match_sequence(r.B));
  const SectionFiveOps ops = section5_ops(r, dec);
  for (const auto& e : verify_operator_props(r, dec, ops).entries) EXPECT_NE(e.status, Status::Fail) << e.statement;
  const Report dims = verify_dimension_theorems(r, dec, ops);
  for (const auto& e : dims.entries) EXPECT_NE(e.status, Status::Fail) << e.statement;
  const ReportEntry* br = dims.find("dimension.injectivity_dichotomy");
  ASSERT_NE(br, nullptr);
  EXPECT_EQ(br->detail, "branch a");
}

TEST(Repkit, DimensionChecksNeedIrreducible) {
  const FieldContext& ctx = make_field(3);
  const ExactMatrix I = ExactMatrix::identity(ctx, 2);
  const Representation r = assemble(I.shifted(Z(ctx, -1)), I.shifted(Z(ctx, -1)), Z(ctx, 1));
  const Decomposition dec = decompose(r, match_sequence(r.B));
  EXPECT_THROW(verify_dimension_theorems(r, dec, section5_ops(r, dec)), NotIrreducible);
}

TEST(Repkit, BurnsideBound) {
  EXPECT_EQ(burnside_bound(3), 4);
  EXPECT_EQ(burnside_bound(4), 6);
  for (int dbar = 2; dbar <= 20; ++dbar) EXPECT_GE(burnside_bound(dbar), dbar);
}

TEST(RepkitProperty, NullspacesAreExact) {
  for (int d : {3, 5, 7}) {
    for (const auto& e : catalog(d).entries) {
      const ExactMatrix& B = e.rep.B;
      for (long i = 0; i < make_field(d).dbar(); ++i) {
        const ExactMatrix shift = B.shifted(qracah_theta(Z(make_field(d), 2), i));
        EXPECT_TRUE((shift * shift.nullspace()).is_zero());
      }
      const ExactMatrix ns = e.rep.A.nullspace();
      EXPECT_TRUE((e.rep.A * ns).is_zero());
      EXPECT_EQ(ns.cols() + e.rep.A.rank(), e.rep.n);
      EXPECT_LE(e.analysis.span_dim, e.rep.n * e.rep.n);
    }
  }
}

// ---------------------------------------------------------------------------
// modulegen

TEST(Modulegen, OneDim) {
  const FieldContext& ctx = make_field(3);
  const Cyclotomic z = Cyclotomic::zero(ctx);
  const Representation r = one_dim(z, z, z);
  EXPECT_TRUE(r.C.is_zero());
  EXPECT_TRUE(r.alpha.is_zero());
  EXPECT_TRUE(r.omega.is_zero());
  EXPECT_TRUE(check_module(one_dim(Z(ctx, 2), Z(ctx, 2), Q(ctx, 1))).pass);
}

TEST(Modulegen, Criterion) {
  const FieldContext& ctx = make_field(5);
  const Cyclotomic two = Z(ctx, 2), three = Z(ctx, 3);
  EXPECT_TRUE(criterion({0, two, three, Q(ctx, 1)}));
  EXPECT_FALSE(criterion({ctx.dbar(), two, three, Q(ctx, 1)}));
  EXPECT_FALSE(criterion({1, two, three, (two * three).inverse()}));
  EXPECT_TRUE(criterion({1, two, three, Z(ctx, 7)}));
  EXPECT_THROW(criterion({1, Cyclotomic::zero(ctx), three, two}), ZeroParameter);
}

TEST(Modulegen, SolverReachesPredictedModule) {
  const FieldContext& ctx = make_field(5);
  const ModuleSpec s{2, Z(ctx, 2), Z(ctx, 3), Z(ctx, 1) + Q(ctx, 1)};
  ASSERT_TRUE(criterion(s));
  const auto reps = solve_tridiagonal(ctx, ansatz_for(s));
  ASSERT_FALSE(reps.empty());
  const SchurScalars sc = spec_scalars(s);
  for (const auto& r : reps) {
    EXPECT_TRUE(check_module(r).pass);
    EXPECT_EQ(scalar_action(r, CentralAction::Alpha), sc.alpha);
    EXPECT_EQ(scalar_action(r, CentralAction::Beta), sc.beta);
    EXPECT_EQ(r.A.charpoly(), poly_from_roots(ctx, leonard_spectrum(s.a, 2)));
    EXPECT_TRUE(burnside_irreducible(r).irreducible);
  }
}

TEST(Modulegen, ZeroDimensionalAnsatzIsOneDim) {
  const FieldContext& ctx = make_field(3);
  TridiagonalAnsatz z;
  z.thetas = {Z(ctx, 2)};
  z.gamma = Q(ctx, 1);
  const auto reps = solve_tridiagonal(ctx, z);
  ASSERT_FALSE(reps.empty());
  EXPECT_EQ(reps.front().n, 1u);
  EXPECT_TRUE(check_module(reps.front()).pass);
}

TEST(Modulegen, JordanTypeModuleAtOrderThree) {
  // n = 2 with b = q^2 gives the O(2) spectrum {2, -1, -1}
  const FieldContext& ctx = make_field(3);
  const ModuleSpec s{2, Z(ctx, 2), Q(ctx, 2), Z(ctx, 1) + Q(ctx, 1)};
  const SolveOutcome o = solve_shape(ctx, shape_of(ctx, split_ansatz_for(s)), SolverOptions{});
  ASSERT_FALSE(o.reps.empty());
  bool irreducible = false;
  for (const auto& r : o.reps) {
    EXPECT_TRUE(check_module(r).pass);
    if (burnside_irreducible(r).irreducible) irreducible = true;
  }
  EXPECT_TRUE(irreducible);
}

TEST(Modulegen, JordanAnsatzReachesAllInjectiveBranch) {
  for (int d : {5, 8}) {
    const FieldContext& ctx = make_field(d);
    for (SequenceType t : canonical_types(ctx)) {
      JordanAnsatz z;
      z.type = t;
      z.gamma = Z(ctx, 1);
      const SolveOutcome o = solve_shape(ctx, shape_of(ctx, z), SolverOptions{});
      ASSERT_FALSE(o.reps.empty()) << "d=" << d << " " << to_string(t);
      bool branch_b = false;
      for (const auto& r : o.reps) {
        EXPECT_TRUE(check_module(r).pass);
        const Analysis an = analyze(r);
        if (!an.irreducible) continue;
        EXPECT_EQ(r.n, static_cast<std::size_t>(ctx.dbar()));
        EXPECT_EQ(an.sequence_type, to_string(t));
        if (an.branch == Branch::B) branch_b = true;
        for (const auto& e : an.report.entries) EXPECT_NE(e.status, Status::Fail) << e.statement << " " << e.detail;
      }
      EXPECT_TRUE(branch_b) << "d=" << d << " " << to_string(t);
    }
  }
}

TEST(Modulegen, JordanAnsatzRejectsTypeD) {
  const FieldContext& ctx = make_field(5);
  JordanAnsatz z;
  z.gamma = Z(ctx, 1);
  EXPECT_THROW(shape_of(ctx, z), ShapeMismatch);
}

TEST(Modulegen, NoSolutionForInconsistentPins) {
  // with B = 2 and gamma = 0, alpha = 0 forces A = 0, and then beta is nonzero
  const FieldContext& ctx = make_field(5);
  TridiagonalAnsatz z;
  z.thetas = {Z(ctx, 2)};
  z.gamma = Cyclotomic::zero(ctx);
  z.alpha00 = Cyclotomic::zero(ctx);
  z.beta00 = Cyclotomic::zero(ctx);
  EXPECT_THROW(solve_tridiagonal(ctx, z), NoSolution);
}

TEST(Modulegen, SweepOrderThree) {
  const Catalog& cat = catalog(3);
  EXPECT_TRUE(cat.has_irreducible_of_dim(3));
  EXPECT_EQ(cat.irreducible_above(3), 0u);
  EXPECT_EQ(cat.unsound, 0u);
  EXPECT_FALSE(cat.notes.empty());
}

TEST(ModulegenProperty, CriterionAgreesWithBurnside) {
  for (int d : {3, 5, 6, 8}) {
    std::size_t matched = 0;
    for (const auto& e : catalog(d).entries) {
      EXPECT_TRUE(e.analysis.module_ok);
      for (const auto& m : e.analysis.matches) {
        ++matched;
        EXPECT_EQ(m.criterion, e.analysis.irreducible) << d << " " << e.origin;
      }
    }
    EXPECT_GT(matched, 0u) << d;
  }
}

TEST(ModulegenProperty, GaugeCompleteness) {
  for (int d : {3, 5, 7}) {
    const FieldContext& ctx = make_field(d);
    for (int n = 1; n <= 2; ++n) {
      const ModuleSpec s{n, Z(ctx, 2), Z(ctx, 3), Z(ctx, 1) + Q(ctx, 1)};
      const SchurScalars sc = spec_scalars(s);
      const GaugeCheck g = gauge_completeness(ctx, leonard_spectrum(s.b, n), sc.gamma, sc.alpha, SolverOptions{});
      EXPECT_TRUE(g.ok) << d << " " << n << " " << g.detail;
      EXPECT_GT(g.free_solutions, 0u);
    }
  }
}

TEST(ModulegenProperty, SweepIsDeterministic) {
  SolverOptions opt;
  opt.seed = 9;
  const Catalog a = sweep(make_field(5), opt), b = sweep(make_field(5), opt);
  ASSERT_EQ(a.entries.size(), b.entries.size());
  for (std::size_t k = 0; k < a.entries.size(); ++k)
    EXPECT_EQ(catalog_line(a.entries[k]).dump(), catalog_line(b.entries[k]).dump());
}

// ---------------------------------------------------------------------------
// polysys

TEST(PolySys, SolvesSmallSystem) {
  const FieldContext& ctx = make_field(5);
  // x + y = 3, x*y = 2  ->  {1, 2} in either order
  const MPoly x = MPoly::variable(ctx, 2, 0), y = MPoly::variable(ctx, 2, 1);
  std::vector<MPoly> eqs{x + y - MPoly::constant(Z(ctx, 3), 2), x * y - MPoly::constant(Z(ctx, 2), 2)};
  PolySolver s(ctx, SolverOptions{});
  const auto sols = s.solve(initial_solution(ctx, 2), eqs);
  ASSERT_EQ(sols.size(), 2u);
  for (const auto& sol : sols) {
    ASSERT_TRUE(sol.value[0].is_constant());
    ASSERT_TRUE(sol.value[1].is_constant());
    EXPECT_EQ(sol.value[0].constant_term() + sol.value[1].constant_term(), Z(ctx, 3));
    EXPECT_EQ(sol.value[0].constant_term() * sol.value[1].constant_term(), Z(ctx, 2));
  }
}

// ---------------------------------------------------------------------------
// io

TEST(IO, CyclotomicJson) {
  const FieldContext& ctx = make_field(5);
  const Cyclotomic x = parse_qexpr(ctx, "1/2*q - 3 + q^3");
  const json j = cyclotomic_to_json(x);
  EXPECT_EQ(j.at("d"), 5);
  EXPECT_EQ(j.at("coeffs").size(), 4u);
  EXPECT_EQ(j.at("coeffs")[0], "-3/1");
  EXPECT_EQ(j.at("coeffs")[1], "1/2");
  EXPECT_EQ(cyclotomic_from_json(j), x);
  EXPECT_THROW(cyclotomic_from_json(json{{"d", 5}, {"coeffs", {"1/1"}}}), ShapeMismatch);
}

TEST(IO, BundleRoundTrip) {
  const Representation& r = irreducible_of_dbar(5);
  const json j = bundle_to_json(r);
  const Representation back = bundle_from_json(json::parse(j.dump()));
  EXPECT_EQ(back.A, r.A);
  EXPECT_EQ(back.B, r.B);
  EXPECT_EQ(back.gamma, r.gamma);
  EXPECT_EQ(back.alpha, r.alpha);
  json bad = j;
  bad["n"] = 2;
  EXPECT_THROW(bundle_from_json(bad), ShapeMismatch);
}

TEST(IO, ReportAndAnalysis) {
  const Analysis a = analyze(irreducible_of_dbar(3));
  const json j = analysis_to_json(a);
  EXPECT_TRUE(j.at("irreducible").get<bool>());
  EXPECT_EQ(j.at("report").size(), a.report.entries.size());
  for (const auto& e : j.at("report")) EXPECT_NE(e.at("status"), "fail");
}

// ---------------------------------------------------------------------------
// verification plan

TEST(Verify, ReportsAreDeterministic) {
  VerifyConfig cfg;
  cfg.seed = 4;
  CatalogCache c1, c2;
  for (const auto& s : suite_names()) {
    const json a = report_to_json(run_suite(s, make_field(3), cfg, c1));
    const json b = report_to_json(run_suite(s, make_field(3), cfg, c2));
    EXPECT_EQ(a.dump(), b.dump()) << s;
  }
  CatalogCache c;
  EXPECT_THROW(run_suite("nope", make_field(3), cfg, c), Error);
}

TEST(Verify, AllSuitesPassAtOrderThree) {
  VerifyConfig cfg;
  CatalogCache cache;
  for (const auto& s : suite_names()) {
    const Report r = run_suite(s, make_field(3), cfg, cache);
    for (const auto& e : r.entries) EXPECT_EQ(e.status, Status::Pass) << s << " " << e.statement << " " << e.detail;
  }
}
