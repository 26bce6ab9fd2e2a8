#include <gtest/gtest.h>

#include <random>

#include "uaw/graded_quotient.hpp"
#include "uaw/qexpr.hpp"
#include "uaw/qracah.hpp"
#include "uaw/verify.hpp"

using namespace uaw;

namespace {

Cyclotomic Q(const FieldContext& ctx, long k) { return Cyclotomic::q_power(ctx, k); }
Cyclotomic Z(const FieldContext& ctx, long v) { return Cyclotomic::from_integer(ctx, v); }
Cyclotomic E(const FieldContext& ctx, const char* s) { return parse_qexpr(ctx, s); }
NCPoly W(const FieldContext& ctx, const char* w) { return NCPoly::word(ctx, w); }

}  // namespace

// ---------------------------------------------------------------------------
// cyclotomic

TEST(Cyclotomic, Dbar) {
  EXPECT_EQ(make_field(6).dbar(), 3);
  EXPECT_EQ(make_field(8).dbar(), 4);
  EXPECT_EQ(make_field(7).dbar(), 7);
}

TEST(Cyclotomic, DisallowedOrders) {
  for (int d : {1, 2, 4}) EXPECT_THROW(make_field(d), DisallowedOrder);
}

TEST(Cyclotomic, ModulusOfOrderThree) {
  const FieldContext& ctx = make_field(3);
  EXPECT_EQ(ctx.degree(), 2);
  ASSERT_EQ(ctx.modulus().size(), 3u);
  for (const auto& c : ctx.modulus()) EXPECT_EQ(c, 1);
}

TEST(Cyclotomic, ModulusDividesXdMinusOne) {
  for (int d = 3; d <= 24; ++d) {
    if (!is_admissible_order(d)) continue;
    const FieldContext& ctx = make_field(d);
    EXPECT_EQ(ctx.modulus().back(), 1) << d;
    EXPECT_EQ(Q(ctx, d), Cyclotomic::one(ctx)) << d;
  }
}

TEST(Cyclotomic, Arithmetic) {
  const FieldContext& ctx = make_field(3);
  EXPECT_EQ(Q(ctx, 1) * Q(ctx, 1), E(ctx, "-1 - q"));
  for (int d : {3, 5, 8, 12}) {
    const FieldContext& c = make_field(d);
    EXPECT_EQ(Q(c, 1).inverse(), Q(c, d - 1));
  }
  const Cyclotomic x = E(ctx, "1/2*q + 3");
  EXPECT_TRUE((x + (-x)).is_zero());
  EXPECT_THROW(Cyclotomic::zero(ctx).inverse(), DivisionByZero);
  EXPECT_THROW(Q(ctx, 1) + Q(make_field(5), 1), ContextMismatch);
}

TEST(Cyclotomic, QPowerAtDbar) {
  for (int d : {6, 8, 10, 12}) EXPECT_EQ(Q(make_field(d), d / 2), Z(make_field(d), -1)) << d;
  for (int d : {3, 5, 7}) EXPECT_EQ(Q(make_field(d), d), Z(make_field(d), 1)) << d;
  EXPECT_EQ(Q(make_field(5), -3), Q(make_field(5), 2));
}

TEST(CyclotomicProperty, OrderOfQSquaredIsDbar) {
  for (int d = 3; d <= 24; ++d) {
    if (!is_admissible_order(d)) continue;
    const FieldContext& ctx = make_field(d);
    EXPECT_EQ(Q(ctx, 2 * ctx.dbar()), Cyclotomic::one(ctx)) << d;
    for (int k = 1; k < ctx.dbar(); ++k) EXPECT_NE(Q(ctx, 2 * k), Cyclotomic::one(ctx)) << d << " " << k;
  }
}

TEST(CyclotomicProperty, InverseAndReduction) {
  std::mt19937_64 rng(7);
  for (int d : {3, 5, 7, 8, 9, 12}) {
    const FieldContext& ctx = make_field(d);
    for (int t = 0; t < 30; ++t) {
      const Cyclotomic x = random_scalar(ctx, rng) + random_scalar(ctx, rng) * Q(ctx, 3);
      if (x.is_zero()) continue;
      EXPECT_EQ(x * x.inverse(), Cyclotomic::one(ctx));
      const auto cs = x.coefficients();
      EXPECT_EQ(cs.size(), static_cast<std::size_t>(ctx.degree()));
      EXPECT_EQ(Cyclotomic::from_coefficients(ctx, cs), x);
    }
  }
}

// ---------------------------------------------------------------------------
// qexpr

TEST(QExpr, Examples) {
  const FieldContext& ctx = make_field(5);
  EXPECT_EQ(E(ctx, "q^2 - q^-2"), Q(ctx, 2) - Q(ctx, -2));
  EXPECT_EQ(E(ctx, "1/2*q + 3"), Cyclotomic::from_rational(ctx, Rational(1, 2)) * Q(ctx, 1) + Z(ctx, 3));
  EXPECT_THROW(E(ctx, "q^"), ParseError);
  try {
    E(ctx, "q^");
  } catch (const ParseError& e) {
    EXPECT_EQ(e.position(), 2u);
  }
}

TEST(QExprProperty, RoundTrip) {
  std::mt19937_64 rng(11);
  for (int d : {3, 5, 6, 7, 8, 12}) {
    const FieldContext& ctx = make_field(d);
    for (int t = 0; t < 40; ++t) {
      const Cyclotomic x = random_scalar(ctx, rng) + random_scalar(ctx, rng) - random_scalar(ctx, rng);
      EXPECT_EQ(parse_qexpr(ctx, print_qexpr(x)), x) << print_qexpr(x);
    }
  }
}

// ---------------------------------------------------------------------------
// chebyshev

TEST(Chebyshev, SmallDegrees) {
  EXPECT_EQ(cheb_poly(0).coeffs, std::vector<Integer>{2});
  EXPECT_EQ(cheb_poly(1).coeffs, (std::vector<Integer>{0, 1}));
  EXPECT_EQ(cheb_poly(2).coeffs, (std::vector<Integer>{-2, 0, 1}));
  EXPECT_EQ(cheb_poly(3).coeffs, (std::vector<Integer>{0, -3, 0, 1}));
}

TEST(Chebyshev, EvaluatesPowerSums) {
  const FieldContext& ctx = make_field(7);
  const Cyclotomic y = E(ctx, "2 + q");
  for (int n = 0; n <= 9; ++n) EXPECT_EQ(cheb_eval(n, y + y.inverse()), pow(y, n) + pow(y, -n)) << n;
}

TEST(Chebyshev, FactorizationExamples) {
  EXPECT_TRUE(residual_is_zero(factorization_residual(Q(make_field(3), 1))));
  for (int d = 3; d <= 12; ++d) {
    if (!is_admissible_order(d)) continue;
    EXPECT_TRUE(residual_is_zero(factorization_residual(Z(make_field(d), 1)))) << d;
  }
  EXPECT_THROW(factorization_residual(Cyclotomic::zero(make_field(3))), ZeroParameter);
}

TEST(ChebyshevProperty, RecurrenceAndMonic) {
  std::mt19937_64 rng(3);
  const FieldContext& ctx = make_field(5);
  for (int t = 0; t < 10; ++t) {
    const Cyclotomic x = random_scalar(ctx, rng);
    for (int n = 1; n <= 10; ++n) EXPECT_EQ(cheb_eval(n + 1, x), x * cheb_eval(n, x) - cheb_eval(n - 1, x));
  }
  for (int n = 1; n <= 15; ++n) {
    EXPECT_EQ(cheb_poly(n).coeffs.size(), static_cast<std::size_t>(n) + 1);
    EXPECT_EQ(cheb_poly(n).coeffs.back(), 1);
  }
}

// ---------------------------------------------------------------------------
// ncalgebra

TEST(NCAlgebra, GammaElementShape) {
  const FieldContext& ctx = make_field(5);
  const QScalars k(ctx);
  const Cyclotomic s = k.q_plus_qinv * k.q2_minus_qm2.inverse();
  const NCPoly expected = NCPoly::scalar(k.q_plus_qinv) * W(ctx, "C") + NCPoly::scalar(s * Q(ctx, 1)) * W(ctx, "AB") -
                          NCPoly::scalar(s * Q(ctx, -1)) * W(ctx, "BA");
  EXPECT_EQ(defining_element(ctx, CentralExpr::Gamma), expected);
}

TEST(NCAlgebra, DefiningRelationsReduceToCentralSymbols) {
  const FieldContext& ctx = make_field(7);
  EXPECT_EQ(normal_form(defining_element(ctx, CentralExpr::Alpha)), NCPoly::central(ctx, Central::Alpha));
  EXPECT_EQ(normal_form(defining_element(ctx, CentralExpr::Beta)), NCPoly::central(ctx, Central::Beta));
  EXPECT_EQ(normal_form(defining_element(ctx, CentralExpr::Gamma)), NCPoly::central(ctx, Central::Gamma));
  EXPECT_EQ(normal_form(casimir(ctx)), NCPoly::central(ctx, Central::Omega));
}

TEST(NCAlgebra, ReorderingBA) {
  // gamma relation solved for BA: BA = q^2 AB + q(q^2 - q^-2) C - (q^2 - 1) gamma
  for (int d : {3, 5, 8}) {
    const FieldContext& ctx = make_field(d);
    const NCPoly expected = NCPoly::scalar(Q(ctx, 2)) * W(ctx, "AB") +
                            NCPoly::scalar(Q(ctx, 3) - Q(ctx, -1)) * W(ctx, "C") -
                            NCPoly::scalar(Q(ctx, 2) - Z(ctx, 1)) * NCPoly::central(ctx, Central::Gamma);
    EXPECT_EQ(normal_form(W(ctx, "BA")), expected) << d;
  }
}

TEST(NCAlgebra, SwapSymmetryExchangesAlphaAndBeta) {
  // A <-> B with q -> q^-1 sends the alpha expression to the beta expression
  const FieldContext& ctx = make_field(7);
  auto swap = [&](const NCPoly& p) {
    NCPoly out(ctx);
    for (const auto& [m, c] : p.terms()) {
      std::string w = m.word;
      for (char& ch : w) ch = ch == 'A' ? 'B' : ch == 'B' ? 'A' : ch;
      const auto cs = c.coefficients();
      Cyclotomic conj = Cyclotomic::zero(ctx);
      for (std::size_t k = 0; k < cs.size(); ++k)
        conj += Cyclotomic::from_rational(ctx, cs[k]) * Q(ctx, -static_cast<long>(k));
      out.add_term(Monomial{w, m.central}, conj);
    }
    return out;
  };
  const NCPoly a = alpha_from_ab(ctx), b = beta_from_ab(ctx);
  EXPECT_EQ(normal_form(swap(a)), normal_form(b));
}

TEST(NCAlgebra, CasimirCoefficientOfABC) {
  const FieldContext& ctx = make_field(5);
  EXPECT_EQ(casimir(ctx).coefficient(Monomial{"ABC", {}}), Q(ctx, 1));
}

TEST(NCAlgebra, MultiplyBasics) {
  const FieldContext& ctx = make_field(3);
  EXPECT_EQ(W(ctx, "A") * W(ctx, "B"), W(ctx, "AB"));
  const NCPoly p = parse_ncpoly(ctx, "(q^2-q^-2)*A*B*g + 3*C");
  EXPECT_EQ(NCPoly::one(ctx) * p, p);
  const NCPoly g = NCPoly::central(ctx, Central::Gamma);
  EXPECT_EQ(g * W(ctx, "A"), W(ctx, "A") * g);
  EXPECT_TRUE(commutator(W(ctx, "A"), W(ctx, "A")).is_zero());
  EXPECT_TRUE(normal_form(commutator(g, p)).is_zero());
  EXPECT_THROW(W(ctx, "A") * W(make_field(5), "A"), ContextMismatch);
}

TEST(NCAlgebra, ParsePrintRoundTrip) {
  const FieldContext& ctx = make_field(7);
  for (const char* s : {"(q^2-q^-2)*A*B*g + 3*C", "1/2*W*a - q*B*B*C", "A*C*b*g*g", "0", "5"}) {
    const NCPoly p = parse_ncpoly(ctx, s);
    EXPECT_EQ(parse_ncpoly(ctx, p.to_string()), p) << s;
  }
  EXPECT_THROW(parse_ncpoly(ctx, "A*"), ParseError);
}

TEST(NCAlgebra, ChebImage) {
  const FieldContext& ctx = make_field(5);
  EXPECT_EQ(cheb_image(ctx, 'A', 0), NCPoly::scalar(Z(ctx, 2)));
  EXPECT_EQ(cheb_image(ctx, 'A', 1), W(ctx, "A"));
  EXPECT_EQ(cheb_image(ctx, 'B', 2), W(ctx, "BB") - NCPoly::scalar(Z(ctx, 2)));
}

TEST(NCAlgebra, Centrality) {
  VerifyConfig cfg;
  for (int d : {3, 5, 6}) {
    const Report r = suite_central(make_field(d), cfg);
    for (const auto& e : r.entries) EXPECT_EQ(e.status, Status::Pass) << d << " " << e.statement;
  }
}

TEST(NCAlgebra, ChebyshevCentrality) {
  VerifyConfig cfg;
  for (int d : {3, 5, 6}) {
    const Report r = suite_chebyshev(make_field(d), cfg);
    for (const auto& e : r.entries) EXPECT_EQ(e.status, Status::Pass) << d << " " << e.statement;
  }
}

TEST(NCAlgebra, DegreeOverflow) {
  const FieldContext& ctx = make_field(3);
  EXPECT_THROW(normal_form(W(ctx, "CCCCBBBBAAAA"), 6), DegreeOverflow);
}

TEST(NCAlgebra, Census) {
  EXPECT_EQ(bounded_pbw_count(1), 1);
  EXPECT_EQ(bounded_pbw_count(3), 19);
  EXPECT_EQ(bounded_pbw_count(4), 37);
  EXPECT_EQ(pbw_census(make_field(3)), 19);
  EXPECT_EQ(pbw_census(make_field(8)), 37);
  EXPECT_EQ(pbw_census(make_field(5)), 61);
}

TEST(NCAlgebra, CompletionAddsOnlyABjC) {
  const FieldContext& ctx = make_field(5);
  const RewriteSystem& rs = RewriteSystem::for_field(ctx);
  rs.complete_to(10);
  const CompletionStats st = rs.completion();
  EXPECT_EQ(st.base_rules, 4);
  for (const auto& w : st.added_lhs) {
    EXPECT_EQ(w.front(), 'A');
    EXPECT_EQ(w.back(), 'C');
    EXPECT_EQ(w.substr(1, w.size() - 2), std::string(w.size() - 2, 'B'));
  }
}

TEST(NCAlgebra, GradedQuotientMatchesRewriter) {
  const FieldContext& ctx = make_field(3);
  const std::vector<long> expected{1, 4, 13, 32, 71};
  for (int N = 0; N <= 4; ++N) {
    EXPECT_EQ(graded_quotient(ctx, N).dimension, expected[static_cast<std::size_t>(N)]);
    EXPECT_EQ(rewriter_weighted_count(ctx, N), expected[static_cast<std::size_t>(N)]);
    EXPECT_EQ(weighted_pbw_count(N), expected[static_cast<std::size_t>(N)]);
  }
}

TEST(NCAlgebraProperty, NormalFormIsIdempotentAndMultiplicative) {
  for (int d : {3, 5, 8}) {
    const FieldContext& ctx = make_field(d);
    const RewriteSystem& rs = RewriteSystem::for_field(ctx);
    std::mt19937_64 rng(static_cast<std::uint64_t>(d));
    for (int t = 0; t < 60; ++t) {
      const NCPoly p = random_ncpoly(ctx, rng, 6, 3);
      const NCPoly nf = normal_form(p);
      EXPECT_EQ(normal_form(nf), nf);
      for (const auto& [m, c] : nf.terms()) EXPECT_TRUE(rs.is_normal_word(m.word)) << m.word;
    }
    for (int t = 0; t < 30; ++t) {
      const NCPoly p = random_ncpoly(ctx, rng, 4, 2), r = random_ncpoly(ctx, rng, 4, 2);
      EXPECT_EQ(normal_form(p * r), normal_form(normal_form(p) * normal_form(r)));
      EXPECT_EQ(normal_form(p + r), normal_form(p) + normal_form(r));
    }
  }
}

// ---------------------------------------------------------------------------
// qracah

TEST(QRacah, GenerateExamples) {
  const FieldContext& ctx = make_field(7);
  const QRacahSequence one = generate(Z(ctx, 1));
  const QRacahSequence qs = generate(Q(ctx, 1));
  ASSERT_EQ(one.dbar(), 7);
  for (long i = 0; i < 7; ++i) {
    EXPECT_EQ(one.theta(i), Q(ctx, 2 * i) + Q(ctx, -2 * i));
    EXPECT_EQ(qs.theta(i), Q(ctx, 1 - 2 * i) + Q(ctx, 2 * i - 1));
  }
  const QRacahSequence g = generate(Z(ctx, 3));
  for (long i = 0; i < 7; ++i)
    for (long j = i + 1; j < 7; ++j) EXPECT_NE(g.theta(i), g.theta(j));
  EXPECT_THROW(generate(Cyclotomic::zero(ctx)), ZeroParameter);
}

TEST(QRacah, RecurrenceDetectsPerturbation) {
  const FieldContext& ctx = make_field(5);
  QRacahSequence s = generate(E(ctx, "1 + q"));
  EXPECT_TRUE(recurrence_check(s).all_pass());
  s.thetas[2] += Z(ctx, 1);
  const RecurrenceReport r = recurrence_check(s);
  EXPECT_FALSE(r.all_pass());
  EXPECT_FALSE(r.sum_ok[2]);
}

TEST(QRacah, Classification) {
  EXPECT_EQ(classify(generate(Z(make_field(3), 1))).type, SequenceType::O2);
  EXPECT_EQ(classify(generate(Z(make_field(3), -1))).type, SequenceType::Om2);
  EXPECT_EQ(classify(generate(Q(make_field(8), 1))).type, SequenceType::Eq);
  EXPECT_EQ(classify(generate(Z(make_field(8), 1))).type, SequenceType::E2);
  EXPECT_EQ(classify(generate(Z(make_field(5), 2))).type, SequenceType::D);
}

TEST(QRacah, CongruenceExamples) {
  // theta_i = -q^(2i) - q^(-2i) with dbar even normalizes onto E2
  const FieldContext& c8 = make_field(8);
  const QRacahSequence neg = classify(generate(Z(c8, -1)));
  EXPECT_EQ(neg.type, SequenceType::Unclassified);
  const Congruence cn = normalize_congruence(neg);
  EXPECT_EQ(cn.canonical.type, SequenceType::E2);
  EXPECT_TRUE(same_values(neg, cn.canonical, cn.shift));
  EXPECT_EQ(mod(cn.shift, 4), 2);

  // theta_i = q^(2i-1) + q^(1-2i) with dbar odd normalizes onto O2 or Om2
  for (int d : {5, 6, 7, 10}) {
    const FieldContext& ctx = make_field(d);
    const QRacahSequence s = classify(generate(Q(ctx, 1)));
    const Congruence c = normalize_congruence(s);
    const SequenceType want = Q(ctx, ctx.dbar()) == Z(ctx, 1) ? SequenceType::O2 : SequenceType::Om2;
    EXPECT_EQ(c.canonical.type, want) << d;
    EXPECT_TRUE(same_values(s, c.canonical, c.shift)) << d;
    EXPECT_EQ(congruence_match_count(s), 1) << d;
  }

  for (SequenceType t : canonical_types(c8)) {
    const QRacahSequence s = canonical_sequence(c8, t);
    const Congruence c = normalize_congruence(s);
    EXPECT_EQ(c.shift, 0);
    EXPECT_EQ(c.canonical.type, t);
  }
}

TEST(QRacah, MultiplicityProfiles) {
  auto classes = [](const QRacahSequence& s) {
    std::vector<std::vector<int>> out;
    for (const auto& m : multiplicity_profile(s)) out.push_back(m.indices);
    return out;
  };
  const FieldContext& c8 = make_field(8);
  EXPECT_EQ(classes(generate(Z(c8, 1))), (std::vector<std::vector<int>>{{0}, {1, 3}, {2}}));
  EXPECT_EQ(classes(generate(Q(c8, 1))), (std::vector<std::vector<int>>{{0, 1}, {2, 3}}));
  EXPECT_EQ(classes(generate(Z(make_field(5), 3))).size(), 5u);
}

TEST(QRacahProperty, SuitePassesUpToSixteen) {
  VerifyConfig cfg;
  for (int d = 3; d <= 16; ++d) {
    if (!is_admissible_order(d)) continue;
    const Report r = suite_qracah(make_field(d), cfg);
    for (const auto& e : r.entries) EXPECT_EQ(e.status, Status::Pass) << d << " " << e.statement << " " << e.detail;
  }
}
