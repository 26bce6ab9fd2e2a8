#pragma once

// Verification suites. Each suite runs on one field and returns a report
// with one entry per checked statement.

#include <chrono>
#include <functional>
#include <map>
#include <memory>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "uaw/graded_quotient.hpp"
#include "uaw/modulegen.hpp"

namespace uaw {

inline const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names{"central", "chebyshev", "qracah",   "basis",
                                              "modules", "section5",  "section6", "bounds"};
  return names;
}

struct VerifyConfig {
  std::size_t degree_cap = RewriteSystem::kDefaultDegreeCap;
  SolverOptions solver;
  std::uint64_t seed = 0;
  int quotient_degree = 4;
  std::function<void(const std::string&)> progress;
};

// ---------------------------------------------------------------------------
// Random samples

inline Cyclotomic random_scalar(const FieldContext& ctx, std::mt19937_64& rng) {
  std::uniform_int_distribution<long> num(-4, 4), den(1, 3);
  std::uniform_int_distribution<int> qp(0, ctx.order() - 1);
  long n = num(rng);
  if (n == 0) n = 1;
  return Cyclotomic::from_rational(ctx, Rational(n, den(rng))) * Cyclotomic::q_power(ctx, qp(rng));
}

inline NCPoly random_ncpoly(const FieldContext& ctx, std::mt19937_64& rng, int max_len, int terms) {
  static constexpr char kLetters[] = {'A', 'B', 'C'};
  std::uniform_int_distribution<int> len(0, max_len), letter(0, 2), coin(0, 7), central(0, 3);
  NCPoly p(ctx);
  for (int t = 0; t < terms; ++t) {
    Monomial m;
    const int l = len(rng);
    for (int k = 0; k < l; ++k) m.word.push_back(kLetters[letter(rng)]);
    if (coin(rng) == 0) ++m.central[static_cast<std::size_t>(central(rng))];
    p.add_term(m, random_scalar(ctx, rng));
  }
  return p;
}

// Samples of the q-Racah parameter: the deterministic pool, then random
// q^j * (small rational) until `count` values are collected.
inline std::vector<Cyclotomic> parameter_samples(const FieldContext& ctx, std::size_t count, std::uint64_t seed) {
  std::vector<Cyclotomic> out = parameter_pool(ctx);
  std::mt19937_64 rng(seed);
  while (out.size() < count) out.push_back(random_scalar(ctx, rng));
  if (out.size() > count) out.resize(count);
  return out;
}

// ---------------------------------------------------------------------------
// Rewriter-side counts

// Monomials (normal word, central part) of weighted degree <= N: A, B, C
// weigh 1, alpha, beta, gamma weigh 2 and Omega weighs 3.
inline long rewriter_weighted_count(const FieldContext& ctx, int N) {
  const RewriteSystem& rs = RewriteSystem::for_field(ctx);
  rs.complete_to(static_cast<std::size_t>(N));
  std::vector<long> normal_by_len(static_cast<std::size_t>(N) + 1, 0);
  for (const auto& w : words_up_to(N))
    if (rs.is_normal_word(w)) ++normal_by_len[w.size()];
  long total = 0;
  for (int l = 0; 3 * l <= N; ++l)
    for (int r = 0; 3 * l + 2 * r <= N; ++r)
      for (int s = 0; 3 * l + 2 * (r + s) <= N; ++s)
        for (int t = 0; 3 * l + 2 * (r + s + t) <= N; ++t) {
          const int room = N - 3 * l - 2 * (r + s + t);
          for (int len = 0; len <= room; ++len) total += normal_by_len[static_cast<std::size_t>(len)];
        }
  return total;
}

// Words A^i B^j C^k with i, j, k < dbar and ijk = 0 that the rewriter
// leaves in normal form.
inline long pbw_census(const FieldContext& ctx) {
  const int dbar = ctx.dbar();
  const RewriteSystem& rs = RewriteSystem::for_field(ctx);
  rs.complete_to(static_cast<std::size_t>(3 * (dbar - 1)));
  long n = 0;
  for (int i = 0; i < dbar; ++i)
    for (int j = 0; j < dbar; ++j)
      for (int k = 0; k < dbar; ++k)
        if ((i == 0 || j == 0 || k == 0) &&
            rs.is_normal_word(std::string(static_cast<std::size_t>(i), 'A') + std::string(static_cast<std::size_t>(j), 'B') +
                              std::string(static_cast<std::size_t>(k), 'C')))
          ++n;
  return n;
}

// ---------------------------------------------------------------------------
// Suites on the algebra

inline Report suite_central(const FieldContext& ctx, const VerifyConfig& cfg) {
  Report rep;
  const std::vector<std::pair<std::string, NCPoly>> xs{
      {"alpha", defining_element(ctx, CentralExpr::Alpha)},
      {"beta", defining_element(ctx, CentralExpr::Beta)},
      {"gamma", defining_element(ctx, CentralExpr::Gamma)},
      {"casimir", casimir(ctx)}};
  for (const auto& [name, x] : xs)
    for (const char* g : {"A", "B", "C"}) {
      const NCPoly nf = normal_form(commutator(x, NCPoly::word(ctx, g)), cfg.degree_cap);
      rep.add("centrality." + name + "_with_" + g, nf.is_zero(), nf.is_zero() ? "" : nf.to_string());
    }
  rep.add("formulas.alpha_from_ab",
          normal_form(alpha_from_ab(ctx), cfg.degree_cap) == NCPoly::central(ctx, Central::Alpha));
  rep.add("formulas.beta_from_ab", normal_form(beta_from_ab(ctx), cfg.degree_cap) == NCPoly::central(ctx, Central::Beta));
  rep.add("formulas.c_from_ab", normal_form(c_from_ab(ctx), cfg.degree_cap) == NCPoly::word(ctx, "C"));
  return rep;
}

inline Report suite_chebyshev(const FieldContext& ctx, const VerifyConfig& cfg) {
  Report rep;
  const int dbar = ctx.dbar();
  for (char g : {'A', 'B', 'C'})
    for (const char* h : {"A", "B", "C"}) {
      const std::string id = std::string("chebyshev.central_") + g + "_with_" + h;
      try {
        const NCPoly nf = normal_form(commutator(cheb_image(ctx, g, dbar), NCPoly::word(ctx, h)), cfg.degree_cap);
        rep.add(id, nf.is_zero());
      } catch (const DegreeOverflow& e) {
        rep.skip(id, e.what());
      }
    }

  bool residual = true;
  for (const auto& a : parameter_samples(ctx, 20, cfg.seed))
    if (!residual_is_zero(factorization_residual(a))) residual = false;
  rep.add("chebyshev.factorization_residual", residual, "20 samples");

  // cheb_image(B, dbar) minus the product-form scalar equals prod (B - theta_i)
  const Cyclotomic a = Cyclotomic::q_power(ctx, 1);
  const QRacahSequence s = generate(a);
  NCPoly prod = NCPoly::one(ctx);
  for (long i = 0; i < dbar; ++i) prod = prod * (NCPoly::word(ctx, "B") - NCPoly::scalar(s.theta(i)));
  const NCPoly lhs = cheb_image(ctx, 'B', dbar) - NCPoly::scalar(pow(a, dbar) + pow(a, -dbar));
  rep.add("chebyshev.product_form_in_B", normal_form(lhs - prod, cfg.degree_cap).is_zero());

  bool recurrence = true, monic = true;
  std::mt19937_64 rng(cfg.seed + 1);
  for (int t = 0; t < 4; ++t) {
    const Cyclotomic x = random_scalar(ctx, rng);
    for (int n = 1; n <= 10; ++n)
      if (cheb_eval(n + 1, x) != x * cheb_eval(n, x) - cheb_eval(n - 1, x)) recurrence = false;
  }
  for (int n = 1; n <= 12; ++n) {
    const IntPolynomial t = cheb_poly(n);
    if (t.coeffs.size() != static_cast<std::size_t>(n) + 1 || t.coeffs.back() != 1) monic = false;
  }
  rep.add("chebyshev.three_term_recurrence", recurrence);
  rep.add("chebyshev.monic_of_degree_n", monic);
  return rep;
}

inline Report suite_qracah(const FieldContext& ctx, const VerifyConfig& cfg) {
  Report rep;
  bool recur = true, pm2 = true, round_trip = true, unique = true, mult = true, literal = true;
  std::string first_bad;
  const auto samples = parameter_samples(ctx, std::max<std::size_t>(50, parameter_pool(ctx).size()), cfg.seed);
  std::size_t non_d = 0;
  for (const auto& a : samples) {
    const QRacahSequence s = classify(generate(a));
    if (!recurrence_check(s).all_pass()) recur = false, first_bad = s.a.to_string();
    for (long i = 0; i < s.dbar(); ++i)
      if (!plus_minus_two_conditions(s, i).consistent()) pm2 = false;
    if (s.type == SequenceType::D) {
      if (!profile_matches_prediction(s, SequenceType::D)) mult = false;
      continue;
    }
    ++non_d;
    const Congruence c = normalize_congruence(s);
    if (!same_values(s, c.canonical, c.shift)) round_trip = false;
    if (congruence_match_count(s) != 1) unique = false;
    for (long i = 0; i < s.dbar(); ++i)
      for (long j = 0; j < s.dbar(); ++j)
        if ((s.theta(i) == s.theta(j)) != predicted_equal(c.canonical.type, i + c.shift, j + c.shift, s.dbar()))
          mult = false;
    if (s.type != SequenceType::Unclassified && c.shift != 0) literal = false;
  }
  for (SequenceType t : canonical_types(ctx)) {
    const QRacahSequence s = classify(generate(canonical_parameter(ctx, t)));
    if (s.type != t || !profile_matches_prediction(s, t)) literal = false;
  }
  const std::string n = std::to_string(samples.size()) + " samples, " + std::to_string(non_d) + " non-D";
  rep.add("qracah.recurrences", recur, recur ? n : first_bad);
  rep.add("qracah.plus_minus_two_equivalence", pm2, n);
  rep.add("qracah.congruence_round_trip", round_trip, n);
  rep.add("qracah.unique_canonical_type", unique, n);
  rep.add("qracah.multiplicity_pattern", mult, n);
  rep.add("qracah.literal_classification", literal);
  return rep;
}

inline Report suite_basis(const FieldContext& ctx, const VerifyConfig& cfg) {
  Report rep;
  const int dbar = ctx.dbar();
  const long census = pbw_census(ctx);
  const long expected = 3L * dbar * dbar - 3L * dbar + 1;
  rep.add("basis.pbw_census", census == expected && census == bounded_pbw_count(dbar),
          std::to_string(census) + " of " + std::to_string(expected));

  std::mt19937_64 rng(cfg.seed);
  bool idem = true, normal_out = true;
  const RewriteSystem& rs = RewriteSystem::for_field(ctx);
  for (int t = 0; t < 200; ++t) {
    const NCPoly p = random_ncpoly(ctx, rng, 6, 3);
    const NCPoly nf = normal_form(p, cfg.degree_cap);
    if (!(normal_form(nf, cfg.degree_cap) == nf)) idem = false;
    for (const auto& [m, c] : nf.terms())
      if (!rs.is_normal_word(m.word)) normal_out = false;
  }
  bool hom = true, additive = true;
  for (int t = 0; t < 100; ++t) {
    const NCPoly p = random_ncpoly(ctx, rng, 4, 2), r = random_ncpoly(ctx, rng, 4, 2);
    const NCPoly np = normal_form(p, cfg.degree_cap), nr = normal_form(r, cfg.degree_cap);
    if (!(normal_form(p * r, cfg.degree_cap) == normal_form(np * nr, cfg.degree_cap))) hom = false;
    if (!(normal_form(p + r, cfg.degree_cap) == np + nr)) additive = false;
  }
  rep.add("basis.idempotence", idem, "200 samples");
  rep.add("basis.homomorphism", hom, "100 pairs");
  rep.add("basis.additivity", additive, "100 pairs");
  rep.add("basis.outputs_are_normal", normal_out);

  const CompletionStats st = rs.completion();
  bool shape = true;
  for (const auto& w : st.added_lhs) {
    const bool ok = w.size() >= 4 && w.front() == 'A' && w.back() == 'C' &&
                    w.find_first_not_of('B', 1) == w.size() - 1;
    if (!ok) shape = false;
  }
  rep.add("basis.completion_adds_only_ABjC", shape,
          std::to_string(st.added_rules) + " rules through length " + std::to_string(st.completed_length));

  bool agree = true;
  std::string dims;
  for (int N = 0; N <= cfg.quotient_degree; ++N) {
    const long q = graded_quotient(ctx, N).dimension;
    const long r = rewriter_weighted_count(ctx, N);
    if (q != r) agree = false;
    dims += (N ? "," : "") + std::to_string(q) + (q == r ? "" : "!=" + std::to_string(r));
  }
  rep.add("basis.graded_quotient_agreement", agree, dims);
  return rep;
}

// ---------------------------------------------------------------------------
// Suites on module catalogs

// Sweeps are expensive; one catalog per field is shared by the module
// suites of a run.
class CatalogCache {
 public:
  const Catalog& get(const FieldContext& ctx, const VerifyConfig& cfg) {
    auto& slot = cache_[ctx.order()];
    if (!slot) {
      SolverOptions opt = cfg.solver;
      opt.seed = cfg.seed;
      slot = std::make_unique<Catalog>(sweep(ctx, opt, cfg.progress));
    }
    return *slot;
  }

 private:
  std::map<int, std::unique_ptr<Catalog>> cache_;
};

// Folds per-instance reports into one entry per statement.
inline Report aggregate(const Catalog& cat, const std::function<bool(const std::string&)>& keep) {
  struct Tally {
    std::size_t pass = 0, fail = 0, skip = 0;
    std::string first_fail;
  };
  std::map<std::string, Tally> tally;
  std::vector<std::string> order;
  for (std::size_t k = 0; k < cat.entries.size(); ++k) {
    const auto& e = cat.entries[k];
    if (!e.analysis.irreducible) continue;
    for (const auto& r : e.analysis.report.entries) {
      if (!keep(r.statement)) continue;
      if (!tally.count(r.statement)) order.push_back(r.statement);
      Tally& t = tally[r.statement];
      if (r.status == Status::Pass) ++t.pass;
      else if (r.status == Status::Skip) ++t.skip;
      else {
        ++t.fail;
        if (t.first_fail.empty()) t.first_fail = "entry " + std::to_string(k) + ": " + r.detail;
      }
    }
  }
  Report rep;
  for (const auto& s : order) {
    const Tally& t = tally[s];
    std::string detail = std::to_string(t.pass) + " pass, " + std::to_string(t.fail) + " fail, " +
                         std::to_string(t.skip) + " skip";
    if (t.fail) detail += "; " + t.first_fail;
    if (t.fail) rep.add(s, false, detail);
    else if (t.pass) rep.add(s, true, detail);
    else rep.skip(s, detail);
  }
  return rep;
}

inline bool starts_with(const std::string& s, const char* prefix) { return s.rfind(prefix, 0) == 0; }

inline ExactMatrix direct_sum(const ExactMatrix& x, const ExactMatrix& y) {
  ExactMatrix m(x.context(), x.rows() + y.rows(), x.cols() + y.cols());
  for (std::size_t i = 0; i < x.rows(); ++i)
    for (std::size_t j = 0; j < x.cols(); ++j) m(i, j) = x(i, j);
  for (std::size_t i = 0; i < y.rows(); ++i)
    for (std::size_t j = 0; j < y.cols(); ++j) m(x.rows() + i, x.cols() + j) = y(i, j);
  return m;
}

inline Report suite_modules(const FieldContext& ctx, const VerifyConfig& cfg, CatalogCache& cache) {
  const Catalog& cat = cache.get(ctx, cfg);
  const std::size_t dbar = static_cast<std::size_t>(ctx.dbar());
  Report rep;

  bool sound = cat.unsound == 0, within = true;
  std::size_t matched = 0, disagree = 0;
  for (const auto& e : cat.entries) {
    if (!e.analysis.module_ok) sound = false;
    if (e.analysis.span_dim > e.rep.n * e.rep.n) within = false;
    if (!e.analysis.matches.empty()) ++matched;
    for (const auto& m : e.analysis.matches)
      if (m.criterion != e.analysis.irreducible) {
        ++disagree;
        break;
      }
  }
  rep.add("modules.solver_soundness", sound, std::to_string(cat.entries.size()) + " solutions");
  rep.add("modules.tightness", cat.has_irreducible_of_dim(dbar), "dimension " + std::to_string(dbar));
  rep.add("modules.no_irreducible_above_dbar", cat.irreducible_above(dbar) == 0);
  rep.add("modules.span_within_full_algebra", within);
  rep.add("modules.criterion_consistency", disagree == 0,
          std::to_string(matched) + " matched, " + std::to_string(disagree) + " disagree");

  // one-dimensional family
  const Cyclotomic zero = Cyclotomic::zero(ctx), two = Cyclotomic::from_integer(ctx, 2);
  const Representation z = one_dim(zero, zero, zero);
  const Representation t = one_dim(two, two, Cyclotomic::q_power(ctx, 1));
  rep.add("modules.one_dim_family",
          z.C.is_zero() && z.alpha.is_zero() && z.beta.is_zero() && z.omega.is_zero() && check_module(t).pass &&
              scalar_action(t, CentralAction::ChebA) == cheb_eval(ctx.dbar(), two) && burnside_irreducible(t).irreducible);

  // gauge completeness at n <= 2
  bool gauge = true;
  std::string gdetail;
  for (int n = 1; n <= 2 && n <= ctx.dbar() - 1; ++n) {
    const ModuleSpec s{n, two, Cyclotomic::from_integer(ctx, 3), Cyclotomic::one(ctx) + Cyclotomic::q_power(ctx, 1)};
    const SchurScalars sc = spec_scalars(s);
    const GaugeCheck g = gauge_completeness(ctx, leonard_spectrum(s.b, n), sc.gamma, sc.alpha, cfg.solver);
    if (!g.ok) gauge = false, gdetail = g.detail;
  }
  rep.add("modules.gauge_completeness", gauge, gdetail);

  // a direct sum of two irreducibles with different scalars is caught
  const Representation* first = nullptr;
  const Representation* second = nullptr;
  for (const auto& e : cat.entries) {
    if (!e.analysis.irreducible || e.rep.n < 2) continue;
    if (!first) first = &e.rep;
    else if (!(scalar_action(*first, CentralAction::Omega) == scalar_action(e.rep, CentralAction::Omega)) &&
             first->n + e.rep.n <= 6) {
      second = &e.rep;
      break;
    }
  }
  if (first && second) {
    const Representation sum =
        assemble(direct_sum(first->A, second->A), direct_sum(first->B, second->B), first->gamma);
    bool caught = false;
    if (first->gamma == second->gamma) {
      for (auto w : kAllCentralActions) {
        try {
          scalar_action(sum, w);
        } catch (const NotScalar&) {
          caught = true;
        }
      }
    } else {
      caught = !check_module(sum).pass || !sum.alpha.scalar_value() || !sum.beta.scalar_value();
    }
    rep.add("modules.direct_sum_not_scalar", caught && !burnside_irreducible(sum).irreducible);
  } else {
    rep.skip("modules.direct_sum_not_scalar", "no pair of irreducibles");
  }
  return rep;
}

inline Report suite_section5(const FieldContext& ctx, const VerifyConfig& cfg, CatalogCache& cache) {
  return aggregate(cache.get(ctx, cfg), [](const std::string& s) {
    return starts_with(s, "operators.") || starts_with(s, "vanishing.") || starts_with(s, "decomposition.") ||
           starts_with(s, "schur.") || starts_with(s, "module.");
  });
}

inline Report suite_section6(const FieldContext& ctx, const VerifyConfig& cfg, CatalogCache& cache) {
  return aggregate(cache.get(ctx, cfg), [](const std::string& s) {
    return starts_with(s, "dimension.") && s != "dimension.at_most_dbar" && s != "dimension.burnside_bound";
  });
}

inline Report suite_bounds(const FieldContext& ctx, const VerifyConfig& cfg, CatalogCache& cache) {
  const Catalog& cat = cache.get(ctx, cfg);
  Report rep = aggregate(cat, [](const std::string& s) {
    return s == "dimension.at_most_dbar" || s == "dimension.burnside_bound";
  });
  const std::size_t dbar = static_cast<std::size_t>(ctx.dbar());
  std::size_t largest = 0;
  for (const auto& e : cat.entries)
    if (e.analysis.irreducible) largest = std::max(largest, e.rep.n);
  rep.add("bounds.largest_irreducible_is_dbar", largest == dbar,
          "largest " + std::to_string(largest) + ", dbar " + std::to_string(dbar));
  return rep;
}

inline Report run_suite(const std::string& name, const FieldContext& ctx, const VerifyConfig& cfg,
                        CatalogCache& cache) {
  if (name == "central") return suite_central(ctx, cfg);
  if (name == "chebyshev") return suite_chebyshev(ctx, cfg);
  if (name == "qracah") return suite_qracah(ctx, cfg);
  if (name == "basis") return suite_basis(ctx, cfg);
  if (name == "modules") return suite_modules(ctx, cfg, cache);
  if (name == "section5") return suite_section5(ctx, cfg, cache);
  if (name == "section6") return suite_section6(ctx, cfg, cache);
  if (name == "bounds") return suite_bounds(ctx, cfg, cache);
  throw Error("unknown suite '" + name + "'");
}

}  // namespace uaw
