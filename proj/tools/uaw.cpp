#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "uaw/io.hpp"
#include "uaw/modular.hpp"
#include "uaw/verify.hpp"

using namespace uaw;

namespace {

constexpr int kOk = 0, kFailed = 1, kConfig = 2;

class ConfigError : public Error {
 public:
  using Error::Error;
};

std::vector<int> parse_orders(const std::string& text) {
  std::vector<int> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    std::size_t used = 0;
    int d = 0;
    try {
      d = std::stoi(item, &used);
    } catch (const std::exception&) {
      throw ParseError("expected an integer order, got '" + item + "'", 0);
    }
    if (used != item.size()) throw ParseError("expected an integer order, got '" + item + "'", used);
    if (!is_admissible_order(d)) throw DisallowedOrder("order " + std::to_string(d) + " is not admissible (need d >= 3, d != 4)");
    out.push_back(d);
  }
  if (out.empty()) throw ParseError("empty order list", 0);
  return out;
}

std::vector<std::string> parse_suites(const std::string& text) {
  if (text.empty() || text == "all") return suite_names();
  std::vector<std::string> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (std::find(suite_names().begin(), suite_names().end(), item) == suite_names().end())
      throw ConfigError("unknown suite '" + item + "'");
    out.push_back(item);
  }
  return out;
}

void emit(const json& j, const std::string& out) {
  if (out.empty() || out == "-") {
    std::cout << j.dump(2) << "\n";
    return;
  }
  std::ofstream f(out);
  if (!f) throw Error("cannot open " + out);
  f << j.dump(2) << "\n";
}

void progress(const std::string& s) { std::cerr << s << "\n"; }

int cmd_field(int d) {
  const FieldContext& ctx = make_field(d);
  json modulus = json::array();
  for (const auto& c : ctx.modulus()) modulus.push_back(c.get_str());
  std::cout << json{{"d", d}, {"dbar", ctx.dbar()}, {"degree", ctx.degree()}, {"modulus", modulus},
                    {"pbw_bound", bounded_pbw_count(ctx.dbar())}, {"burnside_bound", burnside_bound(ctx.dbar())},
                    {"modular_prime", modular_image(ctx).prime()}}
                   .dump(2)
            << "\n";
  return kOk;
}

int cmd_cheb(int n) {
  json coeffs = json::array();
  for (const auto& c : cheb_poly(n).coeffs) coeffs.push_back(c.get_str());
  std::cout << json{{"n", n}, {"coeffs", coeffs}}.dump(2) << "\n";
  return kOk;
}

int cmd_qracah(int d, const std::string& a_text) {
  const FieldContext& ctx = make_field(d);
  const QRacahSequence s = classify(generate(parse_qexpr(ctx, a_text)));
  json thetas = json::array();
  for (long i = 0; i < s.dbar(); ++i) thetas.push_back(print_qexpr(s.theta(i)));
  json j{{"d", d}, {"a", print_qexpr(s.a)}, {"thetas", thetas}, {"type", to_string(s.type)}};
  if (s.type != SequenceType::D) {
    const Congruence c = normalize_congruence(s);
    j["canonical_type"] = to_string(c.canonical.type);
    j["shift"] = c.shift;
  }
  json classes = json::array();
  for (const auto& m : multiplicity_profile(s)) classes.push_back(m.indices);
  j["multiplicity_classes"] = classes;
  std::cout << j.dump(2) << "\n";
  return kOk;
}

int cmd_nf(int d, const std::string& expr, std::size_t cap) {
  const FieldContext& ctx = make_field(d);
  std::cout << normal_form(parse_ncpoly(ctx, expr), cap).to_string() << "\n";
  return kOk;
}

int cmd_gen(int d, const std::string& out, const SolverOptions& opt) {
  const FieldContext& ctx = make_field(d);
  const Catalog cat = sweep(ctx, opt, progress);
  std::ofstream file;
  if (!out.empty() && out != "-") {
    file.open(out);
    if (!file) throw Error("cannot open " + out);
  }
  std::ostream& os = file.is_open() ? static_cast<std::ostream&>(file) : std::cout;
  os << catalog_meta(cat).dump() << "\n";
  for (const auto& e : cat.entries) os << catalog_line(e).dump() << "\n";
  return cat.unsound == 0 && cat.has_irreducible_of_dim(static_cast<std::size_t>(ctx.dbar())) &&
                 cat.irreducible_above(static_cast<std::size_t>(ctx.dbar())) == 0
             ? kOk
             : kFailed;
}

int cmd_verify(const std::vector<int>& orders, const std::vector<std::string>& suites, const VerifyConfig& cfg,
               const std::string& out) {
  CatalogCache cache;
  json results = json::array();
  bool all = true;
  for (int d : orders) {
    const FieldContext& ctx = make_field(d);
    for (const auto& s : suites) {
      progress("d=" + std::to_string(d) + " suite=" + s);
      const Report r = run_suite(s, ctx, cfg, cache);
      all = all && r.all_pass();
      results.push_back({{"d", d}, {"suite", s}, {"pass", r.all_pass()}, {"entries", report_to_json(r)}});
    }
  }
  json plan{{"d", orders},
            {"suites", suites},
            {"degree_cap", cfg.degree_cap},
            {"solver_cap", cfg.solver.degree_cap},
            {"seed", cfg.seed}};
  emit({{"plan", plan}, {"pass", all}, {"results", results}}, out);
  return all ? kOk : kFailed;
}

int cmd_analyze(const std::string& in) {
  std::ifstream f(in);
  if (!f) throw Error("cannot open " + in);
  json j;
  try {
    j = json::parse(f);
  } catch (const json::parse_error& e) {
    throw ParseError(e.what(), e.byte);
  }
  const Representation r = bundle_from_json(j);
  const Analysis a = analyze(r);
  std::cout << analysis_to_json(a).dump(2) << "\n";
  return a.module_ok && a.report.all_pass() ? kOk : kFailed;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Finite-dimensional modules of the universal Askey-Wilson algebra at roots of unity"};
  app.require_subcommand(1);

  int d = 3, n = 0;
  std::string orders = "3", suites = "all", a_text, expr, out, in;
  std::size_t degree_cap = RewriteSystem::kDefaultDegreeCap;
  int solver_cap = SolverOptions{}.degree_cap;
  std::uint64_t seed = 0;

  auto* field = app.add_subcommand("field", "describe the coefficient field Q(q)");
  field->add_option("--d", d, "order of q")->required();

  auto* cheb = app.add_subcommand("cheb", "coefficients of the Chebyshev polynomial T_n");
  cheb->add_option("--n", n, "degree")->required()->check(CLI::NonNegativeNumber);

  auto* qr_group = app.add_subcommand("qracah", "q-Racah sequences");
  qr_group->require_subcommand(1);
  auto* qr = qr_group->add_subcommand("classify", "classify the q-Racah sequence with parameter a");
  qr->add_option("--d", d, "order of q")->required();
  qr->add_option("--a", a_text, "parameter, e.g. q^2 or 1/2*q")->required();

  auto* nf = app.add_subcommand("nf", "normal form of an element of the algebra");
  nf->add_option("--d", d, "order of q")->required();
  nf->add_option("--expr", expr, "element, e.g. \"C*B - q^2*B*C\"")->required();
  nf->add_option("--degree-cap", degree_cap, "word length cap")->check(CLI::PositiveNumber);

  auto* gen_group = app.add_subcommand("gen", "module generation");
  gen_group->require_subcommand(1);
  auto* gen = gen_group->add_subcommand("sweep", "sweep for modules and write a JSON-lines catalog");
  gen->add_option("--d", d, "order of q")->required();
  gen->add_option("--out", out, "output file (default stdout)");
  gen->add_option("--solver-cap", solver_cap, "univariate degree cap of the solver")->check(CLI::PositiveNumber);
  gen->add_option("--seed", seed, "sampling seed");

  auto* verify = app.add_subcommand("verify", "run verification suites");
  verify->add_option("--d", orders, "comma-separated orders of q");
  verify->add_option("--suite", suites, "comma-separated suites or 'all'");
  verify->add_option("--degree-cap", degree_cap, "word length cap")->check(CLI::PositiveNumber);
  verify->add_option("--solver-cap", solver_cap, "univariate degree cap of the solver")->check(CLI::PositiveNumber);
  verify->add_option("--seed", seed, "sampling seed");
  verify->add_option("--out", out, "report file (default stdout)");

  auto* an = app.add_subcommand("analyze", "analyze a representation bundle");
  an->add_option("--in", in, "bundle JSON file")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? kOk : kConfig;
  }

  SolverOptions solver;
  solver.degree_cap = solver_cap;
  solver.seed = seed;

  try {
    if (*field) return cmd_field(d);
    if (*cheb) return cmd_cheb(n);
    if (*qr) return cmd_qracah(d, a_text);
    if (*nf) return cmd_nf(d, expr, degree_cap);
    if (*gen) return cmd_gen(d, out, solver);
    if (*verify) {
      const std::vector<int> ds = parse_orders(orders);
      const std::vector<std::string> ss = parse_suites(suites);
      VerifyConfig cfg;
      cfg.degree_cap = degree_cap;
      cfg.solver = solver;
      cfg.seed = seed;
      cfg.progress = progress;
      return cmd_verify(ds, ss, cfg, out);
    }
    if (*an) return cmd_analyze(in);
  } catch (const ConfigError& e) {
    std::cerr << "configuration error: " << e.what() << "\n";
    return kConfig;
  } catch (const DisallowedOrder& e) {
    std::cerr << "configuration error: " << e.what() << "\n";
    return kConfig;
  } catch (const ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return kConfig;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kFailed;
  }
  return kOk;
}
