// Command-line front end: every library operation behind a subcommand, JSON
// on stdout.  Exit codes: 0 success, 1 identity/tolerance failure, 2 usage.

#include <CLI11.hpp>

#include <exception>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "jacksov/jack.hpp"
#include "jacksov/json_io.hpp"
#include "jacksov/partition.hpp"
#include "jacksov/qop.hpp"
#include "jacksov/quad.hpp"
#include "jacksov/rational.hpp"
#include "jacksov/scalar.hpp"
#include "jacksov/sov.hpp"
#include "jacksov/sympoly.hpp"
#include "jacksov/verify.hpp"

namespace {

using namespace jacksov;

Partition parse_lambda(const std::string& text, long n) {
  std::vector<long> parts;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    std::size_t used = 0;
    const long v = std::stol(item, &used);
    if (used != item.size()) {
      throw std::invalid_argument("bad partition entry '" + item + "'");
    }
    parts.push_back(v);
  }
  if (static_cast<long>(parts.size()) > n) {
    throw std::invalid_argument("partition longer than the variable count");
  }
  parts.resize(static_cast<std::size_t>(n), 0);
  return Partition(std::move(parts));
}

void emit(const Json& j) { std::cout << j.dump(2) << "\n"; }

template <class S>
int cmd_jack(long n, const Partition& lambda, const S& g) {
  JackTable<S> table(g);
  emit(json_of(table.jack(lambda)));
  return 0;
}

template <class S>
int cmd_qz_apply(long n, const std::string& poly_text, const S& g) {
  const SymPoly<S> p = sympoly_from_json<S>(Json::parse(poly_text));
  if (p.n != n) {
    throw std::invalid_argument("--n disagrees with the polynomial");
  }
  emit(json_of(qz_apply(p, g)));
  return 0;
}

template <class S>
int cmd_q_eigenvalue(long n, const Partition& lambda, const S& g) {
  const ZPoly<S> sum_route = q_eigenvalue_sum(lambda, n, g);
  const S beta = beta_lambda(lambda, n, g);
  ZPoly<S> prop_route;
  {
    std::vector<S> cs;
    const ZPoly<S> f = f_polynomial(lambda, n, g);
    for (const S& c : f.coeffs()) cs.push_back(field_div(c, beta));
    prop_route = ZPoly<S>(std::move(cs));
  }
  const ZPoly<S> diff = sum_route - prop_route;
  emit(Json{{"sum_route", json_of_zpoly(sum_route)},
            {"proportionality_route", json_of_zpoly(prop_route)},
            {"difference", json_of_zpoly(diff)}});
  return diff.is_zero() ? 0 : 1;
}

template <class S>
int cmd_separate(long n, const Partition& lambda, const S& g) {
  JackTable<S> table(g);
  const MultiZPoly<S> separated =
      separate_via_q(table.jack(lambda).poly, n, g);
  const S c = eval_at_ones(lambda, n, g);
  const ZPoly<S> q = q_eigenvalue_sum(lambda, n, g);
  Json factors = Json::array();
  MultiZPoly<S> product{c};
  for (long k = 1; k <= n; ++k) {
    factors.push_back(json_of_zpoly(q));
    product = product * from_zpoly(q, k);
  }
  emit(Json{{"separated", json_of(separated)},
            {"c", json_of(c)},
            {"factors", std::move(factors)}});
  return separated == product ? 0 : 1;
}

template <class S>
int cmd_reconstruct(long n, const Partition& lambda, const S& g) {
  ReconstructTable<S> rebuilt(g);
  JackTable<S> table(g);
  const JackExpansion<S>& rec = rebuilt.reconstruct(lambda);
  const bool match = rec.poly == table.jack(lambda).poly;
  emit(Json{{"expansion", json_of(rec)}, {"matches_eigen_solve", match}});
  return match ? 0 : 1;
}

int cmd_quad_verify(const std::string& suite, const std::vector<Rational>& gs,
                    double tol, long nodes) {
  std::vector<QuadProblem> problems =
      suite == "extended" ? extended_suite(gs) : default_suite(gs);
  QuadOptions opt;
  opt.nodes = nodes;
  opt.tolerance = tol;
  const SuiteResult res = run_suite(problems, opt);
  Json rows = Json::array();
  long failures = 0;
  for (const SuiteRow& row : res.rows) {
    Json r = json_of(row.report);
    r["name"] = row.problem.name;
    r["pass"] = row.pass;
    rows.push_back(std::move(r));
    if (!row.pass) ++failures;
  }
  emit(Json{{"reports", std::move(rows)},
            {"summary",
             Json{{"total", static_cast<long>(res.rows.size())},
                  {"failures", failures},
                  {"pass", res.all_pass}}}});
  return res.all_pass ? 0 : 1;
}

int cmd_verify(const VerifyConfig& cfg) {
  const std::vector<VerifyReport> reports = run_verify(cfg);
  Json rows = Json::array();
  long cases = 0, failures = 0;
  for (const VerifyReport& r : reports) {
    rows.push_back(json_of(r));
    cases += r.cases;
    failures += static_cast<long>(r.failures.size());
  }
  emit(Json{{"reports", std::move(rows)},
            {"summary",
             Json{{"cases", cases},
                  {"failures", failures},
                  {"pass", failures == 0}}}});
  return failures == 0 ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"separation-of-variables toolkit for Jack polynomials"};
  app.require_subcommand(1);

  long n = 2;
  std::string lambda_text;
  std::string g_text;  // empty = symbolic coupling
  std::string poly_text;
  std::string suite = "default";
  double tol = 1e-6;
  long nodes = 64;
  long max_weight = 4;
  long max_n = 3;

  auto add_algebra_opts = [&](CLI::App* sub, bool needs_lambda) {
    sub->add_option("--n", n, "number of variables")->required();
    if (needs_lambda) {
      sub->add_option("--lambda", lambda_text, "partition, comma separated")
          ->required();
    }
    sub->add_option("--g", g_text,
                    "coupling as p/q; omit for the symbolic coupling");
  };

  CLI::App* sub_jack = app.add_subcommand("jack", "expand one eigenfunction");
  add_algebra_opts(sub_jack, true);
  CLI::App* sub_qz = app.add_subcommand(
      "qz-apply", "apply the one-parameter operator to an m-basis polynomial");
  add_algebra_opts(sub_qz, false);
  sub_qz->add_option("--poly", poly_text, "polynomial as JSON")->required();
  CLI::App* sub_qe = app.add_subcommand(
      "q-eigenvalue", "eigenvalue polynomial by both routes");
  add_algebra_opts(sub_qe, true);
  CLI::App* sub_sep =
      app.add_subcommand("separate", "factorised multi-variable image");
  add_algebra_opts(sub_sep, true);
  CLI::App* sub_rec = app.add_subcommand(
      "reconstruct", "rebuild the eigenfunction dimension by dimension");
  add_algebra_opts(sub_rec, true);

  CLI::App* sub_quad =
      app.add_subcommand("quad-verify", "numeric quadrature cross-checks");
  std::vector<std::string> quad_gs;
  sub_quad->add_option("--suite", suite, "default or extended")
      ->check(CLI::IsMember({"default", "extended"}));
  sub_quad->add_option("--g", quad_gs, "couplings to sweep (repeatable)");
  sub_quad->add_option("--tol", tol, "relative error bound");
  sub_quad->add_option("--nodes", nodes, "quadrature nodes per axis");

  CLI::App* sub_verify =
      app.add_subcommand("verify", "run every exact and numeric suite");
  std::string verify_g = "symbolic";
  sub_verify->add_option("--max-weight", max_weight, "partition weight bound");
  sub_verify->add_option("--max-n", max_n, "variable count bound");
  sub_verify->add_option("--g", verify_g, "symbolic or a rational value");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    const bool symbolic = g_text.empty();
    auto dispatch = [&](auto&& fn) {
      if (symbolic) return fn(RatFunc::g());
      return fn(parse_rational(g_text));
    };
    if (sub_jack->parsed()) {
      const Partition lambda = parse_lambda(lambda_text, n);
      return dispatch([&](const auto& g) { return cmd_jack(n, lambda, g); });
    }
    if (sub_qz->parsed()) {
      return dispatch(
          [&](const auto& g) { return cmd_qz_apply(n, poly_text, g); });
    }
    if (sub_qe->parsed()) {
      const Partition lambda = parse_lambda(lambda_text, n);
      return dispatch(
          [&](const auto& g) { return cmd_q_eigenvalue(n, lambda, g); });
    }
    if (sub_sep->parsed()) {
      const Partition lambda = parse_lambda(lambda_text, n);
      return dispatch(
          [&](const auto& g) { return cmd_separate(n, lambda, g); });
    }
    if (sub_rec->parsed()) {
      const Partition lambda = parse_lambda(lambda_text, n);
      return dispatch(
          [&](const auto& g) { return cmd_reconstruct(n, lambda, g); });
    }
    if (sub_quad->parsed()) {
      std::vector<Rational> gs;
      for (const std::string& s : quad_gs) gs.push_back(parse_rational(s));
      if (gs.empty()) gs = {Rational(1), Rational(2), Rational(3)};
      return cmd_quad_verify(suite, gs, tol, nodes);
    }
    if (sub_verify->parsed()) {
      VerifyConfig cfg;
      cfg.max_weight = max_weight;
      cfg.max_n = max_n;
      cfg.quad_nodes = nodes;
      cfg.quad_tolerance = tol;
      cfg.symbolic = verify_g == "symbolic";
      if (!cfg.symbolic) cfg.g_value = parse_rational(verify_g);
      return cmd_verify(cfg);
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
