#pragma once

// Consolidated identity harness: runs every exact suite (round-trips, eigen
// relations, operator identities, separation, reconstruction) over a bounded
// weight/variable range, then the numeric quadrature suite, and reports
// failures with serialized digests of both sides.

#include <algorithm>
#include <chrono>
#include <cstdio>
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

namespace jacksov {

struct VerifyFailure {
  std::string case_id;
  std::string expected_digest;
  std::string actual_digest;
};

struct VerifyReport {
  std::string suite;
  std::string g_mode;
  long cases = 0;
  std::vector<VerifyFailure> failures;
  double wall_seconds = 0.0;
  bool passed() const { return failures.empty(); }
};

struct VerifyConfig {
  long max_weight = 4;
  long max_n = 3;
  bool symbolic = true;
  Rational g_value{1, 2};  // used when symbolic is off
  long quad_nodes = 64;
  double quad_tolerance = 1e-6;
};

inline Json json_of(const VerifyReport& r) {
  Json fails = Json::array();
  for (const VerifyFailure& f : r.failures) {
    fails.push_back(Json{{"case", f.case_id},
                         {"expected", f.expected_digest},
                         {"actual", f.actual_digest}});
  }
  return Json{{"suite", r.suite},
              {"g_mode", r.g_mode},
              {"cases", r.cases},
              {"failures", std::move(fails)},
              {"wall_seconds", r.wall_seconds}};
}

namespace verify_detail {

inline std::string digest(const Json& j) {
  std::string s = j.dump();
  if (s.size() > 240) {
    s.resize(240);
    s += "...";
  }
  return s;
}

inline std::string case_id(long n, const Partition& lambda) {
  std::string s = "n=" + std::to_string(n) + " lambda=";
  s += json_of(lambda).dump();
  return s;
}

class SuiteTimer {
 public:
  explicit SuiteTimer(VerifyReport& r)
      : report_(r), start_(std::chrono::steady_clock::now()) {}
  ~SuiteTimer() {
    report_.wall_seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() -
                                      start_)
            .count();
  }

 private:
  VerifyReport& report_;
  std::chrono::steady_clock::time_point start_;
};

template <class S>
void check_eq(VerifyReport& r, const std::string& id, const S& expected,
              const S& actual) {
  ++r.cases;
  if (!(expected == actual)) {
    r.failures.push_back(
        {id, digest(json_of(expected)), digest(json_of(actual))});
  }
}

template <class S>
VerifyReport suite_sympoly_roundtrip(const VerifyConfig& cfg, const S& g,
                                     const std::string& mode) {
  VerifyReport r{"sympoly-roundtrip", mode};
  SuiteTimer timer(r);
  // a mildly nontrivial coefficient so serialization is exercised for real
  const S c = field_div(pochhammer(g, 3), S(g + S(2)));
  for (long n = 1; n <= cfg.max_n; ++n) {
    for (long w = 0; w <= cfg.max_weight; ++w) {
      for (const Partition& lambda : enumerate(n, w)) {
        const SymPoly<S> m = m_basis<S>(lambda, n);
        check_eq(r, case_id(n, lambda) + " raw", m, collect_m(expand_raw(m)));
        check_eq(r, case_id(n, lambda) + " e-basis", m,
                 from_e_expansion(expand_in_e(m), n));
        const SymPoly<S> p = scale(m, c);
        check_eq(r, case_id(n, lambda) + " json", p,
                 sympoly_from_json<S>(json_of(p)));
      }
    }
  }
  return r;
}

template <class S>
VerifyReport suite_jack_eigen(const VerifyConfig& cfg, const S& g,
                              const std::string& mode) {
  VerifyReport r{"jack-eigen", mode};
  SuiteTimer timer(r);
  for (long n = 1; n <= cfg.max_n; ++n) {
    JackTable<S> table(g);
    for (long w = 0; w <= cfg.max_weight; ++w) {
      for (const Partition& lambda : enumerate(n, w)) {
        const SymPoly<S>& jx = table.jack(lambda).poly;
        check_eq(r, case_id(n, lambda),
                 scale(jx, h_eigenvalue(lambda, n, g)), apply_H(jx, g));
      }
    }
  }
  return r;
}

template <class S>
VerifyReport suite_qop_eigen(const VerifyConfig& cfg, const S& g,
                             const std::string& mode) {
  VerifyReport r{"qop-eigen", mode};
  SuiteTimer timer(r);
  for (long n = 2; n <= cfg.max_n; ++n) {
    JackTable<S> table(g);
    for (long w = 0; w <= cfg.max_weight; ++w) {
      for (const Partition& lambda : enumerate(n, w)) {
        const SymPoly<S>& jx = table.jack(lambda).poly;
        check_eq(r, case_id(n, lambda),
                 separated_product(q_eigenvalue_sum(lambda, n, g), jx),
                 qz_apply(jx, g));
      }
    }
  }
  return r;
}

template <class S>
VerifyReport suite_qop_proportionality(const VerifyConfig& cfg, const S& g,
                                       const std::string& mode) {
  VerifyReport r{"qop-proportionality", mode};
  SuiteTimer timer(r);
  for (long n = 2; n <= cfg.max_n; ++n) {
    for (long w = 0; w <= cfg.max_weight; ++w) {
      for (const Partition& lambda : enumerate(n, w)) {
        ++r.cases;
        const ZPoly<S> lhs = f_polynomial(lambda, n, g);
        const ZPoly<S> rhs = q_eigenvalue_sum(lambda, n, g) *
                             ZPoly<S>(beta_lambda(lambda, n, g));
        if (!(lhs == rhs)) {
          r.failures.push_back({case_id(n, lambda),
                                digest(json_of_zpoly(rhs)),
                                digest(json_of_zpoly(lhs))});
        }
      }
    }
  }
  return r;
}

template <class S>
VerifyReport suite_qop_triangularity(const VerifyConfig& cfg, const S& g,
                                     const std::string& mode) {
  VerifyReport r{"qop-triangularity", mode};
  SuiteTimer timer(r);
  for (long n = 2; n <= cfg.max_n; ++n) {
    for (long w = 0; w <= cfg.max_weight; ++w) {
      for (const Partition& lambda : enumerate(n, w)) {
        ++r.cases;
        const auto ls = lower_set(lambda);
        const SymZPoly<S> img = qz_apply(E_basis<S>(lambda, n), g);
        bool inside = true;
        for (const SymPoly<S>& layer : img.coeffs) {
          for (const auto& [mu, c] : layer.terms) {
            if (std::find(ls.begin(), ls.end(), mu) == ls.end()) {
              inside = false;
            }
          }
        }
        if (!inside) {
          r.failures.push_back({case_id(n, lambda),
                                "support within the dominance lower set",
                                digest(json_of(img))});
        }
      }
    }
  }
  return r;
}

template <class S>
VerifyReport suite_qop_baxter(const VerifyConfig& cfg, const S& g,
                              const std::string& mode) {
  VerifyReport r{"qop-baxter", mode};
  SuiteTimer timer(r);
  for (long n = 2; n <= cfg.max_n; ++n) {
    for (long w = 0; w <= cfg.max_weight; ++w) {
      for (const Partition& lambda : enumerate(n, w)) {
        ++r.cases;
        const std::vector<S> res = baxter_residual(lambda, n, g);
        bool zero = true;
        for (const S& v : res) {
          if (!is_zero(v)) zero = false;
        }
        if (!zero) {
          Json arr = Json::array();
          for (const S& v : res) arr.push_back(json_of(v));
          r.failures.push_back(
              {case_id(n, lambda), "all-zero residual", digest(arr)});
        }
      }
    }
  }
  return r;
}

template <class S>
VerifyReport suite_sov_chain(const VerifyConfig& cfg, const S& g,
                             const std::string& mode) {
  VerifyReport r{"sov-chain", mode};
  SuiteTimer timer(r);
  for (long n = 2; n <= cfg.max_n; ++n) {
    JackTable<S> table(g);
    for (long w = 0; w <= cfg.max_weight; ++w) {
      for (const Partition& lambda : enumerate(n, w)) {
        const SymPoly<S>& jx = table.jack(lambda).poly;
        const MultiZPoly<S> direct = separate_via_q(jx, n, g);
        check_eq(r, case_id(n, lambda) + " chain",
                 direct, separate_via_chain(jx, n, g));
        MultiZPoly<S> product{eval_at_ones(lambda, n, g)};
        const ZPoly<S> q = q_eigenvalue_sum(lambda, n, g);
        for (long k = 1; k <= n; ++k) {
          product = product * from_zpoly(q, k);
        }
        check_eq(r, case_id(n, lambda) + " factorised", product, direct);
      }
    }
  }
  return r;
}

template <class S>
VerifyReport suite_sov_reconstruct(const VerifyConfig& cfg, const S& g,
                                   const std::string& mode) {
  VerifyReport r{"sov-reconstruct", mode};
  SuiteTimer timer(r);
  for (long n = 2; n <= cfg.max_n; ++n) {
    JackTable<S> table(g);
    ReconstructTable<S> rebuilt(g);
    for (long w = 0; w <= cfg.max_weight; ++w) {
      for (const Partition& lambda : enumerate(n, w)) {
        check_eq(r, case_id(n, lambda), table.jack(lambda).poly,
                 rebuilt.reconstruct(lambda).poly);
      }
    }
  }
  return r;
}

inline VerifyReport suite_quad_default(const VerifyConfig& cfg) {
  VerifyReport r{"quad-default", "numeric"};
  SuiteTimer timer(r);
  QuadOptions opt;
  opt.nodes = cfg.quad_nodes;
  opt.tolerance = cfg.quad_tolerance;
  const std::vector<Rational> gs{Rational(1), Rational(2), Rational(3)};
  const SuiteResult res = run_suite(default_suite(gs), opt);
  for (const SuiteRow& row : res.rows) {
    ++r.cases;
    if (!row.pass) {
      char buf[64];
      std::snprintf(buf, sizeof buf, "%.17g", row.report.expected);
      std::string expected = buf;
      std::snprintf(buf, sizeof buf, "%.17g (rel %.3g)", row.report.computed,
                    row.report.relative_error);
      r.failures.push_back({row.problem.name, expected, buf});
    }
  }
  return r;
}

template <class S>
std::vector<VerifyReport> run_exact_suites(const VerifyConfig& cfg, const S& g,
                                           const std::string& mode) {
  std::vector<VerifyReport> out;
  out.push_back(suite_sympoly_roundtrip(cfg, g, mode));
  out.push_back(suite_jack_eigen(cfg, g, mode));
  out.push_back(suite_qop_eigen(cfg, g, mode));
  out.push_back(suite_qop_proportionality(cfg, g, mode));
  out.push_back(suite_qop_triangularity(cfg, g, mode));
  out.push_back(suite_qop_baxter(cfg, g, mode));
  out.push_back(suite_sov_chain(cfg, g, mode));
  out.push_back(suite_sov_reconstruct(cfg, g, mode));
  return out;
}

}  // namespace verify_detail

inline std::vector<VerifyReport> run_verify(const VerifyConfig& cfg) {
  std::vector<VerifyReport> out;
  if (cfg.symbolic) {
    out = verify_detail::run_exact_suites(cfg, RatFunc::g(), "symbolic");
  } else {
    out = verify_detail::run_exact_suites(
        cfg, cfg.g_value, "g=" + rational_to_string(cfg.g_value));
  }
  out.push_back(verify_detail::suite_quad_default(cfg));
  return out;
}

inline bool all_passed(const std::vector<VerifyReport>& reports) {
  for (const VerifyReport& r : reports) {
    if (!r.passed()) return false;
  }
  return true;
}

}  // namespace jacksov
