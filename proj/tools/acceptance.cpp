// Acceptance harness: twelve shipped guarantees, one pass/fail line each,
// exit code = number of failures.  No test framework on purpose: the output
// is the contract.

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <functional>
#include <future>
#include <string>
#include <vector>

#include "jacksov/jack.hpp"
#include "jacksov/partition.hpp"
#include "jacksov/qop.hpp"
#include "jacksov/quad.hpp"
#include "jacksov/rational.hpp"
#include "jacksov/scalar.hpp"
#include "jacksov/sov.hpp"
#include "jacksov/sympoly.hpp"

namespace {

using namespace jacksov;

struct Outcome {
  bool pass = false;
  std::string detail;
};

const RatFunc G = RatFunc::g();

// one-variable RawPoly -> polynomial in that variable
template <class S>
Poly<S> as_univariate(const RawPoly<S>& r) {
  Poly<S> out;
  for (const auto& [expo, c] : r.terms) {
    out += Poly<S>(c).times_power(expo.at(0));
  }
  return out;
}

// symbolic eigen tables shared by several criteria
JackTable<RatFunc>& sym_table(long n) {
  static std::vector<JackTable<RatFunc>*> tables;
  while (static_cast<long>(tables.size()) <= n) {
    tables.push_back(new JackTable<RatFunc>(G));
  }
  return *tables[static_cast<std::size_t>(n)];
}

Outcome c01_jack_eigen() {
  long cases = 0;
  for (long n = 2; n <= 4; ++n) {
    JackTable<RatFunc>& table = sym_table(n);
    for (long w = 0; w <= 6; ++w) {
      for (const Partition& lam : enumerate(n, w)) {
        const SymPoly<RatFunc>& jx = table.jack(lam).poly;
        if (!(apply_H(jx, G) == scale(jx, h_eigenvalue(lam, n, G)))) {
          return {false, "eigen relation fails at n=" + std::to_string(n)};
        }
        ++cases;
      }
    }
  }
  return {true, std::to_string(cases) + " expansions, symbolic coupling"};
}

template <class S>
bool q_eigen_holds(long n, long wmax, const S& g) {
  JackTable<S> table(g);
  for (long w = 0; w <= wmax; ++w) {
    for (const Partition& lam : enumerate(n, w)) {
      const SymPoly<S>& jx = table.jack(lam).poly;
      if (!(qz_apply(jx, g) ==
            separated_product(q_eigenvalue_sum(lam, n, g), jx))) {
        return false;
      }
    }
  }
  return true;
}

Outcome c02_q_eigen_dual() {
  for (long n = 1; n <= 3; ++n) {
    if (!q_eigen_holds(n, 5, G)) {
      return {false, "symbolic route fails at n=" + std::to_string(n)};
    }
  }
  const std::vector<Rational> gs{Rational(1, 2), Rational(1), Rational(2),
                                 Rational(3)};
  std::vector<std::future<bool>> tasks;
  for (long n = 1; n <= 4; ++n) {
    for (const Rational& g : gs) {
      tasks.push_back(std::async(std::launch::async, [n, g] {
        return q_eigen_holds(n, 8, g);
      }));
    }
  }
  for (auto& t : tasks) {
    if (!t.get()) return {false, "rational-coupling route fails"};
  }
  return {true, "weight<=5 symbolic n<=3; weight<=8 at four couplings n<=4"};
}

template <class S>
bool proportionality_holds(long n, long wmax, const S& g) {
  for (long w = 0; w <= wmax; ++w) {
    for (const Partition& lam : enumerate(n, w)) {
      const ZPoly<S> f = f_polynomial(lam, n, g);
      const ZPoly<S> q = q_eigenvalue_sum(lam, n, g);
      const S beta = beta_lambda(lam, n, g);
      if (!(f == q * ZPoly<S>(beta))) return false;
      // small-argument behaviour: the lowest coefficient sits at the last
      // part of the partition and equals 1/beta
      const long bottom = lam[n - 1];
      for (long d = 0; d < bottom; ++d) {
        if (!is_zero(q.coeff(d))) return false;
      }
      if (!(q.coeff(bottom) == field_div(S(1), beta))) return false;
    }
  }
  return true;
}

Outcome c03_proportionality() {
  for (long n = 1; n <= 3; ++n) {
    if (!proportionality_holds(n, 5, G)) {
      return {false, "symbolic check fails at n=" + std::to_string(n)};
    }
  }
  const std::vector<Rational> gs{Rational(1, 2), Rational(1), Rational(2),
                                 Rational(3)};
  for (long n = 1; n <= 4; ++n) {
    for (const Rational& g : gs) {
      if (!proportionality_holds(n, 8, g)) {
        return {false, "rational check fails at n=" + std::to_string(n)};
      }
    }
  }
  return {true, "factor and lowest-coefficient checks over both ranges"};
}

Outcome c04_restricted_identity() {
  long cases = 0;
  for (long n = 2; n <= 4; ++n) {
    JackTable<RatFunc>& table = sym_table(n);
    for (long w = 0; w <= 6; ++w) {
      for (const Partition& lam : enumerate(n, w)) {
        const ZPoly<RatFunc> restricted =
            as_univariate(restricted_jack(table, lam, 1));
        const ZPoly<RatFunc> lhs =
            q_eigenvalue_sum(lam, n, G) * ZPoly<RatFunc>(eval_at_ones(lam, n, G));
        if (!(lhs == restricted)) {
          return {false, "restriction mismatch at n=" + std::to_string(n)};
        }
        ++cases;
      }
    }
  }
  return {true, std::to_string(cases) + " partitions, symbolic coupling"};
}

Outcome c05_separation() {
  for (long n = 2; n <= 3; ++n) {
    JackTable<RatFunc>& table = sym_table(n);
    for (long w = 0; w <= 5; ++w) {
      for (const Partition& lam : enumerate(n, w)) {
        const SymPoly<RatFunc>& jx = table.jack(lam).poly;
        const MultiZPoly<RatFunc> direct = separate_via_q(jx, n, G);
        MultiZPoly<RatFunc> product{eval_at_ones(lam, n, G)};
        const ZPoly<RatFunc> q = q_eigenvalue_sum(lam, n, G);
        for (long k = 1; k <= n; ++k) product = product * from_zpoly(q, k);
        if (!(direct == product)) {
          return {false, "separated product mismatch"};
        }
      }
    }
  }
  for (long n = 1; n <= 3; ++n) {
    for (long w = 0; w <= 5; ++w) {
      for (const Partition& mu : enumerate(n, w)) {
        const SymPoly<RatFunc> p = E_basis<RatFunc>(mu, n);
        if (!(separate_via_chain(p, n, G) == separate_via_q(p, n, G))) {
          return {false, "chain disagrees with direct separation"};
        }
      }
    }
  }
  return {true, "factorised images and chain agreement, symbolic coupling"};
}

Outcome c06_stage_identity() {
  for (long n = 2; n <= 3; ++n) {
    JackTable<RatFunc>& table = sym_table(n);
    for (long w = 0; w <= 5; ++w) {
      for (const Partition& lam : enumerate(n, w)) {
        const ZPoly<RatFunc> q = q_eigenvalue_sum(lam, n, G);
        for (long k = 0; k < n; ++k) {
          const auto in = lift_to_mz(collect_m(restricted_jack(table, lam, k + 1)));
          const auto out = lift_to_mz(collect_m(restricted_jack(table, lam, k)));
          if (!(a_k_apply(in, n, k, G) ==
                scale(out, from_zpoly(q, k + 1)))) {
            return {false, "stage " + std::to_string(k) + " fails"};
          }
        }
      }
    }
  }
  return {true, "every chain stage on restricted eigenfunctions"};
}

Outcome c07_reconstruction() {
  long cases = 0;
  for (long n = 2; n <= 4; ++n) {
    JackTable<RatFunc>& table = sym_table(n);
    ReconstructTable<RatFunc> rebuilt(G);
    for (long w = 0; w <= 6; ++w) {
      for (const Partition& lam : enumerate(n, w)) {
        if (!(rebuilt.reconstruct(lam).poly == table.jack(lam).poly)) {
          return {false, "rebuild mismatch at n=" + std::to_string(n)};
        }
        ++cases;
      }
    }
  }
  return {true, std::to_string(cases) + " rebuilds equal the eigen solve"};
}

Outcome c08_commutation_triangularity() {
  for (long n = 2; n <= 3; ++n) {
    const SymPoly<RatFunc> en = elementary<RatFunc>(n, n);
    for (long w = 0; w <= 5; ++w) {
      for (const Partition& lam : enumerate(n, w)) {
        const SymPoly<RatFunc> p = m_basis<RatFunc>(lam, n);
        if (!(qz_apply(mul(en, p), G) ==
              shift_z(mul_each(qz_apply(p, G), en)))) {
          return {false, "commutation fails"};
        }
        const auto ls = lower_set(lam);
        const SymZPoly<RatFunc> img = qz_apply(E_basis<RatFunc>(lam, n), G);
        for (const auto& layer : img.coeffs) {
          for (const auto& [mu, c] : layer.terms) {
            if (std::find(ls.begin(), ls.end(), mu) == ls.end()) {
              return {false, "support escapes the dominance lower set"};
            }
          }
        }
      }
    }
  }
  return {true, "operator commutation and m-support containment"};
}

Outcome c09_baxter() {
  for (long n = 2; n <= 3; ++n) {
    for (long w = 0; w <= 5; ++w) {
      for (const Partition& lam : enumerate(n, w)) {
        for (const RatFunc& v : baxter_residual(lam, n, 25, G)) {
          if (!is_zero(v)) return {false, "nonzero residual"};
        }
      }
    }
  }
  return {true, "separated equation satisfied through order 25"};
}

Outcome c10_scalar_identities() {
  const RatFunc s = RatFunc(G + RatFunc(3));
  for (long k = 0; k <= 8; ++k) {
    RatFunc acc(0);
    for (long m = 0; m <= k; ++m) {
      acc = RatFunc(acc + RatFunc(Rational(binomial_mpz(k, m))) *
                              pochhammer(s, m) * pochhammer(G, k - m));
    }
    if (!(acc == pochhammer(RatFunc(s + G), k))) {
      return {false, "binomial convolution fails at k=" + std::to_string(k)};
    }
  }
  for (long sv = 1; sv <= 4; ++sv) {
    for (long m = 0; m <= 6; ++m) {
      RatFunc acc(0);
      std::vector<long> comp(static_cast<std::size_t>(sv), 0);
      // walk all compositions of m into sv parts
      std::function<void(long, long)> rec = [&](long idx, long left) {
        if (idx + 1 == sv) {
          comp[static_cast<std::size_t>(idx)] = left;
          Rational mult = Rational(factorial_mpz(m));
          RatFunc prod(1);
          for (long j : comp) {
            mult /= Rational(factorial_mpz(j));
            prod = RatFunc(prod * pochhammer(G, j));
          }
          acc = RatFunc(acc + RatFunc(mult) * prod);
          return;
        }
        for (long j = 0; j <= left; ++j) {
          comp[static_cast<std::size_t>(idx)] = j;
          rec(idx + 1, left - j);
        }
      };
      rec(0, m);
      if (!(acc == pochhammer(RatFunc(RatFunc(sv) * G), m))) {
        return {false, "multinomial collapse fails at s=" + std::to_string(sv)};
      }
    }
  }
  return {true, "binomial convolution k<=8; multinomial collapse s<=4, m<=6"};
}

Outcome c11_quadrature() {
  const std::vector<Rational> gs{Rational(1), Rational(2), Rational(3)};
  QuadOptions opt;  // 64 nodes per axis
  const SuiteResult res = run_suite(default_suite(gs), opt);
  double worst = 0.0;
  for (const SuiteRow& row : res.rows) {
    worst = std::max(worst, row.report.relative_error);
    if (row.report.relative_error > 1e-6) {
      return {false, row.problem.name + " err=" +
                         std::to_string(row.report.relative_error)};
    }
  }
  char buf[96];
  std::snprintf(buf, sizeof buf, "%zu problems, worst relative error %.2g",
                res.rows.size(), worst);
  return {true, buf};
}

Outcome c12_cli_verify(const char* cli_path) {
  if (cli_path == nullptr) {
    return {false, "path to the command-line binary not supplied"};
  }
  const std::string cmd = std::string("\"") + cli_path +
                          "\" verify --max-weight 4 --max-n 3 --g symbolic "
                          ">/dev/null 2>&1";
  const auto start = std::chrono::steady_clock::now();
  const int rc = std::system(cmd.c_str());
  const double secs =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start)
          .count();
  if (rc != 0) {
    return {false, "verify exited with status " + std::to_string(rc)};
  }
  if (secs >= 120.0) {
    return {false, "verify took " + std::to_string(secs) + "s"};
  }
  char buf[64];
  std::snprintf(buf, sizeof buf, "exit 0 in %.1fs", secs);
  return {true, buf};
}

int run_all(const char* cli_path) {
  struct Entry {
    const char* title;
    std::function<Outcome()> fn;
  };
  const std::vector<Entry> entries{
      {"eigen relation for every expansion", c01_jack_eigen},
      {"operator eigenvalue by both routes", c02_q_eigen_dual},
      {"proportionality and small-argument behaviour", c03_proportionality},
      {"restriction to the spectral variable", c04_restricted_identity},
      {"full separation into one-variable factors", c05_separation},
      {"chain stage identity", c06_stage_identity},
      {"dimension-by-dimension reconstruction", c07_reconstruction},
      {"commutation and triangularity", c08_commutation_triangularity},
      {"separated ordinary differential equation", c09_baxter},
      {"coupling-symbol identities", c10_scalar_identities},
      {"quadrature cross-checks", c11_quadrature},
      {"consolidated verify command", [cli_path] { return c12_cli_verify(cli_path); }},
  };
  int failures = 0;
  for (std::size_t i = 0; i < entries.size(); ++i) {
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = entries[i].fn();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    const double secs =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start)
            .count();
    std::printf("criterion %2zu: %s  %-46s [%s] (%.1fs)\n", i + 1,
                o.pass ? "PASS" : "FAIL", entries[i].title, o.detail.c_str(),
                secs);
    std::fflush(stdout);
    if (!o.pass) ++failures;
  }
  return failures;
}

}  // namespace

int main(int argc, char** argv) {
  const int failures = run_all(argc > 1 ? argv[1] : nullptr);
  if (failures == 0) {
    std::printf("all criteria satisfied\n");
  } else {
    std::printf("%d criteria failing\n", failures);
  }
  return failures;
}
