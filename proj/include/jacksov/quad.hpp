#pragma once

// Floating-point cross-checks: tensorised Gauss-Legendre quadrature over the
// ordered domains evaluates each integral identity and each integral operator
// kernel, and compares against the closed form or the exact algebraic route.
// Delta constraints are always resolved analytically by eliminating one
// variable (with its Jacobian); nothing is smoothed.

#include <cmath>
#include <cstdlib>
#include <functional>
#include <future>
#include <map>
#include <mutex>
#include <stdexcept>
#include <string>
#include <thread>
#include <utility>
#include <vector>

#include "jacksov/jack.hpp"
#include "jacksov/partition.hpp"
#include "jacksov/poly.hpp"
#include "jacksov/qop.hpp"
#include "jacksov/rational.hpp"
#include "jacksov/scalar.hpp"
#include "jacksov/sov.hpp"
#include "jacksov/sympoly.hpp"

namespace jacksov {

struct QuadOptions {
  long nodes = 64;
  double tolerance = 1e-6;
  // Pulls integrable endpoint singularities (x-a)^{p-1} into the measure by
  // a per-axis power-law substitution; needed only for couplings below 1.
  bool endpoint_powerlaw = false;
  double powerlaw_exponent = 1.0;
};

struct QuadReport {
  double computed = 0.0;
  double expected = 0.0;
  double relative_error = 0.0;
  long evaluations = 0;
};

inline QuadReport make_report(double computed, double expected, long evals) {
  QuadReport r;
  r.computed = computed;
  r.expected = expected;
  const double scale = std::max(std::abs(expected), 1e-300);
  r.relative_error = std::abs(computed - expected) / scale;
  r.evaluations = evals;
  return r;
}

namespace quad_detail {

struct GLRule {
  std::vector<double> x;  // nodes on (-1, 1)
  std::vector<double> w;
};

inline const GLRule& gl_rule(long m) {
  static std::map<long, GLRule> cache;
  static std::mutex mu;
  std::lock_guard<std::mutex> lock(mu);
  auto it = cache.find(m);
  if (it != cache.end()) return it->second;

  GLRule rule;
  rule.x.resize(static_cast<std::size_t>(m));
  rule.w.resize(static_cast<std::size_t>(m));
  for (long i = 0; i < (m + 1) / 2; ++i) {
    double x = std::cos(M_PI * (static_cast<double>(i) + 0.75) /
                        (static_cast<double>(m) + 0.5));
    double pp = 0.0;
    for (int iter = 0; iter < 100; ++iter) {
      double p0 = 1.0, p1 = 0.0;
      for (long j = 0; j < m; ++j) {
        const double p2 = p1;
        p1 = p0;
        p0 = ((2.0 * j + 1.0) * x * p1 - j * p2) / (j + 1.0);
      }
      pp = m * (x * p0 - p1) / (x * x - 1.0);
      const double dx = p0 / pp;
      x -= dx;
      if (std::abs(dx) < 1e-15) break;
    }
    const double w = 2.0 / ((1.0 - x * x) * pp * pp);
    rule.x[static_cast<std::size_t>(i)] = -x;
    rule.w[static_cast<std::size_t>(i)] = w;
    rule.x[static_cast<std::size_t>(m - 1 - i)] = x;
    rule.w[static_cast<std::size_t>(m - 1 - i)] = w;
  }
  return cache.emplace(m, std::move(rule)).first->second;
}

// integral of f over (lo, hi) with plain affine mapping
inline double gl_plain(double lo, double hi, long m,
                       const std::function<double(double)>& f) {
  const GLRule& rule = gl_rule(m);
  const double mid = 0.5 * (lo + hi), half = 0.5 * (hi - lo);
  double acc = 0.0;
  for (std::size_t i = 0; i < rule.x.size(); ++i) {
    acc += rule.w[i] * f(mid + half * rule.x[i]);
  }
  return acc * half;
}

// Same integral, but each endpoint is approached through x = end +/- h*s^{1/p}
// so that an (x-end)^{p-1} factor in f becomes bounded.  Exact for smooth f
// as well, so it is safe to apply to every segment end uniformly.
inline double gl_powerlaw(double lo, double hi, long m, double p,
                          const std::function<double(double)>& f) {
  const double mid = 0.5 * (lo + hi), h = 0.5 * (hi - lo);
  const double q = 1.0 / p;
  auto half = [&](double end, double sign) {
    return gl_plain(0.0, 1.0, m, [&](double s) {
      const double t = std::pow(s, q);
      return f(end + sign * h * t) * h * q * std::pow(s, q - 1.0);
    });
  };
  return half(lo, +1.0) + half(hi, -1.0);
}

// integral over (lo, hi) split at the interior cut points
inline double gl_axis(double lo, double hi, std::vector<double> cuts,
                      const QuadOptions& opt,
                      const std::function<double(double)>& f) {
  if (!(hi > lo)) return 0.0;
  std::vector<double> pts{lo};
  std::sort(cuts.begin(), cuts.end());
  for (double c : cuts) {
    if (c > pts.back() + 1e-14 && c < hi - 1e-14) pts.push_back(c);
  }
  pts.push_back(hi);
  double acc = 0.0;
  for (std::size_t i = 0; i + 1 < pts.size(); ++i) {
    if (opt.endpoint_powerlaw) {
      acc += gl_powerlaw(pts[i], pts[i + 1], opt.nodes, opt.powerlaw_exponent, f);
    } else {
      acc += gl_plain(pts[i], pts[i + 1], opt.nodes, f);
    }
  }
  return acc;
}

inline double to_double(const Rational& r) {
  return mpq_get_d(r.get_mpq_t());
}

inline double poch_d(double a, long m) {
  double acc = 1.0;
  for (long t = 0; t < m; ++t) acc *= a + static_cast<double>(t);
  return acc;
}

inline double vandermonde(const std::vector<double>& x) {
  double acc = 1.0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    for (std::size_t j = i + 1; j < x.size(); ++j) acc *= x[j] - x[i];
  }
  return acc;
}

inline double gamma_ratio(const std::vector<double>& alpha) {
  double total = 0.0, lg = 0.0;
  for (double a : alpha) {
    total += a;
    lg += std::lgamma(a);
  }
  return std::exp(lg - std::lgamma(total));
}

// flattened double view of a symmetric polynomial for fast evaluation
struct RawEval {
  std::vector<std::pair<std::vector<long>, double>> terms;
  explicit RawEval(const SymPoly<Rational>& p) {
    for (const auto& [expo, c] : expand_raw(p).terms) {
      terms.emplace_back(expo, to_double(c));
    }
  }
  double operator()(const std::vector<double>& x) const {
    double acc = 0.0;
    for (const auto& [expo, c] : terms) {
      double t = c;
      for (std::size_t i = 0; i < expo.size(); ++i) {
        for (long e = 0; e < expo[i]; ++e) t *= x[i];
      }
      acc += t;
    }
    return acc;
  }
};

inline double eval_double(const MultiZPoly<Rational>& q,
                          const std::vector<double>& zs) {
  double acc = 0.0;
  for (const auto& [key, c] : q.terms) {
    double t = to_double(c);
    for (const auto& [idx, e] : key) {
      const double z = zs.at(static_cast<std::size_t>(idx - 1));
      for (long r = 0; r < e; ++r) t *= z;
    }
    acc += t;
  }
  return acc;
}

inline double eval_double(const SymPoly<MultiZPoly<Rational>>& p,
                          const std::vector<double>& y,
                          const std::vector<double>& zs) {
  double acc = 0.0;
  for (const auto& [expo, c] : expand_raw(p).terms) {
    double t = eval_double(c, zs);
    for (std::size_t i = 0; i < expo.size(); ++i) {
      for (long e = 0; e < expo[i]; ++e) t *= y[i];
    }
    acc += t;
  }
  return acc;
}

inline double eval_double(const SymZPoly<Rational>& p,
                          const std::vector<double>& y, double z) {
  double acc = 0.0, zp = 1.0;
  for (const auto& layer : p.coeffs) {
    acc += zp * RawEval(layer)(y);
    zp *= z;
  }
  return acc;
}

}  // namespace quad_detail

// Simplex beta integral: the delta is resolved by eliminating the last
// simplex coordinate, leaving a nested-bounds box of dimension n-1.
inline QuadReport dirichlet_liouville(const std::vector<double>& alpha, long n,
                                      const QuadOptions& opt = {}) {
  using namespace quad_detail;
  if (static_cast<long>(alpha.size()) != n || n < 2) {
    throw std::invalid_argument("needs n >= 2 exponents");
  }
  long evals = 0;
  std::vector<double> xi(static_cast<std::size_t>(n), 0.0);
  std::function<double(long, double)> layer = [&](long j, double used) {
    return gl_axis(0.0, 1.0 - used, {}, opt, [&, j, used](double t) {
      xi[static_cast<std::size_t>(j)] = t;
      if (j + 2 < n) return layer(j + 1, used + t);
      xi[static_cast<std::size_t>(n - 1)] = 1.0 - used - t;
      ++evals;
      double f = 1.0;
      for (long i = 0; i < n; ++i) {
        const double b = xi[static_cast<std::size_t>(i)];
        if (b <= 0.0) return 0.0;
        f *= std::pow(b, alpha[static_cast<std::size_t>(i)] - 1.0);
      }
      return f;
    });
  };
  const double computed = layer(0, 0.0);
  return make_report(computed, gamma_ratio(alpha), evals);
}

namespace quad_detail {

// Shared driver for the interlacing-domain integrals with a product
// constraint prod x_j < cap coming from the eliminated top variable:
// axes x_j in (lo_j, hi_j), j = 1..d, innermost axis capped, d <= 2.
inline double product_capped_box(const std::vector<double>& lo,
                                 const std::vector<double>& hi, double cap,
                                 const QuadOptions& opt,
                                 const std::function<double(const std::vector<double>&)>& f) {
  const std::size_t d = lo.size();
  if (d == 1) {
    return gl_axis(lo[0], std::min(hi[0], cap), {}, opt,
                   [&](double x0) { return f({x0}); });
  }
  if (d == 2) {
    // the inner upper bound min(hi_2, cap/x_1) switches branch at cap/hi_2
    // and the inner range empties at cap/lo_2; both are integrand kinks
    return gl_axis(lo[0], hi[0], {cap / hi[1], cap / lo[1]}, opt, [&](double x0) {
      return gl_axis(lo[1], std::min(hi[1], cap / x0), {}, opt,
                     [&](double x1) { return f({x0, x1}); });
    });
  }
  throw std::invalid_argument("interlacing quadrature supports n <= 3");
}

}  // namespace quad_detail

// Interlacing-domain variant: anchors y fixed, integration over x with
// prod x = z * prod y enforced by eliminating the top variable.
inline QuadReport rational_modified(const std::vector<double>& y,
                                    const std::vector<double>& alpha, double z,
                                    const QuadOptions& opt = {}) {
  using namespace quad_detail;
  const long n = static_cast<long>(y.size());
  if (static_cast<long>(alpha.size()) != n || n < 2) {
    throw std::invalid_argument("needs matching anchors and exponents");
  }
  double ycheck = 1.0;
  for (double v : y) ycheck *= v;
  const double cap_product = z * ycheck / y.back();  // x_n > y_n

  std::vector<double> lo(y.begin(), y.end() - 1);
  std::vector<double> hi(y.begin() + 1, y.end());
  long evals = 0;
  const double computed = product_capped_box(
      lo, hi, cap_product, opt, [&](const std::vector<double>& xfree) {
        ++evals;
        std::vector<double> x(xfree);
        double head = 1.0;
        for (double v : xfree) head *= v;
        x.push_back(z * ycheck / head);
        double f = vandermonde(x) / head;  // Jacobian of the elimination
        for (long i = 0; i < n; ++i) {
          double num = 1.0, den = 1.0;
          for (long k = 0; k < n; ++k) {
            num *= x[static_cast<std::size_t>(k)] - y[static_cast<std::size_t>(i)];
            if (k != i) {
              den *= y[static_cast<std::size_t>(k)] - y[static_cast<std::size_t>(i)];
            }
          }
          const double xi = num / den;
          if (xi <= 0.0) return 0.0;
          f *= std::pow(xi, alpha[static_cast<std::size_t>(i)] - 1.0);
        }
        return f;
      });

  double expected = gamma_ratio(alpha);
  double total_alpha = 0.0;
  for (double a : alpha) total_alpha += a;
  expected *= std::pow(z - 1.0, total_alpha - 1.0) * vandermonde(y);
  for (long i = 0; i < n; ++i) {
    expected *= std::pow(y[static_cast<std::size_t>(i)],
                         alpha[static_cast<std::size_t>(i)] - 1.0);
  }
  return make_report(computed, expected, evals);
}

// Circular variant with sine kernels; the sum constraint |u| = |v| + gamma is
// resolved by eliminating the top variable (unit Jacobian).
inline QuadReport trigonometric_modified(const std::vector<double>& v,
                                         const std::vector<double>& alpha,
                                         double gamma,
                                         const QuadOptions& opt = {}) {
  using namespace quad_detail;
  const long n = static_cast<long>(v.size());
  if (static_cast<long>(alpha.size()) != n || n < 2) {
    throw std::invalid_argument("needs matching anchors and exponents");
  }
  double vsum = 0.0;
  for (double t : v) vsum += t;
  // u_n in (v_n, pi + v_1) constrains the sum of the free coordinates
  const double sum_hi = vsum + gamma - v.back();
  const double sum_lo = vsum + gamma - M_PI - v.front();

  auto integrand = [&](const std::vector<double>& ufree) -> double {
    std::vector<double> u(ufree);
    double s = 0.0;
    for (double t : ufree) s += t;
    u.push_back(vsum + gamma - s);
    double f = 1.0;
    for (long i = 0; i < n; ++i) {
      for (long j = i + 1; j < n; ++j) {
        f *= std::sin(u[static_cast<std::size_t>(j)] -
                      u[static_cast<std::size_t>(i)]);
      }
    }
    for (long i = 0; i < n; ++i) {
      double num = 1.0, den = 1.0;
      for (long k = 0; k < n; ++k) {
        num *= std::sin(u[static_cast<std::size_t>(k)] -
                        v[static_cast<std::size_t>(i)]);
        if (k != i) {
          den *= std::sin(v[static_cast<std::size_t>(k)] -
                          v[static_cast<std::size_t>(i)]);
        }
      }
      const double xi = num / den;
      if (xi <= 0.0) return 0.0;
      f *= std::pow(xi, alpha[static_cast<std::size_t>(i)] - 1.0);
    }
    return f;
  };

  long evals = 0;
  double computed = 0.0;
  if (n == 2) {
    computed = gl_axis(std::max(v[0], sum_lo), std::min(v[1], sum_hi), {}, opt,
                       [&](double u0) {
                         ++evals;
                         return integrand({u0});
                       });
  } else if (n == 3) {
    // cuts: inner bound branch switches and inner-range emptiness
    computed = gl_axis(v[0], v[1],
                       {sum_hi - v[2], sum_lo - v[1], sum_hi - v[1],
                        sum_lo - v[2]},
                       opt, [&](double u0) {
                         return gl_axis(std::max(v[1], sum_lo - u0),
                                        std::min(v[2], sum_hi - u0), {}, opt,
                                        [&](double u1) {
                                          ++evals;
                                          return integrand({u0, u1});
                                        });
                       });
  } else {
    throw std::invalid_argument("trigonometric quadrature supports n <= 3");
  }

  double expected = gamma_ratio(alpha);
  double total_alpha = 0.0;
  for (double a : alpha) total_alpha += a;
  expected *= std::pow(std::sin(gamma), total_alpha - 1.0);
  for (long i = 0; i < n; ++i) {
    for (long j = i + 1; j < n; ++j) {
      expected *= std::sin(v[static_cast<std::size_t>(j)] -
                           v[static_cast<std::size_t>(i)]);
    }
  }
  return make_report(computed, expected, evals);
}

namespace quad_detail {

// normalised interlacing kernel integral shared by the one-parameter operator
// and its numeric commutation check
inline double qz_kernel_value(const RawEval& p, const std::vector<double>& y,
                              double z, double gd, const QuadOptions& opt,
                              long& evals) {
  const long n = static_cast<long>(y.size());
  double ycheck = 1.0;
  for (double t : y) ycheck *= t;
  std::vector<double> lo(y.begin(), y.end() - 1);
  std::vector<double> hi(y.begin() + 1, y.end());
  const double cap = z * ycheck / y.back();

  double integral = product_capped_box(
      lo, hi, cap, opt, [&](const std::vector<double>& xfree) {
        ++evals;
        std::vector<double> x(xfree);
        double head = 1.0;
        for (double t : xfree) head *= t;
        x.push_back(z * ycheck / head);
        double f = vandermonde(x) / head * p(x);
        for (long i = 0; i < n; ++i) {
          double num = 1.0, den = 1.0;
          for (long k = 0; k < n; ++k) {
            num *= x[static_cast<std::size_t>(k)] - y[static_cast<std::size_t>(i)];
            if (k != i) {
              den *= y[static_cast<std::size_t>(k)] - y[static_cast<std::size_t>(i)];
            }
          }
          const double xi = num / den;
          if (xi <= 0.0) return 0.0;
          f *= std::pow(xi, gd - 1.0);
        }
        return f;
      });

  double pref = std::exp(std::lgamma(n * gd) - n * std::lgamma(gd));
  pref *= std::pow(z - 1.0, 1.0 - n * gd) / vandermonde(y);
  for (double t : y) pref /= std::pow(t, gd - 1.0);
  return pref * integral;
}

}  // namespace quad_detail

// Kernel realisation of the one-parameter operator versus the exact
// eta-substitution route.
inline QuadReport qz_numeric(const SymPoly<Rational>& p,
                             const std::vector<double>& y, double z,
                             const Rational& g, const QuadOptions& opt = {}) {
  using namespace quad_detail;
  const long n = p.n;
  if (static_cast<long>(y.size()) != n) {
    throw std::invalid_argument("anchor count mismatch");
  }
  long evals = 0;
  const double computed =
      qz_kernel_value(RawEval(p), y, z, to_double(g), opt, evals);
  const double expected = eval_double(qz_apply(p, g), y, z);
  return make_report(computed, expected, evals);
}

// Numeric form of the commutation z * e_n(y) * [Q_z p](y) = [Q_z(e_n p)](y),
// both sides by quadrature.
inline QuadReport qz_commutation_numeric(const SymPoly<Rational>& p,
                                         const std::vector<double>& y, double z,
                                         const Rational& g,
                                         const QuadOptions& opt = {}) {
  using namespace quad_detail;
  const long n = p.n;
  long evals = 0;
  const double gd = to_double(g);
  const double lhs =
      qz_kernel_value(RawEval(mul(elementary<Rational>(n, n), p)), y, z, gd,
                      opt, evals);
  double en = 1.0;
  for (double t : y) en *= t;
  const double rhs = z * en * qz_kernel_value(RawEval(p), y, z, gd, opt, evals);
  return make_report(lhs, rhs, evals);
}

// Kernel realisation of one chain stage versus the exact moment route.
// Anchors are the k outer variables; the stage binds z_{k+1}.
inline QuadReport a_kernel_numeric(const SymPoly<Rational>& f, long n, long k,
                                   const std::vector<double>& ytil, double z,
                                   const Rational& g,
                                   const QuadOptions& opt = {}) {
  using namespace quad_detail;
  if (f.n != k + 1 || static_cast<long>(ytil.size()) != k) {
    throw std::invalid_argument("stage variable mismatch");
  }
  const double gd = to_double(g);
  const RawEval fe(f);
  long evals = 0;
  double computed = 0.0;

  if (k == 0) {
    computed = fe({z});  // the last stage degenerates to evaluation at z
    evals = 1;
  } else {
    std::vector<double> yfull{1.0};  // slot 0 anchor is pinned at 1
    yfull.insert(yfull.end(), ytil.begin(), ytil.end());
    double yprod = 1.0;
    for (double t : ytil) yprod *= t;

    std::vector<double> lo(yfull.begin(), yfull.end() - 1);
    std::vector<double> hi(yfull.begin() + 1, yfull.end());
    const double cap = z * yprod / ytil.back();  // top variable above ytil_k

    double integral = product_capped_box(
        lo, hi, cap, opt, [&](const std::vector<double>& xfree) {
          ++evals;
          std::vector<double> x(xfree);
          double head = 1.0;
          for (double t : xfree) head *= t;
          x.push_back(z * yprod / head);
          double v = vandermonde(x) / head * fe(x);
          for (long i = 0; i <= k; ++i) {
            double num = 1.0, den = 1.0;
            for (long j = 0; j <= k; ++j) {
              num *= x[static_cast<std::size_t>(j)] -
                     yfull[static_cast<std::size_t>(i)];
              if (j != i) {
                den *= yfull[static_cast<std::size_t>(j)] -
                       yfull[static_cast<std::size_t>(i)];
              }
            }
            const double xi = num / den;
            if (xi <= 0.0) return 0.0;
            const double expo = (i == 0) ? (n - k) * gd - 1.0 : gd - 1.0;
            v *= std::pow(xi, expo);
          }
          return v;
        });

    double pref = std::exp(std::lgamma(n * gd) - std::lgamma((n - k) * gd) -
                           k * std::lgamma(gd));
    pref *= std::pow(z - 1.0, 1.0 - n * gd) / vandermonde(yfull);
    for (double t : ytil) pref *= std::pow(t, 1.0 - gd);
    computed = pref * integral;
  }

  const auto exact = a_k_apply(lift_to_mz(f), n, k, g);
  std::vector<double> zs(static_cast<std::size_t>(k + 1), 0.0);
  zs.back() = z;  // only z_{k+1} appears
  const double expected = eval_double(exact, ytil, zs);
  return make_report(computed, expected, evals);
}

// Kernel realisation of the variable-count lift versus the exact route; this
// is the decisive numeric arbiter for the substitution-index choice in
// q0_prime_apply.
inline QuadReport q0_numeric(const SymPoly<Rational>& p,
                             const std::vector<double>& y, const Rational& g,
                             const QuadOptions& opt = {}) {
  using namespace quad_detail;
  const long n = static_cast<long>(y.size());
  if (p.n != n - 1) {
    throw std::invalid_argument("input needs n-1 variables");
  }
  const double gd = to_double(g);
  const RawEval pe(p);
  long evals = 0;

  auto integrand = [&](const std::vector<double>& x) -> double {
    ++evals;
    double f = vandermonde(x) * pe(x);
    for (long i = 0; i < n; ++i) {
      double num = 1.0, den = 1.0;
      for (long kk = 0; kk < n - 1; ++kk) {
        num *= x[static_cast<std::size_t>(kk)] - y[static_cast<std::size_t>(i)];
      }
      for (long kk = 0; kk < n; ++kk) {
        if (kk != i) {
          den *= y[static_cast<std::size_t>(kk)] - y[static_cast<std::size_t>(i)];
        }
      }
      const double xi = num / den;
      if (xi <= 0.0) return 0.0;
      f *= std::pow(xi, gd - 1.0);
    }
    return f;
  };

  double integral = 0.0;
  if (n == 2) {
    integral = gl_axis(y[0], y[1], {}, opt,
                       [&](double x0) { return integrand({x0}); });
  } else if (n == 3) {
    integral = gl_axis(y[0], y[1], {}, opt, [&](double x0) {
      return gl_axis(y[1], y[2], {}, opt,
                     [&](double x1) { return integrand({x0, x1}); });
    });
  } else {
    throw std::invalid_argument("lift quadrature supports n <= 3");
  }

  const double computed =
      std::exp(std::lgamma(n * gd) - n * std::lgamma(gd)) * integral /
      vandermonde(y);
  const double expected = RawEval(q0_prime_apply(p, n, g))(y);
  return make_report(computed, expected, evals);
}

namespace quad_detail {

// One level of the iterated ordered-integral representation.  The closed
// one-step relation in the source omits the Gamma(ng)/Gamma(g)^n
// normalisation that its own lift kernel carries; without it the constant
// polynomial is not reproduced, so the factor is included here.
inline double jack_level(const Partition& lambda,
                         const std::vector<double>& x, double gd,
                         const QuadOptions& opt, long& evals) {
  const long j = static_cast<long>(x.size());
  if (j == 1) {
    ++evals;
    double acc = 1.0;
    for (long e = 0; e < lambda[0]; ++e) acc *= x[0];
    return acc;
  }

  const long bottom = lambda[j - 1];
  std::vector<long> reduced;
  for (long i = 0; i + 1 < j; ++i) reduced.push_back(lambda[i] - bottom);
  const Partition nat{std::vector<long>(reduced)};

  double pref = std::exp(std::lgamma(j * gd) - j * std::lgamma(gd));
  for (double t : x) {
    for (long e = 0; e < bottom; ++e) pref *= t;
  }
  for (long i = 1; i <= j - 1; ++i) {
    const long drop = lambda[i - 1] - bottom;
    pref *= poch_d((j - i + 1) * gd, drop) / poch_d((j - i) * gd, drop);
  }
  pref /= vandermonde(x);

  auto integrand = [&](const std::vector<double>& xp) -> double {
    double f = vandermonde(xp) * jack_level(nat, xp, gd, opt, evals);
    for (long i = 0; i < j; ++i) {
      double num = 1.0, den = 1.0;
      for (long kk = 0; kk < j - 1; ++kk) {
        num *= xp[static_cast<std::size_t>(kk)] - x[static_cast<std::size_t>(i)];
      }
      for (long kk = 0; kk < j; ++kk) {
        if (kk != i) {
          den *= x[static_cast<std::size_t>(kk)] - x[static_cast<std::size_t>(i)];
        }
      }
      const double xi = num / den;
      if (xi <= 0.0) return 0.0;
      f *= std::pow(xi, gd - 1.0);
    }
    return f;
  };

  double integral = 0.0;
  if (j == 2) {
    integral = gl_axis(x[0], x[1], {}, opt,
                       [&](double x0) { return integrand({x0}); });
  } else if (j == 3) {
    integral = gl_axis(x[0], x[1], {}, opt, [&](double x0) {
      return gl_axis(x[1], x[2], {}, opt,
                     [&](double x1) { return integrand({x0, x1}); });
    });
  } else {
    throw std::invalid_argument("iterated representation supports n <= 3");
  }
  return pref * integral;
}

}  // namespace quad_detail

// Iterated ordered-integral representation of a Jack polynomial versus the
// exact eigen-solve evaluated at the same point.
inline QuadReport jack_representation_numeric(const Partition& lambda, long n,
                                              const std::vector<double>& x,
                                              const Rational& g,
                                              const QuadOptions& opt = {}) {
  using namespace quad_detail;
  if (lambda.length() != n || static_cast<long>(x.size()) != n) {
    throw std::invalid_argument("length mismatch");
  }
  long evals = 0;
  const double computed = jack_level(lambda, x, to_double(g), opt, evals);

  JackTable<Rational> table(g);
  const double expected = RawEval(table.jack(lambda).poly)(x);
  return make_report(computed, expected, evals);
}

// ---------------------------------------------------------------------------
// Problem suite

enum class QuadKind {
  dirichlet,
  rational_modified,
  trigonometric,
  qz_kernel,
  a_kernel,
  q0_kernel,
  jack_representation,
};

inline const char* quad_kind_name(QuadKind k) {
  switch (k) {
    case QuadKind::dirichlet: return "dirichlet";
    case QuadKind::rational_modified: return "rational_modified";
    case QuadKind::trigonometric: return "trigonometric";
    case QuadKind::qz_kernel: return "qz_kernel";
    case QuadKind::a_kernel: return "a_kernel";
    case QuadKind::q0_kernel: return "q0_kernel";
    case QuadKind::jack_representation: return "jack_representation";
  }
  return "?";
}

struct QuadProblem {
  QuadKind kind = QuadKind::dirichlet;
  std::string name;
  std::vector<double> alpha;    // identity exponents
  std::vector<double> anchors;  // y, v, or x depending on kind
  double spectral = 0.0;        // z or gamma
  Rational g = Rational(1);
  SymPoly<Rational> input;      // kernel input polynomial
  Partition lambda{std::vector<long>{}};
  long n = 0;
  long k = 0;
  double tolerance = 1e-6;
  bool powerlaw = false;  // endpoint substitution (couplings below 1)
};

inline QuadReport run_problem(const QuadProblem& pb, QuadOptions opt) {
  opt.endpoint_powerlaw = pb.powerlaw;
  if (pb.powerlaw) opt.powerlaw_exponent = quad_detail::to_double(pb.g);
  switch (pb.kind) {
    case QuadKind::dirichlet:
      return dirichlet_liouville(pb.alpha, pb.n, opt);
    case QuadKind::rational_modified:
      return rational_modified(pb.anchors, pb.alpha, pb.spectral, opt);
    case QuadKind::trigonometric:
      return trigonometric_modified(pb.anchors, pb.alpha, pb.spectral, opt);
    case QuadKind::qz_kernel:
      return qz_numeric(pb.input, pb.anchors, pb.spectral, pb.g, opt);
    case QuadKind::a_kernel:
      return a_kernel_numeric(pb.input, pb.n, pb.k, pb.anchors, pb.spectral,
                              pb.g, opt);
    case QuadKind::q0_kernel:
      return q0_numeric(pb.input, pb.anchors, pb.g, opt);
    case QuadKind::jack_representation:
      return jack_representation_numeric(pb.lambda, pb.n, pb.anchors, pb.g, opt);
  }
  throw std::logic_error("unknown problem kind");
}

namespace quad_detail {

inline SymPoly<Rational> m_input(const std::vector<long>& parts, long n) {
  return m_basis<Rational>(Partition{std::vector<long>(parts)}, n);
}

}  // namespace quad_detail

// Coverage at the given couplings (anything below 1 switches that problem to
// the endpoint substitution), plus fixed worked examples.
inline std::vector<QuadProblem> default_suite(const std::vector<Rational>& gs) {
  using quad_detail::m_input;
  using quad_detail::to_double;
  std::vector<QuadProblem> out;
  auto add = [&](QuadProblem pb) {
    pb.name = std::string(quad_kind_name(pb.kind)) + "/" + pb.name;
    out.push_back(std::move(pb));
  };

  // fixed worked examples
  {
    QuadProblem pb;
    pb.kind = QuadKind::dirichlet;
    pb.name = "alpha=1,1";
    pb.alpha = {1, 1};
    pb.n = 2;
    add(pb);
    pb.name = "alpha=2,3";
    pb.alpha = {2, 3};
    add(pb);
    pb.name = "alpha=2,2,2";
    pb.alpha = {2, 2, 2};
    pb.n = 3;
    add(pb);
  }
  {
    QuadProblem pb;
    pb.kind = QuadKind::rational_modified;
    pb.name = "n=2,alpha=1,1,z=2";
    pb.anchors = {1, 2};
    pb.alpha = {1, 1};
    pb.spectral = 2;
    add(pb);
    pb.name = "n=2,alpha=2,1,z=3";
    pb.alpha = {2, 1};
    pb.spectral = 3;
    add(pb);
    pb.name = "n=3,alpha=1,1,1,z=2";
    pb.anchors = {1, 2, 3};
    pb.alpha = {1, 1, 1};
    pb.spectral = 2;
    add(pb);
  }
  {
    QuadProblem pb;
    pb.kind = QuadKind::trigonometric;
    pb.name = "n=2,right-angles";
    pb.anchors = {0, M_PI / 2};
    pb.alpha = {1, 1};
    pb.spectral = M_PI / 2;
    add(pb);
    pb.name = "n=2,alpha=2,2";
    pb.anchors = {0, 1};
    pb.alpha = {2, 2};
    pb.spectral = 1;
    add(pb);
    pb.name = "n=2,small-gamma";
    pb.alpha = {1, 1};
    pb.spectral = 0.1;
    add(pb);
  }

  for (const Rational& g : gs) {
    const double gd = to_double(g);
    const bool sing = gd < 1.0;
    const std::string tag = "g=" + rational_to_string(g);
    auto with_g = [&](QuadProblem pb) {
      pb.g = g;
      pb.powerlaw = sing;
      pb.name += "," + tag;
      add(std::move(pb));
    };

    {
      QuadProblem pb;
      pb.kind = QuadKind::dirichlet;
      pb.name = "n=2";
      pb.alpha = {gd, gd + 1.0};
      pb.n = 2;
      with_g(pb);
      pb.name = "n=3";
      pb.alpha = {gd, gd, gd};
      pb.n = 3;
      with_g(pb);
    }
    {
      QuadProblem pb;
      pb.kind = QuadKind::rational_modified;
      pb.name = "n=2";
      pb.anchors = {1, 2};
      pb.alpha = {gd, gd};
      pb.spectral = 2;
      with_g(pb);
      pb.name = "n=3";
      pb.anchors = {1, 2, 3};
      pb.alpha = {gd, gd, gd};
      pb.spectral = 2;  // constraint cut inside the outer axis
      with_g(pb);
    }
    {
      QuadProblem pb;
      pb.kind = QuadKind::trigonometric;
      pb.name = "n=2";
      pb.anchors = {0, M_PI / 2};
      pb.alpha = {gd, gd};
      pb.spectral = M_PI / 2;
      with_g(pb);
      pb.name = "n=3";
      pb.anchors = {0, 1, 2};
      pb.alpha = {gd, gd, gd};
      pb.spectral = 0.8;
      with_g(pb);
    }
    {
      QuadProblem pb;
      pb.kind = QuadKind::qz_kernel;
      pb.name = "n=2,constant";
      pb.input = m_input({0, 0}, 2);
      pb.anchors = {1, 2};
      pb.spectral = 3;
      with_g(pb);
      pb.name = "n=2,e1";
      pb.input = m_input({1, 0}, 2);
      with_g(pb);
      pb.name = "n=2,e2";
      pb.input = m_input({1, 1}, 2);
      with_g(pb);
      pb.name = "n=2,deg3";
      pb.input = m_input({2, 1}, 2);
      with_g(pb);
      pb.name = "n=3,e1";
      pb.input = m_input({1, 0, 0}, 3);
      pb.anchors = {1, 2, 3};
      pb.spectral = 2;
      with_g(pb);
      pb.name = "n=3,deg3";
      pb.input = m_input({2, 1, 0}, 3);
      with_g(pb);
    }
    {
      QuadProblem pb;
      pb.kind = QuadKind::a_kernel;
      pb.name = "n=2,k=1,constant";
      pb.input = m_input({0, 0}, 2);
      pb.n = 2;
      pb.k = 1;
      pb.anchors = {2};
      pb.spectral = 3;
      with_g(pb);
      pb.name = "n=2,k=1,e1";
      pb.input = m_input({1, 0}, 2);
      with_g(pb);
      pb.name = "n=3,k=1,e1";
      pb.input = m_input({1, 0}, 2);
      pb.n = 3;
      pb.spectral = 2;
      with_g(pb);
      pb.name = "n=3,k=2,deg2";
      pb.input = m_input({1, 1, 0}, 3);
      pb.n = 3;
      pb.k = 2;
      pb.anchors = {2, 3};
      pb.spectral = 2;  // cap cuts the outer axis
      with_g(pb);
    }
    {
      QuadProblem pb;
      pb.kind = QuadKind::q0_kernel;
      pb.name = "n=2,x1";
      pb.input = m_input({1}, 1);
      pb.anchors = {1, 2};
      with_g(pb);
      pb.name = "n=3,e1";
      pb.input = m_input({1, 0}, 2);
      pb.anchors = {1, 2, 3};
      with_g(pb);
      pb.name = "n=3,deg3";
      pb.input = m_input({2, 1}, 2);
      pb.anchors = {1, 3, 4};
      with_g(pb);
    }
    {
      QuadProblem pb;
      pb.kind = QuadKind::jack_representation;
      pb.name = "(1,0)";
      pb.lambda = Partition({1, 0});
      pb.n = 2;
      pb.anchors = {1, 2};
      with_g(pb);
      pb.name = "(1,1)";
      pb.lambda = Partition({1, 1});
      with_g(pb);
      pb.name = "(3,1)";
      pb.lambda = Partition({3, 1});
      with_g(pb);
      pb.name = "(2,1,0)";
      pb.lambda = Partition({2, 1, 0});
      pb.n = 3;
      pb.anchors = {1, 2, 3};
      with_g(pb);
    }
  }
  return out;
}

// Default coverage plus higher-degree inputs and the below-1 coupling via
// the endpoint substitution.
inline std::vector<QuadProblem> extended_suite(const std::vector<Rational>& gs) {
  using quad_detail::m_input;
  std::vector<QuadProblem> out = default_suite(gs);
  std::vector<Rational> half{Rational(1, 2)};
  for (QuadProblem pb : default_suite(half)) {
    if (pb.name.find("g=1/2") == std::string::npos) continue;  // skip repeats
    pb.tolerance = 2e-4;  // endpoint substitution converges more slowly
    out.push_back(std::move(pb));
  }
  {
    QuadProblem pb;
    pb.kind = QuadKind::qz_kernel;
    pb.name = "qz_kernel/n=3,deg4,g=2";
    pb.input = m_input({2, 1, 1}, 3);
    pb.anchors = {1, 2, 3};
    pb.spectral = 3;
    pb.g = Rational(2);
    out.push_back(pb);
  }
  {
    QuadProblem pb;
    pb.kind = QuadKind::jack_representation;
    pb.name = "jack_representation/(3,2,1),g=3";
    pb.lambda = Partition({3, 2, 1});
    pb.n = 3;
    pb.anchors = {1, 2, 3};
    pb.g = Rational(3);
    out.push_back(pb);
  }
  return out;
}

struct SuiteRow {
  QuadProblem problem;
  QuadReport report;
  bool pass = false;
};

struct SuiteResult {
  std::vector<SuiteRow> rows;
  bool all_pass = true;
};

inline long worker_count() {
  long hw = static_cast<long>(std::thread::hardware_concurrency());
  if (hw < 1) hw = 1;
  if (const char* env = std::getenv("JACKSOV_THREADS")) {
    const long cap = std::atol(env);
    if (cap >= 1 && cap < hw) hw = cap;
  }
  return hw;
}

// Problems are pure and independent; the result order matches the input
// order regardless of completion order.
inline SuiteResult run_suite(const std::vector<QuadProblem>& problems,
                             const QuadOptions& opt) {
  quad_detail::gl_rule(opt.nodes);  // warm the cache before going parallel
  SuiteResult result;
  result.rows.resize(problems.size());
  const long workers = worker_count();
  std::vector<std::future<void>> inflight;
  for (std::size_t start = 0; start < problems.size();
       start += static_cast<std::size_t>(workers)) {
    inflight.clear();
    const std::size_t stop =
        std::min(problems.size(), start + static_cast<std::size_t>(workers));
    for (std::size_t i = start; i < stop; ++i) {
      inflight.push_back(std::async(std::launch::async, [&, i] {
        SuiteRow row;
        row.problem = problems[i];
        row.report = run_problem(problems[i], opt);
        // a problem may declare a looser attainable accuracy than the run
        const double tol = std::max(problems[i].tolerance, opt.tolerance);
        row.pass = row.report.relative_error <= tol;
        result.rows[i] = std::move(row);
      }));
    }
    for (auto& f : inflight) f.get();
  }
  for (const SuiteRow& row : result.rows) {
    if (!row.pass) result.all_pass = false;
  }
  return result;
}

}  // namespace jacksov
