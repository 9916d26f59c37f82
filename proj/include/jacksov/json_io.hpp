#pragma once

// JSON forms of every serialised type.  The single invariant across the whole
// surface: parse(print(x)) == x, with deterministic term ordering taken from
// the canonical map orders of the underlying containers.

#include <json.hpp>

#include <algorithm>
#include <stdexcept>
#include <string>
#include <vector>

#include "jacksov/jack.hpp"
#include "jacksov/partition.hpp"
#include "jacksov/poly.hpp"
#include "jacksov/qop.hpp"
#include "jacksov/quad.hpp"
#include "jacksov/rational.hpp"
#include "jacksov/scalar.hpp"
#include "jacksov/sov.hpp"
#include "jacksov/sympoly.hpp"

namespace jacksov {

using Json = nlohmann::json;

// ---------------------------------------------------------------------------
// scalars: Rational as "p/q" text, RatFunc as coefficient arrays

inline Json json_of(const Rational& a) { return rational_to_string(a); }

inline Json json_of(const GPoly& p) {
  Json arr = Json::array();
  for (const Rational& c : p.coeffs()) arr.push_back(rational_to_string(c));
  return arr;
}

inline Json json_of(const RatFunc& f) {
  return Json{{"num", json_of(f.num())}, {"den", json_of(f.den())}};
}

template <class S>
struct JsonScalar;

template <>
struct JsonScalar<Rational> {
  static Rational parse(const Json& j) {
    if (!j.is_string()) throw std::invalid_argument("rational: expected text");
    return parse_rational(j.get<std::string>());
  }
};

inline GPoly gpoly_from_json(const Json& j) {
  if (!j.is_array()) throw std::invalid_argument("poly: expected array");
  std::vector<Rational> cs;
  for (const Json& c : j) cs.push_back(JsonScalar<Rational>::parse(c));
  return GPoly(std::move(cs));
}

template <>
struct JsonScalar<RatFunc> {
  static RatFunc parse(const Json& j) {
    if (j.is_string()) {  // accept a plain rational as a constant
      return RatFunc(GPoly(parse_rational(j.get<std::string>())));
    }
    if (!j.is_object() || !j.contains("num") || !j.contains("den")) {
      throw std::invalid_argument("coupling function: expected num/den");
    }
    return RatFunc(gpoly_from_json(j.at("num")), gpoly_from_json(j.at("den")));
  }
};

// ---------------------------------------------------------------------------
// partitions

inline Json json_of(const Partition& lambda) {
  Json arr = Json::array();
  for (long i = 0; i < lambda.length(); ++i) arr.push_back(lambda[i]);
  return arr;
}

inline Partition partition_from_json(const Json& j) {
  if (!j.is_array()) throw std::invalid_argument("partition: expected array");
  std::vector<long> parts;
  for (const Json& v : j) {
    if (!v.is_number_integer()) {
      throw std::invalid_argument("partition: expected integers");
    }
    parts.push_back(v.get<long>());
  }
  return Partition(std::move(parts));
}

// ---------------------------------------------------------------------------
// symmetric polynomials in the monomial basis

template <class S>
Json json_of(const SymPoly<S>& p) {
  Json terms = Json::array();
  for (const auto& [lambda, c] : p.terms) {
    terms.push_back(Json{{"partition", json_of(lambda)}, {"coeff", json_of(c)}});
  }
  return Json{{"n", p.n}, {"basis", "m"}, {"terms", std::move(terms)}};
}

template <class S>
SymPoly<S> sympoly_from_json(const Json& j) {
  if (!j.is_object() || j.value("basis", "") != "m") {
    throw std::invalid_argument("symmetric polynomial: expected m-basis object");
  }
  SymPoly<S> p;
  p.n = j.at("n").get<long>();
  for (const Json& t : j.at("terms")) {
    const Partition lambda = partition_from_json(t.at("partition"));
    if (lambda.length() != p.n) {
      throw std::invalid_argument("symmetric polynomial: partition length");
    }
    const S c = JsonScalar<S>::parse(t.at("coeff"));
    if (!is_zero(c)) p.terms.emplace(lambda, c);
  }
  return p;
}

// ---------------------------------------------------------------------------
// eigen expansions

template <class S>
Json json_of(const JackExpansion<S>& e) {
  return Json{{"lambda", json_of(e.lambda)},
              {"n", e.n},
              {"poly", json_of(e.poly)}};
}

template <class S>
JackExpansion<S> jack_from_json(const Json& j) {
  JackExpansion<S> e;
  e.lambda = partition_from_json(j.at("lambda"));
  e.n = j.at("n").get<long>();
  e.poly = sympoly_from_json<S>(j.at("poly"));
  return e;
}

// ---------------------------------------------------------------------------
// polynomials in one spectral variable (coefficient arrays by power)

template <class S>
Json json_of_zpoly(const Poly<S>& q) {
  Json arr = Json::array();
  for (const S& c : q.coeffs()) arr.push_back(json_of(c));
  return arr;
}

template <class S>
Poly<S> zpoly_from_json(const Json& j) {
  if (!j.is_array()) throw std::invalid_argument("expected coefficient array");
  std::vector<S> cs;
  for (const Json& c : j) cs.push_back(JsonScalar<S>::parse(c));
  return Poly<S>(std::move(cs));
}

template <class S>
Json json_of(const SymZPoly<S>& v) {
  Json arr = Json::array();
  for (const SymPoly<S>& layer : v.coeffs) arr.push_back(json_of(layer));
  return Json{{"n", v.n}, {"coeffs", std::move(arr)}};
}

template <class S>
SymZPoly<S> symzpoly_from_json(const Json& j) {
  SymZPoly<S> v;
  v.n = j.at("n").get<long>();
  for (const Json& layer : j.at("coeffs")) {
    v.coeffs.push_back(sympoly_from_json<S>(layer));
  }
  v.trim();
  return v;
}

// ---------------------------------------------------------------------------
// polynomials in several spectral variables

template <class S>
Json json_of(const MultiZPoly<S>& q) {
  Json terms = Json::array();
  for (const auto& [key, c] : q.terms) {
    Json mono = Json::array();
    for (const auto& [idx, e] : key) mono.push_back(Json::array({idx, e}));
    terms.push_back(Json{{"monomial", std::move(mono)}, {"coeff", json_of(c)}});
  }
  return Json{{"terms", std::move(terms)}};
}

template <class S>
MultiZPoly<S> multizpoly_from_json(const Json& j) {
  MultiZPoly<S> q;
  for (const Json& t : j.at("terms")) {
    typename MultiZPoly<S>::Key key;
    for (const Json& pair : t.at("monomial")) {
      if (!pair.is_array() || pair.size() != 2) {
        throw std::invalid_argument("monomial: expected [index, exponent]");
      }
      const long idx = pair[0].get<long>(), e = pair[1].get<long>();
      if (idx < 1 || e < 1) {
        throw std::invalid_argument("monomial: bad index or exponent");
      }
      key.emplace_back(idx, e);
    }
    // canonical form: indices sorted and unique
    std::sort(key.begin(), key.end());
    typename MultiZPoly<S>::Key canon;
    for (const auto& [idx, e] : key) {
      if (!canon.empty() && canon.back().first == idx) {
        canon.back().second += e;
      } else {
        canon.emplace_back(idx, e);
      }
    }
    key = std::move(canon);
    const S c = JsonScalar<S>::parse(t.at("coeff"));
    if (!is_zero(c)) {
      auto [it, fresh] = q.terms.emplace(std::move(key), c);
      if (!fresh) it->second = S(it->second + c);
    }
  }
  return q;
}

// ---------------------------------------------------------------------------
// quadrature reports

inline Json json_of(const QuadReport& r) {
  return Json{{"computed", r.computed},
              {"expected", r.expected},
              {"relative_error", r.relative_error},
              {"evaluations", r.evaluations}};
}

inline QuadReport quadreport_from_json(const Json& j) {
  QuadReport r;
  r.computed = j.at("computed").get<double>();
  r.expected = j.at("expected").get<double>();
  r.relative_error = j.at("relative_error").get<double>();
  r.evaluations = j.at("evaluations").get<long>();
  return r;
}

}  // namespace jacksov
