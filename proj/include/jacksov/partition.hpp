#pragma once

// Partitions of a fixed length n, zero parts included, with the dominance
// order and the enumeration helpers the triangular solves rely on.

#include <algorithm>
#include <compare>
#include <stdexcept>
#include <utility>
#include <vector>

namespace jacksov {

// Non-increasing sequence of n naturals.  Zero parts are materialised so the
// length always matches the number of variables in play.
struct Partition {
  std::vector<long> parts;

  Partition() = default;
  explicit Partition(std::vector<long> p) : parts(std::move(p)) {
    for (std::size_t i = 0; i + 1 < parts.size(); ++i) {
      if (parts[i] < parts[i + 1]) {
        throw std::invalid_argument("parts must be non-increasing");
      }
    }
    if (!parts.empty() && parts.back() < 0) {
      throw std::invalid_argument("parts must be non-negative");
    }
  }

  long length() const { return static_cast<long>(parts.size()); }
  long operator[](long i) const { return parts[static_cast<std::size_t>(i)]; }

  friend bool operator==(const Partition& a, const Partition& b) {
    return a.parts == b.parts;
  }
  // lexicographic; used as the deterministic tie-break everywhere
  friend std::strong_ordering operator<=>(const Partition& a,
                                          const Partition& b) {
    return a.parts <=> b.parts;
  }
};

inline long weight(const Partition& p) {
  long w = 0;
  for (long x : p.parts) w += x;
  return w;
}

// mu is dominated by lambda: equal weights and every prefix sum of mu is at
// most the corresponding prefix sum of lambda.
inline bool dominance_leq(const Partition& mu, const Partition& lambda) {
  if (mu.length() != lambda.length()) {
    throw std::invalid_argument("dominance_leq needs equal lengths");
  }
  if (weight(mu) != weight(lambda)) return false;
  long pm = 0, pl = 0;
  for (long i = 0; i < mu.length(); ++i) {
    pm += mu[i];
    pl += lambda[i];
    if (pm > pl) return false;
  }
  return true;
}

// All partitions of weight w with exactly n (possibly zero) parts, in
// reverse-lexicographic order (largest first).
inline std::vector<Partition> enumerate(long n, long w) {
  std::vector<Partition> out;
  std::vector<long> cur(static_cast<std::size_t>(n), 0);
  auto rec = [&](auto&& self, long pos, long remaining, long cap) -> void {
    if (pos == n) {
      if (remaining == 0) out.emplace_back(Partition{cur});
      return;
    }
    long hi = std::min(cap, remaining);
    for (long v = hi; v >= 0; --v) {
      // remaining parts can absorb at most v each
      if (v * (n - pos) < remaining) break;
      cur[static_cast<std::size_t>(pos)] = v;
      self(self, pos + 1, remaining - v, v);
    }
  };
  if (n == 0) {
    if (w == 0) out.emplace_back();
    return out;
  }
  rec(rec, 0, w, w);
  return out;
}

// Every mu with mu dominated-by lambda, lambda first, then decreasing in the
// reverse-lexicographic order.
inline std::vector<Partition> lower_set(const Partition& lambda) {
  std::vector<Partition> out;
  for (const Partition& mu : enumerate(lambda.length(), weight(lambda))) {
    if (dominance_leq(mu, lambda)) out.push_back(mu);
  }
  return out;
}

// (lambda_1 - lambda_n, ..., lambda_{n-1} - lambda_n, 0) of length n, and the
// same with the trailing zero dropped (length n-1).
inline std::pair<Partition, Partition> flat_and_natural(
    const Partition& lambda) {
  const long n = lambda.length();
  if (n < 2) throw std::invalid_argument("flat_and_natural needs length >= 2");
  std::vector<long> flat(static_cast<std::size_t>(n), 0);
  for (long i = 0; i + 1 < n; ++i) flat[static_cast<std::size_t>(i)] = lambda[i] - lambda[n - 1];
  std::vector<long> nat(flat.begin(), flat.end() - 1);
  return {Partition(std::move(flat)), Partition(std::move(nat))};
}

}  // namespace jacksov
