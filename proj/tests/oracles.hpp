#pragma once

// Naive reference computations used to cross-check the library. Everything
// here is deliberately simple: box searches, permutation expansions, plain
// loops over small integers.

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <map>
#include <numeric>
#include <random>
#include <vector>

namespace oracle {

using Mat = std::vector<std::vector<long>>;
using Vec = std::vector<long>;

inline long norm(const Mat& g, const Vec& x) {
  long s = 0;
  for (std::size_t i = 0; i < g.size(); ++i)
    for (std::size_t j = 0; j < g.size(); ++j) s += x[i] * g[i][j] * x[j];
  return s;
}

inline long inner(const Mat& g, const Vec& x, const Vec& y) {
  long s = 0;
  for (std::size_t i = 0; i < g.size(); ++i)
    for (std::size_t j = 0; j < g.size(); ++j) s += x[i] * g[i][j] * y[j];
  return s;
}

/// Leibniz expansion.
inline long det(const Mat& g) {
  const std::size_t n = g.size();
  std::vector<std::size_t> p(n);
  std::iota(p.begin(), p.end(), 0);
  long total = 0;
  do {
    long term = 1;
    for (std::size_t i = 0; i < n; ++i) term *= g[i][p[i]];
    int inversions = 0;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i + 1; j < n; ++j)
        if (p[i] > p[j]) ++inversions;
    total += (inversions % 2 ? -term : term);
  } while (std::next_permutation(p.begin(), p.end()));
  return total;
}

inline Mat minor_of(const Mat& g, std::size_t r, std::size_t c) {
  Mat m;
  for (std::size_t i = 0; i < g.size(); ++i) {
    if (i == r) continue;
    Vec row;
    for (std::size_t j = 0; j < g.size(); ++j)
      if (j != c) row.push_back(g[i][j]);
    m.push_back(row);
  }
  return m;
}

inline bool positive_definite(const Mat& g) {
  for (std::size_t k = 1; k <= g.size(); ++k) {
    Mat lead(k, Vec(k));
    for (std::size_t i = 0; i < k; ++i)
      for (std::size_t j = 0; j < k; ++j) lead[i][j] = g[i][j];
    if (det(lead) <= 0) return false;
  }
  return true;
}

/// Coordinate bound valid for every x with Q(x) <= bound: x_i^2 <= bound * (G^-1)_ii.
inline long box_radius(const Mat& g, long bound, std::size_t i) {
  const std::size_t n = g.size();
  if (n == 1) return static_cast<long>(std::floor(std::sqrt(double(bound) / double(g[0][0])))) + 1;
  const long cof = det(minor_of(g, i, i));
  const long d = det(g);
  return static_cast<long>(std::floor(std::sqrt(double(bound) * double(cof) / double(d)))) + 1;
}

/// Every nonzero x with Q(x) <= bound (both signs).
inline std::vector<Vec> box_vectors(const Mat& g, long bound) {
  const std::size_t n = g.size();
  Vec r(n);
  for (std::size_t i = 0; i < n; ++i) r[i] = box_radius(g, bound, i);
  std::vector<Vec> out;
  Vec x(n);
  for (std::size_t i = 0; i < n; ++i) x[i] = -r[i];
  while (true) {
    bool zero = std::all_of(x.begin(), x.end(), [](long v) { return v == 0; });
    if (!zero && norm(g, x) <= bound) out.push_back(x);
    std::size_t k = 0;
    while (k < n && x[k] == r[k]) {
      x[k] = -r[k];
      ++k;
    }
    if (k == n) break;
    ++x[k];
  }
  return out;
}

inline std::map<long, std::size_t> histogram(const Mat& g, long bound) {
  std::map<long, std::size_t> h;
  for (const auto& v : box_vectors(g, bound)) ++h[norm(g, v)];
  for (auto& [k, c] : h) c /= 2;
  return h;
}

inline long min_norm(const Mat& g) {
  long b = g[0][0];
  for (std::size_t i = 0; i < g.size(); ++i) b = std::min(b, g[i][i]);
  long best = b;
  for (const auto& v : box_vectors(g, b)) best = std::min(best, norm(g, v));
  return best;
}

/// Does some integer n x m matrix T give T^t G T = H? Exhaustive over columns of
/// norm H_jj with pairwise inner products checked.
inline bool represents(const Mat& g, const Mat& h) {
  const std::size_t m = h.size();
  long maxn = 0;
  for (std::size_t j = 0; j < m; ++j) maxn = std::max(maxn, h[j][j]);
  auto pool = box_vectors(g, maxn);
  std::vector<const Vec*> chosen(m);
  auto rec = [&](auto&& self, std::size_t j) -> bool {
    if (j == m) return true;
    for (const auto& v : pool) {
      if (norm(g, v) != h[j][j]) continue;
      bool ok = true;
      for (std::size_t k = 0; k < j && ok; ++k) ok = inner(g, *chosen[k], v) == h[k][j];
      if (!ok) continue;
      chosen[j] = &v;
      if (self(self, j + 1)) return true;
    }
    return false;
  };
  return rec(rec, 0);
}

inline bool isometric(const Mat& a, const Mat& b) {
  return a.size() == b.size() && det(a) == det(b) && represents(a, b);
}

/// Random positive definite symmetric matrix with entries in [-bound, bound]
/// and diagonal in [1, bound].
inline Mat random_form(std::mt19937& rng, std::size_t n, long bound) {
  std::uniform_int_distribution<long> off(-bound, bound);
  std::uniform_int_distribution<long> diag(1, bound);
  while (true) {
    Mat g(n, Vec(n));
    for (std::size_t i = 0; i < n; ++i) {
      g[i][i] = diag(rng);
      for (std::size_t j = i + 1; j < n; ++j) g[i][j] = g[j][i] = off(rng);
    }
    if (positive_definite(g)) return g;
  }
}

}  // namespace oracle
