#include "qlat/short_vectors.hpp"

#include <algorithm>
#include <cmath>

namespace qlat {

namespace {

using i128 = __int128;

std::int64_t checked_int64(i128 v) {
  if (v > INT64_MAX || v < INT64_MIN) throw Error(ErrorCode::InvalidParameter, "coordinate overflow in enumeration");
  return static_cast<std::int64_t>(v);
}

struct FinckePohst {
  std::size_t n = 0;
  std::vector<std::int64_t> a;  // reduced Gram, row-major
  std::vector<std::int64_t> t;  // reduced basis in input coordinates, row-major
  std::vector<long double> q;   // Cholesky-style coefficients, row-major
  std::int64_t bound = 0;
  long double slack = 0;
  std::uint64_t budget = 0;
  std::uint64_t nodes = 0;
  const FormVisitor* visit = nullptr;
  std::vector<std::int64_t> x;
  std::vector<std::int64_t> out;
  bool stopped = false;

  long double qq(std::size_t i, std::size_t j) const { return q[i * n + j]; }

  void setup(const IntMatrix& gram) {
    n = gram.rows();
    LllResult red = lll_reduce_gram(gram);
    a.resize(n * n);
    t.resize(n * n);
    q.resize(n * n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) {
        a[i * n + j] = to_int64(red.gram(i, j));
        t[i * n + j] = to_int64(red.transform(i, j));
        q[i * n + j] = static_cast<long double>(a[i * n + j]);
      }
    // Q(x) = sum_i q_ii (x_i + sum_{j>i} q_ij x_j)^2
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = i + 1; j < n; ++j) {
        q[j * n + i] = q[i * n + j];
        q[i * n + j] /= q[i * n + i];
      }
      for (std::size_t k = i + 1; k < n; ++k)
        for (std::size_t l = k; l < n; ++l) q[k * n + l] -= q[k * n + i] * q[i * n + l];
    }
    x.assign(n, 0);
    out.assign(n, 0);
  }

  void leaf() {
    i128 norm = 0;
    for (std::size_t i = 0; i < n; ++i) {
      if (x[i] == 0) continue;
      i128 row = 0;
      for (std::size_t j = 0; j < n; ++j) row += static_cast<i128>(a[i * n + j]) * x[j];
      norm += row * x[i];
    }
    if (norm > bound || norm <= 0) return;
    for (std::size_t j = 0; j < n; ++j) {
      i128 s = 0;
      for (std::size_t i = 0; i < n; ++i) s += static_cast<i128>(x[i]) * t[i * n + j];
      out[j] = checked_int64(s);
    }
    auto first = std::find_if(out.begin(), out.end(), [](std::int64_t v) { return v != 0; });
    if (first != out.end() && *first < 0)
      for (auto& v : out) v = -v;
    if (!(*visit)(out, static_cast<std::int64_t>(norm))) stopped = true;
  }

  void level(std::size_t i, long double remaining, bool zero_above) {
    long double c = 0;
    for (std::size_t j = i + 1; j < n; ++j) c += qq(i, j) * static_cast<long double>(x[j]);
    const long double center = -c;
    const long double radius = std::sqrt(std::max(remaining, 0.0L) / qq(i, i));
    auto lo = static_cast<std::int64_t>(std::ceil(center - radius));
    auto hi = static_cast<std::int64_t>(std::floor(center + radius));
    if (zero_above) lo = std::max<std::int64_t>(lo, 0);
    for (std::int64_t v = lo; v <= hi && !stopped; ++v) {
      if (++nodes > budget)
        throw Error(ErrorCode::BoundTooLargeForBudget, "short-vector enumeration exceeded its node budget");
      x[i] = v;
      const long double d = static_cast<long double>(v) - center;
      const long double rem = remaining - qq(i, i) * d * d;
      if (rem < -slack) continue;
      const bool zero = zero_above && v == 0;
      if (i == 0) {
        if (!zero) leaf();
      } else {
        level(i - 1, rem, zero);
      }
    }
    x[i] = 0;
  }
};

struct ScaledForm {
  IntMatrix gram;
  Int denominator;
};

ScaledForm scale_to_integral(const RatMatrix& g) {
  ScaledForm s{IntMatrix(g.rows(), g.cols()), common_denominator(g)};
  for (std::size_t i = 0; i < g.rows(); ++i)
    for (std::size_t j = 0; j < g.cols(); ++j) {
      Rat v = g(i, j) * Rat(s.denominator);
      s.gram(i, j) = v.get_num();
    }
  return s;
}

Int floor_of(const Rat& r) {
  Int f;
  mpz_fdiv_q(f.get_mpz_t(), r.get_num().get_mpz_t(), r.get_den().get_mpz_t());
  return f;
}

std::vector<ShortVector> collect(const RatMatrix& gram, const Rat& bound, const EnumerationOptions& options) {
  if (sgn(bound) < 0) throw Error(ErrorCode::InvalidParameter, "bound must be nonnegative");
  ScaledForm s = scale_to_integral(gram);
  std::vector<ShortVector> found;
  const Int scaled_bound = floor_of(bound * Rat(s.denominator));
  enumerate_integral_form(s.gram, scaled_bound, options, [&](std::span<const std::int64_t> c, std::int64_t norm) {
    Rat r = make_rat(Int(static_cast<long>(norm)), s.denominator);
    found.push_back({std::vector<std::int64_t>(c.begin(), c.end()), std::move(r)});
    return true;
  });
  std::sort(found.begin(), found.end(), [](const ShortVector& l, const ShortVector& r) {
    int c = cmp(l.norm, r.norm);
    if (c != 0) return c < 0;
    return l.coords < r.coords;
  });
  return found;
}

Rat minimum_of(const RatMatrix& gram, const EnumerationOptions& options) {
  ScaledForm s = scale_to_integral(gram);
  LllResult red = lll_reduce_gram(s.gram);
  Int best = red.gram(0, 0);
  for (std::size_t i = 1; i < red.gram.rows(); ++i)
    if (red.gram(i, i) < best) best = red.gram(i, i);
  enumerate_integral_form(red.gram, best, options, [&](std::span<const std::int64_t>, std::int64_t norm) {
    if (Int(static_cast<long>(norm)) < best) best = Int(static_cast<long>(norm));
    return true;
  });
  Rat r = make_rat(best, s.denominator);
  return r;
}

}  // namespace

void enumerate_integral_form(const IntMatrix& gram, const Int& bound, const EnumerationOptions& options,
                             const FormVisitor& visit) {
  if (!gram.square() || gram.rows() == 0) throw Error(ErrorCode::InvalidParameter, "enumeration needs a square form");
  if (sgn(bound) <= 0) return;
  FinckePohst fp;
  fp.setup(gram);
  fp.bound = to_int64(bound);
  fp.slack = 1e-6L * (static_cast<long double>(fp.bound) + 1.0L);
  fp.budget = options.node_budget;
  fp.visit = &visit;
  fp.level(fp.n - 1, static_cast<long double>(fp.bound) + fp.slack, true);
}

std::vector<ShortVector> short_vectors(const Lattice& lattice, const Rat& bound, const EnumerationOptions& options) {
  return collect(lattice.gram(), bound, options);
}

std::vector<ShortVector> dual_short_vectors(const Lattice& lattice, const Rat& bound,
                                            const EnumerationOptions& options) {
  return collect(*inverse(lattice.gram()), bound, options);
}

Rat minimum(const Lattice& lattice, const EnumerationOptions& options) { return minimum_of(lattice.gram(), options); }

Rat dual_minimum(const Lattice& lattice, const EnumerationOptions& options) {
  integral_gram(lattice);
  return minimum_of(*inverse(lattice.gram()), options);
}

bool dual_vector_in_lattice(const Lattice& lattice, std::span<const std::int64_t> c) {
  // y = c G^{-1} must be integral
  RatMatrix inv = *inverse(lattice.gram());
  for (std::size_t j = 0; j < inv.cols(); ++j) {
    Rat s = 0;
    for (std::size_t i = 0; i < inv.rows(); ++i)
      if (c[i] != 0) s += Rat(Int(static_cast<long>(c[i]))) * inv(i, j);
    if (s.get_den() != 1) return false;
  }
  return true;
}

std::optional<Rat> dual_minimum_outside(const Lattice& lattice, const EnumerationOptions& options) {
  integral_gram(lattice);
  RatMatrix inv = *inverse(lattice.gram());
  ScaledForm s = scale_to_integral(inv);  // s.gram = D G^{-1}
  if (s.denominator == 1) return std::nullopt;
  const std::size_t n = inv.rows();
  std::vector<std::int64_t> scaled_inv(n * n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) scaled_inv[i * n + j] = to_int64(s.gram(i, j));
  const std::int64_t den = to_int64(s.denominator);
  auto outside = [&](std::span<const std::int64_t> c) {
    for (std::size_t j = 0; j < n; ++j) {
      i128 acc = 0;
      for (std::size_t i = 0; i < n; ++i) acc += static_cast<i128>(c[i]) * scaled_inv[i * n + j];
      if (acc % den != 0) return true;
    }
    return false;
  };

  // Increase the bound until a vector outside L shows up.
  Rat bound = minimum_of(inv, options);
  const Rat step_floor(Int(1), s.denominator);
  while (true) {
    std::optional<std::int64_t> best;
    const Int scaled_bound = floor_of(bound * Rat(s.denominator));
    enumerate_integral_form(s.gram, scaled_bound, options, [&](std::span<const std::int64_t> c, std::int64_t norm) {
      if ((!best || norm < *best) && outside(c)) best = norm;
      return true;
    });
    if (best) {
      Rat r = make_rat(Int(static_cast<long>(*best)), s.denominator);
      return r;
    }
    Rat step = bound / 4;
    if (step < step_floor) step = step_floor;
    bound += step;
  }
}

std::vector<ShortVector> roots(const Lattice& lattice, const EnumerationOptions& options) {
  integral_gram(lattice);
  return short_vectors(lattice, Rat(2), options);
}

std::optional<Sublattice> root_sublattice(const Lattice& lattice, const EnumerationOptions& options) {
  auto rs = roots(lattice, options);
  if (rs.empty()) return std::nullopt;
  IntMatrix gens(rs.size(), lattice.rank());
  for (std::size_t i = 0; i < rs.size(); ++i)
    for (std::size_t j = 0; j < lattice.rank(); ++j) gens(i, j) = Int(static_cast<long>(rs[i].coords[j]));
  return span_of(lattice, gens);
}

std::set<long> represented_integers(const Lattice& lattice, long bound, const EnumerationOptions& options) {
  IntMatrix g = integral_gram(lattice);
  if (bound < 1) throw Error(ErrorCode::InvalidParameter, "bound must be at least 1");
  std::set<long> out;
  enumerate_integral_form(g, Int(bound), options, [&](std::span<const std::int64_t>, std::int64_t norm) {
    out.insert(static_cast<long>(norm));
    return true;
  });
  return out;
}

std::map<Rat, std::size_t> norm_histogram(const Lattice& lattice, const Rat& bound, const EnumerationOptions& options) {
  ScaledForm s = scale_to_integral(lattice.gram());
  std::map<std::int64_t, std::size_t> counts;
  enumerate_integral_form(s.gram, floor_of(bound * Rat(s.denominator)), options,
                          [&](std::span<const std::int64_t>, std::int64_t norm) {
                            ++counts[norm];
                            return true;
                          });
  std::map<Rat, std::size_t> out;
  for (const auto& [k, v] : counts) {
    Rat r = make_rat(Int(static_cast<long>(k)), s.denominator);
    out.emplace(std::move(r), v);
  }
  return out;
}

}  // namespace qlat
