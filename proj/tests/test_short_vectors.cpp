#include <doctest.h>

#include <random>

#include "qlat/short_vectors.hpp"
#include "support.hpp"

using namespace qlat;

TEST_CASE("short vectors match a box search") {
  std::mt19937 rng(2024);
  for (int trial = 0; trial < 120; ++trial) {
    auto g = oracle::random_form(rng, 1 + trial % 4, 8);
    const long bound = 1 + trial % 12;
    auto lat = lattice_of(g);
    auto fast = short_vectors(lat, Rat(bound));
    auto slow = oracle::box_vectors(g, bound);
    REQUIRE(fast.size() * 2 == slow.size());
    for (const auto& v : fast) {
      oracle::Vec x(v.coords.begin(), v.coords.end());
      CHECK(Rat(oracle::norm(g, x)) == v.norm);
      auto first = std::find_if(x.begin(), x.end(), [](long c) { return c != 0; });
      CHECK(*first > 0);
    }
    auto hist = norm_histogram(lat, Rat(bound));
    auto ref = oracle::histogram(g, bound);
    REQUIRE(hist.size() == ref.size());
    for (const auto& [k, c] : ref) CHECK(hist.at(Rat(k)) == c);
    CHECK(minimum(lat) == Rat(oracle::min_norm(g)));
  }
}

TEST_CASE("sorted by norm then coordinates") {
  auto lat = Lattice::from_gram(IntMatrix{{2, -1}, {-1, 2}});
  auto v = short_vectors(lat, Rat(6));
  for (std::size_t i = 1; i < v.size(); ++i) {
    bool ordered = v[i - 1].norm < v[i].norm || (v[i - 1].norm == v[i].norm && v[i - 1].coords < v[i].coords);
    CHECK(ordered);
  }
  CHECK(v.size() == 3 + 3);  // three roots, three vectors of norm 6
}

TEST_CASE("dual enumeration and minima") {
  auto a2 = Lattice::from_gram(IntMatrix{{2, -1}, {-1, 2}});
  CHECK(dual_minimum(a2) == Rat(2, 3));
  CHECK(*dual_minimum_outside(a2) == Rat(2, 3));
  auto dv = dual_short_vectors(a2, Rat(2, 3));
  CHECK(dv.size() == 3);
  CHECK_FALSE(dual_minimum_outside(diagonal_lattice({1, 1, 1})).has_value());
  // <1> + <4>: dual vectors of norm 1/4 lie outside L
  CHECK(*dual_minimum_outside(diagonal_lattice({1, 4})) == Rat(1, 4));
  // <1> + <1> + <4> has dual minimum 1/4 too; L itself contains norm 1
  CHECK(dual_minimum(diagonal_lattice({1, 1, 4})) == Rat(1, 4));
  CHECK_THROWS_AS(dual_minimum(Lattice::from_gram(RatMatrix{{Rat(1, 2)}})), Error);
}

TEST_CASE("dual minimum outside matches a box search in the dual") {
  std::mt19937 rng(99);
  for (int trial = 0; trial < 60; ++trial) {
    auto g = oracle::random_form(rng, 1 + trial % 3, 6);
    auto lat = lattice_of(g);
    const long d = oracle::det(g);
    // d * G^-1 is the adjugate: an integer form; dual norms are adj-norms / d
    oracle::Mat adj(g.size(), oracle::Vec(g.size()));
    for (std::size_t i = 0; i < g.size(); ++i)
      for (std::size_t j = 0; j < g.size(); ++j) {
        long c = g.size() == 1 ? 1 : oracle::det(oracle::minor_of(g, j, i));
        adj[i][j] = ((i + j) % 2 ? -c : c);
      }
    auto got = dual_minimum_outside(lat);
    if (d == 1) {
      CHECK_FALSE(got);
      continue;
    }
    REQUIRE(got);
    // search dual coordinates c with adj-norm <= d * got; membership: c * adj == 0 mod d
    const long bound = Rat(*got * Rat(d)).get_num().get_si();
    long best = -1;
    for (const auto& c : oracle::box_vectors(adj, bound)) {
      bool inside = true;
      for (std::size_t j = 0; j < g.size(); ++j) {
        long s = 0;
        for (std::size_t i = 0; i < g.size(); ++i) s += c[i] * adj[i][j];
        if (s % d != 0) inside = false;
      }
      if (inside) continue;
      long nrm = oracle::norm(adj, c);
      if (best < 0 || nrm < best) best = nrm;
    }
    CHECK(make_rat(best, d) == *got);
  }
}

TEST_CASE("roots and represented integers") {
  auto d4 = Lattice::from_gram(IntMatrix{{2, -1, 0, 0}, {-1, 2, -1, -1}, {0, -1, 2, 0}, {0, -1, 0, 2}});
  CHECK(roots(d4).size() == 12);
  auto rs = root_sublattice(d4);
  REQUIRE(rs);
  CHECK(discriminant(rs->lattice) == 4);
  CHECK_FALSE(root_sublattice(diagonal_lattice({3, 3})));
  auto reps = represented_integers(diagonal_lattice({1, 1}), 10);
  CHECK(reps == std::set<long>{1, 2, 4, 5, 8, 9, 10});
}

TEST_CASE("budget overflow is reported") {
  EnumerationOptions tight;
  tight.node_budget = 10;
  try {
    short_vectors(diagonal_lattice({1, 1, 1, 1}), Rat(50), tight);
    FAIL("expected budget error");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::BoundTooLargeForBudget);
  }
}

TEST_CASE("represented integers of small forms") {
  CHECK(represented_integers(diagonal_lattice({2}), 20) == std::set<long>{2, 8, 18});
  CHECK(represented_integers(Lattice::from_gram(IntMatrix{{2, -1}, {-1, 2}}), 10) == std::set<long>{2, 6, 8});
  std::set<long> three;
  for (long t = 1; t <= 20; ++t)
    if (t != 7 && t != 15) three.insert(t);
  CHECK(represented_integers(diagonal_lattice({1, 1, 1}), 20) == three);
}

namespace {

// Random unimodular matrix as a product of elementary row operations.
IntMatrix random_unimodular(std::mt19937& rng, std::size_t n) {
  IntMatrix u(n, n);
  for (std::size_t i = 0; i < n; ++i) u(i, i) = 1;
  if (n < 2) return u;
  std::uniform_int_distribution<std::size_t> pick(0, n - 1);
  std::uniform_int_distribution<long> mult(-2, 2);
  for (int step = 0; step < 6; ++step) {
    const std::size_t a = pick(rng), b = pick(rng);
    if (a == b) continue;
    const long k = mult(rng);
    for (std::size_t j = 0; j < n; ++j) u(a, j) += k * u(b, j);
  }
  return u;
}

bool squarefree(long d) {
  for (long p = 2; p * p <= d; ++p)
    if (d % (p * p) == 0) return false;
  return true;
}

}  // namespace

TEST_CASE("short-vector properties on random forms") {
  std::mt19937 rng(7);
  int squarefree_seen = 0;
  for (int trial = 0; trial < 100; ++trial) {
    const std::size_t n = 1 + trial % 4;
    auto g = oracle::random_form(rng, n, 8);
    auto lat = lattice_of(g);

    // isometric copy, same norm multiset
    auto moved = lat.change_basis(random_unimodular(rng, n));
    CHECK(norm_histogram(moved, Rat(12)) == norm_histogram(lat, Rat(12)));

    auto h = oracle::random_form(rng, 1 + trial % 2, 8);
    auto other = lattice_of(h);
    CHECK(minimum(orthogonal_sum(lat, other)) == std::min(minimum(lat), minimum(other)));

    // dual minimum outside the lattice
    const Rat dmin = dual_minimum(lat);
    auto outside = dual_minimum_outside(lat);
    const long d = oracle::det(g);
    if (d == 1) {
      CHECK_FALSE(outside);
      continue;
    }
    REQUIRE(outside);
    CHECK(*outside >= dmin);
    bool minimal_outside = false;
    for (const auto& v : dual_short_vectors(lat, dmin))
      minimal_outside = minimal_outside || !dual_vector_in_lattice(lat, v.coords);
    CHECK((*outside == dmin) == minimal_outside);

    if (squarefree(d)) {
      ++squarefree_seen;
      for (const auto& v : dual_short_vectors(lat, *outside + 2)) {
        if (dual_vector_in_lattice(lat, v.coords)) continue;
        const Rat scaled_norm = v.norm * d;
        CHECK(scaled_norm.get_den() == 1);
        CHECK(v.norm.get_den() != 1);
      }
    }
  }
  CHECK(squarefree_seen > 10);
}
