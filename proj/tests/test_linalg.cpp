#include <doctest.h>

#include <random>

#include "support.hpp"

using namespace qlat;

TEST_CASE("determinant and inverse agree with cofactor expansion") {
  std::mt19937 rng(11);
  for (int trial = 0; trial < 100; ++trial) {
    auto g = oracle::random_form(rng, 1 + trial % 4, 8);
    RatMatrix m = to_rat(to_matrix(g));
    CHECK(determinant(m) == Rat(oracle::det(g)));
    auto inv = inverse(m);
    REQUIRE(inv);
    CHECK(m * *inv == RatMatrix::identity(g.size()));
  }
}

TEST_CASE("positive definiteness") {
  CHECK(is_positive_definite(to_rat(IntMatrix{{2, 1}, {1, 2}})));
  CHECK_FALSE(is_positive_definite(to_rat(IntMatrix{{1, 2}, {2, 1}})));
  CHECK_FALSE(is_positive_definite(to_rat(IntMatrix{{0, 0}, {0, 1}})));
  CHECK_THROWS_AS(Lattice::from_gram(IntMatrix{{1, 2}, {3, 1}}), Error);
  try {
    Lattice::from_gram(IntMatrix{{1, 2}, {2, 1}});
    FAIL("expected rejection");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::NotPositiveDefinite);
  }
}

TEST_CASE("hermite basis spans the same module") {
  IntMatrix gens{{2, 4, 6}, {1, 1, 1}, {3, 5, 7}, {0, 2, 4}};
  IntMatrix h = hermite_basis(gens);
  CHECK(h.rows() == 2);
  CHECK(h(0, 0) == 1);
  // every generator is an integer combination of the basis, found by echelon back-substitution
  for (std::size_t r = 0; r < gens.rows(); ++r) {
    IntVector rest = gens.row_vector(r);
    for (std::size_t i = 0; i < h.rows(); ++i) {
      std::size_t p = 0;
      while (h(i, p) == 0) ++p;
      CHECK(rest[p] % h(i, p) == 0);
      Int q = rest[p] / h(i, p);
      for (std::size_t j = 0; j < rest.size(); ++j) rest[j] -= q * h(i, j);
    }
    for (const auto& v : rest) CHECK(v == 0);
  }
}

TEST_CASE("smith form diagonalizes with unimodular transforms") {
  std::mt19937 rng(5);
  for (int trial = 0; trial < 100; ++trial) {
    auto g = oracle::random_form(rng, 1 + trial % 4, 8);
    IntMatrix m = to_matrix(g);
    SmithForm s = smith_form(m);
    IntMatrix d = s.left * m * s.right;
    Int prod = 1;
    for (std::size_t i = 0; i < g.size(); ++i) {
      for (std::size_t j = 0; j < g.size(); ++j) CHECK(d(i, j) == (i == j ? s.diagonal[i] : Int(0)));
      if (i + 1 < g.size()) CHECK(s.diagonal[i + 1] % s.diagonal[i] == 0);
      prod *= s.diagonal[i];
    }
    CHECK(prod == oracle::det(g));
    CHECK(abs(determinant(to_rat(s.left))) == 1);
    CHECK(abs(determinant(to_rat(s.right))) == 1);
  }
}

TEST_CASE("lll preserves the lattice and reduces the basis") {
  std::mt19937 rng(7);
  for (int trial = 0; trial < 100; ++trial) {
    auto g = oracle::random_form(rng, 1 + trial % 4, 8);
    IntMatrix m = to_matrix(g);
    LllResult r = lll_reduce_gram(m);
    CHECK(r.transform * m * transpose(r.transform) == r.gram);
    CHECK(abs(determinant(to_rat(r.transform))) == 1);
    CHECK(r.gram(0, 0) <= m(0, 0));
    // first reduced vector is within the LLL factor of the true minimum
    CHECK(r.gram(0, 0) <= (Int(1) << (g.size() - 1)) * oracle::min_norm(g));
    // size reduction: |2 g_ij| <= g_jj for i > j is implied for rank 2
    if (g.size() == 2) CHECK(abs(2 * r.gram(0, 1)) <= r.gram(0, 0));
  }
}

TEST_CASE("unimodular inverse") {
  IntMatrix u{{1, 2}, {3, 7}};
  CHECK(u * unimodular_inverse(u) == IntMatrix::identity(2));
  CHECK_THROWS_AS(unimodular_inverse(IntMatrix{{2, 0}, {0, 1}}), Error);
}

TEST_CASE("rational parsing and printing round trip") {
  CHECK(*parse_rat("-7/21") == Rat(-1, 3));
  CHECK(*parse_rat("5") == Rat(5));
  CHECK_FALSE(parse_rat("1/0"));
  CHECK_FALSE(parse_rat("abc"));
  CHECK(to_string(make_rat(6, 4)) == "3/2");
}

TEST_CASE("discriminant group of small lattices") {
  auto a2 = Lattice::from_gram(IntMatrix{{2, -1}, {-1, 2}});
  auto g = discriminant_group(a2);
  CHECK(g.order == 3);
  CHECK(g.coset_reps.size() == 3);
  for (const auto& y : g.coset_reps) CHECK(in_dual(a2, y));
  auto d4 = Lattice::from_gram(IntMatrix{{2, -1, 0, 0}, {-1, 2, -1, -1}, {0, -1, 2, 0}, {0, -1, 0, 2}});
  auto gd = discriminant_group(d4);
  CHECK(gd.order == 4);
  CHECK(gd.elementary_divisors == std::vector<Int>{2, 2});
}

TEST_CASE("discriminant group order equals the determinant") {
  std::mt19937 rng(3);
  for (int trial = 0; trial < 100; ++trial) {
    auto g = oracle::random_form(rng, 1 + trial % 4, 6);
    auto dg = discriminant_group(lattice_of(g));
    CHECK(dg.order == oracle::det(g));
    if (dg.order <= 200) {
      CHECK(dg.coset_reps.size() == dg.order.get_ui());
      for (const auto& y : dg.coset_reps) CHECK(in_dual(lattice_of(g), y));
    }
  }
}

TEST_CASE("overlattice and span") {
  auto a1a1 = diagonal_lattice({2, 2});
  auto over = overlattice(a1a1, {RatVector{Rat(1, 2), Rat(1, 2)}});
  CHECK(discriminant(over.lattice) == 1);
  auto sub = span_of(diagonal_lattice({1, 1}), IntMatrix{{1, 1}, {1, -1}, {2, 0}});
  CHECK(discriminant(sub.lattice) == 4);
  CHECK(is_primitive_rows(IntMatrix{{1, 1, 0}}));
  CHECK_FALSE(is_primitive_rows(IntMatrix{{2, 2, 0}}));
}
