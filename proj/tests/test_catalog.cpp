#include <doctest.h>

#include "qlat/catalog.hpp"
#include "qlat/constructions.hpp"
#include "qlat/short_vectors.hpp"
#include "support.hpp"

using namespace qlat;

namespace {
Lattice I(int n) { return root_lattice({RootFamily::I, n}); }

bool contains_class(const std::vector<ReducedForm>& forms, const Lattice& l) {
  for (const auto& f : forms)
    if (is_isometric(f.lattice(), l)) return true;
  return false;
}
}  // namespace

TEST_CASE("rank one enumeration") {
  auto forms = enumerate_lattices(1, 5);
  REQUIRE(forms.size() == 5);
  for (long a = 1; a <= 5; ++a) CHECK(forms[a - 1].gram == IntMatrix{{a}});
  CHECK_THROWS_AS(enumerate_lattices(4, 2), Error);
  CHECK_THROWS_AS(enumerate_lattices(2, 0), Error);
}

TEST_CASE("rank two enumeration matches brute-force reduction") {
  const long bound = 5;
  auto forms = enumerate_lattices(2, bound);
  bool has_a2 = false;
  for (const auto& f : forms) has_a2 = has_a2 || f.gram == IntMatrix{{2, 1}, {1, 2}};
  CHECK(has_a2);
  for (const auto& f : forms) CHECK_FALSE(f.gram == IntMatrix{{2, -1}, {-1, 2}});
  // every symmetric integer matrix with entries in [-5, 5] whose successive
  // minima are <= 5, up to isometry
  std::vector<oracle::Mat> classes;
  for (long a = 1; a <= bound; ++a)
    for (long c = 1; c <= bound; ++c)
      for (long b = -bound; b <= bound; ++b) {
        oracle::Mat g{{a, b}, {b, c}};
        if (!oracle::positive_definite(g)) continue;
        // second successive minimum: the least norm of a vector independent of a shortest one
        auto vs = oracle::box_vectors(g, bound);
        long m1 = oracle::min_norm(g);
        oracle::Vec first;
        for (const auto& v : vs)
          if (oracle::norm(g, v) == m1) first = v;
        long m2 = -1;
        for (const auto& v : vs)
          if (v[0] * first[1] - v[1] * first[0] != 0 && (m2 < 0 || oracle::norm(g, v) < m2)) m2 = oracle::norm(g, v);
        if (m2 < 0 || m2 > bound) continue;
        bool seen = false;
        for (const auto& k : classes) seen = seen || oracle::isometric(k, g);
        if (!seen) classes.push_back(g);
      }
  CHECK(forms.size() == classes.size());
  for (const auto& k : classes) CHECK(contains_class(forms, lattice_of(k)));
}

TEST_CASE("rank three enumeration is duplicate free and reduced") {
  auto forms = enumerate_lattices(3, 2);
  CHECK(contains_class(forms, I(3)));
  CHECK(contains_class(forms, orthogonal_sum(root_lattice({RootFamily::A, 2}), I(1))));
  CHECK(contains_class(forms, root_lattice({RootFamily::A, 3})));
  for (std::size_t i = 0; i < forms.size(); ++i) {
    const auto& g = forms[i].gram;
    CHECK(g(0, 0) <= g(1, 1));
    CHECK(g(1, 1) <= g(2, 2));
    for (std::size_t r = 0; r < 3; ++r)
      for (std::size_t c = r + 1; c < 3; ++c) CHECK(2 * abs(g(r, c)) <= g(r, r));
    for (std::size_t j = i + 1; j < forms.size(); ++j) CHECK_FALSE(is_isometric(forms[i].lattice(), forms[j].lattice()));
  }
}

TEST_CASE("truncated exceptional sets") {
  auto e3 = truncated_exceptional_set(I(3), 1, 20);
  REQUIRE(e3.members.size() == 2);
  CHECK(e3.members[0].gram == IntMatrix{{7}});
  CHECK(e3.members[1].gram == IntMatrix{{15}});
  CHECK(rank_one_exceptions(I(3), 20) == std::vector<long>{7, 15});
  CHECK(truncated_exceptional_set(I(4), 1, 50).members.empty());
  CHECK(rank_one_exceptions(I(4), 50).empty());
}

TEST_CASE("binary exceptions of the explicit summands") {
  // <1,2> + [[2,1],[1,m+1]] fails to represent [[2,1],[1,k]] for 1 <= k <= m
  const long m = 2;
  Lattice target = orthogonal_sum(diagonal_lattice({1, 2}), Lattice::from_gram(IntMatrix{{2, 1}, {1, m + 1}}));
  auto ex = truncated_exceptional_set(target, 2, 4);
  for (long k = 1; k <= m; ++k) {
    Lattice f = Lattice::from_gram(IntMatrix{{2, 1}, {1, k}});
    if (!is_positive_definite(f.gram())) continue;
    CHECK(contains_class(ex.members, f));
  }
}

TEST_CASE("exceptional sets shrink when a summand is added") {
  std::vector<Lattice> targets{I(2), diagonal_lattice({1, 2}), root_lattice({RootFamily::A, 2}), diagonal_lattice({1, 3})};
  for (const auto& t : targets)
    for (long a : {1, 2, 3}) {
      auto small = truncated_exceptional_set(t, 2, 3);
      auto big = truncated_exceptional_set(orthogonal_sum(t, diagonal_lattice({a})), 2, 3);
      for (const auto& f : big.members) CHECK(contains_class(small.members, f.lattice()));
    }
}

TEST_CASE("fifteen criterion on diagonal quaternary forms") {
  const std::vector<long> critical{1, 2, 3, 5, 6, 7, 10, 14, 15};
  int universal = 0;
  for (long a = 1; a <= 5; ++a)
    for (long b = a; b <= 5; ++b)
      for (long c = b; c <= 5; ++c)
        for (long d = c; d <= 5; ++d) {
          auto seen = represented_integers(diagonal_lattice({a, b, c, d}), 200);
          bool all = true;
          for (long t : critical) all = all && seen.count(t);
          if (!all) continue;
          ++universal;
          CHECK(seen.size() == 200);
        }
  CHECK(universal > 0);
}

TEST_CASE("classification checks") {
  auto a2 = verify_classification(ClassificationFamily::A2, 4);
  CHECK(a2.outcome == Outcome::Pass);
  CHECK_FALSE(a2.witness);
  CHECK(verify_classification(ClassificationFamily::A3, 12).outcome == Outcome::Pass);
  CHECK(verify_classification(ClassificationFamily::A4, 30).outcome == Outcome::Pass);
  for (int n : {4, 5, 6}) {
    auto r = verify_classification(ClassificationFamily::Dn, 16, n);
    CHECK_MESSAGE(r.outcome == Outcome::Pass, n, " ", r.witness.value_or(""));
  }
}
