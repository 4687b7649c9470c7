#include "qlat/claims.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <iomanip>
#include <set>
#include <sstream>
#include <stdexcept>
#include <thread>

#include <json.hpp>

#include "qlat/catalog.hpp"
#include "qlat/constructions.hpp"
#include "qlat/errors.hpp"
#include "qlat/short_vectors.hpp"

namespace qlat {

namespace {

ClaimReport verdict(bool ok, std::string measured, std::optional<std::string> witness = std::nullopt) {
  ClaimReport r;
  r.outcome = ok ? Outcome::Pass : Outcome::Fail;
  r.measured = std::move(measured);
  if (!ok) r.witness = witness ? std::move(witness) : std::optional<std::string>(r.measured);
  return r;
}

ClaimReport expect_value(const Rat& measured, const Rat& expected) {
  return verdict(measured == expected, to_string(measured), "expected " + to_string(expected) + ", got " + to_string(measured));
}

Lattice root(RootFamily f, int n) { return root_lattice({f, n}); }
Lattice glued(RootFamily f, int n, int i, long q, long m) {
  return glue(GlueSpec{{root_component({f, n}, i), scalar_component(Int(q), Int(m))}});
}

ClaimReport expect_isometric(const Lattice& a, const Lattice& b, const SearchOptions& o) {
  auto w = isometry(a, b, o);
  return verdict(w && verify_embedding(a, b, w->transform), w ? "isometric" : "not isometric");
}

ClaimReport expect_certificate(const Lattice& l, const GlueSpec& spec, const SearchOptions& o) {
  Certificate c = additive_certificate(l, spec, o);
  const bool ok = c.verdict == Verdict::AdditivelyIndecomposable && verify_certificate(l, c, o);
  return verdict(ok, to_string(c.verdict), c.summary);
}

ClaimReport not_verifiable(const std::string& why) {
  ClaimReport r;
  r.outcome = Outcome::NotVerifiableByConstruction;
  r.measured = why;
  return r;
}

// (0, [3]) with [3] the glue vector of the D part: when it lies in the dual
// and outside the lattice, describes it.
std::optional<std::string> d_glue_witness(long k) {
  GlueResult g = glue_construction(spec_Mbig(k));
  const int n = static_cast<int>(4 * k - 2);
  RatVector v(g.sum.rank());
  RatVector d3 = glue_vector({RootFamily::D, n}, 3);
  for (std::size_t i = 0; i < d3.size(); ++i) v[g.offsets[1] + i] = d3[i];
  RatVector c = coords_in_glued(g, v);
  const bool inside = std::all_of(c.begin(), c.end(), [](const Rat& x) { return x.get_den() == 1; });
  if (!in_dual(g.lattice, c) || inside) return std::nullopt;
  return "(0, [3] of D(" + std::to_string(n) + ")) is in the dual, not in the lattice, norm " + to_string(g.lattice.norm(c));
}

std::string word_list(const std::vector<long>& v) {
  std::string s = "{";
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + std::to_string(v[i]);
  return s + "}";
}

std::vector<Claim> build_registry() {
  std::vector<Claim> c;
  auto add = [&](std::string id, std::string statement, std::uint64_t cost,
                 std::function<ClaimReport(const SearchOptions&)> check) {
    c.push_back({std::move(id), std::move(statement), cost, std::move(check)});
  };

  // root lattices and glue data
  add("roots.disc.a", "A_n has discriminant n+1 for n up to 12", 1, [](const SearchOptions&) {
    for (int n = 1; n <= 12; ++n)
      if (discriminant(root(RootFamily::A, n)) != n + 1) return verdict(false, "A(" + std::to_string(n) + ")");
    return verdict(true, "n+1 for n <= 12");
  });
  add("roots.disc.d", "D_n has discriminant 4 for n from 4 to 10", 1, [](const SearchOptions&) {
    for (int n = 4; n <= 10; ++n)
      if (discriminant(root(RootFamily::D, n)) != 4) return verdict(false, "D(" + std::to_string(n) + ")");
    return verdict(true, "4 for 4 <= n <= 10");
  });
  add("roots.disc.e7", "E7 has discriminant two", 1,
      [](const SearchOptions&) { return expect_value(discriminant(root(RootFamily::E7, 7)), 2); });
  add("roots.e8.even-unimodular", "E8 is even and unimodular", 1, [](const SearchOptions&) {
    Lattice e8 = root(RootFamily::E8, 8);
    bool even = true;
    for (std::size_t i = 0; i < 8; ++i) even = even && e8.gram()(i, i).get_num() % 2 == 0;
    return verdict(even && discriminant(e8) == 1 && is_integral(e8), "disc " + to_string(discriminant(e8)));
  });
  add("glue.norm.a", "glue vector [i] of A_n has norm i(n+1-i)/(n+1)", 1, [](const SearchOptions&) {
    for (int n = 1; n <= 12; ++n)
      for (int i = 0; i <= n; ++i)
        if (root(RootFamily::A, n).norm(glue_vector({RootFamily::A, n}, i)) != make_rat(i * (n + 1 - i), n + 1))
          return verdict(false, "A(" + std::to_string(n) + ") [" + std::to_string(i) + "]");
    return verdict(true, "formula holds for n <= 12");
  });
  add("glue.norm.d", "glue vectors of D_n have norms n/4, 1, n/4", 1, [](const SearchOptions&) {
    for (int n = 4; n <= 10; ++n) {
      Lattice d = root(RootFamily::D, n);
      if (d.norm(glue_vector({RootFamily::D, n}, 1)) != make_rat(n, 4) || d.norm(glue_vector({RootFamily::D, n}, 2)) != 1 ||
          d.norm(glue_vector({RootFamily::D, n}, 3)) != make_rat(n, 4))
        return verdict(false, "D(" + std::to_string(n) + ")");
    }
    return verdict(true, "formula holds for n <= 10");
  });
  add("glue.norm.e7", "glue vector of E7 has norm 3/2", 1, [](const SearchOptions&) {
    return expect_value(root(RootFamily::E7, 7).norm(glue_vector({RootFamily::E7, 7}, 1)), Rat(3, 2));
  });
  add("glue.integrality", "gluing is integral exactly when the glued norm is", 1, [](const SearchOptions&) {
    try {
      glued(RootFamily::A, 2, 1, 1, 1);
      return verdict(false, "A(2) 1[1 1] accepted");
    } catch (const NonIntegralError& e) {
      return expect_value(e.norm(), Rat(2, 3) + 1);
    }
  });

  // small isometries
  struct Iso {
    const char* id;
    const char* statement;
    std::function<Lattice()> left, right;
  };
  const std::vector<Iso> isos{
      {"isom.a2-3", "A_2 3[1 1/3] is I_3", [] { return glued(RootFamily::A, 2, 1, 3, 3); }, [] { return root(RootFamily::I, 3); }},
      {"isom.a2-12", "A_2 12[1 1/3] is A_3", [] { return glued(RootFamily::A, 2, 1, 12, 3); }, [] { return root(RootFamily::A, 3); }},
      {"isom.a3-4-2", "A_3 4[2 1/2] is D_4", [] { return glued(RootFamily::A, 3, 2, 4, 2); }, [] { return root(RootFamily::D, 4); }},
      {"isom.a3-4-1", "A_3 4[1 1/4] is I_4", [] { return glued(RootFamily::A, 3, 1, 4, 4); }, [] { return root(RootFamily::I, 4); }},
      {"isom.a3-20-1", "A_3 20[1 1/4] is A_4", [] { return glued(RootFamily::A, 3, 1, 20, 4); }, [] { return root(RootFamily::A, 4); }},
      {"isom.m1", "M(1) is I_5", [] { return lattice_M(1); }, [] { return root(RootFamily::I, 5); }},
      {"isom.m2", "M(2) is A_5", [] { return lattice_M(2); }, [] { return root(RootFamily::A, 5); }},
      {"isom.k1", "K(1) is D_5", [] { return lattice_K(1); }, [] { return root(RootFamily::D, 5); }},
      {"isom.dplus8", "D_8 plus its [1] is E8", [] { return root(RootFamily::Dplus, 8); }, [] { return root(RootFamily::E8, 8); }},
      {"isom.aki-0-1", "A(0,1) is I_9", [] { return lattice_Aki(0, 1); }, [] { return root(RootFamily::I, 9); }},
      {"isom.aki-1-1", "A(1,1) is A_9", [] { return lattice_Aki(1, 1); }, [] { return root(RootFamily::A, 9); }},
      {"isom.aki-0-2", "A(0,2) is D_9", [] { return lattice_Aki(0, 2); }, [] { return root(RootFamily::D, 9); }},
  };
  for (const auto& iso : isos)
    add(iso.id, iso.statement, 10'000, [iso](const SearchOptions& o) { return expect_isometric(iso.left(), iso.right(), o); });
  add("isom.a2-tridiagonal", "A_2 (9a-6)[1 1/3] has the tridiagonal Gram ending in a", 10'000, [](const SearchOptions& o) {
    for (long a = 1; a <= 8; ++a) {
      Lattice t = Lattice::from_gram(IntMatrix{{2, -1, 0}, {-1, 2, -1}, {0, -1, a}});
      if (!is_isometric(glued(RootFamily::A, 2, 1, 9 * a - 6, 3), t, o)) return verdict(false, "a = " + std::to_string(a));
    }
    return verdict(true, "a <= 8");
  });

  // the twelve-, sixteen-, fourteen- and twenty-dimensional examples
  add("l12.disc", "L12 has discriminant three", 1, [](const SearchOptions&) { return expect_value(discriminant(lattice_L12()), 3); });
  add("l12.dualmin", "dual of L12 has minimum 4/3", 100'000,
      [](const SearchOptions&) { return expect_value(dual_minimum(lattice_L12()), Rat(4, 3)); });
  add("l12.certificate", "L12 is additively indecomposable by certificate", 100'000,
      [](const SearchOptions& o) { return expect_certificate(lattice_L12(), spec_L12(), o); });
  add("l16.disc", "L16 has discriminant two", 1, [](const SearchOptions&) { return expect_value(discriminant(lattice_L16()), 2); });
  add("l16.dualmin", "dual of L16 has minimum 3/2", 1'000'000,
      [](const SearchOptions&) { return expect_value(dual_minimum(lattice_L16()), Rat(3, 2)); });
  add("l16.roots", "roots of L16 span A11 plus A5", 1'000'000, [](const SearchOptions& o) {
    auto rs = root_sublattice(lattice_L16());
    if (!rs) return verdict(false, "no roots");
    Lattice expected = orthogonal_sum(root(RootFamily::A, 11), root(RootFamily::A, 5));
    return verdict(is_isometric(rs->lattice, expected, o), "rank " + std::to_string(rs->lattice.rank()) + ", disc " +
                                                               to_string(discriminant(rs->lattice)));
  });
  add("l16.certificate", "L16 is additively indecomposable by certificate", 1'000'000,
      [](const SearchOptions& o) { return expect_certificate(lattice_L16(), spec_L16(), o); });
  add("m14.rank-disc", "M14 has rank 14 and discriminant 2", 1, [](const SearchOptions&) {
    Lattice m = lattice_M14();
    return verdict(m.rank() == 14 && discriminant(m) == 2, "rank " + std::to_string(m.rank()) + ", disc " + to_string(discriminant(m)));
  });
  add("m14.dualmin", "dual of M14 has minimum 3/2", 1'000'000,
      [](const SearchOptions&) { return expect_value(dual_minimum(lattice_M14()), Rat(3, 2)); });
  add("m14.u-norm", "the vector u lies in the dual with norm 3/2", 1, [](const SearchOptions&) {
    Lattice m = lattice_M14();
    RatVector u = m14_dual_vector();
    if (!in_dual(m, u)) return verdict(false, "u not in dual");
    return expect_value(m.norm(u), Rat(3, 2));
  });
  add("mbig.disc", "M14 D6 [u 1] has discriminant 2", 1,
      [](const SearchOptions&) { return expect_value(discriminant(lattice_Mbig(2)), 2); });
  add("mbig.min", "M14 D6 [u 1] has minimum 2", 10'000'000,
      [](const SearchOptions&) { return expect_value(minimum(lattice_Mbig(2)), 2); });
  add("mbig.dualmin-outside", "dual vectors of M14 D6 [u 1] outside it have norm at least 5/2", 10'000'000,
      [](const SearchOptions&) {
        auto m = dual_minimum_outside(lattice_Mbig(2));
        if (!m) return verdict(false, "unimodular");
        ClaimReport r = expect_value(*m, Rat(5, 2));
        if (r.outcome == Outcome::Fail && d_glue_witness(2)) r.witness = *d_glue_witness(2);
        return r;
      });
  add("mbig.dualmin-outside.larger", "for k = 3, 4 the dual minimum outside is 5/2", 10'000'000,
      [](const SearchOptions&) {
        for (long k = 3; k <= 4; ++k) {
          auto m = dual_minimum_outside(lattice_Mbig(k));
          if (!m || *m != Rat(5, 2)) return verdict(false, "k = " + std::to_string(k) + ": " + (m ? to_string(*m) : "none"));
        }
        return verdict(true, "5/2 for k = 3, 4");
      });
  add("mbig.certificate", "M14 D6 [u 1] is additively indecomposable by certificate", 10'000'000,
      [](const SearchOptions& o) { return expect_certificate(lattice_Mbig(2), spec_Mbig(2), o); });

  // representation relations
  add("mk.frontier", "M(c) first embeds in K(d) at c = 4d, K(e) in M(c) at e = 4c-3", 10'000'000,
      [](const SearchOptions& o) {
        for (long d = 1; d <= 2; ++d)
          for (long c = 1; c <= 4 * d; ++c)
            if (represents(lattice_M(c), lattice_K(d), o) != (c == 4 * d))
              return verdict(false, "M(" + std::to_string(c) + ") in K(" + std::to_string(d) + ")");
        for (long c = 1; c <= 2; ++c)
          for (long e = 1; e <= 4 * c - 3; ++e)
            if (represents(lattice_K(e), lattice_M(c), o) != (e == 4 * c - 3))
              return verdict(false, "K(" + std::to_string(e) + ") in M(" + std::to_string(c) + ")");
        return verdict(true, "frontiers at c = 4d and e = 4c-3 for c, d <= 2");
      });
  add("anrep.equivalence", "congruence test for A_n glue families agrees with search", 50'000'000,
      [](const SearchOptions& o) {
        std::size_t cases = 0;
        for (int n = 2; n <= 4; ++n)
          for (long k = 1; k <= 9; ++k)
            for (long l = 1; l <= 9; ++l)
              for (int i = 0; i <= (n + 1) / 2; ++i)
                for (int j = 0; j <= (n + 1) / 2; ++j) {
                  if (!anrep_admissible(n, k, i, l, j, o)) continue;
                  ++cases;
                  if (check_anrep(n, k, i, l, j, o) != anrep_bruteforce(n, k, i, l, j, o))
                    return verdict(false, "mismatch", "n=" + std::to_string(n) + " k=" + std::to_string(k) + " i=" +
                                                           std::to_string(i) + " l=" + std::to_string(l) + " j=" +
                                                           std::to_string(j));
                }
        return verdict(cases > 0, std::to_string(cases) + " admissible cases agree");
      });
  add("a8.imprimitive", "A_8 sits in E8 but never primitively", 1'000'000, [](const SearchOptions& o) {
    Lattice a8 = root(RootFamily::A, 8), e8 = root(RootFamily::E8, 8);
    const bool rep = represents(a8, e8, o), prim = primitively_represents(a8, e8, o);
    return verdict(rep && !prim, std::string("represents: ") + (rep ? "yes" : "no") + ", primitive: " + (prim ? "yes" : "no"));
  });
  add("aki.k3-in-e8", "A(k,3) embeds in E8 plus <k+1>", 10'000'000, [](const SearchOptions& o) {
    for (long k = 0; k <= 3; ++k)
      if (!represents(lattice_Aki(k, 3), orthogonal_sum(root(RootFamily::E8, 8), diagonal_lattice({Int(k + 1)})), o))
        return verdict(false, "k = " + std::to_string(k));
    return verdict(true, "k <= 3");
  });
  add("aki.nonintegral-glue", "glue [i] of A_8 has non-integral norm for i = 1, 2, 4", 1, [](const SearchOptions&) {
    Lattice a8 = root(RootFamily::A, 8);
    for (int i : {1, 2, 4})
      if (a8.norm(glue_vector({RootFamily::A, 8}, i)).get_den() == 1) return verdict(false, "i = " + std::to_string(i));
    return expect_value(a8.norm(glue_vector({RootFamily::A, 8}, 3)), 2);
  });

  // classification checks
  auto classification = [&](std::string id, std::string statement, ClassificationFamily f, long bound, int n) {
    add(std::move(id), std::move(statement), 10'000'000,
        [f, bound, n](const SearchOptions& o) { return verify_classification(f, bound, n, o); });
  };
  classification("class.a2", "rank-3 lattices containing A_2 fall in two families", ClassificationFamily::A2, 6, 0);
  classification("class.a3", "rank-4 lattices containing A_3 fall in four families", ClassificationFamily::A3, 24, 0);
  classification("class.a4", "rank-5 lattices containing A_4 fall in three families", ClassificationFamily::A4, 50, 0);
  classification("class.d4", "primitive extensions of D_4 fall in three families", ClassificationFamily::Dn, 16, 4);
  classification("class.d5", "primitive extensions of D_5 fall in three families", ClassificationFamily::Dn, 20, 5);
  add("class.dn-imprimitive", "integral overlattices of D_n are I_n or D_n[1]", 1'000'000, [](const SearchOptions& o) {
    for (int n = 4; n <= 8; ++n)
      for (const auto& over : integral_overlattices(root(RootFamily::D, n))) {
        bool ok = is_isometric(over, root(RootFamily::I, n), o) || (n % 4 == 0 && is_isometric(over, root(RootFamily::Dplus, n), o));
        if (!ok) return verdict(false, "n = " + std::to_string(n), to_string(over.gram()));
      }
    return verdict(true, "4 <= n <= 8");
  });

  // sums of squares
  add("cubic.e7.fast", "E7 is no sum of squares by its dual minimum", 100'000, [](const SearchOptions& o) {
    CubicResult r = cubic_embedding(root(RootFamily::E7, 7), o);
    return verdict(!r.embeds && r.method == CubicMethod::DualMinimum, "dual minimum " + (r.dual_minimum ? to_string(*r.dual_minimum) : "?"));
  });
  add("cubic.e7.exhaustive", "E7 does not embed in I_14 by search", 100'000'000, [](const SearchOptions& o) {
    CubicResult r = cubic_embedding_exhaustive(root(RootFamily::E7, 7), o);
    return verdict(!r.embeds && r.dimension >= 14, "no embedding into I_" + std::to_string(r.dimension));
  });

  // exceptional sets
  add("except.i3", "I_3 misses exactly 7 and 15 up to 20", 10'000, [](const SearchOptions&) {
    auto ex = rank_one_exceptions(root(RootFamily::I, 3), 20);
    return verdict(ex == std::vector<long>{7, 15}, word_list(ex));
  });
  add("except.i4", "I_4 represents every integer up to 50", 10'000, [](const SearchOptions&) {
    auto ex = rank_one_exceptions(root(RootFamily::I, 4), 50);
    return verdict(ex.empty(), word_list(ex));
  });
  add("except.binary-explicit", "explicit summands miss [[2,1],[1,k]] for k <= m", 1'000'000, [](const SearchOptions& o) {
    for (long m = 1; m <= 3; ++m) {
      Lattice target = orthogonal_sum(diagonal_lattice({1, 2}), Lattice::from_gram(IntMatrix{{2, 1}, {1, m + 1}}));
      for (long k = 1; k <= m; ++k) {
        Lattice f = Lattice::from_gram(IntMatrix{{2, 1}, {1, k}});
        if (!is_positive_definite(f.gram())) continue;
        if (represents(f, target, o)) return verdict(false, "m=" + std::to_string(m) + " k=" + std::to_string(k));
      }
    }
    return verdict(true, "m <= 3");
  });
  add("except.fifteen", "diagonal quaternaries hitting the critical nine reach 200", 100'000, [](const SearchOptions&) {
    const std::vector<long> critical{1, 2, 3, 5, 6, 7, 10, 14, 15};
    std::size_t universal = 0;
    for (long a = 1; a <= 5; ++a)
      for (long b = a; b <= 5; ++b)
        for (long c = b; c <= 5; ++c)
          for (long d = c; d <= 5; ++d) {
            auto seen = represented_integers(diagonal_lattice({a, b, c, d}), 200);
            if (!std::all_of(critical.begin(), critical.end(), [&](long t) { return seen.count(t) > 0; })) continue;
            ++universal;
            if (seen.size() != 200)
              return verdict(false, "gap", "<" + std::to_string(a) + "," + std::to_string(b) + "," + std::to_string(c) +
                                               "," + std::to_string(d) + ">");
          }
    return verdict(universal > 0, std::to_string(universal) + " forms complete up to 200");
  });
  add("hull.rank-one", "rank-one exceptions of hull sums are an initial segment", 0,
      [](const SearchOptions&) { return not_verifiable("depends on a universal hull with no explicit construction"); });
  add("hull.binary-complete", "binary exceptional set of the hull sum is complete", 0,
      [](const SearchOptions&) { return not_verifiable("completeness requires a universal hull; explicit side in except.binary-explicit"); });
  add("hull.a4-family", "G(c,d) exceptions are the listed M and K classes", 0,
      [](const SearchOptions&) { return not_verifiable("depends on a universal hull; frontier side in mk.frontier"); });

  std::sort(c.begin(), c.end(), [](const Claim& a, const Claim& b) { return a.id < b.id; });
  for (std::size_t i = 1; i < c.size(); ++i)
    if (c[i].id == c[i - 1].id) throw std::logic_error("duplicate claim id " + c[i].id);
  for (const auto& claim : c) {
    std::istringstream words(claim.statement);
    std::string w;
    int count = 0;
    while (words >> w) ++count;
    if (count < 3) throw std::logic_error("claim statement too short: " + claim.id);
  }
  return c;
}

ClaimReport run_one(const Claim& claim, const SearchOptions& options) {
  const auto start = std::chrono::steady_clock::now();
  ClaimReport r;
  try {
    r = claim.check(options);
  } catch (const Error& e) {
    r = ClaimReport{};
    if (e.code() == ErrorCode::SearchBudgetExceeded || e.code() == ErrorCode::BoundTooLargeForBudget) {
      r.outcome = Outcome::BudgetExceeded;
      r.measured = e.what();
    } else {
      r.outcome = Outcome::Fail;
      r.measured = "error";
      r.witness = e.what();
    }
  } catch (const std::exception& e) {
    r = ClaimReport{};
    r.outcome = Outcome::Fail;
    r.measured = "error";
    r.witness = e.what();
  }
  r.id = claim.id;
  r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return r;
}

}  // namespace

const std::vector<Claim>& claim_registry() {
  static const std::vector<Claim> registry = build_registry();
  return registry;
}

std::vector<ClaimSummary> claim_manifest() {
  std::vector<ClaimSummary> out;
  for (const auto& c : claim_registry()) out.push_back({c.id, c.statement, c.cost});
  return out;
}

std::vector<ClaimReport> run_claims(std::string_view prefix, const RunOptions& options) {
  std::vector<const Claim*> selected;
  for (const auto& c : claim_registry())
    if (c.id.compare(0, prefix.size(), prefix) == 0) selected.push_back(&c);
  SearchOptions search;
  search.node_budget = options.node_budget;
  std::vector<ClaimReport> reports(selected.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < selected.size(); i = next++) reports[i] = run_one(*selected[i], search);
  };
  const std::size_t threads = std::max<std::size_t>(1, std::min(options.threads, selected.size()));
  std::vector<std::thread> pool;
  for (std::size_t t = 1; t < threads; ++t) pool.emplace_back(worker);
  worker();
  for (auto& t : pool) t.join();
  return reports;  // slots follow registry order, which is sorted by id
}

bool all_passed(const std::vector<ClaimReport>& reports) {
  return std::none_of(reports.begin(), reports.end(), [](const ClaimReport& r) { return r.outcome == Outcome::Fail; });
}

std::string reports_to_json(const std::vector<ClaimReport>& reports) {
  nlohmann::json out = nlohmann::json::array();
  for (const auto& r : reports) {
    nlohmann::json j{{"id", r.id}, {"outcome", to_string(r.outcome)}, {"measured", r.measured}, {"seconds", r.seconds}};
    j["witness"] = r.witness ? nlohmann::json(*r.witness) : nlohmann::json(nullptr);
    out.push_back(std::move(j));
  }
  return out.dump(2);
}

std::string reports_to_table(const std::vector<ClaimReport>& reports) {
  std::size_t width = 2;
  for (const auto& r : reports) width = std::max(width, r.id.size());
  std::ostringstream os;
  for (const auto& r : reports) {
    os << std::left << std::setw(static_cast<int>(width) + 2) << r.id << std::setw(32) << to_string(r.outcome)
       << std::fixed << std::setprecision(2) << std::setw(9) << r.seconds << r.measured;
    if (r.witness && r.outcome == Outcome::Fail) os << "  [" << *r.witness << "]";
    os << '\n';
  }
  std::size_t pass = 0, fail = 0, other = 0;
  for (const auto& r : reports) (r.outcome == Outcome::Pass ? pass : r.outcome == Outcome::Fail ? fail : other)++;
  os << pass << " passed, " << fail << " failed, " << other << " other\n";
  return os.str();
}

}  // namespace qlat
