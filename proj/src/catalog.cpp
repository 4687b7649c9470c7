#include "qlat/catalog.hpp"

#include <chrono>
#include <map>
#include <set>
#include <sstream>

#include "qlat/constructions.hpp"
#include "qlat/errors.hpp"
#include "qlat/short_vectors.hpp"

namespace qlat {

std::string to_string(Outcome outcome) {
  switch (outcome) {
    case Outcome::Pass: return "pass";
    case Outcome::Fail: return "fail";
    case Outcome::BudgetExceeded: return "budget-exceeded";
    case Outcome::NotVerifiableByConstruction: return "not-verifiable-by-construction";
  }
  return "?";
}

Lattice ReducedForm::lattice() const { return Lattice::from_gram(gram); }

namespace {

using Key = std::pair<Rat, std::map<Rat, std::size_t>>;

// Visits candidate Grams in canonical order: diagonal ascending, then each
// off-diagonal from its largest admissible value down.
template <typename Visit>
void for_each_candidate(std::size_t n, long bound, Visit&& visit) {
  if (n == 1) {
    for (long a = 1; a <= bound; ++a) visit(IntMatrix{{a}});
    return;
  }
  if (n == 2) {
    for (long a = 1; a <= bound; ++a)
      for (long c = a; c <= bound; ++c)
        for (long b = a / 2; b >= -(a / 2); --b) visit(IntMatrix{{a, b}, {b, c}});
    return;
  }
  for (long a = 1; a <= bound; ++a)
    for (long b = a; b <= bound; ++b)
      for (long c = b; c <= bound; ++c)
        for (long d = a / 2; d >= -(a / 2); --d)
          for (long e = a / 2; e >= -(a / 2); --e)
            for (long f = b / 2; f >= -(b / 2); --f) visit(IntMatrix{{a, d, e}, {d, b, f}, {e, f, c}});
}

std::string gram_string(const IntMatrix& g) { return to_string(to_rat(g)); }

Lattice glued(const RootLatticeId& id, int i, long q, long m) {
  return glue(GlueSpec{{root_component(id, i), scalar_component(Int(q), Int(m))}});
}

Lattice perp_scalar(const Lattice& l, const Int& a) { return orthogonal_sum(l, diagonal_lattice({a})); }

std::optional<long> exact_quotient(const Rat& num, long offset, long den) {
  // solves den * x - offset = num for a positive integer x
  if (num.get_den() != 1) return std::nullopt;
  Int t = num.get_num() + offset;
  if (t <= 0 || t % den != 0) return std::nullopt;
  return to_int64(Int(t / den));
}

// Family members one rank up whose complement generator has norm <= qmax.
std::vector<NamedLattice> members_upto(ClassificationFamily family, int n, long qmax) {
  std::vector<NamedLattice> out;
  auto add = [&](std::string name, Lattice l) { out.push_back({std::move(name), std::move(l)}); };
  switch (family) {
    case ClassificationFamily::A2:
      for (long a = 1; a <= qmax; ++a) add("A(2) + <" + std::to_string(a) + ">", perp_scalar(root_lattice({RootFamily::A, 2}), a));
      for (long a = 1; 9 * a - 6 <= qmax; ++a)
        add("A(2) " + std::to_string(9 * a - 6) + "[1 1/3]", glued({RootFamily::A, 2}, 1, 9 * a - 6, 3));
      break;
    case ClassificationFamily::A3:
      for (long b = 1; b <= qmax; ++b) add("A(3) + <" + std::to_string(b) + ">", perp_scalar(root_lattice({RootFamily::A, 3}), b));
      for (long b = 1; 4 * b <= qmax; ++b)
        add("A(3) " + std::to_string(4 * b) + "[2 1/2]", glued({RootFamily::A, 3}, 2, 4 * b, 2));
      for (long b = 1; 16 * b - 12 <= qmax; ++b)
        add("A(3) " + std::to_string(16 * b - 12) + "[1 1/4]", glued({RootFamily::A, 3}, 1, 16 * b - 12, 4));
      break;
    case ClassificationFamily::A4:
      for (long b = 1; b <= qmax; ++b) add("A(4) + <" + std::to_string(b) + ">", perp_scalar(root_lattice({RootFamily::A, 4}), b));
      for (long c = 1; 25 * c - 20 <= qmax; ++c) add("M(" + std::to_string(c) + ")", lattice_M(c));
      for (long d = 1; 25 * d - 5 <= qmax; ++d) add("K(" + std::to_string(d) + ")", lattice_K(d));
      break;
    case ClassificationFamily::Dn: {
      const RootLatticeId id{RootFamily::D, n};
      const std::string dn = to_string(id);
      for (long a = 1; a <= qmax; ++a) add(dn + " + <" + std::to_string(a) + ">", perp_scalar(root_lattice(id), a));
      for (long a = 1; 16 * a - 4 * n <= qmax; ++a)
        if (16 * a - 4 * n > 0) add(dn + " " + std::to_string(16 * a - 4 * n) + "[1 1/4]", glued(id, 1, 16 * a - 4 * n, 4));
      for (long a = 1; 4 * a <= qmax; ++a) add(dn + " " + std::to_string(4 * a) + "[2 1/2]", glued(id, 2, 4 * a, 2));
      break;
    }
  }
  return out;
}

struct Checker {
  ClaimReport report;
  bool failed = false;
  void fail(const std::string& what, const IntMatrix& gram) {
    if (failed) return;
    failed = true;
    report.outcome = Outcome::Fail;
    report.witness = what + ": " + gram_string(gram);
  }
};

bool matches_some(const Lattice& l, const std::vector<NamedLattice>& candidates, const SearchOptions& options) {
  for (const auto& c : candidates)
    if (is_isometric(l, c.lattice, options)) return true;
  return false;
}

}  // namespace

std::vector<ReducedForm> enumerate_lattices(std::size_t n, long diag_bound, const SearchOptions& options) {
  if (n < 1 || n > 3) throw Error(ErrorCode::RankUnsupported, "enumeration supports rank 1 to 3");
  if (diag_bound < 1) throw Error(ErrorCode::InvalidParameter, "diagonal bound must be positive");
  std::map<Key, std::vector<std::size_t>> buckets;
  std::vector<ReducedForm> out;
  std::vector<Lattice> lattices;
  for_each_candidate(n, diag_bound, [&](IntMatrix g) {
    const RatMatrix rg = to_rat(g);
    if (!is_positive_definite(rg)) return;
    Lattice l = Lattice::from_gram(g);
    Key key{determinant(rg), norm_histogram(l, Rat(diag_bound))};
    auto& bucket = buckets[key];
    for (std::size_t idx : bucket)
      if (is_isometric(l, lattices[idx], options)) return;
    bucket.push_back(out.size());
    out.push_back({std::move(g), n, diag_bound});
    lattices.push_back(std::move(l));
  });
  return out;
}

TruncatedExceptionalSet truncated_exceptional_set(const Lattice& target, std::size_t n, long diag_bound,
                                                  const SearchOptions& options) {
  TruncatedExceptionalSet result{target, n, diag_bound, {}};
  for (auto& form : enumerate_lattices(n, diag_bound, options))
    if (!represents(form.lattice(), target, options)) result.members.push_back(std::move(form));
  return result;
}

std::vector<long> rank_one_exceptions(const Lattice& target, long bound) {
  const auto seen = represented_integers(target, bound);
  std::vector<long> out;
  for (long a = 1; a <= bound; ++a)
    if (!seen.count(a)) out.push_back(a);
  return out;
}

std::vector<NamedLattice> classification_candidates(ClassificationFamily family, int n, const Rat& disc) {
  std::vector<NamedLattice> out;
  auto add = [&](std::string name, Lattice l) { out.push_back({std::move(name), std::move(l)}); };
  switch (family) {
    case ClassificationFamily::A2:
      if (auto a = exact_quotient(disc, 0, 3)) add("A(2) + <a>", perp_scalar(root_lattice({RootFamily::A, 2}), *a));
      if (auto a = exact_quotient(disc, 2, 3)) add("A(2) (9a-6)[1 1/3]", glued({RootFamily::A, 2}, 1, 9 * *a - 6, 3));
      break;
    case ClassificationFamily::A3:
      if (auto b = exact_quotient(disc, 0, 1)) add("I(3) + <b>", perp_scalar(root_lattice({RootFamily::I, 3}), *b));
      if (auto b = exact_quotient(disc, 0, 4)) {
        add("A(3) + <b>", perp_scalar(root_lattice({RootFamily::A, 3}), *b));
        add("A(3) 4b[2 1/2]", glued({RootFamily::A, 3}, 2, 4 * *b, 2));
      }
      if (auto b = exact_quotient(disc, 3, 4)) add("A(3) (16b-12)[1 1/4]", glued({RootFamily::A, 3}, 1, 16 * *b - 12, 4));
      break;
    case ClassificationFamily::A4:
      if (auto b = exact_quotient(disc, 0, 5)) add("A(4) + <b>", perp_scalar(root_lattice({RootFamily::A, 4}), *b));
      if (auto c = exact_quotient(disc, 4, 5)) add("M(c)", lattice_M(*c));
      if (auto d = exact_quotient(disc, 1, 5)) add("K(d)", lattice_K(*d));
      break;
    case ClassificationFamily::Dn: {
      const RootLatticeId id{RootFamily::D, n};
      if (auto a = exact_quotient(disc, 0, 4)) {
        add("D(n) + <a>", perp_scalar(root_lattice(id), *a));
        add("D(n) 4a[2 1/2]", glued(id, 2, 4 * *a, 2));
      }
      if (auto a = exact_quotient(disc, n, 4); a && 16 * *a - 4 * n > 0)
        add("D(n) (16a-4n)[1 1/4]", glued(id, 1, 16 * *a - 4 * n, 4));
      break;
    }
  }
  return out;
}

std::vector<std::string> identify(const Lattice& lattice, const SearchOptions& options) {
  const std::size_t n = lattice.rank();
  const Rat disc = discriminant(lattice);
  std::vector<NamedLattice> pool;
  std::set<std::string> seen;
  for (auto& named : named_lattice_table())
    if (named.lattice.rank() == n && discriminant(named.lattice) == disc) {
      seen.insert(named.name);
      pool.push_back(std::move(named));
    }
  const int r = static_cast<int>(n);
  for (const auto& id : {RootLatticeId{RootFamily::I, r}, RootLatticeId{RootFamily::A, r}, RootLatticeId{RootFamily::D, r}}) {
    if (id.family == RootFamily::D && r < 4) continue;
    if (seen.count(to_string(id))) continue;
    Lattice l = root_lattice(id);
    if (discriminant(l) == disc) pool.push_back({to_string(id), std::move(l)});
  }
  std::vector<std::string> out;
  for (const auto& c : pool) {
    try {
      if (is_isometric(lattice, c.lattice, options)) out.push_back(c.name);
    } catch (const Error& e) {
      if (e.code() != ErrorCode::SearchBudgetExceeded && e.code() != ErrorCode::BoundTooLargeForBudget) throw;
    }
  }
  return out;
}

ClaimReport verify_classification(ClassificationFamily family, long bound, int n, const SearchOptions& options) {
  const auto start = std::chrono::steady_clock::now();
  Checker check;
  std::size_t examined = 0;
  try {
    if (family == ClassificationFamily::A2) {
      const Lattice a2 = root_lattice({RootFamily::A, 2});
      for (const auto& form : enumerate_lattices(3, bound, options)) {
        Lattice l = form.lattice();
        if (!represents(a2, l, options)) continue;
        ++examined;
        if (!matches_some(l, classification_candidates(family, n, discriminant(l)), options))
          check.fail("represents A(2) but matches no family member", form.gram);
      }
    } else {
      if (family == ClassificationFamily::Dn && n < 4) throw Error(ErrorCode::InvalidParameter, "D_n needs n >= 4");
      const RootLatticeId id = family == ClassificationFamily::A3   ? RootLatticeId{RootFamily::A, 3}
                               : family == ClassificationFamily::A4 ? RootLatticeId{RootFamily::A, 4}
                                                                    : RootLatticeId{RootFamily::D, n};
      const Lattice base = root_lattice(id);
      const auto extensions = primitive_extensions(base, Int(bound));
      for (const auto& e : extensions) {
        ++examined;
        if (!matches_some(e.lattice, classification_candidates(family, n, discriminant(e.lattice)), options))
          check.fail("primitive extension matches no family member", integral_gram(e.lattice));
      }
      for (const auto& member : members_upto(family, n, bound)) {
        bool found = false;
        for (const auto& e : extensions)
          if (!found && discriminant(e.lattice) == discriminant(member.lattice))
            found = is_isometric(e.lattice, member.lattice, options);
        if (!found) check.fail("family member " + member.name + " missing from extensions", integral_gram(member.lattice));
      }
      // imprimitive side: the proper integral overlattices of the same rank
      const Lattice cubic = root_lattice({RootFamily::I, static_cast<int>(base.rank())});
      for (const auto& over : integral_overlattices(base)) {
        ++examined;
        bool ok = is_isometric(over, cubic, options);
        if (!ok && family == ClassificationFamily::Dn && n % 4 == 0)
          ok = is_isometric(over, root_lattice({RootFamily::Dplus, n}), options);
        if (!ok) check.fail("unexpected integral overlattice", integral_gram(over));
        if (family == ClassificationFamily::A4) check.fail("A(4) has no proper integral overlattice", integral_gram(over));
      }
      if (family == ClassificationFamily::A3) {
        // every integral overlattice is I_3, whose extensions all split off
        for (const auto& e : primitive_extensions(cubic, Int(bound))) {
          ++examined;
          if (!matches_some(e.lattice, classification_candidates(family, n, discriminant(e.lattice)), options))
            check.fail("extension of I(3) matches no family member", integral_gram(e.lattice));
        }
      }
    }
    check.report.measured = std::to_string(examined) + " lattices checked";
  } catch (const Error& e) {
    if (e.code() != ErrorCode::SearchBudgetExceeded && e.code() != ErrorCode::BoundTooLargeForBudget) throw;
    check.report.outcome = Outcome::BudgetExceeded;
    check.report.measured = e.what();
  }
  check.report.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return check.report;
}

}  // namespace qlat
