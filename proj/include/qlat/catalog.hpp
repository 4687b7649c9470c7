#pragma once

#include <string>
#include <vector>

#include "qlat/lattice.hpp"
#include "qlat/morphisms.hpp"
#include "qlat/report.hpp"

namespace qlat {

/// Canonical Gram of one isometry class of rank <= 3. The diagonal equals the
/// successive minima, |2 g_ij| <= g_ii for i < j, and among all such Grams of
/// the class the one with largest off-diagonal entries (read g12, g13, g23) is
/// kept.
struct ReducedForm {
  IntMatrix gram;
  std::size_t rank = 0;
  long diag_bound = 0;  // enumeration parameter the form came from

  Lattice lattice() const;
};

/// Every isometry class of integral rank-n lattices whose successive minima are
/// at most diag_bound, once each, sorted by (diagonal, off-diagonals descending).
/// Throws RankUnsupported for n outside 1..3 and InvalidParameter for diag_bound < 1.
std::vector<ReducedForm> enumerate_lattices(std::size_t n, long diag_bound, const SearchOptions& options = {});

struct TruncatedExceptionalSet {
  Lattice target;
  std::size_t rank = 0;
  long diag_bound = 0;
  std::vector<ReducedForm> members;  // enumerated classes not represented by target
};

TruncatedExceptionalSet truncated_exceptional_set(const Lattice& target, std::size_t n, long diag_bound,
                                                  const SearchOptions& options = {});

/// Rank-1 exceptions read off from represented integers: {a <= bound : <a> not represented}.
std::vector<long> rank_one_exceptions(const Lattice& target, long bound);

enum class ClassificationFamily { A2, A3, A4, Dn };

/// Checks the list of lattices representing A_2, A_3, A_4 or D_n one rank up.
///   A2: every enumerated rank-3 form with diagonal <= bound representing A_2
///       is A_2 + <a> or A_2 (9a-6)[1 1/3].
///   A3, A4, Dn: the primitive extensions with complement norm <= bound and the
///       integral overlattices match the listed families, in both directions.
/// `n` is the D_n rank (>= 4) and ignored otherwise. Failures become a Fail
/// report with the offending Gram as witness.
ClaimReport verify_classification(ClassificationFamily family, long bound, int n = 0,
                                  const SearchOptions& options = {});

/// The members of the family with the given discriminant, with a display name.
std::vector<NamedLattice> classification_candidates(ClassificationFamily family, int n, const Rat& disc);

/// Names from the named-lattice table (plus I_n, A_n, D_n of the same rank)
/// isometric to `lattice`. Candidates are screened by rank and discriminant;
/// a comparison that runs out of budget is skipped.
std::vector<std::string> identify(const Lattice& lattice, const SearchOptions& options = {});

}  // namespace qlat
