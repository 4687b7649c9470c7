#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "qlat/constructions.hpp"
#include "qlat/lattice.hpp"

namespace qlat {

/// Rows of `transform` are the images of the source basis vectors, written in
/// the target basis: transform * G_target * transform^t = G_source.
struct Embedding {
  IntMatrix transform;
};

struct SearchOptions {
  /// Cap on search-tree nodes; exceeding it raises SearchBudgetExceeded.
  std::uint64_t node_budget = 100'000'000;
  /// Cheap necessary conditions (rank, discriminant square ratio) before searching.
  bool invariant_filters = true;
};

/// True iff T * G_target * T^t == G_source exactly.
bool verify_embedding(const Lattice& source, const Lattice& target, const IntMatrix& transform);

/// Up to `limit` embeddings of `source` into `target`. Empty means none exists.
/// Throws SearchBudgetExceeded.
std::vector<Embedding> find_representations(const Lattice& source, const Lattice& target, std::size_t limit,
                                            const SearchOptions& options = {});
std::optional<Embedding> representation(const Lattice& source, const Lattice& target,
                                        const SearchOptions& options = {});
bool represents(const Lattice& source, const Lattice& target, const SearchOptions& options = {});

/// An embedding whose image is a primitive sublattice.
std::optional<Embedding> primitive_representation(const Lattice& source, const Lattice& target,
                                                  const SearchOptions& options = {});
bool primitively_represents(const Lattice& source, const Lattice& target, const SearchOptions& options = {});

/// Invertible witness T with T G_b T^t = G_a, or nullopt.
std::optional<Embedding> isometry(const Lattice& a, const Lattice& b, const SearchOptions& options = {});
bool is_isometric(const Lattice& a, const Lattice& b, const SearchOptions& options = {});

/// One orthogonally indecomposable summand; `basis` rows are in the input's
/// coordinates.
struct Component {
  Lattice lattice;
  IntMatrix basis;
};
/// Components sorted by (rank, discriminant). Works for any lattice (rational
/// Gram matrices are rescaled internally).
std::vector<Component> orthogonal_decomposition(const Lattice& lattice, const SearchOptions& options = {});

/// Rows of an embedding of `lattice` into Z^dimension (the Gram there is the
/// identity), or nullopt if none exists. Throws SearchBudgetExceeded.
std::optional<IntMatrix> find_cubic_embedding(const Lattice& lattice, std::size_t dimension,
                                              const SearchOptions& options = {});
/// Dimension that suffices for every cubic embedding: the trace of an LLL-reduced Gram.
std::size_t cubic_dimension_bound(const Lattice& lattice);

enum class CubicMethod { DualMinimum, ExhaustiveSearch };
struct CubicResult {
  bool embeds = false;
  CubicMethod method = CubicMethod::ExhaustiveSearch;
  std::optional<Rat> dual_minimum;
  std::optional<IntMatrix> embedding;
  std::size_t dimension = 0;
};
/// Whether L is represented by some sum of squares I_N. When the dual minimum
/// exceeds 1 the answer is no without search (projections of the unit vectors
/// would be short dual vectors). Throws NotIntegral.
CubicResult cubic_embedding(const Lattice& lattice, const SearchOptions& options = {});
/// Same question, always settled by exhaustive search in dimension cubic_dimension_bound.
CubicResult cubic_embedding_exhaustive(const Lattice& lattice, const SearchOptions& options = {});
bool embeds_in_cubic(const Lattice& lattice, const SearchOptions& options = {});

/// Lattices known from the literature to be additively indecomposable that the
/// certificate logic may cite (matched up to isometry): E7 and M14.
std::vector<NamedLattice> cited_additively_indecomposable();

enum class Verdict { AdditivelyIndecomposable, RepresentedBySumOfSquares, Unknown };
std::string to_string(Verdict verdict);

struct ComponentJustification {
  std::string description;
  std::string reason;  // "indecomposable root lattice", "cited: E7", "certified", ...
  Rat glue_norm;
};

struct Certificate {
  Verdict verdict = Verdict::Unknown;
  std::optional<std::string> spec;
  std::vector<ComponentJustification> components;
  std::optional<Rat> dual_minimum;
  std::optional<IntMatrix> cubic_embedding;
  std::string summary;
};

/// Certificate rule: a two-component glue L1 L2 [x1 x2] with some Q(x_i)
/// non-integral, both L_i indecomposable root lattices or additively
/// indecomposable, and L not a sublattice of any I_N, is additively
/// indecomposable. A dual minimum <= 1 rules that out. Otherwise Unknown.
/// Throws MalformedSpec when `spec` does not rebuild a lattice isometric to L.
Certificate additive_certificate(const Lattice& lattice, const std::optional<GlueSpec>& spec,
                                 const SearchOptions& options = {});
/// Recomputes every quantity cited by the certificate.
bool verify_certificate(const Lattice& lattice, const Certificate& certificate, const SearchOptions& options = {});

/// True iff L is spanned by its roots and orthogonally indecomposable.
bool is_indecomposable_root_lattice(const Lattice& lattice, const SearchOptions& options = {});

/// Congruence criterion for A_n k(n+1)[i 1/(n+1)] being represented by
/// A_n l(n+1)[j 1/(n+1)]: some t >= 1 has k = l t^2 and jt = +-i mod n+1.
/// Throws PreconditionViolated unless both lattices are integral with root
/// sublattice exactly A_n, and 0 <= i, j <= (n+1)/2.
bool check_anrep(int n, long k, int i, long l, int j, const SearchOptions& options = {});
/// The same question answered by embedding search (invariant filters off).
bool anrep_bruteforce(int n, long k, int i, long l, int j, const SearchOptions& options = {});
/// Whether (n, k, i, l, j) satisfies the preconditions of check_anrep.
bool anrep_admissible(int n, long k, int i, long l, int j, const SearchOptions& options = {});

}  // namespace qlat
