#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <set>
#include <span>
#include <vector>

#include "qlat/lattice.hpp"

namespace qlat {

struct EnumerationOptions {
  /// Cap on enumeration-tree nodes; exceeding it raises BoundTooLargeForBudget.
  std::uint64_t node_budget = 100'000'000;
};

/// A lattice vector as integer coordinates in the lattice basis (in the dual
/// basis for dual queries), with its exact norm.
struct ShortVector {
  std::vector<std::int64_t> coords;
  Rat norm;
};

/// Called once per +/- pair with coordinates in the basis of `gram` (first
/// nonzero coordinate positive) and the exact norm. Return false to stop.
using FormVisitor = std::function<bool(std::span<const std::int64_t>, std::int64_t)>;

/// Fincke-Pohst enumeration of all nonzero x with x A x^t <= bound for a
/// positive definite integer matrix A. The basis is LLL-reduced first; the
/// floating-point pruning carries a safety slack and every candidate is decided
/// in exact integer arithmetic.
void enumerate_integral_form(const IntMatrix& gram, const Int& bound, const EnumerationOptions& options,
                             const FormVisitor& visit);

/// All nonzero vectors of norm <= bound, one per +/- pair, sorted by (norm,
/// coordinates).
std::vector<ShortVector> short_vectors(const Lattice& lattice, const Rat& bound,
                                       const EnumerationOptions& options = {});
/// Same for the dual lattice; coordinates are in the dual basis.
std::vector<ShortVector> dual_short_vectors(const Lattice& lattice, const Rat& bound,
                                            const EnumerationOptions& options = {});

Rat minimum(const Lattice& lattice, const EnumerationOptions& options = {});
/// min(L^#); throws NotIntegral.
Rat dual_minimum(const Lattice& lattice, const EnumerationOptions& options = {});
/// Least norm of a dual vector outside L; nullopt when L is unimodular.
/// Throws NotIntegral.
std::optional<Rat> dual_minimum_outside(const Lattice& lattice, const EnumerationOptions& options = {});

/// True iff dual-basis coordinates `c` describe a vector of L itself.
bool dual_vector_in_lattice(const Lattice& lattice, std::span<const std::int64_t> c);

/// Vectors of norm <= 2; throws NotIntegral.
std::vector<ShortVector> roots(const Lattice& lattice, const EnumerationOptions& options = {});
/// Sublattice generated by the roots; nullopt when there are none.
std::optional<Sublattice> root_sublattice(const Lattice& lattice, const EnumerationOptions& options = {});

/// { m <= bound : L has a vector of norm m }.
std::set<long> represented_integers(const Lattice& lattice, long bound, const EnumerationOptions& options = {});

/// Number of +/- pairs of each norm up to `bound`.
std::map<Rat, std::size_t> norm_histogram(const Lattice& lattice, const Rat& bound,
                                          const EnumerationOptions& options = {});

}  // namespace qlat
