#pragma once

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "qlat/errors.hpp"
#include "qlat/linalg.hpp"

namespace qlat {

/// How a lattice sits inside an ambient rational quadratic space: the basis
/// vectors are the rows of `generators`, measured with `gram`.
struct AmbientEmbedding {
  RatMatrix generators;  // rank x dim
  RatMatrix gram;        // dim x dim
};

/// A positive definite lattice given by the exact Gram matrix of a basis.
/// Vectors are written as (possibly rational) coordinate rows in that basis;
/// Q(x) = x G x^t and B is its polarization.
///
/// Values are immutable. Equality is Gram equality; isometry is a separate
/// question answered by the morphisms module.
class Lattice {
 public:
  /// Validates symmetry and positive definiteness.
  static Lattice from_gram(RatMatrix gram, std::string label = {});
  static Lattice from_gram(const IntMatrix& gram, std::string label = {});
  /// Basis given by rows of `generators` (must be independent) in an ambient
  /// space with Gram `ambient_gram`.
  static Lattice from_ambient(RatMatrix generators, RatMatrix ambient_gram, std::string label = {});

  std::size_t rank() const noexcept { return gram_.rows(); }
  const RatMatrix& gram() const noexcept { return gram_; }
  const std::optional<AmbientEmbedding>& ambient() const noexcept { return ambient_; }
  const std::string& label() const noexcept { return label_; }

  Lattice with_label(std::string label) const;
  /// Same lattice in the basis given by the rows of `transform` (unimodular).
  Lattice change_basis(const IntMatrix& transform) const;

  Rat norm(std::span<const Rat> x) const { return bilinear(x, gram_, x); }
  Rat inner(std::span<const Rat> x, std::span<const Rat> y) const { return bilinear(x, gram_, y); }

  bool operator==(const Lattice& other) const { return gram_ == other.gram_; }

 private:
  Lattice() = default;
  RatMatrix gram_;
  std::optional<AmbientEmbedding> ambient_;
  std::string label_;
};

/// L^#/L as computed from the Smith normal form of the integral Gram matrix.
/// Coset representatives are rational coordinate rows y (y G is integral),
/// reduced into [0, 1) coordinatewise.
struct DiscriminantGroup {
  std::vector<Int> elementary_divisors;  // d_1 | d_2 | ..., all > 1
  std::vector<RatVector> generators;     // one per divisor, of that order
  std::vector<RatVector> coset_reps;
  Int order;
};

Lattice make_lattice(const RatMatrix& gram, std::string label = {});

Rat discriminant(const Lattice& lattice);
/// Positive generator of the ideal spanned by all B(x, y).
Rat scale(const Lattice& lattice);
bool is_integral(const Lattice& lattice);
/// Integer Gram matrix; throws NotIntegral.
IntMatrix integral_gram(const Lattice& lattice);

/// Gram of the dual basis (inverse Gram).
Lattice dual(const Lattice& lattice);

/// Throws NotIntegral. Coset representatives are listed only when the order is
/// at most `max_listed` (otherwise the list is empty).
DiscriminantGroup discriminant_group(const Lattice& lattice, std::size_t max_listed = 1'000'000);

Lattice orthogonal_sum(const Lattice& a, const Lattice& b);
Lattice orthogonal_sum(const std::vector<Lattice>& parts);

/// Diagonal lattice <a_1, ..., a_n>.
Lattice diagonal_lattice(const std::vector<Int>& entries);
/// x scaled Gram.
Lattice scaled(const Lattice& lattice, const Rat& factor);

/// Rational basis coordinates of an ambient vector; throws InvalidParameter if
/// the lattice carries no ambient data or `v` is outside its rational span.
RatVector coords_from_ambient(const Lattice& lattice, std::span<const Rat> v);

/// True iff y G is integral, i.e. y lies in the dual lattice.
bool in_dual(const Lattice& lattice, std::span<const Rat> y);
/// Smallest f > 0 with f y integral.
Int coset_order(std::span<const Rat> y);

/// Sublattice spanned by integer coordinate rows; `basis` is a Z-basis of the
/// span in the parent's coordinates.
struct Sublattice {
  Lattice lattice;
  IntMatrix basis;
};
Sublattice span_of(const Lattice& parent, const IntMatrix& generators);

/// Overlattice generated by the lattice and extra rational coordinate rows.
/// `basis` holds the new basis rows in the parent's rational coordinates.
struct Overlattice {
  Lattice lattice;
  RatMatrix basis;
};
Overlattice overlattice(const Lattice& parent, const std::vector<RatVector>& extra);

/// True iff the rows of the integer matrix span a primitive sublattice
/// (all elementary divisors equal 1).
bool is_primitive_rows(const IntMatrix& rows);

/// LLL reduction of the Gram scaled by its common denominator; `gram` is the
/// reduced Gram at that scale.
LllResult lll(const Lattice& lattice);
/// The same lattice re-expressed in an LLL-reduced basis (ambient data follows).
Lattice lll_reduced(const Lattice& lattice);

}  // namespace qlat
