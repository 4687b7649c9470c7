#pragma once

#include <optional>
#include <string>
#include <vector>

#include "qlat/lattice.hpp"

namespace qlat {

enum class RootFamily { I, A, D, E7, E8, Dplus };

struct RootLatticeId {
  RootFamily family;
  int n = 0;
};

std::string to_string(const RootLatticeId& id);

/// Root lattices in their usual ambient coordinates:
///   I_n  = Z^n,
///   A_n  = {x in Z^{n+1} : sum x = 0},
///   D_n  = {x in Z^n : sum x even}, n >= 4,
///   E8   = D_8 + Z[(1/2, ..., 1/2)],
///   E7   = {x in E8 : sum x = 0},
///   Dplus(n) = D_n + Z[(1/2, ..., 1/2)], n divisible by 4.
/// Throws InvalidParameter.
Lattice root_lattice(const RootLatticeId& id);

/// Glue vector [i] in ambient coordinates:
///   A_n: i/(n+1) repeated n+1-i times, then -(n+1-i)/(n+1) repeated i times (0 <= i <= n)
///   D_n: [1] = (1/2, ..., 1/2), [2] = (0, ..., 0, 1), [3] = (1/2, ..., 1/2, -1/2)
///   E7:  [1] = (1/4 x6, -3/4 x2)
///   I, E8, Dplus: only [0].
/// Throws IndexOutOfRange.
RatVector glue_vector_ambient(const RootLatticeId& id, int i);
/// The same glue vector as rational coordinates in the basis of root_lattice(id).
RatVector glue_vector(const RootLatticeId& id, int i);

/// One summand of a glue construction together with its glue element, given as
/// rational coordinates in the summand's basis (an element of its dual).
struct GlueComponent {
  Lattice lattice;
  RatVector glue;
  std::string description;  // e.g. "A(5)", "<7>"
  std::string glue_description;  // e.g. "[2]", "1/7"
  std::optional<int> requested_index;  // for root components
};

/// Component root_lattice(id) with glue [i]. For A_n the index is replaced by
/// min(i, n+1-i); the result is the same lattice up to isometry.
GlueComponent root_component(const RootLatticeId& id, int i);
/// The shorthand "a, 1/m": the rank-one lattice <a> with glue z/m. z/m lies in
/// the dual only when m | a; gluing checks that.
GlueComponent scalar_component(const Int& a, const Int& m);
/// Arbitrary lattice with a dual element as glue; throws MalformedSpec when the
/// element is not in the dual.
GlueComponent lattice_component(const Lattice& lattice, RatVector glue, std::string glue_description = {});

struct GlueSpec {
  std::vector<GlueComponent> components;
};

std::string to_string(const GlueSpec& spec);

struct GlueOptions {
  bool require_integral = true;
};

/// (L_1 + ... + L_t) + Z[x_1 + ... + x_t].
struct GlueResult {
  Lattice lattice;
  Lattice sum;                // the orthogonal sum of the components
  RatMatrix basis;            // basis of `lattice` in coordinates of `sum`
  RatVector glued_vector;     // x_1 + ... + x_t in coordinates of `sum`
  Rat glued_norm;             // Q(x_1 + ... + x_t)
  Int coset_order;            // order of the glued vector modulo the sum
  std::vector<std::size_t> offsets;  // first coordinate of each component in `sum`
};

/// Throws NonIntegralError when integrality is required and Q(glued) is not an
/// integer or some glue element lies outside its component's dual;
/// MalformedSpec on empty or inconsistent specs.
GlueResult glue_construction(const GlueSpec& spec, const GlueOptions& options = {});
Lattice glue(const GlueSpec& spec, const GlueOptions& options = {});

/// Coordinates in glue_construction(spec).lattice of a vector given in the
/// coordinates of the orthogonal sum.
RatVector coords_in_glued(const GlueResult& result, std::span<const Rat> sum_coords);

// Named lattices. Every constructor throws InvalidParameter outside its range.

/// A_4 (25c - 20)[1 1/5], c >= 1.
GlueSpec spec_M(long c);
/// A_4 (25d - 5)[2 1/5], d >= 1.
GlueSpec spec_K(long d);
/// A_8 9(9k + i^2)[i 1/9], 1 <= i <= 4, 9k + i^2 >= 1.
GlueSpec spec_Aki(long k, int i);
/// E7 A5 [1 3].
GlueSpec spec_L12();
/// A11 A5 [2 2].
GlueSpec spec_L16();
/// A13 7[4 1/7].
GlueSpec spec_M14();
/// M14 D_{4k-2} [u 1] with u the minimal dual vector of M14 described below, k >= 2.
GlueSpec spec_Mbig(long k);
/// A_n k(n+1)[i 1/(n+1)].
GlueSpec spec_An_family(int n, long k, int i);

Lattice lattice_M(long c);
Lattice lattice_K(long d);
Lattice lattice_Aki(long k, int i);
Lattice lattice_L12();
Lattice lattice_L16();
Lattice lattice_M14();
Lattice lattice_Mbig(long k);

/// [1] + (2/7) z in the coordinates of lattice_M14(), where z spans the
/// orthogonal complement of A13. It lies in the dual and has norm 3/2.
RatVector m14_dual_vector();

/// The registered named lattices by name ("L12", "M(3)", ...).
struct NamedLattice {
  std::string name;
  Lattice lattice;
};
std::vector<NamedLattice> named_lattice_table();

/// All integral lattices of rank n+1 containing `lattice` primitively whose
/// orthogonal-complement generator has norm at most `qmax`, one per isometry
/// class. Throws NotIntegral.
struct Extension {
  Lattice lattice;
  RatVector coset_rep;  // y' in dual coordinates of the input
  Int coset_order;      // f
  Int complement_norm;  // Q(z)
};
std::vector<Extension> primitive_extensions(const Lattice& lattice, const Int& qmax);

/// All proper integral overlattices of the same rank, one per isometry class.
std::vector<Lattice> integral_overlattices(const Lattice& lattice);

}  // namespace qlat
