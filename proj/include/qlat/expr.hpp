#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "qlat/constructions.hpp"
#include "qlat/lattice.hpp"

namespace qlat {

/// Glue element attached to one component of a glue(...) expression.
struct GlueRef {
  enum class Kind { Index, Fraction, DualCoords };
  Kind kind = Kind::Index;
  long index = 0;         // [i]
  Int denominator = 1;    // 1/m
  RatVector coords;       // [r1, ..., rk] in the component's dual coordinates

  bool operator==(const GlueRef&) const = default;
};

struct Expr {
  enum class Kind { Root, Scalar, Named, Perp, Glue, Literal };
  Kind kind = Kind::Root;
  RootFamily family = RootFamily::I;  // Root
  long n = 0;                         // Root
  Int scalar = 0;                     // Scalar s(a)
  std::string name;                   // Named: M, K, Aki, Mbig, L12, L16, M14
  std::vector<long> params;           // Named
  std::vector<Expr> children;         // Perp, Glue
  std::vector<GlueRef> glues;         // Glue
  RatMatrix gram;                     // Literal

  bool operator==(const Expr& other) const;
};

/// Grammar (whitespace insensitive):
///   expr  := "perp(" expr ("," expr)+ ")" | "glue(" expr ("," expr)* ";" glue ("," glue)* ")"
///          | ("I"|"A"|"D"|"Dplus") "(" int ")" | "E7" | "E8" | "s(" int ")"
///          | ("M"|"K"|"Mbig") "(" int ")" | "Aki(" int "," int ")" | "L12" | "L16" | "M14"
///          | "[[" rat ("," rat)* "]" ("," "[" ... "]")* "]"
///   glue  := "[" int "]" | "1/" int | "[" rat ("," rat)* "]"
/// A bracket holding one plain integer is an index; anything else in brackets
/// is a coordinate vector. Throws SyntaxError (with line and column) or
/// ArityMismatch when the glue count differs from the component count.
Expr parse_expression(std::string_view text);

/// Canonical text; parse_expression(print_expression(e)) == e.
std::string print_expression(const Expr& expr);

/// Builds the lattice. Construction errors propagate (NonIntegralError carries
/// the offending norm).
Lattice evaluate(const Expr& expr);
Lattice evaluate(std::string_view text);

/// {"rank": n, "gram": [["p/q", ...], ...], "label": "..."}; integral entries
/// are plain integer strings. Label omitted when empty.
std::string lattice_to_json(const Lattice& lattice);
/// Accepts entries as strings "p/q" or JSON integers. Throws InvalidFormat.
Lattice lattice_from_json(std::string_view text);

}  // namespace qlat
