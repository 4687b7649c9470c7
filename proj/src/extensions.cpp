#include <algorithm>

#include "qlat/constructions.hpp"
#include "qlat/morphisms.hpp"

namespace qlat {

namespace {

bool seen_before(const std::vector<Lattice>& pool, const Lattice& l) {
  for (const auto& p : pool)
    if (p.rank() == l.rank() && discriminant(p) == discriminant(l) && is_isometric(p, l)) return true;
  return false;
}

}  // namespace

std::vector<Extension> primitive_extensions(const Lattice& lattice, const Int& qmax) {
  integral_gram(lattice);
  if (qmax < 1) throw Error(ErrorCode::InvalidParameter, "qmax must be at least 1");
  DiscriminantGroup dg = discriminant_group(lattice);
  if (dg.coset_reps.empty()) throw Error(ErrorCode::InvalidParameter, "discriminant group too large to list");

  std::vector<Extension> out;
  std::vector<Lattice> seen;
  for (const auto& y : dg.coset_reps) {
    const Int f = coset_order(y);
    const Rat qy = lattice.norm(y);
    for (Int a = f; a <= qmax; a += f) {
      Rat total = qy + Rat(a) / Rat(f * f);
      if (total.get_den() != 1) continue;
      GlueSpec spec{{lattice_component(lattice, y), scalar_component(a, f)}};
      Lattice l = glue(spec);
      if (seen_before(seen, l)) continue;
      seen.push_back(l);
      out.push_back(Extension{l, y, f, a});
    }
  }
  std::stable_sort(out.begin(), out.end(), [](const Extension& a, const Extension& b) {
    const Rat da = discriminant(a.lattice), db = discriminant(b.lattice);
    if (da != db) return da < db;
    return a.complement_norm < b.complement_norm;
  });
  return out;
}

std::vector<Lattice> integral_overlattices(const Lattice& lattice) {
  integral_gram(lattice);
  std::vector<Lattice> found;
  std::vector<Lattice> frontier{lattice};
  while (!frontier.empty()) {
    Lattice x = frontier.back();
    frontier.pop_back();
    DiscriminantGroup dg = discriminant_group(x);
    for (const auto& y : dg.coset_reps) {
      if (std::all_of(y.begin(), y.end(), [](const Rat& r) { return sgn(r) == 0; })) continue;
      if (x.norm(y).get_den() != 1) continue;
      Lattice over = overlattice(x, {y}).lattice;
      if (!is_integral(over) || seen_before(found, over)) continue;
      found.push_back(over);
      frontier.push_back(over);
    }
  }
  std::stable_sort(found.begin(), found.end(),
                   [](const Lattice& a, const Lattice& b) { return discriminant(a) < discriminant(b); });
  return found;
}

}  // namespace qlat
