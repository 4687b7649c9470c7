#include "qlat/constructions.hpp"

#include <sstream>

namespace qlat {

namespace {

RatMatrix identity_rat(std::size_t n) { return RatMatrix::identity(n); }

void require(bool ok, const std::string& what) {
  if (!ok) throw Error(ErrorCode::InvalidParameter, what);
}

Lattice a_n(int n) {
  RatMatrix gens(n, n + 1);
  for (int i = 0; i < n; ++i) {
    gens(i, i) = 1;
    gens(i, i + 1) = -1;
  }
  return Lattice::from_ambient(std::move(gens), identity_rat(n + 1), "A" + std::to_string(n));
}

Lattice d_n(int n) {
  RatMatrix gens(n, n);
  for (int i = 0; i + 1 < n; ++i) {
    gens(i, i) = 1;
    gens(i, i + 1) = -1;
  }
  gens(n - 1, n - 2) = 1;
  gens(n - 1, n - 1) = 1;
  return Lattice::from_ambient(std::move(gens), identity_rat(n), "D" + std::to_string(n));
}

Lattice d_plus(int n, std::string label) {
  Lattice d = d_n(n);
  RatVector half(n, Rat(1, 2));
  Overlattice o = overlattice(d, {coords_from_ambient(d, half)});
  return o.lattice.with_label(std::move(label));
}

Lattice e7() {
  RatMatrix gens(7, 8);
  for (int i = 0; i < 6; ++i) {
    gens(i, i) = 1;
    gens(i, i + 1) = -1;
  }
  for (int j = 0; j < 8; ++j) gens(6, j) = j < 4 ? Rat(1, 2) : Rat(-1, 2);
  Lattice raw = Lattice::from_ambient(std::move(gens), identity_rat(8), "E7");
  return lll_reduced(raw);
}

}  // namespace

std::string to_string(const RootLatticeId& id) {
  switch (id.family) {
    case RootFamily::I: return "I(" + std::to_string(id.n) + ")";
    case RootFamily::A: return "A(" + std::to_string(id.n) + ")";
    case RootFamily::D: return "D(" + std::to_string(id.n) + ")";
    case RootFamily::Dplus: return "Dplus(" + std::to_string(id.n) + ")";
    case RootFamily::E7: return "E7";
    case RootFamily::E8: return "E8";
  }
  return "?";
}

Lattice root_lattice(const RootLatticeId& id) {
  switch (id.family) {
    case RootFamily::I:
      require(id.n >= 1, "I(n) needs n >= 1");
      return Lattice::from_ambient(identity_rat(id.n), identity_rat(id.n), "I" + std::to_string(id.n));
    case RootFamily::A:
      require(id.n >= 1, "A(n) needs n >= 1");
      return a_n(id.n);
    case RootFamily::D:
      require(id.n >= 4, "D(n) needs n >= 4");
      return d_n(id.n);
    case RootFamily::Dplus:
      require(id.n >= 4 && id.n % 4 == 0, "Dplus(n) needs n >= 4 divisible by 4");
      return d_plus(id.n, "Dplus" + std::to_string(id.n));
    case RootFamily::E7:
      return e7();
    case RootFamily::E8:
      return d_plus(8, "E8");
  }
  throw Error(ErrorCode::InvalidParameter, "unknown root family");
}

RatVector glue_vector_ambient(const RootLatticeId& id, int i) {
  auto out_of_range = [&] {
    return Error(ErrorCode::IndexOutOfRange, "glue index " + std::to_string(i) + " out of range for " + to_string(id));
  };
  switch (id.family) {
    case RootFamily::A: {
      const int n = id.n;
      if (i < 0 || i > n) throw out_of_range();
      const int j = n + 1 - i;
      RatVector v;
      for (int k = 0; k < j; ++k) v.push_back(make_rat(i, n + 1));
      for (int k = 0; k < i; ++k) v.push_back(make_rat(-j, n + 1));
      return v;
    }
    case RootFamily::D: {
      const int n = id.n;
      if (i < 0 || i > 3) throw out_of_range();
      RatVector v(n, Rat(0));
      if (i == 1 || i == 3)
        for (auto& x : v) x = Rat(1, 2);
      if (i == 2) v[n - 1] = 1;
      if (i == 3) v[n - 1] = Rat(-1, 2);
      return v;
    }
    case RootFamily::E7: {
      if (i < 0 || i > 1) throw out_of_range();
      RatVector v(8, Rat(0));
      if (i == 1)
        for (int k = 0; k < 8; ++k) v[k] = k < 6 ? Rat(1, 4) : Rat(-3, 4);
      return v;
    }
    case RootFamily::I:
    case RootFamily::E8:
    case RootFamily::Dplus: {
      if (i != 0) throw out_of_range();
      const int dim = id.family == RootFamily::E8 ? 8 : id.n;
      return RatVector(dim, Rat(0));
    }
  }
  throw out_of_range();
}

RatVector glue_vector(const RootLatticeId& id, int i) {
  RatVector amb = glue_vector_ambient(id, i);
  return coords_from_ambient(root_lattice(id), amb);
}

GlueComponent root_component(const RootLatticeId& id, int i) {
  int index = i;
  if (id.family == RootFamily::A && i > (id.n + 1) / 2 && i <= id.n) index = id.n + 1 - i;
  Lattice lat = root_lattice(id);
  RatVector g = coords_from_ambient(lat, glue_vector_ambient(id, index));
  return GlueComponent{lat, std::move(g), to_string(id), "[" + std::to_string(i) + "]", i};
}

GlueComponent scalar_component(const Int& a, const Int& m) {
  if (sgn(a) <= 0 || sgn(m) <= 0) throw Error(ErrorCode::MalformedSpec, "scalar component needs a, m > 0");
  Lattice lat = Lattice::from_gram(IntMatrix{{a}}, "<" + a.get_str() + ">");
  return GlueComponent{lat, RatVector{make_rat(1, m)}, a.get_str(), "1/" + m.get_str(), std::nullopt};
}

GlueComponent lattice_component(const Lattice& lattice, RatVector glue, std::string glue_description) {
  if (glue.size() != lattice.rank()) throw Error(ErrorCode::MalformedSpec, "glue element has the wrong length");
  if (!in_dual(lattice, glue)) throw Error(ErrorCode::MalformedSpec, "glue element is not in the dual lattice");
  if (glue_description.empty()) {
    glue_description = "[";
    for (std::size_t i = 0; i < glue.size(); ++i) glue_description += (i ? "," : "") + to_string(glue[i]);
    glue_description += "]";
  }
  std::string desc = lattice.label().empty() ? "L" : lattice.label();
  return GlueComponent{lattice, std::move(glue), desc, std::move(glue_description), std::nullopt};
}

std::string to_string(const GlueSpec& spec) {
  std::ostringstream os;
  for (std::size_t i = 0; i < spec.components.size(); ++i) os << (i ? " " : "") << spec.components[i].description;
  os << " [";
  for (std::size_t i = 0; i < spec.components.size(); ++i) os << (i ? " " : "") << spec.components[i].glue_description;
  os << "]";
  return os.str();
}

GlueResult glue_construction(const GlueSpec& spec, const GlueOptions& options) {
  if (spec.components.empty()) throw Error(ErrorCode::MalformedSpec, "glue needs at least one component");
  std::size_t rank = 0, dim = 0;
  for (const auto& c : spec.components) {
    if (c.glue.size() != c.lattice.rank()) throw Error(ErrorCode::MalformedSpec, "glue element has the wrong length");
    rank += c.lattice.rank();
    dim += c.lattice.ambient() ? c.lattice.ambient()->generators.cols() : c.lattice.rank();
  }

  RatMatrix gens(rank, dim), amb_gram(dim, dim);
  RatVector glued;
  std::vector<std::size_t> offsets;
  std::size_t r0 = 0, d0 = 0;
  for (const auto& c : spec.components) {
    offsets.push_back(r0);
    const RatMatrix g = c.lattice.ambient() ? c.lattice.ambient()->generators : identity_rat(c.lattice.rank());
    const RatMatrix a = c.lattice.ambient() ? c.lattice.ambient()->gram : c.lattice.gram();
    for (std::size_t i = 0; i < g.rows(); ++i)
      for (std::size_t j = 0; j < g.cols(); ++j) gens(r0 + i, d0 + j) = g(i, j);
    for (std::size_t i = 0; i < a.rows(); ++i)
      for (std::size_t j = 0; j < a.cols(); ++j) amb_gram(d0 + i, d0 + j) = a(i, j);
    glued.insert(glued.end(), c.glue.begin(), c.glue.end());
    r0 += g.rows();
    d0 += g.cols();
  }
  Lattice sum = Lattice::from_ambient(std::move(gens), std::move(amb_gram));
  Rat norm = sum.norm(glued);
  if (options.require_integral && norm.get_den() != 1)
    throw NonIntegralError(norm, "glued vector has non-integral norm " + to_string(norm));
  // an element outside a component's dual pairs non-integrally with that component
  if (options.require_integral)
    for (const auto& c : spec.components)
      if (!in_dual(c.lattice, c.glue))
        throw NonIntegralError(norm, "glue element " + c.glue_description + " is not in the dual of " + c.description);

  Overlattice over = overlattice(sum, {glued});
  GlueResult out{over.lattice.with_label(to_string(spec)), sum, std::move(over.basis), glued, norm,
                 common_denominator(std::span<const Rat>(glued)), std::move(offsets)};
  return out;
}

Lattice glue(const GlueSpec& spec, const GlueOptions& options) { return glue_construction(spec, options).lattice; }

RatVector coords_in_glued(const GlueResult& result, std::span<const Rat> sum_coords) {
  return sum_coords * *inverse(result.basis);
}

GlueSpec spec_M(long c) {
  require(c >= 1, "M(c) needs c >= 1");
  return {{root_component({RootFamily::A, 4}, 1), scalar_component(Int(25 * c - 20), Int(5))}};
}

GlueSpec spec_K(long d) {
  require(d >= 1, "K(d) needs d >= 1");
  return {{root_component({RootFamily::A, 4}, 2), scalar_component(Int(25 * d - 5), Int(5))}};
}

GlueSpec spec_Aki(long k, int i) {
  require(i >= 1 && i <= 4, "Aki(k, i) needs 1 <= i <= 4");
  require(9 * k + i * i >= 1, "Aki(k, i) needs 9k + i^2 >= 1");
  return {{root_component({RootFamily::A, 8}, i), scalar_component(Int(9 * (9 * k + i * i)), Int(9))}};
}

GlueSpec spec_L12() { return {{root_component({RootFamily::E7, 7}, 1), root_component({RootFamily::A, 5}, 3)}}; }

GlueSpec spec_L16() { return {{root_component({RootFamily::A, 11}, 2), root_component({RootFamily::A, 5}, 2)}}; }

GlueSpec spec_M14() { return {{root_component({RootFamily::A, 13}, 4), scalar_component(Int(7), Int(7))}}; }

RatVector m14_dual_vector() {
  GlueResult m = glue_construction(spec_M14());
  RatVector sum_coords = glue_vector({RootFamily::A, 13}, 1);
  sum_coords.push_back(Rat(2, 7));
  return coords_in_glued(m, sum_coords);
}

GlueSpec spec_Mbig(long k) {
  require(k >= 2, "Mbig(k) needs k >= 2");
  return {{lattice_component(lattice_M14(), m14_dual_vector(), "u"),
           root_component({RootFamily::D, static_cast<int>(4 * k - 2)}, 1)}};
}

GlueSpec spec_An_family(int n, long k, int i) {
  require(n >= 1 && k >= 1, "A_n family needs n, k >= 1");
  return {{root_component({RootFamily::A, n}, i), scalar_component(Int(k * (n + 1)), Int(n + 1))}};
}

Lattice lattice_M(long c) { return glue(spec_M(c)).with_label("M(" + std::to_string(c) + ")"); }
Lattice lattice_K(long d) { return glue(spec_K(d)).with_label("K(" + std::to_string(d) + ")"); }
Lattice lattice_Aki(long k, int i) {
  return glue(spec_Aki(k, i)).with_label("Aki(" + std::to_string(k) + "," + std::to_string(i) + ")");
}
Lattice lattice_L12() { return glue(spec_L12()).with_label("L12"); }
Lattice lattice_L16() { return glue(spec_L16()).with_label("L16"); }
Lattice lattice_M14() { return glue(spec_M14()).with_label("M14"); }
Lattice lattice_Mbig(long k) { return glue(spec_Mbig(k)).with_label("Mbig(" + std::to_string(k) + ")"); }

std::vector<NamedLattice> named_lattice_table() {
  std::vector<NamedLattice> t;
  for (int n = 1; n <= 12; ++n) t.push_back({"I(" + std::to_string(n) + ")", root_lattice({RootFamily::I, n})});
  for (int n = 1; n <= 13; ++n) t.push_back({"A(" + std::to_string(n) + ")", root_lattice({RootFamily::A, n})});
  for (int n = 4; n <= 10; ++n) t.push_back({"D(" + std::to_string(n) + ")", root_lattice({RootFamily::D, n})});
  t.push_back({"E7", root_lattice({RootFamily::E7, 7})});
  t.push_back({"E8", root_lattice({RootFamily::E8, 8})});
  for (long c = 1; c <= 4; ++c) t.push_back({"M(" + std::to_string(c) + ")", lattice_M(c)});
  for (long d = 1; d <= 4; ++d) t.push_back({"K(" + std::to_string(d) + ")", lattice_K(d)});
  for (int i = 1; i <= 4; ++i)
    for (long k = (i == 4 ? -1 : 0); k <= 1; ++k)
      t.push_back({"Aki(" + std::to_string(k) + "," + std::to_string(i) + ")", lattice_Aki(k, i)});
  t.push_back({"L12", lattice_L12()});
  t.push_back({"L16", lattice_L16()});
  t.push_back({"M14", lattice_M14()});
  return t;
}

}  // namespace qlat
