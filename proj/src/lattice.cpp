#include "qlat/lattice.hpp"

#include <algorithm>
#include <functional>

namespace qlat {

Lattice Lattice::from_gram(RatMatrix gram, std::string label) {
  if (!gram.square() || gram.rows() == 0)
    throw Error(ErrorCode::NotSymmetric, "Gram matrix must be square and nonempty");
  if (!is_symmetric(gram)) throw Error(ErrorCode::NotSymmetric, "Gram matrix is not symmetric");
  if (!is_positive_definite(gram))
    throw Error(ErrorCode::NotPositiveDefinite, "Gram matrix is not positive definite");
  Lattice l;
  l.gram_ = std::move(gram);
  l.label_ = std::move(label);
  return l;
}

Lattice Lattice::from_gram(const IntMatrix& gram, std::string label) {
  return from_gram(to_rat(gram), std::move(label));
}

Lattice Lattice::from_ambient(RatMatrix generators, RatMatrix ambient_gram, std::string label) {
  if (generators.cols() != ambient_gram.rows())
    throw Error(ErrorCode::InvalidParameter, "generator width does not match ambient dimension");
  RatMatrix gram = generators * ambient_gram * transpose(generators);
  Lattice l = from_gram(std::move(gram), std::move(label));
  l.ambient_ = AmbientEmbedding{std::move(generators), std::move(ambient_gram)};
  return l;
}

Lattice Lattice::with_label(std::string label) const {
  Lattice l = *this;
  l.label_ = std::move(label);
  return l;
}

Lattice Lattice::change_basis(const IntMatrix& transform) const {
  RatMatrix t = to_rat(transform);
  Lattice l;
  l.gram_ = t * gram_ * transpose(t);
  if (ambient_) l.ambient_ = AmbientEmbedding{t * ambient_->generators, ambient_->gram};
  l.label_ = label_;
  return l;
}

Lattice make_lattice(const RatMatrix& gram, std::string label) { return Lattice::from_gram(gram, std::move(label)); }

Rat discriminant(const Lattice& lattice) { return determinant(lattice.gram()); }

Rat scale(const Lattice& lattice) {
  const auto& g = lattice.gram();
  // gcd of rationals p_i/q_i = gcd(p_i) / lcm(q_i)
  Int num = 0;
  Int den = 1;
  for (std::size_t i = 0; i < g.rows(); ++i)
    for (std::size_t j = 0; j < g.cols(); ++j) {
      mpz_gcd(num.get_mpz_t(), num.get_mpz_t(), g(i, j).get_num().get_mpz_t());
      den = lcm(den, g(i, j).get_den());
    }
  Rat s(num, den);
  s.canonicalize();
  return s;
}

bool is_integral(const Lattice& lattice) { return to_int(lattice.gram()).has_value(); }

IntMatrix integral_gram(const Lattice& lattice) {
  auto g = to_int(lattice.gram());
  if (!g) throw Error(ErrorCode::NotIntegral, "lattice is not integral");
  return *g;
}

Lattice dual(const Lattice& lattice) {
  auto inv = inverse(lattice.gram());
  // positive definite, so always invertible
  std::string label = lattice.label().empty() ? std::string{} : lattice.label() + "#";
  return Lattice::from_gram(std::move(*inv), std::move(label));
}

namespace {

Rat frac(const Rat& r) {
  Int fl;
  mpz_fdiv_q(fl.get_mpz_t(), r.get_num().get_mpz_t(), r.get_den().get_mpz_t());
  return r - Rat(fl);
}

}  // namespace

DiscriminantGroup discriminant_group(const Lattice& lattice, std::size_t max_listed) {
  IntMatrix g = integral_gram(lattice);
  const std::size_t n = g.rows();
  SmithForm snf = smith_form(g);
  DiscriminantGroup out;
  out.order = 1;
  for (std::size_t i = 0; i < n; ++i) {
    const Int& d = snf.diagonal[i];
    if (d == 1) continue;
    out.elementary_divisors.push_back(d);
    out.order *= d;
    RatVector gen(n);
    for (std::size_t j = 0; j < n; ++j) gen[j] = frac(make_rat(snf.left(i, j), d));
    out.generators.push_back(std::move(gen));
  }
  if (out.order.fits_ulong_p() && out.order.get_ui() <= max_listed) {
    std::vector<RatVector> reps{RatVector(n, Rat(0))};
    for (std::size_t g_idx = 0; g_idx < out.generators.size(); ++g_idx) {
      std::vector<RatVector> next;
      const unsigned long d = out.elementary_divisors[g_idx].get_ui();
      next.reserve(reps.size() * d);
      for (const auto& base : reps) {
        for (unsigned long k = 0; k < d; ++k) {
          RatVector v(n);
          for (std::size_t j = 0; j < n; ++j) v[j] = frac(base[j] + Rat(static_cast<long>(k)) * out.generators[g_idx][j]);
          next.push_back(std::move(v));
        }
      }
      reps = std::move(next);
    }
    out.coset_reps = std::move(reps);
  }
  return out;
}

Lattice orthogonal_sum(const Lattice& a, const Lattice& b) {
  std::string label;
  if (!a.label().empty() && !b.label().empty()) label = a.label() + " + " + b.label();
  return Lattice::from_gram(block_diagonal(a.gram(), b.gram()), std::move(label));
}

Lattice orthogonal_sum(const std::vector<Lattice>& parts) {
  if (parts.empty()) throw Error(ErrorCode::InvalidParameter, "empty orthogonal sum");
  Lattice acc = parts.front();
  for (std::size_t i = 1; i < parts.size(); ++i) acc = orthogonal_sum(acc, parts[i]);
  return acc;
}

Lattice diagonal_lattice(const std::vector<Int>& entries) {
  IntMatrix g(entries.size(), entries.size());
  std::string label = "<";
  for (std::size_t i = 0; i < entries.size(); ++i) {
    g(i, i) = entries[i];
    if (i) label += ",";
    label += entries[i].get_str();
  }
  label += ">";
  return Lattice::from_gram(g, label);
}

Lattice scaled(const Lattice& lattice, const Rat& factor) {
  RatMatrix g = lattice.gram();
  for (std::size_t i = 0; i < g.rows(); ++i)
    for (std::size_t j = 0; j < g.cols(); ++j) g(i, j) *= factor;
  return Lattice::from_gram(std::move(g));
}

RatVector coords_from_ambient(const Lattice& lattice, std::span<const Rat> v) {
  const auto& amb = lattice.ambient();
  if (!amb) throw Error(ErrorCode::InvalidParameter, "lattice has no ambient coordinates");
  if (v.size() != amb->generators.cols())
    throw Error(ErrorCode::InvalidParameter, "ambient vector has the wrong dimension");
  // y = (v A Gen^t) G^{-1}
  RatMatrix agt = amb->gram * transpose(amb->generators);
  RatVector pairing = v * agt;
  RatVector y = std::span<const Rat>(pairing) * *inverse(lattice.gram());
  RatVector back = std::span<const Rat>(y) * amb->generators;
  for (std::size_t i = 0; i < back.size(); ++i)
    if (back[i] != v[i]) throw Error(ErrorCode::InvalidParameter, "vector is not in the rational span of the lattice");
  return y;
}

bool in_dual(const Lattice& lattice, std::span<const Rat> y) {
  RatVector p = y * lattice.gram();
  return std::all_of(p.begin(), p.end(), [](const Rat& r) { return r.get_den() == 1; });
}

Int coset_order(std::span<const Rat> y) { return common_denominator(y); }

Sublattice span_of(const Lattice& parent, const IntMatrix& generators) {
  IntMatrix basis = hermite_basis(generators);
  if (basis.rows() == 0) throw Error(ErrorCode::InvalidParameter, "span of no vectors");
  RatMatrix b = to_rat(basis);
  RatMatrix gram = b * parent.gram() * transpose(b);
  Lattice lat = Lattice::from_gram(std::move(gram));
  // Present the sublattice in a reduced basis; keep basis rows consistent.
  LllResult red = lll(lat);
  IntMatrix reduced_basis = red.transform * basis;
  return {lat.change_basis(red.transform), std::move(reduced_basis)};
}

Overlattice overlattice(const Lattice& parent, const std::vector<RatVector>& extra) {
  const std::size_t n = parent.rank();
  RatMatrix gens(n + extra.size(), n);
  for (std::size_t i = 0; i < n; ++i) gens(i, i) = 1;
  for (std::size_t k = 0; k < extra.size(); ++k) {
    if (extra[k].size() != n) throw Error(ErrorCode::MalformedSpec, "glue vector has the wrong length");
    for (std::size_t j = 0; j < n; ++j) gens(n + k, j) = extra[k][j];
  }
  Int d = common_denominator(gens);
  IntMatrix scaled_gens(gens.rows(), n);
  for (std::size_t i = 0; i < gens.rows(); ++i)
    for (std::size_t j = 0; j < n; ++j) {
      Rat s = gens(i, j) * Rat(d);
      scaled_gens(i, j) = s.get_num();
    }
  IntMatrix h = hermite_basis(scaled_gens);
  RatMatrix basis(h.rows(), n);
  for (std::size_t i = 0; i < h.rows(); ++i)
    for (std::size_t j = 0; j < n; ++j) {
      basis(i, j) = make_rat(h(i, j), d);
    }
  RatMatrix gram = basis * parent.gram() * transpose(basis);
  Lattice lat = parent.ambient() ? Lattice::from_ambient(basis * parent.ambient()->generators, parent.ambient()->gram)
                                 : Lattice::from_gram(std::move(gram));
  LllResult red = lll(lat);
  RatMatrix reduced_basis = to_rat(red.transform) * basis;
  return {lat.change_basis(red.transform), std::move(reduced_basis)};
}

bool is_primitive_rows(const IntMatrix& rows) {
  SmithForm snf = smith_form(rows);
  return std::all_of(snf.diagonal.begin(), snf.diagonal.end(), [](const Int& d) { return d == 1; });
}

LllResult lll(const Lattice& lattice) {
  const RatMatrix& g = lattice.gram();
  Int d = common_denominator(g);
  IntMatrix ig(g.rows(), g.cols());
  for (std::size_t i = 0; i < g.rows(); ++i)
    for (std::size_t j = 0; j < g.cols(); ++j) {
      Rat s = g(i, j) * Rat(d);
      ig(i, j) = s.get_num();
    }
  return lll_reduce_gram(ig);
}

Lattice lll_reduced(const Lattice& lattice) { return lattice.change_basis(lll(lattice).transform); }

}  // namespace qlat
