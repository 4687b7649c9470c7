#include "qlat/morphisms.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <numeric>

#include "qlat/short_vectors.hpp"

namespace qlat {

namespace {

Int gram_denominator(const Lattice& l) { return common_denominator(l.gram()); }

IntMatrix scaled_gram(const Lattice& l, const Int& d) {
  const RatMatrix& g = l.gram();
  IntMatrix out(g.rows(), g.cols());
  for (std::size_t i = 0; i < g.rows(); ++i)
    for (std::size_t j = 0; j < g.cols(); ++j) {
      Rat v = g(i, j) * Rat(d);
      if (v.get_den() != 1) throw Error(ErrorCode::InvalidParameter, "scaling did not clear denominators");
      out(i, j) = v.get_num();
    }
  return out;
}

std::vector<std::int64_t> flat(const IntMatrix& m) {
  std::vector<std::int64_t> out(m.rows() * m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) out[i * m.cols() + j] = to_int64(m(i, j));
  return out;
}

bool perfect_square(const Rat& r) {
  return sgn(r) > 0 && mpz_perfect_square_p(r.get_num().get_mpz_t()) && mpz_perfect_square_p(r.get_den().get_mpz_t());
}

EnumerationOptions enum_options(const SearchOptions& o) { return EnumerationOptions{o.node_budget}; }

void budget_exceeded() {
  throw Error(ErrorCode::SearchBudgetExceeded, "embedding search exceeded its node budget");
}

// Backtracking search for T with T * target * T^t = source, both positive
// definite integer Gram matrices. The source basis is LLL-reduced first;
// forward checking keeps, for every unassigned source vector, the target
// vectors still consistent with all assignments, and branches on the
// smallest such list.
class EmbeddingSearch {
 public:
  using Accept = std::function<bool(const IntMatrix&)>;

  EmbeddingSearch(const IntMatrix& source, const IntMatrix& target, std::uint64_t budget)
      : ns_(source.rows()), nt_(target.rows()), budget_(budget) {
    LllResult red = lll_reduce_gram(source);
    back_ = unimodular_inverse(red.transform);
    sg_ = flat(red.gram);

    std::vector<std::int64_t> needed;
    for (std::size_t i = 0; i < ns_; ++i) needed.push_back(sg_[i * ns_ + i]);
    const std::int64_t max_norm = *std::max_element(needed.begin(), needed.end());
    const auto tg = flat(target);
    enumerate_integral_form(target, Int(static_cast<long>(max_norm)), EnumerationOptions{budget},
                            [&](std::span<const std::int64_t> c, std::int64_t norm) {
                              if (std::find(needed.begin(), needed.end(), norm) == needed.end()) return true;
                              for (int sign : {1, -1}) {
                                Candidate cand;
                                cand.norm = norm;
                                cand.positive = sign == 1;
                                for (auto v : c) cand.coords.push_back(sign * v);
                                cand.w.assign(nt_, 0);
                                for (std::size_t a = 0; a < nt_; ++a)
                                  for (std::size_t b = 0; b < nt_; ++b) cand.w[b] += cand.coords[a] * tg[a * nt_ + b];
                                cands_.push_back(std::move(cand));
                              }
                              return true;
                            });
    std::sort(cands_.begin(), cands_.end(), [](const Candidate& a, const Candidate& b) {
      return a.norm != b.norm ? a.norm < b.norm : a.coords > b.coords;
    });
  }

  std::vector<IntMatrix> run(std::size_t limit, const Accept& accept) {
    limit_ = limit;
    accept_ = accept;
    results_.clear();
    std::vector<std::vector<int>> domains(ns_);
    for (std::size_t i = 0; i < ns_; ++i)
      for (std::size_t c = 0; c < cands_.size(); ++c)
        if (cands_[c].norm == sg_[i * ns_ + i]) domains[i].push_back(static_cast<int>(c));
    assigned_.assign(ns_, -1);
    dfs(domains, 0);
    return results_;
  }

 private:
  struct Candidate {
    std::vector<std::int64_t> coords;
    std::vector<std::int64_t> w;  // coords * target
    std::int64_t norm = 0;
    bool positive = true;
  };

  std::int64_t inner(int a, int b) const {
    std::int64_t s = 0;
    const auto& wa = cands_[a].w;
    const auto& cb = cands_[b].coords;
    for (std::size_t k = 0; k < nt_; ++k) s += wa[k] * cb[k];
    return s;
  }

  bool done() const { return results_.size() >= limit_; }

  void dfs(const std::vector<std::vector<int>>& domains, std::size_t depth) {
    if (depth == ns_) {
      leaf();
      return;
    }
    std::size_t pick = ns_;
    for (std::size_t i = 0; i < ns_; ++i)
      if (assigned_[i] < 0 && (pick == ns_ || domains[i].size() < domains[pick].size())) pick = i;
    for (int c : domains[pick]) {
      if (done()) return;
      if (depth == 0 && !cands_[c].positive) continue;
      if (++nodes_ > budget_) budget_exceeded();
      assigned_[pick] = c;
      std::vector<std::vector<int>> next(ns_);
      bool dead = false;
      for (std::size_t j = 0; j < ns_ && !dead; ++j) {
        if (assigned_[j] >= 0) continue;
        const std::int64_t want = sg_[pick * ns_ + j];
        next[j].reserve(domains[j].size());
        for (int d : domains[j])
          if (inner(c, d) == want) next[j].push_back(d);
        dead = next[j].empty();
      }
      if (!dead) dfs(next, depth + 1);
      assigned_[pick] = -1;
    }
  }

  void leaf() {
    IntMatrix reduced(ns_, nt_);
    for (std::size_t i = 0; i < ns_; ++i)
      for (std::size_t k = 0; k < nt_; ++k) reduced(i, k) = static_cast<long>(cands_[assigned_[i]].coords[k]);
    IntMatrix t = back_ * reduced;
    if (accept_ && !accept_(t)) return;
    results_.push_back(std::move(t));
  }

  std::size_t ns_, nt_;
  std::uint64_t budget_;
  std::uint64_t nodes_ = 0;
  IntMatrix back_;
  std::vector<std::int64_t> sg_;
  std::vector<Candidate> cands_;
  std::vector<int> assigned_;
  std::size_t limit_ = 1;
  Accept accept_;
  std::vector<IntMatrix> results_;
};

std::vector<Embedding> search(const Lattice& source, const Lattice& target, std::size_t limit,
                              const SearchOptions& options, const EmbeddingSearch::Accept& accept) {
  if (source.rank() > target.rank() || limit == 0) return {};
  const Int d = lcm(gram_denominator(source), gram_denominator(target));
  EmbeddingSearch s(scaled_gram(source, d), scaled_gram(target, d), options.node_budget);
  std::vector<Embedding> out;
  for (auto& t : s.run(limit, accept)) {
    if (!verify_embedding(source, target, t))
      throw Error(ErrorCode::InvalidParameter, "internal error: embedding failed re-verification");
    out.push_back(Embedding{std::move(t)});
  }
  return out;
}

bool passes_filters(const Lattice& source, const Lattice& target) {
  if (source.rank() > target.rank()) return false;
  if (source.rank() == target.rank() && !perfect_square(discriminant(source) / discriminant(target))) return false;
  return true;
}

std::size_t probe_bound(std::size_t rank) {
  if (rank <= 8) return 6;
  if (rank <= 12) return 4;
  return 2;
}

}  // namespace

bool verify_embedding(const Lattice& source, const Lattice& target, const IntMatrix& transform) {
  if (transform.rows() != source.rank() || transform.cols() != target.rank()) return false;
  RatMatrix t = to_rat(transform);
  return t * target.gram() * transpose(t) == source.gram();
}

std::vector<Embedding> find_representations(const Lattice& source, const Lattice& target, std::size_t limit,
                                            const SearchOptions& options) {
  if (options.invariant_filters && !passes_filters(source, target)) return {};
  return search(source, target, limit, options, {});
}

std::optional<Embedding> representation(const Lattice& source, const Lattice& target, const SearchOptions& options) {
  auto r = find_representations(source, target, 1, options);
  if (r.empty()) return std::nullopt;
  return std::move(r.front());
}

bool represents(const Lattice& source, const Lattice& target, const SearchOptions& options) {
  return representation(source, target, options).has_value();
}

std::optional<Embedding> primitive_representation(const Lattice& source, const Lattice& target,
                                                  const SearchOptions& options) {
  if (options.invariant_filters && !passes_filters(source, target)) return std::nullopt;
  if (source.rank() == target.rank()) {
    // Equal rank: primitive means index one, i.e. equal discriminants.
    if (discriminant(source) != discriminant(target)) return std::nullopt;
    return representation(source, target, options);
  }
  auto r = search(source, target, 1, options, [](const IntMatrix& t) { return is_primitive_rows(t); });
  if (r.empty()) return std::nullopt;
  return std::move(r.front());
}

bool primitively_represents(const Lattice& source, const Lattice& target, const SearchOptions& options) {
  return primitive_representation(source, target, options).has_value();
}

std::optional<Embedding> isometry(const Lattice& a, const Lattice& b, const SearchOptions& options) {
  if (a.rank() != b.rank()) return std::nullopt;
  if (discriminant(a) != discriminant(b)) return std::nullopt;
  if (a.gram() == b.gram()) return Embedding{IntMatrix::identity(a.rank())};
  const Rat bound(static_cast<long>(probe_bound(a.rank())) * Rat(scale(a)));
  const EnumerationOptions eo = enum_options(options);
  if (norm_histogram(a, bound, eo) != norm_histogram(b, bound, eo)) return std::nullopt;
  auto r = search(a, b, 1, options, {});
  if (r.empty()) return std::nullopt;
  return std::move(r.front());
}

bool is_isometric(const Lattice& a, const Lattice& b, const SearchOptions& options) {
  return isometry(a, b, options).has_value();
}

std::vector<Component> orthogonal_decomposition(const Lattice& lattice, const SearchOptions& options) {
  const std::size_t n = lattice.rank();
  const Int d = gram_denominator(lattice);
  const IntMatrix g = scaled_gram(lattice, d);
  LllResult red = lll_reduce_gram(g);
  Int max_diag = red.gram(0, 0);
  for (std::size_t i = 1; i < n; ++i)
    if (red.gram(i, i) > max_diag) max_diag = red.gram(i, i);

  struct Vec {
    std::vector<std::int64_t> coords;  // reduced basis
    std::vector<std::int64_t> w;       // coords * reduced gram
    std::int64_t norm;
  };
  const auto rg = flat(red.gram);
  std::vector<Vec> vs;
  enumerate_integral_form(red.gram, max_diag, enum_options(options),
                          [&](std::span<const std::int64_t> c, std::int64_t norm) {
                            Vec v{{c.begin(), c.end()}, std::vector<std::int64_t>(n, 0), norm};
                            for (std::size_t a = 0; a < n; ++a)
                              for (std::size_t b = 0; b < n; ++b) v.w[b] += v.coords[a] * rg[a * n + b];
                            vs.push_back(std::move(v));
                            return true;
                          });
  auto inner = [&](const Vec& a, const Vec& b) {
    std::int64_t s = 0;
    for (std::size_t k = 0; k < n; ++k) s += a.w[k] * b.coords[k];
    return s;
  };

  // v splits as w + (v - w) with both parts shorter iff B(v, w) = Q(w) for some
  // shorter nonzero w (up to sign).
  std::vector<std::size_t> indecomposable;
  for (std::size_t i = 0; i < vs.size(); ++i) {
    bool split = false;
    for (std::size_t j = 0; j < vs.size() && !split; ++j) {
      if (vs[j].norm >= vs[i].norm) continue;
      const std::int64_t b = inner(vs[i], vs[j]);
      split = b == vs[j].norm || b == -vs[j].norm;
    }
    if (!split) indecomposable.push_back(i);
  }

  std::vector<std::size_t> parent(indecomposable.size());
  std::iota(parent.begin(), parent.end(), 0);
  std::function<std::size_t(std::size_t)> find = [&](std::size_t x) {
    return parent[x] == x ? x : parent[x] = find(parent[x]);
  };
  for (std::size_t a = 0; a < indecomposable.size(); ++a)
    for (std::size_t b = a + 1; b < indecomposable.size(); ++b)
      if (inner(vs[indecomposable[a]], vs[indecomposable[b]]) != 0) parent[find(a)] = find(b);

  std::vector<std::vector<std::size_t>> classes;
  std::vector<std::size_t> class_of(indecomposable.size(), SIZE_MAX);
  for (std::size_t a = 0; a < indecomposable.size(); ++a) {
    const std::size_t r = find(a);
    if (class_of[r] == SIZE_MAX) {
      class_of[r] = classes.size();
      classes.emplace_back();
    }
    classes[class_of[r]].push_back(indecomposable[a]);
  }

  std::vector<Component> out;
  for (const auto& cls : classes) {
    IntMatrix gens(cls.size(), n);
    for (std::size_t r = 0; r < cls.size(); ++r)
      for (std::size_t k = 0; k < n; ++k) gens(r, k) = static_cast<long>(vs[cls[r]].coords[k]);
    IntMatrix basis_reduced = hermite_basis(gens) * red.transform;
    Sublattice sub = span_of(lattice, basis_reduced);
    out.push_back(Component{sub.lattice, sub.basis});
  }
  std::sort(out.begin(), out.end(), [](const Component& a, const Component& b) {
    if (a.lattice.rank() != b.lattice.rank()) return a.lattice.rank() < b.lattice.rank();
    return discriminant(a.lattice) < discriminant(b.lattice);
  });
  return out;
}

namespace {

// Rows of an n x N integer matrix R with R R^t = G. Canonical form modulo the
// signed permutations of the columns: every column's first nonzero entry is
// positive and columns are lexicographically nonincreasing (top row first).
class CubicSearch {
 public:
  CubicSearch(std::vector<std::int64_t> gram, std::size_t n, std::size_t dim, std::uint64_t budget)
      : g_(std::move(gram)), n_(n), dim_(dim), budget_(budget), rows_(n, std::vector<std::int64_t>(dim, 0)) {}

  bool run() {
    tie_.assign(dim_, true);
    zero_.assign(dim_, true);
    if (dim_ > 0) tie_[0] = false;
    return solve_row(0);
  }

  const std::vector<std::vector<std::int64_t>>& rows() const { return rows_; }

 private:
  bool solve_row(std::size_t i) {
    if (i == n_) return true;
    // suffix norms of earlier rows
    suffix_.assign(i, std::vector<std::int64_t>(dim_ + 1, 0));
    for (std::size_t k = 0; k < i; ++k)
      for (std::size_t c = dim_; c-- > 0;) suffix_[k][c] = suffix_[k][c + 1] + rows_[k][c] * rows_[k][c];
    std::vector<std::int64_t> partial(i, 0);
    return fill(i, 0, g_[i * n_ + i], partial);
  }

  bool fill(std::size_t i, std::size_t c, std::int64_t remaining, std::vector<std::int64_t>& partial) {
    for (std::size_t k = 0; k < i; ++k) {
      const std::int64_t diff = g_[i * n_ + k] - partial[k];
      if (static_cast<__int128>(diff) * diff > static_cast<__int128>(remaining) * suffix_[k][c]) return false;
    }
    if (c == dim_) {
      if (remaining != 0) return false;
      return next_row(i);
    }
    if (remaining == 0) {
      // rest zero
      if (tie_[c] && rows_[i][c - 1] < 0) return false;
      for (std::size_t cc = c; cc < dim_; ++cc) rows_[i][cc] = 0;
      return next_row(i);
    }
    std::int64_t hi = static_cast<std::int64_t>(std::sqrt(static_cast<long double>(remaining)));
    while (hi * hi > remaining) --hi;
    while ((hi + 1) * (hi + 1) <= remaining) ++hi;
    std::int64_t lo = zero_[c] ? 0 : -hi;
    if (tie_[c]) hi = std::min(hi, rows_[i][c - 1]);
    for (std::int64_t x = hi; x >= lo; --x) {
      if (++nodes_ > budget_) budget_exceeded();
      rows_[i][c] = x;
      for (std::size_t k = 0; k < i; ++k) partial[k] += x * rows_[k][c];
      const bool found = fill(i, c + 1, remaining - x * x, partial);
      for (std::size_t k = 0; k < i; ++k) partial[k] -= x * rows_[k][c];
      if (found) return true;
    }
    rows_[i][c] = 0;
    return false;
  }

  bool next_row(std::size_t i) {
    auto saved_tie = tie_;
    auto saved_zero = zero_;
    for (std::size_t c = 0; c < dim_; ++c) {
      if (c > 0) tie_[c] = tie_[c] && rows_[i][c] == rows_[i][c - 1];
      zero_[c] = zero_[c] && rows_[i][c] == 0;
    }
    auto saved_suffix = suffix_;
    const bool ok = solve_row(i + 1);
    suffix_ = std::move(saved_suffix);
    tie_ = std::move(saved_tie);
    zero_ = std::move(saved_zero);
    return ok;
  }

  std::vector<std::int64_t> g_;
  std::size_t n_, dim_;
  std::uint64_t budget_;
  std::uint64_t nodes_ = 0;
  std::vector<std::vector<std::int64_t>> rows_;
  std::vector<std::vector<std::int64_t>> suffix_;
  std::vector<bool> tie_, zero_;
};

}  // namespace

std::size_t cubic_dimension_bound(const Lattice& lattice) {
  LllResult red = lll_reduce_gram(integral_gram(lattice));
  Int tr = 0;
  for (std::size_t i = 0; i < red.gram.rows(); ++i) tr += red.gram(i, i);
  return static_cast<std::size_t>(to_int64(tr));
}

std::optional<IntMatrix> find_cubic_embedding(const Lattice& lattice, std::size_t dimension,
                                              const SearchOptions& options) {
  const IntMatrix g = integral_gram(lattice);
  const std::size_t n = g.rows();
  LllResult red = lll_reduce_gram(g);
  // Largest norms first: they have the fewest shapes.
  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t a, std::size_t b) { return red.gram(a, a) > red.gram(b, b); });
  IntMatrix perm(n, n);
  for (std::size_t i = 0; i < n; ++i) perm(i, order[i]) = 1;
  IntMatrix basis = perm * red.transform;
  IntMatrix pg = basis * g * transpose(basis);

  CubicSearch s(flat(pg), n, dimension, options.node_budget);
  if (!s.run()) return std::nullopt;
  IntMatrix rows(n, dimension);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t c = 0; c < dimension; ++c) rows(i, c) = static_cast<long>(s.rows()[i][c]);
  IntMatrix out = unimodular_inverse(basis) * rows;
  if (out * transpose(out) != g) throw Error(ErrorCode::InvalidParameter, "internal error: cubic embedding failed re-verification");
  return out;
}

CubicResult cubic_embedding_exhaustive(const Lattice& lattice, const SearchOptions& options) {
  CubicResult r;
  r.method = CubicMethod::ExhaustiveSearch;
  r.dimension = cubic_dimension_bound(lattice);
  r.embedding = find_cubic_embedding(lattice, r.dimension, options);
  r.embeds = r.embedding.has_value();
  return r;
}

CubicResult cubic_embedding(const Lattice& lattice, const SearchOptions& options) {
  Rat dm = dual_minimum(lattice, enum_options(options));
  if (dm > 1) {
    CubicResult r;
    r.method = CubicMethod::DualMinimum;
    r.dual_minimum = dm;
    r.dimension = cubic_dimension_bound(lattice);
    return r;
  }
  CubicResult r = cubic_embedding_exhaustive(lattice, options);
  r.dual_minimum = dm;
  return r;
}

bool embeds_in_cubic(const Lattice& lattice, const SearchOptions& options) {
  return cubic_embedding(lattice, options).embeds;
}

std::vector<NamedLattice> cited_additively_indecomposable() {
  return {{"E7", root_lattice({RootFamily::E7, 7})}, {"M14", lattice_M14()}};
}

std::string to_string(Verdict verdict) {
  switch (verdict) {
    case Verdict::AdditivelyIndecomposable: return "additively-indecomposable";
    case Verdict::RepresentedBySumOfSquares: return "represented-by-sum-of-squares";
    case Verdict::Unknown: return "unknown";
  }
  return "unknown";
}

bool is_indecomposable_root_lattice(const Lattice& lattice, const SearchOptions& options) {
  if (!is_integral(lattice)) return false;
  auto rs = root_sublattice(lattice, enum_options(options));
  if (!rs || rs->lattice.rank() != lattice.rank() || discriminant(rs->lattice) != discriminant(lattice)) return false;
  return orthogonal_decomposition(lattice, options).size() == 1;
}

namespace {

std::optional<std::string> justify_component(const Lattice& l, const SearchOptions& options) {
  if (is_indecomposable_root_lattice(l, options)) return "indecomposable root lattice";
  for (const auto& cited : cited_additively_indecomposable())
    if (cited.lattice.rank() == l.rank() && is_isometric(l, cited.lattice, options)) return "cited: " + cited.name;
  return std::nullopt;
}

}  // namespace

Certificate additive_certificate(const Lattice& lattice, const std::optional<GlueSpec>& spec,
                                 const SearchOptions& options) {
  integral_gram(lattice);
  Certificate cert;
  if (spec) {
    cert.spec = to_string(*spec);
    Lattice rebuilt = glue(*spec);
    if (!is_isometric(rebuilt, lattice, options))
      throw Error(ErrorCode::MalformedSpec, "glue data does not rebuild the lattice");
  }
  const Rat dm = dual_minimum(lattice, enum_options(options));
  cert.dual_minimum = dm;
  if (dm <= 1) {
    CubicResult cubic = cubic_embedding_exhaustive(lattice, options);
    if (cubic.embeds) {
      cert.verdict = Verdict::RepresentedBySumOfSquares;
      cert.cubic_embedding = cubic.embedding;
      cert.summary = "explicit embedding into I_" + std::to_string(cubic.dimension);
    } else {
      cert.summary = "dual minimum " + to_string(dm) + " <= 1, so not additively indecomposable";
    }
    return cert;
  }
  if (!spec) {
    cert.summary = "dual minimum " + to_string(dm) + " > 1 but no glue decomposition was supplied";
    return cert;
  }
  if (spec->components.size() != 2) {
    cert.summary = "certificate rule needs exactly two glue components";
    return cert;
  }
  bool nonintegral = false;
  bool justified = true;
  for (const auto& c : spec->components) {
    Rat q = c.lattice.norm(c.glue);
    if (q.get_den() != 1) nonintegral = true;
    auto why = justify_component(c.lattice, options);
    cert.components.push_back({c.description, why.value_or("not certified"), q});
    if (!why) justified = false;
  }
  if (!nonintegral) {
    cert.summary = "both glue norms are integers";
    return cert;
  }
  if (!justified) {
    cert.summary = "a component is neither a root lattice nor known to be additively indecomposable";
    return cert;
  }
  cert.verdict = Verdict::AdditivelyIndecomposable;
  cert.summary = "non-integral glue norm, certified components, dual minimum " + to_string(dm) +
                 " > 1 excludes every sum of squares";
  return cert;
}

bool verify_certificate(const Lattice& lattice, const Certificate& certificate, const SearchOptions& options) {
  const EnumerationOptions eo = enum_options(options);
  if (certificate.dual_minimum && dual_minimum(lattice, eo) != *certificate.dual_minimum) return false;
  switch (certificate.verdict) {
    case Verdict::RepresentedBySumOfSquares: {
      if (!certificate.cubic_embedding) return false;
      const IntMatrix& r = *certificate.cubic_embedding;
      return r.rows() == lattice.rank() && to_rat(r * transpose(r)) == lattice.gram();
    }
    case Verdict::AdditivelyIndecomposable: {
      if (!certificate.dual_minimum || *certificate.dual_minimum <= 1) return false;
      bool nonintegral = false;
      for (const auto& c : certificate.components) {
        if (c.reason == "not certified") return false;
        if (c.glue_norm.get_den() != 1) nonintegral = true;
      }
      return nonintegral && certificate.components.size() == 2;
    }
    case Verdict::Unknown:
      return true;
  }
  return false;
}

bool anrep_admissible(int n, long k, int i, long l, int j, const SearchOptions& options) {
  if (n < 1 || k < 1 || l < 1) return false;
  if (i < 0 || j < 0 || i > (n + 1) / 2 || j > (n + 1) / 2) return false;
  const long m = n + 1;
  auto mod = [m](long v) { return ((v % m) + m) % m; };
  if (mod(k - static_cast<long>(i) * i) != 0 || mod(l - static_cast<long>(j) * j) != 0) return false;
  const std::size_t an_roots = static_cast<std::size_t>(n) * (n + 1) / 2;
  for (auto [kk, ii] : {std::pair{k, i}, std::pair{l, j}}) {
    Lattice lat = glue(spec_An_family(n, kk, ii));
    if (roots(lat, enum_options(options)).size() != an_roots) return false;
  }
  return true;
}

bool check_anrep(int n, long k, int i, long l, int j, const SearchOptions& options) {
  if (!anrep_admissible(n, k, i, l, j, options))
    throw Error(ErrorCode::PreconditionViolated, "parameters do not give two integral lattices with root sublattice A_n");
  const long m = n + 1;
  for (long t = 1; l * t * t <= k; ++t) {
    if (l * t * t != k) continue;
    if ((j * t - i) % m == 0 || (j * t + i) % m == 0) return true;
  }
  return false;
}

bool anrep_bruteforce(int n, long k, int i, long l, int j, const SearchOptions& options) {
  if (!anrep_admissible(n, k, i, l, j, options))
    throw Error(ErrorCode::PreconditionViolated, "parameters do not give two integral lattices with root sublattice A_n");
  SearchOptions raw = options;
  raw.invariant_filters = false;
  return represents(glue(spec_An_family(n, k, i)), glue(spec_An_family(n, l, j)), raw);
}

}  // namespace qlat
