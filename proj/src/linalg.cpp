#include "qlat/linalg.hpp"

#include <algorithm>
#include <limits>
#include <sstream>

#include "qlat/errors.hpp"

namespace qlat {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::NotSymmetric: return "NotSymmetric";
    case ErrorCode::NotPositiveDefinite: return "NotPositiveDefinite";
    case ErrorCode::NotIntegral: return "NotIntegral";
    case ErrorCode::BoundTooLargeForBudget: return "BoundTooLargeForBudget";
    case ErrorCode::SearchBudgetExceeded: return "SearchBudgetExceeded";
    case ErrorCode::InvalidParameter: return "InvalidParameter";
    case ErrorCode::IndexOutOfRange: return "IndexOutOfRange";
    case ErrorCode::NonIntegralResult: return "NonIntegralResult";
    case ErrorCode::MalformedSpec: return "MalformedSpec";
    case ErrorCode::PreconditionViolated: return "PreconditionViolated";
    case ErrorCode::RankUnsupported: return "RankUnsupported";
    case ErrorCode::SyntaxError: return "SyntaxError";
    case ErrorCode::ArityMismatch: return "ArityMismatch";
    case ErrorCode::CounterexampleFound: return "CounterexampleFound";
    case ErrorCode::InvalidFormat: return "InvalidFormat";
  }
  return "Unknown";
}

RatMatrix to_rat(const IntMatrix& m) {
  RatMatrix r(m.rows(), m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) r(i, j) = Rat(m(i, j));
  return r;
}

RatVector to_rat(const IntVector& v) {
  RatVector r;
  r.reserve(v.size());
  for (const auto& x : v) r.emplace_back(x);
  return r;
}

std::optional<IntMatrix> to_int(const RatMatrix& m) {
  IntMatrix r(m.rows(), m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) {
      if (m(i, j).get_den() != 1) return std::nullopt;
      r(i, j) = m(i, j).get_num();
    }
  return r;
}

Int lcm(const Int& a, const Int& b) {
  Int out;
  mpz_lcm(out.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return out;
}

Int common_denominator(const RatMatrix& m) {
  Int d = 1;
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) d = lcm(d, m(i, j).get_den());
  return d;
}

Int common_denominator(std::span<const Rat> v) {
  Int d = 1;
  for (const auto& x : v) d = lcm(d, x.get_den());
  return d;
}

Rat bilinear(std::span<const Rat> x, const RatMatrix& m, std::span<const Rat> y) {
  Rat total = 0;
  for (std::size_t i = 0; i < m.rows(); ++i) {
    if (sgn(x[i]) == 0) continue;
    Rat acc = 0;
    for (std::size_t j = 0; j < m.cols(); ++j) {
      if (sgn(y[j]) != 0) acc += m(i, j) * y[j];
    }
    total += x[i] * acc;
  }
  return total;
}

bool is_symmetric(const RatMatrix& m) {
  if (!m.square()) return false;
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = i + 1; j < m.cols(); ++j)
      if (m(i, j) != m(j, i)) return false;
  return true;
}

Rat determinant(const RatMatrix& m) {
  if (!m.square()) throw Error(ErrorCode::InvalidParameter, "determinant of a non-square matrix");
  RatMatrix a = m;
  const std::size_t n = a.rows();
  Rat det = 1;
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = c;
    while (p < n && sgn(a(p, c)) == 0) ++p;
    if (p == n) return Rat(0);
    if (p != c) {
      a.swap_rows(p, c);
      det = -det;
    }
    det *= a(c, c);
    for (std::size_t i = c + 1; i < n; ++i) {
      if (sgn(a(i, c)) == 0) continue;
      Rat f = a(i, c) / a(c, c);
      for (std::size_t j = c; j < n; ++j) a(i, j) -= f * a(c, j);
    }
  }
  return det;
}

std::optional<RatMatrix> inverse(const RatMatrix& m) {
  if (!m.square()) return std::nullopt;
  const std::size_t n = m.rows();
  RatMatrix a = m;
  RatMatrix inv = RatMatrix::identity(n);
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = c;
    while (p < n && sgn(a(p, c)) == 0) ++p;
    if (p == n) return std::nullopt;
    a.swap_rows(p, c);
    inv.swap_rows(p, c);
    Rat pivot = a(c, c);
    for (std::size_t j = 0; j < n; ++j) {
      a(c, j) /= pivot;
      inv(c, j) /= pivot;
    }
    for (std::size_t i = 0; i < n; ++i) {
      if (i == c || sgn(a(i, c)) == 0) continue;
      Rat f = a(i, c);
      for (std::size_t j = 0; j < n; ++j) {
        a(i, j) -= f * a(c, j);
        inv(i, j) -= f * inv(c, j);
      }
    }
  }
  return inv;
}

bool is_positive_definite(const RatMatrix& m) {
  if (!m.square()) return false;
  // Gaussian elimination without pivoting: the k-th pivot is the ratio of
  // consecutive leading principal minors.
  RatMatrix a = m;
  const std::size_t n = a.rows();
  for (std::size_t c = 0; c < n; ++c) {
    if (sgn(a(c, c)) <= 0) return false;
    for (std::size_t i = c + 1; i < n; ++i) {
      if (sgn(a(i, c)) == 0) continue;
      Rat f = a(i, c) / a(c, c);
      for (std::size_t j = c; j < n; ++j) a(i, j) -= f * a(c, j);
    }
  }
  return true;
}

std::size_t rank_of(const RatMatrix& m) {
  RatMatrix a = m;
  std::size_t r = 0;
  for (std::size_t c = 0; c < a.cols() && r < a.rows(); ++c) {
    std::size_t p = r;
    while (p < a.rows() && sgn(a(p, c)) == 0) ++p;
    if (p == a.rows()) continue;
    a.swap_rows(p, r);
    for (std::size_t i = r + 1; i < a.rows(); ++i) {
      if (sgn(a(i, c)) == 0) continue;
      Rat f = a(i, c) / a(r, c);
      for (std::size_t j = c; j < a.cols(); ++j) a(i, j) -= f * a(r, j);
    }
    ++r;
  }
  return r;
}

namespace {

void row_axpy(IntMatrix& a, std::size_t dst, const Int& q, std::size_t src) {
  if (sgn(q) == 0) return;
  for (std::size_t j = 0; j < a.cols(); ++j) a(dst, j) -= q * a(src, j);
}

void col_axpy(IntMatrix& a, std::size_t dst, const Int& q, std::size_t src) {
  if (sgn(q) == 0) return;
  for (std::size_t i = 0; i < a.rows(); ++i) a(i, dst) -= q * a(i, src);
}

Int floor_div(const Int& a, const Int& b) {
  Int q;
  mpz_fdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return q;
}

Int round_div(const Rat& r) {
  // nearest integer, ties toward +infinity
  Rat shifted = r + Rat(1, 2);
  return floor_div(shifted.get_num(), shifted.get_den());
}

}  // namespace

IntMatrix hermite_basis(const IntMatrix& generators) {
  IntMatrix a = generators;
  const std::size_t m = a.rows();
  const std::size_t n = a.cols();
  std::size_t r = 0;
  for (std::size_t c = 0; c < n && r < m; ++c) {
    bool found = false;
    while (true) {
      std::size_t best = m;
      for (std::size_t i = r; i < m; ++i) {
        if (sgn(a(i, c)) == 0) continue;
        if (best == m || cmp(abs(a(i, c)), abs(a(best, c))) < 0) best = i;
      }
      if (best == m) break;
      found = true;
      a.swap_rows(best, r);
      bool clean = true;
      for (std::size_t i = r + 1; i < m; ++i) {
        if (sgn(a(i, c)) == 0) continue;
        Int q;
        mpz_tdiv_q(q.get_mpz_t(), a(i, c).get_mpz_t(), a(r, c).get_mpz_t());
        row_axpy(a, i, q, r);
        if (sgn(a(i, c)) != 0) clean = false;
      }
      if (clean) break;
    }
    if (!found) continue;
    if (sgn(a(r, c)) < 0)
      for (std::size_t j = 0; j < n; ++j) a(r, j) = -a(r, j);
    for (std::size_t i = 0; i < r; ++i) row_axpy(a, i, floor_div(a(i, c), a(r, c)), r);
    ++r;
  }
  IntMatrix out(r, n);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < n; ++j) out(i, j) = a(i, j);
  return out;
}

SmithForm smith_form(const IntMatrix& input) {
  IntMatrix a = input;
  const std::size_t m = a.rows();
  const std::size_t n = a.cols();
  IntMatrix left = IntMatrix::identity(m);
  IntMatrix right = IntMatrix::identity(n);
  const std::size_t k = std::min(m, n);

  for (std::size_t t = 0; t < k; ++t) {
    while (true) {
      // Smallest nonzero entry of the trailing block becomes the pivot.
      std::size_t pi = m, pj = n;
      for (std::size_t i = t; i < m; ++i)
        for (std::size_t j = t; j < n; ++j) {
          if (sgn(a(i, j)) == 0) continue;
          if (pi == m || cmp(abs(a(i, j)), abs(a(pi, pj))) < 0) {
            pi = i;
            pj = j;
          }
        }
      if (pi == m) break;
      a.swap_rows(t, pi);
      left.swap_rows(t, pi);
      a.swap_cols(t, pj);
      right.swap_cols(t, pj);

      bool clean = true;
      for (std::size_t i = t + 1; i < m; ++i) {
        if (sgn(a(i, t)) == 0) continue;
        Int q;
        mpz_tdiv_q(q.get_mpz_t(), a(i, t).get_mpz_t(), a(t, t).get_mpz_t());
        row_axpy(a, i, q, t);
        row_axpy(left, i, q, t);
        if (sgn(a(i, t)) != 0) clean = false;
      }
      for (std::size_t j = t + 1; j < n; ++j) {
        if (sgn(a(t, j)) == 0) continue;
        Int q;
        mpz_tdiv_q(q.get_mpz_t(), a(t, j).get_mpz_t(), a(t, t).get_mpz_t());
        col_axpy(a, j, q, t);
        col_axpy(right, j, q, t);
        if (sgn(a(t, j)) != 0) clean = false;
      }
      if (!clean) continue;

      // Enforce divisibility of the trailing block by the pivot.
      bool divisible = true;
      for (std::size_t i = t + 1; i < m && divisible; ++i)
        for (std::size_t j = t + 1; j < n; ++j) {
          if (!mpz_divisible_p(a(i, j).get_mpz_t(), a(t, t).get_mpz_t())) {
            for (std::size_t c = 0; c < n; ++c) a(t, c) += a(i, c);
            for (std::size_t c = 0; c < m; ++c) left(t, c) += left(i, c);
            divisible = false;
            break;
          }
        }
      if (divisible) break;
    }
    if (sgn(a(t, t)) < 0) {
      for (std::size_t c = 0; c < n; ++c) a(t, c) = -a(t, c);
      for (std::size_t c = 0; c < m; ++c) left(t, c) = -left(t, c);
    }
  }

  SmithForm out;
  out.diagonal.resize(k);
  for (std::size_t t = 0; t < k; ++t) out.diagonal[t] = a(t, t);
  out.left = std::move(left);
  out.right = std::move(right);
  return out;
}

IntMatrix unimodular_inverse(const IntMatrix& m) {
  auto inv = inverse(to_rat(m));
  if (!inv) throw Error(ErrorCode::InvalidParameter, "matrix is singular");
  auto out = to_int(*inv);
  if (!out) throw Error(ErrorCode::InvalidParameter, "matrix is not unimodular");
  return *out;
}

LllResult lll_reduce_gram(const IntMatrix& input, const Rat& delta) {
  const std::size_t n = input.rows();
  IntMatrix g = input;
  IntMatrix h = IntMatrix::identity(n);
  if (n <= 1) return {g, h};

  RatMatrix mu(n, n);
  std::vector<Rat> b(n);

  auto gso_row = [&](std::size_t k) {
    for (std::size_t j = 0; j < k; ++j) {
      Rat s = Rat(g(k, j));
      for (std::size_t i = 0; i < j; ++i) s -= mu(j, i) * mu(k, i) * b[i];
      mu(k, j) = s / b[j];
    }
    Rat s = Rat(g(k, k));
    for (std::size_t j = 0; j < k; ++j) s -= mu(k, j) * mu(k, j) * b[j];
    b[k] = s;
    if (sgn(b[k]) <= 0) throw Error(ErrorCode::NotPositiveDefinite, "LLL input is not positive definite");
  };

  auto reduce = [&](std::size_t k, std::size_t l) {
    if (cmp(abs(mu(k, l)), Rat(1, 2)) <= 0) return;
    Int q = round_div(mu(k, l));
    // b_k <- b_k - q b_l in Gram terms.
    Int gkl = g(k, l);
    g(k, k) += q * q * g(l, l) - 2 * q * gkl;
    for (std::size_t i = 0; i < n; ++i) {
      if (i == k) continue;
      g(k, i) -= q * g(l, i);
      g(i, k) = g(k, i);
    }
    row_axpy(h, k, q, l);
    mu(k, l) -= Rat(q);
    for (std::size_t i = 0; i < l; ++i) mu(k, i) -= Rat(q) * mu(l, i);
  };

  auto swap = [&](std::size_t k, std::size_t kmax) {
    g.swap_rows(k, k - 1);
    g.swap_cols(k, k - 1);
    h.swap_rows(k, k - 1);
    for (std::size_t j = 0; j + 1 < k; ++j) std::swap(mu(k, j), mu(k - 1, j));
    Rat m = mu(k, k - 1);
    Rat bb = b[k] + m * m * b[k - 1];
    mu(k, k - 1) = m * b[k - 1] / bb;
    b[k] = b[k - 1] * b[k] / bb;
    b[k - 1] = bb;
    for (std::size_t i = k + 1; i <= kmax; ++i) {
      Rat t = mu(i, k);
      mu(i, k) = mu(i, k - 1) - m * t;
      mu(i, k - 1) = t + mu(k, k - 1) * mu(i, k);
    }
  };

  b[0] = Rat(g(0, 0));
  if (sgn(b[0]) <= 0) throw Error(ErrorCode::NotPositiveDefinite, "LLL input is not positive definite");
  std::size_t k = 1;
  std::size_t kmax = 0;
  while (k < n) {
    if (k > kmax) {
      kmax = k;
      gso_row(k);
    }
    reduce(k, k - 1);
    if (cmp(b[k], (delta - mu(k, k - 1) * mu(k, k - 1)) * b[k - 1]) < 0) {
      swap(k, kmax);
      if (k > 1) --k;
    } else {
      for (std::size_t l = k - 1; l-- > 0;) reduce(k, l);
      ++k;
    }
  }
  return {g, h};
}

std::string to_string(const Rat& r) { return r.get_str(); }

std::string to_string(const RatMatrix& m) {
  std::ostringstream os;
  os << '[';
  for (std::size_t i = 0; i < m.rows(); ++i) {
    if (i) os << ", ";
    os << '[';
    for (std::size_t j = 0; j < m.cols(); ++j) {
      if (j) os << ", ";
      os << m(i, j).get_str();
    }
    os << ']';
  }
  os << ']';
  return os.str();
}

std::optional<Rat> parse_rat(std::string_view text) {
  auto valid_int = [](std::string_view s, bool allow_sign) {
    if (s.empty()) return false;
    std::size_t i = 0;
    if (allow_sign && (s[0] == '-' || s[0] == '+')) i = 1;
    if (i == s.size()) return false;
    for (; i < s.size(); ++i)
      if (s[i] < '0' || s[i] > '9') return false;
    return true;
  };
  auto slash = text.find('/');
  std::string_view num = text.substr(0, slash);
  if (!valid_int(num, true)) return std::nullopt;
  std::string num_str(num);
  if (num_str[0] == '+') num_str.erase(0, 1);
  Int p(num_str, 10);
  Int q = 1;
  if (slash != std::string_view::npos) {
    std::string_view den = text.substr(slash + 1);
    if (!valid_int(den, false)) return std::nullopt;
    q = Int(std::string(den), 10);
    if (sgn(q) == 0) return std::nullopt;
  }
  Rat r(p, q);
  r.canonicalize();
  return r;
}

std::int64_t to_int64(const Int& v) {
  if (!v.fits_slong_p()) throw Error(ErrorCode::InvalidParameter, "integer does not fit in 64 bits: " + v.get_str());
  return v.get_si();
}

}  // namespace qlat
