#pragma once

// Exact integer and rational linear algebra: dense matrices over GMP numbers,
// determinants, inverses, Hermite and Smith normal forms, and LLL reduction of
// Gram matrices.

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include <gmpxx.h>

namespace qlat {

using Int = mpz_class;
using Rat = mpq_class;
using IntVector = std::vector<Int>;

/// num/den in lowest terms (GMP arithmetic requires canonical operands).
inline Rat make_rat(const Int& num, const Int& den) {
  Rat r(num, den);
  r.canonicalize();
  return r;
}
using RatVector = std::vector<Rat>;

template <class T>
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols, T(0)) {}
  Matrix(std::initializer_list<std::initializer_list<T>> init) {
    rows_ = init.size();
    cols_ = rows_ ? init.begin()->size() : 0;
    data_.reserve(rows_ * cols_);
    for (const auto& row : init) {
      for (const auto& v : row) data_.push_back(v);
    }
  }

  static Matrix identity(std::size_t n) {
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = T(1);
    return m;
  }

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  bool square() const noexcept { return rows_ == cols_; }

  T& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const T& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  std::span<T> row(std::size_t i) { return {data_.data() + i * cols_, cols_}; }
  std::span<const T> row(std::size_t i) const { return {data_.data() + i * cols_, cols_}; }
  std::vector<T> row_vector(std::size_t i) const { return {row(i).begin(), row(i).end()}; }

  void swap_rows(std::size_t a, std::size_t b) {
    if (a == b) return;
    for (std::size_t j = 0; j < cols_; ++j) std::swap((*this)(a, j), (*this)(b, j));
  }
  void swap_cols(std::size_t a, std::size_t b) {
    if (a == b) return;
    for (std::size_t i = 0; i < rows_; ++i) std::swap((*this)(i, a), (*this)(i, b));
  }

  bool operator==(const Matrix& other) const {
    return rows_ == other.rows_ && cols_ == other.cols_ && data_ == other.data_;
  }

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<T> data_;
};

using IntMatrix = Matrix<Int>;
using RatMatrix = Matrix<Rat>;

// Conversions.
RatMatrix to_rat(const IntMatrix& m);
RatVector to_rat(const IntVector& v);
/// Returns the integer matrix if every entry is integral.
std::optional<IntMatrix> to_int(const RatMatrix& m);
/// Least common multiple of all denominators (1 for an integer matrix).
Int common_denominator(const RatMatrix& m);
Int common_denominator(std::span<const Rat> v);
Int lcm(const Int& a, const Int& b);

template <class T>
Matrix<T> transpose(const Matrix<T>& m) {
  Matrix<T> t(m.cols(), m.rows());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) t(j, i) = m(i, j);
  return t;
}

template <class T>
Matrix<T> operator*(const Matrix<T>& a, const Matrix<T>& b) {
  Matrix<T> c(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t k = 0; k < a.cols(); ++k) {
      if (sgn(a(i, k)) == 0) continue;
      for (std::size_t j = 0; j < b.cols(); ++j) c(i, j) += a(i, k) * b(k, j);
    }
  return c;
}

template <class T>
std::vector<T> operator*(std::span<const T> v, const Matrix<T>& m) {
  std::vector<T> out(m.cols(), T(0));
  for (std::size_t i = 0; i < m.rows(); ++i) {
    if (sgn(v[i]) == 0) continue;
    for (std::size_t j = 0; j < m.cols(); ++j) out[j] += v[i] * m(i, j);
  }
  return out;
}

template <class T>
std::vector<T> row_times(const std::vector<T>& v, const Matrix<T>& m) {
  return std::span<const T>(v) * m;
}

/// x * M * y^t.
Rat bilinear(std::span<const Rat> x, const RatMatrix& m, std::span<const Rat> y);

/// Block diagonal matrix diag(a, b).
template <class T>
Matrix<T> block_diagonal(const Matrix<T>& a, const Matrix<T>& b) {
  Matrix<T> c(a.rows() + b.rows(), a.cols() + b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) c(i, j) = a(i, j);
  for (std::size_t i = 0; i < b.rows(); ++i)
    for (std::size_t j = 0; j < b.cols(); ++j) c(a.rows() + i, a.cols() + j) = b(i, j);
  return c;
}

bool is_symmetric(const RatMatrix& m);
Rat determinant(const RatMatrix& m);
std::optional<RatMatrix> inverse(const RatMatrix& m);
/// True iff every leading principal minor is positive (exact).
bool is_positive_definite(const RatMatrix& m);
/// Rank over Q.
std::size_t rank_of(const RatMatrix& m);

/// Row-style Hermite normal form: a basis (upper echelon, positive pivots,
/// entries above each pivot reduced into [0, pivot)) of the Z-span of the rows
/// of `generators`. Zero rows are dropped.
IntMatrix hermite_basis(const IntMatrix& generators);

struct SmithForm {
  std::vector<Int> diagonal;  // d_1 | d_2 | ... , length min(rows, cols), zeros last
  IntMatrix left;             // unimodular, rows x rows
  IntMatrix right;            // unimodular, cols x cols
};
/// left * a * right = diag(diagonal).
SmithForm smith_form(const IntMatrix& a);

/// Inverse of a unimodular integer matrix; throws if the matrix is not unimodular.
IntMatrix unimodular_inverse(const IntMatrix& m);

struct LllResult {
  IntMatrix gram;       // transform * input * transform^t
  IntMatrix transform;  // unimodular; rows are the reduced basis in input coordinates
};
/// LLL reduction of a positive definite integer Gram matrix with exact rational
/// Gram-Schmidt data.
LllResult lll_reduce_gram(const IntMatrix& gram, const Rat& delta = Rat(3, 4));

std::string to_string(const Rat& r);
std::string to_string(const RatMatrix& m);
/// Parses "p", "-p" or "p/q".
std::optional<Rat> parse_rat(std::string_view text);

/// Checked conversion of a GMP integer to int64.
std::int64_t to_int64(const Int& v);

}  // namespace qlat
