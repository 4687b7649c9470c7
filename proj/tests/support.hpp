#pragma once

#include "oracles.hpp"
#include "qlat/lattice.hpp"

inline qlat::IntMatrix to_matrix(const oracle::Mat& m) {
  qlat::IntMatrix out(m.size(), m.size());
  for (std::size_t i = 0; i < m.size(); ++i)
    for (std::size_t j = 0; j < m.size(); ++j) out(i, j) = m[i][j];
  return out;
}

inline oracle::Mat to_plain(const qlat::IntMatrix& m) {
  oracle::Mat out(m.rows(), oracle::Vec(m.cols()));
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) out[i][j] = m(i, j).get_si();
  return out;
}

inline qlat::Lattice lattice_of(const oracle::Mat& m) { return qlat::Lattice::from_gram(to_matrix(m)); }
