#pragma once

#include <Eigen/Core>
#include <stdexcept>
#include <vector>

#include "nilq/field.hpp"
#include "nilq/partition.hpp"

namespace nilq {

template <typename Scalar>
using DenseMat = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;

using FpMat = DenseMat<Fp>;

template <typename Scalar>
bool is_zero_matrix(const DenseMat<Scalar>& A) {
  for (Eigen::Index c = 0; c < A.cols(); ++c)
    for (Eigen::Index r = 0; r < A.rows(); ++r)
      if (A(r, c) != Scalar(0)) return false;
  return true;
}

/// Rank over F_p by Gaussian elimination on a working copy.
inline int rank_of(FpMat A) {
  const Eigen::Index rows = A.rows(), cols = A.cols();
  int rank = 0;
  for (Eigen::Index c = 0; c < cols && rank < rows; ++c) {
    Eigen::Index piv = -1;
    for (Eigen::Index r = rank; r < rows; ++r)
      if (!A(r, c).is_zero()) { piv = r; break; }
    if (piv < 0) continue;
    A.row(piv).swap(A.row(rank));
    Fp inv = A(rank, c).inverse();
    for (Eigen::Index r = rank + 1; r < rows; ++r) {
      if (A(r, c).is_zero()) continue;
      Fp f = A(r, c) * inv;
      for (Eigen::Index j = c; j < cols; ++j)
        A(r, j) -= f * A(rank, j);
    }
    ++rank;
  }
  return rank;
}

/// Determinant over F_p by Gaussian elimination.
inline Fp det_of(FpMat A) {
  if (A.rows() != A.cols()) throw std::invalid_argument("det_of: not square");
  const Eigen::Index n = A.rows();
  if (n == 0) return Fp(1);
  Fp det(1);
  for (Eigen::Index c = 0; c < n; ++c) {
    Eigen::Index piv = -1;
    for (Eigen::Index r = c; r < n; ++r)
      if (!A(r, c).is_zero()) { piv = r; break; }
    if (piv < 0) return Fp(0);
    if (piv != c) {
      A.row(piv).swap(A.row(c));
      det = -det;
    }
    det *= A(c, c);
    Fp inv = A(c, c).inverse();
    for (Eigen::Index r = c + 1; r < n; ++r) {
      if (A(r, c).is_zero()) continue;
      Fp f = A(r, c) * inv;
      for (Eigen::Index j = c; j < n; ++j)
        A(r, j) -= f * A(c, j);
    }
  }
  return det;
}

/// A^m = 0 for some m, checked exactly via repeated squaring up to m >= n.
inline bool is_nilpotent(const FpMat& A) {
  if (A.rows() != A.cols()) return false;
  FpMat S = A;
  Eigen::Index e = 1;
  while (e < A.rows()) {
    if (is_zero_matrix(S)) return true;
    S = (S * S).eval();
    e *= 2;
  }
  return is_zero_matrix(S);
}

/// Jordan type of a nilpotent matrix from ranks of powers: the number of
/// blocks of size >= k is rank(A^{k-1}) - rank(A^k), and the block-size
/// partition is the conjugate of that sequence.
inline Partition jordan_type(const FpMat& A) {
  if (A.rows() != A.cols()) throw std::invalid_argument("jordan_type: not square");
  const int n = static_cast<int>(A.rows());
  if (n == 0) throw std::invalid_argument("jordan_type: empty matrix");
  std::vector<int> ranks;  // ranks[k] = rank(A^{k+1})
  FpMat power = A;
  int prev = n;
  while (true) {
    int r = rank_of(power);
    if (r >= prev)
      throw std::domain_error("jordan_type: matrix is not nilpotent");
    ranks.push_back(r);
    if (r == 0) break;
    prev = r;
    power = (power * A).eval();
  }
  std::vector<int> blocks_ge;  // # blocks of size >= k, k = 1..
  int before = n;
  for (int r : ranks) {
    blocks_ge.push_back(before - r);
    before = r;
  }
  return conjugate(Partition(std::move(blocks_ge)));
}

/// Determinant by cofactor expansion along rows, memoized on the set of
/// still-available columns. For rings without division (polynomials).
template <typename Scalar>
Scalar det_cofactor(const DenseMat<Scalar>& A) {
  if (A.rows() != A.cols()) throw std::invalid_argument("det_cofactor: not square");
  const int n = static_cast<int>(A.rows());
  if (n == 0) return Scalar(1);
  if (n > 20) throw std::invalid_argument("det_cofactor: too large");
  std::vector<Scalar> memo(std::size_t(1) << n, Scalar(0));
  std::vector<bool> seen(std::size_t(1) << n, false);
  auto rec = [&](auto&& self, unsigned colmask) -> Scalar {
    if (colmask == 0) return Scalar(1);
    if (seen[colmask]) return memo[colmask];
    int row = n - __builtin_popcount(colmask);
    Scalar acc(0);
    int sign = 1;
    for (int c = 0; c < n; ++c) {
      if (!(colmask & (1u << c))) continue;
      if (A(row, c) != Scalar(0)) {
        Scalar sub = self(self, colmask & ~(1u << c));
        Scalar term = A(row, c) * sub;
        acc = sign > 0 ? acc + term : acc - term;
      }
      sign = -sign;
    }
    seen[colmask] = true;
    memo[colmask] = acc;
    return acc;
  };
  return rec(rec, (1u << n) - 1u);
}

}  // namespace nilq
