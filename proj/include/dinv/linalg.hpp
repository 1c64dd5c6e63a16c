#pragma once
//
// Fraction-free linear algebra over Eigen dense types with exact scalars.
// Bareiss one-step elimination: every intermediate entry is a minor of the
// input, so integer matrices stay integer and divisions are exact.
//

#include <stdexcept>
#include <vector>

#include <Eigen/Dense>
#include <boost/multiprecision/eigen.hpp>

#include "dinv/arith.hpp"

namespace dinv {

template <class S>
using DenseMatrix = Eigen::Matrix<S, Eigen::Dynamic, Eigen::Dynamic>;
template <class S>
using DenseVector = Eigen::Matrix<S, Eigen::Dynamic, 1>;

using IntMatrix = DenseMatrix<Int>;
using IntVector = DenseVector<Int>;
using RatMatrix = DenseMatrix<Rat>;
using RatVector = DenseVector<Rat>;

// det(A) for square A with exact scalar. Rows are swapped only when a pivot
// vanishes; the Bareiss division stays exact either way. 0x0 gives 1.
template <class Derived>
typename Derived::Scalar bareiss_determinant(const Eigen::MatrixBase<Derived>& a) {
  using S = typename Derived::Scalar;
  const Eigen::Index n = a.rows();
  if (a.cols() != n) throw std::invalid_argument("bareiss_determinant: matrix not square");
  if (n == 0) return S(1);
  DenseMatrix<S> m = a;
  S prev(1);
  int sign = 1;
  for (Eigen::Index k = 0; k + 1 < n; ++k) {
    if (m(k, k) == 0) {
      Eigen::Index piv = -1;
      for (Eigen::Index i = k + 1; i < n; ++i)
        if (m(i, k) != 0) { piv = i; break; }
      if (piv < 0) return S(0);
      m.row(k).swap(m.row(piv));
      sign = -sign;
    }
    for (Eigen::Index i = k + 1; i < n; ++i) {
      for (Eigen::Index j = k + 1; j < n; ++j)
        m(i, j) = (m(i, j) * m(k, k) - m(i, k) * m(k, j)) / prev;
      m(i, k) = S(0);
    }
    prev = m(k, k);
  }
  S det = m(n - 1, n - 1);
  return sign < 0 ? S(-det) : det;
}

// Leading principal minors d_1..d_n. Without row exchanges the Bareiss pivot
// after step k IS det(A[0..k][0..k]); a vanishing pivot stops the elimination,
// so the list may be shorter than n (its last entry is then 0).
template <class Derived>
std::vector<typename Derived::Scalar> leading_principal_minors(
    const Eigen::MatrixBase<Derived>& a) {
  using S = typename Derived::Scalar;
  const Eigen::Index n = a.rows();
  if (a.cols() != n) throw std::invalid_argument("leading_principal_minors: matrix not square");
  std::vector<S> minors;
  if (n == 0) return minors;
  DenseMatrix<S> m = a;
  S prev(1);
  for (Eigen::Index k = 0; k < n; ++k) {
    minors.push_back(m(k, k));
    if (m(k, k) == 0 || k + 1 == n) break;
    for (Eigen::Index i = k + 1; i < n; ++i) {
      for (Eigen::Index j = k + 1; j < n; ++j)
        m(i, j) = (m(i, j) * m(k, k) - m(i, k) * m(k, j)) / prev;
      m(i, k) = S(0);
    }
    prev = m(k, k);
  }
  return minors;
}

// (-1)^k d_k > 0 for k = 1..n, checked exactly.
template <class Derived>
bool is_negative_definite(const Eigen::MatrixBase<Derived>& a) {
  auto minors = leading_principal_minors(a);
  if (static_cast<Eigen::Index>(minors.size()) != a.rows()) return false;
  for (std::size_t k = 0; k < minors.size(); ++k) {
    const bool want_positive = (k % 2 == 1);  // d_1 < 0, d_2 > 0, ...
    if (minors[k] == 0) return false;
    if ((minors[k] > 0) != want_positive) return false;
  }
  return true;
}

// Exact solve A X = B for integer A (any exact scalar works). Forward
// elimination is fraction-free on the augmented matrix; back substitution is
// rational. Throws on singular A.
RatMatrix bareiss_solve(const IntMatrix& a, const IntMatrix& b);
RatVector bareiss_solve(const IntMatrix& a, const IntVector& b);

// Full exact inverse, column by column.
RatMatrix exact_inverse(const IntMatrix& a);

}  // namespace dinv
