#include "dinv/linalg.hpp"

namespace dinv {

RatMatrix bareiss_solve(const IntMatrix& a, const IntMatrix& b) {
  const Eigen::Index n = a.rows();
  if (a.cols() != n) throw std::invalid_argument("bareiss_solve: matrix not square");
  if (b.rows() != n) throw std::invalid_argument("bareiss_solve: rhs size mismatch");
  const Eigen::Index w = n + b.cols();

  IntMatrix m(n, w);
  m.leftCols(n) = a;
  m.rightCols(b.cols()) = b;

  // Row operations of the form (pivot*row_i - m_ik*row_k)/prev keep each row
  // an exact integer multiple of a valid equation of the system.
  Int prev(1);
  for (Eigen::Index k = 0; k + 1 < n; ++k) {
    if (m(k, k) == 0) {
      Eigen::Index piv = -1;
      for (Eigen::Index i = k + 1; i < n; ++i)
        if (m(i, k) != 0) { piv = i; break; }
      if (piv < 0) throw std::invalid_argument("bareiss_solve: singular matrix");
      m.row(k).swap(m.row(piv));
    }
    for (Eigen::Index i = k + 1; i < n; ++i) {
      for (Eigen::Index j = k + 1; j < w; ++j)
        m(i, j) = (m(i, j) * m(k, k) - m(i, k) * m(k, j)) / prev;
      m(i, k) = 0;
    }
    prev = m(k, k);
  }
  if (n > 0 && m(n - 1, n - 1) == 0)
    throw std::invalid_argument("bareiss_solve: singular matrix");

  RatMatrix x(n, b.cols());
  for (Eigen::Index c = 0; c < b.cols(); ++c)
    for (Eigen::Index i = n - 1; i >= 0; --i) {
      Rat acc(m(i, n + c));
      for (Eigen::Index j = i + 1; j < n; ++j) acc -= Rat(m(i, j)) * x(j, c);
      x(i, c) = acc / Rat(m(i, i));
    }
  return x;
}

RatVector bareiss_solve(const IntMatrix& a, const IntVector& b) {
  IntMatrix bm(b.rows(), 1);
  bm.col(0) = b;
  return bareiss_solve(a, bm).col(0);
}

RatMatrix exact_inverse(const IntMatrix& a) {
  IntMatrix id = IntMatrix::Zero(a.rows(), a.rows());
  for (Eigen::Index i = 0; i < a.rows(); ++i) id(i, i) = 1;
  return bareiss_solve(a, id);
}

}  // namespace dinv
