#ifndef DSING_ORACLE_HPP
#define DSING_ORACLE_HPP

// Exact integer linear algebra used as ground truth. Nothing in here may
// depend on the cyclotomic machinery: determinants and ranks come from
// elimination alone.

#include <algorithm>
#include <numeric>
#include <cstddef>
#include <utility>
#include <vector>

#include "dsing/errors.hpp"
#include "dsing/polynomial.hpp"
#include "dsing/scalar.hpp"

namespace dsing {

/// Determinant by Bareiss fraction-free elimination with row pivoting.
template <typename Derived>
typename Derived::Scalar exact_determinant(const Eigen::MatrixBase<Derived>& a) {
  using Scalar = typename Derived::Scalar;
  if (a.rows() != a.cols()) throw ShapeError("exact_determinant: matrix is not square");
  const Eigen::Index n = a.rows();
  if (n == 0) return Scalar(1);

  Dense<Scalar> m = a;
  Scalar prev(1);
  bool negate = false;
  for (Eigen::Index k = 0; k + 1 < n; ++k) {
    if (m(k, k) == Scalar(0)) {
      Eigen::Index r = k + 1;
      while (r < n && m(r, k) == Scalar(0)) ++r;
      if (r == n) return Scalar(0);
      m.row(k).swap(m.row(r));
      negate = !negate;
    }
    for (Eigen::Index i = k + 1; i < n; ++i) {
      for (Eigen::Index j = k + 1; j < n; ++j) m(i, j) = (m(i, j) * m(k, k) - m(i, k) * m(k, j)) / prev;
      m(i, k) = Scalar(0);
    }
    prev = m(k, k);
  }
  return negate ? Scalar(-m(n - 1, n - 1)) : m(n - 1, n - 1);
}

/// Rank by fraction-free row reduction; each reduced row is divided by its
/// content so entries stay small.
template <typename Derived>
Eigen::Index exact_rank(const Eigen::MatrixBase<Derived>& a) {
  using Scalar = typename Derived::Scalar;
  using std::gcd;
  Dense<Scalar> m = a;
  const Eigen::Index rows = m.rows(), cols = m.cols();
  Eigen::Index rank = 0;
  for (Eigen::Index c = 0; c < cols && rank < rows; ++c) {
    Eigen::Index p = rank;
    while (p < rows && m(p, c) == Scalar(0)) ++p;
    if (p == rows) continue;
    if (p != rank) m.row(p).swap(m.row(rank));
    for (Eigen::Index i = rank + 1; i < rows; ++i) {
      if (m(i, c) == Scalar(0)) continue;
      const Scalar factor = m(i, c);
      Scalar content(0);
      for (Eigen::Index j = c; j < cols; ++j) {
        m(i, j) = m(i, j) * m(rank, c) - factor * m(rank, j);
        content = gcd(content, m(i, j));
      }
      if (content > Scalar(1))
        for (Eigen::Index j = c; j < cols; ++j) m(i, j) /= content;
    }
    ++rank;
  }
  return rank;
}

template <typename Derived>
Eigen::Index nullity(const Eigen::MatrixBase<Derived>& a) {
  return a.cols() - exact_rank(a);
}

/// det(xI - A) by the Faddeev-LeVerrier recurrence. For an integer matrix
/// every division by k in the recurrence is exact.
template <typename Derived>
Polynomial<typename Derived::Scalar> exact_char_poly(const Eigen::MatrixBase<Derived>& a) {
  using Scalar = typename Derived::Scalar;
  if (a.rows() != a.cols()) throw ShapeError("exact_char_poly: matrix is not square");
  const Eigen::Index n = a.rows();
  const Dense<Scalar> A = a;
  const Dense<Scalar> identity = Dense<Scalar>::Identity(n, n);

  std::vector<Scalar> c(static_cast<std::size_t>(n) + 1, Scalar(0));
  c[static_cast<std::size_t>(n)] = Scalar(1);
  Dense<Scalar> mk = Dense<Scalar>::Zero(n, n);
  for (Eigen::Index k = 1; k <= n; ++k) {
    mk = A * mk + c[static_cast<std::size_t>(n - k + 1)] * identity;
    const Scalar tr = (A * mk).trace();
    if (tr % Scalar(k) != Scalar(0)) throw Error("exact_char_poly: inexact division, input not integral");
    c[static_cast<std::size_t>(n - k)] = -tr / Scalar(k);
  }
  return Polynomial<Scalar>(std::move(c));
}

/// Number of walks of the given length from `from` to `to` whose interior
/// vertices all lie in `allowed_intermediate`.
template <typename Derived>
typename Derived::Scalar walk_count(const Eigen::MatrixBase<Derived>& a, Eigen::Index from, Eigen::Index to,
                                    int length, const std::vector<Eigen::Index>& allowed_intermediate) {
  using Scalar = typename Derived::Scalar;
  if (a.rows() != a.cols()) throw ShapeError("walk_count: matrix is not square");
  if (length < 1) throw PreconditionError("walk_count: length must be >= 1");
  const Eigen::Index n = a.rows();

  DenseVector<Scalar> mask = DenseVector<Scalar>::Zero(n);
  for (Eigen::Index v : allowed_intermediate) mask(v) = Scalar(1);

  // reach(v) = number of admissible walks from `from` ending at v so far
  DenseVector<Scalar> reach = a.row(from).transpose();
  for (int step = 1; step < length; ++step) {
    reach = reach.cwiseProduct(mask);
    reach = a.transpose() * reach;
  }
  return reach(to);
}

}  // namespace dsing

#endif  // DSING_ORACLE_HPP
