#ifndef DSING_CIRCULANT_HPP
#define DSING_CIRCULANT_HPP

#include <cstddef>
#include <utility>
#include <vector>

#include "dsing/errors.hpp"
#include "dsing/polynomial.hpp"
#include "dsing/scalar.hpp"

namespace dsing {

/// Circulant matrix stored by its first row: Y(i, j) = y[(j - i) mod n].
template <typename Scalar>
class CirculantMatrix {
 public:
  CirculantMatrix() = default;
  explicit CirculantMatrix(std::vector<Scalar> first_row) : row_(std::move(first_row)) {}

  std::size_t size() const { return row_.size(); }
  const std::vector<Scalar>& first_row() const { return row_; }

  const Scalar& operator()(std::size_t i, std::size_t j) const {
    const std::size_t n = row_.size();
    return row_[(j + n - i % n) % n];
  }

  friend bool operator==(const CirculantMatrix&, const CirculantMatrix&) = default;

 private:
  std::vector<Scalar> row_;
};

/// Anti-circulant matrix stored by its first row: X(i, j) = x[(i + j) mod n].
/// Always symmetric.
template <typename Scalar>
class AntiCirculantMatrix {
 public:
  AntiCirculantMatrix() = default;
  explicit AntiCirculantMatrix(std::vector<Scalar> first_row) : row_(std::move(first_row)) {}

  std::size_t size() const { return row_.size(); }
  const std::vector<Scalar>& first_row() const { return row_; }

  const Scalar& operator()(std::size_t i, std::size_t j) const { return row_[(i + j) % row_.size()]; }

  friend bool operator==(const AntiCirculantMatrix&, const AntiCirculantMatrix&) = default;

 private:
  std::vector<Scalar> row_;
};

template <typename Scalar>
CirculantMatrix<Scalar> circ(std::vector<Scalar> first_row) {
  return CirculantMatrix<Scalar>(std::move(first_row));
}

template <typename Scalar>
Dense<Scalar> expand(const CirculantMatrix<Scalar>& c) {
  const auto n = static_cast<Eigen::Index>(c.size());
  Dense<Scalar> out(n, n);
  for (Eigen::Index i = 0; i < n; ++i)
    for (Eigen::Index j = 0; j < n; ++j) out(i, j) = c(i, j);
  return out;
}

template <typename Scalar>
Dense<Scalar> expand(const AntiCirculantMatrix<Scalar>& x) {
  const auto n = static_cast<Eigen::Index>(x.size());
  Dense<Scalar> out(n, n);
  for (Eigen::Index i = 0; i < n; ++i)
    for (Eigen::Index j = 0; j < n; ++j) out(i, j) = x(i, j);
  return out;
}

namespace detail {
template <typename Derived>
void require_square(const Eigen::MatrixBase<Derived>& m, const char* what) {
  if (m.rows() != m.cols()) throw ShapeError(std::string(what) + ": matrix is not square");
}
}  // namespace detail

/// Every row is the previous row shifted one place to the right.
template <typename Derived>
bool is_circulant(const Eigen::MatrixBase<Derived>& m) {
  detail::require_square(m, "is_circulant");
  const Eigen::Index n = m.rows();
  for (Eigen::Index i = 1; i < n; ++i)
    for (Eigen::Index j = 0; j < n; ++j)
      if (m(i, j) != m(0, (j - i + n) % n)) return false;
  return true;
}

/// Every row is the previous row shifted one place to the left.
template <typename Derived>
bool is_anticirculant(const Eigen::MatrixBase<Derived>& m) {
  detail::require_square(m, "is_anticirculant");
  const Eigen::Index n = m.rows();
  for (Eigen::Index i = 1; i < n; ++i)
    for (Eigen::Index j = 0; j < n; ++j)
      if (m(i, j) != m(0, (i + j) % n)) return false;
  return true;
}

/// b_{1,1} + b_{1,2} x + ... + b_{1,n} x^{n-1}, read off the first row.
template <typename Derived>
Polynomial<typename Derived::Scalar> associated_polynomial(const Eigen::MatrixBase<Derived>& b) {
  detail::require_square(b, "associated_polynomial");
  using Scalar = typename Derived::Scalar;
  if (b.rows() == 0) return {};
  std::vector<Scalar> coeffs(static_cast<std::size_t>(b.cols()));
  for (Eigen::Index j = 0; j < b.cols(); ++j) coeffs[static_cast<std::size_t>(j)] = b(0, j);
  return Polynomial<Scalar>(std::move(coeffs));
}

template <typename Scalar>
Polynomial<Scalar> associated_polynomial(const CirculantMatrix<Scalar>& c) {
  return Polynomial<Scalar>(c.first_row());
}

/// Inverse of associated_polynomial on circulants: pads p out to n coefficients.
template <typename Scalar>
CirculantMatrix<Scalar> circulant_from_polynomial(const Polynomial<Scalar>& p, std::size_t n) {
  if (p.degree() >= static_cast<int>(n)) throw NotReducedError("polynomial degree must be below n");
  std::vector<Scalar> row(n, Scalar(0));
  for (std::size_t i = 0; i < p.size(); ++i) row[i] = p.coeff(i);
  return CirculantMatrix<Scalar>(std::move(row));
}

/// Product of circulants through the ring isomorphism with Z[x]/(x^n - 1).
template <typename Scalar>
CirculantMatrix<Scalar> circulant_multiply(const CirculantMatrix<Scalar>& p, const CirculantMatrix<Scalar>& q) {
  if (p.size() != q.size()) throw ShapeError("circulant_multiply: dimension mismatch");
  if (p.size() == 0) return {};
  const auto product = reduce_mod_xn_minus_1(associated_polynomial(p) * associated_polynomial(q), p.size());
  return circulant_from_polynomial(product, p.size());
}

/// X * X for an anti-circulant X; the product is circulant.
template <typename Scalar>
CirculantMatrix<Scalar> anticirculant_square(const AntiCirculantMatrix<Scalar>& x) {
  const Dense<Scalar> dense = expand(x);
  const Dense<Scalar> sq = dense * dense;
  if (!is_circulant(sq)) throw Error("anticirculant_square: product is not circulant");
  std::vector<Scalar> row(x.size());
  for (std::size_t j = 0; j < x.size(); ++j) row[j] = sq(0, static_cast<Eigen::Index>(j));
  return CirculantMatrix<Scalar>(std::move(row));
}

/// Outcome of the cyclotomic singularity test on an integer circulant.
struct CyclotomicCertificate {
  std::size_t n = 0;
  IntPolynomial tested;            // associated polynomial of the circulant
  std::vector<unsigned> dividing;  // every d | n with Phi_d | tested
  std::size_t nullity = 0;         // sum of phi(d) over `dividing`

  bool singular() const { return !dividing.empty(); }
};

/// The circulant with associated polynomial psi is singular iff Phi_d | psi for
/// some d | n, and its nullity is the sum of phi(d) over those d.
CyclotomicCertificate circulant_singularity(const IntPolynomial& psi, std::size_t n);

}  // namespace dsing

#endif  // DSING_CIRCULANT_HPP
