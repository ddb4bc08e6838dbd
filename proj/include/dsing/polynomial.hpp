#ifndef DSING_POLYNOMIAL_HPP
#define DSING_POLYNOMIAL_HPP

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstddef>
#include <initializer_list>
#include <limits>
#include <numbers>
#include <optional>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "dsing/errors.hpp"
#include "dsing/scalar.hpp"

namespace dsing {

/// Dense univariate polynomial over an integral domain. Coefficient i is the
/// coefficient of x^i; trailing zeros are never stored, so the zero
/// polynomial has no coefficients at all.
template <typename Scalar>
class Polynomial {
 public:
  /// Degree reported for the zero polynomial.
  static constexpr int kZeroDegree = std::numeric_limits<int>::min();

  Polynomial() = default;
  explicit Polynomial(std::vector<Scalar> coeffs) : coeffs_(std::move(coeffs)) { trim(); }
  Polynomial(std::initializer_list<Scalar> coeffs) : coeffs_(coeffs) { trim(); }

  static Polynomial constant(const Scalar& c) { return Polynomial(std::vector<Scalar>{c}); }

  static Polynomial monomial(std::size_t power, const Scalar& c = Scalar(1)) {
    std::vector<Scalar> v(power + 1, Scalar(0));
    v[power] = c;
    return Polynomial(std::move(v));
  }

  /// x^n - 1
  static Polynomial x_pow_minus_one(std::size_t n) {
    std::vector<Scalar> v(n + 1, Scalar(0));
    v[0] = Scalar(-1);
    v[n] += Scalar(1);
    return Polynomial(std::move(v));
  }

  bool is_zero() const { return coeffs_.empty(); }
  int degree() const { return is_zero() ? kZeroDegree : static_cast<int>(coeffs_.size()) - 1; }
  std::size_t size() const { return coeffs_.size(); }

  Scalar coeff(std::size_t i) const { return i < coeffs_.size() ? coeffs_[i] : Scalar(0); }
  const Scalar& leading() const { return coeffs_.back(); }
  const std::vector<Scalar>& coefficients() const { return coeffs_; }

  bool is_monic() const { return !is_zero() && leading() == Scalar(1); }

  Scalar operator()(const Scalar& x) const {
    Scalar acc(0);
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
    return acc;
  }

  Polynomial& operator+=(const Polynomial& o) {
    if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size(), Scalar(0));
    for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
    trim();
    return *this;
  }

  Polynomial& operator-=(const Polynomial& o) {
    if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size(), Scalar(0));
    for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] -= o.coeffs_[i];
    trim();
    return *this;
  }

  Polynomial& operator*=(const Polynomial& o) { return *this = *this * o; }

  friend Polynomial operator+(Polynomial p, const Polynomial& q) { return p += q; }
  friend Polynomial operator-(Polynomial p, const Polynomial& q) { return p -= q; }
  friend Polynomial operator-(Polynomial p) {
    for (auto& c : p.coeffs_) c = -c;
    return p;
  }

  friend Polynomial operator*(const Polynomial& p, const Polynomial& q) {
    if (p.is_zero() || q.is_zero()) return {};
    std::vector<Scalar> out(p.coeffs_.size() + q.coeffs_.size() - 1, Scalar(0));
    for (std::size_t i = 0; i < p.coeffs_.size(); ++i) {
      if (p.coeffs_[i] == Scalar(0)) continue;
      for (std::size_t j = 0; j < q.coeffs_.size(); ++j) out[i + j] += p.coeffs_[i] * q.coeffs_[j];
    }
    return Polynomial(std::move(out));
  }

  friend Polynomial operator*(const Scalar& c, Polynomial p) {
    for (auto& x : p.coeffs_) x *= c;
    p.trim();
    return p;
  }

  friend bool operator==(const Polynomial&, const Polynomial&) = default;

 private:
  void trim() {
    while (!coeffs_.empty() && coeffs_.back() == Scalar(0)) coeffs_.pop_back();
  }

  std::vector<Scalar> coeffs_;
};

using IntPolynomial = Polynomial<BigInt>;

template <typename Scalar>
Polynomial<Scalar> add(const Polynomial<Scalar>& p, const Polynomial<Scalar>& q) { return p + q; }
template <typename Scalar>
Polynomial<Scalar> subtract(const Polynomial<Scalar>& p, const Polynomial<Scalar>& q) { return p - q; }
template <typename Scalar>
Polynomial<Scalar> multiply(const Polynomial<Scalar>& p, const Polynomial<Scalar>& q) { return p * q; }

/// Canonical representative of p in Z[x]/(x^n - 1): x^(kn+r) folds onto x^r.
template <typename Scalar>
Polynomial<Scalar> reduce_mod_xn_minus_1(const Polynomial<Scalar>& p, std::size_t n) {
  if (n == 0) throw PreconditionError("reduce_mod_xn_minus_1: n must be >= 1");
  std::vector<Scalar> out(std::min(n, p.size()), Scalar(0));
  const auto& c = p.coefficients();
  for (std::size_t i = 0; i < c.size(); ++i) out[i % n] += c[i];
  return Polynomial<Scalar>(std::move(out));
}

template <typename Scalar>
struct DivisionResult {
  Polynomial<Scalar> quotient;
  Polynomial<Scalar> remainder;
};

/// Long division of `dividend` by `divisor` inside Scalar[x]. Succeeds only
/// when every quotient coefficient is an exact multiple in Scalar; for a
/// monic divisor this is always the case. Returns nullopt when the leading
/// coefficient of some partial remainder is not divisible, which for
/// integer coefficients already rules out divisibility in Z[x].
template <typename Scalar>
std::optional<DivisionResult<Scalar>> long_divide(const Polynomial<Scalar>& dividend,
                                                  const Polynomial<Scalar>& divisor) {
  if (divisor.is_zero()) throw InvalidDivisor("division by the zero polynomial");
  if (dividend.degree() < divisor.degree()) return DivisionResult<Scalar>{{}, dividend};

  std::vector<Scalar> rem = dividend.coefficients();
  const auto& d = divisor.coefficients();
  const std::size_t dn = d.size();
  std::vector<Scalar> quot(rem.size() - dn + 1, Scalar(0));
  const Scalar& lead = d.back();

  for (std::size_t k = quot.size(); k-- > 0;) {
    const Scalar& top = rem[k + dn - 1];
    if (top == Scalar(0)) continue;
    if (top % lead != Scalar(0)) return std::nullopt;
    Scalar q = top / lead;
    for (std::size_t j = 0; j < dn; ++j) rem[k + j] -= q * d[j];
    quot[k] = std::move(q);
  }
  return DivisionResult<Scalar>{Polynomial<Scalar>(std::move(quot)), Polynomial<Scalar>(std::move(rem))};
}

/// Witness s with q = p * s, if one exists in Scalar[x]. Every nonzero p
/// divides the zero polynomial.
template <typename Scalar>
std::optional<Polynomial<Scalar>> exact_quotient(const Polynomial<Scalar>& p, const Polynomial<Scalar>& q) {
  if (p.is_zero()) throw InvalidDivisor("the zero polynomial is not a valid divisor");
  auto res = long_divide(q, p);
  if (!res || !res->remainder.is_zero()) return std::nullopt;
  return std::move(res->quotient);
}

/// True iff p divides q.
template <typename Scalar>
bool divides(const Polynomial<Scalar>& p, const Polynomial<Scalar>& q) {
  return exact_quotient(p, q).has_value();
}

/// Advisory floating-point evaluation p(w^j), w = exp(2 pi i / n), j = 0..n-1.
template <typename Scalar>
std::vector<std::complex<double>> evaluate_at_unit_roots(const Polynomial<Scalar>& p, std::size_t n) {
  if (n == 0) throw PreconditionError("evaluate_at_unit_roots: n must be >= 1");
  std::vector<std::complex<double>> out(n);
  const auto& c = p.coefficients();
  for (std::size_t j = 0; j < n; ++j) {
    std::complex<double> acc = 0.0;
    for (std::size_t i = 0; i < c.size(); ++i) {
      // reduce the exponent first so large degrees do not lose phase accuracy
      const double angle = 2.0 * std::numbers::pi * static_cast<double>((i * j) % n) / static_cast<double>(n);
      acc += static_cast<double>(c[i]) * std::polar(1.0, angle);
    }
    out[j] = acc;
  }
  return out;
}

/// Human-readable form, constant term first: "2 + x + x^2", "1 - x^2", "0".
template <typename Scalar>
std::string to_string(const Polynomial<Scalar>& p) {
  if (p.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  const auto& c = p.coefficients();
  for (std::size_t i = 0; i < c.size(); ++i) {
    if (c[i] == Scalar(0)) continue;
    const bool negative = c[i] < Scalar(0);
    const Scalar mag = negative ? Scalar(-c[i]) : c[i];
    if (first) {
      if (negative) os << '-';
    } else {
      os << (negative ? " - " : " + ");
    }
    first = false;
    if (i == 0 || mag != Scalar(1)) os << mag;
    if (i >= 1) os << 'x';
    if (i >= 2) os << '^' << i;
  }
  return os.str();
}

// Number-theoretic helpers and the process-wide cyclotomic table.

/// All positive divisors of n in ascending order.
std::vector<unsigned> divisors(unsigned n);

/// Euler's totient by trial factorization.
unsigned euler_totient(unsigned d);

bool is_prime(unsigned n);

/// Phi_d, computed as (x^d - 1) / prod_{e | d, e < d} Phi_e and memoized.
/// The returned reference stays valid for the life of the process and is
/// safe to read from concurrent threads.
const IntPolynomial& cyclotomic(unsigned d);

}  // namespace dsing

#endif  // DSING_POLYNOMIAL_HPP
