#pragma once

#include <cstddef>
#include <initializer_list>
#include <span>
#include <vector>

#include "ecr/rational.hpp"

namespace ecr {

/// Truncated formal power series over Q.
///
/// A Series of order n knows the coefficients of x^0 .. x^(n-1) exactly and
/// nothing beyond. Every operation returns a result whose order is the
/// largest order justified by its inputs, so reading past order() is never
/// meaningful.
class Series {
 public:
  Series() = default;
  explicit Series(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) {}
  Series(std::initializer_list<long> coeffs);

  /// Polynomial p padded with zeros to the given order (p must fit).
  static Series polynomial(std::vector<Rational> p, std::size_t order);
  static Series constant(const Rational& c, std::size_t order);
  /// The series x, valid to `order`.
  static Series x(std::size_t order);

  std::size_t order() const noexcept { return coeffs_.size(); }
  bool empty() const noexcept { return coeffs_.empty(); }

  const Rational& operator[](std::size_t i) const { return coeffs_[i]; }
  Rational& operator[](std::size_t i) { return coeffs_[i]; }
  const Rational& at(std::size_t i) const;

  std::span<const Rational> coeffs() const noexcept { return coeffs_; }
  const std::vector<Rational>& vector() const noexcept { return coeffs_; }

  Series truncated(std::size_t order) const;
  /// Multiply by x^k; order grows by k.
  Series shifted_up(std::size_t k) const;
  /// Divide by x^k; the first k coefficients must vanish. Order drops by k.
  Series shifted_down(std::size_t k) const;

  Series operator-() const;
  Series& operator+=(const Series& rhs);
  Series& operator-=(const Series& rhs);
  Series& operator*=(const Rational& s);

  friend Series operator+(Series lhs, const Series& rhs) { return lhs += rhs; }
  friend Series operator-(Series lhs, const Series& rhs) { return lhs -= rhs; }
  friend Series operator*(Series lhs, const Rational& s) { return lhs *= s; }
  friend Series operator*(const Rational& s, Series rhs) { return rhs *= s; }

  friend bool operator==(const Series&, const Series&) = default;

 private:
  std::vector<Rational> coeffs_;
};

/// True when a and b agree on their first min(a.order(), b.order(), n)
/// coefficients.
bool agree(const Series& a, const Series& b, std::size_t n);

Series ps_mul(const Series& f, const Series& g);
Series operator*(const Series& f, const Series& g);

/// f / g; requires g_0 != 0 (Errc::ZeroConstantTerm).
Series ps_div(const Series& f, const Series& g);
Series ps_inverse(const Series& g);

/// Positive-branch square root of a series with f_0 = 1
/// (Errc::NonUnitConstant otherwise).
Series ps_sqrt(const Series& f);

/// f(g(x)); requires g_0 = 0 (Errc::NonzeroInnerConstant).
Series ps_compose(const Series& f, const Series& g);

Series ps_derivative(const Series& f);

/// Compositional inverse of f with f_0 = 0, f_1 = 1 (Errc::NotRevertible).
/// Uses Lagrange inversion for small orders and Newton iteration from
/// order 64 upward.
Series ps_revert(const Series& f);

namespace detail {
Series revert_lagrange(const Series& f);
Series revert_newton(const Series& f);
}  // namespace detail

/// (1/(1 - r x)) f(x/(1 - r x)), i.e. b_n = sum_k C(n,k) r^(n-k) f_k.
Series ps_binomial(const Series& f, const Rational& r);

/// Catalan generating function 1, 1, 2, 5, 14, ... to the given order.
Series catalan_gf(std::size_t order);

}  // namespace ecr
