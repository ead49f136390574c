#pragma once

// Shared fixtures and test-only oracles. Nothing here calls into the
// implementation paths it is used to check.

#include <cstddef>
#include <initializer_list>
#include <random>
#include <vector>

#include "ecr/curve.hpp"
#include "ecr/rational.hpp"
#include "ecr/riordan.hpp"
#include "ecr/series.hpp"

namespace ecr::test {

inline std::vector<Rational> Q(std::initializer_list<long> v) {
  std::vector<Rational> out;
  for (long x : v) out.emplace_back(x);
  return out;
}

inline std::vector<Rational> prefix(const Series& s, std::size_t n) {
  return std::vector<Rational>(s.coeffs().begin(), s.coeffs().begin() + static_cast<std::ptrdiff_t>(n));
}

inline Triangle T(std::initializer_list<std::initializer_list<long>> rows) {
  Triangle t;
  for (auto r : rows) t.push_back(Q(r));
  return t;
}

// The curves named in the examples.
inline CurveParams E1() { return curve_new(-1, -2, -1); }
inline CurveParams E2() { return curve_new(-3, 0, -2); }  // y^2 + 3xy - y = x^3 + 2x
inline CurveParams E3() { return curve_new(3, 0, 1); }
inline CurveParams E4() { return curve_new(1, -2, 0); }   // y^2 - xy - y = x^3 + 2x^2
inline CurveParams Ex2() { return curve_new(-2, -5, 1); }
inline CurveParams Ex2Variant() { return curve_new(2, -5, -1); }
inline CurveParams PseudoInvolution() { return curve_new(3, 2, 2); }
inline CurveParams A023431Curve() { return curve_new(-1, 0, -1); }

inline std::vector<CurveParams> paper_curves() {
  return {E1(), Ex2(), Ex2Variant(), PseudoInvolution(), A023431Curve(), E3()};
}

/// Nonsingular curves with integer a, b, c in [-bound, bound].
inline std::vector<CurveParams> random_curves(std::size_t count, long bound, unsigned seed) {
  std::mt19937 rng(seed);
  std::uniform_int_distribution<long> d(-bound, bound);
  std::vector<CurveParams> out;
  while (out.size() < count) {
    const long a = d(rng), b = d(rng), c = d(rng);
    if (curve_discriminant(a, b, c) == 0) continue;
    out.push_back(curve_new(a, b, c));
  }
  return out;
}

inline Rational random_rational(std::mt19937& rng, long num_bound = 9, long den_bound = 4) {
  std::uniform_int_distribution<long> n(-num_bound, num_bound), d(1, den_bound);
  Rational q(n(rng), d(rng));
  q.canonicalize();
  return q;
}

inline Series random_series(std::mt19937& rng, std::size_t order, Rational constant) {
  std::vector<Rational> c(order);
  if (order) c[0] = constant;
  for (std::size_t i = 1; i < order; ++i) c[i] = random_rational(rng);
  return Series(std::move(c));
}

/// Determinant by cofactor expansion along the first row.
inline Rational naive_det(const std::vector<std::vector<Rational>>& m) {
  const std::size_t n = m.size();
  if (n == 0) return 1;
  if (n == 1) return m[0][0];
  Rational det = 0;
  for (std::size_t col = 0; col < n; ++col) {
    if (m[0][col] == 0) continue;
    std::vector<std::vector<Rational>> minor;
    for (std::size_t i = 1; i < n; ++i) {
      std::vector<Rational> row;
      for (std::size_t j = 0; j < n; ++j)
        if (j != col) row.push_back(m[i][j]);
      minor.push_back(std::move(row));
    }
    const Rational term = m[0][col] * naive_det(minor);
    det += (col % 2 == 0) ? term : Rational(-term);
  }
  return det;
}

/// Coefficients of prod over a polynomial power expansion, by direct
/// convolution (independent of Series arithmetic).
inline std::vector<Rational> convolve(const std::vector<Rational>& a, const std::vector<Rational>& b, std::size_t n) {
  std::vector<Rational> out(n);
  for (std::size_t i = 0; i < a.size() && i < n; ++i)
    for (std::size_t j = 0; j < b.size() && i + j < n; ++j) out[i + j] += a[i] * b[j];
  return out;
}

inline Rational sgn(const Rational& q) { return q > 0 ? 1 : (q < 0 ? -1 : 0); }

}  // namespace ecr::test
