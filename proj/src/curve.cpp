#include "ecr/curve.hpp"

#include <string>

#include "ecr/error.hpp"

namespace ecr {

namespace {

struct BCoeffs {
  Rational b2, b4, b6, b8;
};

BCoeffs b_coeffs(const Rational& a, const Rational& b, const Rational& c) {
  const Rational a1 = -a, a2 = -b, a3 = -1, a4 = -c, a6 = 0;
  return {a1 * a1 + 4 * a2, 2 * a4 + a1 * a3, a3 * a3 + 4 * a6,
          a1 * a1 * a6 + 4 * a2 * a6 - a1 * a3 * a4 + a2 * a3 * a3 - a4 * a4};
}

Rational discriminant_of(const BCoeffs& k) {
  return -k.b2 * k.b2 * k.b8 - 8 * k.b4 * k.b4 * k.b4 - 27 * k.b6 * k.b6 + 9 * k.b2 * k.b4 * k.b6;
}

}  // namespace

Rational curve_discriminant(const Rational& a, const Rational& b, const Rational& c) {
  return discriminant_of(b_coeffs(a, b, c));
}

CurveParams curve_new(const Rational& a, const Rational& b, const Rational& c) {
  const BCoeffs k = b_coeffs(a, b, c);
  Rational disc = discriminant_of(k);
  if (disc == 0)
    throw Error(Errc::SingularCurve,
                "singular curve (a,b,c) = (" + to_string(a) + "," + to_string(b) + "," + to_string(c) + ")");
  CurveParams p;
  p.a_ = a;
  p.b_ = b;
  p.c_ = c;
  p.b2_ = k.b2;
  p.b4_ = k.b4;
  p.b6_ = k.b6;
  p.b8_ = k.b8;
  p.disc_ = std::move(disc);
  return p;
}

const Rational& CurvePoint::x() const {
  if (!xy_) throw Error(Errc::PointNotOnCurve, "point at infinity has no x coordinate");
  return xy_->first;
}

const Rational& CurvePoint::y() const {
  if (!xy_) throw Error(Errc::PointNotOnCurve, "point at infinity has no y coordinate");
  return xy_->second;
}

bool on_curve(const CurveParams& E, const CurvePoint& p) {
  if (p.is_infinity()) return true;
  const Rational& x = p.x();
  const Rational& y = p.y();
  return y * y + E.a1() * x * y + E.a3() * y == x * x * x + E.a2() * x * x + E.a4() * x + E.a6();
}

CurvePoint point_negate(const CurveParams& E, const CurvePoint& p) {
  if (p.is_infinity()) return p;
  return CurvePoint::affine(p.x(), -p.y() - E.a1() * p.x() - E.a3());
}

CurvePoint point_add(const CurveParams& E, const CurvePoint& p, const CurvePoint& q) {
  if (!on_curve(E, p) || !on_curve(E, q)) throw Error(Errc::PointNotOnCurve, "point_add on a foreign point");
  if (p.is_infinity()) return q;
  if (q.is_infinity()) return p;
  const Rational &x1 = p.x(), &y1 = p.y(), &x2 = q.x(), &y2 = q.y();
  if (x1 == x2 && y1 + y2 + E.a1() * x1 + E.a3() == 0) return CurvePoint::infinity();

  Rational lambda, nu;
  if (x1 == x2) {
    const Rational den = 2 * y1 + E.a1() * x1 + E.a3();
    lambda = (3 * x1 * x1 + 2 * E.a2() * x1 + E.a4() - E.a1() * y1) / den;
    nu = (-x1 * x1 * x1 + E.a4() * x1 + 2 * E.a6() - E.a3() * y1) / den;
  } else {
    lambda = (y2 - y1) / (x2 - x1);
    nu = (y1 * x2 - y2 * x1) / (x2 - x1);
  }
  Rational x3 = lambda * lambda + E.a1() * lambda - E.a2() - x1 - x2;
  Rational y3 = -(lambda + E.a1()) * x3 - nu - E.a3();
  return CurvePoint::affine(std::move(x3), std::move(y3));
}

PointMultiples point_multiples(const CurveParams& E, std::size_t n_max) {
  PointMultiples out;
  const CurvePoint P = CurvePoint::affine(0, 0);
  CurvePoint cur = P;
  for (std::size_t k = 1; k <= n_max; ++k) {
    if (cur.is_infinity()) {
      out.torsion_order = k;
      break;
    }
    out.points.push_back(cur);
    cur = point_add(E, cur, P);
  }
  return out;
}

std::pair<Series, Series> solve_for_y(const CurveParams& E, std::size_t order) {
  // y^2 - (1 + a x) y - (x^3 - b x^2 - c x) = 0
  const Rational& a = E.a();
  const Rational& b = E.b();
  const Rational& c = E.c();
  const Series radicand = Series::polynomial({1, 2 * (a - 2 * c), a * a - 4 * b, 4}, order);
  const Series root = ps_sqrt(radicand);
  const Series linear = Series::polynomial({1, a}, order);
  Series y1 = (linear - root) * Rational(1, 2);
  Series y2 = (linear + root) * Rational(1, 2);
  return {std::move(y1), std::move(y2)};
}

EDSSequence eds(const CurveParams& E, std::size_t n_max) {
  // Division polynomials at (0,0): psi_2 = 2y + a1 x + a3 = a3, psi_3 = b8,
  // psi_4 = psi_2 (b4 b8 - b6^2); then the standard doubling formulas.
  std::vector<Rational> W(std::max<std::size_t>(n_max + 1, 5));
  const Rational psi2 = E.a3();
  W[0] = 0;
  W[1] = 1;
  W[2] = psi2;
  W[3] = E.b8();
  W[4] = psi2 * (E.b4() * E.b8() - E.b6() * E.b6());
  for (std::size_t m = 5; m <= n_max; ++m) {
    const std::size_t k = m / 2;
    if (m % 2 == 1) {
      W[m] = W[k + 2] * W[k] * W[k] * W[k] - W[k - 1] * W[k + 1] * W[k + 1] * W[k + 1];
    } else {
      W[m] = (W[k + 2] * W[k - 1] * W[k - 1] - W[k - 2] * W[k + 1] * W[k + 1]) * W[k] / psi2;
    }
  }
  W.resize(n_max + 1);
  return {std::move(W)};
}

}  // namespace ecr
