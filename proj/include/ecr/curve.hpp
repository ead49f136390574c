#pragma once

#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

#include "ecr/rational.hpp"
#include "ecr/series.hpp"

namespace ecr {

/// The curve y^2 - a x y - y = x^3 - b x^2 - c x, i.e. the Weierstrass model
/// with a1 = -a, a2 = -b, a3 = -1, a4 = -c, a6 = 0. P = (0,0) always lies on it.
class CurveParams {
 public:
  const Rational& a() const noexcept { return a_; }
  const Rational& b() const noexcept { return b_; }
  const Rational& c() const noexcept { return c_; }

  Rational a1() const { return -a_; }
  Rational a2() const { return -b_; }
  Rational a3() const { return -1; }
  Rational a4() const { return -c_; }
  Rational a6() const { return 0; }

  const Rational& b2() const noexcept { return b2_; }
  const Rational& b4() const noexcept { return b4_; }
  const Rational& b6() const noexcept { return b6_; }
  const Rational& b8() const noexcept { return b8_; }
  const Rational& discriminant() const noexcept { return disc_; }

  friend bool operator==(const CurveParams& l, const CurveParams& r) {
    return l.a_ == r.a_ && l.b_ == r.b_ && l.c_ == r.c_;
  }

  friend CurveParams curve_new(const Rational& a, const Rational& b, const Rational& c);

 private:
  CurveParams() = default;

  Rational a_, b_, c_;
  Rational b2_, b4_, b6_, b8_, disc_;
};

/// Weierstrass discriminant of the (a,b,c) model; zero means singular.
Rational curve_discriminant(const Rational& a, const Rational& b, const Rational& c);

/// Validates nonsingularity (Errc::SingularCurve).
CurveParams curve_new(const Rational& a, const Rational& b, const Rational& c);

class CurvePoint {
 public:
  static CurvePoint infinity() { return CurvePoint(); }
  static CurvePoint affine(Rational x, Rational y) { return CurvePoint(std::move(x), std::move(y)); }

  bool is_infinity() const noexcept { return !xy_.has_value(); }
  const Rational& x() const;
  const Rational& y() const;

  friend bool operator==(const CurvePoint&, const CurvePoint&) = default;

 private:
  CurvePoint() = default;
  CurvePoint(Rational x, Rational y) : xy_(std::pair{std::move(x), std::move(y)}) {}

  std::optional<std::pair<Rational, Rational>> xy_;
};

bool on_curve(const CurveParams& curve, const CurvePoint& p);

CurvePoint point_negate(const CurveParams& curve, const CurvePoint& p);

/// Chord-tangent addition; throws Errc::PointNotOnCurve for foreign points.
CurvePoint point_add(const CurveParams& curve, const CurvePoint& p, const CurvePoint& q);

struct PointMultiples {
  std::vector<CurvePoint> points;          // points[k-1] = kP, all affine
  std::optional<std::size_t> torsion_order;  // set when torsion_order * P = infinity
};

/// [1P, 2P, ..., n_max P] by repeated addition, stopping early at torsion.
PointMultiples point_multiples(const CurveParams& curve, std::size_t n_max);

/// The two series roots in x of the curve equation regarded as a quadratic in
/// y: y1 = 0 + c x + ..., y2 = 1 + (a - c) x + ...
std::pair<Series, Series> solve_for_y(const CurveParams& curve, std::size_t order);

/// W_n = psi_n(0,0) for n = 0..n_max, from division polynomials.
struct EDSSequence {
  std::vector<Rational> terms;
};

EDSSequence eds(const CurveParams& curve, std::size_t n_max);

}  // namespace ecr
