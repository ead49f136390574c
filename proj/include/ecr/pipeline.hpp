#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "ecr/curve.hpp"
#include "ecr/riordan.hpp"
#include "ecr/series.hpp"

namespace ecr {

/// g from the curve by reversion: y1 from solve_for_y, z = (y1 - c x)/x^2,
/// G = x/(1 - x - x^2 z), g = revert(G)/x. Returns exactly `order` terms.
Series derive_g(const CurveParams& curve, std::size_t order);

/// (1 + (a-2c+1)x)/D(x) * C(x^3 (1 + (a-2c+1)x)/D(x)^2) with
/// D(x) = 1 - (2(c-1) - a) x - (a(c-1) - b - (c-1)^2) x^2.
Series closed_form_g(const CurveParams& curve, std::size_t order);

/// Binomial transform of derive_g by a - 2c + 1.
Series derive_gamma(const CurveParams& curve, std::size_t order);

/// 1/D(x) * C(x^3/D(x)^2) with D(x) = 1 - (a-2c) x - (ac-b-c^2) x^2.
Series closed_form_gamma(const CurveParams& curve, std::size_t order);

/// Coefficient n of g from the Catalan triple sum, evaluated with the
/// g-family A-matrix weights. Throws Errc::FormulaDomainError if a term with
/// nonzero multiplier needs a negative power.
Rational u_n_formula(const CurveParams& curve, std::size_t n);

/// Coefficient n of gamma from the Catalan double sum.
Rational v_n_formula(const CurveParams& curve, std::size_t n);

/// (1 + gamma x)/(1 - alpha x - beta x^2) * C(delta x^3 (1 + gamma x)/(1 - alpha x - beta x^2)^2).
Series appendix_g(const AMatrix& am, std::size_t order);

/// The quadratic root u = (1 - alpha x - beta x^2 - sqrt(R(x)))/(2 delta x^2)
/// of the kernel equation; needs delta != 0.
Series appendix_u(const AMatrix& am, std::size_t order);

/// g-family weights after r binomial transforms.
AMatrix orbit_params(const CurveParams& curve, const Rational& r);

struct CheckResult {
  std::string name;
  bool pass = false;
  std::string detail;
};

struct VerifyReport {
  CurveParams curve;
  std::size_t order;
  std::vector<CheckResult> checks;

  bool all_pass() const;
};

/// Runs every cross-route identity on one curve; failures become report
/// entries, never exceptions.
VerifyReport full_verify(const CurveParams& curve, std::size_t order);

}  // namespace ecr
