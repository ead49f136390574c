#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "ecr/curve.hpp"
#include "ecr/riordan.hpp"
#include "ecr/series.hpp"

namespace ecr {

/// Determinant by fraction-free (Bareiss) elimination with row pivoting.
Rational bareiss_determinant(std::vector<std::vector<Rational>> m);

/// h_n = det(seq[i+j]) for 0 <= i,j <= n, n = 0..count-1.
/// Needs seq.size() >= 2 count - 1 (Errc::InsufficientTerms).
std::vector<Rational> hankel_transform(const std::vector<Rational>& seq, std::size_t count);

/// Parameters of a_n a_(n-4) = r a_(n-1) a_(n-3) + s a_(n-2)^2.
struct SomosParams {
  Rational r, s;

  friend bool operator==(const SomosParams&, const SomosParams&) = default;
};

/// (1, -ac + b + c^2).
SomosParams somos_params(const CurveParams& curve);
/// (delta^2, delta^2 (alpha gamma - beta + gamma^2)).
SomosParams somos_params_am(const AMatrix& am);

struct SomosCheck {
  bool pass = true;
  std::vector<std::size_t> checked;         // indices n where the relation was tested
  std::vector<std::size_t> zero_divisor;    // indices skipped because a_(n-4) = 0
  std::optional<std::size_t> first_failure;
};

/// Checks every n >= 4 with a_(n-4) != 0; zero divisors are skipped and
/// reported rather than raised. Needs at least 5 terms (Errc::InsufficientTerms).
SomosCheck somos_verify(const std::vector<Rational>& seq, const SomosParams& p);

/// g = 1/(1 - b_0 x - lam_1 x^2/(1 - b_1 x - lam_2 x^2/(...))).
/// b may carry one more entry than lam (the innermost b_depth).
struct JFraction {
  std::vector<Rational> b;
  std::vector<Rational> lam;

  std::size_t depth() const noexcept { return lam.size(); }
  /// Number of series coefficients the stored levels determine exactly.
  std::size_t valid_order() const noexcept;

  friend bool operator==(const JFraction&, const JFraction&) = default;
};

struct JFractionExtraction {
  JFraction fraction;
  /// Set when lam_k = 0 stopped extraction; the value is k.
  std::optional<std::size_t> zero_lambda_at;
};

/// Peels g = 1/(1 - b_0 x - lam_1 x^2 g_1) up to `depth` times.
/// Needs g_0 = 1 and g.order() >= 2 depth + 1.
JFractionExtraction jfrac_extract(const Series& g, std::size_t depth);

/// J-fraction of the shift-th binomial transform of the curve's g read off
/// the multiples of P: lam_j = -[(j+1)P]_1 and
/// b_j = ([(j+2)P]_2 - 1)/[(j+2)P]_1 - (a - c) + shift - 1.
JFraction jfrac_from_points(const CurveParams& curve, const Rational& shift, std::size_t depth);

/// Bottom-up evaluation to `order` coefficients (Errc::InsufficientDepth when
/// order exceeds valid_order()).
Series jfrac_eval(const JFraction& jf, std::size_t order);

/// prod_{k=0..n} (-[(k+2)P]_1)^(n-k); with signed = false the sign flip is
/// dropped, giving the bare coordinate product.
Rational hankel_point_product(const CurveParams& curve, std::size_t n, bool signed_variant = true);

}  // namespace ecr
