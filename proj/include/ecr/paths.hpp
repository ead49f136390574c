#pragma once

#include <cstddef>

#include "ecr/curve.hpp"
#include "ecr/riordan.hpp"

namespace ecr {

/// A-matrix of the Bell array (g, x g) derived from the curve:
/// (2(c-1) - a, a(c-1) - b - (c-1)^2, a - 2c + 1, 1).
AMatrix g_family_params(const CurveParams& curve);

/// A-matrix of (gamma, x gamma): (a - 2c, ac - b - c^2, 0, 1).
AMatrix gamma_family_params(const CurveParams& curve);

/// Five-step set for g. The origin override alpha + gamma equals g_1 (= -1
/// for every curve in the family).
StepSet stepset_for_g(const CurveParams& curve);

/// {(1,1):1, (1,0):a-2c, (2,0):ac-b-c^2, (2,-1):1}; no override.
StepSet stepset_for_gamma(const CurveParams& curve);

/// Step set of the r-th binomial transform of g.
StepSet stepset_orbit(const CurveParams& curve, long r);

/// Weighted path counts t[n][k] from (0,0) to (n,k) staying at height >= 0,
/// for n < n_rows. Steps need 1 <= dx and dy <= dx (Errc::InvalidStepSet).
Triangle dp_count(const StepSet& steps, std::size_t n_rows);

/// Largest n accepted by brute_force_count.
inline constexpr std::size_t kBruteForceMaxN = 14;

/// Independent enumeration of every step sequence to (n,k); n <= 14
/// (Errc::SearchSpaceTooLarge).
Rational brute_force_count(const StepSet& steps, std::size_t n, std::size_t k);

/// All heights k = 0..n of column n in one enumeration pass.
std::vector<Rational> brute_force_row(const StepSet& steps, std::size_t n);

}  // namespace ecr
