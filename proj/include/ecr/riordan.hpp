#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "ecr/rational.hpp"
#include "ecr/series.hpp"

namespace ecr {

/// Lower-triangular matrix stored by rows; row n has n + 1 entries.
using Triangle = std::vector<std::vector<Rational>>;

Triangle identity_triangle(std::size_t n_rows);
/// Numeric product of two lower-triangular matrices, first min(rows) rows.
Triangle triangle_product(const Triangle& lhs, const Triangle& rhs);

/// Riordan array (g, f): t[n][k] = [x^n] g f^k.
struct RiordanArray {
  Series g;
  Series f;
  Triangle rows;
};

/// Weights of the two-row recurrence
///   t(n,k) = t(n-1,k-1) + gamma t(n-2,k-1) + alpha t(n-1,k) + beta t(n-2,k) + delta t(n-2,k+1)
/// equivalently the 2x3 array [[gamma, beta, delta], [1, alpha, 0]].
struct AMatrix {
  Rational alpha, beta, gamma, delta;

  friend bool operator==(const AMatrix&, const AMatrix&) = default;
};

/// The 2x3 layout [[gamma, beta, delta], [1, alpha, 0]].
std::vector<std::vector<Rational>> a_matrix_array(const AMatrix& am);

/// Parameters of the r-th binomial transform of the array generated by `am`:
/// (alpha + 2r, beta - r(alpha + r), gamma - r, delta).
AMatrix transport_params(const AMatrix& am, const Rational& r);

struct Step {
  int dx;
  int dy;
  Rational weight;

  friend bool operator==(const Step&, const Step&) = default;
};

/// Weighted multiset of lattice steps. origin_override, when set, replaces
/// the weight of a first horizontal step (1,0) taken from the origin.
struct StepSet {
  std::vector<Step> steps;
  std::optional<Rational> origin_override;

  /// Total weight of steps (dx, dy); zero if absent.
  Rational weight(int dx, int dy) const;

  friend bool operator==(const StepSet&, const StepSet&) = default;
};

/// Step set {(1,1):1, (1,0):alpha, (2,0):beta, (2,1):gamma, (2,-1):delta}.
StepSet stepset_from_amatrix(const AMatrix& am, std::optional<Rational> origin_override = std::nullopt);

/// Requires g_0 = 1, f_0 = 0, f_1 = 1 and orders >= n_rows
/// (Errc::InsufficientOrder / Errc::InvalidStepSet otherwise).
RiordanArray riordan_build(const Series& g, const Series& f, std::size_t n_rows);

/// (g1, f1) * (g2, f2) = (g1 (g2 o f1), f2 o f1).
RiordanArray riordan_multiply(const RiordanArray& lhs, const RiordanArray& rhs);

Triangle riordan_from_recurrence(const AMatrix& am, std::size_t n_rows,
                                 const std::optional<Rational>& t10_override = std::nullopt);

/// Whether (g, -x g) squares to the identity on n_rows rows.
bool pseudo_involution_check(const Series& g, std::size_t n_rows);

/// Whether u/x = 1 + gamma x + alpha u + beta u x + delta u^2 x to the order of u.
bool verify_kernel(const Series& u, const AMatrix& am);

}  // namespace ecr
