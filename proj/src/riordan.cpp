#include "ecr/riordan.hpp"

#include <algorithm>
#include <string>

#include "ecr/error.hpp"

namespace ecr {

Triangle identity_triangle(std::size_t n_rows) {
  Triangle t(n_rows);
  for (std::size_t n = 0; n < n_rows; ++n) {
    t[n].assign(n + 1, Rational(0));
    t[n][n] = 1;
  }
  return t;
}

Triangle triangle_product(const Triangle& lhs, const Triangle& rhs) {
  const std::size_t n_rows = std::min(lhs.size(), rhs.size());
  Triangle out(n_rows);
  for (std::size_t n = 0; n < n_rows; ++n) {
    out[n].assign(n + 1, Rational(0));
    for (std::size_t k = 0; k <= n; ++k)
      for (std::size_t j = k; j <= n; ++j) out[n][k] += lhs[n][j] * rhs[j][k];
  }
  return out;
}

std::vector<std::vector<Rational>> a_matrix_array(const AMatrix& am) {
  return {{am.gamma, am.beta, am.delta}, {Rational(1), am.alpha, Rational(0)}};
}

AMatrix transport_params(const AMatrix& am, const Rational& r) {
  return {am.alpha + 2 * r, am.beta - r * (am.alpha + r), am.gamma - r, am.delta};
}

Rational StepSet::weight(int dx, int dy) const {
  Rational w = 0;
  for (const Step& s : steps)
    if (s.dx == dx && s.dy == dy) w += s.weight;
  return w;
}

StepSet stepset_from_amatrix(const AMatrix& am, std::optional<Rational> origin_override) {
  StepSet s;
  s.steps = {{1, 1, Rational(1)}, {1, 0, am.alpha}, {2, 0, am.beta}, {2, 1, am.gamma}, {2, -1, am.delta}};
  s.origin_override = std::move(origin_override);
  return s;
}

RiordanArray riordan_build(const Series& g, const Series& f, std::size_t n_rows) {
  if (g.order() < n_rows || f.order() < n_rows)
    throw Error(Errc::InsufficientOrder, "riordan_build needs g and f to order " + std::to_string(n_rows));
  if (n_rows > 0 && g[0] == 0) throw Error(Errc::ZeroConstantTerm, "riordan_build needs g_0 != 0");
  if (n_rows > 0 && f[0] != 0) throw Error(Errc::NonzeroInnerConstant, "riordan_build needs f_0 = 0");

  RiordanArray R{g, f, Triangle(n_rows)};
  for (std::size_t n = 0; n < n_rows; ++n) R.rows[n].assign(n + 1, Rational(0));
  const Series gt = g.truncated(n_rows);
  const Series ft = f.truncated(n_rows);
  Series column = gt;
  for (std::size_t k = 0; k < n_rows; ++k) {
    for (std::size_t n = k; n < n_rows; ++n) R.rows[n][k] = column[n];
    column = ps_mul(column, ft);
  }
  return R;
}

RiordanArray riordan_multiply(const RiordanArray& lhs, const RiordanArray& rhs) {
  const std::size_t n_rows = std::min(lhs.rows.size(), rhs.rows.size());
  const Series g = ps_mul(lhs.g, ps_compose(rhs.g, lhs.f));
  const Series f = ps_compose(rhs.f, lhs.f);
  return riordan_build(g, f, n_rows);
}

Triangle riordan_from_recurrence(const AMatrix& am, std::size_t n_rows, const std::optional<Rational>& t10_override) {
  Triangle t(n_rows);
  auto at = [&t](long n, long k) -> Rational {
    if (n < 0 || k < 0 || k > n) return 0;
    return t[static_cast<std::size_t>(n)][static_cast<std::size_t>(k)];
  };
  for (std::size_t n = 0; n < n_rows; ++n) {
    t[n].assign(n + 1, Rational(0));
    const long ln = static_cast<long>(n);
    for (long k = 0; k <= ln; ++k) {
      if (n == 0) {
        t[0][0] = 1;
        continue;
      }
      if (n == 1 && k == 0 && t10_override) {
        t[1][0] = *t10_override;
        continue;
      }
      t[n][static_cast<std::size_t>(k)] = at(ln - 1, k - 1) + am.gamma * at(ln - 2, k - 1) + am.alpha * at(ln - 1, k) +
                                          am.beta * at(ln - 2, k) + am.delta * at(ln - 2, k + 1);
    }
  }
  return t;
}

bool pseudo_involution_check(const Series& g, std::size_t n_rows) {
  if (g.empty() || g[0] != 1) throw Error(Errc::ZeroConstantTerm, "pseudo-involution check needs g_0 = 1");
  if (g.order() < n_rows) throw Error(Errc::InsufficientOrder, "g too short for requested rows");
  const Series f = -g.truncated(n_rows).shifted_up(1).truncated(n_rows);
  const RiordanArray M = riordan_build(g.truncated(n_rows), f, n_rows);
  return riordan_multiply(M, M).rows == identity_triangle(n_rows);
}

bool verify_kernel(const Series& u, const AMatrix& am) {
  if (u.empty() || u[0] != 0) throw Error(Errc::NonzeroInnerConstant, "kernel check needs u_0 = 0");
  const std::size_t n = u.order();
  const Series lhs = u.shifted_down(1);
  const Series rhs = Series::polynomial({Rational(1), am.gamma}, n + 1) + am.alpha * u + am.beta * u.shifted_up(1) +
                     am.delta * ps_mul(u, u).shifted_up(1);
  return agree(lhs, rhs, n - 1) && lhs.order() == n - 1;
}

}  // namespace ecr
