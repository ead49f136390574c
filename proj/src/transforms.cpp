#include "ecr/transforms.hpp"

#include <string>
#include <utility>

#include "ecr/error.hpp"

namespace ecr {

namespace {

// Bareiss on an integer matrix; destroys m.
Integer bareiss_integer(std::vector<std::vector<Integer>>& m) {
  const std::size_t n = m.size();
  if (n == 0) return 1;
  int sign = 1;
  Integer prev = 1;
  Integer t;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (m[k][k] == 0) {
      std::size_t p = k + 1;
      while (p < n && m[p][k] == 0) ++p;
      if (p == n) return 0;
      std::swap(m[k], m[p]);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        t = m[i][j] * m[k][k] - m[i][k] * m[k][j];
        mpz_divexact(m[i][j].get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
      }
      m[i][k] = 0;
    }
    prev = m[k][k];
  }
  return sign * m[n - 1][n - 1];
}

}  // namespace

Rational bareiss_determinant(std::vector<std::vector<Rational>> m) {
  // Clear denominators row by row, then eliminate over Z.
  const std::size_t n = m.size();
  std::vector<std::vector<Integer>> z(n);
  Integer scale = 1;
  for (std::size_t i = 0; i < n; ++i) {
    if (m[i].size() != n) throw Error(Errc::InsufficientTerms, "determinant of a non-square matrix");
    Integer l = 1;
    for (const Rational& q : m[i]) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), q.get_den_mpz_t());
    scale *= l;
    z[i].resize(n);
    for (std::size_t j = 0; j < n; ++j) z[i][j] = m[i][j].get_num() * (l / m[i][j].get_den());
  }
  Rational det(bareiss_integer(z), scale);
  det.canonicalize();
  return det;
}

std::vector<Rational> hankel_transform(const std::vector<Rational>& seq, std::size_t count) {
  if (count == 0) return {};
  if (seq.size() < 2 * count - 1)
    throw Error(Errc::InsufficientTerms, "hankel_transform of " + std::to_string(count) + " terms needs " +
                                             std::to_string(2 * count - 1) + " inputs, got " +
                                             std::to_string(seq.size()));
  std::vector<Rational> h(count);
  for (std::size_t n = 0; n < count; ++n) {
    std::vector<std::vector<Rational>> m(n + 1, std::vector<Rational>(n + 1));
    for (std::size_t i = 0; i <= n; ++i)
      for (std::size_t j = 0; j <= n; ++j) m[i][j] = seq[i + j];
    h[n] = bareiss_determinant(std::move(m));
  }
  return h;
}

SomosParams somos_params(const CurveParams& E) {
  return {Rational(1), -E.a() * E.c() + E.b() + E.c() * E.c()};
}

SomosParams somos_params_am(const AMatrix& am) {
  const Rational d2 = am.delta * am.delta;
  return {d2, d2 * (am.alpha * am.gamma - am.beta + am.gamma * am.gamma)};
}

SomosCheck somos_verify(const std::vector<Rational>& a, const SomosParams& p) {
  if (a.size() < 5) throw Error(Errc::InsufficientTerms, "somos_verify needs at least 5 terms");
  SomosCheck out;
  for (std::size_t n = 4; n < a.size(); ++n) {
    if (a[n - 4] == 0) {
      out.zero_divisor.push_back(n);
      continue;
    }
    out.checked.push_back(n);
    if (a[n] * a[n - 4] != p.r * a[n - 1] * a[n - 3] + p.s * a[n - 2] * a[n - 2]) {
      out.pass = false;
      if (!out.first_failure) out.first_failure = n;
    }
  }
  return out;
}

std::size_t JFraction::valid_order() const noexcept {
  return 2 * lam.size() + (b.size() > lam.size() ? 2 : 1);
}

JFractionExtraction jfrac_extract(const Series& g, std::size_t depth) {
  if (g.empty() || g[0] != 1) throw Error(Errc::NonUnitConstant, "J-fraction extraction needs g_0 = 1");
  if (g.order() < 2 * depth + 1)
    throw Error(Errc::InsufficientOrder, "J-fraction of depth " + std::to_string(depth) + " needs order " +
                                             std::to_string(2 * depth + 1));
  JFractionExtraction out;
  Series cur = g;
  for (std::size_t j = 0; j < depth; ++j) {
    const Series inv = ps_inverse(cur);
    out.fraction.b.push_back(-inv[1]);
    // (1 - b x - 1/cur) / x^2 = lam * next
    std::vector<Rational> rest(inv.order() - 2);
    for (std::size_t i = 0; i < rest.size(); ++i) rest[i] = -inv[i + 2];
    const Rational lam = rest[0];
    if (lam == 0) {
      out.zero_lambda_at = j + 1;
      return out;
    }
    out.fraction.lam.push_back(lam);
    cur = Series(std::move(rest)) * (1 / lam);
  }
  if (cur.order() >= 2) out.fraction.b.push_back(cur[1]);
  return out;
}

JFraction jfrac_from_points(const CurveParams& E, const Rational& shift, std::size_t depth) {
  const PointMultiples mult = point_multiples(E, depth + 1);
  if (mult.points.size() < depth + 1)
    throw Error(Errc::TorsionDepth, "P has order " + std::to_string(*mult.torsion_order) +
                                        ", too small for J-fraction depth " + std::to_string(depth));
  const Rational offset = -(E.a() - E.c()) + shift - 1;
  JFraction jf;
  for (std::size_t j = 0; j < depth; ++j) {
    const CurvePoint& Q = mult.points[j + 1];  // (j+2)P
    if (Q.x() == 0) throw Error(Errc::ZeroXCoordinate, std::to_string(j + 2) + "P has zero x coordinate");
    jf.b.push_back((Q.y() - 1) / Q.x() + offset);
    jf.lam.push_back(-Q.x());
  }
  return jf;
}

Series jfrac_eval(const JFraction& jf, std::size_t order) {
  if (order > jf.valid_order())
    throw Error(Errc::InsufficientDepth, "J-fraction determines only " + std::to_string(jf.valid_order()) +
                                             " coefficients, requested " + std::to_string(order));
  if (order == 0) return Series();
  const std::size_t d = jf.depth();
  Series tail = Series::constant(1, order);
  for (std::size_t j = d + 1; j-- > 0;) {
    Series den = Series::constant(1, order);
    if (j < jf.b.size() && order > 1) den[1] -= jf.b[j];
    if (j < d) den -= jf.lam[j] * tail.shifted_up(2).truncated(order);
    tail = ps_inverse(den);
  }
  return tail;
}

Rational hankel_point_product(const CurveParams& E, std::size_t n, bool signed_variant) {
  if (n == 0) return 1;
  const PointMultiples mult = point_multiples(E, n + 1);
  if (mult.points.size() < n + 1)
    throw Error(Errc::TorsionDepth, "P has order " + std::to_string(*mult.torsion_order) + ", too small for n = " +
                                        std::to_string(n));
  Rational prod = 1;
  for (std::size_t k = 0; k < n; ++k) {
    const Rational base = signed_variant ? Rational(-mult.points[k + 1].x()) : mult.points[k + 1].x();
    prod *= pow(base, static_cast<long>(n - k));
  }
  return prod;
}

}  // namespace ecr
