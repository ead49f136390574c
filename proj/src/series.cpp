#include "ecr/series.hpp"

#include <algorithm>
#include <string>

#include "ecr/error.hpp"

namespace ecr {

Series::Series(std::initializer_list<long> coeffs) {
  coeffs_.reserve(coeffs.size());
  for (long c : coeffs) coeffs_.emplace_back(c);
}

Series Series::polynomial(std::vector<Rational> p, std::size_t order) {
  if (p.size() > order) {
    for (std::size_t i = order; i < p.size(); ++i)
      if (p[i] != 0) throw Error(Errc::InsufficientOrder, "polynomial degree exceeds requested order");
  }
  p.resize(order);
  return Series(std::move(p));
}

Series Series::constant(const Rational& c, std::size_t order) {
  std::vector<Rational> v(order);
  if (order) v[0] = c;
  return Series(std::move(v));
}

Series Series::x(std::size_t order) {
  std::vector<Rational> v(order);
  if (order > 1) v[1] = 1;
  return Series(std::move(v));
}

const Rational& Series::at(std::size_t i) const {
  if (i >= coeffs_.size())
    throw Error(Errc::InsufficientOrder,
                "coefficient " + std::to_string(i) + " beyond order " + std::to_string(coeffs_.size()));
  return coeffs_[i];
}

Series Series::truncated(std::size_t order) const {
  if (order >= coeffs_.size()) return *this;
  return Series(std::vector<Rational>(coeffs_.begin(), coeffs_.begin() + static_cast<std::ptrdiff_t>(order)));
}

Series Series::shifted_up(std::size_t k) const {
  std::vector<Rational> v(k);
  v.insert(v.end(), coeffs_.begin(), coeffs_.end());
  return Series(std::move(v));
}

Series Series::shifted_down(std::size_t k) const {
  if (k > coeffs_.size()) throw Error(Errc::InsufficientOrder, "shift exceeds order");
  for (std::size_t i = 0; i < k; ++i)
    if (coeffs_[i] != 0)
      throw Error(Errc::ZeroConstantTerm, "series not divisible by x^" + std::to_string(k));
  return Series(std::vector<Rational>(coeffs_.begin() + static_cast<std::ptrdiff_t>(k), coeffs_.end()));
}

Series Series::operator-() const {
  Series r(*this);
  for (auto& c : r.coeffs_) c = -c;
  return r;
}

Series& Series::operator+=(const Series& rhs) {
  coeffs_.resize(std::min(coeffs_.size(), rhs.order()));
  for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] += rhs[i];
  return *this;
}

Series& Series::operator-=(const Series& rhs) {
  coeffs_.resize(std::min(coeffs_.size(), rhs.order()));
  for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] -= rhs[i];
  return *this;
}

Series& Series::operator*=(const Rational& s) {
  for (auto& c : coeffs_) c *= s;
  return *this;
}

bool agree(const Series& a, const Series& b, std::size_t n) {
  n = std::min({n, a.order(), b.order()});
  for (std::size_t i = 0; i < n; ++i)
    if (a[i] != b[i]) return false;
  return true;
}

namespace {

// Product truncated to `order` terms.
Series mul_to(const Series& f, const Series& g, std::size_t order) {
  std::vector<Rational> out(order);
  std::vector<std::size_t> nz;
  for (std::size_t i = 0; i < std::min(order, f.order()); ++i)
    if (f[i] != 0) nz.push_back(i);
  Rational t;
  for (std::size_t i : nz) {
    for (std::size_t j = 0; i + j < order; ++j) {
      if (g[j] == 0) continue;
      mpq_mul(t.get_mpq_t(), f[i].get_mpq_t(), g[j].get_mpq_t());
      out[i + j] += t;
    }
  }
  return Series(std::move(out));
}

}  // namespace

Series ps_mul(const Series& f, const Series& g) { return mul_to(f, g, std::min(f.order(), g.order())); }

Series operator*(const Series& f, const Series& g) { return ps_mul(f, g); }

Series ps_inverse(const Series& g) {
  if (g.empty() || g[0] == 0) throw Error(Errc::ZeroConstantTerm, "inverse needs a nonzero constant term");
  const std::size_t n = g.order();
  std::vector<Rational> r(n);
  const Rational inv0 = 1 / g[0];
  r[0] = inv0;
  Rational acc;
  for (std::size_t k = 1; k < n; ++k) {
    acc = 0;
    for (std::size_t j = 1; j <= k; ++j)
      if (g[j] != 0) acc += g[j] * r[k - j];
    r[k] = -acc * inv0;
  }
  return Series(std::move(r));
}

Series ps_div(const Series& f, const Series& g) {
  if (g.empty() || g[0] == 0) throw Error(Errc::ZeroConstantTerm, "division by a series with zero constant term");
  const std::size_t n = std::min(f.order(), g.order());
  std::vector<Rational> q(n);
  const Rational inv0 = 1 / g[0];
  Rational acc;
  for (std::size_t k = 0; k < n; ++k) {
    acc = f[k];
    for (std::size_t j = 1; j <= k; ++j)
      if (g[j] != 0) acc -= g[j] * q[k - j];
    q[k] = acc * inv0;
  }
  return Series(std::move(q));
}

Series ps_sqrt(const Series& f) {
  if (f.empty() || f[0] != 1) throw Error(Errc::NonUnitConstant, "square root needs constant term 1");
  const std::size_t n = f.order();
  std::vector<Rational> r(n);
  r[0] = 1;
  Rational acc;
  for (std::size_t k = 1; k < n; ++k) {
    acc = f[k];
    for (std::size_t i = 1; i < k; ++i) acc -= r[i] * r[k - i];
    r[k] = acc / 2;
  }
  return Series(std::move(r));
}

Series ps_compose(const Series& f, const Series& g) {
  if (g.empty() || g[0] != 0) throw Error(Errc::NonzeroInnerConstant, "inner series must have zero constant term");
  const std::size_t n = std::min(f.order(), g.order());
  if (n == 0) return Series();
  // Horner: f_0 + g (f_1 + g (f_2 + ...)), truncated at n throughout.
  Series acc = Series::constant(f[n - 1], n);
  for (std::size_t k = n - 1; k-- > 0;) {
    acc = mul_to(acc, g, n);
    acc[0] += f[k];
  }
  return acc;
}

Series ps_derivative(const Series& f) {
  if (f.order() <= 1) return Series();
  std::vector<Rational> d(f.order() - 1);
  for (std::size_t i = 1; i < f.order(); ++i) d[i - 1] = f[i] * static_cast<unsigned long>(i);
  return Series(std::move(d));
}

namespace {

void require_revertible(const Series& f) {
  if (f.order() < 2 || f[0] != 0 || f[1] != 1)
    throw Error(Errc::NotRevertible, "reversion needs f_0 = 0 and f_1 = 1");
}

}  // namespace

namespace detail {

// [x^k] u = (1/k) [x^(k-1)] (x/f)^k
Series revert_lagrange(const Series& f) {
  require_revertible(f);
  const std::size_t n = f.order();
  const Series h = ps_inverse(f.shifted_down(1));  // order n - 1
  std::vector<Rational> u(n);
  Series power = Series::constant(1, n - 1);
  for (std::size_t k = 1; k < n; ++k) {
    power = mul_to(power, h, n - 1);
    u[k] = power[k - 1] / static_cast<unsigned long>(k);
  }
  return Series(std::move(u));
}

Series revert_newton(const Series& f) {
  require_revertible(f);
  const std::size_t n = f.order();
  const Series x = Series::x(n);
  Series df = ps_derivative(f);
  // The unknown x^n coefficient of f only reaches f' at x^(n-1), and the
  // Newton correction is O(x^2), so padding with zero loses nothing.
  df = Series::polynomial(df.vector(), n);
  Series u = x;
  for (std::size_t valid = 2; valid < 2 * n; valid *= 2) {
    Series residual = ps_compose(f, u) - x;
    if (std::all_of(residual.coeffs().begin(), residual.coeffs().end(), [](const Rational& c) { return c == 0; }))
      break;
    u -= ps_div(residual, ps_compose(df, u));
  }
  return u;
}

}  // namespace detail

Series ps_revert(const Series& f) {
  return f.order() >= 64 ? detail::revert_newton(f) : detail::revert_lagrange(f);
}

Series ps_binomial(const Series& f, const Rational& r) {
  const std::size_t n = f.order();
  std::vector<Rational> rp(n);
  if (n) rp[0] = 1;
  for (std::size_t i = 1; i < n; ++i) rp[i] = rp[i - 1] * r;
  std::vector<Rational> b(n);
  Integer c;
  for (std::size_t m = 0; m < n; ++m) {
    for (std::size_t k = 0; k <= m; ++k) {
      if (f[k] == 0 || rp[m - k] == 0) continue;
      mpz_bin_uiui(c.get_mpz_t(), m, k);
      b[m] += Rational(c) * rp[m - k] * f[k];
    }
  }
  return Series(std::move(b));
}

Series catalan_gf(std::size_t order) {
  std::vector<Rational> c(order);
  Integer cur = 1;
  for (std::size_t k = 0; k < order; ++k) {
    c[k] = cur;
    cur = cur * 2 * (2 * k + 1) / (k + 2);
  }
  return Series(std::move(c));
}

}  // namespace ecr
