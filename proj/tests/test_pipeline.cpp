#include <doctest.h>

#include <algorithm>

#include "ecr/error.hpp"
#include "ecr/paths.hpp"
#include "ecr/pipeline.hpp"
#include "ecr/transforms.hpp"
#include "support.hpp"

using namespace ecr;
using namespace ecr::test;

namespace {

Errc code_of(auto&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("expected an ecr::Error");
  return Errc::ParseError;
}

}  // namespace

TEST_CASE("derive_g") {
  CHECK(prefix(derive_g(E1(), 13), 13) == Q({1, -1, 3, -8, 22, -59, 155, -396, 978, -2310, 5122, -10260, 16752}));
  CHECK(prefix(derive_g(Ex2(), 11), 11) == Q({1, -1, 3, 2, 17, 51, 185, 664, 2333, 8360, 29717}));
  CHECK(derive_g(E1(), 32).order() == 32);
  CHECK(derive_g(E1(), 1).vector() == Q({1}));
  CHECK(derive_g(E1(), 0).order() == 0);
  for (const auto& E : random_curves(20, 4, 2)) CHECK(derive_g(E, 4)[0] == 1);
}

TEST_CASE("closed forms") {
  for (const auto& E : paper_curves()) {
    CHECK(derive_g(E, 24) == closed_form_g(E, 24));
    CHECK(derive_gamma(E, 24) == closed_form_gamma(E, 24));
  }
  for (const auto& E : random_curves(20, 3, 8)) {
    CHECK(derive_g(E, 16) == closed_form_g(E, 16));
    CHECK(derive_gamma(E, 16) == closed_form_gamma(E, 16));
  }

  // (1+2x)/(1+3x) C(x^3 (1+2x)/(1+3x)^2), expanded with independent arithmetic
  const std::size_t n = 12;
  const Series num = Series::polynomial(Q({1, 2}), n);
  const Series den = Series::polynomial(Q({1, 3}), n);
  const Series inner = ps_div(num, ps_mul(den, den)).shifted_up(3).truncated(n);
  CHECK(closed_form_g(E1(), n) == ps_mul(ps_div(num, den), ps_compose(catalan_gf(n), inner)));
}

TEST_CASE("derive_gamma") {
  CHECK(prefix(derive_gamma(E1(), 11), 11) == Q({1, 1, 3, 6, 14, 33, 79, 194, 482, 1214, 3090}));
  CHECK(prefix(derive_gamma(Ex2Variant(), 9), 9) == Q({1, 4, 18, 81, 368, 1686, 7786, 36224, 169700}));
  CHECK(prefix(derive_gamma(A023431Curve(), 11), 11) == Q({1, 1, 1, 2, 4, 7, 13, 26, 52, 104, 212}));
  // A023431 is the binomial transform of g by -1 on this curve.
  CHECK(derive_gamma(A023431Curve(), 16) == ps_binomial(derive_g(A023431Curve(), 16), 2));
}

TEST_CASE("u_n and v_n formulas") {
  CHECK(u_n_formula(E1(), 0) == 1);
  CHECK(v_n_formula(E1(), 0) == 1);
  for (const auto& E : paper_curves()) {
    const Series g = derive_g(E, 15);
    const Series gam = derive_gamma(E, 15);
    for (std::size_t n = 0; n < 15; ++n) {
      CHECK(u_n_formula(E, n) == g[n]);
      CHECK(v_n_formula(E, n) == gam[n]);
    }
  }
  // a - 2c = 0 puts 0^0 into play: (2, b, 1)
  const auto E = curve_new(2, 3, 1);
  const Series gam = derive_gamma(E, 10);
  for (std::size_t n = 0; n < 10; ++n) CHECK(v_n_formula(E, n) == gam[n]);
}

TEST_CASE("appendix forms") {
  CHECK(appendix_g({-3, 0, 2, 1}, 13) == derive_g(E1(), 13));
  CHECK(prefix(appendix_g({1, 2, 0, 1}, 11), 11) == Q({1, 1, 3, 6, 14, 33, 79, 194, 482, 1214, 3090}));
  CHECK(appendix_g({0, 0, 0, 0}, 6) == Series::constant(1, 6));

  for (const AMatrix& am : {AMatrix{-3, 0, 2, 1}, AMatrix{2, 5, -3, 1}, AMatrix{1, 2, 0, 1}, AMatrix{0, 0, 0, 3},
                            AMatrix{Rational(1, 2), -1, Rational(2, 3), 2}}) {
    const Series u = appendix_u(am, 16);
    CHECK(u[0] == 0);
    CHECK(verify_kernel(u, am));
    CHECK(agree(u.shifted_down(1), appendix_g(am, 16), 15));
  }
  CHECK(code_of([] { appendix_u({1, 1, 1, 0}, 8); }) == Errc::ZeroConstantTerm);
}

TEST_CASE("orbit_params") {
  CHECK(orbit_params(E1(), 0) == AMatrix{-3, 0, 2, 1});
  CHECK(orbit_params(E1(), 2) == AMatrix{1, 2, 0, 1});
  CHECK(orbit_params(E1(), 6) == AMatrix{9, -18, -4, 1});
  // The orbit at a - 2c + 1 is the gamma family plus the (2,1) weight 0.
  for (const auto& E : paper_curves()) {
    const AMatrix am = orbit_params(E, E.a() - 2 * E.c() + 1);
    CHECK(am == gamma_family_params(E));
  }
}

TEST_CASE("full_verify") {
  for (const auto& E : {E1(), Ex2(), Ex2Variant(), A023431Curve()}) {
    const auto report = full_verify(E, 24);
    for (const auto& c : report.checks) {
      INFO(c.name << ": " << c.detail);
      CHECK(c.pass);
    }
    CHECK(report.all_pass());
    CHECK(report.checks.size() >= 15);
  }
  const auto small = full_verify(E1(), 4);
  CHECK_FALSE(small.all_pass());
}
