#include <doctest.h>

#include "ecr/error.hpp"
#include "ecr/paths.hpp"
#include "ecr/pipeline.hpp"
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

TEST_CASE("step sets from the curve") {
  CHECK(g_family_params(E1()) == AMatrix{-3, 0, 2, 1});
  CHECK(g_family_params(Ex2()) == AMatrix{2, 5, -3, 1});
  CHECK(gamma_family_params(E1()) == AMatrix{1, 2, 0, 1});
  CHECK(gamma_family_params(Ex2Variant()) == AMatrix{4, 2, 0, 1});

  const StepSet s = stepset_for_g(E1());
  CHECK(s.origin_override == std::optional<Rational>(-1));
  CHECK(s.weight(1, 0) == -3);
  CHECK(s.weight(2, 1) == 2);

  const StepSet v = stepset_for_gamma(Ex2Variant());
  CHECK(v.steps.size() == 4);
  CHECK_FALSE(v.origin_override.has_value());
  CHECK(v.weight(1, 1) == 1);
  CHECK(v.weight(1, 0) == 4);
  CHECK(v.weight(2, 0) == 2);
  CHECK(v.weight(2, -1) == 1);

  // The override alpha + gamma is g_1 = -1 on every curve.
  for (const auto& E : random_curves(30, 4, 11)) CHECK(stepset_for_g(E).origin_override == std::optional<Rational>(-1));

  const StepSet o = stepset_orbit(E1(), 6);
  CHECK(o.weight(1, 0) == 9);
  CHECK(o.weight(2, 0) == -18);
  CHECK(o.weight(2, 1) == -4);
  CHECK(o.origin_override == std::optional<Rational>(5));
}

TEST_CASE("dp_count on the variant curve") {
  const StepSet s{{{1, 1, 1}, {1, 0, 4}, {2, 0, 2}, {2, -1, 1}}, std::nullopt};
  CHECK(dp_count(s, 6) == T({{1},
                             {4, 1},
                             {18, 8, 1},
                             {81, 52, 12, 1},
                             {368, 306, 102, 16, 1},
                             {1686, 1708, 739, 168, 20, 1}}));
}

TEST_CASE("dp_count edge cases") {
  CHECK(dp_count(StepSet{}, 0).empty());
  CHECK(dp_count(StepSet{}, 3) == T({{1}, {0, 0}, {0, 0, 0}}));
  // Motzkin paths
  const StepSet motzkin{{{1, 1, 1}, {1, 0, 1}, {1, -1, 1}}, std::nullopt};
  const auto t = dp_count(motzkin, 8);
  CHECK(t[7][0] == 127);
  CHECK(code_of([] { dp_count(StepSet{{{0, 1, 1}}, std::nullopt}, 3); }) == Errc::InvalidStepSet);
  CHECK(code_of([] { dp_count(StepSet{{{1, 2, 1}}, std::nullopt}, 3); }) == Errc::InvalidStepSet);
  CHECK(code_of([] { brute_force_count(StepSet{{{-1, 0, 1}}, std::nullopt}, 3, 0); }) == Errc::InvalidStepSet);
}

TEST_CASE("brute force enumeration") {
  const StepSet motzkin{{{1, 1, 1}, {1, 0, 1}, {1, -1, 1}}, std::nullopt};
  CHECK(brute_force_count(motzkin, 7, 0) == 127);
  CHECK(brute_force_count(motzkin, 0, 0) == 1);
  CHECK(brute_force_count(motzkin, 3, 4) == 0);
  CHECK(brute_force_row(motzkin, 4) == Q({9, 12, 9, 4, 1}));
  CHECK(code_of([&] { brute_force_count(motzkin, kBruteForceMaxN + 1, 0); }) == Errc::SearchSpaceTooLarge);

  // Zero-weight steps are pruned, not counted.
  const StepSet with_zero{{{1, 1, 1}, {1, 0, 0}}, std::nullopt};
  CHECK(brute_force_row(with_zero, 3) == Q({0, 0, 0, 1}));

  // Origin override replaces only the first horizontal step.
  const StepSet s = stepset_for_g(E1());
  CHECK(brute_force_row(s, 1) == Q({-1, 1}));
  CHECK(brute_force_row(s, 5) == Q({-59, 69, -43, 18, -5, 1}));
}

TEST_CASE("dp and brute force agree on derived step sets") {
  for (const auto& E : paper_curves()) {
    for (const StepSet& s : {stepset_for_g(E), stepset_for_gamma(E)}) {
      const auto t = dp_count(s, 9);
      for (std::size_t n = 0; n < 9; ++n) CHECK(brute_force_row(s, n) == t[n]);
    }
  }
}

TEST_CASE("dp column 0 follows the binomial orbit") {
  const Series g = derive_g(E1(), 12);
  for (long r = 0; r <= 6; ++r) {
    const auto t = dp_count(stepset_orbit(E1(), r), 12);
    const Series gr = ps_binomial(g, r);
    for (std::size_t n = 0; n < 12; ++n) CHECK(t[n][0] == gr[n]);
  }
}
