#include "ecr/paths.hpp"

#include <string>

#include "ecr/error.hpp"

namespace ecr {

AMatrix g_family_params(const CurveParams& E) {
  const Rational& a = E.a();
  const Rational& b = E.b();
  const Rational& c = E.c();
  const Rational cm1 = c - 1;
  return {2 * cm1 - a, a * cm1 - b - cm1 * cm1, a - 2 * c + 1, Rational(1)};
}

AMatrix gamma_family_params(const CurveParams& E) {
  const Rational& a = E.a();
  const Rational& b = E.b();
  const Rational& c = E.c();
  return {a - 2 * c, a * c - b - c * c, Rational(0), Rational(1)};
}

StepSet stepset_for_g(const CurveParams& E) {
  const AMatrix am = g_family_params(E);
  return stepset_from_amatrix(am, am.alpha + am.gamma);
}

StepSet stepset_for_gamma(const CurveParams& E) {
  const AMatrix am = gamma_family_params(E);
  StepSet s;
  s.steps = {{1, 1, Rational(1)}, {1, 0, am.alpha}, {2, 0, am.beta}, {2, -1, am.delta}};
  return s;
}

StepSet stepset_orbit(const CurveParams& E, long r) {
  const AMatrix am = transport_params(g_family_params(E), r);
  return stepset_from_amatrix(am, am.alpha + am.gamma);
}

namespace {

void validate(const StepSet& s) {
  for (const Step& st : s.steps)
    if (st.dx < 1 || st.dy > st.dx)
      throw Error(Errc::InvalidStepSet,
                  "step (" + std::to_string(st.dx) + "," + std::to_string(st.dy) + ") needs 1 <= dx and dy <= dx");
}

}  // namespace

Triangle dp_count(const StepSet& s, std::size_t n_rows) {
  validate(s);
  Triangle t(n_rows);
  auto at = [&t](long n, long k) -> const Rational* {
    if (n < 0 || k < 0 || k > n) return nullptr;
    return &t[static_cast<std::size_t>(n)][static_cast<std::size_t>(k)];
  };
  for (std::size_t n = 0; n < n_rows; ++n) {
    t[n].assign(n + 1, Rational(0));
    if (n == 0) {
      t[0][0] = 1;
      continue;
    }
    for (long k = 0; k <= static_cast<long>(n); ++k) {
      if (n == 1 && k == 0 && s.origin_override) {
        t[1][0] = *s.origin_override;
        continue;
      }
      Rational& cell = t[n][static_cast<std::size_t>(k)];
      for (const Step& st : s.steps) {
        if (st.weight == 0) continue;
        if (const Rational* src = at(static_cast<long>(n) - st.dx, k - st.dy)) cell += st.weight * *src;
      }
    }
  }
  return t;
}

namespace {

class PathEnumerator {
 public:
  PathEnumerator(const StepSet& s, std::size_t n) : n_(static_cast<long>(n)), row_(n + 1) {
    for (const Step& st : s.steps)
      if (st.weight != 0) steps_.push_back(st);
    if (s.origin_override) {
      first_steps_.push_back({1, 0, *s.origin_override});
      for (const Step& st : steps_)
        if (!(st.dx == 1 && st.dy == 0)) first_steps_.push_back(st);
    } else {
      first_steps_ = steps_;
    }
  }

  std::vector<Rational> run() {
    walk(0, 0, Rational(1), true);
    return std::move(row_);
  }

 private:
  void walk(long x, long y, const Rational& w, bool at_origin) {
    if (x == n_) {
      row_[static_cast<std::size_t>(y)] += w;
      return;
    }
    const auto& options = at_origin ? first_steps_ : steps_;
    for (const Step& st : options) {
      const long nx = x + st.dx, ny = y + st.dy;
      if (nx > n_ || ny < 0) continue;
      if (st.weight == 0) continue;
      walk(nx, ny, w * st.weight, false);
    }
  }

  long n_;
  std::vector<Step> steps_;
  std::vector<Step> first_steps_;
  std::vector<Rational> row_;
};

}  // namespace

std::vector<Rational> brute_force_row(const StepSet& s, std::size_t n) {
  validate(s);
  if (n > kBruteForceMaxN)
    throw Error(Errc::SearchSpaceTooLarge, "brute force limited to n <= " + std::to_string(kBruteForceMaxN));
  return PathEnumerator(s, n).run();
}

Rational brute_force_count(const StepSet& s, std::size_t n, std::size_t k) {
  if (k > n) {
    validate(s);
    return 0;
  }
  return brute_force_row(s, n)[k];
}

}  // namespace ecr
