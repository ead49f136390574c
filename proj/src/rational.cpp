#include "ecr/rational.hpp"

#include <cctype>

#include "ecr/error.hpp"

namespace ecr {

std::string_view errc_name(Errc code) noexcept {
  switch (code) {
    case Errc::ZeroConstantTerm: return "ZeroConstantTerm";
    case Errc::NonUnitConstant: return "NonUnitConstant";
    case Errc::NonzeroInnerConstant: return "NonzeroInnerConstant";
    case Errc::NotRevertible: return "NotRevertible";
    case Errc::SingularCurve: return "SingularCurve";
    case Errc::PointNotOnCurve: return "PointNotOnCurve";
    case Errc::InsufficientOrder: return "InsufficientOrder";
    case Errc::InvalidStepSet: return "InvalidStepSet";
    case Errc::SearchSpaceTooLarge: return "SearchSpaceTooLarge";
    case Errc::InsufficientTerms: return "InsufficientTerms";
    case Errc::ZeroLambda: return "ZeroLambda";
    case Errc::TorsionDepth: return "TorsionDepth";
    case Errc::ZeroXCoordinate: return "ZeroXCoordinate";
    case Errc::InsufficientDepth: return "InsufficientDepth";
    case Errc::FormulaDomainError: return "FormulaDomainError";
    case Errc::ParseError: return "ParseError";
  }
  return "Unknown";
}

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

bool is_signed_digits(std::string_view s, bool allow_sign) {
  if (allow_sign && !s.empty() && (s.front() == '-' || s.front() == '+')) s.remove_prefix(1);
  if (s.empty()) return false;
  for (char ch : s)
    if (!std::isdigit(static_cast<unsigned char>(ch))) return false;
  return true;
}

}  // namespace

Rational parse_rational(std::string_view text) {
  std::string_view s = trim(text);
  auto slash = s.find('/');
  std::string_view num = s.substr(0, slash);
  std::string_view den = slash == std::string_view::npos ? std::string_view{"1"} : s.substr(slash + 1);
  if (!is_signed_digits(num, true) || !is_signed_digits(den, false))
    throw Error(Errc::ParseError, "not an exact rational: '" + std::string(text) + "'");
  if (num.front() == '+') num.remove_prefix(1);
  Integer n(std::string(num), 10);
  Integer d(std::string(den), 10);
  if (d == 0) throw Error(Errc::ParseError, "zero denominator: '" + std::string(text) + "'");
  Rational q(n, d);
  q.canonicalize();
  return q;
}

std::string to_string(const Rational& q) {
  if (q.get_den() == 1) return q.get_num().get_str();
  return q.get_num().get_str() + "/" + q.get_den().get_str();
}

std::vector<Rational> parse_rational_list(std::string_view text) {
  std::vector<Rational> out;
  std::string_view s = trim(text);
  if (s.empty()) return out;
  while (true) {
    auto comma = s.find(',');
    out.push_back(parse_rational(s.substr(0, comma)));
    if (comma == std::string_view::npos) break;
    s.remove_prefix(comma + 1);
  }
  return out;
}

std::string join(const std::vector<Rational>& values, std::string_view sep) {
  std::string out;
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (i) out += sep;
    out += to_string(values[i]);
  }
  return out;
}

Integer binomial(unsigned long n, unsigned long k) {
  Integer r;
  if (k > n) return 0;
  mpz_bin_uiui(r.get_mpz_t(), n, k);
  return r;
}

Rational pow(const Rational& q, long e) {
  if (e == 0) return 1;
  unsigned long m = e < 0 ? static_cast<unsigned long>(-e) : static_cast<unsigned long>(e);
  Integer num, den;
  mpz_pow_ui(num.get_mpz_t(), q.get_num_mpz_t(), m);
  mpz_pow_ui(den.get_mpz_t(), q.get_den_mpz_t(), m);
  if (e < 0) {
    if (num == 0) throw Error(Errc::FormulaDomainError, "negative power of zero");
    std::swap(num, den);
  }
  Rational r(num, den);
  r.canonicalize();
  return r;
}

}  // namespace ecr
