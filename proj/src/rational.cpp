#include "hbm/rational.hpp"

#include "hbm/error.hpp"

#include <cctype>

namespace hbm {

const char* to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::InvalidArgument: return "InvalidArgument";
    case ErrorKind::ParseError: return "ParseError";
    case ErrorKind::InnerNotPositiveDefinite: return "InnerNotPositiveDefinite";
    case ErrorKind::DegreeOutOfRange: return "DegreeOutOfRange";
    case ErrorKind::InvalidComplex: return "InvalidComplex";
    case ErrorKind::TheoremMismatch: return "TheoremMismatch";
    case ErrorKind::IdentityFailed: return "IdentityFailed";
    case ErrorKind::NotCEF: return "NotCEF";
    case ErrorKind::NotAbelian: return "NotAbelian";
    case ErrorKind::ProductUnavailable: return "ProductUnavailable";
    case ErrorKind::NoWitnessInWindow: return "NoWitnessInWindow";
    case ErrorKind::EulerCharacteristicMismatch: return "EulerCharacteristicMismatch";
    case ErrorKind::RepeatedMomentValues: return "RepeatedMomentValues";
    case ErrorKind::InconsistentFixedPointData: return "InconsistentFixedPointData";
    case ErrorKind::MissingEuler: return "MissingEuler";
    case ErrorKind::InvalidWeights: return "InvalidWeights";
  }
  return "Unknown";
}

namespace {

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s)
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  return true;
}

}  // namespace

Rational parse_rational(std::string_view text) {
  std::string_view body = text;
  bool negative = false;
  if (!body.empty() && (body.front() == '-' || body.front() == '+')) {
    negative = body.front() == '-';
    body.remove_prefix(1);
  }
  const auto slash = body.find('/');
  const std::string_view num = body.substr(0, slash);
  const std::string_view den = slash == std::string_view::npos ? std::string_view("1") : body.substr(slash + 1);
  if (!all_digits(num) || !all_digits(den))
    throw Error(ErrorKind::ParseError, "malformed rational '" + std::string(text) + "'");
  mpz_class n(std::string(num), 10);
  mpz_class d(std::string(den), 10);
  if (d == 0) throw Error(ErrorKind::ParseError, "zero denominator in '" + std::string(text) + "'");
  Rational q(negative ? mpz_class(-n) : n, d);
  q.canonicalize();
  return q;
}

std::string to_string(const Rational& value) { return value.get_str(); }

Rational binomial(long n, long k) {
  if (k < 0 || n < 0 || k > n) return 0;
  mpz_class out;
  mpz_bin_uiui(out.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
  return Rational(out);
}

}  // namespace hbm
