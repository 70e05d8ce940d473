#include "condenv/rational.hpp"

#include <cctype>
#include <cstdio>

#include "condenv/error.hpp"

namespace condenv {

std::string_view error_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::EmptyRowOrColumn: return "EmptyRowOrColumn";
    case ErrorCode::BadIndex: return "BadIndex";
    case ErrorCode::EmptyConditioning: return "EmptyConditioning";
    case ErrorCode::InvalidInput: return "InvalidInput";
    case ErrorCode::IncoherentBase: return "IncoherentBase";
    case ErrorCode::ValueOutsideInterval: return "ValueOutsideInterval";
    case ErrorCode::GroundTooLarge: return "GroundTooLarge";
    case ErrorCode::NotTwoMonotone: return "NotTwoMonotone";
    case ErrorCode::NotIntegrable: return "NotIntegrable";
    case ErrorCode::EventNotInPriorAlgebra: return "EventNotInPriorAlgebra";
    case ErrorCode::NotDescribable: return "NotDescribable";
    case ErrorCode::InconsistentCandidate: return "InconsistentCandidate";
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::BadGrid: return "BadGrid";
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
  std::string_view s = text;
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  bool negative = false;
  if (!s.empty() && (s.front() == '-' || s.front() == '+')) {
    negative = s.front() == '-';
    s.remove_prefix(1);
  }
  if (auto dot = s.find('.'); dot != std::string_view::npos) {
    std::string_view whole = s.substr(0, dot), frac = s.substr(dot + 1);
    if (whole.empty() && frac.empty()) throw Error(ErrorCode::ParseError, "not an exact rational: '" + std::string(text) + "'");
    if ((!whole.empty() && !all_digits(whole)) || (!frac.empty() && !all_digits(frac)))
      throw Error(ErrorCode::ParseError, "not an exact rational: '" + std::string(text) + "'");
    mpz_class scale;
    mpz_ui_pow_ui(scale.get_mpz_t(), 10, frac.size());
    Rational q(mpz_class(whole.empty() ? "0" : std::string(whole), 10) * scale +
                   mpz_class(frac.empty() ? "0" : std::string(frac), 10),
               scale);
    q.canonicalize();
    if (negative) q = -q;
    return q;
  }
  auto slash = s.find('/');
  std::string_view num = s.substr(0, slash);
  std::string_view den = slash == std::string_view::npos ? std::string_view("1") : s.substr(slash + 1);
  if (!all_digits(num) || !all_digits(den))
    throw Error(ErrorCode::ParseError, "not an exact rational: '" + std::string(text) + "'");
  mpz_class n(std::string(num), 10);
  mpz_class d(std::string(den), 10);
  if (d == 0) throw Error(ErrorCode::ParseError, "zero denominator in '" + std::string(text) + "'");
  Rational q(n, d);
  q.canonicalize();
  if (negative) q = -q;
  return q;
}

std::string to_string(const Rational& q) {
  if (q.get_den() == 1) return q.get_num().get_str();
  return q.get_str();
}

std::string to_decimal(const Rational& q, int digits) {
  mpf_class f(q, 256);
  std::string fmt = "%." + std::to_string(digits) + "Ff";
  char buf[512];
  gmp_snprintf(buf, sizeof buf, fmt.c_str(), f.get_mpf_t());
  return buf;
}

}  // namespace condenv
