#include "xyzpoly/bigrat.hpp"

#include <cctype>

#include "xyzpoly/errors.hpp"

namespace xyzpoly {

const char* to_string(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::InvalidArgument: return "InvalidArgument";
    case ErrorCode::Parse: return "Parse";
    case ErrorCode::NotDivisible: return "NotDivisible";
    case ErrorCode::PolynomialityViolation: return "PolynomialityViolation";
    case ErrorCode::ZeroPrefactor: return "ZeroPrefactor";
    case ErrorCode::DegenerateMap: return "DegenerateMap";
    case ErrorCode::DuplicateAbscissa: return "DuplicateAbscissa";
    case ErrorCode::TruncationFailure: return "TruncationFailure";
    case ErrorCode::NullspaceDimension: return "NullspaceDimension";
    case ErrorCode::SplitFailure: return "SplitFailure";
    case ErrorCode::NonIntegerCoefficients: return "NonIntegerCoefficients";
    case ErrorCode::ParityViolation: return "ParityViolation";
    case ErrorCode::KernelDimension: return "KernelDimension";
    case ErrorCode::InterpolationUnstable: return "InterpolationUnstable";
    case ErrorCode::BadLength: return "BadLength";
    case ErrorCode::NomeOutOfRange: return "NomeOutOfRange";
    case ErrorCode::NoSolution: return "NoSolution";
    case ErrorCode::Config: return "Config";
  }
  return "Unknown";
}

namespace {

bool valid_integer(std::string_view s) {
  if (s.empty()) return false;
  size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
  if (i == s.size()) return false;
  for (; i < s.size(); ++i) {
    if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
  }
  return true;
}

}  // namespace

BigRat parse_rational(std::string_view text) {
  const auto slash = text.find('/');
  const auto num = text.substr(0, slash);
  const auto den =
      slash == std::string_view::npos ? std::string_view{} : text.substr(slash + 1);
  if (!valid_integer(num) ||
      (slash != std::string_view::npos &&
       (!valid_integer(den) || den[0] == '-' || den[0] == '+'))) {
    throw Error(ErrorCode::Parse,
                "not a rational number: '" + std::string(text) + "'");
  }
  std::string n(num[0] == '+' ? num.substr(1) : num);
  BigRat value;
  if (slash == std::string_view::npos) {
    value = BigRat(BigInt(n), 1);
  } else {
    BigInt d{std::string(den)};
    if (d == 0) throw Error(ErrorCode::Parse, "zero denominator in '" +
                                                  std::string(text) + "'");
    value = BigRat(BigInt(n), d);
    value.canonicalize();
  }
  return value;
}

std::string to_string(const BigRat& value) { return value.get_str(); }

std::string to_string(const BigInt& value) { return value.get_str(); }

BigRat pow(const BigRat& base, long exponent) {
  BigRat result = 1;
  BigRat b = base;
  if (exponent < 0) {
    if (b == 0) throw Error(ErrorCode::InvalidArgument, "0 to a negative power");
    b = 1 / b;
    exponent = -exponent;
  }
  while (exponent > 0) {
    if (exponent & 1) result *= b;
    b *= b;
    exponent >>= 1;
  }
  return result;
}

BigInt factorial(unsigned long n) {
  BigInt out;
  mpz_fac_ui(out.get_mpz_t(), n);
  return out;
}

}  // namespace xyzpoly
