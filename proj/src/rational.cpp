#include "pbrp/rational.hpp"

#include <limits>

#include "pbrp/errors.hpp"

namespace pbrp {

namespace {

bool valid_integer_token(const std::string& s) {
  if (s.empty()) return false;
  std::size_t start = (s[0] == '-' || s[0] == '+') ? 1 : 0;
  if (start == s.size()) return false;
  for (std::size_t i = start; i < s.size(); ++i) {
    if (s[i] < '0' || s[i] > '9') return false;
  }
  return true;
}

}  // namespace

Rational parse_rational(const std::string& text) {
  const auto slash = text.find('/');
  const std::string num_part = text.substr(0, slash);
  if (!valid_integer_token(num_part)) {
    throw Error(ErrorCode::ParseError, "bad rational '" + text + "'");
  }
  BigInt num(num_part);
  BigInt den = 1;
  if (slash != std::string::npos) {
    const std::string den_part = text.substr(slash + 1);
    if (!valid_integer_token(den_part) || den_part[0] == '-' || den_part[0] == '+') {
      throw Error(ErrorCode::ParseError, "bad rational '" + text + "'");
    }
    den = BigInt(den_part);
    if (den == 0) {
      throw Error(ErrorCode::ParseError, "zero denominator in '" + text + "'");
    }
  }
  return Rational(num, den);
}

std::string format_rational(const Rational& r) {
  return numerator(r).str() + "/" + denominator(r).str();
}

std::string format_decimal(const Rational& r, int places) {
  BigInt scale = 1;
  for (int i = 0; i < places; ++i) scale *= 10;
  const bool negative = r < 0;
  const Rational mag = negative ? Rational(-r) : r;
  // round(mag * scale), ties away from zero
  BigInt scaled_num = numerator(mag) * scale * 2 + denominator(mag);
  BigInt units = scaled_num / (denominator(mag) * 2);
  BigInt whole = units / scale;
  BigInt frac = units % scale;
  std::string frac_str = frac.str();
  if ((int)frac_str.size() < places) {
    frac_str = std::string(places - frac_str.size(), '0') + frac_str;
  }
  std::string out = whole.str();
  if (places > 0) out += "." + frac_str;
  if (negative && (whole != 0 || frac != 0)) out = "-" + out;
  return out;
}

BigInt rational_floor(const Rational& r) {
  BigInt q = numerator(r) / denominator(r);
  if (r < 0 && q * denominator(r) != numerator(r)) --q;
  return q;
}

BigInt rational_ceil(const Rational& r) {
  BigInt q = numerator(r) / denominator(r);
  if (r > 0 && q * denominator(r) != numerator(r)) ++q;
  return q;
}

Rational round_to_denominator(const Rational& r, std::int64_t denom) {
  const Rational scaled = r * denom;
  BigInt rounded;
  if (scaled >= 0) {
    rounded = rational_floor(scaled + Rational(1, 2));
  } else {
    rounded = rational_ceil(scaled - Rational(1, 2));
  }
  return Rational(rounded, BigInt(denom));
}

Rational ceil_to_denominator(const Rational& r, std::int64_t denom) {
  return Rational(rational_ceil(r * denom), BigInt(denom));
}

Rational floor_to_denominator(const Rational& r, std::int64_t denom) {
  return Rational(rational_floor(r * denom), BigInt(denom));
}

std::int64_t to_int64_checked(const BigInt& v, const std::string& what) {
  static const BigInt lo = std::numeric_limits<std::int64_t>::min();
  static const BigInt hi = std::numeric_limits<std::int64_t>::max();
  if (v < lo || v > hi) {
    throw Error(ErrorCode::ScaleOverflow, what + " does not fit in 64 bits: " + v.str());
  }
  return v.convert_to<std::int64_t>();
}

double to_double(const Rational& r) { return r.convert_to<double>(); }

const char* error_code_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::ArityMismatch: return "ArityMismatch";
    case ErrorCode::NegativeQuantity: return "NegativeQuantity";
    case ErrorCode::NonMonotoneValuation: return "NonMonotoneValuation";
    case ErrorCode::UncoverableProject: return "UncoverableProject";
    case ErrorCode::IndexOutOfRange: return "IndexOutOfRange";
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::SchemaError: return "SchemaError";
    case ErrorCode::UnsupportedVoteType: return "UnsupportedVoteType";
    case ErrorCode::NoVoters: return "NoVoters";
    case ErrorCode::NoApprovals: return "NoApprovals";
    case ErrorCode::UniverseNotDivisibleBy3: return "UniverseNotDivisibleBy3";
    case ErrorCode::NotWpFundable: return "NotWpFundable";
    case ErrorCode::TooManyProjects: return "TooManyProjects";
    case ErrorCode::CapacityNegative: return "CapacityNegative";
    case ErrorCode::TableTooLarge: return "TableTooLarge";
    case ErrorCode::BadEpsilon: return "BadEpsilon";
    case ErrorCode::GraphForestMismatch: return "GraphForestMismatch";
    case ErrorCode::WrongValuationClass: return "WrongValuationClass";
    case ErrorCode::CostsNotIdentical: return "CostsNotIdentical";
    case ErrorCode::NotLaminar: return "NotLaminar";
    case ErrorCode::OracleCapExceeded: return "OracleCapExceeded";
    case ErrorCode::ScaleOverflow: return "ScaleOverflow";
  }
  return "Unknown";
}

bool is_input_error(ErrorCode code) {
  switch (code) {
    case ErrorCode::ArityMismatch:
    case ErrorCode::NegativeQuantity:
    case ErrorCode::NonMonotoneValuation:
    case ErrorCode::UncoverableProject:
    case ErrorCode::IndexOutOfRange:
    case ErrorCode::ParseError:
    case ErrorCode::SchemaError:
    case ErrorCode::UnsupportedVoteType:
    case ErrorCode::NoVoters:
    case ErrorCode::NoApprovals:
    case ErrorCode::UniverseNotDivisibleBy3:
      return true;
    default:
      return false;
  }
}

}  // namespace pbrp
