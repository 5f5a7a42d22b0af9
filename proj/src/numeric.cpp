#include "stacky/numeric.hpp"

#include <algorithm>
#include <numeric>

#include "stacky/error.hpp"

namespace stacky {

std::string_view error_code_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::NonPrime: return "NonPrime";
    case ErrorCode::DegreeOutOfRange: return "DegreeOutOfRange";
    case ErrorCode::CardinalityCap: return "CardinalityCap";
    case ErrorCode::DivisionByZero: return "DivisionByZero";
    case ErrorCode::ZeroElement: return "ZeroElement";
    case ErrorCode::PartitionOutOfRange: return "PartitionOutOfRange";
    case ErrorCode::CounterOverflow: return "CounterOverflow";
    case ErrorCode::WildCharacteristic: return "WildCharacteristic";
    case ErrorCode::DegreeNonPositive: return "DegreeNonPositive";
    case ErrorCode::BudgetExceeded: return "BudgetExceeded";
    case ErrorCode::WeightMismatch: return "WeightMismatch";
    case ErrorCode::DegreeTooSmall: return "DegreeTooSmall";
    case ErrorCode::UnstableRange: return "UnstableRange";
    case ErrorCode::MissingLPolynomial: return "MissingLPolynomial";
    case ErrorCode::GenusMismatch: return "GenusMismatch";
    case ErrorCode::UnknownModuli: return "UnknownModuli";
    case ErrorCode::InvalidArgument: return "InvalidArgument";
    case ErrorCode::InternalInvariant: return "InternalInvariant";
  }
  return "Unknown";
}

std::string to_string(const BigInt& v) { return v.str(); }

std::string to_string(const Rational& v) {
  const BigInt num = boost::multiprecision::numerator(v);
  const BigInt den = boost::multiprecision::denominator(v);
  if (den == 1) return num.str();
  return num.str() + "/" + den.str();
}

std::string to_string(u128 v) {
  if (v == 0) return "0";
  std::string out;
  while (v > 0) {
    out.push_back(static_cast<char>('0' + static_cast<int>(v % 10)));
    v /= 10;
  }
  std::reverse(out.begin(), out.end());
  return out;
}

BigInt parse_bigint(const std::string& text) {
  std::size_t start = (!text.empty() && (text[0] == '-' || text[0] == '+')) ? 1 : 0;
  if (start == text.size()) throw Error(ErrorCode::InvalidArgument, "not an integer: '" + text + "'");
  for (std::size_t i = start; i < text.size(); ++i) {
    if (text[i] < '0' || text[i] > '9') throw Error(ErrorCode::InvalidArgument, "not an integer: '" + text + "'");
  }
  return BigInt(text[0] == '+' ? text.substr(1) : text);
}

Rational parse_rational(const std::string& text) {
  const auto slash = text.find('/');
  if (slash == std::string::npos) return Rational(parse_bigint(text));
  const BigInt den = parse_bigint(text.substr(slash + 1));
  if (den == 0) throw Error(ErrorCode::DivisionByZero, "zero denominator in '" + text + "'");
  return Rational(parse_bigint(text.substr(0, slash)), den);
}

BigInt ipow(const BigInt& base, std::uint64_t exp) {
  BigInt result = 1;
  BigInt b = base;
  while (exp > 0) {
    if (exp & 1) result *= b;
    exp >>= 1;
    if (exp) b *= b;
  }
  return result;
}

Rational rpow(const Rational& base, std::int64_t exp) {
  if (exp >= 0) {
    return Rational(ipow(boost::multiprecision::numerator(base), static_cast<std::uint64_t>(exp)),
                    ipow(boost::multiprecision::denominator(base), static_cast<std::uint64_t>(exp)));
  }
  if (base == 0) throw Error(ErrorCode::DivisionByZero, "negative power of zero");
  return Rational(1) / rpow(base, -exp);
}

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) return false;
  }
  return true;
}

std::vector<std::uint64_t> prime_factors(std::uint64_t n) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) {
      out.push_back(d);
      while (n % d == 0) n /= d;
    }
  }
  if (n > 1) out.push_back(n);
  return out;
}

std::vector<std::uint64_t> divisors(std::uint64_t n) {
  std::vector<std::uint64_t> small, large;
  for (std::uint64_t d = 1; d * d <= n; ++d) {
    if (n % d == 0) {
      small.push_back(d);
      if (d != n / d) large.push_back(n / d);
    }
  }
  small.insert(small.end(), large.rbegin(), large.rend());
  return small;
}

std::uint64_t euler_phi(std::uint64_t n) {
  std::uint64_t result = n;
  for (auto p : prime_factors(n)) result = result / p * (p - 1);
  return result;
}

BigInt binomial(std::int64_t n, std::int64_t k) {
  if (k < 0) return 0;
  if (k == 0) return 1;
  if (n < 0) {
    // C(n, k) = (-1)^k C(k - n - 1, k)
    BigInt v = binomial(k - n - 1, k);
    return (k % 2 == 0) ? v : BigInt(-v);
  }
  if (k > n) return 0;
  k = std::min(k, n - k);
  BigInt result = 1;
  for (std::int64_t i = 1; i <= k; ++i) {
    result *= (n - k + i);
    result /= i;
  }
  return result;
}

BigInt factorial(std::uint64_t n) {
  BigInt result = 1;
  for (std::uint64_t i = 2; i <= n; ++i) result *= i;
  return result;
}

bool is_integer(const Rational& v) { return boost::multiprecision::denominator(v) == 1; }

}  // namespace stacky
