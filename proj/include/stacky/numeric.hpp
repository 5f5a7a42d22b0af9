#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace stacky {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;
__extension__ typedef unsigned __int128 u128;

std::string to_string(const BigInt& v);
// "num/den", or just "num" when the denominator is 1.
std::string to_string(const Rational& v);
std::string to_string(u128 v);

BigInt parse_bigint(const std::string& text);
Rational parse_rational(const std::string& text);

BigInt ipow(const BigInt& base, std::uint64_t exp);
Rational rpow(const Rational& base, std::int64_t exp);

bool is_prime(std::uint64_t n);
std::vector<std::uint64_t> prime_factors(std::uint64_t n);
std::vector<std::uint64_t> divisors(std::uint64_t n);
std::uint64_t euler_phi(std::uint64_t n);
BigInt binomial(std::int64_t n, std::int64_t k);
BigInt factorial(std::uint64_t n);

bool is_integer(const Rational& v);

}  // namespace stacky
