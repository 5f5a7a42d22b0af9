#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "stacky/binary_forms.hpp"
#include "stacky/finite_field.hpp"
#include "stacky/numeric.hpp"
#include "stacky/polynomial.hpp"

namespace stacky {

enum class CountMethod { closed_form, brute_force, burnside };
std::string to_string(CountMethod m);

struct CountResult {
  Rational value;
  CountMethod method = CountMethod::closed_form;
  std::optional<BigInt> tuple_count;  // basepoint-free tuples, brute force only
  bool wild = false;                  // characteristic divides a weight
};

inline constexpr u128 kDefaultBudget = 1'000'000'000;

struct EnumerationOptions {
  unsigned workers = 1;
  u128 budget = kDefaultBudget;
  // Called with (tuples done, tuples total) from worker threads, serialized.
  std::function<void(u128, u128)> progress;
};

// Histogram of basepoint-free tuples keyed by the bitmask of nonzero forms.
struct SupportHistogram {
  std::vector<BigInt> by_support;
  u128 enumerated = 0;

  BigInt total() const;
  // Tuples whose nonzero forms all lie inside `mask`.
  BigInt within(std::uint64_t mask) const;
};

SupportHistogram enumerate_basepoint_free(const Field& field, const WeightVector& w, std::uint32_t n,
                                          const EnumerationOptions& opts = {});

// Orbit count of F_q^* on the enumerated basepoint-free tuples (Burnside).
BigInt burnside_orbits(const Field& field, const WeightVector& w, const SupportHistogram& hist);

bool is_tame(std::uint64_t characteristic, const WeightVector& w);

// (1 + q + ... + q^N)(q^(|w| n) - q^(|w| n - N)); zero when N = 0.
IntPoly closed_weighted_polynomial(const WeightVector& w, std::uint32_t n);
CountResult closed_weighted_count(const BigInt& q, const WeightVector& w, std::uint32_t n);

CountResult brute_weighted_count(const Field& field, const WeightVector& w, std::uint32_t n,
                                 const EnumerationOptions& opts = {});
CountResult brute_iso_count(const Field& field, const WeightVector& w, std::uint32_t n,
                            const EnumerationOptions& opts = {});
CountResult closed_iso_count(std::uint64_t q, const WeightVector& w, std::uint32_t n);

// Ambient count (q^M - 1)/(q - 1) minus the Hom count, M = sum(n lambda_i + 1).
IntPoly discriminant_weighted_polynomial(const WeightVector& w, std::uint32_t n);
CountResult discriminant_weighted_count(const BigInt& q, const WeightVector& w, std::uint32_t n);
// Nonzero tuples with a common zero, divided by q - 1.
CountResult brute_discriminant_count(const Field& field, const WeightVector& w, std::uint32_t n,
                                     const EnumerationOptions& opts = {});

std::uint64_t ambient_dimension(const WeightVector& w, std::uint32_t n);  // M - 1

}  // namespace stacky
