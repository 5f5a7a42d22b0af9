#pragma once

#include <compare>
#include <cstdint>
#include <memory>
#include <string>
#include <vector>

#include "stacky/error.hpp"

namespace stacky {

inline constexpr std::uint32_t kDefaultCardinalityCap = 1u << 16;

struct FieldSpec {
  std::uint32_t p = 0;
  std::uint32_t k = 0;
  std::uint32_t q = 0;
  // Monic irreducible over F_p, coefficients from x^0 up to x^k; empty for prime fields.
  std::vector<std::uint32_t> modulus;

  std::string to_string() const;  // "p" or "p^k"
  std::string modulus_string() const;
  friend bool operator==(const FieldSpec&, const FieldSpec&) = default;
};

// An element is identified by its index: the base-p digits of the index are its
// coordinates in the power basis 1, x, ..., x^(k-1). Index order is enumeration order.
struct FieldElement {
  std::uint32_t value = 0;
  friend auto operator<=>(const FieldElement&, const FieldElement&) = default;
};

class Field {
 public:
  static Field create(std::uint32_t p, std::uint32_t k, std::uint32_t cap = kDefaultCardinalityCap);
  // Accepts "p" or "p^k"; also a prime power written out ("8").
  static Field parse(const std::string& text, std::uint32_t cap = kDefaultCardinalityCap);

  const FieldSpec& spec() const { return tables_->spec; }
  std::uint32_t p() const { return p_; }
  std::uint32_t k() const { return k_; }
  std::uint32_t q() const { return q_; }

  FieldElement zero() const { return {0}; }
  FieldElement one() const { return {1}; }
  FieldElement element(std::uint32_t index) const;
  FieldElement from_coords(const std::vector<std::uint32_t>& coords) const;
  std::vector<std::uint32_t> coords(FieldElement x) const;
  // A fixed generator of the multiplicative group.
  FieldElement generator() const { return {tables_->exp[1]}; }

  FieldElement add(FieldElement a, FieldElement b) const {
    if (k_ == 1) {
      const std::uint32_t s = a.value + b.value;
      return {s >= p_ ? s - p_ : s};
    }
    if (p_ == 2) return {a.value ^ b.value};
    if (!tables_->add.empty()) return {tables_->add[a.value * q_ + b.value]};
    return add_digits(a, b);
  }
  FieldElement neg(FieldElement a) const { return {tables_->neg[a.value]}; }
  FieldElement sub(FieldElement a, FieldElement b) const { return add(a, neg(b)); }
  FieldElement mul(FieldElement a, FieldElement b) const {
    if (k_ == 1) return {static_cast<std::uint32_t>(static_cast<std::uint64_t>(a.value) * b.value % p_)};
    if (a.value == 0 || b.value == 0) return {0};
    return {tables_->exp[tables_->log[a.value] + tables_->log[b.value]]};
  }
  FieldElement inv(FieldElement a) const {
    if (a.value == 0) throw Error(ErrorCode::DivisionByZero, "inverse of zero in F_" + spec().to_string());
    return {tables_->inv[a.value]};
  }
  FieldElement div(FieldElement a, FieldElement b) const { return mul(a, inv(b)); }
  FieldElement pow(FieldElement a, std::uint64_t e) const;

  // Smallest e >= 1 with x^e = 1.
  std::uint64_t order(FieldElement x) const;

  friend bool operator==(const Field& a, const Field& b) { return a.spec() == b.spec(); }

 private:
  struct Tables {
    FieldSpec spec;
    std::vector<std::uint32_t> exp;  // length 2(q-1); exp[i] = g^i
    std::vector<std::uint32_t> log;  // log[0] unused
    std::vector<std::uint32_t> inv;
    std::vector<std::uint32_t> neg;
    std::vector<std::uint32_t> add;  // q*q table, only for small non-binary extensions
  };

  explicit Field(std::shared_ptr<const Tables> t);
  FieldElement add_digits(FieldElement a, FieldElement b) const;

  std::shared_ptr<const Tables> tables_;
  std::uint32_t p_ = 0, k_ = 0, q_ = 0;
};

}  // namespace stacky
