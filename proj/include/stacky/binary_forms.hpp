#pragma once

#include <cstdint>
#include <limits>
#include <span>
#include <string>
#include <vector>

#include "stacky/finite_field.hpp"
#include "stacky/numeric.hpp"

namespace stacky {

class WeightVector {
 public:
  WeightVector() = default;
  explicit WeightVector(std::vector<std::uint32_t> lambdas);
  static WeightVector parse(const std::string& csv);

  const std::vector<std::uint32_t>& lambdas() const { return lambdas_; }
  std::size_t size() const { return lambdas_.size(); }
  std::uint32_t operator[](std::size_t i) const { return lambdas_[i]; }
  // N: one less than the number of weights.
  std::uint32_t N() const { return static_cast<std::uint32_t>(lambdas_.size()) - 1; }
  std::uint64_t total() const { return total_; }
  std::uint64_t lcm() const { return lcm_; }
  std::uint64_t gcd() const { return gcd_; }
  std::vector<std::uint64_t> eta() const;
  // Sub-vector of the weights selected by `keep`; may be empty.
  std::vector<std::uint32_t> restrict(const std::vector<bool>& keep) const;
  std::string to_string() const;  // "2,3,4"

  friend bool operator==(const WeightVector& a, const WeightVector& b) { return a.lambdas_ == b.lambdas_; }

 private:
  std::vector<std::uint32_t> lambdas_;
  std::uint64_t total_ = 0, lcm_ = 1, gcd_ = 0;
};

// coeffs[i] multiplies x^i y^(d-i).
struct BinaryForm {
  std::uint32_t degree = 0;
  std::vector<FieldElement> coeffs;

  BinaryForm() : coeffs(1) {}
  BinaryForm(std::uint32_t d, std::vector<FieldElement> c);
  static BinaryForm zero(std::uint32_t d) { return BinaryForm(d, std::vector<FieldElement>(d + 1)); }

  bool is_zero() const;
  // Degree of the dehomogenized polynomial in x (y = 1); -1 for the zero form.
  int x_degree() const;
  // Exchanges x and y.
  BinaryForm swapped() const;
  std::string to_string() const;
};

struct FormTuple {
  std::vector<BinaryForm> forms;
  WeightVector weights;
  std::uint32_t n = 0;

  FormTuple() = default;
  FormTuple(std::vector<BinaryForm> forms, WeightVector weights, std::uint32_t n);
  // Forms without a degree contract (weights all 1, n = 0 marks "unchecked").
  static FormTuple loose(std::vector<BinaryForm> forms);
};

inline constexpr int kInfiniteGcdDegree = std::numeric_limits<int>::max();

// Reusable buffers for the hot gcd path.
class GcdWorkspace {
 public:
  // Forms are given by their coefficient spans; the result counts common roots over the
  // algebraic closure, with multiplicity, including the point at infinity.
  int gcd_degree(const Field& field, std::span<const std::span<const FieldElement>> forms);

 private:
  std::vector<FieldElement> a_, b_;
};

int tuple_gcd_degree(const Field& field, const FormTuple& t);
bool is_basepoint_free(const Field& field, const FormTuple& t);

// Mixed-radix description of the coefficient space of all tuples of degrees n*lambda_i.
class TupleSpace {
 public:
  TupleSpace(const Field& field, const WeightVector& w, std::uint32_t n);

  const Field& field() const { return field_; }
  const WeightVector& weights() const { return weights_; }
  std::uint32_t n() const { return n_; }
  std::size_t coefficient_count() const { return width_; }
  const std::vector<std::uint32_t>& form_degrees() const { return degrees_; }
  const std::vector<std::size_t>& form_offsets() const { return offsets_; }
  u128 size() const { return size_; }

  // Half-open rank range of partition `index` out of `total`.
  std::pair<u128, u128> partition(u128 index, u128 total) const;
  // Little-endian base-q digits of a rank.
  std::vector<FieldElement> unrank(u128 rank) const;
  FormTuple to_tuple(const std::vector<FieldElement>& digits) const;

 private:
  Field field_;
  WeightVector weights_;
  std::uint32_t n_;
  std::vector<std::uint32_t> degrees_;
  std::vector<std::size_t> offsets_;
  std::size_t width_ = 0;
  u128 size_ = 0;
};

// Odometer over a rank range; digit 0 varies fastest.
class TupleCursor {
 public:
  TupleCursor(const TupleSpace& space, u128 begin, u128 end);

  bool done() const { return remaining_ == 0; }
  const std::vector<FieldElement>& digits() const { return digits_; }
  std::span<const FieldElement> form(std::size_t i) const {
    return {digits_.data() + offsets_[i], degrees_[i] + std::size_t{1}};
  }
  void next();

 private:
  std::vector<FieldElement> digits_;
  std::vector<std::size_t> offsets_;
  std::vector<std::uint32_t> degrees_;
  std::uint32_t q_;
  u128 remaining_;
};

// Convenience stream materializing FormTuples for one partition.
class TupleStream {
 public:
  TupleStream(const TupleSpace& space, u128 index, u128 total);
  bool done() const { return cursor_.done(); }
  FormTuple current() const { return space_->to_tuple(cursor_.digits()); }
  void next() { cursor_.next(); }
  u128 size() const { return end_ - begin_; }

 private:
  const TupleSpace* space_;
  u128 begin_, end_;
  TupleCursor cursor_;
};

TupleStream tuple_space_iter(const TupleSpace& space, u128 index, u128 total);

}  // namespace stacky
