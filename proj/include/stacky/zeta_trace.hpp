#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "stacky/binary_forms.hpp"
#include "stacky/numeric.hpp"
#include "stacky/polynomial.hpp"
#include "stacky/spectral_sequence.hpp"

namespace stacky {

// Numerator of the zeta function of a curve: sum a_i T^i, a_0 = 1, degree 2g.
struct LPolynomial {
  BigInt q;
  int g = 0;
  std::vector<BigInt> coeffs;

  LPolynomial() = default;
  LPolynomial(BigInt q, std::vector<BigInt> coeffs);  // checks the functional equation
  // Elementary symmetric functions of the reciprocal roots: e_i = (-1)^i a_i.
  std::vector<BigInt> elementary() const;
  BigInt at_one() const;
};

// p_1 .. p_count of the reciprocal roots, via Newton's identities.
std::vector<BigInt> power_sums(const LPolynomial& L, int count);
// Inverse direction: e_0 .. e_degree from p_1 .. p_degree.
std::vector<Rational> elementary_from_power_sums(const std::vector<BigInt>& p, int degree);

// Polynomial in q^(+-1) and e_1 .. e_g (the remaining e_i are eliminated by the
// functional equation). Keys are exponent vectors of length g.
class CurveExpr {
 public:
  using Key = std::vector<int>;
  CurveExpr() = default;
  explicit CurveExpr(int g) : g_(g) {}

  int genus() const { return g_; }
  const std::map<Key, IntPoly>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  // The pure q part (all e exponents zero).
  IntPoly q_part() const;
  // Twice the largest absolute-value exponent, counting |e_i| as q^(i/2).
  std::int64_t leading_half_exponent() const;

  void add(const Key& key, const IntPoly& poly);
  CurveExpr& operator+=(const CurveExpr& o);
  friend CurveExpr operator*(const CurveExpr& a, const CurveExpr& b);
  CurveExpr scaled(const IntPoly& poly) const;

  Rational evaluate(const Rational& q, const std::vector<BigInt>& e) const;
  std::string to_string() const;

  static CurveExpr constant(int g, const IntPoly& poly);
  // e_i for 0 <= i <= 2g, reduced by e_(2g-i) = q^(g-i) e_i.
  static CurveExpr elementary(int g, int i);

 private:
  int g_ = 0;
  std::map<Key, IntPoly> terms_;
};

struct TraceResult {
  Rational value;
  Rational unverified_tail;  // contribution of degrees >= stable_below
};

TraceResult trace_count(const CohomologyTable& table, const BigInt& q, const std::optional<LPolynomial>& lpoly = std::nullopt);
CurveExpr trace_count_symbolic(const CohomologyTable& table);

struct ModuliSpec {
  std::string name;
  WeightVector weights;
  std::vector<std::uint64_t> forbidden_characteristics;
  std::uint32_t discriminant_degree = 12;  // per unit of n
  std::uint64_t generic_stabilizer() const { return weights.gcd(); }
};

ModuliSpec moduli_lookup(const std::string& name);
std::vector<std::string> moduli_names();

// Sum of closed_iso_count over n >= 1 with q^(discriminant_degree * n) <= B.
BigInt batyrev_manin_sum(const ModuliSpec& spec, std::uint64_t q, const BigInt& B);

struct ShafarevichTerm {
  IntPoly numerator;    // 2(q^(11-2g) - q^(9-2g))
  IntPoly denominator;  // q^10 - 1
  Rational exponent;    // of B
  std::optional<Rational> coefficient;  // numeric q only
  std::string to_string() const;
};

ShafarevichTerm shafarevich_leading(int g, const std::optional<BigInt>& q = std::nullopt);

struct GroupDescriptor {
  bool finite = false;
  BigInt order;               // finite only
  BigInt resultant_degree;    // n(lambda_0 + lambda_1), N = 1 only
  std::string to_string() const;  // "Z/6" or "Z"
};

GroupDescriptor picard_group(const WeightVector& w, std::uint32_t n);

}  // namespace stacky
