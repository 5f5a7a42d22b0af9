#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "stacky/binary_forms.hpp"
#include "stacky/numeric.hpp"

namespace stacky {

// Element of Q[theta]/(theta^(g+1)); theta sits in cohomological degree 2.
class ThetaElement {
 public:
  ThetaElement() : ThetaElement(0) {}
  explicit ThetaElement(int g, const Rational& constant = 0);
  static ThetaElement theta_power(int g, int power, const Rational& coeff = 1);

  int genus() const { return g_; }
  const std::vector<Rational>& coeffs() const { return c_; }
  Rational coeff(int power) const { return power <= g_ ? c_[static_cast<std::size_t>(power)] : Rational(0); }
  bool is_zero() const;
  // Highest theta power with nonzero coefficient, -1 for zero.
  int top_power() const;

  ThetaElement& operator+=(const ThetaElement& o);
  ThetaElement& operator-=(const ThetaElement& o);
  friend ThetaElement operator+(ThetaElement a, const ThetaElement& b) { return a += b; }
  friend ThetaElement operator-(ThetaElement a, const ThetaElement& b) { return a -= b; }
  friend ThetaElement operator*(const ThetaElement& a, const ThetaElement& b);
  friend ThetaElement operator*(const Rational& s, ThetaElement a);
  ThetaElement operator-() const { return Rational(-1) * *this; }
  friend bool operator==(const ThetaElement& a, const ThetaElement& b) { return a.g_ == b.g_ && a.c_ == b.c_; }

  std::string to_string() const;

 private:
  int g_;
  std::vector<Rational> c_;
};

enum class BaseKind { point, theta_truncated, poincare_only };

struct PoincarePolynomial {
  std::vector<std::int64_t> coeffs;  // coeffs[i] = i-th Betti number

  std::int64_t at_one() const;
  PoincarePolynomial operator*(const PoincarePolynomial& o) const;
  friend bool operator==(const PoincarePolynomial&, const PoincarePolynomial&) = default;
  std::string to_string() const;
};

struct BaseRing {
  BaseKind kind = BaseKind::point;
  int g = 0;
  PoincarePolynomial betti{{1}};

  static BaseRing point();
  static BaseRing jacobian(int g);
  static BaseRing poincare_only(PoincarePolynomial p);
  // Genus used for theta truncation (0 for point and Betti-only bases).
  int theta_genus() const { return kind == BaseKind::theta_truncated ? g : 0; }
};

struct ChernSummand {
  int rank = 1;
  std::vector<ThetaElement> classes;  // c_1, ..., c_k; missing entries are zero
};

struct ChernData {
  int g = 0;  // theta truncation of the base
  std::vector<ChernSummand> summands;
  std::vector<std::uint64_t> eta;  // empty means all ones
};

// Coefficients c^eta_1 .. c^eta_R of prod_i c_{eta_i t}(E_i), R = total rank.
std::vector<ThetaElement> twisted_chern_polynomial(const ChernData& data);

struct RelationPresentation {
  int degree = 0;                        // R
  std::vector<ThetaElement> coefficients;  // c^eta_1 .. c^eta_R
  std::uint64_t zeta_normalization = 1;    // lcm of the weights
};

RelationPresentation wpb_relation(const ChernData& data, const WeightVector& w);
ChernData jacobian_chern_data(int g, std::uint32_t n, const WeightVector& w);
PoincarePolynomial jacobian_poincare(int g);
PoincarePolynomial wpb_poincare(const PoincarePolynomial& base, std::uint32_t N);
// [pi_* z^(R-1), pi_* z^R, ..., pi_* z^(R-1+max_extra)] via the Segre recursion.
std::vector<ThetaElement> pushforward_powers(const RelationPresentation& rel, std::size_t max_extra);
Rational phi_cover_degree(const WeightVector& w);

}  // namespace stacky
