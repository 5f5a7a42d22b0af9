#pragma once

#include <cstdint>
#include <map>
#include <string>

#include "stacky/numeric.hpp"

namespace stacky {

// Sparse Laurent polynomial in one variable; zero coefficients are never stored.
template <class Coeff>
class Laurent {
 public:
  using Terms = std::map<std::int64_t, Coeff>;

  Laurent() = default;
  Laurent(const Coeff& c) { add_term(0, c); }  // NOLINT(google-explicit-constructor)

  static Laurent monomial(std::int64_t exp, const Coeff& c = Coeff(1)) {
    Laurent p;
    p.add_term(exp, c);
    return p;
  }

  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::int64_t degree() const { return terms_.empty() ? INT64_MIN : terms_.rbegin()->first; }
  std::int64_t low_degree() const { return terms_.empty() ? INT64_MAX : terms_.begin()->first; }

  Coeff coeff(std::int64_t exp) const {
    auto it = terms_.find(exp);
    return it == terms_.end() ? Coeff(0) : it->second;
  }

  void add_term(std::int64_t exp, const Coeff& c) {
    if (c == 0) return;
    auto [it, inserted] = terms_.emplace(exp, c);
    if (!inserted) {
      it->second += c;
      if (it->second == 0) terms_.erase(it);
    }
  }

  Laurent& operator+=(const Laurent& o) {
    for (const auto& [e, c] : o.terms_) add_term(e, c);
    return *this;
  }
  Laurent& operator-=(const Laurent& o) {
    for (const auto& [e, c] : o.terms_) add_term(e, Coeff(-c));
    return *this;
  }
  Laurent operator-() const {
    Laurent r;
    for (const auto& [e, c] : terms_) r.terms_.emplace(e, Coeff(-c));
    return r;
  }
  friend Laurent operator+(Laurent a, const Laurent& b) { return a += b; }
  friend Laurent operator-(Laurent a, const Laurent& b) { return a -= b; }
  friend Laurent operator*(const Laurent& a, const Laurent& b) {
    Laurent r;
    for (const auto& [ea, ca] : a.terms_)
      for (const auto& [eb, cb] : b.terms_) r.add_term(ea + eb, Coeff(ca * cb));
    return r;
  }
  Laurent& operator*=(const Laurent& o) { return *this = *this * o; }

  Laurent shifted(std::int64_t by) const {
    Laurent r;
    for (const auto& [e, c] : terms_) r.terms_.emplace(e + by, c);
    return r;
  }

  friend bool operator==(const Laurent& a, const Laurent& b) { return a.terms_ == b.terms_; }

  Rational evaluate(const Rational& x) const {
    Rational total = 0;
    for (const auto& [e, c] : terms_) total += Rational(c) * rpow(x, e);
    return total;
  }

  // Highest power first, e.g. "q^3 + 2q^2 - 1".
  std::string to_string(const std::string& var = "q") const {
    if (terms_.empty()) return "0";
    std::string out;
    bool first = true;
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
      const auto e = it->first;
      Coeff c = it->second;
      const bool neg = c < 0;
      if (neg) c = -c;
      if (first) {
        if (neg) out += "-";
      } else {
        out += neg ? " - " : " + ";
      }
      first = false;
      const std::string cs = stacky::to_string(c);
      if (e == 0) {
        out += cs;
        continue;
      }
      if (cs != "1") out += (cs.find('/') != std::string::npos ? "(" + cs + ")" : cs);
      out += var;
      if (e != 1) out += "^" + (e < 0 ? "(" + std::to_string(e) + ")" : std::to_string(e));
    }
    return out;
  }

 private:
  Terms terms_;
};

using IntPoly = Laurent<BigInt>;
using RatPoly = Laurent<Rational>;

// q^0 + q^1 + ... + q^(count-1)
inline IntPoly geometric_poly(std::int64_t count) {
  IntPoly p;
  for (std::int64_t i = 0; i < count; ++i) p.add_term(i, 1);
  return p;
}

}  // namespace stacky
