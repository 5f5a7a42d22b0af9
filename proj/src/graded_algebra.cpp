#include "stacky/graded_algebra.hpp"

#include <algorithm>

namespace stacky {

ThetaElement::ThetaElement(int g, const Rational& constant) : g_(g), c_(static_cast<std::size_t>(g) + 1, Rational(0)) {
  if (g < 0) throw Error(ErrorCode::InvalidArgument, "genus must be >= 0");
  c_[0] = constant;
}

ThetaElement ThetaElement::theta_power(int g, int power, const Rational& coeff) {
  ThetaElement e(g);
  if (power <= g) e.c_[static_cast<std::size_t>(power)] = coeff;
  return e;
}

bool ThetaElement::is_zero() const {
  return std::all_of(c_.begin(), c_.end(), [](const Rational& r) { return r == 0; });
}

int ThetaElement::top_power() const {
  for (int i = g_; i >= 0; --i) {
    if (c_[static_cast<std::size_t>(i)] != 0) return i;
  }
  return -1;
}

static void check_same_ring(int a, int b) {
  if (a != b) throw Error(ErrorCode::GenusMismatch, "theta rings of different genus");
}

ThetaElement& ThetaElement::operator+=(const ThetaElement& o) {
  check_same_ring(g_, o.g_);
  for (std::size_t i = 0; i < c_.size(); ++i) c_[i] += o.c_[i];
  return *this;
}

ThetaElement& ThetaElement::operator-=(const ThetaElement& o) {
  check_same_ring(g_, o.g_);
  for (std::size_t i = 0; i < c_.size(); ++i) c_[i] -= o.c_[i];
  return *this;
}

ThetaElement operator*(const ThetaElement& a, const ThetaElement& b) {
  check_same_ring(a.g_, b.g_);
  ThetaElement r(a.g_);
  for (int i = 0; i <= a.g_; ++i) {
    if (a.c_[static_cast<std::size_t>(i)] == 0) continue;
    for (int j = 0; i + j <= a.g_; ++j) {
      r.c_[static_cast<std::size_t>(i + j)] += a.c_[static_cast<std::size_t>(i)] * b.c_[static_cast<std::size_t>(j)];
    }
  }
  return r;
}

ThetaElement operator*(const Rational& s, ThetaElement a) {
  for (auto& c : a.c_) c *= s;
  return a;
}

std::string ThetaElement::to_string() const {
  std::string out;
  for (int i = 0; i <= g_; ++i) {
    const Rational& c = c_[static_cast<std::size_t>(i)];
    if (c == 0) continue;
    std::string cs = stacky::to_string(c);
    const bool neg = c < 0;
    if (neg) cs = cs.substr(1);
    if (out.empty()) {
      if (neg) out += "-";
    } else {
      out += neg ? " - " : " + ";
    }
    if (i == 0) {
      out += cs;
      continue;
    }
    if (cs != "1") out += cs + "*";
    out += i == 1 ? "theta" : "theta^" + std::to_string(i);
  }
  return out.empty() ? "0" : out;
}

std::int64_t PoincarePolynomial::at_one() const {
  std::int64_t s = 0;
  for (auto c : coeffs) s += c;
  return s;
}

PoincarePolynomial PoincarePolynomial::operator*(const PoincarePolynomial& o) const {
  if (coeffs.empty() || o.coeffs.empty()) return {};
  PoincarePolynomial r{std::vector<std::int64_t>(coeffs.size() + o.coeffs.size() - 1, 0)};
  for (std::size_t i = 0; i < coeffs.size(); ++i)
    for (std::size_t j = 0; j < o.coeffs.size(); ++j) r.coeffs[i + j] += coeffs[i] * o.coeffs[j];
  while (r.coeffs.size() > 1 && r.coeffs.back() == 0) r.coeffs.pop_back();
  return r;
}

std::string PoincarePolynomial::to_string() const {
  std::string out;
  for (std::size_t i = 0; i < coeffs.size(); ++i) {
    if (coeffs[i] == 0) continue;
    if (!out.empty()) out += " + ";
    if (i == 0 || coeffs[i] != 1) out += std::to_string(coeffs[i]);
    if (i > 0) out += i == 1 ? "t" : "t^" + std::to_string(i);
  }
  return out.empty() ? "0" : out;
}

BaseRing BaseRing::point() { return {}; }

BaseRing BaseRing::jacobian(int g) {
  BaseRing b;
  b.kind = g == 0 ? BaseKind::point : BaseKind::theta_truncated;
  b.g = g;
  b.betti = jacobian_poincare(g);
  return b;
}

BaseRing BaseRing::poincare_only(PoincarePolynomial p) {
  BaseRing b;
  b.kind = BaseKind::poincare_only;
  b.betti = std::move(p);
  return b;
}

std::vector<ThetaElement> twisted_chern_polynomial(const ChernData& data) {
  if (!data.eta.empty() && data.eta.size() != data.summands.size()) {
    throw Error(ErrorCode::WeightMismatch, "eta length differs from summand count");
  }
  int total_rank = 0;
  for (const auto& s : data.summands) {
    if (s.rank < 0) throw Error(ErrorCode::InvalidArgument, "negative rank");
    if (static_cast<int>(s.classes.size()) > s.rank) throw Error(ErrorCode::InvalidArgument, "more Chern classes than rank");
    total_rank += s.rank;
  }
  // poly[j] = coefficient of t^j
  std::vector<ThetaElement> poly(static_cast<std::size_t>(total_rank) + 1, ThetaElement(data.g));
  poly[0] = ThetaElement(data.g, 1);
  int filled = 0;
  for (std::size_t i = 0; i < data.summands.size(); ++i) {
    const auto& s = data.summands[i];
    const Rational eta = data.eta.empty() ? Rational(1) : Rational(data.eta[i]);
    std::vector<ThetaElement> factor(static_cast<std::size_t>(s.rank) + 1, ThetaElement(data.g));
    factor[0] = ThetaElement(data.g, 1);
    Rational scale = 1;
    for (std::size_t j = 0; j < s.classes.size(); ++j) {
      scale *= eta;
      if (s.classes[j].genus() != data.g) throw Error(ErrorCode::GenusMismatch, "Chern class lives in a different theta ring");
      factor[j + 1] = scale * s.classes[j];
    }
    std::vector<ThetaElement> next(poly.size(), ThetaElement(data.g));
    for (int a = 0; a <= filled; ++a) {
      if (poly[static_cast<std::size_t>(a)].is_zero()) continue;
      for (int b = 0; b <= s.rank; ++b) {
        next[static_cast<std::size_t>(a + b)] += poly[static_cast<std::size_t>(a)] * factor[static_cast<std::size_t>(b)];
      }
    }
    poly = std::move(next);
    filled += s.rank;
  }
  return {poly.begin() + 1, poly.end()};
}

RelationPresentation wpb_relation(const ChernData& data, const WeightVector& w) {
  if (data.summands.size() != w.size()) {
    throw Error(ErrorCode::WeightMismatch, std::to_string(data.summands.size()) + " summands for " + std::to_string(w.size()) + " weights");
  }
  const auto eta = w.eta();
  if (!data.eta.empty() && data.eta != eta) throw Error(ErrorCode::WeightMismatch, "eta does not equal lcm/lambda_i");
  ChernData twisted = data;
  twisted.eta = eta;
  RelationPresentation rel;
  rel.coefficients = twisted_chern_polynomial(twisted);
  rel.degree = static_cast<int>(rel.coefficients.size());
  rel.zeta_normalization = w.lcm();
  return rel;
}

ChernData jacobian_chern_data(int g, std::uint32_t n, const WeightVector& w) {
  if (g < 0) throw Error(ErrorCode::InvalidArgument, "genus must be >= 0");
  if (static_cast<std::int64_t>(n) < 2 * static_cast<std::int64_t>(g)) {
    throw Error(ErrorCode::DegreeTooSmall, "need n >= 2g (n=" + std::to_string(n) + ", g=" + std::to_string(g) + ")");
  }
  ChernData data;
  data.g = g;
  data.eta = w.eta();
  for (auto l : w.lambdas()) {
    ChernSummand s;
    s.rank = static_cast<int>(static_cast<std::int64_t>(n) * l - g + 1);
    for (int i = 1; i <= std::min(g, s.rank); ++i) {
      Rational c(1, factorial(static_cast<std::uint64_t>(i)));
      if (i % 2) c = -c;
      s.classes.push_back(ThetaElement::theta_power(g, i, c));
    }
    data.summands.push_back(std::move(s));
  }
  return data;
}

PoincarePolynomial jacobian_poincare(int g) {
  PoincarePolynomial p;
  for (int i = 0; i <= 2 * g; ++i) p.coeffs.push_back(static_cast<std::int64_t>(binomial(2 * g, i)));
  return p;
}

PoincarePolynomial wpb_poincare(const PoincarePolynomial& base, std::uint32_t N) {
  PoincarePolynomial fibre{std::vector<std::int64_t>(2 * static_cast<std::size_t>(N) + 1, 0)};
  for (std::size_t i = 0; i <= N; ++i) fibre.coeffs[2 * i] = 1;
  return base * fibre;
}

std::vector<ThetaElement> pushforward_powers(const RelationPresentation& rel, std::size_t max_extra) {
  const int g = rel.coefficients.empty() ? 0 : rel.coefficients.front().genus();
  std::vector<ThetaElement> s;
  s.reserve(max_extra + 1);
  s.emplace_back(g, 1);
  for (std::size_t m = 1; m <= max_extra; ++m) {
    ThetaElement acc(g);
    const std::size_t top = std::min<std::size_t>(m, rel.coefficients.size());
    for (std::size_t j = 1; j <= top; ++j) acc -= rel.coefficients[j - 1] * s[m - j];
    s.push_back(std::move(acc));
  }
  return s;
}

Rational phi_cover_degree(const WeightVector& w) {
  BigInt prod = 1;
  for (auto l : w.lambdas()) prod *= l;
  return Rational(ipow(BigInt(w.lcm()), w.N()), prod);
}

}  // namespace stacky
