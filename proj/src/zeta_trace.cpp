#include "stacky/zeta_trace.hpp"

#include <algorithm>

#include "stacky/stack_count.hpp"

namespace stacky {

LPolynomial::LPolynomial(BigInt q_in, std::vector<BigInt> c) : q(std::move(q_in)), coeffs(std::move(c)) {
  if (coeffs.empty() || coeffs.size() % 2 == 0) throw Error(ErrorCode::InvalidArgument, "L-polynomial must have even degree 2g");
  if (coeffs[0] != 1) throw Error(ErrorCode::InvalidArgument, "L-polynomial must have constant term 1");
  if (q < 2) throw Error(ErrorCode::InvalidArgument, "q must be >= 2");
  g = static_cast<int>(coeffs.size() / 2);
  for (int i = 0; i <= g; ++i) {
    if (coeffs[static_cast<std::size_t>(2 * g - i)] != ipow(q, static_cast<std::uint64_t>(g - i)) * coeffs[static_cast<std::size_t>(i)]) {
      throw Error(ErrorCode::InvalidArgument, "coefficients violate a_(2g-i) = q^(g-i) a_i at i=" + std::to_string(i));
    }
  }
}

std::vector<BigInt> LPolynomial::elementary() const {
  std::vector<BigInt> e(coeffs.size());
  for (std::size_t i = 0; i < coeffs.size(); ++i) e[i] = (i % 2) ? BigInt(-coeffs[i]) : coeffs[i];
  return e;
}

BigInt LPolynomial::at_one() const {
  BigInt s = 0;
  for (const auto& c : coeffs) s += c;
  return s;
}

std::vector<BigInt> power_sums(const LPolynomial& L, int count) {
  const auto e = L.elementary();
  const int top = 2 * L.g;
  std::vector<BigInt> p(static_cast<std::size_t>(count) + 1, 0);
  for (int m = 1; m <= count; ++m) {
    BigInt acc = 0;
    for (int i = 1; i <= std::min(m - 1, top); ++i) {
      const BigInt term = e[static_cast<std::size_t>(i)] * p[static_cast<std::size_t>(m - i)];
      acc += (i % 2) ? term : BigInt(-term);
    }
    if (m <= top) {
      const BigInt term = BigInt(m) * e[static_cast<std::size_t>(m)];
      acc += (m % 2) ? term : BigInt(-term);
    }
    p[static_cast<std::size_t>(m)] = acc;
  }
  return {p.begin() + 1, p.end()};
}

std::vector<Rational> elementary_from_power_sums(const std::vector<BigInt>& p, int degree) {
  if (static_cast<int>(p.size()) < degree) throw Error(ErrorCode::InvalidArgument, "not enough power sums");
  std::vector<Rational> e(static_cast<std::size_t>(degree) + 1, 0);
  e[0] = 1;
  for (int m = 1; m <= degree; ++m) {
    Rational acc = 0;
    for (int i = 1; i <= m; ++i) {
      const Rational term = e[static_cast<std::size_t>(m - i)] * Rational(p[static_cast<std::size_t>(i - 1)]);
      acc += (i % 2) ? term : Rational(-term);
    }
    e[static_cast<std::size_t>(m)] = acc / m;
  }
  return e;
}

IntPoly CurveExpr::q_part() const {
  auto it = terms_.find(Key(static_cast<std::size_t>(g_), 0));
  return it == terms_.end() ? IntPoly{} : it->second;
}

std::int64_t CurveExpr::leading_half_exponent() const {
  std::int64_t best = INT64_MIN;
  for (const auto& [key, poly] : terms_) {
    std::int64_t half = 2 * poly.degree();
    for (std::size_t i = 0; i < key.size(); ++i) half += static_cast<std::int64_t>(i + 1) * key[i];
    best = std::max(best, half);
  }
  return best;
}

void CurveExpr::add(const Key& key, const IntPoly& poly) {
  if (poly.is_zero()) return;
  auto& slot = terms_[key];
  slot += poly;
  if (slot.is_zero()) terms_.erase(key);
}

CurveExpr& CurveExpr::operator+=(const CurveExpr& o) {
  if (o.g_ != g_) throw Error(ErrorCode::GenusMismatch, "curve expressions of different genus");
  for (const auto& [k, p] : o.terms_) add(k, p);
  return *this;
}

CurveExpr operator*(const CurveExpr& a, const CurveExpr& b) {
  if (a.g_ != b.g_) throw Error(ErrorCode::GenusMismatch, "curve expressions of different genus");
  CurveExpr r(a.g_);
  for (const auto& [ka, pa] : a.terms_) {
    for (const auto& [kb, pb] : b.terms_) {
      CurveExpr::Key k(ka.size());
      for (std::size_t i = 0; i < k.size(); ++i) k[i] = ka[i] + kb[i];
      r.add(k, pa * pb);
    }
  }
  return r;
}

CurveExpr CurveExpr::scaled(const IntPoly& poly) const {
  CurveExpr r(g_);
  for (const auto& [k, p] : terms_) r.add(k, p * poly);
  return r;
}

Rational CurveExpr::evaluate(const Rational& q, const std::vector<BigInt>& e) const {
  Rational total = 0;
  for (const auto& [key, poly] : terms_) {
    Rational term = poly.evaluate(q);
    for (std::size_t i = 0; i < key.size(); ++i) term *= Rational(ipow(e.at(i + 1), static_cast<std::uint64_t>(key[i])));
    total += term;
  }
  return total;
}

std::string CurveExpr::to_string() const {
  if (terms_.empty()) return "0";
  std::string out;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    if (!out.empty()) out += " + ";
    std::string mono;
    for (std::size_t i = 0; i < it->first.size(); ++i) {
      if (it->first[i] == 0) continue;
      mono += "*e" + std::to_string(i + 1);
      if (it->first[i] > 1) mono += "^" + std::to_string(it->first[i]);
    }
    out += mono.empty() ? it->second.to_string() : "(" + it->second.to_string() + ")" + mono;
  }
  return out;
}

CurveExpr CurveExpr::constant(int g, const IntPoly& poly) {
  CurveExpr r(g);
  r.add(Key(static_cast<std::size_t>(g), 0), poly);
  return r;
}

CurveExpr CurveExpr::elementary(int g, int i) {
  if (i < 0 || i > 2 * g) return CurveExpr(g);
  if (i == 0) return constant(g, IntPoly(1));
  const int j = i <= g ? i : 2 * g - i;
  const IntPoly factor = IntPoly::monomial(i <= g ? 0 : g - j);
  if (j == 0) return constant(g, factor);
  CurveExpr r(g);
  Key k(static_cast<std::size_t>(g), 0);
  k[static_cast<std::size_t>(j - 1)] = 1;
  r.add(k, factor);
  return r;
}

namespace {

// Complete homogeneous symmetric functions h_0 .. h_max of the reciprocal roots.
std::vector<CurveExpr> complete_symmetric(int g, int max) {
  std::vector<CurveExpr> h;
  h.push_back(CurveExpr::constant(g, IntPoly(1)));
  for (int k = 1; k <= max; ++k) {
    CurveExpr acc(g);
    for (int i = 1; i <= std::min(k, 2 * g); ++i) {
      CurveExpr term = CurveExpr::elementary(g, i) * h[static_cast<std::size_t>(k - i)];
      acc += (i % 2) ? term : term.scaled(IntPoly(-1));
    }
    h.push_back(std::move(acc));
  }
  return h;
}

// Frobenius^{-1} trace of each group, times q^D, split at `split` (exclusive upper part).
std::pair<CurveExpr, CurveExpr> trace_parts(const CohomologyTable& table, int split) {
  if (!table.dimension) throw Error(ErrorCode::InvalidArgument, "cohomology table has no dimension");
  const int g = table.genus;
  int max_sym = 0;
  for (const auto& grp : table.groups)
    for (const auto& [cls, mult] : grp.classes) {
      if (cls.ext < 0 || cls.ext > 2 * g || cls.sym < 0 || (g == 0 && (cls.ext || cls.sym))) {
        throw Error(ErrorCode::GenusMismatch, "weight class incompatible with genus " + std::to_string(g));
      }
      max_sym = std::max(max_sym, cls.sym);
    }
  const auto h = complete_symmetric(g, max_sym);
  CurveExpr low(g), high(g);
  for (const auto& grp : table.groups) {
    for (const auto& [cls, mult] : grp.classes) {
      // The inverse eigenvalues are w/q for w running over the eigenvalues themselves.
      const std::int64_t shift = *table.dimension - cls.tate - cls.ext - cls.sym;
      const BigInt sign_mult = (grp.degree % 2 ? -1 : 1) * BigInt(mult);
      CurveExpr term = (CurveExpr::elementary(g, cls.ext) * h[static_cast<std::size_t>(cls.sym)]).scaled(IntPoly::monomial(shift, sign_mult));
      (grp.degree >= split ? high : low) += term;
    }
  }
  return {low, high};
}

}  // namespace

CurveExpr trace_count_symbolic(const CohomologyTable& table) {
  auto [low, high] = trace_parts(table, INT32_MAX);
  (void)high;
  return low;
}

TraceResult trace_count(const CohomologyTable& table, const BigInt& q, const std::optional<LPolynomial>& lpoly) {
  bool needs_curve = false;
  for (const auto& grp : table.groups)
    for (const auto& [cls, mult] : grp.classes) needs_curve = needs_curve || !cls.is_tate();
  std::vector<BigInt> e(static_cast<std::size_t>(2 * table.genus) + 1, 0);
  if (needs_curve) {
    if (!lpoly) throw Error(ErrorCode::MissingLPolynomial, "table has curve classes; an L-polynomial is required");
    if (lpoly->g != table.genus) throw Error(ErrorCode::GenusMismatch, "L-polynomial genus differs from table genus");
    if (lpoly->q != q) throw Error(ErrorCode::InvalidArgument, "L-polynomial is over a different q");
    e = lpoly->elementary();
  }
  const auto [low, high] = trace_parts(table, table.stable_below.value_or(INT32_MAX));
  TraceResult r;
  r.unverified_tail = high.evaluate(Rational(q), e);
  r.value = low.evaluate(Rational(q), e) + r.unverified_tail;
  return r;
}

namespace {

ModuliSpec make(std::string name, std::vector<std::uint32_t> w, std::vector<std::uint64_t> forbidden, std::uint32_t disc = 12) {
  return ModuliSpec{std::move(name), WeightVector(std::move(w)), std::move(forbidden), disc};
}

}  // namespace

std::vector<std::string> moduli_names() {
  std::vector<std::string> names = {"stable-elliptic", "gamma1-2", "gamma1-3", "gamma1-4", "gamma-2"};
  for (int m : {5, 6, 7, 8, 9, 10, 12}) names.push_back("gamma1-" + std::to_string(m));
  for (int m = 2; m <= 5; ++m) names.push_back("smyth-m" + std::to_string(m));
  names.push_back("hyperelliptic-<g>");
  return names;
}

ModuliSpec moduli_lookup(const std::string& name) {
  if (name == "stable-elliptic") return make(name, {4, 6}, {2, 3});
  if (name == "gamma1-2") return make(name, {2, 4}, {2});
  if (name == "gamma1-3") return make(name, {1, 3}, {3});
  if (name == "gamma1-4") return make(name, {1, 2}, {2});
  if (name == "gamma-2") return make(name, {2, 2}, {2});
  if (name == "smyth-m2") return make(name, {2, 3, 4}, {2, 3});
  if (name == "smyth-m3") return make(name, {1, 2, 2, 3}, {2, 3});
  if (name == "smyth-m4") return make(name, {1, 1, 1, 2, 2}, {2});
  if (name == "smyth-m5") return make(name, {1, 1, 1, 1, 1, 1}, {});
  const std::string level = "gamma1-";
  if (name.rfind(level, 0) == 0) {
    const std::string tail = name.substr(level.size());
    for (int m : {5, 6, 7, 8, 9, 10, 12}) {
      if (tail == std::to_string(m)) return make(name, {1, 1}, prime_factors(static_cast<std::uint64_t>(m)));
    }
  }
  const std::string hyper = "hyperelliptic-";
  if (name.rfind(hyper, 0) == 0) {
    const std::string tail = name.substr(hyper.size());
    if (!tail.empty() && tail.size() <= 3 && std::all_of(tail.begin(), tail.end(), [](char c) { return c >= '0' && c <= '9'; })) {
      const int g = std::stoi(tail);
      if (g >= 2) {
        std::vector<std::uint32_t> w;
        for (int i = 2; i <= 2 * g + 1; ++i) w.push_back(static_cast<std::uint32_t>(2 * i));
        std::vector<std::uint64_t> forbidden;
        for (std::uint64_t p = 2; p <= static_cast<std::uint64_t>(2 * g + 1); ++p)
          if (is_prime(p)) forbidden.push_back(p);
        // Discriminant of the odd-degree Weierstrass model: roots carry weight 2.
        return make(name, std::move(w), std::move(forbidden), static_cast<std::uint32_t>(4 * g * (2 * g + 1)));
      }
    }
  }
  throw Error(ErrorCode::UnknownModuli, "unknown moduli '" + name + "'");
}

BigInt batyrev_manin_sum(const ModuliSpec& spec, std::uint64_t q, const BigInt& B) {
  if (B < 1) throw Error(ErrorCode::InvalidArgument, "B must be >= 1");
  if (q < 2) throw Error(ErrorCode::InvalidArgument, "q must be >= 2");
  for (auto p : spec.forbidden_characteristics) {
    if (q % p == 0) throw Error(ErrorCode::WildCharacteristic, "characteristic " + std::to_string(p) + " is excluded for " + spec.name);
  }
  BigInt total = 0;
  const BigInt step = ipow(BigInt(q), spec.discriminant_degree);
  BigInt height = step;
  for (std::uint32_t n = 1; height <= B; ++n, height *= step) {
    total += boost::multiprecision::numerator(closed_iso_count(q, spec.weights, n).value);
  }
  return total;
}

std::string ShafarevichTerm::to_string() const {
  const std::string coeff = coefficient ? stacky::to_string(*coefficient)
                                        : "(" + numerator.to_string() + ")/(" + denominator.to_string() + ")";
  return coeff + " * B^(" + stacky::to_string(exponent) + ")";
}

ShafarevichTerm shafarevich_leading(int g, const std::optional<BigInt>& q) {
  if (g < 0) throw Error(ErrorCode::InvalidArgument, "genus must be >= 0");
  ShafarevichTerm t;
  t.numerator = IntPoly::monomial(11 - 2 * g, 2) - IntPoly::monomial(9 - 2 * g, 2);
  t.denominator = IntPoly::monomial(10) - IntPoly(1);
  t.exponent = Rational(5, 6);
  if (q) {
    if (*q < 2) throw Error(ErrorCode::InvalidArgument, "q must be >= 2");
    t.coefficient = t.numerator.evaluate(Rational(*q)) / t.denominator.evaluate(Rational(*q));
  }
  return t;
}

std::string GroupDescriptor::to_string() const { return finite ? "Z/" + order.str() : "Z"; }

GroupDescriptor picard_group(const WeightVector& w, std::uint32_t n) {
  if (n < 1) throw Error(ErrorCode::DegreeNonPositive, "n must be >= 1");
  if (w.N() < 1) throw Error(ErrorCode::InvalidArgument, "need at least two weights");
  GroupDescriptor d;
  if (w.N() == 1) {
    d.finite = true;
    d.resultant_degree = BigInt(n) * (w[0] + w[1]);
    d.order = d.resultant_degree;
  }
  return d;
}

}  // namespace stacky
