#include <doctest.h>

#include <random>
#include <set>

#include "stacky/binary_forms.hpp"

using namespace stacky;

namespace {

BinaryForm form(std::vector<std::uint32_t> coeffs) {
  std::vector<FieldElement> c;
  for (auto v : coeffs) c.push_back(FieldElement{v});
  return BinaryForm(static_cast<std::uint32_t>(coeffs.size() - 1), c);
}

FieldElement eval(const Field& f, std::span<const FieldElement> coeffs, FieldElement x, FieldElement y) {
  // sum c_i x^i y^(d-i), with prime-field coefficients embedded by index
  const std::size_t d = coeffs.size() - 1;
  FieldElement acc = f.zero();
  for (std::size_t i = 0; i <= d; ++i) {
    acc = f.add(acc, f.mul(coeffs[i], f.mul(f.pow(x, i), f.pow(y, d - i))));
  }
  return acc;
}

// Independent oracle for prime q: look for a common zero on P^1 over F_(p^k) for every
// k up to the smallest positive degree among the nonzero forms.
bool has_common_zero_by_evaluation(std::uint32_t p, const std::vector<std::vector<FieldElement>>& forms) {
  std::size_t min_deg = SIZE_MAX;
  bool any = false;
  for (const auto& f : forms) {
    if (std::all_of(f.begin(), f.end(), [](FieldElement c) { return c.value == 0; })) continue;
    any = true;
    min_deg = std::min(min_deg, f.size() - 1);
  }
  if (!any) return true;
  std::uint64_t qq = p;
  for (std::size_t k = 1; k <= min_deg && qq <= 4096; ++k, qq *= p) {
    const Field ext = Field::create(p, static_cast<std::uint32_t>(k));
    auto vanish_at = [&](FieldElement x, FieldElement y) {
      for (const auto& f : forms) {
        if (eval(ext, f, x, y).value != 0) return false;
      }
      return true;
    };
    if (vanish_at(ext.one(), ext.zero())) return true;
    for (std::uint32_t t = 0; t < ext.q(); ++t)
      if (vanish_at(FieldElement{t}, ext.one())) return true;
  }
  return false;
}

}  // namespace

TEST_CASE("weight vector derived data") {
  const WeightVector w({2, 3, 4});
  CHECK(w.N() == 2);
  CHECK(w.total() == 9);
  CHECK(w.lcm() == 12);
  CHECK(w.gcd() == 1);
  CHECK(w.eta() == std::vector<std::uint64_t>{6, 4, 3});
  for (std::size_t i = 0; i < w.size(); ++i) CHECK(w.eta()[i] * w[i] == w.lcm());
  CHECK(WeightVector::parse("4,6").lambdas() == std::vector<std::uint32_t>{4, 6});
  CHECK_THROWS_AS(WeightVector::parse("1,0"), Error);
  CHECK_THROWS_AS(WeightVector::parse(""), Error);
}

TEST_CASE("gcd degree examples") {
  const Field f3 = Field::create(3, 1);
  // (x, y)
  CHECK(tuple_gcd_degree(f3, FormTuple::loose({form({0, 1}), form({1, 0})})) == 0);
  // x^2 + y^2 and x^2 - y^2
  CHECK(tuple_gcd_degree(f3, FormTuple::loose({form({1, 0, 1}), form({2, 0, 1})})) == 0);
  // x*y and x^2 share x
  CHECK(tuple_gcd_degree(f3, FormTuple::loose({form({0, 1, 0}), form({0, 0, 1})})) == 1);
  // y^2 and x*y share y (a root at infinity)
  CHECK(tuple_gcd_degree(f3, FormTuple::loose({form({1, 0, 0}), form({0, 1, 0})})) == 1);
  // all zero
  CHECK(tuple_gcd_degree(f3, FormTuple::loose({form({0, 0}), form({0, 0, 0})})) == kInfiniteGcdDegree);
  // a single constant-free linear form and a zero form
  CHECK(tuple_gcd_degree(f3, FormTuple::loose({form({1, 1}), form({0, 0})})) == 1);
}

TEST_CASE("basepoint-free examples") {
  const Field f3 = Field::create(3, 1);
  const WeightVector w11({1, 1});
  CHECK(is_basepoint_free(f3, FormTuple({form({0, 1}), form({1, 0})}, w11, 1)));
  const WeightVector w12({1, 2});
  CHECK_FALSE(is_basepoint_free(f3, FormTuple({form({0, 0, 1}), BinaryForm::zero(4)}, w12, 2)));
  CHECK_FALSE(is_basepoint_free(f3, FormTuple({BinaryForm::zero(2), BinaryForm::zero(4)}, w12, 2)));
  CHECK_THROWS_AS(FormTuple({form({0, 1}), form({1, 0})}, w12, 1), Error);
}

TEST_CASE("tuple space sizes and partitions") {
  const Field f3 = Field::create(3, 1);
  const TupleSpace s(f3, WeightVector({1, 2}), 1);
  CHECK(s.size() == 243);
  std::size_t total = 0;
  for (auto st = tuple_space_iter(s, 0, 1); !st.done(); st.next()) ++total;
  CHECK(total == 243);

  std::set<std::vector<std::uint32_t>> seen;
  for (u128 part = 0; part < 3; ++part) {
    std::size_t count = 0;
    for (auto st = tuple_space_iter(s, part, 3); !st.done(); st.next()) {
      std::vector<std::uint32_t> key;
      for (const auto& fm : st.current().forms)
        for (auto c : fm.coeffs) key.push_back(c.value);
      CHECK(seen.insert(key).second);
      ++count;
    }
    CHECK(count == 81);
  }
  CHECK(seen.size() == 243);

  const TupleSpace s2(Field::create(2, 1), WeightVector({1, 1}), 1);
  CHECK(s2.size() == 16);
  CHECK_THROWS_AS(s.partition(3, 3), Error);
  CHECK_THROWS_AS(s.partition(0, 0), Error);
}

TEST_CASE("uneven partitions cover every rank once") {
  const TupleSpace s(Field::create(5, 1), WeightVector({1, 1}), 1);  // 625
  for (u128 total : {1, 2, 7, 13, 625, 700}) {
    u128 expect = 0;
    for (u128 i = 0; i < total; ++i) {
      const auto [b, e] = s.partition(i, total);
      CHECK(b == expect);
      CHECK(e >= b);
      expect = e;
    }
    CHECK(expect == s.size());
  }
}

TEST_CASE("cursor matches unrank") {
  const TupleSpace s(Field::create(3, 1), WeightVector({1, 2}), 1);
  TupleCursor c(s, 17, 60);
  for (u128 r = 17; r < 60; ++r, c.next()) {
    REQUIRE_FALSE(c.done());
    CHECK(c.digits() == s.unrank(r));
  }
  CHECK(c.done());
}

TEST_CASE("gcd degree is invariant under weighted scaling (q=3, weights 1,2, n=1)") {
  const Field f = Field::create(3, 1);
  const WeightVector w({1, 2});
  const TupleSpace s(f, w, 1);
  for (auto st = tuple_space_iter(s, 0, 1); !st.done(); st.next()) {
    const FormTuple t = st.current();
    const int base = tuple_gcd_degree(f, t);
    for (std::uint32_t z = 1; z < f.q(); ++z) {
      FormTuple scaled = t;
      for (std::size_t i = 0; i < scaled.forms.size(); ++i)
        for (auto& c : scaled.forms[i].coeffs) c = f.mul(c, f.pow(FieldElement{z}, w[i]));
      CHECK(tuple_gcd_degree(f, scaled) == base);
    }
  }
}

TEST_CASE("basepoint freeness is invariant under swapping x and y") {
  for (auto [q, w] : {std::pair{3u, WeightVector({1, 2})}, std::pair{2u, WeightVector({1, 1, 1})}, std::pair{4u, WeightVector({1, 1})}}) {
    const Field f = Field::parse(std::to_string(q));
    const TupleSpace s(f, w, 1);
    for (auto st = tuple_space_iter(s, 0, 1); !st.done(); st.next()) {
      FormTuple t = st.current();
      const bool free = is_basepoint_free(f, t);
      const int deg = tuple_gcd_degree(f, t);
      for (auto& fm : t.forms) fm = fm.swapped();
      CHECK(is_basepoint_free(f, t) == free);
      CHECK(tuple_gcd_degree(f, t) == deg);
    }
  }
}

TEST_CASE("gcd of a form with itself") {
  const Field f = Field::create(5, 1);
  std::mt19937 rng(7);
  for (int trial = 0; trial < 200; ++trial) {
    const std::uint32_t d = rng() % 6;
    std::vector<FieldElement> c(d + 1);
    for (auto& v : c) v = FieldElement{static_cast<std::uint32_t>(rng() % 5)};
    const BinaryForm a(d, c);
    const int g = tuple_gcd_degree(f, FormTuple::loose({a, a}));
    if (a.is_zero()) {
      CHECK(g == kInfiniteGcdDegree);
    } else {
      CHECK(g == static_cast<int>(d));
    }
  }
}

TEST_CASE("gcd degree is bounded by the smaller degree") {
  const Field f = Field::create(7, 1);
  std::mt19937 rng(11);
  for (int trial = 0; trial < 500; ++trial) {
    const std::uint32_t d1 = 1 + rng() % 5, d2 = 1 + rng() % 5;
    std::vector<FieldElement> c1(d1 + 1), c2(d2 + 1);
    for (auto& v : c1) v = FieldElement{static_cast<std::uint32_t>(rng() % 7)};
    for (auto& v : c2) v = FieldElement{static_cast<std::uint32_t>(rng() % 7)};
    const BinaryForm a(d1, c1), b(d2, c2);
    if (a.is_zero() || b.is_zero()) continue;
    CHECK(tuple_gcd_degree(f, FormTuple::loose({a, b})) <= static_cast<int>(std::min(d1, d2)));
  }
}

TEST_CASE("algebraic basepoint test agrees with point evaluation over extensions") {
  std::mt19937 rng(2024);
  for (std::uint32_t p : {2u, 3u, 5u}) {
    const Field f = Field::create(p, 1);
    for (int trial = 0; trial < 400; ++trial) {
      const std::size_t forms = 2 + rng() % 2;
      std::vector<BinaryForm> fs;
      std::vector<std::vector<FieldElement>> raw;
      for (std::size_t i = 0; i < forms; ++i) {
        const std::uint32_t d = 1 + rng() % 3;
        std::vector<FieldElement> c(d + 1);
        // Bias towards sparse forms so shared roots are common.
        for (auto& v : c) v = FieldElement{(rng() % 3 == 0) ? 0u : static_cast<std::uint32_t>(rng() % p)};
        fs.emplace_back(d, c);
        raw.push_back(c);
      }
      const bool free = is_basepoint_free(f, FormTuple::loose(fs));
      CHECK(free == !has_common_zero_by_evaluation(p, raw));
    }
  }
}
