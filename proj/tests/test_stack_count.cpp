#include <doctest.h>

#include "stacky/stack_count.hpp"

using namespace stacky;

namespace {

Rational closed(std::uint64_t q, std::vector<std::uint32_t> w, std::uint32_t n) {
  return closed_weighted_count(BigInt(q), WeightVector(std::move(w)), n).value;
}

ErrorCode code_of(const std::function<void()>& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  return ErrorCode::InternalInvariant;
}

// |PGL_2(F_q)| = q(q^2 - 1)
BigInt pgl2_order(std::uint64_t q) { return BigInt(q) * (BigInt(q) * q - 1); }

}  // namespace

TEST_CASE("closed weighted count examples") {
  CHECK(closed(3, {1, 1}, 1) == Rational(pgl2_order(3)));
  CHECK(closed(2, {1, 1}, 1) == Rational(pgl2_order(2)));
  CHECK(closed(7, {1, 1}, 1) == Rational(pgl2_order(7)));
  CHECK(closed(3, {1, 2}, 1) == 72);
  CHECK(closed(5, {1, 2}, 1) == 600);
  CHECK(closed(3, {2, 4}, 1) == 1944);
  CHECK(closed(5, {1, 1, 1}, 1) == 3720);
  CHECK(closed(3, {1, 1}, 2) == 216);
  CHECK(closed(5, {7}, 3) == 0);
  CHECK(closed(5, {2, 3, 4}, 1) == 58125000);
}

TEST_CASE("closed weighted polynomial matches the expanded product") {
  // (1 + q + q^2)(q^9 - q^7) for weights 2,3,4
  const IntPoly p = closed_weighted_polynomial(WeightVector({2, 3, 4}), 1);
  IntPoly expect;
  for (int e : {11, 10, 9}) expect.add_term(e, 1);
  for (int e : {9, 8, 7}) expect.add_term(e, -1);
  CHECK(p == expect);
  CHECK(closed_weighted_polynomial(WeightVector({5}), 2).is_zero());
}

TEST_CASE("closed count errors") {
  CHECK(code_of([] { closed(2, {2, 4}, 1); }) == ErrorCode::WildCharacteristic);
  CHECK(code_of([] { closed(9, {1, 3}, 1); }) == ErrorCode::WildCharacteristic);
  CHECK(code_of([] { closed(3, {1, 1}, 0); }) == ErrorCode::DegreeNonPositive);
  CHECK(code_of([] { closed_iso_count(2, WeightVector({2, 4}), 1); }) == ErrorCode::WildCharacteristic);
}

TEST_CASE("brute weighted count examples") {
  auto r = brute_weighted_count(Field::create(3, 1), WeightVector({1, 2}), 1);
  CHECK(r.value == 72);
  CHECK(*r.tuple_count == 144);
  CHECK(r.method == CountMethod::brute_force);
  r = brute_weighted_count(Field::create(2, 1), WeightVector({1, 1}), 1);
  CHECK(r.value == 6);
  CHECK(*r.tuple_count == 6);
  r = brute_weighted_count(Field::create(3, 1), WeightVector({2, 4}), 1);
  CHECK(r.value == 1944);
  CHECK(*r.tuple_count == 3888);
}

TEST_CASE("mass formula: (q - 1) tuple_count relation") {
  for (auto [q, w] : {std::pair{"4", WeightVector({1, 1})}, std::pair{"3", WeightVector({1, 1, 1})}, std::pair{"5", WeightVector({1, 3})}}) {
    const Field f = Field::parse(q);
    const auto r = brute_weighted_count(f, w, 1);
    CHECK(r.value * (f.q() - 1) == Rational(*r.tuple_count));
    CHECK(r.value == closed_weighted_count(BigInt(f.q()), w, 1).value);
  }
}

TEST_CASE("brute force over extension fields agrees with the closed form") {
  CHECK(brute_weighted_count(Field::create(2, 2), WeightVector({1, 1}), 1).value == closed(4, {1, 1}, 1));
  CHECK(brute_weighted_count(Field::create(2, 3), WeightVector({1, 1}), 1).value == closed(8, {1, 1}, 1));
  CHECK(brute_weighted_count(Field::create(3, 2), WeightVector({1, 2}), 1).value == closed(9, {1, 2}, 1));
  CHECK(brute_iso_count(Field::create(2, 2), WeightVector({1, 3}), 1).value == closed_iso_count(4, WeightVector({1, 3}), 1).value);
}

TEST_CASE("partition independence for workers 1, 2, 7") {
  const Field f = Field::create(3, 1);
  for (const auto& w : {WeightVector({1, 2}), WeightVector({1, 1, 1}), WeightVector({2, 4})}) {
    std::optional<SupportHistogram> first;
    for (unsigned workers : {1u, 2u, 7u}) {
      EnumerationOptions opts;
      opts.workers = workers;
      const auto h = enumerate_basepoint_free(f, w, 1, opts);
      if (!first) {
        first = h;
      } else {
        CHECK(h.by_support == first->by_support);
      }
    }
  }
}

TEST_CASE("budget is enforced") {
  EnumerationOptions opts;
  opts.budget = 100;
  CHECK(code_of([&] { brute_weighted_count(Field::create(3, 1), WeightVector({1, 2}), 1, opts); }) == ErrorCode::BudgetExceeded);
}

TEST_CASE("progress callback reaches the total") {
  EnumerationOptions opts;
  opts.workers = 2;
  u128 last = 0, total_seen = 0;
  opts.progress = [&](u128 done, u128 total) {
    CHECK(done >= last);
    last = done;
    total_seen = total;
  };
  brute_weighted_count(Field::create(3, 1), WeightVector({1, 2}), 1, opts);
  CHECK(last == 243);
  CHECK(total_seen == 243);
}

TEST_CASE("wild characteristic brute force is flagged") {
  const auto r = brute_weighted_count(Field::create(2, 1), WeightVector({2, 2}), 1);
  CHECK(r.wild);
  CHECK(r.value * 1 == Rational(*r.tuple_count));
}

TEST_CASE("iso counts: Burnside oracle against the divisor-sum formula") {
  const Field f3 = Field::create(3, 1);
  CHECK(brute_iso_count(f3, WeightVector({2, 4}), 1).value == 3888);
  CHECK(closed_iso_count(3, WeightVector({2, 4}), 1).value == 3888);
  CHECK(brute_iso_count(f3, WeightVector({1, 2}), 1).value == 72);
  CHECK(brute_iso_count(f3, WeightVector({1, 2, 2}), 1).value == 3024);
  CHECK(closed_iso_count(3, WeightVector({1, 2, 2}), 1).value == closed(3, {1, 2, 2}, 1) + closed(3, {2, 2}, 1));
  CHECK(closed_iso_count(3, WeightVector({1, 1}), 2).value == closed(3, {1, 1}, 2));
  CHECK(closed_iso_count(5, WeightVector({2, 2}), 1).value == 6000);
  CHECK(brute_iso_count(Field::create(5, 1), WeightVector({2, 2}), 1).value == 6000);
  // P(2,3,4) picks up the P(2,4) substack through the scalar -1.
  CHECK(closed_iso_count(5, WeightVector({2, 3, 4}), 1).value == 58125000 + 75000);
}

TEST_CASE("iso formula agrees with Burnside on extra cases") {
  struct Case {
    const char* q;
    std::vector<std::uint32_t> w;
  };
  for (const auto& c : std::vector<Case>{{"5", {1, 2}}, {"5", {2, 4}}, {"7", {1, 3}}, {"7", {2, 2}}, {"5", {1, 1, 2}}, {"4", {1, 3}}, {"7", {3, 3}}}) {
    const Field f = Field::parse(c.q);
    const WeightVector w(c.w);
    CAPTURE(c.q);
    CAPTURE(w.to_string());
    CHECK(brute_iso_count(f, w, 1).value == closed_iso_count(f.q(), w, 1).value);
  }
}

TEST_CASE("generic-stabilizer factor: gcd 2 weights double the count") {
  for (std::uint64_t q : {3ull, 5ull, 7ull, 11ull}) {
    CHECK(closed_iso_count(q, WeightVector({2, 4}), 1).value == 2 * closed(q, {2, 4}, 1));
    CHECK(closed_iso_count(q, WeightVector({2, 2}), 2).value == 2 * closed(q, {2, 2}, 2));
  }
}

TEST_CASE("discriminant counts") {
  CHECK(discriminant_weighted_count(3, WeightVector({1, 2}), 1).value == 49);
  CHECK(brute_discriminant_count(Field::create(3, 1), WeightVector({1, 2}), 1).value == 49);
  IntPoly expect;
  expect.add_term(0, 1);
  expect.add_term(1, 1);
  expect.add_term(2, 2);
  expect.add_term(3, 1);
  CHECK(discriminant_weighted_polynomial(WeightVector({1, 2}), 1) == expect);
  // single weight: the whole ambient stack
  CHECK(discriminant_weighted_count(5, WeightVector({3}), 1).value == (625 - 1) / 4);
}

TEST_CASE("sandwich: Hom and discriminant partition the ambient stack") {
  for (const auto& w : {WeightVector({1, 1}), WeightVector({1, 2}), WeightVector({2, 3, 4}), WeightVector({1, 1, 1, 2})}) {
    for (std::uint32_t n = 1; n <= 3; ++n) {
      const IntPoly ambient = geometric_poly(static_cast<std::int64_t>(ambient_dimension(w, n)) + 1);
      CHECK(closed_weighted_polynomial(w, n) + discriminant_weighted_polynomial(w, n) == ambient);
      CHECK(discriminant_weighted_polynomial(w, n).degree() == static_cast<std::int64_t>(ambient_dimension(w, n) - w.N()));
      for (std::uint64_t q : {5ull, 7ull, 11ull}) {
        if (!is_tame(q, w)) continue;
        const Rational c = closed_weighted_count(BigInt(q), w, n).value;
        CHECK(c >= 0);
        CHECK(c <= ambient.evaluate(Rational(q)));
      }
    }
  }
}
