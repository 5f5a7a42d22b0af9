#include "stacky/stack_count.hpp"

#include <algorithm>
#include <atomic>
#include <mutex>
#include <thread>

namespace stacky {
namespace {

void require_positive_degree(std::uint32_t n) {
  if (n < 1) throw Error(ErrorCode::DegreeNonPositive, "degree n must be >= 1");
}

void require_tame(const BigInt& q, const WeightVector& w) {
  for (auto l : w.lambdas()) {
    if (boost::multiprecision::gcd(q, BigInt(l)) != 1) {
      throw Error(ErrorCode::WildCharacteristic, "q=" + q.str() + " shares a factor with weight " + std::to_string(l));
    }
  }
}

std::uint64_t ambient_rank(const WeightVector& w, std::uint32_t n) {
  std::uint64_t m = 0;
  for (auto l : w.lambdas()) m += static_cast<std::uint64_t>(n) * l + 1;
  return m;
}

Rational divide_by_units(const BigInt& count, std::uint32_t q, bool tame) {
  if (tame && count % (q - 1) != 0) {
    throw Error(ErrorCode::InternalInvariant, "q-1 does not divide the basepoint-free count " + count.str());
  }
  return Rational(count, q - 1);
}

}  // namespace

std::string to_string(CountMethod m) {
  switch (m) {
    case CountMethod::closed_form: return "closed_form";
    case CountMethod::brute_force: return "brute_force";
    case CountMethod::burnside: return "burnside";
  }
  return "unknown";
}

BigInt SupportHistogram::total() const {
  BigInt sum = 0;
  for (const auto& c : by_support) sum += c;
  return sum;
}

BigInt SupportHistogram::within(std::uint64_t mask) const {
  BigInt sum = 0;
  for (std::uint64_t s = 0; s < by_support.size(); ++s) {
    if ((s & ~mask) == 0) sum += by_support[s];
  }
  return sum;
}

bool is_tame(std::uint64_t characteristic, const WeightVector& w) {
  return std::none_of(w.lambdas().begin(), w.lambdas().end(), [&](std::uint32_t l) { return l % characteristic == 0; });
}

SupportHistogram enumerate_basepoint_free(const Field& field, const WeightVector& w, std::uint32_t n,
                                          const EnumerationOptions& opts) {
  require_positive_degree(n);
  if (w.size() > 20) throw Error(ErrorCode::InvalidArgument, "at most 20 weights supported for enumeration");
  const TupleSpace space(field, w, n);
  if (space.size() > opts.budget) {
    throw Error(ErrorCode::BudgetExceeded, "tuple space has " + to_string(space.size()) + " elements, budget is " + to_string(opts.budget));
  }
  const unsigned workers = std::max(1u, opts.workers);
  const std::size_t forms = w.size();
  const std::size_t masks = std::size_t{1} << forms;
  const u128 chunks = std::max<u128>(1, std::min<u128>(space.size(), u128{workers} * 8));

  std::atomic<std::uint64_t> next_chunk{0};
  std::mutex merge_mutex;
  SupportHistogram result;
  result.by_support.assign(masks, 0);
  u128 done = 0;

  auto run = [&] {
    std::vector<std::uint64_t> local(masks, 0);
    GcdWorkspace ws;
    std::vector<std::span<const FieldElement>> spans(forms);
    for (;;) {
      const std::uint64_t chunk = next_chunk.fetch_add(1);
      if (chunk >= chunks) break;
      const auto [begin, end] = space.partition(chunk, chunks);
      TupleCursor cursor(space, begin, end);
      for (; !cursor.done(); cursor.next()) {
        std::uint64_t support = 0;
        for (std::size_t i = 0; i < forms; ++i) {
          spans[i] = cursor.form(i);
          if (std::any_of(spans[i].begin(), spans[i].end(), [](FieldElement c) { return c.value != 0; })) support |= 1u << i;
        }
        if (support != 0 && ws.gcd_degree(field, spans) == 0) ++local[support];
      }
      std::lock_guard lock(merge_mutex);
      done += end - begin;
      if (opts.progress) opts.progress(done, space.size());
    }
    std::lock_guard lock(merge_mutex);
    for (std::size_t s = 0; s < masks; ++s) result.by_support[s] += local[s];
  };

  if (workers == 1) {
    run();
  } else {
    std::vector<std::thread> threads;
    for (unsigned i = 0; i < workers; ++i) threads.emplace_back(run);
    for (auto& t : threads) t.join();
  }
  result.enumerated = space.size();
  return result;
}

IntPoly closed_weighted_polynomial(const WeightVector& w, std::uint32_t n) {
  require_positive_degree(n);
  const std::int64_t N = w.N();
  if (N == 0) return {};
  const std::int64_t top = static_cast<std::int64_t>(w.total()) * n;
  return geometric_poly(N + 1) * (IntPoly::monomial(top) - IntPoly::monomial(top - N));
}

CountResult closed_weighted_count(const BigInt& q, const WeightVector& w, std::uint32_t n) {
  require_positive_degree(n);
  if (q < 2) throw Error(ErrorCode::InvalidArgument, "q must be >= 2");
  require_tame(q, w);
  CountResult r;
  r.method = CountMethod::closed_form;
  r.value = closed_weighted_polynomial(w, n).evaluate(Rational(q));
  return r;
}

CountResult brute_weighted_count(const Field& field, const WeightVector& w, std::uint32_t n, const EnumerationOptions& opts) {
  const auto hist = enumerate_basepoint_free(field, w, n, opts);
  CountResult r;
  r.method = CountMethod::brute_force;
  r.wild = !is_tame(field.p(), w);
  r.tuple_count = hist.total();
  r.value = divide_by_units(*r.tuple_count, field.q(), !r.wild);
  return r;
}

CountResult brute_iso_count(const Field& field, const WeightVector& w, std::uint32_t n, const EnumerationOptions& opts) {
  const auto hist = enumerate_basepoint_free(field, w, n, opts);
  CountResult r;
  r.method = CountMethod::burnside;
  r.wild = !is_tame(field.p(), w);
  r.tuple_count = hist.total();
  r.value = Rational(burnside_orbits(field, w, hist));
  return r;
}

BigInt burnside_orbits(const Field& field, const WeightVector& w, const SupportHistogram& hist) {
  // A scalar z fixes a tuple iff every nonzero form i has z^lambda_i = 1.
  BigInt fixed_sum = 0;
  for (std::uint32_t z = 1; z < field.q(); ++z) {
    std::uint64_t mask = 0;
    for (std::size_t i = 0; i < w.size(); ++i) {
      if (field.pow(FieldElement{z}, w[i]).value == 1) mask |= std::uint64_t{1} << i;
    }
    fixed_sum += hist.within(mask);
  }
  if (fixed_sum % (field.q() - 1) != 0) throw Error(ErrorCode::InternalInvariant, "Burnside sum not divisible by q-1");
  return fixed_sum / (field.q() - 1);
}

CountResult closed_iso_count(std::uint64_t q, const WeightVector& w, std::uint32_t n) {
  require_positive_degree(n);
  if (q < 2) throw Error(ErrorCode::InvalidArgument, "q must be >= 2");
  require_tame(BigInt(q), w);
  BigInt total = 0;
  for (auto d : divisors(q - 1)) {
    std::vector<bool> keep(w.size());
    std::size_t kept = 0;
    for (std::size_t i = 0; i < w.size(); ++i) {
      keep[i] = w[i] % d == 0;
      kept += keep[i];
    }
    if (kept < 2) continue;
    const auto sub = closed_weighted_count(BigInt(q), WeightVector(w.restrict(keep)), n);
    total += BigInt(euler_phi(d)) * boost::multiprecision::numerator(sub.value);
  }
  CountResult r;
  r.method = CountMethod::closed_form;
  r.value = Rational(total);
  return r;
}

std::uint64_t ambient_dimension(const WeightVector& w, std::uint32_t n) { return ambient_rank(w, n) - 1; }

IntPoly discriminant_weighted_polynomial(const WeightVector& w, std::uint32_t n) {
  require_positive_degree(n);
  return geometric_poly(static_cast<std::int64_t>(ambient_rank(w, n))) - closed_weighted_polynomial(w, n);
}

CountResult discriminant_weighted_count(const BigInt& q, const WeightVector& w, std::uint32_t n) {
  require_positive_degree(n);
  if (q < 2) throw Error(ErrorCode::InvalidArgument, "q must be >= 2");
  require_tame(q, w);
  CountResult r;
  r.value = discriminant_weighted_polynomial(w, n).evaluate(Rational(q));
  return r;
}

CountResult brute_discriminant_count(const Field& field, const WeightVector& w, std::uint32_t n, const EnumerationOptions& opts) {
  const auto hist = enumerate_basepoint_free(field, w, n, opts);
  const BigInt nonzero = BigInt(to_string(hist.enumerated)) - 1;
  CountResult r;
  r.method = CountMethod::brute_force;
  r.wild = !is_tame(field.p(), w);
  r.tuple_count = nonzero - hist.total();
  r.value = divide_by_units(*r.tuple_count, field.q(), !r.wild);
  return r;
}

}  // namespace stacky
