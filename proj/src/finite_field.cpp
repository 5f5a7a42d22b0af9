#include "stacky/finite_field.hpp"

#include <algorithm>
#include <charconv>

#include "stacky/numeric.hpp"

namespace stacky {
namespace {

using Poly = std::vector<std::uint32_t>;  // coefficients over F_p, low degree first

void trim(Poly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

std::uint32_t inv_mod(std::uint32_t a, std::uint32_t p) {
  // p is prime: a^(p-2)
  std::uint64_t result = 1, base = a % p;
  std::uint32_t e = p - 2;
  while (e) {
    if (e & 1) result = result * base % p;
    base = base * base % p;
    e >>= 1;
  }
  return static_cast<std::uint32_t>(result);
}

Poly poly_mod(Poly a, const Poly& m, std::uint32_t p) {
  trim(a);
  const std::size_t dm = m.size() - 1;
  const std::uint64_t lead_inv = inv_mod(m.back(), p);
  while (a.size() > dm) {
    const std::uint64_t factor = a.back() * lead_inv % p;
    const std::size_t shift = a.size() - 1 - dm;
    for (std::size_t i = 0; i <= dm; ++i) {
      a[shift + i] = static_cast<std::uint32_t>((a[shift + i] + p - factor * m[i] % p) % p);
    }
    trim(a);
  }
  return a;
}

Poly poly_mulmod(const Poly& a, const Poly& b, const Poly& m, std::uint32_t p) {
  if (a.empty() || b.empty()) return {};
  Poly r(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j)
      r[i + j] = static_cast<std::uint32_t>((r[i + j] + static_cast<std::uint64_t>(a[i]) * b[j]) % p);
  return poly_mod(std::move(r), m, p);
}

Poly poly_powmod(Poly base, std::uint64_t e, const Poly& m, std::uint32_t p) {
  Poly result{1};
  base = poly_mod(std::move(base), m, p);
  while (e) {
    if (e & 1) result = poly_mulmod(result, base, m, p);
    base = poly_mulmod(base, base, m, p);
    e >>= 1;
  }
  return result;
}

Poly poly_gcd(Poly a, Poly b, std::uint32_t p) {
  trim(a);
  trim(b);
  while (!b.empty()) {
    Poly r = poly_mod(a, b, p);
    a = std::move(b);
    b = std::move(r);
  }
  return a;
}

// Ben-Or: f of degree k is irreducible iff gcd(f, x^(p^i) - x) = 1 for 1 <= i <= k/2.
bool is_irreducible(const Poly& f, std::uint32_t p) {
  const std::size_t k = f.size() - 1;
  Poly xp{0, 1};
  for (std::size_t i = 1; i <= k / 2; ++i) {
    xp = poly_powmod(xp, p, f, p);
    Poly diff = xp;
    if (diff.size() < 2) diff.resize(2, 0);
    diff[1] = (diff[1] + p - 1) % p;
    trim(diff);
    if (diff.empty()) return false;
    if (poly_gcd(f, diff, p).size() > 1) return false;
  }
  return true;
}

Poly index_to_poly(std::uint32_t index, std::uint32_t p, std::uint32_t k) {
  Poly out(k, 0);
  for (std::uint32_t i = 0; i < k; ++i) {
    out[i] = index % p;
    index /= p;
  }
  return out;
}

std::uint32_t poly_to_index(const Poly& a, std::uint32_t p) {
  std::uint32_t index = 0;
  for (std::size_t i = a.size(); i-- > 0;) index = index * p + a[i];
  return index;
}

// Lexicographically least monic irreducible: the lower coefficients, read from x^(k-1)
// down to x^0, form the smallest base-p number.
Poly least_irreducible(std::uint32_t p, std::uint32_t k) {
  const std::uint32_t count = static_cast<std::uint32_t>(ipow(p, k));
  for (std::uint32_t v = 0; v < count; ++v) {
    Poly f = index_to_poly(v, p, k);
    f.push_back(1);
    if (f[0] == 0) continue;
    if (is_irreducible(f, p)) return f;
  }
  throw Error(ErrorCode::InternalInvariant, "no irreducible polynomial found");
}

}  // namespace

std::string FieldSpec::to_string() const {
  return k == 1 ? std::to_string(p) : std::to_string(p) + "^" + std::to_string(k);
}

std::string FieldSpec::modulus_string() const {
  if (modulus.empty()) return "";
  std::string out;
  for (std::size_t i = modulus.size(); i-- > 0;) {
    if (modulus[i] == 0) continue;
    if (!out.empty()) out += " + ";
    if (i == 0) {
      out += std::to_string(modulus[i]);
      continue;
    }
    if (modulus[i] != 1) out += std::to_string(modulus[i]);
    out += "x";
    if (i > 1) out += "^" + std::to_string(i);
  }
  return out;
}

Field Field::create(std::uint32_t p, std::uint32_t k, std::uint32_t cap) {
  if (!is_prime(p)) throw Error(ErrorCode::NonPrime, std::to_string(p) + " is not prime");
  if (k < 1) throw Error(ErrorCode::DegreeOutOfRange, "extension degree must be >= 1");
  BigInt q_big = ipow(p, k);
  if (q_big > cap) {
    throw Error(ErrorCode::CardinalityCap, std::to_string(p) + "^" + std::to_string(k) + " exceeds cap " + std::to_string(cap));
  }
  const auto q = static_cast<std::uint32_t>(q_big);

  auto t = std::make_shared<Tables>();
  t->spec.p = p;
  t->spec.k = k;
  t->spec.q = q;
  Poly modulus;
  if (k > 1) {
    modulus = least_irreducible(p, k);
    t->spec.modulus = modulus;
  }

  auto slow_mul = [&](std::uint32_t a, std::uint32_t b) -> std::uint32_t {
    if (k == 1) return static_cast<std::uint32_t>(static_cast<std::uint64_t>(a) * b % p);
    return poly_to_index(poly_mulmod(index_to_poly(a, p, k), index_to_poly(b, p, k), modulus, p), p);
  };
  auto slow_pow = [&](std::uint32_t a, std::uint64_t e) {
    std::uint32_t r = 1;
    while (e) {
      if (e & 1) r = slow_mul(r, a);
      a = slow_mul(a, a);
      e >>= 1;
    }
    return r;
  };

  std::uint32_t gen = 1;
  if (q > 2) {
    const auto factors = prime_factors(q - 1);
    for (std::uint32_t cand = 2; cand < q; ++cand) {
      bool primitive = true;
      for (auto r : factors) {
        if (slow_pow(cand, (q - 1) / r) == 1) {
          primitive = false;
          break;
        }
      }
      if (primitive) {
        gen = cand;
        break;
      }
    }
  }

  t->exp.assign(2 * (q - 1), 0);
  t->log.assign(q, 0);
  std::uint32_t cur = 1;
  for (std::uint32_t i = 0; i < q - 1; ++i) {
    t->exp[i] = cur;
    t->exp[i + q - 1] = cur;
    t->log[cur] = i;
    cur = slow_mul(cur, gen);
  }
  t->inv.assign(q, 0);
  for (std::uint32_t a = 1; a < q; ++a) t->inv[a] = t->exp[(q - 1 - t->log[a]) % (q - 1)];

  t->neg.assign(q, 0);
  for (std::uint32_t a = 0; a < q; ++a) {
    Poly c = index_to_poly(a, p, k);
    for (auto& d : c) d = (p - d) % p;
    t->neg[a] = poly_to_index(c, p);
  }
  if (k > 1 && p != 2 && q <= 1024) {
    t->add.assign(static_cast<std::size_t>(q) * q, 0);
    for (std::uint32_t a = 0; a < q; ++a) {
      const Poly ca = index_to_poly(a, p, k);
      for (std::uint32_t b = 0; b < q; ++b) {
        Poly cb = index_to_poly(b, p, k);
        for (std::uint32_t i = 0; i < k; ++i) cb[i] = (cb[i] + ca[i]) % p;
        t->add[static_cast<std::size_t>(a) * q + b] = poly_to_index(cb, p);
      }
    }
  }
  return Field(std::move(t));
}

Field Field::parse(const std::string& text, std::uint32_t cap) {
  auto parse_u32 = [&](std::string_view s) {
    std::uint32_t v = 0;
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc() || ptr != s.data() + s.size() || s.empty()) {
      throw Error(ErrorCode::InvalidArgument, "bad field spec '" + text + "'");
    }
    return v;
  };
  const auto caret = text.find('^');
  if (caret != std::string::npos) {
    return create(parse_u32(std::string_view(text).substr(0, caret)), parse_u32(std::string_view(text).substr(caret + 1)), cap);
  }
  const std::uint32_t q = parse_u32(text);
  if (q >= 2) {
    const auto primes = prime_factors(q);
    if (primes.size() == 1 && primes[0] != q) {
      std::uint32_t k = 0;
      for (std::uint32_t v = q; v > 1; v /= primes[0]) ++k;
      return create(static_cast<std::uint32_t>(primes[0]), k, cap);
    }
  }
  return create(q, 1, cap);
}

Field::Field(std::shared_ptr<const Tables> t)
    : tables_(std::move(t)), p_(tables_->spec.p), k_(tables_->spec.k), q_(tables_->spec.q) {}

FieldElement Field::element(std::uint32_t index) const {
  if (index >= q_) throw Error(ErrorCode::InvalidArgument, "element index out of range");
  return {index};
}

FieldElement Field::from_coords(const std::vector<std::uint32_t>& c) const {
  if (c.size() != k_) throw Error(ErrorCode::InvalidArgument, "coordinate vector has wrong length");
  for (auto d : c) {
    if (d >= p_) throw Error(ErrorCode::InvalidArgument, "coordinate out of range");
  }
  return {poly_to_index(c, p_)};
}

std::vector<std::uint32_t> Field::coords(FieldElement x) const { return index_to_poly(x.value, p_, k_); }

FieldElement Field::add_digits(FieldElement a, FieldElement b) const {
  std::uint32_t result = 0, place = 1;
  std::uint32_t x = a.value, y = b.value;
  for (std::uint32_t i = 0; i < k_; ++i) {
    result += ((x % p_ + y % p_) % p_) * place;
    x /= p_;
    y /= p_;
    place *= p_;
  }
  return {result};
}

FieldElement Field::pow(FieldElement a, std::uint64_t e) const {
  if (e == 0) return one();
  if (a.value == 0) return zero();
  const std::uint64_t l = tables_->log[a.value];
  return {tables_->exp[static_cast<std::size_t>((l * (e % (q_ - 1))) % (q_ - 1))]};
}

std::uint64_t Field::order(FieldElement x) const {
  if (x.value == 0) throw Error(ErrorCode::ZeroElement, "order of zero");
  for (auto d : divisors(q_ - 1)) {
    if (pow(x, d).value == 1) return d;
  }
  return q_ - 1;
}

}  // namespace stacky
