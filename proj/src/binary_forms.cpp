#include "stacky/binary_forms.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace stacky {

WeightVector::WeightVector(std::vector<std::uint32_t> lambdas) : lambdas_(std::move(lambdas)) {
  if (lambdas_.empty()) throw Error(ErrorCode::InvalidArgument, "weight vector must be nonempty");
  for (auto l : lambdas_) {
    if (l == 0) throw Error(ErrorCode::InvalidArgument, "weights must be positive");
    total_ += l;
    lcm_ = std::lcm(lcm_, static_cast<std::uint64_t>(l));
    gcd_ = std::gcd(gcd_, static_cast<std::uint64_t>(l));
  }
}

WeightVector WeightVector::parse(const std::string& csv) {
  std::vector<std::uint32_t> out;
  std::stringstream ss(csv);
  std::string item;
  while (std::getline(ss, item, ',')) {
    const auto v = parse_bigint(item);
    if (v <= 0 || v > 1000000) throw Error(ErrorCode::InvalidArgument, "weight out of range: '" + item + "'");
    out.push_back(static_cast<std::uint32_t>(v));
  }
  return WeightVector(std::move(out));
}

std::vector<std::uint64_t> WeightVector::eta() const {
  std::vector<std::uint64_t> out;
  for (auto l : lambdas_) out.push_back(lcm_ / l);
  return out;
}

std::vector<std::uint32_t> WeightVector::restrict(const std::vector<bool>& keep) const {
  std::vector<std::uint32_t> out;
  for (std::size_t i = 0; i < lambdas_.size(); ++i) {
    if (i < keep.size() && keep[i]) out.push_back(lambdas_[i]);
  }
  return out;
}

std::string WeightVector::to_string() const {
  std::string out;
  for (std::size_t i = 0; i < lambdas_.size(); ++i) {
    if (i) out += ",";
    out += std::to_string(lambdas_[i]);
  }
  return out;
}

BinaryForm::BinaryForm(std::uint32_t d, std::vector<FieldElement> c) : degree(d), coeffs(std::move(c)) {
  if (coeffs.size() != static_cast<std::size_t>(d) + 1) {
    throw Error(ErrorCode::InvalidArgument, "binary form of degree " + std::to_string(d) + " needs " + std::to_string(d + 1) + " coefficients");
  }
}

bool BinaryForm::is_zero() const {
  return std::all_of(coeffs.begin(), coeffs.end(), [](FieldElement c) { return c.value == 0; });
}

int BinaryForm::x_degree() const {
  for (std::size_t i = coeffs.size(); i-- > 0;) {
    if (coeffs[i].value != 0) return static_cast<int>(i);
  }
  return -1;
}

BinaryForm BinaryForm::swapped() const {
  std::vector<FieldElement> c(coeffs.rbegin(), coeffs.rend());
  return BinaryForm(degree, std::move(c));
}

std::string BinaryForm::to_string() const {
  std::string out;
  for (std::size_t i = coeffs.size(); i-- > 0;) {
    if (!out.empty()) out += " + ";
    out += std::to_string(coeffs[i].value);
    const std::size_t ydeg = degree - i;
    if (i > 0) out += i == 1 ? " x" : " x^" + std::to_string(i);
    if (ydeg > 0) out += ydeg == 1 ? " y" : " y^" + std::to_string(ydeg);
  }
  return out;
}

FormTuple::FormTuple(std::vector<BinaryForm> f, WeightVector w, std::uint32_t degree)
    : forms(std::move(f)), weights(std::move(w)), n(degree) {
  if (forms.size() != weights.size()) throw Error(ErrorCode::WeightMismatch, "tuple length differs from weight count");
  for (std::size_t i = 0; i < forms.size(); ++i) {
    if (forms[i].degree != static_cast<std::uint64_t>(n) * weights[i]) {
      throw Error(ErrorCode::InvalidArgument, "form " + std::to_string(i) + " must have degree n*lambda_i");
    }
  }
}

FormTuple FormTuple::loose(std::vector<BinaryForm> f) {
  FormTuple t;
  t.weights = WeightVector(std::vector<std::uint32_t>(f.empty() ? 1 : f.size(), 1));
  t.forms = std::move(f);
  return t;
}

int GcdWorkspace::gcd_degree(const Field& field, std::span<const std::span<const FieldElement>> forms) {
  int min_infinity = kInfiniteGcdDegree;
  int g_deg = -1;  // degree of the running gcd in a_, -1 while empty

  for (const auto& f : forms) {
    int fdeg = static_cast<int>(f.size()) - 1;
    while (fdeg >= 0 && f[fdeg].value == 0) --fdeg;
    if (fdeg < 0) continue;
    min_infinity = std::min(min_infinity, static_cast<int>(f.size()) - 1 - fdeg);
    if (g_deg < 0) {
      a_.assign(f.begin(), f.begin() + fdeg + 1);
      g_deg = fdeg;
    } else if (g_deg > 0) {
      b_.assign(f.begin(), f.begin() + fdeg + 1);
      int b_deg = fdeg;
      // Euclid: keep (a_, g_deg) and (b_, b_deg), reduce the larger by the smaller.
      while (b_deg >= 0) {
        if (b_deg == 0) {
          g_deg = 0;
          break;
        }
        const FieldElement lead_inv = field.inv(b_[b_deg]);
        for (int i = g_deg; i >= b_deg; --i) {
          if (a_[i].value == 0) continue;
          const FieldElement factor = field.mul(a_[i], lead_inv);
          const int shift = i - b_deg;
          for (int j = 0; j <= b_deg; ++j) {
            a_[shift + j] = field.sub(a_[shift + j], field.mul(factor, b_[j]));
          }
        }
        int r_deg = std::min(g_deg, b_deg - 1);
        while (r_deg >= 0 && a_[r_deg].value == 0) --r_deg;
        std::swap(a_, b_);
        g_deg = b_deg;
        b_deg = r_deg;
      }
    }
    if (g_deg == 0 && min_infinity == 0) return 0;
  }
  if (min_infinity == kInfiniteGcdDegree) return kInfiniteGcdDegree;
  return g_deg + min_infinity;
}

int tuple_gcd_degree(const Field& field, const FormTuple& t) {
  std::vector<std::span<const FieldElement>> spans;
  spans.reserve(t.forms.size());
  for (const auto& f : t.forms) spans.emplace_back(f.coeffs);
  GcdWorkspace ws;
  return ws.gcd_degree(field, spans);
}

bool is_basepoint_free(const Field& field, const FormTuple& t) { return tuple_gcd_degree(field, t) == 0; }

TupleSpace::TupleSpace(const Field& field, const WeightVector& w, std::uint32_t n)
    : field_(field), weights_(w), n_(n) {
  for (std::size_t i = 0; i < w.size(); ++i) {
    const std::uint64_t d = static_cast<std::uint64_t>(n) * w[i];
    if (d > 100000) throw Error(ErrorCode::CounterOverflow, "form degree too large to enumerate");
    degrees_.push_back(static_cast<std::uint32_t>(d));
    offsets_.push_back(width_);
    width_ += d + 1;
  }
  const std::uint32_t q = field.q();
  u128 size = 1;
  for (std::size_t i = 0; i < width_; ++i) {
    if (size > (~u128{0}) / q) {
      throw Error(ErrorCode::CounterOverflow, "tuple space q^" + std::to_string(width_) + " exceeds 128 bits");
    }
    size *= q;
  }
  size_ = size;
}

std::pair<u128, u128> TupleSpace::partition(u128 index, u128 total) const {
  if (total == 0 || index >= total) throw Error(ErrorCode::PartitionOutOfRange, "partition index must satisfy 0 <= index < total");
  const u128 base = size_ / total;
  const u128 rem = size_ % total;
  auto start = [&](u128 i) { return i * base + (i < rem ? i : rem); };
  return {start(index), start(index + 1)};
}

std::vector<FieldElement> TupleSpace::unrank(u128 rank) const {
  std::vector<FieldElement> digits(width_);
  const std::uint32_t q = field_.q();
  for (std::size_t i = 0; i < width_; ++i) {
    digits[i] = FieldElement{static_cast<std::uint32_t>(rank % q)};
    rank /= q;
  }
  return digits;
}

FormTuple TupleSpace::to_tuple(const std::vector<FieldElement>& digits) const {
  std::vector<BinaryForm> forms;
  for (std::size_t i = 0; i < degrees_.size(); ++i) {
    forms.emplace_back(degrees_[i], std::vector<FieldElement>(digits.begin() + static_cast<std::ptrdiff_t>(offsets_[i]),
                                                              digits.begin() + static_cast<std::ptrdiff_t>(offsets_[i] + degrees_[i] + 1)));
  }
  return FormTuple(std::move(forms), weights_, n_);
}

TupleCursor::TupleCursor(const TupleSpace& space, u128 begin, u128 end)
    : digits_(space.unrank(begin)),
      offsets_(space.form_offsets()),
      degrees_(space.form_degrees()),
      q_(space.field().q()),
      remaining_(end > begin ? end - begin : 0) {}

void TupleCursor::next() {
  if (remaining_ == 0) return;
  --remaining_;
  for (auto& d : digits_) {
    if (++d.value < q_) return;
    d.value = 0;
  }
}

TupleStream::TupleStream(const TupleSpace& space, u128 index, u128 total)
    : space_(&space),
      begin_(space.partition(index, total).first),
      end_(space.partition(index, total).second),
      cursor_(space, begin_, end_) {}

TupleStream tuple_space_iter(const TupleSpace& space, u128 index, u128 total) { return TupleStream(space, index, total); }

}  // namespace stacky
