#include "stacky/spectral_sequence.hpp"

#include <algorithm>

namespace stacky {
namespace {

using Matrix = std::vector<std::vector<Rational>>;

std::int64_t rank_of(Matrix m) {
  std::int64_t rank = 0;
  const std::size_t rows = m.size();
  const std::size_t cols = rows ? m[0].size() : 0;
  for (std::size_t c = 0; c < cols && rank < static_cast<std::int64_t>(rows); ++c) {
    std::size_t pivot = static_cast<std::size_t>(rank);
    while (pivot < rows && m[pivot][c] == 0) ++pivot;
    if (pivot == rows) continue;
    std::swap(m[pivot], m[static_cast<std::size_t>(rank)]);
    const auto& prow = m[static_cast<std::size_t>(rank)];
    for (std::size_t r = 0; r < rows; ++r) {
      if (r == static_cast<std::size_t>(rank) || m[r][c] == 0) continue;
      const Rational f = m[r][c] / prow[c];
      for (std::size_t k = c; k < cols; ++k) m[r][k] -= f * prow[k];
    }
    ++rank;
  }
  return rank;
}

Matrix multiply(const Matrix& a, const Matrix& b) {
  if (a.empty() || b.empty()) return {};
  Matrix r(a.size(), std::vector<Rational>(b[0].size(), 0));
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t k = 0; k < b.size(); ++k) {
      if (a[i][k] == 0) continue;
      for (std::size_t j = 0; j < b[0].size(); ++j) r[i][j] += a[i][k] * b[k][j];
    }
  return r;
}

bool is_zero(const Matrix& m) {
  for (const auto& row : m)
    for (const auto& v : row)
      if (v != 0) return false;
  return true;
}

// Column -1 basis element: (has_e, h power).
struct Col1 {
  int e;
  int j;
};

CohomologyTable flatten(const PageTable& page, int genus) {
  std::map<int, CohomologyGroup> by_degree;
  for (const auto& [key, entry] : page.entries) {
    if (entry.dim == 0) continue;
    const int degree = key.second + key.first;  // q - p
    auto& group = by_degree[degree];
    group.degree = degree;
    for (const auto& [cls, mult] : entry.classes) group.classes[cls] += mult;
  }
  CohomologyTable t;
  t.genus = genus;
  for (auto& [d, g] : by_degree) t.groups.push_back(std::move(g));
  return t;
}

}  // namespace

BigInt WeightClass::dimension(int g) const { return binomial(2 * g, ext) * binomial(2 * g + sym - 1, sym); }

std::int64_t PageTable::dim(int minus_p, int q) const {
  auto it = entries.find({minus_p, q});
  return it == entries.end() ? 0 : it->second.dim;
}

CohomologyTable CohomologyTable::point() {
  CohomologyTable t;
  t.dimension = 0;
  CohomologyGroup h0;
  h0.classes[WeightClass{}] = 1;
  t.groups.push_back(h0);
  return t;
}

std::int64_t CohomologyTable::betti(int degree) const {
  for (const auto& grp : groups) {
    if (grp.degree != degree) continue;
    std::int64_t total = 0;
    for (const auto& [cls, mult] : grp.classes) total += mult * static_cast<std::int64_t>(cls.dimension(genus));
    return total;
  }
  return 0;
}

std::int64_t CohomologyTable::euler_characteristic() const {
  std::int64_t chi = 0;
  for (const auto& grp : groups) chi += (grp.degree % 2 ? -1 : 1) * betti(grp.degree);
  return chi;
}

CohomologyTable genus0_expected_table(int N, std::optional<std::int64_t> dimension) {
  CohomologyTable t;
  t.dimension = dimension;
  for (int j = 0; j < N; ++j) {
    CohomologyGroup grp;
    grp.degree = 2 * j;
    grp.classes[WeightClass{j, 0, 0}] = 1;
    t.groups.push_back(grp);
  }
  for (int j = N; j <= 2 * N - 1; ++j) {
    CohomologyGroup grp;
    grp.degree = 2 * j + 1;
    grp.classes[WeightClass{j + 1, 0, 0}] = 1;
    t.groups.push_back(grp);
  }
  return t;
}

Genus0Pages genus0_pages(int N, int n, const std::optional<WeightVector>& w) {
  if (N < 1) throw Error(ErrorCode::InvalidArgument, "N must be >= 1");
  if (n < 1) throw Error(ErrorCode::DegreeNonPositive, "n must be >= 1");
  if (w && static_cast<int>(w->N()) != N) throw Error(ErrorCode::WeightMismatch, "weight vector has a different N");

  std::int64_t m0 = 0;
  if (w) {
    for (auto l : w->lambdas()) m0 += static_cast<std::int64_t>(n) * l + 1;
  } else {
    m0 = static_cast<std::int64_t>(n + 1) * (N + 1);
  }
  const std::int64_t m1 = std::max<std::int64_t>(0, m0 - (N + 1));
  const std::int64_t m2 = std::max<std::int64_t>(0, m1 - (N + 1));

  Genus0Pages out;
  for (PageTable* pt : {&out.e1, &out.e2}) {
    pt->N = N;
    pt->n = n;
  }

  const int q_max = static_cast<int>(std::max({2 * m0, 2 * N + 2 + 2 * m1, 4 * N + 2 + 2 * m2})) + 2;
  bool composite_zero = true;
  for (int q = 0; q <= q_max; q += 2) {
    std::vector<int> c0;
    if (q / 2 < m0) c0.push_back(q / 2);
    std::vector<Col1> c1;
    for (int e = 0; e <= 1; ++e) {
      const int j = (q - 2 * N - 2 * e) / 2;
      if (q - 2 * N - 2 * e >= 0 && j < m1) c1.push_back({e, j});
    }
    std::vector<int> c2;
    if (q - 4 * N - 2 >= 0 && (q - 4 * N - 2) / 2 < m2) c2.push_back((q - 4 * N - 2) / 2);

    // d1 on column -1: 1 (x) h^j -> h^(N+j), e (x) h^j -> h^(N+1+j).
    Matrix d1(c0.size(), std::vector<Rational>(c1.size(), 0));
    for (std::size_t c = 0; c < c1.size(); ++c) {
      const std::int64_t target = N + c1[c].e + c1[c].j;
      for (std::size_t r = 0; r < c0.size(); ++r)
        if (c0[r] == target) d1[r][c] = 1;
    }
    // d1 on column -2: 1 (x) e (x) h^j -> 1 (x) h^(N+1+j) - e (x) h^(N+j).
    Matrix d2(c1.size(), std::vector<Rational>(c2.size(), 0));
    for (std::size_t c = 0; c < c2.size(); ++c) {
      for (std::size_t r = 0; r < c1.size(); ++r) {
        if (c1[r].e == 0 && c1[r].j == N + 1 + c2[c]) d2[r][c] += 1;
        if (c1[r].e == 1 && c1[r].j == N + c2[c]) d2[r][c] -= 1;
      }
    }
    if (!c0.empty() && !c2.empty() && !is_zero(multiply(d1, d2))) composite_zero = false;

    const std::int64_t r1 = c1.empty() || c0.empty() ? 0 : rank_of(d1);
    const std::int64_t r2 = c2.empty() || c1.empty() ? 0 : rank_of(d2);
    const std::int64_t dims1[3] = {static_cast<std::int64_t>(c0.size()), static_cast<std::int64_t>(c1.size()),
                                   static_cast<std::int64_t>(c2.size())};
    const std::int64_t dims2[3] = {dims1[0] - r1, dims1[1] - r1 - r2, dims1[2] - r2};
    const WeightClass cls{q / 2, 0, 0};
    for (int p = 0; p < 3; ++p) {
      if (dims1[p] > 0) out.e1.entries[{-p, q}] = PageEntry{dims1[p], {{cls, dims1[p]}}};
      if (dims2[p] > 0) out.e2.entries[{-p, q}] = PageEntry{dims2[p], {{cls, dims2[p]}}};
    }
  }
  out.d1_squared_zero = composite_zero;

  // d_r (r >= 2) changes q by 1 - r; every E2 entry sits in even q and only columns 0..-2
  // exist, so the only candidate d_2 lands in odd q.
  out.collapses = std::all_of(out.e2.entries.begin(), out.e2.entries.end(), [](const auto& kv) { return kv.first.second % 2 == 0; });

  out.table = flatten(out.e2, 0);
  if (w) out.table.dimension = static_cast<std::int64_t>(w->total()) * n + N;

  const auto expected = genus0_expected_table(N, out.table.dimension);
  if (!(expected == out.table)) {
    for (int d = 0; d <= 4 * N + 2; ++d) {
      if (expected.betti(d) != out.table.betti(d)) {
        out.warnings.push_back("degree " + std::to_string(d) + ": computed dimension " + std::to_string(out.table.betti(d)) +
                               ", expected " + std::to_string(expected.betti(d)));
      }
    }
    if (out.warnings.empty()) out.warnings.push_back("weights differ from the expected Tate twists");
  }
  return out;
}

PageTable stable_e2_table(int g, int N, int n) {
  if (g < 0 || N < 1) throw Error(ErrorCode::InvalidArgument, "need g >= 0 and N >= 1");
  if (n < 2 * g) throw Error(ErrorCode::UnstableRange, "need n >= 2g (n=" + std::to_string(n) + ", g=" + std::to_string(g) + ")");
  PageTable page;
  page.g = g;
  page.N = N;
  page.n = n;
  const int n0 = n - 2 * g;
  if (g > 0) page.stable_columns = n0;
  for (int p = 0; p <= n0; ++p) {
    for (int tau = 0; tau <= std::min(1, p); ++tau) {
      const int k = p - tau;
      for (int i = 0; i <= 2 * g; ++i) {
        for (int a = 0; a < N; ++a) {
          const WeightClass cls{a + tau * (N + 1) + k * N, i, k};
          const BigInt dim = cls.dimension(g);
          if (dim == 0) continue;
          const int q = i + 2 * a + tau * (2 * N + 2) + k * (2 * N + 1);
          auto& entry = page.entries[{-p, q}];
          entry.dim += static_cast<std::int64_t>(dim);
          entry.classes[cls] += 1;
        }
      }
    }
  }
  return page;
}

CohomologyTable stable_cohomology_table(int g, int N, const WeightVector& w, int n) {
  if (static_cast<int>(w.N()) != N) throw Error(ErrorCode::WeightMismatch, "weight vector has a different N");
  const PageTable page = stable_e2_table(g, N, n);
  CohomologyTable t = flatten(page, g);
  t.dimension = static_cast<std::int64_t>(w.total()) * n + N - 2 * g;
  if (g > 0) t.stable_below = n - 2 * g;
  return t;
}

}  // namespace stacky
