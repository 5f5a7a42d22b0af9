#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "stacky/binary_forms.hpp"
#include "stacky/numeric.hpp"

namespace stacky {

// Frobenius-weight class Q(-tate) (x) wedge^ext H^1(C) (x) Sym^sym H^1(C).
// Genus-zero classes have ext = sym = 0.
struct WeightClass {
  int tate = 0;
  int ext = 0;
  int sym = 0;

  int weight() const { return 2 * tate + ext + sym; }
  bool is_tate() const { return ext == 0 && sym == 0; }
  // Dimension of the representation for a curve of genus g.
  BigInt dimension(int g) const;
  friend auto operator<=>(const WeightClass&, const WeightClass&) = default;
};

struct PageEntry {
  std::int64_t dim = 0;
  std::map<WeightClass, std::int64_t> classes;  // class -> copies
};

struct PageTable {
  int N = 0;
  int n = 0;
  int g = 0;
  std::optional<int> stable_columns;          // n - 2g when g > 0
  std::map<std::pair<int, int>, PageEntry> entries;  // (-p, q)

  std::int64_t dim(int minus_p, int q) const;
};

struct CohomologyGroup {
  int degree = 0;
  std::map<WeightClass, std::int64_t> classes;
  friend bool operator==(const CohomologyGroup&, const CohomologyGroup&) = default;
};

struct CohomologyTable {
  int genus = 0;
  std::optional<std::int64_t> dimension;   // D, when the weights are known
  std::vector<CohomologyGroup> groups;     // ascending degree, nonzero only
  std::optional<int> stable_below;         // degrees >= this are unverified

  static CohomologyTable point();
  std::int64_t betti(int degree) const;
  std::int64_t euler_characteristic() const;
  friend bool operator==(const CohomologyTable&, const CohomologyTable&) = default;
};

struct Genus0Pages {
  PageTable e1;
  PageTable e2;
  CohomologyTable table;
  std::vector<std::string> warnings;  // disagreements with the closed-form table
  bool d1_squared_zero = false;
  bool collapses = false;             // E2 has no room for d_r, r >= 2
};

Genus0Pages genus0_pages(int N, int n, const std::optional<WeightVector>& w = std::nullopt);
// H^(2j) = Q(-j) for j < N, H^(2j+1) = Q(-(j+1)) for N <= j <= 2N-1.
CohomologyTable genus0_expected_table(int N, std::optional<std::int64_t> dimension = std::nullopt);

PageTable stable_e2_table(int g, int N, int n);
CohomologyTable stable_cohomology_table(int g, int N, const WeightVector& w, int n);

}  // namespace stacky
