#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "stacky/binary_forms.hpp"
#include "stacky/numeric.hpp"
#include "stacky/stack_count.hpp"

namespace stacky::cli {

enum ExitCode { kOk = 0, kMismatch = 1, kUsage = 2 };

struct GridRow {
  std::string q;  // "p" or "p^k"
  WeightVector weights;
  std::uint32_t n = 1;
};

struct VerificationRecord {
  GridRow params;
  std::string method;  // "weighted" or "iso"
  std::optional<Rational> closed;
  std::optional<Rational> oracle;
  std::optional<BigInt> tuple_count;
  bool match = false;
  std::optional<std::string> error;
  double seconds = 0;
};

struct VerificationReport {
  std::vector<VerificationRecord> records;
  std::size_t matched = 0;
  std::size_t mismatched = 0;
  std::size_t errors = 0;
};

std::vector<GridRow> default_grid();
// "q:w0,w1,...:n" rows separated by ';'.
std::vector<GridRow> parse_grid(const std::string& text);

struct VerifyOptions {
  bool weighted = true;
  bool iso = true;
  EnumerationOptions enumeration;
};

VerificationReport cmd_verify(const std::vector<GridRow>& grid, const VerifyOptions& opts);

// Entry point; returns the process exit code.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace stacky::cli
