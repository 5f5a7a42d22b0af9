#include <sstream>

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "stacky/cli.hpp"
#include "stacky/spectral_sequence.hpp"
#include "stacky/stack_count.hpp"
#include "stacky/zeta_trace.hpp"

namespace py = pybind11;
using namespace stacky;

namespace {

py::object to_py(const BigInt& v) { return py::module_::import("builtins").attr("int")(to_string(v)); }

py::object to_py(const Rational& v) {
  if (denominator(v) == 1) return to_py(BigInt(numerator(v)));
  return py::module_::import("fractions").attr("Fraction")(to_string(v));
}

WeightVector weights_of(const std::vector<std::uint32_t>& w) { return WeightVector(w); }

EnumerationOptions enumeration(unsigned workers, const std::string& budget) {
  EnumerationOptions o;
  o.workers = std::max(1u, workers);
  const BigInt b = parse_bigint(budget);
  o.budget = b > BigInt(std::numeric_limits<std::uint64_t>::max()) ? ~u128{0} : static_cast<u128>(static_cast<std::uint64_t>(b));
  return o;
}

py::dict table_dict(const CohomologyTable& t) {
  py::dict d;
  d["genus"] = t.genus;
  d["dimension"] = t.dimension ? py::object(py::int_(*t.dimension)) : py::object(py::none());
  d["stable_below"] = t.stable_below ? py::object(py::int_(*t.stable_below)) : py::object(py::none());
  py::list groups;
  for (const auto& g : t.groups) {
    py::list classes;
    for (const auto& [cls, mult] : g.classes) {
      py::dict c;
      c["tate"] = cls.tate;
      c["ext"] = cls.ext;
      c["sym"] = cls.sym;
      c["mult"] = mult;
      classes.append(c);
    }
    py::dict grp;
    grp["i"] = g.degree;
    grp["classes"] = classes;
    groups.append(grp);
  }
  d["groups"] = groups;
  return d;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Exact point counts and cohomology of Hom-stacks into weighted projective stacks";
  m.attr("__version__") = "0.1.0";

  py::register_exception<Error>(m, "StackyError", PyExc_ValueError);

  m.def(
      "closed_count", [](const std::string& q, const std::vector<std::uint32_t>& w, std::uint32_t n) {
        return to_py(closed_weighted_count(parse_bigint(q), weights_of(w), n).value);
      },
      py::arg("q"), py::arg("weights"), py::arg("n"));
  m.def(
      "closed_polynomial",
      [](const std::vector<std::uint32_t>& w, std::uint32_t n) { return closed_weighted_polynomial(weights_of(w), n).to_string(); },
      py::arg("weights"), py::arg("n"));
  m.def(
      "brute_count",
      [](const std::string& q, const std::vector<std::uint32_t>& w, std::uint32_t n, unsigned workers, const std::string& budget) {
        const Field f = Field::parse(q);
        const auto opts = enumeration(workers, budget);
        py::gil_scoped_release release;
        const auto r = brute_weighted_count(f, weights_of(w), n, opts);
        py::gil_scoped_acquire acquire;
        return to_py(r.value);
      },
      py::arg("q"), py::arg("weights"), py::arg("n"), py::arg("workers") = 1, py::arg("budget") = "1000000000");
  m.def(
      "iso_count", [](std::uint64_t q, const std::vector<std::uint32_t>& w, std::uint32_t n) {
        return to_py(closed_iso_count(q, weights_of(w), n).value);
      },
      py::arg("q"), py::arg("weights"), py::arg("n"));
  m.def(
      "brute_iso_count",
      [](const std::string& q, const std::vector<std::uint32_t>& w, std::uint32_t n, unsigned workers) {
        const Field f = Field::parse(q);
        const auto opts = enumeration(workers, "1000000000");
        py::gil_scoped_release release;
        const auto r = brute_iso_count(f, weights_of(w), n, opts);
        py::gil_scoped_acquire acquire;
        return to_py(r.value);
      },
      py::arg("q"), py::arg("weights"), py::arg("n"), py::arg("workers") = 1);
  m.def(
      "cohomology",
      [](int genus, int N, int n, std::optional<std::vector<std::uint32_t>> w) {
        const WeightVector weights = w ? weights_of(*w) : WeightVector(std::vector<std::uint32_t>(static_cast<std::size_t>(N) + 1, 1));
        if (genus == 0) return table_dict(genus0_pages(N, n, weights).table);
        return table_dict(stable_cohomology_table(genus, N, weights, n));
      },
      py::arg("genus"), py::arg("N"), py::arg("n"), py::arg("weights") = py::none());
  m.def(
      "picard", [](const std::vector<std::uint32_t>& w, std::uint32_t n) { return picard_group(weights_of(w), n).to_string(); },
      py::arg("weights"), py::arg("n"));
  m.def(
      "bmanin",
      [](const std::string& moduli, std::uint64_t q, const std::string& B) {
        return to_py(batyrev_manin_sum(moduli_lookup(moduli), q, parse_bigint(B)));
      },
      py::arg("moduli"), py::arg("q"), py::arg("B"));
  m.def(
      "run",
      [](const std::vector<std::string>& args) {
        std::vector<std::string> full{"stacky-count"};
        full.insert(full.end(), args.begin(), args.end());
        std::vector<const char*> argv;
        for (const auto& a : full) argv.push_back(a.c_str());
        std::ostringstream out, err;
        const int code = cli::run(static_cast<int>(argv.size()), argv.data(), out, err);
        return py::make_tuple(code, out.str(), err.str());
      },
      py::arg("args"), "Run the command-line interface; returns (exit_code, stdout, stderr).");
}
