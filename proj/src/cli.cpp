#include "stacky/cli.hpp"

#include <chrono>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "stacky/graded_algebra.hpp"
#include "stacky/spectral_sequence.hpp"
#include "stacky/zeta_trace.hpp"

namespace stacky::cli {
namespace {

using nlohmann::ordered_json;

enum class Format { text, json, csv };

struct Globals {
  bool json = false;
  bool csv = false;
  unsigned workers = 1;
  std::string budget = "1000000000";

  Format format() const {
    if (json && csv) throw Error(ErrorCode::InvalidArgument, "--json and --csv are mutually exclusive");
    return json ? Format::json : csv ? Format::csv : Format::text;
  }
  u128 budget_value() const {
    const BigInt b = parse_bigint(budget);
    if (b < 1) throw Error(ErrorCode::InvalidArgument, "budget must be positive");
    if (b > BigInt(std::numeric_limits<std::uint64_t>::max())) return ~u128{0};
    return static_cast<u128>(static_cast<std::uint64_t>(b));
  }
};

ordered_json weights_json(const WeightVector& w) {
  ordered_json a = ordered_json::array();
  for (auto l : w.lambdas()) a.push_back(l);
  return a;
}

std::string csv_weights(const WeightVector& w) { return "\"" + w.to_string() + "\""; }

std::uint32_t parse_n(int n) {
  if (n < 1) throw Error(ErrorCode::DegreeNonPositive, "n must be >= 1");
  return static_cast<std::uint32_t>(n);
}

EnumerationOptions enumeration_options(const Globals& g, std::ostream& err) {
  EnumerationOptions opts;
  opts.workers = std::max(1u, g.workers);
  opts.budget = g.budget_value();
  opts.progress = [&err, last = 0](u128 done, u128 total) mutable {
    if (total < 10'000'000) return;
    const int pct = static_cast<int>(done * 100 / total);
    if (pct / 5 != last / 5 || done == total) {
      err << "progress: " << pct << "% (" << to_string(done) << "/" << to_string(total) << ")\n";
      last = pct;
    }
  };
  return opts;
}

// ---------- verify ----------

void print_report(const VerificationReport& report, Format fmt, bool timings, std::ostream& out) {
  auto opt_str = [](const auto& v) { return v ? to_string(*v) : std::string(); };
  if (fmt == Format::json) {
    ordered_json j;
    j["records"] = ordered_json::array();
    for (const auto& r : report.records) {
      ordered_json rec;
      rec["q"] = r.params.q;
      rec["weights"] = weights_json(r.params.weights);
      rec["n"] = r.params.n;
      rec["method"] = r.method;
      rec["closed"] = r.closed ? ordered_json(to_string(*r.closed)) : ordered_json(nullptr);
      rec["oracle"] = r.oracle ? ordered_json(to_string(*r.oracle)) : ordered_json(nullptr);
      if (r.tuple_count) rec["tuple_count"] = to_string(*r.tuple_count);
      rec["match"] = r.match;
      if (r.error) rec["error"] = *r.error;
      if (timings) rec["seconds"] = r.seconds;
      j["records"].push_back(rec);
    }
    j["summary"] = {{"rows", report.records.size()},
                    {"matched", report.matched},
                    {"mismatched", report.mismatched},
                    {"errors", report.errors}};
    out << j.dump(2) << "\n";
    return;
  }
  if (fmt == Format::csv) {
    out << "q,weights,n,method,closed,oracle,match,error" << (timings ? ",seconds" : "") << "\n";
    for (const auto& r : report.records) {
      out << r.params.q << "," << csv_weights(r.params.weights) << "," << r.params.n << "," << r.method << "," << opt_str(r.closed)
          << "," << opt_str(r.oracle) << "," << (r.match ? "true" : "false") << "," << (r.error ? "\"" + *r.error + "\"" : "");
      if (timings) out << "," << r.seconds;
      out << "\n";
    }
    return;
  }
  for (const auto& r : report.records) {
    out << "q=" << r.params.q << " weights=(" << r.params.weights.to_string() << ") n=" << r.params.n << " " << r.method << ": ";
    if (r.error) {
      out << "ERROR " << *r.error;
    } else {
      out << "closed=" << opt_str(r.closed) << " brute=" << opt_str(r.oracle) << (r.match ? " OK" : " MISMATCH");
    }
    if (timings) out << " (" << r.seconds << "s)";
    out << "\n";
  }
  out << report.records.size() << " rows: " << report.matched << " matched, " << report.mismatched << " mismatched, " << report.errors
      << " errors\n";
}

// ---------- cohomology ----------

ordered_json class_json(const WeightClass& cls, std::int64_t mult, int genus) {
  ordered_json c;
  if (cls.is_tate()) {
    c["kind"] = "tate";
    c["j"] = cls.tate;
    c["mult"] = mult;
  } else {
    c["kind"] = "curveH1";
    c["j"] = cls.tate;
    c["ext"] = cls.ext;
    c["sym"] = cls.sym;
    c["mult"] = mult;
    c["dim"] = to_string(cls.dimension(genus) * mult);
  }
  return c;
}

std::string class_text(const WeightClass& cls, std::int64_t mult) {
  std::string s = (mult != 1 ? std::to_string(mult) + "*" : "") + "Q(-" + std::to_string(cls.tate) + ")";
  if (cls.ext) s += " x Lambda^" + std::to_string(cls.ext) + " H1";
  if (cls.sym) s += " x Sym^" + std::to_string(cls.sym) + " H1";
  return s;
}

ordered_json table_json(const CohomologyTable& t) {
  ordered_json j;
  j["dimension"] = t.dimension ? ordered_json(*t.dimension) : ordered_json(nullptr);
  j["genus"] = t.genus;
  if (t.stable_below) j["stable_below"] = *t.stable_below;
  j["groups"] = ordered_json::array();
  for (const auto& grp : t.groups) {
    ordered_json g;
    g["i"] = grp.degree;
    g["classes"] = ordered_json::array();
    for (const auto& [cls, mult] : grp.classes) g["classes"].push_back(class_json(cls, mult, t.genus));
    j["groups"].push_back(g);
  }
  return j;
}

CohomologyTable table_from_json(const nlohmann::json& j) {
  CohomologyTable t;
  t.genus = j.value("genus", 0);
  if (j.contains("dimension") && !j["dimension"].is_null()) t.dimension = j["dimension"].get<std::int64_t>();
  if (j.contains("stable_below")) t.stable_below = j["stable_below"].get<int>();
  std::map<int, CohomologyGroup> groups;
  for (const auto& g : j.at("groups")) {
    const int degree = g.at("i").get<int>();
    auto& grp = groups[degree];
    grp.degree = degree;
    for (const auto& c : g.at("classes")) {
      WeightClass cls;
      cls.tate = c.at("j").get<int>();
      const std::string kind = c.at("kind").get<std::string>();
      if (kind == "curveH1") {
        cls.ext = c.value("ext", 1);
        cls.sym = c.value("sym", 0);
      } else if (kind != "tate") {
        throw Error(ErrorCode::InvalidArgument, "unknown class kind '" + kind + "'");
      }
      grp.classes[cls] += c.value("mult", std::int64_t{1});
    }
  }
  for (auto& [d, grp] : groups) t.groups.push_back(std::move(grp));
  return t;
}

void print_table(const CohomologyTable& t, Format fmt, std::ostream& out) {
  if (fmt == Format::json) {
    out << table_json(t).dump(2) << "\n";
  } else if (fmt == Format::csv) {
    out << "i,tate,ext,sym,mult\n";
    for (const auto& grp : t.groups)
      for (const auto& [cls, mult] : grp.classes)
        out << grp.degree << "," << cls.tate << "," << cls.ext << "," << cls.sym << "," << mult << "\n";
  } else {
    if (t.dimension) out << "dimension " << *t.dimension << "\n";
    for (const auto& grp : t.groups) {
      out << "H^" << grp.degree << " =";
      bool first = true;
      for (const auto& [cls, mult] : grp.classes) {
        out << (first ? " " : " + ") << class_text(cls, mult);
        first = false;
      }
      out << "\n";
    }
    if (t.stable_below) out << "degrees >= " << *t.stable_below << " lie outside the stable range\n";
  }
}

void print_page(const PageTable& page, Format fmt, std::ostream& out) {
  if (fmt == Format::json) {
    ordered_json j;
    j["N"] = page.N;
    j["n"] = page.n;
    j["genus"] = page.g;
    if (page.stable_columns) j["stable_columns"] = *page.stable_columns;
    j["entries"] = ordered_json::array();
    for (const auto& [key, e] : page.entries) {
      ordered_json rec;
      rec["p"] = key.first;
      rec["q"] = key.second;
      rec["dim"] = e.dim;
      rec["classes"] = ordered_json::array();
      for (const auto& [cls, mult] : e.classes) rec["classes"].push_back(class_json(cls, mult, page.g));
      j["entries"].push_back(rec);
    }
    out << j.dump(2) << "\n";
    return;
  }
  if (fmt == Format::csv) out << "p,q,dim\n";
  for (const auto& [key, e] : page.entries) {
    if (fmt == Format::csv) {
      out << key.first << "," << key.second << "," << e.dim << "\n";
    } else {
      out << "E(" << key.first << "," << key.second << ") dim " << e.dim << "\n";
    }
  }
}

// ---------- chow ----------

ordered_json theta_json(const ThetaElement& e) {
  ordered_json a = ordered_json::array();
  for (const auto& c : e.coeffs()) a.push_back(to_string(c));
  return a;
}

}  // namespace

std::vector<GridRow> default_grid() {
  auto row = [](const char* q, std::vector<std::uint32_t> w, std::uint32_t n) { return GridRow{q, WeightVector(std::move(w)), n}; };
  return {row("2", {1, 1}, 1), row("3", {1, 1}, 1), row("3", {1, 1}, 2), row("3", {1, 2}, 1), row("5", {1, 2}, 1),
          row("3", {2, 4}, 1), row("5", {1, 1, 1}, 1), row("7", {1, 1}, 1), row("3", {1, 2, 2}, 1), row("5", {2, 2}, 1)};
}

std::vector<GridRow> parse_grid(const std::string& text) {
  std::vector<GridRow> rows;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ';')) {
    if (item.find_first_not_of(" \t") == std::string::npos) continue;
    const auto a = item.find(':');
    const auto b = item.rfind(':');
    if (a == std::string::npos || a == b) throw Error(ErrorCode::InvalidArgument, "grid row must be q:weights:n, got '" + item + "'");
    GridRow r;
    r.q = item.substr(0, a);
    r.weights = WeightVector::parse(item.substr(a + 1, b - a - 1));
    const BigInt n = parse_bigint(item.substr(b + 1));
    if (n < 1 || n > 1000) throw Error(ErrorCode::DegreeNonPositive, "grid row n out of range in '" + item + "'");
    r.n = static_cast<std::uint32_t>(n);
    rows.push_back(std::move(r));
  }
  return rows;
}

VerificationReport cmd_verify(const std::vector<GridRow>& grid, const VerifyOptions& opts) {
  VerificationReport report;
  for (const auto& row : grid) {
    std::vector<VerificationRecord> recs;
    if (opts.weighted) recs.push_back({row, "weighted", {}, {}, {}, false, {}, 0});
    if (opts.iso) recs.push_back({row, "iso", {}, {}, {}, false, {}, 0});
    const auto start = std::chrono::steady_clock::now();
    try {
      const Field field = Field::parse(row.q);
      const BigInt q(field.q());
      const auto hist = enumerate_basepoint_free(field, row.weights, row.n, opts.enumeration);
      for (auto& rec : recs) {
        try {
          if (rec.method == "weighted") {
            rec.closed = closed_weighted_count(q, row.weights, row.n).value;
            rec.oracle = Rational(hist.total(), field.q() - 1);
          } else {
            rec.closed = closed_iso_count(field.q(), row.weights, row.n).value;
            rec.oracle = Rational(burnside_orbits(field, row.weights, hist));
          }
          rec.tuple_count = hist.total();
          rec.match = *rec.closed == *rec.oracle;
        } catch (const Error& e) {
          rec.error = e.what();
        }
      }
    } catch (const Error& e) {
      for (auto& rec : recs)
        if (!rec.error) rec.error = e.what();
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    for (auto& rec : recs) {
      rec.seconds = secs;
      if (rec.error) {
        ++report.errors;
      } else if (rec.match) {
        ++report.matched;
      } else {
        ++report.mismatched;
      }
      report.records.push_back(std::move(rec));
    }
  }
  return report;
}

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact point counts, cohomology tables and Chow presentations for Hom-stacks into weighted projective stacks",
               "stacky-count"};
  app.require_subcommand(1);
  Globals g;
  app.add_flag("--json", g.json, "JSON output");
  app.add_flag("--csv", g.csv, "CSV output");
  app.add_option("--workers", g.workers, "Brute-force worker threads")->check(CLI::PositiveNumber);
  app.add_option("--budget", g.budget, "Maximum number of tuples to enumerate");

  // count
  auto* count = app.add_subcommand("count", "Weighted or isomorphism-class point count");
  count->fallthrough();
  std::string count_weights, count_q, count_method = "closed";
  int count_n = 1;
  count->add_option("--weights", count_weights, "Comma-separated weights")->required();
  count->add_option("--n", count_n, "Degree n")->required();
  count->add_option("--q", count_q, "Field size p or p^k; omit for a polynomial in q (closed methods)");
  count->add_option("--method", count_method, "closed|brute|iso-brute|iso-closed|disc|disc-brute")
      ->check(CLI::IsMember({"closed", "brute", "iso-brute", "iso-closed", "disc", "disc-brute"}));

  // verify
  auto* verify = app.add_subcommand("verify", "Compare closed forms against brute-force oracles");
  verify->fallthrough();
  std::optional<std::string> grid_text;
  std::string methods = "weighted,iso";
  bool strict = false, timings = false;
  verify->add_option("--grid", grid_text, "Rows q:weights:n separated by ';' (default: built-in grid)");
  verify->add_option("--methods", methods, "weighted, iso or both (comma-separated)");
  verify->add_flag("--strict", strict, "Treat row errors as failures");
  verify->add_flag("--timings", timings, "Include wall-clock times");

  // cohomology
  auto* cohom = app.add_subcommand("cohomology", "Cohomology table or spectral sequence page");
  cohom->fallthrough();
  int genus = 0, cohom_N = 1, cohom_n = 1;
  std::string cohom_weights, page_name = "table";
  cohom->add_option("--genus", genus, "Genus of the source curve")->check(CLI::NonNegativeNumber);
  cohom->add_option("--N", cohom_N, "Number of weights minus one")->required();
  cohom->add_option("--n", cohom_n, "Degree n")->required();
  cohom->add_option("--weights", cohom_weights, "Weights (default all ones)");
  cohom->add_option("--page", page_name, "table|e1|e2")->check(CLI::IsMember({"table", "e1", "e2"}));

  // chow
  auto* chow = app.add_subcommand("chow", "Weighted projective bundle relation and pushforwards");
  chow->fallthrough();
  std::string chow_weights, base = "point";
  int chow_n = 1, extra = 3;
  chow->add_option("--weights", chow_weights, "Comma-separated weights")->required();
  chow->add_option("--base", base, "point or jacobian:g");
  chow->add_option("--n", chow_n, "Degree n (jacobian base)");
  chow->add_option("--extra", extra, "Number of pushforwards past the first")->check(CLI::NonNegativeNumber);

  // zeta
  auto* zeta = app.add_subcommand("zeta", "Trace formula evaluation of a cohomology table");
  zeta->fallthrough();
  std::string table_path, zeta_q, lpoly_text;
  zeta->add_option("--table", table_path, "Table JSON file ('-' for stdin)")->required();
  zeta->add_option("--q", zeta_q, "Evaluate at this q (omit for symbolic output)");
  zeta->add_option("--lpoly", lpoly_text, "L-polynomial coefficients a_0,...,a_2g");

  // bmanin
  auto* bmanin = app.add_subcommand("bmanin", "Counting function of bounded discriminant height");
  bmanin->fallthrough();
  std::string moduli, bm_q, bm_B;
  bool leading = false;
  int lead_genus = 0;
  bmanin->add_option("--moduli", moduli, "Moduli name");
  bmanin->add_option("--q", bm_q, "Field size");
  bmanin->add_option("--B", bm_B, "Height bound");
  bmanin->add_flag("--leading", leading, "Print the leading term in B instead");
  bmanin->add_option("--genus", lead_genus, "Base curve genus for --leading")->check(CLI::NonNegativeNumber);

  // picard
  auto* picard = app.add_subcommand("picard", "Picard group of the Hom-stack");
  picard->fallthrough();
  std::string pic_weights;
  int pic_n = 1;
  picard->add_option("--weights", pic_weights, "Comma-separated weights")->required();
  picard->add_option("--n", pic_n, "Degree n")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kUsage;
  }

  try {
    const Format fmt = g.format();

    if (*count) {
      const WeightVector w = WeightVector::parse(count_weights);
      const std::uint32_t n = parse_n(count_n);
      ordered_json j;
      j["q"] = count_q.empty() ? "q" : count_q;
      j["weights"] = weights_json(w);
      j["n"] = n;
      j["method"] = count_method;
      std::optional<BigInt> tuples;
      std::string value;
      bool wild = false;
      if (count_q.empty()) {
        IntPoly poly;
        if (count_method == "closed") {
          poly = closed_weighted_polynomial(w, n);
        } else if (count_method == "disc") {
          poly = discriminant_weighted_polynomial(w, n);
        } else {
          throw Error(ErrorCode::InvalidArgument, "--q is required for method " + count_method);
        }
        value = poly.to_string();
        j["degree"] = poly.is_zero() ? ordered_json(nullptr) : ordered_json(poly.degree());
      } else {
        const Field field = Field::parse(count_q);
        const BigInt q(field.q());
        const auto opts = enumeration_options(g, err);
        CountResult r;
        if (count_method == "closed") r = closed_weighted_count(q, w, n);
        else if (count_method == "brute") r = brute_weighted_count(field, w, n, opts);
        else if (count_method == "iso-brute") r = brute_iso_count(field, w, n, opts);
        else if (count_method == "iso-closed") r = closed_iso_count(field.q(), w, n);
        else if (count_method == "disc") r = discriminant_weighted_count(q, w, n);
        else r = brute_discriminant_count(field, w, n, opts);
        value = to_string(r.value);
        tuples = r.tuple_count;
        wild = r.wild;
      }
      j["value"] = value;
      if (tuples) j["tuple_count"] = to_string(*tuples);
      if (wild) j["wild"] = true;
      if (wild) err << "warning: characteristic divides a weight; value is the raw mass\n";
      if (fmt == Format::json) {
        out << j.dump(2) << "\n";
      } else if (fmt == Format::csv) {
        out << "q,weights,n,method,value,tuple_count\n"
            << j["q"].get<std::string>() << "," << csv_weights(w) << "," << n << "," << count_method << "," << value << ","
            << (tuples ? to_string(*tuples) : "") << "\n";
      } else {
        out << value << "\n";
      }
      return kOk;
    }

    if (*verify) {
      VerifyOptions vo;
      vo.weighted = methods.find("weighted") != std::string::npos;
      vo.iso = methods.find("iso") != std::string::npos;
      if (!vo.weighted && !vo.iso) throw Error(ErrorCode::InvalidArgument, "--methods must include weighted or iso");
      vo.enumeration = enumeration_options(g, err);
      const auto grid = grid_text ? parse_grid(*grid_text) : default_grid();
      const auto report = cmd_verify(grid, vo);
      print_report(report, fmt, timings, out);
      if (report.mismatched > 0 || (strict && report.errors > 0)) return kMismatch;
      return kOk;
    }

    if (*cohom) {
      std::optional<WeightVector> w;
      if (!cohom_weights.empty()) w = WeightVector::parse(cohom_weights);
      if (cohom_N < 1) throw Error(ErrorCode::InvalidArgument, "N must be >= 1");
      const WeightVector weights = w ? *w : WeightVector(std::vector<std::uint32_t>(static_cast<std::size_t>(cohom_N) + 1, 1));
      if (genus == 0) {
        const auto pages = genus0_pages(cohom_N, cohom_n, weights);
        for (const auto& warning : pages.warnings) err << "warning: " << warning << "\n";
        if (page_name == "e1") print_page(pages.e1, fmt, out);
        else if (page_name == "e2") print_page(pages.e2, fmt, out);
        else print_table(pages.table, fmt, out);
      } else {
        if (page_name == "e1") throw Error(ErrorCode::InvalidArgument, "E1 pages are only built for genus 0");
        if (page_name == "e2") print_page(stable_e2_table(genus, cohom_N, cohom_n), fmt, out);
        else print_table(stable_cohomology_table(genus, cohom_N, weights, cohom_n), fmt, out);
      }
      return kOk;
    }

    if (*chow) {
      const WeightVector w = WeightVector::parse(chow_weights);
      ChernData data;
      PoincarePolynomial betti{{1}};
      if (base == "point") {
        data.summands.assign(w.size(), ChernSummand{1, {}});
      } else if (base.rfind("jacobian:", 0) == 0) {
        const BigInt gg = parse_bigint(base.substr(9));
        if (gg < 0 || gg > 64) throw Error(ErrorCode::InvalidArgument, "jacobian genus out of range");
        const int gj = static_cast<int>(gg);
        data = jacobian_chern_data(gj, parse_n(chow_n), w);
        betti = jacobian_poincare(gj);
      } else {
        throw Error(ErrorCode::InvalidArgument, "--base must be point or jacobian:g");
      }
      const auto rel = wpb_relation(data, w);
      const auto push = pushforward_powers(rel, static_cast<std::size_t>(extra));
      const auto poincare = wpb_poincare(betti, w.N());
      const auto phi = phi_cover_degree(w);
      if (fmt == Format::json) {
        ordered_json j;
        j["base"] = base;
        j["weights"] = weights_json(w);
        if (base != "point") j["n"] = chow_n;
        j["relation"]["degree"] = rel.degree;
        j["relation"]["zeta_normalization"] = rel.zeta_normalization;
        j["relation"]["coefficients"] = ordered_json::array();
        for (const auto& c : rel.coefficients) j["relation"]["coefficients"].push_back(theta_json(c));
        j["pushforward"] = ordered_json::array();
        for (const auto& c : push) j["pushforward"].push_back(theta_json(c));
        j["poincare"] = poincare.coeffs;
        j["phi_cover_degree"] = to_string(phi);
        out << j.dump(2) << "\n";
      } else if (fmt == Format::csv) {
        out << "kind,index,theta_coefficients\n";
        auto row = [&](const char* kind, std::size_t i, const ThetaElement& e) {
          out << kind << "," << i << ",\"";
          for (std::size_t k = 0; k < e.coeffs().size(); ++k) out << (k ? " " : "") << to_string(e.coeffs()[k]);
          out << "\"\n";
        };
        for (std::size_t i = 0; i < rel.coefficients.size(); ++i) row("relation", i + 1, rel.coefficients[i]);
        for (std::size_t i = 0; i < push.size(); ++i) row("pushforward", i, push[i]);
      } else {
        out << "relation degree " << rel.degree << " (zeta = " << rel.zeta_normalization << " c1(O(1)))\n";
        for (std::size_t i = 0; i < rel.coefficients.size(); ++i) {
          if (!rel.coefficients[i].is_zero()) out << "  c" << i + 1 << " = " << rel.coefficients[i].to_string() << "\n";
        }
        for (std::size_t i = 0; i < push.size(); ++i) {
          out << "pi_* zeta^(R-1+" << i << ") = " << push[i].to_string() << "\n";
        }
        out << "poincare " << poincare.to_string() << "\n";
        out << "phi cover degree " << to_string(phi) << "\n";
      }
      return kOk;
    }

    if (*zeta) {
      nlohmann::json doc;
      if (table_path == "-") {
        doc = nlohmann::json::parse(std::cin);
      } else {
        std::ifstream in(table_path);
        if (!in) throw Error(ErrorCode::InvalidArgument, "cannot open table file '" + table_path + "'");
        doc = nlohmann::json::parse(in);
      }
      const CohomologyTable table = table_from_json(doc);
      std::optional<LPolynomial> lpoly;
      if (!lpoly_text.empty()) {
        if (zeta_q.empty()) throw Error(ErrorCode::InvalidArgument, "--lpoly needs --q");
        std::vector<BigInt> coeffs;
        std::stringstream ss(lpoly_text);
        std::string item;
        while (std::getline(ss, item, ',')) coeffs.push_back(parse_bigint(item));
        lpoly = LPolynomial(parse_bigint(zeta_q), coeffs);
      }
      ordered_json j;
      if (zeta_q.empty()) {
        const auto expr = trace_count_symbolic(table);
        j["q"] = "q";
        j["value"] = expr.to_string();
        j["leading_exponent"] = to_string(Rational(expr.leading_half_exponent(), 2));
      } else {
        const auto r = trace_count(table, parse_bigint(zeta_q), lpoly);
        j["q"] = zeta_q;
        j["value"] = to_string(r.value);
        j["unverified_tail"] = to_string(r.unverified_tail);
      }
      if (fmt == Format::json) {
        out << j.dump(2) << "\n";
      } else if (fmt == Format::csv) {
        out << "q,value\n" << j["q"].get<std::string>() << ",\"" << j["value"].get<std::string>() << "\"\n";
      } else {
        out << j["value"].get<std::string>() << "\n";
      }
      return kOk;
    }

    if (*bmanin) {
      ordered_json j;
      std::string text;
      if (leading) {
        std::optional<BigInt> q;
        if (!bm_q.empty()) q = parse_bigint(bm_q);
        const auto term = shafarevich_leading(lead_genus, q);
        j["genus"] = lead_genus;
        j["q"] = bm_q.empty() ? "q" : bm_q;
        j["numerator"] = term.numerator.to_string();
        j["denominator"] = term.denominator.to_string();
        if (term.coefficient) j["coefficient"] = to_string(*term.coefficient);
        j["B_exponent"] = to_string(term.exponent);
        text = term.to_string();
      } else {
        if (moduli.empty() || bm_q.empty() || bm_B.empty()) throw Error(ErrorCode::InvalidArgument, "bmanin needs --moduli, --q and --B");
        const auto entry = moduli_lookup(moduli);
        const BigInt q = parse_bigint(bm_q);
        if (q < 2 || q > BigInt(std::numeric_limits<std::uint32_t>::max())) throw Error(ErrorCode::InvalidArgument, "q out of range");
        const BigInt value = batyrev_manin_sum(entry, static_cast<std::uint64_t>(q), parse_bigint(bm_B));
        j["moduli"] = moduli;
        j["weights"] = weights_json(entry.weights);
        j["q"] = bm_q;
        j["B"] = bm_B;
        j["value"] = to_string(value);
        text = to_string(value);
      }
      if (fmt == Format::json) out << j.dump(2) << "\n";
      else if (fmt == Format::csv) out << "value\n\"" << text << "\"\n";
      else out << text << "\n";
      return kOk;
    }

    if (*picard) {
      const WeightVector w = WeightVector::parse(pic_weights);
      const auto grp = picard_group(w, parse_n(pic_n));
      if (fmt == Format::json) {
        ordered_json j;
        j["weights"] = weights_json(w);
        j["n"] = pic_n;
        j["group"] = grp.to_string();
        j["kind"] = grp.finite ? "finite_cyclic" : "infinite_cyclic";
        if (grp.finite) {
          j["order"] = to_string(grp.order);
          j["resultant_degree"] = to_string(grp.resultant_degree);
        }
        out << j.dump(2) << "\n";
      } else if (fmt == Format::csv) {
        out << "weights,n,group\n" << csv_weights(w) << "," << pic_n << "," << grp.to_string() << "\n";
      } else {
        out << grp.to_string() << "\n";
      }
      return kOk;
    }
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const nlohmann::json::exception& e) {
    err << "error: malformed JSON: " << e.what() << "\n";
    return kUsage;
  }
  return kUsage;
}

}  // namespace stacky::cli
