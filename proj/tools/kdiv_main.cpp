// kdiv: exact-arithmetic verification commands for the division-algebra
// dimension pipeline. Every command is deterministic: identical arguments
// and seed produce byte-identical output.
//
// Exit codes: 0 all checks pass, 2 usage or validation error,
// 3 mathematical check failure (a witness is included in the report).

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "kdiv/abelian.hpp"
#include "kdiv/cayley_dickson.hpp"
#include "kdiv/frobenius.hpp"
#include "kdiv/gaussian.hpp"
#include "kdiv/hopf.hpp"
#include "kdiv/matrix.hpp"
#include "kdiv/multiplication_table.hpp"
#include "kdiv/projective_k.hpp"
#include "kdiv/rational.hpp"

namespace {

using nlohmann::json;
using kdiv::exact::GaussianRational;
using kdiv::exact::Int;
using kdiv::exact::Rational;

struct RunConfig {
  std::uint64_t seed = 1;
  std::size_t samples = 100;
  std::string format = "json";
  std::string output;  // empty means stdout
};

json int_json(const Int& v) {
  if (v.fits_slong_p()) return static_cast<std::int64_t>(v.get_si());
  return v.get_str();
}

json rat_array(const std::vector<Rational>& v) {
  json a = json::array();
  for (const auto& x : v) a.push_back(x.str());
  return a;
}

json group_json(const kdiv::ktheory::FgAbGroup& g) {
  json torsion = json::array();
  for (const auto& t : g.torsion) torsion.push_back(int_json(t));
  return json{{"free_rank", g.free_rank}, {"torsion", torsion}};
}

json maybe_string(const std::optional<std::string>& s) {
  return s ? json(*s) : json(nullptr);
}

std::string tsv_scalar(const json& j) {
  if (j.is_string()) return j.get<std::string>();
  if (j.is_null()) return "null";
  return j.dump();
}

// Flattens a JSON document into sorted dotted-key lines. Arrays of scalars
// become one comma-joined value; arrays of objects get indexed keys.
void flatten_tsv(const json& j, const std::string& prefix,
                 std::vector<std::string>& lines) {
  if (j.is_object()) {
    for (const auto& [key, value] : j.items())
      flatten_tsv(value, prefix.empty() ? key : prefix + "." + key, lines);
    return;
  }
  if (j.is_array()) {
    const bool scalars_only =
        std::all_of(j.begin(), j.end(),
                    [](const json& e) { return !e.is_structured(); });
    if (scalars_only) {
      std::string joined;
      for (const auto& e : j) {
        if (!joined.empty()) joined += ",";
        joined += tsv_scalar(e);
      }
      lines.push_back(prefix + "\t" + joined);
    } else {
      std::size_t i = 0;
      for (const auto& e : j)
        flatten_tsv(e, prefix + "." + std::to_string(i++), lines);
    }
    return;
  }
  lines.push_back(prefix + "\t" + tsv_scalar(j));
}

void emit(const json& doc, const RunConfig& cfg) {
  std::string text;
  if (cfg.format == "tsv") {
    std::vector<std::string> lines;
    flatten_tsv(doc, "", lines);
    for (const auto& line : lines) text += line + "\n";
  } else {
    text = doc.dump(2) + "\n";
  }
  if (cfg.output.empty()) {
    std::cout << text;
  } else {
    std::ofstream out(cfg.output, std::ios::binary);
    if (!out) throw std::invalid_argument("cannot open output file: " + cfg.output);
    out << text;
  }
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::invalid_argument("cannot open input file: " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

// --- kgroup ---------------------------------------------------------------

int cmd_kgroup(const RunConfig& cfg, const std::string& space,
               unsigned long index, int degree) {
  if (degree != 0 && degree != 1)
    throw std::invalid_argument("degree must be 0 or 1");
  kdiv::ktheory::FgAbGroup group;
  std::string method;
  if (space == "rp") {
    if (index < 1) throw std::invalid_argument("rp index must be >= 1");
    group = degree == 0 ? kdiv::ktheory::k0_rp(index) : kdiv::ktheory::k1_rp(index);
    method = index % 2 == 1 ? "snf-cokernel" : "formula-transfer";
  } else if (space == "cp") {
    group = degree == 0 ? kdiv::ktheory::k0_cp(index) : kdiv::ktheory::k1_cp(index);
    method = "formula-transfer";
  } else {
    throw std::invalid_argument("space must be rp or cp");
  }
  emit(json{{"group", group_json(group)}, {"method", method}}, cfg);
  return 0;
}

// --- algebra ---------------------------------------------------------------

std::vector<Rational> parse_element(const kdiv::cd::CDAlgebra& alg,
                                    const std::string& text) {
  if (!text.empty() && text.front() == 'e' &&
      text.find(',') == std::string::npos) {
    std::size_t pos = 0;
    unsigned long k = 0;
    try {
      k = std::stoul(text.substr(1), &pos);
    } catch (const std::exception&) {
      throw std::invalid_argument("bad basis element: " + text);
    }
    if (pos + 1 != text.size())
      throw std::invalid_argument("bad basis element: " + text);
    if (k >= alg.dim())
      throw std::invalid_argument("basis index out of range: " + text);
    return kdiv::cd::CDElement::basis(alg, k).coeffs();
  }
  std::vector<Rational> coeffs;
  std::string part;
  std::istringstream in(text);
  while (std::getline(in, part, ',')) coeffs.push_back(Rational::from_string(part));
  if (coeffs.size() != alg.dim())
    throw std::invalid_argument("element needs " + std::to_string(alg.dim()) +
                                " coordinates: " + text);
  return coeffs;
}

int cmd_algebra_mul(const RunConfig& cfg, unsigned level, bool allow_large,
                    const std::string& left, const std::string& right) {
  kdiv::cd::CDAlgebra alg(level, allow_large);
  kdiv::cd::CDElement a(alg, parse_element(alg, left));
  kdiv::cd::CDElement b(alg, parse_element(alg, right));
  kdiv::cd::CDElement c = kdiv::cd::cd_multiply(a, b);
  emit(json{{"level", level},
            {"left", rat_array(a.coeffs())},
            {"right", rat_array(b.coeffs())},
            {"product", rat_array(c.coeffs())}},
       cfg);
  return 0;
}

int cmd_algebra_zerodiv(const RunConfig& cfg, unsigned level, bool allow_large,
                        const std::string& strategy, std::size_t limit) {
  kdiv::cd::CDAlgebra alg(level, allow_large);
  kdiv::cd::ZeroDivisorSearch mode;
  if (strategy == "basis-pairs") {
    mode = kdiv::cd::ZeroDivisorSearch::kBasisPairs;
  } else if (strategy == "random") {
    mode = kdiv::cd::ZeroDivisorSearch::kRandom;
  } else {
    throw std::invalid_argument("strategy must be basis-pairs or random");
  }
  auto pairs =
      kdiv::cd::find_zero_divisors(alg, mode, limit, cfg.samples, cfg.seed);
  json list = json::array();
  for (const auto& p : pairs)
    list.push_back(json{{"left", rat_array(p.left.coeffs())},
                        {"right", rat_array(p.right.coeffs())}});
  emit(json{{"level", level},
            {"strategy", strategy},
            {"count", pairs.size()},
            {"pairs", list}},
       cfg);
  return 0;
}

int cmd_algebra_normcheck(const RunConfig& cfg, unsigned level,
                          bool allow_large) {
  kdiv::cd::CDAlgebra alg(level, allow_large);
  auto report = kdiv::cd::norm_multiplicativity_check(alg, cfg.samples, cfg.seed);
  json doc{{"level", level},
           {"samples_requested", report.samples_requested},
           {"samples_run", report.samples_run},
           {"multiplicative", report.multiplicative},
           {"counterexample_from_scan", report.counterexample_from_scan},
           {"counterexample", nullptr}};
  if (report.counterexample) {
    doc["counterexample"] =
        json{{"left", rat_array(report.counterexample->a.coeffs())},
             {"right", rat_array(report.counterexample->b.coeffs())},
             {"norm_left", report.counterexample->norm_a.str()},
             {"norm_right", report.counterexample->norm_b.str()},
             {"norm_product", report.counterexample->norm_product.str()}};
  }
  emit(doc, cfg);
  return report.multiplicative ? 0 : 3;
}

// --- stiefel ---------------------------------------------------------------

int cmd_stiefel(const RunConfig& cfg, int level, const std::string& table_file,
                bool crosscheck) {
  namespace st = kdiv::stiefel;
  st::MultiplicationTable raw(1);
  if (!table_file.empty()) {
    raw = st::table_from_json_text(read_file(table_file));
  } else {
    if (level < 0) throw std::invalid_argument("need --level or --table");
    raw = st::MultiplicationTable::from_cd_level(static_cast<unsigned>(level));
  }

  st::MultiplicationTable table(1);
  try {
    table = st::normalize_right_identity(raw);
  } catch (const st::NormalizationError& err) {
    emit(json{{"error", "singular-normalization"},
              {"witness", rat_array(err.witness())}},
         cfg);
    return 3;
  }

  auto report = st::verify_sections(table, cfg.samples, cfg.seed);
  json doc{{"n", table.n()},
           {"samples", report.samples},
           {"nonzero_determinants", report.nonzero_determinants},
           {"full_rank_sections", report.full_rank_sections},
           {"tangent_sections", report.tangent_sections},
           {"homogeneous", report.homogeneous},
           {"first_failure", maybe_string(report.first_failure)}};
  int code = report.all_passed() ? 0 : 3;

  if (crosscheck) {
    auto witness = st::table_zero_divisor_scan(table);
    if (witness) {
      auto det =
          kdiv::exact::det_exact(st::table_left_mult_matrix(table, witness->left));
      doc["crosscheck"] = json{{"zero_divisor_found", true},
                               {"left", rat_array(witness->left)},
                               {"right", rat_array(witness->right)},
                               {"left_mult_det", det.str()}};
      code = 3;
    } else {
      doc["crosscheck"] = json{{"zero_divisor_found", false}};
    }
  }

  emit(doc, cfg);
  return code;
}

// --- hopf ------------------------------------------------------------------

json check_json(const kdiv::hopf::CheckStats& s) {
  return json{{"run", s.run},
              {"passed", s.passed},
              {"first_failure", maybe_string(s.first_failure)}};
}

GaussianRational parse_unit(const json& j, const std::string& what) {
  if (!j.is_object() || !j.contains("re") || !j.contains("im"))
    throw std::invalid_argument(what + " must be {\"re\": ..., \"im\": ...}");
  GaussianRational u(Rational::from_string(j.at("re").get<std::string>()),
                     Rational::from_string(j.at("im").get<std::string>()));
  if (!u.is_unit()) throw std::invalid_argument(what + " must lie on the unit circle");
  return u;
}

int cmd_hopf_input(const RunConfig& cfg, const std::string& path) {
  namespace hp = kdiv::hopf;
  json in;
  try {
    in = json::parse(read_file(path));
  } catch (const json::exception& err) {
    throw std::invalid_argument(std::string("bad input file: ") + err.what());
  }
  if (!in.is_object() || !in.contains("x") || !in.at("x").is_array())
    throw std::invalid_argument("input file needs an \"x\" array");
  std::vector<Rational> x;
  for (const auto& entry : in.at("x")) {
    if (!entry.is_string())
      throw std::invalid_argument("coordinates must be \"p/q\" strings");
    x.push_back(Rational::from_string(entry.get<std::string>()));
  }
  GaussianRational w(1, 0), w2(0, 1), lambda(Rational(3, 5), Rational(4, 5));
  if (in.contains("w")) w = parse_unit(in.at("w"), "w");
  if (in.contains("w2")) w2 = parse_unit(in.at("w2"), "w2");
  if (in.contains("lambda")) lambda = parse_unit(in.at("lambda"), "lambda");

  const bool w_indep = hp::w_independence_check(x, w, w2);
  const bool antipodal = hp::antipodal_invariance_check(x, w);
  const auto exponents = hp::equivariance_check(x, w, lambda);
  const bool base = hp::base_compatibility_check(x, w);
  const auto z0 = hp::g_map(x, w).z;
  const GaussianRational lambda2 = lambda * GaussianRational::i();
  const bool injective = hp::fiber_injectivity_check(z0, {lambda, lambda2});
  const bool pullback = hp::pullback_proportion_check(x, lambda);

  json doc{{"x", rat_array(x)},
           {"w_independence", w_indep},
           {"antipodal_invariance", antipodal},
           {"equivariance_plus_two", exponents.plus_two},
           {"equivariance_minus_two", exponents.minus_two},
           {"base_compatibility", base},
           {"fiber_injectivity", injective},
           {"pullback_proportion", pullback}};
  emit(doc, cfg);
  const bool ok = w_indep && antipodal && exponents.plus_two && base &&
                  injective && pullback;
  return ok ? 0 : 3;
}

int cmd_hopf(const RunConfig& cfg, unsigned n, const std::string& input_file) {
  if (!input_file.empty()) return cmd_hopf_input(cfg, input_file);
  auto report = kdiv::hopf::run_batch_checks(n, cfg.samples, cfg.seed);
  json doc{{"n", report.n},
           {"samples", report.samples},
           {"w_independence", check_json(report.w_independence)},
           {"antipodal_invariance", check_json(report.antipodal)},
           {"equivariance", check_json(report.equivariance)},
           {"base_compatibility", check_json(report.base_compatibility)},
           {"fiber_injectivity", check_json(report.injectivity)},
           {"pullback_proportion", check_json(report.pullback)},
           {"exponent", report.exponent},
           {"exponent_uniform", report.exponent_uniform}};
  emit(doc, cfg);
  return report.all_passed() ? 0 : 3;
}

// --- frobenius ---------------------------------------------------------------

int cmd_frobenius_scan(const RunConfig& cfg, std::size_t max) {
  if (max < 1) throw std::invalid_argument("scan bound must be >= 1");
  auto found = kdiv::frobenius::admissible_dimensions(max);
  std::vector<std::size_t> expected;
  for (std::size_t d : {1, 2, 4, 8})
    if (d <= max) expected.push_back(d);
  const bool matches = found == expected;
  emit(json{{"max", max},
            {"admissible", found},
            {"expected", expected},
            {"matches", matches}},
       cfg);
  return matches ? 0 : 3;
}

int cmd_frobenius_single(const RunConfig& cfg, std::size_t n) {
  if (n < 1) throw std::invalid_argument("dimension must be >= 1");
  auto verdict = kdiv::frobenius::full_pipeline_report(n, cfg.samples, cfg.seed);
  json doc{{"n", verdict.n},
           {"required_order", int_json(verdict.required_order)},
           {"divisible", verdict.divisible},
           {"admissible", verdict.admissible},
           {"stabilization",
            json{{"modulus", int_json(verdict.stabilization.modulus)},
                 {"residue", int_json(verdict.stabilization.residue)},
                 {"vanishes", verdict.stabilization.vanishes}}},
           {"algebra_witness", nullptr},
           {"obstruction_witness", nullptr}};
  if (verdict.algebra_witness) {
    const auto& w = *verdict.algebra_witness;
    doc["algebra_witness"] =
        json{{"level", w.level},
             {"basis_pairs_scanned", w.basis_pairs_scanned},
             {"random_pairs_checked", w.random_pairs_checked},
             {"frame_points_checked", w.frame_points_checked},
             {"zero_divisor_free", w.zero_divisor_free},
             {"frames_nonsingular", w.frames_nonsingular}};
  }
  if (verdict.obstruction_witness) {
    doc["obstruction_witness"] = json{{"left", verdict.obstruction_witness->left},
                                      {"right", verdict.obstruction_witness->right}};
  }
  emit(doc, cfg);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact verification commands for the division-algebra dimension pipeline"};
  app.require_subcommand(1);

  RunConfig cfg;
  app.add_option("--seed", cfg.seed, "RNG seed (default 1)");
  app.add_option("--samples", cfg.samples, "sample count for randomized checks")
      ->check(CLI::PositiveNumber);
  app.add_option("--format", cfg.format, "output format")
      ->check(CLI::IsMember({"json", "tsv"}));
  app.add_option("--output", cfg.output, "write the report to this path");

  std::string kg_space;
  unsigned long kg_index = 0;
  int kg_degree = 0;
  auto* kgroup = app.add_subcommand("kgroup", "K-groups of projective spaces");
  kgroup->fallthrough();
  kgroup->add_option("space", kg_space, "rp or cp")->required();
  kgroup->add_option("index", kg_index, "projective space index")->required();
  kgroup->add_option("degree", kg_degree, "0 or 1")->required();

  auto* algebra = app.add_subcommand("algebra", "doubling-algebra commands");
  algebra->fallthrough();
  algebra->require_subcommand(1);
  unsigned al_level = 0;
  bool al_allow_large = false;
  std::string al_left, al_right, al_strategy = "basis-pairs";
  std::size_t al_limit = 0;
  auto* mul = algebra->add_subcommand("mul", "multiply two elements");
  mul->fallthrough();
  mul->add_option("--level", al_level, "doubling level")->required();
  mul->add_flag("--allow-large", al_allow_large, "lift the level cap");
  mul->add_option("left", al_left, "e<k> or comma-separated rationals")->required();
  mul->add_option("right", al_right, "e<k> or comma-separated rationals")->required();
  auto* zerodiv = algebra->add_subcommand("zerodiv", "search for zero divisors");
  zerodiv->fallthrough();
  zerodiv->add_option("--level", al_level, "doubling level")->required();
  zerodiv->add_flag("--allow-large", al_allow_large, "lift the level cap");
  zerodiv->add_option("--strategy", al_strategy, "basis-pairs or random");
  zerodiv->add_option("--limit", al_limit, "stop after this many pairs (0 = no limit)");
  auto* normcheck = algebra->add_subcommand("normcheck", "norm multiplicativity check");
  normcheck->fallthrough();
  normcheck->add_option("--level", al_level, "doubling level")->required();
  normcheck->add_flag("--allow-large", al_allow_large, "lift the level cap");

  int st_level = -1;
  std::string st_table;
  bool st_crosscheck = false;
  auto* stiefel = app.add_subcommand("stiefel", "frame and tangent section checks");
  stiefel->fallthrough();
  auto* st_level_opt =
      stiefel->add_option("--level", st_level, "build the table from this doubling level");
  auto* st_table_opt =
      stiefel->add_option("--table", st_table, "multiplication table JSON file");
  st_level_opt->excludes(st_table_opt);
  stiefel->add_flag("--crosscheck", st_crosscheck, "also scan the table for zero divisors");

  unsigned ho_n = 0;
  std::string ho_input;
  auto* hopf = app.add_subcommand("hopf", "quotient map property checks");
  hopf->fallthrough();
  hopf->add_option("--n", ho_n, "complex projective space index");
  hopf->add_option("--input", ho_input, "JSON file with a single sample point");

  auto* frobenius = app.add_subcommand("frobenius", "dimension admissibility");
  frobenius->fallthrough();
  frobenius->require_subcommand(1);
  std::size_t fr_max = 0, fr_n = 0;
  auto* scan = frobenius->add_subcommand("scan", "list admissible dimensions up to a bound");
  scan->fallthrough();
  scan->add_option("max", fr_max, "upper bound")->required();
  auto* single = frobenius->add_subcommand("single", "full verdict for one dimension");
  single->fallthrough();
  single->add_option("n", fr_n, "dimension")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    if (app.got_subcommand(kgroup))
      return cmd_kgroup(cfg, kg_space, kg_index, kg_degree);
    if (app.got_subcommand(algebra)) {
      if (algebra->got_subcommand(mul))
        return cmd_algebra_mul(cfg, al_level, al_allow_large, al_left, al_right);
      if (algebra->got_subcommand(zerodiv))
        return cmd_algebra_zerodiv(cfg, al_level, al_allow_large, al_strategy, al_limit);
      return cmd_algebra_normcheck(cfg, al_level, al_allow_large);
    }
    if (app.got_subcommand(stiefel))
      return cmd_stiefel(cfg, st_level, st_table, st_crosscheck);
    if (app.got_subcommand(hopf)) return cmd_hopf(cfg, ho_n, ho_input);
    if (app.got_subcommand(frobenius)) {
      if (frobenius->got_subcommand(scan)) return cmd_frobenius_scan(cfg, fr_max);
      return cmd_frobenius_single(cfg, fr_n);
    }
  } catch (const std::invalid_argument& err) {
    std::cerr << "error: " << err.what() << "\n";
    return 2;
  } catch (const std::domain_error& err) {
    std::cerr << "error: " << err.what() << "\n";
    return 2;
  } catch (const std::exception& err) {
    std::cerr << "error: " << err.what() << "\n";
    return 3;
  }
  return 2;
}
