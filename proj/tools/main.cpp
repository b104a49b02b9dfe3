#include <algorithm>
#include <cmath>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "tpplab/algebra.hpp"
#include "tpplab/bounds.hpp"
#include "tpplab/chars.hpp"
#include "tpplab/serial.hpp"
#include "tpplab/strassen.hpp"
#include "tpplab/tpp.hpp"

namespace {

using namespace tpplab;
using nlohmann::json;

constexpr int kExitPass = 0;
constexpr int kExitFail = 1;
constexpr int kExitInputError = 2;
constexpr int kExitTooLarge = 3;

struct RunConfig {
  bool json_output = false;
  std::string mode = "exact";
  double tolerance = 1e-9;
  std::uint64_t cap = kDefaultEnumerationCap;
  std::uint64_t seed = 0;
};

void emit(const RunConfig& cfg, const json& envelope, const std::string& text) {
  if (cfg.json_output)
    std::cout << envelope.dump(2) << "\n";
  else
    std::cout << text;
}

json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw invalid_spec_error("cannot open file: " + path);
  json j;
  in >> j;
  return j;
}

std::pair<std::uint64_t, std::uint64_t> parse_range(const std::string& text) {
  auto dots = text.find("..");
  if (dots == std::string::npos)
    throw invalid_spec_error("range must look like LO..HI, got '" + text + "'");
  return {std::stoull(text.substr(0, dots)), std::stoull(text.substr(dots + 2))};
}

// ---- group info ------------------------------------------------------------

int cmd_group_info(const RunConfig& cfg, const std::string& spec_text) {
  Group g(GroupSpec::parse(spec_text));
  json result{{"spec", g.spec().to_string()}, {"abelian", g.abelian()}};
  std::ostringstream text;
  text << "group   " << g.spec().to_string() << "\n";
  if (g.order_fits()) {
    result["order"] = g.order();
    text << "order   " << g.order() << "\n";
  } else {
    result["log_order"] = g.log_order();
    text << "order   exp(" << std::setprecision(10) << g.log_order() << ")\n";
  }
  text << "abelian " << (g.abelian() ? "yes" : "no") << "\n";
  try {
    DegreeSet ds = degree_set(g.spec());
    json degrees = json::array();
    text << "degrees ";
    bool first = true;
    for (const auto& [d, m] : ds.multiplicities()) {
      degrees.push_back({{"degree", d}, {"multiplicity", m}});
      if (!first) text << ", ";
      text << d << "^" << m;
      first = false;
    }
    text << "\n";
    text << "classes " << ds.class_number() << ", max degree " << ds.max_degree() << "\n";
    result["degrees"] = degrees;
    result["class_number"] = ds.class_number();
    result["max_degree"] = ds.max_degree();
  } catch (const unsupported_error&) {
    text << "degrees (not computed for this family)\n";
  }
  emit(cfg, make_envelope("group info", {{"spec", spec_text}}, json::array({result})), text.str());
  return kExitPass;
}

// ---- tpp check ---------------------------------------------------------------

int cmd_tpp_check(const RunConfig& cfg, const std::string& spec_text, const std::string& path) {
  Group g(GroupSpec::parse(spec_text));
  TripleDocument doc = triple_document_from_json(read_json_file(path));
  const Group& doc_group =
      std::holds_alternative<IndexTriple>(doc) ? std::get<IndexTriple>(doc).group()
                                               : std::get<TripleFamily>(doc).group();
  if (!(doc_group == g))
    throw invalid_spec_error("triple file group " + doc_group.spec().to_string() +
                             " does not match " + g.spec().to_string());

  TppResult r;
  json result;
  std::string kind;
  if (std::holds_alternative<IndexTriple>(doc)) {
    kind = "tpp";
    r = check_tpp(std::get<IndexTriple>(doc));
    result = triple_to_json(std::get<IndexTriple>(doc));
  } else {
    kind = "stpp";
    r = check_stpp(std::get<TripleFamily>(doc));
    result = family_to_json(std::get<TripleFamily>(doc));
  }
  result["check"] = kind;
  result["pass"] = r.ok;
  std::ostringstream text;
  text << (r.ok ? "PASS" : "FAIL") << " " << kind << " " << g.spec().to_string() << "\n";
  if (!r.ok) {
    json w{{"q1", g.format(r.witness->q1)},
           {"q2", g.format(r.witness->q2)},
           {"q3", g.format(r.witness->q3)},
           {"indices", r.witness->indices}};
    result["witness"] = w;
    text << "witness q1=" << g.format(r.witness->q1) << " q2=" << g.format(r.witness->q2)
         << " q3=" << g.format(r.witness->q3) << " (i,j,k)=(" << r.witness->indices[0] << ","
         << r.witness->indices[1] << "," << r.witness->indices[2] << ")\n";
  }
  emit(cfg, make_envelope("tpp check", {{"spec", spec_text}, {"file", path}},
                          json::array({result})),
       text.str());
  return r.ok ? kExitPass : kExitFail;
}

// ---- matmul ------------------------------------------------------------------

int cmd_matmul(const RunConfig& cfg, const std::string& spec_text, const std::string& triple_path,
               const std::string& a_path, const std::string& b_path, const std::string& out_path,
               const std::string& path_name) {
  Group g(GroupSpec::parse(spec_text));
  TripleDocument doc = triple_document_from_json(read_json_file(triple_path));
  if (!std::holds_alternative<IndexTriple>(doc))
    throw invalid_spec_error("matmul needs a single-triple file");
  const IndexTriple& t = std::get<IndexTriple>(doc);
  if (!(t.group() == g))
    throw invalid_spec_error("triple file group does not match the given spec");
  if (!check_tpp(t).ok) {
    std::cout << "FAIL triple does not have the triple product property\n";
    return kExitFail;
  }
  ExactMatrix a = read_exact_matrix(a_path);
  ExactMatrix b = read_exact_matrix(b_path);

  ExactMatrix expected = schoolbook_multiply(a, b);
  bool verified = false;
  json result;
  if (cfg.mode == "exact") {
    if (path_name == "dft") throw invalid_spec_error("the dft path requires --mode float");
    ExactMatrix c = matmul_via_group(t, a, b);
    verified = c == expected;
    result["c"] = matrix_to_json(c);
    if (!out_path.empty()) {
      std::ofstream out(out_path);
      write_exact_matrix_csv(out, c);
    }
  } else {
    ComplexMatrix ca(a.rows(), a.cols()), cb(b.rows(), b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
      for (std::size_t j = 0; j < a.cols(); ++j) ca(i, j) = static_cast<double>(a(i, j));
    for (std::size_t i = 0; i < b.rows(); ++i)
      for (std::size_t j = 0; j < b.cols(); ++j) cb(i, j) = static_cast<double>(b(i, j));
    ConvolvePath path = path_name == "dft" ? ConvolvePath::AbelianDft : ConvolvePath::Naive;
    ComplexMatrix c = matmul_via_group(t, ca, cb, path);
    ExactMatrix rounded(c.rows(), c.cols());
    double err = 0.0;
    for (std::size_t i = 0; i < c.rows(); ++i)
      for (std::size_t j = 0; j < c.cols(); ++j) {
        rounded(i, j) = static_cast<std::int64_t>(std::llround(c(i, j).real()));
        err = std::max(err, std::abs(c(i, j) - std::complex<double>(
                                                   static_cast<double>(expected(i, j)), 0.0)));
      }
    verified = err < cfg.tolerance;
    result["c"] = matrix_to_json(rounded);
    result["max_error"] = err;
    if (!out_path.empty()) {
      std::ofstream out(out_path);
      write_exact_matrix_csv(out, rounded);
    }
  }
  result["verified_against_schoolbook"] = verified;
  std::ostringstream text;
  text << (verified ? "PASS" : "FAIL") << " matmul " << a.rows() << "x" << a.cols() << " * "
       << b.rows() << "x" << b.cols() << " via " << g.spec().to_string() << "\n";
  emit(cfg,
       make_envelope("matmul",
                     {{"spec", spec_text}, {"triple", triple_path}, {"mode", cfg.mode}},
                     json::array({result})),
       text.str());
  return verified ? kExitPass : kExitFail;
}

// ---- bounds ------------------------------------------------------------------

ScanFormula formula_by_name(const std::string& name) {
  if (name == "cyc3-r2") return ScanFormula::CycCubeTwice;
  if (name == "wreath2-k") return ScanFormula::WreathPairK;
  if (name == "cond-power") return ScanFormula::WreathPowerConditional;
  throw invalid_spec_error("unknown formula '" + name +
                           "' (have cyc3-r2, wreath2-k, cond-power)");
}

int cmd_bounds_minimize(const RunConfig& cfg, const std::string& formula, double k,
                        const std::string& range) {
  auto [lo, hi] = parse_range(range);
  ScanResult r = minimize_formula(formula_by_name(formula), k, lo, hi);
  json result{{"formula", formula}, {"k", k}, {"argmin", r.argmin}, {"value", r.value}};
  std::ostringstream text;
  text << std::setprecision(10) << "argmin n = " << r.argmin << ", value = " << r.value << "\n";
  emit(cfg,
       make_envelope("bounds minimize", {{"formula", formula}, {"k", k}, {"range", range}},
                     json::array({result})),
       text.str());
  return kExitPass;
}

int cmd_bounds_table(const RunConfig& cfg, const std::string& triangle_range) {
  json results = json::array();
  std::ostringstream text;
  auto [lo, hi] = parse_range(triangle_range);
  text << "  n   leading 2+(2-ln2)/ln n   exact ratio\n";
  for (std::uint64_t n = std::max<std::uint64_t>(lo, 2); n <= hi; ++n) {
    double lead = triangle_alpha_leading(static_cast<std::uint32_t>(n));
    double exact = triangle_alpha_exact(static_cast<std::uint32_t>(n));
    results.push_back({{"n", n}, {"leading", lead}, {"exact", exact}});
    text << std::setw(3) << n << "   " << std::fixed << std::setprecision(5) << lead << "               "
         << exact << "\n";
    text.unsetf(std::ios::fixed);
  }
  BoundReport strassen = strassen_recursion_report();
  results.push_back(strassen.to_json());
  text << "strassen recursion bound: " << std::setprecision(6) << strassen.value << "\n";
  emit(cfg, make_envelope("bounds table", {{"triangle-alpha", triangle_range}}, results),
       text.str());
  return kExitPass;
}

int cmd_bounds_chapter6(const RunConfig& cfg) {
  std::vector<BoundReport> rows = chapter6_report();
  json results = json::array();
  std::ostringstream text;
  for (const BoundReport& r : rows) {
    results.push_back(r.to_json());
    text << std::left << std::setw(16) << to_string(r.formula) << " " << std::setprecision(8)
         << std::setw(12) << r.value << " " << to_string(r.provenance);
    if (r.params.contains("group")) text << "  " << r.params["group"].get<std::string>();
    if (r.params.contains("family")) text << "  " << r.params["family"].get<std::string>();
    if (r.params.contains("k_n")) text << "  k=" << r.params["k_n"].get<double>();
    text << "\n";
  }
  emit(cfg, make_envelope("bounds chapter6", json::object(), results), text.str());
  return kExitPass;
}

// ---- search ------------------------------------------------------------------

int cmd_search(const RunConfig& cfg, const std::string& spec_text, std::uint64_t budget) {
  Group g(GroupSpec::parse(spec_text));
  SearchOptions opts{budget, cfg.seed, cfg.cap};
  IndexTriple best = search_triples(g, opts);
  json result = triple_to_json(best);
  result["nmp"] = best.tensor().size();
  result["tpp"] = true;
  std::ostringstream text;
  Tensor ten = best.tensor();
  text << "best tensor <" << ten.n << "," << ten.m << "," << ten.p << "> size " << ten.size()
       << " in " << g.spec().to_string() << "\n";
  emit(cfg,
       make_envelope("search", {{"spec", spec_text}, {"budget", budget}, {"seed", cfg.seed}},
                     json::array({result})),
       text.str());
  return kExitPass;
}

// ---- reproduce ----------------------------------------------------------------

int cmd_reproduce_chapter6(const RunConfig& cfg) {
  std::vector<ReproCheck> checks = chapter6_reproduction();
  json results = json::array();
  std::ostringstream text;
  bool all_pass = true;
  for (const ReproCheck& c : checks) {
    results.push_back({{"name", c.name},
                       {"expected", c.expected},
                       {"got", c.got},
                       {"tolerance", c.tolerance},
                       {"pass", c.pass}});
    text << (c.pass ? "PASS " : "FAIL ") << std::left << std::setw(46) << c.name << " expected "
         << std::setprecision(9) << c.expected << " got " << c.got << "\n";
    all_pass = all_pass && c.pass;
  }
  text << (all_pass ? "PASS" : "FAIL") << " chapter-6 reproduction ("
       << std::count_if(checks.begin(), checks.end(), [](const auto& c) { return c.pass; })
       << "/" << checks.size() << ")\n";
  emit(cfg, make_envelope("reproduce chapter6", json::object(), results), text.str());
  return all_pass ? kExitPass : kExitFail;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"group-theoretic matrix multiplication laboratory"};
  app.require_subcommand(1);
  RunConfig cfg;

  std::string spec_text, file_path, a_path, b_path, out_path;
  std::string formula = "cyc3-r2", range = "3..100", triangle_range = "2..10";
  std::string path_name = "naive";
  double k = 1.0;
  std::uint64_t budget = 1000;

  auto add_common = [&](CLI::App* cmd) {
    cmd->add_flag("--json", cfg.json_output, "emit a JSON envelope instead of text");
    cmd->add_option("--mode", cfg.mode, "numeric mode: exact or float")
        ->check(CLI::IsMember({"exact", "float"}));
    cmd->add_option("--tolerance", cfg.tolerance, "float-mode comparison tolerance");
    cmd->add_option("--cap", cfg.cap, "enumeration cap");
    cmd->add_option("--seed", cfg.seed, "random seed");
  };

  CLI::App* group = app.add_subcommand("group", "group inspection");
  CLI::App* group_info = group->add_subcommand("info", "order, family and degree data");
  group_info->add_option("spec", spec_text, "group spec, e.g. \"cyc(4)^3\"")->required();
  add_common(group_info);

  CLI::App* tpp = app.add_subcommand("tpp", "triple product property checks");
  CLI::App* tpp_check = tpp->add_subcommand("check", "verify a triple or family file");
  tpp_check->add_option("spec", spec_text)->required();
  tpp_check->add_option("file", file_path, "triple JSON document")->required();
  add_common(tpp_check);

  CLI::App* matmul = app.add_subcommand("matmul", "multiply matrices through a group algebra");
  matmul->add_option("spec", spec_text)->required();
  matmul->add_option("triple", file_path, "triple JSON document")->required();
  matmul->add_option("--a", a_path, "left matrix (CSV or JSON)")->required();
  matmul->add_option("--b", b_path, "right matrix (CSV or JSON)")->required();
  matmul->add_option("--out", out_path, "write the product as CSV");
  matmul->add_option("--path", path_name, "convolution path: naive or dft")
      ->check(CLI::IsMember({"naive", "dft"}));
  add_common(matmul);

  CLI::App* bounds = app.add_subcommand("bounds", "exponent bound computations");
  CLI::App* minimize = bounds->add_subcommand("minimize", "scan a bound formula over n");
  minimize->add_option("--formula", formula, "cyc3-r2, wreath2-k or cond-power");
  minimize->add_option("--k", k, "k parameter for wreath2-k");
  minimize->add_option("--range", range, "integer scan range LO..HI");
  add_common(minimize);
  CLI::App* table = bounds->add_subcommand("table", "bound tables");
  table->add_option("--triangle-alpha", triangle_range, "triangle alpha rows LO..HI");
  add_common(table);
  CLI::App* chapter6 = bounds->add_subcommand("chapter6", "headline bound rows");
  add_common(chapter6);

  CLI::App* search = app.add_subcommand("search", "look for large TPP triples");
  search->add_option("spec", spec_text)->required();
  search->add_option("--budget", budget, "iteration budget");
  add_common(search);

  CLI::App* reproduce = app.add_subcommand("reproduce", "reproduction suites");
  CLI::App* repro6 = reproduce->add_subcommand("chapter6", "table reproduction with PASS/FAIL");
  add_common(repro6);

  CLI11_PARSE(app, argc, argv);

  try {
    if (group_info->parsed()) return cmd_group_info(cfg, spec_text);
    if (tpp_check->parsed()) return cmd_tpp_check(cfg, spec_text, file_path);
    if (matmul->parsed())
      return cmd_matmul(cfg, spec_text, file_path, a_path, b_path, out_path, path_name);
    if (minimize->parsed()) return cmd_bounds_minimize(cfg, formula, k, range);
    if (table->parsed()) return cmd_bounds_table(cfg, triangle_range);
    if (chapter6->parsed()) return cmd_bounds_chapter6(cfg);
    if (search->parsed()) return cmd_search(cfg, spec_text, budget);
    if (repro6->parsed()) return cmd_reproduce_chapter6(cfg);
    std::cerr << "no subcommand given\n";
    return kExitInputError;
  } catch (const too_large_error& e) {
    std::cerr << "resource cap exceeded: " << e.what() << "\n";
    return kExitTooLarge;
  } catch (const invalid_spec_error& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return kExitInputError;
  } catch (const unsupported_error& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return kExitInputError;
  } catch (const domain_error& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return kExitInputError;
  } catch (const nlohmann::json::exception& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return kExitInputError;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInputError;
  }
}
