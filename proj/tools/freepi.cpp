// Command-line front end for the freepi library.
//
// Exit codes: 0 success (or "identity"), 1 negative verdict (not an
// identity, failed verification suite), 2 usage or input error.

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdint>
#include <iostream>
#include <optional>
#include <regex>
#include <sstream>
#include <string>
#include <vector>

#include "freepi/algebra.hpp"
#include "freepi/errors.hpp"
#include "freepi/freealg.hpp"
#include "freepi/ident.hpp"
#include "freepi/polyparse.hpp"
#include "freepi/quotnorm.hpp"
#include "freepi/scalar.hpp"
#include "freepi/verify.hpp"

#ifndef FREEPI_DEFAULT_GOLDEN_DIR
#define FREEPI_DEFAULT_GOLDEN_DIR ""
#endif

namespace {

using freepi::Element;
using freepi::MultiDegree;
using freepi::Polynomial;
using freepi::Scalar;
using freepi::StructureAlgebra;
using nlohmann::ordered_json;

struct Config {
  std::string algebra_name;
  std::string spec_file;
  unsigned degree_cap = freepi::kDefaultDegreeCap;
  std::uint64_t seed = 0;
  std::string format = "text";

  bool json() const { return format == "json"; }
};

// Raised for failures detected by the front end itself.
struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

StructureAlgebra load_algebra(const Config& cfg) {
  if (!cfg.spec_file.empty()) return freepi::load_algebra_file(cfg.spec_file);
  if (!cfg.algebra_name.empty()) return freepi::algebra_from_name(cfg.algebra_name);
  throw UsageError("this command needs --algebra <name> or --spec <file>");
}

std::string algebra_source(const Config& cfg) {
  return cfg.spec_file.empty() ? cfg.algebra_name : "file:" + cfg.spec_file;
}

// "sN" names the standard polynomial of degree N; anything else is parsed
// with the strict grammar, so bare constants are rejected.
Polynomial read_poly(const std::string& text) {
  static const std::regex alias(R"(\s*s([0-9]+)\s*)");
  std::smatch m;
  if (std::regex_match(text, m, alias)) {
    const unsigned long k = std::stoul(m[1]);
    if (k == 0 || k > 12) throw UsageError("standard polynomial alias needs 1 <= N <= 12");
    return freepi::standard_polynomial(static_cast<unsigned>(k));
  }
  return freepi::parse(text, freepi::ZeroLiteral::Reject);
}

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t");
  if (b == std::string::npos) return {};
  const auto e = s.find_last_not_of(" \t");
  return s.substr(b, e - b + 1);
}

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> parts;
  std::string item;
  std::istringstream in(s);
  while (std::getline(in, item, sep)) parts.push_back(trim(item));
  if (!s.empty() && s.back() == sep) parts.emplace_back();
  return parts;
}

// One element: a basis label, or a comma-separated coordinate list with
// optional surrounding brackets.
Element read_element(const StructureAlgebra& a, std::string text) {
  text = trim(text);
  if (auto idx = a.find_label(text)) return a.basis_element(*idx);
  if (text.size() >= 2 && text.front() == '[' && text.back() == ']')
    text = text.substr(1, text.size() - 2);
  const auto parts = split(text, ',');
  if (parts.size() != a.dim())
    throw UsageError("element \"" + text + "\" is neither a basis label nor a list of " +
                     std::to_string(a.dim()) + " coordinates");
  Element x = a.zero();
  for (std::size_t i = 0; i < parts.size(); ++i) x.coords[i] = freepi::parse_scalar(parts[i]);
  return x;
}

std::string str(const Scalar& c) { return freepi::to_string(c); }

ordered_json json_multidegree(const MultiDegree& d) {
  ordered_json out = ordered_json::array();
  for (unsigned c : d.counts()) out.push_back(c);
  return out;
}

ordered_json json_element(const StructureAlgebra& a, const Element& x) {
  ordered_json coords = ordered_json::array();
  for (const auto& c : x.coords) coords.push_back(str(c));
  return {{"coords", coords}, {"text", freepi::format_element(a, x)}};
}

std::string text_coords(const Element& x) {
  std::string out = "[";
  for (std::size_t i = 0; i < x.coords.size(); ++i) {
    if (i) out += ", ";
    out += str(x.coords[i]);
  }
  return out + "]";
}

// Collects the output of one command in both renderings.
struct Report {
  std::string command;
  ordered_json inputs = ordered_json::object();
  ordered_json result = ordered_json::object();
  std::vector<std::string> lines;
  int exit_code = 0;

  void emit(const Config& cfg) const {
    if (cfg.json()) {
      ordered_json rec;
      rec["command"] = command;
      rec["inputs"] = inputs;
      rec["result"] = result;
      rec["exact"] = true;
      std::cout << rec.dump() << '\n';
    } else {
      for (const auto& l : lines) std::cout << l << '\n';
    }
  }
};

Report cmd_norm(const std::string& text) {
  Report r;
  r.command = "norm";
  r.inputs["poly"] = text;
  const Polynomial f = read_poly(text);
  const Scalar total = freepi::l1_norm(f);
  r.result["total"] = str(total);
  r.result["components"] = ordered_json::array();
  r.lines.push_back("total: " + str(total));
  for (const auto& [d, fd] : freepi::components(f)) {
    const Scalar n = freepi::l1_norm(fd);
    r.result["components"].push_back({{"multidegree", json_multidegree(d)}, {"norm", str(n)}});
    r.lines.push_back(freepi::to_string(d) + ": " + str(n));
  }
  return r;
}

Report cmd_decompose(const std::string& text) {
  Report r;
  r.command = "decompose";
  r.inputs["poly"] = text;
  const Polynomial f = read_poly(text);
  r.result["components"] = ordered_json::array();
  for (const auto& [d, fd] : freepi::components(f)) {
    r.result["components"].push_back(
        {{"multidegree", json_multidegree(d)}, {"polynomial", freepi::print(fd)}});
    r.lines.push_back(freepi::to_string(d) + ": " + freepi::print(fd));
  }
  return r;
}

Report cmd_multilinearize(const std::string& text) {
  Report r;
  r.command = "multilinearize";
  r.inputs["poly"] = text;
  const Polynomial f = read_poly(text);
  const Polynomial lin = freepi::multilinearize(f);
  r.result["polynomial"] = freepi::print(lin);
  r.lines.push_back(freepi::print(lin));
  return r;
}

Report cmd_check_identity(const Config& cfg, const std::string& text) {
  Report r;
  r.command = "check-identity";
  r.inputs["algebra"] = algebra_source(cfg);
  r.inputs["poly"] = text;
  const StructureAlgebra a = load_algebra(cfg);
  const Polynomial f = read_poly(text);
  const auto failing = freepi::failing_components(f, a, cfg.degree_cap);
  const bool identity = failing.empty();
  r.result["identity"] = identity;
  if (identity) {
    r.lines.push_back("identity");
    return r;
  }
  r.exit_code = 1;
  r.lines.push_back("not an identity");
  ordered_json fj = ordered_json::array();
  std::string fl = "failing components:";
  for (const auto& d : failing) {
    fj.push_back(json_multidegree(d));
    fl += " " + freepi::to_string(d);
  }
  r.result["failing_components"] = fj;
  r.lines.push_back(fl);
  if (auto w = freepi::find_witness(f, a, cfg.seed)) {
    ordered_json args = ordered_json::array();
    for (std::size_t i = 0; i < w->args.size(); ++i) {
      args.push_back(json_element(a, w->args[i]));
      r.lines.push_back("witness x" + std::to_string(i + 1) + " = " +
                        freepi::format_element(a, w->args[i]) + "  " + text_coords(w->args[i]));
    }
    r.result["witness"] = {{"args", args}, {"value", json_element(a, w->value)}};
    r.lines.push_back("value = " + freepi::format_element(a, w->value) + "  " +
                      text_coords(w->value));
  } else {
    r.result["witness"] = nullptr;
    r.lines.push_back("no explicit witness found by random search");
  }
  return r;
}

Report cmd_ideal_basis(const Config& cfg, const std::string& md) {
  Report r;
  r.command = "ideal-basis";
  r.inputs["algebra"] = algebra_source(cfg);
  r.inputs["multidegree"] = md;
  const StructureAlgebra a = load_algebra(cfg);
  const MultiDegree d = freepi::parse_multidegree(md);
  const auto basis = freepi::identity_component_basis(a, d, cfg.degree_cap);
  r.result["multidegree"] = json_multidegree(d);
  r.result["monomials"] = basis.monomials.size();
  r.result["dimension"] = basis.dimension();
  r.result["basis"] = ordered_json::array();
  r.lines.push_back("multidegree " + freepi::to_string(d) + ": dimension " +
                    std::to_string(basis.dimension()) + " of " +
                    std::to_string(basis.monomials.size()));
  for (const auto& p : basis.polynomials()) {
    r.result["basis"].push_back(freepi::print(p));
    r.lines.push_back(freepi::print(p));
  }
  return r;
}

Report cmd_quotient_norm(const Config& cfg, const std::string& text) {
  Report r;
  r.command = "quotient-norm";
  r.inputs["algebra"] = algebra_source(cfg);
  r.inputs["poly"] = text;
  const StructureAlgebra a = load_algebra(cfg);
  const Polynomial f = read_poly(text);
  const auto q = freepi::quotient_norm(f, a, cfg.degree_cap);
  r.result["total"] = str(q.total);
  r.result["norm"] = str(freepi::l1_norm(f));
  r.result["components"] = ordered_json::array();
  r.lines.push_back("quotient norm: " + str(q.total));
  r.lines.push_back("norm: " + str(freepi::l1_norm(f)));
  for (const auto& c : q.per_component) {
    r.result["components"].push_back({{"multidegree", json_multidegree(c.multidegree)},
                                      {"distance", str(c.distance)},
                                      {"minimizer", freepi::print(c.minimizer)}});
    r.lines.push_back(freepi::to_string(c.multidegree) + ": " + str(c.distance) +
                      "  minimizer " + freepi::print(c.minimizer));
  }
  r.result["minimizer"] = freepi::print(q.minimizer());
  return r;
}

Report cmd_probe(const Config& cfg, const std::string& ftext, const std::string& htext,
                 unsigned steps) {
  Report r;
  r.command = "probe";
  r.inputs["algebra"] = algebra_source(cfg);
  r.inputs["f"] = ftext;
  r.inputs["h"] = htext;
  r.inputs["steps"] = steps;
  const StructureAlgebra a = load_algebra(cfg);
  const auto rows =
      freepi::cauchy_closedness_probe(read_poly(ftext), read_poly(htext), a, steps, cfg.degree_cap);
  r.result["rows"] = ordered_json::array();
  r.lines.push_back("n  distance_to_limit  quotient_norm");
  for (const auto& row : rows) {
    r.result["rows"].push_back({{"n", row.n},
                                {"distance_to_limit", str(row.distance_to_limit)},
                                {"quotient_norm", str(row.quotient_norm)}});
    r.lines.push_back(std::to_string(row.n) + "  " + str(row.distance_to_limit) + "  " +
                      str(row.quotient_norm));
  }
  return r;
}

Report cmd_nilpotency(const Config& cfg, unsigned bound) {
  Report r;
  r.command = "nilpotency";
  r.inputs["algebra"] = algebra_source(cfg);
  r.inputs["bound"] = bound;
  const StructureAlgebra a = load_algebra(cfg);
  const auto rep = freepi::nilpotency_index(a, bound);
  if (rep.index) {
    r.result["nilpotent"] = true;
    r.result["index"] = *rep.index;
    r.lines.push_back("nilpotent of index " + std::to_string(*rep.index));
  } else {
    r.result["nilpotent"] = false;
    r.result["index"] = nullptr;
    r.lines.push_back("not nilpotent of index <= " + std::to_string(bound));
  }
  return r;
}

Report cmd_eval(const Config& cfg, const std::string& text, const std::string& at) {
  Report r;
  r.command = "eval";
  r.inputs["algebra"] = algebra_source(cfg);
  r.inputs["poly"] = text;
  r.inputs["at"] = at;
  const StructureAlgebra a = load_algebra(cfg);
  const Polynomial f = read_poly(text);
  std::vector<Element> args;
  if (!trim(at).empty())
    for (const auto& part : split(at, ';')) args.push_back(read_element(a, part));
  const Element value = freepi::evaluate(f, a, args);
  r.result["value"] = json_element(a, value);
  r.lines.push_back("value: " + freepi::format_element(a, value) + "  " + text_coords(value));
  return r;
}

Report cmd_algebra(const Config& cfg) {
  Report r;
  r.command = "algebra";
  r.inputs["algebra"] = algebra_source(cfg);
  const StructureAlgebra a = load_algebra(cfg);
  const std::string spec = freepi::algebra_to_json(a);
  r.result["dimension"] = a.dim();
  r.result["spec"] = ordered_json::parse(spec);
  r.lines.push_back(spec);
  return r;
}

Report cmd_verify(const Config& cfg, const std::string& suite, const std::string& golden) {
  Report r;
  r.command = "verify";
  r.inputs["suite"] = suite;
  r.inputs["seed"] = cfg.seed;
  freepi::VerifyOptions opts;
  if (cfg.seed != 0) opts.seed = cfg.seed;
  opts.golden_dir = golden;
  std::vector<std::string> names;
  if (suite == "all")
    names = freepi::suite_names();
  else
    names.push_back(suite);
  r.result["suites"] = ordered_json::array();
  std::size_t failed = 0;
  for (const auto& name : names) {
    const auto res = freepi::run_suite(name, opts);
    if (!res.passed()) ++failed;
    r.result["suites"].push_back({{"name", res.name},
                                  {"criterion", res.criterion},
                                  {"passed", res.passed()},
                                  {"detail", res.detail}});
    r.lines.push_back(freepi::format_result(res));
  }
  r.result["failed"] = failed;
  r.lines.push_back(std::to_string(failed) + " of " + std::to_string(names.size()) +
                    " suites failed");
  if (failed) r.exit_code = 1;
  return r;
}

std::string error_kind(const std::exception& e) {
  if (dynamic_cast<const freepi::ParseError*>(&e)) return "ParseError";
  if (dynamic_cast<const freepi::DegreeCapExceeded*>(&e)) return "DegreeCapExceeded";
  if (dynamic_cast<const freepi::NonAssociative*>(&e)) return "NonAssociative";
  if (dynamic_cast<const freepi::InvalidAlgebra*>(&e)) return "InvalidAlgebra";
  if (dynamic_cast<const freepi::MissingArgument*>(&e)) return "MissingArgument";
  if (dynamic_cast<const freepi::NotMultihomogeneous*>(&e)) return "NotMultihomogeneous";
  if (dynamic_cast<const freepi::DimensionMismatch*>(&e)) return "DimensionMismatch";
  if (dynamic_cast<const UsageError*>(&e)) return "UsageError";
  return "Error";
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact computations in the free non-unital associative algebra over Q"};
  app.require_subcommand(1);
  app.fallthrough();

  Config cfg;
  auto* alg_opt = app.add_option("--algebra", cfg.algebra_name,
                                 "Built-in algebra: matrix:n, uptri:n, strict-uptri:n, "
                                 "grassmann:k, tpoly:n, or A+B");
  auto* spec_opt = app.add_option("--spec", cfg.spec_file, "Algebra spec JSON file")
                       ->check(CLI::ExistingFile);
  alg_opt->excludes(spec_opt);
  app.add_option("--degree-cap", cfg.degree_cap, "Largest total degree accepted")
      ->check(CLI::PositiveNumber);
  app.add_option("--seed", cfg.seed, "Seed for witness search and verification");
  app.add_option("--format", cfg.format, "Output format")
      ->check(CLI::IsMember({"text", "json"}));

  std::string poly, poly2, multideg, at, suite = "all", golden = FREEPI_DEFAULT_GOLDEN_DIR;
  unsigned bound = 0, steps = 8;

  auto* norm = app.add_subcommand("norm", "l1 norm and per-component norms");
  norm->add_option("poly", poly)->required();
  auto* decompose = app.add_subcommand("decompose", "Multihomogeneous components");
  decompose->add_option("poly", poly)->required();
  auto* multilin = app.add_subcommand("multilinearize", "Full linearization");
  multilin->add_option("poly", poly)->required();
  auto* check = app.add_subcommand("check-identity", "Exact identity test with witness");
  check->add_option("poly", poly)->required();
  auto* ideal = app.add_subcommand("ideal-basis", "Basis of the identities of one multidegree");
  ideal->add_option("--multidegree", multideg, "Comma-separated degrees d1,d2,...")->required();
  auto* qnorm = app.add_subcommand("quotient-norm", "Norm of f modulo the identities");
  qnorm->add_option("poly", poly)->required();
  auto* probe = app.add_subcommand("probe", "Quotient norms along f + h/n, n = 1..steps");
  probe->add_option("poly", poly, "Limit polynomial f")->required();
  probe->add_option("direction", poly2, "Perturbation h")->required();
  probe->add_option("--steps", steps)->check(CLI::PositiveNumber);
  auto* nil = app.add_subcommand("nilpotency", "Nilpotency index up to a bound");
  nil->add_option("--bound", bound)->required()->check(CLI::PositiveNumber);
  auto* eval = app.add_subcommand("eval", "Evaluate at algebra elements");
  eval->add_option("poly", poly)->required();
  eval->add_option("--at", at,
                   "';'-separated elements: basis labels or comma-separated coordinates");
  auto* show = app.add_subcommand("algebra", "Print the algebra as spec JSON");
  auto* verify = app.add_subcommand("verify", "Run acceptance property suites");
  verify->add_option("--suite", suite, "Suite name or 'all'");
  verify->add_option("--golden-dir", golden, "Directory holding golden files");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  Report r;
  try {
    if (*norm) r = cmd_norm(poly);
    else if (*decompose) r = cmd_decompose(poly);
    else if (*multilin) r = cmd_multilinearize(poly);
    else if (*check) r = cmd_check_identity(cfg, poly);
    else if (*ideal) r = cmd_ideal_basis(cfg, multideg);
    else if (*qnorm) r = cmd_quotient_norm(cfg, poly);
    else if (*probe) r = cmd_probe(cfg, poly, poly2, steps);
    else if (*nil) r = cmd_nilpotency(cfg, bound);
    else if (*eval) r = cmd_eval(cfg, poly, at);
    else if (*show) r = cmd_algebra(cfg);
    else if (*verify) r = cmd_verify(cfg, suite, golden);
  } catch (const std::exception& e) {
    const std::string command = app.get_subcommands().front()->get_name();
    if (cfg.json()) {
      ordered_json rec;
      rec["command"] = command;
      rec["error"] = {{"kind", error_kind(e)}, {"message", e.what()}};
      rec["exact"] = true;
      std::cout << rec.dump() << '\n';
    }
    std::cerr << "error: " << error_kind(e) << ": " << e.what() << '\n';
    return 2;
  }
  r.emit(cfg);
  return r.exit_code;
}
