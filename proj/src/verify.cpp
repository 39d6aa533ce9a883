#include "freepi/verify.hpp"

#include <chrono>
#include <cstdio>
#include <fstream>
#include <functional>
#include <sstream>
#include <stdexcept>

#include "freepi/algebra.hpp"
#include "freepi/ident.hpp"
#include "freepi/polyparse.hpp"
#include "freepi/quotnorm.hpp"
#include "freepi/random.hpp"

namespace freepi {

namespace {

// Counts checks and keeps the first few failure messages.
class Tally {
 public:
  void check(bool ok, const std::string& what) {
    ++checks_;
    if (ok) return;
    ++failures_;
    if (messages_.size() < 3) messages_.push_back(what);
  }
  void note(std::string s) { notes_.push_back(std::move(s)); }

  bool ok() const { return failures_ == 0 && checks_ > 0; }

  std::string summary() const {
    std::string out = std::to_string(checks_ - failures_) + "/" + std::to_string(checks_) +
                      " checks";
    for (const auto& n : notes_) out += "; " + n;
    for (const auto& m : messages_) out += "; FAILED: " + m;
    return out;
  }

 private:
  std::size_t checks_ = 0;
  std::size_t failures_ = 0;
  std::vector<std::string> messages_;
  std::vector<std::string> notes_;
};

RandomPolyParams wide_params() {
  RandomPolyParams p;
  p.max_vars = 5;
  p.max_terms = 12;
  p.max_degree = 6;
  p.coeff_range = 9;
  p.max_denominator = 5;
  return p;
}

// 1. l1 norm equals the sum of component norms; components rebuild f.
void mn_equality(Tally& t, const VerifyOptions& o) {
  Rng rng(o.seed + 1);
  const RandomPolyParams p = wide_params();
  for (int i = 0; i < 1000; ++i) {
    const Polynomial f = random_polynomial(rng, p);
    Polynomial rebuilt;
    Scalar sum = 0;
    bool homogeneous = true;
    for (const auto& [d, fd] : components(f)) {
      rebuilt += fd;
      sum += l1_norm(fd);
      homogeneous = homogeneous && fd.is_multihomogeneous() &&
                    multidegree(fd.terms().begin()->first) == d;
    }
    t.check(sum == l1_norm(f), "component norms do not sum to ||f|| for " + print(f));
    t.check(rebuilt == f, "components do not rebuild " + print(f));
    t.check(homogeneous, "component with mixed multidegree in " + print(f));
  }
}

// 2. Submultiplicativity, triangle inequality, and equality for monomials.
void normed_axioms(Tally& t, const VerifyOptions& o) {
  Rng rng(o.seed + 2);
  RandomPolyParams p = wide_params();
  p.max_terms = 8;
  p.max_degree = 3;
  for (int i = 0; i < 1000; ++i) {
    const Polynomial f = random_polynomial(rng, p), g = random_polynomial(rng, p);
    t.check(l1_norm(f * g) <= l1_norm(f) * l1_norm(g),
            "||fg|| > ||f|| ||g|| for " + print(f) + ", " + print(g));
    t.check(l1_norm(f + g) <= l1_norm(f) + l1_norm(g),
            "triangle inequality fails for " + print(f) + ", " + print(g));
  }
  for (int i = 0; i < 100; ++i) {
    const Polynomial a(random_monomial(rng, 5, 1, 3), random_scalar(rng, 9, 5, true));
    const Polynomial b(random_monomial(rng, 5, 1, 3), random_scalar(rng, 9, 5, true));
    t.check(l1_norm(a * b) == l1_norm(a) * l1_norm(b),
            "monomial product norm not multiplicative for " + print(a) + ", " + print(b));
  }
}

// Nonzero identities of A in a few small multidegrees, used as T-ideal
// generators.
std::vector<Polynomial> identity_generators(const StructureAlgebra& a) {
  std::vector<Polynomial> gens;
  for (const MultiDegree& d : {MultiDegree{2}, MultiDegree{1, 1}, MultiDegree{3},
                               MultiDegree{2, 1}, MultiDegree{1, 1, 1}}) {
    for (auto& p : identity_component_basis(a, d).polynomials()) gens.push_back(std::move(p));
  }
  return gens;
}

// 3. Every multihomogeneous component of an identity is an identity.
void component_identities(Tally& t, const VerifyOptions& o) {
  Rng rng(o.seed + 3);
  for (const char* name : {"tpoly:3", "strict-uptri:3", "grassmann:2"}) {
    const StructureAlgebra a = algebra_from_name(name);
    const std::vector<Polynomial> gens = identity_generators(a);
    t.check(!gens.empty(), std::string("no identity generators found for ") + name);
    if (gens.empty()) continue;
    TIdealSampleParams sp;
    sp.summands = 3;
    sp.num_vars = 3;
    std::size_t nonzero = 0, pieces = 0, multi = 0;
    for (int i = 0; i < 200; ++i) {
      const Polynomial f = t_ideal_sample(gens, rng, sp);
      if (!f.is_zero()) ++nonzero;
      const auto parts = components(f);
      if (parts.size() > 1) ++multi;
      for (const auto& [d, fd] : parts) {
        ++pieces;
        t.check(is_identity_exact(fd, a),
                std::string(name) + ": component " + to_string(d) + " of sample " + print(f) +
                    " is not an identity");
      }
    }
    t.check(nonzero >= 150, std::string(name) + ": too many zero samples");
    t.note(std::string(name) + " " + std::to_string(pieces) + " components in " +
           std::to_string(nonzero) + " nonzero samples (" + std::to_string(multi) +
           " with several components)");
  }
}

std::vector<MultiDegree> small_multidegrees() {
  std::vector<MultiDegree> out;
  for (unsigned a = 0; a <= 4; ++a)
    for (unsigned b = 0; a + b <= 4; ++b)
      for (unsigned c = 0; a + b + c <= 4; ++c)
        if (a + b + c >= 1) out.push_back(MultiDegree{a, b, c});
  return out;
}

// 4. Generic evaluation agrees with multilinearization + basis tuples, and
// the randomized screen never produces a false witness.
void oracle_equivalence(Tally& t, const VerifyOptions& o) {
  Rng rng(o.seed + 4);
  const auto dims = small_multidegrees();
  std::size_t compared = 0;
  for (const char* name :
       {"matrix:2", "matrix:3", "uptri:2", "uptri:3", "strict-uptri:2", "strict-uptri:3",
        "strict-uptri:4", "grassmann:2", "grassmann:3", "grassmann:4", "tpoly:2", "tpoly:3",
        "tpoly:2+grassmann:2"}) {
    const StructureAlgebra a = algebra_from_name(name);
    for (const auto& d : dims) {
      const IdentityComponentBasis ib = identity_component_basis(a, d);
      const std::size_t oracle = identity_dimension_by_multilinearization(a, d);
      ++compared;
      t.check(ib.dimension() == oracle, std::string(name) + " " + to_string(d) +
                                            ": generic dim " + std::to_string(ib.dimension()) +
                                            " vs oracle " + std::to_string(oracle));
      for (const auto& g : ib.polynomials()) {
        const auto verdict = is_identity_randomized(g, a, 5, rng());
        t.check(verdict.probably_identity(),
                std::string(name) + ": randomized witness against identity " + print(g));
      }
      for (const auto& w : ib.monomials) {
        const Polynomial f(w);
        const auto verdict = is_identity_randomized(f, a, 5, rng());
        if (!verdict.probably_identity())
          t.check(!is_identity_exact(f, a),
                  std::string(name) + ": witness found for exact identity " + print(f));
      }
    }
  }
  t.check(identity_component_basis(algebra_from_name("tpoly:3"), {1, 1}).dimension() == 1,
          "dim Id(tpoly:3)^(1,1) != 1");
  t.check(identity_component_basis(algebra_from_name("matrix:2"), {1, 1}).dimension() == 0,
          "dim Id(matrix:2)^(1,1) != 0");
  t.check(identity_component_basis(algebra_from_name("strict-uptri:2"), {1, 1}).dimension() == 2,
          "dim Id(strict-uptri:2)^(1,1) != 2");
  t.note(std::to_string(compared) + " (algebra, multidegree) pairs compared");
}

// 5. s4 is an identity of 2x2 matrices, s3 is not, by both exact routes.
void amitsur_levitzki(Tally& t, const VerifyOptions&) {
  const StructureAlgebra m2 = full_matrix(2);
  const Polynomial s3 = standard_polynomial(3), s4 = standard_polynomial(4);
  t.check(is_identity_exact(s4, m2), "generic evaluation: s4 not an identity of matrix:2");
  t.check(is_identity_by_multilinearization(s4, m2),
          "matrix-unit tuples: s4 not an identity of matrix:2");
  t.check(!is_identity_exact(s3, m2), "generic evaluation: s3 is an identity of matrix:2");
  t.check(!is_identity_by_multilinearization(s3, m2),
          "matrix-unit tuples: s3 is an identity of matrix:2");
}

// 6. Nilpotency indices through the x1...xn criterion.
void nilpotency(Tally& t, const VerifyOptions&) {
  for (unsigned n = 2; n <= 4; ++n) {
    const auto r = nilpotency_index(strictly_upper_triangular(n), 10);
    t.check(r.index == n, "strict-uptri:" + std::to_string(n) + " index != " + std::to_string(n));
    t.check(vanishes_on_basis_tuples(product_monomial(n), strictly_upper_triangular(n)) &&
                !vanishes_on_basis_tuples(product_monomial(n - 1), strictly_upper_triangular(n)),
            "basis-tuple oracle disagrees for strict-uptri:" + std::to_string(n));
  }
  const auto t3 = nilpotency_index(truncated_poly(3), 10);
  t.check(t3.index == 4u, "tpoly:3 index != 4");
  const auto m2 = nilpotency_index(full_matrix(2), 6);
  t.check(!m2.index && m2.bound == 6, "matrix:2 should report UnknownAbove(6)");
}

// 7. Quotient norm values, zero set, upper bounds and algebra-norm axioms.
void quotient_norms(Tally& t, const VerifyOptions& o) {
  Rng rng(o.seed + 7);
  const StructureAlgebra t3 = truncated_poly(3);
  ComponentBasisCache cache(t3);
  const Polynomial x1x2(Monomial({1, 2}));
  t.check(component_distance(x1x2, cache).distance == 1, "component_distance(x1x2, tpoly:3) != 1");

  const std::vector<Polynomial> gens = identity_generators(t3);
  TIdealSampleParams sp;
  sp.num_vars = 2;
  sp.summands = 2;
  sp.max_total_degree = 4;
  RandomPolyParams rp;
  rp.max_vars = 2;
  rp.max_terms = 5;
  rp.max_degree = 3;
  rp.max_denominator = 3;

  // Zero set: half the samples are identities by construction.
  std::size_t zeros = 0;
  for (int i = 0; i < 200; ++i) {
    Polynomial f = t_ideal_sample(gens, rng, sp);
    if (i % 2 == 1) f += random_polynomial(rng, rp);
    const QuotientNormResult r = quotient_norm(f, cache);
    zeros += r.total == 0;
    t.check((r.total == 0) == is_identity_exact(f, t3),
            "quotient norm zero set disagrees with exact test on " + print(f));
    t.check(l1_norm(f + r.minimizer()) == r.total && is_identity_exact(r.minimizer(), t3),
            "reported minimizer does not attain the quotient norm for " + print(f));
  }
  t.note(std::to_string(zeros) + "/200 samples with quotient norm 0");

  // Upper bounds: 500 ideal elements against a handful of fixed f.
  std::vector<Polynomial> targets;
  for (int i = 0; i < 5; ++i) targets.push_back(random_polynomial(rng, rp));
  std::vector<Scalar> norms;
  for (const auto& f : targets) {
    norms.push_back(quotient_norm(f, cache).total);
    t.check(norms.back() <= l1_norm(f), "quotient norm exceeds ||f|| for " + print(f));
  }
  for (int i = 0; i < 500; ++i) {
    const Polynomial g = t_ideal_sample(gens, rng, sp);
    const std::size_t k = static_cast<std::size_t>(i) % targets.size();
    t.check(norms[k] <= l1_norm(targets[k] + g),
            "quotient norm above ||f + g|| for f = " + print(targets[k]) + ", g = " + print(g));
  }

  // Normed-algebra axioms on random pairs, across two algebras.
  ComponentBasisCache g2(grassmann(2));
  RandomPolyParams pp = rp;
  pp.max_terms = 4;
  pp.max_degree = 2;
  for (int i = 0; i < 200; ++i) {
    ComponentBasisCache& c = i % 2 == 0 ? cache : g2;
    const Polynomial f = random_polynomial(rng, pp), h = random_polynomial(rng, pp);
    const Scalar s = random_scalar(rng, 5, 4, false);
    const Scalar nf = quotient_norm(f, c).total, nh = quotient_norm(h, c).total;
    t.check(quotient_norm(f * h, c).total <= nf * nh,
            "quotient submultiplicativity fails for " + print(f) + ", " + print(h));
    t.check(quotient_norm(f + h, c).total <= nf + nh,
            "quotient triangle inequality fails for " + print(f) + ", " + print(h));
    t.check(quotient_norm(s * f, c).total == abs(s) * nf,
            "quotient norm not homogeneous for " + print(f));
  }
}

// 8. f_n = [x1,x2] + x1x2/n has quotient norm exactly 1/n in tpoly:3.
void closedness(Tally& t, const VerifyOptions&) {
  const Polynomial x1x2(Monomial({1, 2})), x2x1(Monomial({2, 1}));
  const Polynomial f = x1x2 - x2x1;
  const auto rows = cauchy_closedness_probe(f, x1x2, truncated_poly(3), 8);
  t.check(rows.size() == 8, "probe returned the wrong number of rows");
  for (const auto& row : rows) {
    const Scalar expected(1, row.n);
    t.check(row.quotient_norm == expected,
            "n = " + std::to_string(row.n) + ": quotient norm " + row.quotient_norm.get_str());
    t.check(row.distance_to_limit == expected, "n = " + std::to_string(row.n) + ": ||f_n - f||");
    // Independent LP over coordinates (x1x2, x2x1) with the commutator
    // direction (1, -1) entered by hand: minimize u1 + u2 subject to
    // |c_i - s * dir_i| <= u_i, s = s+ - s-.
    const Scalar c1 = 1 + expected, c2 = -1;
    LpProblem lp;
    lp.objective = {0, 0, 1, 1};
    lp.constraints = Matrix::from_rows({{1, -1, 1, 0},
                                        {1, -1, -1, 0},
                                        {-1, 1, 0, 1},
                                        {-1, 1, 0, -1}});
    lp.relations = {Relation::GreaterEqual, Relation::LessEqual, Relation::GreaterEqual,
                    Relation::LessEqual};
    lp.rhs = {c1, c1, c2, c2};
    const LpSolution sol = lp_solve(lp);
    t.check(sol.status == LpStatus::Optimal && sol.value == row.quotient_norm,
            "independent LP disagrees at n = " + std::to_string(row.n));
  }
}

// 9. parse(print(f)) == f and the golden print cases.
void round_trip(Tally& t, const VerifyOptions& o) {
  Rng rng(o.seed + 9);
  RandomPolyParams p = wide_params();
  p.max_vars = 12;
  p.coeff_range = 1000;
  p.max_denominator = 97;
  for (int i = 0; i < 2000; ++i) {
    const Polynomial f = random_polynomial(rng, p);
    const std::string text = print(f);
    t.check(parse(text) == f, "round trip fails for " + text);
  }
  t.check(parse(print(Polynomial{})).is_zero(), "round trip fails for 0");
  if (o.golden_dir.empty()) {
    t.check(false, "no golden directory given");
    return;
  }
  std::ifstream in(o.golden_dir + "/print_cases.tsv");
  t.check(static_cast<bool>(in), "cannot open " + o.golden_dir + "/print_cases.tsv");
  std::string line;
  std::size_t cases = 0;
  while (std::getline(in, line)) {
    if (line.empty() || line[0] == '#') continue;
    const auto tab = line.find('\t');
    if (tab == std::string::npos) continue;
    const std::string input = line.substr(0, tab), expected = line.substr(tab + 1);
    ++cases;
    t.check(print(parse(input)) == expected, "golden mismatch for '" + input + "'");
  }
  t.note(std::to_string(cases) + " golden cases");
}

struct Suite {
  const char* name;
  int criterion;
  double budget;
  void (*run)(Tally&, const VerifyOptions&);
};

constexpr Suite kSuites[] = {
    {"mn-equality", 1, 5, mn_equality},
    {"normed-axioms", 2, 5, normed_axioms},
    {"component-identities", 3, 60, component_identities},
    {"oracle-equivalence", 4, 120, oracle_equivalence},
    {"amitsur-levitzki", 5, 30, amitsur_levitzki},
    {"nilpotency", 6, 30, nilpotency},
    {"quotient-norm", 7, 120, quotient_norms},
    {"closedness", 8, 10, closedness},
    {"round-trip", 9, 5, round_trip},
};

}  // namespace

std::vector<std::string> suite_names() {
  std::vector<std::string> out;
  for (const auto& s : kSuites) out.emplace_back(s.name);
  return out;
}

SuiteResult run_suite(const std::string& name, const VerifyOptions& options) {
  for (const auto& s : kSuites) {
    if (name != s.name) continue;
    Tally tally;
    const auto start = std::chrono::steady_clock::now();
    try {
      s.run(tally, options);
    } catch (const std::exception& e) {
      tally.check(false, std::string("exception: ") + e.what());
    }
    const std::chrono::duration<double> elapsed = std::chrono::steady_clock::now() - start;
    return {s.name, s.criterion, tally.ok(), elapsed.count(), s.budget, tally.summary()};
  }
  throw std::invalid_argument("unknown suite '" + name + "'");
}

std::string format_result(const SuiteResult& r) {
  char timing[64];
  std::snprintf(timing, sizeof timing, "%.2fs/%.0fs", r.seconds, r.budget_seconds);
  std::string out = r.passed() ? "PASS" : "FAIL";
  out += " [" + std::to_string(r.criterion) + "] " + r.name + "  " + timing;
  if (!r.within_budget()) out += " (over budget)";
  return out + "  " + r.detail;
}

}  // namespace freepi
