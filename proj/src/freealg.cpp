#include "freepi/freealg.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>

#include "freepi/errors.hpp"

namespace freepi {

// ---------------------------------------------------------------------------
// Monomial

Monomial::Monomial(std::vector<VarIndex> word) : word_(std::move(word)) {
  if (word_.empty()) throw std::invalid_argument("monomial must be a nonempty word");
  for (VarIndex v : word_)
    if (v == 0) throw std::invalid_argument("variable indices are 1-based");
}

VarIndex Monomial::max_variable() const {
  return *std::max_element(word_.begin(), word_.end());
}

Monomial operator*(const Monomial& a, const Monomial& b) {
  std::vector<VarIndex> w;
  w.reserve(a.word_.size() + b.word_.size());
  w.insert(w.end(), a.word_.begin(), a.word_.end());
  w.insert(w.end(), b.word_.begin(), b.word_.end());
  return Monomial(std::move(w));
}

std::strong_ordering operator<=>(const Monomial& a, const Monomial& b) {
  if (auto c = a.word_.size() <=> b.word_.size(); c != 0) return c;
  return a.word_ <=> b.word_;
}

std::string to_string(const Monomial& m) {
  std::string out;
  for (std::size_t i = 0; i < m.letters().size(); ++i) {
    if (i) out += '*';
    out += 'x';
    out += std::to_string(m.letters()[i]);
  }
  return out;
}

// ---------------------------------------------------------------------------
// MultiDegree

MultiDegree::MultiDegree(std::vector<unsigned> counts) : counts_(std::move(counts)) {
  normalize();
}

void MultiDegree::normalize() {
  while (!counts_.empty() && counts_.back() == 0) counts_.pop_back();
}

unsigned MultiDegree::count(VarIndex i) const {
  return i >= 1 && i <= counts_.size() ? counts_[i - 1] : 0;
}

unsigned MultiDegree::total() const {
  return std::accumulate(counts_.begin(), counts_.end(), 0u);
}

bool MultiDegree::is_multilinear() const {
  return std::all_of(counts_.begin(), counts_.end(), [](unsigned c) { return c <= 1; });
}

MultiDegree operator+(const MultiDegree& a, const MultiDegree& b) {
  std::vector<unsigned> sum(std::max(a.counts_.size(), b.counts_.size()), 0);
  for (std::size_t i = 0; i < a.counts_.size(); ++i) sum[i] += a.counts_[i];
  for (std::size_t i = 0; i < b.counts_.size(); ++i) sum[i] += b.counts_[i];
  return MultiDegree(std::move(sum));
}

std::string to_string(const MultiDegree& d) {
  std::string out = "(";
  for (std::size_t i = 0; i < d.counts().size(); ++i) {
    if (i) out += ',';
    out += std::to_string(d.counts()[i]);
  }
  return out + ")";
}

MultiDegree parse_multidegree(const std::string& text) {
  std::string body;
  for (char c : text)
    if (c != '(' && c != ')' && c != ' ') body += c;
  std::vector<unsigned> counts;
  std::stringstream ss(body);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item.empty() || !std::all_of(item.begin(), item.end(), ::isdigit))
      throw std::invalid_argument("malformed multidegree: '" + text + "'");
    counts.push_back(static_cast<unsigned>(std::stoul(item)));
  }
  return MultiDegree(std::move(counts));
}

// ---------------------------------------------------------------------------
// Polynomial

Polynomial::Polynomial(const Monomial& m, const Scalar& c) {
  if (c != 0) terms_.emplace(m, c);
}

Scalar Polynomial::coefficient(const Monomial& m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? Scalar(0) : it->second;
}

void Polynomial::add_term(const Monomial& m, const Scalar& c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

VarIndex Polynomial::max_variable() const {
  VarIndex v = 0;
  for (const auto& [m, c] : terms_) v = std::max(v, m.max_variable());
  return v;
}

std::size_t Polynomial::degree() const {
  // Deg-lex order puts the longest words last.
  return terms_.empty() ? 0 : terms_.rbegin()->first.length();
}

bool Polynomial::is_multihomogeneous() const {
  if (terms_.empty()) return true;
  const MultiDegree first = multidegree(terms_.begin()->first);
  return std::all_of(terms_.begin(), terms_.end(),
                     [&](const auto& t) { return multidegree(t.first) == first; });
}

Polynomial& Polynomial::operator+=(const Polynomial& g) {
  for (const auto& [m, c] : g.terms_) add_term(m, c);
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& g) {
  for (const auto& [m, c] : g.terms_) add_term(m, -c);
  return *this;
}

Polynomial operator-(const Polynomial& f) {
  Polynomial r = f;
  for (auto& [m, c] : r.terms_) c = -c;
  return r;
}

Polynomial operator*(const Polynomial& f, const Polynomial& g) {
  Polynomial r;
  for (const auto& [mf, cf] : f.terms_)
    for (const auto& [mg, cg] : g.terms_) r.add_term(mf * mg, cf * cg);
  return r;
}

Polynomial operator*(const Scalar& c, const Polynomial& f) {
  if (c == 0) return {};
  Polynomial r = f;
  for (auto& [m, coeff] : r.terms_) coeff *= c;
  return r;
}

Polynomial add(const Polynomial& f, const Polynomial& g) { return f + g; }
Polynomial scale(const Scalar& c, const Polynomial& f) { return c * f; }
Polynomial mul(const Polynomial& f, const Polynomial& g) { return f * g; }

Polynomial substitute(const Polynomial& f, std::span<const Polynomial> subs) {
  Polynomial result;
  for (const auto& [m, c] : f.terms()) {
    const auto& word = m.letters();
    for (VarIndex v : word)
      if (v > subs.size()) throw MissingSubstituent(v);
    Polynomial image = subs[word.front() - 1];
    for (std::size_t i = 1; i < word.size() && !image.is_zero(); ++i)
      image = image * subs[word[i] - 1];
    result += c * image;
  }
  return result;
}

MultiDegree multidegree(const Monomial& m, std::size_t num_vars) {
  if (num_vars < m.max_variable())
    throw std::invalid_argument("num_vars below the largest variable index of the monomial");
  std::vector<unsigned> counts(num_vars, 0);
  for (VarIndex v : m.letters()) ++counts[v - 1];
  return MultiDegree(std::move(counts));
}

MultiDegree multidegree(const Monomial& m) { return multidegree(m, m.max_variable()); }

std::map<MultiDegree, Polynomial> components(const Polynomial& f) {
  std::map<MultiDegree, Polynomial> out;
  for (const auto& [m, c] : f.terms()) out[multidegree(m)].add_term(m, c);
  return out;
}

Scalar l1_norm(const Polynomial& f) {
  Scalar sum = 0;
  for (const auto& [m, c] : f.terms()) sum += abs(c);
  return sum;
}

std::uint64_t multinomial(const MultiDegree& d) {
  // Product of binomials C(d1+...+di, di), each exact in 64 bits for the
  // degrees this library admits.
  std::uint64_t result = 1;
  unsigned running = 0;
  for (unsigned di : d.counts()) {
    for (unsigned j = 1; j <= di; ++j) {
      ++running;
      result = result * running / j;
    }
  }
  return result;
}

std::vector<Monomial> enumerate_monomials(const MultiDegree& d) {
  if (d.total() == 0) throw std::invalid_argument("multidegree must have |d| >= 1");
  std::vector<VarIndex> word;
  for (VarIndex i = 1; i <= d.num_vars(); ++i) word.insert(word.end(), d.count(i), i);
  std::vector<Monomial> out;
  out.reserve(multinomial(d));
  do {
    out.emplace_back(word);
  } while (std::next_permutation(word.begin(), word.end()));
  return out;
}

Polynomial standard_polynomial(unsigned k) {
  if (k == 0) throw std::invalid_argument("standard polynomial needs k >= 1");
  std::vector<VarIndex> perm(k);
  std::iota(perm.begin(), perm.end(), 1);
  Polynomial s;
  do {
    unsigned inversions = 0;
    for (unsigned i = 0; i < k; ++i)
      for (unsigned j = i + 1; j < k; ++j) inversions += perm[i] > perm[j];
    s.add_term(Monomial(perm), inversions % 2 ? -1 : 1);
  } while (std::next_permutation(perm.begin(), perm.end()));
  return s;
}

std::vector<Scalar> coefficient_vector(const Polynomial& f,
                                       std::span<const Monomial> monomials) {
  std::vector<Scalar> v;
  v.reserve(monomials.size());
  for (const auto& m : monomials) v.push_back(f.coefficient(m));
  return v;
}

Polynomial from_coefficients(std::span<const Monomial> monomials,
                             std::span<const Scalar> coeffs) {
  if (monomials.size() != coeffs.size())
    throw DimensionMismatch("coefficient count does not match monomial count");
  Polynomial f;
  for (std::size_t i = 0; i < monomials.size(); ++i) f.add_term(monomials[i], coeffs[i]);
  return f;
}

}  // namespace freepi
