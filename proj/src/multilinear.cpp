#include <stdexcept>

#include "freepi/errors.hpp"
#include "freepi/ident.hpp"

namespace freepi {

namespace {

// Appends every word obtained from `word` by giving each occurrence of x_i
// a distinct copy among fresh variables offset[i]+1 .. offset[i]+d_i.
void linearize_word(const std::vector<VarIndex>& word, const std::vector<unsigned>& offset,
                    std::vector<std::vector<bool>>& used, std::vector<VarIndex>& out,
                    const Scalar& c, Polynomial& result) {
  const std::size_t pos = out.size();
  if (pos == word.size()) {
    result.add_term(Monomial(out), c);
    return;
  }
  const VarIndex v = word[pos];
  auto& copies = used[v - 1];
  for (std::size_t copy = 0; copy < copies.size(); ++copy) {
    if (copies[copy]) continue;
    copies[copy] = true;
    out.push_back(static_cast<VarIndex>(offset[v - 1] + copy + 1));
    linearize_word(word, offset, used, out, c, result);
    out.pop_back();
    copies[copy] = false;
  }
}

}  // namespace

Polynomial multilinearize(const Polynomial& f) {
  if (f.is_zero()) return {};
  if (!f.is_multihomogeneous()) throw NotMultihomogeneous();
  const MultiDegree d = multidegree(f.terms().begin()->first);
  std::vector<unsigned> offset(d.num_vars(), 0);
  for (std::size_t i = 1; i < d.num_vars(); ++i) offset[i] = offset[i - 1] + d.counts()[i - 1];
  Polynomial result;
  for (const auto& [m, c] : f.terms()) {
    std::vector<std::vector<bool>> used;
    for (unsigned di : d.counts()) used.emplace_back(di, false);
    std::vector<VarIndex> out;
    linearize_word(m.letters(), offset, used, out, c, result);
  }
  return result;
}

namespace {

// Calls visit(tuple) for every assignment of a basis index to each of
// `vars` variables.
template <typename Visit>
void for_each_basis_tuple(std::size_t dim, std::size_t vars, Visit visit) {
  std::vector<std::size_t> tuple(vars, 0);
  for (;;) {
    visit(tuple);
    std::size_t p = 0;
    while (p < vars && ++tuple[p] == dim) tuple[p++] = 0;
    if (p == vars) return;
  }
}

// Value of a word at the basis tuple, with x_v -> e_{tuple[v-1]}.
Element eval_word_on_basis(const StructureAlgebra& a, const Monomial& w,
                           const std::vector<std::size_t>& tuple) {
  const auto& letters = w.letters();
  Element value = a.basis_element(tuple[letters.front() - 1]);
  for (std::size_t i = 1; i < letters.size() && !value.is_zero(); ++i)
    value = a.multiply_basis_right(value, tuple[letters[i] - 1]);
  return value;
}

}  // namespace

bool vanishes_on_basis_tuples(const Polynomial& f, const StructureAlgebra& a) {
  if (f.is_zero()) return true;
  if (!f.is_multihomogeneous() || !multidegree(f.terms().begin()->first).is_multilinear())
    throw std::invalid_argument("basis-tuple test needs a multilinear polynomial");
  const std::size_t vars = f.max_variable();
  bool vanishes = true;
  // Absent variables do not affect the value; tuples over them repeat work
  // but stay correct.
  for_each_basis_tuple(a.dim(), vars, [&](const std::vector<std::size_t>& tuple) {
    if (!vanishes) return;
    Element total = a.zero();
    for (const auto& [m, c] : f.terms()) total += c * eval_word_on_basis(a, m, tuple);
    if (!total.is_zero()) vanishes = false;
  });
  return vanishes;
}

bool is_identity_by_multilinearization(const Polynomial& f, const StructureAlgebra& a,
                                       unsigned cap) {
  for (const auto& [d, fd] : components(f)) {
    check_degree_cap(d, cap);
    if (!vanishes_on_basis_tuples(multilinearize(fd), a)) return false;
  }
  return true;
}

std::size_t identity_dimension_by_multilinearization(const StructureAlgebra& a,
                                                     const MultiDegree& d, unsigned cap) {
  check_degree_cap(d, cap);
  const std::vector<Monomial> words = enumerate_monomials(d);
  std::vector<Polynomial> linearized;
  linearized.reserve(words.size());
  for (const auto& w : words) linearized.push_back(multilinearize(Polynomial(w)));
  // One row per (basis tuple, output coordinate); column c holds the value
  // of the linearized c-th word.
  RowReducer reducer(words.size());
  const std::size_t n = a.dim();
  for_each_basis_tuple(n, d.total(), [&](const std::vector<std::size_t>& tuple) {
    if (reducer.rank() == words.size()) return;
    std::vector<Element> values;
    values.reserve(words.size());
    bool any = false;
    for (const auto& lin : linearized) {
      Element total = a.zero();
      for (const auto& [m, c] : lin.terms()) total += c * eval_word_on_basis(a, m, tuple);
      any = any || !total.is_zero();
      values.push_back(std::move(total));
    }
    if (!any) return;
    for (std::size_t k = 0; k < n; ++k) {
      Vector row(words.size());
      for (std::size_t col = 0; col < words.size(); ++col) row[col] = values[col].coords[k];
      reducer.add(std::move(row));
    }
  });
  return words.size() - reducer.rank();
}

}  // namespace freepi
