#include "freepi/algebra.hpp"

#include <algorithm>
#include <numeric>

namespace freepi {

bool Element::is_zero() const {
  return std::all_of(coords.begin(), coords.end(), [](const Scalar& x) { return x == 0; });
}

Element& Element::operator+=(const Element& other) {
  if (other.dim() != dim()) throw DimensionMismatch("adding elements of different dimension");
  for (std::size_t i = 0; i < coords.size(); ++i)
    if (other.coords[i] != 0) coords[i] += other.coords[i];
  return *this;
}

Element operator*(const Scalar& c, Element a) {
  for (auto& x : a.coords)
    if (x != 0) x *= c;
  return a;
}

namespace {

std::string coords_string(const Element& e) {
  std::string out = "[";
  for (std::size_t i = 0; i < e.coords.size(); ++i) {
    if (i) out += ", ";
    out += e.coords[i].get_str();
  }
  return out + "]";
}

using ProductTable = std::vector<std::vector<std::pair<std::size_t, Scalar>>>;

ProductTable build_products(std::size_t dim, std::span<const StructureConstant> table) {
  ProductTable products(dim * dim);
  for (const auto& sc : table) {
    if (sc.i >= dim || sc.j >= dim || sc.k >= dim)
      throw InvalidAlgebra("structure constant index out of range");
    if (sc.c == 0) continue;
    auto& terms = products[sc.i * dim + sc.j];
    auto it = std::find_if(terms.begin(), terms.end(), [&](auto& t) { return t.first == sc.k; });
    if (it == terms.end()) {
      terms.emplace_back(sc.k, sc.c);
    } else {
      it->second += sc.c;
    }
  }
  for (auto& terms : products) {
    std::erase_if(terms, [](auto& t) { return t.second == 0; });
    std::sort(terms.begin(), terms.end(),
              [](auto& a, auto& b) { return a.first < b.first; });
  }
  return products;
}

Element mul_with(const ProductTable& products, std::size_t dim, const Element& a,
                 const Element& b) {
  Element out(dim);
  for (std::size_t i = 0; i < dim; ++i) {
    if (a.coords[i] == 0) continue;
    for (std::size_t j = 0; j < dim; ++j) {
      if (b.coords[j] == 0) continue;
      const auto& terms = products[i * dim + j];
      if (terms.empty()) continue;
      const Scalar ab = a.coords[i] * b.coords[j];
      for (const auto& [k, c] : terms) out.coords[k] += ab * c;
    }
  }
  return out;
}

Element unit_vector(std::size_t dim, std::size_t i) {
  Element e(dim);
  e.coords[i] = 1;
  return e;
}

}  // namespace

std::string to_string(const AssociativityViolation& v) {
  return "(" + std::to_string(v.i + 1) + "," + std::to_string(v.j + 1) + "," +
         std::to_string(v.k + 1) + "): (e" + std::to_string(v.i + 1) + "e" +
         std::to_string(v.j + 1) + ")e" + std::to_string(v.k + 1) + " = " +
         coords_string(v.left) + " but e" + std::to_string(v.i + 1) + "(e" +
         std::to_string(v.j + 1) + "e" + std::to_string(v.k + 1) + ") = " +
         coords_string(v.right);
}

std::optional<AssociativityViolation> check_associativity(
    std::size_t dim, std::span<const StructureConstant> table) {
  const ProductTable products = build_products(dim, table);
  for (std::size_t i = 0; i < dim; ++i) {
    for (std::size_t j = 0; j < dim; ++j) {
      Element eij(dim);
      for (const auto& [k, c] : products[i * dim + j]) eij.coords[k] = c;
      for (std::size_t k = 0; k < dim; ++k) {
        Element ejk(dim);
        for (const auto& [l, c] : products[j * dim + k]) ejk.coords[l] = c;
        Element left = mul_with(products, dim, eij, unit_vector(dim, k));
        Element right = mul_with(products, dim, unit_vector(dim, i), ejk);
        if (left != right) return AssociativityViolation{i, j, k, left, right};
      }
    }
  }
  return std::nullopt;
}

StructureAlgebra::StructureAlgebra(std::vector<std::string> labels,
                                   std::vector<StructureConstant> table)
    : labels_(std::move(labels)) {
  if (labels_.empty()) throw InvalidAlgebra("algebra dimension must be at least 1");
  products_ = build_products(dim(), table);
  for (std::size_t i = 0; i < dim(); ++i)
    for (std::size_t j = 0; j < dim(); ++j)
      for (const auto& [k, c] : products_[i * dim() + j]) table_.push_back({i, j, k, c});
  if (auto v = check_associativity(dim(), table_)) throw NonAssociative(*v);
}

Element StructureAlgebra::basis_element(std::size_t i) const {
  if (i >= dim()) throw DimensionMismatch("basis index out of range");
  return unit_vector(dim(), i);
}

std::optional<std::size_t> StructureAlgebra::find_label(const std::string& label) const {
  auto it = std::find(labels_.begin(), labels_.end(), label);
  if (it == labels_.end()) return std::nullopt;
  return static_cast<std::size_t>(it - labels_.begin());
}

Element StructureAlgebra::multiply(const Element& a, const Element& b) const {
  if (a.dim() != dim() || b.dim() != dim())
    throw DimensionMismatch("element does not belong to this algebra");
  return mul_with(products_, dim(), a, b);
}

Element StructureAlgebra::multiply_basis_right(const Element& a, std::size_t j) const {
  Element out(dim());
  for (std::size_t i = 0; i < dim(); ++i) {
    if (a.coords[i] == 0) continue;
    for (const auto& [k, c] : products_[i * dim() + j]) out.coords[k] += a.coords[i] * c;
  }
  return out;
}

std::optional<AssociativityViolation> check_associativity(const StructureAlgebra& a) {
  return check_associativity(a.dim(), a.table());
}

Element multiply_elements(const StructureAlgebra& a, const Element& x, const Element& y) {
  return a.multiply(x, y);
}

Element evaluate(const Polynomial& f, const StructureAlgebra& a, std::span<const Element> args) {
  for (const auto& x : args)
    if (x.dim() != a.dim()) throw DimensionMismatch("argument does not belong to the algebra");
  if (f.max_variable() > args.size()) throw MissingArgument(args.size() + 1);
  Element result = a.zero();
  for (const auto& [m, c] : f.terms()) {
    const auto& word = m.letters();
    Element value = args[word.front() - 1];
    for (std::size_t i = 1; i < word.size() && !value.is_zero(); ++i)
      value = a.multiply(value, args[word[i] - 1]);
    result += c * value;
  }
  return result;
}

std::string format_element(const StructureAlgebra& a, const Element& x) {
  std::string out;
  for (std::size_t i = 0; i < x.dim(); ++i) {
    const Scalar& c = x.coords[i];
    if (c == 0) continue;
    const Scalar mag = abs(c);
    if (out.empty()) {
      if (c < 0) out += '-';
    } else {
      out += c < 0 ? " - " : " + ";
    }
    if (mag != 1) out += mag.get_str() + "*";
    out += i < a.labels().size() ? a.labels()[i] : "e" + std::to_string(i + 1);
  }
  return out.empty() ? "0" : out;
}

// ---------------------------------------------------------------------------
// Generic evaluation

namespace {

struct GenericWalker {
  const StructureAlgebra& alg;
  std::span<const Monomial> words;
  std::vector<std::size_t> order;  // word indices sorted by letters
  std::size_t key_len;
  const std::function<void(std::size_t, const GenericImage&)>& visit;

  GenericImage step(const GenericImage* prefix, VarIndex var) const {
    const std::size_t n = alg.dim();
    const std::size_t base = (var - 1) * n;
    GenericImage next;
    if (prefix == nullptr) {
      for (std::size_t j = 0; j < n; ++j) {
        GenericKey key(key_len, '\0');
        key[base + j] = 1;
        next.emplace(std::move(key), alg.basis_element(j));
      }
      return next;
    }
    for (const auto& [key, value] : *prefix) {
      for (std::size_t j = 0; j < n; ++j) {
        Element prod = alg.multiply_basis_right(value, j);
        if (prod.is_zero()) continue;
        GenericKey k2 = key;
        ++k2[base + j];
        auto [it, inserted] = next.try_emplace(std::move(k2), prod);
        if (!inserted) it->second += prod;
      }
    }
    std::erase_if(next, [](const auto& kv) { return kv.second.is_zero(); });
    return next;
  }

  // order[lo, hi) share their first `depth` letters, with image `prefix`.
  void walk(std::size_t lo, std::size_t hi, std::size_t depth, const GenericImage* prefix) const {
    while (lo < hi && words[order[lo]].length() == depth) {
      visit(order[lo], *prefix);
      ++lo;
    }
    while (lo < hi) {
      const VarIndex letter = words[order[lo]].letters()[depth];
      std::size_t mid = lo;
      while (mid < hi && words[order[mid]].letters()[depth] == letter) ++mid;
      const GenericImage next = step(prefix, letter);
      if (next.empty()) {
        // Every extension of a vanishing prefix vanishes too.
        static const GenericImage empty;
        for (std::size_t i = lo; i < mid; ++i) visit(order[i], empty);
      } else {
        walk(lo, mid, depth + 1, &next);
      }
      lo = mid;
    }
  }
};

}  // namespace

void for_each_generic_image(const StructureAlgebra& a, std::span<const Monomial> words,
                            const std::function<void(std::size_t, const GenericImage&)>& visit) {
  VarIndex max_var = 0;
  for (const auto& w : words) max_var = std::max(max_var, w.max_variable());
  GenericWalker walker{a, words, {}, static_cast<std::size_t>(max_var) * a.dim(), visit};
  walker.order.resize(words.size());
  std::iota(walker.order.begin(), walker.order.end(), 0);
  std::sort(walker.order.begin(), walker.order.end(), [&](std::size_t x, std::size_t y) {
    return words[x].letters() < words[y].letters();
  });
  // Every word is nonempty, so depth 0 has no terminal entries.
  std::size_t lo = 0;
  while (lo < words.size()) {
    const VarIndex letter = words[walker.order[lo]].letters()[0];
    std::size_t mid = lo;
    while (mid < words.size() && words[walker.order[mid]].letters()[0] == letter) ++mid;
    const GenericImage first = walker.step(nullptr, letter);
    walker.walk(lo, mid, 1, &first);
    lo = mid;
  }
}

GenericImage generic_evaluate(const Polynomial& f, const StructureAlgebra& a) {
  std::vector<Monomial> words;
  std::vector<Scalar> coeffs;
  for (const auto& [m, c] : f.terms()) {
    words.push_back(m);
    coeffs.push_back(c);
  }
  GenericImage total;
  for_each_generic_image(a, words, [&](std::size_t idx, const GenericImage& image) {
    for (const auto& [key, value] : image) {
      Element term = coeffs[idx] * value;
      auto [it, inserted] = total.try_emplace(key, term);
      if (!inserted) it->second += term;
    }
  });
  std::erase_if(total, [](const auto& kv) { return kv.second.is_zero(); });
  return total;
}

Matrix generic_evaluation_matrix(const StructureAlgebra& a, const MultiDegree& d) {
  const std::vector<Monomial> words = enumerate_monomials(d);
  const std::size_t n = a.dim();
  std::vector<GenericImage> images(words.size());
  for_each_generic_image(a, words,
                         [&](std::size_t idx, const GenericImage& image) { images[idx] = image; });
  // Row index for every (key, output coordinate) that is nonzero somewhere.
  std::map<std::pair<GenericKey, std::size_t>, std::size_t> row_of;
  for (const auto& image : images)
    for (const auto& [key, value] : image)
      for (std::size_t k = 0; k < n; ++k)
        if (value.coords[k] != 0) row_of.emplace(std::make_pair(key, k), 0);
  std::size_t next = 0;
  for (auto& [rk, idx] : row_of) idx = next++;
  Matrix m(row_of.size(), words.size());
  for (std::size_t col = 0; col < words.size(); ++col)
    for (const auto& [key, value] : images[col])
      for (std::size_t k = 0; k < n; ++k)
        if (value.coords[k] != 0) m(row_of.at({key, k}), col) = value.coords[k];
  return m;
}

}  // namespace freepi
