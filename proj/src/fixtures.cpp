#include <algorithm>
#include <bit>
#include <cctype>
#include <optional>
#include <stdexcept>

#include "freepi/algebra.hpp"

namespace freepi {

namespace {

std::string unit_label(std::size_t n, std::size_t r, std::size_t c) {
  // E12 for small n, E1,12 once indices need two digits.
  const std::string sep = n >= 10 ? "," : "";
  return "E" + std::to_string(r + 1) + sep + std::to_string(c + 1);
}

/// Matrix units E_rc for every (r,c) passing keep, with E_ab E_cd = [b==c] E_ad.
template <typename Keep>
StructureAlgebra matrix_units(std::size_t n, Keep keep) {
  if (n == 0) throw std::invalid_argument("matrix size must be at least 1");
  std::vector<std::pair<std::size_t, std::size_t>> units;
  std::vector<std::string> labels;
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = 0; c < n; ++c)
      if (keep(r, c)) {
        units.emplace_back(r, c);
        labels.push_back(unit_label(n, r, c));
      }
  if (units.empty()) throw InvalidAlgebra("matrix unit family is empty");
  auto index_of = [&](std::size_t r, std::size_t c) -> std::optional<std::size_t> {
    for (std::size_t i = 0; i < units.size(); ++i)
      if (units[i] == std::make_pair(r, c)) return i;
    return std::nullopt;
  };
  std::vector<StructureConstant> table;
  for (std::size_t i = 0; i < units.size(); ++i)
    for (std::size_t j = 0; j < units.size(); ++j)
      if (units[i].second == units[j].first)
        if (auto k = index_of(units[i].first, units[j].second)) table.push_back({i, j, *k, 1});
  return StructureAlgebra(std::move(labels), std::move(table));
}

}  // namespace

StructureAlgebra full_matrix(std::size_t n) {
  return matrix_units(n, [](std::size_t, std::size_t) { return true; })
      .set_name("matrix:" + std::to_string(n));
}

StructureAlgebra upper_triangular(std::size_t n) {
  return matrix_units(n, [](std::size_t r, std::size_t c) { return r <= c; })
      .set_name("uptri:" + std::to_string(n));
}

StructureAlgebra strictly_upper_triangular(std::size_t n) {
  if (n < 2) throw std::invalid_argument("strictly upper triangular algebra needs n >= 2");
  return matrix_units(n, [](std::size_t r, std::size_t c) { return r < c; })
      .set_name("strict-uptri:" + std::to_string(n));
}

StructureAlgebra grassmann(std::size_t k) {
  if (k == 0 || k > 12) throw std::invalid_argument("grassmann generator count must be in 1..12");
  // Basis: nonempty subsets of generators as bitmasks, by size then by
  // lexicographic order of their sorted index lists.
  std::vector<unsigned> masks;
  for (unsigned m = 1; m < (1u << k); ++m) masks.push_back(m);
  auto indices = [](unsigned m) {
    std::vector<unsigned> out;
    for (unsigned b = 0; m >> b; ++b)
      if (m >> b & 1u) out.push_back(b);
    return out;
  };
  std::sort(masks.begin(), masks.end(), [&](unsigned a, unsigned b) {
    const int pa = std::popcount(a), pb = std::popcount(b);
    if (pa != pb) return pa < pb;
    return indices(a) < indices(b);
  });
  std::vector<std::size_t> position(1u << k);
  std::vector<std::string> labels;
  for (std::size_t i = 0; i < masks.size(); ++i) {
    position[masks[i]] = i;
    std::string label;
    for (unsigned b : indices(masks[i])) label += "g" + std::to_string(b + 1);
    labels.push_back(label);
  }
  std::vector<StructureConstant> table;
  for (std::size_t i = 0; i < masks.size(); ++i) {
    for (std::size_t j = 0; j < masks.size(); ++j) {
      const unsigned s = masks[i], t = masks[j];
      if (s & t) continue;
      // Sign of sorting the concatenation: one transposition per pair
      // (a in s, b in t) with a > b.
      unsigned swaps = 0;
      for (unsigned a : indices(s))
        for (unsigned b : indices(t)) swaps += a > b;
      table.push_back({i, j, position[s | t], swaps % 2 ? -1 : 1});
    }
  }
  return StructureAlgebra(std::move(labels), std::move(table))
      .set_name("grassmann:" + std::to_string(k));
}

StructureAlgebra truncated_poly(std::size_t n) {
  if (n == 0) throw std::invalid_argument("truncated polynomial algebra needs n >= 1");
  std::vector<std::string> labels;
  for (std::size_t p = 1; p <= n; ++p) labels.push_back(p == 1 ? "t" : "t^" + std::to_string(p));
  std::vector<StructureConstant> table;
  for (std::size_t a = 1; a <= n; ++a)
    for (std::size_t b = 1; a + b <= n; ++b) table.push_back({a - 1, b - 1, a + b - 1, 1});
  return StructureAlgebra(std::move(labels), std::move(table))
      .set_name("tpoly:" + std::to_string(n));
}

StructureAlgebra direct_sum(const StructureAlgebra& a, const StructureAlgebra& b) {
  std::vector<std::string> labels;
  bool clash = false;
  for (const auto& l : b.labels()) clash = clash || a.find_label(l).has_value();
  for (const auto& l : a.labels()) labels.push_back(clash ? "1." + l : l);
  for (const auto& l : b.labels()) labels.push_back(clash ? "2." + l : l);
  std::vector<StructureConstant> table = a.table();
  const std::size_t off = a.dim();
  for (const auto& sc : b.table()) table.push_back({sc.i + off, sc.j + off, sc.k + off, sc.c});
  std::string name;
  if (!a.name().empty() && !b.name().empty()) name = a.name() + "+" + b.name();
  return StructureAlgebra(std::move(labels), std::move(table)).set_name(name);
}

StructureAlgebra algebra_from_name(const std::string& name) {
  if (const auto plus = name.find('+'); plus != std::string::npos)
    return direct_sum(algebra_from_name(name.substr(0, plus)),
                      algebra_from_name(name.substr(plus + 1)));
  const auto colon = name.find(':');
  if (colon == std::string::npos)
    throw InvalidAlgebra("algebra name must look like kind:n, got '" + name + "'");
  const std::string kind = name.substr(0, colon);
  const std::string arg = name.substr(colon + 1);
  if (arg.empty() || arg.size() > 3 ||
      !std::all_of(arg.begin(), arg.end(), [](unsigned char c) { return std::isdigit(c); }))
    throw InvalidAlgebra("bad size in algebra name '" + name + "'");
  const std::size_t n = std::stoul(arg);
  try {
    if (kind == "matrix") return full_matrix(n);
    if (kind == "uptri") return upper_triangular(n);
    if (kind == "strict-uptri") return strictly_upper_triangular(n);
    if (kind == "grassmann") return grassmann(n);
    if (kind == "tpoly") return truncated_poly(n);
  } catch (const std::invalid_argument& e) {
    throw InvalidAlgebra(e.what());
  }
  throw InvalidAlgebra("unknown algebra kind '" + kind +
                       "' (expected matrix, uptri, strict-uptri, grassmann, tpoly)");
}

}  // namespace freepi
