#include <fstream>
#include <sstream>

#include <json.hpp>

#include "freepi/algebra.hpp"

namespace freepi {

using nlohmann::json;

StructureAlgebra algebra_from_json(const std::string& json_text) {
  json doc;
  try {
    doc = json::parse(json_text);
  } catch (const json::parse_error& e) {
    throw InvalidAlgebra(std::string("algebra spec is not valid JSON: ") + e.what());
  }
  if (!doc.is_object() || !doc.contains("dim") || !doc["dim"].is_number_unsigned())
    throw InvalidAlgebra("algebra spec needs a positive integer \"dim\"");
  const auto dim = doc["dim"].get<std::size_t>();
  if (dim == 0) throw InvalidAlgebra("algebra dimension must be at least 1");

  std::vector<std::string> labels;
  if (doc.contains("basis")) {
    if (!doc["basis"].is_array() || doc["basis"].size() != dim)
      throw InvalidAlgebra("\"basis\" must list exactly dim names");
    for (const auto& b : doc["basis"]) {
      if (!b.is_string()) throw InvalidAlgebra("basis names must be strings");
      labels.push_back(b.get<std::string>());
    }
  } else {
    for (std::size_t i = 1; i <= dim; ++i) labels.push_back("e" + std::to_string(i));
  }

  std::vector<StructureConstant> table;
  if (doc.contains("table")) {
    if (!doc["table"].is_array()) throw InvalidAlgebra("\"table\" must be an array");
    for (const auto& entry : doc["table"]) {
      if (!entry.is_array() || entry.size() != 4)
        throw InvalidAlgebra("table entries must be [i, j, k, coefficient]");
      std::size_t idx[3];
      for (int p = 0; p < 3; ++p) {
        if (!entry[p].is_number_unsigned())
          throw InvalidAlgebra("table indices must be positive integers");
        idx[p] = entry[p].get<std::size_t>();
        if (idx[p] < 1 || idx[p] > dim)
          throw InvalidAlgebra("table index " + std::to_string(idx[p]) + " outside 1.." +
                               std::to_string(dim));
      }
      Scalar c;
      try {
        if (entry[3].is_string()) c = parse_scalar(entry[3].get<std::string>());
        else if (entry[3].is_number_integer()) c = Scalar(entry[3].get<long>());
        else throw std::invalid_argument("coefficient must be \"num/den\" or an integer");
      } catch (const std::invalid_argument& e) {
        throw InvalidAlgebra(e.what());
      }
      table.push_back({idx[0] - 1, idx[1] - 1, idx[2] - 1, c});
    }
  }
  return StructureAlgebra(std::move(labels), std::move(table));
}

StructureAlgebra load_algebra_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InvalidAlgebra("cannot open algebra spec '" + path + "'");
  std::stringstream ss;
  ss << in.rdbuf();
  return algebra_from_json(ss.str()).set_name(path);
}

std::string algebra_to_json(const StructureAlgebra& a) {
  json doc;
  doc["dim"] = a.dim();
  doc["basis"] = a.labels();
  json table = json::array();
  for (const auto& sc : a.table())
    table.push_back({sc.i + 1, sc.j + 1, sc.k + 1, sc.c.get_str()});
  doc["table"] = table;
  return doc.dump();
}

}  // namespace freepi
