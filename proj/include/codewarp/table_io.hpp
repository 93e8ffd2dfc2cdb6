#pragma once

#include <fstream>
#include <istream>
#include <ostream>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "codewarp/encoding_table.hpp"

namespace codewarp {

// Encoding-table file schema:
//   {
//     "version": "1",
//     "categories": [
//       {"name": "Arithmetic", "phi": 100.0,
//        "members": [{"lexeme": "+", "theta": 101.0}, ...]},
//       ...
//     ],
//     "reserved_words": [{"lexeme": "abstract", "sigma": 2010.0}, ...]
//   }
// Loading re-validates every table invariant; violations surface as
// TableError naming the failing rule.

inline nlohmann::json table_to_json(const EncodingTable& table) {
  nlohmann::json j;
  j["version"] = table.version();
  j["categories"] = nlohmann::json::array();
  for (const auto& cat : table.categories()) {
    nlohmann::json jc;
    jc["name"] = cat.name;
    jc["phi"] = cat.phi;
    jc["members"] = nlohmann::json::array();
    for (const auto& op : cat.members) {
      jc["members"].push_back({{"lexeme", op.lexeme}, {"theta", op.theta}});
    }
    j["categories"].push_back(std::move(jc));
  }
  j["reserved_words"] = nlohmann::json::array();
  for (const auto& rw : table.reserved_words()) {
    j["reserved_words"].push_back({{"lexeme", rw.lexeme}, {"sigma", rw.sigma}});
  }
  return j;
}

inline EncodingTable table_from_json(const nlohmann::json& j) {
  auto require = [&](const nlohmann::json& node, const char* key) -> const nlohmann::json& {
    if (!node.contains(key))
      throw TableError("table file is missing a required key", key);
    return node.at(key);
  };

  std::string version = require(j, "version").get<std::string>();
  std::vector<OperatorCategory> categories;
  for (const auto& jc : require(j, "categories")) {
    OperatorCategory cat;
    cat.name = require(jc, "name").get<std::string>();
    cat.phi = require(jc, "phi").get<double>();
    for (const auto& jm : require(jc, "members")) {
      cat.members.push_back(
          {require(jm, "lexeme").get<std::string>(), require(jm, "theta").get<double>()});
    }
    categories.push_back(std::move(cat));
  }
  std::vector<ReservedWord> reserved;
  for (const auto& jr : require(j, "reserved_words")) {
    reserved.push_back(
        {require(jr, "lexeme").get<std::string>(), require(jr, "sigma").get<double>()});
  }
  return EncodingTable(std::move(version), std::move(categories), std::move(reserved));
}

inline EncodingTable load_table(std::istream& in) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(in);
  } catch (const nlohmann::json::exception& e) {
    throw TableError("table file is not valid JSON", e.what());
  }
  try {
    return table_from_json(j);
  } catch (const nlohmann::json::exception& e) {
    throw TableError("table file has a malformed field", e.what());
  }
}

inline EncodingTable load_table(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open table file: " + path);
  return load_table(in);
}

inline void save_table(const EncodingTable& table, std::ostream& out) {
  out << table_to_json(table).dump(2) << '\n';
}

}  // namespace codewarp
