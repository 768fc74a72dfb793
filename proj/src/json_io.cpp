#include "lppgames/json_io.hpp"

#include <fstream>
#include <limits>
#include <sstream>

namespace lpp {

namespace {

Rational number_from_json(const nlohmann::json& node, const std::string& where) {
  if (node.is_number_integer()) return Rational(node.get<long long>());
  if (node.is_string()) {
    try {
      return parse_rational(node.get<std::string>());
    } catch (const std::invalid_argument& error) {
      throw ParseError(where + ": " + error.what());
    }
  }
  if (node.is_number_float()) {
    throw ParseError(where + ": non-integer numeric literal; quote it as a string (\"" +
                     node.dump() + "\") so it can be read exactly");
  }
  throw ParseError(where + ": expected an integer or a rational string, got " + node.dump());
}

MatrixQ matrix_from_json(const nlohmann::json& node, const std::string& name) {
  if (!node.is_array() || node.empty()) throw ParseError(name + ": expected a non-empty array of rows");
  const std::size_t rows = node.size();
  std::size_t cols = 0;
  MatrixQ out;
  for (std::size_t i = 0; i < rows; ++i) {
    const auto& row = node[i];
    if (!row.is_array() || row.empty()) {
      throw ParseError(name + ": row " + std::to_string(i + 1) + " is not a non-empty array");
    }
    if (i == 0) {
      cols = row.size();
      out.resize(static_cast<Eigen::Index>(rows), static_cast<Eigen::Index>(cols));
    } else if (row.size() != cols) {
      throw ParseError(name + ": row " + std::to_string(i + 1) + " has " +
                       std::to_string(row.size()) + " entries, expected " + std::to_string(cols));
    }
    for (std::size_t j = 0; j < cols; ++j) {
      out(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) = number_from_json(
          row[j], name + "(" + std::to_string(i + 1) + "," + std::to_string(j + 1) + ")");
    }
  }
  return out;
}

nlohmann::ordered_json number_to_json(const Rational& value) {
  if (denominator(value) == 1) {
    const BigInt num = numerator(value);
    if (num >= std::numeric_limits<long long>::min() &&
        num <= std::numeric_limits<long long>::max()) {
      return nlohmann::ordered_json(num.convert_to<long long>());
    }
  }
  return nlohmann::ordered_json(to_string(value));
}

}  // namespace

LPPInstance instance_from_json(const nlohmann::json& doc) {
  if (!doc.is_object()) throw ParseError("instance document must be a JSON object");
  for (const char* key : {"A", "B", "p", "c", "r"}) {
    if (!doc.contains(key)) throw ParseError(std::string("missing key '") + key + "'");
  }
  LPPInstance instance;
  instance.A = matrix_from_json(doc.at("A"), "A");
  instance.B = matrix_from_json(doc.at("B"), "B");
  if (!doc.at("p").is_array()) throw ParseError("p: expected an array");
  instance.p.resize(static_cast<Eigen::Index>(doc.at("p").size()));
  for (std::size_t j = 0; j < doc.at("p").size(); ++j) {
    instance.p(static_cast<Eigen::Index>(j)) =
        number_from_json(doc.at("p")[j], "p(" + std::to_string(j + 1) + ")");
  }
  instance.c = number_from_json(doc.at("c"), "c");
  instance.r = number_from_json(doc.at("r"), "r");
  instance.q = static_cast<int>(instance.B.rows());
  instance.n = static_cast<int>(instance.B.cols());
  instance.g = static_cast<int>(instance.A.cols());
  if (instance.A.rows() != instance.q + 1) {
    throw ParseError("A has " + std::to_string(instance.A.rows()) + " rows; expected q+1 = " +
                     std::to_string(instance.q + 1) + " (B supplies q = " +
                     std::to_string(instance.q) + ")");
  }
  if (instance.p.size() != instance.g) {
    throw ParseError("p has " + std::to_string(instance.p.size()) + " prices; expected g = " +
                     std::to_string(instance.g));
  }
  if (instance.n > 31) throw ParseError("more than 31 producers are not supported");
  return instance;
}

LPPInstance parse_instance_text(const std::string& text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& error) {
    throw ParseError(std::string("invalid JSON: ") + error.what());
  }
  return instance_from_json(doc);
}

LPPInstance load_instance(const std::filesystem::path& path) {
  std::ifstream stream(path);
  if (!stream) throw ParseError("cannot open '" + path.string() + "'");
  std::ostringstream buffer;
  buffer << stream.rdbuf();
  try {
    return parse_instance_text(buffer.str());
  } catch (const ParseError& error) {
    throw ParseError(path.string() + ": " + error.what());
  }
}

nlohmann::ordered_json instance_to_json(const LPPInstance& instance) {
  nlohmann::ordered_json doc;
  doc["A"] = nlohmann::ordered_json::array();
  for (Eigen::Index i = 0; i < instance.A.rows(); ++i) {
    nlohmann::ordered_json row = nlohmann::ordered_json::array();
    for (Eigen::Index j = 0; j < instance.A.cols(); ++j) row.push_back(number_to_json(instance.A(i, j)));
    doc["A"].push_back(std::move(row));
  }
  doc["B"] = nlohmann::ordered_json::array();
  for (Eigen::Index i = 0; i < instance.B.rows(); ++i) {
    nlohmann::ordered_json row = nlohmann::ordered_json::array();
    for (Eigen::Index j = 0; j < instance.B.cols(); ++j) row.push_back(number_to_json(instance.B(i, j)));
    doc["B"].push_back(std::move(row));
  }
  doc["p"] = nlohmann::ordered_json::array();
  for (Eigen::Index j = 0; j < instance.p.size(); ++j) doc["p"].push_back(number_to_json(instance.p(j)));
  doc["c"] = number_to_json(instance.c);
  doc["r"] = number_to_json(instance.r);
  return doc;
}

std::string coalition_key(Coalition coalition, int players) {
  std::string out;
  for (int member : coalition.members()) {
    if (players > 9 && !out.empty()) out += ",";
    out += std::to_string(member + 1);
  }
  return out;
}

Coalition coalition_from_key(const std::string& key, int players) {
  Coalition out;
  const auto add = [&](const std::string& token) {
    const int label = std::stoi(token);
    if (label < 1 || label > players) throw ParseError("player label out of range: " + token);
    out = out.unite(Coalition::single(label - 1));
  };
  if (players > 9) {
    std::istringstream stream(key);
    std::string token;
    while (std::getline(stream, token, ',')) add(token);
  } else {
    for (char ch : key) add(std::string(1, ch));
  }
  if (out.empty()) throw ParseError("empty coalition key");
  return out;
}

nlohmann::ordered_json game_to_json(const CharacteristicGame& game) {
  nlohmann::ordered_json doc;
  doc["n"] = game.players();
  nlohmann::ordered_json worths;
  game.for_each_nonempty([&](Coalition coalition, const Rational& worth) {
    worths[coalition_key(coalition, game.players())] = to_string(worth);
  });
  doc["v"] = std::move(worths);
  return doc;
}

CharacteristicGame game_from_json(const nlohmann::json& doc) {
  if (!doc.is_object() || !doc.contains("n") || !doc.contains("v")) {
    throw ParseError("game document needs keys 'n' and 'v'");
  }
  const int players = doc.at("n").get<int>();
  CharacteristicGame game(players);
  for (const auto& [key, value] : doc.at("v").items()) {
    game.set_worth(coalition_from_key(key, players), number_from_json(value, "v['" + key + "']"));
  }
  return game;
}

nlohmann::ordered_json partition_game_to_json(const PartitionFunctionGame& game) {
  nlohmann::ordered_json doc;
  doc["n"] = game.players();
  doc["rule"] = game.rule_name();
  nlohmann::ordered_json worths;
  for (std::size_t p = 0; p < game.partitions().size(); ++p) {
    const std::string suffix = "|" + to_text(game.partitions()[p]);
    for (const auto& cell : game.cells(p)) {
      worths[to_text(cell.block) + suffix] = to_string(cell.worth);
    }
  }
  doc["V"] = std::move(worths);
  return doc;
}

nlohmann::ordered_json core_report_to_json(const CoreReport& report) {
  nlohmann::ordered_json doc;
  doc["verdict"] = to_string(report.verdict);
  if (report.witness) {
    nlohmann::ordered_json witness = nlohmann::ordered_json::array();
    for (Eigen::Index i = 0; i < report.witness->size(); ++i) {
      witness.push_back(to_string((*report.witness)(i)));
    }
    doc["witness"] = std::move(witness);
  }
  if (report.source) doc["source"] = to_string(*report.source);
  return doc;
}

nlohmann::ordered_json regime_report_to_json(const RegimeReport& report) {
  nlohmann::ordered_json doc;
  doc["regime"] = to_string(report.regime);
  nlohmann::ordered_json list = nlohmann::ordered_json::array();
  for (const Partition& partition : report.minimal_exceeding) list.push_back(to_text(partition));
  doc["minimal_exceeding"] = std::move(list);
  return doc;
}

}  // namespace lpp
