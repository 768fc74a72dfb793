#pragma once

#include <json.hpp>

#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include "lppgames/json_io.hpp"

namespace testing {

inline std::filesystem::path fixture_path(const std::string& name) {
  return std::filesystem::path(LPPGAMES_FIXTURES) / name;
}

inline lpp::LPPInstance load_fixture(const std::string& name) {
  return lpp::load_instance(fixture_path(name));
}

inline nlohmann::json load_fixture_json(const std::string& name) {
  std::ifstream stream(fixture_path(name));
  nlohmann::json doc;
  stream >> doc;
  return doc;
}

inline lpp::Rational rat(const std::string& text) { return lpp::parse_rational(text); }

inline lpp::Rational sum(const lpp::VectorQ& values) {
  lpp::Rational total = 0;
  for (Eigen::Index i = 0; i < values.size(); ++i) total += values(i);
  return total;
}

inline lpp::VectorQ vec(std::initializer_list<lpp::Rational> values) {
  lpp::VectorQ out(static_cast<Eigen::Index>(values.size()));
  Eigen::Index i = 0;
  for (const auto& v : values) out(i++) = v;
  return out;
}

}  // namespace testing
