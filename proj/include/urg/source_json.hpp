// SPDX-License-Identifier: MIT
//
// JSON source-specification loader. Format:
//   {"alphabet": ["0","1"], "states": 2, "initial": 0,
//    "kernel": [[[...]]]}                      kernel[z][x][z']
// With an "si_alphabet" field the kernel gains a y axis: kernel[z][x][y][z']
// and the file describes a joint source with side information.
// Validation failures name the offending state slice.
#ifndef URG_SOURCE_JSON_HPP
#define URG_SOURCE_JSON_HPP

#include <fstream>
#include <stdexcept>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "urg/alphabet.hpp"
#include "urg/sources.hpp"

namespace urg {

namespace detail {

inline Alphabet alphabet_from_json(const nlohmann::json& j, const char* field) {
  if (!j.contains(field) || !j[field].is_array())
    throw std::invalid_argument(std::string("source spec: '") + field +
                                "' must be an array of single-character strings");
  std::string symbols;
  for (const auto& item : j[field]) {
    if (!item.is_string() || item.get<std::string>().size() != 1)
      throw std::invalid_argument(std::string("source spec: '") + field +
                                  "' entries must be single characters");
    symbols += item.get<std::string>();
  }
  return Alphabet(symbols);
}

inline nlohmann::json parse_spec_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("source spec: cannot open '" + path + "'");
  nlohmann::json j;
  try {
    in >> j;
  } catch (const nlohmann::json::exception& e) {
    throw std::invalid_argument("source spec: invalid JSON in '" + path + "': " + e.what());
  }
  return j;
}

}  // namespace detail

inline bool source_spec_is_joint(const nlohmann::json& j) { return j.contains("si_alphabet"); }

inline HiddenMarkovSource load_hmm_source(const nlohmann::json& j) {
  Alphabet ab = detail::alphabet_from_json(j, "alphabet");
  int states = j.value("states", 0);
  int initial = j.value("initial", 0);
  if (states < 1) throw std::invalid_argument("source spec: 'states' must be >= 1");
  const auto& kj = j.at("kernel");
  if (!kj.is_array() || static_cast<int>(kj.size()) != states)
    throw std::invalid_argument("source spec: kernel must have one slice per state");
  std::vector<double> kernel;
  for (int z = 0; z < states; ++z) {
    const auto& xz = kj[static_cast<std::size_t>(z)];
    if (!xz.is_array() || static_cast<int>(xz.size()) != ab.size())
      throw std::invalid_argument("source spec: kernel state slice " + std::to_string(z) +
                                  " must have one row per symbol");
    for (int x = 0; x < ab.size(); ++x) {
      const auto& row = xz[static_cast<std::size_t>(x)];
      if (!row.is_array() || static_cast<int>(row.size()) != states)
        throw std::invalid_argument("source spec: kernel state slice " + std::to_string(z) +
                                    ", symbol " + std::to_string(x) +
                                    " must list one weight per next-state");
      for (int zp = 0; zp < states; ++zp) kernel.push_back(row[static_cast<std::size_t>(zp)].get<double>());
    }
  }
  return HiddenMarkovSource(ab, states, initial, kernel);  // validates slice sums
}

inline JointHiddenMarkovSource load_joint_source(const nlohmann::json& j) {
  Alphabet ab = detail::alphabet_from_json(j, "alphabet");
  Alphabet si = detail::alphabet_from_json(j, "si_alphabet");
  int states = j.value("states", 0);
  int initial = j.value("initial", 0);
  if (states < 1) throw std::invalid_argument("source spec: 'states' must be >= 1");
  const auto& kj = j.at("kernel");
  if (!kj.is_array() || static_cast<int>(kj.size()) != states)
    throw std::invalid_argument("source spec: kernel must have one slice per state");
  std::vector<double> kernel;
  for (int z = 0; z < states; ++z) {
    const auto& xz = kj[static_cast<std::size_t>(z)];
    if (!xz.is_array() || static_cast<int>(xz.size()) != ab.size())
      throw std::invalid_argument("source spec: kernel state slice " + std::to_string(z) +
                                  " must have one row per x-symbol");
    for (int x = 0; x < ab.size(); ++x) {
      const auto& yrow = xz[static_cast<std::size_t>(x)];
      if (!yrow.is_array() || static_cast<int>(yrow.size()) != si.size())
        throw std::invalid_argument("source spec: kernel state slice " + std::to_string(z) +
                                    ", x-symbol " + std::to_string(x) +
                                    " must have one row per y-symbol");
      for (int y = 0; y < si.size(); ++y) {
        const auto& row = yrow[static_cast<std::size_t>(y)];
        if (!row.is_array() || static_cast<int>(row.size()) != states)
          throw std::invalid_argument("source spec: kernel state slice " + std::to_string(z) +
                                      ", pair (" + std::to_string(x) + "," + std::to_string(y) +
                                      ") must list one weight per next-state");
        for (int zp = 0; zp < states; ++zp)
          kernel.push_back(row[static_cast<std::size_t>(zp)].get<double>());
      }
    }
  }
  return JointHiddenMarkovSource(ab, si, states, initial, kernel);
}

inline HiddenMarkovSource load_hmm_source_file(const std::string& path) {
  return load_hmm_source(detail::parse_spec_file(path));
}

inline JointHiddenMarkovSource load_joint_source_file(const std::string& path) {
  return load_joint_source(detail::parse_spec_file(path));
}

}  // namespace urg

#endif  // URG_SOURCE_JSON_HPP
