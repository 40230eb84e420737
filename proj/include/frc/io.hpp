#pragma once

// Readers and writers for the two incidence-structure encodings.
//
// Text matrix:   first line "n theta", then n rows of theta characters from
//                {0,1}; a single space between characters is allowed.
// Structured:    {"theta": int, "blocks": [[int, ...], ...]} as JSON, with an
//                optional "t" field when the structure is a design.

#include <cctype>
#include <filesystem>
#include <fstream>
#include <optional>
#include <sstream>
#include <string>
#include <string_view>

#include "frc/incidence.hpp"
#include "json.hpp"

namespace frc::io {

using nlohmann::json;

struct LoadedStructure {
  IncidenceStructure structure;
  std::optional<std::size_t> t;  // present only in the structured encoding
};

namespace detail {

inline std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

inline std::vector<std::string_view> split_lines(std::string_view text) {
  std::vector<std::string_view> lines;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(start, end - start);
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    lines.push_back(line);
    start = end + 1;
  }
  return lines;
}

inline std::size_t parse_count(std::string_view tok, const char* what) {
  ::frc::detail::require(!tok.empty(), std::string("missing ") + what);
  std::size_t v = 0;
  for (char c : tok) {
    ::frc::detail::require(std::isdigit(static_cast<unsigned char>(c)),
                           std::string("malformed ") + what + ": '" + std::string(tok) + "'");
    v = v * 10 + static_cast<std::size_t>(c - '0');
    ::frc::detail::require(v <= 1'000'000, std::string(what) + " too large");
  }
  return v;
}

}  // namespace detail

inline IncidenceStructure parse_matrix_text(std::string_view text) {
  using ::frc::detail::require;
  const auto lines = detail::split_lines(text);
  std::size_t li = 0;
  while (li < lines.size() && detail::trim(lines[li]).empty()) ++li;
  require(li < lines.size(), "empty matrix input");

  std::string_view header = detail::trim(lines[li++]);
  const std::size_t sp = header.find_first_of(" \t");
  require(sp != std::string_view::npos, "matrix header must be 'n theta'");
  const std::size_t n = detail::parse_count(header.substr(0, sp), "row count");
  const std::size_t theta = detail::parse_count(detail::trim(header.substr(sp)), "column count");
  require(n >= 1 && theta >= 1, "matrix header must have n >= 1 and theta >= 1");

  IncidenceMatrix rows;
  rows.reserve(n);
  for (std::size_t r = 0; r < n; ++r, ++li) {
    require(li < lines.size(), "matrix has " + std::to_string(r) + " rows, header says " + std::to_string(n));
    std::string_view line = lines[li];
    while (!line.empty() && (line.back() == ' ' || line.back() == '\t')) line.remove_suffix(1);
    std::vector<std::uint8_t> row;
    bool prev_space = true;  // no leading space
    for (char c : line) {
      if (c == ' ') {
        require(!prev_space, "matrix row " + std::to_string(r) + ": unexpected space");
        prev_space = true;
        continue;
      }
      require(c == '0' || c == '1', "matrix row " + std::to_string(r) + ": invalid character '" +
                                        std::string(1, c) + "'");
      row.push_back(static_cast<std::uint8_t>(c - '0'));
      prev_space = false;
    }
    require(row.size() == theta, "matrix row " + std::to_string(r) + " has " + std::to_string(row.size()) +
                                     " entries, header says " + std::to_string(theta));
    rows.push_back(std::move(row));
  }
  for (; li < lines.size(); ++li)
    require(detail::trim(lines[li]).empty(), "trailing garbage after matrix rows");
  return from_matrix(rows);
}

inline std::string format_matrix_text(const IncidenceStructure& s) {
  std::string out = std::to_string(s.block_count()) + " " + std::to_string(s.theta()) + "\n";
  for (const auto& row : s.matrix()) {
    for (auto v : row) out.push_back(v ? '1' : '0');
    out.push_back('\n');
  }
  return out;
}

inline json to_json(const IncidenceStructure& s) {
  json blocks = json::array();
  for (const auto& b : s.blocks()) blocks.push_back(b);
  return json{{"theta", s.theta()}, {"blocks", std::move(blocks)}};
}

inline LoadedStructure structure_from_json(const json& j) {
  using ::frc::detail::require;
  require(j.is_object(), "structured input must be an object");
  require(j.contains("theta") && j["theta"].is_number_unsigned(), "\"theta\" must be a non-negative integer");
  require(j.contains("blocks") && j["blocks"].is_array(), "\"blocks\" must be an array");
  for (const auto& [key, _] : j.items())
    require(key == "theta" || key == "blocks" || key == "t", "unknown field \"" + key + "\"");
  std::vector<Block> blocks;
  for (const auto& b : j["blocks"]) {
    require(b.is_array(), "each block must be an array of point indices");
    Block blk;
    for (const auto& p : b) {
      require(p.is_number_unsigned(), "point indices must be non-negative integers");
      blk.push_back(p.get<std::size_t>());
    }
    blocks.push_back(std::move(blk));
  }
  LoadedStructure out{from_blocks(j["theta"].get<std::size_t>(), std::move(blocks)), std::nullopt};
  if (j.contains("t")) {
    require(j["t"].is_number_unsigned(), "\"t\" must be a non-negative integer");
    out.t = j["t"].get<std::size_t>();
  }
  return out;
}

inline LoadedStructure parse_structure_json(std::string_view text) {
  json j;
  try {
    j = json::parse(text.begin(), text.end());
  } catch (const json::parse_error& e) {
    throw InvalidInput(std::string("malformed structured input: ") + e.what());
  }
  return structure_from_json(j);
}

// Detects the encoding from the first non-space character.
inline LoadedStructure parse_structure(std::string_view text) {
  const std::string_view t = detail::trim(text);
  if (!t.empty() && t.front() == '{') return parse_structure_json(text);
  return {parse_matrix_text(text), std::nullopt};
}

inline LoadedStructure read_structure_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InvalidInput("cannot open " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_structure(buf.str());
}

}  // namespace frc::io
