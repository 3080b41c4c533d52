// Copyright 2026 The Zinc HE Authors.
// SPDX-License-Identifier: Apache-2.0

#include <boost/tokenizer.hpp>
#include <charconv>
#include <cmath>
#include <fstream>
#include <optional>
#include <string>
#include <vector>

#include "zinc/bench.hpp"

namespace zinc::bench {

namespace {

using Tokenizer = boost::tokenizer<boost::escaped_list_separator<char>>;

std::vector<std::string> split_row(const std::string& line) {
  std::vector<std::string> cells;
  Tokenizer tok(line);
  for (const auto& cell : tok) cells.push_back(cell);
  return cells;
}

std::string trim(const std::string& s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

std::optional<int64_t> parse_int(const std::string& s) {
  int64_t v = 0;
  const char* begin = s.data();
  if (!s.empty() && s.front() == '+') ++begin;
  const char* end = s.data() + s.size();
  auto [ptr, ec] = std::from_chars(begin, end, v);
  if (ec != std::errc() || ptr != end || begin == end) return std::nullopt;
  return v;
}

std::optional<double> parse_real(const std::string& s) {
  if (s.empty()) return std::nullopt;
  size_t used = 0;
  try {
    const double v = std::stod(s, &used);
    if (used != s.size() || !std::isfinite(v)) return std::nullopt;
    return v;
  } catch (const std::exception&) {
    return std::nullopt;
  }
}

}  // namespace

MessageSet parse_csv_column(std::istream& in, const std::string& column) {
  const std::optional<int64_t> index_opt = parse_int(column);
  std::optional<size_t> index;
  if (index_opt && *index_opt >= 0) index = static_cast<size_t>(*index_opt);

  std::vector<std::pair<size_t, std::string>> cells;  // (row, text)
  std::string line;
  size_t row = 0;
  bool first = true;
  while (std::getline(in, line)) {
    ++row;
    if (trim(line).empty()) continue;
    std::vector<std::string> fields;
    try {
      fields = split_row(line);
    } catch (const boost::escaped_list_error& e) {
      throw ParseError("row " + std::to_string(row) + ": " + e.what(), row);
    }
    if (first) {
      first = false;
      if (!index) {
        for (size_t i = 0; i < fields.size(); ++i) {
          if (trim(fields[i]) == column) index = i;
        }
        if (!index) throw std::invalid_argument("no column named '" + column + "'");
        continue;
      }
      // Index given: a non-numeric first cell is a header.
      if (*index < fields.size() && !parse_real(trim(fields[*index]))) continue;
    }
    if (*index >= fields.size()) {
      throw ParseError("row " + std::to_string(row) + " has no column " +
                           std::to_string(*index),
                       row);
    }
    cells.emplace_back(row, trim(fields[*index]));
  }

  bool integral = true;
  for (const auto& [r, text] : cells) {
    if (!parse_real(text)) {
      throw ParseError("row " + std::to_string(r) + ": non-numeric cell '" + text +
                           "'",
                       r);
    }
    if (!parse_int(text)) integral = false;
  }
  if (integral) {
    std::vector<int64_t> ints;
    ints.reserve(cells.size());
    for (const auto& [r, text] : cells) ints.push_back(*parse_int(text));
    return MessageSet::from_ints(std::move(ints));
  }
  std::vector<double> reals;
  reals.reserve(cells.size());
  for (const auto& [r, text] : cells) reals.push_back(*parse_real(text));
  return MessageSet::from_reals(std::move(reals));
}

MessageSet load_csv_column(const std::string& path, const std::string& column) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open dataset " + path);
  return parse_csv_column(in, column);
}

}  // namespace zinc::bench
