// Copyright 2026 The Zinc HE Authors.
// SPDX-License-Identifier: Apache-2.0

#include "zinc/params.hpp"

#include <charconv>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace zinc {

namespace {

std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r\n");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r\n");
  return s.substr(first, last - first + 1);
}

template <typename T>
T parse_number(std::string_view key, std::string_view value) {
  T out{};
  const auto* end = value.data() + value.size();
  auto [ptr, ec] = std::from_chars(value.data(), end, out);
  if (ec != std::errc() || ptr != end) {
    throw std::invalid_argument("bad value for '" + std::string(key) + "': '" +
                                std::string(value) + "'");
  }
  return out;
}

double parse_double(std::string_view key, std::string_view value) {
  // std::from_chars for double is missing from older libstdc++.
  std::string copy(value);
  size_t used = 0;
  double out = 0.0;
  try {
    out = std::stod(copy, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used != copy.size() || copy.empty()) {
    throw std::invalid_argument("bad value for '" + std::string(key) + "': '" +
                                copy + "'");
  }
  return out;
}

}  // namespace

SchemeParams ParamSpec::build() const {
  return SchemeParams::create(RingParams::create(n, q), variant, t, delta_log2,
                              sigma, kappa);
}

ParamSpec preset(std::string_view name) {
  ParamSpec spec;
  if (name == "desk") return spec;
  if (name == "paper") {
    spec.n = 32768;
    spec.variant = Variant::kCkks;
    return spec;
  }
  if (name == "toy") {
    // Tiny ring for examples worked by hand; offers no security.
    spec.n = 4;
    spec.q = 257;
    spec.t = 17;
    spec.delta_log2 = 2;
    return spec;
  }
  throw std::invalid_argument("unknown preset '" + std::string(name) + "'");
}

std::map<std::string, std::string> parse_key_values(std::string_view text) {
  std::map<std::string, std::string> out;
  size_t line_no = 0;
  while (!text.empty()) {
    ++line_no;
    const auto nl = text.find('\n');
    std::string_view line = text.substr(0, nl);
    text = nl == std::string_view::npos ? std::string_view{} : text.substr(nl + 1);
    if (const auto hash = line.find('#'); hash != std::string_view::npos) {
      line = line.substr(0, hash);
    }
    line = trim(line);
    if (line.empty() || line.front() == '[') continue;
    const auto eq = line.find('=');
    if (eq == std::string_view::npos) {
      throw std::invalid_argument("line " + std::to_string(line_no) +
                                  ": expected key = value");
    }
    std::string key(trim(line.substr(0, eq)));
    std::string value(trim(line.substr(eq + 1)));
    if (value.size() >= 2 && value.front() == '"' && value.back() == '"') {
      value = value.substr(1, value.size() - 2);
    }
    out[std::move(key)] = std::move(value);
  }
  return out;
}

bool apply_param(ParamSpec& spec, std::string_view key, std::string_view value) {
  if (key == "n" || key == "N") {
    spec.n = parse_number<size_t>(key, value);
  } else if (key == "q") {
    spec.q = parse_number<uint64_t>(key, value);
  } else if (key == "t") {
    spec.t = parse_number<uint64_t>(key, value);
  } else if (key == "delta_log2") {
    spec.delta_log2 = parse_number<int>(key, value);
  } else if (key == "sigma") {
    spec.sigma = parse_double(key, value);
  } else if (key == "kappa") {
    spec.kappa = parse_number<int>(key, value);
  } else if (key == "variant") {
    spec.variant = parse_variant(value);
  } else {
    return false;
  }
  return true;
}

ParamSpec parse_param_text(std::string_view text, ParamSpec base) {
  auto entries = parse_key_values(text);
  if (auto it = entries.find("preset"); it != entries.end()) {
    base = preset(it->second);
    entries.erase(it);
  }
  for (const auto& [key, value] : entries) {
    if (!apply_param(base, key, value)) {
      throw std::invalid_argument("unknown parameter '" + key + "'");
    }
  }
  return base;
}

ParamSpec load_param_file(const std::string& path, ParamSpec base) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open parameter file " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_param_text(buf.str(), std::move(base));
}

}  // namespace zinc
