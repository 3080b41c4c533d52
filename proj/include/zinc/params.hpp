// Copyright 2026 The Zinc HE Authors.
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <string_view>

#include "zinc/scheme.hpp"

namespace zinc {

/// 59-bit NTT-friendly prime, q = 1 (mod 2^17). Serves every N up to 32768.
inline constexpr uint64_t kDefaultModulus = 576460752300015617ULL;

/// Plain description of a parameter set, as read from a config file.
struct ParamSpec {
  size_t n = 4096;
  uint64_t q = kDefaultModulus;
  uint64_t t = 65537;
  int delta_log2 = 40;
  double sigma = kDefaultSigma;
  int kappa = 128;
  Variant variant = Variant::kBfv;

  SchemeParams build() const;
  friend bool operator==(const ParamSpec&, const ParamSpec&) = default;
};

/// "desk" (N = 4096, BFV) or "paper" (N = 32768, CKKS-lite).
ParamSpec preset(std::string_view name);

/// Parses `key = value` lines; '#' starts a comment. Keys are
/// n, q, t, delta_log2, sigma, kappa, variant, and optionally preset (applied
/// first, then the other keys override it). Unknown keys are an error.
ParamSpec parse_param_text(std::string_view text, ParamSpec base = {});
ParamSpec load_param_file(const std::string& path, ParamSpec base = {});

/// Applies one key/value pair; returns false for an unknown key.
bool apply_param(ParamSpec& spec, std::string_view key, std::string_view value);

/// Splits `key = value` lines into a map (trimmed, comments stripped).
std::map<std::string, std::string> parse_key_values(std::string_view text);

}  // namespace zinc
