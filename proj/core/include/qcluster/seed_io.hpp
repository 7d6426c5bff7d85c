// Copyright 2026 The qcluster Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <filesystem>
#include <string>
#include <string_view>

#include "qcluster/seed.hpp"

namespace qcluster {

/// Seed documents are JSON objects with integer fields `n`, `m`, row-major
/// matrices `lambda` (m x m) and `btilde` (m x n), vector `d` (length n),
/// and optional `labels` (m strings) and `order` (1-based permutation of 1..n).
/// Malformed JSON or wrong field types throw ParseError; the first violated
/// seed invariant throws InvalidSeed or DimensionError.
QuantumSeed parse_seed(std::string_view json_text);
QuantumSeed load_seed(const std::filesystem::path& path);

/// Deterministic rendering that parse_seed accepts, one matrix row per line.
std::string seed_to_json(const QuantumSeed& seed);
void save_seed(const std::filesystem::path& path, const QuantumSeed& seed);

}  // namespace qcluster
