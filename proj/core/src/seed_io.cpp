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

#include "qcluster/seed_io.hpp"

#include <fstream>
#include <sstream>

#include "json.hpp"

#include "qcluster/error.hpp"

namespace qcluster {

namespace {

using nlohmann::json;

const json& field(const json& doc, const char* name) {
  auto it = doc.find(name);
  if (it == doc.end()) throw ParseError(std::string("seed: missing field '") + name + "'");
  return *it;
}

std::int64_t as_int(const json& v, const std::string& where) {
  if (!v.is_number_integer()) throw ParseError("seed: " + where + " must be an integer");
  return v.get<std::int64_t>();
}

IntMatrix as_matrix(const json& v, const char* name, std::size_t rows, std::size_t cols) {
  if (!v.is_array()) throw ParseError(std::string("seed: '") + name + "' must be an array of rows");
  if (v.size() != rows) {
    throw DimensionError(std::string("seed: '") + name + "' has " + std::to_string(v.size()) +
                         " rows, expected " + std::to_string(rows));
  }
  IntMatrix out(rows, cols);
  for (std::size_t i = 0; i < rows; ++i) {
    const json& row = v[i];
    if (!row.is_array()) throw ParseError(std::string("seed: '") + name + "' rows must be arrays");
    if (row.size() != cols) {
      throw DimensionError(std::string("seed: '") + name + "' row " + std::to_string(i + 1) +
                           " has " + std::to_string(row.size()) + " entries, expected " +
                           std::to_string(cols));
    }
    for (std::size_t j = 0; j < cols; ++j) {
      out(i, j) = as_int(row[j], std::string("'") + name + "' entries");
    }
  }
  return out;
}

std::size_t as_size(const json& v, const char* name) {
  const auto x = as_int(v, std::string("'") + name + "'");
  if (x < 1) throw InvalidSeed(std::string("seed: '") + name + "' must be positive");
  return static_cast<std::size_t>(x);
}

void write_matrix(std::ostream& os, const IntMatrix& a) {
  os << "[\n";
  for (std::size_t i = 0; i < a.rows(); ++i) {
    os << "    [";
    for (std::size_t j = 0; j < a.cols(); ++j) os << (j ? ", " : "") << a(i, j);
    os << (i + 1 < a.rows() ? "],\n" : "]\n");
  }
  os << "  ]";
}

}  // namespace

QuantumSeed parse_seed(std::string_view json_text) {
  json doc;
  try {
    doc = json::parse(json_text);
  } catch (const json::parse_error& e) {
    throw ParseError(std::string("seed: malformed JSON: ") + e.what());
  }
  if (!doc.is_object()) throw ParseError("seed: document must be a JSON object");
  const std::size_t n = as_size(field(doc, "n"), "n");
  const std::size_t m = as_size(field(doc, "m"), "m");
  if (n > m) throw InvalidSeed("seed: n must not exceed m");
  IntMatrix lambda = as_matrix(field(doc, "lambda"), "lambda", m, m);
  IntMatrix btilde = as_matrix(field(doc, "btilde"), "btilde", m, n);
  const json& dj = field(doc, "d");
  if (!dj.is_array()) throw ParseError("seed: 'd' must be an array");
  if (dj.size() != n) throw DimensionError("seed: 'd' must have length n = " + std::to_string(n));
  std::vector<std::int64_t> d;
  for (const auto& v : dj) d.push_back(as_int(v, "'d' entries"));
  std::vector<std::string> labels;
  if (auto it = doc.find("labels"); it != doc.end()) {
    if (!it->is_array()) throw ParseError("seed: 'labels' must be an array of strings");
    for (const auto& v : *it) {
      if (!v.is_string()) throw ParseError("seed: 'labels' must be an array of strings");
      labels.push_back(v.get<std::string>());
    }
    if (labels.size() != m) throw DimensionError("seed: 'labels' must have length m");
  }
  std::vector<std::size_t> order;
  if (auto it = doc.find("order"); it != doc.end()) {
    if (!it->is_array()) throw ParseError("seed: 'order' must be an array");
    for (const auto& v : *it) {
      const auto k = as_int(v, "'order' entries");
      if (k < 1 || static_cast<std::size_t>(k) > n) {
        throw InvalidSeed("seed: 'order' must be a permutation of 1.." + std::to_string(n));
      }
      order.push_back(static_cast<std::size_t>(k - 1));
    }
    if (order.empty()) throw InvalidSeed("seed: 'order' must be a permutation of 1.." + std::to_string(n));
  }
  return QuantumSeed::create(std::move(lambda), std::move(btilde), std::move(d), std::move(labels),
                             std::move(order));
}

QuantumSeed load_seed(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("seed: cannot open " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_seed(buf.str());
}

std::string seed_to_json(const QuantumSeed& seed) {
  std::ostringstream os;
  os << "{\n  \"n\": " << seed.n() << ",\n  \"m\": " << seed.m() << ",\n  \"lambda\": ";
  write_matrix(os, seed.lambda());
  os << ",\n  \"btilde\": ";
  write_matrix(os, seed.exchange());
  os << ",\n  \"d\": [";
  for (std::size_t i = 0; i < seed.d().size(); ++i) os << (i ? ", " : "") << seed.d()[i];
  os << "],\n  \"labels\": [";
  for (std::size_t i = 0; i < seed.labels().size(); ++i) {
    os << (i ? ", " : "") << json(seed.labels()[i]).dump();
  }
  os << "],\n  \"order\": [";
  for (std::size_t i = 0; i < seed.order().size(); ++i) os << (i ? ", " : "") << seed.order()[i] + 1;
  os << "]\n}\n";
  return os.str();
}

void save_seed(const std::filesystem::path& path, const QuantumSeed& seed) {
  std::ofstream out(path);
  if (!out) throw ParseError("seed: cannot write " + path.string());
  out << seed_to_json(seed);
}

}  // namespace qcluster
