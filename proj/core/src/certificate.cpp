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

#include "qcluster/certificate.hpp"

#include "json.hpp"

namespace qcluster {

std::string render_text(const VerificationCertificate& cert) {
  std::string out = cert.check + "(";
  for (std::size_t k = 0; k < cert.params.size(); ++k) {
    if (k > 0) out += ", ";
    out += cert.params[k].first + "=" + std::to_string(cert.params[k].second);
  }
  out += "): ";
  out += cert.pass ? "PASS" : "FAIL";
  if (cert.exploratory) out += " (exploratory)";
  out += "\n  expanded terms: " + std::to_string(cert.expanded_terms) + "\n";
  if (!cert.pass) {
    out += "  remainder terms: " + std::to_string(cert.remainder_terms) + "\n";
    out += "  remainder: " + cert.remainder + "\n";
  }
  if (!cert.note.empty()) out += "  note: " + cert.note + "\n";
  return out;
}

std::string render_json_line(const VerificationCertificate& cert) {
  nlohmann::ordered_json params = nlohmann::ordered_json::object();
  for (const auto& [name, value] : cert.params) params[name] = value;
  nlohmann::ordered_json j;
  j["check"] = cert.check;
  j["params"] = params;
  j["verdict"] = cert.pass ? "PASS" : "FAIL";
  j["exploratory"] = cert.exploratory;
  j["expanded_terms"] = cert.expanded_terms;
  j["remainder_terms"] = cert.remainder_terms;
  j["remainder"] = cert.remainder;
  if (!cert.note.empty()) j["note"] = cert.note;
  return j.dump();
}

}  // namespace qcluster
