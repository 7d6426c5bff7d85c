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

#include <string>

#include "qcluster/relations.hpp"

namespace qcluster {

/// Header line `check(k=v, ...): PASS|FAIL`, followed by indented detail
/// lines; failures include the canonical remainder. Timing is left out so
/// the text is deterministic.
std::string render_text(const VerificationCertificate& cert);

/// One JSON object on a single line, without a trailing newline.
std::string render_json_line(const VerificationCertificate& cert);

}  // namespace qcluster
