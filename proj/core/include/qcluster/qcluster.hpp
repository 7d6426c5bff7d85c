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

#include "qcluster/certificate.hpp"
#include "qcluster/error.hpp"
#include "qcluster/identities.hpp"
#include "qcluster/int_matrix.hpp"
#include "qcluster/qarith.hpp"
#include "qcluster/qlaurent.hpp"
#include "qcluster/relations.hpp"
#include "qcluster/seed.hpp"
#include "qcluster/seed_io.hpp"
#include "qcluster/torus.hpp"
