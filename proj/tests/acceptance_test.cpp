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

// Acceptance gate: one PASS/FAIL line per criterion, each with a pinned
// runtime budget. Exits nonzero if any criterion fails.

#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <random>
#include <string>
#include <vector>

#include "qcluster/qcluster.hpp"
#include "support.hpp"

namespace qcluster {
namespace {

using testing::poly;
using testing::rank2_seed;
using testing::rank3_seed;
using testing::xs;

class Checks {
 public:
  void expect(bool ok, const std::string& what) {
    ++total_;
    if (!ok) failures_.push_back(what);
  }
  void certificate(const VerificationCertificate& c) {
    expect(c.pass, render_text(c));
  }
  template <class F>
  void no_throw(F&& f, const std::string& what) {
    try {
      f();
    } catch (const std::exception& e) {
      expect(false, what + ": " + e.what());
    }
  }
  std::size_t total() const { return total_; }
  const std::vector<std::string>& failures() const { return failures_; }

 private:
  std::size_t total_ = 0;
  std::vector<std::string> failures_;
};

QLaurent qh(std::int64_t half) { return QLaurent::monomial(half); }

TorusElem alternating_sum(RelationEngine& e, std::size_t a, std::size_t b, std::uint32_t l,
                          std::int64_t top, std::int64_t base, std::int64_t shift) {
  TorusElem acc(e.form());
  for (std::int64_t r = 0; r <= top; ++r) {
    QLaurent c = q_binom(top, r, base) * qh(base * (r * (r - 1) - 2 * r * shift));
    if (r % 2) c = -c;
    acc += (e.y_pow(a, top - r) * e.y_pow(b, l) * e.y_pow(a, r)).scaled(c);
  }
  return acc;
}

void rank2_golden(Checks& c) {
  const auto s = rank2_seed();
  const auto& f = s.form();
  c.expect(s.lambda() == IntMatrix{{0, 0, -2, 0}, {0, 0, 0, -1}, {2, 0, 0, -2}, {0, 1, 2, 0}}, "Lambda");
  c.expect(s.exchange() == IntMatrix{{0, 1}, {-2, 0}, {1, 0}, {0, 1}}, "B~");
  const auto m1 = mutate(s, 0);
  c.expect(m1.lambda() == IntMatrix{{0, 0, 2, -2}, {0, 0, 0, -1}, {-2, 0, 0, -2}, {2, 1, 2, 0}},
           "Lambda_1");
  c.expect(m1.exchange() == IntMatrix{{0, -1}, {2, 0}, {-1, 1}, {0, 1}}, "B~_1");
  const auto m2 = mutate(s, 1);
  c.expect(m2.lambda() == IntMatrix{{0, 0, -2, 0}, {0, 0, 0, 1}, {2, 0, 0, -2}, {0, -1, 2, 0}},
           "Lambda_2");
  c.expect(m2.exchange() == IntMatrix{{0, -1}, {2, 0}, {1, 0}, {0, -1}}, "B~_2");
  c.expect(xs(f, {{1, 1}}) * mutated_variable(s, 0) ==
               xs(f, {{3, 1}}).scaled(qh(-2)) + xs(f, {{2, 2}}),
           "x1 y1");
  c.expect(xs(f, {{2, 1}}) * mutated_variable(s, 1) ==
               xs(f, {{1, 1}, {4, 1}}).scaled(qh(-1)) + TorusElem::one(f),
           "x2 y2");
}

void rank2_relations(Checks& c) {
  const auto s = rank2_seed();
  const auto& f = s.form();
  RelationEngine e(s);
  c.expect(e.y(0) * e.y(1) == xs(f, {{2, -1}, {3, 1}, {4, 1}}).scaled(qh(1)) +
                                  xs(f, {{1, -1}, {2, -1}, {3, 1}}).scaled(qh(-2)) +
                                  xs(f, {{2, 1}, {4, 1}}).scaled(qh(-1)) + xs(f, {{1, -1}, {2, 1}}),
           "y1 y2 expansion");
  const TorusElem witness = xs(f, {{2, 1}, {4, 1}}).scaled(poly({{3, 1}, {-1, -1}}));
  c.expect(e.y(1) * e.y(0) - e.y(0) * e.y(1) == witness, "commutator");
  c.expect(e.commutator_witness(1, 0) == witness, "engine witness");
  c.expect(alternating_sum(e, 1, 0, 1, 3, 1, 0).is_zero(), "serre base q");
  c.expect(alternating_sum(e, 0, 1, 1, 2, 2, 1).is_zero(), "serre base q^2");
  c.expect(alternating_sum(e, 0, 1, 1, 3, 2, 2).is_zero(), "higher base q^2");
  c.expect(alternating_sum(e, 1, 0, 2, 5, 1, 0).is_zero(), "higher base q");
  c.certificate(e.serre_verify(1, 0));
  c.certificate(e.serre_verify(0, 1));
  c.certificate(e.higher_verify(0, 1, 1, 2));
  c.certificate(e.higher_verify(1, 0, 2, 4));
}

void rank3_golden(Checks& c) {
  const auto s = rank3_seed();
  const auto& f = s.form();
  c.expect(s.lambda() == IntMatrix{{0, 0, 0, -1, 0, 0}, {0, 0, 0, 0, -1, 0}, {0, 0, 0, 0, 0, -1},
                                   {1, 0, 0, 0, -2, 2}, {0, 1, 0, 2, 0, -2}, {0, 0, 1, -2, 2, 0}},
           "Lambda");
  c.expect(s.exchange() ==
               IntMatrix{{0, 2, -2}, {-2, 0, 2}, {2, -2, 0}, {1, 0, 0}, {0, 1, 0}, {0, 0, 1}},
           "B~");
  const QLaurent half = qh(-1);
  c.expect(xs(f, {{1, 1}}) * mutated_variable(s, 0) ==
               xs(f, {{3, 2}, {4, 1}}).scaled(half) + xs(f, {{2, 2}}),
           "x1 y1");
  c.expect(xs(f, {{2, 1}}) * mutated_variable(s, 1) ==
               xs(f, {{1, 2}, {5, 1}}).scaled(half) + xs(f, {{3, 2}}),
           "x2 y2");
  c.expect(xs(f, {{3, 1}}) * mutated_variable(s, 2) ==
               xs(f, {{2, 2}, {6, 1}}).scaled(half) + xs(f, {{1, 2}}),
           "x3 y3");
  RelationEngine e(s);
  c.expect(e.y(0) * e.y(2) - e.y(2) * e.y(0) ==
               xs(f, {{1, 1}, {3, 1}, {4, 1}}).scaled(poly({{3, 1}, {-1, -1}})),
           "y1 y3 commutator");
  const int claims[6][3] = {{1, 0, 0}, {0, 1, 2}, {0, 2, 0}, {2, 0, 2}, {2, 1, 0}, {1, 2, 2}};
  for (const auto& cl : claims) {
    c.expect(alternating_sum(e, cl[0], cl[1], 1, 3, 1, cl[2]).is_zero(),
             "serre sum " + std::to_string(cl[0] + 1) + "," + std::to_string(cl[1] + 1));
    c.certificate(e.serre_verify(cl[0], cl[1]));
  }
  c.expect(alternating_sum(e, 0, 2, 2, 5, 1, 0).is_zero(), "higher y1^5 y3^2");
  c.certificate(e.higher_verify(0, 2, 2, 4));
}

void identity_exhaustion(Checks& c) {
  for (const auto& info : identity_families()) {
    const auto reports = sweep_identity(info.family);
    c.expect(!reports.empty(), std::string(info.tag) + ": empty sweep");
    for (const auto& r : reports) c.expect(r.passed(), r.line());
    const auto params = sweep_parameters(info.family).back();
    c.expect(!check_identity(info.family, params, {.perturb = true}).passed(),
             std::string(info.tag) + ": perturbed instance passed");
  }
}

void property_sweep(Checks& c) {
  std::mt19937_64 rng(20260101);
  for (int trial = 0; trial < 60; ++trial) {
    const std::size_t n = trial % 2 ? 3 : 2;
    const auto ex = testing::random_exchange(rng, n, 3, 3);
    const std::string tag = "seed " + std::to_string(trial) + " B=" + ex.b.to_string();
    c.no_throw(
        [&] {
          const auto s = principal_seed(ex.b, ex.d);
          for (std::size_t k = 0; k < n; ++k) {
            const auto m = mutate(s, k);
            c.expect(mutate(m, k) == s, tag + ": involutivity");
            c.expect(validate_compatibility(m.lambda(), m.exchange(), s.d()).pass,
                     tag + ": compatibility after mutation");
          }
          RelationEngine e(s);
          for (const auto& cert : e.quantum_group_suite()) c.certificate(cert);
          for (std::size_t i = 0; i < n; ++i) {
            for (std::size_t j = 0; j < n; ++j) {
              if (i == j) continue;
              const std::int64_t ab = std::abs(s.b(i, j));
              if (ab == 0) {
                c.certificate(e.higher_verify(i, j, 1, 0));
                continue;
              }
              for (std::int64_t l = 1; l <= ab; ++l) c.certificate(e.higher_verify(i, j, l, l * ab));
            }
          }
        },
        tag);
  }
}

void oracle_equivalence(Checks& c) {
  std::vector<QuantumSeed> seeds{rank2_seed(), rank3_seed()};
  std::mt19937_64 rng(20260102);
  for (int k = 0; k < 10; ++k) seeds.push_back(testing::random_principal_seed(rng, 2 + k % 2));
  for (const auto& s : seeds) {
    RelationEngine e(s);
    for (std::size_t i = 0; i < s.n(); ++i) {
      for (std::uint32_t t = 1; t <= 4; ++t) {
        c.certificate(e.power_product_check(i, t, Side::Left));
        c.certificate(e.power_product_check(i, t, Side::Right));
      }
    }
  }
}

struct Criterion {
  int id;
  std::string name;
  double limit_seconds;
  std::function<void(Checks&)> body;
};

}  // namespace
}  // namespace qcluster

int main() {
  using namespace qcluster;
  const std::vector<Criterion> criteria{
      {1, "rank-2 example golden suite", 1.0, rank2_golden},
      {2, "rank-2 example relations", 1.0, rank2_relations},
      {3, "rank-3 example golden suite", 2.0, rank3_golden},
      {4, "q-identity exhaustion", 10.0, identity_exhaustion},
      {5, "random seed property sweep", 60.0, property_sweep},
      {6, "power-product oracle equivalence", 60.0, oracle_equivalence},
  };
  int failed = 0;
  for (const auto& cr : criteria) {
    Checks checks;
    const auto start = std::chrono::steady_clock::now();
    try {
      cr.body(checks);
    } catch (const std::exception& e) {
      checks.expect(false, std::string("uncaught: ") + e.what());
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    const bool in_time = secs < cr.limit_seconds;
    const bool pass = checks.failures().empty() && in_time;
    if (!pass) ++failed;
    char timing[64];
    std::snprintf(timing, sizeof timing, "%.3f s, limit %.0f s", secs, cr.limit_seconds);
    std::cout << "criterion " << cr.id << ": " << (pass ? "PASS" : "FAIL") << "  " << cr.name << " ("
              << checks.total() << " checks, " << timing << ")\n";
    for (const auto& f : checks.failures()) std::cout << "    failed: " << f << "\n";
    if (!in_time) std::cout << "    over time budget\n";
  }
  std::cout << (failed == 0 ? "acceptance: PASS" : "acceptance: FAIL") << "\n";
  return failed == 0 ? 0 : 1;
}
