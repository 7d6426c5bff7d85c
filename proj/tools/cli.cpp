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

#include "cli.hpp"

#include <algorithm>
#include <optional>
#include <ostream>

#include "CLI11.hpp"
#include "json.hpp"
#include "qcluster/qcluster.hpp"

namespace qcluster::cli {

namespace {

using Json = nlohmann::ordered_json;

enum class Format { Text, Json };

struct Request {
  std::string seed;
  std::optional<std::int64_t> k, i, j, l, m, t;
  std::string variant = "L32";
  std::string family;
  Format format = Format::Text;
  bool exploratory = false;
  bool opposite = false;
  bool verbose = false;
};

class Reporter {
 public:
  Reporter(std::ostream& out, Format format) : out_(out), format_(format) {}

  void certificate(const VerificationCertificate& cert) {
    ++total_;
    if (!cert.pass) ++failed_;
    if (format_ == Format::Json) {
      out_ << render_json_line(cert) << "\n";
    } else {
      out_ << render_text(cert);
    }
  }

  void summary(const std::string& what) {
    if (format_ == Format::Json) {
      Json j;
      j["summary"] = what;
      j["checks"] = total_;
      j["failed"] = failed_;
      j["verdict"] = failed_ == 0 ? "PASS" : "FAIL";
      out_ << j.dump() << "\n";
    } else {
      out_ << what << ": " << total_ << " checks, " << failed_ << " failed: "
           << (failed_ == 0 ? "PASS" : "FAIL") << "\n";
    }
  }

  int status() const { return failed_ == 0 ? kOk : kVerificationFailed; }

 private:
  std::ostream& out_;
  Format format_;
  std::size_t total_ = 0;
  std::size_t failed_ = 0;
};

std::size_t index_arg(const std::optional<std::int64_t>& v, const char* flag, std::size_t n) {
  if (!v) throw RangeError(std::string("missing required option --") + flag);
  if (*v < 1 || static_cast<std::size_t>(*v) > n) {
    throw RangeError(std::string("--") + flag + " must lie in 1.." + std::to_string(n) + ", got " +
                     std::to_string(*v));
  }
  return static_cast<std::size_t>(*v - 1);
}

std::string matrix_rows(const IntMatrix& a) {
  std::string out;
  for (std::size_t r = 0; r < a.rows(); ++r) {
    out += "  [";
    for (std::size_t c = 0; c < a.cols(); ++c) {
      if (c > 0) out += ", ";
      out += std::to_string(a(r, c));
    }
    out += "]\n";
  }
  return out;
}

int cmd_validate(const Request& req, std::ostream& out) {
  const QuantumSeed seed = load_seed(req.seed);
  const auto edges = quiver_edges(seed);
  if (req.format == Format::Json) {
    Json j;
    j["check"] = "validate";
    j["n"] = seed.n();
    j["m"] = seed.m();
    j["principal"] = seed.is_principal();
    j["d"] = seed.d();
    Json q = Json::array();
    for (auto [a, b] : edges) q.push_back({a + 1, b + 1});
    j["quiver"] = q;
    j["verdict"] = "PASS";
    out << j.dump() << "\n";
    return kOk;
  }
  out << "n = " << seed.n() << ", m = " << seed.m()
      << ", principal: " << (seed.is_principal() ? "yes" : "no") << "\n";
  out << "D = diag(";
  for (std::size_t i = 0; i < seed.n(); ++i) out << (i ? ", " : "") << seed.d()[i];
  out << ")\nquiver:";
  if (edges.empty()) out << " (no edges)";
  for (auto [a, b] : edges) out << " " << a + 1 << "->" << b + 1;
  out << "\ncompatibility: PASS\n";
  return kOk;
}

int cmd_mutate(const Request& req, std::ostream& out) {
  const QuantumSeed seed = load_seed(req.seed);
  const std::size_t k = index_arg(req.k, "k", seed.n());
  const QuantumSeed mutated = mutate(seed, k);
  if (req.format == Format::Json) {
    out << seed_to_json(mutated);
    return kOk;
  }
  out << "mutation in direction " << k + 1 << "\n";
  out << "Lambda' =\n" << matrix_rows(mutated.lambda());
  out << "B' =\n" << matrix_rows(mutated.exchange());
  out << "x'_" << k + 1 << " = " << mutated_variable(seed, k).to_string() << "\n";
  return kOk;
}

int cmd_vars(const Request& req, std::ostream& out) {
  const QuantumSeed seed = load_seed(req.seed);
  std::vector<std::size_t> ks;
  if (req.k) {
    ks.push_back(index_arg(req.k, "k", seed.n()));
  } else {
    for (std::size_t k = 0; k < seed.n(); ++k) ks.push_back(k);
  }
  for (auto k : ks) {
    const std::string y = mutated_variable(seed, k).to_string();
    if (req.format == Format::Json) {
      Json j;
      j["k"] = k + 1;
      j["y"] = y;
      out << j.dump() << "\n";
    } else {
      out << "y" << k + 1 << " = " << y << "\n";
    }
  }
  return kOk;
}

int cmd_verify_serre(const Request& req, std::ostream& out) {
  RelationEngine engine(load_seed(req.seed));
  Reporter rep(out, req.format);
  if (req.i || req.j) {
    const std::size_t i = index_arg(req.i, "i", engine.n());
    const std::size_t j = index_arg(req.j, "j", engine.n());
    rep.certificate(req.opposite ? engine.serre_verify_opposite(i, j) : engine.serre_verify(i, j));
  } else {
    for (const auto& c : engine.quantum_group_suite()) rep.certificate(c);
    rep.summary("verify-serre");
  }
  return rep.status();
}

int cmd_verify_higher(const Request& req, std::ostream& out) {
  RelationEngine engine(load_seed(req.seed));
  const std::size_t i = index_arg(req.i, "i", engine.n());
  const std::size_t j = index_arg(req.j, "j", engine.n());
  Reporter rep(out, req.format);
  rep.certificate(engine.higher_verify(i, j, *req.l, *req.m, req.exploratory));
  return rep.status();
}

int cmd_verify_lemmas(const Request& req, std::ostream& out) {
  RelationEngine engine(load_seed(req.seed));
  const std::size_t i = index_arg(req.i, "i", engine.n());
  const std::size_t j = index_arg(req.j, "j", engine.n());
  Reporter rep(out, req.format);
  if (req.variant == "L32") {
    rep.certificate(engine.lemma_sum_check(i, j, LemmaVariant::L32));
  } else {
    if (!req.m) throw RangeError("variant L41 requires --m");
    rep.certificate(engine.lemma_sum_check(i, j, LemmaVariant::L41, *req.m, req.t.value_or(0)));
  }
  return rep.status();
}

int cmd_identities(const Request& req, std::ostream& out) {
  std::vector<IdentityFamily> families;
  if (!req.family.empty()) {
    const auto f = family_from_tag(req.family);
    if (!f) throw RangeError("unknown identity family '" + req.family + "'");
    families.push_back(*f);
  } else {
    for (const auto& info : identity_families()) families.push_back(info.family);
  }
  std::size_t failed = 0;
  for (auto family : families) {
    const auto reports = sweep_identity(family);
    std::size_t family_failed = 0;
    for (const auto& r : reports) {
      if (!r.passed()) ++family_failed;
      if (req.format == Format::Json) {
        Json j;
        j["family"] = family_info(family).tag;
        j["params"] = r.params;
        j["verdict"] = r.passed() ? "PASS" : "FAIL";
        j["lhs"] = r.lhs;
        j["rhs"] = r.rhs;
        out << j.dump() << "\n";
      } else if (req.verbose || !r.passed()) {
        out << r.line() << "\n";
        if (!r.passed()) out << "  lhs: " << r.lhs << "\n  rhs: " << r.rhs << "\n";
      }
    }
    if (req.format == Format::Text) {
      out << family_info(family).tag << ": " << reports.size() << " instances, " << family_failed
          << " failed\n";
    }
    failed += family_failed;
  }
  return failed == 0 ? kOk : kVerificationFailed;
}

int cmd_suite(const Request& req, std::ostream& out) {
  const QuantumSeed seed = load_seed(req.seed);
  RelationEngine engine(seed);
  Reporter rep(out, req.format);
  for (const auto& c : engine.quantum_group_suite()) rep.certificate(c);
  for (std::size_t i = 0; i < seed.n(); ++i) {
    for (std::size_t j = 0; j < seed.n(); ++j) {
      if (i == j) continue;
      const std::int64_t ab = std::abs(seed.b(i, j));
      if (ab == 0) {
        for (std::int64_t l = 1; l <= 2; ++l) {
          for (std::int64_t m = 0; m <= 1; ++m) rep.certificate(engine.higher_verify(i, j, l, m));
        }
        continue;
      }
      for (std::int64_t l = 1; l <= ab; ++l) {
        rep.certificate(engine.higher_verify(i, j, l, l * ab));
        rep.certificate(engine.higher_verify(i, j, l, l * ab + 1));
      }
    }
  }
  rep.summary("suite");
  return rep.status();
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact verification of quantum cluster seeds, mutations and q-identities",
               "qcluster"};
  app.require_subcommand(1, 1);
  Request req;
  const std::map<std::string, Format> formats{{"text", Format::Text}, {"json", Format::Json}};

  auto add_seed = [&](CLI::App* sub) {
    sub->add_option("--seed", req.seed, "Seed file (JSON)")->required();
  };
  auto add_format = [&](CLI::App* sub) {
    sub->add_option("--format", req.format, "Output mode")
        ->transform(CLI::CheckedTransformer(formats, CLI::ignore_case));
  };
  auto add_pair = [&](CLI::App* sub, bool required) {
    auto* i = sub->add_option("--i", req.i, "First index (1-based)");
    auto* j = sub->add_option("--j", req.j, "Second index (1-based)");
    if (required) {
      i->required();
      j->required();
    }
  };

  auto* validate = app.add_subcommand("validate", "Load a seed and check every invariant");
  add_seed(validate);
  add_format(validate);

  auto* mutate_cmd = app.add_subcommand("mutate", "Mutate a seed in direction k");
  add_seed(mutate_cmd);
  mutate_cmd->add_option("--k", req.k, "Direction (1-based)")->required();
  add_format(mutate_cmd);

  auto* vars = app.add_subcommand("vars", "Print the one-step mutated variables");
  add_seed(vars);
  vars->add_option("--k", req.k, "Only this direction (1-based)");
  add_format(vars);

  auto* serre = app.add_subcommand("verify-serre", "Verify the quantum Serre relations");
  add_seed(serre);
  add_pair(serre, false);
  serre->add_flag("--opposite", req.opposite, "Verify the reversed-order relation");
  add_format(serre);

  auto* higher = app.add_subcommand("verify-higher", "Verify a higher-order relation");
  add_seed(higher);
  add_pair(higher, true);
  higher->add_option("--l", req.l, "Power of y_j")->required();
  higher->add_option("--m", req.m, "Outer exponent parameter")->required();
  higher->add_flag("--exploratory", req.exploratory, "Allow instances outside the proven range");
  add_format(higher);

  auto* lemmas = app.add_subcommand("verify-lemmas", "Verify an alternating lemma sum");
  add_seed(lemmas);
  add_pair(lemmas, true);
  lemmas->add_option("--variant", req.variant, "L32 or L41")->check(CLI::IsMember({"L32", "L41"}));
  lemmas->add_option("--m", req.m, "Outer exponent parameter (L41)");
  lemmas->add_option("--t", req.t, "Shift parameter (L41)");
  add_format(lemmas);

  auto* identities = app.add_subcommand("identities", "Run the q-identity oracle suite");
  identities->add_option("--family", req.family, "Only this family tag");
  identities->add_flag("--verbose", req.verbose, "Print every instance");
  add_format(identities);

  auto* suite = app.add_subcommand("suite", "Validate a seed and run every relation check");
  add_seed(suite);
  add_format(suite);

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kMalformedInput;
  }

  try {
    if (validate->parsed()) return cmd_validate(req, out);
    if (mutate_cmd->parsed()) return cmd_mutate(req, out);
    if (vars->parsed()) return cmd_vars(req, out);
    if (serre->parsed()) return cmd_verify_serre(req, out);
    if (higher->parsed()) return cmd_verify_higher(req, out);
    if (lemmas->parsed()) return cmd_verify_lemmas(req, out);
    if (identities->parsed()) return cmd_identities(req, out);
    if (suite->parsed()) return cmd_suite(req, out);
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kMalformedInput;
  }
  return kMalformedInput;
}

}  // namespace qcluster::cli
