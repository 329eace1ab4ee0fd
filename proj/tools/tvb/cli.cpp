// Copyright 2026 The tvb Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      https://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "tvb/cli.hpp"

#include <cstdlib>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <optional>
#include <sstream>

#include <openssl/evp.h>

#include "CLI11.hpp"
#include "tvb/fixtures.hpp"
#include "tvb/io.hpp"

namespace tvb::cli {

std::string sha256_hex(const std::string& data) {
  unsigned char digest[EVP_MAX_MD_SIZE];
  unsigned int len = 0;
  if (EVP_Digest(data.data(), data.size(), digest, &len, EVP_sha256(), nullptr) != 1) {
    throw std::runtime_error("sha256 failed");
  }
  std::ostringstream os;
  for (unsigned int i = 0; i < len; ++i) {
    os << std::hex << std::setw(2) << std::setfill('0') << static_cast<int>(digest[i]);
  }
  return os.str();
}

namespace {

struct Settings {
  std::string format = "text";
  std::string output;
  bool strict = false;
  GradingOptions grading;
};

struct Outcome {
  json report;
  std::string text;
  bool negative = false;
};

class MalformedInput : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

std::size_t oracle_limit_from_env() {
  const char* raw = std::getenv("TVB_ORACLE_LIMIT");
  if (raw == nullptr || *raw == '\0') return 4;
  char* end = nullptr;
  const long v = std::strtol(raw, &end, 10);
  if (*end != '\0' || v < 0) {
    throw MalformedInput(std::string("TVB_ORACLE_LIMIT must be a non-negative integer, got '") +
                         raw + "'");
  }
  return static_cast<std::size_t>(v);
}

std::string str(const Mat& m) {
  std::ostringstream os;
  os << m;
  return os.str();
}

ToricBundle load_bundle(const std::string& source, json& digest_input) {
  const Document doc = load_document(source);
  digest_input = doc.value;
  ToricBundle v = bundle_from_json(doc.value, doc.base_dir);
  if (v.rank() == 0) throw MalformedInput("bundle: rank must be at least 1");
  return v;
}

void stamp(json& report, const std::string& command, const json& input) {
  report["command"] = command;
  report["input_digest"] = "sha256:" + sha256_hex(input.dump());
}

std::string verdict_text(const CompatibilityVerdict& v, const ToricBundle& b) {
  std::ostringstream os;
  if (v.compatible()) {
    os << "compatible: yes (" << v.gradings.size() << " maximal cones graded)\n";
  } else {
    os << "compatible: " << (v.status == GradingStatus::kIncompatible ? "no" : "indeterminate")
       << "\n  cone " << *v.failing_cone << " rays {";
    const auto& idx = b.fan().max_cones[*v.failing_cone].ray_indices;
    for (std::size_t i = 0; i < idx.size(); ++i) os << (i ? "," : "") << idx[i];
    os << "}\n  certificate: " << v.certificate << "\n";
  }
  return os.str();
}

Outcome do_check(const std::string& input, const Settings& s) {
  json in;
  const ToricBundle v = load_bundle(input, in);
  const auto verdict = is_vector_bundle(v, s.grading);
  Outcome o{to_json(verdict, v), verdict_text(verdict, v), !verdict.compatible()};
  stamp(o.report, "check", in);
  return o;
}

Outcome do_endalg(const std::string& input, const Settings&) {
  json in;
  const ToricBundle v = load_bundle(input, in);
  const auto alg = filtered_endos(v);
  Outcome o{endalg_report(alg, v.fan().n), {}, false};
  std::ostringstream os;
  os << "dim h_V: " << alg.dim() << "\n";
  for (const auto& a : alg.basis) os << "  " << str(a) << "\n";
  os << "commutative: " << (o.report["commutative"].get<bool>() ? "yes" : "no") << "\n";
  os << "center dim: " << o.report["center_dim"].get<std::size_t>() << "\n";
  os << "commutation equations (n=" << v.fan().n
     << "): " << o.report["tuple_equations"]["equations"].size() << "\n";
  o.text = os.str();
  stamp(o.report, "endalg", in);
  return o;
}

Outcome do_classify(const std::string& input, const Settings& s) {
  json in;
  const ToricBundle v = load_bundle(input, in);
  const auto rep = classify(v, s.grading);
  Outcome o{to_json(rep, v), {}, !rep.compatibility.compatible()};
  std::ostringstream os;
  os << "lattice rank n: " << rep.n << ", bundle rank r: " << rep.rank << "\n";
  os << verdict_text(rep.compatibility, v);
  os << "dim h_V: " << rep.algebra.dim() << "\n";
  for (const auto& a : rep.algebra.basis) os << "  " << str(a) << "\n";
  os << "commutative: " << (rep.commutative ? "yes" : "no") << "\n";
  os << "center dim: " << rep.center.size() << "\n";
  if (rep.commutative) {
    os << "toric co-Higgs fields: free family with " << rep.ambient_parameters
       << " parameters (" << rep.generators.size() << " generator tuples)\n";
  } else {
    os << "toric co-Higgs fields: commuting " << rep.n << "-tuples in a " << rep.ambient_parameters
       << "-dimensional space cut out by " << rep.equations->equations.size()
       << " bilinear equations\n";
  }
  for (const auto& w : rep.warnings) os << "warning: " << w << "\n";
  o.text = os.str();
  stamp(o.report, "classify", in);
  return o;
}

Outcome do_validate_field(const std::string& input, const Settings&) {
  const Document doc = load_document(input);
  const ToricCoHiggsField fld = field_from_json(doc.value, doc.base_dir);
  if (fld.bundle.rank() == 0) throw MalformedInput("bundle: rank must be at least 1");
  const FieldVerdict fv = validate_field(fld.bundle, fld.tuple);
  const IntegrabilityVerdict iv = verify_integrability(fld);
  if (iv.valid != fv.commuting()) {
    throw std::logic_error("integrability oracle disagrees with the commutator check");
  }
  Outcome o{json{{"validation", to_json(fv)}, {"integrability", to_json(iv)}, {"valid", fv.valid()}},
            {},
            !fv.valid()};
  std::ostringstream os;
  os << "valid: " << (fv.valid() ? "yes" : "no") << "\n";
  os << "filtered: " << (fv.filtered() ? "yes" : "no") << "\n";
  for (const auto& x : fv.filtration_violations) {
    os << "  A_" << x.slot + 1 << " does not preserve ray " << x.ray << " step j=" << x.threshold
       << "\n";
  }
  os << "commuting: " << (fv.commuting() ? "yes" : "no") << "\n";
  for (const auto& x : fv.commutator_violations) {
    os << "  [A_" << x.j + 1 << ", A_" << x.k + 1 << "] != 0\n";
  }
  os << "chart integrability: " << (iv.valid ? "yes" : "no") << "\n";
  o.text = os.str();
  stamp(o.report, "validate-field", doc.value);
  return o;
}

Outcome do_chern(const std::string& input, const Settings& s) {
  json in;
  const ToricBundle v = load_bundle(input, in);
  const auto verdict = is_vector_bundle(v, s.grading);
  Outcome o{json{{"compatible", verdict.compatible()}}, {}, !verdict.compatible()};
  std::ostringstream os;
  if (verdict.compatible()) {
    const ChernData d = chern_data_from_gradings(verdict.gradings);
    o.report["chern"] = to_json(d, v.fan());
    for (std::size_t c = 0; c < d.per_cone.size(); ++c) {
      os << "cone " << c << ":";
      for (const auto& [u, m] : d.per_cone[c]) os << " " << u << "^" << m;
      os << "\n";
    }
  } else {
    o.report["chern"] = nullptr;
    o.report["compatibility"] = to_json(verdict, v);
    os << verdict_text(verdict, v);
  }
  o.text = os.str();
  stamp(o.report, "chern", in);
  return o;
}

struct ExampleArgs {
  std::string kind;
  std::string variety = "pn";
  std::size_t dim = 1;
  std::int64_t a = 0;
  std::int64_t shift = 0;
};

json make_example(const ExampleArgs& e) {
  if (e.kind == "tangent") return to_json(tangent_bundle(fixtures::variety(e.variety, e.dim, e.a)));
  if (e.kind == "hirzebruch") return to_json(tangent_bundle(fan_hirzebruch(e.a)));
  if (e.kind == "trivial") {
    return to_json(trivial_line_bundle(fixtures::variety(e.variety, e.dim, e.a)));
  }
  if (e.kind == "canonical") {
    return to_json(fixtures::canonical_field(fixtures::variety(e.variety, e.dim, e.a), e.shift));
  }
  if (e.kind == "three-lines") return to_json(fixtures::three_lines());
  if (e.kind == "fan") return to_json(fixtures::variety(e.variety, e.dim, e.a));
  throw MalformedInput("unknown example '" + e.kind +
                       "' (tangent, hirzebruch, trivial, canonical, three-lines, fan)");
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Toric vector bundles in Klyachko form and their toric co-Higgs fields", "tvb"};
  app.require_subcommand(1, 1);
  Settings s;
  app.add_option("--format", s.format, "Output format")
      ->check(CLI::IsMember({"text", "json"}))
      ->capture_default_str();
  app.add_option("--output", s.output, "Also write the JSON report (or example) to this path");
  app.add_flag("--strict", s.strict, "Exit 3 on incompatible bundles or invalid fields");

  std::string input;
  auto add_verb = [&](const char* name, const char* help, const char* what) {
    auto* sub = app.add_subcommand(name, help);
    sub->fallthrough();
    sub->add_option("input", input, what)->required();
    return sub;
  };
  auto* check = add_verb("check", "Klyachko compatibility of a bundle", "bundle JSON or path");
  auto* endalg = add_verb("endalg", "Algebra of filtered endomorphisms", "bundle JSON or path");
  auto* classify_cmd = add_verb("classify", "Classify toric co-Higgs fields", "bundle JSON or path");
  auto* validate = add_verb("validate-field", "Validate a toric co-Higgs field", "field JSON or path");
  auto* chern = add_verb("chern", "Fixed-point character data", "bundle JSON or path");

  ExampleArgs ex;
  auto* example = app.add_subcommand("example", "Print a built-in fixture as one-line JSON");
  example->fallthrough();
  example->add_option("kind", ex.kind, "tangent|hirzebruch|trivial|canonical|three-lines|fan")
      ->required();
  example->add_option("--variety", ex.variety, "pn|p1xp1|p1xp2|hirzebruch")->capture_default_str();
  example->add_option("--dim", ex.dim, "Dimension for pn")->capture_default_str();
  example->add_option("--a", ex.a, "Hirzebruch parameter")->capture_default_str();
  example->add_option("--shift", ex.shift, "Linearization shift of O for canonical")
      ->capture_default_str();

  std::vector<std::string> argv_store{"tvb"};
  argv_store.insert(argv_store.end(), args.begin(), args.end());
  std::vector<char*> argv;
  for (auto& a : argv_store) argv.push_back(a.data());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n\n" << app.help();
    return kMalformedInput;
  }

  try {
    s.grading.oracle_rank_limit = oracle_limit_from_env();
    if (example->parsed()) {
      const json fixture = make_example(ex);
      if (!s.output.empty()) {
        std::ofstream f(s.output);
        if (!f) throw MalformedInput("cannot write '" + s.output + "'");
        f << canonical_dump(fixture);
        out << s.output << "\n";
      } else {
        out << fixture.dump() << "\n";
      }
      return kOk;
    }
    Outcome o;
    if (check->parsed()) o = do_check(input, s);
    else if (endalg->parsed()) o = do_endalg(input, s);
    else if (classify_cmd->parsed()) o = do_classify(input, s);
    else if (validate->parsed()) o = do_validate_field(input, s);
    else if (chern->parsed()) o = do_chern(input, s);

    const std::string dumped = canonical_dump(o.report);
    if (!s.output.empty()) {
      std::ofstream f(s.output);
      if (!f) throw MalformedInput("cannot write '" + s.output + "'");
      f << dumped;
    }
    out << (s.format == "json" ? dumped : o.text);
    return (s.strict && o.negative) ? kNegativeVerdict : kOk;
  } catch (const ParseError& e) {
    err << "malformed input: " << e.what() << "\n";
    return kMalformedInput;
  } catch (const MalformedInput& e) {
    err << "malformed input: " << e.what() << "\n";
    return kMalformedInput;
  } catch (const std::invalid_argument& e) {
    err << "malformed input: " << e.what() << "\n";
    return kMalformedInput;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << "\n";
    return kInternalError;
  }
}

}  // namespace tvb::cli
