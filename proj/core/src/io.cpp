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

#include "tvb/io.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

namespace tvb {

namespace fs = std::filesystem;

namespace {

const json& field(const json& j, const char* key, const char* where) {
  if (!j.is_object()) throw ParseError(std::string(where) + ": expected an object");
  const auto it = j.find(key);
  if (it == j.end()) throw ParseError(std::string(where) + ": missing \"" + key + "\"");
  return *it;
}

std::int64_t as_int(const json& j, const char* where) {
  if (!j.is_number_integer()) throw ParseError(std::string(where) + ": expected an integer");
  return j.get<std::int64_t>();
}

std::size_t as_count(const json& j, const char* where) {
  const auto v = as_int(j, where);
  if (v < 0) throw ParseError(std::string(where) + ": expected a non-negative integer");
  return static_cast<std::size_t>(v);
}

const json& as_array(const json& j, const char* where) {
  if (!j.is_array()) throw ParseError(std::string(where) + ": expected an array");
  return j;
}

// Inline object, or a path relative to base_dir. Returns the object and the
// directory nested references resolve against.
Document resolve(const json& ref, const fs::path& base_dir, const char* where) {
  if (ref.is_object()) return {ref, base_dir};
  if (ref.is_string()) {
    fs::path p = ref.get<std::string>();
    if (p.is_relative() && !base_dir.empty()) p = base_dir / p;
    return load_document(p.string());
  }
  throw ParseError(std::string(where) + ": expected an object or a path");
}

json to_json(const Subspace& s) { return to_json(s.basis()); }

}  // namespace

Document load_document(std::string_view source) {
  const auto first = source.find_first_not_of(" \t\r\n");
  try {
    if (first != std::string_view::npos && (source[first] == '{' || source[first] == '[')) {
      return {json::parse(source), fs::current_path()};
    }
    const fs::path path{std::string(source)};
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open '" + path.string() + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return {json::parse(buf.str()), fs::absolute(path).parent_path()};
  } catch (const json::exception& e) {
    throw ParseError(std::string("invalid JSON: ") + e.what());
  }
}

std::string canonical_dump(const json& j) { return j.dump(2) + "\n"; }

json to_json(const Rat& r) { return r.str(); }

Rat rat_from_json(const json& j) {
  if (j.is_number_integer()) return Rat(j.get<std::int64_t>());
  if (!j.is_string()) throw ParseError("rational: expected a \"p/q\" string");
  try {
    return Rat::parse(j.get<std::string>());
  } catch (const std::invalid_argument& e) {
    throw ParseError(e.what());
  }
}

json to_json(const Mat& m) {
  json rows = json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    json row = json::array();
    for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(to_json(m(i, j)));
    rows.push_back(std::move(row));
  }
  return rows;
}

Mat mat_from_json(const json& j, std::size_t rows, std::size_t cols) {
  as_array(j, "matrix");
  if (j.size() != rows) {
    throw ParseError("matrix: expected " + std::to_string(rows) + " rows, got " +
                     std::to_string(j.size()));
  }
  Mat m(rows, cols);
  for (std::size_t i = 0; i < rows; ++i) {
    const json& row = as_array(j[i], "matrix row");
    if (row.size() != cols) {
      throw ParseError("matrix: expected rows of length " + std::to_string(cols));
    }
    for (std::size_t k = 0; k < cols; ++k) m(i, k) = rat_from_json(row[k]);
  }
  return m;
}

json to_json(const Fan& f) {
  json rays = json::array();
  for (const auto& r : f.rays) rays.push_back(r.coords);
  json cones = json::array();
  for (const auto& c : f.max_cones) cones.push_back(c.ray_indices);
  return json{{"n", f.n}, {"rays", std::move(rays)}, {"max_cones", std::move(cones)}};
}

Fan fan_from_json(const json& ref, const fs::path& base_dir) {
  const Document doc = resolve(ref, base_dir, "fan");
  const json& j = doc.value;
  Fan f;
  f.n = as_count(field(j, "n", "fan"), "fan.n");
  for (const auto& r : as_array(field(j, "rays", "fan"), "fan.rays")) {
    Ray ray;
    for (const auto& x : as_array(r, "fan ray")) ray.coords.push_back(as_int(x, "fan ray"));
    f.rays.push_back(std::move(ray));
  }
  for (const auto& c : as_array(field(j, "max_cones", "fan"), "fan.max_cones")) {
    Cone cone;
    for (const auto& x : as_array(c, "fan cone")) cone.ray_indices.push_back(as_count(x, "fan cone"));
    std::sort(cone.ray_indices.begin(), cone.ray_indices.end());
    f.max_cones.push_back(std::move(cone));
  }
  if (const auto v = validate_fan(f); !v) throw ParseError("fan: " + v.reason);
  return f;
}

json to_json(const ToricBundle& v) {
  json filts = json::array();
  for (std::size_t k = 0; k < v.filtrations().size(); ++k) {
    json steps = json::array();
    for (const auto& s : v.filtration(k).steps()) {
      steps.push_back(json{{"j", s.threshold}, {"basis", to_json(s.space)}});
    }
    filts.push_back(json{{"ray", k}, {"steps", std::move(steps)}});
  }
  return json{{"fan", to_json(v.fan())}, {"rank", v.rank()}, {"filtrations", std::move(filts)}};
}

ToricBundle bundle_from_json(const json& ref, const fs::path& base_dir) {
  const Document doc = resolve(ref, base_dir, "bundle");
  const json& j = doc.value;
  Fan fan = fan_from_json(field(j, "fan", "bundle"), doc.base_dir);
  const std::size_t r = as_count(field(j, "rank", "bundle"), "bundle.rank");
  std::vector<std::optional<Filtration>> filts(fan.rays.size());
  for (const auto& fj : as_array(field(j, "filtrations", "bundle"), "bundle.filtrations")) {
    const std::size_t ray = as_count(field(fj, "ray", "filtration"), "filtration.ray");
    if (ray >= filts.size()) throw ParseError("filtration: ray index out of range");
    if (filts[ray]) throw ParseError("filtration: ray " + std::to_string(ray) + " given twice");
    std::vector<FiltrationStep> raw;
    for (const auto& sj : as_array(field(fj, "steps", "filtration"), "filtration.steps")) {
      const auto threshold = as_int(field(sj, "j", "step"), "step.j");
      const json& basis = as_array(field(sj, "basis", "step"), "step.basis");
      raw.push_back({threshold, Subspace::row_space(mat_from_json(basis, basis.size(), r))});
    }
    try {
      filts[ray] = Filtration::normalize(r, std::move(raw));
    } catch (const std::invalid_argument& e) {
      throw ParseError("ray " + std::to_string(ray) + ": " + e.what());
    }
  }
  std::vector<Filtration> out;
  for (std::size_t k = 0; k < filts.size(); ++k) {
    if (!filts[k]) throw ParseError("bundle: no filtration for ray " + std::to_string(k));
    out.push_back(std::move(*filts[k]));
  }
  return ToricBundle(std::move(fan), r, std::move(out));
}

json to_json(const ToricCoHiggsField& fld) {
  json tuple = json::array();
  for (const auto& a : fld.tuple) tuple.push_back(to_json(a));
  return json{{"bundle", to_json(fld.bundle)}, {"tuple", std::move(tuple)}};
}

ToricCoHiggsField field_from_json(const json& ref, const fs::path& base_dir) {
  const Document doc = resolve(ref, base_dir, "field");
  const json& j = doc.value;
  ToricBundle bundle = bundle_from_json(field(j, "bundle", "field"), doc.base_dir);
  const json& tj = as_array(field(j, "tuple", "field"), "field.tuple");
  if (tj.size() != bundle.fan().n) {
    throw ParseError("field: tuple must have " + std::to_string(bundle.fan().n) + " matrices");
  }
  std::vector<Mat> tuple;
  for (const auto& m : tj) tuple.push_back(mat_from_json(m, bundle.rank(), bundle.rank()));
  return {std::move(bundle), std::move(tuple)};
}

json to_json(const Character& u) { return u.coords; }

json to_json(const ChernData& d, const Fan& f) {
  json cones = json::array();
  for (std::size_t c = 0; c < d.per_cone.size(); ++c) {
    json chars = json::array();
    for (const auto& [u, m] : d.per_cone[c]) {
      chars.push_back(json{{"u", to_json(u)}, {"multiplicity", m}});
    }
    cones.push_back(json{{"cone", c},
                         {"rays", f.max_cones.at(c).ray_indices},
                         {"characters", std::move(chars)}});
  }
  return cones;
}

namespace {

const char* status_name(GradingStatus s) {
  switch (s) {
    case GradingStatus::kGraded:
      return "compatible";
    case GradingStatus::kIncompatible:
      return "incompatible";
    case GradingStatus::kIndeterminate:
      return "indeterminate";
  }
  return "unknown";
}

}  // namespace

json to_json(const CompatibilityVerdict& v, const ToricBundle& bundle) {
  json out{{"compatible", v.compatible()}, {"status", status_name(v.status)}};
  if (v.failing_cone) {
    out["cone"] = *v.failing_cone;
    out["cone_rays"] = bundle.fan().max_cones.at(*v.failing_cone).ray_indices;
    out["certificate"] = v.certificate;
  } else {
    out["cone"] = nullptr;
    json gradings = json::array();
    for (const auto& g : v.gradings) {
      json pieces = json::array();
      for (const auto& [u, s] : g.pieces) {
        pieces.push_back(json{{"u", to_json(u)}, {"basis", to_json(s)}});
      }
      gradings.push_back(json{{"rays", g.cone.ray_indices}, {"pieces", std::move(pieces)}});
    }
    out["gradings"] = std::move(gradings);
  }
  return out;
}

json to_json(const TupleVarietyEqs& eqs) {
  json list = json::array();
  for (const auto& e : eqs.equations) {
    list.push_back(json{{"j", e.j}, {"k", e.k}, {"component", e.component}, {"form", to_json(e.form)}});
  }
  return json{{"n", eqs.n}, {"dim", eqs.dim}, {"equations", std::move(list)}};
}

json to_json(const FieldVerdict& v) {
  json filt = json::array();
  for (const auto& x : v.filtration_violations) {
    filt.push_back(json{{"slot", x.slot}, {"ray", x.ray}, {"threshold", x.threshold}});
  }
  json comm = json::array();
  for (const auto& x : v.commutator_violations) comm.push_back(json{{"j", x.j}, {"k", x.k}});
  return json{{"valid", v.valid()},
              {"filtered", v.filtered()},
              {"commuting", v.commuting()},
              {"filtration_violations", std::move(filt)},
              {"commutator_violations", std::move(comm)}};
}

json to_json(const IntegrabilityVerdict& v) {
  json out{{"valid", v.valid}};
  if (v.cone) {
    out["cone"] = *v.cone;
    out["k"] = v.k;
    out["l"] = v.l;
    out["commutator"] = to_json(v.commutator);
  } else {
    out["cone"] = nullptr;
  }
  return out;
}

json endalg_report(const FilteredEndAlgebra& alg, std::size_t n) {
  json basis = json::array();
  for (const auto& a : alg.basis) basis.push_back(to_json(a));
  const auto z = center(alg);
  json cen = json::array();
  for (const auto& c : z) cen.push_back(to_json(c));
  const bool comm = is_commutative(alg);
  return json{{"dim", alg.dim()},
              {"basis", std::move(basis)},
              {"commutative", comm},
              {"center_dim", z.size()},
              {"center", std::move(cen)},
              {"tuple_equations", to_json(tuple_variety_equations(alg, std::max<std::size_t>(n, 1)))}};
}

json to_json(const ClassificationReport& rep, const ToricBundle& bundle) {
  json basis = json::array();
  for (const auto& a : rep.algebra.basis) basis.push_back(to_json(a));
  json cen = json::array();
  for (const auto& c : rep.center) cen.push_back(to_json(c));
  json gens = json::array();
  for (const auto& t : rep.generators) {
    json tuple = json::array();
    for (const auto& a : t) tuple.push_back(to_json(a));
    gens.push_back(std::move(tuple));
  }
  json out{
      {"n", rep.n},
      {"rank", rep.rank},
      {"compatibility", to_json(rep.compatibility, bundle)},
      {"compatible", rep.compatibility.compatible()},
      {"dim_h", rep.algebra.dim()},
      {"basis", std::move(basis)},
      {"commutative", rep.commutative},
      {"center_dim", rep.center.size()},
      {"center", std::move(cen)},
      {"ambient_parameters", rep.ambient_parameters},
      {"generators", std::move(gens)},
      {"warnings", rep.warnings},
      {"group_tuples",
       "tuples drawn from h_V; tuples in the group H_V are the open subset where every A_j is "
       "invertible, same parameter count"},
  };
  out["parameters"] = rep.commutative ? json(rep.ambient_parameters) : json(nullptr);
  out["tuple_equations"] = rep.equations ? to_json(*rep.equations) : json(nullptr);
  out["chern"] = rep.chern ? to_json(*rep.chern, bundle.fan()) : json(nullptr);
  return out;
}

}  // namespace tvb
