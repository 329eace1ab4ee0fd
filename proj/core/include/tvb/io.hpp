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

// JSON encodings of fans, bundles, fields and reports.
//
// Rationals are strings "p/q" (or "p"), matrices are arrays of rows. Objects
// use nlohmann::json's sorted-key map, so dump() is canonical. A reference to
// a fan or bundle may be an inline object or a path, resolved against the
// directory of the referring file.
//
// Parse errors throw tvb::ParseError.

#ifndef TVB_IO_HPP
#define TVB_IO_HPP

#include <filesystem>
#include <stdexcept>
#include <string>
#include <string_view>

#include <nlohmann/json.hpp>

#include "tvb/cohiggs.hpp"

namespace tvb {

using json = nlohmann::json;

class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A JSON document plus the directory relative paths inside it resolve from.
struct Document {
  json value;
  std::filesystem::path base_dir;
};

/// `source` is either inline JSON (first non-blank character '{' or '[') or
/// a file path.
Document load_document(std::string_view source);

/// Two-space indented dump with a trailing newline.
std::string canonical_dump(const json& j);

json to_json(const Rat& r);
Rat rat_from_json(const json& j);

json to_json(const Mat& m);
Mat mat_from_json(const json& j, std::size_t rows, std::size_t cols);

json to_json(const Fan& f);
Fan fan_from_json(const json& j, const std::filesystem::path& base_dir = {});

json to_json(const ToricBundle& v);
ToricBundle bundle_from_json(const json& j, const std::filesystem::path& base_dir = {});

json to_json(const ToricCoHiggsField& fld);
ToricCoHiggsField field_from_json(const json& j, const std::filesystem::path& base_dir = {});

json to_json(const Character& u);
json to_json(const ChernData& d, const Fan& f);
json to_json(const CompatibilityVerdict& v, const ToricBundle& bundle);
json to_json(const TupleVarietyEqs& eqs);
json to_json(const FieldVerdict& v);
json to_json(const IntegrabilityVerdict& v);

/// { "dim", "basis", "commutative", "center_dim", "center", "tuple_equations" }
json endalg_report(const FilteredEndAlgebra& alg, std::size_t n);

json to_json(const ClassificationReport& rep, const ToricBundle& bundle);

}  // namespace tvb

#endif  // TVB_IO_HPP
