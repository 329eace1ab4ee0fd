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

// Built-in example bundles and fields, shared by the CLI and the tests.

#ifndef TVB_TOOLS_FIXTURES_HPP
#define TVB_TOOLS_FIXTURES_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "tvb/cohiggs.hpp"

namespace tvb::fixtures {

/// "pn" (needs dim >= 1), "p1xp1", "p1xp2" or "hirzebruch" (uses a).
/// Throws std::invalid_argument for unknown names.
Fan variety(const std::string& name, std::size_t dim = 1, std::int64_t a = 0);

/// Rank 2 over the single cone(e1, e2, e3), each ray jumping E ⊃ L_j ⊃ 0 at
/// 0 and 1 with L = <(1,0)>, <(0,1)>, <(1,1)>. Not compatible.
ToricBundle three_lines();

/// The canonical pair packaged as a field, with O linearized by a uniform
/// shift.
ToricCoHiggsField canonical_field(const Fan& f, std::int64_t shift = 0);

/// Named fans the acceptance suite and CLI tests iterate over.
struct NamedFan {
  std::string name;
  Fan fan;
};
std::vector<NamedFan> fixture_fans();

/// Tangent bundles of the fixture fans plus their sums with a few line
/// bundles.
struct NamedBundle {
  std::string name;
  ToricBundle bundle;
};
std::vector<NamedBundle> fixture_bundles();

}  // namespace tvb::fixtures

#endif  // TVB_TOOLS_FIXTURES_HPP
