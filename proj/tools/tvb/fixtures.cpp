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

#include "tvb/fixtures.hpp"

#include <stdexcept>

namespace tvb::fixtures {

Fan variety(const std::string& name, std::size_t dim, std::int64_t a) {
  if (name == "pn") return fan_pn(dim);
  if (name == "p1xp1") return fan_product(fan_pn(1), fan_pn(1));
  if (name == "p1xp2") return fan_product(fan_pn(1), fan_pn(2));
  if (name == "hirzebruch") return fan_hirzebruch(a);
  throw std::invalid_argument("unknown variety '" + name + "' (pn, p1xp1, p1xp2, hirzebruch)");
}

ToricBundle three_lines() {
  Fan f;
  f.n = 3;
  f.rays = {Ray{{1, 0, 0}}, Ray{{0, 1, 0}}, Ray{{0, 0, 1}}};
  f.max_cones = {Cone{{0, 1, 2}}};
  const std::vector<Vec> lines = {{1, 0}, {0, 1}, {1, 1}};
  std::vector<Filtration> filts;
  for (const auto& l : lines) {
    filts.push_back(Filtration::normalize(2, {{0, Subspace::span(2, {l})}, {1, Subspace::zero(2)}}));
  }
  return ToricBundle(f, 2, std::move(filts));
}

ToricCoHiggsField canonical_field(const Fan& f, std::int64_t shift) {
  const std::vector<std::int64_t> a(f.rays.size(), shift);
  auto pair = canonical_pair(f, a);
  return {std::move(pair.bundle), std::move(pair.tuple)};
}

std::vector<NamedFan> fixture_fans() {
  std::vector<NamedFan> out;
  for (std::size_t n = 1; n <= 4; ++n) out.push_back({"P" + std::to_string(n), fan_pn(n)});
  out.push_back({"P1xP1", variety("p1xp1")});
  out.push_back({"P1xP2", variety("p1xp2")});
  for (std::int64_t a = 0; a <= 3; ++a) {
    out.push_back({"F" + std::to_string(a), fan_hirzebruch(a)});
  }
  return out;
}

std::vector<NamedBundle> fixture_bundles() {
  std::vector<NamedBundle> out;
  for (const auto& [name, fan] : fixture_fans()) {
    const ToricBundle tangent = tangent_bundle(fan);
    out.push_back({"T" + name, tangent});
    out.push_back({"O_" + name, trivial_line_bundle(fan)});
    std::vector<std::int64_t> a(fan.rays.size());
    for (std::size_t k = 0; k < a.size(); ++k) a[k] = static_cast<std::int64_t>(k % 3) - 1;
    const ToricBundle line = line_bundle(fan, a);
    out.push_back({"L_" + name, line});
    out.push_back({"T" + name + "+O", direct_sum(tangent, trivial_line_bundle(fan))});
    out.push_back({"T" + name + "+L", direct_sum(tangent, line)});
    out.push_back({"L+T" + name + "+L", direct_sum(direct_sum(line, tangent), line)});
  }
  return out;
}

}  // namespace tvb::fixtures
