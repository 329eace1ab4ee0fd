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

#include "tvb/klyachko.hpp"

#include <algorithm>
#include <numeric>
#include <random>
#include <set>
#include <sstream>
#include <stdexcept>

namespace tvb {

// ---------------------------------------------------------------------------
// Filtration

Filtration Filtration::normalize(std::size_t rank, std::vector<FiltrationStep> raw) {
  if (raw.empty()) throw std::invalid_argument("filtration: no steps given");
  for (const auto& s : raw) {
    if (s.space.ambient_dim() != rank) {
      throw std::invalid_argument("filtration: subspace of Q^" +
                                  std::to_string(s.space.ambient_dim()) + " in a rank " +
                                  std::to_string(rank) + " filtration");
    }
  }
  std::stable_sort(raw.begin(), raw.end(), [](const FiltrationStep& a, const FiltrationStep& b) {
    return a.threshold < b.threshold;
  });
  const std::int64_t last_threshold = raw.back().threshold;

  Filtration f;
  f.rank_ = rank;
  Subspace prev = Subspace::full(rank);
  for (std::size_t k = 0; k < raw.size(); ++k) {
    if (k > 0 && raw[k].threshold == raw[k - 1].threshold) {
      if (raw[k].space != raw[k - 1].space) {
        throw std::invalid_argument("filtration: threshold " + std::to_string(raw[k].threshold) +
                                    " given twice with different subspaces");
      }
      continue;
    }
    if (!prev.contains(raw[k].space)) {
      throw std::invalid_argument("filtration: not decreasing at threshold " +
                                  std::to_string(raw[k].threshold));
    }
    const bool keep_first_zero = f.steps_.empty() && raw[k].space.is_zero();
    if (raw[k].space == prev && !keep_first_zero) continue;
    prev = raw[k].space;
    f.steps_.push_back(raw[k]);
  }
  if (f.steps_.empty() || !f.steps_.back().space.is_zero()) {
    f.steps_.push_back({last_threshold + 1, Subspace::zero(rank)});
  }
  return f;
}

Filtration Filtration::single_jump(std::size_t rank, std::int64_t jump) {
  return normalize(rank, {{jump, Subspace::zero(rank)}});
}

std::vector<std::int64_t> Filtration::thresholds() const {
  std::vector<std::int64_t> out;
  out.reserve(steps_.size());
  for (const auto& s : steps_) out.push_back(s.threshold);
  return out;
}

Subspace Filtration::at(std::int64_t i) const {
  // Last step whose threshold is strictly below i.
  const auto it = std::partition_point(steps_.begin(), steps_.end(),
                                       [i](const FiltrationStep& s) { return s.threshold < i; });
  if (it == steps_.begin()) return Subspace::full(rank_);
  return std::prev(it)->space;
}

Filtration Filtration::shifted(std::int64_t shift) const {
  Filtration f = *this;
  for (auto& s : f.steps_) s.threshold += shift;
  return f;
}

Filtration Filtration::transformed(const Mat& g) const {
  std::vector<FiltrationStep> raw;
  raw.reserve(steps_.size());
  for (const auto& s : steps_) raw.push_back({s.threshold, s.space.image(g)});
  return normalize(rank_, std::move(raw));
}

Filtration normalize_filtration(std::size_t rank, std::vector<FiltrationStep> raw) {
  return Filtration::normalize(rank, std::move(raw));
}

Subspace eval_filtration(const Filtration& f, std::int64_t i) { return f.at(i); }

// ---------------------------------------------------------------------------
// Bundles

ToricBundle::ToricBundle(Fan fan, std::size_t rank, std::vector<Filtration> filtrations)
    : fan_(std::move(fan)), rank_(rank), filts_(std::move(filtrations)) {
  if (const auto v = validate_fan(fan_); !v) throw std::invalid_argument("invalid fan: " + v.reason);
  if (filts_.size() != fan_.rays.size()) {
    throw std::invalid_argument("bundle: " + std::to_string(filts_.size()) +
                                " filtrations for " + std::to_string(fan_.rays.size()) + " rays");
  }
  for (std::size_t k = 0; k < filts_.size(); ++k) {
    if (filts_[k].rank() != rank_) {
      throw std::invalid_argument("bundle: filtration at ray " + std::to_string(k) +
                                  " has the wrong rank");
    }
  }
}

ToricBundle line_bundle(const Fan& f, std::span<const std::int64_t> a) {
  if (a.size() != f.rays.size()) {
    throw std::invalid_argument("line_bundle: one integer per ray expected");
  }
  std::vector<Filtration> filts;
  filts.reserve(a.size());
  for (auto jump : a) filts.push_back(Filtration::single_jump(1, jump));
  return ToricBundle(f, 1, std::move(filts));
}

ToricBundle trivial_line_bundle(const Fan& f) {
  const std::vector<std::int64_t> zeros(f.rays.size(), 0);
  return line_bundle(f, zeros);
}

ToricBundle tangent_bundle(const Fan& f) {
  std::vector<Filtration> filts;
  filts.reserve(f.rays.size());
  for (const auto& rho : f.rays) {
    Vec v(rho.coords.begin(), rho.coords.end());
    filts.push_back(Filtration::normalize(
        f.n, {{0, Subspace::span(f.n, {v})}, {1, Subspace::zero(f.n)}}));
  }
  return ToricBundle(f, f.n, std::move(filts));
}

namespace {

Subspace block_sum(const Subspace& a, const Subspace& b) {
  const std::size_t ra = a.ambient_dim();
  const std::size_t r = ra + b.ambient_dim();
  std::vector<Vec> rows;
  for (const auto& v : a.basis_vectors()) {
    Vec x(r);
    std::copy(v.begin(), v.end(), x.begin());
    rows.push_back(std::move(x));
  }
  for (const auto& v : b.basis_vectors()) {
    Vec x(r);
    std::copy(v.begin(), v.end(), x.begin() + static_cast<std::ptrdiff_t>(ra));
    rows.push_back(std::move(x));
  }
  return Subspace::span(r, rows);
}

}  // namespace

ToricBundle direct_sum(const ToricBundle& v, const ToricBundle& w) {
  if (v.fan() != w.fan()) throw std::invalid_argument("direct_sum: bundles live on different fans");
  const std::size_t r = v.rank() + w.rank();
  std::vector<Filtration> filts;
  filts.reserve(v.filtrations().size());
  for (std::size_t k = 0; k < v.filtrations().size(); ++k) {
    const auto& fv = v.filtration(k);
    const auto& fw = w.filtration(k);
    std::set<std::int64_t> ts;
    for (auto t : fv.thresholds()) ts.insert(t);
    for (auto t : fw.thresholds()) ts.insert(t);
    std::vector<FiltrationStep> raw;
    for (auto t : ts) raw.push_back({t, block_sum(fv.at(t + 1), fw.at(t + 1))});
    filts.push_back(Filtration::normalize(r, std::move(raw)));
  }
  return ToricBundle(v.fan(), r, std::move(filts));
}

ToricBundle tensor_line(const ToricBundle& v, std::span<const std::int64_t> a) {
  if (a.size() != v.fan().rays.size()) {
    throw std::invalid_argument("tensor_line: one integer per ray expected");
  }
  std::vector<Filtration> filts;
  filts.reserve(a.size());
  for (std::size_t k = 0; k < a.size(); ++k) filts.push_back(v.filtration(k).shifted(a[k]));
  return ToricBundle(v.fan(), v.rank(), std::move(filts));
}

// ---------------------------------------------------------------------------
// Gradings

namespace {

using Coords = std::vector<std::int64_t>;

Character character_at(std::span<const Character> dual, const Coords& levels) {
  const std::size_t n = levels.size();
  Character u{std::vector<std::int64_t>(n, 0)};
  for (std::size_t k = 0; k < n; ++k) {
    for (std::size_t i = 0; i < n; ++i) u.coords[i] += levels[k] * dual[k].coords[i];
  }
  return u;
}

// F(levels) = ∩_k E^{rho_k}(levels_k), memoized.
class LevelIntersections {
 public:
  LevelIntersections(const ToricBundle& v, const Cone& sigma) : v_(v), sigma_(sigma) {}

  const Subspace& at(const Coords& levels) {
    auto it = cache_.find(levels);
    if (it != cache_.end()) return it->second;
    Subspace s = Subspace::full(v_.rank());
    for (std::size_t k = 0; k < levels.size(); ++k) {
      s = intersect(s, v_.filtration(sigma_.ray_indices[k]).at(levels[k]));
    }
    return cache_.emplace(levels, std::move(s)).first->second;
  }

 private:
  const ToricBundle& v_;
  const Cone& sigma_;
  std::map<Coords, Subspace> cache_;
};

std::vector<Coords> candidate_grid(const ToricBundle& v, const Cone& sigma) {
  std::vector<std::vector<std::int64_t>> axes;
  for (auto ray : sigma.ray_indices) {
    auto ts = v.filtration(ray).thresholds();
    ts.insert(ts.begin(), ts.front() - 1);
    axes.push_back(std::move(ts));
  }
  std::vector<Coords> grid{Coords{}};
  for (const auto& axis : axes) {
    std::vector<Coords> next;
    next.reserve(grid.size() * axis.size());
    for (const auto& g : grid) {
      for (auto x : axis) {
        Coords c = g;
        c.push_back(x);
        next.push_back(std::move(c));
      }
    }
    grid = std::move(next);
  }
  return grid;
}

void check_grading_cone(const ToricBundle& v, const Cone& sigma) {
  max_cone_index(v.fan(), sigma);
  dual_basis(v.fan(), sigma);  // throws unless smooth and full-dimensional
}

}  // namespace

Verdict verify_grading(const ToricBundle& v, const ConeGrading& grading) {
  const Fan& fan = v.fan();
  std::size_t total = 0;
  Subspace all = Subspace::zero(v.rank());
  for (const auto& [u, piece] : grading.pieces) {
    if (piece.ambient_dim() != v.rank()) return Verdict::fail("piece in wrong ambient space");
    total += piece.dim();
    all = sum(all, piece);
  }
  if (total != v.rank() || !all.is_full()) {
    std::ostringstream os;
    os << "pieces have total dimension " << total << " and span dimension " << all.dim()
       << ", rank is " << v.rank();
    return Verdict::fail(os.str());
  }
  for (std::size_t k = 0; k < grading.cone.ray_indices.size(); ++k) {
    const std::size_t ray = grading.cone.ray_indices[k];
    const Filtration& filt = v.filtration(ray);
    std::set<std::int64_t> probes;
    for (auto t : filt.thresholds()) {
      probes.insert(t);
      probes.insert(t + 1);
    }
    for (const auto& [u, piece] : grading.pieces) {
      const auto p = pairing(u, fan.rays[ray]);
      probes.insert(p);
      probes.insert(p + 1);
    }
    probes.insert(*probes.begin() - 1);
    for (auto i : probes) {
      Subspace rebuilt = Subspace::zero(v.rank());
      for (const auto& [u, piece] : grading.pieces) {
        if (pairing(u, fan.rays[ray]) >= i) rebuilt = sum(rebuilt, piece);
      }
      const Subspace expected = filt.at(i);
      if (rebuilt != expected) {
        std::ostringstream os;
        os << "ray " << ray << " " << fan.rays[ray] << " at i=" << i << ": graded pieces span "
           << rebuilt << " (dim " << rebuilt.dim() << ") but E(i) = " << expected << " (dim "
           << expected.dim() << ")";
        return Verdict::fail(os.str());
      }
    }
  }
  return Verdict::pass();
}

GradingResult cone_grading(const ToricBundle& v, const Cone& sigma, const GradingOptions& opts) {
  check_grading_cone(v, sigma);
  const auto dual = dual_basis(v.fan(), sigma);
  const std::size_t n = sigma.ray_indices.size();

  auto grid = candidate_grid(v, sigma);
  // Descending lexicographic order is a linear extension of the
  // componentwise order, visited from maximal to minimal.
  std::sort(grid.begin(), grid.end(), std::greater<>());
  if (opts.shuffle_seed) {
    std::mt19937_64 rng(*opts.shuffle_seed);
    std::shuffle(grid.begin(), grid.end(), rng);
  }

  LevelIntersections levels(v, sigma);
  ConeGrading grading{sigma, {}};
  for (const auto& point : grid) {
    const Subspace here = levels.at(point);
    Subspace above = Subspace::zero(v.rank());
    for (std::size_t k = 0; k < n; ++k) {
      Coords next = point;
      ++next[k];
      above = sum(above, levels.at(next));
    }
    if (here == above) continue;
    grading.pieces.emplace(character_at(dual, point), complement_within(above, here));
  }

  GradingResult result;
  const Verdict check = verify_grading(v, grading);
  if (check) {
    result.grading = std::move(grading);
    return result;
  }
  result.certificate = check.reason;
  if (v.rank() > opts.oracle_rank_limit) {
    result.status = GradingStatus::kIndeterminate;
    return result;
  }
  result.oracle_consulted = true;
  if (const auto basis = adapted_basis_oracle(v, sigma)) {
    ConeGrading from_oracle = grading_from_basis(v, sigma, *basis);
    if (verify_grading(v, from_oracle)) {
      result.grading = std::move(from_oracle);
      result.certificate.clear();
      return result;
    }
  }
  result.status = GradingStatus::kIncompatible;
  return result;
}

std::optional<std::vector<Vec>> adapted_basis_oracle(const ToricBundle& v, const Cone& sigma) {
  check_grading_cone(v, sigma);
  const std::size_t r = v.rank();
  std::vector<Subspace> generators{Subspace::zero(r), Subspace::full(r)};
  for (auto ray : sigma.ray_indices) {
    for (const auto& s : v.filtration(ray).steps()) generators.push_back(s.space);
  }
  auto add = [](std::vector<Subspace>& set, const Subspace& s) {
    if (std::find(set.begin(), set.end(), s) != set.end()) return false;
    set.push_back(s);
    return true;
  };
  std::vector<Subspace> lattice;
  for (const auto& g : generators) add(lattice, g);

  // A distributive lattice of subspaces of Q^r has length <= r, hence at
  // most 2^r elements.
  const std::size_t cap = r < 20 ? (std::size_t{1} << r) : SIZE_MAX;
  for (bool grew = true; grew;) {
    grew = false;
    const std::size_t size = lattice.size();
    for (std::size_t a = 0; a < size; ++a) {
      for (std::size_t b = a + 1; b < size; ++b) {
        grew |= add(lattice, intersect(lattice[a], lattice[b]));
        grew |= add(lattice, sum(lattice[a], lattice[b]));
        if (lattice.size() > cap) return std::nullopt;
      }
    }
  }
  for (const auto& a : lattice) {
    for (const auto& b : lattice) {
      for (const auto& c : lattice) {
        if (intersect(a, sum(b, c)) != sum(intersect(a, b), intersect(a, c))) return std::nullopt;
      }
    }
  }

  // Each join-irreducible a contributes a complement of its unique lower
  // cover (the sum of everything strictly below it).
  std::vector<Vec> basis;
  for (const auto& a : lattice) {
    if (a.is_zero()) continue;
    Subspace below = Subspace::zero(r);
    for (const auto& b : lattice) {
      if (b != a && a.contains(b)) below = sum(below, b);
    }
    if (below == a) continue;
    for (auto& x : complement_within(below, a).basis_vectors()) basis.push_back(std::move(x));
  }
  if (basis.size() != r || rank(Mat::from_rows(basis, r)) != r) return std::nullopt;
  for (const auto& g : generators) {
    std::vector<Vec> inside;
    for (const auto& x : basis) {
      if (g.contains(x)) inside.push_back(x);
    }
    if (Subspace::span(r, inside) != g) return std::nullopt;
  }
  return basis;
}

ConeGrading grading_from_basis(const ToricBundle& v, const Cone& sigma,
                               std::span<const Vec> basis) {
  const auto dual = dual_basis(v.fan(), sigma);
  std::map<Character, std::vector<Vec>> buckets;
  for (const auto& b : basis) {
    Coords levels;
    for (auto ray : sigma.ray_indices) {
      const auto& steps = v.filtration(ray).steps();
      std::int64_t level = steps.front().threshold;
      for (std::size_t k = 0; k + 1 < steps.size() && steps[k].space.contains(b); ++k) {
        level = steps[k + 1].threshold;
      }
      levels.push_back(level);
    }
    buckets[character_at(dual, levels)].push_back(b);
  }
  ConeGrading g{sigma, {}};
  for (auto& [u, vecs] : buckets) g.pieces.emplace(u, Subspace::span(v.rank(), vecs));
  return g;
}

CompatibilityVerdict is_vector_bundle(const ToricBundle& v, const GradingOptions& opts) {
  CompatibilityVerdict out;
  const auto& cones = v.fan().max_cones;
  for (std::size_t c = 0; c < cones.size(); ++c) {
    auto res = cone_grading(v, cones[c], opts);
    if (res.status != GradingStatus::kGraded) {
      out.status = res.status;
      out.failing_cone = c;
      out.certificate = std::move(res.certificate);
      out.gradings.clear();
      return out;
    }
    out.gradings.push_back(std::move(*res.grading));
  }
  return out;
}

ChernData chern_data_from_gradings(const std::vector<ConeGrading>& gradings) {
  ChernData d;
  for (const auto& g : gradings) {
    std::vector<std::pair<Character, std::size_t>> cone;
    for (const auto& [u, piece] : g.pieces) cone.emplace_back(u, piece.dim());
    d.per_cone.push_back(std::move(cone));
  }
  return d;
}

ChernData equivariant_chern_data(const ToricBundle& v, const GradingOptions& opts) {
  auto verdict = is_vector_bundle(v, opts);
  if (!verdict.compatible()) {
    throw std::invalid_argument("equivariant_chern_data: bundle is not compatible at cone " +
                                std::to_string(*verdict.failing_cone));
  }
  return chern_data_from_gradings(verdict.gradings);
}

}  // namespace tvb
