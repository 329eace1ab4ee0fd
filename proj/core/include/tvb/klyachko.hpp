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

#ifndef TVB_KLYACHKO_HPP
#define TVB_KLYACHKO_HPP

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "tvb/fan.hpp"
#include "tvb/subspace.hpp"

namespace tvb {

/// One jump of a filtration: for thresholds above `threshold` (and up to the
/// next step's threshold) the filtration equals `space`.
struct FiltrationStep {
  std::int64_t threshold = 0;
  Subspace space;

  friend bool operator==(const FiltrationStep&, const FiltrationStep&) = default;
};

/// A decreasing, exhaustive, separated Z-filtration E(i) of Q^r.
///
/// Encoded as steps (j_1, V_1), ..., (j_m, V_m) with j strictly increasing
/// and V strictly decreasing: E(i) = Q^r for i <= j_1, E(i) = V_k for
/// j_k < i <= j_{k+1}, and E(i) = V_m = {0} for i > j_m. The tangent bundle
/// of P^n, for instance, is [(0, <rho>), (1, {0})] at each ray.
class Filtration {
 public:
  /// Sorts by threshold, drops steps that do not change the value, and
  /// appends {0} one past the last threshold when the data never reaches it.
  /// Throws std::invalid_argument when the subspaces are not weakly
  /// decreasing, a threshold repeats with different subspaces, ambient
  /// dimensions disagree, or no step is given.
  static Filtration normalize(std::size_t rank, std::vector<FiltrationStep> raw);

  /// Full space for i <= jump, zero above.
  static Filtration single_jump(std::size_t rank, std::int64_t jump);

  std::size_t rank() const { return rank_; }
  const std::vector<FiltrationStep>& steps() const { return steps_; }
  std::vector<std::int64_t> thresholds() const;

  /// E(i).
  Subspace at(std::int64_t i) const;

  /// Every threshold moved by `shift`.
  Filtration shifted(std::int64_t shift) const;
  /// Every subspace replaced by its image under the invertible map g.
  Filtration transformed(const Mat& g) const;

  friend bool operator==(const Filtration&, const Filtration&) = default;

 private:
  std::size_t rank_ = 0;
  std::vector<FiltrationStep> steps_;
};

/// Convenience: the raw-steps entry point of Filtration::normalize.
Filtration normalize_filtration(std::size_t rank, std::vector<FiltrationStep> raw);

/// E^rho(i) for filtration F.
Subspace eval_filtration(const Filtration& f, std::int64_t i);

/// A toric vector bundle in Klyachko form: one filtration of Q^rank per ray.
class ToricBundle {
 public:
  /// Throws std::invalid_argument when the fan does not validate, the number
  /// of filtrations differs from the number of rays, or a filtration has the
  /// wrong rank.
  ToricBundle(Fan fan, std::size_t rank, std::vector<Filtration> filtrations);

  const Fan& fan() const { return fan_; }
  std::size_t rank() const { return rank_; }
  const std::vector<Filtration>& filtrations() const { return filts_; }
  const Filtration& filtration(std::size_t ray) const { return filts_.at(ray); }

  friend bool operator==(const ToricBundle&, const ToricBundle&) = default;

 private:
  Fan fan_;
  std::size_t rank_ = 0;
  std::vector<Filtration> filts_;
};

/// O(sum a_rho D_rho): rank one, jump at a_rho on ray rho.
ToricBundle line_bundle(const Fan& f, std::span<const std::int64_t> a);
/// The trivial line bundle (all jumps at 0).
ToricBundle trivial_line_bundle(const Fan& f);

/// Tangent bundle, with E = N ⊗ Q and filtration [(0, <rho>), (1, {0})].
ToricBundle tangent_bundle(const Fan& f);

/// Blockwise direct sum; v's coordinates come first.
ToricBundle direct_sum(const ToricBundle& v, const ToricBundle& w);

/// v ⊗ O(sum a_rho D_rho): thresholds at ray rho move by a_rho.
ToricBundle tensor_line(const ToricBundle& v, std::span<const std::int64_t> a);

/// The M-grading E = ⊕ E_u of one maximal cone.
struct ConeGrading {
  Cone cone;
  std::map<Character, Subspace> pieces;  // nonzero pieces only
};

enum class GradingStatus { kGraded, kIncompatible, kIndeterminate };

struct GradingResult {
  GradingStatus status = GradingStatus::kGraded;
  std::optional<ConeGrading> grading;
  std::string certificate;  // first failed reconstruction identity, when not graded
  bool oracle_consulted = false;
};

struct GradingOptions {
  /// The adapted-basis oracle arbitrates greedy failures up to this rank.
  std::size_t oracle_rank_limit = 4;
  /// Test hook: visit the candidate grid in a seeded random order instead of
  /// the descending lexicographic one.
  std::optional<std::uint64_t> shuffle_seed;
};

/// Builds a grading for `sigma` from complements of F_+(u) in F(u) over the
/// threshold grid, then verifies it reconstructs every ray filtration.
/// Throws std::invalid_argument when sigma is not a smooth maximal cone.
GradingResult cone_grading(const ToricBundle& v, const Cone& sigma,
                           const GradingOptions& opts = {});

/// Checks `grading` against the filtrations of the rays of its cone: pieces
/// independent, dimensions summing to the rank, and every E^rho(i)
/// reconstructed. Returns the first failure as the reason.
Verdict verify_grading(const ToricBundle& v, const ConeGrading& grading);

/// Exhaustive arbiter for one cone.
///
/// Closes the filtration subspaces of sigma's rays under + and ∩. A common
/// adapted basis exists iff that lattice is distributive, in which case it
/// has at most 2^r elements. The basis is read off the join-irreducibles and
/// re-checked against every filtration subspace. Returns nullopt when no
/// adapted basis exists.
std::optional<std::vector<Vec>> adapted_basis_oracle(const ToricBundle& v, const Cone& sigma);

/// The grading induced by an adapted basis: each vector is placed at the
/// character whose pairing with each ray is the largest level containing it.
ConeGrading grading_from_basis(const ToricBundle& v, const Cone& sigma,
                               std::span<const Vec> basis);

struct CompatibilityVerdict {
  GradingStatus status = GradingStatus::kGraded;  // kGraded means compatible
  std::vector<ConeGrading> gradings;              // one per maximal cone when compatible
  std::optional<std::size_t> failing_cone;        // lowest failing cone index
  std::string certificate;

  bool compatible() const { return status == GradingStatus::kGraded; }
};

CompatibilityVerdict is_vector_bundle(const ToricBundle& v, const GradingOptions& opts = {});

/// Per maximal cone: characters with multiplicity dim E_u, sorted by character.
struct ChernData {
  std::vector<std::vector<std::pair<Character, std::size_t>>> per_cone;
  friend bool operator==(const ChernData&, const ChernData&) = default;
};

ChernData chern_data_from_gradings(const std::vector<ConeGrading>& gradings);

/// Throws std::invalid_argument when v is not compatible.
ChernData equivariant_chern_data(const ToricBundle& v, const GradingOptions& opts = {});

}  // namespace tvb

#endif  // TVB_KLYACHKO_HPP
