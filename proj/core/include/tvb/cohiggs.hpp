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

#ifndef TVB_COHIGGS_HPP
#define TVB_COHIGGS_HPP

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "tvb/endalg.hpp"
#include "tvb/klyachko.hpp"

namespace tvb {

/// A torus-invariant co-Higgs field, phi = sum_j A_j t_j d/dt_j.
///
/// `tuple[j]` is the coefficient A_j of the invariant vector field
/// t_j d/dt_j attached to the j-th standard basis vector of N, acting on the
/// fiber Q^r at the base point of the open orbit.
struct ToricCoHiggsField {
  ToricBundle bundle;
  std::vector<Mat> tuple;
};

struct FiltrationViolation {
  std::size_t slot = 0;  // j
  std::size_t ray = 0;
  std::int64_t threshold = 0;  // step threshold whose subspace is not preserved
};

struct CommutatorViolation {
  std::size_t j = 0;
  std::size_t k = 0;
};

struct FieldVerdict {
  std::vector<FiltrationViolation> filtration_violations;
  std::vector<CommutatorViolation> commutator_violations;

  bool filtered() const { return filtration_violations.empty(); }
  bool commuting() const { return commutator_violations.empty(); }
  bool valid() const { return filtered() && commuting(); }
};

/// Checks every A_j against every filtration step and every pair for
/// commutation, listing all violations. Throws std::invalid_argument when the
/// tuple length is not the lattice rank or a matrix is not rank×rank.
FieldVerdict validate_field(const ToricBundle& v, std::span<const Mat> tuple);

/// s ⊗ 1 for the invariant vector field s = sum_j a_j t_j d/dt_j.
ToricCoHiggsField field_from_vector_field(const ToricBundle& v, std::span<const Rat> a);

/// phi on the affine chart of a maximal cone, phi = sum_k z_k M_k d/dz_k
/// with z_k = chi^{u^k} and M_k = sum_j <u^k, e_j> A_j.
struct ChartExpansion {
  Cone cone;
  std::vector<Character> monomials;  // u^k, the exponent of z_k
  std::vector<Mat> coefficients;     // M_k
};

/// Throws std::invalid_argument for a cone that is not smooth and maximal.
ChartExpansion chart_expansion(const ToricCoHiggsField& fld, const Cone& sigma);

/// Recovers (A_j) from a chart expansion: A_j = sum_k (rho_k)_j M_k.
std::vector<Mat> tuple_from_chart(const Fan& f, const ChartExpansion& chart);

struct IntegrabilityVerdict {
  bool valid = true;
  std::optional<std::size_t> cone;  // first chart with a nonzero commutator
  std::size_t k = 0;
  std::size_t l = 0;
  Mat commutator;
};

/// Chart-wise check that [M_k, M_l] = 0 on every maximal cone. Independent
/// of validate_field's commutator test, which works in the invariant frame.
IntegrabilityVerdict verify_integrability(const ToricCoHiggsField& fld);

/// TX ⊕ O_X with O_X linearized by O(sum a_rho D_rho), together with the
/// candidate tuple A_j = E_{n,j} (tangent vector e_j goes to the O-summand
/// generator). Validity is not asserted.
struct CanonicalPair {
  ToricBundle bundle;
  std::vector<Mat> tuple;
};
CanonicalPair canonical_pair(const Fan& f);
CanonicalPair canonical_pair(const Fan& f, std::span<const std::int64_t> o_shift);

struct ClassificationReport {
  std::size_t n = 0;
  std::size_t rank = 0;
  CompatibilityVerdict compatibility;
  FilteredEndAlgebra algebra;
  bool commutative = true;
  std::vector<Mat> center;
  /// n * dim(h_V): the number of affine coordinates of the tuple space.
  std::size_t ambient_parameters = 0;
  /// When h_V is commutative every tuple commutes and the fields form a free
  /// family with these generators, one per (slot, basis element).
  std::vector<std::vector<Mat>> generators;
  /// When h_V is not commutative: the commutation equations.
  std::optional<TupleVarietyEqs> equations;
  std::optional<ChernData> chern;
  std::vector<std::string> warnings;
};

/// Full classification of the invariant co-Higgs fields of v. Proceeds with
/// a warning when v is not a compatible Klyachko datum.
ClassificationReport classify(const ToricBundle& v, const GradingOptions& opts = {});

}  // namespace tvb

#endif  // TVB_COHIGGS_HPP
