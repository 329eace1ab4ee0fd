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

#ifndef TVB_ENDALG_HPP
#define TVB_ENDALG_HPP

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "tvb/klyachko.hpp"

namespace tvb {

/// The algebra of endomorphisms of Q^r preserving every E^rho(i).
///
/// `basis` is the canonical (vectorized RREF) basis of the solution space,
/// so two algebras are equal iff their bases are.
struct FilteredEndAlgebra {
  std::size_t rank = 0;
  std::vector<Mat> basis;

  std::size_t dim() const { return basis.size(); }
  /// Coordinates of `m` in `basis`; nullopt when m is outside the span.
  std::optional<Vec> coordinates(const Mat& m) const;
  bool contains(const Mat& m) const { return coordinates(m).has_value(); }
};

/// A_a A_b = sum_d table[a][b][d] A_d.
struct StructureConstants {
  std::vector<std::vector<Vec>> table;

  /// Product of two elements given in coordinates.
  Vec multiply(std::span<const Rat> x, std::span<const Rat> y) const;
};

/// One bilinear equation B(x^(j), x^(k)) = 0 between tuple slots j < k.
struct TupleEquation {
  std::size_t j = 0;
  std::size_t k = 0;
  std::size_t component = 0;  // basis index d of the commutator coordinate
  Mat form;                   // dim×dim coefficients of x^(j)_a x^(k)_b
};

/// Defining equations of the commuting n-tuples in h_V, in basis coordinates.
struct TupleVarietyEqs {
  std::size_t n = 0;
  std::size_t dim = 0;
  std::vector<TupleEquation> equations;

  std::size_t parameter_count() const { return n * dim; }
  /// Whether the coordinate tuple satisfies every equation.
  bool satisfied_by(std::span<const Vec> tuple) const;
};

/// Constraints A w ∈ V for every distinct step subspace V and every basis
/// vector w of V, solved exactly. Compatibility of v is not required.
FilteredEndAlgebra filtered_endos(const ToricBundle& v);

/// Whether `a` maps every filtration step of v into itself.
bool preserves_filtrations(const ToricBundle& v, const Mat& a);

bool is_commutative(const FilteredEndAlgebra& alg);

/// Canonical basis of {Z in span : [Z, A] = 0 for all A in span}.
std::vector<Mat> center(const FilteredEndAlgebra& alg);

/// Throws std::logic_error if the span is not closed under multiplication.
StructureConstants structure_constants(const FilteredEndAlgebra& alg);

/// Throws std::invalid_argument for n = 0. Identically vanishing forms are
/// omitted, so a commutative algebra yields no equations.
TupleVarietyEqs tuple_variety_equations(const FilteredEndAlgebra& alg, std::size_t n);

}  // namespace tvb

#endif  // TVB_ENDALG_HPP
