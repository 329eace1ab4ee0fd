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

#ifndef TVB_SUBSPACE_HPP
#define TVB_SUBSPACE_HPP

#include <cstddef>
#include <iosfwd>
#include <span>
#include <vector>

#include "tvb/matrix.hpp"

namespace tvb {

/// A linear subspace of Q^n stored by its reduced row echelon basis.
///
/// The basis has no zero rows, so two subspaces are equal exactly when their
/// stored bases are equal entry-wise. Basis rows are ordered by ascending
/// pivot column.
class Subspace {
 public:
  Subspace() = default;

  static Subspace zero(std::size_t ambient);
  static Subspace full(std::size_t ambient);
  /// Span of arbitrary (possibly dependent or zero) vectors of length `ambient`.
  static Subspace span(std::size_t ambient, std::span<const Vec> vectors);
  static Subspace span(std::size_t ambient, std::initializer_list<Vec> vectors);
  /// Row space of `m`.
  static Subspace row_space(const Mat& m);

  std::size_t ambient_dim() const { return ambient_; }
  std::size_t dim() const { return basis_.rows(); }
  bool is_zero() const { return dim() == 0; }
  bool is_full() const { return dim() == ambient_; }

  const Mat& basis() const { return basis_; }
  std::vector<Vec> basis_vectors() const;
  const std::vector<std::size_t>& pivots() const { return pivots_; }

  /// `v` minus its reduction against the basis pivots; zero iff v is inside.
  Vec reduce(Vec v) const;
  bool contains(std::span<const Rat> v) const;
  bool contains(const Subspace& other) const;

  /// {y : y.x = 0 for every x in this}.
  Subspace annihilator() const;
  /// Image under the linear map x -> g x.
  Subspace image(const Mat& g) const;

  friend bool operator==(const Subspace&, const Subspace&) = default;

 private:
  Subspace(std::size_t ambient, Mat basis, std::vector<std::size_t> pivots)
      : ambient_(ambient), basis_(std::move(basis)), pivots_(std::move(pivots)) {}

  std::size_t ambient_ = 0;
  Mat basis_;
  std::vector<std::size_t> pivots_;
};

std::ostream& operator<<(std::ostream& os, const Subspace& s);

/// s ∩ t. Throws std::invalid_argument on ambient mismatch.
Subspace intersect(const Subspace& s, const Subspace& t);

/// s + t. Throws std::invalid_argument on ambient mismatch.
Subspace sum(const Subspace& s, const Subspace& t);

/// A complement c of s inside t, i.e. c ⊕ s = t.
///
/// The choice is canonical: c consists of the vectors of t that vanish on
/// every pivot column of s. Throws std::invalid_argument when s ⊄ t.
Subspace complement_within(const Subspace& s, const Subspace& t);

/// The kernel of `m` as a canonical subspace of Q^{cols}.
Subspace kernel(const Mat& m);

/// One linear condition A w ∈ target on an unknown square matrix A.
struct MatConstraint {
  Vec w;
  Subspace target;
};

/// Basis of {A in Q^{r×r} : A w ∈ V for every constraint (w, V)}.
///
/// A is vectorized row-major. Each constraint contributes the equations
/// y·(A w) = 0 for y in a basis of V's annihilator. The returned matrices are
/// the reduced row echelon basis of the solution space, in pivot order.
std::vector<Mat> solve_mat_constraints(std::span<const MatConstraint> constraints,
                                       std::size_t r);

/// Canonical basis (vectorized RREF, pivot order) of the span of `mats`.
std::vector<Mat> canonical_span(std::span<const Mat> mats, std::size_t rows, std::size_t cols);

}  // namespace tvb

#endif  // TVB_SUBSPACE_HPP
