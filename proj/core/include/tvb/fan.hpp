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

#ifndef TVB_FAN_HPP
#define TVB_FAN_HPP

#include <compare>
#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "tvb/matrix.hpp"

namespace tvb {

/// Primitive generator of a one-dimensional cone, an element of N.
struct Ray {
  std::vector<std::int64_t> coords;
  auto operator<=>(const Ray&) const = default;
};

/// An element of the character lattice M = N*.
struct Character {
  std::vector<std::int64_t> coords;
  auto operator<=>(const Character&) const = default;
};

/// Exact pairing <u, rho>.
std::int64_t pairing(const Character& u, const Ray& rho);

/// A cone given by indices into its fan's ray list, sorted ascending.
struct Cone {
  std::vector<std::size_t> ray_indices;
  auto operator<=>(const Cone&) const = default;
};

/// Outcome of a check that can fail without being an error.
struct Verdict {
  bool ok = true;
  std::string reason;

  static Verdict pass() { return {}; }
  static Verdict fail(std::string why) { return {false, std::move(why)}; }
  explicit operator bool() const { return ok; }
};

/// A fan given by its rays and smooth full-dimensional maximal cones.
///
/// Completeness is not required: the algorithms in this library only ever
/// look at one ray or one maximal cone at a time.
struct Fan {
  std::size_t n = 0;
  std::vector<Ray> rays;
  std::vector<Cone> max_cones;

  friend bool operator==(const Fan&, const Fan&) = default;
};

std::ostream& operator<<(std::ostream& os, const Character& u);
std::ostream& operator<<(std::ostream& os, const Ray& rho);

/// Checks rays (length n, nonzero, primitive, distinct) and maximal cones
/// (n sorted distinct valid indices, |det| = 1, no duplicates), and that
/// every ray lies in some maximal cone. With `check_faces`, also checks that
/// every pair of maximal cones meets along their common face, using exact
/// rational feasibility.
Verdict validate_fan(const Fan& f, bool check_faces = false);

/// Fan of P^n: rays e_1..e_n, -(e_1+...+e_n); maximal cones are all
/// n-subsets, in lexicographic order. Throws std::invalid_argument for n = 0.
Fan fan_pn(std::size_t n);

/// The zero-dimensional fan with one (empty) maximal cone.
Fan fan_point();

/// Product fan: rays (rho, 0) then (0, tau); cones are products, ordered
/// with f's cone index major.
Fan fan_product(const Fan& f, const Fan& g);

/// Hirzebruch surface F_a: rays (1,0), (0,1), (-1,a), (0,-1).
Fan fan_hirzebruch(std::int64_t a);

/// Index of `sigma` among f.max_cones; throws std::invalid_argument if absent.
std::size_t max_cone_index(const Fan& f, const Cone& sigma);

/// Integer n×n matrix whose column l is the l-th ray of `sigma`.
Mat ray_matrix(const Fan& f, const Cone& sigma);

/// u^1..u^n with <u^k, rho_l> = delta_kl for the rays of `sigma` in stored
/// order. Throws std::invalid_argument if sigma is not a smooth maximal cone.
std::vector<Character> dual_basis(const Fan& f, const Cone& sigma);

/// Whether the system {x : a x >= 0 row-wise, e x = c} has a rational
/// solution. Fourier-Motzkin elimination; intended for small dimensions.
bool feasible(const Mat& inequalities, const Mat& equalities, const Vec& rhs);

}  // namespace tvb

#endif  // TVB_FAN_HPP
