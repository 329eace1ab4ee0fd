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

#include "tvb/endalg.hpp"

#include <algorithm>
#include <stdexcept>

namespace tvb {

std::optional<Vec> FilteredEndAlgebra::coordinates(const Mat& m) const {
  if (m.rows() != rank || m.cols() != rank) return std::nullopt;
  // The basis is in vectorized RREF: the coefficient of A_d is m's entry at
  // A_d's pivot position.
  Vec coords(basis.size());
  Mat rest = m;
  for (std::size_t d = 0; d < basis.size(); ++d) {
    const auto& flat = basis[d].flat();
    const auto pivot = static_cast<std::size_t>(
        std::find_if(flat.begin(), flat.end(), [](const Rat& x) { return !x.is_zero(); }) -
        flat.begin());
    coords[d] = m.flat()[pivot];
    if (!coords[d].is_zero()) rest -= coords[d] * basis[d];
  }
  if (!rest.is_zero()) return std::nullopt;
  return coords;
}

Vec StructureConstants::multiply(std::span<const Rat> x, std::span<const Rat> y) const {
  const std::size_t dim = table.size();
  Vec out(dim);
  for (std::size_t a = 0; a < dim; ++a) {
    if (x[a].is_zero()) continue;
    for (std::size_t b = 0; b < dim; ++b) {
      if (y[b].is_zero()) continue;
      const Rat xy = x[a] * y[b];
      for (std::size_t d = 0; d < dim; ++d) {
        if (!table[a][b][d].is_zero()) out[d] += xy * table[a][b][d];
      }
    }
  }
  return out;
}

bool TupleVarietyEqs::satisfied_by(std::span<const Vec> tuple) const {
  if (tuple.size() != n) throw std::invalid_argument("tuple length differs from n");
  for (const auto& eq : equations) {
    const Vec bx = eq.form.transpose().apply(tuple[eq.j]);  // x^T B
    if (!dot(bx, tuple[eq.k]).is_zero()) return false;
  }
  return true;
}

FilteredEndAlgebra filtered_endos(const ToricBundle& v) {
  const std::size_t r = v.rank();
  std::vector<Subspace> distinct;
  for (const auto& f : v.filtrations()) {
    for (const auto& step : f.steps()) {
      if (step.space.is_zero() || step.space.is_full()) continue;
      if (std::find(distinct.begin(), distinct.end(), step.space) == distinct.end()) {
        distinct.push_back(step.space);
      }
    }
  }
  std::vector<MatConstraint> constraints;
  for (const auto& s : distinct) {
    for (auto& w : s.basis_vectors()) constraints.push_back({std::move(w), s});
  }
  return FilteredEndAlgebra{r, solve_mat_constraints(constraints, r)};
}

bool preserves_filtrations(const ToricBundle& v, const Mat& a) {
  for (const auto& f : v.filtrations()) {
    for (const auto& step : f.steps()) {
      for (std::size_t i = 0; i < step.space.dim(); ++i) {
        if (!step.space.contains(a.apply(step.space.basis().row(i)))) return false;
      }
    }
  }
  return true;
}

bool is_commutative(const FilteredEndAlgebra& alg) {
  for (std::size_t a = 0; a < alg.dim(); ++a) {
    for (std::size_t b = a + 1; b < alg.dim(); ++b) {
      if (!commutator(alg.basis[a], alg.basis[b]).is_zero()) return false;
    }
  }
  return true;
}

std::vector<Mat> center(const FilteredEndAlgebra& alg) {
  const std::size_t dim = alg.dim();
  const std::size_t r2 = alg.rank * alg.rank;
  // Unknowns z_a; equations: every entry of sum_a z_a [A_a, A_b], for each b.
  std::vector<Vec> rows;
  for (std::size_t b = 0; b < dim; ++b) {
    std::vector<Mat> comms;
    comms.reserve(dim);
    for (std::size_t a = 0; a < dim; ++a) comms.push_back(commutator(alg.basis[a], alg.basis[b]));
    for (std::size_t e = 0; e < r2; ++e) {
      Vec row(dim);
      for (std::size_t a = 0; a < dim; ++a) row[a] = comms[a].flat()[e];
      if (!is_zero(row)) rows.push_back(std::move(row));
    }
  }
  const std::vector<Vec> solutions = nullspace(Mat::from_rows(rows, dim));
  std::vector<Mat> elems;
  for (const auto& z : solutions) {
    Mat m(alg.rank, alg.rank);
    for (std::size_t a = 0; a < dim; ++a) {
      if (!z[a].is_zero()) m += z[a] * alg.basis[a];
    }
    elems.push_back(std::move(m));
  }
  return canonical_span(elems, alg.rank, alg.rank);
}

StructureConstants structure_constants(const FilteredEndAlgebra& alg) {
  const std::size_t dim = alg.dim();
  StructureConstants sc;
  sc.table.assign(dim, std::vector<Vec>(dim));
  for (std::size_t a = 0; a < dim; ++a) {
    for (std::size_t b = 0; b < dim; ++b) {
      auto coords = alg.coordinates(alg.basis[a] * alg.basis[b]);
      if (!coords) {
        throw std::logic_error("structure_constants: product of basis elements " +
                               std::to_string(a) + " and " + std::to_string(b) +
                               " leaves the algebra");
      }
      sc.table[a][b] = std::move(*coords);
    }
  }
  return sc;
}

TupleVarietyEqs tuple_variety_equations(const FilteredEndAlgebra& alg, std::size_t n) {
  if (n == 0) throw std::invalid_argument("tuple_variety_equations: n must be at least 1");
  const std::size_t dim = alg.dim();
  TupleVarietyEqs eqs{n, dim, {}};
  const StructureConstants sc = structure_constants(alg);
  // [sum x_a A_a, sum y_b A_b] = sum_d (sum_ab x_a y_b (c_abd - c_bad)) A_d
  std::vector<Mat> forms;
  for (std::size_t d = 0; d < dim; ++d) {
    Mat form(dim, dim);
    for (std::size_t a = 0; a < dim; ++a)
      for (std::size_t b = 0; b < dim; ++b) form(a, b) = sc.table[a][b][d] - sc.table[b][a][d];
    forms.push_back(std::move(form));
  }
  for (std::size_t j = 0; j < n; ++j) {
    for (std::size_t k = j + 1; k < n; ++k) {
      for (std::size_t d = 0; d < dim; ++d) {
        if (!forms[d].is_zero()) eqs.equations.push_back({j, k, d, forms[d]});
      }
    }
  }
  return eqs;
}

}  // namespace tvb
