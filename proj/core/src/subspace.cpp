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

#include "tvb/subspace.hpp"

#include <algorithm>
#include <ostream>
#include <stdexcept>
#include <string>

namespace tvb {

namespace {

void require_same_ambient(const Subspace& s, const Subspace& t, const char* op) {
  if (s.ambient_dim() != t.ambient_dim()) {
    throw std::invalid_argument(std::string(op) + ": ambient dimension mismatch (" +
                                std::to_string(s.ambient_dim()) + " vs " +
                                std::to_string(t.ambient_dim()) + ")");
  }
}

}  // namespace

Subspace Subspace::zero(std::size_t ambient) { return Subspace(ambient, Mat(0, ambient), {}); }

Subspace Subspace::full(std::size_t ambient) {
  std::vector<std::size_t> pivots(ambient);
  for (std::size_t i = 0; i < ambient; ++i) pivots[i] = i;
  return Subspace(ambient, Mat::identity(ambient), std::move(pivots));
}

Subspace Subspace::span(std::size_t ambient, std::span<const Vec> vectors) {
  return row_space(Mat::from_rows(vectors, ambient));
}

Subspace Subspace::span(std::size_t ambient, std::initializer_list<Vec> vectors) {
  return span(ambient, std::span<const Vec>(vectors.begin(), vectors.size()));
}

Subspace Subspace::row_space(const Mat& m) {
  auto [r, pivots] = rref_with_pivots(m);
  Mat basis(pivots.size(), m.cols());
  for (std::size_t i = 0; i < pivots.size(); ++i) {
    std::copy(r.row(i).begin(), r.row(i).end(), basis.row(i).begin());
  }
  return Subspace(m.cols(), std::move(basis), std::move(pivots));
}

std::vector<Vec> Subspace::basis_vectors() const {
  std::vector<Vec> out;
  out.reserve(dim());
  for (std::size_t i = 0; i < dim(); ++i) out.push_back(basis_.row_vec(i));
  return out;
}

Vec Subspace::reduce(Vec v) const {
  if (v.size() != ambient_) throw std::invalid_argument("Subspace::reduce: length mismatch");
  for (std::size_t k = 0; k < pivots_.size(); ++k) {
    const Rat coeff = v[pivots_[k]];
    if (coeff.is_zero()) continue;
    for (std::size_t j = pivots_[k]; j < ambient_; ++j) {
      if (!basis_(k, j).is_zero()) v[j] -= coeff * basis_(k, j);
    }
  }
  return v;
}

bool Subspace::contains(std::span<const Rat> v) const {
  return tvb::is_zero(reduce(Vec(v.begin(), v.end())));
}

bool Subspace::contains(const Subspace& other) const {
  require_same_ambient(*this, other, "Subspace::contains");
  for (std::size_t i = 0; i < other.dim(); ++i) {
    if (!contains(other.basis_.row(i))) return false;
  }
  return true;
}

Subspace Subspace::annihilator() const { return kernel(basis_); }

Subspace Subspace::image(const Mat& g) const {
  if (g.cols() != ambient_) throw std::invalid_argument("Subspace::image: shape mismatch");
  std::vector<Vec> imgs;
  imgs.reserve(dim());
  for (std::size_t i = 0; i < dim(); ++i) imgs.push_back(g.apply(basis_.row(i)));
  return span(g.rows(), imgs);
}

std::ostream& operator<<(std::ostream& os, const Subspace& s) {
  os << "span{";
  for (std::size_t i = 0; i < s.dim(); ++i) {
    os << (i ? ", (" : "(");
    for (std::size_t j = 0; j < s.ambient_dim(); ++j) os << (j ? "," : "") << s.basis()(i, j);
    os << ')';
  }
  return os << "} in Q^" << s.ambient_dim();
}

Subspace intersect(const Subspace& s, const Subspace& t) {
  require_same_ambient(s, t, "intersect");
  // s ∩ t = ann(ann(s) + ann(t)).
  return sum(s.annihilator(), t.annihilator()).annihilator();
}

Subspace sum(const Subspace& s, const Subspace& t) {
  require_same_ambient(s, t, "sum");
  if (s.is_zero()) return t;
  if (t.is_zero()) return s;
  Mat stacked(s.dim() + t.dim(), s.ambient_dim());
  for (std::size_t i = 0; i < s.dim(); ++i) {
    std::copy(s.basis().row(i).begin(), s.basis().row(i).end(), stacked.row(i).begin());
  }
  for (std::size_t i = 0; i < t.dim(); ++i) {
    std::copy(t.basis().row(i).begin(), t.basis().row(i).end(),
              stacked.row(s.dim() + i).begin());
  }
  return Subspace::row_space(stacked);
}

Subspace complement_within(const Subspace& s, const Subspace& t) {
  require_same_ambient(s, t, "complement_within");
  if (!t.contains(s)) throw std::invalid_argument("complement_within: s is not contained in t");
  // Reducing t's rows against s zeroes s's pivot columns; the residues span
  // t ∩ {x : x_p = 0 for every pivot p of s}, which meets s trivially.
  std::vector<Vec> residues;
  residues.reserve(t.dim());
  for (std::size_t i = 0; i < t.dim(); ++i) residues.push_back(s.reduce(t.basis().row_vec(i)));
  return Subspace::span(s.ambient_dim(), residues);
}

Subspace kernel(const Mat& m) {
  const auto basis = nullspace(m);
  return Subspace::span(m.cols(), basis);
}

std::vector<Mat> solve_mat_constraints(std::span<const MatConstraint> constraints,
                                       std::size_t r) {
  std::vector<Vec> equations;
  for (const auto& c : constraints) {
    if (c.w.size() != r || c.target.ambient_dim() != r) {
      throw std::invalid_argument("solve_mat_constraints: dimension mismatch");
    }
    if (is_zero(c.w) || c.target.is_full()) continue;
    const Subspace ann = c.target.annihilator();
    for (std::size_t k = 0; k < ann.dim(); ++k) {
      // y.(A w) = sum_{i,j} y_i w_j A_ij
      Vec eq(r * r);
      for (std::size_t i = 0; i < r; ++i) {
        const Rat& yi = ann.basis()(k, i);
        if (yi.is_zero()) continue;
        for (std::size_t j = 0; j < r; ++j) eq[i * r + j] = yi * c.w[j];
      }
      equations.push_back(std::move(eq));
    }
  }
  const Subspace solutions =
      equations.empty() ? Subspace::full(r * r) : kernel(Mat::from_rows(equations, r * r));
  std::vector<Mat> out;
  out.reserve(solutions.dim());
  for (std::size_t k = 0; k < solutions.dim(); ++k) {
    out.push_back(Mat::reshape(solutions.basis().row_vec(k), r, r));
  }
  return out;
}

std::vector<Mat> canonical_span(std::span<const Mat> mats, std::size_t rows, std::size_t cols) {
  std::vector<Vec> flat;
  flat.reserve(mats.size());
  for (const auto& m : mats) {
    if (m.rows() != rows || m.cols() != cols) {
      throw std::invalid_argument("canonical_span: shape mismatch");
    }
    flat.push_back(m.flat());
  }
  const Subspace s = Subspace::span(rows * cols, flat);
  std::vector<Mat> out;
  out.reserve(s.dim());
  for (std::size_t k = 0; k < s.dim(); ++k) {
    out.push_back(Mat::reshape(s.basis().row_vec(k), rows, cols));
  }
  return out;
}

}  // namespace tvb
