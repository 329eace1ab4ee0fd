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

#include "tvb/cohiggs.hpp"

#include <stdexcept>

namespace tvb {

namespace {

void check_tuple_shape(const ToricBundle& v, std::span<const Mat> tuple) {
  if (tuple.size() != v.fan().n) {
    throw std::invalid_argument("field: tuple has " + std::to_string(tuple.size()) +
                                " matrices, lattice rank is " + std::to_string(v.fan().n));
  }
  for (const auto& a : tuple) {
    if (a.rows() != v.rank() || a.cols() != v.rank()) {
      throw std::invalid_argument("field: matrices must be " + std::to_string(v.rank()) + "x" +
                                  std::to_string(v.rank()));
    }
  }
}

}  // namespace

FieldVerdict validate_field(const ToricBundle& v, std::span<const Mat> tuple) {
  check_tuple_shape(v, tuple);
  FieldVerdict out;
  for (std::size_t j = 0; j < tuple.size(); ++j) {
    for (std::size_t ray = 0; ray < v.filtrations().size(); ++ray) {
      for (const auto& step : v.filtration(ray).steps()) {
        for (std::size_t i = 0; i < step.space.dim(); ++i) {
          if (!step.space.contains(tuple[j].apply(step.space.basis().row(i)))) {
            out.filtration_violations.push_back({j, ray, step.threshold});
            break;
          }
        }
      }
    }
  }
  for (std::size_t j = 0; j < tuple.size(); ++j) {
    for (std::size_t k = j + 1; k < tuple.size(); ++k) {
      if (!commutator(tuple[j], tuple[k]).is_zero()) out.commutator_violations.push_back({j, k});
    }
  }
  return out;
}

ToricCoHiggsField field_from_vector_field(const ToricBundle& v, std::span<const Rat> a) {
  if (a.size() != v.fan().n) {
    throw std::invalid_argument("field_from_vector_field: one coefficient per lattice direction");
  }
  ToricCoHiggsField fld{v, {}};
  for (const auto& aj : a) fld.tuple.push_back(aj * Mat::identity(v.rank()));
  return fld;
}

ChartExpansion chart_expansion(const ToricCoHiggsField& fld, const Cone& sigma) {
  check_tuple_shape(fld.bundle, fld.tuple);
  ChartExpansion out{sigma, dual_basis(fld.bundle.fan(), sigma), {}};
  const std::size_t r = fld.bundle.rank();
  for (const auto& u : out.monomials) {
    // t_j d/dt_j = sum_k <u^k, e_j> z_k d/dz_k on this chart.
    Mat m(r, r);
    for (std::size_t j = 0; j < u.coords.size(); ++j) {
      if (u.coords[j] != 0) m += Rat(u.coords[j]) * fld.tuple[j];
    }
    out.coefficients.push_back(std::move(m));
  }
  return out;
}

std::vector<Mat> tuple_from_chart(const Fan& f, const ChartExpansion& chart) {
  const std::size_t n = f.n;
  if (chart.coefficients.size() != n) throw std::invalid_argument("tuple_from_chart: wrong size");
  const std::size_t r = n == 0 ? 0 : chart.coefficients.front().rows();
  std::vector<Mat> tuple(n, Mat(r, r));
  for (std::size_t k = 0; k < n; ++k) {
    const auto& rho = f.rays.at(chart.cone.ray_indices.at(k));
    for (std::size_t j = 0; j < n; ++j) {
      if (rho.coords[j] != 0) tuple[j] += Rat(rho.coords[j]) * chart.coefficients[k];
    }
  }
  return tuple;
}

IntegrabilityVerdict verify_integrability(const ToricCoHiggsField& fld) {
  const auto& cones = fld.bundle.fan().max_cones;
  for (std::size_t c = 0; c < cones.size(); ++c) {
    const ChartExpansion chart = chart_expansion(fld, cones[c]);
    const auto& m = chart.coefficients;
    for (std::size_t k = 0; k < m.size(); ++k) {
      for (std::size_t l = k + 1; l < m.size(); ++l) {
        Mat comm = commutator(m[k], m[l]);
        if (!comm.is_zero()) return {false, c, k, l, std::move(comm)};
      }
    }
  }
  return {};
}

CanonicalPair canonical_pair(const Fan& f) {
  const std::vector<std::int64_t> zeros(f.rays.size(), 0);
  return canonical_pair(f, zeros);
}

CanonicalPair canonical_pair(const Fan& f, std::span<const std::int64_t> o_shift) {
  CanonicalPair out{direct_sum(tangent_bundle(f), line_bundle(f, o_shift)), {}};
  const std::size_t n = f.n;
  for (std::size_t j = 0; j < n; ++j) out.tuple.push_back(Mat::unit(n + 1, n, j));
  return out;
}

ClassificationReport classify(const ToricBundle& v, const GradingOptions& opts) {
  ClassificationReport rep;
  rep.n = v.fan().n;
  rep.rank = v.rank();
  rep.compatibility = is_vector_bundle(v, opts);
  if (!rep.compatibility.compatible()) {
    rep.warnings.push_back(
        "filtrations are not a compatible Klyachko datum; results describe the filtration data "
        "only");
  } else {
    rep.chern = chern_data_from_gradings(rep.compatibility.gradings);
  }
  rep.algebra = filtered_endos(v);
  rep.commutative = is_commutative(rep.algebra);
  rep.center = center(rep.algebra);
  rep.ambient_parameters = rep.n * rep.algebra.dim();
  if (rep.commutative) {
    for (std::size_t j = 0; j < rep.n; ++j) {
      for (const auto& a : rep.algebra.basis) {
        std::vector<Mat> tuple(rep.n, Mat(rep.rank, rep.rank));
        tuple[j] = a;
        rep.generators.push_back(std::move(tuple));
      }
    }
  } else {
    rep.equations = tuple_variety_equations(rep.algebra, rep.n == 0 ? 1 : rep.n);
  }
  return rep;
}

}  // namespace tvb
