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

#include "tvb/fan.hpp"

#include <algorithm>
#include <numeric>
#include <ostream>
#include <set>
#include <sstream>
#include <stdexcept>

namespace tvb {

namespace {

std::string cone_str(const Cone& c) {
  std::ostringstream os;
  os << '{';
  for (std::size_t i = 0; i < c.ray_indices.size(); ++i) os << (i ? "," : "") << c.ray_indices[i];
  os << '}';
  return os.str();
}

void print_coords(std::ostream& os, const std::vector<std::int64_t>& v) {
  os << '(';
  for (std::size_t i = 0; i < v.size(); ++i) os << (i ? "," : "") << v[i];
  os << ')';
}

// Affine inequality sum_i coeff[i] x_i + coeff.back() >= 0.
using Affine = Vec;

void normalize(Affine& a) {
  // Scale so the first nonzero variable coefficient has magnitude 1; keeps
  // duplicates detectable.
  for (std::size_t i = 0; i + 1 < a.size(); ++i) {
    if (!a[i].is_zero()) {
      const Rat s = a[i].sign() > 0 ? a[i] : -a[i];
      for (auto& x : a) x /= s;
      return;
    }
  }
}

bool fourier_motzkin_feasible(std::vector<Affine> rows, std::size_t vars) {
  for (std::size_t v = 0; v < vars; ++v) {
    std::vector<Affine> pos, neg, next;
    for (auto& r : rows) {
      const int s = r[v].sign();
      if (s > 0) pos.push_back(std::move(r));
      else if (s < 0) neg.push_back(std::move(r));
      else next.push_back(std::move(r));
    }
    for (const auto& p : pos) {
      for (const auto& q : neg) {
        Affine c(p.size());
        const Rat pv = p[v];
        const Rat qv = -q[v];
        for (std::size_t i = 0; i < c.size(); ++i) c[i] = p[i] * qv + q[i] * pv;
        normalize(c);
        next.push_back(std::move(c));
      }
    }
    std::sort(next.begin(), next.end(), [](const Affine& a, const Affine& b) {
      return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
    });
    next.erase(std::unique(next.begin(), next.end()), next.end());
    rows = std::move(next);
  }
  return std::all_of(rows.begin(), rows.end(), [](const Affine& r) { return r.back().sign() >= 0; });
}

}  // namespace

std::int64_t pairing(const Character& u, const Ray& rho) {
  if (u.coords.size() != rho.coords.size()) {
    throw std::invalid_argument("pairing: lattice rank mismatch");
  }
  std::int64_t s = 0;
  for (std::size_t i = 0; i < u.coords.size(); ++i) s += u.coords[i] * rho.coords[i];
  return s;
}

std::ostream& operator<<(std::ostream& os, const Character& u) {
  print_coords(os, u.coords);
  return os;
}

std::ostream& operator<<(std::ostream& os, const Ray& rho) {
  print_coords(os, rho.coords);
  return os;
}

bool feasible(const Mat& inequalities, const Mat& equalities, const Vec& rhs) {
  const std::size_t vars = std::max(inequalities.cols(), equalities.cols());
  if ((inequalities.rows() && inequalities.cols() != vars) ||
      (equalities.rows() && equalities.cols() != vars) || rhs.size() != equalities.rows()) {
    throw std::invalid_argument("feasible: shape mismatch");
  }
  // Solve the equalities for pivot variables in terms of free ones.
  Mat aug(equalities.rows(), vars + 1);
  for (std::size_t i = 0; i < equalities.rows(); ++i) {
    for (std::size_t j = 0; j < vars; ++j) aug(i, j) = equalities(i, j);
    aug(i, vars) = rhs[i];
  }
  auto [red, pivots] = rref_with_pivots(aug);
  if (!pivots.empty() && pivots.back() == vars) return false;

  std::vector<std::size_t> free_vars;
  {
    std::vector<bool> is_pivot(vars, false);
    for (auto p : pivots) is_pivot[p] = true;
    for (std::size_t j = 0; j < vars; ++j) {
      if (!is_pivot[j]) free_vars.push_back(j);
    }
  }
  std::vector<Affine> rows;
  rows.reserve(inequalities.rows());
  for (std::size_t i = 0; i < inequalities.rows(); ++i) {
    Affine a(free_vars.size() + 1);
    for (std::size_t f = 0; f < free_vars.size(); ++f) a[f] = inequalities(i, free_vars[f]);
    for (std::size_t k = 0; k < pivots.size(); ++k) {
      const Rat& ap = inequalities(i, pivots[k]);
      if (ap.is_zero()) continue;
      // x_p = red(k, vars) - sum_f red(k, f) x_f
      for (std::size_t f = 0; f < free_vars.size(); ++f) a[f] -= ap * red(k, free_vars[f]);
      a.back() += ap * red(k, vars);
    }
    normalize(a);
    rows.push_back(std::move(a));
  }
  return fourier_motzkin_feasible(std::move(rows), free_vars.size());
}

Mat ray_matrix(const Fan& f, const Cone& sigma) {
  Mat m(f.n, sigma.ray_indices.size());
  for (std::size_t l = 0; l < sigma.ray_indices.size(); ++l) {
    const auto& rho = f.rays.at(sigma.ray_indices[l]);
    for (std::size_t i = 0; i < f.n; ++i) m(i, l) = rho.coords.at(i);
  }
  return m;
}

Verdict validate_fan(const Fan& f, bool check_faces) {
  std::set<Ray> seen;
  for (std::size_t i = 0; i < f.rays.size(); ++i) {
    const auto& c = f.rays[i].coords;
    std::ostringstream id;
    id << "ray " << i << ' ' << f.rays[i];
    if (c.size() != f.n) return Verdict::fail(id.str() + ": wrong length");
    std::int64_t g = 0;
    for (auto x : c) g = std::gcd(g, x);
    if (g == 0) return Verdict::fail(id.str() + ": zero vector");
    if (g != 1) return Verdict::fail(id.str() + ": not primitive");
    if (!seen.insert(f.rays[i]).second) return Verdict::fail(id.str() + ": duplicate ray");
  }
  std::vector<bool> used(f.rays.size(), false);
  std::set<Cone> cones;
  for (std::size_t k = 0; k < f.max_cones.size(); ++k) {
    const auto& idx = f.max_cones[k].ray_indices;
    const std::string id = "cone " + std::to_string(k) + ' ' + cone_str(f.max_cones[k]);
    if (idx.size() != f.n) return Verdict::fail(id + ": not full-dimensional");
    for (std::size_t l = 0; l < idx.size(); ++l) {
      if (idx[l] >= f.rays.size()) return Verdict::fail(id + ": ray index out of range");
      if (l > 0 && idx[l] <= idx[l - 1]) {
        return Verdict::fail(id + ": ray indices not sorted and distinct");
      }
      used[idx[l]] = true;
    }
    const Rat det = determinant(ray_matrix(f, f.max_cones[k]));
    if (det != Rat(1) && det != Rat(-1)) {
      return Verdict::fail(id + ": not smooth (det " + det.str() + ")");
    }
    if (!cones.insert(f.max_cones[k]).second) return Verdict::fail(id + ": duplicate cone");
  }
  for (std::size_t i = 0; i < used.size(); ++i) {
    if (!used[i]) return Verdict::fail("ray " + std::to_string(i) + ": in no maximal cone");
  }
  if (!check_faces) return Verdict::pass();

  for (std::size_t a = 0; a < f.max_cones.size(); ++a) {
    for (std::size_t b = 0; b < f.max_cones.size(); ++b) {
      if (a == b) continue;
      const auto& sa = f.max_cones[a].ray_indices;
      const auto& sb = f.max_cones[b].ray_indices;
      // Points of cone a in its own ray coordinates lambda >= 0, whose
      // coordinates in cone b are also >= 0, and which carry weight on a ray
      // of a that b lacks. Such a point exists iff the cones overlap beyond
      // their common face.
      const Mat coords_in_b = *inverse(ray_matrix(f, f.max_cones[b])) * ray_matrix(f, f.max_cones[a]);
      Mat ineq(2 * f.n, f.n);
      for (std::size_t i = 0; i < f.n; ++i) {
        ineq(i, i) = 1;
        for (std::size_t j = 0; j < f.n; ++j) ineq(f.n + i, j) = coords_in_b(i, j);
      }
      Mat eq(1, f.n);
      for (std::size_t l = 0; l < f.n; ++l) {
        if (!std::binary_search(sb.begin(), sb.end(), sa[l])) eq(0, l) = 1;
      }
      if (feasible(ineq, eq, Vec{Rat(1)})) {
        return Verdict::fail("cones " + std::to_string(a) + ' ' + cone_str(f.max_cones[a]) +
                             " and " + std::to_string(b) + ' ' + cone_str(f.max_cones[b]) +
                             " do not meet in a common face");
      }
    }
  }
  return Verdict::pass();
}

Fan fan_pn(std::size_t n) {
  if (n == 0) throw std::invalid_argument("fan_pn: n must be at least 1");
  Fan f;
  f.n = n;
  for (std::size_t i = 0; i < n; ++i) {
    Ray e{std::vector<std::int64_t>(n, 0)};
    e.coords[i] = 1;
    f.rays.push_back(std::move(e));
  }
  f.rays.push_back(Ray{std::vector<std::int64_t>(n, -1)});
  // Dropping ray `skip` from {0..n} gives each n-subset; descending skip
  // yields lexicographic order.
  for (std::size_t skip = n + 1; skip-- > 0;) {
    Cone c;
    for (std::size_t i = 0; i <= n; ++i) {
      if (i != skip) c.ray_indices.push_back(i);
    }
    f.max_cones.push_back(std::move(c));
  }
  return f;
}

Fan fan_point() {
  Fan f;
  f.max_cones.push_back(Cone{});
  return f;
}

Fan fan_product(const Fan& f, const Fan& g) {
  Fan p;
  p.n = f.n + g.n;
  for (const auto& r : f.rays) {
    Ray x{r.coords};
    x.coords.resize(p.n, 0);
    p.rays.push_back(std::move(x));
  }
  for (const auto& r : g.rays) {
    Ray x{std::vector<std::int64_t>(f.n, 0)};
    x.coords.insert(x.coords.end(), r.coords.begin(), r.coords.end());
    p.rays.push_back(std::move(x));
  }
  for (const auto& cf : f.max_cones) {
    for (const auto& cg : g.max_cones) {
      Cone c{cf.ray_indices};
      for (auto i : cg.ray_indices) c.ray_indices.push_back(f.rays.size() + i);
      p.max_cones.push_back(std::move(c));
    }
  }
  return p;
}

Fan fan_hirzebruch(std::int64_t a) {
  if (a < 0) throw std::invalid_argument("fan_hirzebruch: a must be non-negative");
  Fan f;
  f.n = 2;
  f.rays = {Ray{{1, 0}}, Ray{{0, 1}}, Ray{{-1, a}}, Ray{{0, -1}}};
  f.max_cones = {Cone{{0, 1}}, Cone{{1, 2}}, Cone{{2, 3}}, Cone{{0, 3}}};
  return f;
}

std::size_t max_cone_index(const Fan& f, const Cone& sigma) {
  const auto it = std::find(f.max_cones.begin(), f.max_cones.end(), sigma);
  if (it == f.max_cones.end()) {
    throw std::invalid_argument("cone " + cone_str(sigma) + " is not a maximal cone of the fan");
  }
  return static_cast<std::size_t>(it - f.max_cones.begin());
}

std::vector<Character> dual_basis(const Fan& f, const Cone& sigma) {
  max_cone_index(f, sigma);
  if (sigma.ray_indices.size() != f.n) {
    throw std::invalid_argument("dual_basis: cone " + cone_str(sigma) + " is not full-dimensional");
  }
  const auto inv = inverse(ray_matrix(f, sigma));
  if (!inv) throw std::invalid_argument("dual_basis: cone " + cone_str(sigma) + " is singular");
  std::vector<Character> out(f.n);
  for (std::size_t k = 0; k < f.n; ++k) {
    out[k].coords.resize(f.n);
    for (std::size_t i = 0; i < f.n; ++i) {
      const Rat& x = (*inv)(k, i);
      if (!x.is_integer()) {
        throw std::invalid_argument("dual_basis: cone " + cone_str(sigma) + " is not smooth");
      }
      out[k].coords[i] = x.to_int64();
    }
  }
  return out;
}

}  // namespace tvb
