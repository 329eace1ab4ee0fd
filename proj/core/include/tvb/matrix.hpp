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

#ifndef TVB_MATRIX_HPP
#define TVB_MATRIX_HPP

#include <cstddef>
#include <initializer_list>
#include <iosfwd>
#include <optional>
#include <span>
#include <vector>

#include "tvb/rational.hpp"

namespace tvb {

using Vec = std::vector<Rat>;

/// Dense row-major matrix over Q.
class Mat {
 public:
  Mat() = default;
  Mat(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

  /// Builds from nested rows; all rows must have equal length.
  Mat(std::initializer_list<std::initializer_list<Rat>> rows);

  static Mat from_rows(std::span<const Vec> rows, std::size_t cols);
  static Mat identity(std::size_t n);
  /// The matrix unit with a single 1 at (i, j).
  static Mat unit(std::size_t n, std::size_t i, std::size_t j);
  /// Row-major reshape of a length rows*cols vector.
  static Mat reshape(const Vec& flat, std::size_t rows, std::size_t cols);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool empty() const { return data_.empty(); }

  Rat& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const Rat& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  std::span<const Rat> row(std::size_t i) const { return {data_.data() + i * cols_, cols_}; }
  std::span<Rat> row(std::size_t i) { return {data_.data() + i * cols_, cols_}; }
  Vec row_vec(std::size_t i) const;
  Vec col_vec(std::size_t j) const;

  /// Row-major flattening, the inverse of reshape().
  const Vec& flat() const { return data_; }

  bool is_zero() const;
  Mat transpose() const;
  Vec apply(std::span<const Rat> v) const;

  Mat& operator+=(const Mat& o);
  Mat& operator-=(const Mat& o);
  Mat& operator*=(const Rat& s);

  friend Mat operator+(Mat a, const Mat& b) { return a += b; }
  friend Mat operator-(Mat a, const Mat& b) { return a -= b; }
  friend Mat operator*(Mat a, const Rat& s) { return a *= s; }
  friend Mat operator*(const Rat& s, Mat a) { return a *= s; }
  friend Mat operator*(const Mat& a, const Mat& b);

  friend bool operator==(const Mat&, const Mat&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  Vec data_;
};

std::ostream& operator<<(std::ostream& os, const Mat& m);

/// AB - BA.
Mat commutator(const Mat& a, const Mat& b);

Rat dot(std::span<const Rat> a, std::span<const Rat> b);
bool is_zero(std::span<const Rat> v);

struct RrefResult {
  Mat reduced;
  std::vector<std::size_t> pivots;  // pivot column of each nonzero row
};

/// Gauss-Jordan elimination; zero rows are kept at the bottom.
RrefResult rref_with_pivots(Mat m);

/// The unique reduced row echelon form of `m` (same shape as `m`).
Mat rref(const Mat& m);

std::size_t rank(const Mat& m);

Rat determinant(const Mat& m);

/// Inverse of a square matrix, or nullopt when singular.
std::optional<Mat> inverse(const Mat& m);

/// Basis of {x : m x = 0}, one vector per free column, free columns ascending.
std::vector<Vec> nullspace(const Mat& m);

}  // namespace tvb

#endif  // TVB_MATRIX_HPP
