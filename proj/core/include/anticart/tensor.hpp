// Copyright 2026 The Anticart Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <complex>
#include <span>
#include <string>
#include <vector>

namespace anticart {

using Complex = std::complex<double>;

/// Dense complex multi-array in row-major order with an explicit scalar
/// factor. The value represented is `scalar() * data()`.
class Tensor {
 public:
  /// The scalar 1.
  Tensor();
  /// Throws DimensionMismatch if `data.size()` is not the product of
  /// `shape`, or if a dimension is not positive. Throws FormatError on a NaN
  /// scalar.
  Tensor(std::vector<int> shape, std::vector<Complex> data, Complex scalar = 1.0);

  static Tensor zeros(std::vector<int> shape);
  static Tensor scalar_value(Complex value);
  /// Identity on `dim` as a [dim, dim] tensor.
  static Tensor identity(int dim);
  /// Square matrix M given row-major in column convention (out = M v),
  /// stored as a box tensor indexed [in, out], i.e. transposed.
  static Tensor from_matrix(int dim, std::span<const Complex> row_major);

  const std::vector<int>& shape() const { return shape_; }
  const std::vector<Complex>& data() const { return data_; }
  Complex scalar() const { return scalar_; }
  int rank() const { return static_cast<int>(shape_.size()); }
  size_t size() const { return data_.size(); }

  /// `scalar() * data()`.
  std::vector<Complex> values() const;
  /// Same value with the scalar folded into the data.
  Tensor folded() const;
  Tensor conj() const;
  Tensor scaled(Complex factor) const;
  Tensor reshaped(std::vector<int> shape) const;

  /// Euclidean norm of `values()`.
  double norm() const;

 private:
  std::vector<int> shape_;
  std::vector<Complex> data_;
  Complex scalar_ = 1.0;
};

/// Largest entrywise |a - b| over the represented values. Shapes must match.
double max_abs_diff(const Tensor& a, const Tensor& b);

/// ||a - b|| / max(||a||, ||b||, tiny); 0 for two zero tensors.
double relative_error(const Tensor& a, const Tensor& b);

/// Entrywise comparison within `tolerance` (relative to the larger norm,
/// floored at 1). With `up_to_scalar`, `b` is first rescaled by the
/// least-squares factor that best matches `a`.
bool approx_equal(const Tensor& a, const Tensor& b, double tolerance, bool up_to_scalar = false);

std::string tensor_to_json(const Tensor& t);
/// Accepts data entries as [re, im] pairs or plain reals. Throws FormatError.
Tensor tensor_from_json(const std::string& text);

}  // namespace anticart
