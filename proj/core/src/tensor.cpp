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

#include "anticart/tensor.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <numeric>

#include "anticart/error.hpp"
#include "json_io.hpp"

namespace anticart {

namespace {

size_t volume(const std::vector<int>& shape) {
  size_t n = 1;
  for (int d : shape) n *= static_cast<size_t>(d);
  return n;
}

}  // namespace

Tensor::Tensor() : data_{Complex(1.0)} {}

Tensor::Tensor(std::vector<int> shape, std::vector<Complex> data, Complex scalar)
    : shape_(std::move(shape)), data_(std::move(data)), scalar_(scalar) {
  for (int d : shape_) {
    if (d <= 0) throw DimensionMismatch("tensor dimensions must be positive");
  }
  if (data_.size() != volume(shape_)) {
    throw DimensionMismatch("data length " + std::to_string(data_.size()) +
                            " does not match shape volume " + std::to_string(volume(shape_)));
  }
  if (std::isnan(scalar_.real()) || std::isnan(scalar_.imag())) {
    throw FormatError("tensor scalar is NaN");
  }
}

Tensor Tensor::zeros(std::vector<int> shape) {
  size_t n = volume(shape);
  return Tensor(std::move(shape), std::vector<Complex>(n));
}

Tensor Tensor::scalar_value(Complex value) { return Tensor({}, {value}); }

Tensor Tensor::identity(int dim) {
  std::vector<Complex> data(static_cast<size_t>(dim) * dim);
  for (int i = 0; i < dim; ++i) data[static_cast<size_t>(i) * dim + i] = 1.0;
  return Tensor({dim, dim}, std::move(data));
}

Tensor Tensor::from_matrix(int dim, std::span<const Complex> row_major) {
  if (row_major.size() != static_cast<size_t>(dim) * dim) {
    throw DimensionMismatch("matrix data must have " + std::to_string(dim * dim) + " entries");
  }
  std::vector<Complex> data(row_major.size());
  for (int out = 0; out < dim; ++out) {
    for (int in = 0; in < dim; ++in) {
      data[static_cast<size_t>(in) * dim + out] = row_major[static_cast<size_t>(out) * dim + in];
    }
  }
  return Tensor({dim, dim}, std::move(data));
}

std::vector<Complex> Tensor::values() const {
  std::vector<Complex> out(data_);
  if (scalar_ != Complex(1.0)) {
    for (auto& x : out) x *= scalar_;
  }
  return out;
}

Tensor Tensor::folded() const { return Tensor(shape_, values()); }

Tensor Tensor::conj() const {
  std::vector<Complex> out(data_.size());
  std::transform(data_.begin(), data_.end(), out.begin(), [](Complex x) { return std::conj(x); });
  return Tensor(shape_, std::move(out), std::conj(scalar_));
}

Tensor Tensor::scaled(Complex factor) const { return Tensor(shape_, data_, scalar_ * factor); }

Tensor Tensor::reshaped(std::vector<int> shape) const {
  return Tensor(std::move(shape), data_, scalar_);
}

double Tensor::norm() const {
  double sum = 0.0;
  for (const auto& x : data_) sum += std::norm(x);
  return std::sqrt(sum) * std::abs(scalar_);
}

double max_abs_diff(const Tensor& a, const Tensor& b) {
  if (a.shape() != b.shape()) throw ShapeMismatch("cannot compare tensors of different shapes");
  auto va = a.values();
  auto vb = b.values();
  double worst = 0.0;
  for (size_t i = 0; i < va.size(); ++i) worst = std::max(worst, std::abs(va[i] - vb[i]));
  return worst;
}

double relative_error(const Tensor& a, const Tensor& b) {
  if (a.shape() != b.shape()) throw ShapeMismatch("cannot compare tensors of different shapes");
  auto va = a.values();
  auto vb = b.values();
  double diff = 0.0;
  for (size_t i = 0; i < va.size(); ++i) diff += std::norm(va[i] - vb[i]);
  double scale = std::max({a.norm(), b.norm(), 1e-300});
  if (a.norm() == 0.0 && b.norm() == 0.0) return 0.0;
  return std::sqrt(diff) / scale;
}

bool approx_equal(const Tensor& a, const Tensor& b, double tolerance, bool up_to_scalar) {
  if (a.shape() != b.shape()) return false;
  auto va = a.values();
  auto vb = b.values();
  if (up_to_scalar) {
    // factor = <b, a> / <b, b>
    Complex num = 0.0;
    double den = 0.0;
    for (size_t i = 0; i < va.size(); ++i) {
      num += std::conj(vb[i]) * va[i];
      den += std::norm(vb[i]);
    }
    if (den > 0.0) {
      Complex factor = num / den;
      for (auto& x : vb) x *= factor;
    }
  }
  double scale = std::max({1.0, a.norm(), b.norm()});
  for (size_t i = 0; i < va.size(); ++i) {
    if (std::abs(va[i] - vb[i]) > tolerance * scale) return false;
  }
  return true;
}

std::string tensor_to_json(const Tensor& t) { return detail::tensor_to_json_value(t).dump(); }

Tensor tensor_from_json(const std::string& text) {
  try {
    return detail::tensor_from_json_value(nlohmann::json::parse(text));
  } catch (const nlohmann::json::exception& e) {
    throw FormatError(std::string("tensor JSON: ") + e.what());
  }
}

}  // namespace anticart
