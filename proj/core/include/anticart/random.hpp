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

#include <cstdint>
#include <random>
#include <vector>

#include "anticart/tensor.hpp"

namespace anticart {

using Rng = std::mt19937_64;

/// Entries with independent standard normal real and imaginary parts.
Tensor random_tensor(const std::vector<int>& shape, Rng& rng);

/// Real-valued variant.
Tensor random_real_tensor(const std::vector<int>& shape, Rng& rng);

/// Unitary from the QR decomposition of a complex Gaussian matrix, returned
/// row-major in column convention (out = U v).
std::vector<Complex> random_unitary(int dim, Rng& rng);

}  // namespace anticart
