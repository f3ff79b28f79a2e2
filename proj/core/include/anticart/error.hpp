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

#include <stdexcept>
#include <string>

namespace anticart {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

#define ANTICART_DEFINE_ERROR(Name)          \
  class Name : public Error {                \
   public:                                   \
    explicit Name(const std::string& what)   \
        : Error(#Name ": " + what) {}        \
  };

// diagram-core
ANTICART_DEFINE_ERROR(UnknownBase)
ANTICART_DEFINE_ERROR(TypeMismatch)
ANTICART_DEFINE_ERROR(ZeroArity)
ANTICART_DEFINE_ERROR(FormatError)

// rewrite
ANTICART_DEFINE_ERROR(InvalidDiagram)
ANTICART_DEFINE_ERROR(ShapeMismatch)

// tensor-sem
ANTICART_DEFINE_ERROR(MissingPayload)
ANTICART_DEFINE_ERROR(DimensionMismatch)
ANTICART_DEFINE_ERROR(NotSquare)
ANTICART_DEFINE_ERROR(NotHermitian)
ANTICART_DEFINE_ERROR(ZeroNorm)

// pregroup
ANTICART_DEFINE_ERROR(UnknownWord)
ANTICART_DEFINE_ERROR(PayloadMissing)

// resource
ANTICART_DEFINE_ERROR(StateExplosion)

// protocols
ANTICART_DEFINE_ERROR(VerificationFailure)

#undef ANTICART_DEFINE_ERROR

}  // namespace anticart
