// Copyright 2026 The quditsim Authors
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

namespace quditsim {

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
   public:
    using std::runtime_error::runtime_error;
};

/// Operand shapes do not line up (inner dimensions, vector length, ...).
class ShapeError : public Error {
   public:
    using Error::Error;
};

/// A result would not fit the index range or the configured memory budget.
class CapacityError : public Error {
   public:
    using Error::Error;
};

/// An index (wire, basis level, ket) is out of range.
class IndexError : public Error {
   public:
    using Error::Error;
};

/// Illegal gate or circuit parameter (shift, dimension, non-unitary matrix).
class ParameterError : public Error {
   public:
    using Error::Error;
};

/// Toffoli cannot be decomposed with an intermediate qutrit on this register.
class DecompositionError : public ParameterError {
   public:
    using ParameterError::ParameterError;
};

/// Broken internal invariant (e.g. a span marker without its anchor).
class ConsistencyError : public Error {
   public:
    using Error::Error;
};

}  // namespace quditsim
