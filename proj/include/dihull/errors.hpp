/*
 * Copyright 2026 The dihull authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#pragma once

#include <stdexcept>
#include <string>

namespace dihull {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Input-side failures (exit code 2 at the CLI).
struct ParseError : Error {
  using Error::Error;
};
struct ValidationError : Error {
  using Error::Error;
};
struct DimensionMismatch : Error {
  using Error::Error;
};
struct IndexOutOfRange : Error {
  using Error::Error;
};
struct OverflowError : Error {
  using Error::Error;
};
struct EmptySetError : Error {
  using Error::Error;
};
struct GridMismatch : Error {
  using Error::Error;
};

// The affine combination requested is not a base point.
struct OffGridCombination : Error {
  using Error::Error;
};

// A discretized candidate fell outside the ample cone; the base set is too
// coarse for the requested operation.
struct AmplenessLost : Error {
  using Error::Error;
};

// Maps handed to common_fixed must commute.
struct CommutationFailure : Error {
  using Error::Error;
};

// The counterexample enumeration ran out of candidates within its bounds.
struct SearchExhausted : Error {
  using Error::Error;
};

// Internal-invariant failures: these must not occur on certified inputs.
struct NonConvergence : Error {
  using Error::Error;
};
struct DualFormulaMismatch : Error {
  using Error::Error;
};

}  // namespace dihull
