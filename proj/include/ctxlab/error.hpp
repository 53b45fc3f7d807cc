// Copyright 2026 The ctxlab Authors
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

#ifndef CTXLAB_ERROR_HPP
#define CTXLAB_ERROR_HPP

#include <stdexcept>

namespace ctxlab {

/// Precondition violated by the caller (bad dimensions, out-of-range
/// parameters, malformed labels).
class InvalidArgument : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A measurement context contains observables that do not commute.
class IncompatibleObservables : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

/// Threshold search found no crossing in the scanned interval.
class NoCrossing : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace ctxlab

#endif  // CTXLAB_ERROR_HPP
