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

#ifndef CTXLAB_ENUMERATE_HPP
#define CTXLAB_ENUMERATE_HPP

#include <algorithm>
#include <concepts>
#include <cstdint>
#include <future>
#include <limits>
#include <vector>

#include "ctxlab/error.hpp"

namespace ctxlab {

/// Value of ±1 variable `var` in assignment `index` over `n_vars` variables.
/// Variable 0 is the most significant bit and a clear bit means +1, so
/// increasing indices enumerate assignments lexicographically with +1
/// ahead of -1.
constexpr int spin(std::uint64_t index, unsigned var, unsigned n_vars) {
  return (index >> (n_vars - 1 - var)) & 1u ? -1 : 1;
}

struct ArgMax {
  long long value = std::numeric_limits<long long>::min();
  std::uint64_t index = 0;
};

/// max over all 2^n_vars assignments of `eval(index)`. Ties go to the
/// smallest index. With `partitions > 1` the index range is split into
/// contiguous blocks searched concurrently; the result is identical.
template <class Eval>
  requires std::invocable<const Eval&, std::uint64_t>
ArgMax exhaustive_argmax(unsigned n_vars, const Eval& eval, unsigned partitions = 1) {
  if (n_vars >= 63) throw InvalidArgument("exhaustive_argmax: too many variables");
  const std::uint64_t total = std::uint64_t{1} << n_vars;
  partitions = std::clamp<unsigned>(partitions, 1, static_cast<unsigned>(std::min<std::uint64_t>(total, 64)));

  auto scan = [&eval](std::uint64_t lo, std::uint64_t hi) {
    ArgMax best;
    for (std::uint64_t i = lo; i < hi; ++i) {
      const long long v = static_cast<long long>(eval(i));
      if (v > best.value) best = {v, i};
    }
    return best;
  };

  if (partitions == 1) return scan(0, total);

  std::vector<std::future<ArgMax>> parts;
  const std::uint64_t block = (total + partitions - 1) / partitions;
  for (std::uint64_t lo = 0; lo < total; lo += block) {
    parts.push_back(std::async(std::launch::async, scan, lo, std::min(total, lo + block)));
  }
  ArgMax best;
  for (auto& f : parts) {
    const ArgMax r = f.get();
    // Blocks arrive in index order, so strict > keeps the smallest index.
    if (r.value > best.value) best = r;
  }
  return best;
}

}  // namespace ctxlab

#endif  // CTXLAB_ENUMERATE_HPP
