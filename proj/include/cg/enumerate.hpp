// Copyright 2026 The Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <string>
#include <vector>

#include "cg/setfam.hpp"

namespace cg {

inline constexpr int kMaxCanonicalN = 7;
inline constexpr int kMaxEnumerateN = 6;

// Lexicographically least byte string over all relabelings: n, then the
// member masks in ascending numeric order, one byte each. n <= 7.
std::vector<std::uint8_t> canonicalForm(const ClosureSpace& f);

// 12 hex digits of the FNV-1a hash of the canonical form.
std::string canonicalHash(const std::vector<std::uint8_t>& form);

// Relabels element i as perm[i].
ClosureSpace relabel(const ClosureSpace& f, const std::vector<int>& perm);

struct EnumOptions {
  int threads = 1;
};

// Emits one representative per isomorphism class of convex geometries on
// n <= 6 elements and returns the number emitted. Emission order is
// deterministic and does not depend on the thread count. A null callback
// only counts.
std::uint64_t enumerateConvexGeometries(int n, const std::function<void(const ClosureSpace&)>& emit,
                                        const EnumOptions& opts = {});

// All classes for n <= 5, sorted by canonical form.
std::vector<ClosureSpace> allConvexGeometries(int n);

// cdim -> number of classes. n <= 6.
std::map<int, std::uint64_t> countByCdim(int n, const EnumOptions& opts = {});

}  // namespace cg
