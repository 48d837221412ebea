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

#include <vector>

namespace cg {

// Strict order on 0..m-1 given as an adjacency matrix: less[i][j] is true
// iff i < j. The relation must be transitive.
using StrictOrder = std::vector<std::vector<char>>;

// A maximum antichain of the order. Exhaustive branch and bound when
// m <= exhaustiveLimit, otherwise Dilworth/Koenig via maximum bipartite
// matching on the comparability graph.
std::vector<int> maximumAntichain(const StrictOrder& less, int exhaustiveLimit = 20);

// Minimum chain cover size computed through matching (m - |max matching|).
int minimumChainCover(const StrictOrder& less);

}  // namespace cg
