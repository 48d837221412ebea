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

#include <string>
#include <vector>

#include "cg/ballgeom.hpp"
#include "cg/poset.hpp"
#include "cg/setfam.hpp"

namespace cg {

inline constexpr const char* kFormatVersion = "cg-format/1";

struct LabeledSpace {
  ClosureSpace space;
  std::vector<std::string> labels;
};

// {"n", "labels", "closed"}; closed sets sorted by size, then mask, each
// listing element indices in ascending order.
std::string writeGeometry(const ClosureSpace& f, const std::vector<std::string>& labels = {});
// Rejects documents that are not closure spaces and J-set-only dumps.
LabeledSpace readGeometry(const std::string& text);

struct RawFamily {
  int n = 0;
  std::vector<std::uint64_t> masks;
  std::vector<std::string> labels;
};
// Parses the geometry layout without any closure checks.
RawFamily readRawFamily(const std::string& text);

// Same layout with "jsets_only": true; the listed sets are not a closure
// space and readGeometry refuses them.
std::string writeJSets(int n, const std::vector<std::vector<int>>& jsets, const std::vector<std::string>& labels);

// {"m", "labels", "covers"}; covers sorted.
std::string writePoset(const Poset& p);
Poset readPoset(const std::string& text);

// {"dim", "balls": [{"label", "center", "radius"}]}
std::string writeBalls(const BallConfig& c);
BallConfig readBalls(const std::string& text);

// Hasse diagram, bottom to top.
std::string toDot(const Poset& p);

std::string readFile(const std::string& path);
void writeFile(const std::string& path, const std::string& text);

}  // namespace cg
