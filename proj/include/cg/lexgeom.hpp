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

#include <array>
#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "cg/poset.hpp"
#include "cg/setfam.hpp"

namespace cg {

// A point of {0..n-1}^3. Flat index is x1*n^2 + x2*n + x3.
struct LexPoint {
  std::array<int, 3> c{0, 0, 0};

  int flatIndex(int n) const { return (c[0] * n + c[1]) * n + c[2]; }
  static LexPoint fromIndex(int n, int idx);
  std::string label() const;
  friend bool operator==(const LexPoint&, const LexPoint&) = default;
};

// Coordinate priority: First = (1,2,3), Second = (2,3,1), Third = (3,1,2).
enum class LexVariant { First = 1, Second = 2, Third = 3 };

std::strong_ordering lexCompare(LexVariant v, const LexPoint& x, const LexPoint& y);

// All n^3 points in ascending order of the given lexicographic order.
std::vector<LexPoint> lexChain(LexVariant v, int n);

// Intersection of the three lexicographic down-sets of x, as a sorted list
// of flat indices. Works for any n.
std::vector<int> jSetIndices(int n, const LexPoint& x);

// Same as a Subset of the n^3 universe; requires n^3 <= 64.
Subset jSet(int n, const LexPoint& x);

// Join of the three lexicographic linear geometries; requires n <= 4.
ConvexGeometry buildLexGeometry(int n);

enum class CubeCheckMode { FullSpace, JSetsOnly };

struct CubeIsomorphism {
  bool ok = false;
  // mapping[x] = J(x) as flat indices.
  std::vector<std::vector<int>> mapping;
  // First pair (x, y) where inclusion of J-sets disagrees with the product
  // order, or where closure({x}) differs from J(x) (then y == x).
  std::optional<std::pair<int, int>> witness;
};

// Checks that x -> J(x) is an order isomorphism from n^3 onto the
// join-irreducibles ordered by inclusion. FullSpace builds the geometry
// (n <= 4); JSetsOnly works from the J-sets alone (n <= 20).
CubeIsomorphism verifyCubeIsomorphism(int n, CubeCheckMode mode);

// Labels "(a,b,c)" for the n^3 points in flat-index order.
std::vector<std::string> lexLabels(int n);

}  // namespace cg
