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

#include "cg/lexgeom.hpp"

#include <algorithm>
#include <string>

namespace cg {
namespace {

constexpr std::array<std::array<int, 3>, 3> kPriority{{{0, 1, 2}, {1, 2, 0}, {2, 0, 1}}};

const std::array<int, 3>& priority(LexVariant v) {
  const int i = static_cast<int>(v) - 1;
  if (i < 0 || i > 2) throw ContractError("lex variant must be 1, 2 or 3");
  return kPriority[i];
}

void requireSide(int n, int maxN) {
  if (n < 1) throw ContractError("cube side must be >= 1");
  if (n > maxN) throw SizeGuardError("cube side " + std::to_string(n) + " exceeds " + std::to_string(maxN));
}

// Position of every flat index in each lex chain.
std::array<std::vector<int>, 3> chainPositions(int n) {
  std::array<std::vector<int>, 3> pos;
  for (int v = 0; v < 3; ++v) {
    auto chain = lexChain(static_cast<LexVariant>(v + 1), n);
    pos[v].resize(chain.size());
    for (std::size_t i = 0; i < chain.size(); ++i) pos[v][chain[i].flatIndex(n)] = static_cast<int>(i);
  }
  return pos;
}

std::vector<int> jSetFromPositions(const std::array<std::vector<int>, 3>& pos, int x) {
  std::vector<int> out;
  for (std::size_t y = 0; y < pos[0].size(); ++y)
    if (pos[0][y] <= pos[0][x] && pos[1][y] <= pos[1][x] && pos[2][y] <= pos[2][x])
      out.push_back(static_cast<int>(y));
  return out;
}

bool sortedSubset(const std::vector<int>& a, const std::vector<int>& b) {
  return std::includes(b.begin(), b.end(), a.begin(), a.end());
}

}  // namespace

LexPoint LexPoint::fromIndex(int n, int idx) {
  if (idx < 0 || idx >= n * n * n) throw ContractError("flat index out of range");
  return LexPoint{{idx / (n * n), (idx / n) % n, idx % n}};
}

std::string LexPoint::label() const {
  return "(" + std::to_string(c[0]) + "," + std::to_string(c[1]) + "," + std::to_string(c[2]) + ")";
}

std::strong_ordering lexCompare(LexVariant v, const LexPoint& x, const LexPoint& y) {
  for (int axis : priority(v)) {
    if (auto r = x.c[axis] <=> y.c[axis]; r != 0) return r;
  }
  return std::strong_ordering::equal;
}

std::vector<LexPoint> lexChain(LexVariant v, int n) {
  requireSide(n, 1 << 10);
  const int total = n * n * n;
  std::vector<LexPoint> pts;
  pts.reserve(total);
  for (int i = 0; i < total; ++i) pts.push_back(LexPoint::fromIndex(n, i));
  std::sort(pts.begin(), pts.end(),
            [v](const LexPoint& a, const LexPoint& b) { return lexCompare(v, a, b) < 0; });
  return pts;
}

std::vector<int> jSetIndices(int n, const LexPoint& x) {
  requireSide(n, 1 << 10);
  for (int v : x.c)
    if (v < 0 || v >= n) throw ContractError("point outside the cube");
  std::vector<int> out;
  for (int i = 0, total = n * n * n; i < total; ++i) {
    auto y = LexPoint::fromIndex(n, i);
    if (lexCompare(LexVariant::First, y, x) <= 0 && lexCompare(LexVariant::Second, y, x) <= 0 &&
        lexCompare(LexVariant::Third, y, x) <= 0)
      out.push_back(i);
  }
  return out;
}

Subset jSet(int n, const LexPoint& x) {
  requireSide(n, 4);
  return Subset::of(n * n * n, jSetIndices(n, x));
}

ConvexGeometry buildLexGeometry(int n) {
  requireSide(n, 4);
  auto linear = [&](LexVariant v) {
    std::vector<int> perm;
    for (const auto& p : lexChain(v, n)) perm.push_back(p.flatIndex(n));
    return linearGeometry(perm).space();
  };
  ClosureSpace joined = joinSpaces(joinSpaces(linear(LexVariant::First), linear(LexVariant::Second)),
                                   linear(LexVariant::Third));
  return ConvexGeometry::fromSpace(std::move(joined));
}

std::vector<std::string> lexLabels(int n) {
  std::vector<std::string> out;
  for (int i = 0, total = n * n * n; i < total; ++i) out.push_back(LexPoint::fromIndex(n, i).label());
  return out;
}

CubeIsomorphism verifyCubeIsomorphism(int n, CubeCheckMode mode) {
  requireSide(n, mode == CubeCheckMode::FullSpace ? 4 : 20);
  const int total = n * n * n;
  const auto pos = chainPositions(n);

  CubeIsomorphism res;
  res.mapping.reserve(total);
  for (int x = 0; x < total; ++x) res.mapping.push_back(jSetFromPositions(pos, x));

  if (mode == CubeCheckMode::FullSpace) {
    auto g = buildLexGeometry(n);
    const auto& ji = g.joinIrreducibles();
    for (int x = 0; x < total; ++x) {
      if (ji[x].elements() != res.mapping[x]) {
        res.witness = std::make_pair(x, x);
        return res;
      }
    }
  }

  // Compare the inclusion order of J-sets with the product order directly.
  for (int x = 0; x < total; ++x) {
    const auto px = LexPoint::fromIndex(n, x);
    for (int y = 0; y < total; ++y) {
      const auto py = LexPoint::fromIndex(n, y);
      const bool below = px.c[0] <= py.c[0] && px.c[1] <= py.c[1] && px.c[2] <= py.c[2];
      if (sortedSubset(res.mapping[x], res.mapping[y]) != below) {
        res.witness = std::make_pair(x, y);
        return res;
      }
    }
  }
  res.ok = true;
  return res;
}

}  // namespace cg
