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

#include <algorithm>
#include <set>

#include "cg/lexgeom.hpp"
#include "doctest.h"
#include "test_util.hpp"

using namespace cg;

namespace {

LexPoint pt(int a, int b, int c) { return LexPoint{{a, b, c}}; }

// Chain of a lexicographic order written out with an explicit coordinate
// priority, independent of lexCompare.
std::vector<int> naiveChain(int n, std::array<int, 3> prio) {
  std::vector<std::array<int, 3>> keyed;
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      for (int c = 0; c < n; ++c) {
        std::array<int, 3> p{a, b, c};
        keyed.push_back({p[prio[0]], p[prio[1]], p[prio[2]]});
      }
  std::sort(keyed.begin(), keyed.end());
  std::vector<int> out;
  for (auto& k : keyed) {
    std::array<int, 3> p{};
    p[prio[0]] = k[0];
    p[prio[1]] = k[1];
    p[prio[2]] = k[2];
    out.push_back((p[0] * n + p[1]) * n + p[2]);
  }
  return out;
}

}  // namespace

TEST_CASE("lexCompare examples") {
  CHECK(lexCompare(LexVariant::First, pt(0, 1, 1), pt(1, 0, 0)) < 0);
  CHECK(lexCompare(LexVariant::Second, pt(1, 0, 0), pt(0, 1, 0)) < 0);
  CHECK(lexCompare(LexVariant::Third, pt(1, 0, 0), pt(0, 0, 1)) < 0);
  for (auto v : {LexVariant::First, LexVariant::Second, LexVariant::Third})
    CHECK(lexCompare(v, pt(1, 0, 1), pt(1, 0, 1)) == 0);
  CHECK_THROWS_AS(lexCompare(static_cast<LexVariant>(4), pt(0, 0, 0), pt(0, 0, 0)), ContractError);
}

TEST_CASE("lexChain examples") {
  std::vector<std::string> labels;
  for (auto& p : lexChain(LexVariant::First, 2)) labels.push_back(p.label());
  CHECK(labels == std::vector<std::string>{"(0,0,0)", "(0,0,1)", "(0,1,0)", "(0,1,1)", "(1,0,0)",
                                           "(1,0,1)", "(1,1,0)", "(1,1,1)"});
  CHECK(lexChain(LexVariant::First, 1).size() == 1);
  auto third = lexChain(LexVariant::Third, 2);
  for (int i = 0; i < 4; ++i) CHECK(third[i].c[2] == 0);

  for (int n = 1; n <= 4; ++n) {
    const std::array<std::array<int, 3>, 3> prios{{{0, 1, 2}, {1, 2, 0}, {2, 0, 1}}};
    for (int v = 0; v < 3; ++v) {
      std::vector<int> got;
      for (auto& p : lexChain(static_cast<LexVariant>(v + 1), n)) got.push_back(p.flatIndex(n));
      CHECK(got == naiveChain(n, prios[v]));
      // Each chain is a linear extension of n^3.
      CHECK(chainPower(n, 3).isLinearExtension(got));
    }
  }
}

TEST_CASE("jSet examples") {
  CHECK(jSet(2, pt(1, 0, 0)) == Subset::of(8, {pt(0, 0, 0).flatIndex(2), pt(1, 0, 0).flatIndex(2)}));
  for (int n = 1; n <= 4; ++n) {
    CHECK(jSet(n, pt(0, 0, 0)) == Subset::of(n * n * n, {0}));
    CHECK(jSet(n, pt(n - 1, n - 1, n - 1)) == Subset::full(n * n * n));
  }
  CHECK(jSetIndices(6, pt(0, 0, 0)) == std::vector<int>{0});
  CHECK_THROWS_AS(jSet(5, pt(0, 0, 0)), SizeGuardError);
  CHECK_THROWS_AS(jSetIndices(2, pt(2, 0, 0)), ContractError);
}

TEST_CASE("buildLexGeometry matches naive triple intersection") {
  CHECK(buildLexGeometry(1).space() == ClosureSpace::fromMembers(1, {0, 1}));
  for (int n = 2; n <= 3; ++n) {
    const std::array<std::array<int, 3>, 3> prios{{{0, 1, 2}, {1, 2, 0}, {2, 0, 1}}};
    std::vector<std::vector<std::uint64_t>> chains;
    for (auto& pr : prios) chains.push_back(cgtest::prefixChain(naiveChain(n, pr)));
    std::set<std::uint64_t> oracle;
    for (auto a : chains[0])
      for (auto b : chains[1])
        for (auto c : chains[2]) oracle.insert(a & b & c);
    auto g = buildLexGeometry(n);
    CHECK(g.size() == oracle.size());
    for (auto m : oracle) CHECK(g.space().contains(m));
  }
}

TEST_CASE("lex geometry for n = 2: closure, ji poset and cdim") {
  auto g = buildLexGeometry(2);
  CHECK(isConvexGeometry(g.space()).ok);
  CHECK(closure(g.space(), Subset::of(8, {4})) == Subset::of(8, {0, 4}));
  CHECK(g.joinIrreducibles().size() == 8);

  auto ji = jiPoset(g, lexLabels(2));
  auto iso = isIsomorphic(ji, chainPower(2, 3));
  REQUIRE(iso.has_value());
  CHECK(ji == chainPower(2, 3));

  CHECK(cdim(g) == 3);
  auto cert = cdimCertificate(g);
  CHECK(cert.size() == 3);
  for (std::size_t i = 0; i < cert.size(); ++i)
    for (std::size_t j = 0; j < cert.size(); ++j)
      if (i != j) CHECK_FALSE(cert[i].isSubsetOf(cert[j]));
  auto bf = cdimBruteForce(g, 3);
  REQUIRE(bf.k.has_value());
  CHECK(*bf.k == 3);
  // Ji(F) is 2^3, which has order dimension 3.
  CHECK(orderDimensionAtMost(ji, 2).verdict == DimensionVerdict::No);
}

TEST_CASE("closure of a point equals its J-set and cdim stays <= 3") {
  for (int n = 1; n <= 4; ++n) {
    auto g = buildLexGeometry(n);
    for (int x = 0; x < n * n * n; ++x)
      CHECK(closure(g.space(), Subset::singleton(n * n * n, x)) == jSet(n, LexPoint::fromIndex(n, x)));
    const int d = cdim(g);
    CHECK(d <= 3);
    if (n >= 2) CHECK(d == 3);
  }
}

TEST_CASE("J-set inclusion follows the product order") {
  for (int n = 1; n <= 4; ++n) {
    const int total = n * n * n;
    for (int x = 0; x < total; ++x) {
      auto px = LexPoint::fromIndex(n, x);
      auto jx = jSet(n, px);
      for (int y = 0; y < total; ++y) {
        auto py = LexPoint::fromIndex(n, y);
        auto jy = jSet(n, py);
        const bool le = px.c[0] <= py.c[0] && px.c[1] <= py.c[1] && px.c[2] <= py.c[2];
        const bool ge = py.c[0] <= px.c[0] && py.c[1] <= px.c[1] && py.c[2] <= px.c[2];
        if (le) CHECK(jx.isSubsetOf(jy));
        if (!le && !ge) {
          CHECK_FALSE(jx.isSubsetOf(jy));
          CHECK_FALSE(jy.isSubsetOf(jx));
        }
      }
    }
  }
}

TEST_CASE("verifyCubeIsomorphism") {
  for (int n = 1; n <= 3; ++n) {
    auto full = verifyCubeIsomorphism(n, CubeCheckMode::FullSpace);
    CHECK(full.ok);
    CHECK(full.mapping.size() == static_cast<std::size_t>(n * n * n));
    CHECK(verifyCubeIsomorphism(n, CubeCheckMode::JSetsOnly).ok);
  }
  CHECK(verifyCubeIsomorphism(5, CubeCheckMode::JSetsOnly).ok);
  CHECK(verifyCubeIsomorphism(2, CubeCheckMode::FullSpace).mapping[4] == std::vector<int>{0, 4});
  CHECK_THROWS_AS(verifyCubeIsomorphism(5, CubeCheckMode::FullSpace), SizeGuardError);
}
