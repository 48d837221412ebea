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

// Shared generators and brute-force oracles for the test suites. Nothing in
// here calls into the algorithms under test beyond the basic containers.

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <random>
#include <set>
#include <vector>

#include "cg/ballgeom.hpp"
#include "cg/poset.hpp"
#include "cg/setfam.hpp"

namespace cgtest {

inline std::vector<int> randomPermutation(int n, std::mt19937_64& rng) {
  std::vector<int> p(n);
  std::iota(p.begin(), p.end(), 0);
  std::shuffle(p.begin(), p.end(), rng);
  return p;
}

// Prefix chain of a permutation, as raw masks.
inline std::vector<std::uint64_t> prefixChain(const std::vector<int>& perm) {
  std::vector<std::uint64_t> out{0};
  std::uint64_t cur = 0;
  for (int x : perm) {
    cur |= std::uint64_t{1} << x;
    out.push_back(cur);
  }
  return out;
}

// All pairwise intersections, sorted and deduplicated, computed naively.
inline std::vector<std::uint64_t> naiveJoin(const std::vector<std::uint64_t>& a,
                                            const std::vector<std::uint64_t>& b) {
  std::vector<std::uint64_t> out;
  for (auto x : a)
    for (auto y : b) out.push_back(x & y);
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

// Family closed under intersection by repeated pairwise closing.
inline std::vector<std::uint64_t> intersectionClosure(std::vector<std::uint64_t> fam, int n) {
  fam.push_back(cg::fullMask(n));
  bool changed = true;
  while (changed) {
    changed = false;
    std::sort(fam.begin(), fam.end());
    fam.erase(std::unique(fam.begin(), fam.end()), fam.end());
    const std::size_t sz = fam.size();
    for (std::size_t i = 0; i < sz; ++i)
      for (std::size_t j = i + 1; j < sz; ++j) {
        auto m = fam[i] & fam[j];
        if (!std::binary_search(fam.begin(), fam.begin() + static_cast<std::ptrdiff_t>(sz), m)) {
          fam.push_back(m);
          changed = true;
        }
      }
  }
  return fam;
}

inline bool naiveIsClosureSpace(const std::vector<std::uint64_t>& fam, int n) {
  auto has = [&](std::uint64_t m) { return std::find(fam.begin(), fam.end(), m) != fam.end(); };
  if (!has(cg::fullMask(n))) return false;
  for (auto a : fam)
    for (auto b : fam)
      if (!has(a & b)) return false;
  return true;
}

inline bool naiveIsConvexGeometry(const std::vector<std::uint64_t>& fam, int n) {
  auto has = [&](std::uint64_t m) { return std::find(fam.begin(), fam.end(), m) != fam.end(); };
  if (!naiveIsClosureSpace(fam, n) || !has(0)) return false;
  for (auto y : fam) {
    if (y == cg::fullMask(n)) continue;
    bool ok = false;
    for (int a = 0; a < n; ++a)
      if (!((y >> a) & 1U) && has(y | (std::uint64_t{1} << a))) ok = true;
    if (!ok) return false;
  }
  return true;
}

// Every labeled convex geometry on n <= 4 elements, by filtering all
// families that contain the empty and the full set.
inline std::vector<std::vector<std::uint64_t>> allLabeledGeometries(int n) {
  std::vector<std::uint64_t> middle;
  for (std::uint64_t m = 1; m + 1 < (std::uint64_t{1} << n); ++m) middle.push_back(m);
  std::vector<std::vector<std::uint64_t>> out;
  const std::uint64_t choices = std::uint64_t{1} << middle.size();
  for (std::uint64_t pick = 0; pick < choices; ++pick) {
    std::vector<std::uint64_t> fam{0, cg::fullMask(n)};
    if (n == 0) fam = {0};
    for (std::size_t i = 0; i < middle.size(); ++i)
      if ((pick >> i) & 1U) fam.push_back(middle[i]);
    if (naiveIsConvexGeometry(fam, n)) out.push_back(fam);
  }
  return out;
}

// Random convex geometry: join of k random linear geometries.
inline std::vector<std::uint64_t> randomGeometry(int n, int k, std::mt19937_64& rng) {
  auto fam = prefixChain(randomPermutation(n, rng));
  for (int i = 1; i < k; ++i) fam = naiveJoin(fam, prefixChain(randomPermutation(n, rng)));
  return fam;
}

// Intersection of two linear orders: a random poset of dimension <= 2.
inline cg::Poset randomTwoDimensional(int m, std::mt19937_64& rng) {
  auto l1 = randomPermutation(m, rng);
  auto l2 = randomPermutation(m, rng);
  std::vector<int> p1(m), p2(m);
  for (int i = 0; i < m; ++i) {
    p1[l1[i]] = i;
    p2[l2[i]] = i;
  }
  cg::BitMatrix r(m);
  for (int a = 0; a < m; ++a)
    for (int b = 0; b < m; ++b)
      if (p1[a] <= p1[b] && p2[a] <= p2[b]) r.set(a, b);
  return cg::Poset(std::move(r));
}

// Five disks: d and e sit inside the hull of a, b, c; only e sits inside
// the hull of a and c.
inline cg::BallConfig hullExampleConfig() {
  return cg::BallConfig(2, {cg::Ball{{0, 0}, 1, "a"}, cg::Ball{{5, 8}, 1, "b"}, cg::Ball{{10, 0}, 1, "c"},
                            cg::Ball{{5, 3}, 1, "d"}, cg::Ball{{5, 0}, 0.5, "e"}});
}

// Independent dedupe key: least sorted mask list over all relabelings.
inline std::vector<std::uint64_t> naiveKey(const std::vector<std::uint64_t>& fam, int n) {
  std::vector<int> p(n);
  std::iota(p.begin(), p.end(), 0);
  std::vector<std::uint64_t> best;
  do {
    std::vector<std::uint64_t> img;
    for (auto m : fam) {
      std::uint64_t r = 0;
      for (int i = 0; i < n; ++i)
        if ((m >> i) & 1U) r |= std::uint64_t{1} << p[i];
      img.push_back(r);
    }
    std::sort(img.begin(), img.end());
    if (best.empty() || img < best) best = img;
  } while (std::next_permutation(p.begin(), p.end()));
  return best;
}

inline std::size_t naiveClassCount(int n) {
  std::set<std::vector<std::uint64_t>> keys;
  for (auto& fam : allLabeledGeometries(n)) keys.insert(naiveKey(fam, n));
  return keys.size();
}

}  // namespace cgtest
