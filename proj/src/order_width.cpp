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

#include "cg/order_width.hpp"

#include <bit>
#include <cstdint>
#include <queue>

namespace cg {
namespace {

// Hopcroft-Karp on the split graph: left copy i -> right copy j iff i < j.
struct Matching {
  std::vector<int> matchLeft, matchRight;
  int size = 0;
};

Matching maxMatching(const StrictOrder& less) {
  const int m = static_cast<int>(less.size());
  std::vector<std::vector<int>> adj(m);
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j)
      if (less[i][j]) adj[i].push_back(j);

  Matching res;
  res.matchLeft.assign(m, -1);
  res.matchRight.assign(m, -1);
  std::vector<int> dist(m);
  constexpr int kInf = 1 << 29;

  auto bfs = [&] {
    std::queue<int> q;
    bool found = false;
    for (int u = 0; u < m; ++u) {
      if (res.matchLeft[u] < 0) {
        dist[u] = 0;
        q.push(u);
      } else {
        dist[u] = kInf;
      }
    }
    while (!q.empty()) {
      int u = q.front();
      q.pop();
      for (int v : adj[u]) {
        int w = res.matchRight[v];
        if (w < 0) {
          found = true;
        } else if (dist[w] == kInf) {
          dist[w] = dist[u] + 1;
          q.push(w);
        }
      }
    }
    return found;
  };

  std::vector<std::size_t> it(m);
  auto dfs = [&](auto&& self, int u) -> bool {
    for (; it[u] < adj[u].size(); ++it[u]) {
      int v = adj[u][it[u]];
      int w = res.matchRight[v];
      if (w < 0 || (dist[w] == dist[u] + 1 && self(self, w))) {
        res.matchLeft[u] = v;
        res.matchRight[v] = u;
        return true;
      }
    }
    dist[u] = kInf;
    return false;
  };

  while (bfs()) {
    std::fill(it.begin(), it.end(), 0);
    for (int u = 0; u < m; ++u)
      if (res.matchLeft[u] < 0 && dfs(dfs, u)) ++res.size;
  }
  return res;
}

// Koenig: from unmatched left vertices, alternate (non-matching edge to the
// right, matching edge back to the left). Cover = (L \ Z) u (R n Z).
// Elements with neither copy in the cover form a maximum antichain.
std::vector<int> antichainFromMatching(const StrictOrder& less, const Matching& mt) {
  const int m = static_cast<int>(less.size());
  std::vector<char> visL(m, 0), visR(m, 0);
  std::queue<int> q;
  for (int u = 0; u < m; ++u) {
    if (mt.matchLeft[u] < 0) {
      visL[u] = 1;
      q.push(u);
    }
  }
  while (!q.empty()) {
    int u = q.front();
    q.pop();
    for (int v = 0; v < m; ++v) {
      if (!less[u][v] || visR[v] || mt.matchLeft[u] == v) continue;
      visR[v] = 1;
      int w = mt.matchRight[v];
      if (w >= 0 && !visL[w]) {
        visL[w] = 1;
        q.push(w);
      }
    }
  }
  std::vector<int> out;
  for (int x = 0; x < m; ++x) {
    bool leftInCover = !visL[x];
    bool rightInCover = visR[x];
    if (!leftInCover && !rightInCover) out.push_back(x);
  }
  return out;
}

std::vector<int> exhaustiveAntichain(const StrictOrder& less) {
  const int m = static_cast<int>(less.size());
  std::vector<std::uint32_t> compat(m, 0);
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j)
      if (i != j && !less[i][j] && !less[j][i]) compat[i] |= 1U << j;

  std::uint32_t best = 0;
  auto rec = [&](auto&& self, std::uint32_t chosen, std::uint32_t cand) -> void {
    if (std::popcount(chosen) + std::popcount(cand) <= std::popcount(best)) return;
    if (cand == 0) {
      best = chosen;
      return;
    }
    int v = std::countr_zero(cand);
    std::uint32_t rest = cand & ~(1U << v);
    self(self, chosen | (1U << v), rest & compat[v]);
    self(self, chosen, rest);
  };
  rec(rec, 0, m == 0 ? 0U : (m >= 32 ? ~0U : (1U << m) - 1));

  std::vector<int> out;
  for (int i = 0; i < m; ++i)
    if ((best >> i) & 1U) out.push_back(i);
  return out;
}

}  // namespace

std::vector<int> maximumAntichain(const StrictOrder& less, int exhaustiveLimit) {
  const int m = static_cast<int>(less.size());
  if (m <= exhaustiveLimit && m <= 31) return exhaustiveAntichain(less);
  return antichainFromMatching(less, maxMatching(less));
}

int minimumChainCover(const StrictOrder& less) {
  return static_cast<int>(less.size()) - maxMatching(less).size;
}

}  // namespace cg
