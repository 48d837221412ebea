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

#include "cg/poset.hpp"

#include <algorithm>
#include <bit>
#include <numeric>
#include <string>
#include <tuple>
#include <unordered_set>

namespace cg {
namespace {

std::vector<std::string> defaultLabels(int m, std::vector<std::string> labels) {
  if (labels.empty()) {
    labels.reserve(m);
    for (int i = 0; i < m; ++i) labels.push_back(std::to_string(i));
  }
  if (static_cast<int>(labels.size()) != m) throw ContractError("label count does not match");
  return labels;
}

void checkPermutation(const std::vector<int>& order, int m) {
  if (static_cast<int>(order.size()) != m) throw ContractError("order has wrong length");
  std::vector<char> seen(m, 0);
  for (int x : order) {
    if (x < 0 || x >= m || seen[x]) throw ContractError("order is not a permutation");
    seen[x] = 1;
  }
}

}  // namespace

Poset::Poset(BitMatrix leq, std::vector<std::string> labels)
    : leq_(std::move(leq)), labels_(defaultLabels(leq_.size(), std::move(labels))) {
  const int m = leq_.size();
  if (m > kMaxPosetSize) throw SizeGuardError("poset larger than 4096 elements");
  const int w = leq_.wordsPerRow();
  for (int i = 0; i < m; ++i) {
    if (!leq_.get(i, i)) throw ContractError("relation is not reflexive");
    for (int j = 0; j < m; ++j) {
      if (i == j || !leq_.get(i, j)) continue;
      if (leq_.get(j, i)) throw ContractError("relation is not antisymmetric");
      // i <= j requires up(j) to be inside up(i).
      const auto* ri = leq_.row(i);
      const auto* rj = leq_.row(j);
      for (int k = 0; k < w; ++k)
        if ((rj[k] & ~ri[k]) != 0) throw ContractError("relation is not transitive");
    }
  }
}

Poset Poset::fromCovers(int m, const std::vector<std::pair<int, int>>& covers,
                        std::vector<std::string> labels) {
  if (m < 0 || m > kMaxPosetSize) throw SizeGuardError("poset larger than 4096 elements");
  BitMatrix r(m);
  for (int i = 0; i < m; ++i) r.set(i, i);
  for (auto [a, b] : covers) {
    if (a < 0 || a >= m || b < 0 || b >= m) throw ContractError("cover index out of range");
    r.set(a, b);
  }
  const int w = r.wordsPerRow();
  for (int k = 0; k < m; ++k) {
    const std::vector<std::uint64_t> rk(r.row(k), r.row(k) + w);
    for (int i = 0; i < m; ++i) {
      if (!r.get(i, k)) continue;
      auto* ri = r.row(i);
      for (int x = 0; x < w; ++x) ri[x] |= rk[x];
    }
  }
  for (int i = 0; i < m; ++i)
    for (int j = i + 1; j < m; ++j)
      if (r.get(i, j) && r.get(j, i)) throw ContractError("cover relation has a cycle");
  return Poset(std::move(r), std::move(labels));
}

Poset Poset::chain(int m) {
  BitMatrix r(m);
  for (int i = 0; i < m; ++i)
    for (int j = i; j < m; ++j) r.set(i, j);
  return Poset(std::move(r));
}

Poset Poset::antichain(int m) {
  BitMatrix r(m);
  for (int i = 0; i < m; ++i) r.set(i, i);
  return Poset(std::move(r));
}

std::vector<std::pair<int, int>> Poset::covers() const {
  const int m = size();
  BitMatrix below(m);  // transpose: below.row(b) = {a : a <= b}
  for (int a = 0; a < m; ++a)
    for (int b = 0; b < m; ++b)
      if (leq(a, b)) below.set(b, a);
  const int w = leq_.wordsPerRow();
  std::vector<std::pair<int, int>> out;
  for (int a = 0; a < m; ++a) {
    for (int b = 0; b < m; ++b) {
      if (!less(a, b)) continue;
      // Elements strictly between a and b.
      int between = 0;
      const auto* up = leq_.row(a);
      const auto* down = below.row(b);
      for (int k = 0; k < w; ++k) between += std::popcount(up[k] & down[k]);
      if (between == 2) out.emplace_back(a, b);
    }
  }
  return out;
}

bool Poset::isLinearExtension(const std::vector<int>& order) const {
  const int m = size();
  if (static_cast<int>(order.size()) != m) return false;
  std::vector<int> pos(m, -1);
  for (int i = 0; i < m; ++i) {
    if (order[i] < 0 || order[i] >= m || pos[order[i]] >= 0) return false;
    pos[order[i]] = i;
  }
  for (int a = 0; a < m; ++a)
    for (int b = 0; b < m; ++b)
      if (less(a, b) && pos[a] > pos[b]) return false;
  return true;
}

Poset chainPower(int n, int t) {
  if (n < 1 || t < 1) throw ContractError("chainPower needs n >= 1 and t >= 1");
  std::int64_t m = 1;
  for (int i = 0; i < t; ++i) {
    m *= n;
    if (m > kMaxPosetSize) throw SizeGuardError("n^t exceeds 4096");
  }
  std::vector<std::vector<int>> coords(m, std::vector<int>(t));
  std::vector<std::string> labels(m);
  for (int idx = 0; idx < m; ++idx) {
    int rest = idx;
    for (int i = t - 1; i >= 0; --i) {
      coords[idx][i] = rest % n;
      rest /= n;
    }
    std::string s = "(";
    for (int i = 0; i < t; ++i) s += (i ? "," : "") + std::to_string(coords[idx][i]);
    labels[idx] = s + ")";
  }
  BitMatrix r(static_cast<int>(m));
  for (int a = 0; a < m; ++a)
    for (int b = 0; b < m; ++b) {
      bool le = true;
      for (int i = 0; i < t && le; ++i) le = coords[a][i] <= coords[b][i];
      if (le) r.set(a, b);
    }
  return Poset(std::move(r), std::move(labels));
}

Subset downSet(const Poset& p, int x) {
  const int m = p.size();
  if (m > kMaxUniverse) throw SizeGuardError("down-set subsets need at most 64 elements");
  if (x < 0 || x >= m) throw ContractError("element index out of range");
  std::uint64_t mask = 0;
  for (int y = 0; y < m; ++y)
    if (p.leq(y, x)) mask |= std::uint64_t{1} << y;
  return Subset(m, mask);
}

ConvexGeometry downSetLattice(const Poset& p, std::size_t maxDownSets) {
  const int m = p.size();
  if (m > kMaxUniverse) throw SizeGuardError("down-set lattice needs at most 64 elements");
  std::vector<std::uint64_t> strictBelow(m, 0);
  for (int x = 0; x < m; ++x) strictBelow[x] = downSet(p, x).mask() & ~(std::uint64_t{1} << x);

  std::unordered_set<std::uint64_t> seen{0};
  std::vector<std::uint64_t> stack{0};
  while (!stack.empty()) {
    const std::uint64_t d = stack.back();
    stack.pop_back();
    for (int x = 0; x < m; ++x) {
      const std::uint64_t bit = std::uint64_t{1} << x;
      if ((d & bit) || (strictBelow[x] & ~d)) continue;
      if (seen.insert(d | bit).second) {
        if (seen.size() > maxDownSets) throw SizeGuardError("too many down-sets");
        stack.push_back(d | bit);
      }
    }
  }
  return ConvexGeometry::fromSpace(
      ClosureSpace::fromMembersUnchecked(m, {seen.begin(), seen.end()}));
}

namespace {

// Exact dimension test: every incomparable ordered pair (u, v) must be
// placed "u before v" by some extension. Requirements are distributed over
// t colour classes; a class is feasible iff the order plus its requirements
// stays acyclic. Colours are interchangeable, so a fresh colour is only
// ever opened as the next unused index.
class RealizerSearch {
 public:
  RealizerSearch(const Poset& p, int t, std::uint64_t budget) : p_(p), t_(t), budget_(budget) {
    const int m = p.size();
    base_.assign(m, 0);
    for (int a = 0; a < m; ++a)
      for (int b = 0; b < m; ++b)
        if (p.less(a, b)) base_[a] |= std::uint64_t{1} << b;
    for (int a = 0; a < m; ++a)
      for (int b = a + 1; b < m; ++b)
        if (!p.comparable(a, b)) {
          reqs_.emplace_back(a, b);
          reqs_.emplace_back(b, a);
        }
    colours_.assign(t, base_);
  }

  DimensionResult run() {
    DimensionResult res;
    if (!search(0, 0)) {
      res.verdict = exhausted_ ? DimensionVerdict::Undecided : DimensionVerdict::No;
      return res;
    }
    res.verdict = DimensionVerdict::Yes;
    for (int c = 0; c < t_; ++c) res.realizer.push_back(smallestTopologicalOrder(colours_[c]));
    return res;
  }

 private:
  using Rows = std::vector<std::uint64_t>;

  static bool addEdge(Rows& r, int u, int v) {
    if ((r[v] >> u) & 1U) return false;
    const std::uint64_t add = r[v] | (std::uint64_t{1} << v);
    for (std::size_t a = 0; a < r.size(); ++a)
      if (static_cast<int>(a) == u || ((r[a] >> u) & 1U)) r[a] |= add;
    return true;
  }

  bool search(std::size_t idx, int used) {
    if (++nodes_ > budget_) {
      exhausted_ = true;
      return false;
    }
    if (idx == reqs_.size()) return true;
    auto [u, v] = reqs_[idx];
    for (int c = 0; c < used; ++c)
      if ((colours_[c][u] >> v) & 1U) return search(idx + 1, used);
    const int limit = std::min(used + 1, t_);
    for (int c = 0; c < limit; ++c) {
      Rows saved = colours_[c];
      if (addEdge(colours_[c], u, v) && search(idx + 1, std::max(used, c + 1))) return true;
      colours_[c] = std::move(saved);
      if (exhausted_) return false;
    }
    return false;
  }

  std::vector<int> smallestTopologicalOrder(const Rows& r) const {
    const int m = p_.size();
    std::vector<int> order;
    std::uint64_t placed = 0;
    for (int step = 0; step < m; ++step) {
      for (int x = 0; x < m; ++x) {
        if ((placed >> x) & 1U) continue;
        bool minimal = true;
        for (int y = 0; y < m && minimal; ++y)
          if (!((placed >> y) & 1U) && y != x && ((r[y] >> x) & 1U)) minimal = false;
        if (minimal) {
          order.push_back(x);
          placed |= std::uint64_t{1} << x;
          break;
        }
      }
    }
    return order;
  }

  const Poset& p_;
  int t_;
  std::uint64_t budget_;
  std::uint64_t nodes_ = 0;
  bool exhausted_ = false;
  Rows base_;
  std::vector<std::pair<int, int>> reqs_;
  std::vector<Rows> colours_;
};

}  // namespace

DimensionResult orderDimensionAtMost(const Poset& p, int t, int maxElements,
                                     std::uint64_t nodeBudget) {
  if (t < 1) throw ContractError("dimension bound must be >= 1");
  if (p.size() > maxElements || p.size() > kMaxUniverse) return {};
  return RealizerSearch(p, t, nodeBudget).run();
}

namespace {

struct Invariant {
  int below, above, height, depth;
  auto operator<=>(const Invariant&) const = default;
};

std::vector<Invariant> invariants(const Poset& p) {
  const int m = p.size();
  std::vector<Invariant> inv(m, Invariant{0, 0, 0, 0});
  for (int a = 0; a < m; ++a)
    for (int b = 0; b < m; ++b)
      if (p.less(a, b)) {
        ++inv[b].below;
        ++inv[a].above;
      }
  // Longest chain lengths; process by number of elements below, which is a
  // linear extension.
  std::vector<int> order(m);
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](int a, int b) { return inv[a].below < inv[b].below; });
  for (int b : order)
    for (int a = 0; a < m; ++a)
      if (p.less(a, b)) inv[b].height = std::max(inv[b].height, inv[a].height + 1);
  for (auto it = order.rbegin(); it != order.rend(); ++it)
    for (int b = 0; b < m; ++b)
      if (p.less(*it, b)) inv[*it].depth = std::max(inv[*it].depth, inv[b].depth + 1);
  return inv;
}

}  // namespace

std::optional<std::vector<int>> isIsomorphic(const Poset& p, const Poset& q) {
  const int m = p.size();
  if (m != q.size()) return std::nullopt;
  auto ip = invariants(p);
  auto iq = invariants(q);
  {
    auto sp = ip, sq = iq;
    std::sort(sp.begin(), sp.end());
    std::sort(sq.begin(), sq.end());
    if (sp != sq) return std::nullopt;
  }
  // Map rare invariant classes first.
  std::vector<int> order(m);
  std::iota(order.begin(), order.end(), 0);
  auto classSize = [&](int a) { return std::count(ip.begin(), ip.end(), ip[a]); };
  std::stable_sort(order.begin(), order.end(), [&](int a, int b) {
    return std::make_tuple(classSize(a), ip[a]) < std::make_tuple(classSize(b), ip[b]);
  });

  std::vector<int> map(m, -1);
  std::vector<char> used(m, 0);
  auto rec = [&](auto&& self, int k) -> bool {
    if (k == m) return true;
    const int a = order[k];
    for (int b = 0; b < m; ++b) {
      if (used[b] || iq[b] != ip[a]) continue;
      bool ok = true;
      for (int j = 0; j < k && ok; ++j) {
        const int x = order[j];
        ok = p.leq(a, x) == q.leq(b, map[x]) && p.leq(x, a) == q.leq(map[x], b);
      }
      if (!ok) continue;
      map[a] = b;
      used[b] = 1;
      if (self(self, k + 1)) return true;
      used[b] = 0;
      map[a] = -1;
    }
    return false;
  };
  if (!rec(rec, 0)) return std::nullopt;
  return map;
}

Poset jiPoset(const ConvexGeometry& g, std::vector<std::string> labels) {
  const auto& ji = g.joinIrreducibles();
  const int m = static_cast<int>(ji.size());
  BitMatrix r(m);
  for (int a = 0; a < m; ++a)
    for (int b = 0; b < m; ++b)
      if (ji[a].isSubsetOf(ji[b])) r.set(a, b);
  return Poset(std::move(r), std::move(labels));
}

IntervalConfig intervalRepresentation2D(const Poset& p, const std::vector<int>& first,
                                        const std::vector<int>& second) {
  const int m = p.size();
  checkPermutation(first, m);
  checkPermutation(second, m);
  std::vector<int> pos1(m), pos2(m);
  for (int i = 0; i < m; ++i) {
    pos1[first[i]] = i + 1;
    pos2[second[i]] = i + 1;
  }
  for (int a = 0; a < m; ++a) {
    for (int b = 0; b < m; ++b) {
      if (a == b) continue;
      const bool both = pos1[a] < pos1[b] && pos2[a] < pos2[b];
      if (both != p.less(a, b)) {
        throw RealizerError("extensions do not realize the order at pair (" + std::to_string(a) +
                                ", " + std::to_string(b) + ")",
                            a, b);
      }
    }
  }
  IntervalConfig out(m);
  for (int x = 0; x < m; ++x) out[x] = Interval{-pos1[x], pos2[x]};
  return out;
}

bool intervalContains(const Interval& outer, const Interval& inner) {
  return outer.lo <= inner.lo && inner.hi <= outer.hi;
}

}  // namespace cg
