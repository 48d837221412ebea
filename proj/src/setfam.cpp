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

#include "cg/setfam.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>
#include <string>

#include "cg/order_width.hpp"

namespace cg {
namespace {

std::vector<std::uint64_t> canonicalize(std::vector<std::uint64_t> masks) {
  std::sort(masks.begin(), masks.end(), canonicalLess);
  masks.erase(std::unique(masks.begin(), masks.end()), masks.end());
  return masks;
}

bool sortedContains(std::span<const std::uint64_t> sorted, std::uint64_t m) {
  return std::binary_search(sorted.begin(), sorted.end(), m, canonicalLess);
}

void requireUniverse(int n) {
  if (n < 0 || n > kMaxUniverse) {
    throw SizeGuardError("universe size " + std::to_string(n) + " exceeds 64");
  }
}

}  // namespace

ClosureSpace::ClosureSpace(int n, std::vector<std::uint64_t> masks)
    : n_(n), members_(canonicalize(std::move(masks))) {
  std::size_t i = 0;
  for (int k = 0; k <= kMaxUniverse + 1; ++k) {
    while (i < members_.size() && std::popcount(members_[i]) < k) ++i;
    bucket_[k] = i;
  }
}

ClosureSpace ClosureSpace::fromMembers(int n, std::vector<std::uint64_t> masks) {
  requireUniverse(n);
  for (auto m : masks) {
    if ((m & ~fullMask(n)) != 0) throw ContractError("member has bits outside the universe");
  }
  ClosureSpace f(n, std::move(masks));
  auto check = isClosureSpace(f.masks(), n);
  if (!check.ok) {
    if (check.fullSetMissing) throw ContractError("family lacks the full set");
    throw ContractError("family not intersection-closed: " + check.pair->first.toString() +
                        " n " + check.pair->second.toString() + " missing");
  }
  return f;
}

ClosureSpace ClosureSpace::fromMembersUnchecked(int n, std::vector<std::uint64_t> masks) {
  requireUniverse(n);
  return ClosureSpace(n, std::move(masks));
}

std::vector<Subset> ClosureSpace::members() const {
  std::vector<Subset> out;
  out.reserve(members_.size());
  for (auto m : members_) out.emplace_back(n_, m);
  return out;
}

bool ClosureSpace::contains(std::uint64_t mask) const {
  const int k = std::popcount(mask);
  auto first = members_.begin() + static_cast<std::ptrdiff_t>(bucket_[k]);
  auto last = members_.begin() + static_cast<std::ptrdiff_t>(bucket_[k + 1]);
  return std::binary_search(first, last, mask);
}

bool ClosureSpace::contains(const Subset& s) const {
  if (s.universe() != n_) throw ContractError("universe size mismatch");
  return contains(s.mask());
}

ClosureSpaceCheck isClosureSpace(std::span<const std::uint64_t> masks, int n) {
  requireUniverse(n);
  auto sorted = canonicalize({masks.begin(), masks.end()});
  ClosureSpaceCheck res;
  if (!sortedContains(sorted, fullMask(n))) {
    res.ok = false;
    res.fullSetMissing = true;
    return res;
  }
  for (std::size_t i = 0; i < sorted.size(); ++i) {
    for (std::size_t j = i + 1; j < sorted.size(); ++j) {
      if (!sortedContains(sorted, sorted[i] & sorted[j])) {
        res.ok = false;
        res.pair = std::make_pair(Subset(n, sorted[i]), Subset(n, sorted[j]));
        return res;
      }
    }
  }
  return res;
}

ClosureSpaceCheck isClosureSpace(const std::vector<Subset>& members, int n) {
  std::vector<std::uint64_t> masks;
  masks.reserve(members.size());
  for (const auto& s : members) {
    if (s.universe() != n) throw ContractError("universe size mismatch");
    masks.push_back(s.mask());
  }
  return isClosureSpace(masks, n);
}

std::uint64_t closureMask(const ClosureSpace& f, std::uint64_t y) {
  std::uint64_t result = fullMask(f.universeSize());
  auto ms = f.masks();
  for (std::size_t i = f.firstOfCardinality(std::popcount(y)); i < ms.size(); ++i) {
    if ((ms[i] & y) == y) {
      result &= ms[i];
      if (result == y) break;
    }
  }
  return result;
}

Subset closure(const ClosureSpace& f, const Subset& y) {
  if (y.universe() != f.universeSize()) throw ContractError("universe size mismatch");
  return Subset(f.universeSize(), closureMask(f, y.mask()));
}

GeometryCheck isConvexGeometry(const ClosureSpace& f) {
  GeometryCheck res;
  const int n = f.universeSize();
  if (!f.contains(std::uint64_t{0})) {
    res.ok = false;
    res.emptySetMissing = true;
    return res;
  }
  const std::uint64_t full = fullMask(n);
  for (auto m : f.masks()) {
    if (m == full) continue;
    bool accessible = false;
    for (std::uint64_t rest = full & ~m; rest != 0; rest &= rest - 1) {
      if (f.contains(m | (rest & -rest))) {
        accessible = true;
        break;
      }
    }
    if (!accessible) {
      res.ok = false;
      res.inaccessible = Subset(n, m);
      return res;
    }
  }
  return res;
}

AntiExchangeCheck satisfiesAntiExchange(const ClosureSpace& f) {
  AntiExchangeCheck res;
  const int n = f.universeSize();
  std::vector<std::uint64_t> gen(n);
  for (auto y : f.masks()) {
    const std::uint64_t outside = fullMask(n) & ~y;
    for (std::uint64_t r = outside; r != 0; r &= r - 1) {
      int x = std::countr_zero(r);
      gen[x] = closureMask(f, y | (std::uint64_t{1} << x));
    }
    for (std::uint64_t rx = outside; rx != 0; rx &= rx - 1) {
      int x = std::countr_zero(rx);
      for (std::uint64_t ry = rx & (rx - 1); ry != 0; ry &= ry - 1) {
        int z = std::countr_zero(ry);
        if (((gen[z] >> x) & 1U) && ((gen[x] >> z) & 1U)) {
          res.ok = false;
          res.witness = AntiExchangeWitness{Subset(n, y), x, z};
          return res;
        }
      }
    }
  }
  return res;
}

ClosureSpace joinSpaces(const ClosureSpace& f, const ClosureSpace& k) {
  if (f.universeSize() != k.universeSize()) throw ContractError("universe size mismatch");
  std::vector<std::uint64_t> out;
  out.reserve(f.size() * k.size());
  for (auto a : f.masks())
    for (auto b : k.masks()) out.push_back(a & b);
  return ClosureSpace::fromMembersUnchecked(f.universeSize(), std::move(out));
}

std::vector<Subset> meetIrreducibles(const ClosureSpace& f) {
  const int n = f.universeSize();
  const std::uint64_t full = fullMask(n);
  auto ms = f.masks();
  std::vector<Subset> out;
  for (std::size_t i = 0; i < ms.size(); ++i) {
    const std::uint64_t m = ms[i];
    if (m == full) continue;
    std::uint64_t meet = full;
    for (std::size_t j = f.firstOfCardinality(std::popcount(m) + 1); j < ms.size(); ++j) {
      if ((ms[j] & m) == m) {
        meet &= ms[j];
        if (meet == m) break;
      }
    }
    if (meet != m) out.emplace_back(n, m);
  }
  return out;
}

std::vector<Subset> joinIrreducibles(const ClosureSpace& f) {
  const int n = f.universeSize();
  std::vector<Subset> out;
  out.reserve(n);
  for (int x = 0; x < n; ++x) {
    out.emplace_back(n, closureMask(f, std::uint64_t{1} << x));
  }
  for (int x = 0; x < n; ++x) {
    for (int y = x + 1; y < n; ++y) {
      if (out[x] == out[y]) {
        throw ContractError("elements " + std::to_string(x) + " and " + std::to_string(y) +
                            " generate the same closed set");
      }
    }
  }
  return out;
}

ConvexGeometry::ConvexGeometry(ClosureSpace f) : space_(std::move(f)) {
  joinIrr_ = cg::joinIrreducibles(space_);
  // In a convex geometry every upper cover adds exactly one element, so a
  // closed set is meet-irreducible iff it has exactly one such extension.
  const int n = space_.universeSize();
  const std::uint64_t full = fullMask(n);
  for (auto m : space_.masks()) {
    if (m == full) continue;
    int covers = 0;
    for (std::uint64_t r = full & ~m; r != 0 && covers < 2; r &= r - 1) {
      if (space_.contains(m | (r & -r))) ++covers;
    }
    if (covers == 1) meetIrr_.emplace_back(n, m);
  }
}

ConvexGeometry ConvexGeometry::fromSpace(ClosureSpace f) {
  auto check = isConvexGeometry(f);
  if (!check.ok) {
    if (check.emptySetMissing) throw ContractError("not a convex geometry: empty set not closed");
    throw ContractError("not a convex geometry: closed set " + check.inaccessible->toString() +
                        " has no one-element extension");
  }
  return ConvexGeometry(std::move(f));
}

ConvexGeometry linearGeometry(const std::vector<int>& perm) {
  const int n = static_cast<int>(perm.size());
  if (n > kMaxUniverse) throw SizeGuardError("permutation longer than 64");
  std::uint64_t seen = 0;
  std::vector<std::uint64_t> chain{0};
  for (int x : perm) {
    if (x < 0 || x >= n || ((seen >> x) & 1U)) throw ContractError("not a permutation");
    seen |= std::uint64_t{1} << x;
    chain.push_back(seen);
  }
  return ConvexGeometry::fromSpace(ClosureSpace::fromMembersUnchecked(n, std::move(chain)));
}

std::vector<Subset> cdimCertificate(const ConvexGeometry& g) {
  const auto& mi = g.meetIrreducibles();
  const std::size_t m = mi.size();
  StrictOrder less(m, std::vector<char>(m, 0));
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < m; ++j)
      less[i][j] = i != j && (mi[i].mask() & ~mi[j].mask()) == 0;
  std::vector<Subset> out;
  for (int idx : maximumAntichain(less)) out.push_back(mi[idx]);
  return out;
}

int cdim(const ConvexGeometry& g) {
  // The trivial geometry on an empty universe has no meet-irreducibles.
  return static_cast<int>(cdimCertificate(g).size());
}

namespace {

void collectChains(const ClosureSpace& f, std::uint64_t cur, std::vector<int>& prefix,
                   std::vector<std::vector<int>>& out, std::size_t maxChains) {
  const int n = f.universeSize();
  if (cur == fullMask(n)) {
    if (out.size() >= maxChains) {
      throw SizeGuardError("more than " + std::to_string(maxChains) + " maximal chains");
    }
    out.push_back(prefix);
    return;
  }
  for (std::uint64_t r = fullMask(n) & ~cur; r != 0; r &= r - 1) {
    std::uint64_t bit = r & -r;
    if (!f.contains(cur | bit)) continue;
    prefix.push_back(std::countr_zero(bit));
    collectChains(f, cur | bit, prefix, out, maxChains);
    prefix.pop_back();
  }
}

using Bits = std::vector<std::uint64_t>;

bool anyBit(const Bits& b) {
  return std::any_of(b.begin(), b.end(), [](std::uint64_t w) { return w != 0; });
}

}  // namespace

MonotoneDecomposition cdimBruteForce(const ConvexGeometry& g, int limitK,
                                     std::size_t maxChains) {
  const ClosureSpace& f = g.space();
  const int n = f.universeSize();
  MonotoneDecomposition res;
  if (n == 0) {
    res.k = 0;
    return res;
  }

  // Only linear geometries contained in f can take part in a join equal to f.
  std::vector<std::vector<int>> chains;
  std::vector<int> prefix;
  collectChains(f, 0, prefix, chains, maxChains);

  // The join of chains C_1..C_k equals f iff for every member Z and every
  // a outside Z some C_i lists all of Z before a.
  std::vector<std::pair<std::uint64_t, int>> pairs;
  for (auto z : f.masks())
    for (std::uint64_t r = fullMask(n) & ~z; r != 0; r &= r - 1)
      pairs.emplace_back(z, std::countr_zero(r));
  const std::size_t words = (pairs.size() + 63) / 64;

  std::vector<Bits> covers(chains.size(), Bits(words, 0));
  std::vector<std::vector<int>> coveredBy(pairs.size());
  std::vector<int> pos(n);
  for (std::size_t c = 0; c < chains.size(); ++c) {
    for (int i = 0; i < n; ++i) pos[chains[c][i]] = i;
    for (std::size_t p = 0; p < pairs.size(); ++p) {
      int maxPos = -1;
      for (std::uint64_t z = pairs[p].first; z != 0; z &= z - 1)
        maxPos = std::max(maxPos, pos[std::countr_zero(z)]);
      if (pos[pairs[p].second] > maxPos) {
        covers[c][p / 64] |= std::uint64_t{1} << (p % 64);
        coveredBy[p].push_back(static_cast<int>(c));
      }
    }
  }

  std::vector<int> chosen;
  auto search = [&](auto&& self, const Bits& uncovered, int budget) -> bool {
    if (!anyBit(uncovered)) return true;
    if (budget == 0) return false;
    std::size_t best = pairs.size();
    std::size_t bestCount = chains.size() + 1;
    for (std::size_t w = 0; w < words; ++w) {
      for (std::uint64_t b = uncovered[w]; b != 0; b &= b - 1) {
        std::size_t p = w * 64 + std::countr_zero(b);
        if (coveredBy[p].size() < bestCount) {
          bestCount = coveredBy[p].size();
          best = p;
        }
      }
    }
    for (int c : coveredBy[best]) {
      Bits next = uncovered;
      for (std::size_t w = 0; w < words; ++w) next[w] &= ~covers[c][w];
      chosen.push_back(c);
      if (self(self, next, budget - 1)) return true;
      chosen.pop_back();
    }
    return false;
  };

  Bits all(words, 0);
  for (std::size_t p = 0; p < pairs.size(); ++p) all[p / 64] |= std::uint64_t{1} << (p % 64);

  for (int k = 1; k <= limitK; ++k) {
    chosen.clear();
    if (search(search, all, k)) {
      ClosureSpace joined = linearGeometry(chains[chosen[0]]).space();
      for (std::size_t i = 1; i < chosen.size(); ++i)
        joined = joinSpaces(joined, linearGeometry(chains[chosen[i]]).space());
      if (!(joined == f)) throw std::logic_error("monotone decomposition does not rejoin");
      res.k = static_cast<int>(chosen.size());
      for (int c : chosen) res.orders.push_back(chains[c]);
      return res;
    }
  }
  return res;
}

}  // namespace cg
