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

#include "cg/enumerate.hpp"

#include <algorithm>
#include <array>
#include <atomic>
#include <bit>
#include <cstdio>
#include <numeric>
#include <thread>

#include "cg/error.hpp"

namespace cg {
namespace {

// A family of subsets of an n <= 6 universe packed as a 64-bit set of masks.
using Family = std::uint64_t;

bool has(Family f, std::uint64_t mask) { return (f >> mask) & 1U; }

struct Generator {
  int n = 0;
  int full = 0;
  std::vector<std::vector<int>> perms;
  // image[p][mask]: mask relabelled by perms[p].
  std::vector<std::array<std::uint8_t, 64>> image;

  explicit Generator(int n_) : n(n_), full((1 << n_) - 1) {
    std::vector<int> p(n);
    std::iota(p.begin(), p.end(), 0);
    do {
      perms.push_back(p);
      std::array<std::uint8_t, 64> img{};
      for (int m = 0; m <= full; ++m) {
        int out = 0;
        for (int i = 0; i < n; ++i)
          if ((m >> i) & 1) out |= 1 << p[i];
        img[m] = static_cast<std::uint8_t>(out);
      }
      image.push_back(img);
    } while (std::next_permutation(p.begin(), p.end()));
  }

  Family apply(int p, Family level) const {
    Family out = 0;
    for (Family rest = level; rest; rest &= rest - 1) out |= Family{1} << image[p][std::countr_zero(rest)];
    return out;
  }

  struct Node {
    int k;         // next level to choose
    Family f;      // closed sets chosen so far
    std::vector<std::uint16_t> aut;  // stabiliser of the levels below k
  };

  // Candidate k-sets given the finalized levels below k.
  std::vector<int> candidates(int k, Family f) const {
    std::vector<int> out;
    for (int a = 0; a <= full; ++a) {
      if (std::popcount(static_cast<unsigned>(a)) != k) continue;
      bool access = false;
      for (int x = 0; x < n && !access; ++x)
        if (((a >> x) & 1) && has(f, a & ~(1 << x))) access = true;
      if (!access) continue;
      bool meets = true;
      for (Family rest = f; rest && meets; rest &= rest - 1)
        if (!has(f, a & std::countr_zero(rest))) meets = false;
      if (meets) out.push_back(a);
    }
    return out;
  }

  // Calls `next` for every admissible, canonical choice of level k.
  template <class Next>
  void expand(const Node& node, Next&& next) const {
    const int k = node.k;
    const auto cand = candidates(k, node.f);
    Family below = 0;  // chosen (k-1)-sets, each needs a cover at level k
    for (Family rest = node.f; rest; rest &= rest - 1) {
      const int m = std::countr_zero(rest);
      if (std::popcount(static_cast<unsigned>(m)) == k - 1) below |= Family{1} << m;
    }
    Family chosen = 0;
    auto rec = [&](auto&& self, std::size_t i) -> void {
      if (i == cand.size()) {
        for (Family rest = below; rest; rest &= rest - 1) {
          const int c = std::countr_zero(rest);
          bool covered = false;
          for (Family s = chosen; s && !covered; s &= s - 1)
            covered = (std::countr_zero(s) & c) == c;
          if (!covered) return;
        }
        std::vector<std::uint16_t> stab;
        for (auto p : node.aut) {
          const Family diff = chosen ^ apply(p, chosen);
          if (diff == 0) {
            stab.push_back(p);
          } else if (!has(chosen, std::countr_zero(diff))) {
            return;  // a relabelling gives a larger encoding
          }
        }
        next(Node{k + 1, node.f | chosen, std::move(stab)});
        return;
      }
      const int a = cand[i];
      bool ok = true;
      for (Family s = chosen; s && ok; s &= s - 1) ok = has(node.f, a & std::countr_zero(s));
      if (ok) {
        chosen |= Family{1} << a;
        self(self, i + 1);
        chosen &= ~(Family{1} << a);
      }
      self(self, i + 1);
    };
    rec(rec, 0);
  }

  // Depth-first completion of node; `emit` receives finished families.
  template <class Emit>
  void run(const Node& node, Emit&& emit) const {
    if (node.k == n) {
      // X is closed; it needs a closed (n-1)-subset unless n <= 1.
      bool access = n <= 1;
      for (int x = 0; x < n && !access; ++x) access = has(node.f, full & ~(1 << x));
      if (access) emit(node.f | (Family{1} << full));
      return;
    }
    expand(node, [&](Node child) { run(child, emit); });
  }

  Node root() const {
    Node r{1, Family{1}, {}};
    for (std::size_t p = 0; p < perms.size(); ++p) r.aut.push_back(static_cast<std::uint16_t>(p));
    return r;
  }
};

ClosureSpace toSpace(int n, Family f) {
  std::vector<std::uint64_t> masks;
  for (Family rest = f; rest; rest &= rest - 1) masks.push_back(std::countr_zero(rest));
  return ClosureSpace::fromMembersUnchecked(n, std::move(masks));
}

}  // namespace

std::vector<std::uint8_t> canonicalForm(const ClosureSpace& f) {
  const int n = f.universeSize();
  if (n > kMaxCanonicalN) throw SizeGuardError("canonical form supports n <= 7");
  std::vector<int> p(n);
  std::iota(p.begin(), p.end(), 0);
  std::vector<std::uint8_t> best, cur;
  do {
    cur.assign(1, static_cast<std::uint8_t>(n));
    for (auto m : f.masks()) {
      int out = 0;
      for (int i = 0; i < n; ++i)
        if ((m >> i) & 1U) out |= 1 << p[i];
      cur.push_back(static_cast<std::uint8_t>(out));
    }
    std::sort(cur.begin() + 1, cur.end());
    if (best.empty() || cur < best) best = cur;
  } while (std::next_permutation(p.begin(), p.end()));
  return best;
}

std::string canonicalHash(const std::vector<std::uint8_t>& form) {
  std::uint64_t h = 14695981039346656037ULL;
  for (auto b : form) {
    h ^= b;
    h *= 1099511628211ULL;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return std::string(buf, 12);
}

ClosureSpace relabel(const ClosureSpace& f, const std::vector<int>& perm) {
  const int n = f.universeSize();
  if (static_cast<int>(perm.size()) != n) throw ContractError("permutation has wrong length");
  std::vector<char> seen(n, 0);
  for (int v : perm) {
    if (v < 0 || v >= n || seen[v]) throw ContractError("not a permutation");
    seen[v] = 1;
  }
  std::vector<std::uint64_t> out;
  for (auto m : f.masks()) {
    std::uint64_t r = 0;
    for (int i = 0; i < n; ++i)
      if ((m >> i) & 1U) r |= std::uint64_t{1} << perm[i];
    out.push_back(r);
  }
  return ClosureSpace::fromMembersUnchecked(n, std::move(out));
}

std::uint64_t enumerateConvexGeometries(int n, const std::function<void(const ClosureSpace&)>& emit,
                                        const EnumOptions& opts) {
  if (n < 1) throw ContractError("n must be >= 1");
  if (n > kMaxEnumerateN) throw SizeGuardError("enumeration supports n <= 6");
  const Generator gen(n);

  // Split after the first two levels; subtrees are independent.
  std::vector<Generator::Node> tasks;
  const auto root = gen.root();
  if (n <= 2) {
    tasks.push_back(root);
  } else {
    gen.expand(root, [&](Generator::Node a) { gen.expand(a, [&](Generator::Node b) { tasks.push_back(std::move(b)); }); });
  }

  const int threads = std::clamp(opts.threads, 1, 64);
  std::vector<std::vector<Family>> found(tasks.size());
  std::vector<std::uint64_t> counts(tasks.size(), 0);
  auto work = [&](std::size_t t) {
    gen.run(tasks[t], [&](Family f) {
      ++counts[t];
      if (emit) found[t].push_back(f);
    });
  };
  if (threads == 1) {
    for (std::size_t t = 0; t < tasks.size(); ++t) work(t);
  } else {
    std::atomic<std::size_t> next{0};
    std::vector<std::jthread> pool;
    for (int i = 0; i < threads; ++i)
      pool.emplace_back([&] {
        for (std::size_t t; (t = next++) < tasks.size();) work(t);
      });
  }

  std::uint64_t total = 0;
  for (std::size_t t = 0; t < tasks.size(); ++t) {
    total += counts[t];
    if (emit)
      for (Family f : found[t]) emit(toSpace(n, f));
  }
  return total;
}

std::vector<ClosureSpace> allConvexGeometries(int n) {
  if (n > 5) throw SizeGuardError("allConvexGeometries supports n <= 5");
  std::vector<std::pair<std::vector<std::uint8_t>, ClosureSpace>> keyed;
  enumerateConvexGeometries(n, [&](const ClosureSpace& f) { keyed.emplace_back(canonicalForm(f), f); });
  std::sort(keyed.begin(), keyed.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
  std::vector<ClosureSpace> out;
  for (auto& [form, f] : keyed) out.push_back(std::move(f));
  return out;
}

std::map<int, std::uint64_t> countByCdim(int n, const EnumOptions& opts) {
  std::map<int, std::uint64_t> table;
  enumerateConvexGeometries(
      n, [&](const ClosureSpace& f) { ++table[cdim(ConvexGeometry::fromSpace(f))]; }, opts);
  return table;
}

}  // namespace cg
