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
#include <cstdint>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "cg/subset.hpp"

namespace cg {

// Result of isClosureSpace. When ok is false, either the full set is missing
// or `pair` holds two members whose intersection is absent.
struct ClosureSpaceCheck {
  bool ok = true;
  bool fullSetMissing = false;
  std::optional<std::pair<Subset, Subset>> pair;
};

// Intersection-closed family containing the full set. Members are kept
// deduplicated and sorted by (cardinality, mask).
class ClosureSpace {
 public:
  // Throws ContractError when the family violates the closure-space axioms.
  static ClosureSpace fromMembers(int n, std::vector<std::uint64_t> masks);
  // For families that are intersection-closed by construction (joins,
  // fixed-point sweeps). Still dedupes and sorts.
  static ClosureSpace fromMembersUnchecked(int n, std::vector<std::uint64_t> masks);

  int universeSize() const { return n_; }
  std::size_t size() const { return members_.size(); }
  std::span<const std::uint64_t> masks() const { return members_; }
  Subset member(std::size_t i) const { return Subset(n_, members_[i]); }
  std::vector<Subset> members() const;

  bool contains(std::uint64_t mask) const;
  bool contains(const Subset& s) const;

  // Members of cardinality >= k start at this offset.
  std::size_t firstOfCardinality(int k) const { return bucket_[k]; }

  friend bool operator==(const ClosureSpace& a, const ClosureSpace& b) {
    return a.n_ == b.n_ && a.members_ == b.members_;
  }

 private:
  ClosureSpace(int n, std::vector<std::uint64_t> masks);

  int n_ = 0;
  std::vector<std::uint64_t> members_;
  std::array<std::size_t, kMaxUniverse + 2> bucket_{};
};

struct GeometryCheck {
  bool ok = true;
  bool emptySetMissing = false;
  std::optional<Subset> inaccessible;  // closed set with no one-element extension
};

struct AntiExchangeWitness {
  Subset closed;
  int x = -1;
  int y = -1;
};

struct AntiExchangeCheck {
  bool ok = true;
  std::optional<AntiExchangeWitness> witness;
};

ClosureSpaceCheck isClosureSpace(std::span<const std::uint64_t> masks, int n);
ClosureSpaceCheck isClosureSpace(const std::vector<Subset>& members, int n);

// Intersection of all members containing y.
Subset closure(const ClosureSpace& f, const Subset& y);
std::uint64_t closureMask(const ClosureSpace& f, std::uint64_t y);

GeometryCheck isConvexGeometry(const ClosureSpace& f);
AntiExchangeCheck satisfiesAntiExchange(const ClosureSpace& f);

// All pairwise intersections F n K.
ClosureSpace joinSpaces(const ClosureSpace& f, const ClosureSpace& k);

// Members (other than the full set) that are not the intersection of their
// strict supersets. Works for any closure space.
std::vector<Subset> meetIrreducibles(const ClosureSpace& f);

// A closure space that passed isConvexGeometry. Join- and meet-irreducibles
// are computed once at construction.
class ConvexGeometry {
 public:
  // Throws ContractError carrying the witness when f is not a convex geometry.
  static ConvexGeometry fromSpace(ClosureSpace f);

  const ClosureSpace& space() const { return space_; }
  int universeSize() const { return space_.universeSize(); }
  std::size_t size() const { return space_.size(); }

  // closure({x}) for each x; index x holds the set generated by x.
  const std::vector<Subset>& joinIrreducibles() const { return joinIrr_; }
  const std::vector<Subset>& meetIrreducibles() const { return meetIrr_; }

  friend bool operator==(const ConvexGeometry& a, const ConvexGeometry& b) {
    return a.space_ == b.space_;
  }

 private:
  explicit ConvexGeometry(ClosureSpace f);

  ClosureSpace space_;
  std::vector<Subset> joinIrr_;
  std::vector<Subset> meetIrr_;
};

// The monotone geometry of prefixes of perm.
ConvexGeometry linearGeometry(const std::vector<int>& perm);

// {closure({x}) : x in X}, one entry per element. Throws ContractError if two
// elements generate the same closed set.
std::vector<Subset> joinIrreducibles(const ClosureSpace& f);

// Convex dimension as the width of the meet-irreducible poset.
int cdim(const ConvexGeometry& g);
// Maximum antichain of meet-irreducibles; its size is cdim(g).
std::vector<Subset> cdimCertificate(const ConvexGeometry& g);

struct MonotoneDecomposition {
  std::optional<int> k;                    // empty when k would exceed the limit
  std::vector<std::vector<int>> orders;    // the k linear orders found
};

// Smallest number of linear geometries whose join is g, by exact search over
// the maximal chains of g. Throws SizeGuardError if g has more than maxChains
// maximal chains.
MonotoneDecomposition cdimBruteForce(const ConvexGeometry& g, int limitK,
                                     std::size_t maxChains = 200000);

}  // namespace cg
