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

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "cg/setfam.hpp"
#include "cg/subset.hpp"

namespace cg {

// Dense m x m boolean matrix with bit-packed rows.
class BitMatrix {
 public:
  BitMatrix() = default;
  explicit BitMatrix(int m) : m_(m), words_((m + 63) / 64), bits_(std::size_t(m) * words_, 0) {}

  int size() const { return m_; }
  bool get(int i, int j) const { return (row(i)[j / 64] >> (j % 64)) & 1U; }
  void set(int i, int j, bool v = true) {
    auto& w = bits_[std::size_t(i) * words_ + j / 64];
    const std::uint64_t bit = std::uint64_t{1} << (j % 64);
    w = v ? (w | bit) : (w & ~bit);
  }
  const std::uint64_t* row(int i) const { return bits_.data() + std::size_t(i) * words_; }
  std::uint64_t* row(int i) { return bits_.data() + std::size_t(i) * words_; }
  int wordsPerRow() const { return words_; }

  friend bool operator==(const BitMatrix&, const BitMatrix&) = default;

 private:
  int m_ = 0;
  int words_ = 0;
  std::vector<std::uint64_t> bits_;
};

inline constexpr int kMaxPosetSize = 4096;

// Finite partial order. leq(i, j) means i <= j. The relation is validated
// (reflexive, antisymmetric, transitive) on construction.
class Poset {
 public:
  Poset() = default;
  Poset(BitMatrix leq, std::vector<std::string> labels = {});

  // Reflexive-transitive closure of the given cover pairs (i below j).
  static Poset fromCovers(int m, const std::vector<std::pair<int, int>>& covers,
                          std::vector<std::string> labels = {});
  static Poset chain(int m);
  static Poset antichain(int m);

  int size() const { return leq_.size(); }
  bool leq(int a, int b) const { return leq_.get(a, b); }
  bool less(int a, int b) const { return a != b && leq_.get(a, b); }
  bool comparable(int a, int b) const { return leq(a, b) || leq(b, a); }
  const BitMatrix& relation() const { return leq_; }
  const std::vector<std::string>& labels() const { return labels_; }

  // Hasse diagram edges (a, b) with a covered by b, sorted.
  std::vector<std::pair<int, int>> covers() const;
  bool isLinearExtension(const std::vector<int>& order) const;

  // Same order relation; labels are ignored.
  friend bool operator==(const Poset& a, const Poset& b) { return a.leq_ == b.leq_; }

 private:
  BitMatrix leq_;
  std::vector<std::string> labels_;
};

// n^t with componentwise order. Element index is the mixed-radix value with
// the first coordinate most significant; labels are "(a1,...,at)".
Poset chainPower(int n, int t);

// {y : y <= x}. Requires size() <= 64.
Subset downSet(const Poset& p, int x);

// All down-sets of p as a convex geometry on p's elements.
ConvexGeometry downSetLattice(const Poset& p, std::size_t maxDownSets = std::size_t{1} << 20);

enum class DimensionVerdict { Yes, No, Undecided };

struct DimensionResult {
  DimensionVerdict verdict = DimensionVerdict::Undecided;
  std::vector<std::vector<int>> realizer;  // t linear extensions when verdict == Yes
};

// Decides whether p has a realizer of at most t linear extensions. Gives up
// with Undecided when the search exceeds nodeBudget or p has more than
// maxElements elements.
DimensionResult orderDimensionAtMost(const Poset& p, int t, int maxElements = 10,
                                     std::uint64_t nodeBudget = 20'000'000);

// An order-preserving bijection p -> q (mapping[i] is the image of i).
std::optional<std::vector<int>> isIsomorphic(const Poset& p, const Poset& q);

// Join-irreducibles of g ordered by inclusion. Element x of the result is
// closure({x}); labels default to the element indices.
Poset jiPoset(const ConvexGeometry& g, std::vector<std::string> labels = {});

struct Interval {
  std::int64_t lo = 0;
  std::int64_t hi = 0;
  friend bool operator==(const Interval&, const Interval&) = default;
};

using IntervalConfig = std::vector<Interval>;

// Thrown when a claimed 2-realizer is not one; (a, b) is a pair on which
// the realizer disagrees with the order.
class RealizerError : public ContractError {
 public:
  RealizerError(const std::string& what, int a, int b) : ContractError(what), a(a), b(b) {}
  int a, b;
};

// x -> [-rank1(x), rank2(x)] with 1-based ranks in the two extensions.
IntervalConfig intervalRepresentation2D(const Poset& p, const std::vector<int>& first,
                                        const std::vector<int>& second);

bool intervalContains(const Interval& outer, const Interval& inner);

}  // namespace cg
