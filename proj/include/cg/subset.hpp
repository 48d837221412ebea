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

#include <bit>
#include <compare>
#include <cstdint>
#include <initializer_list>
#include <string>
#include <vector>

#include "cg/error.hpp"

namespace cg {

inline constexpr int kMaxUniverse = 64;

inline std::uint64_t fullMask(int n) {
  return n >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1;
}

inline int popcount(std::uint64_t m) { return std::popcount(m); }

// Canonical member order: by cardinality, then by mask value.
inline bool canonicalLess(std::uint64_t a, std::uint64_t b) {
  const int pa = std::popcount(a), pb = std::popcount(b);
  return pa != pb ? pa < pb : a < b;
}

// A subset of the universe {0, ..., n-1}, n <= 64, stored as a bit mask.
class Subset {
 public:
  Subset() = default;
  Subset(int universe, std::uint64_t mask);

  static Subset empty(int n) { return Subset(n, 0); }
  static Subset full(int n) { return Subset(n, fullMask(n)); }
  static Subset singleton(int n, int x);
  static Subset of(int n, std::initializer_list<int> elems);
  static Subset of(int n, const std::vector<int>& elems);

  std::uint64_t mask() const { return mask_; }
  int universe() const { return n_; }
  int size() const { return std::popcount(mask_); }
  bool isEmpty() const { return mask_ == 0; }
  bool contains(int x) const;
  bool isSubsetOf(const Subset& other) const;

  Subset with(int x) const;
  Subset without(int x) const;
  Subset complement() const { return Subset(n_, fullMask(n_) & ~mask_); }

  Subset operator&(const Subset& o) const;
  Subset operator|(const Subset& o) const;
  Subset operator-(const Subset& o) const;

  std::vector<int> elements() const;
  std::string toString() const;

  friend bool operator==(const Subset&, const Subset&) = default;
  // (cardinality, mask) order; universes must agree.
  friend std::strong_ordering operator<=>(const Subset& a, const Subset& b);

 private:
  void requireSameUniverse(const Subset& o) const;

  std::uint64_t mask_ = 0;
  int n_ = 0;
};

}  // namespace cg
