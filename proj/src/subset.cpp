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

#include "cg/subset.hpp"

#include <sstream>

namespace cg {

Subset::Subset(int universe, std::uint64_t mask) : mask_(mask), n_(universe) {
  if (universe < 0 || universe > kMaxUniverse) {
    throw SizeGuardError("universe size " + std::to_string(universe) +
                         " outside 0..64");
  }
  if ((mask & ~fullMask(universe)) != 0) {
    throw ContractError("subset mask has bits outside the universe");
  }
}

Subset Subset::singleton(int n, int x) {
  if (x < 0 || x >= n) throw ContractError("element index out of range");
  return Subset(n, std::uint64_t{1} << x);
}

Subset Subset::of(int n, std::initializer_list<int> elems) {
  return of(n, std::vector<int>(elems));
}

Subset Subset::of(int n, const std::vector<int>& elems) {
  std::uint64_t m = 0;
  for (int x : elems) {
    if (x < 0 || x >= n) throw ContractError("element index out of range");
    m |= std::uint64_t{1} << x;
  }
  return Subset(n, m);
}

bool Subset::contains(int x) const {
  return x >= 0 && x < n_ && ((mask_ >> x) & 1U) != 0;
}

bool Subset::isSubsetOf(const Subset& other) const {
  requireSameUniverse(other);
  return (mask_ & ~other.mask_) == 0;
}

Subset Subset::with(int x) const { return *this | singleton(n_, x); }
Subset Subset::without(int x) const { return *this - singleton(n_, x); }

Subset Subset::operator&(const Subset& o) const {
  requireSameUniverse(o);
  return Subset(n_, mask_ & o.mask_);
}

Subset Subset::operator|(const Subset& o) const {
  requireSameUniverse(o);
  return Subset(n_, mask_ | o.mask_);
}

Subset Subset::operator-(const Subset& o) const {
  requireSameUniverse(o);
  return Subset(n_, mask_ & ~o.mask_);
}

std::vector<int> Subset::elements() const {
  std::vector<int> out;
  out.reserve(size());
  for (std::uint64_t m = mask_; m != 0; m &= m - 1) out.push_back(std::countr_zero(m));
  return out;
}

std::string Subset::toString() const {
  std::ostringstream os;
  os << '{';
  bool first = true;
  for (int x : elements()) {
    if (!first) os << ',';
    os << x;
    first = false;
  }
  os << '}';
  return os.str();
}

std::strong_ordering operator<=>(const Subset& a, const Subset& b) {
  a.requireSameUniverse(b);
  if (auto c = a.size() <=> b.size(); c != 0) return c;
  return a.mask_ <=> b.mask_;
}

void Subset::requireSameUniverse(const Subset& o) const {
  if (n_ != o.n_) {
    throw ContractError("universe size mismatch: " + std::to_string(n_) + " vs " +
                        std::to_string(o.n_));
  }
}

}  // namespace cg
