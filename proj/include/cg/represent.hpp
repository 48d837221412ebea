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

#include "cg/ballgeom.hpp"
#include "cg/poset.hpp"
#include "cg/setfam.hpp"

namespace cg {

struct SearchParams {
  std::uint64_t seed = 0;
  int restarts = 200;
  int maxIters = 3000;
  // Centers start uniform in [-spread, spread]^k.
  double spread = 4.0;
  // Perturbation scale is multiplied by this after every iteration.
  double decay = 0.998;
  // Every constraint must hold by at least this much before the verifier runs.
  double margin = 1e-3;
  int threads = 1;
};

void validate(const SearchParams& p);

enum class VerifyStatus { Verified, Mismatch, Ambiguous };

std::string statusName(VerifyStatus s);

struct RepresentationCheck {
  VerifyStatus status = VerifyStatus::Verified;
  // Smallest offending Y (by size, then mask), with both closures.
  std::optional<Subset> witness;
  Subset expected, actual;
};

// Ball i stands for element i. With strict options, any Y whose chS has a
// near-boundary ball is reported as Ambiguous unless a clear mismatch
// exists elsewhere.
RepresentationCheck verifyRepresentation(const ConvexGeometry& g, const BallConfig& config,
                                         const HullOptions& opts = {.strict = true});

struct OrderCheck {
  VerifyStatus status = VerifyStatus::Verified;
  // First pair (a, b) in poset indices where containment and order disagree
  // (or are too close to call).
  std::optional<std::pair<int, int>> witness;
};

// Balls are matched to poset elements by label.
OrderCheck verifySphereOrder(const Poset& p, const BallConfig& config, double strictMargin = 1e-6);

// jiPoset(inducedGeometry(config)) against inclusionOrder(config) under the
// label identity. m <= 10, dim 2.
OrderCheck bridgeCheck(const BallConfig& config, const HullOptions& opts = {.strict = true});

struct SearchResult {
  bool success = false;
  // The verified configuration on success, otherwise the best one seen.
  BallConfig config;
  // Hinge loss of `config` and the number of violated constraints.
  double loss = 0.0;
  int violated = 0;
  // Index of the restart that succeeded, or restarts tried on failure.
  int restart = 0;
};

// Randomized search for disks whose ch_s equals the closure of g. Returned
// successes always pass verifyRepresentation in strict mode. Labels are the
// element indices unless given.
SearchResult searchCircleRepresentation(const ConvexGeometry& g, const SearchParams& params,
                                        const std::vector<std::string>& labels = {});

// Balls in R^k (k in 1..3) whose inclusion order equals p. For k = 1 a
// 2-realizer is tried first and turned into intervals.
SearchResult searchSphereOrder(const Poset& p, int k, const SearchParams& params);

}  // namespace cg
