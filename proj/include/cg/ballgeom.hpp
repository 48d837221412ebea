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

#include <Eigen/Dense>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "cg/poset.hpp"
#include "cg/setfam.hpp"
#include "cg/subset.hpp"

namespace cg {

// Tolerance shared by all geometric predicates.
inline constexpr double kGeomTol = 1e-9;

// Closed ball. Radius 0 is a point.
struct Ball {
  std::vector<double> center;
  double radius = 0.0;
  std::string label;
};

class BallConfig {
 public:
  BallConfig() = default;
  // Validates uniform dimension, finite coordinates, radius >= 0 and unique
  // labels. Empty labels become the ball's index.
  BallConfig(int dim, std::vector<Ball> balls);

  int dim() const { return dim_; }
  int size() const { return static_cast<int>(balls_.size()); }
  const std::vector<Ball>& balls() const { return balls_; }
  const Ball& operator[](int i) const { return balls_.at(i); }
  std::vector<std::string> labels() const;
  // -1 if absent.
  int indexOf(const std::string& label) const;

  friend bool operator==(const BallConfig&, const BallConfig&);

 private:
  int dim_ = 0;
  std::vector<Ball> balls_;
};

// <c,u> + r. u must be a unit vector within 1e-12.
double supportValue(const Ball& b, const std::vector<double>& u);

bool ballInBall(const Ball& inner, const Ball& outer, double tol = kGeomTol);
// (r_out - r_in) - |c_in - c_out|; nonnegative iff contained.
double ballInBallMargin(const Ball& inner, const Ball& outer);

// min over unit u of max_{i in Y} h_i(u) - h_b(u). b lies in the hull of the
// Y-balls iff this is >= 0. Exact for dim 1 and 2 (critical directions).
double hullMargin2D(const Ball& b, const BallConfig& config, const Subset& y);

struct Disk {
  double x = 0, y = 0, r = 0;
};
// Same margin on bare disks, for inner loops.
double diskHullMargin(const Disk& b, std::span<const Disk> ys);

// Exact planar test, inside iff margin >= -tol.
bool ballInHull2D(const Ball& b, const BallConfig& config, const Subset& y, double tol = kGeomTol);

enum class HullVerdict { Inside, Outside, BoundaryUncertain };

struct HullKDResult {
  HullVerdict verdict = HullVerdict::BoundaryUncertain;
  // Largest g(u) = h_b(u) - max_i h_i(u) found, and where.
  double maxViolation = 0.0;
  std::vector<double> direction;
  // True when the verdict rests on sampling (only Outside is sound then).
  bool heuristic = false;
};

// Containment for any dimension. dim <= 2 is decided exactly; higher
// dimensions sample directions and refine by projected ascent.
HullKDResult ballInHullKD(const Ball& b, const BallConfig& config, const Subset& y,
                          double tol = kGeomTol);

// Sampling path regardless of dimension (dim >= 2). Exposed so the planar
// case can be cross-checked against the exact test.
HullKDResult ballInHullSampled(const Ball& b, const BallConfig& config, const Subset& y,
                               double tol = kGeomTol, int samples = 0);

struct HullOptions {
  double tol = kGeomTol;
  // In strict mode, |margin| < strictMargin is reported as ambiguous.
  bool strict = false;
  double strictMargin = 1e-6;
};

struct ChSResult {
  Subset members;
  // Balls outside Y whose membership is too close to call (strict mode, or
  // BoundaryUncertain in dim >= 3).
  Subset ambiguous;
};

ChSResult chSDetailed(const BallConfig& config, const Subset& y, const HullOptions& opts = {});
Subset chS(const BallConfig& config, const Subset& y, const HullOptions& opts = {});

struct InducedSpace {
  ClosureSpace space;
  // Sets Y for which chS reported an ambiguous ball.
  std::vector<std::uint64_t> ambiguousSets;
};

inline constexpr int kMaxInducedBalls = 16;

// Fixed points of chS over all 2^m subsets. m <= 16.
InducedSpace inducedClosureSpace(const BallConfig& config, const HullOptions& opts = {},
                                 int threads = 1);
// Same, validated as a convex geometry (ContractError with witness otherwise).
ConvexGeometry inducedGeometry(const BallConfig& config, const HullOptions& opts = {},
                               int threads = 1);

// x <= y iff ball x is inside ball y. Identical balls under distinct labels
// are rejected, as is a relation that fails transitivity at this tolerance.
Poset inclusionOrder(const BallConfig& config, double tol = kGeomTol);
// Ordered pairs (x, y), x != y, whose containment margin is within `margin`
// of zero.
std::vector<std::pair<int, int>> ambiguousInclusions(const BallConfig& config, double margin);

// Region {x : (x-c)^T A (x-c) <= 1}.
class Ellipsoid {
 public:
  Ellipsoid(Eigen::VectorXd center, Eigen::MatrixXd shape);
  static Ellipsoid ball(Eigen::VectorXd center, double radius);

  int dim() const { return static_cast<int>(center_.size()); }
  const Eigen::VectorXd& center() const { return center_; }
  const Eigen::MatrixXd& shape() const { return shape_; }

 private:
  Eigen::VectorXd center_;
  Eigen::MatrixXd shape_;
};

// max over x in inner of (x-c)^T A (x-c) for the outer ellipsoid.
double ellipsoidContainmentValue(const Ellipsoid& inner, const Ellipsoid& outer);
bool ellipsoidInEllipsoid(const Ellipsoid& inner, const Ellipsoid& outer, double tol = kGeomTol);

// Disks with labels; dim must be 2.
std::string toSvg(const BallConfig& config);

}  // namespace cg
