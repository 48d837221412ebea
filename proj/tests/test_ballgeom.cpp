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

#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>

#include "cg/ballgeom.hpp"
#include "doctest.h"
#include "test_util.hpp"

using namespace cg;

namespace {

Ball disk(double x, double y, double r, std::string label = {}) { return Ball{{x, y}, r, std::move(label)}; }

BallConfig planar(std::vector<Ball> balls) { return BallConfig(2, std::move(balls)); }

struct Pt {
  double x, y;
};

double cross(Pt o, Pt a, Pt b) { return (a.x - o.x) * (b.y - o.y) - (a.y - o.y) * (b.x - o.x); }

// Andrew's monotone chain, counter-clockwise, collinear points dropped.
std::vector<Pt> hullOf(std::vector<Pt> pts) {
  std::sort(pts.begin(), pts.end(), [](Pt a, Pt b) { return a.x < b.x || (a.x == b.x && a.y < b.y); });
  if (pts.size() < 3) return pts;
  std::vector<Pt> h(2 * pts.size());
  std::size_t k = 0;
  for (std::size_t i = 0; i < pts.size(); ++i) {
    while (k >= 2 && cross(h[k - 2], h[k - 1], pts[i]) <= 0) --k;
    h[k++] = pts[i];
  }
  for (std::size_t i = pts.size() - 1, t = k + 1; i-- > 0;) {
    while (k >= t && cross(h[k - 2], h[k - 1], pts[i]) <= 0) --k;
    h[k++] = pts[i];
  }
  h.resize(k - 1);
  return h;
}

// Signed slack of p inside a ccw convex polygon (>= 0 means inside).
double polygonSlack(const std::vector<Pt>& h, Pt p) {
  if (h.size() == 1) return -std::hypot(p.x - h[0].x, p.y - h[0].y);
  double slack = std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i < h.size(); ++i) {
    Pt a = h[i], b = h[(i + 1) % h.size()];
    const double len = std::hypot(b.x - a.x, b.y - a.y);
    slack = std::min(slack, cross(a, b, p) / len);
  }
  if (h.size() == 2) {
    // Segment: inside only if on it.
    const double along = ((p.x - h[0].x) * (h[1].x - h[0].x) + (p.y - h[0].y) * (h[1].y - h[0].y)) /
                         std::pow(std::hypot(h[1].x - h[0].x, h[1].y - h[0].y), 2);
    if (along < 0 || along > 1) return -1;
    return -std::abs(cross(h[0], h[1], p)) / std::hypot(h[1].x - h[0].x, h[1].y - h[0].y);
  }
  return slack;
}

// Polygonal oracle: hull of boundary samples of the Y-disks, tested against
// boundary samples of b.
bool sampledHullOracle(const Ball& b, const BallConfig& cfg, const Subset& y, int samples = 720) {
  std::vector<Pt> pts;
  const double pi = std::numbers::pi;
  for (int i : y.elements())
    for (int s = 0; s < samples; ++s) {
      const double t = 2 * pi * s / samples;
      pts.push_back({cfg[i].center[0] + cfg[i].radius * std::cos(t), cfg[i].center[1] + cfg[i].radius * std::sin(t)});
    }
  auto h = hullOf(pts);
  for (int s = 0; s < samples; ++s) {
    const double t = 2 * pi * s / samples;
    Pt p{b.center[0] + b.radius * std::cos(t), b.center[1] + b.radius * std::sin(t)};
    if (polygonSlack(h, p) < -1e-9) return false;
  }
  return true;
}

BallConfig randomPlanar(int m, std::mt19937_64& rng, double spread = 3.0) {
  std::uniform_real_distribution<double> pos(-spread, spread), rad(0.0, 1.5);
  std::vector<Ball> balls;
  for (int i = 0; i < m; ++i) balls.push_back(disk(pos(rng), pos(rng), rad(rng)));
  return planar(std::move(balls));
}

}  // namespace

TEST_CASE("supportValue and ballInBall examples") {
  CHECK(supportValue(disk(0, 0, 1), {1, 0}) == 1.0);
  CHECK(supportValue(disk(2, 0, 1), {1, 0}) == 3.0);
  const double h = std::sqrt(2.0) / 2;
  CHECK(supportValue(disk(1, 1, 0), {h, h}) == doctest::Approx(std::sqrt(2.0)).epsilon(1e-15));
  CHECK_THROWS_AS(supportValue(disk(0, 0, 1), {1, 1}), ContractError);

  CHECK(ballInBall(disk(0, 0, 1), disk(0, 0, 2)));
  CHECK_FALSE(ballInBall(disk(3, 0, 1), disk(0, 0, 2)));
  CHECK(ballInBall(disk(1, 2, 3), disk(1, 2, 3)));
  CHECK_THROWS_AS(ballInBall(disk(0, 0, 1), Ball{{0, 0, 0}, 1, ""}), ContractError);
}

TEST_CASE("BallConfig validation") {
  CHECK_THROWS_AS(BallConfig(2, {disk(0, 0, 1, "a"), disk(1, 0, 1, "a")}), ContractError);
  CHECK_THROWS_AS(BallConfig(2, {disk(0, 0, -1)}), ContractError);
  CHECK_THROWS_AS(BallConfig(2, {Ball{{0, 0, 0}, 1, "x"}}), ContractError);
  CHECK_THROWS_AS(BallConfig(2, {disk(NAN, 0, 1)}), ContractError);
  auto cfg = planar({disk(0, 0, 1), disk(2, 0, 1, "q")});
  CHECK(cfg.labels() == std::vector<std::string>{"0", "q"});
  CHECK(cfg.indexOf("q") == 1);
  CHECK(cfg.indexOf("z") == -1);
}

TEST_CASE("ballInHull2D examples") {
  auto y = planar({disk(-2, 0, 1), disk(2, 0, 1)});
  const auto all = Subset::full(2);
  CHECK(ballInHull2D(disk(0, 0, 1), y, all));
  CHECK(hullMargin2D(disk(0, 0, 1), y, all) == doctest::Approx(0.0).epsilon(1e-12));
  CHECK_FALSE(ballInHull2D(disk(0, 0, 1.01), y, all));
  CHECK(hullMargin2D(disk(0, 0, 1.01), y, all) == doctest::Approx(-0.01));
  CHECK(ballInHull2D(disk(-2, 0, 1), y, all));
  CHECK(ballInHull2D(disk(2, 0, 1), y, Subset::of(2, {1})));
  CHECK_THROWS_AS(ballInHull2D(disk(0, 0, 1), y, Subset::empty(2)), ContractError);
  CHECK_THROWS_AS(ballInHull2D(Ball{{0, 0, 0}, 1, ""}, y, all), ContractError);
  // Concentric pair: the bigger disk dominates.
  auto conc = planar({disk(0, 0, 1), disk(0, 0, 3)});
  CHECK(ballInHull2D(disk(1, 1, 1), conc, Subset::full(2)));
  CHECK_FALSE(ballInHull2D(disk(2, 2, 1), conc, Subset::full(2)));
}

TEST_CASE("ballInHull2D agrees with a polygonal boundary oracle") {
  std::mt19937_64 rng(21);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  int compared = 0, inside = 0;
  for (int trial = 0; trial < 600; ++trial) {
    const int m = 1 + static_cast<int>(rng() % 5);
    auto cfg = randomPlanar(m, rng);
    // Bias half the probes towards the interior.
    Ball b = disk(0, 0, 0);
    if (trial % 2 == 0) {
      double wsum = 0, x = 0, yv = 0;
      for (int i = 0; i < m; ++i) {
        const double w = unit(rng);
        wsum += w, x += w * cfg[i].center[0], yv += w * cfg[i].center[1];
      }
      b = disk(x / wsum, yv / wsum, 1.2 * unit(rng));
    } else {
      b = disk(6 * unit(rng) - 3, 6 * unit(rng) - 3, 1.5 * unit(rng));
    }
    const auto all = Subset::full(m);
    const double margin = hullMargin2D(b, cfg, all);
    // The 720-gon oracle is off by at most r(1 - cos(pi/720)) < 1e-5.
    if (std::abs(margin) < 1e-3) continue;
    ++compared;
    inside += margin > 0;
    CHECK(ballInHull2D(b, cfg, all) == sampledHullOracle(b, cfg, all));
  }
  CHECK(compared > 500);
  CHECK(inside > 100);
}

TEST_CASE("sampled hull test matches the exact planar test") {
  std::mt19937_64 rng(5);
  int decided = 0;
  for (int trial = 0; trial < 1000; ++trial) {
    const int m = 1 + static_cast<int>(rng() % 5);
    auto cfg = randomPlanar(m, rng);
    auto b = randomPlanar(1, rng)[0];
    const auto all = Subset::full(m);
    const double margin = hullMargin2D(b, cfg, all);
    auto routed = ballInHullKD(b, cfg, all);
    CHECK((routed.verdict == HullVerdict::Inside) == (margin > kGeomTol));
    CHECK((routed.verdict == HullVerdict::Outside) == (margin < -kGeomTol));
    CHECK_FALSE(routed.heuristic);
    if (std::abs(margin) < 1e-6) continue;
    ++decided;
    auto sampled = ballInHullSampled(b, cfg, all);
    CHECK(sampled.verdict == routed.verdict);
    CHECK(sampled.maxViolation == doctest::Approx(-margin).epsilon(1e-6));
  }
  CHECK(decided > 900);
}

TEST_CASE("ballInHullKD in three dimensions") {
  auto pair = BallConfig(3, {Ball{{-2, 0, 0}, 1, "l"}, Ball{{2, 0, 0}, 1, "r"}});
  const auto all = Subset::full(2);
  auto out = ballInHullKD(Ball{{0, 0, 0.5}, 1, ""}, pair, all);
  REQUIRE(out.verdict == HullVerdict::Outside);
  // g((0,0,1)) = 1.5 - 1 = 0.5 is the worst violation.
  CHECK(out.maxViolation == doctest::Approx(0.5).epsilon(1e-6));
  CHECK(out.direction[2] == doctest::Approx(1.0).epsilon(1e-4));

  auto in = ballInHullKD(Ball{{0, 0, 0}, 0.5, ""}, pair, all);
  CHECK(in.verdict == HullVerdict::Inside);
  CHECK(in.heuristic);
  CHECK(ballInHullKD(Ball{{0, 0, 0}, 1, ""}, pair, all).verdict == HullVerdict::BoundaryUncertain);

  // Single-ball case agrees with ballInBall.
  std::mt19937_64 rng(3);
  std::uniform_real_distribution<double> pos(-2, 2), rad(0, 2);
  for (int trial = 0; trial < 100; ++trial) {
    Ball outer{{pos(rng), pos(rng), pos(rng)}, rad(rng), "o"};
    Ball inner{{pos(rng), pos(rng), pos(rng)}, rad(rng), "i"};
    const double margin = ballInBallMargin(inner, outer);
    if (std::abs(margin) < 1e-6) continue;
    auto r = ballInHullKD(inner, BallConfig(3, {outer}), Subset::full(1));
    CHECK((r.verdict == HullVerdict::Inside) == (margin > 0));
    CHECK(r.maxViolation == doctest::Approx(-margin).epsilon(1e-6));
  }
}

TEST_CASE("chS on the reference configuration") {
  auto cfg = cgtest::hullExampleConfig();
  const int a = cfg.indexOf("a"), b = cfg.indexOf("b"), c = cfg.indexOf("c"), d = cfg.indexOf("d"),
            e = cfg.indexOf("e");
  const int m = cfg.size();
  CHECK(chS(cfg, Subset::of(m, {a, b, c})) == Subset::of(m, {a, b, c, d, e}));
  CHECK(chS(cfg, Subset::of(m, {a, c})) == Subset::of(m, {a, c, e}));
  HullOptions strict{.strict = true};
  CHECK(chSDetailed(cfg, Subset::of(m, {a, b, c}), strict).ambiguous.size() == 0);
  CHECK(chSDetailed(cfg, Subset::of(m, {a, c}), strict).ambiguous.size() == 0);
  CHECK(chS(cfg, Subset::empty(m)) == Subset::empty(m));
  for (int x = 0; x < m; ++x) CHECK(chS(cfg, Subset::singleton(m, x)).contains(x));
}

TEST_CASE("inducedGeometry examples") {
  // Three disjoint equal disks on a line: only {left, right} fails to be
  // closed (the middle disk lies in their hull).
  auto line = planar({disk(0, 0, 0.4), disk(1, 0, 0.4), disk(2, 0, 0.4)});
  auto g = inducedGeometry(line);
  CHECK(g.space() == ClosureSpace::fromMembers(3, {0b000, 0b001, 0b010, 0b100, 0b011, 0b110, 0b111}));

  CHECK(inducedGeometry(planar({disk(1, 1, 1)})).space() == ClosureSpace::fromMembers(1, {0, 1}));

  // Outer B(0;3) is index 0, inner B(0;1) is index 1.
  auto nested = planar({disk(0, 0, 3, "outer"), disk(0, 0, 1, "inner")});
  CHECK(inducedGeometry(nested).space() == ClosureSpace::fromMembers(2, {0b00, 0b10, 0b11}));

  std::vector<Ball> many;
  for (int i = 0; i < 17; ++i) many.push_back(disk(i, 0, 0.1));
  CHECK_THROWS_AS(inducedClosureSpace(planar(many)), SizeGuardError);

  // Ambiguity reporting: the stadium touches the middle disk exactly.
  auto touching = planar({disk(-2, 0, 1), disk(0, 0, 1), disk(2, 0, 1)});
  auto ind = inducedClosureSpace(touching, HullOptions{.strict = true});
  CHECK(std::find(ind.ambiguousSets.begin(), ind.ambiguousSets.end(), 0b101) != ind.ambiguousSets.end());
}

TEST_CASE("chS is a closure operator and induces convex geometries") {
  std::mt19937_64 rng(1234);
  for (int trial = 0; trial < 300; ++trial) {
    const int m = 1 + static_cast<int>(rng() % 6);
    auto cfg = randomPlanar(m, rng);
    const std::uint64_t total = std::uint64_t{1} << m;
    std::vector<std::uint64_t> cl(total);
    for (std::uint64_t y = 0; y < total; ++y) cl[y] = chS(cfg, Subset(m, y)).mask();
    for (std::uint64_t y = 0; y < total; ++y) {
      CHECK((cl[y] & y) == y);
      CHECK(cl[cl[y]] == cl[y]);
      for (std::uint64_t z = y; z < total; z = (z + 1) | y)
        if ((z & y) == y) CHECK((cl[y] & cl[z]) == cl[y]);
    }
    auto space = inducedClosureSpace(cfg).space;
    std::vector<std::uint64_t> fam(space.masks().begin(), space.masks().end());
    CHECK(cgtest::naiveIsConvexGeometry(fam, m));
    CHECK(satisfiesAntiExchange(space).ok);
  }
}

TEST_CASE("induced space is independent of the thread count") {
  std::mt19937_64 rng(77);
  for (int trial = 0; trial < 10; ++trial) {
    auto cfg = randomPlanar(7, rng);
    auto one = inducedClosureSpace(cfg, {}, 1);
    auto four = inducedClosureSpace(cfg, {}, 4);
    CHECK(one.space == four.space);
    CHECK(one.ambiguousSets == four.ambiguousSets);
  }
}

TEST_CASE("points: chS is convex hull membership") {
  std::mt19937_64 rng(99);
  std::uniform_real_distribution<double> pos(-5, 5);
  for (int trial = 0; trial < 200; ++trial) {
    const int m = 3 + static_cast<int>(rng() % 5);
    std::vector<Ball> balls;
    for (int i = 0; i < m; ++i) balls.push_back(disk(pos(rng), pos(rng), 0));
    auto cfg = planar(balls);
    for (std::uint64_t y = 1; y < (std::uint64_t{1} << m); ++y) {
      std::vector<Pt> pts;
      for (int i = 0; i < m; ++i)
        if ((y >> i) & 1U) pts.push_back({balls[i].center[0], balls[i].center[1]});
      auto h = hullOf(pts);
      std::uint64_t oracle = y;
      bool nearBoundary = false;
      for (int x = 0; x < m; ++x) {
        if ((y >> x) & 1U) continue;
        const double s = polygonSlack(h, {balls[x].center[0], balls[x].center[1]});
        if (std::abs(s) < 1e-6) nearBoundary = true;
        if (s > 0) oracle |= std::uint64_t{1} << x;
      }
      if (!nearBoundary) CHECK(chS(cfg, Subset(m, y)).mask() == oracle);
    }
  }
}

TEST_CASE("dimension one is exact") {
  auto cfg = BallConfig(1, {Ball{{0}, 1, ""}, Ball{{5}, 1, ""}, Ball{{2.5}, 2, ""}, Ball{{2.5}, 4, ""}});
  CHECK(chS(cfg, Subset::of(4, {0, 1})) == Subset::of(4, {0, 1, 2}));
  CHECK(chS(cfg, Subset::of(4, {3})) == Subset::of(4, {0, 1, 2, 3}));
  CHECK(chS(cfg, Subset::of(4, {2})) == Subset::of(4, {2}));
}

TEST_CASE("inclusionOrder") {
  auto nested = planar({disk(0, 0, 1), disk(0, 0, 2), disk(0.5, 0, 3)});
  CHECK(inclusionOrder(nested) == Poset::chain(3));
  auto apart = planar({disk(0, 0, 1), disk(5, 0, 1), disk(0, 5, 1)});
  CHECK(inclusionOrder(apart) == Poset::antichain(3));
  CHECK_THROWS_AS(inclusionOrder(planar({disk(0, 0, 1, "x"), disk(0, 0, 1, "y")})), ContractError);
  CHECK(ambiguousInclusions(planar({disk(0, 0, 1), disk(1, 0, 2)}), 1e-6) ==
        std::vector<std::pair<int, int>>{{0, 1}});

  // Interval representations read back as 1-dimensional balls.
  std::mt19937_64 rng(4);
  for (int trial = 0; trial < 100; ++trial) {
    const int m = 1 + static_cast<int>(rng() % 8);
    auto p = cgtest::randomTwoDimensional(m, rng);
    auto r = orderDimensionAtMost(p, 2);
    REQUIRE(r.verdict == DimensionVerdict::Yes);
    auto iv = intervalRepresentation2D(p, r.realizer[0], r.realizer[1]);
    std::vector<Ball> balls;
    for (auto& in : iv) balls.push_back(Ball{{0.5 * (in.lo + in.hi)}, 0.5 * (in.hi - in.lo), ""});
    CHECK(inclusionOrder(BallConfig(1, balls)) == p);
  }

  // Random duplicate-free configurations give partial orders.
  for (int trial = 0; trial < 200; ++trial) {
    auto cfg = randomPlanar(1 + static_cast<int>(rng() % 8), rng, 1.0);
    CHECK_NOTHROW(inclusionOrder(cfg));
  }
}

TEST_CASE("ellipsoid containment") {
  using Eigen::MatrixXd;
  using Eigen::VectorXd;
  auto unit = Ellipsoid::ball(VectorXd::Zero(2), 1);
  CHECK(ellipsoidInEllipsoid(unit, Ellipsoid::ball(VectorXd::Zero(2), 2)));
  CHECK(ellipsoidInEllipsoid(unit, unit));
  Eigen::Matrix2d a;
  a << 0.25, 0, 0, 1;  // semi-axes 2 and 1
  auto wide = Ellipsoid(VectorXd::Zero(2), a);
  CHECK_FALSE(ellipsoidInEllipsoid(wide, unit));
  CHECK(ellipsoidContainmentValue(wide, unit) == doctest::Approx(4.0));
  CHECK(ellipsoidInEllipsoid(unit, wide));

  Eigen::Matrix2d bad;
  bad << 1, 0, 0, -1;
  CHECK_THROWS_AS(Ellipsoid(VectorXd::Zero(2), bad), ContractError);
  bad << 1, 0.5, 0, 1;
  CHECK_THROWS_AS(Ellipsoid(VectorXd::Zero(2), bad), ContractError);
  CHECK_THROWS_AS(ellipsoidInEllipsoid(unit, Ellipsoid::ball(VectorXd::Zero(3), 1)), ContractError);

  // Against a dense boundary sample of the inner ellipse.
  std::mt19937_64 rng(11);
  std::uniform_real_distribution<double> u(-1, 1);
  for (int trial = 0; trial < 200; ++trial) {
    auto randomEll = [&] {
      MatrixXd m(2, 2);
      m << u(rng), u(rng), u(rng), u(rng);
      MatrixXd s = m * m.transpose() + 0.2 * MatrixXd::Identity(2, 2);
      VectorXd c(2);
      c << u(rng), u(rng);
      return Ellipsoid(c, s);
    };
    auto e1 = randomEll(), e2 = randomEll();
    Eigen::LLT<MatrixXd> llt(e1.shape());
    const MatrixXd linvT = llt.matrixU().solve(MatrixXd::Identity(2, 2));
    double best = 0;
    for (int s = 0; s < 20000; ++s) {
      const double t = 2 * std::numbers::pi * s / 20000;
      VectorXd y(2);
      y << std::cos(t), std::sin(t);
      VectorXd x = e1.center() + linvT * y - e2.center();
      best = std::max(best, x.dot(e2.shape() * x));
    }
    const double v = ellipsoidContainmentValue(e1, e2);
    CHECK(v >= best - 1e-9 * std::max(1.0, best));
    CHECK(v == doctest::Approx(best).epsilon(1e-5));
  }
}

TEST_CASE("SVG export") {
  auto svg = toSvg(planar({disk(0, 0, 1, "a<b"), disk(3, 0, 0, "p")}));
  CHECK(svg.find("<svg") == 0);
  CHECK(svg.find("a&lt;b") != std::string::npos);
  CHECK(std::count(svg.begin(), svg.end(), '\n') == 6);
  CHECK_THROWS_AS(toSvg(BallConfig(3, {})), ContractError);
}
