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

#include "cg/ballgeom.hpp"

#include <algorithm>
#include <array>
#include <charconv>
#include <cmath>
#include <limits>
#include <numbers>
#include <set>
#include <sstream>
#include <thread>

#include "cg/error.hpp"

namespace cg {
namespace {

double dot(const std::vector<double>& a, const std::vector<double>& b) {
  double s = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

double norm(const std::vector<double>& a) { return std::sqrt(dot(a, a)); }

double support(const Ball& b, const std::vector<double>& u) { return dot(b.center, u) + b.radius; }

void requireUniverse(const BallConfig& config, const Subset& y) {
  if (y.universe() != config.size()) throw ContractError("subset universe does not match the configuration");
}

void requireDim(const Ball& b, const BallConfig& config) {
  if (static_cast<int>(b.center.size()) != config.dim()) throw ContractError("ball dimension mismatch");
}

// max_{i in Y} h_i(u) - h_b(u)
double gap(const Ball& b, const BallConfig& config, const std::vector<int>& ys, const std::vector<double>& u) {
  double best = -std::numeric_limits<double>::infinity();
  for (int i : ys) best = std::max(best, support(config[i], u));
  return best - support(b, u);
}

std::string fmt(double v) {
  std::array<char, 64> buf{};
  auto res = std::to_chars(buf.data(), buf.data() + buf.size(), v == 0.0 ? 0.0 : v);
  return std::string(buf.data(), res.ptr);
}

// Radical inverse in base p, for Halton points.
double radicalInverse(std::uint64_t i, int p) {
  double f = 1.0, r = 0.0;
  while (i > 0) {
    f /= p;
    r += f * static_cast<double>(i % p);
    i /= p;
  }
  return r;
}

constexpr std::array<int, 16> kPrimes{2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47, 53};

// Deterministic, roughly uniform unit directions.
std::vector<std::vector<double>> sampleDirections(int k, int count) {
  std::vector<std::vector<double>> out;
  out.reserve(count);
  const double pi = std::numbers::pi;
  if (k == 1) return {{1.0}, {-1.0}};
  if (k == 2) {
    for (int i = 0; i < count; ++i) {
      const double t = 2.0 * pi * i / count;
      out.push_back({std::cos(t), std::sin(t)});
    }
    return out;
  }
  if (k == 3) {
    // Fibonacci lattice.
    const double golden = pi * (3.0 - std::sqrt(5.0));
    for (int i = 0; i < count; ++i) {
      const double z = 1.0 - (2.0 * i + 1.0) / count;
      const double r = std::sqrt(std::max(0.0, 1.0 - z * z));
      const double t = golden * i;
      out.push_back({r * std::cos(t), r * std::sin(t), z});
    }
    return out;
  }
  if (k > 2 * static_cast<int>(kPrimes.size())) throw SizeGuardError("sampled hull test supports dim <= 32");
  // Halton points pushed through Box-Muller, then normalised.
  for (int i = 1; out.size() < static_cast<std::size_t>(count); ++i) {
    std::vector<double> v(k);
    for (int j = 0; j < k; j += 2) {
      const double u1 = std::max(radicalInverse(i, kPrimes[j]), 1e-300);
      const double u2 = radicalInverse(i, kPrimes[j + 1]);
      const double rad = std::sqrt(-2.0 * std::log(u1));
      v[j] = rad * std::cos(2.0 * pi * u2);
      if (j + 1 < k) v[j + 1] = rad * std::sin(2.0 * pi * u2);
    }
    const double n = norm(v);
    if (n < 1e-12) continue;
    for (double& x : v) x /= n;
    out.push_back(std::move(v));
  }
  return out;
}

void normalize(std::vector<double>& v) {
  const double n = norm(v);
  for (double& x : v) x /= n;
}

// Projected ascent on g(u) = -gap, starting from u.
std::pair<double, std::vector<double>> refine(const Ball& b, const BallConfig& config, const std::vector<int>& ys,
                                              std::vector<double> u) {
  double g = -gap(b, config, ys, u);
  double step = 0.05;
  for (int it = 0; it < 400 && step > 1e-13; ++it) {
    // Subgradient of h_b - h_{i*} is c_b - c_{i*}.
    int arg = ys.front();
    double best = -std::numeric_limits<double>::infinity();
    for (int i : ys) {
      const double h = support(config[i], u);
      if (h > best) best = h, arg = i;
    }
    std::vector<double> grad(u.size());
    for (std::size_t j = 0; j < u.size(); ++j) grad[j] = b.center[j] - config[arg].center[j];
    const double along = dot(grad, u);
    for (std::size_t j = 0; j < u.size(); ++j) grad[j] -= along * u[j];
    const double gn = norm(grad);
    if (gn < 1e-15) break;
    std::vector<double> cand(u.size());
    for (std::size_t j = 0; j < u.size(); ++j) cand[j] = u[j] + step * grad[j] / gn;
    normalize(cand);
    const double gc = -gap(b, config, ys, cand);
    if (gc > g) {
      g = gc;
      u = std::move(cand);
      step *= 1.5;
    } else {
      step *= 0.5;
    }
  }
  return {g, u};
}

}  // namespace

BallConfig::BallConfig(int dim, std::vector<Ball> balls) : dim_(dim), balls_(std::move(balls)) {
  if (dim < 1) throw ContractError("dimension must be >= 1");
  if (balls_.size() > static_cast<std::size_t>(kMaxUniverse))
    throw SizeGuardError("at most 64 balls per configuration");
  std::set<std::string> seen;
  for (std::size_t i = 0; i < balls_.size(); ++i) {
    auto& b = balls_[i];
    if (static_cast<int>(b.center.size()) != dim) throw ContractError("ball " + std::to_string(i) + " has wrong dimension");
    for (double c : b.center)
      if (!std::isfinite(c)) throw ContractError("non-finite center coordinate");
    if (!std::isfinite(b.radius) || b.radius < 0) throw ContractError("radius must be finite and >= 0");
    if (b.label.empty()) b.label = std::to_string(i);
    if (!seen.insert(b.label).second) throw ContractError("duplicate label " + b.label);
  }
}

std::vector<std::string> BallConfig::labels() const {
  std::vector<std::string> out;
  for (const auto& b : balls_) out.push_back(b.label);
  return out;
}

int BallConfig::indexOf(const std::string& label) const {
  for (int i = 0; i < size(); ++i)
    if (balls_[i].label == label) return i;
  return -1;
}

bool operator==(const BallConfig& a, const BallConfig& b) {
  if (a.dim_ != b.dim_ || a.balls_.size() != b.balls_.size()) return false;
  for (std::size_t i = 0; i < a.balls_.size(); ++i) {
    const auto &x = a.balls_[i], &y = b.balls_[i];
    if (x.center != y.center || x.radius != y.radius || x.label != y.label) return false;
  }
  return true;
}

double supportValue(const Ball& b, const std::vector<double>& u) {
  if (u.size() != b.center.size()) throw ContractError("direction dimension mismatch");
  if (std::abs(norm(u) - 1.0) > 1e-12) throw ContractError("direction is not a unit vector");
  return support(b, u);
}

double ballInBallMargin(const Ball& inner, const Ball& outer) {
  if (inner.center.size() != outer.center.size()) throw ContractError("ball dimension mismatch");
  double d2 = 0.0;
  for (std::size_t i = 0; i < inner.center.size(); ++i) {
    const double d = inner.center[i] - outer.center[i];
    d2 += d * d;
  }
  return (outer.radius - inner.radius) - std::sqrt(d2);
}

bool ballInBall(const Ball& inner, const Ball& outer, double tol) { return ballInBallMargin(inner, outer) >= -tol; }

double hullMargin2D(const Ball& b, const BallConfig& config, const Subset& y) {
  requireUniverse(config, y);
  requireDim(b, config);
  if (config.dim() > 2) throw ContractError("exact hull test needs dim <= 2");
  const auto ys = y.elements();
  if (ys.empty()) throw ContractError("empty ball set");

  if (config.dim() == 1) return std::min(gap(b, config, ys, {1.0}), gap(b, config, ys, {-1.0}));

  std::vector<Disk> disks;
  disks.reserve(ys.size());
  for (int i : ys) disks.push_back({config[i].center[0], config[i].center[1], config[i].radius});
  return diskHullMargin({b.center[0], b.center[1], b.radius}, disks);
}

double diskHullMargin(const Disk& b, std::span<const Disk> ys) {
  if (ys.empty()) throw ContractError("empty ball set");
  auto gapAt = [&](double ux, double uy) {
    double best = -std::numeric_limits<double>::infinity();
    for (const auto& d : ys) best = std::max(best, d.x * ux + d.y * uy + d.r);
    return best - (b.x * ux + b.y * uy + b.r);
  };
  // The gap is piecewise sinusoidal in the angle. Its minimum sits at an arc
  // endpoint (two supports tie) or at the stationary point of some h_i - h_b.
  double m = gapAt(1.0, 0.0);
  for (const auto& d : ys) {
    const double dx = d.x - b.x, dy = d.y - b.y;
    const double len = std::hypot(dx, dy);
    if (len > 0) m = std::min(m, gapAt(-dx / len, -dy / len));
  }
  for (std::size_t p = 0; p < ys.size(); ++p) {
    for (std::size_t q = p + 1; q < ys.size(); ++q) {
      // <c_i - c_j, u> = r_j - r_i
      const double dx = ys[p].x - ys[q].x, dy = ys[p].y - ys[q].y;
      const double len = std::hypot(dx, dy);
      if (len == 0) continue;  // concentric: one dominates everywhere
      const double s = (ys[q].r - ys[p].r) / len;
      if (std::abs(s) > 1.0) continue;
      const double w = std::sqrt(std::max(0.0, 1.0 - s * s));
      const double ex = dx / len, ey = dy / len;
      m = std::min(m, gapAt(s * ex - w * ey, s * ey + w * ex));
      m = std::min(m, gapAt(s * ex + w * ey, s * ey - w * ex));
    }
  }
  return m;
}

bool ballInHull2D(const Ball& b, const BallConfig& config, const Subset& y, double tol) {
  if (config.dim() != 2) throw ContractError("ballInHull2D needs dim 2");
  return hullMargin2D(b, config, y) >= -tol;
}

HullKDResult ballInHullSampled(const Ball& b, const BallConfig& config, const Subset& y, double tol, int samples) {
  requireUniverse(config, y);
  requireDim(b, config);
  const int k = config.dim();
  if (k < 2) throw ContractError("sampled hull test needs dim >= 2");
  const auto ys = y.elements();
  if (ys.empty()) throw ContractError("empty ball set");
  if (samples <= 0) samples = k == 2 ? 10000 : k == 3 ? 20000 : 4000 * k;

  const auto dirs = sampleDirections(k, samples);
  std::vector<std::pair<double, int>> scored;
  scored.reserve(dirs.size());
  for (int i = 0; i < static_cast<int>(dirs.size()); ++i) scored.emplace_back(-gap(b, config, ys, dirs[i]), i);
  const int top = std::min<int>(16, static_cast<int>(scored.size()));
  std::partial_sort(scored.begin(), scored.begin() + top, scored.end(), std::greater<>());

  HullKDResult res;
  res.maxViolation = -std::numeric_limits<double>::infinity();
  for (int t = 0; t < top; ++t) {
    auto [g, u] = refine(b, config, ys, dirs[scored[t].second]);
    if (g > res.maxViolation) {
      res.maxViolation = g;
      res.direction = std::move(u);
    }
  }
  if (res.maxViolation > tol) {
    res.verdict = HullVerdict::Outside;
  } else if (res.maxViolation <= -tol) {
    res.verdict = HullVerdict::Inside;
    res.heuristic = true;
  } else {
    res.verdict = HullVerdict::BoundaryUncertain;
    res.heuristic = true;
  }
  return res;
}

HullKDResult ballInHullKD(const Ball& b, const BallConfig& config, const Subset& y, double tol) {
  if (config.dim() > 2) return ballInHullSampled(b, config, y, tol);
  HullKDResult res;
  res.maxViolation = -hullMargin2D(b, config, y);
  res.verdict = res.maxViolation > tol    ? HullVerdict::Outside
                : res.maxViolation < -tol ? HullVerdict::Inside
                                          : HullVerdict::BoundaryUncertain;
  return res;
}

ChSResult chSDetailed(const BallConfig& config, const Subset& y, const HullOptions& opts) {
  requireUniverse(config, y);
  const int m = config.size();
  ChSResult res{y, Subset::empty(m)};
  if (y.size() == 0) return res;
  for (int x = 0; x < m; ++x) {
    if (y.contains(x)) continue;
    if (config.dim() <= 2) {
      const double margin = hullMargin2D(config[x], config, y);
      if (margin >= -opts.tol) res.members = res.members.with(x);
      if (opts.strict && std::abs(margin) < opts.strictMargin) res.ambiguous = res.ambiguous.with(x);
    } else {
      auto kd = ballInHullSampled(config[x], config, y, opts.tol);
      if (kd.verdict != HullVerdict::Outside) res.members = res.members.with(x);
      const bool close = opts.strict && std::abs(kd.maxViolation) < opts.strictMargin;
      if (kd.verdict == HullVerdict::BoundaryUncertain || close) res.ambiguous = res.ambiguous.with(x);
    }
  }
  return res;
}

Subset chS(const BallConfig& config, const Subset& y, const HullOptions& opts) {
  return chSDetailed(config, y, opts).members;
}

InducedSpace inducedClosureSpace(const BallConfig& config, const HullOptions& opts, int threads) {
  const int m = config.size();
  if (m > kMaxInducedBalls) throw SizeGuardError("induced geometry supports at most 16 balls");
  const std::uint64_t total = std::uint64_t{1} << m;
  threads = std::clamp(threads, 1, 64);

  struct Chunk {
    std::vector<std::uint64_t> fixed, ambiguous;
  };
  std::vector<Chunk> chunks(threads);
  auto work = [&](int t) {
    const std::uint64_t lo = total * t / threads, hi = total * (t + 1) / threads;
    for (std::uint64_t mask = lo; mask < hi; ++mask) {
      auto r = chSDetailed(config, Subset(m, mask), opts);
      if (r.members.mask() == mask) chunks[t].fixed.push_back(mask);
      if (r.ambiguous.size() > 0) chunks[t].ambiguous.push_back(mask);
    }
  };
  if (threads == 1) {
    work(0);
  } else {
    std::vector<std::jthread> pool;
    for (int t = 0; t < threads; ++t) pool.emplace_back(work, t);
  }
  std::vector<std::uint64_t> fixed, ambiguous;
  for (auto& c : chunks) {
    fixed.insert(fixed.end(), c.fixed.begin(), c.fixed.end());
    ambiguous.insert(ambiguous.end(), c.ambiguous.begin(), c.ambiguous.end());
  }
  return InducedSpace{ClosureSpace::fromMembersUnchecked(m, std::move(fixed)), std::move(ambiguous)};
}

ConvexGeometry inducedGeometry(const BallConfig& config, const HullOptions& opts, int threads) {
  return ConvexGeometry::fromSpace(inducedClosureSpace(config, opts, threads).space);
}

Poset inclusionOrder(const BallConfig& config, double tol) {
  const int m = config.size();
  if (m > kMaxPosetSize) throw SizeGuardError("too many balls for a poset");
  BitMatrix leq(m);
  for (int i = 0; i < m; ++i) {
    for (int j = 0; j < m; ++j) {
      if (i == j) {
        leq.set(i, j);
        continue;
      }
      const Ball &a = config[i], &b = config[j];
      if (a.center == b.center && a.radius == b.radius)
        throw ContractError("balls " + a.label + " and " + b.label + " are identical");
      if (ballInBall(a, b, tol)) leq.set(i, j);
    }
  }
  // The Poset constructor rejects near-duplicates that break antisymmetry or
  // transitivity at this tolerance.
  return Poset(std::move(leq), config.labels());
}

std::vector<std::pair<int, int>> ambiguousInclusions(const BallConfig& config, double margin) {
  std::vector<std::pair<int, int>> out;
  for (int i = 0; i < config.size(); ++i)
    for (int j = 0; j < config.size(); ++j)
      if (i != j && std::abs(ballInBallMargin(config[i], config[j])) < margin) out.emplace_back(i, j);
  return out;
}

Ellipsoid::Ellipsoid(Eigen::VectorXd center, Eigen::MatrixXd shape)
    : center_(std::move(center)), shape_(std::move(shape)) {
  const auto k = center_.size();
  if (k < 1) throw ContractError("ellipsoid dimension must be >= 1");
  if (shape_.rows() != k || shape_.cols() != k) throw ContractError("shape matrix has wrong size");
  if (!center_.allFinite() || !shape_.allFinite()) throw ContractError("non-finite ellipsoid data");
  const double scale = std::max(1.0, shape_.cwiseAbs().maxCoeff());
  if ((shape_ - shape_.transpose()).cwiseAbs().maxCoeff() > 1e-9 * scale)
    throw ContractError("shape matrix is not symmetric");
  shape_ = 0.5 * (shape_ + shape_.transpose());
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(shape_, Eigen::EigenvaluesOnly);
  const auto& ev = es.eigenvalues();
  if (ev.minCoeff() <= 1e-12 * std::max(1.0, ev.cwiseAbs().maxCoeff()))
    throw ContractError("shape matrix is not positive definite");
}

Ellipsoid Ellipsoid::ball(Eigen::VectorXd center, double radius) {
  if (!(radius > 0)) throw ContractError("ellipsoid radius must be > 0");
  const auto k = center.size();
  return Ellipsoid(std::move(center), Eigen::MatrixXd::Identity(k, k) / (radius * radius));
}

double ellipsoidContainmentValue(const Ellipsoid& inner, const Ellipsoid& outer) {
  if (inner.dim() != outer.dim()) throw ContractError("ellipsoid dimension mismatch");
  const int k = inner.dim();
  // inner = {c1 + L^{-T} y : |y| <= 1} with A1 = L L^T.
  Eigen::LLT<Eigen::MatrixXd> llt(inner.shape());
  const Eigen::MatrixXd l = llt.matrixL();
  const Eigen::MatrixXd linvT =
      l.transpose().triangularView<Eigen::Upper>().solve(Eigen::MatrixXd::Identity(k, k));
  const Eigen::VectorXd d = inner.center() - outer.center();
  const Eigen::MatrixXd& a2 = outer.shape();
  Eigen::MatrixXd mq = linvT.transpose() * a2 * linvT;
  mq = 0.5 * (mq + mq.transpose());
  const Eigen::VectorXd bq = linvT.transpose() * (a2 * d);
  const double c = d.dot(a2 * d);

  // max_{|y|=1} y^T M y + 2 b^T y equals min over lambda > mu_max of
  // lambda + sum beta_i^2 / (lambda - mu_i). phi is convex there.
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(mq);
  const Eigen::VectorXd mu = es.eigenvalues();
  const Eigen::VectorXd beta = es.eigenvectors().transpose() * bq;
  const double muMax = mu.maxCoeff();
  auto phi = [&](double lam) {
    double s = lam;
    for (int i = 0; i < k; ++i)
      if (beta[i] != 0) s += beta[i] * beta[i] / (lam - mu[i]);
    return s;
  };
  auto dphi = [&](double lam) {
    double s = 1.0;
    for (int i = 0; i < k; ++i)
      if (beta[i] != 0) s -= beta[i] * beta[i] / ((lam - mu[i]) * (lam - mu[i]));
    return s;
  };
  double lo = muMax, hi = muMax + bq.norm() + 1.0;
  for (int it = 0; it < 200 && hi - lo > 1e-16 * std::max(1.0, std::abs(hi)); ++it) {
    const double mid = 0.5 * (lo + hi);
    if (mid <= lo || mid >= hi) break;
    (dphi(mid) < 0 ? lo : hi) = mid;
  }
  return phi(hi) + c;
}

bool ellipsoidInEllipsoid(const Ellipsoid& inner, const Ellipsoid& outer, double tol) {
  return ellipsoidContainmentValue(inner, outer) <= 1.0 + tol;
}

std::string toSvg(const BallConfig& config) {
  if (config.dim() != 2) throw ContractError("SVG export needs dim 2");
  double x0 = 0, y0 = 0, x1 = 1, y1 = 1;
  bool first = true;
  for (const auto& b : config.balls()) {
    const double bx0 = b.center[0] - b.radius, bx1 = b.center[0] + b.radius;
    const double by0 = b.center[1] - b.radius, by1 = b.center[1] + b.radius;
    if (first) {
      x0 = bx0, x1 = bx1, y0 = by0, y1 = by1;
      first = false;
    } else {
      x0 = std::min(x0, bx0), x1 = std::max(x1, bx1), y0 = std::min(y0, by0), y1 = std::max(y1, by1);
    }
  }
  const double pad = 0.05 * std::max({x1 - x0, y1 - y0, 1.0});
  x0 -= pad, y0 -= pad, x1 += pad, y1 += pad;
  const double stroke = 0.004 * std::max(x1 - x0, y1 - y0);

  std::ostringstream os;
  // Flip y so the picture matches the usual orientation.
  os << "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\"" << fmt(x0) << ' ' << fmt(-y1) << ' ' << fmt(x1 - x0)
     << ' ' << fmt(y1 - y0) << "\">\n";
  for (const auto& b : config.balls()) {
    const double r = b.radius > 0 ? b.radius : 2 * stroke;
    os << "  <circle cx=\"" << fmt(b.center[0]) << "\" cy=\"" << fmt(-b.center[1]) << "\" r=\"" << fmt(r)
       << "\" fill=\"" << (b.radius > 0 ? "none" : "black") << "\" stroke=\"black\" stroke-width=\"" << fmt(stroke)
       << "\"/>\n";
    std::string text;
    for (char ch : b.label) {
      if (ch == '<') text += "&lt;";
      else if (ch == '>') text += "&gt;";
      else if (ch == '&') text += "&amp;";
      else text += ch;
    }
    os << "  <text x=\"" << fmt(b.center[0]) << "\" y=\"" << fmt(-b.center[1]) << "\" font-size=\""
       << fmt(10 * stroke) << "\" text-anchor=\"middle\">" << text << "</text>\n";
  }
  os << "</svg>\n";
  return os.str();
}

}  // namespace cg
