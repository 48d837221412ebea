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

#include "cg/represent.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <functional>
#include <random>
#include <thread>

#include "cg/error.hpp"

namespace cg {
namespace {

// Orders subsets by size, then mask.
std::vector<std::uint64_t> subsetsBySize(int m) {
  std::vector<std::uint64_t> out(std::uint64_t{1} << m);
  for (std::uint64_t i = 0; i < out.size(); ++i) out[i] = i;
  std::stable_sort(out.begin(), out.end(),
                   [](std::uint64_t a, std::uint64_t b) { return std::popcount(a) < std::popcount(b); });
  return out;
}

// A batch of hinge constraints over balls with `width` parameters each
// (k center coordinates, then the radius). Constraint c is satisfied when
// slack(state, c) >= margin.
struct Problem {
  int balls = 0;
  int width = 0;
  int count = 0;
  std::vector<std::vector<int>> touching;  // constraint ids per ball
  std::function<double(const std::vector<double>&, int)> slack;
  std::function<void(std::vector<double>&, std::mt19937_64&)> init;
};

struct Attempt {
  double loss = 0.0;
  int violated = 0;
  std::vector<double> state;
};

std::mt19937_64 restartRng(std::uint64_t seed, int index) {
  std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                    static_cast<std::uint32_t>(index)};
  return std::mt19937_64(seq);
}

// Simulated annealing with per-ball Gaussian moves and a geometric schedule
// on both the step size and the temperature.
Attempt anneal(const Problem& pr, const SearchParams& params, std::mt19937_64& rng) {
  std::vector<double> state(static_cast<std::size_t>(pr.balls) * pr.width);
  pr.init(state, rng);
  std::vector<double> cost(pr.count);
  auto hinge = [&](int c) { return std::max(0.0, params.margin - pr.slack(state, c)); };
  double loss = 0.0;
  for (int c = 0; c < pr.count; ++c) loss += cost[c] = hinge(c);

  std::normal_distribution<double> gauss(0.0, 1.0);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  std::uniform_int_distribution<int> pickBall(0, std::max(0, pr.balls - 1));
  double sigma = 0.25 * params.spread;
  double temp = 0.02 * params.spread;
  const double sigmaFloor = 1e-5 * params.spread;
  std::vector<double> saved(pr.width), trial;

  Attempt best{loss, 0, state};
  for (int it = 0; it < params.maxIters && loss > 0; ++it) {
    const int b = pickBall(rng);
    const auto base = static_cast<std::size_t>(b) * pr.width;
    std::copy_n(state.begin() + base, pr.width, saved.begin());
    for (int j = 0; j < pr.width; ++j) state[base + j] += sigma * gauss(rng);
    auto& r = state[base + pr.width - 1];
    r = std::abs(r);
    trial.clear();
    double delta = 0.0;
    for (int c : pr.touching[b]) {
      trial.push_back(hinge(c));
      delta += trial.back() - cost[c];
    }
    if (delta <= 0 || unit(rng) < std::exp(-delta / temp)) {
      for (std::size_t i = 0; i < pr.touching[b].size(); ++i) cost[pr.touching[b][i]] = trial[i];
      loss += delta;
      if (loss < best.loss) {
        best.loss = loss;
        best.state = state;
      }
    } else {
      std::copy_n(saved.begin(), pr.width, state.begin() + base);
    }
    sigma = std::max(sigmaFloor, sigma * params.decay);
    temp *= params.decay;
  }
  // Recompute from scratch to shed accumulated rounding.
  state = best.state;
  best.loss = 0.0;
  for (int c = 0; c < pr.count; ++c) {
    const double h = hinge(c);
    best.loss += h;
    best.violated += h > 0;
  }
  return best;
}

// Runs restarts in index order (batched across threads) and returns the
// lowest-index restart that passes `accept`, or the best failure.
SearchResult runRestarts(const Problem& pr, const SearchParams& params,
                         const std::function<BallConfig(const std::vector<double>&)>& build,
                         const std::function<bool(const BallConfig&)>& accept) {
  validate(params);
  const int threads = std::clamp(params.threads, 1, 64);
  SearchResult bestFail;
  bool haveFail = false;
  for (int start = 0; start < params.restarts; start += threads) {
    const int end = std::min(params.restarts, start + threads);
    std::vector<Attempt> attempts(end - start);
    auto work = [&](int idx) {
      auto rng = restartRng(params.seed, idx);
      attempts[idx - start] = anneal(pr, params, rng);
    };
    if (threads == 1) {
      work(start);
    } else {
      std::vector<std::jthread> pool;
      for (int idx = start; idx < end; ++idx) pool.emplace_back(work, idx);
    }
    for (int idx = start; idx < end; ++idx) {
      const auto& a = attempts[idx - start];
      auto config = build(a.state);
      if (a.violated == 0 && accept(config)) return SearchResult{true, std::move(config), a.loss, 0, idx};
      if (!haveFail || a.loss < bestFail.loss) {
        bestFail = SearchResult{false, std::move(config), a.loss, a.violated, 0};
        haveFail = true;
      }
    }
  }
  bestFail.restart = params.restarts;
  return bestFail;
}

std::vector<std::string> defaultLabels(int n, const std::vector<std::string>& given) {
  if (!given.empty()) {
    if (static_cast<int>(given.size()) != n) throw ContractError("label count does not match the universe");
    return given;
  }
  std::vector<std::string> out;
  for (int i = 0; i < n; ++i) out.push_back(std::to_string(i));
  return out;
}

}  // namespace

void validate(const SearchParams& p) {
  if (p.restarts < 1) throw ContractError("restarts must be >= 1");
  if (p.maxIters < 0) throw ContractError("max iterations must be >= 0");
  if (!(p.decay > 0 && p.decay < 1)) throw ContractError("decay must lie in (0, 1)");
  if (!(p.spread > 0)) throw ContractError("spread must be > 0");
  if (!(p.margin > 0)) throw ContractError("margin must be > 0");
}

std::string statusName(VerifyStatus s) {
  switch (s) {
    case VerifyStatus::Verified: return "verified";
    case VerifyStatus::Mismatch: return "mismatch";
    case VerifyStatus::Ambiguous: return "ambiguous";
  }
  return "?";
}

RepresentationCheck verifyRepresentation(const ConvexGeometry& g, const BallConfig& config, const HullOptions& opts) {
  const int m = g.universeSize();
  if (config.size() != m) throw ContractError("configuration size does not match the geometry");
  if (m > kMaxInducedBalls) throw SizeGuardError("verification supports at most 16 elements");
  RepresentationCheck res;
  std::optional<std::uint64_t> firstAmbiguous;
  for (auto y : subsetsBySize(m)) {
    const auto expected = closureMask(g.space(), y);
    auto got = chSDetailed(config, Subset(m, y), opts);
    if (((expected ^ got.members.mask()) & ~got.ambiguous.mask()) != 0) {
      res.status = VerifyStatus::Mismatch;
      res.witness = Subset(m, y);
      res.expected = Subset(m, expected);
      res.actual = got.members;
      return res;
    }
    if (got.ambiguous.size() > 0 && !firstAmbiguous) firstAmbiguous = y;
  }
  if (firstAmbiguous) {
    res.status = VerifyStatus::Ambiguous;
    res.witness = Subset(m, *firstAmbiguous);
    res.expected = Subset(m, closureMask(g.space(), *firstAmbiguous));
    res.actual = chS(config, *res.witness, opts);
  }
  return res;
}

OrderCheck verifySphereOrder(const Poset& p, const BallConfig& config, double strictMargin) {
  const int m = p.size();
  if (config.size() != m) throw ContractError("configuration size does not match the poset");
  std::vector<int> ball(m);
  for (int a = 0; a < m; ++a) {
    ball[a] = config.indexOf(p.labels()[a]);
    if (ball[a] < 0) throw ContractError("label " + p.labels()[a] + " missing from the configuration");
  }
  OrderCheck res;
  for (int a = 0; a < m; ++a) {
    for (int b = 0; b < m; ++b) {
      if (a == b) continue;
      const Ball &x = config[ball[a]], &y = config[ball[b]];
      if (x.center == y.center && x.radius == y.radius)
        throw ContractError("balls " + x.label + " and " + y.label + " are identical");
      const double margin = ballInBallMargin(x, y);
      const bool close = std::abs(margin) < strictMargin;
      if (!close && (margin >= 0) != p.leq(a, b)) return OrderCheck{VerifyStatus::Mismatch, std::make_pair(a, b)};
      if (close && res.status == VerifyStatus::Verified) {
        res.status = VerifyStatus::Ambiguous;
        res.witness = std::make_pair(a, b);
      }
    }
  }
  return res;
}

OrderCheck bridgeCheck(const BallConfig& config, const HullOptions& opts) {
  if (config.dim() != 2) throw ContractError("bridge check needs dim 2");
  if (config.size() > 10) throw SizeGuardError("bridge check supports at most 10 balls");
  const int m = config.size();
  auto induced = inducedClosureSpace(config, opts);
  if (opts.strict) {
    if (!induced.ambiguousSets.empty()) return OrderCheck{VerifyStatus::Ambiguous, {}};
    auto close = ambiguousInclusions(config, opts.strictMargin);
    if (!close.empty()) return OrderCheck{VerifyStatus::Ambiguous, close.front()};
  }
  auto g = ConvexGeometry::fromSpace(induced.space);
  auto ji = jiPoset(g, config.labels());
  for (int a = 0; a < m; ++a)
    for (int b = 0; b < m; ++b)
      if (a != b && ji.leq(a, b) != ballInBall(config[a], config[b], opts.tol))
        return OrderCheck{VerifyStatus::Mismatch, std::make_pair(a, b)};
  return OrderCheck{};
}

SearchResult searchCircleRepresentation(const ConvexGeometry& g, const SearchParams& params,
                                        const std::vector<std::string>& labels) {
  const int n = g.universeSize();
  if (n > kMaxInducedBalls) throw SizeGuardError("search supports at most 16 elements");
  const auto names = defaultLabels(n, labels);

  // x must enter the hull of every minimal generating set of x, and stay out
  // of every maximal closed set avoiding x.
  struct Constraint {
    int x;
    std::vector<int> ys;
    bool inside;
  };
  std::vector<Constraint> cons;
  for (int x = 0; x < n; ++x) {
    const std::uint64_t bit = std::uint64_t{1} << x;
    std::vector<std::uint64_t> gens;
    for (auto y : subsetsBySize(n)) {
      if (y & bit) continue;
      if (!(closureMask(g.space(), y) & bit)) continue;
      bool minimal = true;
      for (auto s : gens) minimal &= (s & y) != s;
      if (minimal) gens.push_back(y);
    }
    for (auto y : gens) cons.push_back({x, Subset(n, y).elements(), true});
    std::vector<std::uint64_t> avoid;
    for (auto c : g.space().masks())
      if (!(c & bit) && c != 0) avoid.push_back(c);
    for (auto c : avoid) {
      bool maximal = true;
      for (auto d : avoid) maximal &= d == c || (c & d) != c;
      if (maximal) cons.push_back({x, Subset(n, c).elements(), false});
    }
  }

  Problem pr;
  pr.balls = n;
  pr.width = 3;
  pr.count = static_cast<int>(cons.size());
  pr.touching.resize(n);
  for (int c = 0; c < pr.count; ++c) {
    pr.touching[cons[c].x].push_back(c);
    for (int y : cons[c].ys) pr.touching[y].push_back(c);
  }
  pr.slack = [&cons](const std::vector<double>& s, int c) {
    const auto& k = cons[c];
    Disk ds[64];
    for (std::size_t i = 0; i < k.ys.size(); ++i) ds[i] = Disk{s[3 * k.ys[i]], s[3 * k.ys[i] + 1], s[3 * k.ys[i] + 2]};
    const double m = diskHullMargin(Disk{s[3 * k.x], s[3 * k.x + 1], s[3 * k.x + 2]}, std::span(ds, k.ys.size()));
    return k.inside ? m : -m;
  };
  pr.init = [&params](std::vector<double>& s, std::mt19937_64& rng) {
    std::uniform_real_distribution<double> pos(-params.spread, params.spread), rad(0.0, 0.5 * params.spread);
    for (std::size_t i = 0; i < s.size(); i += 3) {
      s[i] = pos(rng);
      s[i + 1] = pos(rng);
      s[i + 2] = rad(rng);
    }
  };
  auto build = [&](const std::vector<double>& s) {
    std::vector<Ball> balls;
    for (int i = 0; i < n; ++i) balls.push_back(Ball{{s[3 * i], s[3 * i + 1]}, s[3 * i + 2], names[i]});
    return BallConfig(2, std::move(balls));
  };
  auto accept = [&](const BallConfig& c) { return verifyRepresentation(g, c).status == VerifyStatus::Verified; };
  return runRestarts(pr, params, build, accept);
}

SearchResult searchSphereOrder(const Poset& p, int k, const SearchParams& params) {
  if (k < 1 || k > 3) throw ContractError("k must be 1, 2 or 3");
  const int m = p.size();
  if (m > 10) throw SizeGuardError("sphere order search supports at most 10 elements");
  validate(params);

  if (k == 1 && m >= 1) {
    auto dim = orderDimensionAtMost(p, 2);
    if (dim.verdict == DimensionVerdict::Yes) {
      auto iv = intervalRepresentation2D(p, dim.realizer[0], dim.realizer[1]);
      std::vector<Ball> balls;
      for (int a = 0; a < m; ++a)
        balls.push_back(Ball{{0.5 * static_cast<double>(iv[a].lo + iv[a].hi)},
                             0.5 * static_cast<double>(iv[a].hi - iv[a].lo), p.labels()[a]});
      BallConfig config(1, std::move(balls));
      if (verifySphereOrder(p, config).status == VerifyStatus::Verified) return SearchResult{true, config, 0, 0, 0};
    }
  }

  // One constraint per ordered pair: signed containment margin.
  std::vector<std::pair<int, int>> pairs;
  for (int a = 0; a < m; ++a)
    for (int b = 0; b < m; ++b)
      if (a != b) pairs.emplace_back(a, b);
  const int w = k + 1;
  Problem pr;
  pr.balls = m;
  pr.width = w;
  pr.count = static_cast<int>(pairs.size());
  pr.touching.resize(m);
  for (int c = 0; c < pr.count; ++c) {
    pr.touching[pairs[c].first].push_back(c);
    pr.touching[pairs[c].second].push_back(c);
  }
  pr.slack = [&](const std::vector<double>& s, int c) {
    const auto [a, b] = pairs[c];
    double d2 = 0;
    for (int j = 0; j < k; ++j) {
      const double d = s[a * w + j] - s[b * w + j];
      d2 += d * d;
    }
    const double margin = s[b * w + k] - s[a * w + k] - std::sqrt(d2);
    return p.leq(a, b) ? margin : -margin;
  };
  // Radii start roughly proportional to the number of elements below.
  std::vector<int> below(m, 0);
  for (int a = 0; a < m; ++a)
    for (int b = 0; b < m; ++b) below[a] += p.leq(b, a);
  pr.init = [&](std::vector<double>& s, std::mt19937_64& rng) {
    std::uniform_real_distribution<double> pos(-params.spread, params.spread), jitter(0.5, 1.5);
    for (int a = 0; a < m; ++a) {
      for (int j = 0; j < k; ++j) s[a * w + j] = pos(rng);
      s[a * w + k] = params.spread * below[a] / m * jitter(rng);
    }
  };
  auto build = [&](const std::vector<double>& s) {
    std::vector<Ball> balls;
    for (int a = 0; a < m; ++a)
      balls.push_back(Ball{std::vector<double>(s.begin() + a * w, s.begin() + a * w + k), s[a * w + k], p.labels()[a]});
    return BallConfig(k, std::move(balls));
  };
  auto accept = [&](const BallConfig& c) {
    for (int a = 0; a < m; ++a)
      for (int b = a + 1; b < m; ++b)
        if (c[a].center == c[b].center && c[a].radius == c[b].radius) return false;
    return verifySphereOrder(p, c).status == VerifyStatus::Verified;
  };
  return runRestarts(pr, params, build, accept);
}

}  // namespace cg
