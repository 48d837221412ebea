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

#include "cg/io.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

#include "cg/error.hpp"
#include "json.hpp"

namespace cg {
namespace {

using nlohmann::json;
using ordered = nlohmann::ordered_json;

std::string dump(const ordered& j) { return j.dump(2) + "\n"; }

json parse(const std::string& text) {
  try {
    return json::parse(text);
  } catch (const json::exception& e) {
    throw ContractError(std::string("malformed JSON: ") + e.what());
  }
}

template <class T>
T field(const json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) throw ContractError(std::string("missing field \"") + key + "\"");
  try {
    return j.at(key).get<T>();
  } catch (const json::exception& e) {
    throw ContractError(std::string("bad field \"") + key + "\": " + e.what());
  }
}

std::vector<std::string> indexLabels(int n) {
  std::vector<std::string> out;
  for (int i = 0; i < n; ++i) out.push_back(std::to_string(i));
  return out;
}

std::vector<std::string> readLabels(const json& j, int n) {
  if (!j.contains("labels")) return indexLabels(n);
  auto labels = field<std::vector<std::string>>(j, "labels");
  if (static_cast<int>(labels.size()) != n) throw ContractError("label count does not match the size");
  auto sorted = labels;
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) throw ContractError("duplicate labels");
  return labels;
}

}  // namespace

std::string writeGeometry(const ClosureSpace& f, const std::vector<std::string>& labels) {
  const int n = f.universeSize();
  ordered j;
  j["n"] = n;
  j["labels"] = labels.empty() ? indexLabels(n) : labels;
  if (static_cast<int>(j["labels"].size()) != n) throw ContractError("label count does not match the universe");
  auto masks = std::vector<std::uint64_t>(f.masks().begin(), f.masks().end());
  std::sort(masks.begin(), masks.end(), canonicalLess);
  ordered closed = ordered::array();
  for (auto m : masks) closed.push_back(Subset(n, m).elements());
  j["closed"] = closed;
  return dump(j);
}

RawFamily readRawFamily(const std::string& text) {
  const json j = parse(text);
  RawFamily out;
  out.n = field<int>(j, "n");
  if (out.n < 0 || out.n > kMaxUniverse) throw SizeGuardError("n must be in 0..64");
  for (const auto& s : field<std::vector<std::vector<int>>>(j, "closed")) out.masks.push_back(Subset::of(out.n, s).mask());
  out.labels = readLabels(j, out.n);
  return out;
}

LabeledSpace readGeometry(const std::string& text) {
  const json j = parse(text);
  if (j.is_object() && j.value("jsets_only", false))
    throw ContractError("file holds J-sets only, not a geometry");
  auto raw = readRawFamily(text);
  return LabeledSpace{ClosureSpace::fromMembers(raw.n, std::move(raw.masks)), std::move(raw.labels)};
}

std::string writeJSets(int n, const std::vector<std::vector<int>>& jsets, const std::vector<std::string>& labels) {
  ordered j;
  j["n"] = n;
  j["labels"] = labels;
  j["closed"] = jsets;
  j["jsets_only"] = true;
  return dump(j);
}

std::string writePoset(const Poset& p) {
  ordered j;
  j["m"] = p.size();
  j["labels"] = p.labels();
  ordered covers = ordered::array();
  for (auto [a, b] : p.covers()) covers.push_back({a, b});
  j["covers"] = covers;
  return dump(j);
}

Poset readPoset(const std::string& text) {
  const json j = parse(text);
  const int m = field<int>(j, "m");
  if (m < 0) throw ContractError("m must be >= 0");
  if (m > kMaxPosetSize) throw SizeGuardError("poset too large");
  auto covers = field<std::vector<std::pair<int, int>>>(j, "covers");
  return Poset::fromCovers(m, covers, readLabels(j, m));
}

std::string writeBalls(const BallConfig& c) {
  ordered j;
  j["dim"] = c.dim();
  ordered balls = ordered::array();
  for (const auto& b : c.balls()) {
    ordered o;
    o["label"] = b.label;
    o["center"] = b.center;
    o["radius"] = b.radius;
    balls.push_back(o);
  }
  j["balls"] = balls;
  return dump(j);
}

BallConfig readBalls(const std::string& text) {
  const json j = parse(text);
  const int dim = field<int>(j, "dim");
  if (!j.contains("balls") || !j["balls"].is_array()) throw ContractError("missing field \"balls\"");
  std::vector<Ball> balls;
  for (const auto& o : j["balls"]) {
    Ball b;
    b.label = o.contains("label") ? field<std::string>(o, "label") : std::string();
    b.center = field<std::vector<double>>(o, "center");
    b.radius = field<double>(o, "radius");
    balls.push_back(std::move(b));
  }
  return BallConfig(dim, std::move(balls));
}

std::string toDot(const Poset& p) {
  auto quote = [](const std::string& s) {
    std::string out = "\"";
    for (char c : s) {
      if (c == '"' || c == '\\') out += '\\';
      out += c;
    }
    return out + "\"";
  };
  std::ostringstream os;
  os << "digraph hasse {\n  rankdir=BT;\n  node [shape=plaintext];\n";
  for (int i = 0; i < p.size(); ++i) os << "  n" << i << " [label=" << quote(p.labels()[i]) << "];\n";
  for (auto [a, b] : p.covers()) os << "  n" << a << " -> n" << b << " [arrowhead=none];\n";
  os << "}\n";
  return os.str();
}

std::string readFile(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ContractError("cannot read " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void writeFile(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw ContractError("cannot write " + path);
  out << text;
}

}  // namespace cg
