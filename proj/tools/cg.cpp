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

// cg: command-line front end for the convex geometry toolkit.

#include <filesystem>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "cg/ballgeom.hpp"
#include "cg/enumerate.hpp"
#include "cg/error.hpp"
#include "cg/io.hpp"
#include "cg/lexgeom.hpp"
#include "cg/poset.hpp"
#include "cg/represent.hpp"
#include "cg/setfam.hpp"

using namespace cg;

namespace {

enum Exit : int {
  kOk = 0,
  kUsage = 1,
  kExhausted = 2,
  kAmbiguous = 3,
  kSizeGuard = 4,
  kCheckFailed = 5,
};

void emit(const std::string& out, const std::string& text) {
  if (out.empty() || out == "-") {
    std::cout << text;
  } else {
    writeFile(out, text);
  }
}

std::string labelSet(const Subset& s, const std::vector<std::string>& labels) {
  std::string out = "{";
  bool first = true;
  for (int x : s.elements()) {
    if (!first) out += ",";
    out += labels.at(x);
    first = false;
  }
  return out + "}";
}

ConvexGeometry loadGeometry(const std::string& path, std::vector<std::string>* labels = nullptr) {
  auto ls = readGeometry(readFile(path));
  if (labels) *labels = ls.labels;
  return ConvexGeometry::fromSpace(std::move(ls.space));
}

int exitFor(VerifyStatus s) {
  switch (s) {
    case VerifyStatus::Verified: return kOk;
    case VerifyStatus::Ambiguous: return kAmbiguous;
    case VerifyStatus::Mismatch: return kCheckFailed;
  }
  return kUsage;
}

struct SearchFlags {
  std::uint64_t seed = 0;
  int restarts = 200;
  int iters = 3000;
  double spread = 4.0;
  double decay = 0.998;
  double margin = 1e-3;

  void attach(CLI::App* app) {
    app->add_option("--seed", seed, "random seed")->required();
    app->add_option("--restarts", restarts, "number of restarts")->capture_default_str();
    app->add_option("--iters", iters, "iterations per restart")->capture_default_str();
    app->add_option("--spread", spread, "initial coordinate range")->capture_default_str();
    app->add_option("--decay", decay, "step decay per iteration")->capture_default_str();
    app->add_option("--margin", margin, "required constraint margin")->capture_default_str();
  }
  SearchParams params(int threads) const { return SearchParams{seed, restarts, iters, spread, decay, margin, threads}; }
};

void reportFailure(const SearchResult& r) {
  std::cerr << "search exhausted after " << r.restart << " restarts; best loss " << r.loss << ", "
            << r.violated << " violated constraints\n";
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Convex geometries, closure spaces and ball representations"};
  app.require_subcommand(0, 1);
  app.set_version_flag("--version", std::string(kFormatVersion));
  int threads = 1;
  app.add_option("--threads", threads, "worker threads")->capture_default_str();
  int code = kOk;

  // lex
  auto* lex = app.add_subcommand("lex", "join of the three lexicographic chains on n^3");
  int lexN = 2;
  bool jsetsOnly = false, lexCheck = false;
  std::string lexOut;
  lex->add_option("--n", lexN, "cube side")->required();
  lex->add_flag("--jsets-only", jsetsOnly, "write only the J-sets (n <= 20)");
  lex->add_flag("--check", lexCheck, "verify the cube isomorphism and print the verdict");
  lex->add_option("--out", lexOut, "output file");
  lex->callback([&] {
    if (lexCheck) {
      auto r = verifyCubeIsomorphism(lexN, jsetsOnly ? CubeCheckMode::JSetsOnly : CubeCheckMode::FullSpace);
      if (r.ok) {
        std::cout << "cube isomorphism: ok\n";
      } else {
        std::cout << "cube isomorphism: fails at (" << r.witness->first << "," << r.witness->second << ")\n";
        code = kCheckFailed;
      }
      return;
    }
    if (jsetsOnly) {
      auto r = verifyCubeIsomorphism(lexN, CubeCheckMode::JSetsOnly);
      emit(lexOut, writeJSets(lexN * lexN * lexN, r.mapping, lexLabels(lexN)));
    } else {
      emit(lexOut, writeGeometry(buildLexGeometry(lexN).space(), lexLabels(lexN)));
    }
  });

  // cdim
  auto* cd = app.add_subcommand("cdim", "convex dimension of a geometry");
  std::string cdFile;
  bool cdCert = false;
  cd->add_option("geometry", cdFile)->required();
  cd->add_flag("--certificate", cdCert, "also list a maximum antichain of meet-irreducibles");
  cd->callback([&] {
    std::vector<std::string> labels;
    auto g = loadGeometry(cdFile, &labels);
    std::cout << cdim(g) << "\n";
    if (cdCert)
      for (const auto& s : cdimCertificate(g)) std::cout << labelSet(s, labels) << "\n";
  });

  // ji
  auto* ji = app.add_subcommand("ji", "poset of join-irreducibles");
  std::string jiFile, jiOut;
  ji->add_option("geometry", jiFile)->required();
  ji->add_option("--out", jiOut);
  ji->callback([&] {
    std::vector<std::string> labels;
    auto g = loadGeometry(jiFile, &labels);
    emit(jiOut, writePoset(jiPoset(g, labels)));
  });

  // iso
  auto* iso = app.add_subcommand("iso", "poset isomorphism test");
  std::string isoA, isoB;
  iso->add_option("first", isoA)->required();
  iso->add_option("second", isoB)->required();
  iso->callback([&] {
    auto a = readPoset(readFile(isoA)), b = readPoset(readFile(isoB));
    if (auto m = isIsomorphic(a, b)) {
      std::cout << "isomorphic\n";
    } else {
      std::cout << "not isomorphic\n";
      code = kCheckFailed;
    }
  });

  // enum
  auto* en = app.add_subcommand("enum", "convex geometries up to isomorphism");
  int enN = 0;
  bool countOnly = false, cdimTable = false;
  std::string enOut;
  en->add_option("--n", enN, "ground set size (<= 6)")->required();
  en->add_flag("--count-only", countOnly, "print only the number of classes");
  en->add_flag("--cdim-table", cdimTable, "print the number of classes per cdim");
  en->add_option("--out", enOut, "directory for one .cg.json per class");
  en->callback([&] {
    EnumOptions opts{threads};
    if (cdimTable) {
      std::uint64_t total = 0;
      for (auto [d, c] : countByCdim(enN, opts)) {
        std::cout << "cdim " << d << ": " << c << "\n";
        total += c;
      }
      std::cout << "total: " << total << "\n";
      return;
    }
    if (!enOut.empty()) {
      std::filesystem::create_directories(enOut);
      std::uint64_t count = 0;
      auto write = [&](const ClosureSpace& f) {
        const auto name = canonicalHash(canonicalForm(f)) + ".cg.json";
        writeFile((std::filesystem::path(enOut) / name).string(), writeGeometry(f));
        ++count;
      };
      if (enN <= 5) {
        for (const auto& f : allConvexGeometries(enN)) write(f);
      } else {
        enumerateConvexGeometries(enN, write, opts);
      }
      if (!countOnly) std::cerr << "wrote " << count << " files to " << enOut << "\n";
      if (countOnly) std::cout << count << "\n";
      return;
    }
    std::cout << enumerateConvexGeometries(enN, nullptr, opts) << "\n";
  });

  // represent
  auto* rep = app.add_subcommand("represent", "circle representations of geometries");
  rep->require_subcommand(1);
  auto* repSearch = rep->add_subcommand("search", "search for disks realising a geometry");
  std::string repG, repB, repOut;
  int repDim = 2;
  SearchFlags repFlags;
  repSearch->add_option("geometry", repG)->required();
  repSearch->add_option("--dim", repDim, "ambient dimension (2)")->check(CLI::IsMember({2}));
  repSearch->add_option("--out", repOut);
  repFlags.attach(repSearch);
  repSearch->callback([&] {
    std::vector<std::string> labels;
    auto g = loadGeometry(repG, &labels);
    auto r = searchCircleRepresentation(g, repFlags.params(threads), labels);
    if (!r.success) {
      reportFailure(r);
      code = kExhausted;
      return;
    }
    emit(repOut, writeBalls(r.config));
  });
  auto* repVerify = rep->add_subcommand("verify", "check disks against a geometry");
  repVerify->add_option("geometry", repG)->required();
  repVerify->add_option("balls", repB)->required();
  repVerify->callback([&] {
    std::vector<std::string> labels;
    auto g = loadGeometry(repG, &labels);
    auto r = verifyRepresentation(g, readBalls(readFile(repB)));
    std::cout << statusName(r.status);
    if (r.witness)
      std::cout << " Y=" << labelSet(*r.witness, labels) << " closure=" << labelSet(r.expected, labels)
                << " hull=" << labelSet(r.actual, labels);
    std::cout << "\n";
    code = exitFor(r.status);
  });

  // sphere-order
  auto* so = app.add_subcommand("sphere-order", "ball inclusion representations of posets");
  so->require_subcommand(1);
  auto* soSearch = so->add_subcommand("search", "search for balls realising a poset");
  std::string soP, soB, soOut;
  int soK = 2;
  SearchFlags soFlags;
  soSearch->add_option("poset", soP)->required();
  soSearch->add_option("--k", soK, "ambient dimension (1..3)")->required()->check(CLI::Range(1, 3));
  soSearch->add_option("--out", soOut);
  soFlags.attach(soSearch);
  soSearch->callback([&] {
    auto r = searchSphereOrder(readPoset(readFile(soP)), soK, soFlags.params(threads));
    if (!r.success) {
      reportFailure(r);
      code = kExhausted;
      return;
    }
    emit(soOut, writeBalls(r.config));
  });
  auto* soVerify = so->add_subcommand("verify", "check balls against a poset");
  soVerify->add_option("poset", soP)->required();
  soVerify->add_option("balls", soB)->required();
  soVerify->callback([&] {
    auto p = readPoset(readFile(soP));
    auto r = verifySphereOrder(p, readBalls(readFile(soB)));
    std::cout << statusName(r.status);
    if (r.witness) std::cout << " pair=(" << p.labels()[r.witness->first] << "," << p.labels()[r.witness->second] << ")";
    std::cout << "\n";
    code = exitFor(r.status);
  });

  // birkhoff
  auto* bk = app.add_subcommand("birkhoff", "down-set lattice of a poset as a geometry");
  std::string bkP, bkOut;
  bool bkCheck = false;
  bk->add_option("poset", bkP)->required();
  bk->add_option("--out", bkOut);
  bk->add_flag("--check", bkCheck, "print whether the join-irreducibles give back the poset");
  bk->callback([&] {
    auto p = readPoset(readFile(bkP));
    auto g = downSetLattice(p);
    if (bkCheck) {
      const bool ok = isIsomorphic(jiPoset(g, p.labels()), p).has_value();
      std::cout << (ok ? "round trip: isomorphic\n" : "round trip: not isomorphic\n");
      if (!ok) code = kCheckFailed;
      return;
    }
    emit(bkOut, writeGeometry(g.space(), p.labels()));
  });

  // interval-rep
  auto* ir = app.add_subcommand("interval-rep", "intervals for a poset of dimension <= 2");
  std::string irP, irOut;
  ir->add_option("poset", irP)->required();
  ir->add_option("--out", irOut);
  ir->callback([&] {
    auto p = readPoset(readFile(irP));
    auto d = orderDimensionAtMost(p, 2);
    if (d.verdict == DimensionVerdict::Undecided) throw SizeGuardError("order dimension undecided within budget");
    if (d.verdict == DimensionVerdict::No) {
      std::cerr << "order dimension exceeds 2\n";
      code = kCheckFailed;
      return;
    }
    auto iv = intervalRepresentation2D(p, d.realizer[0], d.realizer[1]);
    std::vector<Ball> balls;
    for (int a = 0; a < p.size(); ++a)
      balls.push_back(Ball{{0.5 * static_cast<double>(iv[a].lo + iv[a].hi)},
                           0.5 * static_cast<double>(iv[a].hi - iv[a].lo), p.labels()[a]});
    emit(irOut, writeBalls(BallConfig(1, std::move(balls))));
  });

  // verify
  auto* vf = app.add_subcommand("verify", "check closure space and convex geometry axioms");
  std::string vfG;
  vf->add_option("geometry", vfG)->required();
  vf->callback([&] {
    auto raw = readRawFamily(readFile(vfG));
    auto cs = isClosureSpace(raw.masks, raw.n);
    std::cout << "closure space: " << (cs.ok ? "yes" : "no") << "\n";
    if (!cs.ok) {
      if (cs.fullSetMissing) std::cout << "  full set missing\n";
      if (cs.pair)
        std::cout << "  intersection of " << labelSet(cs.pair->first, raw.labels) << " and "
                  << labelSet(cs.pair->second, raw.labels) << " missing\n";
      code = kCheckFailed;
      return;
    }
    auto f = ClosureSpace::fromMembers(raw.n, raw.masks);
    auto cg = isConvexGeometry(f);
    auto ae = satisfiesAntiExchange(f);
    std::cout << "convex geometry: " << (cg.ok ? "yes" : "no") << "\n";
    if (cg.emptySetMissing) std::cout << "  empty set not closed\n";
    if (cg.inaccessible) std::cout << "  inaccessible: " << labelSet(*cg.inaccessible, raw.labels) << "\n";
    std::cout << "anti-exchange: " << (ae.ok ? "yes" : "no") << "\n";
    if (ae.witness)
      std::cout << "  closed " << labelSet(ae.witness->closed, raw.labels) << ", x=" << raw.labels[ae.witness->x]
                << ", y=" << raw.labels[ae.witness->y] << "\n";
    if (!cg.ok) code = kCheckFailed;
  });

  // export
  auto* ex = app.add_subcommand("export", "SVG of a ball configuration or DOT of a poset");
  std::string exSvg, exDot, exOut;
  auto* svgOpt = ex->add_option("--svg", exSvg, "ball configuration (dim 2)");
  auto* dotOpt = ex->add_option("--dot", exDot, "poset");
  svgOpt->excludes(dotOpt);
  ex->add_option("--out", exOut);
  ex->callback([&] {
    if (!exSvg.empty()) {
      emit(exOut, toSvg(readBalls(readFile(exSvg))));
    } else if (!exDot.empty()) {
      emit(exOut, toDot(readPoset(readFile(exDot))));
    } else {
      throw CLI::ValidationError("export", "one of --svg or --dot is required");
    }
  });

  // chainpower
  auto* cp = app.add_subcommand("chainpower", "product of t chains of length n");
  int cpN = 2, cpT = 2;
  std::string cpOut;
  cp->add_option("--n", cpN)->required();
  cp->add_option("--t", cpT)->required();
  cp->add_option("--out", cpOut);
  cp->callback([&] { emit(cpOut, writePoset(chainPower(cpN, cpT))); });

  // chs
  auto* hs = app.add_subcommand("chs", "hull closure of a set of balls");
  std::string hsB, hsSet;
  bool hsStrict = false;
  hs->add_option("balls", hsB)->required();
  hs->add_option("--set", hsSet, "comma-separated labels")->required();
  hs->add_flag("--strict", hsStrict, "report near-boundary balls as ambiguous");
  hs->callback([&] {
    auto c = readBalls(readFile(hsB));
    std::vector<int> ys;
    std::stringstream ss(hsSet);
    for (std::string item; std::getline(ss, item, ',');) {
      if (item.empty()) continue;
      const int i = c.indexOf(item);
      if (i < 0) throw ContractError("unknown label " + item);
      ys.push_back(i);
    }
    auto r = chSDetailed(c, Subset::of(c.size(), ys), HullOptions{.strict = hsStrict});
    std::cout << labelSet(r.members, c.labels()) << "\n";
    if (r.ambiguous.size() > 0) {
      std::cout << "ambiguous: " << labelSet(r.ambiguous, c.labels()) << "\n";
      code = kAmbiguous;
    }
  });

  // induced
  auto* in = app.add_subcommand("induced", "geometry induced by a planar ball configuration");
  std::string inB, inOut;
  in->add_option("balls", inB)->required();
  in->add_option("--out", inOut);
  in->callback([&] {
    auto c = readBalls(readFile(inB));
    auto sp = inducedClosureSpace(c, HullOptions{.strict = true}, threads);
    if (!sp.ambiguousSets.empty()) {
      std::cerr << "near-boundary containments in " << sp.ambiguousSets.size() << " subsets\n";
      code = kAmbiguous;
    }
    emit(inOut, writeGeometry(sp.space, c.labels()));
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? kOk : kUsage;
  } catch (const SizeGuardError& e) {
    std::cerr << "size guard: " << e.what() << "\n";
    return kSizeGuard;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  }
  if (app.get_subcommands().empty()) {
    std::cout << app.help();
    return kUsage;
  }
  return code;
}
