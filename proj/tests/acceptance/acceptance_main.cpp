// Acceptance suite: runs every top-level requirement against the full
// corpus (the named fixtures, three curated 3-graphs, and 25 seeded fuzz
// 2-graphs) and prints one PASS/FAIL line per criterion. Exits nonzero if
// any criterion fails or exceeds its time budget.

#include <kgv/census.hpp>
#include <kgv/checks.hpp>
#include <kgv/fuzz.hpp>
#include <kgv/graph_io.hpp>
#include <kgv/verify.hpp>

#include <chrono>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>

#include "corpus.hpp"

using namespace kgv;
namespace fs = std::filesystem;

namespace {

struct NamedGraph {
    std::string name;
    KGraphPtr graph;
};

std::vector<NamedGraph> buildCorpus() {
    std::vector<NamedGraph> corpus = {
        {"loops2", corpus::singleLoop2()},
        {"twoloops", corpus::twoByOneLoops()},
        {"loops3", corpus::singleLoop3()},
        {"twovertex", corpus::twoVertexCycle()},
        {"doubleswap3", corpus::doubleSwap3()},
        {"mixedswap3", corpus::mixedSwap3()},
        {"twovertexcycle3", corpus::twoVertexCycle3()},
    };
    struct Shape {
        int vertices;
        std::vector<int> edges;
        std::uint64_t firstSeed;
        int count;
    };
    const std::vector<Shape> shapes = {
        {1, {2, 2}, 1, 10},
        {1, {3, 2}, 11, 5},
        {1, {3, 3}, 16, 4},
        {2, {2, 2}, 20, 6},
    };
    for (const auto& shape : shapes) {
        for (int i = 0; i < shape.count; ++i) {
            FuzzParams params;
            params.k = 2;
            params.vertices = shape.vertices;
            params.edgesPerColor = shape.edges;
            params.count = 1;
            params.seed = shape.firstSeed + static_cast<std::uint64_t>(i);
            auto docs = fuzzGraphs(params);
            corpus.push_back({"fuzz-" + std::to_string(params.seed), docs.front().build()});
        }
    }
    return corpus;
}

int failures = 0;

void criterion(int number, const std::string& label, double budgetSeconds,
               const std::function<bool(std::string&)>& body) {
    std::string detail;
    auto t0 = std::chrono::steady_clock::now();
    bool ok = false;
    try {
        ok = body(detail);
    } catch (const std::exception& ex) {
        detail = std::string("exception: ") + ex.what();
    }
    double seconds =
        std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() -
                                                              t0)
            .count() /
        1000.0;
    bool inBudget = seconds < budgetSeconds;
    if (ok && inBudget) {
        std::cout << "PASS criterion " << number << ": " << label << " (" << seconds << "s)\n";
    } else {
        ++failures;
        std::cout << "FAIL criterion " << number << ": " << label << " (" << seconds << "s)";
        if (!inBudget) std::cout << " [over the " << budgetSeconds << "s budget]";
        if (!detail.empty()) std::cout << "\n      " << detail;
        std::cout << "\n";
    }
}

bool reportClean(const VerificationReport& rep, std::string& detail) {
    if (rep.pass()) return true;
    const auto& f = rep.failures.front();
    detail = rep.suite + ": " + f.input + " | " + f.lhs + " | " + f.rhs;
    return false;
}

// every degree vector over k colors with bounded total
std::vector<MultiDegree> degreesUpTo(int k, int maxTotal) {
    std::vector<MultiDegree> out;
    MultiDegree cur = MultiDegree::zero(static_cast<std::size_t>(k));
    auto rec = [&](auto&& self, std::size_t pos, int left) -> void {
        if (pos == cur.size()) {
            out.push_back(cur);
            return;
        }
        for (int c = 0; c <= left; ++c) {
            cur[pos] = c;
            self(self, pos + 1, left - c);
        }
        cur[pos] = 0;
    };
    rec(rec, 0, maxTotal);
    return out;
}

int runCli(const std::string& cli, const std::string& args, const fs::path& stdoutTo) {
    std::string cmd = cli + " " + args + " > " + stdoutTo.string() + " 2>/dev/null";
    return std::system(cmd.c_str());
}

bool sameBytes(const fs::path& a, const fs::path& b) {
    std::ifstream fa(a, std::ios::binary), fb(b, std::ios::binary);
    std::ostringstream sa, sb;
    sa << fa.rdbuf();
    sb << fb.rdbuf();
    return fa && fb && sa.str() == sb.str();
}

}  // namespace

int main(int argc, char** argv) {
    std::string cli;
    for (int i = 1; i + 1 < argc; ++i)
        if (std::string(argv[i]) == "--cli") cli = argv[i + 1];

    auto corpus = buildCorpus();
    std::vector<NamedGraph> twoGraphs, threeGraphs;
    for (const auto& g : corpus)
        (g.graph->k() == 2 ? twoGraphs : threeGraphs).push_back(g);

    // 1. validation accepts the corpus, rejects the curated corruptions
    criterion(1, "k-graph validation and error classes", 1.0, [&](std::string& detail) {
        for (const auto& g : corpus) (void)g;  // corpus construction already validated

        auto graph2 = [] {
            return ColoredGraph::make(
                2, {"v"}, {{"a", 1, "v", "v"}, {"b", 1, "v", "v"}, {"f", 2, "v", "v"}});
        };
        auto expect = [&](ErrorKind kind, const std::function<void()>& build) {
            try {
                build();
                detail = std::string("expected ") + to_string(kind);
                return false;
            } catch (const Error& err) {
                if (err.kind() == kind) return true;
                detail = std::string("expected ") + to_string(kind) + ", got " + err.what();
                return false;
            }
        };
        bool ok = true;
        ok = ok && expect(ErrorKind::MissingSquare,
                          [&] { KGraph::build(graph2(), {{"a", "f", "f", "b"}}); });
        ok = ok && expect(ErrorKind::AmbiguousSquare, [&] {
                 KGraph::build(graph2(), {{"a", "f", "f", "b"}, {"a", "f", "f", "a"}});
             });
        ok = ok && expect(ErrorKind::NotBijective, [&] {
                 KGraph::build(graph2(), {{"a", "f", "f", "b"}, {"b", "f", "f", "b"}});
             });
        ok = ok && expect(ErrorKind::SourceViolation, [&] {
                 KGraph::build(ColoredGraph::make(2, {"u", "w"},
                                                  {{"a1", 1, "w", "u"},
                                                   {"a2", 1, "u", "w"},
                                                   {"f1", 2, "u", "u"}}),
                               {});
             });
        ok = ok && expect(ErrorKind::CubeFailure, [&] {
                 KGraph::build(ColoredGraph::make(3, {"v"},
                                                  {{"a", 1, "v", "v"},
                                                   {"b", 1, "v", "v"},
                                                   {"f", 2, "v", "v"},
                                                   {"g", 2, "v", "v"},
                                                   {"h", 3, "v", "v"}}),
                               {{"a", "f", "f", "b"},
                                {"b", "f", "f", "a"},
                                {"a", "g", "g", "a"},
                                {"b", "g", "g", "b"},
                                {"a", "h", "h", "a"},
                                {"b", "h", "h", "b"},
                                {"f", "h", "h", "g"},
                                {"g", "h", "h", "f"}});
             });
        return ok;
    });

    // 2. factorization bijection up to total degree six
    criterion(2, "factorization bijection up to |m+n| = 6", 30.0, [&](std::string& detail) {
        for (const auto& [name, kg] : corpus) {
            for (const auto& total : degreesUpTo(kg->k(), 6)) {
                auto paths = kg->pathsOfDegree(total);
                // per (degree, source) and (degree, range) path counts
                std::vector<MultiDegree> splits;
                MultiDegree cur = kg->zeroDegree();
                auto rec = [&](auto&& self, std::size_t pos) -> void {
                    if (pos == cur.size()) {
                        splits.push_back(cur);
                        return;
                    }
                    for (int c = 0; c <= total[pos]; ++c) {
                        cur[pos] = c;
                        self(self, pos + 1);
                    }
                };
                rec(rec, 0);
                for (const auto& m : splits) {
                    MultiDegree n = total - m;
                    std::map<VertexId, std::size_t> bySource, byRange;
                    for (const auto& mu : kg->pathsOfDegree(m)) ++bySource[mu.source];
                    for (const auto& nu : kg->pathsOfDegree(n)) ++byRange[nu.range];
                    std::size_t pairs = 0;
                    for (const auto& [v, c] : bySource) {
                        auto it = byRange.find(v);
                        if (it != byRange.end()) pairs += c * it->second;
                    }
                    if (pairs != paths.size()) {
                        detail = name + ": " + std::to_string(pairs) + " composable pairs vs " +
                                 std::to_string(paths.size()) + " paths at " + total.str();
                        return false;
                    }
                    for (const auto& p : paths) {
                        auto [mu, nu] = kg->factorize(p, m, n);
                        if (!(kg->concat(mu, nu) == p)) {
                            detail = name + ": factorize/concat mismatch at " + kg->pathString(p);
                            return false;
                        }
                    }
                }
            }
        }
        return true;
    });

    // 3. generating-system axioms
    criterion(3, "generating-system axioms (flips, hexagon, correspondence maps)", 30.0,
              [&](std::string& detail) {
                  for (const auto& [name, kg] : corpus) {
                      auto rep = checkGeneratingSystem(kg);
                      if (!reportClean(rep, detail)) {
                          detail = name + " " + detail;
                          return false;
                      }
                  }
                  return true;
              });

    // 4. KP algebra laws on fuzzed elements
    criterion(4, "KP algebra laws on 200 fuzzed elements per graph", 120.0,
              [&](std::string& detail) {
                  std::uint64_t seed = 1000;
                  for (const auto& [name, kg] : corpus) {
                      auto rep = runKpProperties(kg, 2, seed++, 200);
                      if (!reportClean(rep, detail)) {
                          detail = name + " " + detail;
                          return false;
                      }
                  }
                  return true;
              });

    // 5. representation and covariance at every ladder stage
    criterion(5, "representation/covariance suite at every stage", 120.0,
              [&](std::string& detail) {
                  for (const auto& [name, kg] : corpus) {
                      Ladder lad(kg);
                      for (int m = 1; m < lad.k(); ++m) {
                          auto rep = checkRepresentation(lad, m, 1);
                          if (!reportClean(rep, detail)) {
                              detail = name + " m=" + std::to_string(m) + " " + detail;
                              return false;
                          }
                      }
                  }
                  return true;
              });

    // 6. the flip family on the iterated modules
    criterion(6, "iterated flips: module maps, symmetry, hexagon routes", 120.0,
              [&](std::string& detail) {
                  for (const auto& [name, kg] : threeGraphs) {
                      Ladder lad(kg);
                      for (int i = 1; i <= lad.k(); ++i) {
                          for (int j = 1; j <= lad.k(); ++j) {
                              auto rep = checkRthetaModuleMap(lad, i, j, 2);
                              if (!reportClean(rep, detail)) {
                                  detail = name + " " + detail;
                                  return false;
                              }
                          }
                      }
                      auto ops = checkModuleOps(lad, 1);
                      auto hex = checkRthetaHexagon(lad, 1);
                      if (!reportClean(ops, detail) || !reportClean(hex, detail)) {
                          detail = name + " " + detail;
                          return false;
                      }
                  }
                  for (const auto& [name, kg] : twoGraphs) {
                      Ladder lad(kg);
                      auto ops = checkModuleOps(lad, 1);  // includes Rθ symmetry
                      if (!reportClean(ops, detail)) {
                          detail = name + " " + detail;
                          return false;
                      }
                  }
                  return true;
              });

    // 7. the ν-coherence lemmas
    criterion(7, "nu-coherence identities on every corpus graph", 120.0,
              [&](std::string& detail) {
                  for (const auto& [name, kg] : corpus) {
                      Ladder lad(kg);
                      auto m1 = checkMlem1(lad, 1);
                      auto m2 = checkMlem2(lad, 1);
                      if (!reportClean(m1, detail) || !reportClean(m2, detail)) {
                          detail = name + " " + detail;
                          return false;
                      }
                  }
                  return true;
              });

    // 8. absorption identity and the stage dictionary
    criterion(8, "absorption identity and stage dictionary intertwining", 120.0,
              [&](std::string& detail) {
                  std::vector<NamedGraph> picks = {
                      {"twoloops", corpus::twoByOneLoops()},
                      {"loops3", corpus::singleLoop3()},
                      {"twovertex", corpus::twoVertexCycle()},
                  };
                  for (const auto& [name, kg] : picks) {
                      Ladder lad(kg);
                      auto veq = checkVeq(lad, 1);
                      if (!reportClean(veq, detail)) {
                          detail = name + " " + detail;
                          return false;
                      }
                      for (int m = 1; m < lad.k(); ++m) {
                          for (int j = 1; j <= lad.k(); ++j) {
                              auto rep = checkIotaPhi(lad, m, j, 1);
                              if (!reportClean(rep, detail)) {
                                  detail = name + " " + detail;
                                  return false;
                              }
                          }
                      }
                  }
                  return true;
              });

    // 9. graded rank census of the dictionary span
    criterion(9, "graded rank census along the ladder", 180.0, [&](std::string& detail) {
        for (const auto& [name, kg] : twoGraphs) {
            Ladder lad(kg);
            for (const auto& entry : census(lad, 1, 2)) {
                if (!entry.agree()) {
                    detail = name + " grade " + entry.grade.str() + ": direct " +
                             std::to_string(entry.directRank) + " vs dictionary " +
                             std::to_string(entry.dictRank);
                    return false;
                }
            }
        }
        Ladder lad3(corpus::singleLoop3());
        for (int m : {1, 2}) {
            for (const auto& entry : census(lad3, m, 1)) {
                if (!entry.agree()) {
                    detail = "loops3 m=" + std::to_string(m) + " grade " + entry.grade.str();
                    return false;
                }
            }
        }
        return true;
    });

    // 10. CLI determinism
    criterion(10, "byte-identical JSON reports across runs", 120.0, [&](std::string& detail) {
        if (cli.empty()) {
            detail = "no --cli path given";
            return false;
        }
        fs::path tmp = fs::temp_directory_path() / "kgv-acceptance";
        fs::create_directories(tmp);
        GraphDocument doc = GraphDocument::fromGraph(*corpus::twoByOneLoops());
        fs::path graphFile = tmp / "twoloops.json";
        doc.save(graphFile.string());

        fs::path v1 = tmp / "v1.json", v2 = tmp / "v2.json";
        std::string verifyArgs = "verify " + graphFile.string() + " --suite all --json ";
        if (runCli(cli, verifyArgs + v1.string(), tmp / "v1.out") != 0 ||
            runCli(cli, verifyArgs + v2.string(), tmp / "v2.out") != 0) {
            detail = "verify run failed";
            return false;
        }
        if (!sameBytes(v1, v2)) {
            detail = "verify reports differ between runs";
            return false;
        }

        fs::path f1 = tmp / "f1.json", f2 = tmp / "f2.json";
        std::string fuzzArgs =
            "fuzz --k 2 --vertices 1 --edges-per-color 2,2 --count 3 --seed 7 --verify --json ";
        if (runCli(cli, fuzzArgs + f1.string(), tmp / "f1.out") != 0 ||
            runCli(cli, fuzzArgs + f2.string(), tmp / "f2.out") != 0) {
            detail = "fuzz run failed";
            return false;
        }
        if (!sameBytes(f1, f2)) {
            detail = "fuzz reports differ between runs";
            return false;
        }
        return true;
    });

    if (failures == 0) {
        std::cout << "all criteria passed\n";
        return 0;
    }
    std::cout << failures << " criteria failed\n";
    return 1;
}
