#ifndef KGV_VERIFY_HPP
#define KGV_VERIFY_HPP

#include <string>
#include <vector>

#include "kgv/census.hpp"
#include "kgv/checks.hpp"
#include "kgv/report.hpp"

namespace kgv {

// Suites runnable through the verify front end. "all" expands to every one.
// Each suite is deterministic given the graph and level; timing never enters
// the JSON rendering, so reports are byte-stable across runs.
enum class Suite { Gensys, Kp, Module, Mlem1, Mlem2, Hexagon, Rep, Veq, IotaPhi };

std::vector<Suite> allSuites();
const char* suiteName(Suite s);
bool parseSuite(const std::string& name, std::vector<Suite>& out);  // handles "all"

// Runs one suite (which may cover several stages or color pairs) and merges
// the per-stage reports by name.
std::vector<VerificationReport> runSuite(const KGraphPtr& graph, Suite suite, int coeffLevel,
                                         std::uint64_t kpSeed = 12345);

std::string reportToJson(const VerificationReport& rep);
std::string reportsToJson(const std::string& graphLabel,
                          const std::vector<VerificationReport>& reps);
std::string reportHuman(const VerificationReport& rep);

// The seeded property suite over the KP algebra (associativity, involution,
// grading, expansion/collapse, level stability) used by the "kp" suite.
VerificationReport runKpProperties(const KGraphPtr& graph, int coeffLevel, std::uint64_t seed,
                                   int trials);

}  // namespace kgv

#endif  // KGV_VERIFY_HPP
