#include "kgv/verify.hpp"

#include <json.hpp>

#include <chrono>

#include "kgv/fuzz.hpp"

namespace kgv {

namespace {

template <typename Fn>
VerificationReport timed(Fn&& fn) {
    auto t0 = std::chrono::steady_clock::now();
    VerificationReport rep = fn();
    rep.millis = std::chrono::duration_cast<std::chrono::milliseconds>(
                     std::chrono::steady_clock::now() - t0)
                     .count();
    return rep;
}

}  // namespace

using json = nlohmann::ordered_json;

std::vector<Suite> allSuites() {
    return {Suite::Gensys, Suite::Kp,  Suite::Module, Suite::Mlem1,  Suite::Mlem2,
            Suite::Hexagon, Suite::Rep, Suite::Veq,    Suite::IotaPhi};
}

const char* suiteName(Suite s) {
    switch (s) {
        case Suite::Gensys: return "gensys";
        case Suite::Kp: return "kp";
        case Suite::Module: return "module";
        case Suite::Mlem1: return "mlem1";
        case Suite::Mlem2: return "mlem2";
        case Suite::Hexagon: return "hexagon";
        case Suite::Rep: return "rep";
        case Suite::Veq: return "veq";
        case Suite::IotaPhi: return "iotaphi";
    }
    return "?";
}

bool parseSuite(const std::string& name, std::vector<Suite>& out) {
    if (name == "all") {
        out = allSuites();
        return true;
    }
    for (Suite s : allSuites()) {
        if (name == suiteName(s)) {
            out = {s};
            return true;
        }
    }
    return false;
}

VerificationReport runKpProperties(const KGraphPtr& graph, int coeffLevel, std::uint64_t seed,
                                   int trials) {
    VerificationReport rep;
    rep.suite = "kp";
    ElementFuzzer gen(graph, seed, coeffLevel);
    for (int trial = 0; trial < trials; ++trial) {
        KPElement x = gen.randomElement();
        KPElement y = gen.randomElement();
        KPElement z = gen.randomElement();
        std::string input = "trial " + std::to_string(trial);

        rep.guarded("associativity " + input, [&] {
            if (!((x * y) * z).equals(x * (y * z)))
                rep.fail("associativity " + input, ((x * y) * z).str(), (x * (y * z)).str());
        });
        rep.guarded("involution " + input, [&] {
            if (!(x * y).star().equals(y.star() * x.star()))
                rep.fail("involution " + input, (x * y).star().str(), (y.star() * x.star()).str());
            if (!(x.star().star().terms() == x.terms()))
                rep.fail("involution is an involution " + input, x.star().star().str(), x.str());
        });
        rep.guarded("grading " + input, [&] {
            KPElement xy = x * y;
            for (const auto& delta : xy.grades()) {
                KPElement sum(graph);
                for (const auto& d1 : x.grades()) sum = sum + x.component(d1) * y.component(delta - d1);
                if (!xy.component(delta).equals(sum))
                    rep.fail("grading " + input + " at " + delta.str(), xy.component(delta).str(),
                             sum.str());
            }
        });
        rep.guarded("expansion and collapse " + input, [&] {
            for (const auto& delta : x.grades()) {
                MultiDegree M = graph->zeroDegree();
                KPElement part = x.component(delta);
                for (const auto& [mo, c] : part.terms()) M = M.join(mo.mu.degree);
                KPElement ex = x.expand(delta, M);
                if (!ex.equals(x)) rep.fail("expansion soundness " + input, ex.str(), x.str());
                if (!ex.collapse().equals(x))
                    rep.fail("collapse round trip " + input, ex.collapse().str(), x.str());

                // equality verdicts are stable one level deeper
                MultiDegree deeper = M;
                for (std::size_t t = 0; t < deeper.size(); ++t) deeper[t] += 1;
                bool shallow = part.expand(delta, M).isZeroLiteral();
                bool deep = part.expand(delta, deeper).isZeroLiteral();
                if (shallow != deep)
                    rep.fail("level stability " + input, shallow ? "zero" : "nonzero",
                             deep ? "zero" : "nonzero");
            }
        });
    }
    return rep;
}

std::vector<VerificationReport> runSuite(const KGraphPtr& graph, Suite suite, int coeffLevel,
                                         std::uint64_t kpSeed) {
    std::vector<VerificationReport> out;
    switch (suite) {
        case Suite::Gensys: {
            out.push_back(timed([&] { return checkGeneratingSystem(graph); }));
            out.push_back(timed([&] { return checkFiberStructure(graph, 4); }));
            break;
        }
        case Suite::Kp: {
            out.push_back(timed([&] { return runKpProperties(graph, coeffLevel, kpSeed, 60); }));
            break;
        }
        case Suite::Module: {
            Ladder lad(graph);
            out.push_back(timed([&] { return checkModuleOps(lad, coeffLevel); }));
            for (int i = 1; i <= lad.k(); ++i)
                for (int j = 1; j <= lad.k(); ++j)
                    out.push_back(timed([&] { return checkRthetaModuleMap(lad, i, j, coeffLevel); }));
            break;
        }
        case Suite::Mlem1: {
            Ladder lad(graph);
            out.push_back(timed([&] { return checkMlem1(lad, coeffLevel); }));
            break;
        }
        case Suite::Mlem2: {
            Ladder lad(graph);
            out.push_back(timed([&] { return checkMlem2(lad, coeffLevel); }));
            break;
        }
        case Suite::Hexagon: {
            Ladder lad(graph);
            out.push_back(timed([&] { return checkRthetaHexagon(lad, coeffLevel); }));
            break;
        }
        case Suite::Rep: {
            Ladder lad(graph);
            if (lad.k() == 1) {
                VerificationReport rep;
                rep.suite = "rep";
                rep.cases = 0;  // no ladder stage below a 1-graph
                out.push_back(rep);
            }
            for (int m = 1; m < lad.k(); ++m)
                out.push_back(timed([&] { return checkRepresentation(lad, m, coeffLevel); }));
            break;
        }
        case Suite::Veq: {
            Ladder lad(graph);
            out.push_back(timed([&] { return checkVeq(lad, coeffLevel); }));
            break;
        }
        case Suite::IotaPhi: {
            Ladder lad(graph);
            if (lad.k() == 1) {
                VerificationReport rep;
                rep.suite = "iotaphi";
                out.push_back(rep);
            }
            for (int m = 1; m < lad.k(); ++m)
                for (int j = 1; j <= lad.k(); ++j)
                    out.push_back(timed([&] { return checkIotaPhi(lad, m, j, coeffLevel); }));
            break;
        }
    }
    return out;
}

namespace {

json reportJson(const VerificationReport& rep) {
    json r;
    r["suite"] = rep.suite;
    r["status"] = rep.pass() ? "pass" : "fail";
    r["cases"] = rep.cases;
    r["failures"] = json::array();
    for (const auto& f : rep.failures)
        r["failures"].push_back({{"input", f.input}, {"lhs", f.lhs}, {"rhs", f.rhs}});
    // timing is reported on the human side only, so JSON stays byte-stable
    r["millis"] = 0;
    return r;
}

}  // namespace

std::string reportToJson(const VerificationReport& rep) { return reportJson(rep).dump(2) + "\n"; }

std::string reportsToJson(const std::string& graphLabel,
                          const std::vector<VerificationReport>& reps) {
    json doc;
    doc["graph"] = graphLabel;
    bool pass = true;
    doc["reports"] = json::array();
    for (const auto& r : reps) {
        doc["reports"].push_back(reportJson(r));
        pass = pass && r.pass();
    }
    doc["status"] = pass ? "pass" : "fail";
    return doc.dump(2) + "\n";
}

std::string reportHuman(const VerificationReport& rep) {
    std::string line = (rep.pass() ? "PASS " : "FAIL ") + rep.suite + "  cases=" +
                       std::to_string(rep.cases) + "  millis=" + std::to_string(rep.millis);
    for (const auto& f : rep.failures) {
        line += "\n    counterexample: " + f.input;
        if (!f.lhs.empty()) line += "\n      lhs: " + f.lhs;
        if (!f.rhs.empty()) line += "\n      rhs: " + f.rhs;
    }
    return line;
}

}  // namespace kgv
