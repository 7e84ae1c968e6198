#ifndef KGV_REPORT_HPP
#define KGV_REPORT_HPP

#include <cstdint>
#include <string>
#include <vector>

namespace kgv {

// One identity-suite run. Failures carry the inputs and both rendered sides
// so a counterexample can be replayed by hand.
struct Failure {
    std::string input;
    std::string lhs;
    std::string rhs;
};

struct VerificationReport {
    std::string suite;
    std::size_t cases = 0;
    std::vector<Failure> failures;  // capped at kMaxStoredFailures, in discovery order
    std::int64_t millis = 0;

    static constexpr std::size_t kMaxStoredFailures = 25;

    bool pass() const { return failures.empty(); }
    void fail(std::string input, std::string lhs, std::string rhs) {
        if (failures.size() < kMaxStoredFailures)
            failures.push_back({std::move(input), std::move(lhs), std::move(rhs)});
        else if (failures.size() == kMaxStoredFailures)
            failures.push_back({"...", "further failures suppressed", ""});
    }

    // Runs one check; an exception out of the body (a broken flip table, say)
    // counts as a failure of this case rather than aborting the suite.
    template <typename Fn>
    void guarded(const std::string& input, Fn&& body) {
        ++cases;
        try {
            body();
        } catch (const std::exception& ex) {
            fail(input, std::string("exception: ") + ex.what(), "");
        }
    }
};

}  // namespace kgv

#endif  // KGV_REPORT_HPP
