#ifndef DIVDIFF_VERIFY_HPP
#define DIVDIFF_VERIFY_HPP

#include <cstdint>
#include <string>
#include <vector>

namespace divdiff {

/// Deterministic generator for the verification suite; identical seeds give
/// identical draws on every platform (no stdlib distributions involved).
class Rng {
public:
    explicit Rng(std::uint64_t seed);

    double uniform(double lo, double hi);
    int uniform_int(int lo, int hi);  // inclusive bounds
    bool flip() { return uniform_int(0, 1) == 1; }

private:
    std::uint64_t next();
    std::uint64_t state_;
};

struct VerifyOptions {
    std::uint64_t seed = 1;
    int trials = 20;
    bool inject_failure = false;  // adds a deliberately failing check (self-test)
};

struct CheckResult {
    std::string name;
    bool pass;
    std::string detail;
};

struct VerifyReport {
    std::vector<CheckResult> checks;
    bool all_pass() const;
};

/// Runs every identity check at its pinned tolerance.
VerifyReport run_verification(const VerifyOptions& options);

}  // namespace divdiff

#endif
