#pragma once

#include "pblab/geometry.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace pblab {

/// splitmix64 finalizer; the documented, platform-independent mixing step
/// behind the sampler.
std::uint64_t mix64(std::uint64_t x);

/// Counter-based coefficient stream. The state is derived from
/// (seed, n, bound, trial) only, so inserting extra trials never perturbs
/// earlier ones and runs reproduce bit-for-bit across platforms.
class CoeffStream {
public:
    CoeffStream(std::uint64_t seed, int n, int bound, std::uint64_t trial);

    /// Uniform integer in [-bound, bound], zero allowed (rejection sampled,
    /// so unbiased and still fully deterministic).
    int next_coeff();

private:
    std::uint64_t state_;
    int bound_;
};

/// Draws one coefficient per monomial of f (degree n) and of g, h (degree
/// n-1), monomials in descending grevlex order.
SectionTriple random_triple(std::uint64_t seed, int n, int bound, std::uint64_t trial);

struct TrialOutcome {
    std::uint64_t trial = 0;
    bool valid = false;
    bool budget_exceeded = false;
    std::string failure; // witness or reason when invalid
};

struct SampleStats {
    long trials = 0;
    long valid = 0;
    long budget_errors = 0;
    Rational fraction; // valid / trials, exact
    std::vector<TrialOutcome> per_trial;
};

/// Runs validate_triple on `trials` independent draws. Budget overruns are
/// counted separately, never as invalid.
SampleStats run_sample(std::uint64_t seed, int n, int bound, long trials,
                       long budget = kDefaultBudget);

} // namespace pblab
