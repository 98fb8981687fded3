#include "pblab/sampler.hpp"

namespace pblab {

std::uint64_t mix64(std::uint64_t x) {
    x += 0x9E3779B97F4A7C15ULL;
    x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
    x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
    return x ^ (x >> 31);
}

CoeffStream::CoeffStream(std::uint64_t seed, int n, int bound, std::uint64_t trial)
    : bound_(bound) {
    if (bound < 1) throw error("coefficient bound must be >= 1");
    std::uint64_t s = mix64(seed);
    s = mix64(s ^ static_cast<std::uint64_t>(n));
    s = mix64(s ^ static_cast<std::uint64_t>(bound));
    s = mix64(s ^ trial);
    state_ = s;
}

int CoeffStream::next_coeff() {
    const std::uint64_t range = 2ULL * bound_ + 1;
    const std::uint64_t limit = UINT64_MAX - UINT64_MAX % range;
    for (;;) {
        state_ = mix64(state_);
        if (state_ < limit)
            return static_cast<int>(state_ % range) - bound_;
    }
}

namespace {

Poly random_form(const RingPtr& ring, int degree, CoeffStream& rng) {
    PolyBuilder acc(ring);
    for (const auto& e : exponents_of_degree(ring->nvars(), degree))
        acc.add(e, Rational(rng.next_coeff()));
    return acc.take();
}

} // namespace

SectionTriple random_triple(std::uint64_t seed, int n, int bound, std::uint64_t trial) {
    CoeffStream rng(seed, n, bound, trial);
    const RingPtr ring = plane_ring();
    Poly f = random_form(ring, n, rng);
    Poly g = random_form(ring, n - 1, rng);
    Poly h = random_form(ring, n - 1, rng);
    return SectionTriple(n, std::move(f), std::move(g), std::move(h));
}

SampleStats run_sample(std::uint64_t seed, int n, int bound, long trials, long budget) {
    if (trials < 1) throw error("trials must be >= 1");
    SampleStats stats;
    stats.trials = trials;
    for (long t = 0; t < trials; ++t) {
        TrialOutcome out;
        out.trial = static_cast<std::uint64_t>(t);
        const SectionTriple triple = random_triple(seed, n, bound, out.trial);
        try {
            const TripleReport rep = validate_triple(triple, budget);
            out.valid = rep.valid();
            if (!out.valid) {
                if (!rep.degrees_ok)
                    out.failure = "degenerate draw: wrong degrees";
                else if (rep.witness_point) {
                    const auto& w = *rep.witness_point;
                    out.failure = "common zero at [" + rational_to_string(w[0]) + ":" +
                                  rational_to_string(w[1]) + ":" +
                                  rational_to_string(w[2]) + "]";
                } else {
                    out.failure = "nonempty base locus";
                }
            }
        } catch (const budget_error& e) {
            out.budget_exceeded = true;
            out.failure = e.what();
            ++stats.budget_errors;
        }
        if (out.valid) ++stats.valid;
        stats.per_trial.push_back(std::move(out));
    }
    stats.fraction = Rational(stats.valid, stats.trials);
    return stats;
}

} // namespace pblab
