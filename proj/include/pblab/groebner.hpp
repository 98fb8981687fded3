#pragma once

#include "pblab/poly.hpp"

#include <optional>
#include <vector>

namespace pblab {

/// Raised when a Groebner computation exceeds its S-pair budget. Distinct
/// from mathematical failure: the caller may retry with a larger budget.
class budget_error : public error {
public:
    using error::error;
};

inline constexpr long kDefaultBudget = 50000;

/// Finitely generated ideal. Generator order is preserved for log
/// determinism only; zero generators are rejected.
struct Ideal {
    RingPtr ring;
    std::vector<Poly> gens;

    Ideal(RingPtr r, std::vector<Poly> g);

    bool is_homogeneous() const;
};

struct GroebnerBasis {
    RingPtr ring;
    std::vector<Poly> basis; // reduced, monic, ascending grevlex leading terms
};

/// Reduced Groebner basis under grevlex, via Buchberger with normal pair
/// selection (minimal lcm degree, then pair indices). Deterministic for a
/// fixed generator list. `budget` caps the number of S-pair reductions.
GroebnerBasis buchberger(const Ideal& i, long budget = kDefaultBudget);

/// One-sided certificate that the ideal contains 1: searches for 1 in the
/// row span of all monomial multiples of the generators up to a few degrees
/// above the generator degrees, by exact Gaussian elimination. A true result
/// is a proof; false only means no certificate was found at those degrees.
bool unit_ideal_certificate(const Ideal& i, int extra_degrees = 3);

/// Fully reduced remainder of p modulo the basis; unique for the fixed order.
Poly normal_form(const Poly& p, const GroebnerBasis& gb);

bool ideal_member(const Poly& p, const Ideal& i, long budget = kDefaultBudget);
bool ideal_member(const Poly& p, const GroebnerBasis& gb);

/// Saturation (i : v^inf). Computed by iterated colon steps (i : v) until
/// stabilization; each colon divides the grevlex basis elements by v in a
/// ring permutation placing v last, where the division rule is exact for
/// homogeneous ideals. Principal ideals are handled by plain exact division
/// (valid without homogeneity).
Ideal saturate_by(const Ideal& i, std::string_view var, long budget = kDefaultBudget);

/// Dimension of the degree-d piece of ring/i, from the leading-term ideal.
long hilbert_function(const Ideal& i, int d, long budget = kDefaultBudget);
long hilbert_function(const GroebnerBasis& gb, int d);

/// Hilbert series numerator N(t) of ring/i over (1-t)^nvars. For d beyond
/// deg N the Hilbert function agrees with the Hilbert polynomial.
struct HilbertSeries {
    std::vector<long long> numerator;
    int nvars = 0;
};

HilbertSeries hilbert_series(const GroebnerBasis& gb);

/// Projective zero-locus summary of a homogeneous ideal.
struct SchemeMetrics {
    bool empty = false;
    int dimension = -1;               // projective dimension, -1 if empty
    std::optional<long> length;       // present iff dimension == 0
    std::optional<bool> reduced;      // present iff dimension == 0
};

/// Emptiness, dimension and length from the Hilbert series of the
/// leading-term ideal. Reducedness of 0-dimensional schemes is decided by
/// transversality: the 2x2 Jacobian minors of the generators are adjoined
/// and the result tested for emptiness.
SchemeMetrics scheme_metrics(const Ideal& i, long budget = kDefaultBudget);

/// Same, reusing an already-computed basis of i.
SchemeMetrics scheme_metrics(const Ideal& i, const GroebnerBasis& gb,
                             long budget = kDefaultBudget);

namespace detail {

/// Numerator N(t) of the Hilbert series N(t)/(1-t)^nvars of a monomial
/// quotient, as integer coefficients indexed by degree.
std::vector<long long> hilbert_numerator(const std::vector<Exponents>& lt_gens, int nvars);

} // namespace detail

} // namespace pblab
