#pragma once

#include "pblab/chow.hpp"
#include "pblab/groebner.hpp"
#include "pblab/poly.hpp"

#include <iosfwd>
#include <optional>

namespace pblab {

/// The datum (n, f, g, h) of a section of O(n) (+) O(n-1)^2 over the plane.
/// f has degree n, g and h degree n-1; the triple is valid when the common
/// projective zero locus Z(f, g, h) is empty.
struct SectionTriple {
    int n = 2;
    Poly f, g, h;

    SectionTriple(int n_, Poly f_, Poly g_, Poly h_);
};

/// Input format: `n = <int>` then `f = <poly>`, `g = <poly>`, `h = <poly>`
/// on separate lines; '#' starts a comment.
SectionTriple parse_triple(std::istream& in);
SectionTriple parse_triple_file(const std::string& path);

struct TripleReport {
    bool degrees_ok = false;
    bool base_locus_empty = false;
    std::optional<std::array<Rational, 3>> witness_point; // a common zero, if found
    SchemeMetrics gh_metrics;                              // Z(g, h)
    ChernPair chern;
    long long h0 = 0;
    StabilityVerdict stability;

    bool valid() const { return degrees_ok && base_locus_empty; }
};

/// Degree check, emptiness of Z(f,g,h), metrics of Z(g,h), and the bundle
/// invariants of the associated presentation. Degree mismatch is a report
/// outcome, not an exception, so samplers can count it.
TripleReport validate_triple(const SectionTriple& t, long budget = kDefaultBudget);

/// F = f + U*g + W*h in the ring of X0, X1, X2, U, W; rejects invalid triples.
Poly build_hypersurface(const SectionTriple& t, long budget = kDefaultBudget);

/// True when F lies in the ideal of the line X0 = X1 = X2 = 0.
bool contains_line(const Poly& F);

/// Largest m >= 0 with F in (X0, X1, X2)^m, by reduction against the
/// monomial basis of the power ideal.
int multiplicity_along_line(const Poly& F);

struct SmoothnessReport {
    bool is_smooth = false;
    Ideal singular_ideal;            // (F, dF/dX0, ..., dF/dW)
    SchemeMetrics singular_metrics;
    bool contains_line = false;
    bool singular_contains_line = false;
    bool singular_equals_line = false;
    std::optional<int> equality_witness_degree; // HF degree refuting equality
    int multiplicity_along_line = 0;
};

/// Jacobian-criterion certificate for a homogeneous form in the P4 ring.
/// singular_equals_line compares the Hilbert function of the singular ideal
/// against the line's d+1 past the regularity of the computed series, so
/// the verdict is about the saturated singular locus.
SmoothnessReport smoothness_report(const Poly& F, long budget = kDefaultBudget);

} // namespace pblab
