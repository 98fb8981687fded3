#pragma once

#include "pblab/groebner.hpp"
#include "pblab/poly.hpp"

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace pblab {

/// One affine chart of the blow-up of P4 along the line cut out by the
/// first three coordinates. Chart (a, c) is the patch Y_a = 1 of the P2
/// factor intersected with X_c = 1 of the ambient factor, where c ranges
/// over {a, 3, 4}: on Y_a != 0 the ambient point is determined by
/// [X_a : coord3 : coord4], so those three patches cover it. Nine charts
/// cover the blow-up.
struct Chart {
    int a = 0;              // Y_a = 1 patch, a in {0, 1, 2}
    int c = 0;              // X_c = 1 patch, c in {a, 3, 4}
    RingPtr ambient;
    RingPtr ring;           // 4 affine coordinates
    std::map<std::string, Poly> substitution; // ambient coordinate images
    // Chart equation of the exceptional divisor: the variable X_a. Absent
    // when c == a (there X_a = 1, so the divisor misses the chart).
    std::optional<std::string> exceptional;

    std::string id() const;
};

/// The 9-chart atlas, ordered by (a, c). The first three ambient
/// coordinates must cut out the blown-up line.
std::vector<Chart> chart_atlas(const RingPtr& ambient);

struct TransformResult {
    Chart chart;
    Poly total;        // F composed with the chart substitution
    Poly strict;       // total with the exceptional factor divided out
    int multiplicity;  // power divided out; 0 where the divisor is absent
};

/// total = exceptional^multiplicity * strict exactly, and strict is not
/// divisible by the exceptional coordinate.
TransformResult strict_transform(const Poly& F, const Chart& chart);

struct ChartSmoothness {
    bool smooth = false;
    // Reduced basis of (strict, its partials) when singular; the affine
    // singular locus. Empty when smooth.
    std::vector<Poly> witness;
};

/// Affine Jacobian criterion on the chart: the strict transform is smooth
/// there iff the ideal of (strict, all partials) is the unit ideal, i.e.
/// has no zeros over an algebraically closed field.
ChartSmoothness chart_smoothness(const TransformResult& tr, long budget = kDefaultBudget);

struct ChartVerdict {
    std::string chart_id;
    int multiplicity = 0;
    bool exceptional_visible = false;
    std::string strict_text;
    bool smooth = false;
    std::vector<std::string> witness;
    std::optional<std::string> budget_failure;
};

struct BlowupReport {
    bool all_smooth = false;
    // Common multiplicity over the charts meeting the exceptional divisor;
    // agrees with multiplicity_along_line for F in the line ideal.
    int multiplicity = 0;
    bool multiplicities_consistent = false;
    std::vector<ChartVerdict> charts;
};

/// Runs strict_transform and chart_smoothness over the whole atlas.
/// Requires F homogeneous and containing the line. Budget errors are
/// recorded per chart, not thrown.
BlowupReport verify_blowup_smooth(const Poly& F, long budget = kDefaultBudget);

} // namespace pblab
