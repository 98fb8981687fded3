#include "pblab/blowup.hpp"

#include "pblab/geometry.hpp"

namespace pblab {

std::string Chart::id() const {
    return "Y" + std::to_string(a) + "=1," + ambient->vars[c] + "=1";
}

std::vector<Chart> chart_atlas(const RingPtr& ambient) {
    if (ambient->nvars() != 5)
        throw error("chart_atlas: expected 5 ambient coordinates");
    std::vector<Chart> atlas;
    const std::array<std::string, 3> yname{"Y0", "Y1", "Y2"};
    for (const auto& y : yname)
        if (ambient->index_of(y) >= 0)
            throw error("chart_atlas: ambient ring already uses " + y);

    for (int a = 0; a < 3; ++a) {
        for (int c : {a, 3, 4}) {
            Chart ch;
            ch.a = a;
            ch.c = c;
            ch.ambient = ambient;

            std::vector<std::string> vars;
            if (c != a) vars.push_back(ambient->vars[a]);
            for (int k : {3, 4})
                if (k != c) vars.push_back(ambient->vars[k]);
            for (int i = 0; i < 3; ++i)
                if (i != a) vars.push_back(yname[i]);
            ch.ring = make_ring("chart(" + ch.id() + ")", std::move(vars));

            const Poly one = Poly::constant(ch.ring, 1);
            // X_a scales the P2 directions: X_i = X_a * Y_i for i != a.
            const Poly xa = c == a ? one : Poly::variable(ch.ring, ambient->vars[a]);
            for (int i = 0; i < 3; ++i) {
                if (i == a)
                    ch.substitution.insert_or_assign(ambient->vars[i], xa);
                else
                    ch.substitution.insert_or_assign(
                        ambient->vars[i], xa * Poly::variable(ch.ring, yname[i]));
            }
            for (int k : {3, 4})
                ch.substitution.insert_or_assign(
                    ambient->vars[k],
                    k == c ? one : Poly::variable(ch.ring, ambient->vars[k]));
            if (c != a) ch.exceptional = ambient->vars[a];
            atlas.push_back(std::move(ch));
        }
    }
    return atlas;
}

TransformResult strict_transform(const Poly& F, const Chart& chart) {
    if (F.is_zero()) throw error("strict_transform: zero input");
    if (!same_ring(F.ring(), chart.ambient))
        throw ring_mismatch("strict_transform: polynomial not in the chart's ambient ring");
    const Poly total = substitute(F, chart.substitution, chart.ring);
    int m = 0;
    Poly strict = total;
    if (chart.exceptional) {
        const int vidx = chart.ring->index_of(*chart.exceptional);
        while (!strict.is_zero() && strict.divisible_by_var(vidx)) {
            strict = strict.divide_by_var_power(vidx, 1);
            ++m;
        }
        // Reconstruction identity guards the division.
        const Poly exc = Poly::variable(chart.ring, vidx);
        if (exc.pow(m) * strict != total)
            throw error("strict_transform: division self-check failed");
    }
    return TransformResult{chart, total, strict, m};
}

ChartSmoothness chart_smoothness(const TransformResult& tr, long budget) {
    if (tr.strict.is_zero()) throw error("chart_smoothness: zero strict transform");
    std::vector<Poly> gens{tr.strict};
    for (int v = 0; v < tr.chart.ring->nvars(); ++v) {
        Poly d = partial_derivative(tr.strict, v);
        if (!d.is_zero()) gens.push_back(std::move(d));
    }
    const Ideal ideal(tr.chart.ring, std::move(gens));
    ChartSmoothness out;
    // Affine Nullstellensatz: no common zero over an algebraically closed
    // field iff the ideal contains 1. The linear-algebra certificate settles
    // the smooth case quickly; the Groebner basis decides the rest and
    // doubles as the witness.
    if (unit_ideal_certificate(ideal)) {
        out.smooth = true;
        return out;
    }
    const GroebnerBasis gb = buchberger(ideal, budget);
    out.smooth = gb.basis.size() == 1 && gb.basis[0].degree() == 0;
    if (!out.smooth) out.witness = gb.basis;
    return out;
}

BlowupReport verify_blowup_smooth(const Poly& F, long budget) {
    if (!F.homogeneous_degree() || F.is_zero())
        throw error("verify_blowup_smooth: input must be a nonzero form");
    if (!contains_line(F))
        throw error("verify_blowup_smooth: hypersurface does not contain the line");

    BlowupReport rep;
    rep.all_smooth = true;
    rep.multiplicities_consistent = true;
    std::optional<int> common_m;
    for (const Chart& ch : chart_atlas(F.ring())) {
        ChartVerdict v;
        v.chart_id = ch.id();
        v.exceptional_visible = ch.exceptional.has_value();
        try {
            const TransformResult tr = strict_transform(F, ch);
            v.multiplicity = tr.multiplicity;
            v.strict_text = tr.strict.str();
            const ChartSmoothness sm = chart_smoothness(tr, budget);
            v.smooth = sm.smooth;
            for (const auto& w : sm.witness) v.witness.push_back(w.str());
            if (!sm.smooth) rep.all_smooth = false;
            if (v.exceptional_visible) {
                if (!common_m) common_m = tr.multiplicity;
                else if (*common_m != tr.multiplicity) rep.multiplicities_consistent = false;
            }
        } catch (const budget_error& e) {
            v.budget_failure = e.what();
            rep.all_smooth = false;
        }
        rep.charts.push_back(std::move(v));
    }
    rep.multiplicity = common_m.value_or(0);
    if (rep.multiplicity != multiplicity_along_line(F))
        rep.multiplicities_consistent = false;
    return rep;
}

} // namespace pblab
