#include "pblab/report.hpp"

namespace pblab {

Json to_json(const SchemeMetrics& m) {
    Json j;
    j["empty"] = m.empty;
    j["dimension"] = m.dimension;
    if (m.length) j["length"] = *m.length;
    if (m.reduced) j["reduced"] = *m.reduced;
    return j;
}

Json to_json(const ChernPair& c) {
    return Json{{"c1", c.c1}, {"c2", c.c2}};
}

Json to_json(const StabilityVerdict& v) {
    Json j;
    j["verdict"] = to_string(v.verdict);
    j["normal_twist"] = v.normal_twist;
    j["h0_norm"] = v.h0_norm;
    j["h0_norm_minus1"] = v.h0_norm_minus1;
    return j;
}

Json to_json(const TripleReport& r) {
    Json j;
    j["valid"] = r.valid();
    j["degrees_ok"] = r.degrees_ok;
    j["base_locus_empty"] = r.base_locus_empty;
    if (r.witness_point) {
        const auto& w = *r.witness_point;
        j["witness_point"] = Json::array({rational_to_string(w[0]),
                                          rational_to_string(w[1]),
                                          rational_to_string(w[2])});
    }
    j["gh_metrics"] = to_json(r.gh_metrics);
    j["chern"] = to_json(r.chern);
    j["h0"] = r.h0;
    j["stability"] = to_json(r.stability);
    return j;
}

Json to_json(const SmoothnessReport& r) {
    Json j;
    j["is_smooth"] = r.is_smooth;
    Json gens = Json::array();
    for (const auto& g : r.singular_ideal.gens) gens.push_back(g.str());
    j["singular_ideal"] = gens;
    j["singular_metrics"] = to_json(r.singular_metrics);
    j["contains_line"] = r.contains_line;
    j["singular_contains_line"] = r.singular_contains_line;
    j["singular_equals_line"] = r.singular_equals_line;
    if (r.equality_witness_degree)
        j["equality_witness_degree"] = *r.equality_witness_degree;
    j["multiplicity_along_line"] = r.multiplicity_along_line;
    return j;
}

Json to_json(const BlowupReport& r) {
    Json j;
    j["all_smooth"] = r.all_smooth;
    j["multiplicity"] = r.multiplicity;
    j["multiplicities_consistent"] = r.multiplicities_consistent;
    Json charts = Json::array();
    for (const auto& c : r.charts) {
        Json cj;
        cj["chart"] = c.chart_id;
        cj["exceptional_visible"] = c.exceptional_visible;
        cj["multiplicity"] = c.multiplicity;
        cj["strict"] = c.strict_text;
        cj["smooth"] = c.smooth;
        if (!c.witness.empty()) cj["witness"] = c.witness;
        if (c.budget_failure) cj["budget_failure"] = *c.budget_failure;
        charts.push_back(std::move(cj));
    }
    j["charts"] = std::move(charts);
    return j;
}

Json to_json(const SampleStats& s) {
    Json j;
    j["trials"] = s.trials;
    j["valid"] = s.valid;
    j["budget_errors"] = s.budget_errors;
    j["fraction"] = rational_to_string(s.fraction);
    j["distribution"] = "uniform integers on [-bound, bound] per monomial coefficient";
    Json per = Json::array();
    for (const auto& t : s.per_trial) {
        Json tj;
        tj["trial"] = t.trial;
        tj["valid"] = t.valid;
        if (t.budget_exceeded) tj["budget_exceeded"] = true;
        if (!t.failure.empty()) tj["failure"] = t.failure;
        per.push_back(std::move(tj));
    }
    j["per_trial"] = std::move(per);
    return j;
}

Json chow_block(int n, int equiv_bound) {
    const BundleSeq seq = BundleSeq::for_degree(n);
    const ChernPair chern = chern_from_sequence(seq);
    Json j;
    j["sequence"] = Json{{"kernel_deg", seq.kernel_deg},
                         {"middle", seq.middle},
                         {"twist", seq.twist}};
    j["chern"] = to_json(chern);
    j["h0"] = h0_bundle(seq);
    j["stability"] = to_json(stability_verdict(seq));
    const ChowContext ctx{BaseSpace::P2, 2, chern};
    j["xi_top"] = xi_top(ctx);
    // deg(image) = xi_top under the birationality of the tautological map.
    j["degree_factorization_assumption"] = "deg(map) = 1";

    const ChowContext quadric_side{BaseSpace::P2, 2, chern_from_sequence(BundleSeq::for_degree(2))};
    const ChowContext scroll_side{BaseSpace::P1, 3, ChernPair{2, 0}};
    const CubicForm cf1 = cubic_form(quadric_side);
    const CubicForm cf2 = cubic_form(scroll_side);
    Json cub;
    cub["bundle_over_plane"] = cf1.str();
    cub["scroll_over_line"] = cf2.str();
    const auto witness = cubic_equiv_search(cf1, cf2, equiv_bound);
    cub["equiv_search_bound"] = equiv_bound;
    cub["equivalent_within_bound"] = witness.has_value();
    cub["note"] = "bounded evidence that the two Chow rings are non-isomorphic";
    j["cubic_forms"] = std::move(cub);
    return j;
}

} // namespace pblab
