#include "pblab/report.hpp"

#include <CLI11.hpp>

#include <cstdlib>
#include <iostream>

namespace {

using namespace pblab;

struct Options {
    int n = 2;
    std::string input;
    std::uint64_t seed = 0;
    long trials = 20;
    int bound = 3;
    long budget = kDefaultBudget;
    int equiv_bound = 5;
    bool json = false;
};

constexpr int kExitOk = 0;
constexpr int kExitError = 1;     // operational failure
constexpr int kExitRejected = 2;  // mathematical rejection

long effective_budget(const Options& o) {
    if (const char* env = std::getenv("PBLAB_BUDGET")) {
        try {
            return std::stol(env);
        } catch (const std::exception&) {
            throw error("PBLAB_BUDGET is not an integer");
        }
    }
    return o.budget;
}

Json config_json(const std::string& command, const Options& o) {
    Json j;
    j["command"] = command;
    j["n"] = o.n;
    if (!o.input.empty()) j["input"] = o.input;
    j["seed"] = o.seed;
    j["trials"] = o.trials;
    j["bound"] = o.bound;
    j["budget"] = effective_budget(o);
    j["output"] = o.json ? "json" : "text";
    return j;
}

void emit(const Options& o, const std::string& command, Json body) {
    if (o.json) {
        Json doc;
        doc["schema"] = 1;
        doc["config"] = config_json(command, o);
        for (auto& [k, v] : body.items()) doc[k] = v;
        std::cout << doc.dump(2) << "\n";
    }
}

SectionTriple load_triple(const Options& o) {
    if (o.input.empty()) throw error("--input is required for this command");
    return parse_triple_file(o.input);
}

// ---------------------------------------------------------------------------

int cmd_validate(const Options& o) {
    const SectionTriple t = load_triple(o);
    const TripleReport rep = validate_triple(t, effective_budget(o));
    if (o.json) {
        emit(o, "validate", Json{{"triple", to_json(rep)}});
    } else {
        std::cout << (rep.valid() ? "valid" : "invalid") << " triple (n=" << t.n << ")\n";
        if (!rep.degrees_ok) std::cout << "  degrees do not match (n, n-1, n-1)\n";
        if (rep.degrees_ok && !rep.base_locus_empty) {
            std::cout << "  Z(f,g,h) is nonempty";
            if (rep.witness_point) {
                const auto& w = *rep.witness_point;
                std::cout << "; witness [" << rational_to_string(w[0]) << ":"
                          << rational_to_string(w[1]) << ":" << rational_to_string(w[2])
                          << "]";
            }
            std::cout << "\n";
        }
        if (rep.valid()) {
            std::cout << "  c1=" << rep.chern.c1 << " c2=" << rep.chern.c2
                      << " h0=" << rep.h0
                      << " stability=" << to_string(rep.stability.verdict) << "\n";
        }
    }
    return rep.valid() ? kExitOk : kExitRejected;
}

int cmd_hypersurface(const Options& o) {
    const SectionTriple t = load_triple(o);
    const long budget = effective_budget(o);
    const Poly F = build_hypersurface(t, budget);
    const SmoothnessReport rep = smoothness_report(F, budget);
    if (o.json) {
        Json body;
        body["hypersurface"] = Json{{"equation", F.str()}, {"degree", F.degree()}};
        body["smoothness"] = to_json(rep);
        emit(o, "hypersurface", std::move(body));
    } else {
        std::cout << "F = " << F.str() << "\n"
                  << "degree " << F.degree() << ", "
                  << (rep.is_smooth ? "smooth" : "singular")
                  << ", multiplicity along line = " << rep.multiplicity_along_line << "\n";
        if (!rep.is_smooth)
            std::cout << "singular locus " << (rep.singular_equals_line ? "equals"
                                               : rep.singular_contains_line ? "contains"
                                                                            : "misses")
                      << " the line\n";
    }
    return kExitOk;
}

int cmd_blowup(const Options& o) {
    const SectionTriple t = load_triple(o);
    const long budget = effective_budget(o);
    const Poly F = build_hypersurface(t, budget);
    const BlowupReport rep = verify_blowup_smooth(F, budget);
    if (o.json) {
        emit(o, "blowup", Json{{"hypersurface", Json{{"equation", F.str()}}},
                               {"blowup", to_json(rep)}});
    } else {
        std::cout << "strict transform of F = " << F.str() << "\n"
                  << (rep.all_smooth ? "smooth in all 9 charts" : "NOT smooth") << ", "
                  << "multiplicity " << rep.multiplicity << "\n";
        for (const auto& c : rep.charts)
            std::cout << "  [" << c.chart_id << "] m=" << c.multiplicity << " "
                      << (c.smooth ? "smooth" : "singular") << "  strict = "
                      << c.strict_text << "\n";
    }
    return rep.all_smooth ? kExitOk : kExitRejected;
}

int cmd_chow(const Options& o) {
    const Json block = chow_block(o.n, o.equiv_bound);
    if (o.json) {
        emit(o, "chow", Json{{"chow", block}});
    } else {
        std::cout << "n = " << o.n << ": c1=" << block["chern"]["c1"]
                  << " c2=" << block["chern"]["c2"] << " h0=" << block["h0"]
                  << " xi_top=" << block["xi_top"]
                  << " stability=" << block["stability"]["verdict"].get<std::string>()
                  << "\n"
                  << "cubic forms: "
                  << block["cubic_forms"]["bundle_over_plane"].get<std::string>()
                  << "  vs  "
                  << block["cubic_forms"]["scroll_over_line"].get<std::string>()
                  << " (no unimodular match within bound "
                  << block["cubic_forms"]["equiv_search_bound"] << ")\n";
    }
    return kExitOk;
}

int cmd_pipeline(const Options& o) {
    const SectionTriple t = load_triple(o);
    const long budget = effective_budget(o);
    const TripleReport triple = validate_triple(t, budget);
    if (!triple.valid()) {
        if (o.json)
            emit(o, "pipeline", Json{{"triple", to_json(triple)},
                                     {"failed_stage", "validate"}});
        else
            std::cout << "pipeline stopped at stage validate: invalid triple\n";
        return kExitRejected;
    }
    const Poly F = build_hypersurface(t, budget);
    const SmoothnessReport smooth = smoothness_report(F, budget);
    const BlowupReport blow = verify_blowup_smooth(F, budget);
    Json body;
    body["triple"] = to_json(triple);
    body["hypersurface"] = Json{{"equation", F.str()}, {"degree", F.degree()},
                                {"smoothness", to_json(smooth)}};
    body["blowup"] = to_json(blow);
    body["chow"] = chow_block(t.n, o.equiv_bound);
    if (o.json) {
        emit(o, "pipeline", std::move(body));
    } else {
        std::cout << "triple: valid (n=" << t.n << ")\n"
                  << "F = " << F.str() << "\n"
                  << "image: " << (smooth.is_smooth ? "smooth" : "singular")
                  << ", multiplicity along line = " << smooth.multiplicity_along_line
                  << "\n"
                  << "blow-up strict transform: "
                  << (blow.all_smooth ? "smooth in all 9 charts" : "NOT smooth") << "\n"
                  << "chow: xi_top = " << body["chow"]["xi_top"] << " (= deg F)\n";
    }
    return kExitOk;
}

int cmd_sample(const Options& o) {
    const SampleStats stats =
        run_sample(o.seed, o.n, o.bound, o.trials, effective_budget(o));
    if (o.json) {
        emit(o, "sample", Json{{"sample", to_json(stats)}});
    } else {
        std::cout << stats.valid << "/" << stats.trials << " trials valid (fraction "
                  << rational_to_string(stats.fraction) << ", seed " << o.seed
                  << ", bound " << o.bound << ")";
        if (stats.budget_errors) std::cout << ", " << stats.budget_errors << " budget errors";
        std::cout << "\n";
    }
    return kExitOk;
}

// ---------------------------------------------------------------------------
// Golden regression scenarios.

struct Scenario {
    std::string name;
    bool pass = false;
    std::string detail;
};

std::vector<Scenario> run_regressions(long budget) {
    std::vector<Scenario> out;
    auto record = [&](const std::string& name, auto&& fn) {
        Scenario s{name};
        try {
            s.pass = fn();
        } catch (const std::exception& e) {
            s.pass = false;
            s.detail = e.what();
        }
        out.push_back(std::move(s));
    };

    record("chern numbers of the quadric bundle", [] {
        return chern_from_sequence(BundleSeq{-1, {1, 0, 0}, 0}) == ChernPair{2, 2};
    });
    record("degree identity xi^3", [] {
        if (xi_top(ChowContext{BaseSpace::P2, 2, {2, 2}}) != 2) return false;
        for (int n = 2; n <= 6; ++n)
            if (xi_top(ChowContext{BaseSpace::P2, 2,
                                   {n, static_cast<long long>(n) * (n - 1)}}) != n)
                return false;
        return true;
    });
    record("section counts h0", [] {
        for (int n = 2; n <= 6; ++n)
            if (h0_bundle(BundleSeq::for_degree(n)) != 5) return false;
        if (h0_bundle(BundleSeq{-1, {1, 0, 0}, -1}) != 1) return false;
        for (int n = 3; n <= 6; ++n)
            if (h0_bundle(BundleSeq::for_degree(n, -1)) != 1) return false;
        return true;
    });
    record("stability verdicts", [] {
        if (stability_verdict(BundleSeq::for_degree(2)).verdict !=
            Stability::semistable_not_stable)
            return false;
        for (int n = 3; n <= 5; ++n)
            if (stability_verdict(BundleSeq::for_degree(n)).verdict != Stability::stable)
                return false;
        return true;
    });
    record("singular-cone chart transform", [budget] {
        const RingPtr amb = make_ring("P4x", {"X0", "X1", "X2", "X3", "X4"});
        const auto atlas = chart_atlas(amb);
        const Chart* chart = nullptr;
        for (const auto& ch : atlas)
            if (ch.a == 0 && ch.c == 4) chart = &ch;
        if (!chart) return false;
        const Poly F = parse_poly("X0*X1 - X2*X3", amb);
        const TransformResult tr = strict_transform(F, *chart);
        const Poly expected = parse_poly("X0*Y1 - X3*Y2", chart->ring);
        if (tr.strict != expected || tr.multiplicity != 1) return false;
        const ChartSmoothness sm = chart_smoothness(tr, budget);
        if (sm.smooth) return false;
        // The witness must contain the chart origin.
        std::vector<Rational> origin(4, 0);
        for (const auto& w : sm.witness)
            if (w.evaluate(origin) != 0) return false;
        return true;
    });
    record("smooth quadric pipeline", [budget] {
        const RingPtr ring = plane_ring();
        const SectionTriple t(2, parse_poly("X0^2", ring), parse_poly("X1", ring),
                              parse_poly("X2", ring));
        const Poly F = build_hypersurface(t, budget);
        const SmoothnessReport rep = smoothness_report(F, budget);
        return rep.is_smooth && rep.contains_line && rep.multiplicity_along_line == 1 &&
               verify_blowup_smooth(F, budget).all_smooth;
    });
    record("singular hypersurface pipeline (n = 3, 4)", [budget] {
        const RingPtr ring = plane_ring();
        for (int n : {3, 4}) {
            const auto p = [&](const std::string& base, int d) {
                return parse_poly(base + "^" + std::to_string(d), ring);
            };
            const SectionTriple t(n, p("X0", n), p("X1", n - 1), p("X2", n - 1));
            const Poly F = build_hypersurface(t, budget);
            const SmoothnessReport rep = smoothness_report(F, budget);
            if (rep.is_smooth || !rep.singular_contains_line ||
                rep.multiplicity_along_line != n - 1)
                return false;
            if (!verify_blowup_smooth(F, budget).all_smooth) return false;
        }
        return true;
    });
    record("zero-scheme lengths", [budget] {
        const RingPtr ring = plane_ring();
        for (int n = 2; n <= 5; ++n) {
            const Poly g = Poly::variable(ring, 1).pow(n - 1);
            const Poly h = Poly::variable(ring, 2).pow(n - 1);
            const SchemeMetrics m = scheme_metrics(Ideal(ring, {g, h}), budget);
            if (m.dimension != 0 || !m.length || *m.length != (n - 1) * (n - 1))
                return false;
        }
        return true;
    });
    record("cubic intersection-form distinction", [] {
        const CubicForm f1 = cubic_form(ChowContext{BaseSpace::P2, 2, {2, 2}});
        const CubicForm f2 = cubic_form(ChowContext{BaseSpace::P1, 3, {2, 0}});
        if (!(f1 == CubicForm{0, 3, 6, 2}) || !(f2 == CubicForm{0, 0, 3, 2}))
            return false;
        return !cubic_equiv_search(f1, f2, 5).has_value();
    });
    return out;
}

int cmd_regress(const Options& o) {
    const auto scenarios = run_regressions(effective_budget(o));
    bool all = true;
    if (o.json) {
        Json arr = Json::array();
        for (const auto& s : scenarios) {
            Json sj;
            sj["name"] = s.name;
            sj["pass"] = s.pass;
            if (!s.detail.empty()) sj["detail"] = s.detail;
            arr.push_back(std::move(sj));
            all = all && s.pass;
        }
        emit(o, "regress", Json{{"regress", std::move(arr)}, {"all_pass", all}});
    } else {
        for (const auto& s : scenarios) {
            std::cout << (s.pass ? "PASS" : "FAIL") << "  " << s.name;
            if (!s.detail.empty()) std::cout << "  (" << s.detail << ")";
            std::cout << "\n";
            all = all && s.pass;
        }
        std::cout << (all ? "all scenarios pass" : "FAILURES present") << "\n";
    }
    return all ? kExitOk : kExitRejected;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"projective-bundle / hypersurface correspondence toolkit"};
    app.require_subcommand(1);
    Options o;

    auto add_common = [&](CLI::App* sub, bool needs_input) {
        sub->add_option("--n", o.n, "degree parameter (>= 2)")->check(CLI::Range(2, 64));
        if (needs_input) sub->add_option("--input", o.input, "triple input file");
        sub->add_option("--seed", o.seed, "sampler seed");
        sub->add_option("--trials", o.trials, "sampler trial count")
            ->check(CLI::PositiveNumber);
        sub->add_option("--bound", o.bound, "coefficient bound")->check(CLI::PositiveNumber);
        sub->add_option("--budget", o.budget, "S-pair reduction budget")
            ->check(CLI::PositiveNumber);
        sub->add_flag("--json", o.json, "machine-readable report");
    };

    std::map<std::string, std::function<int(const Options&)>> handlers{
        {"validate", cmd_validate},   {"hypersurface", cmd_hypersurface},
        {"blowup", cmd_blowup},       {"chow", cmd_chow},
        {"pipeline", cmd_pipeline},   {"sample", cmd_sample},
        {"regress", cmd_regress},
    };
    const std::map<std::string, std::string> descriptions{
        {"validate", "check a section triple for membership in the open set"},
        {"hypersurface", "synthesize F = f + U*g + W*h and certify smoothness"},
        {"blowup", "strict transform over the 9-chart atlas of the blow-up"},
        {"chow", "Chern/Chow invariants for the degree-n presentation"},
        {"pipeline", "validate, build, certify and blow up in one report"},
        {"sample", "seeded random triples; estimates the density of valid ones"},
        {"regress", "golden regression scenarios"},
    };
    for (const auto& [name, desc] : descriptions) {
        CLI::App* sub = app.add_subcommand(name, desc);
        add_common(sub, name != "chow" && name != "sample" && name != "regress");
    }

    try {
        app.parse(argc, argv);
        for (const auto& [name, fn] : handlers)
            if (app.got_subcommand(name)) return fn(o);
        return kExitError;
    } catch (const CLI::ParseError& e) {
        return app.exit(e);
    } catch (const pblab::budget_error& e) {
        std::cerr << "budget error: " << e.what() << "\n";
        return kExitError;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitError;
    }
}
