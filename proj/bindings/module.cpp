#include "pblab/report.hpp"

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

namespace py = pybind11;
using namespace pblab;

namespace {

py::object json_to_py(const Json& j) {
    switch (j.type()) {
        case Json::value_t::null: return py::none();
        case Json::value_t::boolean: return py::bool_(j.get<bool>());
        case Json::value_t::number_integer: return py::int_(j.get<long long>());
        case Json::value_t::number_unsigned:
            return py::int_(j.get<unsigned long long>());
        case Json::value_t::number_float: return py::float_(j.get<double>());
        case Json::value_t::string: return py::str(j.get<std::string>());
        case Json::value_t::array: {
            py::list out;
            for (const auto& e : j) out.append(json_to_py(e));
            return out;
        }
        case Json::value_t::object: {
            py::dict out;
            for (const auto& [k, v] : j.items()) out[py::str(k)] = json_to_py(v);
            return out;
        }
        default: return py::none();
    }
}

SectionTriple make_triple(int n, const std::string& f, const std::string& g,
                          const std::string& h) {
    const RingPtr ring = plane_ring();
    return SectionTriple(n, parse_poly(f, ring), parse_poly(g, ring),
                         parse_poly(h, ring));
}

} // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "projective-bundle / hypersurface correspondence toolkit";

    m.def(
        "validate_triple",
        [](int n, const std::string& f, const std::string& g, const std::string& h,
           long budget) { return json_to_py(to_json(validate_triple(make_triple(n, f, g, h), budget))); },
        py::arg("n"), py::arg("f"), py::arg("g"), py::arg("h"),
        py::arg("budget") = kDefaultBudget,
        "Check a section triple; sections are polynomials in X0, X1, X2.");

    m.def(
        "hypersurface",
        [](int n, const std::string& f, const std::string& g, const std::string& h,
           long budget) {
            const Poly F = build_hypersurface(make_triple(n, f, g, h), budget);
            const SmoothnessReport rep = smoothness_report(F, budget);
            Json out;
            out["equation"] = F.str();
            out["degree"] = F.degree();
            out["smoothness"] = to_json(rep);
            return json_to_py(out);
        },
        py::arg("n"), py::arg("f"), py::arg("g"), py::arg("h"),
        py::arg("budget") = kDefaultBudget,
        "Build F = f + U*g + W*h in X0..X2, U, W and certify its smoothness.");

    m.def(
        "blowup",
        [](int n, const std::string& f, const std::string& g, const std::string& h,
           long budget) {
            const Poly F = build_hypersurface(make_triple(n, f, g, h), budget);
            return json_to_py(to_json(verify_blowup_smooth(F, budget)));
        },
        py::arg("n"), py::arg("f"), py::arg("g"), py::arg("h"),
        py::arg("budget") = kDefaultBudget,
        "Strict transform of the hypersurface over all 9 blow-up charts.");

    m.def(
        "chow",
        [](int n, int equiv_bound) { return json_to_py(chow_block(n, equiv_bound)); },
        py::arg("n"), py::arg("equiv_bound") = 5,
        "Chern/Chow invariants for the degree-n presentation.");

    m.def(
        "sample",
        [](std::uint64_t seed, int n, int bound, long trials, long budget) {
            return json_to_py(to_json(run_sample(seed, n, bound, trials, budget)));
        },
        py::arg("seed"), py::arg("n") = 2, py::arg("bound") = 3,
        py::arg("trials") = 20, py::arg("budget") = kDefaultBudget,
        "Seeded random triples; reports the fraction landing in the open set.");

    m.def(
        "groebner_basis",
        [](const std::vector<std::string>& gens, const std::vector<std::string>& vars,
           long budget) {
            const RingPtr ring = make_ring("py", vars);
            std::vector<Poly> ps;
            for (const auto& s : gens) ps.push_back(parse_poly(s, ring));
            const GroebnerBasis gb = buchberger(Ideal(ring, ps), budget);
            std::vector<std::string> out;
            for (const auto& p : gb.basis) out.push_back(p.str());
            return out;
        },
        py::arg("generators"), py::arg("variables"), py::arg("budget") = kDefaultBudget,
        "Reduced Groebner basis (graded reverse lexicographic order).");
}
