#include "pblab/geometry.hpp"

#include <fstream>
#include <istream>
#include <sstream>

namespace pblab {

SectionTriple::SectionTriple(int n_, Poly f_, Poly g_, Poly h_)
    : n(n_), f(std::move(f_)), g(std::move(g_)), h(std::move(h_)) {
    if (n < 2) throw error("section triple requires n >= 2");
    if (!same_ring(f.ring(), g.ring()) || !same_ring(f.ring(), h.ring()))
        throw ring_mismatch("section triple polynomials from different rings");
    if (f.ring()->nvars() != 3)
        throw error("section triple polynomials must live in the plane ring");
}

namespace {

// Reads `key = value` lines, skipping blanks and '#' comments.
std::pair<std::string, std::string> read_kv(std::istream& in) {
    std::string line;
    while (std::getline(in, line)) {
        const auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        const auto eq = line.find('=');
        if (eq == std::string::npos) {
            if (line.find_first_not_of(" \t\r") != std::string::npos)
                throw error("triple file: expected 'key = value', got '" + line + "'");
            continue;
        }
        auto trim = [](std::string s) {
            const auto a = s.find_first_not_of(" \t\r");
            const auto b = s.find_last_not_of(" \t\r");
            return a == std::string::npos ? std::string() : s.substr(a, b - a + 1);
        };
        return {trim(line.substr(0, eq)), trim(line.substr(eq + 1))};
    }
    throw error("triple file: unexpected end of input");
}

std::string expect_key(std::istream& in, const std::string& key) {
    auto [k, v] = read_kv(in);
    if (k != key) throw error("triple file: expected '" + key + " = ...', got '" + k + "'");
    return v;
}

} // namespace

SectionTriple parse_triple(std::istream& in) {
    const std::string nv = expect_key(in, "n");
    int n = 0;
    try {
        n = std::stoi(nv);
    } catch (const std::exception&) {
        throw error("triple file: invalid n '" + nv + "'");
    }
    const RingPtr ring = plane_ring();
    Poly f = parse_poly(expect_key(in, "f"), ring);
    Poly g = parse_poly(expect_key(in, "g"), ring);
    Poly h = parse_poly(expect_key(in, "h"), ring);
    return SectionTriple(n, std::move(f), std::move(g), std::move(h));
}

SectionTriple parse_triple_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw error("cannot open triple file '" + path + "'");
    return parse_triple(in);
}

namespace {

// Small search for a rational witness of a nonempty base locus: projective
// points with coordinates in {-2..2}, first hit wins.
std::optional<std::array<Rational, 3>> find_common_zero(const SectionTriple& t) {
    const int B = 2;
    auto is_zero_at = [&](const std::array<Rational, 3>& p) {
        const std::vector<Rational> pt(p.begin(), p.end());
        return t.f.evaluate(pt) == 0 && t.g.evaluate(pt) == 0 && t.h.evaluate(pt) == 0;
    };
    // Patches X0 = 1, then X0 = 0, X1 = 1, then the point [0:0:1].
    for (int a = -B; a <= B; ++a)
        for (int b = -B; b <= B; ++b) {
            const std::array<Rational, 3> p{1, a, b};
            if (is_zero_at(p)) return p;
        }
    for (int b = -B; b <= B; ++b) {
        const std::array<Rational, 3> p{0, 1, b};
        if (is_zero_at(p)) return p;
    }
    const std::array<Rational, 3> p{0, 0, 1};
    if (is_zero_at(p)) return p;
    return std::nullopt;
}

} // namespace

TripleReport validate_triple(const SectionTriple& t, long budget) {
    TripleReport r;
    const auto df = t.f.homogeneous_degree();
    const auto dg = t.g.homogeneous_degree();
    const auto dh = t.h.homogeneous_degree();
    r.degrees_ok = df && *df == t.n && dg && *dg == t.n - 1 && dh && *dh == t.n - 1;

    std::vector<Poly> fgh;
    for (const Poly* p : {&t.f, &t.g, &t.h})
        if (!p->is_zero()) fgh.push_back(*p);
    if (fgh.size() == 3) {
        r.base_locus_empty = scheme_metrics(Ideal(t.f.ring(), fgh), budget).empty;
    } else {
        r.base_locus_empty = false; // a zero section vanishes everywhere
    }
    if (!r.base_locus_empty) r.witness_point = find_common_zero(t);

    std::vector<Poly> gh;
    for (const Poly* p : {&t.g, &t.h})
        if (!p->is_zero()) gh.push_back(*p);
    r.gh_metrics = scheme_metrics(Ideal(t.g.ring(), gh), budget);

    const BundleSeq seq = BundleSeq::for_degree(t.n);
    r.chern = chern_from_sequence(seq);
    r.h0 = h0_bundle(seq);
    r.stability = stability_verdict(seq);
    return r;
}

Poly build_hypersurface(const SectionTriple& t, long budget) {
    const TripleReport r = validate_triple(t, budget);
    if (!r.valid())
        throw error(r.degrees_ok ? "invalid triple: Z(f,g,h) is nonempty"
                                 : "invalid triple: wrong degrees");
    const RingPtr p4 = p4_ring();
    const std::map<std::string, Poly> identity;
    const Poly f = substitute(t.f, identity, p4);
    const Poly g = substitute(t.g, identity, p4);
    const Poly h = substitute(t.h, identity, p4);
    return f + Poly::variable(p4, "U") * g + Poly::variable(p4, "W") * h;
}

namespace {

void require_p4_like(const Poly& F, const char* who) {
    if (F.ring()->nvars() != 5)
        throw error(std::string(who) + ": expected a 5-variable ambient ring");
}

// Groebner basis of (X0, X1, X2)^m: the degree-m monomials in the first
// three coordinates (a monomial ideal is its own reduced basis).
GroebnerBasis line_power_basis(const RingPtr& ring, int m) {
    std::vector<Poly> gens;
    for (const auto& e3 : exponents_of_degree(3, m)) {
        Exponents e(ring->nvars(), 0);
        for (int k = 0; k < 3; ++k) e[k] = e3[k];
        gens.push_back(Poly::monomial(ring, std::move(e), 1));
    }
    return GroebnerBasis{ring, std::move(gens)};
}

} // namespace

int multiplicity_along_line(const Poly& F) {
    require_p4_like(F, "multiplicity_along_line");
    if (F.is_zero()) throw error("multiplicity_along_line: zero polynomial");
    const int dmax = F.degree();
    for (int m = 1; m <= dmax + 1; ++m) {
        if (!normal_form(F, line_power_basis(F.ring(), m)).is_zero()) return m - 1;
    }
    return dmax + 1; // unreachable for nonzero F
}

bool contains_line(const Poly& F) {
    require_p4_like(F, "contains_line");
    return normal_form(F, line_power_basis(F.ring(), 1)).is_zero();
}

SmoothnessReport smoothness_report(const Poly& F, long budget) {
    require_p4_like(F, "smoothness_report");
    if (F.is_zero() || !F.homogeneous_degree())
        throw error("smoothness_report: input must be a nonzero form");

    std::vector<Poly> gens{F};
    bool partials_on_line = true;
    for (int v = 0; v < 5; ++v) {
        Poly d = partial_derivative(F, v);
        if (d.is_zero()) continue;
        if (!normal_form(d, line_power_basis(F.ring(), 1)).is_zero())
            partials_on_line = false;
        gens.push_back(std::move(d));
    }
    Ideal jac(F.ring(), std::move(gens));
    const GroebnerBasis gb = buchberger(jac, budget);

    SmoothnessReport rep{.is_smooth = false,
                         .singular_ideal = jac,
                         .singular_metrics = scheme_metrics(jac, gb, budget),
                         .contains_line = false,
                         .singular_contains_line = false,
                         .singular_equals_line = false,
                         .equality_witness_degree = std::nullopt,
                         .multiplicity_along_line = 0};
    rep.is_smooth = rep.singular_metrics.empty;
    rep.contains_line = contains_line(F);
    rep.multiplicity_along_line = multiplicity_along_line(F);
    rep.singular_contains_line = rep.contains_line && partials_on_line;

    if (rep.singular_contains_line) {
        if (rep.singular_metrics.dimension != 1) {
            rep.singular_equals_line = false;
        } else {
            // Past the numerator degree the Hilbert function equals the
            // Hilbert polynomial; two sample degrees pin a linear HP, and
            // the line's is d + 1. Low-degree disagreement only reflects
            // non-saturation, so it is ignored.
            const HilbertSeries hs = hilbert_series(gb);
            const int d0 = static_cast<int>(hs.numerator.size());
            bool equal = true;
            for (int d : {d0, d0 + 1}) {
                if (hilbert_function(gb, d) != d + 1) {
                    equal = false;
                    rep.equality_witness_degree = d;
                    break;
                }
            }
            rep.singular_equals_line = equal;
        }
    }
    return rep;
}

} // namespace pblab
