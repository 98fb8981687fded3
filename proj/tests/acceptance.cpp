// Acceptance gate: one pass/fail line per criterion, nonzero exit on any
// failure. Expects the test-data directory as argv[1].

#include "pblab/blowup.hpp"
#include "pblab/chow.hpp"
#include "pblab/geometry.hpp"
#include "pblab/sampler.hpp"

#include <cstdint>
#include <functional>
#include <iostream>
#include <string>

using namespace pblab;

namespace {

std::string g_data_dir;
int g_failures = 0;

void criterion(int number, const std::string& what, const std::function<bool()>& fn) {
    bool ok = false;
    std::string note;
    try {
        ok = fn();
    } catch (const std::exception& e) {
        note = std::string(" (") + e.what() + ")";
    }
    std::cout << (ok ? "PASS" : "FAIL") << "  criterion " << number << ": " << what
              << note << "\n";
    if (!ok) ++g_failures;
}

SectionTriple data_triple(const std::string& file) {
    return parse_triple_file(g_data_dir + "/" + file);
}

std::uint64_t mix(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

} // namespace

int main(int argc, char** argv) {
    g_data_dir = argc > 1 ? argv[1] : "tests/data";

    criterion(1, "Chern numbers of the defining sequence are (2, 2)", [] {
        return chern_from_sequence(BundleSeq{-1, {1, 0, 0}, 0}) == ChernPair{2, 2};
    });

    criterion(2, "top self-intersection equals the image degree", [] {
        if (xi_top(ChowContext{BaseSpace::P2, 2, {2, 2}}) != 2) return false;
        for (int n = 2; n <= 6; ++n)
            if (xi_top(ChowContext{BaseSpace::P2, 2,
                                   {n, static_cast<long long>(n) * (n - 1)}}) != n)
                return false;
        return true;
    });

    criterion(3, "section counts: h0 = 5, twisted h0 = 1", [] {
        for (int n = 2; n <= 6; ++n)
            if (h0_bundle(BundleSeq::for_degree(n)) != 5) return false;
        if (h0_bundle(BundleSeq{-1, {1, 0, 0}, -1}) != 1) return false;
        for (int n = 3; n <= 6; ++n)
            if (h0_bundle(BundleSeq::for_degree(n, -1)) != 1) return false;
        return true;
    });

    criterion(4, "stability: strictly semistable at n = 2, stable for n = 3..5", [] {
        if (stability_verdict(BundleSeq::for_degree(2)).verdict !=
            Stability::semistable_not_stable)
            return false;
        for (int n = 3; n <= 5; ++n)
            if (stability_verdict(BundleSeq::for_degree(n)).verdict != Stability::stable)
                return false;
        return true;
    });

    criterion(5, "quadric-cone chart: strict transform and singular origin", [] {
        const RingPtr amb = make_ring("P4x", {"X0", "X1", "X2", "X3", "X4"});
        const auto atlas = chart_atlas(amb);
        const Chart* chart = nullptr;
        for (const auto& ch : atlas)
            if (ch.a == 0 && ch.c == 4) chart = &ch;
        if (!chart) return false;
        const TransformResult tr = strict_transform(parse_poly("X0*X1 - X2*X3", amb), *chart);
        if (tr.strict != parse_poly("X0*Y1 - X3*Y2", chart->ring)) return false;
        if (tr.strict.str() != "X0*Y1 - X3*Y2") return false;
        if (tr.multiplicity != 1) return false;
        const ChartSmoothness sm = chart_smoothness(tr);
        if (sm.smooth) return false;
        const std::vector<Rational> origin(4, 0);
        for (const auto& w : sm.witness)
            if (w.evaluate(origin) != 0) return false;
        return true;
    });

    criterion(6, "quadric triple: smooth image, smooth in all 9 blow-up charts", [] {
        const SectionTriple t = data_triple("quadric.triple");
        const Poly F = build_hypersurface(t);
        if (!smoothness_report(F).is_smooth) return false;
        const BlowupReport rep = verify_blowup_smooth(F);
        if (rep.charts.size() != 9) return false;
        for (const auto& c : rep.charts)
            if (!c.smooth) return false;
        return rep.all_smooth;
    });

    criterion(7, "power triples n = 3, 4: singular along the line, resolved by one blow-up",
              [] {
                  for (const std::string file : {"power_n3.triple", "power_n4.triple"}) {
                      const SectionTriple t = data_triple(file);
                      const Poly F = build_hypersurface(t);
                      const SmoothnessReport rep = smoothness_report(F);
                      if (!rep.singular_contains_line) return false;
                      if (rep.multiplicity_along_line != t.n - 1) return false;
                      if (!verify_blowup_smooth(F).all_smooth) return false;
                  }
                  return true;
              });

    criterion(8, "zero-scheme length (n-1)^2 for n = 2..5", [] {
        const RingPtr R = plane_ring();
        for (int n = 2; n <= 5; ++n) {
            const auto m = scheme_metrics(
                Ideal(R, {Poly::variable(R, 1).pow(n - 1), Poly::variable(R, 2).pow(n - 1)}));
            if (m.dimension != 0 || !m.length || *m.length != (n - 1) * (n - 1))
                return false;
        }
        return true;
    });

    criterion(9, "seeded sweep: >= 20 valid triples per n in {2,3,4} all satisfy "
                 "line containment, multiplicity, singularity pattern, smooth blow-up",
              [] {
                  const std::uint64_t seed = 20260826;
                  for (int n : {2, 3, 4}) {
                      int valid = 0;
                      for (std::uint64_t trial = 0; valid < 20; ++trial) {
                          if (trial >= 400) return false;  // sampler starved
                          const SectionTriple t = random_triple(seed, n, 3, trial);
                          const TripleReport rep = validate_triple(t);
                          if (!rep.valid()) continue;
                          ++valid;
                          const Poly F = build_hypersurface(t);
                          if (!contains_line(F)) return false;
                          if (multiplicity_along_line(F) != n - 1) return false;
                          if (n == 2) {
                              if (!smoothness_report(F).is_smooth) return false;
                          } else {
                              // Singular locus contains the line: F and all
                              // partials lie in (X0, X1, X2).
                              for (int v = 0; v < 5; ++v) {
                                  const Poly d = partial_derivative(F, v);
                                  if (!d.is_zero() && !contains_line(d)) return false;
                              }
                          }
                          if (!verify_blowup_smooth(F).all_smooth) return false;
                      }
                  }
                  return true;
              });

    criterion(10, "cubic intersection forms differ; no unimodular match within bound 5",
              [] {
                  const CubicForm fp = cubic_form(ChowContext{BaseSpace::P2, 2, {2, 2}});
                  const CubicForm fs = cubic_form(ChowContext{BaseSpace::P1, 3, {2, 0}});
                  if (!(fp == CubicForm{0, 3, 6, 2})) return false;
                  if (!(fs == CubicForm{0, 0, 3, 2})) return false;
                  return !cubic_equiv_search(fp, fs, 5).has_value();
              });

    criterion(11, "Whitney and Euler identities on 1000 random instances each", [] {
        // Whitney: the computed (c1, c2) solve the product constraint.
        for (std::uint64_t t = 0; t < 1000; ++t) {
            const auto r = [&](std::uint64_t i) {
                return static_cast<int>(mix(4 * t + i) % 21) - 10;
            };
            const int a = r(0), b1 = r(1), b2 = r(2), b3 = r(3);
            const ChernPair c = chern_from_sequence(BundleSeq{a, {b1, b2, b3}, 0});
            const long long n1 = b1 + b2 + b3;
            const long long n2 = static_cast<long long>(b1) * b2 +
                                 static_cast<long long>(b1) * b3 +
                                 static_cast<long long>(b2) * b3;
            if (a + c.c1 != n1) return false;
            if (c.c2 + static_cast<long long>(a) * c.c1 != n2) return false;
        }
        // Euler: sum X_i dP/dX_i = deg(P) * P for random homogeneous forms.
        const RingPtr R = plane_ring();
        for (std::uint64_t t = 0; t < 1000; ++t) {
            const int deg = 1 + static_cast<int>(mix(1000 + t) % 5);
            PolyBuilder b(R);
            std::uint64_t s = mix(2000 + t);
            for (const auto& e : exponents_of_degree(3, deg)) {
                s = mix(s);
                b.add(e, Rational(static_cast<long long>(s % 11) - 5));
            }
            const Poly p = b.take();
            if (p.is_zero()) continue;
            Poly sum = Poly::zero(R);
            for (int i = 0; i < 3; ++i)
                sum = sum + Poly::variable(R, i) * partial_derivative(p, i);
            if (sum != Poly::constant(R, deg) * p) return false;
        }
        return true;
    });

    std::cout << (g_failures == 0 ? "ACCEPTANCE PASS" : "ACCEPTANCE FAIL") << " ("
              << (11 - g_failures) << "/11)\n";
    return g_failures == 0 ? 0 : 1;
}
