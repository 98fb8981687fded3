#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "pblab/groebner.hpp"

using namespace pblab;

namespace {
const RingPtr R = plane_ring();
Poly P(const std::string& s) { return parse_poly(s, R); }
Ideal I(std::initializer_list<std::string> gens) {
    std::vector<Poly> ps;
    for (const auto& s : gens) ps.push_back(P(s));
    return Ideal(R, ps);
}
std::vector<std::string> basis_strings(const GroebnerBasis& gb) {
    std::vector<std::string> out;
    for (const auto& p : gb.basis) out.push_back(p.str());
    return out;
}
} // namespace

TEST_CASE("reduced Groebner bases of hand-checked ideals") {
    using V = std::vector<std::string>;
    CHECK(basis_strings(buchberger(I({"2*X0 - 2*X1"}))) == V{"X0 - X1"});
    // Bases are sorted ascending in the monomial order, so X2 first.
    CHECK(basis_strings(buchberger(I({"X1", "X2", "X0^2"}))) == V{"X2", "X1", "X0^2"});
    // (X0^2 - X1^2, X0 + X1) = (X0 + X1): first generator is a multiple.
    CHECK(basis_strings(buchberger(I({"X0^2 - X1^2", "X0 + X1"}))) == V{"X0 + X1"});
    // A unit ideal.
    CHECK(basis_strings(buchberger(I({"X0 - X1", "X0 + X1", "X0^2 - 1"}))) == V{"1"});
    // The twisted-cubic-style relation needs a genuine S-pair.
    const auto gb = buchberger(I({"X0^2 - X1*X2", "X0*X1 - X2^2"}));
    CHECK(ideal_member(P("X1^2*X2 - X0*X2^2"), gb));
}

TEST_CASE("normal form is a canonical representative") {
    const auto gb = buchberger(I({"X0^2 - X1*X2", "X0*X1 - X2^2"}));
    const Poly p = P("X0^3 + X1^3");
    const Poly r = normal_form(p, gb);
    CHECK(ideal_member(p - r, gb));
    CHECK(normal_form(r, gb) == r);  // already reduced
    // Representatives are well defined modulo the ideal.
    CHECK(normal_form(p + P("X0^2 - X1*X2") * P("X2"), gb) == r);
}

TEST_CASE("membership consistency property") {
    const auto gb = buchberger(I({"X0^2 - X1*X2", "X1^3 - X2^3"}));
    const std::vector<Poly> members = {
        P("X0^2 - X1*X2") * P("X0 + 5*X1"),
        P("X1^3 - X2^3") * P("X2^2") + P("X0^2 - X1*X2") * P("X1*X2"),
    };
    for (const auto& m : members) CHECK(ideal_member(m, gb));
    CHECK_FALSE(ideal_member(P("X0"), gb));
    CHECK_FALSE(ideal_member(P("1"), gb));
    CHECK(ideal_member(Poly::zero(R), gb));
}

TEST_CASE("budget exhaustion raises the dedicated error") {
    CHECK_THROWS_AS(buchberger(I({"X0^2 - X1*X2", "X0*X1 - X2^2", "X1^2 - X0*X2"}), 1),
                    budget_error);
}

TEST_CASE("saturation by a variable") {
    // (X0 * X1, X0 * X2) : X0^inf = (X1, X2)
    const Ideal sat = saturate_by(I({"X0*X1", "X0*X2"}), "X0");
    const auto gb = buchberger(sat);
    CHECK(basis_strings(gb) == std::vector<std::string>{"X2", "X1"});
    // Saturation is idempotent.
    const Ideal again = saturate_by(sat, "X0");
    CHECK(basis_strings(buchberger(again)) == basis_strings(gb));
    // Principal case: (X0^3 * X1^2) : X0^inf = (X1^2).
    const Ideal pr = saturate_by(I({"X0^3*X1^2"}), "X0");
    CHECK(basis_strings(buchberger(pr)) == std::vector<std::string>{"X1^2"});
    // Nothing to remove.
    const Ideal fixed = saturate_by(I({"X1 - X2"}), "X0");
    CHECK(basis_strings(buchberger(fixed)) == std::vector<std::string>{"X1 - X2"});
}

TEST_CASE("Hilbert series of graded quotients") {
    // S/(X0) over 3 variables: numerator 1 - t, one cancellation -> dim_aff 2.
    const auto hs1 = hilbert_series(buchberger(I({"X0"})));
    CHECK(hs1.numerator == std::vector<long long>{1, -1});
    // (X1, X2, X0^2) contains the square of the irrelevant ideal, so the
    // projective scheme is empty even though the affine cone is not.
    CHECK(scheme_metrics(I({"X1", "X2", "X0^2"})).empty);
    // S/(X0^2, X1): a projective double point, length 2, not reduced.
    const auto m = scheme_metrics(I({"X0^2", "X1"}));
    CHECK(m.dimension == 0);
    REQUIRE(m.length.has_value());
    CHECK(*m.length == 2);
    REQUIRE(m.reduced.has_value());
    CHECK_FALSE(*m.reduced);
}

TEST_CASE("Hilbert function values") {
    // The full polynomial ring (zero ideal): h(d) = C(d + 2, 2).
    const Ideal zero(R, {});
    for (int d = 0; d <= 5; ++d)
        CHECK(hilbert_function(zero, d) == (d + 2) * (d + 1) / 2);
    // Quotient by one quadric: h(d) = C(d+2,2) - C(d,2).
    const Ideal quadric = I({"X0^2 - X1*X2"});
    CHECK(hilbert_function(quadric, 0) == 1);
    CHECK(hilbert_function(quadric, 1) == 3);
    CHECK(hilbert_function(quadric, 2) == 5);
    CHECK(hilbert_function(quadric, 3) == 7);
}

TEST_CASE("scheme metrics: emptiness, dimension, length, reducedness") {
    // Empty projective scheme (irrelevant ideal).
    const auto empty = scheme_metrics(I({"X0", "X1", "X2"}));
    CHECK(empty.empty);
    CHECK(empty.dimension == -1);

    // A plane curve has dimension 1 and no finite length.
    const auto curve = scheme_metrics(I({"X0^2 - X1*X2"}));
    CHECK_FALSE(curve.empty);
    CHECK(curve.dimension == 1);
    CHECK_FALSE(curve.length.has_value());

    // Transverse intersection of two lines: one reduced point.
    const auto pt = scheme_metrics(I({"X0", "X1"}));
    CHECK(pt.dimension == 0);
    CHECK(*pt.length == 1);
    CHECK(*pt.reduced);

    // A double point is not reduced.
    const auto dbl = scheme_metrics(I({"X0^2", "X1"}));
    CHECK(dbl.dimension == 0);
    CHECK(*dbl.length == 2);
    CHECK_FALSE(*dbl.reduced);
}

TEST_CASE("complete intersections of curves have length = product of degrees") {
    for (int a = 1; a <= 4; ++a) {
        for (int b = 1; b <= 4; ++b) {
            const Poly g = Poly::variable(R, 1).pow(a);
            const Poly h = Poly::variable(R, 2).pow(b);
            const auto m = scheme_metrics(Ideal(R, {g, h}));
            CHECK(m.dimension == 0);
            REQUIRE(m.length.has_value());
            CHECK(*m.length == a * b);
        }
    }
    // Distinct-points version is reduced: X1^2 - X2^2 and X0 cut two points.
    const auto two = scheme_metrics(I({"X1^2 - X2^2", "X0"}));
    CHECK(*two.length == 2);
    CHECK(*two.reduced);
}

TEST_CASE("ideal construction contracts") {
    CHECK_THROWS_AS(Ideal(R, {Poly::zero(R)}), error);
    CHECK(I({"X0^2 - X1*X2"}).is_homogeneous());
    std::vector<Poly> mixed = {P("X0^2 + X1")};
    CHECK_FALSE(Ideal(R, mixed).is_homogeneous());
    // Saturation of a non-homogeneous, non-principal ideal is unsupported.
    CHECK_THROWS_AS(saturate_by(Ideal(R, {P("X0^2 + X1"), P("X0*X2")}), "X0"), error);
}
