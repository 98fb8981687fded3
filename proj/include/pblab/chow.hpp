#pragma once

#include "pblab/ring.hpp"

#include <array>
#include <optional>
#include <string>

namespace pblab {

/// Presentation 0 -> O(a+k) -> O(b1+k) (+) O(b2+k) (+) O(b3+k) -> V(k) -> 0
/// of a rank-2 bundle over the plane. `kernel_deg` is a, `middle` the bi,
/// `twist` the k.
struct BundleSeq {
    int kernel_deg = 0;
    std::array<int, 3> middle{0, 0, 0};
    int twist = 0;

    /// The section-triple presentation for a given n: a = 1-n, middle (1,0,0).
    static BundleSeq for_degree(int n, int twist = 0) {
        return BundleSeq{1 - n, {1, 0, 0}, twist};
    }
};

/// Chern numbers (c1, c2) as coefficients of [h], [h^2] in Z[h]/(h^3).
struct ChernPair {
    long long c1 = 0;
    long long c2 = 0;
    bool operator==(const ChernPair&) const = default;
};

/// Whitney product over the sequence, truncated mod h^3.
ChernPair chern_from_sequence(const BundleSeq& seq);

/// h^0 of O(d) on the plane: (d+2)(d+1)/2 for d >= 0, else 0.
long long h0_line_bundle(long long d);

/// h^0 of the twisted cokernel, via the long exact sequence. Valid because
/// H^1 of a line bundle on the plane vanishes, so the section count is the
/// alternating sum of the line-bundle section counts.
long long h0_bundle(const BundleSeq& seq);

enum class Stability { stable, semistable_not_stable, unstable };

std::string to_string(Stability s);

/// Slope stability of the rank-2 cokernel, decided on the normalized twist
/// (-c1/2 rounded down to make the normalized c1 lie in {-1, 0}).
struct StabilityVerdict {
    Stability verdict = Stability::unstable;
    int normal_twist = 0;
    long long h0_norm = 0;
    long long h0_norm_minus1 = 0;
};

StabilityVerdict stability_verdict(const BundleSeq& seq);

enum class BaseSpace { P1, P2 };

/// One of the two 3-fold Chow contexts the toolkit supports: a rank-2
/// bundle over the plane or a rank-3 bundle over the line. Relations:
///   P2, rank 2:  h^3 = 0,  xi^2 = c1*h*xi - c2*h^2,   point class = h^2*xi
///   P1, rank 3:  h^2 = 0,  xi^3 = c1*h*xi^2 - c2*h^2*xi, point class = h*xi^2
struct ChowContext {
    BaseSpace base = BaseSpace::P2;
    int rank = 2;
    ChernPair chern;

    int base_dim() const { return base == BaseSpace::P2 ? 2 : 1; }
    int total_dim() const { return base_dim() + rank - 1; }
};

/// Integer combination of the monomial basis {h^i xi^j : i <= dim base,
/// j < rank} of the Chow ring. Reduction by the two relations is confluent,
/// so any multiplication order yields the same coefficients.
class ChowExpr {
public:
    explicit ChowExpr(const ChowContext& ctx);

    static ChowExpr monomial(const ChowContext& ctx, int h_pow, int xi_pow,
                             long long coeff = 1);

    const ChowContext& context() const { return ctx_; }
    long long coeff(int h_pow, int xi_pow) const;

    ChowExpr operator+(const ChowExpr& o) const;
    ChowExpr operator*(const ChowExpr& o) const;
    ChowExpr scaled(long long k) const;
    bool operator==(const ChowExpr& o) const;

    /// Coefficient of the point class (h^2*xi over P^2, h*xi^2 over P^1).
    long long point_degree() const;

private:
    ChowContext ctx_;
    // coeffs_[i][j] is the coefficient of h^i xi^j.
    std::array<std::array<long long, 3>, 3> coeffs_{};

    void add_reduced(int h_pow, int xi_pow, long long coeff);
    void check_compatible(const ChowExpr& o) const;
};

void check_supported(const ChowContext& ctx);

/// Multiple of the point class in xi^(total dim); the degree of the image
/// of the tautological linear system when the map is birational.
long long xi_top(const ChowContext& ctx);

/// Integer cubic e30*a^3 + e21*a^2*b + e12*a*b^2 + e03*b^3.
struct CubicForm {
    long long e30 = 0, e21 = 0, e12 = 0, e03 = 0;
    bool operator==(const CubicForm&) const = default;
    std::string str() const;
};

/// Cubic intersection form of (a*h + b*xi)^3 read off the point class; a
/// graded-ring invariant that separates the two 3-folds compared here.
CubicForm cubic_form(const ChowContext& ctx);

/// Transform of f under the degree-1 basis change (a, b) -> M(a, b).
CubicForm cubic_transform(const CubicForm& f, long long p, long long q,
                          long long r, long long s);

/// Exhaustive scan over integer matrices [[p,q],[r,s]] with entries in
/// [-bound, bound] and determinant +-1 for one carrying f1 to f2; the first
/// witness in (p,q,r,s) lexicographic order, or nullopt. Bounded refutation
/// evidence, not an isomorphism proof.
std::optional<std::array<long long, 4>> cubic_equiv_search(const CubicForm& f1,
                                                           const CubicForm& f2,
                                                           int bound);

} // namespace pblab
