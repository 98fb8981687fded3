#include "pblab/chow.hpp"

#include <sstream>

namespace pblab {

ChernPair chern_from_sequence(const BundleSeq& seq) {
    const long long alpha = seq.kernel_deg + seq.twist;
    const long long b1 = seq.middle[0] + seq.twist;
    const long long b2 = seq.middle[1] + seq.twist;
    const long long b3 = seq.middle[2] + seq.twist;
    const long long n1 = b1 + b2 + b3;
    const long long n2 = b1 * b2 + b1 * b3 + b2 * b3;
    // (1 + n1 h + n2 h^2) * (1 + alpha h)^(-1) mod h^3
    return ChernPair{n1 - alpha, n2 - alpha * n1 + alpha * alpha};
}

long long h0_line_bundle(long long d) {
    return d >= 0 ? (d + 2) * (d + 1) / 2 : 0;
}

long long h0_bundle(const BundleSeq& seq) {
    long long s = -h0_line_bundle(seq.kernel_deg + seq.twist);
    for (int b : seq.middle) s += h0_line_bundle(b + seq.twist);
    return s;
}

std::string to_string(Stability s) {
    switch (s) {
        case Stability::stable: return "stable";
        case Stability::semistable_not_stable: return "semistable_not_stable";
        case Stability::unstable: return "unstable";
    }
    return "?";
}

StabilityVerdict stability_verdict(const BundleSeq& seq) {
    const long long c1 = chern_from_sequence(seq).c1;
    // Normalization: twist so that c1 becomes 0 (c1 even) or -1 (c1 odd).
    const int k = c1 % 2 == 0 ? static_cast<int>(-c1 / 2)
                              : static_cast<int>(-(c1 + 1) / 2);
    BundleSeq norm = seq;
    norm.twist += k;
    StabilityVerdict v;
    v.normal_twist = k;
    v.h0_norm = h0_bundle(norm);
    BundleSeq norm1 = norm;
    norm1.twist -= 1;
    v.h0_norm_minus1 = h0_bundle(norm1);
    if (v.h0_norm == 0)
        v.verdict = Stability::stable;
    else if (v.h0_norm_minus1 == 0)
        v.verdict = Stability::semistable_not_stable;
    else
        v.verdict = Stability::unstable;
    return v;
}

// ---------------------------------------------------------------------------
// Chow expressions

void check_supported(const ChowContext& ctx) {
    const bool ok = (ctx.base == BaseSpace::P2 && ctx.rank == 2) ||
                    (ctx.base == BaseSpace::P1 && ctx.rank == 3);
    if (!ok)
        throw error("unsupported Chow context: only rank 2 over P2 and rank 3 "
                    "over P1 (both 3-folds) are implemented");
}

ChowExpr::ChowExpr(const ChowContext& ctx) : ctx_(ctx) { check_supported(ctx); }

ChowExpr ChowExpr::monomial(const ChowContext& ctx, int h_pow, int xi_pow,
                            long long coeff) {
    ChowExpr e(ctx);
    if (h_pow < 0 || xi_pow < 0) throw error("negative Chow exponent");
    e.add_reduced(h_pow, xi_pow, coeff);
    return e;
}

void ChowExpr::add_reduced(int h_pow, int xi_pow, long long coeff) {
    if (coeff == 0) return;
    if (h_pow > ctx_.base_dim()) return; // ambient relation h^(dim+1) = 0
    if (xi_pow < ctx_.rank) {
        coeffs_[h_pow][xi_pow] += coeff;
        return;
    }
    // xi^rank = c1 h xi^(rank-1) - c2 h^2 xi^(rank-2)
    add_reduced(h_pow + 1, xi_pow - 1, coeff * ctx_.chern.c1);
    add_reduced(h_pow + 2, xi_pow - 2, -coeff * ctx_.chern.c2);
}

long long ChowExpr::coeff(int h_pow, int xi_pow) const {
    if (h_pow < 0 || h_pow > ctx_.base_dim() || xi_pow < 0 || xi_pow >= ctx_.rank)
        return 0;
    return coeffs_[h_pow][xi_pow];
}

void ChowExpr::check_compatible(const ChowExpr& o) const {
    if (ctx_.base != o.ctx_.base || ctx_.rank != o.ctx_.rank ||
        !(ctx_.chern == o.ctx_.chern))
        throw error("Chow expressions from different contexts");
}

ChowExpr ChowExpr::operator+(const ChowExpr& o) const {
    check_compatible(o);
    ChowExpr r(*this);
    for (int i = 0; i <= ctx_.base_dim(); ++i)
        for (int j = 0; j < ctx_.rank; ++j) r.coeffs_[i][j] += o.coeffs_[i][j];
    return r;
}

ChowExpr ChowExpr::operator*(const ChowExpr& o) const {
    check_compatible(o);
    ChowExpr r(ctx_);
    for (int i = 0; i <= ctx_.base_dim(); ++i)
        for (int j = 0; j < ctx_.rank; ++j) {
            if (coeffs_[i][j] == 0) continue;
            for (int k = 0; k <= ctx_.base_dim(); ++k)
                for (int l = 0; l < ctx_.rank; ++l) {
                    if (o.coeffs_[k][l] == 0) continue;
                    r.add_reduced(i + k, j + l, coeffs_[i][j] * o.coeffs_[k][l]);
                }
        }
    return r;
}

ChowExpr ChowExpr::scaled(long long k) const {
    ChowExpr r(*this);
    for (auto& row : r.coeffs_)
        for (auto& c : row) c *= k;
    return r;
}

bool ChowExpr::operator==(const ChowExpr& o) const {
    if (ctx_.base != o.ctx_.base || ctx_.rank != o.ctx_.rank ||
        !(ctx_.chern == o.ctx_.chern))
        return false;
    return coeffs_ == o.coeffs_;
}

long long ChowExpr::point_degree() const {
    // Push-forward normalization: h^2 xi = 1 over P2, h xi^2 = 1 over P1.
    return ctx_.base == BaseSpace::P2 ? coeff(2, 1) : coeff(1, 2);
}

long long xi_top(const ChowContext& ctx) {
    check_supported(ctx);
    const ChowExpr xi = ChowExpr::monomial(ctx, 0, 1);
    return (xi * xi * xi).point_degree();
}

std::string CubicForm::str() const {
    std::ostringstream os;
    bool first = true;
    auto emit = [&](long long c, const char* mono) {
        if (c == 0) return;
        if (!first) os << (c > 0 ? " + " : " - ");
        else if (c < 0) os << "-";
        const long long m = c > 0 ? c : -c;
        if (m != 1) os << m << "*";
        os << mono;
        first = false;
    };
    emit(e30, "a^3");
    emit(e21, "a^2*b");
    emit(e12, "a*b^2");
    emit(e03, "b^3");
    if (first) os << "0";
    return os.str();
}

CubicForm cubic_form(const ChowContext& ctx) {
    check_supported(ctx);
    if (ctx.total_dim() != 3) throw error("cubic_form: context is not a 3-fold");
    const ChowExpr h = ChowExpr::monomial(ctx, 1, 0);
    const ChowExpr xi = ChowExpr::monomial(ctx, 0, 1);
    CubicForm f;
    f.e30 = (h * h * h).point_degree();
    f.e21 = 3 * (h * h * xi).point_degree();
    f.e12 = 3 * (h * xi * xi).point_degree();
    f.e03 = (xi * xi * xi).point_degree();
    return f;
}

CubicForm cubic_transform(const CubicForm& f, long long p, long long q,
                          long long r, long long s) {
    CubicForm g;
    g.e30 = f.e30 * p * p * p + f.e21 * p * p * r + f.e12 * p * r * r + f.e03 * r * r * r;
    g.e21 = 3 * f.e30 * p * p * q + f.e21 * (p * p * s + 2 * p * q * r) +
            f.e12 * (q * r * r + 2 * p * r * s) + 3 * f.e03 * r * r * s;
    g.e12 = 3 * f.e30 * p * q * q + f.e21 * (q * q * r + 2 * p * q * s) +
            f.e12 * (p * s * s + 2 * q * r * s) + 3 * f.e03 * r * s * s;
    g.e03 = f.e30 * q * q * q + f.e21 * q * q * s + f.e12 * q * s * s + f.e03 * s * s * s;
    return g;
}

std::optional<std::array<long long, 4>> cubic_equiv_search(const CubicForm& f1,
                                                           const CubicForm& f2,
                                                           int bound) {
    if (bound < 1) throw error("cubic_equiv_search: bound must be >= 1");
    const long long B = bound;
    for (long long p = -B; p <= B; ++p)
        for (long long q = -B; q <= B; ++q)
            for (long long r = -B; r <= B; ++r)
                for (long long s = -B; s <= B; ++s) {
                    const long long det = p * s - q * r;
                    if (det != 1 && det != -1) continue;
                    if (cubic_transform(f1, p, q, r, s) == f2)
                        return std::array<long long, 4>{p, q, r, s};
                }
    return std::nullopt;
}

} // namespace pblab
