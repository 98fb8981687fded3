#include "pblab/groebner.hpp"

#include <algorithm>
#include <set>
#include <tuple>

namespace pblab {

Ideal::Ideal(RingPtr r, std::vector<Poly> g) : ring(std::move(r)), gens(std::move(g)) {
    for (const auto& p : gens) {
        if (!same_ring(p.ring(), ring))
            throw ring_mismatch("ideal generator from a different ring");
        if (p.is_zero()) throw error("zero generator in ideal");
    }
}

bool Ideal::is_homogeneous() const {
    for (const auto& p : gens)
        if (!p.homogeneous_degree()) return false;
    return true;
}

// ---------------------------------------------------------------------------
// Division

static bool is_int(const Rational& c) { return denominator(c) == 1; }

// Divides accumulated work by the integer content when all coefficients are
// integers; keeps the numbers small during fraction-free reduction.
static void strip_content(PolyBuilder& cur, PolyBuilder& rem, Rational& scale) {
    Integer g = 0;
    for (const PolyBuilder* part : {&cur, &rem})
        for (const auto& [e, c] : part->peek().terms()) {
            if (!is_int(c)) return;
            g = gcd(g, numerator(c));
            if (g == 1) return;
        }
    if (g == 0) return;
    const Rational inv = Rational(1) / Rational(g);
    cur.scale(inv);
    rem.scale(inv);
    scale *= inv;
}

// Full division: reduces every monomial of p against the reducers (which
// need not be monic). Uses fraction-free steps over the integers, tracking
// the accumulated scale, so coefficients stay integral until the end.
static Poly reduce_full(const Poly& p, const std::vector<Poly>& reducers) {
    PolyBuilder cur(p.ring());
    cur.add(p);
    PolyBuilder rem(p.ring());
    Rational scale = 1; // cur + rem == scale * (true running value)
    long steps = 0;
    while (!cur.peek().is_zero()) {
        const Exponents le = cur.peek().leading_exponents();
        const Rational c = cur.peek().leading_coeff();
        const Poly* hit = nullptr;
        for (const auto& g : reducers) {
            if (divides(g.leading_exponents(), le)) {
                hit = &g;
                break;
            }
        }
        if (!hit) {
            rem.add(le, c);
            cur.add(le, -c);
            continue;
        }
        const Rational& gl = hit->leading_coeff();
        const Exponents shift = exp_sub(le, hit->leading_exponents());
        if (is_int(c) && is_int(gl)) {
            const Integer d = gcd(numerator(c), numerator(gl));
            const Integer a = numerator(gl) / d;
            if (a != 1) {
                const Rational ra(a);
                cur.scale(ra);
                rem.scale(ra);
                scale *= ra;
            }
            cur.add_scaled(*hit, Rational(-numerator(c) / d), shift);
        } else {
            cur.add_scaled(*hit, -(c / gl), shift);
        }
        if ((++steps & 7) == 0) strip_content(cur, rem, scale);
    }
    if (scale != 1) rem.scale(Rational(1) / scale);
    return rem.take();
}

// Fraction-free S-polynomial: clears both leading coefficients over the
// integers when possible instead of dividing by them.
static Poly s_poly(const Poly& f, const Poly& g) {
    const Exponents lcm = exp_lcm(f.leading_exponents(), g.leading_exponents());
    const Exponents sf = exp_sub(lcm, f.leading_exponents());
    const Exponents sg = exp_sub(lcm, g.leading_exponents());
    const Rational& fl = f.leading_coeff();
    const Rational& gl = g.leading_coeff();
    PolyBuilder b(f.ring());
    if (is_int(fl) && is_int(gl)) {
        const Integer d = gcd(numerator(fl), numerator(gl));
        b.add_scaled(f, Rational(numerator(gl) / d), sf);
        b.add_scaled(g, Rational(-numerator(fl) / d), sg);
    } else {
        b.add_scaled(f, Rational(1) / fl, sf);
        b.add_scaled(g, Rational(-1) / gl, sg);
    }
    return b.take();
}

// Integer coefficients, content 1, positive leading coefficient.
static Poly make_primitive(const Poly& p) {
    if (p.is_zero()) return p;
    Integer num_g = 0, den_l = 1;
    for (const auto& [e, c] : p.terms()) {
        num_g = gcd(num_g, numerator(c));
        den_l = lcm(den_l, denominator(c));
    }
    Rational s = Rational(den_l) / Rational(num_g);
    if (p.leading_coeff() < 0) s = -s;
    return p * s;
}

static std::vector<Poly> interreduce(std::vector<Poly> basis) {
    // Drop elements whose leading term is divisible by another's.
    std::vector<Poly> kept;
    for (std::size_t i = 0; i < basis.size(); ++i) {
        bool redundant = false;
        for (std::size_t j = 0; j < basis.size(); ++j) {
            if (i == j) continue;
            const auto& li = basis[i].leading_exponents();
            const auto& lj = basis[j].leading_exponents();
            if (divides(lj, li) && (li != lj || j < i)) {
                redundant = true;
                break;
            }
        }
        if (!redundant) kept.push_back(basis[i]);
    }
    // Tail-reduce each element against the others.
    std::vector<Poly> out;
    for (std::size_t i = 0; i < kept.size(); ++i) {
        std::vector<Poly> others;
        for (std::size_t j = 0; j < kept.size(); ++j)
            if (j != i) others.push_back(kept[j]);
        out.push_back(reduce_full(kept[i], others).monic());
    }
    std::sort(out.begin(), out.end(), [](const Poly& a, const Poly& b) {
        return grevlex_greater(b.leading_exponents(), a.leading_exponents());
    });
    return out;
}

bool unit_ideal_certificate(const Ideal& ideal, int extra_degrees) {
    const int nv = ideal.ring->nvars();
    int dmax = 0;
    for (const auto& g : ideal.gens) dmax = std::max(dmax, g.degree());
    for (int D = dmax; D <= dmax + extra_degrees; ++D) {
        // Columns: every monomial of degree <= D, descending grevlex, so the
        // constant monomial is the last column.
        std::map<Exponents, int, GrevlexDesc> col;
        for (int d = D; d >= 0; --d)
            for (auto& e : exponents_of_degree(nv, d)) col.emplace(std::move(e), 0);
        int ncols = 0;
        for (auto& [e, idx] : col) idx = ncols++;
        // Row echelon over the rationals, one pivot row per column. Each row
        // is a monomial multiple x^a * g with deg <= D.
        std::vector<std::vector<Rational>> pivot(ncols);
        std::vector<Rational> row(ncols);
        for (const auto& g : ideal.gens) {
            for (int d = 0; d <= D - g.degree(); ++d) {
                for (const auto& shift : exponents_of_degree(nv, d)) {
                    std::fill(row.begin(), row.end(), Rational(0));
                    for (const auto& [e, c] : g.terms())
                        row[col.at(exp_add(e, shift))] = c;
                    for (int j = 0; j < ncols; ++j) {
                        if (row[j] == 0) continue;
                        if (pivot[j].empty()) {
                            // Normalize so the pivot entry is 1.
                            const Rational inv = Rational(1) / row[j];
                            for (int k = j; k < ncols; ++k) row[k] *= inv;
                            if (j == ncols - 1) return true; // row is a nonzero constant
                            pivot[j] = row;
                            break;
                        }
                        const Rational c = row[j];
                        for (int k = j; k < ncols; ++k) row[k] -= c * pivot[j][k];
                    }
                }
            }
        }
    }
    return false;
}

GroebnerBasis buchberger(const Ideal& i, long budget) {
    if (i.ring->nvars() > 6) throw error("rings are limited to 6 variables");
    const auto unit_basis = [&] {
        return GroebnerBasis{i.ring, {Poly::constant(i.ring, 1)}};
    };
    std::vector<Poly> G;
    for (const auto& p : i.gens) {
        if (p.degree() == 0) return unit_basis();
        G.push_back(make_primitive(p));
    }

    // Normal strategy queue: (lcm degree, index pair).
    using PairKey = std::tuple<int, std::size_t, std::size_t>;
    std::set<PairKey> queue;
    auto pair_key = [&](std::size_t a, std::size_t b) {
        if (a > b) std::swap(a, b);
        const Exponents lcm =
            exp_lcm(G[a].leading_exponents(), G[b].leading_exponents());
        return PairKey{total_degree(lcm), a, b};
    };
    auto push_pairs_for = [&](std::size_t k) {
        for (std::size_t j = 0; j < k; ++j) queue.insert(pair_key(j, k));
    };
    for (std::size_t k = 1; k < G.size(); ++k) push_pairs_for(k);

    long reductions = 0;
    while (!queue.empty()) {
        const auto [deg, a, b] = *queue.begin();
        queue.erase(queue.begin());
        const auto& la = G[a].leading_exponents();
        const auto& lb = G[b].leading_exponents();
        const Exponents lcm = exp_lcm(la, lb);
        // Product criterion: coprime leading terms reduce to zero.
        if (lcm == exp_add(la, lb)) continue;
        // Chain criterion: if some third leading term divides the lcm and
        // both associated pairs were already handled, this pair is redundant.
        bool chained = false;
        for (std::size_t k = 0; k < G.size() && !chained; ++k) {
            if (k == a || k == b) continue;
            if (!divides(G[k].leading_exponents(), lcm)) continue;
            if (!queue.count(pair_key(a, k)) && !queue.count(pair_key(k, b)))
                chained = true;
        }
        if (chained) continue;
        if (++reductions > budget)
            throw budget_error("S-pair budget of " + std::to_string(budget) + " exceeded");
        const Poly h = reduce_full(s_poly(G[a], G[b]), G);
        if (!h.is_zero()) {
            if (h.degree() == 0) return unit_basis();
            G.push_back(make_primitive(h));
            push_pairs_for(G.size() - 1);
        }
    }
    return GroebnerBasis{i.ring, interreduce(std::move(G))};
}

Poly normal_form(const Poly& p, const GroebnerBasis& gb) {
    if (!same_ring(p.ring(), gb.ring))
        throw ring_mismatch("normal_form: polynomial and basis ring differ");
    return reduce_full(p, gb.basis);
}

bool ideal_member(const Poly& p, const Ideal& i, long budget) {
    return normal_form(p, buchberger(i, budget)).is_zero();
}

bool ideal_member(const Poly& p, const GroebnerBasis& gb) {
    return normal_form(p, gb).is_zero();
}

// ---------------------------------------------------------------------------
// Saturation

namespace {

Poly permute_poly(const Poly& p, const std::vector<int>& perm, const RingPtr& target) {
    PolyBuilder acc(target);
    for (const auto& [e, c] : p.terms()) {
        Exponents q(e.size(), 0);
        for (std::size_t k = 0; k < e.size(); ++k) q[perm[k]] = e[k];
        acc.add(q, c);
    }
    return acc.take();
}

} // namespace

Ideal saturate_by(const Ideal& i, std::string_view var, long budget) {
    const int vidx = i.ring->index_of(var);
    if (vidx < 0)
        throw error("unknown variable '" + std::string(var) + "' in ring " + i.ring->name);
    if (i.gens.empty()) return i;

    if (i.gens.size() == 1) {
        // Principal ideal: exact division, valid without homogeneity.
        const Poly& g = i.gens[0];
        int m = 0;
        Poly cur = g;
        while (cur.divisible_by_var(vidx)) {
            cur = cur.divide_by_var_power(vidx, 1);
            ++m;
        }
        return Ideal(i.ring, {cur});
    }

    if (!i.is_homogeneous())
        throw error("saturate_by requires a homogeneous or principal ideal");

    // Work in a ring with the saturation variable moved to the last slot,
    // where grevlex leading terms detect divisibility by the variable.
    std::vector<std::string> pvars;
    for (int k = 0; k < i.ring->nvars(); ++k)
        if (k != vidx) pvars.push_back(i.ring->vars[k]);
    pvars.push_back(i.ring->vars[vidx]);
    const RingPtr pring = make_ring(i.ring->name + "~" + std::string(var), pvars);
    std::vector<int> perm(i.ring->nvars());
    for (int k = 0; k < i.ring->nvars(); ++k)
        perm[k] = pring->index_of(i.ring->vars[k]);
    std::vector<int> inv(perm.size());
    for (std::size_t k = 0; k < perm.size(); ++k) inv[perm[k]] = static_cast<int>(k);

    const int last = pring->nvars() - 1;
    std::vector<Poly> gens;
    for (const auto& g : i.gens) gens.push_back(permute_poly(g, perm, pring));

    for (;;) {
        const GroebnerBasis gb = buchberger(Ideal(pring, gens), budget);
        bool changed = false;
        std::vector<Poly> next;
        for (const auto& g : gb.basis) {
            int m = 0;
            Poly cur = g;
            while (cur.divisible_by_var(last)) {
                cur = cur.divide_by_var_power(last, 1);
                ++m;
            }
            if (m > 0) changed = true;
            next.push_back(std::move(cur));
        }
        gens = std::move(next);
        if (!changed) break;
    }

    std::vector<Poly> out;
    for (const auto& g : gens) out.push_back(permute_poly(g, inv, i.ring));
    return Ideal(i.ring, std::move(out));
}

// ---------------------------------------------------------------------------
// Hilbert series

namespace detail {

namespace {

using TPoly = std::vector<long long>; // coefficients by degree; empty = 0

void tpoly_sub_shifted(TPoly& a, const TPoly& b, int shift) {
    if (b.empty()) return;
    if (a.size() < b.size() + shift) a.resize(b.size() + shift, 0);
    for (std::size_t k = 0; k < b.size(); ++k) a[k + shift] -= b[k];
    while (!a.empty() && a.back() == 0) a.pop_back();
}

std::vector<Exponents> minimalize(std::vector<Exponents> gens) {
    std::sort(gens.begin(), gens.end());
    gens.erase(std::unique(gens.begin(), gens.end()), gens.end());
    std::vector<Exponents> out;
    for (std::size_t a = 0; a < gens.size(); ++a) {
        bool redundant = false;
        for (std::size_t b = 0; b < gens.size() && !redundant; ++b)
            if (a != b && divides(gens[b], gens[a]) && (gens[b] != gens[a] || b < a))
                redundant = true;
        if (!redundant) out.push_back(gens[a]);
    }
    return out;
}

TPoly numerator_rec(std::vector<Exponents> gens) {
    gens = minimalize(std::move(gens));
    if (gens.empty()) return {1};
    if (total_degree(gens[0]) == 0) return {}; // unit ideal
    if (gens.size() == 1) {
        TPoly n{1};
        tpoly_sub_shifted(n, {1}, total_degree(gens[0]));
        return n;
    }
    const Exponents pivot = gens.back();
    std::vector<Exponents> rest(gens.begin(), gens.end() - 1);
    std::vector<Exponents> colon;
    for (const auto& g : rest) {
        Exponents q(g.size());
        for (std::size_t k = 0; k < g.size(); ++k) q[k] = std::max(g[k] - pivot[k], 0);
        colon.push_back(std::move(q));
    }
    TPoly n = numerator_rec(std::move(rest));
    tpoly_sub_shifted(n, numerator_rec(std::move(colon)), total_degree(pivot));
    return n;
}

} // namespace

std::vector<long long> hilbert_numerator(const std::vector<Exponents>& lt_gens, int nvars) {
    (void)nvars;
    return numerator_rec(lt_gens);
}

} // namespace detail

namespace {

long long eval_at_one(const std::vector<long long>& n) {
    long long s = 0;
    for (long long c : n) s += c;
    return s;
}

// Exact division by (1-t); caller guarantees N(1) == 0.
std::vector<long long> divide_by_one_minus_t(const std::vector<long long>& n) {
    std::vector<long long> q(n.size() ? n.size() - 1 : 0, 0);
    long long carry = 0;
    for (std::size_t k = 0; k < q.size(); ++k) {
        carry += n[k];
        q[k] = carry;
    }
    while (!q.empty() && q.back() == 0) q.pop_back();
    return q;
}

long long binomial(long long n, long long k) {
    if (k < 0 || n < 0 || k > n) return 0;
    long long r = 1;
    for (long long j = 1; j <= k; ++j) r = r * (n - k + j) / j;
    return r;
}

std::vector<Exponents> leading_exponents_of(const GroebnerBasis& gb) {
    std::vector<Exponents> lt;
    for (const auto& g : gb.basis) lt.push_back(g.leading_exponents());
    return lt;
}

struct SeriesShape {
    std::vector<long long> reduced_numerator; // Q(t) with Q(1) != 0, empty if zero
    int affine_dimension = 0;                 // Krull dimension of the quotient
};

SeriesShape series_shape(const GroebnerBasis& gb) {
    const int nvars = gb.ring->nvars();
    std::vector<long long> n = detail::hilbert_numerator(leading_exponents_of(gb), nvars);
    if (n.empty()) return {{}, 0}; // quotient is the zero ring
    int cancelled = 0;
    while (!n.empty() && eval_at_one(n) == 0) {
        n = divide_by_one_minus_t(n);
        ++cancelled;
    }
    return {std::move(n), nvars - cancelled};
}

void require_homogeneous(const Ideal& i, const char* who) {
    if (!i.is_homogeneous())
        throw error(std::string(who) + ": non-homogeneous generator");
}

bool projective_empty(const Ideal& i, long budget) {
    return series_shape(buchberger(i, budget)).affine_dimension == 0;
}

// All 2x2 Jacobian minors of the generator list.
std::vector<Poly> jacobian_minors(const Ideal& i) {
    std::vector<Poly> minors;
    const int nv = i.ring->nvars();
    for (std::size_t a = 0; a < i.gens.size(); ++a)
        for (std::size_t b = a + 1; b < i.gens.size(); ++b)
            for (int u = 0; u < nv; ++u)
                for (int v = u + 1; v < nv; ++v) {
                    Poly det = partial_derivative(i.gens[a], u) * partial_derivative(i.gens[b], v) -
                               partial_derivative(i.gens[a], v) * partial_derivative(i.gens[b], u);
                    if (!det.is_zero()) minors.push_back(std::move(det));
                }
    return minors;
}

} // namespace

HilbertSeries hilbert_series(const GroebnerBasis& gb) {
    const int nvars = gb.ring->nvars();
    return HilbertSeries{detail::hilbert_numerator(leading_exponents_of(gb), nvars),
                         nvars};
}

long hilbert_function(const GroebnerBasis& gb, int d) {
    if (d < 0) throw error("hilbert_function: negative degree");
    const int nvars = gb.ring->nvars();
    const std::vector<long long> n =
        detail::hilbert_numerator(leading_exponents_of(gb), nvars);
    long long hf = 0;
    for (std::size_t j = 0; j < n.size(); ++j) {
        if (static_cast<int>(j) > d) break;
        hf += n[j] * binomial(d - static_cast<long long>(j) + nvars - 1, nvars - 1);
    }
    return static_cast<long>(hf);
}

long hilbert_function(const Ideal& i, int d, long budget) {
    require_homogeneous(i, "hilbert_function");
    return hilbert_function(buchberger(i, budget), d);
}

SchemeMetrics scheme_metrics(const Ideal& i, long budget) {
    return scheme_metrics(i, buchberger(i, budget), budget);
}

SchemeMetrics scheme_metrics(const Ideal& i, const GroebnerBasis& gb, long budget) {
    require_homogeneous(i, "scheme_metrics");
    const SeriesShape shape = series_shape(gb);
    SchemeMetrics m;
    m.dimension = shape.affine_dimension - 1;
    m.empty = (m.dimension == -1);
    if (m.dimension == 0) {
        m.length = static_cast<long>(eval_at_one(shape.reduced_numerator));
        std::vector<Poly> gens = i.gens;
        for (auto& d : jacobian_minors(i)) gens.push_back(std::move(d));
        m.reduced = projective_empty(Ideal(i.ring, std::move(gens)), budget);
    }
    return m;
}

} // namespace pblab
