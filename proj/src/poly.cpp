#include "pblab/poly.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

namespace pblab {

std::string rational_to_string(const Rational& r) {
    std::ostringstream os;
    os << numerator(r);
    if (denominator(r) != 1) os << "/" << denominator(r);
    return os.str();
}

int total_degree(const Exponents& e) {
    int d = 0;
    for (int x : e) d += x;
    return d;
}

bool divides(const Exponents& a, const Exponents& b) {
    for (std::size_t i = 0; i < a.size(); ++i)
        if (a[i] > b[i]) return false;
    return true;
}

Exponents exp_add(const Exponents& a, const Exponents& b) {
    Exponents r(a);
    for (std::size_t i = 0; i < a.size(); ++i) r[i] += b[i];
    return r;
}

Exponents exp_sub(const Exponents& a, const Exponents& b) {
    Exponents r(a);
    for (std::size_t i = 0; i < a.size(); ++i) r[i] -= b[i];
    return r;
}

Exponents exp_lcm(const Exponents& a, const Exponents& b) {
    Exponents r(a);
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = std::max(a[i], b[i]);
    return r;
}

bool grevlex_greater(const Exponents& a, const Exponents& b) {
    const int da = total_degree(a), db = total_degree(b);
    if (da != db) return da > db;
    for (std::size_t i = a.size(); i-- > 0;) {
        if (a[i] != b[i]) return a[i] < b[i];
    }
    return false;
}

// ---------------------------------------------------------------------------
// Poly

void Poly::add_term(const Exponents& e, const Rational& c) {
    if (c == 0) return;
    auto [it, inserted] = terms_.try_emplace(e, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

Poly Poly::constant(RingPtr ring, Rational c) {
    Poly p(std::move(ring));
    if (c != 0) p.terms_.emplace(Exponents(p.ring_->nvars(), 0), std::move(c));
    return p;
}

Poly Poly::variable(const RingPtr& ring, int index) {
    if (index < 0 || index >= ring->nvars())
        throw error("variable index out of range");
    Exponents e(ring->nvars(), 0);
    e[index] = 1;
    return monomial(ring, std::move(e), 1);
}

Poly Poly::variable(const RingPtr& ring, std::string_view name) {
    const int idx = ring->index_of(name);
    if (idx < 0)
        throw error("unknown variable '" + std::string(name) + "' in ring " + ring->name);
    return variable(ring, idx);
}

Poly Poly::monomial(RingPtr ring, Exponents e, Rational c) {
    if (static_cast<int>(e.size()) != ring->nvars())
        throw error("exponent vector length mismatch");
    for (int x : e)
        if (x < 0) throw error("negative exponent");
    Poly p(std::move(ring));
    if (c != 0) p.terms_.emplace(std::move(e), std::move(c));
    return p;
}

const Exponents& Poly::leading_exponents() const {
    if (is_zero()) throw error("zero polynomial has no leading term");
    return terms_.begin()->first;
}

const Rational& Poly::leading_coeff() const {
    if (is_zero()) throw error("zero polynomial has no leading term");
    return terms_.begin()->second;
}

int Poly::degree() const {
    if (is_zero()) return kZeroDegree;
    return total_degree(terms_.begin()->first);
}

std::optional<int> Poly::homogeneous_degree() const {
    if (is_zero()) return kZeroDegree;
    const int d = total_degree(terms_.begin()->first);
    for (const auto& [e, c] : terms_)
        if (total_degree(e) != d) return std::nullopt;
    return d;
}

static void check_same_ring(const Poly& a, const Poly& b) {
    if (!same_ring(a.ring(), b.ring()))
        throw ring_mismatch("polynomials from different rings ('" + a.ring()->name +
                            "' vs '" + b.ring()->name + "')");
}

Poly Poly::operator-() const {
    Poly r(ring_);
    for (const auto& [e, c] : terms_) r.terms_.emplace(e, -c);
    return r;
}

Poly Poly::operator+(const Poly& o) const {
    check_same_ring(*this, o);
    Poly r(*this);
    for (const auto& [e, c] : o.terms_) r.add_term(e, c);
    return r;
}

Poly Poly::operator-(const Poly& o) const {
    check_same_ring(*this, o);
    Poly r(*this);
    for (const auto& [e, c] : o.terms_) r.add_term(e, -c);
    return r;
}

Poly Poly::operator*(const Poly& o) const {
    check_same_ring(*this, o);
    Poly r(ring_);
    for (const auto& [ea, ca] : terms_)
        for (const auto& [eb, cb] : o.terms_) r.add_term(exp_add(ea, eb), ca * cb);
    return r;
}

Poly Poly::operator*(const Rational& c) const {
    Poly r(ring_);
    if (c == 0) return r;
    for (const auto& [e, k] : terms_) r.terms_.emplace(e, k * c);
    return r;
}

Poly Poly::pow(int e) const {
    if (e < 0) throw error("negative power");
    Poly acc = Poly::constant(ring_, 1);
    Poly base = *this;
    while (e > 0) {
        if (e & 1) acc = acc * base;
        base = base * base;
        e >>= 1;
    }
    return acc;
}

bool Poly::operator==(const Poly& o) const {
    return same_ring(ring_, o.ring_) && terms_ == o.terms_;
}

bool Poly::divisible_by_var(int var_index) const {
    for (const auto& [e, c] : terms_)
        if (e[var_index] == 0) return false;
    return true;
}

Poly Poly::divide_by_var_power(int var_index, int k) const {
    Poly r(ring_);
    for (const auto& [e, c] : terms_) {
        if (e[var_index] < k) throw error("not divisible by variable power");
        Exponents q(e);
        q[var_index] -= k;
        r.terms_.emplace(std::move(q), c);
    }
    return r;
}

Poly Poly::monic() const {
    if (is_zero()) return *this;
    const Rational lc = leading_coeff();
    Poly r(ring_);
    for (const auto& [e, c] : terms_) r.terms_.emplace(e, c / lc);
    return r;
}

Rational Poly::evaluate(const std::vector<Rational>& point) const {
    if (static_cast<int>(point.size()) != ring_->nvars())
        throw error("evaluation point has wrong arity");
    Rational acc = 0;
    for (const auto& [e, c] : terms_) {
        Rational t = c;
        for (std::size_t i = 0; i < e.size(); ++i) {
            for (int k = 0; k < e[i]; ++k) t *= point[i];
        }
        acc += t;
    }
    return acc;
}

std::string Poly::str() const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [e, c] : terms_) {
        const bool neg = c < 0;
        const Rational mag = neg ? Rational(-c) : c;
        if (first) {
            if (neg) os << "-";
            first = false;
        } else {
            os << (neg ? " - " : " + ");
        }
        std::vector<std::string> factors;
        if (mag != 1 || total_degree(e) == 0) factors.push_back(rational_to_string(mag));
        for (std::size_t i = 0; i < e.size(); ++i) {
            if (e[i] == 0) continue;
            std::string f = ring_->vars[i];
            if (e[i] > 1) f += "^" + std::to_string(e[i]);
            factors.push_back(std::move(f));
        }
        for (std::size_t i = 0; i < factors.size(); ++i) {
            if (i) os << "*";
            os << factors[i];
        }
    }
    return os.str();
}

void PolyBuilder::add(const Poly& q) {
    for (const auto& [e, c] : q.terms()) p_.add_term(e, c);
}

void PolyBuilder::add_scaled(const Poly& q, const Rational& c, const Exponents& shift) {
    for (const auto& [e, k] : q.terms()) p_.add_term(exp_add(e, shift), k * c);
}

void PolyBuilder::scale(const Rational& c) {
    if (c == 1) return;
    if (c == 0) {
        p_.terms_.clear();
        return;
    }
    for (auto& [e, v] : p_.terms_) v *= c;
}

// ---------------------------------------------------------------------------
// Parsing

namespace {

struct Scanner {
    const std::string& text;
    std::size_t pos = 0;

    void skip_ws() {
        while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
    }
    bool eof() {
        skip_ws();
        return pos >= text.size();
    }
    char peek() {
        skip_ws();
        return pos < text.size() ? text[pos] : '\0';
    }
    bool accept(char c) {
        skip_ws();
        if (pos < text.size() && text[pos] == c) {
            ++pos;
            return true;
        }
        return false;
    }
    Integer number() {
        skip_ws();
        const std::size_t start = pos;
        while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
        if (pos == start) throw parse_error("expected a number", start);
        return Integer(text.substr(start, pos - start));
    }
    std::string identifier() {
        skip_ws();
        const std::size_t start = pos;
        auto head = [](char c) { return std::isalpha(static_cast<unsigned char>(c)) || c == '_'; };
        auto tail = [](char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_'; };
        if (pos < text.size() && head(text[pos])) {
            ++pos;
            while (pos < text.size() && tail(text[pos])) ++pos;
        }
        if (pos == start) throw parse_error("expected a variable or number", start);
        return text.substr(start, pos - start);
    }
};

} // namespace

Poly parse_poly(const std::string& text, const RingPtr& ring) {
    Scanner s{text};
    Poly result(ring);
    if (s.eof()) throw parse_error("empty input", 0);
    bool first = true;
    while (!s.eof()) {
        int sign = 1;
        if (s.accept('-')) sign = -1;
        else if (s.accept('+')) {
            // a leading unary '+' is harmless and accepted
        } else if (!first) {
            throw parse_error("expected '+' or '-' between terms", s.pos);
        }
        first = false;

        Rational coef(sign);
        Exponents expo(ring->nvars(), 0);
        bool want_factor = true;
        while (want_factor) {
            s.skip_ws();
            const std::size_t fpos = s.pos;
            const char c = s.peek();
            if (std::isdigit(static_cast<unsigned char>(c))) {
                Integer num = s.number();
                if (s.accept('/')) {
                    const std::size_t dpos = s.pos;
                    Integer den = s.number();
                    if (den == 0) throw parse_error("division by zero in coefficient", dpos);
                    coef *= Rational(num, den);
                } else {
                    coef *= Rational(num);
                }
            } else {
                const std::string name = s.identifier();
                const int idx = ring->index_of(name);
                if (idx < 0)
                    throw parse_error("unknown variable '" + name + "' in ring " + ring->name, fpos);
                int k = 1;
                if (s.accept('^')) {
                    const Integer e = s.number();
                    if (e < 0 || e > 1000) throw parse_error("exponent out of range", fpos);
                    k = static_cast<int>(e);
                }
                expo[idx] += k;
            }
            want_factor = s.accept('*');
        }
        result.add_term(expo, coef);
    }
    return result;
}

// ---------------------------------------------------------------------------

Poly substitute(const Poly& p, const std::map<std::string, Poly>& images,
                const RingPtr& target) {
    const auto& ring = p.ring();
    std::vector<Poly> var_image;
    var_image.reserve(ring->nvars());
    for (const auto& v : ring->vars) {
        auto it = images.find(v);
        if (it != images.end()) {
            if (!same_ring(it->second.ring(), target))
                throw ring_mismatch("substitution image for '" + v +
                                    "' is not in the target ring");
            var_image.push_back(it->second);
        } else {
            const int idx = target->index_of(v);
            if (idx < 0)
                throw error("no substitution image for variable '" + v + "'");
            var_image.push_back(Poly::variable(target, idx));
        }
    }
    PolyBuilder acc(target);
    for (const auto& [e, c] : p.terms()) {
        Poly t = Poly::constant(target, c);
        for (std::size_t i = 0; i < e.size(); ++i)
            if (e[i] > 0) t = t * var_image[i].pow(e[i]);
        acc.add(t);
    }
    return acc.take();
}

Poly partial_derivative(const Poly& p, int var_index) {
    if (var_index < 0 || var_index >= p.ring()->nvars())
        throw error("variable index out of range");
    Poly r(p.ring());
    PolyBuilder acc(p.ring());
    for (const auto& [e, c] : p.terms()) {
        if (e[var_index] == 0) continue;
        Exponents q(e);
        q[var_index] -= 1;
        acc.add(q, c * e[var_index]);
    }
    return acc.take();
}

Poly partial_derivative(const Poly& p, std::string_view var) {
    const int idx = p.ring()->index_of(var);
    if (idx < 0)
        throw error("unknown variable '" + std::string(var) + "' in ring " + p.ring()->name);
    return partial_derivative(p, idx);
}

static void enumerate_exponents(int nvars, int d, int i, Exponents& cur,
                                std::vector<Exponents>& out) {
    if (i == nvars - 1) {
        cur[i] = d;
        out.push_back(cur);
        cur[i] = 0;
        return;
    }
    for (int k = d; k >= 0; --k) {
        cur[i] = k;
        enumerate_exponents(nvars, d - k, i + 1, cur, out);
    }
    cur[i] = 0;
}

std::vector<Exponents> exponents_of_degree(int nvars, int d) {
    std::vector<Exponents> out;
    if (d < 0 || nvars <= 0) return out;
    Exponents cur(nvars, 0);
    enumerate_exponents(nvars, d, 0, cur, out);
    std::sort(out.begin(), out.end(), GrevlexDesc{});
    return out;
}

} // namespace pblab
