#pragma once

#include "pblab/rational.hpp"
#include "pblab/ring.hpp"

#include <limits>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace pblab {

class parse_error : public error {
public:
    parse_error(const std::string& what, std::size_t pos)
        : error(what + " (at position " + std::to_string(pos) + ")"), position(pos) {}
    std::size_t position;
};

/// Dense exponent vector, one entry per ring variable.
using Exponents = std::vector<int>;

int total_degree(const Exponents& e);
bool divides(const Exponents& a, const Exponents& b); // a | b
Exponents exp_add(const Exponents& a, const Exponents& b);
Exponents exp_sub(const Exponents& a, const Exponents& b); // requires a >= b
Exponents exp_lcm(const Exponents& a, const Exponents& b);

/// Graded reverse lexicographic comparison: higher total degree wins; on
/// ties the monomial whose last nonzero entry of a-b is negative is larger.
bool grevlex_greater(const Exponents& a, const Exponents& b);

struct GrevlexDesc {
    bool operator()(const Exponents& a, const Exponents& b) const {
        return grevlex_greater(a, b);
    }
};

/// Degree sentinel reported for the zero polynomial.
inline constexpr int kZeroDegree = std::numeric_limits<int>::min();

/// Sparse multivariate polynomial with exact rational coefficients over a
/// fixed ring. Stored coefficients are never zero; terms iterate in
/// descending grevlex order, so begin() is the leading term. Immutable in
/// spirit: all operations return new values.
class Poly {
public:
    using TermMap = std::map<Exponents, Rational, GrevlexDesc>;

    explicit Poly(RingPtr ring) : ring_(std::move(ring)) {}

    static Poly zero(RingPtr ring) { return Poly(std::move(ring)); }
    static Poly constant(RingPtr ring, Rational c);
    static Poly variable(const RingPtr& ring, int index);
    static Poly variable(const RingPtr& ring, std::string_view name);
    static Poly monomial(RingPtr ring, Exponents e, Rational c);

    const RingPtr& ring() const { return ring_; }
    const TermMap& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    std::size_t term_count() const { return terms_.size(); }

    const Exponents& leading_exponents() const;
    const Rational& leading_coeff() const;

    /// Total degree; kZeroDegree for the zero polynomial.
    int degree() const;

    /// Degree d if every term has total degree d; nullopt if mixed.
    /// The zero polynomial reports kZeroDegree.
    std::optional<int> homogeneous_degree() const;

    Poly operator-() const;
    Poly operator+(const Poly& o) const;
    Poly operator-(const Poly& o) const;
    Poly operator*(const Poly& o) const;
    Poly operator*(const Rational& c) const;
    Poly pow(int e) const;

    bool operator==(const Poly& o) const;
    bool operator!=(const Poly& o) const { return !(*this == o); }

    /// True when every term is divisible by the variable.
    bool divisible_by_var(int var_index) const;
    /// Divides out var^k exactly; requires divisibility.
    Poly divide_by_var_power(int var_index, int k) const;

    /// Leading coefficient scaled to 1. Zero stays zero.
    Poly monic() const;

    Rational evaluate(const std::vector<Rational>& point) const;

    /// Canonical text form; parse_poly(str()) round-trips.
    std::string str() const;

private:
    RingPtr ring_;
    TermMap terms_;

    void add_term(const Exponents& e, const Rational& c);
    friend Poly parse_poly(const std::string&, const RingPtr&);
    friend class PolyBuilder;
};

/// Mutable accumulation helper for hot loops (division, multiplication).
class PolyBuilder {
public:
    explicit PolyBuilder(RingPtr ring) : p_(std::move(ring)) {}
    void add(const Exponents& e, const Rational& c) { p_.add_term(e, c); }
    void add(const Poly& q);
    void add_scaled(const Poly& q, const Rational& c, const Exponents& shift);
    /// Multiplies every coefficient in place.
    void scale(const Rational& c);
    Poly take() { return std::move(p_); }
    const Poly& peek() const { return p_; }

private:
    Poly p_;
};

/// Grammar: sum of signed terms; a term is a '*'-separated product of an
/// optional rational literal `p/q` (or integer) and `Var^k` factors
/// (exponent defaults to 1). Whitespace is insignificant. Variables must
/// match the ring's declared names exactly.
Poly parse_poly(const std::string& text, const RingPtr& ring);

/// Composes p with the given variable images. Variables absent from the map
/// are sent to the variable of the same name in the target ring; it is an
/// error if neither an image nor a same-named target variable exists.
Poly substitute(const Poly& p, const std::map<std::string, Poly>& images,
                const RingPtr& target);

Poly partial_derivative(const Poly& p, std::string_view var);
Poly partial_derivative(const Poly& p, int var_index);

/// All exponent vectors of total degree d over nvars variables, in
/// descending grevlex order.
std::vector<Exponents> exponents_of_degree(int nvars, int d);

} // namespace pblab
