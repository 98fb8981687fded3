#pragma once

#include <memory>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace pblab {

class error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class ring_mismatch : public error {
public:
    using error::error;
};

/// A named, ordered list of variables. Polynomials carry a pointer to their
/// ring and every binary operation checks ring compatibility. The declared
/// variable order fixes the graded reverse lexicographic monomial order
/// used throughout.
struct VarRing {
    std::string name;
    std::vector<std::string> vars;

    int nvars() const { return static_cast<int>(vars.size()); }

    /// Index of a variable name, or -1 if absent.
    int index_of(std::string_view v) const;
};

using RingPtr = std::shared_ptr<const VarRing>;

/// Validates uniqueness of variable names.
RingPtr make_ring(std::string name, std::vector<std::string> vars);

/// Rings are compared by content (name is a label only).
bool same_ring(const RingPtr& a, const RingPtr& b);

/// The coordinate ring of the plane, vars X0, X1, X2.
RingPtr plane_ring();

/// The ambient ring of the hypersurfaces, vars X0, X1, X2, U, W.
RingPtr p4_ring();

} // namespace pblab
