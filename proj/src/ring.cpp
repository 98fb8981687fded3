#include "pblab/ring.hpp"

#include <set>

namespace pblab {

int VarRing::index_of(std::string_view v) const {
    for (std::size_t i = 0; i < vars.size(); ++i)
        if (vars[i] == v) return static_cast<int>(i);
    return -1;
}

RingPtr make_ring(std::string name, std::vector<std::string> vars) {
    std::set<std::string> seen;
    for (const auto& v : vars) {
        if (v.empty()) throw error("ring '" + name + "': empty variable name");
        if (!seen.insert(v).second)
            throw error("ring '" + name + "': duplicate variable '" + v + "'");
    }
    auto r = std::make_shared<VarRing>();
    r->name = std::move(name);
    r->vars = std::move(vars);
    return r;
}

bool same_ring(const RingPtr& a, const RingPtr& b) {
    if (a == b) return true;
    if (!a || !b) return false;
    return a->vars == b->vars;
}

RingPtr plane_ring() {
    static const RingPtr r = make_ring("P2", {"X0", "X1", "X2"});
    return r;
}

RingPtr p4_ring() {
    static const RingPtr r = make_ring("P4", {"X0", "X1", "X2", "U", "W"});
    return r;
}

} // namespace pblab
