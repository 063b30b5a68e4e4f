#include "plrk/vectorfield.hpp"

#include <sstream>

namespace plrk {

VectorField::VectorField(RingPtr r) : ring(std::move(r)) {
    components.assign(ring->nvars(), Poly::zero(ring));
}

VectorField::VectorField(RingPtr r, std::vector<Poly> comps) : ring(std::move(r)), components(std::move(comps)) {
    if (components.size() != ring->nvars()) throw error("VectorField: component count != variable count");
    for (const auto& c : components) require_same_ring(ring, c.ring(), "VectorField");
}

VectorField VectorField::partial(RingPtr r, size_t i) {
    VectorField v(std::move(r));
    if (i >= v.ring->nvars()) throw error("VectorField::partial: index out of range");
    v.components[i] = Poly::one(v.ring);
    return v;
}

Poly VectorField::apply(const Poly& p) const {
    require_same_ring(ring, p.ring(), "VectorField::apply");
    Poly r = Poly::zero(ring);
    for (size_t i = 0; i < components.size(); ++i) {
        if (components[i].is_zero()) continue;
        r += components[i] * p.derivative(i);
    }
    return r;
}

VectorField VectorField::operator+(const VectorField& o) const {
    require_same_ring(ring, o.ring, "VectorField add");
    VectorField r(ring);
    for (size_t i = 0; i < components.size(); ++i) r.components[i] = components[i] + o.components[i];
    return r;
}

VectorField VectorField::operator-(const VectorField& o) const {
    require_same_ring(ring, o.ring, "VectorField sub");
    VectorField r(ring);
    for (size_t i = 0; i < components.size(); ++i) r.components[i] = components[i] - o.components[i];
    return r;
}

VectorField VectorField::operator-() const {
    VectorField r(ring);
    for (size_t i = 0; i < components.size(); ++i) r.components[i] = -components[i];
    return r;
}

VectorField VectorField::scaled(const Poly& a) const {
    VectorField r(ring);
    for (size_t i = 0; i < components.size(); ++i) r.components[i] = components[i] * a;
    return r;
}

VectorField VectorField::scaled(const Rational& c) const {
    VectorField r(ring);
    for (size_t i = 0; i < components.size(); ++i) r.components[i] = components[i].scaled(c);
    return r;
}

bool VectorField::operator==(const VectorField& o) const {
    if (!same_ring(ring, o.ring)) return false;
    return components == o.components;
}

bool VectorField::is_zero() const {
    for (const auto& c : components)
        if (!c.is_zero()) return false;
    return true;
}

std::string VectorField::str() const {
    std::ostringstream os;
    bool first = true;
    for (size_t i = 0; i < components.size(); ++i) {
        if (components[i].is_zero()) continue;
        if (!first) os << " + ";
        first = false;
        os << "(" << components[i].str() << ")*d/d" << ring->vars[i];
    }
    if (first) return "0";
    return os.str();
}

VectorField vf_commutator(const VectorField& a, const VectorField& b) {
    require_same_ring(a.ring, b.ring, "vf_commutator");
    VectorField r(a.ring);
    // [a,b] = sum_i (a(b_i) - b(a_i)) d/dx_i
    for (size_t i = 0; i < r.components.size(); ++i) r.components[i] = a.apply(b.components[i]) - b.apply(a.components[i]);
    return r;
}

} // namespace plrk
