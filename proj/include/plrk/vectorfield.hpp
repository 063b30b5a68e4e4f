#ifndef PLRK_VECTORFIELD_HPP
#define PLRK_VECTORFIELD_HPP

#include "plrk/poly.hpp"

namespace plrk {

// A derivation of A, stored as sum_i p_i d/dx_i.
struct VectorField {
    RingPtr ring;
    std::vector<Poly> components; // one per ring variable

    VectorField() = default;
    explicit VectorField(RingPtr r);
    VectorField(RingPtr r, std::vector<Poly> comps);

    static VectorField zero(RingPtr r) { return VectorField(std::move(r)); }
    static VectorField partial(RingPtr r, size_t i);

    Poly apply(const Poly& p) const;

    VectorField operator+(const VectorField& o) const;
    VectorField operator-(const VectorField& o) const;
    VectorField operator-() const;
    VectorField scaled(const Poly& a) const;
    VectorField scaled(const Rational& c) const;
    bool operator==(const VectorField& o) const;
    bool is_zero() const;

    std::string str() const;
};

VectorField vf_commutator(const VectorField& a, const VectorField& b);

} // namespace plrk

#endif
