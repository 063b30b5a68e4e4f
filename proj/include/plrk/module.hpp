#ifndef PLRK_MODULE_HPP
#define PLRK_MODULE_HPP

#include "plrk/vectorfield.hpp"

namespace plrk {

// A free A-module with a named basis.
struct FreeModule {
    RingPtr ring;
    std::vector<std::string> basis;

    size_t rank() const { return basis.size(); }
    bool operator==(const FreeModule& o) const { return same_ring(ring, o.ring) && basis == o.basis; }
};

using ModulePtr = std::shared_ptr<const FreeModule>;

ModulePtr make_module(RingPtr ring, std::vector<std::string> basis);
inline bool same_module(const ModulePtr& a, const ModulePtr& b) { return a == b || *a == *b; }
void require_same_module(const ModulePtr& a, const ModulePtr& b, const char* where);

struct Element {
    ModulePtr module;
    std::vector<Poly> coeffs;

    Element() = default;
    explicit Element(ModulePtr m);
    Element(ModulePtr m, std::vector<Poly> c);

    static Element zero(ModulePtr m) { return Element(std::move(m)); }
    static Element basis(ModulePtr m, size_t i);

    Element operator+(const Element& o) const;
    Element operator-(const Element& o) const;
    Element operator-() const;
    Element& operator+=(const Element& o);
    Element scaled(const Poly& a) const;
    Element scaled(const Rational& c) const;
    bool operator==(const Element& o) const;
    bool is_zero() const;
    std::string str() const;
};

// An A-linear map between free modules; column j is the image of domain basis j.
struct LinearMap {
    ModulePtr domain, codomain;
    std::vector<std::vector<Poly>> m; // m[row in codomain][col in domain]

    LinearMap() = default;
    LinearMap(ModulePtr dom, ModulePtr cod); // zero map
    static LinearMap identity(ModulePtr mod);
    static LinearMap from_columns(ModulePtr dom, ModulePtr cod, const std::vector<Element>& cols);

    Element apply(const Element& u) const;
    Element column(size_t j) const;
    LinearMap compose(const LinearMap& inner) const; // this o inner
    LinearMap operator+(const LinearMap& o) const;
    LinearMap operator-(const LinearMap& o) const;
    LinearMap scaled(const Poly& a) const;
    bool operator==(const LinearMap& o) const;
    bool is_zero() const;
};

// A derivation of a module: K-linear D with symbol sigma in Der(A),
// acting by D(a u) = a D(u) + sigma(a) u.
struct DerivationPair {
    LinearMap linear; // domain == codomain; values of D on the basis
    VectorField symbol;

    DerivationPair() = default;
    DerivationPair(LinearMap lin, VectorField sym);
    static DerivationPair zero(const ModulePtr& m);

    const ModulePtr& module() const { return linear.domain; }
    Element apply(const Element& u) const;

    DerivationPair operator+(const DerivationPair& o) const;
    DerivationPair operator-(const DerivationPair& o) const;
    DerivationPair scaled(const Poly& a) const; // (aD, a sigma)
    bool operator==(const DerivationPair& o) const;
    bool is_zero() const { return linear.is_zero() && symbol.is_zero(); }
};

// apply the pair to a scaled element: a.linear_part(u) + symbol(a).u
Element apply_derivation_pair(const DerivationPair& dp, const Poly& a, const Element& u);

// gauge commutator [D1,D2]
DerivationPair derivation_pair_commutator(const DerivationPair& a, const DerivationPair& b);

} // namespace plrk

#endif
