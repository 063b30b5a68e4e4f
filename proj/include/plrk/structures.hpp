#ifndef PLRK_STRUCTURES_HPP
#define PLRK_STRUCTURES_HPP

#include "plrk/module.hpp"
#include "plrk/report.hpp"

namespace plrk {

// Finite-dimensional pre-Lie algebra over Q, by structure constants:
// product[i][j][k] = coefficient of e_k in e_i . e_j.
struct PreLieAlgebraFD {
    size_t dim = 0;
    std::vector<std::vector<std::vector<Rational>>> product;

    std::vector<Rational> commutator(size_t i, size_t j) const;
    Report verify() const; // associator symmetry on basis triples
};

// A K-linear action of a finite-dimensional (pre-)Lie algebra on A by derivations.
struct ActionData {
    enum class Flavor { prelie, lie };
    Flavor flavor = Flavor::lie;
    size_t dim = 0;
    // prelie: product table; lie: bracket table (antisymmetric)
    std::vector<std::vector<std::vector<Rational>>> table;
    std::vector<VectorField> images; // lambda(e_i)

    std::vector<Rational> bracket(size_t i, size_t j) const;
    VectorField lambda(const std::vector<Rational>& coeffs) const;
    Report check() const; // lambda([x,y]) = [lambda(x),lambda(y)] on basis pairs
};

// Pre-Lie-Rinehart algebra presented on a free module: product table on the
// basis plus anchor values theta(e_i).
struct PreLieRinehartData {
    ModulePtr module;
    std::vector<std::vector<Element>> product; // product[i][j] = e_i . e_j
    std::vector<VectorField> anchor;           // theta(e_i)

    static PreLieRinehartData zero(ModulePtr m);
    const Element& product_of(size_t i, size_t j) const { return product[i][j]; }
    VectorField anchor_of(const Element& x) const; // A-linear extension
    Report well_formed() const;
};

// Lie-Rinehart algebra presented the same way, with an antisymmetric bracket table.
struct LieRinehartData {
    ModulePtr module;
    std::vector<std::vector<Element>> bracket;
    std::vector<VectorField> anchor;

    VectorField anchor_of(const Element& x) const;
};

// Bilinear-over-K extension of the product table obeying
// X.(aY) = a(X.Y) + theta(X)(a) Y and (aX).Y = a(X.Y).
Element extend_product(const PreLieRinehartData& alg, const Element& X, const Element& Y);

// Same for the bracket: [X,aY] = a[X,Y] + theta(X)(a) Y and antisymmetry.
Element extend_bracket(const LieRinehartData& alg, const Element& X, const Element& Y);

Element associator(const PreLieRinehartData& alg, const Element& X, const Element& Y, const Element& Z);

// Anchor law on basis pairs first, then associator symmetry on basis triples;
// basis-level checking suffices because the associator difference is
// A-trilinear once the anchor law holds.
Report verify_prelie_rinehart(const PreLieRinehartData& alg);

Report verify_lie_rinehart(const LieRinehartData& alg);

// bracket(i,j) = e_i.e_j - e_j.e_i with the same anchor.
LieRinehartData sub_adjacent(const PreLieRinehartData& alg, bool check = true);

// Constructors from commuting derivations, a single derivation, an action,
// a derivation of a pre-Lie A-algebra, and a tensor product.
PreLieRinehartData coordinate_algebra(const RingPtr& ring, const std::vector<VectorField>& fields,
                                      std::vector<std::string> basis_names = {});
PreLieRinehartData derivation_prelie(const RingPtr& ring, const VectorField& d);
PreLieRinehartData transformation_algebra(const ActionData& action, std::vector<std::string> basis_names = {});
LieRinehartData transformation_lie_algebra(const ActionData& action, std::vector<std::string> basis_names = {});
PreLieRinehartData derivation_extension(const PreLieRinehartData& alg, const DerivationPair& dp);
PreLieRinehartData tensor_product_algebra(const PreLieRinehartData& e1, const PreLieRinehartData& e2);

// phi(X.Y) = phi(X).phi(Y) and theta_F o phi = theta_E, checked on generators.
Report check_homomorphism(const PreLieRinehartData& src, const PreLieRinehartData& dst, const LinearMap& phi);

// Lift a polynomial (or a whole structure) along an inclusion of rings given
// by a variable index map.
Poly ring_embed(const Poly& p, const RingPtr& target, const std::vector<size_t>& var_map);

} // namespace plrk

#endif
