#ifndef PLRK_COHOMOLOGY_HPP
#define PLRK_COHOMOLOGY_HPP

#include "plrk/structures.hpp"

#include <map>
#include <optional>
#include <span>

namespace plrk {

// Representation (rho, mu) of a pre-Lie-Rinehart algebra on an A-module:
// rho(e_i) are derivation pairs with symbol theta(e_i), mu(e_i) are A-linear.
struct Representation {
    PreLieRinehartData algebra;
    ModulePtr target;
    std::vector<DerivationPair> rho;
    std::vector<LinearMap> mu;

    DerivationPair rho_at(const Element& x) const; // A-linear table extension
    LinearMap mu_at(const Element& x) const;
};

// Representation of a Lie-Rinehart algebra (no mu).
struct LieRepresentation {
    LieRinehartData algebra;
    ModulePtr target;
    std::vector<DerivationPair> rho;

    DerivationPair rho_at(const Element& x) const;
};

Report check_representation(const Representation& rep);
Report check_lie_representation(const LieRepresentation& rep);

// (rho, mu) = (L, R) on the algebra's own module.
Representation lr_representation(const PreLieRinehartData& alg);
// rho = anchor action on A (rank-1 module), mu = 0.
Representation anchor_representation(const PreLieRinehartData& alg);
// the trivial representation on a module (rho = 0 pairs, mu = 0)
Representation zero_representation(const PreLieRinehartData& alg, ModulePtr target);

enum class CochainKind { prelie, lie };

// A-multilinear map stored by its values on ordered basis tuples.
//   prelie degree n: Hom_A(/\^{n-1} E (x) E, target); keys (i1<...<i_{n-1}, j).
//   lie degree n:    Hom_A(/\^n E, target); keys strictly increasing.
struct Cochain {
    CochainKind kind = CochainKind::prelie;
    int degree = 1;
    ModulePtr source;
    ModulePtr target;
    std::map<std::vector<int>, Element> values;

    static Cochain zero(CochainKind kind, int degree, ModulePtr source, ModulePtr target);

    // value on an arbitrary basis index tuple (sorts wedge slots with sign)
    Element value(std::vector<int> tuple) const;
    // A-multilinear evaluation on arbitrary elements
    Element eval(std::span<const Element> args) const;

    void set(std::vector<int> tuple, Element v); // canonical key required
    bool is_zero() const;
    Cochain operator+(const Cochain& o) const;
    Cochain operator-(const Cochain& o) const;
    Cochain scaled(const Rational& c) const;
    bool operator==(const Cochain& o) const;

    // all canonical key tuples for given shape
    static std::vector<std::vector<int>> keys(CochainKind kind, int degree, size_t rank);
};

// delta phi per the four-sum display (prelie complex, degree n -> n+1).
Cochain prelie_coboundary(const Representation& rep, const Cochain& phi);
// the same display evaluated at arbitrary elements (for property tests)
Element prelie_coboundary_eval(const Representation& rep, const Cochain& phi, std::span<const Element> args);

// Chevalley-Eilenberg-Rinehart coboundary (lie complex, degree k -> k+1);
// degree-0 cochains are elements of the target, d u (X) = rho(X) u.
Cochain lie_coboundary(const LieRepresentation& rep, const Cochain& w);
Cochain lie_coboundary_deg0(const LieRepresentation& rep, const Element& u);
Element lie_coboundary_eval(const LieRepresentation& rep, const Cochain& w, std::span<const Element> args);

// varrho(X)(psi)(Y) = rho(X) psi(Y) + mu(Y) psi(X) - psi(X.Y) on C^1 = Hom_A(E, target).
LieRepresentation induced_rep_on_C1(const Representation& rep);

// index of psi_{j,k} (e_j -> eps_k) in the C^1 module basis
size_t c1_index(const Representation& rep, size_t j, size_t k);

// currying isomorphism H(psi)(X_1..X_n, X_{n+1}) = psi(X_1..X_n)(X_{n+1}) and inverse
Cochain complex_iso_H(const Representation& rep, const Cochain& psi);
Cochain complex_iso_H_inverse(const Representation& rep, const Cochain& phi);

Report cocycle_check(const Representation& rep, const Cochain& c);
Report cocycle_check(const LieRepresentation& rep, const Cochain& c);

// Exact solve of delta b = c over the field case (A = Q, no variables).
std::optional<Cochain> coboundary_solve_field(const Representation& rep, const Cochain& c);

// dim H^n = nullity(delta_n) - rank(delta_{n-1}) for n = 1..n_max, field case.
std::vector<size_t> cohomology_dims_field(const Representation& rep, int n_max);

// flatten/unflatten cochains over Q for the linear algebra
std::vector<Rational> cochain_to_qvec(const Cochain& c);
Cochain qvec_to_cochain(CochainKind kind, int degree, const ModulePtr& source, const ModulePtr& target,
                        const std::vector<Rational>& v);

} // namespace plrk

#endif
