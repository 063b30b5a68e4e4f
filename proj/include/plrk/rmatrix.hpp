#ifndef PLRK_RMATRIX_HPP
#define PLRK_RMATRIX_HPP

#include "plrk/structures.hpp"

#include <array>
#include <map>

namespace plrk {

// Finite-dimensional Lie algebra over Q by structure constants.
struct LieAlgebraFD {
    size_t dim = 0;
    std::vector<std::vector<std::vector<Rational>>> bracket; // bracket[i][j][k]

    std::vector<Rational> bracket_of(const std::vector<Rational>& x, const std::vector<Rational>& y) const;
    Report verify() const; // antisymmetry + Jacobi on basis triples

    static LieAlgebraFD sl2(); // basis (h,e,f): [h,e]=2e, [h,f]=-2f, [e,f]=h
};

// r in g^g stored by its antisymmetric coefficient matrix, r = sum_{i<j} r_ij e_i^e_j.
struct RMatrix {
    LieAlgebraFD algebra;
    std::vector<std::vector<Rational>> coeffs; // full antisymmetric matrix

    static RMatrix make(LieAlgebraFD alg, const std::vector<std::tuple<size_t, size_t, Rational>>& entries);

    // The decomposition r = sum_k x_k ^ y_k. The default style takes
    // (x_k, y_k) = (e_i, r_ij e_j) over i<j; alternatives exist to test that
    // results are decomposition-independent.
    enum class Decomp { left_basis, right_basis, split_half };
    std::vector<std::pair<std::vector<Rational>, std::vector<Rational>>> decomposition(Decomp style = Decomp::left_basis) const;
};

// Trivector in /\^3 g, coefficients on strictly increasing index triples.
struct Wedge3 {
    size_t dim = 0;
    std::map<std::array<size_t, 3>, Rational> coeffs;

    void add_wedge(const std::vector<Rational>& u, const std::vector<Rational>& v, const std::vector<Rational>& w,
                   const Rational& scale);
    bool is_zero() const { return coeffs.empty(); }
    std::string str() const;
};

Wedge3 cybe_residual(const RMatrix& r, RMatrix::Decomp style = RMatrix::Decomp::left_basis);

// Poisson bracket on A given by its values on variable pairs; the full bracket
// is the biderivation extension.
struct PoissonData {
    RingPtr ring;
    std::vector<std::vector<Poly>> table; // antisymmetric, table[i][j] = {x_i, x_j}

    Poly bracket(const Poly& a, const Poly& b) const;
};

PoissonData induced_poisson(const RMatrix& r, const ActionData& action, RMatrix::Decomp style = RMatrix::Decomp::left_basis);

Poly jacobi_residual(const PoissonData& p, const Poly& a, const Poly& b, const Poly& c);

// {a,{b,c}} + {c,{a,b}} + {b,{c,a}} = 1/2 lambda([[r,r]])(a,b,c), exactly.
Report residual_identity_check(const RMatrix& r, const ActionData& action, const Poly& a, const Poly& b, const Poly& c);

// Kaehler differentials: the free module on d x_1 .. d x_n with d p = sum d_i p d x_i.
ModulePtr kaehler_module(const RingPtr& ring);
Element kaehler_d(const ModulePtr& omega1, const Poly& p);

// Pre-Lie product and anchor on Omega^1 induced by (r, lambda). Never throws on a
// CYBE failure; the returned structure simply fails verification then.
PreLieRinehartData omega1_prelie(const RMatrix& r, const ActionData& action,
                                 RMatrix::Decomp style = RMatrix::Decomp::left_basis);

// [a du, b dv] = a{u,b} dv + b{a,v} du + ab d{u,v} (the Lie bracket of 1-forms).
Element bracket_one_forms(const PoissonData& p, const ModulePtr& omega1, const Poly& a, const Poly& u, const Poly& b,
                          const Poly& v);

} // namespace plrk

#endif
