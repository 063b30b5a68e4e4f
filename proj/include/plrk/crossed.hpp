#ifndef PLRK_CROSSED_HPP
#define PLRK_CROSSED_HPP

#include "plrk/cohomology.hpp"

namespace plrk {

// Crossed module for pre-Lie-Rinehart algebras: boundary d: top -> base with a
// representation (rho,mu) of the base on top and an A-bilinear pre-Lie product
// on top.
struct CrossedModuleData {
    PreLieRinehartData base; // E
    ModulePtr top;           // the module underlying the pre-Lie K-algebra
    std::vector<std::vector<Element>> top_product;
    LinearMap boundary; // top -> base
    Representation rep; // of base on top

    Element top_mul(const Element& u, const Element& v) const; // A-bilinear extension
};

Report verify_crossed_module(const CrossedModuleData& cm);

// The inclusion of an ideal spanned by a coordinate subset with zero anchor,
// with (rho, mu) = (L, R) restricted.
CrossedModuleData crossed_from_ideal(const PreLieRinehartData& total, const std::vector<size_t>& ideal_indices);

// (X+u)*(Y+v) = X.Y + rho(X)v + mu(Y)u + u.v on base (+) top
PreLieRinehartData total_algebra(const CrossedModuleData& cm);

struct LieCrossedModuleData {
    LieRinehartData base;
    ModulePtr top;
    std::vector<std::vector<Element>> top_bracket;
    LinearMap boundary;
    LieRepresentation rep; // rho - mu

    Element top_br(const Element& u, const Element& v) const;
};

// (E^c, top^c, boundary, rho-mu) plus the four Lie-Rinehart crossed-module checks
std::pair<LieCrossedModuleData, Report> sub_adjacent_crossed(const CrossedModuleData& cm);

// A crossed extension 0 -> F' -> top -> base -> F -> 0 in coordinates:
// N = image of the boundary is spanned by the base coordinates in image_indices.
struct CrossedExtensionData {
    CrossedModuleData cm;
    PreLieRinehartData quotient; // F
    ModulePtr kernel_module;     // F'
    LinearMap iota;              // F' -> top, image = ker(boundary)
    LinearMap p;                 // base -> quotient
    LinearMap s;                 // quotient -> base, p o s = id
    std::vector<size_t> image_indices;
    LinearMap sigma; // N -> top (domain: free module on the image coordinates), boundary o sigma = id
};

Report check_crossed_extension(const CrossedExtensionData& xd);

// g(X,Y) = sigma(s(X).s(Y) - s(X.Y)), as a degree-2 table valued in top.
std::vector<std::vector<Element>> crossed_g(const CrossedExtensionData& xd, const LinearMap& s);

// the induced representation (rho_F, mu_F) of the quotient on F'
Representation induced_quotient_rep(const CrossedExtensionData& xd);

// The classification map: the 3-cocycle f in F'-coordinates. Checks that f is
// alternating in (X,Y), valued in ker(boundary), and closed.
Cochain three_cocycle_from_extension(const CrossedExtensionData& xd);
// same with an explicit section (for section-independence tests)
Cochain three_cocycle_with_section(const CrossedExtensionData& xd, const LinearMap& s);

// express a ker(boundary)-valued element in F'-coordinates via iota
Element kernel_coordinates(const CrossedExtensionData& xd, const Element& top_value);

} // namespace plrk

#endif
