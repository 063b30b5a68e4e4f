#ifndef PLRK_EXTENSIONS_HPP
#define PLRK_EXTENSIONS_HPP

#include "plrk/cohomology.hpp"

namespace plrk {

// An abelian extension presented in split coordinates: quotient E'' and
// anchor-free kernel E', a representation of E'' on the kernel module, and the
// 2-cocycle omega measuring the failure of the split to be a homomorphism.
struct ExtensionData {
    PreLieRinehartData quotient; // E''
    PreLieRinehartData kernel;   // E', anchor must vanish
    Representation rep;          // of E'' on kernel.module
    Cochain omega;               // prelie degree 2 valued in kernel.module

    Report well_formed() const;
};

struct SplitExtension {
    PreLieRinehartData total; // on E'' (+) E'
    std::vector<size_t> quotient_indices;
    std::vector<size_t> kernel_indices;
    LinearMap split; // canonical sigma: E'' -> total
};

// (X+u)*(Y+v) = X.Y + omega(X,Y) + rho(X)v + mu(Y)u + u.v, theta(X+u) = theta''(X)
SplitExtension build_extension(const ExtensionData& x);

// eqs. (extension1)-(extension5) itemized on basis tuples
Report check_extension_conditions(const ExtensionData& x);

// Recover (quotient, kernel, rep, omega) from a total structure, the kernel
// coordinate set, and an A-linear split sigma of the projection.
ExtensionData extract_from_split(const PreLieRinehartData& total, const std::vector<size_t>& kernel_indices,
                                 const LinearMap& sigma);

// Field case: tau realizing the equivalence diagram iff omega1-omega2 is a
// coboundary. Requires equal quotient/kernel/rep data and an abelian kernel.
std::optional<LinearMap> equivalence_decide_field(const ExtensionData& x1, const ExtensionData& x2);

} // namespace plrk

#endif
