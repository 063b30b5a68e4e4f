#ifndef PLRK_QLINALG_HPP
#define PLRK_QLINALG_HPP

#include "plrk/rational.hpp"

#include <optional>
#include <vector>

namespace plrk {

using QMatrix = std::vector<std::vector<Rational>>;

// Exact rank by fraction-free (Bareiss) elimination on the denominator-cleared
// integer matrix.
size_t qrank(QMatrix m);

// One exact solution of A x = b (free variables set to 0), or nullopt when
// inconsistent. Gauss-Jordan over Q.
std::optional<std::vector<Rational>> qsolve(QMatrix a, std::vector<Rational> b);

} // namespace plrk

#endif
