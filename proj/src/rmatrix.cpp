#include "plrk/rmatrix.hpp"

#include <sstream>

namespace plrk {

std::vector<Rational> LieAlgebraFD::bracket_of(const std::vector<Rational>& x, const std::vector<Rational>& y) const {
    std::vector<Rational> r(dim, Rational(0));
    for (size_t i = 0; i < dim; ++i) {
        if (x[i].is_zero()) continue;
        for (size_t j = 0; j < dim; ++j) {
            if (y[j].is_zero()) continue;
            for (size_t k = 0; k < dim; ++k) r[k] += x[i] * y[j] * bracket[i][j][k];
        }
    }
    return r;
}

Report LieAlgebraFD::verify() const {
    Report rep;
    bool shape = bracket.size() == dim;
    for (const auto& row : bracket) {
        if (row.size() != dim) shape = false;
        for (const auto& v : row)
            if (v.size() != dim) shape = false;
    }
    rep.add("lie_fd.shape", shape);
    if (!shape) return rep;

    auto zero = [&](const std::vector<Rational>& v) {
        for (const auto& c : v)
            if (!c.is_zero()) return false;
        return true;
    };
    auto sub = [&](std::vector<Rational> a, const std::vector<Rational>& b) {
        for (size_t i = 0; i < a.size(); ++i) a[i] -= b[i];
        return a;
    };
    auto basis = [&](size_t i) {
        std::vector<Rational> v(dim, Rational(0));
        v[i] = Rational(1);
        return v;
    };

    bool antisym = true;
    for (size_t i = 0; i < dim && antisym; ++i)
        for (size_t j = i; j < dim && antisym; ++j) {
            auto s = bracket[i][j];
            for (size_t k = 0; k < dim; ++k) s[k] += bracket[j][i][k];
            if (i == j) s = bracket[i][i];
            if (!zero(s)) antisym = false;
        }
    rep.add("lie_fd.antisymmetry", antisym);

    bool jac = true;
    std::string w;
    for (size_t i = 0; i < dim && jac; ++i)
        for (size_t j = i + 1; j < dim && jac; ++j)
            for (size_t k = j + 1; k < dim && jac; ++k) {
                auto s = bracket_of(bracket_of(basis(i), basis(j)), basis(k));
                s = sub(s, bracket_of(basis(i), bracket_of(basis(j), basis(k))));
                for (size_t t = 0; t < dim; ++t) s[t] += bracket_of(basis(j), bracket_of(basis(i), basis(k)))[t];
                if (!zero(s)) {
                    jac = false;
                    w = "triple (" + std::to_string(i) + "," + std::to_string(j) + "," + std::to_string(k) + ")";
                }
            }
    rep.add("lie_fd.jacobi", jac, w);
    return rep;
}

LieAlgebraFD LieAlgebraFD::sl2() {
    LieAlgebraFD g;
    g.dim = 3;
    g.bracket.assign(3, std::vector<std::vector<Rational>>(3, std::vector<Rational>(3, Rational(0))));
    // basis (h,e,f) = (0,1,2)
    g.bracket[0][1][1] = Rational(2);   // [h,e]=2e
    g.bracket[1][0][1] = Rational(-2);
    g.bracket[0][2][2] = Rational(-2);  // [h,f]=-2f
    g.bracket[2][0][2] = Rational(2);
    g.bracket[1][2][0] = Rational(1);   // [e,f]=h
    g.bracket[2][1][0] = Rational(-1);
    return g;
}

RMatrix RMatrix::make(LieAlgebraFD alg, const std::vector<std::tuple<size_t, size_t, Rational>>& entries) {
    RMatrix r;
    r.algebra = std::move(alg);
    r.coeffs.assign(r.algebra.dim, std::vector<Rational>(r.algebra.dim, Rational(0)));
    for (const auto& [i, j, c] : entries) {
        if (i >= r.algebra.dim || j >= r.algebra.dim || i == j) throw error("RMatrix: bad entry index");
        r.coeffs[i][j] += c;
        r.coeffs[j][i] -= c;
    }
    return r;
}

std::vector<std::pair<std::vector<Rational>, std::vector<Rational>>> RMatrix::decomposition(Decomp style) const {
    std::vector<std::pair<std::vector<Rational>, std::vector<Rational>>> out;
    size_t n = algebra.dim;
    auto basis = [&](size_t i, const Rational& c) {
        std::vector<Rational> v(n, Rational(0));
        v[i] = c;
        return v;
    };
    for (size_t i = 0; i < n; ++i)
        for (size_t j = i + 1; j < n; ++j) {
            const Rational& c = coeffs[i][j];
            if (c.is_zero()) continue;
            switch (style) {
                case Decomp::left_basis: out.emplace_back(basis(i, Rational(1)), basis(j, c)); break;
                case Decomp::right_basis: out.emplace_back(basis(i, c), basis(j, Rational(1))); break;
                case Decomp::split_half:
                    // e_i^e_j = 1/2 e_i^e_j + 1/2 (-e_j)^(-e_i) written with two summands
                    out.emplace_back(basis(i, c * Rational(1, 2)), basis(j, Rational(1)));
                    out.emplace_back(basis(j, -c * Rational(1, 2)), basis(i, Rational(1)));
                    break;
            }
        }
    return out;
}

void Wedge3::add_wedge(const std::vector<Rational>& u, const std::vector<Rational>& v, const std::vector<Rational>& w,
                       const Rational& scale) {
    for (size_t a = 0; a < dim; ++a) {
        if (u[a].is_zero()) continue;
        for (size_t b = 0; b < dim; ++b) {
            if (v[b].is_zero() || b == a) continue;
            for (size_t c = 0; c < dim; ++c) {
                if (w[c].is_zero() || c == a || c == b) continue;
                std::array<size_t, 3> idx{a, b, c};
                // sort with sign
                int sign = 1;
                if (idx[0] > idx[1]) { std::swap(idx[0], idx[1]); sign = -sign; }
                if (idx[1] > idx[2]) { std::swap(idx[1], idx[2]); sign = -sign; }
                if (idx[0] > idx[1]) { std::swap(idx[0], idx[1]); sign = -sign; }
                Rational term = u[a] * v[b] * w[c] * scale;
                if (sign < 0) term = -term;
                auto it = coeffs.find(idx);
                if (it == coeffs.end()) {
                    if (!term.is_zero()) coeffs.emplace(idx, term);
                } else {
                    it->second += term;
                    if (it->second.is_zero()) coeffs.erase(it);
                }
            }
        }
    }
}

std::string Wedge3::str() const {
    if (coeffs.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [idx, c] : coeffs) {
        if (!first) os << " + ";
        first = false;
        os << c.str() << "*e" << idx[0] << "^e" << idx[1] << "^e" << idx[2];
    }
    return os.str();
}

Wedge3 cybe_residual(const RMatrix& r, RMatrix::Decomp style) {
    Wedge3 w;
    w.dim = r.algebra.dim;
    auto pairs = r.decomposition(style);
    for (const auto& [xi, yi] : pairs)
        for (const auto& [xj, yj] : pairs) {
            w.add_wedge(r.algebra.bracket_of(xi, xj), yi, yj, Rational(1));
            w.add_wedge(xi, r.algebra.bracket_of(yi, xj), yj, Rational(2));
            w.add_wedge(xi, xj, r.algebra.bracket_of(yi, yj), Rational(1));
        }
    return w;
}

Poly PoissonData::bracket(const Poly& a, const Poly& b) const {
    require_same_ring(ring, a.ring(), "Poisson bracket");
    require_same_ring(ring, b.ring(), "Poisson bracket");
    Poly r = Poly::zero(ring);
    size_t n = ring->nvars();
    for (size_t i = 0; i < n; ++i)
        for (size_t j = i + 1; j < n; ++j) {
            if (table[i][j].is_zero()) continue;
            r += table[i][j] * (a.derivative(i) * b.derivative(j) - b.derivative(i) * a.derivative(j));
        }
    return r;
}

PoissonData induced_poisson(const RMatrix& r, const ActionData& action, RMatrix::Decomp style) {
    Report chk = action.check();
    if (!chk.ok()) throw error("induced_poisson: action check failed");
    if (action.dim != r.algebra.dim) throw error("induced_poisson: dimension mismatch");
    const RingPtr& ring = action.images.at(0).ring;
    PoissonData p;
    p.ring = ring;
    size_t n = ring->nvars();
    p.table.assign(n, std::vector<Poly>(n, Poly::zero(ring)));
    auto pairs = r.decomposition(style);
    for (size_t i = 0; i < n; ++i)
        for (size_t j = i + 1; j < n; ++j) {
            Poly xi = Poly::variable(ring, i);
            Poly xj = Poly::variable(ring, j);
            Poly v = Poly::zero(ring);
            for (const auto& [x, y] : pairs) {
                VectorField Dx = action.lambda(x);
                VectorField Dy = action.lambda(y);
                v += Dx.apply(xi) * Dy.apply(xj) - Dx.apply(xj) * Dy.apply(xi);
            }
            p.table[i][j] = v;
            p.table[j][i] = -v;
        }
    return p;
}

Poly jacobi_residual(const PoissonData& p, const Poly& a, const Poly& b, const Poly& c) {
    return p.bracket(a, p.bracket(b, c)) + p.bracket(c, p.bracket(a, b)) + p.bracket(b, p.bracket(c, a));
}

Report residual_identity_check(const RMatrix& r, const ActionData& action, const Poly& a, const Poly& b, const Poly& c) {
    Report rep;
    PoissonData p = induced_poisson(r, action);
    Poly lhs = jacobi_residual(p, a, b, c);

    Wedge3 w = cybe_residual(r);
    const RingPtr& ring = p.ring;
    Poly rhs = Poly::zero(ring);
    const Poly* args[3] = {&a, &b, &c};
    for (const auto& [idx, coef] : w.coeffs) {
        // det of lambda(e_i),lambda(e_j),lambda(e_k) applied to (a,b,c)
        Poly m[3][3];
        for (int row = 0; row < 3; ++row) {
            const VectorField& D = action.images[idx[row]];
            for (int col = 0; col < 3; ++col) m[row][col] = D.apply(*args[col]);
        }
        Poly det = m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1]) - m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0]) +
                   m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0]);
        rhs += det.scaled(coef);
    }
    rhs = rhs.scaled(Rational(1, 2));
    bool same = lhs == rhs;
    rep.add("jacobi_residual_identity", same,
            same ? "" : "lhs - rhs = " + (lhs - rhs).str());
    return rep;
}

ModulePtr kaehler_module(const RingPtr& ring) {
    std::vector<std::string> names;
    for (const auto& v : ring->vars) names.push_back("d" + v);
    return make_module(ring, std::move(names));
}

Element kaehler_d(const ModulePtr& omega1, const Poly& p) {
    require_same_ring(omega1->ring, p.ring(), "kaehler_d");
    Element e(omega1);
    for (size_t i = 0; i < omega1->rank(); ++i) e.coeffs[i] = p.derivative(i);
    return e;
}

PreLieRinehartData omega1_prelie(const RMatrix& r, const ActionData& action, RMatrix::Decomp style) {
    PoissonData p = induced_poisson(r, action, style);
    const RingPtr& ring = p.ring;
    ModulePtr omega1 = kaehler_module(ring);
    size_t n = ring->nvars();
    PreLieRinehartData d = PreLieRinehartData::zero(omega1);
    auto pairs = r.decomposition(style);
    for (size_t i = 0; i < n; ++i) {
        // anchor: pi#(d x_i) = sum_j {x_i, x_j} d/dx_j
        VectorField v(ring);
        for (size_t j = 0; j < n; ++j) v.components[j] = p.table[i][j];
        d.anchor[i] = v;
        for (size_t j = 0; j < n; ++j) {
            // d x_i . d x_j = sum_k lambda(x_k)(x_i) d(lambda(y_k)(x_j)) - lambda(y_k)(x_i) d(lambda(x_k)(x_j))
            Element e(omega1);
            Poly xi = Poly::variable(ring, i);
            Poly xj = Poly::variable(ring, j);
            for (const auto& [x, y] : pairs) {
                VectorField Dx = action.lambda(x);
                VectorField Dy = action.lambda(y);
                e += kaehler_d(omega1, Dy.apply(xj)).scaled(Dx.apply(xi));
                e += (-kaehler_d(omega1, Dx.apply(xj))).scaled(Dy.apply(xi));
            }
            d.product[i][j] = e;
        }
    }
    return d;
}

Element bracket_one_forms(const PoissonData& p, const ModulePtr& omega1, const Poly& a, const Poly& u, const Poly& b,
                          const Poly& v) {
    Element r = kaehler_d(omega1, v).scaled(a * p.bracket(u, b));
    r += kaehler_d(omega1, u).scaled(b * p.bracket(a, v));
    r += kaehler_d(omega1, p.bracket(u, v)).scaled(a * b);
    return r;
}

} // namespace plrk
