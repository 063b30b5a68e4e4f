#include "plrk/crossed.hpp"

#include "plrk/qlinalg.hpp"

#include <sstream>

namespace plrk {

namespace {

std::string tstr(std::initializer_list<size_t> idx) {
    std::ostringstream os;
    os << "(";
    bool first = true;
    for (size_t i : idx) {
        os << (first ? "" : ",") << i;
        first = false;
    }
    os << ")";
    return os.str();
}

// Row subset R with a constant, invertible square submatrix m[R][*], plus its
// inverse over Q. This keeps kernel-coordinate extraction exact without
// polynomial module membership (which would need Groebner machinery).
struct RowInverse {
    std::vector<size_t> rows;
    QMatrix inv; // cols x cols
};

std::optional<RowInverse> constant_row_inverse(const LinearMap& m) {
    size_t rows = m.codomain->rank(), cols = m.domain->rank();
    if (cols == 0) return RowInverse{{}, {}};
    // greedy: pick constant rows that increase the rank
    std::vector<size_t> chosen;
    QMatrix sub;
    for (size_t r = 0; r < rows && chosen.size() < cols; ++r) {
        bool constant = true;
        std::vector<Rational> qrow(cols);
        for (size_t c = 0; c < cols; ++c) {
            if (!m.m[r][c].is_constant()) {
                constant = false;
                break;
            }
            qrow[c] = m.m[r][c].constant_value();
        }
        if (!constant) continue;
        QMatrix trial = sub;
        trial.push_back(qrow);
        if (qrank(trial) == trial.size()) {
            sub = std::move(trial);
            chosen.push_back(r);
        }
    }
    if (chosen.size() != cols) return std::nullopt;
    // invert sub by solving sub * x = e_k per column
    QMatrix inv(cols, std::vector<Rational>(cols, Rational(0)));
    for (size_t k = 0; k < cols; ++k) {
        std::vector<Rational> e(cols, Rational(0));
        e[k] = Rational(1);
        auto x = qsolve(sub, e);
        if (!x) return std::nullopt;
        for (size_t i = 0; i < cols; ++i) inv[i][k] = (*x)[i];
    }
    return RowInverse{std::move(chosen), std::move(inv)};
}

} // namespace

Element CrossedModuleData::top_mul(const Element& u, const Element& v) const {
    require_same_module(u.module, top, "top_mul");
    require_same_module(v.module, top, "top_mul");
    Element r(top);
    for (size_t k = 0; k < top->rank(); ++k) {
        if (u.coeffs[k].is_zero()) continue;
        for (size_t l = 0; l < top->rank(); ++l) {
            if (v.coeffs[l].is_zero()) continue;
            r += top_product[k][l].scaled(u.coeffs[k] * v.coeffs[l]);
        }
    }
    return r;
}

Report verify_crossed_module(const CrossedModuleData& cm) {
    Report rep_;
    size_t nb = cm.base.module->rank();
    size_t nt = cm.top->rank();
    bool shape = cm.top_product.size() == nt && same_module(cm.boundary.domain, cm.top) &&
                 same_module(cm.boundary.codomain, cm.base.module) && same_module(cm.rep.algebra.module, cm.base.module) &&
                 same_module(cm.rep.target, cm.top);
    for (const auto& row : cm.top_product)
        if (row.size() != nt) shape = false;
    rep_.add("crossed.shape", shape);
    if (!shape) return rep_;

    // top product is pre-Lie (A-bilinear table, associator symmetry on basis triples)
    {
        bool ok = true;
        std::string w;
        for (size_t i = 0; i < nt && ok; ++i)
            for (size_t j = i + 1; j < nt && ok; ++j)
                for (size_t k = 0; k < nt && ok; ++k) {
                    Element ei = Element::basis(cm.top, i), ej = Element::basis(cm.top, j), ek = Element::basis(cm.top, k);
                    Element a1 = cm.top_mul(ei, cm.top_mul(ej, ek)) - cm.top_mul(cm.top_mul(ei, ej), ek);
                    Element a2 = cm.top_mul(ej, cm.top_mul(ei, ek)) - cm.top_mul(cm.top_mul(ej, ei), ek);
                    if (!(a1 == a2)) {
                        ok = false;
                        w = "triple " + tstr({i, j, k});
                    }
                }
        rep_.add("crossed.top_prelie", ok, w);
    }

    // boundary is an A-linear pre-Lie homomorphism
    {
        bool ok = true;
        std::string w;
        for (size_t k = 0; k < nt && ok; ++k)
            for (size_t l = 0; l < nt && ok; ++l) {
                Element lhs = cm.boundary.apply(cm.top_product[k][l]);
                Element rhs = extend_product(cm.base, cm.boundary.column(k), cm.boundary.column(l));
                if (!(lhs == rhs)) {
                    ok = false;
                    w = "pair " + tstr({k, l}) + ": difference " + (lhs - rhs).str();
                }
            }
        rep_.add("crossed.boundary_homomorphism", ok, w);
    }

    // (1) boundary(rho(X)u) = X . boundary(u), boundary(mu(X)u) = boundary(u) . X
    {
        bool ok = true;
        std::string w;
        for (size_t i = 0; i < nb && ok; ++i)
            for (size_t k = 0; k < nt && ok; ++k) {
                Element u = Element::basis(cm.top, k);
                Element ei = Element::basis(cm.base.module, i);
                Element d1 = cm.boundary.apply(cm.rep.rho[i].apply(u)) -
                             extend_product(cm.base, ei, cm.boundary.column(k));
                Element d2 = cm.boundary.apply(cm.rep.mu[i].apply(u)) -
                             extend_product(cm.base, cm.boundary.column(k), ei);
                if (!d1.is_zero() || !d2.is_zero()) {
                    ok = false;
                    w = "pair " + tstr({i, k});
                }
            }
        rep_.add("crossed.cond1_equivariance", ok, w);
    }

    // (2) rho(boundary u)v = u.v and mu(boundary v)u = u.v, checked independently
    {
        bool ok1 = true, ok2 = true;
        std::string w1, w2;
        for (size_t k = 0; k < nt; ++k)
            for (size_t l = 0; l < nt; ++l) {
                Element u = Element::basis(cm.top, k);
                Element v = Element::basis(cm.top, l);
                Element uv = cm.top_product[k][l];
                if (ok1) {
                    Element d = cm.rep.rho_at(cm.boundary.column(k)).apply(v) - uv;
                    if (!d.is_zero()) {
                        ok1 = false;
                        w1 = "pair " + tstr({k, l}) + ": difference " + d.str();
                    }
                }
                if (ok2) {
                    Element d = cm.rep.mu_at(cm.boundary.column(l)).apply(u) - uv;
                    if (!d.is_zero()) {
                        ok2 = false;
                        w2 = "pair " + tstr({k, l}) + ": difference " + d.str();
                    }
                }
            }
        rep_.add("crossed.cond2_peiffer_rho", ok1, w1);
        rep_.add("crossed.cond2_peiffer_mu", ok2, w2);
    }

    // (3) theta o boundary = 0
    {
        bool ok = true;
        std::string w;
        for (size_t k = 0; k < nt && ok; ++k) {
            VectorField v = cm.base.anchor_of(cm.boundary.column(k));
            if (!v.is_zero()) {
                ok = false;
                w = "basis " + std::to_string(k);
            }
        }
        rep_.add("crossed.cond3_anchor_kills_image", ok, w);
    }

    rep_.merge(check_representation(cm.rep), "crossed.");

    // derived Leibniz identities (redundant consistency checks)
    {
        bool ok = true;
        std::string w;
        for (size_t i = 0; i < nb && ok; ++i)
            for (size_t k = 0; k < nt && ok; ++k)
                for (size_t l = 0; l < nt && ok; ++l) {
                    Element u = Element::basis(cm.top, k);
                    Element v = Element::basis(cm.top, l);
                    Element lhs = cm.rep.rho[i].apply(cm.top_mul(u, v));
                    Element rhs = cm.top_mul(cm.rep.rho[i].apply(u), v) + cm.top_mul(u, cm.rep.rho[i].apply(v)) -
                                  cm.top_mul(cm.rep.mu[i].apply(u), v);
                    Element lhs2 = cm.rep.mu[i].apply(cm.top_mul(u, v));
                    Element rhs2 = cm.rep.mu[i].apply(cm.top_mul(v, u)) + cm.top_mul(u, cm.rep.mu[i].apply(v)) -
                                   cm.top_mul(v, cm.rep.mu[i].apply(u));
                    if (!(lhs == rhs) || !(lhs2 == rhs2)) {
                        ok = false;
                        w = "tuple " + tstr({i, k, l});
                    }
                }
        rep_.add("crossed.derived_leibniz", ok, w);
    }
    return rep_;
}

CrossedModuleData crossed_from_ideal(const PreLieRinehartData& total, const std::vector<size_t>& ideal_indices) {
    size_t n = total.module->rank();
    std::vector<bool> in_ideal(n, false);
    for (size_t k : ideal_indices) {
        if (k >= n) throw error("crossed_from_ideal: index out of range");
        in_ideal[k] = true;
        if (!total.anchor[k].is_zero()) throw error("crossed_from_ideal: ideal coordinate has nonzero anchor");
    }
    auto ideal_valued = [&](const Element& e) {
        for (size_t i = 0; i < n; ++i)
            if (!in_ideal[i] && !e.coeffs[i].is_zero()) return false;
        return true;
    };
    std::vector<std::string> names;
    for (size_t k : ideal_indices) names.push_back(total.module->basis[k]);
    CrossedModuleData cm;
    cm.base = total;
    cm.top = make_module(total.module->ring, std::move(names));
    size_t nt = ideal_indices.size();
    auto project = [&](const Element& e) {
        if (!ideal_valued(e)) throw error("crossed_from_ideal: the coordinates do not span an ideal");
        Element r(cm.top);
        for (size_t k = 0; k < nt; ++k) r.coeffs[k] = e.coeffs[ideal_indices[k]];
        return r;
    };
    cm.top_product.assign(nt, std::vector<Element>(nt, Element::zero(cm.top)));
    for (size_t k = 0; k < nt; ++k)
        for (size_t l = 0; l < nt; ++l) cm.top_product[k][l] = project(total.product[ideal_indices[k]][ideal_indices[l]]);
    cm.boundary = LinearMap(cm.top, total.module);
    for (size_t k = 0; k < nt; ++k) cm.boundary.m[ideal_indices[k]][k] = Poly::one(total.module->ring);
    cm.rep.algebra = total;
    cm.rep.target = cm.top;
    for (size_t i = 0; i < n; ++i) {
        std::vector<Element> rcols, mcols;
        for (size_t k = 0; k < nt; ++k) {
            rcols.push_back(project(total.product[i][ideal_indices[k]]));
            mcols.push_back(project(total.product[ideal_indices[k]][i]));
        }
        cm.rep.rho.emplace_back(LinearMap::from_columns(cm.top, cm.top, rcols), total.anchor[i]);
        cm.rep.mu.push_back(LinearMap::from_columns(cm.top, cm.top, mcols));
    }
    return cm;
}

PreLieRinehartData total_algebra(const CrossedModuleData& cm) {
    Report chk = verify_crossed_module(cm);
    if (!chk.ok()) throw error("total_algebra: crossed module fails verification: " + chk.first_failure()->id);
    size_t nb = cm.base.module->rank();
    size_t nt = cm.top->rank();
    const RingPtr& ring = cm.base.module->ring;
    std::vector<std::string> names;
    for (const auto& b : cm.base.module->basis) names.push_back(b);
    for (const auto& b : cm.top->basis) names.push_back(b + "^");
    PreLieRinehartData d = PreLieRinehartData::zero(make_module(ring, std::move(names)));
    auto lift_b = [&](const Element& e) {
        Element r(d.module);
        for (size_t i = 0; i < nb; ++i) r.coeffs[i] = e.coeffs[i];
        return r;
    };
    auto lift_t = [&](const Element& e) {
        Element r(d.module);
        for (size_t k = 0; k < nt; ++k) r.coeffs[nb + k] = e.coeffs[k];
        return r;
    };
    for (size_t i = 0; i < nb; ++i) {
        d.anchor[i] = cm.base.anchor[i];
        for (size_t j = 0; j < nb; ++j) d.product[i][j] = lift_b(cm.base.product[i][j]);
        for (size_t k = 0; k < nt; ++k) {
            d.product[i][nb + k] = lift_t(cm.rep.rho[i].apply(Element::basis(cm.top, k)));
            d.product[nb + k][i] = lift_t(cm.rep.mu[i].apply(Element::basis(cm.top, k)));
        }
    }
    for (size_t k = 0; k < nt; ++k)
        for (size_t l = 0; l < nt; ++l) d.product[nb + k][nb + l] = lift_t(cm.top_product[k][l]);
    return d;
}

Element LieCrossedModuleData::top_br(const Element& u, const Element& v) const {
    Element r(top);
    for (size_t k = 0; k < top->rank(); ++k) {
        if (u.coeffs[k].is_zero()) continue;
        for (size_t l = 0; l < top->rank(); ++l) {
            if (v.coeffs[l].is_zero()) continue;
            r += top_bracket[k][l].scaled(u.coeffs[k] * v.coeffs[l]);
        }
    }
    return r;
}

std::pair<LieCrossedModuleData, Report> sub_adjacent_crossed(const CrossedModuleData& cm) {
    Report chk = verify_crossed_module(cm);
    if (!chk.ok()) throw error("sub_adjacent_crossed: crossed module fails verification");
    LieCrossedModuleData out;
    out.base = sub_adjacent(cm.base);
    out.top = cm.top;
    size_t nb = cm.base.module->rank();
    size_t nt = cm.top->rank();
    out.top_bracket.assign(nt, std::vector<Element>(nt, Element::zero(cm.top)));
    for (size_t k = 0; k < nt; ++k)
        for (size_t l = 0; l < nt; ++l) out.top_bracket[k][l] = cm.top_product[k][l] - cm.top_product[l][k];
    out.boundary = cm.boundary;
    out.rep.algebra = out.base;
    out.rep.target = cm.top;
    for (size_t i = 0; i < nb; ++i)
        out.rep.rho.emplace_back(cm.rep.rho[i].linear - cm.rep.mu[i], cm.rep.rho[i].symbol);

    Report rep_;
    // boundary is a Lie algebra homomorphism
    {
        bool ok = true;
        for (size_t k = 0; k < nt && ok; ++k)
            for (size_t l = 0; l < nt && ok; ++l) {
                Element lhs = out.boundary.apply(out.top_bracket[k][l]);
                Element rhs = extend_bracket(out.base, out.boundary.column(k), out.boundary.column(l));
                if (!(lhs == rhs)) ok = false;
            }
        rep_.add("lie_crossed.boundary_homomorphism", ok);
    }
    // (1) boundary(rho(X)u) = [X, boundary u]
    {
        bool ok = true;
        std::string w;
        for (size_t i = 0; i < nb && ok; ++i)
            for (size_t k = 0; k < nt && ok; ++k) {
                Element lhs = out.boundary.apply(out.rep.rho[i].apply(Element::basis(cm.top, k)));
                Element rhs = extend_bracket(out.base, Element::basis(out.base.module, i), out.boundary.column(k));
                if (!(lhs == rhs)) {
                    ok = false;
                    w = "pair " + tstr({i, k});
                }
            }
        rep_.add("lie_crossed.cond1", ok, w);
    }
    // (2) rho(boundary u)v = [u,v]
    {
        bool ok = true;
        std::string w;
        for (size_t k = 0; k < nt && ok; ++k)
            for (size_t l = 0; l < nt && ok; ++l) {
                Element lhs = out.rep.rho_at(out.boundary.column(k)).apply(Element::basis(cm.top, l));
                if (!(lhs == out.top_bracket[k][l])) {
                    ok = false;
                    w = "pair " + tstr({k, l});
                }
            }
        rep_.add("lie_crossed.cond2", ok, w);
    }
    // (3) theta o boundary = 0
    {
        bool ok = true;
        for (size_t k = 0; k < nt && ok; ++k)
            if (!out.base.anchor_of(out.boundary.column(k)).is_zero()) ok = false;
        rep_.add("lie_crossed.cond3", ok);
    }
    // (4) rho(X)[u,v] = [rho(X)u, v] + [u, rho(X)v]
    {
        bool ok = true;
        std::string w;
        for (size_t i = 0; i < nb && ok; ++i)
            for (size_t k = 0; k < nt && ok; ++k)
                for (size_t l = 0; l < nt && ok; ++l) {
                    Element u = Element::basis(cm.top, k);
                    Element v = Element::basis(cm.top, l);
                    Element lhs = out.rep.rho[i].apply(out.top_br(u, v));
                    Element rhs = out.top_br(out.rep.rho[i].apply(u), v) + out.top_br(u, out.rep.rho[i].apply(v));
                    if (!(lhs == rhs)) {
                        ok = false;
                        w = "tuple " + tstr({i, k, l});
                    }
                }
        rep_.add("lie_crossed.cond4_derivation", ok, w);
    }
    rep_.merge(check_lie_representation(out.rep), "lie_crossed.");
    return {out, rep_};
}

Report check_crossed_extension(const CrossedExtensionData& xd) {
    Report rep_ = verify_crossed_module(xd.cm);
    size_t nb = xd.cm.base.module->rank();
    size_t nt = xd.cm.top->rank();
    size_t nf = xd.quotient.module->rank();
    size_t nk = xd.kernel_module->rank();

    bool shape = same_module(xd.p.domain, xd.cm.base.module) && same_module(xd.p.codomain, xd.quotient.module) &&
                 same_module(xd.s.domain, xd.quotient.module) && same_module(xd.s.codomain, xd.cm.base.module) &&
                 same_module(xd.iota.domain, xd.kernel_module) && same_module(xd.iota.codomain, xd.cm.top) &&
                 same_module(xd.sigma.codomain, xd.cm.top) && xd.sigma.domain->rank() == xd.image_indices.size();
    rep_.add("xext.shape", shape);
    if (!shape) return rep_;

    // p o s = id
    {
        bool ok = true;
        for (size_t i = 0; i < nf && ok; ++i)
            if (!(xd.p.apply(xd.s.column(i)) == Element::basis(xd.quotient.module, i))) ok = false;
        rep_.add("xext.section_p_s", ok);
    }
    // image of the boundary is spanned by the named coordinates
    {
        std::vector<bool> in_image(nb, false);
        for (size_t i : xd.image_indices) in_image[i] = true;
        bool ok = true;
        for (size_t k = 0; k < nt && ok; ++k)
            for (size_t i = 0; i < nb && ok; ++i)
                if (!in_image[i] && !xd.cm.boundary.m[i][k].is_zero()) ok = false;
        rep_.add("xext.image_coordinates", ok);
    }
    // boundary o sigma = id on N
    {
        bool ok = true;
        for (size_t k = 0; k < xd.image_indices.size() && ok; ++k) {
            Element img = xd.cm.boundary.apply(xd.sigma.column(k));
            if (!(img == Element::basis(xd.cm.base.module, xd.image_indices[k]))) ok = false;
        }
        rep_.add("xext.section_boundary_sigma", ok);
    }
    // p o boundary = 0 and p kills exactly the image coordinates
    {
        bool ok = true;
        for (size_t k = 0; k < nt && ok; ++k)
            if (!xd.p.apply(xd.cm.boundary.column(k)).is_zero()) ok = false;
        for (size_t i : xd.image_indices)
            if (!xd.p.column(i).is_zero()) ok = false;
        rep_.add("xext.exactness_at_base", ok);
    }
    // iota lands in ker(boundary) and is injective with constant row-inverse
    {
        bool in_ker = true;
        for (size_t k = 0; k < nk && in_ker; ++k)
            if (!xd.cm.boundary.apply(xd.iota.column(k)).is_zero()) in_ker = false;
        rep_.add("xext.kernel_basis_in_kernel", in_ker);
        auto inv = constant_row_inverse(xd.iota);
        rep_.add("xext.kernel_basis_independent", inv.has_value());
        // field case: the supplied basis must span ker(boundary)
        if (xd.cm.base.module->ring->nvars() == 0 && inv.has_value()) {
            QMatrix bd(nb, std::vector<Rational>(nt, Rational(0)));
            for (size_t i = 0; i < nb; ++i)
                for (size_t k = 0; k < nt; ++k) bd[i][k] = xd.cm.boundary.m[i][k].constant_value();
            bool spans = qrank(bd) + nk == nt;
            rep_.add("xext.kernel_basis_spans", spans);
        }
    }
    return rep_;
}

std::vector<std::vector<Element>> crossed_g(const CrossedExtensionData& xd, const LinearMap& s) {
    size_t nf = xd.quotient.module->rank();
    std::vector<bool> in_image(xd.cm.base.module->rank(), false);
    for (size_t i : xd.image_indices) in_image[i] = true;
    std::vector<std::vector<Element>> g(nf, std::vector<Element>(nf, Element::zero(xd.cm.top)));
    for (size_t i = 0; i < nf; ++i)
        for (size_t j = 0; j < nf; ++j) {
            Element arg = extend_product(xd.cm.base, s.column(i), s.column(j)) - s.apply(xd.quotient.product[i][j]);
            Element narg(xd.sigma.domain);
            for (size_t t = 0; t < xd.cm.base.module->rank(); ++t) {
                if (arg.coeffs[t].is_zero()) continue;
                if (!in_image[t]) throw error("crossed_g: s(X).s(Y) - s(X.Y) is not supported on the image coordinates");
            }
            for (size_t k = 0; k < xd.image_indices.size(); ++k) narg.coeffs[k] = arg.coeffs[xd.image_indices[k]];
            g[i][j] = xd.sigma.apply(narg);
        }
    return g;
}

Element kernel_coordinates(const CrossedExtensionData& xd, const Element& top_value) {
    auto inv = constant_row_inverse(xd.iota);
    if (!inv) throw error("kernel_coordinates: kernel basis has no constant row-inverse");
    size_t nk = xd.kernel_module->rank();
    Element out(xd.kernel_module);
    for (size_t i = 0; i < nk; ++i)
        for (size_t j = 0; j < nk; ++j) {
            const Poly& v = top_value.coeffs[inv->rows[j]];
            if (!v.is_zero()) out.coeffs[i] += v.scaled(inv->inv[i][j]);
        }
    if (!(xd.iota.apply(out) == top_value)) throw error("kernel_coordinates: value is not in the span of the kernel basis");
    return out;
}

Representation induced_quotient_rep(const CrossedExtensionData& xd) {
    Representation rep;
    rep.algebra = xd.quotient;
    rep.target = xd.kernel_module;
    size_t nf = xd.quotient.module->rank();
    size_t nk = xd.kernel_module->rank();
    for (size_t i = 0; i < nf; ++i) {
        std::vector<Element> rcols, mcols;
        for (size_t k = 0; k < nk; ++k) {
            Element u = xd.iota.column(k);
            rcols.push_back(kernel_coordinates(xd, xd.cm.rep.rho_at(xd.s.column(i)).apply(u)));
            mcols.push_back(kernel_coordinates(xd, xd.cm.rep.mu_at(xd.s.column(i)).apply(u)));
        }
        rep.rho.emplace_back(LinearMap::from_columns(xd.kernel_module, xd.kernel_module, rcols), xd.quotient.anchor[i]);
        rep.mu.push_back(LinearMap::from_columns(xd.kernel_module, xd.kernel_module, mcols));
    }
    return rep;
}

Cochain three_cocycle_with_section(const CrossedExtensionData& xd, const LinearMap& s) {
    size_t nf = xd.quotient.module->rank();
    auto g = crossed_g(xd, s);
    auto g_at = [&](const Element& X, const Element& Y) {
        Element r(xd.cm.top);
        for (size_t i = 0; i < nf; ++i) {
            if (X.coeffs[i].is_zero()) continue;
            for (size_t j = 0; j < nf; ++j) {
                if (Y.coeffs[j].is_zero()) continue;
                r += g[i][j].scaled(X.coeffs[i] * Y.coeffs[j]);
            }
        }
        return r;
    };

    // f(X,Y,Z) valued in top first
    auto f_top = [&](size_t i, size_t j, size_t k) {
        Element X = Element::basis(xd.quotient.module, i);
        Element Y = Element::basis(xd.quotient.module, j);
        Element Z = Element::basis(xd.quotient.module, k);
        Element out = xd.cm.rep.rho_at(s.column(i)).apply(g[j][k]);
        out = out - xd.cm.rep.rho_at(s.column(j)).apply(g[i][k]);
        out = out - xd.cm.rep.mu_at(s.column(k)).apply(g[i][j]);
        out += xd.cm.rep.mu_at(s.column(k)).apply(g[j][i]);
        Element br = extend_product(xd.quotient, X, Y) - extend_product(xd.quotient, Y, X);
        out = out - g_at(br, Z);
        out += g_at(X, extend_product(xd.quotient, Y, Z));
        out = out - g_at(Y, extend_product(xd.quotient, X, Z));
        return out;
    };

    Representation qrep = induced_quotient_rep(xd);
    Report qchk = check_representation(qrep);
    if (!qchk.ok()) throw error("three_cocycle_from_extension: induced quotient representation fails: " +
                                qchk.first_failure()->id);

    Cochain f = Cochain::zero(CochainKind::prelie, 3, xd.quotient.module, xd.kernel_module);
    for (size_t i = 0; i < nf; ++i)
        for (size_t j = 0; j < nf; ++j)
            for (size_t k = 0; k < nf; ++k) {
                Element v = f_top(i, j, k);
                if (i == j && !v.is_zero()) throw error("three_cocycle_from_extension: f not alternating (diagonal)");
                if (i < j) {
                    // antisymmetry in the wedge slots
                    Element w = f_top(j, i, k);
                    if (!((v + w).is_zero())) throw error("three_cocycle_from_extension: f not alternating");
                    if (!xd.cm.boundary.apply(v).is_zero())
                        throw error("three_cocycle_from_extension: f is not valued in ker(boundary)");
                    Element coords = kernel_coordinates(xd, v);
                    if (!coords.is_zero()) f.set({(int)i, (int)j, (int)k}, coords);
                }
            }

    Cochain df = prelie_coboundary(qrep, f);
    if (!df.is_zero()) throw error("three_cocycle_from_extension: delta f != 0 (inconsistent crossed extension)");
    return f;
}

Cochain three_cocycle_from_extension(const CrossedExtensionData& xd) {
    return three_cocycle_with_section(xd, xd.s);
}

} // namespace plrk
