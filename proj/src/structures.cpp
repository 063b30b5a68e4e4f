#include "plrk/structures.hpp"

#include <sstream>

namespace plrk {

namespace {

std::string tuple_str(std::initializer_list<size_t> idx) {
    std::ostringstream os;
    os << "(";
    bool first = true;
    for (size_t i : idx) {
        if (!first) os << ",";
        first = false;
        os << i;
    }
    os << ")";
    return os.str();
}

std::vector<Rational> qvec_sub(std::vector<Rational> a, const std::vector<Rational>& b) {
    for (size_t i = 0; i < a.size(); ++i) a[i] -= b[i];
    return a;
}

bool qvec_zero(const std::vector<Rational>& a) {
    for (const auto& c : a)
        if (!c.is_zero()) return false;
    return true;
}

} // namespace

std::vector<Rational> PreLieAlgebraFD::commutator(size_t i, size_t j) const {
    return qvec_sub(product[i][j], product[j][i]);
}

Report PreLieAlgebraFD::verify() const {
    Report rep;
    bool shapes = product.size() == dim;
    for (const auto& row : product) {
        if (row.size() != dim) shapes = false;
        for (const auto& v : row)
            if (v.size() != dim) shapes = false;
    }
    rep.add("prelie_fd.shape", shapes);
    if (!shapes) return rep;

    auto mul = [&](const std::vector<Rational>& x, const std::vector<Rational>& y) {
        std::vector<Rational> r(dim, Rational(0));
        for (size_t i = 0; i < dim; ++i)
            for (size_t j = 0; j < dim; ++j) {
                if (x[i].is_zero() || y[j].is_zero()) continue;
                for (size_t k = 0; k < dim; ++k) r[k] += x[i] * y[j] * product[i][j][k];
            }
        return r;
    };
    auto basis = [&](size_t i) {
        std::vector<Rational> v(dim, Rational(0));
        v[i] = Rational(1);
        return v;
    };
    bool all = true;
    std::string witness;
    for (size_t i = 0; i < dim && all; ++i)
        for (size_t j = i + 1; j < dim && all; ++j)
            for (size_t k = 0; k < dim && all; ++k) {
                auto a1 = qvec_sub(mul(basis(i), mul(basis(j), basis(k))), mul(mul(basis(i), basis(j)), basis(k)));
                auto a2 = qvec_sub(mul(basis(j), mul(basis(i), basis(k))), mul(mul(basis(j), basis(i)), basis(k)));
                if (!qvec_zero(qvec_sub(a1, a2))) {
                    all = false;
                    witness = "triple " + tuple_str({i, j, k});
                }
            }
    rep.add("prelie_fd.associator_symmetry", all, witness);
    return rep;
}

std::vector<Rational> ActionData::bracket(size_t i, size_t j) const {
    if (flavor == Flavor::lie) return table[i][j];
    return qvec_sub(table[i][j], table[j][i]);
}

VectorField ActionData::lambda(const std::vector<Rational>& coeffs) const {
    VectorField v = VectorField::zero(images.at(0).ring);
    for (size_t k = 0; k < coeffs.size(); ++k)
        if (!coeffs[k].is_zero()) v = v + images[k].scaled(coeffs[k]);
    return v;
}

Report ActionData::check() const {
    Report rep;
    bool shapes = images.size() == dim && table.size() == dim;
    rep.add("action.shape", shapes);
    if (!shapes) return rep;
    bool all = true;
    std::string witness;
    for (size_t i = 0; i < dim && all; ++i)
        for (size_t j = i + 1; j < dim && all; ++j) {
            VectorField lhs = lambda(bracket(i, j));
            VectorField rhs = vf_commutator(images[i], images[j]);
            if (!(lhs == rhs)) {
                all = false;
                witness = "pair " + tuple_str({i, j}) + ": lambda([x,y]) - [lambda x,lambda y] = " + (lhs - rhs).str();
            }
        }
    rep.add("action.morphism", all, witness);
    return rep;
}

PreLieRinehartData PreLieRinehartData::zero(ModulePtr m) {
    PreLieRinehartData d;
    d.module = std::move(m);
    size_t n = d.module->rank();
    d.product.assign(n, std::vector<Element>(n, Element::zero(d.module)));
    d.anchor.assign(n, VectorField::zero(d.module->ring));
    return d;
}

VectorField PreLieRinehartData::anchor_of(const Element& x) const {
    require_same_module(x.module, module, "anchor_of");
    VectorField v = VectorField::zero(module->ring);
    for (size_t i = 0; i < anchor.size(); ++i)
        if (!x.coeffs[i].is_zero()) v = v + anchor[i].scaled(x.coeffs[i]);
    return v;
}

VectorField LieRinehartData::anchor_of(const Element& x) const {
    require_same_module(x.module, module, "anchor_of");
    VectorField v = VectorField::zero(module->ring);
    for (size_t i = 0; i < anchor.size(); ++i)
        if (!x.coeffs[i].is_zero()) v = v + anchor[i].scaled(x.coeffs[i]);
    return v;
}

Report PreLieRinehartData::well_formed() const {
    Report rep;
    size_t n = module->rank();
    bool ok = product.size() == n && anchor.size() == n;
    for (const auto& row : product) {
        if (row.size() != n) ok = false;
        for (const auto& e : row)
            if (!same_module(e.module, module)) ok = false;
    }
    for (const auto& v : anchor)
        if (!same_ring(v.ring, module->ring)) ok = false;
    rep.add("table.shape", ok);
    return rep;
}

Element extend_product(const PreLieRinehartData& alg, const Element& X, const Element& Y) {
    require_same_module(X.module, alg.module, "extend_product");
    require_same_module(Y.module, alg.module, "extend_product");
    size_t n = alg.module->rank();
    Element r(alg.module);
    for (size_t i = 0; i < n; ++i) {
        const Poly& a = X.coeffs[i];
        if (a.is_zero()) continue;
        for (size_t j = 0; j < n; ++j) {
            const Poly& b = Y.coeffs[j];
            if (!b.is_zero()) r += alg.product[i][j].scaled(a * b);
            Poly t = alg.anchor[i].apply(b);
            if (!t.is_zero()) r.coeffs[j] += a * t;
        }
    }
    return r;
}

Element extend_bracket(const LieRinehartData& alg, const Element& X, const Element& Y) {
    require_same_module(X.module, alg.module, "extend_bracket");
    require_same_module(Y.module, alg.module, "extend_bracket");
    size_t n = alg.module->rank();
    Element r(alg.module);
    for (size_t i = 0; i < n; ++i) {
        const Poly& a = X.coeffs[i];
        const Poly& aY = Y.coeffs[i];
        for (size_t j = 0; j < n; ++j) {
            const Poly& b = Y.coeffs[j];
            if (!a.is_zero() && !b.is_zero()) r += alg.bracket[i][j].scaled(a * b);
            if (!a.is_zero()) {
                Poly t = alg.anchor[i].apply(b);
                if (!t.is_zero()) r.coeffs[j] += a * t;
            }
            if (!aY.is_zero()) {
                Poly t = alg.anchor[i].apply(X.coeffs[j]);
                if (!t.is_zero()) r.coeffs[j] -= aY * t;
            }
        }
    }
    return r;
}

Element associator(const PreLieRinehartData& alg, const Element& X, const Element& Y, const Element& Z) {
    return extend_product(alg, X, extend_product(alg, Y, Z)) - extend_product(alg, extend_product(alg, X, Y), Z);
}

Report verify_prelie_rinehart(const PreLieRinehartData& alg) {
    Report rep = alg.well_formed();
    if (!rep.ok()) return rep;
    size_t n = alg.module->rank();

    // (b) anchor law theta(X.Y - Y.X) = [theta X, theta Y] on basis pairs
    bool anchor_ok = true;
    std::string anchor_witness;
    for (size_t i = 0; i < n && anchor_ok; ++i)
        for (size_t j = i + 1; j < n && anchor_ok; ++j) {
            VectorField lhs = alg.anchor_of(alg.product[i][j] - alg.product[j][i]);
            VectorField rhs = vf_commutator(alg.anchor[i], alg.anchor[j]);
            if (!(lhs == rhs)) {
                anchor_ok = false;
                anchor_witness = "pair " + tuple_str({i, j}) + ": difference " + (lhs - rhs).str();
            }
        }
    rep.add("anchor_law", anchor_ok, anchor_witness);

    // (a) associator symmetry on basis triples
    bool assoc_ok = true;
    std::string assoc_witness;
    for (size_t i = 0; i < n && assoc_ok; ++i)
        for (size_t j = i + 1; j < n && assoc_ok; ++j)
            for (size_t k = 0; k < n && assoc_ok; ++k) {
                Element ei = Element::basis(alg.module, i);
                Element ej = Element::basis(alg.module, j);
                Element ek = Element::basis(alg.module, k);
                Element d = associator(alg, ei, ej, ek) - associator(alg, ej, ei, ek);
                if (!d.is_zero()) {
                    assoc_ok = false;
                    assoc_witness = "triple " + tuple_str({i, j, k}) + ": difference " + d.str();
                }
            }
    rep.add("associator_symmetry", assoc_ok, assoc_witness);
    return rep;
}

Report verify_lie_rinehart(const LieRinehartData& alg) {
    Report rep;
    size_t n = alg.module->rank();
    bool shape = alg.bracket.size() == n && alg.anchor.size() == n;
    rep.add("table.shape", shape);
    if (!shape) return rep;

    bool antisym = true;
    std::string w1;
    for (size_t i = 0; i < n && antisym; ++i)
        for (size_t j = i; j < n && antisym; ++j) {
            Element d = alg.bracket[i][j] + alg.bracket[j][i];
            if (i == j) d = alg.bracket[i][i];
            if (!d.is_zero()) {
                antisym = false;
                w1 = "pair " + tuple_str({i, j});
            }
        }
    rep.add("antisymmetry", antisym, w1);

    bool anchor_ok = true;
    std::string w2;
    for (size_t i = 0; i < n && anchor_ok; ++i)
        for (size_t j = i + 1; j < n && anchor_ok; ++j) {
            VectorField lhs = alg.anchor_of(alg.bracket[i][j]);
            VectorField rhs = vf_commutator(alg.anchor[i], alg.anchor[j]);
            if (!(lhs == rhs)) {
                anchor_ok = false;
                w2 = "pair " + tuple_str({i, j}) + ": difference " + (lhs - rhs).str();
            }
        }
    rep.add("anchor_morphism", anchor_ok, w2);

    bool jac = true;
    std::string w3;
    for (size_t i = 0; i < n && jac; ++i)
        for (size_t j = i + 1; j < n && jac; ++j)
            for (size_t k = j + 1; k < n && jac; ++k) {
                Element ei = Element::basis(alg.module, i);
                Element ej = Element::basis(alg.module, j);
                Element ek = Element::basis(alg.module, k);
                Element d = extend_bracket(alg, extend_bracket(alg, ei, ej), ek) +
                            extend_bracket(alg, extend_bracket(alg, ek, ei), ej) +
                            extend_bracket(alg, extend_bracket(alg, ej, ek), ei);
                if (!d.is_zero()) {
                    jac = false;
                    w3 = "triple " + tuple_str({i, j, k}) + ": difference " + d.str();
                }
            }
    rep.add("jacobi", jac, w3);
    return rep;
}

LieRinehartData sub_adjacent(const PreLieRinehartData& alg, bool check) {
    if (check) {
        Report rep = verify_prelie_rinehart(alg);
        if (!rep.ok()) throw error("sub_adjacent: input fails verification: " + rep.first_failure()->id);
    }
    LieRinehartData lie;
    lie.module = alg.module;
    lie.anchor = alg.anchor;
    size_t n = alg.module->rank();
    lie.bracket.assign(n, std::vector<Element>(n, Element::zero(alg.module)));
    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < n; ++j) lie.bracket[i][j] = alg.product[i][j] - alg.product[j][i];
    return lie;
}

PreLieRinehartData coordinate_algebra(const RingPtr& ring, const std::vector<VectorField>& fields,
                                      std::vector<std::string> basis_names) {
    for (size_t i = 0; i < fields.size(); ++i)
        for (size_t j = i + 1; j < fields.size(); ++j)
            if (!vf_commutator(fields[i], fields[j]).is_zero())
                throw error("coordinate_algebra: fields " + std::to_string(i) + " and " + std::to_string(j) +
                            " do not commute");
    if (basis_names.empty())
        for (size_t i = 0; i < fields.size(); ++i) basis_names.push_back("D" + std::to_string(i + 1));
    PreLieRinehartData d = PreLieRinehartData::zero(make_module(ring, std::move(basis_names)));
    size_t n = fields.size();
    // (a D_i).(b D_j) = a D_i(b) D_j; on the basis a=b=1 every product is zero,
    // the structure lives in the anchor.
    for (size_t i = 0; i < n; ++i) d.anchor[i] = fields[i];
    return d;
}

PreLieRinehartData derivation_prelie(const RingPtr& ring, const VectorField& d) {
    PreLieRinehartData a = PreLieRinehartData::zero(make_module(ring, {"e"}));
    // x*y = x.(d y), theta(x)(y) = x.(d y); on the basis e*e = d(1) e = 0.
    a.anchor[0] = d;
    return a;
}

PreLieRinehartData transformation_algebra(const ActionData& action, std::vector<std::string> basis_names) {
    if (action.flavor != ActionData::Flavor::prelie)
        throw error("transformation_algebra: needs a pre-Lie action (use transformation_lie_algebra for Lie actions)");
    Report chk = action.check();
    if (!chk.ok()) throw error("transformation_algebra: action check failed: " + chk.first_failure()->id);
    const RingPtr& ring = action.images.at(0).ring;
    if (basis_names.empty())
        for (size_t i = 0; i < action.dim; ++i) basis_names.push_back("g" + std::to_string(i + 1));
    PreLieRinehartData d = PreLieRinehartData::zero(make_module(ring, std::move(basis_names)));
    for (size_t i = 0; i < action.dim; ++i) {
        d.anchor[i] = action.images[i];
        for (size_t j = 0; j < action.dim; ++j) {
            Element e(d.module);
            for (size_t k = 0; k < action.dim; ++k)
                e.coeffs[k] = Poly::constant(ring, action.table[i][j][k]);
            d.product[i][j] = e;
        }
    }
    return d;
}

LieRinehartData transformation_lie_algebra(const ActionData& action, std::vector<std::string> basis_names) {
    Report chk = action.check();
    if (!chk.ok()) throw error("transformation_lie_algebra: action check failed: " + chk.first_failure()->id);
    const RingPtr& ring = action.images.at(0).ring;
    if (basis_names.empty())
        for (size_t i = 0; i < action.dim; ++i) basis_names.push_back("g" + std::to_string(i + 1));
    LieRinehartData d;
    d.module = make_module(ring, std::move(basis_names));
    d.bracket.assign(action.dim, std::vector<Element>(action.dim, Element::zero(d.module)));
    d.anchor.assign(action.dim, VectorField::zero(ring));
    for (size_t i = 0; i < action.dim; ++i) {
        d.anchor[i] = action.images[i];
        for (size_t j = 0; j < action.dim; ++j) {
            Element e(d.module);
            auto br = action.bracket(i, j);
            for (size_t k = 0; k < action.dim; ++k) e.coeffs[k] = Poly::constant(ring, br[k]);
            d.bracket[i][j] = e;
        }
    }
    return d;
}

PreLieRinehartData derivation_extension(const PreLieRinehartData& alg, const DerivationPair& dp) {
    for (const auto& v : alg.anchor)
        if (!v.is_zero()) throw error("derivation_extension: input must have zero anchor");
    require_same_module(dp.module(), alg.module, "derivation_extension");
    size_t n = alg.module->rank();
    // check D(X.Y) = D(X).Y + X.D(Y) on generators (the pair law is structural)
    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < n; ++j) {
            Element lhs = dp.apply(alg.product[i][j]);
            Element rhs = extend_product(alg, dp.apply(Element::basis(alg.module, i)), Element::basis(alg.module, j)) +
                          extend_product(alg, Element::basis(alg.module, i), dp.apply(Element::basis(alg.module, j)));
            if (!(lhs == rhs))
                throw error("derivation_extension: (D,delta) is not a derivation at pair " + tuple_str({i, j}) +
                            ", difference " + (lhs - rhs).str());
        }
    const RingPtr& ring = alg.module->ring;
    std::vector<std::string> names{"one"};
    for (const auto& b : alg.module->basis) names.push_back(b);
    PreLieRinehartData d = PreLieRinehartData::zero(make_module(ring, std::move(names)));
    auto lift = [&](const Element& e) {
        Element r(d.module);
        for (size_t k = 0; k < n; ++k) r.coeffs[k + 1] = e.coeffs[k];
        return r;
    };
    // (a,X)*(b,Y) = (a delta(b), X.Y + a D(Y)); theta(a,X) = a delta
    d.anchor[0] = dp.symbol;
    for (size_t j = 0; j < n; ++j)
        d.product[0][j + 1] = lift(dp.apply(Element::basis(alg.module, j)));
    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < n; ++j) d.product[i + 1][j + 1] = lift(alg.product[i][j]);
    return d;
}

Poly ring_embed(const Poly& p, const RingPtr& target, const std::vector<size_t>& var_map) {
    Poly r = Poly::zero(target);
    for (const auto& [e, c] : p.terms()) {
        Expvec t(target->nvars(), 0);
        for (size_t i = 0; i < e.size(); ++i) t[var_map[i]] = e[i];
        r.add_term(t, c);
    }
    return r;
}

PreLieRinehartData tensor_product_algebra(const PreLieRinehartData& e1, const PreLieRinehartData& e2) {
    const RingPtr& r1 = e1.module->ring;
    const RingPtr& r2 = e2.module->ring;
    for (const auto& v : r1->vars)
        if (r2->var_index(v) >= 0) throw error("tensor_product_algebra: variable collision '" + v + "'");
    std::vector<std::string> vars = r1->vars;
    vars.insert(vars.end(), r2->vars.begin(), r2->vars.end());
    RingPtr ring = make_ring(std::move(vars), r1->laurent || r2->laurent);
    std::vector<size_t> map1(r1->nvars()), map2(r2->nvars());
    for (size_t i = 0; i < r1->nvars(); ++i) map1[i] = i;
    for (size_t i = 0; i < r2->nvars(); ++i) map2[i] = r1->nvars() + i;

    std::vector<std::string> names;
    for (const auto& b : e1.module->basis) names.push_back(b + "@1");
    for (const auto& b : e2.module->basis) names.push_back("1@" + b);
    size_t n1 = e1.module->rank(), n2 = e2.module->rank();
    PreLieRinehartData d = PreLieRinehartData::zero(make_module(ring, std::move(names)));

    auto lift1 = [&](const Element& e) {
        Element r(d.module);
        for (size_t k = 0; k < n1; ++k) r.coeffs[k] = ring_embed(e.coeffs[k], ring, map1);
        return r;
    };
    auto lift2 = [&](const Element& e) {
        Element r(d.module);
        for (size_t k = 0; k < n2; ++k) r.coeffs[n1 + k] = ring_embed(e.coeffs[k], ring, map2);
        return r;
    };
    auto liftvf1 = [&](const VectorField& v) {
        VectorField r(ring);
        for (size_t k = 0; k < r1->nvars(); ++k) r.components[map1[k]] = ring_embed(v.components[k], ring, map1);
        return r;
    };
    auto liftvf2 = [&](const VectorField& v) {
        VectorField r(ring);
        for (size_t k = 0; k < r2->nvars(); ++k) r.components[map2[k]] = ring_embed(v.components[k], ring, map2);
        return r;
    };

    // basis products: (X1 @ 1)*(Y1 @ 1) = X1.Y1 @ 1, (1 @ X2)*(1 @ Y2) = 1 @ X2.Y2,
    // mixed products vanish on the basis since theta(e)(1) = 0.
    for (size_t i = 0; i < n1; ++i) {
        d.anchor[i] = liftvf1(e1.anchor[i]);
        for (size_t j = 0; j < n1; ++j) d.product[i][j] = lift1(e1.product[i][j]);
    }
    for (size_t i = 0; i < n2; ++i) {
        d.anchor[n1 + i] = liftvf2(e2.anchor[i]);
        for (size_t j = 0; j < n2; ++j) d.product[n1 + i][n1 + j] = lift2(e2.product[i][j]);
    }
    return d;
}

Report check_homomorphism(const PreLieRinehartData& src, const PreLieRinehartData& dst, const LinearMap& phi) {
    Report rep;
    bool shape = same_module(phi.domain, src.module) && same_module(phi.codomain, dst.module);
    rep.add("hom.shape", shape);
    if (!shape) return rep;
    size_t n = src.module->rank();
    bool prod_ok = true;
    std::string w1;
    for (size_t i = 0; i < n && prod_ok; ++i)
        for (size_t j = 0; j < n && prod_ok; ++j) {
            Element lhs = phi.apply(src.product[i][j]);
            Element rhs = extend_product(dst, phi.column(i), phi.column(j));
            if (!(lhs == rhs)) {
                prod_ok = false;
                w1 = "pair " + tuple_str({i, j}) + ": difference " + (lhs - rhs).str();
            }
        }
    rep.add("hom.product", prod_ok, w1);
    bool anchor_ok = true;
    std::string w2;
    for (size_t i = 0; i < n && anchor_ok; ++i) {
        VectorField lhs = dst.anchor_of(phi.column(i));
        if (!(lhs == src.anchor[i])) {
            anchor_ok = false;
            w2 = "basis " + std::to_string(i) + ": difference " + (lhs - src.anchor[i]).str();
        }
    }
    rep.add("hom.anchor", anchor_ok, w2);
    return rep;
}

} // namespace plrk
