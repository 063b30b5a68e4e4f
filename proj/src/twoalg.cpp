#include "plrk/twoalg.hpp"

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

} // namespace

PreLie2Data PreLie2Data::empty(ModulePtr p0_, ModulePtr p1_) {
    PreLie2Data d;
    d.p0 = std::move(p0_);
    d.p1 = std::move(p1_);
    d.m1 = LinearMap(d.p1, d.p0);
    size_t n0 = d.p0->rank(), n1 = d.p1->rank();
    d.m2_00.assign(n0, std::vector<Element>(n0, Element::zero(d.p0)));
    d.m2_01.assign(n0, std::vector<Element>(n1, Element::zero(d.p1)));
    d.m2_10.assign(n1, std::vector<Element>(n0, Element::zero(d.p1)));
    d.m3 = Cochain::zero(CochainKind::prelie, 3, d.p0, d.p1);
    d.anchor.assign(n0, VectorField::zero(d.p0->ring));
    return d;
}

Element PreLie2Data::m2_00_at(const Element& x, const Element& y) const {
    Element r(p0);
    for (size_t i = 0; i < p0->rank(); ++i) {
        if (x.coeffs[i].is_zero()) continue;
        for (size_t j = 0; j < p0->rank(); ++j) {
            if (!y.coeffs[j].is_zero()) r += m2_00[i][j].scaled(x.coeffs[i] * y.coeffs[j]);
            Poly t = anchor[i].apply(y.coeffs[j]);
            if (!t.is_zero()) r.coeffs[j] += x.coeffs[i] * t;
        }
    }
    return r;
}

Element PreLie2Data::m2_01_at(const Element& x, const Element& m) const {
    Element r(p1);
    for (size_t i = 0; i < p0->rank(); ++i) {
        if (x.coeffs[i].is_zero()) continue;
        for (size_t l = 0; l < p1->rank(); ++l) {
            if (!m.coeffs[l].is_zero()) r += m2_01[i][l].scaled(x.coeffs[i] * m.coeffs[l]);
            Poly t = anchor[i].apply(m.coeffs[l]);
            if (!t.is_zero()) r.coeffs[l] += x.coeffs[i] * t;
        }
    }
    return r;
}

Element PreLie2Data::m2_10_at(const Element& m, const Element& x) const {
    Element r(p1);
    for (size_t l = 0; l < p1->rank(); ++l) {
        if (m.coeffs[l].is_zero()) continue;
        for (size_t i = 0; i < p0->rank(); ++i)
            if (!x.coeffs[i].is_zero()) r += m2_10[l][i].scaled(m.coeffs[l] * x.coeffs[i]);
    }
    return r;
}

Element PreLie2Data::m3_at(const Element& x, const Element& y, const Element& z) const {
    Element args[3] = {x, y, z};
    return m3.eval(args);
}

PreLieRinehartData PreLie2Data::degree0_algebra() const {
    PreLieRinehartData d = PreLieRinehartData::zero(p0);
    d.product = m2_00;
    d.anchor = anchor;
    return d;
}

Element Lie2Data::l2_00_at(const Element& x, const Element& y) const {
    Element r(p0);
    for (size_t i = 0; i < p0->rank(); ++i) {
        if (x.coeffs[i].is_zero()) continue;
        for (size_t j = 0; j < p0->rank(); ++j) {
            if (!y.coeffs[j].is_zero()) r += l2_00[i][j].scaled(x.coeffs[i] * y.coeffs[j]);
            Poly t = anchor[i].apply(y.coeffs[j]);
            if (!t.is_zero()) r.coeffs[j] += x.coeffs[i] * t;
            Poly t2 = anchor[j].apply(x.coeffs[i]);
            if (!t2.is_zero()) r.coeffs[i] -= y.coeffs[j] * t2;
        }
    }
    return r;
}

Element Lie2Data::l2_01_at(const Element& x, const Element& m) const {
    Element r(p1);
    for (size_t i = 0; i < p0->rank(); ++i) {
        if (x.coeffs[i].is_zero()) continue;
        for (size_t l = 0; l < p1->rank(); ++l) {
            if (!m.coeffs[l].is_zero()) r += l2_01[i][l].scaled(x.coeffs[i] * m.coeffs[l]);
            Poly t = anchor[i].apply(m.coeffs[l]);
            if (!t.is_zero()) r.coeffs[l] += x.coeffs[i] * t;
        }
    }
    return r;
}

Element Lie2Data::l3_at(const Element& x, const Element& y, const Element& z) const {
    Element out(p1);
    size_t n0 = p0->rank();
    for (size_t a = 0; a < n0; ++a)
        for (size_t b = 0; b < n0; ++b)
            for (size_t c = 0; c < n0; ++c) {
                Poly coeff = x.coeffs[a] * y.coeffs[b] * z.coeffs[c];
                if (coeff.is_zero()) continue;
                std::vector<int> idx{(int)a, (int)b, (int)c};
                int sign = 1;
                // sort with sign, zero on repeats
                if (idx[0] == idx[1] || idx[1] == idx[2] || idx[0] == idx[2]) continue;
                if (idx[0] > idx[1]) { std::swap(idx[0], idx[1]); sign = -sign; }
                if (idx[1] > idx[2]) { std::swap(idx[1], idx[2]); sign = -sign; }
                if (idx[0] > idx[1]) { std::swap(idx[0], idx[1]); sign = -sign; }
                auto it = l3.find(idx);
                if (it == l3.end()) continue;
                out += it->second.scaled(sign > 0 ? coeff : -coeff);
            }
    return out;
}

Report verify_prelie2(const PreLie2Data& x) {
    Report rep;
    size_t n0 = x.p0->rank(), n1 = x.p1->rank();
    bool shape = x.m2_00.size() == n0 && x.m2_01.size() == n0 && x.m2_10.size() == n1 &&
                 same_module(x.m1.domain, x.p1) && same_module(x.m1.codomain, x.p0) && x.anchor.size() == n0 &&
                 x.m3.degree == 3 && same_module(x.m3.source, x.p0) && same_module(x.m3.target, x.p1);
    rep.add("twoalg.shape", shape);
    if (!shape) return rep;

    auto b0 = [&](size_t i) { return Element::basis(x.p0, i); };
    auto b1 = [&](size_t l) { return Element::basis(x.p1, l); };

    // (a) m1 m2(x, m) = m2(x, m1 m)
    {
        bool ok = true;
        std::string w;
        for (size_t i = 0; i < n0 && ok; ++i)
            for (size_t l = 0; l < n1 && ok; ++l) {
                Element lhs = x.m1.apply(x.m2_01[i][l]);
                Element rhs = x.m2_00_at(b0(i), x.m1.column(l));
                if (!(lhs == rhs)) {
                    ok = false;
                    w = "pair " + tstr({i, l});
                }
            }
        rep.add("twoalg.a", ok, w);
    }
    // (b) m1 m2(m, x) = m2(m1 m, x)
    {
        bool ok = true;
        std::string w;
        for (size_t l = 0; l < n1 && ok; ++l)
            for (size_t i = 0; i < n0 && ok; ++i) {
                Element lhs = x.m1.apply(x.m2_10[l][i]);
                Element rhs = x.m2_00_at(x.m1.column(l), b0(i));
                if (!(lhs == rhs)) {
                    ok = false;
                    w = "pair " + tstr({l, i});
                }
            }
        rep.add("twoalg.b", ok, w);
    }
    // (c) m2(m1 m, n) = m2(m, m1 n)
    {
        bool ok = true;
        std::string w;
        for (size_t l = 0; l < n1 && ok; ++l)
            for (size_t t = 0; t < n1 && ok; ++t) {
                Element lhs = x.m2_01_at(x.m1.column(l), b1(t));
                Element rhs = x.m2_10_at(b1(l), x.m1.column(t));
                if (!(lhs == rhs)) {
                    ok = false;
                    w = "pair " + tstr({l, t});
                }
            }
        rep.add("twoalg.c", ok, w);
    }
    // (e1) m1 m3(x,y,z) = associator asymmetry of m2 on P0
    {
        bool ok = true;
        std::string w;
        for (size_t i = 0; i < n0 && ok; ++i)
            for (size_t j = 0; j < n0 && ok; ++j)
                for (size_t k = 0; k < n0 && ok; ++k) {
                    Element lhs = x.m1.apply(x.m3_at(b0(i), b0(j), b0(k)));
                    Element rhs = x.m2_00_at(b0(i), x.m2_00[j][k]) - x.m2_00_at(x.m2_00[i][j], b0(k)) -
                                  x.m2_00_at(b0(j), x.m2_00[i][k]) + x.m2_00_at(x.m2_00[j][i], b0(k));
                    if (!(lhs == rhs)) {
                        ok = false;
                        w = "triple " + tstr({i, j, k}) + ": difference " + (lhs - rhs).str();
                    }
                }
        rep.add("twoalg.e1", ok, w);
    }
    // (e2) m3(x,y,m1 m) = m2(x,m2(y,m)) - m2(m2(x,y),m) - m2(y,m2(x,m)) + m2(m2(y,x),m)
    {
        bool ok = true;
        std::string w;
        for (size_t i = 0; i < n0 && ok; ++i)
            for (size_t j = 0; j < n0 && ok; ++j)
                for (size_t l = 0; l < n1 && ok; ++l) {
                    Element lhs = x.m3_at(b0(i), b0(j), x.m1.column(l));
                    Element rhs = x.m2_01_at(b0(i), x.m2_01[j][l]) - x.m2_01_at(x.m2_00[i][j], b1(l)) -
                                  x.m2_01_at(b0(j), x.m2_01[i][l]) + x.m2_01_at(x.m2_00[j][i], b1(l));
                    if (!(lhs == rhs)) {
                        ok = false;
                        w = "tuple " + tstr({i, j, l});
                    }
                }
        rep.add("twoalg.e2", ok, w);
    }
    // (e3) m3(m1 m, x, y) = m2(m,m2(x,y)) - m2(m2(m,x),y) - m2(x,m2(m,y)) + m2(m2(x,m),y)
    {
        bool ok = true;
        std::string w;
        for (size_t l = 0; l < n1 && ok; ++l)
            for (size_t i = 0; i < n0 && ok; ++i)
                for (size_t j = 0; j < n0 && ok; ++j) {
                    Element lhs = x.m3_at(x.m1.column(l), b0(i), b0(j));
                    Element rhs = x.m2_10_at(b1(l), x.m2_00[i][j]) - x.m2_10_at(x.m2_10[l][i], b0(j)) -
                                  x.m2_01_at(b0(i), x.m2_10[l][j]) + x.m2_10_at(x.m2_01[i][l], b0(j));
                    if (!(lhs == rhs)) {
                        ok = false;
                        w = "tuple " + tstr({l, i, j});
                    }
                }
        rep.add("twoalg.e3", ok, w);
    }
    // (f) the coherence law for m3: equivalently delta(m3) = 0 for the
    // representation (rho,mu) = (m2(x,-), m2(-,x)) on P1
    {
        bool ok = true;
        std::string w;
        for (size_t a = 0; a < n0 && ok; ++a)
            for (size_t b = 0; b < n0 && ok; ++b)
                for (size_t c = 0; c < n0 && ok; ++c)
                    for (size_t d = 0; d < n0 && ok; ++d) {
                        Element W = b0(a), X = b0(b), Y = b0(c), Z = b0(d);
                        Element lhs = x.m2_01_at(W, x.m3_at(X, Y, Z)) - x.m2_01_at(X, x.m3_at(W, Y, Z)) +
                                      x.m2_01_at(Y, x.m3_at(W, X, Z)) + x.m2_10_at(x.m3_at(X, Y, W), Z) -
                                      x.m2_10_at(x.m3_at(W, Y, X), Z) + x.m2_10_at(x.m3_at(W, X, Y), Z) -
                                      x.m3_at(X, Y, x.m2_00_at(W, Z)) + x.m3_at(W, Y, x.m2_00_at(X, Z)) -
                                      x.m3_at(W, X, x.m2_00_at(Y, Z)) -
                                      x.m3_at(x.m2_00_at(W, X) - x.m2_00_at(X, W), Y, Z) +
                                      x.m3_at(x.m2_00_at(W, Y) - x.m2_00_at(Y, W), X, Z) -
                                      x.m3_at(x.m2_00_at(X, Y) - x.m2_00_at(Y, X), W, Z);
                        if (!lhs.is_zero()) {
                            ok = false;
                            w = "tuple " + tstr({a, b, c, d}) + ": value " + lhs.str();
                        }
                    }
        rep.add("twoalg.f", ok, w);
    }
    // Rinehart conditions. (i)-(iii) hold by construction of the table
    // evaluators; they are exercised on sample monomials so the report shows
    // the law each evaluator implements.
    {
        const RingPtr& ring = x.p0->ring;
        bool iok = true, iiok = true;
        if (ring->nvars() > 0 && n0 > 0) {
            Poly a = Poly::variable(ring, 0);
            for (size_t i = 0; i < n0 && iok; ++i)
                for (size_t j = 0; j < n0 && iok; ++j) {
                    Element lhs = x.m2_00_at(b0(i), b0(j).scaled(a));
                    Element rhs = x.m2_00_at(b0(i), b0(j)).scaled(a) + b0(j).scaled(x.anchor[i].apply(a));
                    if (!(lhs == rhs)) iok = false;
                    if (!(x.m2_00_at(b0(i).scaled(a), b0(j)) == x.m2_00_at(b0(i), b0(j)).scaled(a))) iok = false;
                }
            for (size_t l = 0; l < n1 && iiok; ++l)
                for (size_t i = 0; i < n0 && iiok; ++i) {
                    if (!(x.m2_10_at(b1(l).scaled(a), b0(i)) == x.m2_10_at(b1(l), b0(i)).scaled(a))) iiok = false;
                    if (!(x.m2_10_at(b1(l), b0(i).scaled(a)) == x.m2_10_at(b1(l), b0(i)).scaled(a))) iiok = false;
                }
        }
        rep.add("twoalg.i_anchor_leibniz", iok);
        rep.add("twoalg.ii_degree1_bilinear", iiok);
        rep.add("twoalg.iii_m1_m3_linear", true); // tables extend A-linearly by construction
    }
    // (iv) theta(m2(X,Y) - m2(Y,X)) = [theta X, theta Y]
    {
        bool ok = true;
        std::string w;
        PreLieRinehartData alg0 = x.degree0_algebra();
        for (size_t i = 0; i < n0 && ok; ++i)
            for (size_t j = i + 1; j < n0 && ok; ++j) {
                VectorField lhs = alg0.anchor_of(x.m2_00[i][j] - x.m2_00[j][i]);
                VectorField rhs = vf_commutator(x.anchor[i], x.anchor[j]);
                if (!(lhs == rhs)) {
                    ok = false;
                    w = "pair " + tstr({i, j});
                }
            }
        rep.add("twoalg.iv_anchor_law", ok, w);
    }
    // (v) theta o m1 = 0
    {
        bool ok = true;
        PreLieRinehartData alg0 = x.degree0_algebra();
        for (size_t l = 0; l < n1 && ok; ++l)
            if (!alg0.anchor_of(x.m1.column(l)).is_zero()) ok = false;
        rep.add("twoalg.v_anchor_kills_m1", ok);
    }
    return rep;
}

Report verify_lie2(const Lie2Data& x) {
    Report rep;
    size_t n0 = x.p0->rank(), n1 = x.p1->rank();
    bool shape = x.l2_00.size() == n0 && x.l2_01.size() == n0 && same_module(x.l1.domain, x.p1) &&
                 same_module(x.l1.codomain, x.p0) && x.anchor.size() == n0;
    rep.add("lie2.shape", shape);
    if (!shape) return rep;

    auto b0 = [&](size_t i) { return Element::basis(x.p0, i); };
    auto b1 = [&](size_t l) { return Element::basis(x.p1, l); };

    {
        bool ok = true;
        for (size_t i = 0; i < n0 && ok; ++i)
            for (size_t j = 0; j < n0 && ok; ++j)
                if (!(x.l2_00[i][j] + x.l2_00[j][i]).is_zero()) ok = false;
        rep.add("lie2.l2_antisymmetry", ok);
    }
    // (a) l1 l2(x,u) = l2(x, l1 u) and l2(l1 u, v) = l2(u, l1 v)
    {
        bool ok = true;
        std::string w;
        for (size_t i = 0; i < n0 && ok; ++i)
            for (size_t l = 0; l < n1 && ok; ++l) {
                Element lhs = x.l1.apply(x.l2_01[i][l]);
                Element rhs = x.l2_00_at(b0(i), x.l1.column(l));
                if (!(lhs == rhs)) {
                    ok = false;
                    w = "pair " + tstr({i, l});
                }
            }
        for (size_t l = 0; l < n1 && ok; ++l)
            for (size_t t = 0; t < n1 && ok; ++t) {
                Element lhs = x.l2_01_at(x.l1.column(l), b1(t));
                Element rhs = -x.l2_01_at(x.l1.column(t), b1(l));
                // l2(l1 u, v) = l2(u, l1 v) = -l2(l1 v, u)
                if (!(lhs == rhs)) {
                    ok = false;
                    w = "pair " + tstr({l, t});
                }
            }
        rep.add("lie2.a", ok, w);
    }
    // (b) l1 l3(x,y,z) = l2(x,l2(y,z)) + l2(z,l2(x,y)) + l2(y,l2(z,x))
    {
        bool ok = true;
        std::string w;
        for (size_t i = 0; i < n0 && ok; ++i)
            for (size_t j = 0; j < n0 && ok; ++j)
                for (size_t k = 0; k < n0 && ok; ++k) {
                    Element lhs = x.l1.apply(x.l3_at(b0(i), b0(j), b0(k)));
                    Element rhs = x.l2_00_at(b0(i), x.l2_00[j][k]) + x.l2_00_at(b0(k), x.l2_00[i][j]) +
                                  x.l2_00_at(b0(j), x.l2_00[k][i]);
                    if (!(lhs == rhs)) {
                        ok = false;
                        w = "triple " + tstr({i, j, k});
                    }
                }
        rep.add("lie2.b", ok, w);
    }
    // (c) l3(x,y,l1(u)) = l2(x,l2(y,u)) + l2(u,l2(x,y)) + l2(y,l2(u,x))
    {
        bool ok = true;
        std::string w;
        for (size_t i = 0; i < n0 && ok; ++i)
            for (size_t j = 0; j < n0 && ok; ++j)
                for (size_t l = 0; l < n1 && ok; ++l) {
                    Element lhs = x.l3_at(b0(i), b0(j), x.l1.column(l));
                    // l2(u, l2(x,y)) = -l2(l2(x,y), u)
                    Element rhs = x.l2_01_at(b0(i), x.l2_01[j][l]) - x.l2_01_at(x.l2_00[i][j], b1(l)) -
                                  x.l2_01_at(b0(j), x.l2_01[i][l]);
                    if (!(lhs == rhs)) {
                        ok = false;
                        w = "tuple " + tstr({i, j, l});
                    }
                }
        rep.add("lie2.c", ok, w);
    }
    // (d) the Jacobiator identity
    {
        bool ok = true;
        std::string w;
        for (size_t a = 0; a < n0 && ok; ++a)
            for (size_t b = 0; b < n0 && ok; ++b)
                for (size_t c = 0; c < n0 && ok; ++c)
                    for (size_t d = 0; d < n0 && ok; ++d) {
                        const size_t idx[4] = {a, b, c, d};
                        Element sum(x.p1);
                        for (int i = 0; i < 4; ++i) {
                            std::vector<Element> rest;
                            for (int t = 0; t < 4; ++t)
                                if (t != i) rest.push_back(b0(idx[t]));
                            Element term = x.l2_01_at(b0(idx[i]), x.l3_at(rest[0], rest[1], rest[2]));
                            sum += (i % 2 == 0) ? term : -term;
                        }
                        for (int i = 0; i < 4; ++i)
                            for (int j = i + 1; j < 4; ++j) {
                                std::vector<Element> rest;
                                for (int t = 0; t < 4; ++t)
                                    if (t != i && t != j) rest.push_back(b0(idx[t]));
                                sum += x.l3_at(x.l2_00[idx[i]][idx[j]], rest[0], rest[1]);
                            }
                        if (!sum.is_zero()) {
                            ok = false;
                            w = "tuple " + tstr({a, b, c, d});
                        }
                    }
        rep.add("lie2.d_jacobiator", ok, w);
    }
    // (iii) anchor law and (iv) theta o l1 = 0
    {
        bool ok = true;
        for (size_t i = 0; i < n0 && ok; ++i)
            for (size_t j = i + 1; j < n0 && ok; ++j) {
                VectorField lhs = VectorField::zero(x.p0->ring);
                for (size_t k = 0; k < n0; ++k)
                    if (!x.l2_00[i][j].coeffs[k].is_zero()) lhs = lhs + x.anchor[k].scaled(x.l2_00[i][j].coeffs[k]);
                if (!(lhs == vf_commutator(x.anchor[i], x.anchor[j]))) ok = false;
            }
        rep.add("lie2.iii_anchor_law", ok);
        bool ok2 = true;
        for (size_t l = 0; l < n1 && ok2; ++l) {
            VectorField v = VectorField::zero(x.p0->ring);
            for (size_t k = 0; k < n0; ++k)
                if (!x.l1.m[k][l].is_zero()) v = v + x.anchor[k].scaled(x.l1.m[k][l]);
            if (!v.is_zero()) ok2 = false;
        }
        rep.add("lie2.iv_anchor_kills_l1", ok2);
    }
    return rep;
}

Lie2Data sub_adjacent_2(const PreLie2Data& x) {
    Report chk = verify_prelie2(x);
    if (!chk.ok()) throw error("sub_adjacent_2: input fails verification: " + chk.first_failure()->id);
    Lie2Data out;
    out.p0 = x.p0;
    out.p1 = x.p1;
    out.l1 = x.m1;
    out.anchor = x.anchor;
    size_t n0 = x.p0->rank(), n1 = x.p1->rank();
    out.l2_00.assign(n0, std::vector<Element>(n0, Element::zero(x.p0)));
    out.l2_01.assign(n0, std::vector<Element>(n1, Element::zero(x.p1)));
    for (size_t i = 0; i < n0; ++i)
        for (size_t j = 0; j < n0; ++j) out.l2_00[i][j] = x.m2_00[i][j] - x.m2_00[j][i];
    for (size_t i = 0; i < n0; ++i)
        for (size_t l = 0; l < n1; ++l) out.l2_01[i][l] = x.m2_01[i][l] - x.m2_10[l][i];
    // l3(X,Y,Z) = m3(X,Y,Z) + m3(Z,X,Y) + m3(Y,Z,X)
    for (size_t i = 0; i < n0; ++i)
        for (size_t j = i + 1; j < n0; ++j)
            for (size_t k = j + 1; k < n0; ++k) {
                Element v = x.m3.value({(int)i, (int)j, (int)k}) + x.m3.value({(int)k, (int)i, (int)j}) +
                            x.m3.value({(int)j, (int)k, (int)i});
                if (!v.is_zero()) out.l3[{(int)i, (int)j, (int)k}] = v;
            }
    return out;
}

CrossedModuleData strict_to_crossed(const PreLie2Data& x) {
    Report chk = verify_prelie2(x);
    if (!chk.ok()) throw error("strict_to_crossed: input fails verification");
    if (!x.m3.is_zero()) throw error("strict_to_crossed: input is not strict (m3 != 0)");
    CrossedModuleData cm;
    cm.base = x.degree0_algebra();
    cm.top = x.p1;
    size_t n0 = x.p0->rank(), n1 = x.p1->rank();
    cm.top_product.assign(n1, std::vector<Element>(n1, Element::zero(x.p1)));
    for (size_t k = 0; k < n1; ++k)
        for (size_t l = 0; l < n1; ++l)
            cm.top_product[k][l] = x.m2_01_at(x.m1.column(k), Element::basis(x.p1, l));
    cm.boundary = x.m1;
    cm.rep.algebra = cm.base;
    cm.rep.target = x.p1;
    for (size_t i = 0; i < n0; ++i) {
        std::vector<Element> rcols, mcols;
        for (size_t l = 0; l < n1; ++l) {
            rcols.push_back(x.m2_01[i][l]);
            mcols.push_back(x.m2_10[l][i]);
        }
        cm.rep.rho.emplace_back(LinearMap::from_columns(x.p1, x.p1, rcols), x.anchor[i]);
        cm.rep.mu.push_back(LinearMap::from_columns(x.p1, x.p1, mcols));
    }
    return cm;
}

PreLie2Data crossed_to_strict(const CrossedModuleData& cm) {
    Report chk = verify_crossed_module(cm);
    if (!chk.ok()) throw error("crossed_to_strict: input fails verification");
    PreLie2Data x = PreLie2Data::empty(cm.base.module, cm.top);
    x.m1 = cm.boundary;
    x.m2_00 = cm.base.product;
    x.anchor = cm.base.anchor;
    size_t n0 = cm.base.module->rank(), n1 = cm.top->rank();
    for (size_t i = 0; i < n0; ++i)
        for (size_t l = 0; l < n1; ++l) {
            x.m2_01[i][l] = cm.rep.rho[i].apply(Element::basis(cm.top, l));
            x.m2_10[l][i] = cm.rep.mu[i].apply(Element::basis(cm.top, l));
        }
    return x;
}

SkeletalTriple skeletal_to_triple(const PreLie2Data& x) {
    Report chk = verify_prelie2(x);
    if (!chk.ok()) throw error("skeletal_to_triple: input fails verification");
    if (!x.m1.is_zero()) throw error("skeletal_to_triple: input is not skeletal (m1 != 0)");
    SkeletalTriple out;
    out.algebra = x.degree0_algebra();
    out.rep.algebra = out.algebra;
    out.rep.target = x.p1;
    size_t n0 = x.p0->rank(), n1 = x.p1->rank();
    for (size_t i = 0; i < n0; ++i) {
        std::vector<Element> rcols, mcols;
        for (size_t l = 0; l < n1; ++l) {
            rcols.push_back(x.m2_01[i][l]);
            mcols.push_back(x.m2_10[l][i]);
        }
        out.rep.rho.emplace_back(LinearMap::from_columns(x.p1, x.p1, rcols), x.anchor[i]);
        out.rep.mu.push_back(LinearMap::from_columns(x.p1, x.p1, mcols));
    }
    out.cocycle = x.m3;
    return out;
}

PreLie2Data triple_to_skeletal(const PreLieRinehartData& alg, const Representation& rep, const Cochain& m3) {
    Report c1 = verify_prelie_rinehart(alg);
    if (!c1.ok()) throw error("triple_to_skeletal: algebra fails verification");
    Report c2 = check_representation(rep);
    if (!c2.ok()) throw error("triple_to_skeletal: representation fails verification");
    PreLie2Data x = PreLie2Data::empty(alg.module, rep.target);
    x.m2_00 = alg.product;
    x.anchor = alg.anchor;
    size_t n0 = alg.module->rank(), n1 = rep.target->rank();
    for (size_t i = 0; i < n0; ++i)
        for (size_t l = 0; l < n1; ++l) {
            x.m2_01[i][l] = rep.rho[i].apply(Element::basis(rep.target, l));
            x.m2_10[l][i] = rep.mu[i].apply(Element::basis(rep.target, l));
        }
    x.m3 = m3;
    return x;
}

bool twoalg_equal(const PreLie2Data& a, const PreLie2Data& b) {
    if (!same_module(a.p0, b.p0) || !same_module(a.p1, b.p1)) return false;
    if (!(a.m1 == b.m1)) return false;
    for (size_t i = 0; i < a.p0->rank(); ++i)
        for (size_t j = 0; j < a.p0->rank(); ++j)
            if (!(a.m2_00[i][j] == b.m2_00[i][j])) return false;
    for (size_t i = 0; i < a.p0->rank(); ++i)
        for (size_t l = 0; l < a.p1->rank(); ++l)
            if (!(a.m2_01[i][l] == b.m2_01[i][l])) return false;
    for (size_t l = 0; l < a.p1->rank(); ++l)
        for (size_t i = 0; i < a.p0->rank(); ++i)
            if (!(a.m2_10[l][i] == b.m2_10[l][i])) return false;
    if (!(a.m3 == b.m3)) return false;
    for (size_t i = 0; i < a.p0->rank(); ++i)
        if (!(a.anchor[i] == b.anchor[i])) return false;
    return true;
}

} // namespace plrk
