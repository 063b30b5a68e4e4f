#include "plrk/cohomology.hpp"

#include "plrk/qlinalg.hpp"

#include <algorithm>
#include <functional>
#include <sstream>

namespace plrk {

namespace {

std::string key_str(const std::vector<int>& t) {
    std::ostringstream os;
    os << "(";
    for (size_t i = 0; i < t.size(); ++i) os << (i ? "," : "") << t[i];
    os << ")";
    return os.str();
}

// sort wedge indices ascending, tracking the permutation sign; false on repeat
bool sort_wedge(std::vector<int>& idx, int& sign) {
    sign = 1;
    for (size_t i = 0; i + 1 < idx.size(); ++i)
        for (size_t j = 0; j + 1 < idx.size() - i; ++j) {
            if (idx[j] == idx[j + 1]) return false;
            if (idx[j] > idx[j + 1]) {
                std::swap(idx[j], idx[j + 1]);
                sign = -sign;
            }
        }
    for (size_t i = 0; i + 1 < idx.size(); ++i)
        if (idx[i] == idx[i + 1]) return false;
    return true;
}

} // namespace

DerivationPair Representation::rho_at(const Element& x) const {
    require_same_module(x.module, algebra.module, "rho_at");
    DerivationPair d = DerivationPair::zero(target);
    for (size_t i = 0; i < rho.size(); ++i)
        if (!x.coeffs[i].is_zero()) d = d + rho[i].scaled(x.coeffs[i]);
    return d;
}

LinearMap Representation::mu_at(const Element& x) const {
    require_same_module(x.module, algebra.module, "mu_at");
    LinearMap f(target, target);
    for (size_t i = 0; i < mu.size(); ++i)
        if (!x.coeffs[i].is_zero()) f = f + mu[i].scaled(x.coeffs[i]);
    return f;
}

DerivationPair LieRepresentation::rho_at(const Element& x) const {
    require_same_module(x.module, algebra.module, "rho_at");
    DerivationPair d = DerivationPair::zero(target);
    for (size_t i = 0; i < rho.size(); ++i)
        if (!x.coeffs[i].is_zero()) d = d + rho[i].scaled(x.coeffs[i]);
    return d;
}

Report check_representation(const Representation& rep) {
    Report r;
    size_t n = rep.algebra.module->rank();
    bool shape = rep.rho.size() == n && rep.mu.size() == n;
    for (const auto& d : rep.rho)
        if (!same_module(d.module(), rep.target)) shape = false;
    for (const auto& f : rep.mu)
        if (!same_module(f.domain, rep.target) || !same_module(f.codomain, rep.target)) shape = false;
    r.add("rep.shape", shape);
    if (!shape) return r;

    // symbols match the anchor
    bool sym = true;
    for (size_t i = 0; i < n; ++i)
        if (!(rep.rho[i].symbol == rep.algebra.anchor[i])) sym = false;
    r.add("rep.symbol_is_anchor", sym);

    // rho is a homomorphism to the gauge algebra w.r.t. the sub-adjacent bracket
    bool hom = true;
    std::string w1;
    for (size_t i = 0; i < n && hom; ++i)
        for (size_t j = i + 1; j < n && hom; ++j) {
            Element br = rep.algebra.product[i][j] - rep.algebra.product[j][i];
            DerivationPair lhs = rep.rho_at(br);
            DerivationPair rhs = derivation_pair_commutator(rep.rho[i], rep.rho[j]);
            if (!(lhs == rhs)) {
                hom = false;
                w1 = "pair " + key_str({(int)i, (int)j});
            }
        }
    r.add("rep.gauge_homomorphism", hom, w1);

    // rho(X) mu(Y) - mu(Y) rho(X) = mu(X.Y) - mu(Y) mu(X) on basis pairs
    bool cond2 = true;
    std::string w2;
    for (size_t i = 0; i < n && cond2; ++i)
        for (size_t j = 0; j < n && cond2; ++j) {
            for (size_t k = 0; k < rep.target->rank() && cond2; ++k) {
                Element ek = Element::basis(rep.target, k);
                Element lhs = rep.rho[i].apply(rep.mu[j].apply(ek)) - rep.mu[j].apply(rep.rho[i].apply(ek));
                Element rhs = rep.mu_at(rep.algebra.product[i][j]).apply(ek) - rep.mu[j].apply(rep.mu[i].apply(ek));
                if (!(lhs == rhs)) {
                    cond2 = false;
                    w2 = "pair " + key_str({(int)i, (int)j}) + " on basis " + std::to_string(k) + ": difference " +
                         (lhs - rhs).str();
                }
            }
        }
    r.add("rep.condition2", cond2, w2);
    return r;
}

Report check_lie_representation(const LieRepresentation& rep) {
    Report r;
    size_t n = rep.algebra.module->rank();
    bool shape = rep.rho.size() == n;
    r.add("lie_rep.shape", shape);
    if (!shape) return r;
    bool sym = true;
    for (size_t i = 0; i < n; ++i)
        if (!(rep.rho[i].symbol == rep.algebra.anchor[i])) sym = false;
    r.add("lie_rep.symbol_is_anchor", sym);
    bool hom = true;
    std::string w;
    for (size_t i = 0; i < n && hom; ++i)
        for (size_t j = i + 1; j < n && hom; ++j) {
            DerivationPair lhs = rep.rho_at(rep.algebra.bracket[i][j]);
            DerivationPair rhs = derivation_pair_commutator(rep.rho[i], rep.rho[j]);
            if (!(lhs == rhs)) {
                hom = false;
                w = "pair " + key_str({(int)i, (int)j});
            }
        }
    r.add("lie_rep.gauge_homomorphism", hom, w);
    return r;
}

Representation lr_representation(const PreLieRinehartData& alg) {
    Representation rep;
    rep.algebra = alg;
    rep.target = alg.module;
    size_t n = alg.module->rank();
    for (size_t i = 0; i < n; ++i) {
        std::vector<Element> lcols, rcols;
        for (size_t k = 0; k < n; ++k) {
            lcols.push_back(alg.product[i][k]); // L_{e_i} e_k
            rcols.push_back(alg.product[k][i]); // R_{e_i} e_k = e_k . e_i
        }
        rep.rho.emplace_back(LinearMap::from_columns(alg.module, alg.module, lcols), alg.anchor[i]);
        rep.mu.push_back(LinearMap::from_columns(alg.module, alg.module, rcols));
    }
    return rep;
}

Representation anchor_representation(const PreLieRinehartData& alg) {
    Representation rep;
    rep.algebra = alg;
    rep.target = make_module(alg.module->ring, {"1"});
    size_t n = alg.module->rank();
    for (size_t i = 0; i < n; ++i) {
        rep.rho.emplace_back(LinearMap(rep.target, rep.target), alg.anchor[i]);
        rep.mu.emplace_back(rep.target, rep.target);
    }
    return rep;
}

Representation zero_representation(const PreLieRinehartData& alg, ModulePtr target) {
    Representation rep;
    rep.algebra = alg;
    rep.target = std::move(target);
    size_t n = alg.module->rank();
    for (size_t i = 0; i < n; ++i) {
        rep.rho.emplace_back(LinearMap(rep.target, rep.target), alg.anchor[i]);
        rep.mu.emplace_back(rep.target, rep.target);
    }
    return rep;
}

Cochain Cochain::zero(CochainKind kind, int degree, ModulePtr source, ModulePtr target) {
    if (degree < 1 && kind == CochainKind::prelie) throw error("Cochain: prelie complex starts at degree 1");
    if (degree < 1) throw error("Cochain: store degree-0 lie cochains as Elements");
    Cochain c;
    c.kind = kind;
    c.degree = degree;
    c.source = std::move(source);
    c.target = std::move(target);
    return c;
}

std::vector<std::vector<int>> Cochain::keys(CochainKind kind, int degree, size_t rank) {
    std::vector<std::vector<int>> out;
    int wedge = kind == CochainKind::prelie ? degree - 1 : degree;
    std::vector<int> idx(wedge);
    // enumerate strictly increasing wedge tuples
    std::function<void(int, int)> rec = [&](int pos, int start) {
        if (pos == wedge) {
            if (kind == CochainKind::prelie) {
                for (size_t j = 0; j < rank; ++j) {
                    auto t = idx;
                    t.push_back(static_cast<int>(j));
                    out.push_back(t);
                }
            } else {
                out.push_back(idx);
            }
            return;
        }
        for (int v = start; v < static_cast<int>(rank); ++v) {
            idx[pos] = v;
            rec(pos + 1, v + 1);
        }
    };
    rec(0, 0);
    return out;
}

Element Cochain::value(std::vector<int> tuple) const {
    if (static_cast<int>(tuple.size()) != degree) throw error("Cochain::value: arity mismatch");
    int last = -1;
    std::vector<int> wedge;
    if (kind == CochainKind::prelie) {
        last = tuple.back();
        wedge.assign(tuple.begin(), tuple.end() - 1);
    } else {
        wedge = tuple;
    }
    int sign = 1;
    if (!sort_wedge(wedge, sign)) return Element::zero(target);
    if (kind == CochainKind::prelie) wedge.push_back(last);
    auto it = values.find(wedge);
    if (it == values.end()) return Element::zero(target);
    return sign > 0 ? it->second : -it->second;
}

Element Cochain::eval(std::span<const Element> args) const {
    if (static_cast<int>(args.size()) != degree) throw error("Cochain::eval: arity mismatch");
    for (const auto& a : args) require_same_module(a.module, source, "Cochain::eval");
    size_t rank = source->rank();
    Element out(target);
    std::vector<int> tuple(degree);
    std::function<void(int, const Poly&)> rec = [&](int pos, const Poly& coeff) {
        if (coeff.is_zero()) return;
        if (pos == degree) {
            Element v = value(tuple);
            if (!v.is_zero()) out += v.scaled(coeff);
            return;
        }
        for (size_t t = 0; t < rank; ++t) {
            const Poly& c = args[pos].coeffs[t];
            if (c.is_zero()) continue;
            tuple[pos] = static_cast<int>(t);
            rec(pos + 1, pos == 0 ? c : coeff * c);
        }
    };
    rec(0, Poly::one(source->ring));
    return out;
}

void Cochain::set(std::vector<int> tuple, Element v) {
    require_same_module(v.module, target, "Cochain::set");
    if (static_cast<int>(tuple.size()) != degree) throw error("Cochain::set: arity mismatch");
    int wedge_len = kind == CochainKind::prelie ? degree - 1 : degree;
    for (int i = 0; i + 1 < wedge_len; ++i)
        if (tuple[i] >= tuple[i + 1]) throw error("Cochain::set: wedge tuple not strictly increasing");
    if (v.is_zero())
        values.erase(tuple);
    else
        values[std::move(tuple)] = std::move(v);
}

bool Cochain::is_zero() const {
    for (const auto& [k, v] : values)
        if (!v.is_zero()) return false;
    return true;
}

Cochain Cochain::operator+(const Cochain& o) const {
    if (kind != o.kind || degree != o.degree) throw error("Cochain add: shape mismatch");
    Cochain r = *this;
    for (const auto& [k, v] : o.values) {
        auto it = r.values.find(k);
        if (it == r.values.end())
            r.values.emplace(k, v);
        else {
            it->second += v;
            if (it->second.is_zero()) r.values.erase(it);
        }
    }
    return r;
}

Cochain Cochain::operator-(const Cochain& o) const { return *this + o.scaled(Rational(-1)); }

Cochain Cochain::scaled(const Rational& c) const {
    Cochain r = *this;
    if (c.is_zero()) {
        r.values.clear();
        return r;
    }
    for (auto& [k, v] : r.values) v = v.scaled(c);
    return r;
}

bool Cochain::operator==(const Cochain& o) const { return (*this - o).is_zero(); }

Element prelie_coboundary_eval(const Representation& rep, const Cochain& phi, std::span<const Element> args) {
    int n = phi.degree;
    if (static_cast<int>(args.size()) != n + 1) throw error("prelie_coboundary_eval: arity mismatch");
    Element out(phi.target);
    std::vector<Element> buf;
    buf.reserve(n);

    auto args_without = [&](int skip, bool include_last) {
        buf.clear();
        for (int t = 0; t < n; ++t)
            if (t != skip) buf.push_back(args[t]);
        if (include_last) buf.push_back(args[n]);
        return std::span<const Element>(buf);
    };

    for (int i = 0; i < n; ++i) {
        int sign = (i % 2 == 0) ? 1 : -1; // (-1)^{i+1} with 1-based i
        // rho(X_i) phi(..hat X_i.., X_{n+1})
        Element t1 = rep.rho_at(args[i]).apply(phi.eval(args_without(i, true)));
        // mu(X_{n+1}) phi(..hat X_i.., X_i)
        buf.clear();
        for (int t = 0; t < n; ++t)
            if (t != i) buf.push_back(args[t]);
        buf.push_back(args[i]);
        Element t2 = rep.mu_at(args[n]).apply(phi.eval(buf));
        // phi(..hat X_i.., X_i . X_{n+1})
        buf.back() = extend_product(rep.algebra, args[i], args[n]);
        Element t3 = phi.eval(buf);
        Element term = t1 + t2 - t3;
        out += (sign > 0) ? term : -term;
    }
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
            // (-1)^{i+j} with 1-based indices = (-1)^{i0+j0} with 0-based ones
            int sign = ((i + j) % 2 == 0) ? 1 : -1;
            buf.clear();
            buf.push_back(extend_product(rep.algebra, args[i], args[j]) - extend_product(rep.algebra, args[j], args[i]));
            for (int t = 0; t < n; ++t)
                if (t != i && t != j) buf.push_back(args[t]);
            buf.push_back(args[n]);
            Element term = phi.eval(buf);
            out += (sign > 0) ? term : -term;
        }
    return out;
}

Cochain prelie_coboundary(const Representation& rep, const Cochain& phi) {
    if (phi.kind != CochainKind::prelie) throw error("prelie_coboundary: wrong cochain kind");
    require_same_module(phi.source, rep.algebra.module, "prelie_coboundary");
    require_same_module(phi.target, rep.target, "prelie_coboundary");
    Cochain out = Cochain::zero(CochainKind::prelie, phi.degree + 1, phi.source, phi.target);
    for (auto& key : Cochain::keys(CochainKind::prelie, out.degree, phi.source->rank())) {
        std::vector<Element> args;
        args.reserve(key.size());
        for (int idx : key) args.push_back(Element::basis(phi.source, idx));
        Element v = prelie_coboundary_eval(rep, phi, args);
        if (!v.is_zero()) out.set(key, std::move(v));
    }
    return out;
}

Element lie_coboundary_eval(const LieRepresentation& rep, const Cochain& w, std::span<const Element> args) {
    int k = w.degree;
    if (static_cast<int>(args.size()) != k + 1) throw error("lie_coboundary_eval: arity mismatch");
    Element out(w.target);
    std::vector<Element> buf;
    for (int i = 0; i <= k; ++i) {
        int sign = (i % 2 == 0) ? 1 : -1;
        buf.clear();
        for (int t = 0; t <= k; ++t)
            if (t != i) buf.push_back(args[t]);
        Element term = rep.rho_at(args[i]).apply(w.eval(buf));
        out += (sign > 0) ? term : -term;
    }
    for (int i = 0; i <= k; ++i)
        for (int j = i + 1; j <= k; ++j) {
            int sign = ((i + j) % 2 == 0) ? 1 : -1;
            buf.clear();
            buf.push_back(extend_bracket(rep.algebra, args[i], args[j]));
            for (int t = 0; t <= k; ++t)
                if (t != i && t != j) buf.push_back(args[t]);
            Element term = w.eval(buf);
            out += (sign > 0) ? term : -term;
        }
    return out;
}

Cochain lie_coboundary(const LieRepresentation& rep, const Cochain& w) {
    if (w.kind != CochainKind::lie) throw error("lie_coboundary: wrong cochain kind");
    require_same_module(w.source, rep.algebra.module, "lie_coboundary");
    require_same_module(w.target, rep.target, "lie_coboundary");
    Cochain out = Cochain::zero(CochainKind::lie, w.degree + 1, w.source, w.target);
    for (auto& key : Cochain::keys(CochainKind::lie, out.degree, w.source->rank())) {
        std::vector<Element> args;
        for (int idx : key) args.push_back(Element::basis(w.source, idx));
        Element v = lie_coboundary_eval(rep, w, args);
        if (!v.is_zero()) out.set(key, std::move(v));
    }
    return out;
}

Cochain lie_coboundary_deg0(const LieRepresentation& rep, const Element& u) {
    require_same_module(u.module, rep.target, "lie_coboundary_deg0");
    Cochain out = Cochain::zero(CochainKind::lie, 1, rep.algebra.module, rep.target);
    for (size_t i = 0; i < rep.algebra.module->rank(); ++i) {
        Element v = rep.rho[i].apply(u);
        if (!v.is_zero()) out.set({static_cast<int>(i)}, std::move(v));
    }
    return out;
}

size_t c1_index(const Representation& rep, size_t j, size_t k) { return j * rep.target->rank() + k; }

LieRepresentation induced_rep_on_C1(const Representation& rep) {
    Report chk = check_representation(rep);
    if (!chk.ok()) throw error("induced_rep_on_C1: representation check failed: " + chk.first_failure()->id);
    size_t ne = rep.algebra.module->rank();
    size_t nt = rep.target->rank();
    std::vector<std::string> names;
    for (size_t j = 0; j < ne; ++j)
        for (size_t k = 0; k < nt; ++k)
            names.push_back("E[" + rep.algebra.module->basis[j] + "->" + rep.target->basis[k] + "]");
    LieRepresentation out;
    out.algebra = sub_adjacent(rep.algebra);
    out.target = make_module(rep.algebra.module->ring, std::move(names));

    for (size_t i = 0; i < ne; ++i) {
        std::vector<Element> cols;
        for (size_t j = 0; j < ne; ++j)
            for (size_t k = 0; k < nt; ++k) {
                // varrho(e_i)(psi_{jk}) evaluated on each basis e_l
                Element col(out.target);
                for (size_t l = 0; l < ne; ++l) {
                    Element psi_el = (l == j) ? Element::basis(rep.target, k) : Element::zero(rep.target);
                    Element v = rep.rho[i].apply(psi_el);
                    // mu(e_l) psi(e_i)
                    if (i == j) v += rep.mu[l].apply(Element::basis(rep.target, k));
                    // psi(e_i . e_l) = c_j eps_k for e_i.e_l = sum c_m e_m
                    const Poly& cj = rep.algebra.product[i][l].coeffs[j];
                    if (!cj.is_zero()) {
                        Element sub(rep.target);
                        sub.coeffs[k] = cj;
                        v = v - sub;
                    }
                    for (size_t m = 0; m < nt; ++m) col.coeffs[c1_index(rep, l, m)] += v.coeffs[m];
                }
                cols.push_back(col);
            }
        out.rho.emplace_back(LinearMap::from_columns(out.target, out.target, cols), rep.algebra.anchor[i]);
    }
    return out;
}

Cochain complex_iso_H(const Representation& rep, const Cochain& psi) {
    if (psi.kind != CochainKind::lie) throw error("complex_iso_H: expects a lie cochain");
    size_t nt = rep.target->rank();
    size_t ne = rep.algebra.module->rank();
    if (psi.target->rank() != ne * nt) throw error("complex_iso_H: value module is not C^1(E, target)");
    Cochain out = Cochain::zero(CochainKind::prelie, psi.degree + 1, rep.algebra.module, rep.target);
    for (const auto& [key, val] : psi.values) {
        for (size_t j = 0; j < ne; ++j) {
            Element v(rep.target);
            for (size_t k = 0; k < nt; ++k) v.coeffs[k] = val.coeffs[c1_index(rep, j, k)];
            if (v.is_zero()) continue;
            auto t = key;
            t.push_back(static_cast<int>(j));
            out.set(t, std::move(v));
        }
    }
    return out;
}

Cochain complex_iso_H_inverse(const Representation& rep, const Cochain& phi) {
    if (phi.kind != CochainKind::prelie) throw error("complex_iso_H_inverse: expects a prelie cochain");
    if (phi.degree < 2) throw error("complex_iso_H_inverse: prelie degree must be >= 2");
    size_t nt = rep.target->rank();
    size_t ne = rep.algebra.module->rank();
    std::vector<std::string> names;
    for (size_t j = 0; j < ne; ++j)
        for (size_t k = 0; k < nt; ++k)
            names.push_back("E[" + rep.algebra.module->basis[j] + "->" + rep.target->basis[k] + "]");
    ModulePtr c1 = make_module(rep.algebra.module->ring, std::move(names));
    Cochain out = Cochain::zero(CochainKind::lie, phi.degree - 1, rep.algebra.module, c1);
    for (auto& key : Cochain::keys(CochainKind::lie, out.degree, ne)) {
        Element v(c1);
        for (size_t j = 0; j < ne; ++j) {
            auto t = key;
            t.push_back(static_cast<int>(j));
            Element val = phi.value(t);
            for (size_t k = 0; k < nt; ++k) v.coeffs[c1_index(rep, j, k)] = val.coeffs[k];
        }
        if (!v.is_zero()) out.set(key, std::move(v));
    }
    return out;
}

Report cocycle_check(const Representation& rep, const Cochain& c) {
    Report r;
    Cochain d = prelie_coboundary(rep, c);
    bool z = d.is_zero();
    std::string w;
    if (!z) {
        for (const auto& [k, v] : d.values)
            if (!v.is_zero()) {
                w = "delta c " + key_str(k) + " = " + v.str();
                break;
            }
    }
    r.add("cocycle", z, w);
    return r;
}

Report cocycle_check(const LieRepresentation& rep, const Cochain& c) {
    Report r;
    Cochain d = lie_coboundary(rep, c);
    bool z = d.is_zero();
    std::string w;
    if (!z) {
        for (const auto& [k, v] : d.values)
            if (!v.is_zero()) {
                w = "d c " + key_str(k) + " = " + v.str();
                break;
            }
    }
    r.add("cocycle", z, w);
    return r;
}

std::vector<Rational> cochain_to_qvec(const Cochain& c) {
    if (c.source->ring->nvars() != 0) throw error("cochain_to_qvec: base ring must be Q");
    auto ks = Cochain::keys(c.kind, c.degree, c.source->rank());
    std::vector<Rational> out;
    out.reserve(ks.size() * c.target->rank());
    for (const auto& k : ks) {
        auto it = c.values.find(k);
        for (size_t t = 0; t < c.target->rank(); ++t)
            out.push_back(it == c.values.end() ? Rational(0) : it->second.coeffs[t].constant_value());
    }
    return out;
}

Cochain qvec_to_cochain(CochainKind kind, int degree, const ModulePtr& source, const ModulePtr& target,
                        const std::vector<Rational>& v) {
    Cochain c = Cochain::zero(kind, degree, source, target);
    auto ks = Cochain::keys(kind, degree, source->rank());
    size_t pos = 0;
    for (const auto& k : ks) {
        Element e(target);
        for (size_t t = 0; t < target->rank(); ++t) e.coeffs[t] = Poly::constant(source->ring, v.at(pos++));
        if (!e.is_zero()) c.set(k, std::move(e));
    }
    return c;
}

namespace {

// matrix of delta: C^{deg} -> C^{deg+1} over Q, columns indexed by elementary cochains
QMatrix delta_matrix_field(const Representation& rep, int deg) {
    const ModulePtr& src = rep.algebra.module;
    auto dom_keys = Cochain::keys(CochainKind::prelie, deg, src->rank());
    auto cod_keys = Cochain::keys(CochainKind::prelie, deg + 1, src->rank());
    size_t nt = rep.target->rank();
    size_t rows = cod_keys.size() * nt;
    size_t cols = dom_keys.size() * nt;
    QMatrix m(rows, std::vector<Rational>(cols, Rational(0)));
    size_t col = 0;
    for (const auto& k : dom_keys)
        for (size_t t = 0; t < nt; ++t, ++col) {
            Cochain b = Cochain::zero(CochainKind::prelie, deg, src, rep.target);
            Element e(rep.target);
            e.coeffs[t] = Poly::one(src->ring);
            b.set(k, e);
            auto v = cochain_to_qvec(prelie_coboundary(rep, b));
            for (size_t r = 0; r < rows; ++r) m[r][col] = v[r];
        }
    return m;
}

} // namespace

std::optional<Cochain> coboundary_solve_field(const Representation& rep, const Cochain& c) {
    if (rep.algebra.module->ring->nvars() != 0)
        throw error("coboundary_solve_field: base ring must be Q (field case)");
    if (c.kind != CochainKind::prelie) throw error("coboundary_solve_field: expects a prelie cochain");
    if (c.degree < 2) throw error("coboundary_solve_field: nothing below degree 1");
    size_t dom_dim = Cochain::keys(CochainKind::prelie, c.degree - 1, c.source->rank()).size() * c.target->rank();
    size_t cod_dim = Cochain::keys(CochainKind::prelie, c.degree, c.source->rank()).size() * c.target->rank();
    if (cod_dim == 0)
        return qvec_to_cochain(CochainKind::prelie, c.degree - 1, c.source, c.target,
                               std::vector<Rational>(dom_dim, Rational(0)));
    QMatrix m = delta_matrix_field(rep, c.degree - 1);
    auto x = qsolve(m, cochain_to_qvec(c));
    if (!x) return std::nullopt;
    return qvec_to_cochain(CochainKind::prelie, c.degree - 1, c.source, c.target, *x);
}

std::vector<size_t> cohomology_dims_field(const Representation& rep, int n_max) {
    if (rep.algebra.module->ring->nvars() != 0)
        throw error("cohomology_dims_field: base ring must be Q (field case)");
    std::vector<size_t> dims;
    size_t nt = rep.target->rank();
    size_t prev_rank = 0; // rank of delta_{n-1}; the complex starts at C^1
    for (int n = 1; n <= n_max; ++n) {
        size_t dim_cn = Cochain::keys(CochainKind::prelie, n, rep.algebra.module->rank()).size() * nt;
        QMatrix m = delta_matrix_field(rep, n);
        size_t rank_n = qrank(m);
        dims.push_back(dim_cn - rank_n - prev_rank);
        prev_rank = rank_n;
    }
    return dims;
}

} // namespace plrk
