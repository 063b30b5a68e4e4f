#include "plrk/module.hpp"

#include <sstream>

namespace plrk {

ModulePtr make_module(RingPtr ring, std::vector<std::string> basis) {
    for (size_t i = 0; i < basis.size(); ++i)
        for (size_t j = i + 1; j < basis.size(); ++j)
            if (basis[i] == basis[j]) throw error("module: duplicate basis name '" + basis[i] + "'");
    auto m = std::make_shared<FreeModule>();
    m->ring = std::move(ring);
    m->basis = std::move(basis);
    return m;
}

void require_same_module(const ModulePtr& a, const ModulePtr& b, const char* where) {
    if (!same_module(a, b)) throw error(std::string(where) + ": module mismatch");
}

Element::Element(ModulePtr m) : module(std::move(m)) {
    coeffs.assign(module->rank(), Poly::zero(module->ring));
}

Element::Element(ModulePtr m, std::vector<Poly> c) : module(std::move(m)), coeffs(std::move(c)) {
    if (coeffs.size() != module->rank()) throw error("Element: coefficient count != rank");
    for (const auto& p : coeffs) require_same_ring(module->ring, p.ring(), "Element");
}

Element Element::basis(ModulePtr m, size_t i) {
    Element e(std::move(m));
    if (i >= e.module->rank()) throw error("Element::basis: index out of range");
    e.coeffs[i] = Poly::one(e.module->ring);
    return e;
}

Element Element::operator+(const Element& o) const {
    require_same_module(module, o.module, "Element add");
    Element r(module);
    for (size_t i = 0; i < coeffs.size(); ++i) r.coeffs[i] = coeffs[i] + o.coeffs[i];
    return r;
}

Element& Element::operator+=(const Element& o) {
    require_same_module(module, o.module, "Element add");
    for (size_t i = 0; i < coeffs.size(); ++i) coeffs[i] += o.coeffs[i];
    return *this;
}

Element Element::operator-(const Element& o) const {
    require_same_module(module, o.module, "Element sub");
    Element r(module);
    for (size_t i = 0; i < coeffs.size(); ++i) r.coeffs[i] = coeffs[i] - o.coeffs[i];
    return r;
}

Element Element::operator-() const {
    Element r(module);
    for (size_t i = 0; i < coeffs.size(); ++i) r.coeffs[i] = -coeffs[i];
    return r;
}

Element Element::scaled(const Poly& a) const {
    Element r(module);
    for (size_t i = 0; i < coeffs.size(); ++i) r.coeffs[i] = coeffs[i] * a;
    return r;
}

Element Element::scaled(const Rational& c) const {
    Element r(module);
    for (size_t i = 0; i < coeffs.size(); ++i) r.coeffs[i] = coeffs[i].scaled(c);
    return r;
}

bool Element::operator==(const Element& o) const {
    if (!same_module(module, o.module)) return false;
    return coeffs == o.coeffs;
}

bool Element::is_zero() const {
    for (const auto& c : coeffs)
        if (!c.is_zero()) return false;
    return true;
}

std::string Element::str() const {
    std::ostringstream os;
    bool first = true;
    for (size_t i = 0; i < coeffs.size(); ++i) {
        if (coeffs[i].is_zero()) continue;
        if (!first) os << " + ";
        first = false;
        os << "(" << coeffs[i].str() << ")*" << module->basis[i];
    }
    if (first) return "0";
    return os.str();
}

LinearMap::LinearMap(ModulePtr dom, ModulePtr cod) : domain(std::move(dom)), codomain(std::move(cod)) {
    require_same_ring(domain->ring, codomain->ring, "LinearMap");
    m.assign(codomain->rank(), std::vector<Poly>(domain->rank(), Poly::zero(domain->ring)));
}

LinearMap LinearMap::identity(ModulePtr mod) {
    LinearMap f(mod, mod);
    for (size_t i = 0; i < mod->rank(); ++i) f.m[i][i] = Poly::one(mod->ring);
    return f;
}

LinearMap LinearMap::from_columns(ModulePtr dom, ModulePtr cod, const std::vector<Element>& cols) {
    if (cols.size() != dom->rank()) throw error("LinearMap::from_columns: column count != domain rank");
    LinearMap f(std::move(dom), std::move(cod));
    for (size_t j = 0; j < cols.size(); ++j) {
        require_same_module(cols[j].module, f.codomain, "LinearMap::from_columns");
        for (size_t i = 0; i < f.codomain->rank(); ++i) f.m[i][j] = cols[j].coeffs[i];
    }
    return f;
}

Element LinearMap::apply(const Element& u) const {
    require_same_module(u.module, domain, "LinearMap::apply");
    Element r(codomain);
    for (size_t i = 0; i < codomain->rank(); ++i)
        for (size_t j = 0; j < domain->rank(); ++j) {
            if (m[i][j].is_zero() || u.coeffs[j].is_zero()) continue;
            r.coeffs[i] += m[i][j] * u.coeffs[j];
        }
    return r;
}

Element LinearMap::column(size_t j) const {
    Element r(codomain);
    for (size_t i = 0; i < codomain->rank(); ++i) r.coeffs[i] = m[i][j];
    return r;
}

LinearMap LinearMap::compose(const LinearMap& inner) const {
    require_same_module(domain, inner.codomain, "LinearMap::compose");
    LinearMap r(inner.domain, codomain);
    for (size_t i = 0; i < codomain->rank(); ++i)
        for (size_t j = 0; j < inner.domain->rank(); ++j)
            for (size_t k = 0; k < domain->rank(); ++k) {
                if (m[i][k].is_zero() || inner.m[k][j].is_zero()) continue;
                r.m[i][j] += m[i][k] * inner.m[k][j];
            }
    return r;
}

LinearMap LinearMap::operator+(const LinearMap& o) const {
    require_same_module(domain, o.domain, "LinearMap add");
    require_same_module(codomain, o.codomain, "LinearMap add");
    LinearMap r(domain, codomain);
    for (size_t i = 0; i < m.size(); ++i)
        for (size_t j = 0; j < m[i].size(); ++j) r.m[i][j] = m[i][j] + o.m[i][j];
    return r;
}

LinearMap LinearMap::operator-(const LinearMap& o) const {
    require_same_module(domain, o.domain, "LinearMap sub");
    require_same_module(codomain, o.codomain, "LinearMap sub");
    LinearMap r(domain, codomain);
    for (size_t i = 0; i < m.size(); ++i)
        for (size_t j = 0; j < m[i].size(); ++j) r.m[i][j] = m[i][j] - o.m[i][j];
    return r;
}

LinearMap LinearMap::scaled(const Poly& a) const {
    LinearMap r(domain, codomain);
    for (size_t i = 0; i < m.size(); ++i)
        for (size_t j = 0; j < m[i].size(); ++j) r.m[i][j] = m[i][j] * a;
    return r;
}

bool LinearMap::operator==(const LinearMap& o) const {
    return same_module(domain, o.domain) && same_module(codomain, o.codomain) && m == o.m;
}

bool LinearMap::is_zero() const {
    for (const auto& row : m)
        for (const auto& p : row)
            if (!p.is_zero()) return false;
    return true;
}

DerivationPair::DerivationPair(LinearMap lin, VectorField sym) : linear(std::move(lin)), symbol(std::move(sym)) {
    require_same_module(linear.domain, linear.codomain, "DerivationPair");
    require_same_ring(linear.domain->ring, symbol.ring, "DerivationPair");
}

DerivationPair DerivationPair::zero(const ModulePtr& m) {
    return DerivationPair(LinearMap(m, m), VectorField::zero(m->ring));
}

Element DerivationPair::apply(const Element& u) const {
    require_same_module(u.module, module(), "DerivationPair::apply");
    // D(sum a_m e_m) = sum a_m D(e_m) + symbol(a_m) e_m
    Element r(module());
    for (size_t j = 0; j < u.coeffs.size(); ++j) {
        const Poly& a = u.coeffs[j];
        if (a.is_zero()) continue;
        for (size_t i = 0; i < r.coeffs.size(); ++i)
            if (!linear.m[i][j].is_zero()) r.coeffs[i] += linear.m[i][j] * a;
        r.coeffs[j] += symbol.apply(a);
    }
    return r;
}

DerivationPair DerivationPair::operator+(const DerivationPair& o) const {
    return DerivationPair(linear + o.linear, symbol + o.symbol);
}

DerivationPair DerivationPair::operator-(const DerivationPair& o) const {
    return DerivationPair(linear - o.linear, symbol - o.symbol);
}

DerivationPair DerivationPair::scaled(const Poly& a) const {
    return DerivationPair(linear.scaled(a), symbol.scaled(a));
}

bool DerivationPair::operator==(const DerivationPair& o) const {
    return linear == o.linear && symbol == o.symbol;
}

Element apply_derivation_pair(const DerivationPair& dp, const Poly& a, const Element& u) {
    require_same_ring(a.ring(), dp.symbol.ring, "apply_derivation_pair");
    return dp.apply(u).scaled(a) + u.scaled(dp.symbol.apply(a));
}

DerivationPair derivation_pair_commutator(const DerivationPair& a, const DerivationPair& b) {
    require_same_module(a.module(), b.module(), "derivation_pair_commutator");
    const ModulePtr& mod = a.module();
    std::vector<Element> cols;
    cols.reserve(mod->rank());
    for (size_t k = 0; k < mod->rank(); ++k) {
        Element ek = Element::basis(mod, k);
        cols.push_back(a.apply(b.apply(ek)) - b.apply(a.apply(ek)));
    }
    return DerivationPair(LinearMap::from_columns(mod, mod, cols), vf_commutator(a.symbol, b.symbol));
}

} // namespace plrk
