#include "plrk/poly.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace plrk {

int PolyRing::var_index(const std::string& name) const {
    for (size_t i = 0; i < vars.size(); ++i)
        if (vars[i] == name) return static_cast<int>(i);
    return -1;
}

RingPtr make_ring(std::vector<std::string> vars, bool laurent) {
    for (size_t i = 0; i < vars.size(); ++i)
        for (size_t j = i + 1; j < vars.size(); ++j)
            if (vars[i] == vars[j]) throw error("ring: duplicate variable '" + vars[i] + "'");
    auto r = std::make_shared<PolyRing>();
    r->vars = std::move(vars);
    r->laurent = laurent;
    return r;
}

void require_same_ring(const RingPtr& a, const RingPtr& b, const char* where) {
    if (!same_ring(a, b)) throw error(std::string(where) + ": ring mismatch");
}

bool GrlexLess::operator()(const Expvec& a, const Expvec& b) const {
    int da = std::accumulate(a.begin(), a.end(), 0);
    int db = std::accumulate(b.begin(), b.end(), 0);
    if (da != db) return da < db;
    return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
}

Poly Poly::constant(RingPtr ring, const Rational& c) {
    Poly p(std::move(ring));
    p.add_term(Expvec(p.ring_->nvars(), 0), c);
    return p;
}

Poly Poly::variable(RingPtr ring, size_t i, int exponent) {
    if (i >= ring->nvars()) throw error("Poly::variable: index out of range");
    Poly p(std::move(ring));
    Expvec e(p.ring_->nvars(), 0);
    e[i] = exponent;
    p.add_term(e, Rational(1));
    return p;
}

Poly Poly::monomial(RingPtr ring, Expvec e, const Rational& c) {
    Poly p(std::move(ring));
    p.add_term(e, c);
    return p;
}

void Poly::add_term(const Expvec& e, const Rational& c) {
    if (e.size() != ring_->nvars()) throw error("Poly: exponent arity mismatch");
    if (!ring_->laurent)
        for (int x : e)
            if (x < 0) throw error("Poly: negative exponent in a non-Laurent ring");
    if (c.is_zero()) return;
    auto it = terms_.find(e);
    if (it == terms_.end()) {
        terms_.emplace(e, c);
    } else {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

bool Poly::is_constant() const {
    if (terms_.empty()) return true;
    if (terms_.size() > 1) return false;
    const auto& e = terms_.begin()->first;
    return std::all_of(e.begin(), e.end(), [](int x) { return x == 0; });
}

Rational Poly::constant_value() const {
    if (terms_.empty()) return Rational(0);
    if (!is_constant()) throw error("Poly: not a constant");
    return terms_.begin()->second;
}

int Poly::total_degree() const {
    int d = 0;
    for (const auto& [e, c] : terms_) d = std::max(d, std::accumulate(e.begin(), e.end(), 0));
    return d;
}

Poly Poly::operator+(const Poly& o) const {
    require_same_ring(ring_, o.ring_, "poly add");
    Poly r = *this;
    for (const auto& [e, c] : o.terms_) r.add_term(e, c);
    return r;
}

Poly& Poly::operator+=(const Poly& o) {
    require_same_ring(ring_, o.ring_, "poly add");
    for (const auto& [e, c] : o.terms_) add_term(e, c);
    return *this;
}

Poly& Poly::operator-=(const Poly& o) {
    require_same_ring(ring_, o.ring_, "poly sub");
    for (const auto& [e, c] : o.terms_) add_term(e, -c);
    return *this;
}

Poly Poly::operator-(const Poly& o) const {
    Poly r = *this;
    r -= o;
    return r;
}

Poly Poly::operator-() const {
    Poly r(ring_);
    for (const auto& [e, c] : terms_) r.terms_.emplace(e, -c);
    return r;
}

Poly Poly::operator*(const Poly& o) const {
    require_same_ring(ring_, o.ring_, "poly mul");
    Poly r(ring_);
    const size_t n = ring_->nvars();
    for (const auto& [ea, ca] : terms_) {
        for (const auto& [eb, cb] : o.terms_) {
            Expvec e(n);
            for (size_t i = 0; i < n; ++i) e[i] = ea[i] + eb[i];
            r.add_term(e, ca * cb);
        }
    }
    return r;
}

bool Poly::operator==(const Poly& o) const {
    if (!same_ring(ring_, o.ring_)) return false;
    if (terms_.size() != o.terms_.size()) return false;
    auto it = terms_.begin();
    auto jt = o.terms_.begin();
    for (; it != terms_.end(); ++it, ++jt)
        if (it->first != jt->first || !(it->second == jt->second)) return false;
    return true;
}

Poly Poly::scaled(const Rational& c) const {
    Poly r(ring_);
    if (c.is_zero()) return r;
    for (const auto& [e, k] : terms_) r.terms_.emplace(e, k * c);
    return r;
}

Poly Poly::pow(unsigned k) const {
    Poly r = Poly::one(ring_);
    for (unsigned i = 0; i < k; ++i) r = r * *this;
    return r;
}

Poly Poly::derivative(size_t var) const {
    if (var >= ring_->nvars()) throw error("Poly::derivative: index out of range");
    Poly r(ring_);
    for (const auto& [e, c] : terms_) {
        if (e[var] == 0) continue;
        Expvec d = e;
        d[var] -= 1;
        r.add_term(d, c * Rational(e[var]));
    }
    return r;
}

std::string Poly::str() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    // grlex-descending
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        if (!first) os << " + ";
        first = false;
        os << it->second.str();
        for (size_t i = 0; i < it->first.size(); ++i) {
            int a = it->first[i];
            if (a == 0) continue;
            os << "*" << ring_->vars[i];
            if (a != 1) os << "^" << a;
        }
    }
    return os.str();
}

namespace {

// One term: [coeff "*"] var ["^" exp] ("*" var ["^" exp])*
Poly parse_term(const RingPtr& ring, const std::string& term) {
    std::vector<std::string> factors;
    std::string cur;
    for (char ch : term) {
        if (ch == '*') {
            factors.push_back(cur);
            cur.clear();
        } else if (!isspace(static_cast<unsigned char>(ch))) {
            cur.push_back(ch);
        }
    }
    factors.push_back(cur);
    Rational coeff(1);
    Expvec e(ring->nvars(), 0);
    bool saw_factor = false;
    for (const auto& f : factors) {
        if (f.empty()) throw error("Poly::parse: empty factor in '" + term + "'");
        if (isdigit(static_cast<unsigned char>(f[0])) || f[0] == '-' || f[0] == '+') {
            coeff = coeff * Rational::parse(f);
            saw_factor = true;
            continue;
        }
        auto caret = f.find('^');
        std::string name = f.substr(0, caret);
        int idx = ring->var_index(name);
        if (idx < 0) throw error("Poly::parse: unknown variable '" + name + "'");
        int exp = 1;
        if (caret != std::string::npos) exp = std::stoi(f.substr(caret + 1));
        e[idx] += exp;
        saw_factor = true;
    }
    if (!saw_factor) throw error("Poly::parse: empty term");
    return Poly::monomial(ring, e, coeff);
}

} // namespace

Poly Poly::parse(const RingPtr& ring, const std::string& text) {
    Poly r(ring);
    std::string term;
    size_t i = 0;
    auto flush = [&]() {
        // trim
        size_t a = term.find_first_not_of(" \t");
        if (a == std::string::npos) throw error("Poly::parse: empty term in '" + text + "'");
        size_t b = term.find_last_not_of(" \t");
        std::string t = term.substr(a, b - a + 1);
        if (t != "0") r += parse_term(ring, t);
        term.clear();
    };
    while (i < text.size()) {
        // '+' or '-' separates terms when preceded by whitespace or at a term boundary;
        // the canonical form always uses " + " with signs folded into coefficients.
        if (text[i] == '+' && i > 0 && text[i - 1] == ' ') {
            flush();
            ++i;
            continue;
        }
        if (text[i] == '-' && i > 0 && text[i - 1] == ' ' && i + 1 < text.size() && text[i + 1] == ' ') {
            flush();
            term = "-1*";
            i += 2;
            continue;
        }
        term.push_back(text[i]);
        ++i;
    }
    flush();
    return r;
}

} // namespace plrk
