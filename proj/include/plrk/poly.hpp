#ifndef PLRK_POLY_HPP
#define PLRK_POLY_HPP

#include "plrk/rational.hpp"

#include <map>
#include <memory>
#include <string>
#include <vector>

namespace plrk {

// The coefficient algebra A: a (Laurent-)polynomial ring over Q.
struct PolyRing {
    std::vector<std::string> vars;
    bool laurent = false;

    size_t nvars() const { return vars.size(); }
    int var_index(const std::string& name) const;
    bool operator==(const PolyRing& o) const { return vars == o.vars && laurent == o.laurent; }
};

using RingPtr = std::shared_ptr<const PolyRing>;

RingPtr make_ring(std::vector<std::string> vars, bool laurent = false);
inline bool same_ring(const RingPtr& a, const RingPtr& b) { return a == b || *a == *b; }
void require_same_ring(const RingPtr& a, const RingPtr& b, const char* where);

using Expvec = std::vector<int>;

// Graded-lexicographic term order (total degree, then lex on exponents).
struct GrlexLess {
    bool operator()(const Expvec& a, const Expvec& b) const;
};

// Sparse multivariate polynomial with exact rational coefficients.
// Invariants: no stored zero coefficients; exponent length = nvars;
// exponents nonnegative unless the ring is Laurent.
class Poly {
  public:
    Poly() = default;
    explicit Poly(RingPtr ring) : ring_(std::move(ring)) {}

    static Poly zero(RingPtr ring) { return Poly(std::move(ring)); }
    static Poly constant(RingPtr ring, const Rational& c);
    static Poly one(RingPtr ring) { return constant(std::move(ring), Rational(1)); }
    static Poly variable(RingPtr ring, size_t i, int exponent = 1);
    static Poly monomial(RingPtr ring, Expvec e, const Rational& c);

    const RingPtr& ring() const { return ring_; }
    const std::map<Expvec, Rational, GrlexLess>& terms() const { return terms_; }

    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const;
    Rational constant_value() const; // throws unless constant
    int total_degree() const;        // 0 for the zero polynomial

    Poly operator+(const Poly& o) const;
    Poly operator-(const Poly& o) const;
    Poly operator-() const;
    Poly operator*(const Poly& o) const;
    Poly& operator+=(const Poly& o);
    Poly& operator-=(const Poly& o);
    bool operator==(const Poly& o) const;
    bool operator!=(const Poly& o) const { return !(*this == o); }

    Poly scaled(const Rational& c) const;
    Poly pow(unsigned k) const;
    Poly derivative(size_t var) const;

    // Canonical text form: grlex-descending terms joined by " + ",
    // each "c*x^a*..." with unit exponents elided.
    std::string str() const;
    static Poly parse(const RingPtr& ring, const std::string& text);

    void add_term(const Expvec& e, const Rational& c); // canonicalizing

  private:
    RingPtr ring_;
    std::map<Expvec, Rational, GrlexLess> terms_;
};

} // namespace plrk

#endif
