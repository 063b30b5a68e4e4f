#ifndef PLRK_RATIONAL_HPP
#define PLRK_RATIONAL_HPP

#include <gmpxx.h>
#include <stdexcept>
#include <string>

namespace plrk {

struct error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Exact rational number. Always canonical: gcd(|num|,den)=1, den>0, zero is 0/1.
class Rational {
  public:
    Rational() : v_(0) {}
    Rational(long n) : v_(n) {}
    Rational(long num, long den) : v_(num, den) {
        if (den == 0) throw error("Rational: zero denominator");
        v_.canonicalize();
    }

    static Rational parse(const std::string& s);

    const mpq_class& raw() const { return v_; }

    Rational operator-() const { return Rational(mpq_class(-v_)); }
    Rational operator+(const Rational& o) const { return Rational(mpq_class(v_ + o.v_)); }
    Rational operator-(const Rational& o) const { return Rational(mpq_class(v_ - o.v_)); }
    Rational operator*(const Rational& o) const { return Rational(mpq_class(v_ * o.v_)); }
    Rational operator/(const Rational& o) const {
        if (o.is_zero()) throw error("Rational: division by zero");
        return Rational(mpq_class(v_ / o.v_));
    }
    Rational& operator+=(const Rational& o) { v_ += o.v_; return *this; }
    Rational& operator-=(const Rational& o) { v_ -= o.v_; return *this; }
    Rational& operator*=(const Rational& o) { v_ *= o.v_; return *this; }

    bool operator==(const Rational& o) const { return v_ == o.v_; }
    bool operator!=(const Rational& o) const { return v_ != o.v_; }
    bool operator<(const Rational& o) const { return v_ < o.v_; }

    bool is_zero() const { return v_ == 0; }
    bool is_one() const { return v_ == 1; }
    int sign() const { return sgn(v_); }

    mpz_class numerator() const { return v_.get_num(); }
    mpz_class denominator() const { return v_.get_den(); }

    // "p" when integral, else "p/q".
    std::string str() const { return v_.get_str(); }

  private:
    explicit Rational(mpq_class v) : v_(std::move(v)) {}
    mpq_class v_;
};

inline Rational Rational::parse(const std::string& s) {
    mpq_class v;
    if (v.set_str(s, 10) != 0) throw error("Rational: cannot parse '" + s + "'");
    if (v.get_den() == 0) throw error("Rational: zero denominator in '" + s + "'");
    v.canonicalize();
    Rational r;
    r.v_ = v;
    return r;
}

} // namespace plrk

#endif
