#ifndef XLAG_RATIONAL_HPP
#define XLAG_RATIONAL_HPP

#include <gmpxx.h>

#include <cmath>
#include <compare>
#include <stdexcept>
#include <string>

namespace xlag {

// Arbitrary-precision rational, always reduced, denominator > 0.
// Thin value wrapper over GMP's mpq_class so the rest of the code never
// touches GMP expression templates directly.
class Rational {
  public:
    Rational() : v_(0) {}
    Rational(long n) : v_(n) {}  // NOLINT(google-explicit-constructor)
    Rational(long num, long den) {
        if (den == 0) throw std::invalid_argument("Rational: zero denominator");
        v_ = mpq_class(num, den);
        v_.canonicalize();
    }
    explicit Rational(const mpq_class& q) : v_(q) { v_.canonicalize(); }

    // Accepts "p", "p/q", optional leading '-'. Throws on malformed input
    // and on zero denominators ("1/0").
    static Rational from_string(const std::string& s) {
        mpq_class q;
        if (s.empty() || q.set_str(s, 10) != 0)
            throw std::invalid_argument("Rational: malformed rational '" + s + "'");
        if (q.get_den() == 0)
            throw std::invalid_argument("Rational: zero denominator in '" + s + "'");
        q.canonicalize();
        return Rational(q);
    }

    // exact binary expansion of d as a fraction; d must be finite
    static Rational from_double(double d) {
        if (!std::isfinite(d)) throw std::invalid_argument("Rational::from_double: not finite");
        return Rational(mpq_class(d));
    }

    std::string str() const { return v_.get_str(); }
    double to_double() const { return v_.get_d(); }

    int sign() const { return sgn(v_); }
    bool is_zero() const { return sgn(v_) == 0; }
    bool is_integer() const { return v_.get_den() == 1; }

    Rational operator-() const { return Rational(mpq_class(-v_)); }
    Rational& operator+=(const Rational& o) { v_ += o.v_; return *this; }
    Rational& operator-=(const Rational& o) { v_ -= o.v_; return *this; }
    Rational& operator*=(const Rational& o) { v_ *= o.v_; return *this; }
    Rational& operator/=(const Rational& o) {
        if (o.is_zero()) throw std::domain_error("Rational: division by zero");
        v_ /= o.v_;
        return *this;
    }

    friend Rational operator+(Rational a, const Rational& b) { return a += b; }
    friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
    friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
    friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

    friend bool operator==(const Rational& a, const Rational& b) { return a.v_ == b.v_; }
    friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
        const int c = cmp(a.v_, b.v_);
        if (c < 0) return std::strong_ordering::less;
        if (c > 0) return std::strong_ordering::greater;
        return std::strong_ordering::equal;
    }

    Rational abs() const { return sign() < 0 ? -*this : *this; }

  private:
    mpq_class v_;
};

inline Rational half_odd(long k) { return Rational(k, 2); }  // k/2

}  // namespace xlag

#endif
