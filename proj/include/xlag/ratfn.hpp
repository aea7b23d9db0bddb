#ifndef XLAG_RATFN_HPP
#define XLAG_RATFN_HPP

#include <stdexcept>
#include <utility>

#include "xlag/poly.hpp"

namespace xlag {

// Rational function N(eta)/D(eta).  Denominators arising in this project are
// products of zero-free deforming functions, so evaluation on (0, inf) is
// safe.  Exact instantiation keeps itself reduced via polynomial gcd.
template <class T>
class RatFn {
  public:
    RatFn() : num_(), den_(Poly<T>::constant(T(1))) {}
    explicit RatFn(Poly<T> num) : num_(std::move(num)), den_(Poly<T>::constant(T(1))) {}
    RatFn(Poly<T> num, Poly<T> den) : num_(std::move(num)), den_(std::move(den)) {
        if (den_.is_zero()) throw std::domain_error("RatFn: zero denominator");
        reduce();
    }

    const Poly<T>& num() const { return num_; }
    const Poly<T>& den() const { return den_; }
    bool is_zero() const { return num_.is_zero(); }

    friend RatFn operator+(const RatFn& a, const RatFn& b) {
        return RatFn(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
    }
    friend RatFn operator-(const RatFn& a, const RatFn& b) {
        return RatFn(a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_);
    }
    friend RatFn operator*(const RatFn& a, const RatFn& b) {
        return RatFn(a.num_ * b.num_, a.den_ * b.den_);
    }
    friend RatFn operator/(const RatFn& a, const RatFn& b) {
        if (b.is_zero()) throw std::domain_error("RatFn: division by zero");
        return RatFn(a.num_ * b.den_, a.den_ * b.num_);
    }
    RatFn operator-() const { return RatFn(-num_, den_, no_reduce{}); }
    RatFn scaled(const T& s) const { return RatFn(num_.scaled(s), den_, no_reduce{}); }

    RatFn derivative() const {
        return RatFn(num_.derivative() * den_ - num_ * den_.derivative(), den_ * den_);
    }

    double eval(double eta) const { return num_.eval(eta) / den_.eval(eta); }

    // exact equality (cross-multiplied, so representation-independent)
    friend bool operator==(const RatFn& a, const RatFn& b) {
        return (a.num_ * b.den_) == (b.num_ * a.den_);
    }

  private:
    struct no_reduce {};
    RatFn(Poly<T> num, Poly<T> den, no_reduce) : num_(std::move(num)), den_(std::move(den)) {}

    void reduce() {
        if constexpr (std::is_same_v<T, Rational>) {
            if (num_.is_zero()) {
                den_ = Poly<T>::constant(T(1));
                return;
            }
            PolyQ g = poly_gcd(num_, den_);
            if (g.degree() > 0) {
                num_ = divmod(num_, g).first;
                den_ = divmod(den_, g).first;
            }
            const T lc = den_.leading();
            num_ = num_.scaled(T(1) / lc);
            den_ = den_.scaled(T(1) / lc);
        }
    }

    Poly<T> num_, den_;
};

using RatFnQ = RatFn<Rational>;
using RatFnD = RatFn<double>;

}  // namespace xlag

#endif
