#ifndef XLAG_POLY_HPP
#define XLAG_POLY_HPP

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <stdexcept>
#include <type_traits>
#include <utility>
#include <vector>

#include "xlag/rational.hpp"

namespace xlag {

namespace detail {
template <class T>
inline bool coeff_is_zero(const T& c) {
    if constexpr (std::is_same_v<T, Rational>) return c.is_zero();
    else return c == T(0);
}
template <class T>
inline double coeff_to_double(const T& c) {
    if constexpr (std::is_same_v<T, Rational>) return c.to_double();
    else return static_cast<double>(c);
}
// what rounding c to double discarded (exact for T = double)
template <class T>
inline double coeff_residue(const T& c, double hi) {
    if constexpr (std::is_same_v<T, Rational>)
        return (c - Rational::from_double(hi)).to_double();
    else
        return 0.0;
}
}  // namespace detail

// Dense univariate polynomial in the sinusoidal coordinate eta, coefficient of
// eta^k at index k.  Trailing zeros are trimmed; the zero polynomial has no
// coefficients.  T = Rational is the exact path used everywhere that matters;
// T = double exists only for the lower-trust floating-coefficient path.
template <class T>
class Poly {
  public:
    Poly() = default;
    explicit Poly(std::vector<T> coeffs) : c_(std::move(coeffs)) { trim(); }
    static Poly constant(T v) { return Poly(std::vector<T>{std::move(v)}); }
    static Poly eta() { return Poly(std::vector<T>{T(0), T(1)}); }

    const std::vector<T>& coeffs() const { return c_; }
    bool is_zero() const { return c_.empty(); }
    int degree() const { return static_cast<int>(c_.size()) - 1; }

    // coefficient of eta^k (0 beyond the stored range)
    T coeff(std::size_t k) const { return k < c_.size() ? c_[k] : T(0); }
    const T& leading() const {
        if (c_.empty()) throw std::logic_error("Poly: leading() of zero polynomial");
        return c_.back();
    }
    // lowest-order nonzero coefficient; sign of the polynomial just right of 0
    const T& trailing() const {
        for (const auto& v : c_)
            if (!detail::coeff_is_zero(v)) return v;
        throw std::logic_error("Poly: trailing() of zero polynomial");
    }

    friend Poly operator+(const Poly& a, const Poly& b) {
        std::vector<T> r(std::max(a.c_.size(), b.c_.size()), T(0));
        for (std::size_t i = 0; i < r.size(); ++i) r[i] = a.coeff(i) + b.coeff(i);
        return Poly(std::move(r));
    }
    friend Poly operator-(const Poly& a, const Poly& b) {
        std::vector<T> r(std::max(a.c_.size(), b.c_.size()), T(0));
        for (std::size_t i = 0; i < r.size(); ++i) r[i] = a.coeff(i) - b.coeff(i);
        return Poly(std::move(r));
    }
    Poly operator-() const {
        std::vector<T> r(c_);
        for (auto& v : r) v = -v;
        return Poly(std::move(r));
    }
    friend Poly operator*(const Poly& a, const Poly& b) {
        if (a.is_zero() || b.is_zero()) return Poly();
        std::vector<T> r(a.c_.size() + b.c_.size() - 1, T(0));
        for (std::size_t i = 0; i < a.c_.size(); ++i)
            for (std::size_t j = 0; j < b.c_.size(); ++j) r[i + j] += a.c_[i] * b.c_[j];
        return Poly(std::move(r));
    }
    Poly scaled(const T& s) const {
        std::vector<T> r(c_);
        for (auto& v : r) v = v * s;
        return Poly(std::move(r));
    }
    Poly& operator+=(const Poly& o) { return *this = *this + o; }
    Poly& operator-=(const Poly& o) { return *this = *this - o; }
    Poly& operator*=(const Poly& o) { return *this = *this * o; }

    friend bool operator==(const Poly& a, const Poly& b) {
        if (a.c_.size() != b.c_.size()) return false;
        for (std::size_t i = 0; i < a.c_.size(); ++i)
            if (!detail::coeff_is_zero(a.c_[i] - b.c_[i])) return false;
        return true;
    }

    Poly derivative() const {
        if (c_.size() <= 1) return Poly();
        std::vector<T> r(c_.size() - 1, T(0));
        for (std::size_t k = 1; k < c_.size(); ++k) r[k - 1] = c_[k] * T(static_cast<long>(k));
        return Poly(std::move(r));
    }

    // substitute eta -> -eta (flips odd coefficient signs)
    Poly negated_argument() const {
        std::vector<T> r(c_);
        for (std::size_t k = 1; k < r.size(); k += 2) r[k] = -r[k];
        return Poly(std::move(r));
    }

    // multiply by eta^k
    Poly shifted_up(std::size_t k) const {
        if (is_zero()) return Poly();
        std::vector<T> r(c_.size() + k, T(0));
        for (std::size_t i = 0; i < c_.size(); ++i) r[i + k] = c_[i];
        return Poly(std::move(r));
    }

    // Compensated Horner over a two-double split of each coefficient.  The
    // high-degree members of the families here are badly conditioned pointwise
    // (the terms dwarf the value in the oscillatory region), and plain Horner
    // on rounded coefficients loses cond * eps; carrying the products' and
    // sums' exact rounding errors plus the coefficient residues in a parallel
    // accumulator brings that down to cond * eps^2.
    double eval(double x) const {
        bake_split();
        double s = 0.0, e = 0.0;
        for (std::size_t i = hi_.size(); i-- > 0;) {
            const double p = s * x;
            const double pe = std::fma(s, x, -p);
            const double t = p + hi_[i];
            const double z = t - p;
            const double se = (p - (t - z)) + (hi_[i] - z);
            s = t;
            e = std::fma(e, x, pe + se + lo_[i]);
        }
        return s + e;
    }
    T eval_exact(const T& x) const {
        T acc(0);
        for (std::size_t i = c_.size(); i-- > 0;) acc = acc * x + c_[i];
        return acc;
    }

    double max_abs_coeff() const {
        double m = 0.0;
        for (const auto& v : c_) m = std::max(m, std::abs(detail::coeff_to_double(v)));
        return m;
    }

  private:
    void trim() {
        while (!c_.empty() && detail::coeff_is_zero(c_.back())) c_.pop_back();
    }
    // c_ never changes after construction, so the split is baked once
    void bake_split() const {
        if (split_done_) return;
        hi_.resize(c_.size());
        lo_.resize(c_.size());
        for (std::size_t i = 0; i < c_.size(); ++i) {
            hi_[i] = detail::coeff_to_double(c_[i]);
            lo_[i] = detail::coeff_residue(c_[i], hi_[i]);
        }
        split_done_ = true;
    }
    std::vector<T> c_;
    mutable std::vector<double> hi_, lo_;
    mutable bool split_done_ = false;
};

using PolyQ = Poly<Rational>;
using PolyD = Poly<double>;

// Exact polynomial division with remainder over the rationals.
inline std::pair<PolyQ, PolyQ> divmod(const PolyQ& a, const PolyQ& b) {
    if (b.is_zero()) throw std::domain_error("Poly: division by zero polynomial");
    std::vector<Rational> rem(a.coeffs());
    std::vector<Rational> quot;
    const int db = b.degree();
    int da = a.degree();
    if (da < db) return {PolyQ(), a};
    quot.assign(static_cast<std::size_t>(da - db) + 1, Rational(0));
    while (da >= db) {
        while (da >= 0 && rem[static_cast<std::size_t>(da)].is_zero()) --da;
        if (da < db) break;
        Rational f = rem[static_cast<std::size_t>(da)] / b.leading();
        quot[static_cast<std::size_t>(da - db)] = f;
        for (int i = 0; i <= db; ++i)
            rem[static_cast<std::size_t>(da - db + i)] -= f * b.coeff(static_cast<std::size_t>(i));
        --da;
    }
    return {PolyQ(std::move(quot)), PolyQ(std::move(rem))};
}

inline PolyQ poly_gcd(PolyQ a, PolyQ b) {
    while (!b.is_zero()) {
        PolyQ r = divmod(a, b).second;
        a = std::move(b);
        b = std::move(r);
    }
    if (a.is_zero()) return a;
    return a.scaled(Rational(1) / a.leading());  // monic
}

// Number of distinct roots in the open interval (0, +inf), by Sturm's theorem.
// Factors of eta and repeated roots are stripped first.
inline int count_positive_roots(PolyQ p) {
    if (p.is_zero()) throw std::domain_error("count_positive_roots: zero polynomial");
    // strip eta^k
    std::size_t low = 0;
    while (low < p.coeffs().size() && p.coeffs()[low].is_zero()) ++low;
    if (low > 0) {
        std::vector<Rational> c(p.coeffs().begin() + static_cast<long>(low), p.coeffs().end());
        p = PolyQ(std::move(c));
    }
    if (p.degree() <= 0) return 0;
    PolyQ sf = divmod(p, poly_gcd(p, p.derivative())).first;  // square-free part
    std::vector<PolyQ> chain{sf, sf.derivative()};
    while (!chain.back().is_zero() && chain.back().degree() > 0)
        chain.push_back(-divmod(chain[chain.size() - 2], chain.back()).second);
    if (chain.back().is_zero()) chain.pop_back();

    auto variations = [&](auto sign_of) {
        int v = 0, prev = 0;
        for (const auto& q : chain) {
            const int s = sign_of(q);
            if (s == 0) continue;
            if (prev != 0 && s != prev) ++v;
            prev = s;
        }
        return v;
    };
    const int at_zero = variations([](const PolyQ& q) { return q.is_zero() ? 0 : q.trailing().sign(); });
    const int at_inf = variations([](const PolyQ& q) { return q.is_zero() ? 0 : q.leading().sign(); });
    return at_zero - at_inf;
}

}  // namespace xlag

#endif
