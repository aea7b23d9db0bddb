#ifndef XLAG_EXCEPTIONAL_HPP
#define XLAG_EXCEPTIONAL_HPP

#include <stdexcept>
#include <string>

#include "xlag/poly.hpp"
#include "xlag/rational.hpp"

namespace xlag {

// The two deforming-function families of the exceptional Laguerre systems.
enum class Family { L1, L2 };

inline const char* to_string(Family f) { return f == Family::L1 ? "L1" : "L2"; }
inline Family family_from_string(const std::string& s) {
    if (s == "L1") return Family::L1;
    if (s == "L2") return Family::L2;
    throw std::invalid_argument("unknown family '" + s + "' (expected L1 or L2)");
}

// Identifies one deformed radial-oscillator model.  ell = 0 is the undeformed
// system.  Parameter floors: L1 admits g >= 1/2 (covers the Landau case
// g = m + 1/2 with m = 0); L2 requires g > -1/2.  The Darboux-Crum
// construction additionally requires strict g > 1/2 for L1, enforced there.
struct ModelParams {
    Family family = Family::L1;
    int ell = 0;
    Rational g = Rational(1);
    double omega = 1.0;

    static ModelParams make(Family family, int ell, Rational g, double omega) {
        if (ell < 0) throw std::invalid_argument("ell must be >= 0");
        if (!(omega > 0.0)) throw std::invalid_argument("omega must be > 0");
        if (family == Family::L1 && g < Rational(1, 2))
            throw std::invalid_argument("family L1 requires g >= 1/2");
        if (family == Family::L2 && !(g > Rational(-1, 2)))
            throw std::invalid_argument("family L2 requires g > -1/2");
        return ModelParams{family, ell, std::move(g), omega};
    }

    ModelParams with_g(Rational new_g) const { return make(family, ell, std::move(new_g), omega); }
};

// Generalized Laguerre polynomial L_n^{(alpha)}(eta) with exact coefficients,
// by the three-term recurrence
//   (k+1) L_{k+1} = (2k+1+alpha-eta) L_k - (k+alpha) L_{k-1}.
template <class T>
Poly<T> laguerre(int n, const T& alpha) {
    if (n < 0) throw std::invalid_argument("laguerre: n must be >= 0");
    Poly<T> prev = Poly<T>::constant(T(1));
    if (n == 0) return prev;
    Poly<T> cur(std::vector<T>{T(1) + alpha, T(-1)});
    for (int k = 1; k < n; ++k) {
        Poly<T> lin(std::vector<T>{T(2 * k + 1) + alpha, T(-1)});
        Poly<T> next = (lin * cur - prev.scaled(T(k) + alpha)).scaled(T(1) / T(k + 1));
        prev = std::move(cur);
        cur = std::move(next);
    }
    return cur;
}

// Deforming function xi_ell for a raw (family, ell, g) triple, without the
// zero-freedom check.  L1 uses the negated argument, so it stays a polynomial
// in +eta with flipped odd-coefficient signs.
template <class T>
Poly<T> deforming_xi_unchecked(Family family, int ell, const T& g) {
    if (ell < 0) throw std::invalid_argument("deforming_xi: ell must be >= 0");
    if (ell == 0) return Poly<T>::constant(T(1));
    if (family == Family::L1)
        return laguerre<T>(ell, g + T(ell) - T(3) / T(2)).negated_argument();
    return laguerre<T>(ell, -g - T(ell) - T(1) / T(2));
}

// A xi with a zero on (0, inf) makes every downstream potential singular.
// Verified exactly by Sturm root counting; the all-positive-coefficient case
// (L1 in range) short-circuits.
inline void ensure_zero_free(const PolyQ& xi, Family family, int ell, const Rational& g) {
    bool all_positive = true;
    for (const auto& c : xi.coeffs())
        if (c.sign() <= 0) { all_positive = false; break; }
    if (all_positive) return;
    if (count_positive_roots(xi) != 0)
        throw std::domain_error("deforming function xi_" + std::to_string(ell) + " (" +
                                std::string(to_string(family)) + ", g=" + g.str() +
                                ") has a zero on (0,inf): invalid parameter regime");
}

inline PolyQ deforming_xi(Family family, int ell, const Rational& g) {
    PolyQ xi = deforming_xi_unchecked<Rational>(family, ell, g);
    ensure_zero_free(xi, family, ell, g);
    return xi;
}

inline PolyQ deforming_xi(const ModelParams& p) { return deforming_xi(p.family, p.ell, p.g); }

// Exceptional polynomial P_{ell,n}(eta; g): bilinear in the classical Laguerre
// polynomials and the deforming functions.  Degree ell + n, lowest member
// P_{ell,0} = xi_ell(eta; g+1).
template <class T>
Poly<T> exceptional_p(Family family, int ell, const T& g, int n) {
    if (n < 0) throw std::invalid_argument("exceptional_p: n must be >= 0");
    const Poly<T> xi_g = deforming_xi_unchecked<T>(family, ell, g);
    const Poly<T> xi_g1 = deforming_xi_unchecked<T>(family, ell, g + T(1));
    if (family == Family::L1) {
        const Poly<T> lag = laguerre<T>(n, g + T(ell) - T(3) / T(2));
        return xi_g1 * lag - xi_g * lag.derivative();
    }
    const Poly<T> lag = laguerre<T>(n, g + T(ell) + T(1) / T(2));
    const T pref = T(1) / (T(n) + g + T(1) / T(2));
    Poly<T> sum = (xi_g1 * lag).scaled(g + T(1) / T(2)) + (xi_g * lag.derivative()).shifted_up(1);
    return sum.scaled(pref);
}

inline PolyQ exceptional_p(const ModelParams& p, int n) {
    if (p.family == Family::L2 && (Rational(n) + p.g + Rational(1, 2)).is_zero())
        throw std::domain_error("exceptional_p: L2 prefactor n + g + 1/2 vanishes");
    return exceptional_p<Rational>(p.family, p.ell, p.g, n);
}

}  // namespace xlag

#endif
