#ifndef XLAG_SQM_HPP
#define XLAG_SQM_HPP

#include <cmath>
#include <cstdlib>
#include <stdexcept>
#include <utility>
#include <vector>

#include "xlag/exceptional.hpp"
#include "xlag/poly.hpp"
#include "xlag/ratfn.hpp"
#include "xlag/rational.hpp"

namespace xlag {

// ---------------------------------------------------------------------------
// Everything in this header exploits one structural fact: with eta = omega x^2,
// each prepotential in play has
//
//     W'(x) = U(eta) / x,
//
// where U is a rational function of eta with exact coefficients and no omega
// dependence.  Derivatives of the structured eigenfunctions close under the
// same representation, so Schrodinger residuals reduce to polynomial
// identities in eta that can be checked exactly.
// ---------------------------------------------------------------------------

// Omega-free algebraic content of a prepotential
//     W(x) = a * (omega x^2 / 2) + b * log x + sum_i s_i * log xi_i(eta).
template <class T>
struct PrepotentialParts {
    int gauss_sign = -1;                         // a
    T power = T(0);                              // b
    std::vector<std::pair<int, Poly<T>>> logs;   // (s_i, xi_i)

    // U(eta) = a eta + b + 2 eta sum_i s_i xi_i'/xi_i
    RatFn<T> u() const {
        RatFn<T> acc(Poly<T>(std::vector<T>{power, T(gauss_sign)}));
        const RatFn<T> two_eta(Poly<T>::eta().scaled(T(2)));
        for (const auto& [s, xi] : logs) {
            RatFn<T> term = two_eta * RatFn<T>(xi.derivative(), xi);
            acc = (s > 0) ? acc + term : acc - term;
        }
        return acc;
    }
};

struct Prepotential {
    PrepotentialParts<Rational> parts;
    double omega = 1.0;

    double eval(double x) const {  // log|xi| keeps sign-definite L2 xi real
        const double eta = omega * x * x;
        double w = 0.5 * parts.gauss_sign * eta + parts.power.to_double() * std::log(x);
        for (const auto& [s, xi] : parts.logs) w += s * std::log(std::abs(xi.eval(eta)));
        return w;
    }
    double eval_prime(double x) const { return parts.u().eval(omega * x * x) / x; }
};

// W_0 = -omega x^2/2 + g log x, the radial oscillator (g > 0, omega > 0).
inline Prepotential prepotential_w0(const Rational& g, double omega) {
    if (!(g > Rational(0))) throw std::invalid_argument("prepotential_w0 requires g > 0");
    if (!(omega > 0.0)) throw std::invalid_argument("prepotential_w0 requires omega > 0");
    return Prepotential{{-1, g, {}}, omega};
}

// W_ell = -omega x^2/2 + (g+ell) log x + log xi_ell(eta;g+1) - log xi_ell(eta;g),
// the deformed radial oscillator; ell = 0 collapses to W_0.
inline Prepotential prepotential_deformed(const ModelParams& p) {
    PrepotentialParts<Rational> parts{-1, p.g + Rational(p.ell), {}};
    if (p.ell > 0) {
        parts.logs.emplace_back(+1, deforming_xi(p.family, p.ell, p.g + Rational(1)));
        parts.logs.emplace_back(-1, deforming_xi(p.family, p.ell, p.g));
    }
    return Prepotential{std::move(parts), p.omega};
}

// Darboux-Crum prepotential; note the flipped gaussian sign for L1.
inline Prepotential prepotential_dc(const ModelParams& p) {
    PrepotentialParts<Rational> parts;
    if (p.family == Family::L1) {
        if (!(p.g > Rational(1, 2)))
            throw std::invalid_argument("Darboux-Crum L1 prepotential requires g > 1/2");
        parts = {+1, p.g + Rational(p.ell) - Rational(1), {}};
    } else {
        parts = {-1, -(p.g + Rational(p.ell)), {}};
    }
    if (p.ell > 0) parts.logs.emplace_back(+1, deforming_xi(p.family, p.ell, p.g));
    return Prepotential{std::move(parts), p.omega};
}

// Closed-form function C * exp(a omega x^2/2) * x^p * N(eta)/D(eta).
struct StructuredFn {
    int gauss_sign = -1;     // a
    Rational power = Rational(0);
    RatFnQ rat;              // N/D
    double omega = 1.0;
    double scale = 1.0;      // C

    double eval(double x) const {
        const double eta = omega * x * x;
        return scale * std::exp(0.5 * gauss_sign * eta) * std::pow(x, power.to_double()) *
               rat.eval(eta);
    }

    // d/dx maps (p, R) -> (p-1, (a eta + p) R + 2 eta R'); omega-free in eta.
    StructuredFn derivative() const {
        StructuredFn d{gauss_sign, power - Rational(1), lowered_rat(), omega, scale};
        d.normalize_power();
        return d;
    }

    bool square_integrable() const { return gauss_sign < 0 && Rational(2) * power > Rational(-1); }

    // canonical form: pull factors of eta out of the numerator into x^2 powers
    void normalize_power() {
        while (!rat.num().is_zero() && rat.num().coeff(0).is_zero()) {
            std::vector<Rational> c(rat.num().coeffs().begin() + 1, rat.num().coeffs().end());
            rat = RatFnQ(PolyQ(std::move(c)), rat.den());
            power += Rational(2);
        }
    }

    RatFnQ lowered_rat() const {
        const RatFnQ lin(PolyQ(std::vector<Rational>{power, Rational(gauss_sign)}));
        const RatFnQ two_eta(PolyQ::eta().scaled(Rational(2)));
        return lin * rat + two_eta * rat.derivative();
    }
};

// (op_sign d/dx - W') f, kept in closed form.
inline StructuredFn susy_apply(int op_sign, const Prepotential& w, const StructuredFn& f) {
    if (std::abs(w.omega - f.omega) > 1e-14 * std::abs(w.omega))
        throw std::invalid_argument("susy_apply: omega mismatch between operator and state");
    RatFnQ res = f.lowered_rat();
    if (op_sign < 0) res = -res;
    res = res - w.parts.u() * f.rat;
    StructuredFn out{f.gauss_sign, f.power - Rational(1), std::move(res), f.omega, f.scale};
    out.normalize_power();
    return out;
}

// H = -d^2/dx^2 + W'^2 + chi W'' + offset_coeff * omega.
struct Hamiltonian {
    Prepotential w;
    int chi = +1;
    Rational offset_coeff = Rational(0);

    double offset() const { return offset_coeff.to_double() * w.omega; }

    double potential(double x) const {
        if (!(x > 0.0)) throw std::domain_error("potential: x must be > 0");
        const double omega = w.omega;
        const double eta = omega * x * x;
        const RatFnQ u = w.parts.u();
        const double uv = u.eval(eta);
        const double upv = u.derivative().eval(eta);
        return (omega / eta) * (uv * uv - chi * uv) + chi * 2.0 * omega * upv + offset();
    }
};

inline Hamiltonian hamiltonian_deformed(const ModelParams& p) {
    return Hamiltonian{prepotential_deformed(p), +1, Rational(0)};
}
inline std::pair<Hamiltonian, Hamiltonian> hamiltonian_dc_pair(const ModelParams& p) {
    Prepotential w = prepotential_dc(p);
    return {Hamiltonian{w, +1, Rational(0)}, Hamiltonian{w, -1, Rational(0)}};
}

namespace detail {

// Cleared residual of (H - E) psi in eta space.  With psi = e^{a eta/2} x^p R
// and E = energy_coeff * omega (measured from the same zero as the bare
// W'^2 + chi W''), the residual equals e^{...} x^{p-2} times
//   -T + (U^2 - chi U + 2 chi eta U') R + (offset_coeff - energy_coeff) eta R,
// where T is R lowered twice.  All terms are rational in eta; the returned
// parts share a common denominator.
template <class T>
struct ResidualAssembly {
    Poly<T> numerator;   // cleared residual numerator
    double scale;        // max |coeff| among the assembled terms, for relative measures
};

template <class T>
ResidualAssembly<T> schrodinger_residual(const RatFn<T>& u, int chi, const T& offset_coeff,
                                         int psi_gauss, const T& psi_power, const RatFn<T>& r,
                                         const T& energy_coeff) {
    const RatFn<T> eta{Poly<T>::eta()};
    auto lower = [&](const RatFn<T>& f, const T& p) {
        const RatFn<T> lin(Poly<T>(std::vector<T>{p, T(psi_gauss)}));
        return lin * f + (eta * f.derivative()).scaled(T(2));
    };
    const RatFn<T> s = lower(r, psi_power);
    const RatFn<T> t = lower(s, psi_power - T(1));
    const RatFn<T> vpart = (u * u - u.scaled(T(chi)) + (eta * u.derivative()).scaled(T(2 * chi))) * r;
    const RatFn<T> epart = (eta * r).scaled(offset_coeff - energy_coeff);

    // common denominator so the relative measure compares like with like
    const Poly<T> dt = t.den(), dv = vpart.den(), de = epart.den();
    const Poly<T> tn = t.num() * dv * de;
    const Poly<T> vn = vpart.num() * dt * de;
    const Poly<T> en = epart.num() * dt * dv;
    Poly<T> res = vn + en - tn;
    double scale = std::max({tn.max_abs_coeff(), vn.max_abs_coeff(), en.max_abs_coeff(), 1e-300});
    return {std::move(res), scale};
}

}  // namespace detail

// Exact cleared-residual numerator; the zero polynomial iff psi is an exact
// eigenfunction of H with E = energy_coeff * omega.
inline PolyQ residual_numerator(const Hamiltonian& h, const StructuredFn& psi,
                                const Rational& energy_coeff) {
    return detail::schrodinger_residual<Rational>(h.w.parts.u(), h.chi, h.offset_coeff,
                                                  psi.gauss_sign, psi.power, psi.rat, energy_coeff)
        .numerator;
}

// max |residual coefficient| / max |assembled-term coefficient|; 0 on the
// exact path for valid states.
inline double residual_measure(const Hamiltonian& h, const StructuredFn& psi,
                               const Rational& energy_coeff) {
    const auto parts = detail::schrodinger_residual<Rational>(
        h.w.parts.u(), h.chi, h.offset_coeff, psi.gauss_sign, psi.power, psi.rat, energy_coeff);
    return parts.numerator.max_abs_coeff() / parts.scale;
}

// Lower-trust floating-coefficient path for irrational parameters.
inline double residual_measure_fp(const RatFnD& u, int chi, double offset_coeff, int psi_gauss,
                                  double psi_power, const RatFnD& r, double energy_coeff) {
    const auto parts = detail::schrodinger_residual<double>(u, chi, offset_coeff, psi_gauss,
                                                            psi_power, r, energy_coeff);
    return parts.numerator.max_abs_coeff() / parts.scale;
}

}  // namespace xlag

#endif
