#include "xlag/eigensystem.hpp"

#include <cmath>
#include <stdexcept>

namespace xlag {

StructuredFn deformed_state_raw(const ModelParams& p, int n) {
    const PolyQ num = exceptional_p(p, n);
    const PolyQ den = deforming_xi(p.family, p.ell, p.g);
    StructuredFn f{-1, p.g + Rational(p.ell), RatFnQ(num, den), p.omega, 1.0};
    f.normalize_power();
    return f;
}

StructuredFn dc_plus_state_raw(const ModelParams& p, int n) {
    if (n < 0) throw std::invalid_argument("dc_plus_state_raw: n must be >= 0");
    Rational alpha, power;
    if (p.family == Family::L1) {
        if (!(p.g > Rational(1, 2)))
            throw std::invalid_argument("Darboux-Crum L1 states require g > 1/2");
        alpha = p.g + Rational(p.ell) - Rational(3, 2);
        power = p.g + Rational(p.ell) - Rational(1);
    } else {
        alpha = p.g + Rational(p.ell) + Rational(1, 2);
        power = p.g + Rational(p.ell) + Rational(1);
    }
    StructuredFn f{-1, power, RatFnQ(laguerre(n, alpha)), p.omega, 1.0};
    f.normalize_power();
    return f;
}

Rational deformed_energy_coeff(int n) {
    if (n < 0) throw std::invalid_argument("deformed_energy_coeff: n must be >= 0");
    return Rational(4 * n);
}

Rational dc_energy_coeff(const ModelParams& p, int n) {
    if (n < 0) throw std::invalid_argument("dc_energy_coeff: n must be >= 0");
    if (p.family == Family::L1)
        return Rational(4) * (Rational(n) + p.g + Rational(2 * p.ell) - Rational(1, 2));
    return Rational(4) * (Rational(n) + p.g + Rational(1, 2));
}

void normalize_state(StructuredFn& f, const Quadrature& q) {
    const double nrm2 = q.integrate_checked([&](double x) {
        const double v = f.eval(x);
        return v * v;
    });
    if (!(nrm2 > 0.0) || !std::isfinite(nrm2))
        throw std::runtime_error("normalize_state: norm is not a positive finite number");
    f.scale /= std::sqrt(nrm2);
    // sign as x -> 0+: scale * num(0) / den(0), with num(0) != 0 after power
    // normalization and den zero-free on [0, inf)
    int s = f.scale < 0 ? -1 : 1;
    s *= f.rat.num().coeff(0).sign();
    s *= f.rat.den().coeff(0).sign();
    if (s < 0) f.scale = -f.scale;
}

Quadrature default_quadrature(const ModelParams& p, int n_max) {
    const double extra = p.ell + n_max + std::abs(p.g.to_double());
    const double eta_end = 100.0 + 6.0 * extra;
    const int order = 20 + 2 * n_max;  // high modes oscillate; panels must keep up
    return Quadrature::half_line(std::sqrt(eta_end / p.omega), order);
}

Eigensystem eigensystem_deformed(const ModelParams& p, int n_max) {
    if (n_max < 0) throw std::invalid_argument("eigensystem_deformed: n_max must be >= 0");
    Eigensystem sys{p, hamiltonian_deformed(p), {}, default_quadrature(p, n_max)};
    for (int n = 0; n <= n_max; ++n) {
        EigenState st;
        st.n = n;
        st.energy_coeff = deformed_energy_coeff(n);
        st.energy = st.energy_coeff.to_double() * p.omega;
        st.wf = deformed_state_raw(p, n);
        normalize_state(st.wf, sys.quad);
        sys.states.push_back(std::move(st));
    }
    return sys;
}

std::pair<Eigensystem, Eigensystem> eigensystem_dc(const ModelParams& p, int n_max) {
    if (n_max < 0) throw std::invalid_argument("eigensystem_dc: n_max must be >= 0");
    auto [h_plus, h_minus] = hamiltonian_dc_pair(p);
    const Quadrature quad = default_quadrature(p, n_max);
    Eigensystem plus{p, h_plus, {}, quad};
    Eigensystem minus{p, h_minus, {}, quad};
    for (int n = 0; n <= n_max; ++n) {
        EigenState st;
        st.n = n;
        st.energy_coeff = dc_energy_coeff(p, n);
        st.energy = st.energy_coeff.to_double() * p.omega;
        st.wf = dc_plus_state_raw(p, n);
        normalize_state(st.wf, quad);
        EigenState im = st;
        im.wf = susy_apply(+1, h_plus.w, st.wf);
        normalize_state(im.wf, quad);
        plus.states.push_back(std::move(st));
        minus.states.push_back(std::move(im));
    }
    return {std::move(plus), std::move(minus)};
}

double overlap(const Quadrature& q, const StructuredFn& a, const StructuredFn& b) {
    return q.integrate([&](double x) { return a.eval(x) * b.eval(x); });
}

std::vector<std::vector<double>> gram_matrix(const Eigensystem& sys) {
    const std::size_t n = sys.states.size();
    std::vector<std::vector<double>> g(n, std::vector<double>(n));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i; j < n; ++j)
            g[i][j] = g[j][i] = overlap(sys.quad, sys.states[i].wf, sys.states[j].wf);
    return g;
}

}  // namespace xlag
