#include "xlag/dirac.hpp"

#include <cmath>
#include <stdexcept>

namespace xlag {

std::string to_string(CouplingKind k) {
    switch (k) {
        case CouplingKind::MinimalMagnetic: return "magnetic";
        case CouplingKind::PauliCentralElectric: return "central-electric";
        case CouplingKind::PauliCylindricalElectric: return "cylindrical-electric";
        case CouplingKind::LorentzScalar1D: return "lorentz-scalar";
    }
    throw std::logic_error("unknown CouplingKind");
}

std::string to_string(ProfileChoice c) {
    return c == ProfileChoice::Deformed ? "deformed" : "darboux-crum";
}

std::string to_string(SusyPhase p) { return p == SusyPhase::Unbroken ? "unbroken" : "broken"; }

ProfileChoice profile_from_string(const std::string& s) {
    if (s == "deformed") return ProfileChoice::Deformed;
    if (s == "dc" || s == "darboux-crum") return ProfileChoice::DarbouxCrum;
    throw std::invalid_argument("unknown profile choice '" + s + "' (expected deformed or dc)");
}

namespace {

CouplingProfile make_profile(CouplingKind kind, Family fam, int ell, const Rational& g, double omega,
                             ProfileChoice choice, int label) {
    const ModelParams p = ModelParams::make(fam, ell, g, omega);
    Prepotential w =
        choice == ProfileChoice::Deformed ? prepotential_deformed(p) : prepotential_dc(p);
    // profile(r) = g/r - W'(r) = (g - U(eta)) / r
    RatFnQ s = RatFnQ(PolyQ::constant(p.g)) - w.parts.u();
    const bool osc = kind == CouplingKind::PauliCentralElectric &&
                     choice == ProfileChoice::Deformed && ell == 0;
    return {kind, choice, p, label, std::move(w), std::move(s), 0.0, osc};
}

}  // namespace

CouplingProfile vector_potential(Family fam, int ell, int m, double omega, ProfileChoice choice) {
    if (m < 0)
        throw std::invalid_argument(
            "vector_potential: m must be >= 0; negative m is covered by the mirrored branch");
    return make_profile(CouplingKind::MinimalMagnetic, fam, ell, Rational(2 * m + 1, 2), omega,
                        choice, m);
}

CouplingProfile pauli_central(Family fam, int ell, int k, double omega, ProfileChoice choice) {
    if (k == 0) throw std::invalid_argument("pauli_central: k = 0 does not occur for this problem");
    if (k > 0)
        throw std::invalid_argument(
            "pauli_central: only k < 0 closes on this construction; k > 0 is the mirrored branch");
    return make_profile(CouplingKind::PauliCentralElectric, fam, ell, Rational(-k), omega, choice,
                        k);
}

CouplingProfile pauli_cylindrical(Family fam, int ell, int m, double omega, ProfileChoice choice) {
    if (m < 0)
        throw std::invalid_argument(
            "pauli_cylindrical: m must be >= 0; negative m is covered by the mirrored branch");
    return make_profile(CouplingKind::PauliCylindricalElectric, fam, ell, Rational(2 * m + 1, 2),
                        omega, choice, m);
}

SusyPhase susy_phase(const Prepotential& w) {
    // unbroken iff exp(W) is square integrable near 0 and infinity
    const bool normalizable =
        w.parts.gauss_sign < 0 && Rational(2) * w.parts.power > Rational(-1);
    return normalizable ? SusyPhase::Unbroken : SusyPhase::Broken;
}

namespace {

Rational gap_coeff_for(const CouplingProfile& profile, int n) {
    return profile.choice == ProfileChoice::Deformed ? deformed_energy_coeff(n)
                                                     : dc_energy_coeff(profile.params, n);
}

}  // namespace

DiracSpectrum dirac_spectrum(const CouplingProfile& profile, double mass, int n_max) {
    if (profile.kind == CouplingKind::LorentzScalar1D)
        throw std::invalid_argument("dirac_spectrum: scalar coupling is handled by scalar_1d");
    if (n_max < 0) throw std::invalid_argument("dirac_spectrum: n_max must be >= 0");
    DiracSpectrum spec{profile.kind, profile.choice, susy_phase(profile.w), mass, {}};
    for (int n = 0; n <= n_max; ++n) {
        DiracLevel lv;
        lv.n = n;
        lv.gap_coeff = gap_coeff_for(profile, n);
        lv.gap = lv.gap_coeff.to_double() * profile.params.omega;
        lv.energy = std::sqrt(mass * mass + lv.gap);
        spec.levels.push_back(lv);
    }
    return spec;
}

DiracState dirac_state(const CouplingProfile& profile, double mass, int n) {
    if (profile.kind == CouplingKind::LorentzScalar1D)
        throw std::invalid_argument("dirac_state: scalar coupling is handled by scalar_1d_state");
    if (n < 0) throw std::invalid_argument("dirac_state: n must be >= 0");
    const ModelParams& p = profile.params;
    StructuredFn f_plus = profile.choice == ProfileChoice::Deformed ? deformed_state_raw(p, n)
                                                                    : dc_plus_state_raw(p, n);
    const Quadrature quad = default_quadrature(p, n);
    normalize_state(f_plus, quad);
    const double gap = gap_coeff_for(profile, n).to_double() * p.omega;
    const double energy = std::sqrt(mass * mass + gap);
    if (std::abs(energy + mass) < 1e-12 * (std::abs(energy) + std::abs(mass) + 1.0))
        throw std::domain_error("dirac_state: lower component is undefined at E + M = 0");
    StructuredFn f_minus = susy_apply(+1, profile.w, f_plus);
    f_minus.scale /= energy + mass;
    const bool vanishes = f_minus.rat.num().is_zero();
    return {n, energy, std::move(f_plus), std::move(f_minus), vanishes};
}

Scalar1DSystem scalar_1d(const ModelParams& p, ProfileChoice choice, double mass, int n_max) {
    if (n_max < 0) throw std::invalid_argument("scalar_1d: n_max must be >= 0");
    Prepotential w =
        choice == ProfileChoice::Deformed ? prepotential_deformed(p) : prepotential_dc(p);
    // V_s = -W' - M = -U(eta)/x - M
    RatFnQ s = -w.parts.u();
    CouplingProfile vs{CouplingKind::LorentzScalar1D, choice, p,     0,
                       std::move(w),                  std::move(s),  -mass, false};
    Scalar1DSystem sys{p, choice, mass, std::move(vs), {}};
    for (int n = 0; n <= n_max; ++n) {
        const Rational coeff =
            choice == ProfileChoice::Deformed ? deformed_energy_coeff(n) : dc_energy_coeff(p, n);
        sys.levels.push_back({n, std::sqrt(coeff.to_double() * p.omega)});
    }
    return sys;
}

DiracState scalar_1d_state(const Scalar1DSystem& sys, int n, int energy_sign) {
    if (n < 0 || n >= static_cast<int>(sys.levels.size()))
        throw std::invalid_argument("scalar_1d_state: level index out of range");
    if (energy_sign != 1 && energy_sign != -1)
        throw std::invalid_argument("scalar_1d_state: energy_sign must be +1 or -1");
    const ModelParams& p = sys.params;
    StructuredFn psi_plus = sys.choice == ProfileChoice::Deformed ? deformed_state_raw(p, n)
                                                                  : dc_plus_state_raw(p, n);
    const Quadrature quad = default_quadrature(p, n);
    normalize_state(psi_plus, quad);
    const double e = energy_sign * sys.levels[n].e_abs;
    StructuredFn psi_minus = susy_apply(+1, sys.vs.w, psi_plus);
    bool vanishes = psi_minus.rat.num().is_zero();
    if (e == 0.0) {
        if (!vanishes)
            throw std::logic_error("scalar_1d_state: zero energy but nonvanishing lower component");
    } else {
        psi_minus.scale /= e;
    }
    return {n, e, std::move(psi_plus), std::move(psi_minus), vanishes};
}

}  // namespace xlag
