#ifndef XLAG_DIRAC_HPP
#define XLAG_DIRAC_HPP

#include <string>
#include <vector>

#include "xlag/eigensystem.hpp"
#include "xlag/exceptional.hpp"
#include "xlag/ratfn.hpp"
#include "xlag/sqm.hpp"

namespace xlag {

enum class CouplingKind { MinimalMagnetic, PauliCentralElectric, PauliCylindricalElectric, LorentzScalar1D };
enum class ProfileChoice { Deformed, DarbouxCrum };
enum class SusyPhase { Unbroken, Broken };

std::string to_string(CouplingKind k);
std::string to_string(ProfileChoice c);
std::string to_string(SusyPhase p);
ProfileChoice profile_from_string(const std::string& s);

// External field profile whose radial Dirac(-Pauli) problem closes on the
// deformed oscillator pair.  All four kinds share the shape
//     profile(r) = S(eta) / r + c0,        eta = omega r^2,
// with exact S; c0 is only nonzero for the 1+1-dimensional scalar coupling.
struct CouplingProfile {
    CouplingKind kind = CouplingKind::MinimalMagnetic;
    ProfileChoice choice = ProfileChoice::Deformed;
    ModelParams params;      // g already mapped from the quantum number below
    int label = 0;           // m (magnetic / cylindrical) or k (central)
    Prepotential w;          // prepotential of the squared problem
    RatFnQ coupling_s;
    double c0 = 0.0;
    bool dirac_oscillator = false;  // profile proportional to r

    double eval(double r) const { return coupling_s.eval(params.omega * r * r) / r + c0; }
};

// Symmetric-gauge A_phi for magnetic number m >= 0 (g = m + 1/2).
CouplingProfile vector_potential(Family fam, int ell, int m, double omega, ProfileChoice choice);

// Radial electric field mu E_r for the Dirac-Pauli equation, spherical case;
// only k < 0 closes on this construction (g = |k|).  The choice
// (Deformed, ell = 0) is the Dirac oscillator profile mu E_r ~ r.
CouplingProfile pauli_central(Family fam, int ell, int k, double omega, ProfileChoice choice);

// Cylindrical radial electric field, same closed form as the magnetic case.
CouplingProfile pauli_cylindrical(Family fam, int ell, int m, double omega, ProfileChoice choice);

struct DiracLevel {
    int n = 0;
    Rational gap_coeff;   // (E^2 - M^2) / omega, exact
    double gap = 0.0;     // E^2 - M^2
    double energy = 0.0;  // positive branch; -energy pairs except unbroken n = 0
};

struct DiracSpectrum {
    CouplingKind kind;
    ProfileChoice choice;
    SusyPhase phase;
    double mass = 0.0;
    std::vector<DiracLevel> levels;
};

SusyPhase susy_phase(const Prepotential& w);
DiracSpectrum dirac_spectrum(const CouplingProfile& profile, double mass, int n_max);

// Two-component radial state; f_minus = (d/dr - W') f_plus / (E + M) vanishes
// identically for the unbroken ground state.
struct DiracState {
    int n = 0;
    double energy = 0.0;
    StructuredFn f_plus, f_minus;
    bool lower_vanishes = false;
};

DiracState dirac_state(const CouplingProfile& profile, double mass, int n);

// 1+1-dimensional Dirac with Lorentz scalar potential V_s = -W' - M; the
// squared problem is the same SUSY pair and E = +-sqrt(curly E_n).
struct ScalarLevel {
    int n = 0;
    double e_abs = 0.0;  // spectrum is {+e_abs, -e_abs}, single E = 0 if present
};

struct Scalar1DSystem {
    ModelParams params;
    ProfileChoice choice;
    double mass = 0.0;
    CouplingProfile vs;  // V_s as a profile (c0 = -M)
    std::vector<ScalarLevel> levels;
};

Scalar1DSystem scalar_1d(const ModelParams& p, ProfileChoice choice, double mass, int n_max);

// psi_minus for level n of a scalar system with energy e (either sign);
// e = 0 returns the exact zero function alongside the ground psi_plus.
DiracState scalar_1d_state(const Scalar1DSystem& sys, int n, int energy_sign);

}  // namespace xlag

#endif
