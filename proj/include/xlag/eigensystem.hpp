#ifndef XLAG_EIGENSYSTEM_HPP
#define XLAG_EIGENSYSTEM_HPP

#include <utility>
#include <vector>

#include "xlag/exceptional.hpp"
#include "xlag/numerics.hpp"
#include "xlag/sqm.hpp"

namespace xlag {

struct EigenState {
    int n = 0;
    Rational energy_coeff;  // E / omega, exact
    double energy = 0.0;
    StructuredFn wf;        // unit norm, positive as x -> 0+
};

struct Eigensystem {
    ModelParams params;
    Hamiltonian h;
    std::vector<EigenState> states;
    Quadrature quad;
};

// Unnormalized closed forms.  The deformed bound state carries the full
// exceptional polynomial over the deforming seed; the Darboux-Crum "plus"
// partner is an ordinary Laguerre state in disguise.
StructuredFn deformed_state_raw(const ModelParams& p, int n);
StructuredFn dc_plus_state_raw(const ModelParams& p, int n);

Rational deformed_energy_coeff(int n);                        // 4n
Rational dc_energy_coeff(const ModelParams& p, int n);        // family-dependent affine shift

// Scales to unit L2 norm on (0, quad.end()) and fixes the sign so the state is
// positive immediately to the right of the origin.  Throws if the norm is not
// a positive finite number.
void normalize_state(StructuredFn& f, const Quadrature& q);

// Quadrature sized for states up to n_max of this model.
Quadrature default_quadrature(const ModelParams& p, int n_max);

Eigensystem eigensystem_deformed(const ModelParams& p, int n_max);

// {plus system, minus system} sharing the Darboux-Crum prepotential; minus
// states are the intertwined images (d/dx - W') f+ and carry the same energy.
std::pair<Eigensystem, Eigensystem> eigensystem_dc(const ModelParams& p, int n_max);

double overlap(const Quadrature& q, const StructuredFn& a, const StructuredFn& b);
std::vector<std::vector<double>> gram_matrix(const Eigensystem& sys);

}  // namespace xlag

#endif
