#ifndef XLAG_FOKKER_HPP
#define XLAG_FOKKER_HPP

#include <functional>
#include <vector>

#include "xlag/eigensystem.hpp"
#include "xlag/exceptional.hpp"
#include "xlag/sqm.hpp"

namespace xlag {

// dP/dt = -d/dx (D1 P) + d^2/dx^2 P on x > 0, with drift D1 = 2 W'.  The
// similarity transform P = phi_0 u maps this onto the deformed Schrodinger
// problem, so the relaxation rates are its gaps 4 n omega exactly.

struct GridDensity {
    std::vector<double> x, p;
    double time = 0.0;
    double mass() const;
};

struct FpModel {
    ModelParams params;
    Prepotential w;
    std::vector<EigenState> modes;  // orthonormal phi_n, phi_0 = sqrt(stationary)
    Quadrature quad;

    double drift(double x) const { return 2.0 * w.eval_prime(x); }
    double stationary(double x) const;  // phi_0^2, unit mass
};

// Rejects prepotentials whose exp(2W) is not normalizable (no stationary
// density to relax to, e.g. the Darboux-Crum L1 prepotential).
void fp_validate(const Prepotential& w);

FpModel fp_model(const ModelParams& p, int n_max);

// Mode coefficients c_n = int (phi_n / phi_0) P(x,0) dx; the ratio form stays
// finite at the origin where both states vanish.  c_0 is the initial mass.
// Throws if the tail of |c_n| has not dropped below tail_tol relatively.
std::vector<double> fp_expand(const FpModel& m, const std::function<double(double)>& p0,
                              double tail_tol = 1e-8);

GridDensity fp_evolve(const FpModel& m, const std::vector<double>& c, double t,
                      const std::vector<double>& grid);

// Crank-Nicolson finite-volume reference solver on uniform cells over
// [0, x_max], zero-flux ends; conserves mass to roundoff and aborts if it
// leaks or the solution stops being finite.
GridDensity fp_oracle_cn(const FpModel& m, const std::function<double(double)>& p0, double t_final,
                         int n_cells, double x_max, double dt);

// Relative discrete residual of the stationary density under the nodal FP
// stencil, Richardson-extrapolated from h and h/2 at shared nodes.
double fp_stationary_residual(const FpModel& m, int n, double x_max);

// Densities on the same grid; trapezoid integral of |a - b|.
double l1_distance(const GridDensity& a, const GridDensity& b);

}  // namespace xlag

#endif
