#ifndef XLAG_NUMERICS_HPP
#define XLAG_NUMERICS_HPP

#include <cmath>
#include <functional>
#include <stdexcept>
#include <utility>
#include <vector>

namespace xlag {

// Gauss-Legendre nodes and weights on [-1, 1].
std::pair<std::vector<double>, std::vector<double>> legendre_rule(int order);

// Composite Gauss-Legendre quadrature on (0, end], with geometrically shrinking
// panels toward 0 so mildly nonsmooth x^p factors converge.  A coarse rule at
// half the panel order rides along; integrate_checked uses it to flag
// non-convergence instead of silently returning garbage.
class Quadrature {
public:
    static Quadrature half_line(double end, int panel_order = 20, int n_panels = 46);

    template <class F>
    double integrate(F&& f) const {
        double s = 0.0;
        for (std::size_t i = 0; i < x_.size(); ++i) s += w_[i] * f(x_[i]);
        return s;
    }

    template <class F>
    double integrate_checked(F&& f, double rel_tol = 1e-9) const {
        double fine = integrate(f);
        double coarse = 0.0;
        for (std::size_t i = 0; i < cx_.size(); ++i) coarse += cw_[i] * f(cx_[i]);
        const double scale = std::max(std::abs(fine), 1e-300);
        if (!std::isfinite(fine) || std::abs(fine - coarse) > rel_tol * std::max(scale, 1.0))
            throw std::runtime_error("quadrature did not converge on this integrand");
        return fine;
    }

    double end() const { return end_; }
    const std::vector<double>& nodes() const { return x_; }

private:
    Quadrature() = default;
    double end_ = 1.0;
    std::vector<double> x_, w_;    // fine rule (doubled order)
    std::vector<double> cx_, cw_;  // coarse rule
};

// n points on [x_min, x_max]: geometric spacing up to the geometric mean of the
// endpoints, uniform beyond; resolves both the x -> 0 power behaviour and the
// oscillator tail.
std::vector<double> log_linear_grid(double x_min, double x_max, int n);

// k lowest eigenvalues of -u'' + V u = lambda u on (x_min, x_max), Dirichlet
// ends, standard three-point stencil on n interior nodes.  Bisection on the
// Sturm count, so no eigenvalue can be skipped or double-counted.
std::vector<double> fd_eigenvalues(const std::function<double(double)>& V, double x_min,
                                   double x_max, int n, int k, double tol = 1e-10);

// Same, Richardson-extrapolated from n and 2n+1 nodes (h and h/2).
std::vector<double> fd_eigenvalues_refined(const std::function<double(double)>& V, double x_min,
                                           double x_max, int n, int k, double tol = 1e-10);

// Tridiagonal solve (Thomas); diag is overwritten-safe (copies internally).
std::vector<double> thomas_solve(const std::vector<double>& lower, const std::vector<double>& diag,
                                 const std::vector<double>& upper, const std::vector<double>& rhs);

double trapezoid(const std::vector<double>& x, const std::vector<double>& y);

// Least-squares decay rate: fits log(vals) = a - rate * t, returns rate.
double fit_exp_rate(const std::vector<double>& t, const std::vector<double>& vals);

}  // namespace xlag

#endif
