#include "xlag/fokker.hpp"

#include <cmath>
#include <stdexcept>

#include "xlag/numerics.hpp"

namespace xlag {

double GridDensity::mass() const { return trapezoid(x, p); }

double FpModel::stationary(double x) const {
    const double v = modes.at(0).wf.eval(x);
    return v * v;
}

void fp_validate(const Prepotential& w) {
    if (w.parts.gauss_sign >= 0 || !(Rational(2) * w.parts.power > Rational(-1)))
        throw std::invalid_argument(
            "fp_validate: exp(2W) is not normalizable, the drift admits no stationary density");
}

FpModel fp_model(const ModelParams& p, int n_max) {
    if (n_max < 1) throw std::invalid_argument("fp_model: need at least the two lowest modes");
    Eigensystem sys = eigensystem_deformed(p, n_max);
    fp_validate(sys.h.w);
    return {p, sys.h.w, std::move(sys.states), std::move(sys.quad)};
}

namespace {

// phi_n / phi_0 evaluated without the vanishing x^p e^{-eta/2} prefactors
double mode_ratio(const FpModel& m, int n, double x) {
    const StructuredFn& a = m.modes[n].wf;
    const StructuredFn& b = m.modes[0].wf;
    const double eta = m.params.omega * x * x;
    double r = (a.scale / b.scale) * a.rat.eval(eta) / b.rat.eval(eta);
    const double dp = (a.power - b.power).to_double();
    if (dp != 0.0) r *= std::pow(x, dp);
    return r;
}

}  // namespace

std::vector<double> fp_expand(const FpModel& m, const std::function<double(double)>& p0,
                              double tail_tol) {
    std::vector<double> c(m.modes.size());
    double cmax = 0.0;
    for (std::size_t n = 0; n < m.modes.size(); ++n) {
        c[n] = m.quad.integrate([&](double x) { return mode_ratio(m, static_cast<int>(n), x) * p0(x); });
        cmax = std::max(cmax, std::abs(c[n]));
    }
    if (c.size() >= 2) {
        const double tail = std::max(std::abs(c[c.size() - 1]), std::abs(c[c.size() - 2]));
        if (tail > tail_tol * std::max(cmax, 1e-300))
            throw std::runtime_error(
                "fp_expand: mode coefficients have not decayed; rebuild the model with more modes");
    }
    return c;
}

GridDensity fp_evolve(const FpModel& m, const std::vector<double>& c, double t,
                      const std::vector<double>& grid) {
    if (c.size() > m.modes.size()) throw std::invalid_argument("fp_evolve: more coefficients than modes");
    GridDensity out{grid, std::vector<double>(grid.size()), t};
    for (std::size_t i = 0; i < grid.size(); ++i) {
        const double x = grid[i];
        double s = 0.0;
        for (std::size_t n = 0; n < c.size(); ++n)
            s += c[n] * m.modes[n].wf.eval(x) * std::exp(-m.modes[n].energy * t);
        out.p[i] = m.modes[0].wf.eval(x) * s;
    }
    return out;
}

GridDensity fp_oracle_cn(const FpModel& m, const std::function<double(double)>& p0, double t_final,
                         int n_cells, double x_max, double dt) {
    if (n_cells < 8 || !(x_max > 0.0) || !(dt > 0.0) || !(t_final >= 0.0))
        throw std::invalid_argument("fp_oracle_cn: bad discretization");
    const int n = n_cells;
    const double h = x_max / n;
    std::vector<double> lower(n, 0.0), diag(n, 0.0), upper(n, 0.0);
    // zero-flux finite volumes: F = D1 P - dP/dx at interior faces only
    for (int f = 1; f < n; ++f) {
        const double a = m.drift(f * h);
        const int i = f - 1;  // cell left of the face
        const double adv = a / (2.0 * h), dif = 1.0 / (h * h);
        diag[i] += -adv - dif;
        upper[i] += -adv + dif;
        lower[i + 1] += adv + dif;
        diag[i + 1] += adv - dif;
    }
    std::vector<double> p(n), x(n);
    for (int i = 0; i < n; ++i) {
        x[i] = (i + 0.5) * h;
        p[i] = p0(x[i]);
    }
    const int steps = std::max(1, static_cast<int>(std::ceil(t_final / dt)));
    const double tau = t_final / steps;
    std::vector<double> ml(n), md(n), mu(n), rhs(n);
    for (int i = 0; i < n; ++i) {
        ml[i] = -0.5 * tau * lower[i];
        md[i] = 1.0 - 0.5 * tau * diag[i];
        mu[i] = -0.5 * tau * upper[i];
    }
    double mass_ref = 0.0;
    for (double v : p) mass_ref += v;
    mass_ref *= h;
    for (int s = 0; s < steps; ++s) {
        for (int i = 0; i < n; ++i) {
            double acc = p[i] + 0.5 * tau * diag[i] * p[i];
            if (i > 0) acc += 0.5 * tau * lower[i] * p[i - 1];
            if (i + 1 < n) acc += 0.5 * tau * upper[i] * p[i + 1];
            rhs[i] = acc;
        }
        p = thomas_solve(ml, md, mu, rhs);
        double mass = 0.0;
        for (double v : p) {
            if (!std::isfinite(v)) throw std::runtime_error("fp_oracle_cn: solution left finite range");
            mass += v;
        }
        mass *= h;
        if (std::abs(mass - mass_ref) > 1e-9 * std::max(std::abs(mass_ref), 1.0))
            throw std::runtime_error("fp_oracle_cn: mass is leaking through the walls");
    }
    return {std::move(x), std::move(p), t_final};
}

double fp_stationary_residual(const FpModel& m, int n, double x_max) {
    if (n < 16 || n % 2 != 0) throw std::invalid_argument("fp_stationary_residual: n must be even and >= 16");
    auto density = [&](double x) { return x == 0.0 ? 0.0 : std::exp(2.0 * m.w.eval(x)); };
    auto drift_p = [&](double x) { return x == 0.0 ? 0.0 : m.drift(x) * density(x); };
    auto residual_on = [&](int cells, std::vector<double>& res) {
        const double h = x_max / cells;
        res.assign(cells - 1, 0.0);
        double scale = 0.0;
        for (int i = 1; i < cells; ++i) {
            const double adv = (drift_p((i + 1) * h) - drift_p((i - 1) * h)) / (2.0 * h);
            const double dif =
                (density((i + 1) * h) - 2.0 * density(i * h) + density((i - 1) * h)) / (h * h);
            res[i - 1] = dif - adv;
            scale = std::max(scale, std::abs(adv) + std::abs(dif));
        }
        return scale;
    };
    std::vector<double> coarse, fine;
    const double scale = residual_on(n, coarse);
    residual_on(2 * n, fine);
    double worst = 0.0;
    for (int i = 1; i < n; ++i) {
        const double extrap = (4.0 * fine[2 * i - 1] - coarse[i - 1]) / 3.0;
        worst = std::max(worst, std::abs(extrap));
    }
    return worst / scale;
}

double l1_distance(const GridDensity& a, const GridDensity& b) {
    if (a.x.size() != b.x.size()) throw std::invalid_argument("l1_distance: grids differ");
    std::vector<double> d(a.x.size());
    for (std::size_t i = 0; i < d.size(); ++i) {
        if (a.x[i] != b.x[i]) throw std::invalid_argument("l1_distance: grids differ");
        d[i] = std::abs(a.p[i] - b.p[i]);
    }
    return trapezoid(a.x, d);
}

}  // namespace xlag
