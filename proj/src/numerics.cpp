#include "xlag/numerics.hpp"

#include <algorithm>
#include <cmath>

namespace xlag {

std::pair<std::vector<double>, std::vector<double>> legendre_rule(int order) {
    if (order < 1) throw std::invalid_argument("legendre_rule: order must be >= 1");
    std::vector<double> x(order), w(order);
    const int m = (order + 1) / 2;
    for (int i = 0; i < m; ++i) {
        // Chebyshev initial guess, then Newton on P_order
        double z = std::cos(M_PI * (i + 0.75) / (order + 0.5));
        double pp = 0.0;
        for (int it = 0; it < 100; ++it) {
            double p0 = 1.0, p1 = 0.0;
            for (int j = 0; j < order; ++j) {
                const double p2 = p1;
                p1 = p0;
                p0 = ((2.0 * j + 1.0) * z * p1 - j * p2) / (j + 1.0);
            }
            pp = order * (z * p0 - p1) / (z * z - 1.0);
            const double dz = p0 / pp;
            z -= dz;
            if (std::abs(dz) < 1e-15) break;
        }
        x[i] = -z;
        x[order - 1 - i] = z;
        w[i] = w[order - 1 - i] = 2.0 / ((1.0 - z * z) * pp * pp);
    }
    return {std::move(x), std::move(w)};
}

namespace {

void append_panel(double a, double b, const std::vector<double>& xs, const std::vector<double>& ws,
                  std::vector<double>& nodes, std::vector<double>& weights) {
    const double mid = 0.5 * (a + b), half = 0.5 * (b - a);
    for (std::size_t i = 0; i < xs.size(); ++i) {
        nodes.push_back(mid + half * xs[i]);
        weights.push_back(half * ws[i]);
    }
}

}  // namespace

Quadrature Quadrature::half_line(double end, int panel_order, int n_panels) {
    if (!(end > 0.0)) throw std::invalid_argument("Quadrature: end must be > 0");
    if (panel_order < 2 || n_panels < 2) throw std::invalid_argument("Quadrature: rule too small");
    Quadrature q;
    q.end_ = end;
    const auto [cx, cw] = legendre_rule(panel_order);
    const auto [fx, fw] = legendre_rule(2 * panel_order);
    double hi = end;
    for (int j = 0; j < n_panels; ++j) {
        const double lo = (j + 1 == n_panels) ? 0.0 : hi * 0.5;
        append_panel(lo, hi, fx, fw, q.x_, q.w_);
        append_panel(lo, hi, cx, cw, q.cx_, q.cw_);
        hi = lo;
    }
    return q;
}

std::vector<double> log_linear_grid(double x_min, double x_max, int n) {
    if (!(x_min > 0.0) || !(x_max > x_min)) throw std::invalid_argument("log_linear_grid: bad range");
    if (n < 4) throw std::invalid_argument("log_linear_grid: need at least 4 points");
    const double pivot = std::sqrt(x_min * x_max);
    const int n_log = n / 2;
    std::vector<double> g;
    g.reserve(n);
    const double rho = std::pow(pivot / x_min, 1.0 / (n_log - 1));
    for (int i = 0; i < n_log; ++i) g.push_back(x_min * std::pow(rho, i));
    const int n_lin = n - n_log;
    for (int j = 1; j <= n_lin; ++j) g.push_back(pivot + (x_max - pivot) * j / n_lin);
    return g;
}

namespace {

// eigenvalues of the tridiagonal FD matrix strictly below lambda
int sturm_count(const std::vector<double>& d, double off_sq, double pivmin, double lambda) {
    int cnt = 0;
    double q = INFINITY;  // first pivot is d[0] - lambda, with no off-diagonal term
    for (double di : d) {
        q = (di - lambda) - off_sq / q;
        if (std::abs(q) < pivmin) q = -pivmin;
        if (q < 0.0) ++cnt;
    }
    return cnt;
}

}  // namespace

std::vector<double> fd_eigenvalues(const std::function<double(double)>& V, double x_min,
                                   double x_max, int n, int k, double tol) {
    if (n < 2 || k < 1 || k > n) throw std::invalid_argument("fd_eigenvalues: bad sizes");
    if (!(x_max > x_min)) throw std::invalid_argument("fd_eigenvalues: bad interval");
    const double h = (x_max - x_min) / (n + 1);
    const double inv_h2 = 1.0 / (h * h);
    std::vector<double> d(n);
    double vmin = INFINITY, vmax = -INFINITY;
    for (int i = 0; i < n; ++i) {
        const double v = V(x_min + (i + 1) * h);
        if (!std::isfinite(v)) throw std::runtime_error("fd_eigenvalues: potential not finite on grid");
        d[i] = 2.0 * inv_h2 + v;
        vmin = std::min(vmin, v);
        vmax = std::max(vmax, v);
    }
    const double off_sq = inv_h2 * inv_h2;
    const double pivmin = 2.3e-308 * std::max(off_sq, 1.0);

    // Gershgorin: all eigenvalues lie in [vmin, vmax + 4/h^2]
    double lo = vmin - 1.0;
    const double gersh_hi = vmax + 4.0 * inv_h2 + 1.0;
    double hi = lo + 1.0;
    while (sturm_count(d, off_sq, pivmin, hi) < k) {
        hi = lo + 2.0 * (hi - lo);
        if (hi > gersh_hi) {
            hi = gersh_hi;
            if (sturm_count(d, off_sq, pivmin, hi) < k)
                throw std::runtime_error("fd_eigenvalues: Sturm count never reached k");
            break;
        }
    }

    std::vector<double> eigs(k);
    for (int j = 0; j < k; ++j) {
        double a = lo, b = hi;
        while (b - a > tol) {
            const double mid = 0.5 * (a + b);
            if (sturm_count(d, off_sq, pivmin, mid) >= j + 1)
                b = mid;
            else
                a = mid;
        }
        eigs[j] = 0.5 * (a + b);
        lo = eigs[j] - tol;  // eigenvalues are ordered; reuse as lower bound
    }
    return eigs;
}

std::vector<double> fd_eigenvalues_refined(const std::function<double(double)>& V, double x_min,
                                           double x_max, int n, int k, double tol) {
    const auto coarse = fd_eigenvalues(V, x_min, x_max, n, k, tol);
    const auto fine = fd_eigenvalues(V, x_min, x_max, 2 * n + 1, k, tol);
    std::vector<double> out(k);
    for (int j = 0; j < k; ++j) out[j] = (4.0 * fine[j] - coarse[j]) / 3.0;
    return out;
}

std::vector<double> thomas_solve(const std::vector<double>& lower, const std::vector<double>& diag,
                                 const std::vector<double>& upper, const std::vector<double>& rhs) {
    const std::size_t n = diag.size();
    if (lower.size() != n || upper.size() != n || rhs.size() != n)
        throw std::invalid_argument("thomas_solve: size mismatch");
    std::vector<double> c(n), s(n), x(n);
    double beta = diag[0];
    if (beta == 0.0) throw std::runtime_error("thomas_solve: zero pivot");
    c[0] = upper[0] / beta;
    s[0] = rhs[0] / beta;
    for (std::size_t i = 1; i < n; ++i) {
        beta = diag[i] - lower[i] * c[i - 1];
        if (beta == 0.0) throw std::runtime_error("thomas_solve: zero pivot");
        c[i] = upper[i] / beta;
        s[i] = (rhs[i] - lower[i] * s[i - 1]) / beta;
    }
    x[n - 1] = s[n - 1];
    for (std::size_t i = n - 1; i-- > 0;) x[i] = s[i] - c[i] * x[i + 1];
    return x;
}

double trapezoid(const std::vector<double>& x, const std::vector<double>& y) {
    if (x.size() != y.size() || x.size() < 2) throw std::invalid_argument("trapezoid: bad input");
    double s = 0.0;
    for (std::size_t i = 1; i < x.size(); ++i) s += 0.5 * (x[i] - x[i - 1]) * (y[i] + y[i - 1]);
    return s;
}

double fit_exp_rate(const std::vector<double>& t, const std::vector<double>& vals) {
    if (t.size() != vals.size() || t.size() < 2) throw std::invalid_argument("fit_exp_rate: bad input");
    double st = 0, sy = 0, stt = 0, sty = 0;
    for (std::size_t i = 0; i < t.size(); ++i) {
        if (!(vals[i] > 0.0)) throw std::invalid_argument("fit_exp_rate: values must be positive");
        const double y = std::log(vals[i]);
        st += t[i];
        sy += y;
        stt += t[i] * t[i];
        sty += t[i] * y;
    }
    const double n = static_cast<double>(t.size());
    const double denom = n * stt - st * st;
    if (denom == 0.0) throw std::invalid_argument("fit_exp_rate: degenerate time grid");
    return -(n * sty - st * sy) / denom;
}

}  // namespace xlag
