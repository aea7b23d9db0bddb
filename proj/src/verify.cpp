#include "xlag/verify.hpp"

#include <cmath>
#include <functional>

#include "xlag/eigensystem.hpp"
#include "xlag/numerics.hpp"
#include "xlag/sqm.hpp"

namespace xlag {

namespace {

PolyD to_double_poly(const PolyQ& p) {
    std::vector<double> c;
    c.reserve(p.coeffs().size());
    for (const auto& q : p.coeffs()) c.push_back(q.to_double());
    return PolyD(std::move(c));
}

// fast double-precision V(x) with the rational-function pieces precomputed
std::function<double(double)> potential_fn(const Hamiltonian& h) {
    const RatFnQ u = h.w.parts.u();
    const PolyD un = to_double_poly(u.num()), ud = to_double_poly(u.den());
    const PolyD unp = un.derivative(), udp = ud.derivative();
    const double omega = h.w.omega, chi = h.chi, off = h.offset();
    return [=](double x) {
        const double eta = omega * x * x;
        const double d = ud.eval(eta);
        const double uv = un.eval(eta) / d;
        const double upv = (unp.eval(eta) * d - un.eval(eta) * udp.eval(eta)) / (d * d);
        return (omega / eta) * (uv * uv - chi * uv) + chi * 2.0 * omega * upv + off;
    };
}

CheckResult make_check(std::string name, double measured, double tolerance) {
    const bool ok = measured <= tolerance;
    return {std::move(name), measured, tolerance, ok};
}

bool dc_in_range(const ModelParams& p) {
    return p.family == Family::L2 || p.g > Rational(1, 2);
}

}  // namespace

std::vector<CheckResult> run_verify(const ModelParams& p, const VerifyOptions& opt) {
    if (opt.n_max < 1) throw std::invalid_argument("run_verify: n_max must be >= 1");
    std::vector<CheckResult> out;

    const PolyQ xi_g = deforming_xi(p.family, p.ell, p.g);
    const PolyQ xi_g1 = deforming_xi(p.family, p.ell, p.g + Rational(1));

    out.push_back(make_check("seed-zero-free",
                             std::max(count_positive_roots(xi_g), count_positive_roots(xi_g1)),
                             0.0));
    out.push_back(make_check(
        "seed-degree",
        std::max(std::abs(xi_g.degree() - p.ell), std::abs(xi_g1.degree() - p.ell)), 0.0));

    double deg_bad = 0.0;
    for (int n = 0; n <= opt.n_max; ++n)
        deg_bad = std::max(deg_bad,
                           static_cast<double>(std::abs(exceptional_p(p, n).degree() - (p.ell + n))));
    out.push_back(make_check("polynomial-degree", deg_bad, 0.0));

    out.push_back(make_check("lowest-equals-shifted-seed",
                             exceptional_p(p, 0) == xi_g1 ? 0.0 : 1.0, 0.0));

    {  // with the deformation switched off the classical states must come back
        const ModelParams p0 = ModelParams::make(p.family, 0, p.g, p.omega);
        double bad = 0.0;
        for (int n = 0; n <= std::min(opt.n_max, 8); ++n)
            if (!(exceptional_p(p0, n) == laguerre(n, p.g - Rational(1, 2)))) bad += 1.0;
        out.push_back(make_check("classical-limit", bad, 0.0));
    }

    const Hamiltonian h_def = hamiltonian_deformed(p);
    {
        double worst = 0.0;
        for (int n = 0; n <= opt.n_max; ++n) {
            StructuredFn f = deformed_state_raw(p, n);
            if (opt.perturb != 0.0 && n == std::min(1, opt.n_max)) {
                std::vector<Rational> c(f.rat.num().coeffs());
                c[0] = c[0] * (Rational(1) + Rational::from_double(opt.perturb));
                f.rat = RatFnQ(PolyQ(std::move(c)), f.rat.den());
            }
            worst = std::max(worst, residual_measure(h_def, f, deformed_energy_coeff(n)));
        }
        out.push_back(make_check("schrodinger-residual", worst, 0.0));
    }

    const Eigensystem sys = eigensystem_deformed(p, opt.n_max);
    {
        const auto gram = gram_matrix(sys);
        double worst = 0.0;
        for (std::size_t i = 0; i < gram.size(); ++i)
            for (std::size_t j = 0; j < gram.size(); ++j)
                worst = std::max(worst, std::abs(gram[i][j] - (i == j ? 1.0 : 0.0)));
        out.push_back(make_check("orthonormality", worst, 1e-10));
    }

    if (dc_in_range(p)) {
        const auto [h_plus, h_minus] = hamiltonian_dc_pair(p);
        const Rational shift = dc_energy_coeff(p, 0);
        const double sw = std::sqrt(p.omega);
        const auto grid = log_linear_grid(1e-3 / sw, 8.0 / sw, opt.grid_points);

        {  // minus partner is the deformed Hamiltonian shifted by a constant
            const auto vm = potential_fn(h_minus);
            const auto vd = potential_fn(h_def);
            const double c = shift.to_double() * p.omega;
            double worst = 0.0;
            for (double x : grid) {
                const double a = vm(x), b = vd(x) + c;
                worst = std::max(worst, std::abs(a - b) / (1.0 + std::abs(a)));
            }
            out.push_back(make_check("dc-partner-potential", worst, 1e-10));
        }

        double worst_p = 0.0, worst_m = 0.0;
        for (int n = 0; n <= opt.n_max; ++n) {
            const StructuredFn f = dc_plus_state_raw(p, n);
            const Rational e = dc_energy_coeff(p, n);
            worst_p = std::max(worst_p, residual_measure(h_plus, f, e));
            worst_m = std::max(worst_m, residual_measure(h_minus, susy_apply(+1, h_plus.w, f), e));
        }
        out.push_back(make_check("dc-plus-residual", worst_p, 0.0));
        out.push_back(make_check("dc-minus-residual", worst_m, 0.0));

        {  // intertwined minus states coincide with the deformed ones
            const auto [plus, minus] = eigensystem_dc(p, opt.n_max);
            double worst = 0.0;
            for (int n = 0; n <= opt.n_max; ++n)
                for (double x : grid)
                    worst = std::max(
                        worst, std::abs(minus.states[n].wf.eval(x) - sys.states[n].wf.eval(x)));
            out.push_back(make_check("dc-partner-states", worst, 1e-10));
        }
    }

    if (opt.with_fd) {
        const double e_top = deformed_energy_coeff(opt.n_max).to_double();
        const double x_max = std::sqrt((e_top + 40.0) / p.omega);
        const auto eigs =
            fd_eigenvalues_refined(potential_fn(h_def), 0.0, x_max, opt.fd_nodes, opt.n_max + 1);
        double worst = 0.0;
        for (int n = 0; n <= opt.n_max; ++n)
            worst = std::max(worst, std::abs(eigs[n] - 4.0 * n * p.omega) / p.omega);
        out.push_back(make_check("fd-spectrum", worst, 1e-3));

        if (dc_in_range(p)) {
            const Hamiltonian h_plus = hamiltonian_dc_pair(p).first;
            const double top = dc_energy_coeff(p, opt.n_max).to_double();
            const double xm = std::sqrt((top + 40.0) / p.omega);
            const auto dce =
                fd_eigenvalues_refined(potential_fn(h_plus), 0.0, xm, opt.fd_nodes, opt.n_max + 1);
            double w2 = 0.0;
            for (int n = 0; n <= opt.n_max; ++n)
                w2 = std::max(w2,
                              std::abs(dce[n] - dc_energy_coeff(p, n).to_double() * p.omega) / p.omega);
            out.push_back(make_check("fd-spectrum-dc", w2, 1e-3));
        }
    }

    return out;
}

bool all_pass(const std::vector<CheckResult>& checks) {
    for (const auto& c : checks)
        if (!c.pass) return false;
    return true;
}

json verify_report(const ModelParams& p, const VerifyOptions& opt,
                   const std::vector<CheckResult>& checks) {
    json jc = json::array();
    for (const auto& c : checks)
        jc.push_back(json{{"name", c.name},
                          {"measured", c.measured},
                          {"tolerance", c.tolerance},
                          {"pass", c.pass}});
    return json{{"schema_version", 1},
                {"model", to_json(p)},
                {"options",
                 json{{"n_max", opt.n_max},
                      {"perturb", opt.perturb},
                      {"with_fd", opt.with_fd},
                      {"grid_points", opt.grid_points}}},
                {"checks", jc},
                {"all_pass", all_pass(checks)}};
}

}  // namespace xlag
