#include <cmath>
#include <cstdio>
#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "xlag/dirac.hpp"
#include "xlag/eigensystem.hpp"
#include "xlag/exceptional.hpp"
#include "xlag/fokker.hpp"
#include "xlag/io.hpp"
#include "xlag/numerics.hpp"
#include "xlag/verify.hpp"

namespace {

using namespace xlag;

struct ModelArgs {
    std::string family = "L1";
    int ell = 1;
    std::string g = "1";
    double omega = 1.0;

    ModelParams params() const {
        return ModelParams::make(family_from_string(family), ell, Rational::from_string(g), omega);
    }
};

void add_model_options(CLI::App* cmd, ModelArgs& m, bool with_g = true) {
    cmd->add_option("--family", m.family, "polynomial family, L1 or L2");
    cmd->add_option("--ell", m.ell, "deformation degree (>= 0)");
    if (with_g) cmd->add_option("--g", m.g, "coupling as an exact fraction, e.g. 3/2");
    cmd->add_option("--omega", m.omega, "oscillator frequency (> 0)");
}

int cmd_poly(const ModelArgs& margs, int n_max, const std::string& out) {
    const ModelParams p = margs.params();
    json jp = json::array();
    for (int n = 0; n <= n_max; ++n) {
        const PolyQ poly = exceptional_p(p, n);
        jp.push_back(json{{"n", n}, {"degree", poly.degree()}, {"coeffs", to_json(poly)["coeffs"]}});
    }
    const json doc{{"schema_version", 1},
                   {"model", to_json(p)},
                   {"seed", to_json(deforming_xi(p.family, p.ell, p.g))},
                   {"seed_shifted", to_json(deforming_xi(p.family, p.ell, p.g + Rational(1)))},
                   {"polynomials", jp}};
    if (out.empty())
        std::cout << doc.dump(2) << "\n";
    else
        write_file_with_manifest(out, doc.dump(2) + "\n");
    return 0;
}

int cmd_verify(const ModelArgs& margs, const VerifyOptions& opt, const std::string& out) {
    const ModelParams p = margs.params();
    const auto checks = run_verify(p, opt);
    for (const auto& c : checks)
        std::printf("[%s] %-28s measured=%-12s tol=%s\n", c.pass ? "PASS" : "FAIL", c.name.c_str(),
                    format_double(c.measured).c_str(), format_double(c.tolerance).c_str());
    if (!out.empty()) write_file_with_manifest(out, verify_report(p, opt, checks).dump(2) + "\n");
    return all_pass(checks) ? 0 : 1;
}

CouplingProfile build_profile(const std::string& coupling, const ModelArgs& margs, int label,
                              ProfileChoice choice) {
    const Family fam = family_from_string(margs.family);
    if (coupling == "magnetic") return vector_potential(fam, margs.ell, label, margs.omega, choice);
    if (coupling == "central") return pauli_central(fam, margs.ell, label, margs.omega, choice);
    if (coupling == "cylindrical")
        return pauli_cylindrical(fam, margs.ell, label, margs.omega, choice);
    throw std::invalid_argument("unknown coupling '" + coupling +
                                "' (expected magnetic, central, cylindrical or scalar)");
}

int cmd_dirac(const std::string& coupling, const ModelArgs& margs, int label, bool has_label,
              const std::string& profile, double mass, int n_max, const std::string& out,
              const std::string& states_csv) {
    const ProfileChoice choice = profile_from_string(profile);

    if (coupling == "scalar") {
        const Scalar1DSystem sys = scalar_1d(margs.params(), choice, mass, n_max);
        std::printf("lorentz-scalar %s  V_s(1)=%s\n", to_string(choice).c_str(),
                    format_double(sys.vs.eval(1.0)).c_str());
        json jl = json::array();
        for (const auto& lv : sys.levels) {
            std::printf("n=%d  E=+-%s\n", lv.n, format_double(lv.e_abs).c_str());
            jl.push_back(json{{"n", lv.n}, {"energy_abs", lv.e_abs}});
        }
        if (!out.empty()) {
            const json doc{{"schema_version", 1},
                           {"coupling", "lorentz-scalar"},
                           {"profile", to_string(choice)},
                           {"model", to_json(sys.params)},
                           {"mass", mass},
                           {"levels", jl}};
            write_file_with_manifest(out, doc.dump(2) + "\n");
        }
        if (!states_csv.empty()) {
            const double sw = std::sqrt(margs.omega);
            const auto grid = log_linear_grid(1e-3 / sw, 8.0 / sw, 400);
            std::string csv = "n,x,psi_plus,psi_minus\n";
            for (int n = 0; n <= n_max; ++n) {
                const DiracState st = scalar_1d_state(sys, n, +1);
                for (double x : grid)
                    csv += csv_line({static_cast<double>(n), x, st.f_plus.eval(x), st.f_minus.eval(x)});
            }
            write_file_with_manifest(states_csv, csv);
        }
        return 0;
    }

    if (!has_label)
        throw std::invalid_argument("coupling '" + coupling + "' needs --m (or --k for central)");
    const CouplingProfile prof = build_profile(coupling, margs, label, choice);
    const DiracSpectrum spec = dirac_spectrum(prof, mass, n_max);
    std::printf("%s %s  g=%s  susy=%s%s\n", to_string(prof.kind).c_str(),
                to_string(prof.choice).c_str(), prof.params.g.str().c_str(),
                to_string(spec.phase).c_str(), prof.dirac_oscillator ? "  [dirac-oscillator]" : "");
    for (const auto& lv : spec.levels)
        std::printf("n=%d  E^2-M^2=%s  E=%s\n", lv.n, format_double(lv.gap).c_str(),
                    format_double(lv.energy).c_str());
    if (!out.empty()) write_file_with_manifest(out, to_json(spec, prof).dump(2) + "\n");
    if (!states_csv.empty()) {
        const double sw = std::sqrt(margs.omega);
        const auto grid = log_linear_grid(1e-3 / sw, 8.0 / sw, 400);
        std::string csv = "n,r,f_plus,f_minus\n";
        for (int n = 0; n <= n_max; ++n) {
            const DiracState st = dirac_state(prof, mass, n);
            for (double r : grid)
                csv += csv_line({static_cast<double>(n), r, st.f_plus.eval(r), st.f_minus.eval(r)});
        }
        write_file_with_manifest(states_csv, csv);
    }
    return 0;
}

int cmd_fp(const ModelArgs& margs, int modes, double t_max, int n_times, const std::string& init,
           double beta, bool oracle, int cells, double dt, const std::string& out,
           const std::string& report) {
    const ModelParams p = margs.params();
    const FpModel model = fp_model(p, modes);
    const double sw = std::sqrt(p.omega);
    const double x_max = 8.0 / sw;

    std::function<double(double)> p0;
    if (init == "stationary") {
        p0 = [&](double x) { return model.stationary(x); };
    } else if (init == "bump") {
        // Stationary density with the deforming denominator cleared, then
        // tilted by exp(-beta eta).  This is the family whose mode
        // coefficients decay geometrically (ratio beta/(1+beta)); a bump
        // that is gaussian in x itself decays only root-exponentially and
        // would need hundreds of modes to pass the expansion tail check.
        if (!(beta > -0.5) || !(beta <= 2.0))
            throw std::invalid_argument("bump tilt --beta must lie in (-1/2, 2]");
        const PolyQ xi = model.modes[0].wf.rat.den();
        auto raw = [&, beta, xi](double x) {
            const double eta = p.omega * x * x;
            const double d = xi.eval(eta);
            return model.stationary(x) * d * d * std::exp(-beta * eta);
        };
        const double mass = model.quad.integrate_checked(raw);
        p0 = [raw, mass](double x) { return raw(x) / mass; };
    } else {
        throw std::invalid_argument("unknown init '" + init + "' (expected stationary or bump)");
    }

    const auto c = fp_expand(model, p0);
    std::vector<double> times;
    for (int i = 0; i < n_times; ++i) times.push_back(t_max * i / std::max(1, n_times - 1));

    const int nc = cells > 0 ? cells : 1600;
    std::vector<double> grid(nc);
    for (int i = 0; i < nc; ++i) grid[i] = (i + 0.5) * x_max / nc;

    std::string csv = "t,x,p\n";
    for (double t : times) {
        const GridDensity d = fp_evolve(model, c, t, grid);
        for (std::size_t i = 0; i < grid.size(); ++i) csv += csv_line({t, grid[i], d.p[i]});
    }
    if (!out.empty()) write_file_with_manifest(out, csv);

    json jr{{"schema_version", 1},
            {"model", to_json(p)},
            {"init", init},
            {"modes", static_cast<int>(c.size())},
            {"coefficients", c},
            {"times", times}};

    std::printf("modes=%zu  c0=%s  c1=%s\n", c.size(), format_double(c[0]).c_str(),
                format_double(c[1]).c_str());

    if (oracle) {
        const double step = dt > 0 ? dt : 2.5e-4 / p.omega;
        const GridDensity num = fp_oracle_cn(model, p0, t_max, nc, x_max, step);
        const GridDensity spec = fp_evolve(model, c, t_max, num.x);
        const double l1 = l1_distance(spec, num);
        const double stat = fp_stationary_residual(model, 8000, x_max);
        std::printf("oracle: l1=%s  stationary-residual=%s\n", format_double(l1).c_str(),
                    format_double(stat).c_str());
        jr["oracle"] = json{{"cells", nc}, {"dt", step}, {"l1_at_tmax", l1},
                            {"stationary_residual", stat}};
    }
    if (!report.empty()) write_file_with_manifest(report, jr.dump(2) + "\n");
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exceptional-Laguerre deformed oscillators: polynomials, partner spectra, "
                 "Dirac couplings and Fokker-Planck relaxation"};
    app.require_subcommand(1);

    ModelArgs pm;
    int p_nmax = 5;
    std::string p_out;
    auto* poly = app.add_subcommand("poly", "emit the seed and deformed polynomials");
    add_model_options(poly, pm);
    poly->add_option("--nmax", p_nmax, "highest level");
    poly->add_option("--out", p_out, "write JSON here instead of stdout");

    ModelArgs vm;
    VerifyOptions vopt;
    std::string v_out;
    auto* verify = app.add_subcommand("verify", "run the consistency checks for one model");
    add_model_options(verify, vm);
    verify->add_option("--nmax", vopt.n_max, "levels to check");
    verify->add_option("--perturb", vopt.perturb, "fault injection: relative coefficient error");
    verify->add_flag("--fd", vopt.with_fd, "add finite-difference spectral cross-checks");
    verify->add_option("--grid-points", vopt.grid_points, "grid size for pointwise identities");
    verify->add_option("--fd-nodes", vopt.fd_nodes, "interior nodes for the FD oracle");
    verify->add_option("--out", v_out, "write the JSON report here");

    ModelArgs dm;
    std::string d_coupling = "magnetic", d_profile = "deformed", d_out, d_states;
    int d_m = 0, d_k = 0;
    double d_mass = 1.0;
    int d_nmax = 5;
    auto* dirac = app.add_subcommand("dirac", "relativistic spectra for solvable couplings");
    add_model_options(dirac, dm);
    dirac->add_option("--coupling", d_coupling, "magnetic, central, cylindrical or scalar");
    dirac->add_option("--profile", d_profile, "deformed or dc");
    auto* opt_m = dirac->add_option("--m", d_m, "magnetic quantum number (>= 0)");
    auto* opt_k = dirac->add_option("--k", d_k, "spin-orbit quantum number (< 0)");
    dirac->add_option("--mass", d_mass, "fermion mass M");
    dirac->add_option("--nmax", d_nmax, "levels to list");
    dirac->add_option("--out", d_out, "write the spectrum JSON here");
    dirac->add_option("--states", d_states, "write sampled two-component states (CSV) here");

    ModelArgs fm;
    fm.g = "1";
    int f_modes = 26, f_times = 6, f_cells = 0;
    double f_tmax = 0.5, f_beta = 0.5, f_dt = 0.0;
    std::string f_init = "bump", f_out, f_report;
    bool f_oracle = false;
    auto* fp = app.add_subcommand("fp", "spectral Fokker-Planck relaxation");
    add_model_options(fp, fm);
    fp->add_option("--modes", f_modes, "number of relaxation modes");
    fp->add_option("--tmax", f_tmax, "final time");
    fp->add_option("--times", f_times, "snapshots between 0 and tmax");
    fp->add_option("--init", f_init, "initial density: stationary or bump");
    fp->add_option("--beta", f_beta, "inward tilt of the bump (coefficient ratio beta/(1+beta))");
    fp->add_flag("--oracle", f_oracle, "cross-check against the Crank-Nicolson solver");
    fp->add_option("--cells", f_cells, "finite-volume cells for oracle/output grid");
    fp->add_option("--dt", f_dt, "oracle time step");
    fp->add_option("--out", f_out, "write the evolution CSV here");
    fp->add_option("--report", f_report, "write the JSON report here");

    try {
        app.parse(argc, argv);
        if (poly->parsed()) return cmd_poly(pm, p_nmax, p_out);
        if (verify->parsed()) return cmd_verify(vm, vopt, v_out);
        if (dirac->parsed()) {
            const bool has_k = opt_k->count() > 0, has_m = opt_m->count() > 0;
            const int label = has_k ? d_k : d_m;
            return cmd_dirac(d_coupling, dm, label, has_k || has_m, d_profile, d_mass, d_nmax,
                             d_out, d_states);
        }
        if (fp->parsed())
            return cmd_fp(fm, f_modes, f_tmax, f_times, f_init, f_beta, f_oracle, f_cells,
                          f_dt, f_out, f_report);
        return 2;
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::domain_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}
