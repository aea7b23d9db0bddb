// Release gate: one line per criterion, nonzero exit if any of them fails.
// Everything here re-derives its expectations from closed forms or from the
// independent numerical oracles; nothing is compared against cached outputs
// except the determinism check, which compares two fresh runs to each other.
#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <sstream>
#include <string>
#include <vector>

#include <sys/wait.h>

#include "xlag/dirac.hpp"
#include "xlag/eigensystem.hpp"
#include "xlag/exceptional.hpp"
#include "xlag/fokker.hpp"
#include "xlag/numerics.hpp"
#include "xlag/sqm.hpp"

using namespace xlag;

namespace {

const std::vector<Family> kFamilies{Family::L1, Family::L2};
const std::vector<int> kElls{1, 2, 3};
const std::vector<Rational> kGs{Rational(1), Rational(3, 2), Rational(5, 2)};

PolyD to_double_poly(const PolyQ& p) {
    std::vector<double> c;
    for (const auto& q : p.coeffs()) c.push_back(q.to_double());
    return PolyD(std::move(c));
}

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

// eta V / omega as an exact rational function of eta
RatFnQ eta_v_over_omega(const Hamiltonian& h) {
    const RatFnQ u = h.w.parts.u();
    const RatFnQ eta{PolyQ::eta()};
    return u * u - u.scaled(Rational(h.chi)) + (eta * u.derivative()).scaled(Rational(2 * h.chi)) +
           (eta.scaled(h.offset_coeff));
}

std::string slurp(const std::string& path) {
    std::ifstream in(path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

int run_cli(const std::string& args) {
    const std::string cmd =
        std::string(XLAG_CLI_PATH) + " " + args + " > acceptance_cli.log 2>&1";
    const int raw = std::system(cmd.c_str());
    return WIFEXITED(raw) ? WEXITSTATUS(raw) : -1;
}

struct Criterion {
    std::string name;
    double measured = 0.0;
    double tolerance = 0.0;
    bool pass = false;
    double seconds = 0.0;
    std::string note;
};

int failures = 0;

void run(const std::string& name, double tolerance,
         const std::function<double()>& body) {
    Criterion c;
    c.name = name;
    c.tolerance = tolerance;
    const auto t0 = std::chrono::steady_clock::now();
    try {
        c.measured = body();
        c.pass = c.measured <= c.tolerance;
    } catch (const std::exception& e) {
        c.measured = std::nan("");
        c.pass = false;
        c.note = e.what();
    }
    c.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    if (!c.pass) ++failures;
    std::printf("[%s] %-28s measured=%-12g tol=%-8g time=%.1fs%s%s\n", c.pass ? "PASS" : "FAIL",
                c.name.c_str(), c.measured, c.tolerance, c.seconds,
                c.note.empty() ? "" : "  error: ", c.note.c_str());
    std::fflush(stdout);
}

}  // namespace

int main() {
    // 1. cleared residual of (H - 4 n omega) psi_n is the zero polynomial
    run("exact-residual-suite", 0.0, [] {
        double worst = 0.0;
        for (Family fam : kFamilies)
            for (int ell : kElls)
                for (const Rational& g : kGs)
                    for (int n = 0; n <= 5; ++n) {
                        const ModelParams p = ModelParams::make(fam, ell, g, 1.0);
                        const Hamiltonian h = hamiltonian_deformed(p);
                        const StructuredFn f = deformed_state_raw(p, n);
                        worst = std::max(worst, residual_measure(h, f, deformed_energy_coeff(n)));
                    }
        return worst;
    });

    // 2. deg P = ell + n and the lowest member is the shifted seed, exactly
    run("degree-and-seed-identities", 0.0, [] {
        double bad = 0.0;
        for (Family fam : kFamilies)
            for (int ell : kElls)
                for (const Rational& g : kGs) {
                    const ModelParams p = ModelParams::make(fam, ell, g, 1.0);
                    for (int n = 0; n <= 5; ++n)
                        if (exceptional_p(p, n).degree() != ell + n) bad += 1.0;
                    if (!(exceptional_p(p, 0) == deforming_xi(fam, ell, g + Rational(1))))
                        bad += 1.0;
                }
        return bad;
    });

    // 3. with the deformation off, ordinary Laguerre polynomials come back
    run("classical-limit", 0.0, [] {
        double bad = 0.0;
        for (Family fam : kFamilies)
            for (const Rational& g : kGs) {
                const ModelParams p = ModelParams::make(fam, 0, g, 1.0);
                for (int n = 0; n <= 8; ++n)
                    if (!(exceptional_p(p, n) == laguerre(n, g - Rational(1, 2)))) bad += 1.0;
            }
        return bad;
    });

    // 4. independent FD eigensolver reproduces both closed-form spectra
    run("fd-spectrum-oracle", 1e-3, [] {
        double worst = 0.0;
        for (Family fam : kFamilies) {
            const ModelParams p = ModelParams::make(fam, 1, Rational(1), 1.0);
            {
                const Hamiltonian h = hamiltonian_deformed(p);
                const double x_max = std::sqrt(deformed_energy_coeff(5).to_double() + 40.0);
                const auto eigs = fd_eigenvalues_refined(potential_fn(h), 0.0, x_max, 4000, 6);
                for (int n = 0; n <= 5; ++n)
                    worst = std::max(worst, std::abs(eigs[n] - 4.0 * n));
            }
            {
                const Hamiltonian h = hamiltonian_dc_pair(p).first;
                const double x_max = std::sqrt(dc_energy_coeff(p, 5).to_double() + 40.0);
                const auto eigs = fd_eigenvalues_refined(potential_fn(h), 0.0, x_max, 4000, 6);
                for (int n = 0; n <= 5; ++n)
                    worst = std::max(worst,
                                     std::abs(eigs[n] - dc_energy_coeff(p, n).to_double()));
            }
        }
        return worst;
    });

    // 5. partner potential equals the shifted ordinary oscillator, exactly and
    //    pointwise on a 2000-point log-linear grid
    run("partner-shift-identity", 1e-10, [] {
        double worst = 0.0;
        // below x ~ 0.1 the matched 1/x^2 singularities dwarf the 1e-10
        // absolute budget in double arithmetic; the exact check below covers 0+
        const auto grid = log_linear_grid(0.1, 8.0, 2000);
        for (Family fam : kFamilies)
            for (int ell : kElls)
                for (const Rational& g : kGs) {
                    const ModelParams p = ModelParams::make(fam, ell, g, 1.0);
                    const Hamiltonian h_dc = hamiltonian_dc_pair(p).first;
                    const Rational gp = fam == Family::L1
                                            ? g + Rational(ell) - Rational(1)
                                            : g + Rational(ell) + Rational(1);
                    const Hamiltonian h_cl{prepotential_w0(gp, 1.0), +1, Rational(0)};
                    const Rational shift = dc_energy_coeff(p, 0);
                    // exact identity in eta first
                    const RatFnQ diff = eta_v_over_omega(h_dc) - eta_v_over_omega(h_cl) -
                                        RatFnQ(PolyQ::eta().scaled(shift));
                    if (!diff.is_zero()) worst = std::max(worst, 1.0);
                    const auto va = potential_fn(h_dc);
                    const auto vb = potential_fn(h_cl);
                    const double c = shift.to_double();
                    for (double x : grid)
                        worst = std::max(worst, std::abs(va(x) - vb(x) - c));
                }
        return worst;
    });

    // 6. Gram matrix of the normalized deformed bound states
    run("orthonormality", 1e-10, [] {
        double worst = 0.0;
        for (Family fam : kFamilies)
            for (int ell : kElls)
                for (const Rational& g : kGs) {
                    const Eigensystem sys =
                        eigensystem_deformed(ModelParams::make(fam, ell, g, 1.0), 5);
                    const auto gram = gram_matrix(sys);
                    for (std::size_t i = 0; i < gram.size(); ++i)
                        for (std::size_t j = 0; j < gram.size(); ++j)
                            if (i != j) worst = std::max(worst, std::abs(gram[i][j]));
                }
        return worst;
    });

    // 7. two-component pairing: exact ground annihilation, first-order
    //    equations for excited pairs, broken-phase gap against the FD oracle
    run("dirac-pair", 1.0, [] {
        double score = 0.0;
        const double mass = 1.0;
        {  // unbroken: lower component of the ground state vanishes
            const CouplingProfile prof =
                vector_potential(Family::L1, 1, 1, 1.0, ProfileChoice::Deformed);
            const DiracState ground = dirac_state(prof, mass, 0);
            const Quadrature q = Quadrature::half_line(10.0);
            const double np = std::sqrt(q.integrate(
                [&](double r) { return ground.f_plus.eval(r) * ground.f_plus.eval(r); }));
            const double nm = std::sqrt(q.integrate(
                [&](double r) { return ground.f_minus.eval(r) * ground.f_minus.eval(r); }));
            score = std::max(score, (nm / np) / 1e-12);
            for (int n = 1; n <= 3; ++n) {  // pair equations, relative sup norm
                const DiracState st = dirac_state(prof, mass, n);
                const StructuredFn down = susy_apply(+1, prof.w, st.f_plus);
                const StructuredFn up = susy_apply(-1, prof.w, st.f_minus);
                double worst = 0.0, amp = 0.0;
                for (double r : log_linear_grid(1e-3, 8.0, 800)) {
                    worst = std::max(worst, std::abs(down.eval(r) -
                                                     (st.energy + mass) * st.f_minus.eval(r)));
                    worst = std::max(worst, std::abs(up.eval(r) -
                                                     (st.energy - mass) * st.f_plus.eval(r)));
                    amp = std::max(amp, std::abs(st.f_plus.eval(r)));
                }
                score = std::max(score, (worst / amp) / 1e-10);
            }
        }
        {  // broken: ground gap 4(g + 2 ell - 1/2) omega, cross-checked by FD
            const CouplingProfile prof =
                vector_potential(Family::L1, 1, 1, 1.0, ProfileChoice::DarbouxCrum);
            const ModelParams& p = prof.params;  // g = 3/2
            const DiracSpectrum spec = dirac_spectrum(prof, mass, 0);
            const Rational expected =
                Rational(4) * (p.g + Rational(2 * p.ell) - Rational(1, 2));
            if (!(spec.levels[0].gap_coeff == expected)) score = std::max(score, 2.0);
            const Hamiltonian h = hamiltonian_dc_pair(p).first;
            const double x_max = std::sqrt(expected.to_double() + 40.0);
            const auto eigs = fd_eigenvalues_refined(potential_fn(h), 0.0, x_max, 4000, 1);
            score = std::max(score, std::abs(eigs[0] - spec.levels[0].gap) / 1e-3);
        }
        return score;
    });

    // 8. relaxation: spectral vs Crank-Nicolson, slowest decay rate, and the
    //    stationary density under the discrete stencil
    run("fp-cross-validation", 1.0, [] {
        double score = 0.0;
        const FpModel model = fp_model(ModelParams::make(Family::L1, 1, Rational(1), 1.0), 26);
        // bump with geometric mode decay: the stationary density with its
        // deforming denominator cleared, tilted toward the origin
        auto raw = [](double x) {
            const double eta = x * x, q = eta + 2.5;
            return x * x * x * x * q * q * std::exp(-1.5 * eta);
        };
        const double mass = model.quad.integrate_checked(raw);
        auto p0 = [&](double x) { return raw(x) / mass; };
        const std::vector<double> c = fp_expand(model, p0);

        const int cells = 3200;
        const double x_max = 8.0, dt = 2e-4;
        const GridDensity cn = fp_oracle_cn(model, p0, 0.5, cells, x_max, dt);
        const GridDensity spc = fp_evolve(model, c, 0.5, cn.x);
        score = std::max(score, l1_distance(cn, spc) / 1e-4);

        // decay toward the solver's own late-time state isolates the rate;
        // the window starts after the twice-faster n = 2 transient (whose
        // coefficient is several times c_1 here) has dropped below 0.3%
        const GridDensity ref = fp_oracle_cn(model, p0, 4.5, cells, x_max, dt);
        std::vector<double> ts, ds;
        for (double t : {2.0, 2.2, 2.4, 2.6}) {
            const GridDensity snap = fp_oracle_cn(model, p0, t, cells, x_max, dt);
            ts.push_back(t);
            ds.push_back(l1_distance(snap, ref));
        }
        const double rate = fit_exp_rate(ts, ds);
        score = std::max(score, std::abs(rate - 4.0) / 0.08);

        score = std::max(score, fp_stationary_residual(model, 8000, x_max) / 1e-8);
        return score;
    });

    // 9. verification reports are byte-identical across runs
    run("deterministic-reports", 0.0, [] {
        const std::string args = "verify --family L1 --ell 1 --g 1 --nmax 3 --grid-points 500";
        if (run_cli(args + " --out acceptance_rep1.json") != 0) return 1.0;
        if (run_cli(args + " --out acceptance_rep2.json") != 0) return 1.0;
        const std::string a = slurp("acceptance_rep1.json"), b = slurp("acceptance_rep2.json");
        if (a.empty() || a != b) return 1.0;
        return 0.0;
    });

    std::printf("%s\n", failures == 0 ? "all acceptance criteria passed"
                                      : "ACCEPTANCE FAILURES PRESENT");
    return failures == 0 ? 0 : 1;
}
