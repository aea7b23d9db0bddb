#ifndef XLAG_VERIFY_HPP
#define XLAG_VERIFY_HPP

#include <string>
#include <vector>

#include "xlag/exceptional.hpp"
#include "xlag/io.hpp"

namespace xlag {

struct CheckResult {
    std::string name;
    double measured = 0.0;
    double tolerance = 0.0;  // pass iff measured <= tolerance
    bool pass = false;
};

struct VerifyOptions {
    int n_max = 5;
    double perturb = 0.0;   // relative fault injected into one eigenstate; any
                            // nonzero value must make the residual check fail
    bool with_fd = false;   // add the (slower) finite-difference spectral cross-check
    int grid_points = 2000;
    int fd_nodes = 2000;
};

// Named consistency checks for one model: seed zero-freedom and degrees,
// classical limit, exact Schrodinger residuals, orthonormality, and the
// Darboux-Crum partner identities (skipped where the construction's parameter
// range does not reach, i.e. L1 with g = 1/2).
std::vector<CheckResult> run_verify(const ModelParams& p, const VerifyOptions& opt);

bool all_pass(const std::vector<CheckResult>& checks);
json verify_report(const ModelParams& p, const VerifyOptions& opt,
                   const std::vector<CheckResult>& checks);

}  // namespace xlag

#endif
