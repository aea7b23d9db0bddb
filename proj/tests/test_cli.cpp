#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>

#include <sys/wait.h>

#include "doctest.h"
#include "json.hpp"

namespace {

struct RunResult {
    int code = -1;
    std::string out, err;
};

std::string slurp(const std::string& path) {
    std::ifstream in(path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

RunResult run_cli(const std::string& args) {
    const std::string cmd = std::string(XLAG_CLI_PATH) + " " + args +
                            " > cli_stdout.txt 2> cli_stderr.txt";
    const int raw = std::system(cmd.c_str());
    RunResult r;
    r.code = WIFEXITED(raw) ? WEXITSTATUS(raw) : -1;
    r.out = slurp("cli_stdout.txt");
    r.err = slurp("cli_stderr.txt");
    return r;
}

bool contains(const std::string& hay, const std::string& needle) {
    return hay.find(needle) != std::string::npos;
}

}  // namespace

TEST_CASE("poly prints exact coefficients") {
    const RunResult r = run_cli("poly --family L1 --ell 1 --g 1 --nmax 2");
    CHECK(r.code == 0);
    CHECK(contains(r.out, "\"coeffs\""));
    CHECK(contains(r.out, "\"5/2\""));  // lowest deformed polynomial is 5/2 + eta
    CHECK(contains(r.out, "\"seed\""));
    const nlohmann::ordered_json doc = nlohmann::ordered_json::parse(r.out);
    CHECK(doc.at("schema_version") == 1);
    CHECK(doc.at("polynomials").size() == 3);
    CHECK(doc.at("polynomials")[2].at("degree") == 3);  // ell + n
}

TEST_CASE("malformed couplings are rejected at the boundary") {
    CHECK(run_cli("poly --g 1/0").code == 2);
    CHECK(run_cli("poly --g abc").code == 2);
    CHECK(run_cli("verify --family L3").code == 2);
    CHECK(run_cli("frobnicate").code == 2);
    CHECK(run_cli("").code == 2);  // a subcommand is required
}

TEST_CASE("help exits cleanly") {
    CHECK(run_cli("--help").code == 0);
    const RunResult r = run_cli("poly --help");
    CHECK(r.code == 0);
    CHECK(contains(r.out, "--nmax"));
}

TEST_CASE("dirac spectrum for the deformed magnetic coupling") {
    const RunResult r =
        run_cli("dirac --coupling magnetic --family L1 --ell 1 --m 0 --mass 1 --nmax 3");
    CHECK(r.code == 0);
    CHECK(contains(r.out, "magnetic deformed"));
    CHECK(contains(r.out, "unbroken"));
    CHECK(contains(r.out, "E=3"));  // n = 2: sqrt(1 + 8)
}

TEST_CASE("dirac rejects out-of-range quantum numbers with a pointer to the mirror") {
    const RunResult r = run_cli("dirac --coupling magnetic --m -1");
    CHECK(r.code == 2);
    CHECK(contains(r.err, "mirrored"));
    CHECK(run_cli("dirac --coupling central --k 0").code == 2);
    CHECK(run_cli("dirac --coupling central --k 2").code == 2);
    CHECK(run_cli("dirac --coupling magnetic").code == 2);  // no --m
}

TEST_CASE("scalar coupling lists symmetric levels") {
    const RunResult r = run_cli("dirac --coupling scalar --family L1 --ell 1 --g 1 --mass 0.5");
    CHECK(r.code == 0);
    CHECK(contains(r.out, "lorentz-scalar"));
    CHECK(contains(r.out, "E=+-0"));
    CHECK(contains(r.out, "E=+-2"));
}

TEST_CASE("verify passes on a valid model and reports what it measured") {
    const RunResult r = run_cli("verify --family L2 --ell 1 --g 1 --nmax 2 --grid-points 200");
    CHECK(r.code == 0);
    CHECK(contains(r.out, "[PASS] schrodinger-residual"));
    CHECK(contains(r.out, "[PASS] orthonormality"));
    CHECK(contains(r.out, "[PASS] dc-partner-potential"));
    CHECK(!contains(r.out, "[FAIL]"));
}

TEST_CASE("verify detects an injected coefficient fault") {
    const RunResult r = run_cli(
        "verify --family L2 --ell 1 --g 1 --nmax 2 --grid-points 200 --perturb 1e-6");
    CHECK(r.code == 1);
    CHECK(contains(r.out, "[FAIL]"));
}

TEST_CASE("verify writes a parseable report with a provenance sidecar") {
    std::remove("verify_report.json");
    std::remove("verify_report.json.manifest.json");
    const RunResult r = run_cli(
        "verify --family L1 --ell 1 --g 1 --nmax 2 --grid-points 200 --out verify_report.json");
    CHECK(r.code == 0);
    const nlohmann::ordered_json doc = nlohmann::ordered_json::parse(slurp("verify_report.json"));
    CHECK(doc.at("schema_version") == 1);
    CHECK(doc.at("all_pass") == true);
    CHECK(doc.at("checks").is_array());
    CHECK(doc.at("model").at("family") == "L1");
    const nlohmann::ordered_json man =
        nlohmann::ordered_json::parse(slurp("verify_report.json.manifest.json"));
    CHECK(man.at("file") == "verify_report.json");
    CHECK(man.at("written_at_unix_ms").is_number());
}

TEST_CASE("fp emits a relaxation table") {
    std::remove("fp_out.csv");
    const RunResult r = run_cli(
        "fp --family L1 --ell 1 --g 1 --modes 8 --tmax 0.2 --times 3 --init stationary "
        "--cells 200 --out fp_out.csv");
    CHECK(r.code == 0);
    CHECK(contains(r.out, "c0="));
    const std::string csv = slurp("fp_out.csv");
    CHECK(csv.rfind("t,x,p\n", 0) == 0);
    CHECK(contains(csv, "\n0.2,"));  // final snapshot present
}

TEST_CASE("fp rejects an unknown initial condition") {
    CHECK(run_cli("fp --init wedge").code == 2);
}
