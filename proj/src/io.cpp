#include "xlag/io.hpp"

#include <chrono>
#include <cstdio>
#include <fstream>
#include <stdexcept>

namespace xlag {

json to_json(const PolyQ& p) {
    json coeffs = json::array();
    for (const auto& c : p.coeffs()) coeffs.push_back(c.str());
    return json{{"coeffs", coeffs}};
}

PolyQ poly_from_json(const json& j) {
    std::vector<Rational> coeffs;
    for (const auto& c : j.at("coeffs")) coeffs.push_back(Rational::from_string(c.get<std::string>()));
    return PolyQ(std::move(coeffs));
}

json to_json(const ModelParams& p) {
    return json{{"family", to_string(p.family)},
                {"ell", p.ell},
                {"g", p.g.str()},
                {"omega", p.omega}};
}

json to_json(const StructuredFn& f) {
    return json{{"gauss_sign", f.gauss_sign},
                {"power", f.power.str()},
                {"numerator", to_json(f.rat.num())},
                {"denominator", to_json(f.rat.den())},
                {"scale", f.scale}};
}

json to_json(const Eigensystem& sys, const std::string& kind) {
    json states = json::array();
    for (const auto& st : sys.states)
        states.push_back(json{{"n", st.n},
                              {"energy_over_omega", st.energy_coeff.str()},
                              {"energy", st.energy},
                              {"state", to_json(st.wf)}});
    return json{{"schema_version", 1},
                {"kind", kind},
                {"model", to_json(sys.params)},
                {"states", states}};
}

json to_json(const DiracSpectrum& spec, const CouplingProfile& profile) {
    json levels = json::array();
    for (const auto& lv : spec.levels)
        levels.push_back(json{{"n", lv.n},
                              {"gap_over_omega", lv.gap_coeff.str()},
                              {"gap", lv.gap},
                              {"energy", lv.energy}});
    return json{{"schema_version", 1},
                {"coupling", to_string(spec.kind)},
                {"profile", to_string(spec.choice)},
                {"model", to_json(profile.params)},
                {"label", profile.label},
                {"mass", spec.mass},
                {"susy_phase", to_string(spec.phase)},
                {"dirac_oscillator", profile.dirac_oscillator},
                {"levels", levels}};
}

void write_file(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) throw std::runtime_error("cannot open for writing: " + path);
    out << content;
    if (!out) throw std::runtime_error("short write: " + path);
}

void write_file_with_manifest(const std::string& path, const std::string& content) {
    write_file(path, content);
    const auto now = std::chrono::system_clock::now().time_since_epoch();
    const auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(now).count();
    json manifest{{"file", path}, {"written_at_unix_ms", ms}};
    write_file(path + ".manifest.json", manifest.dump(2) + "\n");
}

std::string format_double(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.12g", v);
    return buf;
}

std::string csv_line(const std::vector<double>& vals) {
    std::string line;
    for (std::size_t i = 0; i < vals.size(); ++i) {
        if (i) line += ',';
        line += format_double(vals[i]);
    }
    line += '\n';
    return line;
}

}  // namespace xlag
