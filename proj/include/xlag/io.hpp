#ifndef XLAG_IO_HPP
#define XLAG_IO_HPP

#include <string>
#include <vector>

#include "json.hpp"
#include "xlag/dirac.hpp"
#include "xlag/eigensystem.hpp"
#include "xlag/exceptional.hpp"
#include "xlag/poly.hpp"

namespace xlag {

using json = nlohmann::ordered_json;

// Coefficients as exact "p/q" strings, constant term first.
json to_json(const PolyQ& p);
PolyQ poly_from_json(const json& j);

json to_json(const ModelParams& p);
json to_json(const StructuredFn& f);
json to_json(const Eigensystem& sys, const std::string& kind);
json to_json(const DiracSpectrum& spec, const CouplingProfile& profile);

// Data files carry no timestamps so identical runs are byte-identical; the
// wall-clock provenance goes into <path>.manifest.json instead.
void write_file(const std::string& path, const std::string& content);
void write_file_with_manifest(const std::string& path, const std::string& content);

std::string format_double(double v);  // %.12g
std::string csv_line(const std::vector<double>& vals);

}  // namespace xlag

#endif
