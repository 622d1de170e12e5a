#pragma once

#include <string>

#include <json.hpp>

#include "hmtk/norms.hpp"
#include "hmtk/verifier.hpp"

namespace hmtk {

/// Map-spec JSON: {"h": [[re,im],...], "g": [[re,im],...]} with "g" optional,
/// or {"builtin": "identity"} or {"builtin": "c_z_plus_zbar", "C": [re,im]}.
/// NaN entries, mismatched shapes and unknown keys are rejected.
HarmonicPolynomial parse_map_spec(const nlohmann::json& j);
HarmonicPolynomial load_map_spec(const std::string& path);

/// Majorant JSON: {"family":"power","alpha":..,"c":..},
/// {"family":"power_log","alpha":..,"beta":..,"c":..} or
/// {"family":"tabulated","points":[[t,w],...]}.
Majorant parse_majorant_spec(const nlohmann::json& j);
Majorant load_majorant_spec(const std::string& path);

/// "a+bi" strings: "0.3+0.4i", "-0.5", "0.7i", "i".
Complex parse_complex(const std::string& text);

nlohmann::json to_json(Complex z);
nlohmann::json to_json(const DerivativeBundle& d);
nlohmann::json to_json(const Witness& w);
nlohmann::json to_json(const Verdict& v);
nlohmann::json to_json(const NormReport& r);
nlohmann::json to_json(const FuzzSummary& s);

NormReport norm_report_from_json(const nlohmann::json& j);

/// Canonical bytes of a fuzz summary; identical configs give identical strings.
std::string fuzz_summary_string(const FuzzSummary& s);

/// Flat "key,value" CSV of the scalar entries of a report.
std::string norm_report_csv(const NormReport& r);

/// "r,value" CSV of one mean curve.
std::string curve_csv(const std::vector<CurvePoint>& curve);

/// n x n grid over [-1,1]^2, row-major with y ascending by row and x by
/// column; cells outside the closed disk are empty. Quantities: lambda,
/// bloch_field, bmo_chart, poisson_gap.
std::string heatmap_csv(const HarmonicPolynomial& f, const std::string& quantity, int n,
                        const QuadratureSpec& quad, const std::string& source_label);

/// Write-to-temp-then-rename so readers never see a partial file.
void write_text_atomic(const std::string& path, const std::string& content);

}  // namespace hmtk
