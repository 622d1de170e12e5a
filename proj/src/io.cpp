#include "hmtk/io.hpp"

#include <cctype>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <limits>
#include <sstream>

#include "hmtk/parallel.hpp"

namespace hmtk {

using nlohmann::json;

namespace {

double checked_number(const json& j, const char* what) {
    if (!j.is_number()) throw DomainError(std::string(what) + ": expected a number");
    const double v = j.get<double>();
    if (!std::isfinite(v)) throw DomainError(std::string(what) + ": non-finite value");
    return v;
}

Complex checked_complex(const json& j, const char* what) {
    if (!j.is_array() || j.size() != 2) {
        throw DomainError(std::string(what) + ": expected [re, im]");
    }
    return {checked_number(j[0], what), checked_number(j[1], what)};
}

std::vector<Complex> checked_coeffs(const json& j, const char* what) {
    if (!j.is_array()) throw DomainError(std::string(what) + ": expected an array");
    std::vector<Complex> out;
    out.reserve(j.size());
    for (const json& item : j) out.push_back(checked_complex(item, what));
    return out;
}

void reject_unknown_keys(const json& j, std::initializer_list<const char*> allowed,
                         const char* what) {
    for (auto it = j.begin(); it != j.end(); ++it) {
        bool ok = false;
        for (const char* k : allowed) ok = ok || it.key() == k;
        if (!ok) throw DomainError(std::string(what) + ": unknown key '" + it.key() + "'");
    }
}

json read_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw DomainError("cannot open '" + path + "'");
    json j;
    try {
        in >> j;
    } catch (const json::exception& e) {
        throw DomainError("'" + path + "': " + e.what());
    }
    return j;
}

std::string trimmed_number(double v) {
    std::ostringstream os;
    os.precision(12);
    os << v;
    return os.str();
}

}  // namespace

HarmonicPolynomial parse_map_spec(const json& j) {
    if (!j.is_object()) throw DomainError("map spec: expected an object");
    if (j.contains("builtin")) {
        reject_unknown_keys(j, {"builtin", "C"}, "map spec");
        const std::string name = j.at("builtin").get<std::string>();
        if (name == "identity") {
            if (j.contains("C")) throw DomainError("map spec: identity takes no C");
            return HarmonicPolynomial::identity();
        }
        if (name == "c_z_plus_zbar") {
            if (!j.contains("C")) throw DomainError("map spec: c_z_plus_zbar needs C");
            return HarmonicPolynomial::c_z_plus_zbar(checked_complex(j.at("C"), "map spec C"));
        }
        throw DomainError("map spec: unknown builtin '" + name + "'");
    }
    reject_unknown_keys(j, {"h", "g"}, "map spec");
    if (!j.contains("h")) throw DomainError("map spec: missing 'h'");
    std::vector<Complex> h = checked_coeffs(j.at("h"), "map spec h");
    std::vector<Complex> g;
    if (j.contains("g")) g = checked_coeffs(j.at("g"), "map spec g");
    return HarmonicPolynomial(std::move(h), std::move(g));
}

HarmonicPolynomial load_map_spec(const std::string& path) {
    return parse_map_spec(read_json_file(path));
}

Majorant parse_majorant_spec(const json& j) {
    if (!j.is_object() || !j.contains("family")) {
        throw DomainError("majorant spec: expected an object with 'family'");
    }
    const std::string family = j.at("family").get<std::string>();
    if (family == "power") {
        reject_unknown_keys(j, {"family", "alpha", "c"}, "majorant spec");
        const double alpha = checked_number(j.at("alpha"), "majorant alpha");
        const double c = j.contains("c") ? checked_number(j.at("c"), "majorant c") : 1.0;
        return Majorant::power(alpha, c);
    }
    if (family == "power_log") {
        reject_unknown_keys(j, {"family", "alpha", "beta", "c"}, "majorant spec");
        const double alpha = checked_number(j.at("alpha"), "majorant alpha");
        const double beta = checked_number(j.at("beta"), "majorant beta");
        const double c = j.contains("c") ? checked_number(j.at("c"), "majorant c") : 1.0;
        return Majorant::power_log(alpha, beta, c);
    }
    if (family == "tabulated") {
        reject_unknown_keys(j, {"family", "points"}, "majorant spec");
        if (!j.contains("points") || !j.at("points").is_array()) {
            throw DomainError("majorant spec: tabulated needs 'points'");
        }
        std::vector<std::pair<double, double>> pts;
        for (const json& item : j.at("points")) {
            if (!item.is_array() || item.size() != 2) {
                throw DomainError("majorant spec: points must be [t, w] pairs");
            }
            pts.emplace_back(checked_number(item[0], "majorant t"),
                             checked_number(item[1], "majorant w"));
        }
        return Majorant::tabulated(std::move(pts));
    }
    throw DomainError("majorant spec: unknown family '" + family + "'");
}

Majorant load_majorant_spec(const std::string& path) {
    return parse_majorant_spec(read_json_file(path));
}

Complex parse_complex(const std::string& text) {
    std::string s;
    for (char c : text) {
        if (!std::isspace(static_cast<unsigned char>(c))) s.push_back(c);
    }
    if (s.empty()) throw DomainError("complex: empty string");

    auto parse_unit = [](const std::string& t, bool& is_imag) -> double {
        // one signed number, optionally suffixed with i
        std::string body = t;
        is_imag = false;
        if (!body.empty() && (body.back() == 'i' || body.back() == 'I')) {
            is_imag = true;
            body.pop_back();
            if (body.empty() || body == "+") body = "1";
            else if (body == "-") body = "-1";
        }
        std::size_t used = 0;
        double v;
        try {
            v = std::stod(body, &used);
        } catch (...) {
            throw DomainError("complex: cannot parse '" + t + "'");
        }
        if (used != body.size()) throw DomainError("complex: cannot parse '" + t + "'");
        return v;
    };

    // split at the last +/- that is not a leading sign or an exponent sign
    std::size_t split = std::string::npos;
    for (std::size_t i = s.size(); i-- > 1;) {
        if ((s[i] == '+' || s[i] == '-') && s[i - 1] != 'e' && s[i - 1] != 'E') {
            split = i;
            break;
        }
    }
    if (split == std::string::npos) {
        bool imag = false;
        const double v = parse_unit(s, imag);
        return imag ? Complex(0.0, v) : Complex(v, 0.0);
    }
    bool imag1 = false, imag2 = false;
    const double a = parse_unit(s.substr(0, split), imag1);
    const double b = parse_unit(s.substr(split), imag2);
    if (imag1 == imag2) throw DomainError("complex: expected one real and one imaginary part");
    return imag1 ? Complex(b, a) : Complex(a, b);
}

// ---------------------------------------------------------------------------
// Serialization
// ---------------------------------------------------------------------------

json to_json(Complex z) { return json::array({z.real(), z.imag()}); }

json to_json(const DerivativeBundle& d) {
    return json{{"f_z", to_json(d.f_z)},       {"f_zbar", to_json(d.f_zbar)},
                {"lambda", d.lambda_max},      {"lambda_min", d.lambda_min},
                {"grad_norm", d.grad_norm},    {"jacobian", d.jacobian}};
}

json to_json(const Witness& w) {
    switch (w.kind) {
        case Witness::Kind::Point:
            return json{{"kind", "point"}, {"z", to_json(w.z)}};
        case Witness::Kind::Pair:
            return json{{"kind", "pair"}, {"z", to_json(w.z)}, {"w", to_json(w.w)}};
        case Witness::Kind::Window:
            return json{{"kind", "window"}, {"z", to_json(w.z)}, {"r", w.r}};
        case Witness::Kind::None:
            break;
    }
    return json{{"kind", "none"}};
}

json to_json(const Verdict& v) {
    json j{{"check", v.check},   {"pass", v.pass},   {"lhs", v.lhs},
           {"rhs", v.rhs},       {"margin", v.margin}, {"slack", v.slack},
           {"witness", to_json(v.witness)}};
    if (!v.extras.empty()) j["extras"] = v.extras;
    return j;
}

json to_json(const NormReport& r) {
    json bmo = json::object();
    for (const auto& [p, v] : r.bmo) bmo[trimmed_number(p)] = v;
    auto curves = [](const std::map<double, std::vector<CurvePoint>>& m) {
        json out = json::object();
        for (const auto& [p, curve] : m) {
            json arr = json::array();
            for (const CurvePoint& c : curve) arr.push_back(json::array({c.r, c.value}));
            out[trimmed_number(p)] = std::move(arr);
        }
        return out;
    };
    json j{{"bloch", r.bloch},
           {"bloch_argmax", to_json(r.bloch_argmax)},
           {"bmo", std::move(bmo)},
           {"bmo_argmax", to_json(r.bmo_argmax)},
           {"mp_curves", curves(r.mp_curves)},
           {"ip_curves", curves(r.ip_curves)}};
    if (r.lipschitz) {
        j["lipschitz"] = json{{"constant", r.lipschitz->constant},
                              {"worst_z", to_json(r.lipschitz->worst_z)},
                              {"worst_w", to_json(r.lipschitz->worst_w)},
                              {"samples", r.lipschitz->sample_count}};
    }
    if (r.poisson_gap) j["poisson_gap"] = *r.poisson_gap;
    return j;
}

NormReport norm_report_from_json(const json& j) {
    NormReport r;
    r.bloch = checked_number(j.at("bloch"), "report bloch");
    r.bloch_argmax = checked_complex(j.at("bloch_argmax"), "report bloch_argmax");
    for (auto it = j.at("bmo").begin(); it != j.at("bmo").end(); ++it) {
        r.bmo[std::stod(it.key())] = checked_number(it.value(), "report bmo");
    }
    r.bmo_argmax = checked_complex(j.at("bmo_argmax"), "report bmo_argmax");
    auto curves = [](const json& obj) {
        std::map<double, std::vector<CurvePoint>> m;
        for (auto it = obj.begin(); it != obj.end(); ++it) {
            std::vector<CurvePoint> curve;
            for (const json& pair : it.value()) {
                curve.push_back({pair.at(0).get<double>(), pair.at(1).get<double>()});
            }
            m[std::stod(it.key())] = std::move(curve);
        }
        return m;
    };
    r.mp_curves = curves(j.at("mp_curves"));
    r.ip_curves = curves(j.at("ip_curves"));
    if (j.contains("lipschitz")) {
        LipschitzFit fit;
        fit.constant = j.at("lipschitz").at("constant").get<double>();
        fit.worst_z = checked_complex(j.at("lipschitz").at("worst_z"), "report lipschitz");
        fit.worst_w = checked_complex(j.at("lipschitz").at("worst_w"), "report lipschitz");
        fit.sample_count = j.at("lipschitz").at("samples").get<int>();
        r.lipschitz = fit;
    }
    if (j.contains("poisson_gap")) r.poisson_gap = j.at("poisson_gap").get<double>();
    return r;
}

json to_json(const FuzzSummary& s) {
    json stats = json::object();
    for (const auto& [name, st] : s.stats) {
        stats[name] = json{{"runs", st.runs},
                           {"failures", st.failures},
                           {"worst_margin", st.worst_margin},
                           {"worst_trial", st.worst_trial},
                           {"worst", to_json(st.worst)}};
    }
    json failures = json::array();
    for (const auto& [trial, verdict] : s.failures) {
        failures.push_back(json{{"trial", trial}, {"verdict", to_json(verdict)}});
    }
    return json{{"all_pass", s.all_pass},
                {"trials", s.trials},
                {"max_degree", s.max_degree},
                {"coeff_bound", s.coeff_bound},
                {"seed", s.seed},
                {"checks", s.requested_checks},
                {"omega", s.omega_description},
                {"stats", std::move(stats)},
                {"failures", std::move(failures)}};
}

std::string fuzz_summary_string(const FuzzSummary& s) { return to_json(s).dump(2) + "\n"; }

std::string norm_report_csv(const NormReport& r) {
    std::ostringstream os;
    os.precision(17);
    os << "key,value\n";
    os << "bloch," << r.bloch << "\n";
    for (const auto& [p, v] : r.bmo) os << "bmo_" << trimmed_number(p) << "," << v << "\n";
    if (r.lipschitz) os << "lipschitz," << r.lipschitz->constant << "\n";
    if (r.poisson_gap) os << "poisson_gap," << *r.poisson_gap << "\n";
    return os.str();
}

std::string curve_csv(const std::vector<CurvePoint>& curve) {
    std::ostringstream os;
    os.precision(17);
    os << "r,value\n";
    for (const CurvePoint& c : curve) os << c.r << "," << c.value << "\n";
    return os.str();
}

// ---------------------------------------------------------------------------
// Heatmap grids
// ---------------------------------------------------------------------------

std::string heatmap_csv(const HarmonicPolynomial& f, const std::string& quantity, int n,
                        const QuadratureSpec& quad, const std::string& source_label) {
    if (n < 2) throw DomainError("heatmap: n must be >= 2");
    const bool needs_holomorphic = quantity == "poisson_gap";
    if (needs_holomorphic && !f.is_holomorphic()) {
        throw DomainError("heatmap: poisson_gap needs a holomorphic map");
    }

    enum class Q { Lambda, BlochField, BmoChart, PoissonGap };
    Q q;
    if (quantity == "lambda") q = Q::Lambda;
    else if (quantity == "bloch_field") q = Q::BlochField;
    else if (quantity == "bmo_chart") q = Q::BmoChart;
    else if (quantity == "poisson_gap") q = Q::PoissonGap;
    else throw DomainError("heatmap: unknown quantity '" + quantity + "'");

    const std::size_t total = static_cast<std::size_t>(n) * static_cast<std::size_t>(n);
    std::vector<double> values(total, std::numeric_limits<double>::quiet_NaN());
    std::vector<char> inside(total, 0), resolved(total, 1);

    parallel_for(total, [&](std::size_t idx) {
        const int row = static_cast<int>(idx) / n;
        const int col = static_cast<int>(idx) % n;
        const double y = -1.0 + 2.0 * row / (n - 1);
        const double x = -1.0 + 2.0 * col / (n - 1);
        const Complex z(x, y);
        if (std::norm(z) > 1.0 + 1e-12) return;
        inside[idx] = 1;
        switch (q) {
            case Q::Lambda:
                values[idx] = derivatives(f, z, true).lambda_max;
                break;
            case Q::BlochField:
                values[idx] = (1.0 - std::norm(z)) * derivatives(f, z, true).lambda_max;
                break;
            case Q::BmoChart:
                values[idx] = chart_oscillation(f, z, 2.0, quad);
                break;
            case Q::PoissonGap:
                if (std::abs(z) >= 1.0 - 1e-12) {
                    values[idx] = 0.0;  // the gap extends continuously by zero
                } else {
                    try {
                        values[idx] = poisson_quadratic(f, z, quad);
                    } catch (const NumericalError&) {
                        resolved[idx] = 0;  // too close to the rim for the kernel
                    }
                }
                break;
        }
    });

    int unresolved = 0;
    for (std::size_t i = 0; i < total; ++i) {
        if (inside[i] && !resolved[i]) ++unresolved;
    }

    std::ostringstream os;
    os.precision(12);
    os << "# hmtk heatmap quantity=" << quantity << " n=" << n << " map=" << source_label
       << "\n";
    os << "# rows: y from -1 to 1; columns: x from -1 to 1; empty cell = outside the closed "
          "disk\n";
    if (unresolved > 0) os << "# unresolved_cells=" << unresolved << "\n";
    for (int row = 0; row < n; ++row) {
        for (int col = 0; col < n; ++col) {
            const std::size_t idx = static_cast<std::size_t>(row) * n + col;
            if (col > 0) os << ",";
            if (inside[idx] && resolved[idx]) os << values[idx];
        }
        os << "\n";
    }
    return os.str();
}

void write_text_atomic(const std::string& path, const std::string& content) {
    const std::string tmp = path + ".tmp";
    {
        std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
        if (!out) throw DomainError("cannot write '" + tmp + "'");
        out << content;
        out.flush();
        if (!out) throw DomainError("short write to '" + tmp + "'");
    }
    if (std::rename(tmp.c_str(), path.c_str()) != 0) {
        std::remove(tmp.c_str());
        throw DomainError("cannot rename '" + tmp + "' to '" + path + "'");
    }
}

}  // namespace hmtk
