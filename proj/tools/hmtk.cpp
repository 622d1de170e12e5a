// Command-line front end: eval, norms, verify, fuzz, heatmap.
// Exit codes: 0 success / all pass, 1 verification failure, 2 usage error,
// 3 numerical non-convergence.

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "hmtk/io.hpp"

namespace {

using hmtk::Complex;
using nlohmann::json;

struct QuadFlags {
    int angular_nodes = 256;
    int radial_nodes = 32;
    double rel_tol = 1e-8;
    int max_refinements = 6;
};

struct SearchFlags {
    std::string grid = "64x128";
    int refine_iters = 40;
};

void add_quad_flags(CLI::App* cmd, QuadFlags& q) {
    cmd->add_option("--angular-nodes", q.angular_nodes, "Trapezoid nodes per circle (even)");
    cmd->add_option("--radial-nodes", q.radial_nodes, "Gauss-Legendre nodes per radial panel");
    cmd->add_option("--rel-tol", q.rel_tol, "Quadrature relative tolerance");
    cmd->add_option("--max-refinements", q.max_refinements, "Refinement doublings allowed");
}

void add_search_flags(CLI::App* cmd, SearchFlags& s) {
    cmd->add_option("--grid", s.grid, "Sup-search coarse grid, NRxNT (default 64x128)");
    cmd->add_option("--refine-iters", s.refine_iters, "Pattern-search iterations per seed");
}

hmtk::QuadratureSpec quad_from(const QuadFlags& f) {
    hmtk::QuadratureSpec q;
    q.angular_nodes = f.angular_nodes;
    q.radial_nodes = f.radial_nodes;
    q.rel_tol = f.rel_tol;
    q.max_refinements = f.max_refinements;
    return q;
}

hmtk::SupSearchSpec search_from(const SearchFlags& f) {
    hmtk::SupSearchSpec s;
    const auto x = f.grid.find('x');
    if (x == std::string::npos) throw hmtk::DomainError("--grid expects NRxNT, e.g. 64x128");
    try {
        s.radial_cells = std::stoi(f.grid.substr(0, x));
        s.angular_cells = std::stoi(f.grid.substr(x + 1));
    } catch (...) {
        throw hmtk::DomainError("--grid expects NRxNT, e.g. 64x128");
    }
    s.refine_iters = f.refine_iters;
    return s;
}

void emit(const std::string& out_path, const std::string& content) {
    if (out_path.empty()) {
        std::cout << content;
    } else {
        hmtk::write_text_atomic(out_path, content);
    }
}

std::vector<double> parse_double_list(const std::string& text) {
    std::vector<double> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        if (!item.empty()) out.push_back(std::stod(item));
    }
    if (out.empty()) throw hmtk::DomainError("expected a comma-separated list of numbers");
    return out;
}

std::vector<std::string> parse_string_list(const std::string& text) {
    std::vector<std::string> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        if (!item.empty()) out.push_back(item);
    }
    return out;
}

void print_verdict_line(const hmtk::Verdict& v) {
    std::ostringstream os;
    os.precision(6);
    os << (v.pass ? "[PASS] " : "[FAIL] ") << v.check << "  lhs=" << v.lhs << " rhs=" << v.rhs
       << " margin=" << v.margin;
    std::cout << os.str() << "\n";
}

int run(int argc, char** argv) {
    CLI::App app{"Function-space norms of planar harmonic polynomial maps and "
                 "property checks of the inequalities relating them"};
    app.option_defaults()->always_capture_default();
    app.require_subcommand(1);

    // ---- eval ----
    auto* eval = app.add_subcommand("eval", "Evaluate a map and its derivative data");
    std::string eval_map, eval_point, eval_out;
    eval->add_option("--map", eval_map, "Map-spec JSON file")->required();
    eval->add_option("-z,--point", eval_point, "Point, e.g. 0.3+0.4i")->required();
    eval->add_option("--out", eval_out, "Output file (default stdout)");

    // ---- norms ----
    auto* norms = app.add_subcommand("norms", "Compute the norm report of a map");
    std::string norms_map, norms_majorant, norms_out, norms_curves, norms_format = "json";
    std::string norms_ps = "2";
    QuadFlags norms_quad;
    SearchFlags norms_search;
    norms->add_option("--map", norms_map, "Map-spec JSON file")->required();
    norms->add_option("--p", norms_ps, "Comma-separated exponents (default 2)");
    norms->add_option("--majorant", norms_majorant, "Majorant-spec JSON file");
    norms->add_option("--out", norms_out, "Output file (default stdout)");
    norms->add_option("--curves", norms_curves, "Prefix for r,value CSV curves");
    norms->add_option("--format", norms_format, "json or csv")
        ->check(CLI::IsMember({"json", "csv"}));
    add_quad_flags(norms, norms_quad);
    add_search_flags(norms, norms_search);

    // ---- verify ----
    auto* verify = app.add_subcommand("verify", "Run a named check suite on a map");
    std::string verify_map, verify_majorant, verify_out, verify_report;
    std::string verify_suite = "all";
    double verify_slack = 0.02, verify_t1_slack = 0.01, verify_chain_constant = 2.0;
    double verify_cap = 100.0;
    QuadFlags verify_quad;
    SearchFlags verify_search;
    verify->add_option("--map", verify_map, "Map-spec JSON file")->required();
    verify->add_option("--suite", verify_suite,
                       "all, chain, chain_envelope, extremal, theorem1, bmo1, pointwise, "
                       "lemma_gradient, khavinson, schwarz_pick, interior_gradient, modulus, "
                       "decomposition, dyakonov, mp_ip, mean_value");
    verify->add_option("--majorant", verify_majorant,
                       "Majorant-spec JSON (default power alpha=0.5)");
    verify->add_option("--slack", verify_slack, "Relative slack for sup-vs-sup checks");
    verify->add_option("--theorem1-slack", verify_t1_slack, "Slack for the constants 2 and 6");
    verify->add_option("--chain-constant", verify_chain_constant,
                       "Upper chain constant (1.9 = negative control)");
    verify->add_option("--cap", verify_cap, "Equivalence-ratio cap");
    verify->add_option("--report", verify_report,
                       "Norm-report JSON; chain suite reuses its bloch/bmo values");
    verify->add_option("--out", verify_out, "Verdict JSON file (default stdout summary only)");
    add_quad_flags(verify, verify_quad);
    add_search_flags(verify, verify_search);

    // ---- fuzz ----
    auto* fuzz_cmd = app.add_subcommand("fuzz", "Run the check suite on random maps");
    int fuzz_trials = 200, fuzz_degree = 8;
    double fuzz_bound = 1.0, fuzz_slack = 0.02, fuzz_t1_slack = 0.01;
    std::uint64_t fuzz_seed = 42;
    std::string fuzz_checks, fuzz_out, fuzz_majorant;
    fuzz_cmd->add_option("--trials", fuzz_trials, "Number of random maps");
    fuzz_cmd->add_option("--degree", fuzz_degree, "Maximum degree of each part");
    fuzz_cmd->add_option("--coeff-bound", fuzz_bound, "Coefficient disk radius");
    fuzz_cmd->add_option("--seed", fuzz_seed, "Base seed");
    fuzz_cmd->add_option("--checks", fuzz_checks, "Comma-separated check names");
    fuzz_cmd->add_option("--majorant", fuzz_majorant, "Majorant spec for gauge checks");
    fuzz_cmd->add_option("--slack", fuzz_slack, "Relative slack for sup-vs-sup checks");
    fuzz_cmd->add_option("--theorem1-slack", fuzz_t1_slack, "Slack for the constants 2 and 6");
    fuzz_cmd->add_option("--out", fuzz_out, "Summary JSON file (default stdout)");

    // ---- heatmap ----
    auto* heatmap = app.add_subcommand("heatmap", "Emit a CSV grid of a field over [-1,1]^2");
    std::string hm_map, hm_quantity, hm_out;
    int hm_n = 65;
    QuadFlags hm_quad;
    heatmap->add_option("--map", hm_map, "Map-spec JSON file")->required();
    heatmap->add_option("--quantity", hm_quantity, "lambda, bloch_field, bmo_chart, poisson_gap")
        ->required();
    heatmap->add_option("--n", hm_n, "Grid resolution per axis");
    heatmap->add_option("--out", hm_out, "Output CSV file (default stdout)");
    add_quad_flags(heatmap, hm_quad);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);  // --help is not an error
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;  // usage error
    }

    if (eval->parsed()) {
        const hmtk::HarmonicPolynomial f = hmtk::load_map_spec(eval_map);
        const Complex z = hmtk::parse_complex(eval_point);
        const Complex value = hmtk::evaluate(f, z);
        json j{{"z", hmtk::to_json(z)}, {"value", hmtk::to_json(value)}};
        j["derivatives"] = hmtk::to_json(hmtk::derivatives(f, z, true));
        emit(eval_out, j.dump(2) + "\n");
        return 0;
    }

    if (norms->parsed()) {
        const hmtk::HarmonicPolynomial f = hmtk::load_map_spec(norms_map);
        std::optional<hmtk::Majorant> omega;
        if (!norms_majorant.empty()) omega = hmtk::load_majorant_spec(norms_majorant);
        const hmtk::NormReport report = hmtk::compute_norm_report(
            f, parse_double_list(norms_ps), search_from(norms_search), quad_from(norms_quad),
            omega);
        if (norms_format == "csv") {
            emit(norms_out, hmtk::norm_report_csv(report));
        } else {
            emit(norms_out, hmtk::to_json(report).dump(2) + "\n");
        }
        if (!norms_curves.empty()) {
            for (const auto& [p, curve] : report.mp_curves) {
                std::ostringstream name;
                name << norms_curves << "_mp_p" << p << ".csv";
                hmtk::write_text_atomic(name.str(), hmtk::curve_csv(curve));
            }
            for (const auto& [p, curve] : report.ip_curves) {
                std::ostringstream name;
                name << norms_curves << "_ip_p" << p << ".csv";
                hmtk::write_text_atomic(name.str(), hmtk::curve_csv(curve));
            }
        }
        return 0;
    }

    if (verify->parsed()) {
        const hmtk::HarmonicPolynomial f = hmtk::load_map_spec(verify_map);
        hmtk::Majorant omega = verify_majorant.empty()
                                   ? hmtk::Majorant::power(0.5)
                                   : hmtk::load_majorant_spec(verify_majorant);
        hmtk::CheckOptions opt = hmtk::CheckOptions::defaults();
        opt.slack_sup = verify_slack;
        opt.slack_theorem1 = verify_t1_slack;
        opt.chain_constant = verify_chain_constant;
        opt.equivalence_cap = verify_cap;
        opt.quad = quad_from(verify_quad);
        opt.search = search_from(verify_search);

        std::vector<hmtk::Verdict> verdicts;
        auto push_pair = [&](const hmtk::VerdictPair& p) {
            verdicts.push_back(p.forward);
            verdicts.push_back(p.backward);
        };
        const bool all = verify_suite == "all";
        bool matched = false;
        if (all || verify_suite == "pointwise") {
            verdicts.push_back(
                hmtk::check_pointwise(f, hmtk::interior_grid(10, 20), opt));
            matched = true;
        }
        if (all || verify_suite == "lemma_gradient") {
            std::vector<std::pair<Complex, double>> circles;
            for (Complex a : hmtk::interior_grid(3, 6, 0.6)) {
                circles.emplace_back(a, 0.8 * (1.0 - std::abs(a)));
                circles.emplace_back(a, 0.4 * (1.0 - std::abs(a)));
            }
            verdicts.push_back(hmtk::check_lemma_gradient(f, circles, opt));
            matched = true;
        }
        if (all || verify_suite == "khavinson") {
            verdicts.push_back(hmtk::check_khavinson(f, hmtk::interior_grid(10, 20), opt));
            matched = true;
        }
        if (all || verify_suite == "schwarz_pick") {
            std::vector<std::pair<Complex, Complex>> pairs;
            for (Complex a : hmtk::interior_grid(4, 8, 0.8)) {
                for (Complex z : hmtk::interior_grid(3, 6, 0.8)) pairs.emplace_back(a, z);
            }
            verdicts.push_back(hmtk::check_schwarz_pick_affine(pairs, opt));
            matched = true;
        }
        if (all || verify_suite == "interior_gradient") {
            verdicts.push_back(
                hmtk::check_interior_gradient_bound(f, hmtk::interior_grid(5, 8, 0.85), opt));
            matched = true;
        }
        if (all || verify_suite == "theorem1") {
            push_pair(hmtk::check_theorem1_constants(f, omega, opt));
            matched = true;
        }
        if (all || verify_suite == "chain") {
            if (!verify_report.empty()) {
                // reuse a stored norm report: identical values to an in-process run
                std::ifstream in(verify_report);
                if (!in) throw hmtk::DomainError("cannot open '" + verify_report + "'");
                json j;
                in >> j;
                const hmtk::NormReport rep = hmtk::norm_report_from_json(j);
                if (!rep.bmo.count(2.0)) {
                    throw hmtk::DomainError("--report: no BMO_2 entry in the report");
                }
                const double bmo2 = rep.bmo.at(2.0);
                hmtk::Verdict lo, hi;
                lo.check = "chain_lower";
                lo.slack = opt.slack_sup;
                lo.lhs = bmo2;
                lo.rhs = rep.bloch;
                lo.margin = lo.rhs + lo.slack * std::max(1.0, std::abs(lo.rhs)) - lo.lhs;
                lo.pass = lo.margin >= 0.0;
                lo.witness = hmtk::Witness::point(rep.bmo_argmax);
                lo.extras["bloch"] = rep.bloch;
                lo.extras["bmo2"] = bmo2;
                hi.check = "chain_upper";
                hi.slack = opt.slack_sup;
                hi.lhs = rep.bloch;
                hi.rhs = opt.chain_constant * bmo2;
                hi.margin = hi.rhs + hi.slack * std::max(1.0, std::abs(hi.rhs)) - hi.lhs;
                hi.pass = hi.margin >= 0.0;
                hi.witness = hmtk::Witness::point(rep.bloch_argmax);
                hi.extras["bloch"] = rep.bloch;
                hi.extras["bmo2"] = bmo2;
                hi.extras["constant"] = opt.chain_constant;
                if (bmo2 > 0.0) hi.extras["ratio"] = rep.bloch / bmo2;
                verdicts.push_back(lo);
                verdicts.push_back(hi);
            } else {
                push_pair(hmtk::check_bmo_bloch_chain(f, opt));
            }
            matched = true;
        }
        if (all || verify_suite == "chain_envelope") {
            verdicts.push_back(hmtk::check_chain_envelope(f, opt));
            matched = true;
        }
        if (all || verify_suite == "extremal") {
            const auto& h = f.h_coeffs();
            const auto& g = f.g_coeffs();
            const bool extremal_form = h.size() == 2 && g.size() == 2 &&
                                       h[0] == Complex(0.0, 0.0) && g[0] == Complex(0.0, 0.0) &&
                                       h[1] == std::conj(g[1]);
            if (extremal_form) {
                verdicts.push_back(hmtk::check_extremal(h[1], opt));
                matched = true;
            } else if (!all) {
                throw hmtk::DomainError("extremal suite needs a C(z + conj z) map");
            }
        }
        if (all || verify_suite == "bmo1") {
            push_pair(hmtk::check_bmo1_corollary(f, opt));
            matched = true;
        }
        if (all || verify_suite == "modulus") {
            verdicts.push_back(hmtk::check_modulus_equivalence(f, omega, opt));
            matched = true;
        }
        if (all || verify_suite == "decomposition") {
            verdicts.push_back(hmtk::check_decomposition(f, omega, opt));
            matched = true;
        }
        if (all || verify_suite == "dyakonov") {
            if (f.is_holomorphic()) {
                verdicts.push_back(hmtk::check_dyakonov_gap(f, omega, opt));
                matched = true;
            } else if (!all) {
                throw hmtk::DomainError("dyakonov suite needs a holomorphic map");
            } else {
                std::cout << "[SKIP] dyakonov_gap (map is not holomorphic)\n";
            }
        }
        if (all || verify_suite == "mp_ip") {
            verdicts.push_back(hmtk::check_mp_ip_monotone(f, opt));
            matched = true;
        }
        if (all || verify_suite == "mean_value") {
            verdicts.push_back(hmtk::check_mean_value(f, opt));
            matched = true;
        }
        if (!matched) throw hmtk::DomainError("unknown suite '" + verify_suite + "'");

        bool all_pass = true;
        json out = json::array();
        for (const hmtk::Verdict& v : verdicts) {
            print_verdict_line(v);
            out.push_back(hmtk::to_json(v));
            all_pass = all_pass && v.pass;
        }
        if (!verify_out.empty()) {
            hmtk::write_text_atomic(verify_out,
                                    json{{"all_pass", all_pass}, {"verdicts", out}}.dump(2) +
                                        "\n");
        }
        return all_pass ? 0 : 1;
    }

    if (fuzz_cmd->parsed()) {
        hmtk::FuzzConfig config;
        config.trials = fuzz_trials;
        config.max_degree = fuzz_degree;
        config.coeff_bound = fuzz_bound;
        config.seed = fuzz_seed;
        if (!fuzz_checks.empty()) config.checks = parse_string_list(fuzz_checks);
        if (!fuzz_majorant.empty()) config.omega = hmtk::load_majorant_spec(fuzz_majorant);
        config.options.slack_sup = fuzz_slack;
        config.options.slack_theorem1 = fuzz_t1_slack;
        const hmtk::FuzzSummary summary = hmtk::fuzz(config);
        emit(fuzz_out, hmtk::fuzz_summary_string(summary));
        std::cerr << (summary.all_pass ? "all checks passed over "
                                       : "FAILURES over ")
                  << summary.trials << " trials\n";
        return summary.all_pass ? 0 : 1;
    }

    if (heatmap->parsed()) {
        const hmtk::HarmonicPolynomial f = hmtk::load_map_spec(hm_map);
        emit(hm_out, hmtk::heatmap_csv(f, hm_quantity, hm_n, quad_from(hm_quad), hm_map));
        return 0;
    }

    return 2;
}

}  // namespace

int main(int argc, char** argv) {
    try {
        return run(argc, argv);
    } catch (const hmtk::NumericalError& e) {
        std::cerr << "numerical error: " << e.what() << "\n";
        return 3;
    } catch (const hmtk::DomainError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
}
