#include "hmtk/verifier.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <set>

#include "hmtk/rng.hpp"

namespace hmtk {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kTwoPi = 2.0 * kPi;

// Folds pointwise comparisons lhs <= rhs into the verdict with the smallest
// margin. An empty fold passes trivially with lhs = rhs = 0.
class MarginFold {
public:
    explicit MarginFold(double slack) : slack_(slack) {}

    void add(double lhs, double rhs, const Witness& w) {
        const double margin = rhs + slack_ * std::max(1.0, std::abs(rhs)) - lhs;
        if (!seen_ || margin < best_margin_) {
            seen_ = true;
            best_margin_ = margin;
            lhs_ = lhs;
            rhs_ = rhs;
            witness_ = w;
        }
    }

    Verdict verdict(std::string name) const {
        Verdict v;
        v.check = std::move(name);
        v.slack = slack_;
        if (seen_) {
            v.lhs = lhs_;
            v.rhs = rhs_;
            v.margin = best_margin_;
            v.witness = witness_;
        } else {
            v.margin = slack_;  // empty comparison set
        }
        v.pass = v.margin >= 0.0;
        return v;
    }

private:
    double slack_;
    bool seen_ = false;
    double best_margin_ = 0.0, lhs_ = 0.0, rhs_ = 0.0;
    Witness witness_;
};

double clamped_distance(Complex z) { return std::max(boundary_distance(z), 1e-14); }

// |f - f(c)| integrands have conical kinks and converge at a fixed low order;
// the oscillation checks carry >= 1% slack, so 1e-6 is plenty there and keeps
// the refinement depth bounded.
QuadratureSpec oscillation_spec(const QuadratureSpec& base) {
    QuadratureSpec q = base;
    q.rel_tol = std::max(q.rel_tol, 1e-6);
    return q;
}

}  // namespace

Witness Witness::point(Complex z) {
    Witness w;
    w.kind = Kind::Point;
    w.z = z;
    return w;
}

Witness Witness::pair(Complex z, Complex w2) {
    Witness w;
    w.kind = Kind::Pair;
    w.z = z;
    w.w = w2;
    return w;
}

Witness Witness::window(Complex z, double r) {
    Witness w;
    w.kind = Kind::Window;
    w.z = z;
    w.r = r;
    return w;
}

CheckOptions CheckOptions::defaults() { return CheckOptions{}; }

CheckOptions CheckOptions::fast() {
    CheckOptions o;
    o.search.radial_cells = 32;
    o.search.angular_cells = 64;
    o.search.refine_iters = 24;
    o.search.seeds = 6;
    o.quad.angular_nodes = 64;
    o.quad.radial_nodes = 20;
    o.quad.max_refinements = 4;
    o.quad.rel_tol = 1e-5;
    o.sampler.pairs = 4000;
    o.grid_radial = 7;
    o.grid_angular = 14;
    o.window_radial = 4;
    o.window_angular = 6;
    return o;
}

std::vector<Complex> interior_grid(int radial, int angular, double rmax) {
    std::vector<Complex> pts;
    pts.emplace_back(0.0, 0.0);
    for (int i = 1; i < radial; ++i) {
        const double rho = rmax * static_cast<double>(i) / (radial - 1);
        for (int j = 0; j < angular; ++j) {
            const double th = kTwoPi * static_cast<double>(j) / angular;
            pts.emplace_back(rho * std::cos(th), rho * std::sin(th));
        }
    }
    return pts;
}

std::vector<DiskWindow> window_sample(int radial, int angular,
                                      const std::vector<double>& fractions) {
    std::vector<DiskWindow> windows;
    for (int i = 0; i < radial; ++i) {
        const double rho = 0.85 * static_cast<double>(i) / std::max(1, radial - 1);
        const int n_ang = i == 0 ? 1 : angular;
        for (int j = 0; j < n_ang; ++j) {
            const double th = kTwoPi * static_cast<double>(j) / angular;
            const Complex c(rho * std::cos(th), rho * std::sin(th));
            for (double frac : fractions) {
                windows.emplace_back(PointInDisk(c), frac * (1.0 - rho));
            }
        }
    }
    return windows;
}

// ---------------------------------------------------------------------------
// Pointwise checks
// ---------------------------------------------------------------------------

Verdict check_pointwise(const HarmonicPolynomial& f, const std::vector<Complex>& grid,
                        const CheckOptions& opt) {
    MarginFold fold(opt.slack_exact);
    for (Complex z : grid) {
        const DerivativeBundle d = derivatives(f, z, false);
        const RealGradients g = real_gradients(f, z, false);
        const Witness w = Witness::point(z);
        fold.add(d.lambda_max, g.grad_u() + g.grad_v(), w);
        fold.add(d.lambda_min, d.grad_norm, w);
        fold.add(d.grad_norm, d.lambda_max, w);
        fold.add(d.lambda_max, std::numbers::sqrt2 * d.grad_norm, w);
        const double scale = std::max(1.0, d.lambda_max * d.lambda_max);
        fold.add(std::abs(d.lambda_max * d.lambda_min - std::abs(d.jacobian)) / scale, 0.0, w);
    }
    return fold.verdict("pointwise");
}

Verdict check_lemma_gradient(const HarmonicPolynomial& f,
                             const std::vector<std::pair<Complex, double>>& circles,
                             const CheckOptions& opt) {
    const QuadratureSpec quad = oscillation_spec(opt.quad);
    const double slack = std::max(opt.slack_quad, 3.0 * quad.rel_tol);
    MarginFold fold(slack);
    for (const auto& [a, r] : circles) {
        if (std::abs(a) + r > 1.0 + 1e-12) {
            throw DomainError("lemma_gradient: circle leaves the closed disk");
        }
        const double lhs = derivatives(f, a, true).lambda_max;
        const Complex fa = f(a);
        const IntegralResult integral = circle_integral(
            [&](double theta) {
                const Complex zeta = a + r * Complex(std::cos(theta), std::sin(theta));
                return Complex(std::abs(fa - f(zeta)), 0.0);
            },
            a, r, quad);
        const double rhs = 2.0 / (kPi * r) * integral.value.real();
        fold.add(lhs, rhs, Witness::window(a, r));
    }
    return fold.verdict("lemma_gradient");
}

Verdict check_khavinson(const HarmonicPolynomial& f, const std::vector<Complex>& grid,
                        const CheckOptions& opt, bool normalize) {
    auto abs_u = [&](Complex z) { return std::abs(f(z).real()); };
    double scale = 1.0;
    if (normalize) {
        const double sup = sup_over_disk(abs_u, opt.search, 0.0).value;
        if (sup < 1e-14) {
            MarginFold fold(opt.slack_quad);
            fold.add(0.0, 4.0 / kPi, Witness::point(Complex(0.0, 0.0)));
            return fold.verdict("khavinson");
        }
        scale = 0.95 / sup;
    }
    MarginFold fold(opt.slack_quad);
    for (Complex z : grid) {
        const double u = scale * f(z).real();
        const RealGradients g = real_gradients(f, z, false);
        const double lhs = scale * g.grad_u();
        const double rhs = 4.0 / kPi * (1.0 - u * u) / (1.0 - std::norm(z));
        fold.add(lhs, rhs, Witness::point(z));
    }
    return fold.verdict("khavinson");
}

Verdict check_interior_gradient_bound(const HarmonicPolynomial& f,
                                      const std::vector<Complex>& grid,
                                      const CheckOptions& opt) {
    MarginFold fold(opt.slack_sup);
    auto u_value = [&](Complex z) { return f(z).real(); };
    for (Complex z : grid) {
        const double d = boundary_distance(z);
        // sup of |u| over D(z, d(z)), scanned through the chart zeta -> z + d zeta
        const double m_z =
            sup_over_disk([&](Complex zeta) { return std::abs(u_value(z + d * zeta)); },
                          opt.search, 0.0)
                .value;
        const RealGradients g = real_gradients(f, z, false);
        const double lhs = d * g.grad_u();
        const double rhs = 8.0 / kPi * (m_z - std::abs(u_value(z)));
        fold.add(lhs, rhs, Witness::point(z));
    }
    return fold.verdict("interior_gradient");
}

Verdict check_schwarz_pick_affine(const std::vector<std::pair<Complex, Complex>>& pairs,
                                  const CheckOptions& opt) {
    MarginFold fold(opt.slack_exact);
    for (const auto& [a, z] : pairs) {
        const AffineChart chart{PointInDisk(a)};
        const double lhs = chart.scale();
        const double rhs = (1.0 - std::norm(chart(z))) / (1.0 - std::norm(z));
        fold.add(lhs, rhs, Witness::pair(a, z));
    }
    return fold.verdict("schwarz_pick_affine");
}

// ---------------------------------------------------------------------------
// Oscillation / norm equivalences
// ---------------------------------------------------------------------------

VerdictPair check_theorem1_constants(const HarmonicPolynomial& f, const Majorant& w,
                                     const CheckOptions& opt) {
    auto lambda_over_omega = [&](Complex z) {
        return derivatives(f, z, true).lambda_max / w(1.0 / clamped_distance(z));
    };
    const double m_lambda = sup_over_disk(lambda_over_omega, opt.search, 0.0).value;

    const std::vector<DiskWindow> windows =
        window_sample(opt.window_radial, opt.window_angular, {1.0, 0.5, 0.25});
    const QuadratureSpec osc_quad = oscillation_spec(opt.quad);
    std::vector<double> osc(windows.size());
    for (std::size_t i = 0; i < windows.size(); ++i) {
        osc[i] = center_oscillation(f, windows[i], osc_quad);
    }

    MarginFold forward(opt.slack_theorem1);
    double m_osc = 0.0;
    for (std::size_t i = 0; i < windows.size(); ++i) {
        const double r = windows[i].radius;
        const double gauge = r * w(1.0 / r);
        forward.add(osc[i], 2.0 * m_lambda * gauge,
                    Witness::window(windows[i].center.value, r));
        m_osc = std::max(m_osc, osc[i] / gauge);
    }

    // every center carries a frac = 1 window, so M_osc covers r = d(z) there
    MarginFold backward(opt.slack_theorem1);
    std::set<std::pair<double, double>> seen;
    for (const DiskWindow& win : windows) {
        const Complex z = win.center.value;
        if (!seen.insert({z.real(), z.imag()}).second) continue;
        const double lhs = derivatives(f, z, false).lambda_max;
        const double rhs = 6.0 * m_osc * w(1.0 / clamped_distance(z));
        backward.add(lhs, rhs, Witness::point(z));
    }

    Verdict fwd = forward.verdict("theorem1_forward");
    Verdict bwd = backward.verdict("theorem1_backward");
    fwd.extras["m_lambda"] = m_lambda;
    bwd.extras["m_osc"] = m_osc;
    return {fwd, bwd};
}

VerdictPair check_bmo_bloch_chain(const HarmonicPolynomial& f, const CheckOptions& opt) {
    const SupResult bloch = bloch_seminorm(f, opt.search);
    const BmoResult bmo2 = bmo_norm(f, 2.0, opt.search, opt.quad, BmoMode::Chart);

    MarginFold lower(opt.slack_sup);
    lower.add(bmo2.norm, bloch.value, Witness::point(bmo2.argmax));
    MarginFold upper(opt.slack_sup);
    upper.add(bloch.value, opt.chain_constant * bmo2.norm, Witness::point(bloch.argmax));

    Verdict lo = lower.verdict("chain_lower");
    Verdict hi = upper.verdict("chain_upper");
    lo.extras["bloch"] = bloch.value;
    lo.extras["bmo2"] = bmo2.norm;
    hi.extras["bloch"] = bloch.value;
    hi.extras["bmo2"] = bmo2.norm;
    hi.extras["constant"] = opt.chain_constant;
    if (bmo2.norm > 0.0) hi.extras["ratio"] = bloch.value / bmo2.norm;
    return {lo, hi};
}

Verdict check_chain_envelope(const HarmonicPolynomial& f, const CheckOptions& opt) {
    // (1 - |a|^2) Lambda(a) <= 2 Lambda_{F_a}(0) <= 4 osc(a): the two-sided
    // equivalence with the constant that the chart route actually proves.
    const SupResult bloch = bloch_seminorm(f, opt.search);
    const BmoResult bmo2 = bmo_norm(f, 2.0, opt.search, opt.quad, BmoMode::Chart);
    MarginFold fold(opt.slack_sup);
    fold.add(bloch.value, 4.0 * bmo2.norm, Witness::point(bloch.argmax));
    Verdict v = fold.verdict("chain_envelope");
    v.extras["bloch"] = bloch.value;
    v.extras["bmo2"] = bmo2.norm;
    if (bmo2.norm > 0.0) v.extras["ratio"] = bloch.value / bmo2.norm;
    return v;
}

Verdict check_extremal(Complex c, const CheckOptions& opt) {
    const HarmonicPolynomial f = HarmonicPolynomial::c_z_plus_zbar(c);
    const double beta = bloch_seminorm(f, opt.search).value;
    const double bmo2 = bmo_norm(f, 2.0, opt.search, opt.quad, BmoMode::Chart).norm;
    const double mag = std::abs(c);

    MarginFold fold(0.0);  // tolerances are baked into the rhs of each line
    const Witness w = Witness::point(Complex(0.0, 0.0));
    fold.add(std::abs(beta - 2.0 * mag), 1e-9 * std::max(1.0, 2.0 * mag), w);
    fold.add(std::abs(bmo2 - mag), 0.005 * mag + 1e-12, w);
    if (mag > 0.0) fold.add(std::abs(beta / bmo2 - 2.0), 0.02, w);

    Verdict v = fold.verdict("extremal");
    v.extras["beta"] = beta;
    v.extras["bmo2"] = bmo2;
    if (mag > 0.0) v.extras["ratio"] = beta / bmo2;
    return v;
}

VerdictPair check_bmo1_corollary(const HarmonicPolynomial& f, const CheckOptions& opt) {
    // omega(t) = t, so r omega(1/r) = 1 and omega(1/d) = 1/d
    const double s = sup_over_disk(
                         [&](Complex z) {
                             return boundary_distance(z) * derivatives(f, z, true).lambda_max;
                         },
                         opt.search, 0.0)
                         .value;

    const std::vector<DiskWindow> windows =
        window_sample(opt.window_radial, opt.window_angular, {1.0, 0.5, 0.25});
    const QuadratureSpec osc_quad = oscillation_spec(opt.quad);
    MarginFold forward(opt.slack_theorem1);
    double window_sup = 0.0;
    for (const DiskWindow& win : windows) {
        const double osc = center_oscillation(f, win, osc_quad);
        forward.add(osc, 2.0 * s, Witness::window(win.center.value, win.radius));
        window_sup = std::max(window_sup, osc);
    }
    MarginFold backward(opt.slack_theorem1);
    backward.add(s, 6.0 * window_sup, Witness::point(Complex(0.0, 0.0)));

    Verdict fwd = forward.verdict("bmo1_forward");
    Verdict bwd = backward.verdict("bmo1_backward");
    fwd.extras["sup_d_lambda"] = s;
    bwd.extras["window_sup"] = window_sup;
    return {fwd, bwd};
}

Verdict check_modulus_equivalence(const HarmonicPolynomial& f, const Majorant& w,
                                  const CheckOptions& opt) {
    PairSampler boundary_sampler = opt.sampler;
    boundary_sampler.boundary_fraction = std::max(boundary_sampler.boundary_fraction, 0.2);
    const LipschitzFit fit_abs =
        lipschitz_fit([&](Complex z) { return Complex(std::abs(f(z).real()), 0.0); }, w,
                      boundary_sampler);
    const LipschitzFit fit_u =
        lipschitz_fit([&](Complex z) { return Complex(f(z).real(), 0.0); }, w, opt.sampler);

    MarginFold fold(opt.slack_sup);
    for (Complex z : interior_grid(opt.grid_radial, opt.grid_angular)) {
        const double d = boundary_distance(z);
        const double lhs = real_gradients(f, z, false).grad_u();
        const double rhs = 40.0 * fit_abs.constant / kPi * w(d) / d;
        fold.add(lhs, rhs, Witness::point(z));
    }
    Verdict v = fold.verdict("modulus_equivalence");
    v.extras["lipschitz_modulus"] = fit_abs.constant;
    v.extras["lipschitz_u"] = fit_u.constant;
    return v;
}

Verdict check_decomposition(const HarmonicPolynomial& f, const Majorant& w,
                            const CheckOptions& opt) {
    const HarmonicPolynomial h(f.h_coeffs());
    const HarmonicPolynomial g(f.g_coeffs());
    auto fit_of = [&](const std::function<Complex(Complex)>& field) {
        return lipschitz_fit(field, w, opt.sampler).constant;
    };
    const double fit_f = fit_of([&](Complex z) { return f(z); });
    const double fit_h = fit_of([&](Complex z) { return h(z); });
    const double fit_g = fit_of([&](Complex z) { return g(z); });
    const double fit_ah = fit_of([&](Complex z) { return Complex(std::abs(h(z)), 0.0); });
    const double fit_ag = fit_of([&](Complex z) { return Complex(std::abs(g(z)), 0.0); });

    // ratios with near-zero components exempted (a constant part has no fit)
    const double zero_tol = 1e-10 * std::max({1.0, fit_f, fit_h, fit_g});
    double max_ratio = 0.0;
    auto ratio = [&](double num, double den) {
        if (num <= zero_tol) return;
        max_ratio = std::max(max_ratio, num / std::max(den, zero_tol));
    };
    ratio(fit_h, fit_f);
    ratio(fit_g, fit_f);
    ratio(fit_f, fit_h + fit_g);
    ratio(fit_h, fit_ah);
    ratio(fit_g, fit_ag);

    MarginFold fold(0.0);
    fold.add(max_ratio, opt.equivalence_cap, Witness::point(Complex(0.0, 0.0)));
    Verdict v = fold.verdict("decomposition");
    v.extras["fit_f"] = fit_f;
    v.extras["fit_h"] = fit_h;
    v.extras["fit_g"] = fit_g;
    v.extras["fit_abs_h"] = fit_ah;
    v.extras["fit_abs_g"] = fit_ag;
    v.extras["max_ratio"] = max_ratio;
    return v;
}

Verdict check_dyakonov_gap(const HarmonicPolynomial& f, const Majorant& w,
                           const CheckOptions& opt) {
    const SupResult gap =
        poisson_gap_sup(f, w, opt.search, opt.quad, opt.poisson_shrink);
    const LipschitzFit fit = lipschitz_fit([&](Complex z) { return f(z); }, w, opt.sampler);

    const double l2 = fit.constant * fit.constant;
    // values at quadrature-noise scale are treated as zero for the ratio
    const double zero_tol = 1e-6;
    double max_ratio = 0.0;
    if (gap.value > zero_tol && l2 > zero_tol) {
        max_ratio = std::max(gap.value / l2, l2 / gap.value);
    } else if (gap.value > zero_tol || l2 > zero_tol) {
        max_ratio = std::numeric_limits<double>::infinity();  // one side vanished
    }
    MarginFold fold(0.0);
    fold.add(max_ratio, opt.equivalence_cap, Witness::point(gap.argmax));
    Verdict v = fold.verdict("dyakonov_gap");
    v.extras["gap_sup"] = gap.value;
    v.extras["lipschitz"] = fit.constant;
    const RegularityReport r1 = is_regular(w);
    const RegularityReport r2 = is_regular(w.squared());
    v.extras["omega_regular"] = r1.regular ? 1.0 : 0.0;
    v.extras["omega_squared_regular"] = r2.regular ? 1.0 : 0.0;
    return v;
}

Verdict check_mp_ip_monotone(const HarmonicPolynomial& f, const CheckOptions& opt) {
    MarginFold fold(opt.slack_monotone);
    for (double p : {2.0, 4.0}) {
        double prev_m = 0.0, prev_i = 0.0;
        bool first = true;
        for (int k = 0; k < 9; ++k) {
            const double r = 0.15 + 0.1 * k;
            const double m = circle_mean_Mp(f, r, p, opt.quad);
            const double i = disk_mean_Ip(f, r, p, opt.quad);
            const Witness w = Witness::window(Complex(0.0, 0.0), r);
            fold.add(i, m, w);  // domination M_p >= I_p
            if (!first) {
                fold.add(prev_m, m, w);  // monotone in r
                fold.add(prev_i, i, w);
            }
            prev_m = m;
            prev_i = i;
            first = false;
        }
    }
    return fold.verdict("mp_ip_monotone");
}

Verdict check_mean_value(const HarmonicPolynomial& f, const CheckOptions& opt,
                         std::uint64_t salt) {
    MarginFold fold(opt.slack_quad);
    for (std::uint64_t k = 0; k < 5; ++k) {
        const Complex c = rng_in_disk(salt, 101, k, 0.85);
        const double frac = 0.3 + 0.6 * rng_u01(salt, 103, k);
        const DiskWindow window(PointInDisk(c), frac * (1.0 - std::abs(c)));
        const Complex mean = area_mean(f, window, opt.quad);
        const Complex at_center = f(c);
        fold.add(std::abs(mean - at_center), 0.0, Witness::window(c, window.radius));
    }
    return fold.verdict("mean_value");
}

// ---------------------------------------------------------------------------
// Fuzzing
// ---------------------------------------------------------------------------

std::vector<std::string> default_fuzz_checks() {
    return {"pointwise",      "lemma_gradient", "schwarz_pick_affine",
            "khavinson",      "mp_ip_monotone", "chain",
            "theorem1_constants", "mean_value"};
}

std::vector<std::string> known_fuzz_checks() {
    return {"pointwise",
            "lemma_gradient",
            "schwarz_pick_affine",
            "khavinson",
            "interior_gradient",
            "mp_ip_monotone",
            "chain",
            "chain_envelope",
            "theorem1_constants",
            "bmo1",
            "modulus_equivalence",
            "decomposition",
            "dyakonov_gap",
            "mean_value",
            "extremal"};
}

HarmonicPolynomial random_polynomial(std::uint64_t seed, std::uint64_t trial, int max_degree,
                                     double coeff_bound, bool require_nonconstant) {
    if (max_degree < 0 || !(coeff_bound > 0.0)) {
        throw DomainError("random_polynomial: bad degree or coefficient bound");
    }
    for (std::uint64_t attempt = 0;; ++attempt) {
        const std::uint64_t base = trial * 4096 + attempt;
        const int deg_h = static_cast<int>(rng_u01(seed, 211, base) * (max_degree + 1));
        const int deg_g = static_cast<int>(rng_u01(seed, 223, base) * (max_degree + 1));
        std::vector<Complex> h(static_cast<std::size_t>(std::min(deg_h, max_degree)) + 1);
        std::vector<Complex> g(static_cast<std::size_t>(std::min(deg_g, max_degree)) + 1);
        for (std::size_t k = 0; k < h.size(); ++k) {
            h[k] = rng_in_disk(seed, 227, base * 64 + k, coeff_bound);
        }
        for (std::size_t k = 0; k < g.size(); ++k) {
            g[k] = rng_in_disk(seed, 229, base * 64 + k, coeff_bound);
        }
        HarmonicPolynomial f(std::move(h), std::move(g));
        if (!require_nonconstant || !f.is_constant() || attempt > 64) return f;
    }
}

namespace {

// Trial-salted geometry: a fixed polar grid plus random interior points.
std::vector<Complex> salted_grid(const CheckOptions& opt, std::uint64_t seed,
                                 std::uint64_t trial, std::uint64_t stream) {
    std::vector<Complex> grid = interior_grid(opt.grid_radial, opt.grid_angular);
    for (std::uint64_t k = 0; k < 24; ++k) {
        grid.push_back(rng_in_disk(seed, stream, trial * 64 + k, 0.92));
    }
    return grid;
}

void run_named_check(const std::string& name, const HarmonicPolynomial& f, std::uint64_t seed,
                     std::uint64_t trial, const Majorant& omega, const CheckOptions& opt,
                     std::vector<Verdict>& out) {
    if (name == "pointwise") {
        out.push_back(check_pointwise(f, salted_grid(opt, seed, trial, 307), opt));
    } else if (name == "lemma_gradient") {
        std::vector<std::pair<Complex, double>> circles;
        for (std::uint64_t k = 0; k < 6; ++k) {
            const Complex a = rng_in_disk(seed, 311, trial * 16 + k, 0.7);
            const double room = 1.0 - std::abs(a);
            const double r = room * (0.25 + 0.7 * rng_u01(seed, 313, trial * 16 + k));
            circles.emplace_back(a, r);
        }
        out.push_back(check_lemma_gradient(f, circles, opt));
    } else if (name == "schwarz_pick_affine") {
        std::vector<std::pair<Complex, Complex>> pairs;
        for (std::uint64_t k = 0; k < 64; ++k) {
            pairs.emplace_back(rng_in_disk(seed, 317, trial * 128 + k, 0.95),
                               rng_in_disk(seed, 331, trial * 128 + k, 0.95));
        }
        out.push_back(check_schwarz_pick_affine(pairs, opt));
    } else if (name == "khavinson") {
        out.push_back(check_khavinson(f, salted_grid(opt, seed, trial, 337), opt, true));
    } else if (name == "interior_gradient") {
        out.push_back(
            check_interior_gradient_bound(f, interior_grid(5, 8, 0.85), opt));
    } else if (name == "mp_ip_monotone") {
        out.push_back(check_mp_ip_monotone(f, opt));
    } else if (name == "chain") {
        const VerdictPair p = check_bmo_bloch_chain(f, opt);
        out.push_back(p.forward);
        out.push_back(p.backward);
    } else if (name == "chain_envelope") {
        out.push_back(check_chain_envelope(f, opt));
    } else if (name == "theorem1_constants") {
        const VerdictPair p = check_theorem1_constants(f, omega, opt);
        out.push_back(p.forward);
        out.push_back(p.backward);
    } else if (name == "bmo1") {
        const VerdictPair p = check_bmo1_corollary(f, opt);
        out.push_back(p.forward);
        out.push_back(p.backward);
    } else if (name == "modulus_equivalence") {
        out.push_back(check_modulus_equivalence(f, omega, opt));
    } else if (name == "decomposition") {
        out.push_back(check_decomposition(f, omega, opt));
    } else if (name == "dyakonov_gap") {
        // the gap needs a holomorphic map: drop the co-analytic tail
        const HarmonicPolynomial holo(f.h_coeffs());
        out.push_back(check_dyakonov_gap(holo, omega, opt));
    } else if (name == "mean_value") {
        out.push_back(check_mean_value(f, opt, mix64(seed) ^ trial));
    } else if (name == "extremal") {
        out.push_back(check_extremal(rng_in_disk(seed, 347, trial, 2.0), opt));
    } else {
        throw DomainError("fuzz: unknown check '" + name + "'");
    }
}

}  // namespace

FuzzSummary fuzz(const FuzzConfig& config) {
    if (config.trials < 0) throw DomainError("fuzz: trials must be >= 0");
    const std::vector<std::string> known = known_fuzz_checks();
    for (const std::string& name : config.checks) {
        if (std::find(known.begin(), known.end(), name) == known.end()) {
            throw DomainError("fuzz: unknown check '" + name + "'");
        }
    }

    FuzzSummary summary;
    summary.trials = config.trials;
    summary.max_degree = config.max_degree;
    summary.coeff_bound = config.coeff_bound;
    summary.seed = config.seed;
    summary.requested_checks = config.checks;
    summary.omega_description = config.omega.describe();

    for (int trial = 0; trial < config.trials; ++trial) {
        const HarmonicPolynomial f = random_polynomial(
            config.seed, static_cast<std::uint64_t>(trial), config.max_degree,
            config.coeff_bound);
        std::vector<Verdict> verdicts;
        for (const std::string& name : config.checks) {
            run_named_check(name, f, config.seed, static_cast<std::uint64_t>(trial),
                            config.omega, config.options, verdicts);
        }
        for (const Verdict& v : verdicts) {
            CheckStats& st = summary.stats[v.check];
            st.runs += 1;
            if (st.worst_trial < 0 || v.margin < st.worst_margin) {
                st.worst_margin = v.margin;
                st.worst_trial = trial;
                st.worst = v;
            }
            if (!v.pass) {
                st.failures += 1;
                summary.failures.emplace_back(trial, v);
                summary.all_pass = false;
            }
        }
    }
    return summary;
}

}  // namespace hmtk
