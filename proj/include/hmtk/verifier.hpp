#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "hmtk/majorant.hpp"
#include "hmtk/norms.hpp"

namespace hmtk {

struct Witness {
    enum class Kind { None, Point, Pair, Window };
    Kind kind = Kind::None;
    Complex z{0.0, 0.0};
    Complex w{0.0, 0.0};  // second point of a pair
    double r = 0.0;       // window radius
    static Witness point(Complex z);
    static Witness pair(Complex z, Complex w);
    static Witness window(Complex z, double r);
};

/// One checked inequality: pass iff margin >= 0, where
///   margin = rhs + slack * max(1, |rhs|) - lhs.
/// The witness is the location where the margin was smallest.
struct Verdict {
    std::string check;
    double lhs = 0.0;
    double rhs = 0.0;
    double margin = 0.0;
    double slack = 0.0;
    bool pass = true;
    Witness witness;
    std::map<std::string, double> extras;  // reported constants (fits, sups, ratios)
};

struct VerdictPair {
    Verdict forward, backward;
};

/// Tolerances and work sizes shared by all checks. defaults() is the
/// production setting; fast() shrinks the grids for fuzzing.
struct CheckOptions {
    double slack_exact = 1e-12;   // closed-form identities and inequalities
    double slack_quad = 1e-9;     // single-quadrature comparisons
    double slack_sup = 0.02;      // two independently grid-estimated sups
    double slack_theorem1 = 0.01; // oscillation/gradient equivalence constants 2 and 6
    double slack_monotone = 1e-10;
    double chain_constant = 2.0;     // the sharp constant; 1.9 is the negative control
    double equivalence_cap = 100.0;  // allowed ratio between paired Lipschitz-type constants
    double poisson_shrink = 5e-3;    // annulus excluded from the Poisson gap sup
    SupSearchSpec search;
    QuadratureSpec quad;
    PairSampler sampler;
    int grid_radial = 10, grid_angular = 20;    // pointwise grids (interior)
    int window_radial = 5, window_angular = 8;  // window-sample centers
    static CheckOptions defaults();
    static CheckOptions fast();
};

// Deterministic geometry builders.
std::vector<Complex> interior_grid(int radial, int angular, double rmax = 0.9);
std::vector<DiskWindow> window_sample(int radial, int angular,
                                      const std::vector<double>& fractions);

// --- pointwise inequalities ------------------------------------------------

/// Lambda <= |grad u| + |grad v| plus the dilation chain
/// lambda <= |grad f| <= Lambda <= sqrt(2)|grad f| and Lambda lambda = |J|.
Verdict check_pointwise(const HarmonicPolynomial& f, const std::vector<Complex>& grid,
                        const CheckOptions& opt);

/// Lambda_f(a) <= (2/(pi r)) int |f(a) - f(a + r e^{i theta})| dtheta.
Verdict check_lemma_gradient(const HarmonicPolynomial& f,
                             const std::vector<std::pair<Complex, double>>& circles,
                             const CheckOptions& opt);

/// |grad u| <= (4/pi)(1 - u^2)/(1 - |z|^2) for real harmonic u with values in
/// (-1, 1); u = Re f, rescaled so its closed-disk sup is 0.95 when normalize.
Verdict check_khavinson(const HarmonicPolynomial& f, const std::vector<Complex>& grid,
                        const CheckOptions& opt, bool normalize = true);

/// d(z) |grad u(z)| <= (8/pi)(M_z - |u(z)|) with M_z the sup of |u| over D(z, d(z)).
Verdict check_interior_gradient_bound(const HarmonicPolynomial& f,
                                      const std::vector<Complex>& grid, const CheckOptions& opt);

/// |phi_a'(z)| <= (1 - |phi_a(z)|^2)/(1 - |z|^2) for the affine charts.
Verdict check_schwarz_pick_affine(const std::vector<std::pair<Complex, Complex>>& pairs,
                                  const CheckOptions& opt);

// --- oscillation / norm equivalences ----------------------------------------

/// Forward: every window obeys center_oscillation <= 2 M_Lambda r omega(1/r)
/// with M_Lambda = sup Lambda/omega(1/d). Backward: every center obeys
/// Lambda(z) <= 6 M_osc omega(1/d(z)) with M_osc the window sup of
/// oscillation/(r omega(1/r)). Windows include r = d(z) at every center.
VerdictPair check_theorem1_constants(const HarmonicPolynomial& f, const Majorant& w,
                                     const CheckOptions& opt);

/// BMO_2 <= beta_f <= chain_constant * BMO_2. The upper constant 2 is the
/// sharp claim; it is falsified by some harmonic polynomials (see the
/// repository tests), which the fuzz summary then reports as data.
VerdictPair check_bmo_bloch_chain(const HarmonicPolynomial& f, const CheckOptions& opt);

/// beta_f <= 4 BMO_2: the envelope that the affine-chart route proves, since
/// (1 - |a|^2) Lambda(a) <= 2 (1 - |a|) Lambda(a) and
/// Lambda_{F_a}(0)^2 <= 4 osc_2(a)^2. Holds for every harmonic map.
Verdict check_chain_envelope(const HarmonicPolynomial& f, const CheckOptions& opt);

/// For f = C(z + conj z): beta = 2|C| to 1e-9, BMO_2 = |C| to 0.5%, ratio 2 to 1%.
Verdict check_extremal(Complex c, const CheckOptions& opt);

/// The omega(t) = t specialization: window oscillations <= 2 S and
/// S <= 6 * (window sup), with S = sup d(z) Lambda(z).
VerdictPair check_bmo1_corollary(const HarmonicPolynomial& f, const CheckOptions& opt);

/// Real part route: with M the sampled Lipschitz constant of |u| (boundary
/// pairs included), |grad u(z)| <= (40 M / pi) omega(d(z))/d(z) on a grid.
Verdict check_modulus_equivalence(const HarmonicPolynomial& f, const Majorant& w,
                                  const CheckOptions& opt);

/// Lipschitz fits of (f, h, g, |h|, |g|) on one sample set; the fits must
/// agree within the equivalence cap (zero components exempt).
Verdict check_decomposition(const HarmonicPolynomial& f, const Majorant& w,
                            const CheckOptions& opt);

/// Poisson gap sup against the squared gauge versus the Lipschitz fit of f;
/// both finite and within the equivalence cap of each other.
Verdict check_dyakonov_gap(const HarmonicPolynomial& f, const Majorant& w,
                           const CheckOptions& opt);

/// M_p and I_p non-decreasing in r and M_p >= I_p, for p in {2, 4}.
Verdict check_mp_ip_monotone(const HarmonicPolynomial& f, const CheckOptions& opt);

/// |area_mean(f, W) - f(center)| <= slack_quad on salted random windows.
Verdict check_mean_value(const HarmonicPolynomial& f, const CheckOptions& opt,
                         std::uint64_t salt = 0);

// --- fuzzing -----------------------------------------------------------------

/// Check names accepted by fuzz(); pair-producing checks expand into
/// name_forward/name_backward or chain_lower/chain_upper verdicts.
std::vector<std::string> default_fuzz_checks();
std::vector<std::string> known_fuzz_checks();

struct FuzzConfig {
    int trials = 200;
    int max_degree = 8;
    double coeff_bound = 1.0;
    std::uint64_t seed = 42;
    std::vector<std::string> checks = default_fuzz_checks();
    Majorant omega = Majorant::power(0.5);  // used by the majorant-dependent checks
    CheckOptions options = CheckOptions::fast();
};

struct CheckStats {
    int runs = 0;
    int failures = 0;
    double worst_margin = 0.0;
    int worst_trial = -1;
    Verdict worst;
};

struct FuzzSummary {
    int trials = 0;
    int max_degree = 0;
    double coeff_bound = 0.0;
    std::uint64_t seed = 0;
    std::vector<std::string> requested_checks;
    std::string omega_description;
    std::map<std::string, CheckStats> stats;        // keyed by expanded verdict name
    std::vector<std::pair<int, Verdict>> failures;  // (trial, verdict)
    bool all_pass = true;
};

/// Coefficients drawn uniformly from the complex disk of radius coeff_bound,
/// degrees uniform in [0, max_degree], all derived from (seed, trial).
HarmonicPolynomial random_polynomial(std::uint64_t seed, std::uint64_t trial, int max_degree,
                                     double coeff_bound, bool require_nonconstant = false);

/// Runs the configured checks on `trials` random maps. Identical configs give
/// identical summaries; failures are data, not exceptions.
FuzzSummary fuzz(const FuzzConfig& config);

}  // namespace hmtk
