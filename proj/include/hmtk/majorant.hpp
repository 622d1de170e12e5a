#pragma once

#include <complex>
#include <cstdint>
#include <functional>
#include <string>
#include <utility>
#include <vector>

#include "hmtk/quadrature.hpp"

namespace hmtk {

enum class MajorantFamily { Power, PowerLog, Tabulated };

/// Modulus-of-continuity gauge: omega increasing, omega(0) = 0 and omega(t)/t
/// non-increasing (the defining property, verified numerically by
/// is_valid_majorant rather than assumed). Families:
///   power      omega(t) = c t^alpha
///   power_log  omega(t) = c t^alpha (1 + log(1 + 1/t))^beta
///   tabulated  log-log interpolation of a monotone table, continued past the
///              ends with the slope of the first / last segment
class Majorant {
public:
    static Majorant power(double alpha, double c = 1.0);
    static Majorant power_log(double alpha, double beta, double c = 1.0);
    static Majorant tabulated(std::vector<std::pair<double, double>> points);

    double operator()(double t) const;

    MajorantFamily family() const { return family_; }
    double alpha() const { return alpha_; }
    double beta() const { return beta_; }
    double scale() const { return c_; }
    const std::vector<std::pair<double, double>>& points() const { return table_; }

    Majorant squared() const;  // pointwise omega^2, same family
    std::string describe() const;

private:
    Majorant() = default;
    MajorantFamily family_ = MajorantFamily::Power;
    double alpha_ = 1.0, beta_ = 0.0, c_ = 1.0;
    std::vector<std::pair<double, double>> table_;
};

struct MajorantValidity {
    bool valid;
    double worst_violation;  // largest monotonicity defect seen on the grid
    double worst_t;
    std::string reason;  // empty when valid
};

/// Checks omega increasing and omega(t)/t non-increasing on the grid, with
/// 1e-12 slack for floating-point plateaus. The grid must be sorted, positive
/// and have at least 16 points spanning [1e-6, 10].
MajorantValidity is_valid_majorant(const Majorant& w, const std::vector<double>& grid);

std::vector<double> default_majorant_grid();  // 64 log-spaced points in [1e-6, 10]

struct ConditionRatio {
    double ratio;       // condition integral divided by omega(delta)
    bool divergent;     // integral did not settle (flat or growing octaves)
    double tail_bound;  // magnitude of the extrapolated tail included in ratio
};

/// (integral_0^delta omega(t)/t dt) / omega(delta). Geometric octave panels
/// toward 0 with Gauss-Legendre on each, tail extrapolated from the octave
/// ratio. Divergence is reported in the result, not thrown.
ConditionRatio regularity_condition_I(const Majorant& w, double delta,
                                      const QuadratureSpec& quad = {});

/// (delta * integral_delta^inf omega(t)/t^2 dt) / omega(delta). Octave panels
/// up to t = 1e6, then an analytic tail from the local power slope of omega.
ConditionRatio regularity_condition_II(const Majorant& w, double delta,
                                       const QuadratureSpec& quad = {});

struct RegularityReport {
    bool regular;
    double M_I, M_II;  // sup of the two condition ratios over the delta grid
    bool condition_I_divergent;
    bool condition_II_divergent;
};

/// Both condition ratios over a log-spaced delta grid in (0, delta0].
RegularityReport is_regular(const Majorant& w, double delta0 = 1.0,
                            const QuadratureSpec& quad = {});

struct PairSampler {
    int pairs = 20000;
    std::uint64_t seed = 1;
    double min_separation = 1e-4;   // near-diagonal stratum reaches down to this
    double boundary_fraction = 0.0; // fraction of pairs with w on the unit circle
};

struct LipschitzFit {
    double constant;  // max sampled |F(z)-F(w)| / omega(|z-w|); a lower bound of the sup
    std::complex<double> worst_z, worst_w;
    int sample_count;
};

/// Sampled Lipschitz constant of a scalar or complex field against omega.
/// Separations are stratified on a log scale so both the derivative-driven
/// local ratio and the global one are probed. Reproducible: draws depend only
/// on (seed, pair index).
LipschitzFit lipschitz_fit(const std::function<std::complex<double>(std::complex<double>)>& field,
                           const Majorant& w, const PairSampler& sampler);

}  // namespace hmtk
