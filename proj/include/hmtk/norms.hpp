#pragma once

#include <map>
#include <optional>
#include <vector>

#include "hmtk/harmonic.hpp"
#include "hmtk/majorant.hpp"
#include "hmtk/quadrature.hpp"
#include "hmtk/supsearch.hpp"

namespace hmtk {

/// Circle p-mean M_p(r, f) = ((1/2pi) int_0^{2pi} |f(r e^{i theta})|^p dtheta)^(1/p).
double circle_mean_Mp(const HarmonicPolynomial& f, double r, double p, const QuadratureSpec& quad);

/// Disk p-mean I_p(r, f) over D_r, normalized by the window area.
double disk_mean_Ip(const HarmonicPolynomial& f, double r, double p, const QuadratureSpec& quad);

/// d/dr of M_p^p(r, f) through the Green identity route:
///   r d/dr M_p^p = p int_{D_r} [ (p/2 - 1) |f|^{p-4} |f_z conj(f) + f conj(f_zbar)|^2
///                                + |f|^{p-2} |grad f|^2 ] dsigma.
/// Needs p >= 2. Where f vanishes and p < 4 the bracket is removable (the
/// cross term is bounded by 2 |f| |grad f|) and is evaluated as zero.
double dMp_dr_green(const HarmonicPolynomial& f, double r, double p, const QuadratureSpec& quad);

struct GreenIdentityResult {
    double lhs;  // (1/2pi) int g(r e^{i theta}) dtheta
    double rhs;  // g(0) + (1/2) int_{D_r} Lap(g) log(r/|z|) dsigma
};

/// Both sides of the Green identity for a C^2 function with known Laplacian.
GreenIdentityResult green_identity_check(const std::function<double(Complex)>& g,
                                         const std::function<double(Complex)>& laplacian,
                                         double r, const QuadratureSpec& quad);

/// Bloch seminorm beta_f = sup over the disk of (1 - |z|^2) Lambda_f(z).
SupResult bloch_seminorm(const HarmonicPolynomial& f, const SupSearchSpec& search);

enum class BmoMode { Chart, Direct };

struct BmoResult {
    double norm;
    Complex argmax;  // chart center (Chart mode) or window center (Direct mode)
};

/// Chart oscillation ((1/pi) int_D |f(phi_a(z)) - f(a)|^p dA)^(1/p); zero at |a| = 1.
double chart_oscillation(const HarmonicPolynomial& f, Complex a, double p,
                         const QuadratureSpec& quad);

/// BMO_p norm. Chart mode takes the sup of the chart oscillation over centers
/// a (a 2-D search; the largest window dominates all smaller radii). Direct
/// mode samples windows (z, r) and subtracts the window mean; it is a lower
/// bound of the chart value and acts as its falsifier.
BmoResult bmo_norm(const HarmonicPolynomial& f, double p, const SupSearchSpec& search,
                   const QuadratureSpec& quad, BmoMode mode = BmoMode::Chart);

/// Mean of |f - f(center)| over the window (center subtraction, not mean subtraction).
double center_oscillation(const HarmonicPolynomial& f, const DiskWindow& window,
                          const QuadratureSpec& quad);

/// Poisson gap P_{|f|^2}(z) - |f(z)|^2 >= 0 for holomorphic f (co-analytic
/// part at most constant; anything else raises DomainError).
double poisson_quadratic(const HarmonicPolynomial& f, Complex z, const QuadratureSpec& quad);

/// Sup over |z| <= 1 - shrink of the Poisson gap divided by omega^2(d(z)).
/// The ratio extends continuously to the boundary but the kernel quadrature
/// does not, hence the excluded annulus.
SupResult poisson_gap_sup(const HarmonicPolynomial& f, const Majorant& w,
                          const SupSearchSpec& search, const QuadratureSpec& quad,
                          double shrink = 5e-3);

struct CurvePoint {
    double r, value;
};

struct NormReport {
    double bloch = 0.0;
    Complex bloch_argmax{0.0, 0.0};
    std::map<double, double> bmo;  // p -> chart-mode norm
    Complex bmo_argmax{0.0, 0.0};  // worst chart center (p = 2 when present)
    std::map<double, std::vector<CurvePoint>> mp_curves, ip_curves;
    std::optional<LipschitzFit> lipschitz;
    std::optional<double> poisson_gap;  // sup of gap / omega^2(d), holomorphic maps only
};

/// Every functional of one map in one struct. The Lipschitz fit and the
/// Poisson gap are filled only when a majorant is supplied (the gap also
/// needs a holomorphic map).
NormReport compute_norm_report(const HarmonicPolynomial& f, const std::vector<double>& ps,
                               const SupSearchSpec& search, const QuadratureSpec& quad,
                               const std::optional<Majorant>& omega = {});

}  // namespace hmtk
