#include "hmtk/norms.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "hmtk/parallel.hpp"
#include "hmtk/rng.hpp"

namespace hmtk {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

bool is_even_integer(double p) {
    const double r = std::round(p);
    return std::abs(p - r) < 1e-12 && static_cast<long long>(r) % 2 == 0;
}

// Exact single-pass spec for |f|^p on circles/disks when p is an even integer.
QuadratureSpec spec_for_abs_power(const HarmonicPolynomial& f, double p,
                                  const QuadratureSpec& base) {
    if (!is_even_integer(p)) return base;
    const int deg = std::max(0, f.degree());
    const int ip = static_cast<int>(std::llround(p));
    return sized_for_degrees(base, ip * deg, ip * deg + 1);
}

}  // namespace

// ---------------------------------------------------------------------------
// p-means and the Green derivative route
// ---------------------------------------------------------------------------

double circle_mean_Mp(const HarmonicPolynomial& f, double r, double p,
                      const QuadratureSpec& quad) {
    if (!(r > 0.0 && r <= 1.0)) throw DomainError("circle_mean: r outside (0, 1]");
    if (!(p >= 1.0)) throw DomainError("circle_mean: p must be >= 1");
    const QuadratureSpec spec = spec_for_abs_power(f, p, quad);
    const IntegralResult res = circle_integral(
        [&](double theta) {
            const Complex z = r * Complex(std::cos(theta), std::sin(theta));
            return Complex(std::pow(std::abs(f(z)), p), 0.0);
        },
        Complex(0.0, 0.0), r, spec);
    return std::pow(res.value.real() / kTwoPi, 1.0 / p);
}

double disk_mean_Ip(const HarmonicPolynomial& f, double r, double p, const QuadratureSpec& quad) {
    if (!(r > 0.0 && r <= 1.0)) throw DomainError("disk_mean: r outside (0, 1]");
    if (!(p >= 1.0)) throw DomainError("disk_mean: p must be >= 1");
    QuadratureSpec spec = spec_for_abs_power(f, p, quad);
    spec.measure = Measure::Area;
    const DiskWindow window(PointInDisk(Complex(0.0, 0.0)), r);
    const IntegralResult res = disk_integral(
        [&](Complex z) { return Complex(std::pow(std::abs(f(z)), p), 0.0); }, window, spec);
    return std::pow(res.value.real() / window.area(), 1.0 / p);
}

double dMp_dr_green(const HarmonicPolynomial& f, double r, double p, const QuadratureSpec& quad) {
    if (!(r > 0.0 && r < 1.0)) throw DomainError("dMp_dr_green: r outside (0, 1)");
    if (!(p >= 2.0)) throw DomainError("dMp_dr_green: needs p >= 2");
    if (f.is_constant()) return 0.0;

    QuadratureSpec spec = spec_for_abs_power(f, p, quad);
    spec.measure = Measure::NormalizedArea;
    const double cross_coeff = 0.5 * p - 1.0;
    auto integrand = [&](Complex z) {
        const DerivativeBundle d = derivatives(f, z, true);
        const double grad2 = d.grad_norm * d.grad_norm;
        const Complex fv = f(z);
        const double afv = std::abs(fv);
        double total;
        if (p == 2.0) {
            total = grad2;  // |f|^0 = 1 and the cross term drops out
        } else {
            total = std::pow(afv, p - 2.0) * grad2;
            if (cross_coeff != 0.0) {
                if (afv > 1e-150) {
                    const Complex cross = d.f_z * std::conj(fv) + fv * std::conj(d.f_zbar);
                    const double q = std::abs(cross) / afv;  // bounded by 2 |grad f|
                    total += cross_coeff * std::pow(afv, p - 2.0) * q * q;
                }
                // afv ~ 0: the cross term is O(|f|^{p-2}), removable for p > 2
            }
        }
        return Complex(total, 0.0);
    };
    const DiskWindow window(PointInDisk(Complex(0.0, 0.0)), r);
    const IntegralResult res = disk_integral(integrand, window, spec);
    return p * res.value.real() / r;
}

GreenIdentityResult green_identity_check(const std::function<double(Complex)>& g,
                                         const std::function<double(Complex)>& laplacian,
                                         double r, const QuadratureSpec& quad) {
    if (!(r > 0.0 && r <= 1.0)) throw DomainError("green_identity: r outside (0, 1]");
    const IntegralResult lhs_raw = circle_integral(
        [&](double theta) {
            return Complex(g(r * Complex(std::cos(theta), std::sin(theta))), 0.0);
        },
        Complex(0.0, 0.0), r, quad);

    QuadratureSpec rhs_spec = quad;
    rhs_spec.measure = Measure::NormalizedArea;
    rhs_spec.radial_panels = std::max(quad.radial_panels, 24);  // log kink at the center
    const DiskWindow window(PointInDisk(Complex(0.0, 0.0)), r);
    const IntegralResult rhs_raw = disk_integral(
        [&](Complex z) { return Complex(laplacian(z) * std::log(r / std::abs(z)), 0.0); },
        window, rhs_spec);

    return {lhs_raw.value.real() / kTwoPi, g(Complex(0.0, 0.0)) + 0.5 * rhs_raw.value.real()};
}

// ---------------------------------------------------------------------------
// Bloch seminorm and BMO norms
// ---------------------------------------------------------------------------

SupResult bloch_seminorm(const HarmonicPolynomial& f, const SupSearchSpec& search) {
    auto field = [&](Complex z) {
        const double w = 1.0 - std::norm(z);
        return w * derivatives(f, z, true).lambda_max;
    };
    return sup_over_disk(field, search, 0.0);
}

double chart_oscillation(const HarmonicPolynomial& f, Complex a, double p,
                         const QuadratureSpec& quad) {
    if (!(p >= 1.0)) throw DomainError("chart_oscillation: p must be >= 1");
    if (std::abs(a) >= 1.0 - 1e-15) return 0.0;  // the chart degenerates to a point
    const HarmonicPolynomial composed = chart_compose(f, AffineChart(PointInDisk(a)));
    const Complex center_value = composed(Complex(0.0, 0.0));
    QuadratureSpec spec = spec_for_abs_power(f, p, quad);
    spec.measure = Measure::NormalizedArea;
    const DiskWindow unit(PointInDisk(Complex(0.0, 0.0)), 1.0);
    const IntegralResult res = disk_integral(
        [&](Complex z) {
            return Complex(std::pow(std::abs(composed(z) - center_value), p), 0.0);
        },
        unit, spec);
    return std::pow(res.value.real(), 1.0 / p);
}

namespace {

BmoResult bmo_direct(const HarmonicPolynomial& f, double p, const QuadratureSpec& quad) {
    QuadratureSpec spec = spec_for_abs_power(f, p, quad);
    spec.measure = Measure::Area;
    BmoResult best{0.0, Complex(0.0, 0.0)};
    const int n_r = 6, n_t = 12;
    const double fracs[3] = {1.0, 0.6, 0.3};
    for (int i = 0; i < n_r; ++i) {
        const double rho = 0.85 * static_cast<double>(i) / (n_r - 1);
        const int n_ang = i == 0 ? 1 : n_t;
        for (int j = 0; j < n_ang; ++j) {
            const double th = kTwoPi * static_cast<double>(j) / n_t;
            const Complex c(rho * std::cos(th), rho * std::sin(th));
            for (double frac : fracs) {
                const DiskWindow window(PointInDisk(c), frac * (1.0 - rho));
                const Complex mean = area_mean(f, window, quad);
                const IntegralResult res = disk_integral(
                    [&](Complex z) {
                        return Complex(std::pow(std::abs(f(z) - mean), p), 0.0);
                    },
                    window, spec);
                const double value = std::pow(res.value.real() / window.area(), 1.0 / p);
                if (value > best.norm) best = {value, c};
            }
        }
    }
    return best;
}

}  // namespace

BmoResult bmo_norm(const HarmonicPolynomial& f, double p, const SupSearchSpec& search,
                   const QuadratureSpec& quad, BmoMode mode) {
    if (!(p >= 1.0)) throw DomainError("bmo_norm: p must be >= 1");
    if (mode == BmoMode::Direct) return bmo_direct(f, p, quad);
    auto field = [&](Complex a) { return chart_oscillation(f, a, p, quad); };
    const SupResult s = sup_over_disk(field, search, 0.0);
    return {s.value, s.argmax};
}

double center_oscillation(const HarmonicPolynomial& f, const DiskWindow& window,
                          const QuadratureSpec& quad) {
    QuadratureSpec spec = quad;  // |.| has a kink; keep the adaptive path
    spec.measure = Measure::Area;
    const Complex fc = f(window.center.value);
    const IntegralResult res = disk_integral(
        [&](Complex z) { return Complex(std::abs(f(z) - fc), 0.0); }, window, spec);
    return res.value.real() / window.area();
}

// ---------------------------------------------------------------------------
// Poisson extension of |f|^2 and its gap
// ---------------------------------------------------------------------------

double poisson_quadratic(const HarmonicPolynomial& f, Complex z, const QuadratureSpec& quad) {
    if (!f.is_holomorphic()) {
        throw DomainError("poisson_quadratic: map must be holomorphic (co-analytic part constant)");
    }
    if (std::abs(z) >= 1.0) throw DomainError("poisson_quadratic: |z| must be < 1");
    // fold a constant co-analytic part into the analytic one
    std::vector<Complex> coeffs = f.h_coeffs();
    if (coeffs.empty()) coeffs.push_back(Complex(0.0, 0.0));
    if (!f.g_coeffs().empty()) coeffs[0] += std::conj(f.g_coeffs()[0]);
    const HarmonicPolynomial h(coeffs);

    const double weight = 1.0 - std::norm(z);
    const IntegralResult res = circle_integral(
        [&](double theta) {
            const Complex e(std::cos(theta), std::sin(theta));
            const double kernel = weight / std::norm(z - e);
            return Complex(kernel * std::norm(h(e)), 0.0);
        },
        Complex(0.0, 0.0), 1.0, quad);
    const double extension = res.value.real() / kTwoPi;
    return extension - std::norm(h(z));
}

SupResult poisson_gap_sup(const HarmonicPolynomial& f, const Majorant& w,
                          const SupSearchSpec& search, const QuadratureSpec& quad,
                          double shrink) {
    if (!(shrink > 0.0)) throw DomainError("poisson_gap_sup: shrink must be positive");
    auto field = [&](Complex z) {
        const double d = boundary_distance(z);
        const double denom = w(std::max(d, 1e-14));
        return poisson_quadratic(f, z, quad) / (denom * denom);
    };
    return sup_over_disk(field, search, shrink);
}

// ---------------------------------------------------------------------------
// Combined report
// ---------------------------------------------------------------------------

NormReport compute_norm_report(const HarmonicPolynomial& f, const std::vector<double>& ps,
                               const SupSearchSpec& search, const QuadratureSpec& quad,
                               const std::optional<Majorant>& omega) {
    NormReport report;
    const SupResult bloch = bloch_seminorm(f, search);
    report.bloch = bloch.value;
    report.bloch_argmax = bloch.argmax;

    bool argmax_set = false;
    for (double p : ps) {
        const BmoResult b = bmo_norm(f, p, search, quad, BmoMode::Chart);
        report.bmo[p] = b.norm;
        if (p == 2.0 || !argmax_set) {
            report.bmo_argmax = b.argmax;
            argmax_set = p == 2.0;
        }
        std::vector<CurvePoint> mp, ip;
        for (int i = 1; i <= 9; ++i) {
            const double r = 0.1 * i;
            mp.push_back({r, circle_mean_Mp(f, r, p, quad)});
            ip.push_back({r, disk_mean_Ip(f, r, p, quad)});
        }
        report.mp_curves[p] = std::move(mp);
        report.ip_curves[p] = std::move(ip);
    }

    if (omega) {
        PairSampler sampler;
        report.lipschitz = lipschitz_fit([&](Complex z) { return f(z); }, *omega, sampler);
        if (f.is_holomorphic()) {
            report.poisson_gap = poisson_gap_sup(f, *omega, search, quad).value;
        }
    }
    return report;
}

}  // namespace hmtk
