#include "hmtk/quadrature.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <mutex>
#include <numbers>
#include <sstream>

#include "hmtk/parallel.hpp"

namespace hmtk {

namespace {
constexpr double kTwoPi = 2.0 * std::numbers::pi;
}

void QuadratureSpec::validate() const {
    if (angular_nodes < 16 || angular_nodes % 2 != 0) {
        throw DomainError("quadrature: angular_nodes must be even and >= 16");
    }
    if (radial_nodes < 2) throw DomainError("quadrature: radial_nodes must be >= 2");
    if (radial_panels < 1) throw DomainError("quadrature: radial_panels must be >= 1");
    if (max_refinements < 0 || max_refinements > 12) {
        throw DomainError("quadrature: max_refinements outside [0, 12]");
    }
    if (!(rel_tol > 1e-14 && rel_tol < 1e-2)) {
        throw DomainError("quadrature: rel_tol outside (1e-14, 1e-2)");
    }
}

const GaussRule& gauss_legendre(int n) {
    if (n < 1) throw DomainError("gauss_legendre: order must be positive");
    static std::map<int, GaussRule> cache;
    static std::mutex mu;
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find(n);
    if (it != cache.end()) return it->second;

    GaussRule rule;
    rule.nodes.assign(n, 0.0);
    rule.weights.assign(n, 0.0);
    for (int i = 0; i < (n + 1) / 2; ++i) {
        // Newton on P_n from the Chebyshev-like initial guess.
        double x = std::cos(std::numbers::pi * (i + 0.75) / (n + 0.5));
        double p1 = 0.0, dp = 0.0;
        for (int iter = 0; iter < 64; ++iter) {
            double p0 = 1.0;
            p1 = x;
            for (int k = 2; k <= n; ++k) {
                const double pk = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
                p0 = p1;
                p1 = pk;
            }
            dp = n * (x * p1 - p0) / (x * x - 1.0);
            const double dx = p1 / dp;
            x -= dx;
            if (std::abs(dx) < 1e-15) break;
        }
        {
            double p0 = 1.0;
            p1 = x;
            for (int k = 2; k <= n; ++k) {
                const double pk = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
                p0 = p1;
                p1 = pk;
            }
            dp = n * (x * p1 - p0) / (x * x - 1.0);
        }
        const double w = 2.0 / ((1.0 - x * x) * dp * dp);
        rule.nodes[static_cast<std::size_t>(i)] = -x;
        rule.weights[static_cast<std::size_t>(i)] = w;
        rule.nodes[static_cast<std::size_t>(n - 1 - i)] = x;
        rule.weights[static_cast<std::size_t>(n - 1 - i)] = w;
    }
    return cache.emplace(n, std::move(rule)).first->second;
}

QuadratureSpec sized_for_degrees(const QuadratureSpec& base, int trig_degree, int rho_degree) {
    QuadratureSpec s = base;
    int na = std::max(32, trig_degree + 2);
    if (na % 2 != 0) ++na;
    s.angular_nodes = na;
    // GL with n nodes is exact through degree 2n - 1; +1 accounts for the rho Jacobian.
    s.radial_nodes = std::max(8, (rho_degree + 1) / 2 + 2);
    s.radial_panels = 1;
    s.max_refinements = 0;
    return s;
}

namespace {

std::string format_pair(Complex last, Complex prev) {
    std::ostringstream os;
    os.precision(16);
    os << "last = (" << last.real() << ", " << last.imag() << "), previous = (" << prev.real()
       << ", " << prev.imag() << ")";
    return os.str();
}

// Error of the newest iterate from the refinement differences. Once two
// differences exist the observed contraction ratio q bounds the remaining
// tail by diff * q / (1 - q); geometric for fixed-order kinks (q = 1/8 for
// the h^3 rate of |.|-type integrands) and negligible for spectral data.
double refinement_error(double diff, double prev_diff) {
    if (!(prev_diff > 0.0)) return diff;
    const double q = std::min(diff / prev_diff, 0.8);
    return diff * q / (1.0 - q);
}

}  // namespace

IntegralResult circle_integral(const std::function<Complex(double)>& integrand, Complex center,
                               double radius, const QuadratureSpec& spec) {
    spec.validate();
    if (!(radius > 0.0)) throw DomainError("circle_integral: radius must be positive");
    if (std::abs(center) + radius > 1.0 + 1e-9) {
        throw DomainError("circle_integral: circle leaves the closed unit disk");
    }

    Complex prev(0.0, 0.0), prev2(0.0, 0.0);
    double prev_diff = 0.0;
    bool have_prev = false;
    for (int ref = 0; ref <= spec.max_refinements; ++ref) {
        const int n = spec.angular_nodes << ref;
        std::vector<Complex> vals(static_cast<std::size_t>(n));
        parallel_for(
            vals.size(),
            [&](std::size_t j) { vals[j] = integrand(kTwoPi * static_cast<double>(j) / n); },
            spec.parallel);
        Complex sum(0.0, 0.0);
        double l1 = 0.0;
        for (const Complex& v : vals) {  // fixed-order reduction
            sum += v;
            l1 += std::abs(v);
        }
        const Complex value = sum * (kTwoPi / n);
        l1 *= kTwoPi / n;
        if (spec.max_refinements == 0) return {value, 0.0, 0};
        if (have_prev) {
            const double diff = std::abs(value - prev);
            const double err = refinement_error(diff, prev_diff);
            if (err <= spec.rel_tol * std::abs(value) + 1e-14 * (l1 + 1.0)) {
                return {value, err, ref};
            }
            prev_diff = diff;
        }
        prev2 = prev;
        prev = value;
        have_prev = true;
    }
    const double achieved = std::abs(prev - prev2) / std::max(std::abs(prev), 1e-300);
    throw NumericalError("circle_integral: no convergence after " +
                             std::to_string(spec.max_refinements) + " refinements; " +
                             format_pair(prev, prev2),
                         achieved, spec.rel_tol);
}

IntegralResult disk_integral(const std::function<Complex(Complex)>& integrand,
                             const DiskWindow& window, const QuadratureSpec& spec) {
    spec.validate();
    const double R = window.radius;
    const Complex c = window.center.value;

    // Base radial panels, graded geometrically toward rho = 0 when requested.
    std::vector<double> base_edges;
    base_edges.push_back(0.0);
    for (int k = spec.radial_panels - 1; k >= 0; --k) base_edges.push_back(std::ldexp(R, -k));

    Complex prev(0.0, 0.0), prev2(0.0, 0.0);
    double prev_diff = 0.0;
    bool have_prev = false;
    for (int ref = 0; ref <= spec.max_refinements; ++ref) {
        const int n_ang = spec.angular_nodes << ref;
        const int split = 1 << ref;

        struct RadialNode {
            double rho, weight;  // weight includes the rho Jacobian and panel scaling
        };
        std::vector<RadialNode> radial;
        const GaussRule& gl = gauss_legendre(spec.radial_nodes);
        for (std::size_t p = 0; p + 1 < base_edges.size(); ++p) {
            const double pa = base_edges[p];
            const double pb = base_edges[p + 1];
            for (int s = 0; s < split; ++s) {
                const double a = pa + (pb - pa) * s / split;
                const double b = pa + (pb - pa) * (s + 1) / split;
                const double mid = 0.5 * (a + b);
                const double half = 0.5 * (b - a);
                for (int i = 0; i < spec.radial_nodes; ++i) {
                    const double rho = mid + half * gl.nodes[static_cast<std::size_t>(i)];
                    radial.push_back({rho, half * gl.weights[static_cast<std::size_t>(i)] * rho});
                }
            }
        }

        std::vector<Complex> vals(radial.size() * static_cast<std::size_t>(n_ang));
        parallel_for(
            vals.size(),
            [&](std::size_t idx) {
                const std::size_t ir = idx / static_cast<std::size_t>(n_ang);
                const std::size_t j = idx % static_cast<std::size_t>(n_ang);
                const double theta = kTwoPi * static_cast<double>(j) / n_ang;
                const Complex z =
                    c + radial[ir].rho * Complex(std::cos(theta), std::sin(theta));
                vals[idx] = integrand(z);
            },
            spec.parallel);

        Complex sum(0.0, 0.0);
        double l1 = 0.0;
        for (std::size_t idx = 0; idx < vals.size(); ++idx) {  // fixed-order reduction
            const double w = radial[idx / static_cast<std::size_t>(n_ang)].weight;
            sum += vals[idx] * w;
            l1 += std::abs(vals[idx]) * w;
        }
        Complex value = sum * (kTwoPi / n_ang);
        l1 *= kTwoPi / n_ang;
        if (spec.measure == Measure::NormalizedArea) {
            value /= std::numbers::pi;
            l1 /= std::numbers::pi;
        }

        if (spec.max_refinements == 0) return {value, 0.0, 0};
        if (have_prev) {
            const double diff = std::abs(value - prev);
            const double err = refinement_error(diff, prev_diff);
            if (err <= spec.rel_tol * std::abs(value) + 1e-14 * (l1 + 1.0)) {
                return {value, err, ref};
            }
            prev_diff = diff;
        }
        prev2 = prev;
        prev = value;
        have_prev = true;
    }
    throw NumericalError("disk_integral: no convergence after " +
                             std::to_string(spec.max_refinements) + " refinements; " +
                             format_pair(prev, prev2),
                         std::abs(prev - prev2) / std::max(std::abs(prev), 1e-300), spec.rel_tol);
}

double finite_difference(const std::function<double(double)>& fn, double r, double h) {
    if (!(h > 0.0)) throw DomainError("finite_difference: step must be positive");
    auto central = [&](double step) { return (fn(r + step) - fn(r - step)) / (2.0 * step); };
    const double d1 = central(h);
    const double d2 = central(0.5 * h);
    return (4.0 * d2 - d1) / 3.0;
}

}  // namespace hmtk
