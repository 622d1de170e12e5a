// Test-side oracles, independent of the library's quadrature and search paths.
#pragma once

#include <cmath>
#include <complex>
#include <functional>
#include <vector>

#include "hmtk/harmonic.hpp"

namespace oracles {

using hmtk::Complex;

// Midpoint Cartesian sum of F over the window, area measure. Slow and crude
// (boundary cells are O(1/n)); good to ~1e-3 relative at n = 600.
inline Complex brute_disk_integral(const std::function<Complex(Complex)>& fn,
                                   Complex center, double radius, int n = 600) {
    const double hstep = 2.0 * radius / n;
    Complex sum(0.0, 0.0);
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
            const Complex z(center.real() - radius + (i + 0.5) * hstep,
                            center.imag() - radius + (j + 0.5) * hstep);
            if (std::abs(z - center) <= radius) sum += fn(z);
        }
    }
    return sum * (hstep * hstep);
}

// Dense 1-D maximizer on [0, hi] with golden-section polish.
inline double maximize_1d(const std::function<double(double)>& fn, double hi,
                          int coarse = 4000) {
    double best = fn(0.0), best_x = 0.0;
    for (int i = 1; i <= coarse; ++i) {
        const double x = hi * i / coarse;
        const double v = fn(x);
        if (v > best) {
            best = v;
            best_x = x;
        }
    }
    double a = std::max(0.0, best_x - hi / coarse), b = std::min(hi, best_x + hi / coarse);
    const double phi = 0.5 * (std::sqrt(5.0) - 1.0);
    double x1 = b - phi * (b - a), x2 = a + phi * (b - a);
    double f1 = fn(x1), f2 = fn(x2);
    for (int it = 0; it < 200; ++it) {
        if (f1 < f2) {
            a = x1;
            x1 = x2;
            f1 = f2;
            x2 = a + phi * (b - a);
            f2 = fn(x2);
        } else {
            b = x2;
            x2 = x1;
            f2 = f1;
            x1 = b - phi * (b - a);
            f1 = fn(x1);
        }
    }
    return std::max({best, f1, f2});
}

// (1/pi) int_D |F - F(0)|^2 dA from coefficients alone: the monomials z^k and
// conj(z)^k are orthogonal over the disk with (1/pi) int |z^k|^2 = 1/(k+1),
// and the analytic product (H - a0)(G - b0) has disk mean zero.
inline double chart_osc2_coeff(const hmtk::HarmonicPolynomial& composed) {
    double s = 0.0;
    const auto& h = composed.h_coeffs();
    const auto& g = composed.g_coeffs();
    for (std::size_t k = 1; k < h.size(); ++k) s += std::norm(h[k]) / (k + 1.0);
    for (std::size_t k = 1; k < g.size(); ++k) s += std::norm(g[k]) / (k + 1.0);
    return s;
}

// Harmonic extension of |f|^2 boundary data for analytic f = sum a_k z^k:
// |f(e^{i t})|^2 = sum_m c_m e^{i m t} with c_m = sum_j a_j conj(a_{j-m}),
// and e^{i m t} extends to z^m (m >= 0), so P(z) = c_0 + 2 Re sum_{m>=1} c_m z^m.
inline double poisson_extension_coeff(const std::vector<Complex>& a, Complex z) {
    double out = 0.0;
    for (std::size_t m = 0; m < a.size(); ++m) {
        Complex c(0.0, 0.0);
        for (std::size_t j = m; j < a.size(); ++j) c += a[j] * std::conj(a[j - m]);
        if (m == 0) {
            out += c.real();
        } else {
            out += 2.0 * (c * std::pow(z, static_cast<double>(m))).real();
        }
    }
    return out;
}

}  // namespace oracles
