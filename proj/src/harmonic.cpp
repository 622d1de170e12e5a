#include "hmtk/harmonic.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "hmtk/quadrature.hpp"

namespace hmtk {

namespace {

bool finite(Complex c) { return std::isfinite(c.real()) && std::isfinite(c.imag()); }

std::vector<Complex> canonicalize(std::vector<Complex> v, const char* part) {
    for (Complex c : v) {
        if (!finite(c)) {
            throw DomainError(std::string("harmonic polynomial: non-finite ") + part +
                              " coefficient");
        }
    }
    while (!v.empty() && v.back() == Complex(0.0, 0.0)) v.pop_back();
    return v;
}

Complex horner(const std::vector<Complex>& c, Complex z) {
    Complex acc(0.0, 0.0);
    for (auto it = c.rbegin(); it != c.rend(); ++it) acc = acc * z + *it;
    return acc;
}

Complex horner_derivative(const std::vector<Complex>& c, Complex z) {
    Complex acc(0.0, 0.0);
    for (int k = static_cast<int>(c.size()) - 1; k >= 1; --k) {
        acc = acc * z + static_cast<double>(k) * c[static_cast<std::size_t>(k)];
    }
    return acc;
}

}  // namespace

double boundary_distance(Complex z) { return 1.0 - std::abs(z); }

PointInDisk::PointInDisk(Complex z) : value(z) {
    if (!finite(z)) throw DomainError("point: non-finite coordinates");
    if (std::abs(z) >= 1.0) throw DomainError("point: |z| >= 1 lies outside the open disk");
}

DiskWindow::DiskWindow(PointInDisk c, double r) : center(c), radius(r) {
    if (!(r > 0.0)) throw DomainError("window: radius must be positive");
    if (r > 1.0 - std::abs(c.value) + 1e-12) {
        throw DomainError("window: radius exceeds 1 - |center|");
    }
}

double DiskWindow::area() const { return std::numbers::pi * radius * radius; }

HarmonicPolynomial::HarmonicPolynomial(std::vector<Complex> h, std::vector<Complex> g)
    : h_(canonicalize(std::move(h), "analytic")), g_(canonicalize(std::move(g), "co-analytic")) {}

HarmonicPolynomial HarmonicPolynomial::identity() {
    return HarmonicPolynomial({Complex(0.0, 0.0), Complex(1.0, 0.0)});
}

HarmonicPolynomial HarmonicPolynomial::c_z_plus_zbar(Complex c) {
    // C z + C conj(z) = C z + conj(conj(C) z)
    return HarmonicPolynomial({Complex(0.0, 0.0), c}, {Complex(0.0, 0.0), std::conj(c)});
}

int HarmonicPolynomial::degree() const { return std::max(h_degree(), g_degree()); }

bool HarmonicPolynomial::is_constant() const { return h_.size() <= 1 && g_.size() <= 1; }

Complex HarmonicPolynomial::h_value(Complex z) const { return horner(h_, z); }
Complex HarmonicPolynomial::g_value(Complex z) const { return horner(g_, z); }
Complex HarmonicPolynomial::h_prime(Complex z) const { return horner_derivative(h_, z); }
Complex HarmonicPolynomial::g_prime(Complex z) const { return horner_derivative(g_, z); }

Complex evaluate(const HarmonicPolynomial& f, Complex z) {
    if (!finite(z) || std::abs(z) > 1.0 + 1e-12) {
        throw DomainError("evaluate: |z| > 1 is outside the closed disk");
    }
    return f(z);
}

DerivativeBundle derivatives(const HarmonicPolynomial& f, Complex z, bool allow_boundary) {
    const double az = std::abs(z);
    if (!finite(z) || az > 1.0 + 1e-12) {
        throw DomainError("derivatives: |z| > 1 is outside the closed disk");
    }
    if (!allow_boundary && az >= 1.0) {
        throw DomainError("derivatives: |z| = 1 needs allow_boundary (closed-disk scan)");
    }
    DerivativeBundle d;
    d.f_z = f.h_prime(z);
    d.f_zbar = std::conj(f.g_prime(z));
    const double m = std::abs(d.f_z);
    const double n = std::abs(d.f_zbar);
    d.lambda_max = m + n;
    d.lambda_min = std::abs(m - n);
    d.grad_norm = std::hypot(m, n);
    d.jacobian = m * m - n * n;
    return d;
}

RealGradients real_gradients(const HarmonicPolynomial& f, Complex z, bool allow_boundary) {
    const DerivativeBundle d = derivatives(f, z, allow_boundary);
    // f_x = f_z + f_zbar, f_y = i (f_z - f_zbar)
    const Complex fx = d.f_z + d.f_zbar;
    const Complex fy = Complex(0.0, 1.0) * (d.f_z - d.f_zbar);
    return RealGradients{fx.real(), fy.real(), fx.imag(), fy.imag()};
}

double hyperbolic_distance(Complex z, Complex w) {
    if (!finite(z) || !finite(w) || std::abs(z) >= 1.0 || std::abs(w) >= 1.0) {
        throw DomainError("hyperbolic_distance: arguments must lie strictly inside the disk");
    }
    if (z == w) return 0.0;
    double pseudo = std::abs((z - w) / (1.0 - std::conj(z) * w));
    pseudo = std::min(pseudo, 1.0 - 1e-16);
    return std::atanh(pseudo);
}

HarmonicPolynomial chart_compose(const HarmonicPolynomial& f, const AffineChart& chart) {
    const Complex a = chart.a.value;
    const double s = chart.scale();
    // P(a + s z) by Horner in the polynomial ring: acc <- acc * (a + s z) + c_k.
    auto compose = [&](const std::vector<Complex>& c) {
        std::vector<Complex> acc;
        for (int k = static_cast<int>(c.size()) - 1; k >= 0; --k) {
            std::vector<Complex> next(acc.size() + 1, Complex(0.0, 0.0));
            for (std::size_t i = 0; i < acc.size(); ++i) {
                next[i] += acc[i] * a;
                next[i + 1] += acc[i] * s;
            }
            if (next.empty()) next.resize(1, Complex(0.0, 0.0));
            next[0] += c[static_cast<std::size_t>(k)];
            acc = std::move(next);
        }
        return acc;
    };
    return HarmonicPolynomial(compose(f.h_coeffs()), compose(f.g_coeffs()));
}

Complex area_mean(const HarmonicPolynomial& f, const DiskWindow& window,
                  const QuadratureSpec& quad) {
    const int deg = std::max(0, f.degree());
    QuadratureSpec sized = sized_for_degrees(quad, deg, deg + 1);
    sized.measure = Measure::Area;
    const IntegralResult r = disk_integral([&](Complex z) { return f(z); }, window, sized);
    return r.value / window.area();
}

}  // namespace hmtk
