#pragma once

#include <complex>
#include <vector>

#include "hmtk/errors.hpp"

namespace hmtk {

using Complex = std::complex<double>;

struct QuadratureSpec;  // quadrature.hpp

double boundary_distance(Complex z);  // d(z) = 1 - |z|

/// A point strictly inside the unit disk.
struct PointInDisk {
    Complex value{0.0, 0.0};
    PointInDisk() = default;
    explicit PointInDisk(Complex z);
};

/// Sub-disk D(center, radius) with 0 < radius <= 1 - |center|, so the window
/// never leaves the unit disk.
struct DiskWindow {
    PointInDisk center;
    double radius;
    DiskWindow(PointInDisk c, double r);
    double area() const;
};

/// Affine self-chart phi_a(z) = a + (1 - |a|) z. Maps the unit disk onto
/// D(a, 1 - |a|), fixes phi_a(0) = a, and has constant |phi_a'| = 1 - |a|.
struct AffineChart {
    PointInDisk a;
    explicit AffineChart(PointInDisk center) : a(center) {}
    double scale() const { return 1.0 - std::abs(a.value); }
    Complex operator()(Complex z) const { return a.value + scale() * z; }
};

/// Wirtinger data of a harmonic map at one point.
struct DerivativeBundle {
    Complex f_z;        // h'(z)
    Complex f_zbar;     // conj(g'(z))
    double lambda_max;  // |f_z| + |f_zbar|
    double lambda_min;  // | |f_z| - |f_zbar| |
    double grad_norm;   // (|f_z|^2 + |f_zbar|^2)^(1/2)
    double jacobian;    // |f_z|^2 - |f_zbar|^2
};

/// Gradients of the real and imaginary parts u = Re f, v = Im f.
struct RealGradients {
    double ux, uy, vx, vy;
    double grad_u() const { return std::hypot(ux, uy); }
    double grad_v() const { return std::hypot(vx, vy); }
};

/// f(z) = sum_k a_k z^k + conj(sum_k b_k z^k). Harmonic on all of C, hence
/// smooth on the closed unit disk. Coefficients must be finite; trailing
/// zeros are stripped on construction so the degree is well defined.
class HarmonicPolynomial {
public:
    HarmonicPolynomial() = default;  // the zero map
    explicit HarmonicPolynomial(std::vector<Complex> h, std::vector<Complex> g = {});

    static HarmonicPolynomial identity();                // f(z) = z
    static HarmonicPolynomial c_z_plus_zbar(Complex c);  // f(z) = C (z + conj z)

    const std::vector<Complex>& h_coeffs() const { return h_; }
    const std::vector<Complex>& g_coeffs() const { return g_; }
    int h_degree() const { return static_cast<int>(h_.size()) - 1; }  // -1: part absent
    int g_degree() const { return static_cast<int>(g_.size()) - 1; }
    int degree() const;
    bool is_constant() const;
    /// Co-analytic part at most constant (a constant conj(b0) is still holomorphic).
    bool is_holomorphic() const { return g_.size() <= 1; }

    Complex h_value(Complex z) const;
    Complex g_value(Complex z) const;
    Complex h_prime(Complex z) const;
    Complex g_prime(Complex z) const;

    /// Raw evaluation without a domain check (see hmtk::evaluate).
    Complex operator()(Complex z) const { return h_value(z) + std::conj(g_value(z)); }

private:
    std::vector<Complex> h_, g_;
};

/// f(z) on the closed disk; |z| > 1 raises DomainError.
Complex evaluate(const HarmonicPolynomial& f, Complex z);

/// Wirtinger derivatives and dilations at an interior point. Polynomials are
/// smooth on the closed disk, so allow_boundary = true opts in to |z| = 1
/// (closed-disk scans); by default the boundary is rejected.
DerivativeBundle derivatives(const HarmonicPolynomial& f, Complex z, bool allow_boundary = false);

RealGradients real_gradients(const HarmonicPolynomial& f, Complex z, bool allow_boundary = false);

/// Poincare distance arctanh|(z - w)/(1 - conj(z) w)|. Boundary input raises
/// DomainError (the distance diverges there).
double hyperbolic_distance(Complex z, Complex w);

/// f composed with the chart, as a harmonic polynomial of the same degree.
HarmonicPolynomial chart_compose(const HarmonicPolynomial& f, const AffineChart& chart);

/// Average of f over the window w.r.t. area. Equals f(center) for harmonic f
/// (mean value property); computed by quadrature sized to the degree.
Complex area_mean(const HarmonicPolynomial& f, const DiskWindow& window, const QuadratureSpec& quad);

}  // namespace hmtk
