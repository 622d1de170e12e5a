#pragma once

#include <complex>
#include <functional>
#include <vector>

#include "hmtk/harmonic.hpp"

namespace hmtk {

enum class Measure { Area, NormalizedArea };  // dA versus dA / pi

struct QuadratureSpec {
    int angular_nodes = 256;  // trapezoid points per circle; even, >= 16
    int radial_nodes = 32;    // Gauss-Legendre points per radial panel
    int radial_panels = 1;    // > 1: panels graded geometrically toward the center
    int max_refinements = 6;  // 0 = single trusted pass (exact for sized polynomial data)
    double rel_tol = 1e-8;
    Measure measure = Measure::Area;
    bool parallel = true;
    void validate() const;
};

struct IntegralResult {
    Complex value;
    double error_estimate;  // difference of the last two refinement levels
    int refinements;
};

/// Integral over theta in [0, 2pi) of integrand(theta) on the circle
/// |z - center| = radius (the circle must stay in the closed unit disk).
/// Trapezoid with doubling refinement: spectral for smooth periodic data.
IntegralResult circle_integral(const std::function<Complex(double)>& integrand, Complex center,
                               double radius, const QuadratureSpec& spec);

/// Integral of integrand over the window in the spec's measure. Polar product
/// rule: Gauss-Legendre panels in the radius times an angular trapezoid.
/// radial_panels > 1 grades the panels geometrically toward the center, which
/// absorbs the integrable log singularity of the Green identity.
IntegralResult disk_integral(const std::function<Complex(Complex)>& integrand,
                             const DiskWindow& window, const QuadratureSpec& spec);

/// d/dr at r by central differences with one Richardson level, error O(h^4).
double finite_difference(const std::function<double(double)>& fn, double r, double h);

/// Gauss-Legendre rule on [-1, 1], cached per order.
struct GaussRule {
    std::vector<double> nodes, weights;
};
const GaussRule& gauss_legendre(int n);

/// Single-pass spec whose node counts integrate an integrand of the given
/// trigonometric degree (in theta) and polynomial degree (in rho, before the
/// rho Jacobian) exactly. Used for |polynomial|^p with even p, where the
/// quadrature error is identically zero and no refinement is needed.
QuadratureSpec sized_for_degrees(const QuadratureSpec& base, int trig_degree, int rho_degree);

}  // namespace hmtk
