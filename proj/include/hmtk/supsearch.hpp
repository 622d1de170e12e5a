#pragma once

#include <complex>
#include <functional>
#include <vector>

#include "hmtk/errors.hpp"

namespace hmtk {

struct SupSearchSpec {
    int radial_cells = 64;    // coarse polar grid radii (center and rim included)
    int angular_cells = 128;  // coarse polar grid angles
    int refine_iters = 40;    // pattern-search iterations per seed
    double shrink = 0.5;      // stencil contraction after a failed sweep
    double abs_tol = 1e-9;    // stop once the stencil is this small
    int seeds = 8;            // refine from this many best grid cells
    bool parallel = true;
    void validate() const;
};

struct SupResult {
    double value;
    std::complex<double> argmax;
    double coarse_value;  // best over the coarse grid alone; value >= coarse_value always
};

/// Deterministic maximum of a continuous field over |z| <= 1 - domain_shrink.
/// Coarse polar scan, then a shrinking compass stencil from the best cells.
/// The result is schedule-independent: grid values are gathered into an array
/// and reduced serially. NaN anywhere raises DataError naming the location.
SupResult sup_over_disk(const std::function<double(std::complex<double>)>& field,
                        const SupSearchSpec& spec, double domain_shrink = 0.0);

/// The coarse point set used by sup_over_disk (also used by the benchmark).
std::vector<std::complex<double>> polar_grid(int radial, int angular, double rmax);

/// Evaluate a field at every point. Data-parallel kernel; parallel = false is
/// the serial reference, bitwise identical to the parallel result.
std::vector<double> eval_field(const std::function<double(std::complex<double>)>& field,
                               const std::vector<std::complex<double>>& points, bool parallel);

}  // namespace hmtk
