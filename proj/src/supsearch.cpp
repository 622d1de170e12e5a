#include "hmtk/supsearch.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <numeric>
#include <sstream>

#include "hmtk/parallel.hpp"

namespace hmtk {

namespace {

using Cx = std::complex<double>;
constexpr double kTwoPi = 2.0 * std::numbers::pi;

[[noreturn]] void nan_error(Cx z) {
    std::ostringstream os;
    os.precision(16);
    os << "sup_over_disk: field returned NaN at z = (" << z.real() << ", " << z.imag() << ")";
    throw DataError(os.str());
}

}  // namespace

void SupSearchSpec::validate() const {
    if (radial_cells < 2 || angular_cells < 4) {
        throw DomainError("sup search: grid must be at least 2 x 4");
    }
    if (refine_iters < 0) throw DomainError("sup search: refine_iters must be >= 0");
    if (!(shrink > 0.0 && shrink < 1.0)) throw DomainError("sup search: shrink outside (0, 1)");
    if (!(abs_tol > 0.0)) throw DomainError("sup search: abs_tol must be positive");
    if (seeds < 1) throw DomainError("sup search: need at least one seed");
}

std::vector<Cx> polar_grid(int radial, int angular, double rmax) {
    std::vector<Cx> pts;
    pts.reserve(1 + static_cast<std::size_t>(radial - 1) * static_cast<std::size_t>(angular));
    pts.emplace_back(0.0, 0.0);
    for (int i = 1; i < radial; ++i) {
        const double rho = rmax * static_cast<double>(i) / (radial - 1);
        for (int j = 0; j < angular; ++j) {
            const double theta = kTwoPi * static_cast<double>(j) / angular;
            pts.emplace_back(rho * std::cos(theta), rho * std::sin(theta));
        }
    }
    return pts;
}

std::vector<double> eval_field(const std::function<double(Cx)>& field,
                               const std::vector<Cx>& points, bool parallel) {
    std::vector<double> out(points.size());
    parallel_for(points.size(), [&](std::size_t i) { out[i] = field(points[i]); }, parallel);
    return out;
}

SupResult sup_over_disk(const std::function<double(Cx)>& field, const SupSearchSpec& spec,
                        double domain_shrink) {
    spec.validate();
    if (!(domain_shrink >= 0.0 && domain_shrink < 1.0)) {
        throw DomainError("sup search: domain_shrink outside [0, 1)");
    }
    const double rmax = 1.0 - domain_shrink;

    const std::vector<Cx> pts = polar_grid(spec.radial_cells, spec.angular_cells, rmax);
    const std::vector<double> vals = eval_field(field, pts, spec.parallel);
    for (std::size_t i = 0; i < vals.size(); ++i) {
        if (std::isnan(vals[i])) nan_error(pts[i]);
    }

    // Seed order: by value descending, index ascending on ties. Deterministic.
    std::vector<std::size_t> order(vals.size());
    std::iota(order.begin(), order.end(), std::size_t{0});
    const std::size_t n_seeds = std::min<std::size_t>(spec.seeds, order.size());
    std::partial_sort(order.begin(), order.begin() + static_cast<std::ptrdiff_t>(n_seeds),
                      order.end(), [&](std::size_t a, std::size_t b) {
                          if (vals[a] != vals[b]) return vals[a] > vals[b];
                          return a < b;
                      });

    const double coarse = vals[order[0]];
    double best = coarse;
    Cx best_at = pts[order[0]];

    const double h0 = 0.5 * rmax * std::max(1.0 / (spec.radial_cells - 1),
                                            kTwoPi / spec.angular_cells);
    for (std::size_t s = 0; s < n_seeds; ++s) {
        Cx x = pts[order[s]];
        double v = vals[order[s]];
        double h = h0;
        for (int it = 0; it < spec.refine_iters; ++it) {
            const Cx dirs[4] = {Cx(h, 0.0), Cx(-h, 0.0), Cx(0.0, h), Cx(0.0, -h)};
            bool improved = false;
            Cx cand_best = x;
            double cand_val = v;
            for (const Cx& d : dirs) {
                Cx cand = x + d;
                const double az = std::abs(cand);
                if (az > rmax) cand *= rmax / az;  // project back onto the search domain
                const double cv = field(cand);
                if (std::isnan(cv)) nan_error(cand);
                if (cv > cand_val) {
                    cand_val = cv;
                    cand_best = cand;
                    improved = true;
                }
            }
            if (improved) {
                x = cand_best;
                v = cand_val;
            } else {
                h *= spec.shrink;
                if (h < spec.abs_tol) break;
            }
        }
        if (v > best) {
            best = v;
            best_at = x;
        }
    }

    return {best, best_at, coarse};
}

}  // namespace hmtk
