#include "hmtk/majorant.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <sstream>

#include "hmtk/parallel.hpp"
#include "hmtk/rng.hpp"

namespace hmtk {

namespace {
constexpr double kTwoPi = 2.0 * std::numbers::pi;
}

// ---------------------------------------------------------------------------
// Majorant families
// ---------------------------------------------------------------------------

Majorant Majorant::power(double alpha, double c) {
    if (!(alpha > 0.0) || !(c > 0.0) || !std::isfinite(alpha) || !std::isfinite(c)) {
        throw DomainError("majorant: power family needs alpha > 0 and c > 0");
    }
    Majorant w;
    w.family_ = MajorantFamily::Power;
    w.alpha_ = alpha;
    w.c_ = c;
    return w;
}

Majorant Majorant::power_log(double alpha, double beta, double c) {
    if (!(alpha > 0.0) || !(beta > 0.0) || !(c > 0.0)) {
        throw DomainError("majorant: power_log family needs alpha, beta, c > 0");
    }
    Majorant w;
    w.family_ = MajorantFamily::PowerLog;
    w.alpha_ = alpha;
    w.beta_ = beta;
    w.c_ = c;
    return w;
}

Majorant Majorant::tabulated(std::vector<std::pair<double, double>> points) {
    if (points.size() < 2) throw DomainError("majorant: table needs at least two points");
    for (std::size_t i = 0; i < points.size(); ++i) {
        if (!(points[i].first > 0.0) || !(points[i].second > 0.0)) {
            throw DomainError("majorant: table entries must be positive");
        }
        if (i > 0 && !(points[i].first > points[i - 1].first)) {
            throw DomainError("majorant: table abscissae must be strictly increasing");
        }
        if (i > 0 && points[i].second < points[i - 1].second) {
            throw DomainError("majorant: table values must be non-decreasing");
        }
    }
    Majorant w;
    w.family_ = MajorantFamily::Tabulated;
    w.table_ = std::move(points);
    return w;
}

double Majorant::operator()(double t) const {
    if (!(t >= 0.0)) throw DomainError("majorant: negative argument");
    if (t == 0.0) return 0.0;
    switch (family_) {
        case MajorantFamily::Power:
            return c_ * std::pow(t, alpha_);
        case MajorantFamily::PowerLog:
            return c_ * std::pow(t, alpha_) * std::pow(1.0 + std::log1p(1.0 / t), beta_);
        case MajorantFamily::Tabulated: {
            // log-log linear between samples; power continuation past the ends
            const auto seg_value = [&](std::size_t i, double tt) {
                const double t0 = table_[i].first, t1 = table_[i + 1].first;
                const double w0 = table_[i].second, w1 = table_[i + 1].second;
                const double slope = std::log(w1 / w0) / std::log(t1 / t0);
                return w0 * std::pow(tt / t0, slope);
            };
            if (t <= table_.front().first) return seg_value(0, t);
            if (t >= table_.back().first) return seg_value(table_.size() - 2, t);
            auto it = std::upper_bound(table_.begin(), table_.end(), t,
                                       [](double v, const auto& p) { return v < p.first; });
            const std::size_t i = static_cast<std::size_t>(it - table_.begin()) - 1;
            return seg_value(std::min(i, table_.size() - 2), t);
        }
    }
    throw DomainError("majorant: unknown family");
}

Majorant Majorant::squared() const {
    switch (family_) {
        case MajorantFamily::Power:
            return power(2.0 * alpha_, c_ * c_);
        case MajorantFamily::PowerLog:
            return power_log(2.0 * alpha_, 2.0 * beta_, c_ * c_);
        case MajorantFamily::Tabulated: {
            auto pts = table_;
            for (auto& p : pts) p.second *= p.second;
            return tabulated(std::move(pts));
        }
    }
    throw DomainError("majorant: unknown family");
}

std::string Majorant::describe() const {
    std::ostringstream os;
    os.precision(12);
    switch (family_) {
        case MajorantFamily::Power:
            os << "power(alpha=" << alpha_ << ", c=" << c_ << ")";
            break;
        case MajorantFamily::PowerLog:
            os << "power_log(alpha=" << alpha_ << ", beta=" << beta_ << ", c=" << c_ << ")";
            break;
        case MajorantFamily::Tabulated:
            os << "tabulated(" << table_.size() << " points)";
            break;
    }
    return os.str();
}

// ---------------------------------------------------------------------------
// Defining property on a grid
// ---------------------------------------------------------------------------

std::vector<double> default_majorant_grid() {
    std::vector<double> g(64);
    for (std::size_t i = 0; i < g.size(); ++i) {
        const double u = static_cast<double>(i) / (g.size() - 1);
        g[i] = 1e-6 * std::pow(1e7, u);  // [1e-6, 10] log-spaced
    }
    return g;
}

MajorantValidity is_valid_majorant(const Majorant& w, const std::vector<double>& grid) {
    if (grid.size() < 16) throw DomainError("majorant grid: need at least 16 points");
    if (!(grid.front() <= 1e-6 * (1.0 + 1e-9)) || !(grid.back() >= 10.0 * (1.0 - 1e-9))) {
        throw DomainError("majorant grid: must span [1e-6, 10]");
    }
    for (std::size_t i = 0; i + 1 < grid.size(); ++i) {
        if (!(grid[i] > 0.0) || !(grid[i] < grid[i + 1])) {
            throw DomainError("majorant grid: must be sorted and positive");
        }
    }

    MajorantValidity out{true, 0.0, grid.front(), ""};
    double prev_w = w(grid.front());
    double prev_q = prev_w / grid.front();
    for (std::size_t i = 1; i < grid.size(); ++i) {
        const double wi = w(grid[i]);
        const double qi = wi / grid[i];
        const double slack = 1e-12 * std::max(1.0, std::abs(prev_w));
        if (wi < prev_w - slack) {
            const double defect = prev_w - wi;
            if (defect > out.worst_violation) {
                out = {false, defect, grid[i], "omega not increasing"};
            } else {
                out.valid = false;
                if (out.reason.empty()) out.reason = "omega not increasing";
            }
        }
        const double slack_q = 1e-12 * std::max(1.0, std::abs(prev_q));
        if (qi > prev_q + slack_q) {
            const double defect = qi - prev_q;
            if (defect > out.worst_violation) {
                out = {false, defect, grid[i], "omega(t)/t not non-increasing"};
            } else {
                out.valid = false;
                if (out.reason.empty()) out.reason = "omega(t)/t not non-increasing";
            }
        }
        prev_w = wi;
        prev_q = qi;
    }
    return out;
}

// ---------------------------------------------------------------------------
// Regularity conditions: octave panels + Gauss-Legendre, extrapolated tails
// ---------------------------------------------------------------------------

namespace {

double gl_panel(const std::function<double(double)>& g, double a, double b, int n) {
    const GaussRule& rule = gauss_legendre(n);
    const double mid = 0.5 * (a + b), half = 0.5 * (b - a);
    double s = 0.0;
    for (int i = 0; i < n; ++i) {
        s += rule.weights[static_cast<std::size_t>(i)] *
             g(mid + half * rule.nodes[static_cast<std::size_t>(i)]);
    }
    return s * half;
}

// Octave ratios at or above this are treated as non-decaying (divergent sum).
// Pure powers t^alpha give ratios 2^(-alpha) below it for alpha >= ~1.5e-4.
constexpr double kFlatRatio = 0.9999;

}  // namespace

ConditionRatio regularity_condition_I(const Majorant& w, double delta,
                                      const QuadratureSpec& quad) {
    if (!(delta > 0.0)) throw DomainError("condition I: delta must be positive");
    const int n = std::max(8, quad.radial_nodes);
    auto g = [&](double t) { return w(t) / t; };

    double total = 0.0, prev_c = -1.0, last_c = 0.0;
    bool divergent = false, settled = false;
    double hi = delta;
    const int octaves = 440;  // reaches t ~ delta * 1e-132
    for (int k = 0; k < octaves; ++k) {
        const double lo = 0.5 * hi;
        last_c = gl_panel(g, lo, hi, n);
        total += last_c;
        if (last_c <= 1e-17 * std::max(total, 1e-300)) {
            settled = true;
            break;
        }
        if (prev_c > 0.0 && k >= 12 && last_c / prev_c >= kFlatRatio) {
            divergent = true;
            break;
        }
        prev_c = last_c;
        hi = lo;
    }

    double tail = 0.0;
    if (!divergent && !settled) {
        const double q = (prev_c > 0.0) ? last_c / prev_c : 0.0;
        if (q < kFlatRatio) {
            tail = last_c * q / (1.0 - q);
            total += tail;
        } else {
            divergent = true;
        }
    }
    const double denom = w(delta);
    return {divergent ? std::numeric_limits<double>::infinity() : total / denom, divergent,
            tail / denom};
}

ConditionRatio regularity_condition_II(const Majorant& w, double delta,
                                       const QuadratureSpec& quad) {
    if (!(delta > 0.0)) throw DomainError("condition II: delta must be positive");
    const int n = std::max(8, quad.radial_nodes);
    const double t_max = 1e6;
    auto g = [&](double t) { return w(t) / (t * t); };

    double total = 0.0, prev_c = -1.0;
    bool divergent = false;
    double lo = delta;
    while (lo < t_max) {
        const double hi = std::min(2.0 * lo, t_max);
        const double c = gl_panel(g, lo, hi, n);
        total += c;
        if (prev_c > 0.0 && hi >= 4.0 * delta && c / prev_c >= kFlatRatio && lo >= 64.0) {
            divergent = true;
            break;
        }
        prev_c = c;
        lo = hi;
    }

    double tail = 0.0;
    if (!divergent) {
        // continue omega past t_max with its local power slope
        const double p = std::log2(w(2.0 * t_max) / w(t_max));
        if (p >= 0.999) {
            divergent = true;
        } else {
            tail = w(t_max) / (t_max * (1.0 - p));
            total += tail;
        }
    }
    const double denom = w(delta);
    return {divergent ? std::numeric_limits<double>::infinity() : delta * total / denom,
            divergent, delta * tail / denom};
}

RegularityReport is_regular(const Majorant& w, double delta0, const QuadratureSpec& quad) {
    if (!(delta0 > 0.0)) throw DomainError("is_regular: delta0 must be positive");
    RegularityReport rep{true, 0.0, 0.0, false, false};
    const int n_delta = 16;
    for (int i = 0; i < n_delta; ++i) {
        const double u = static_cast<double>(i) / (n_delta - 1);
        const double delta = delta0 * std::pow(1e-3, 1.0 - u);  // [1e-3 delta0, delta0]
        const ConditionRatio a = regularity_condition_I(w, delta, quad);
        const ConditionRatio b = regularity_condition_II(w, delta, quad);
        rep.condition_I_divergent = rep.condition_I_divergent || a.divergent;
        rep.condition_II_divergent = rep.condition_II_divergent || b.divergent;
        if (!a.divergent) rep.M_I = std::max(rep.M_I, a.ratio);
        if (!b.divergent) rep.M_II = std::max(rep.M_II, b.ratio);
    }
    rep.regular = !rep.condition_I_divergent && !rep.condition_II_divergent &&
                  std::isfinite(rep.M_I) && std::isfinite(rep.M_II);
    return rep;
}

// ---------------------------------------------------------------------------
// Sampled Lipschitz constants
// ---------------------------------------------------------------------------

LipschitzFit lipschitz_fit(const std::function<std::complex<double>(std::complex<double>)>& field,
                           const Majorant& w, const PairSampler& s) {
    if (s.pairs <= 0) return {0.0, {0.0, 0.0}, {0.0, 0.0}, 0};
    if (!(s.min_separation > 0.0 && s.min_separation < 1.0)) {
        throw DomainError("lipschitz_fit: min_separation outside (0, 1)");
    }
    const std::size_t n = static_cast<std::size_t>(s.pairs);
    const double r_int = 1.0 - 1e-9;  // interior endpoints stay inside the open disk
    const int boundary_every =
        s.boundary_fraction > 0.0
            ? std::max(1, static_cast<int>(std::llround(1.0 / s.boundary_fraction)))
            : 0;

    std::vector<double> ratio(n);
    std::vector<std::complex<double>> zs(n), ws(n);
    parallel_for(n, [&](std::size_t k) {
        const std::complex<double> z = rng_in_disk(s.seed, 11, k, r_int);
        std::complex<double> w_pt;
        if (boundary_every != 0 && k % static_cast<std::size_t>(boundary_every) == 0) {
            const double phi = kTwoPi * rng_u01(s.seed, 13, k);
            w_pt = {std::cos(phi), std::sin(phi)};  // rim endpoint
        } else {
            // separation stratified log-uniformly in [min_separation, 2]
            const double u = rng_u01(s.seed, 17, k);
            const double sep = s.min_separation * std::pow(2.0 / s.min_separation, u);
            const double phi = kTwoPi * rng_u01(s.seed, 19, k);
            const std::complex<double> step(sep * std::cos(phi), sep * std::sin(phi));
            w_pt = z + step;
            if (std::abs(w_pt) > r_int) w_pt = z - step;
            if (std::abs(w_pt) > r_int) w_pt *= r_int / std::abs(w_pt);
        }
        const double d = std::abs(z - w_pt);
        ratio[k] = d < 1e-12 ? 0.0 : std::abs(field(z) - field(w_pt)) / w(d);
        zs[k] = z;
        ws[k] = w_pt;
    });

    LipschitzFit fit{0.0, {0.0, 0.0}, {0.0, 0.0}, s.pairs};
    for (std::size_t k = 0; k < n; ++k) {  // fixed-order reduction
        if (ratio[k] > fit.constant) {
            fit.constant = ratio[k];
            fit.worst_z = zs[k];
            fit.worst_w = ws[k];
        }
    }
    return fit;
}

}  // namespace hmtk
