// Compares the OpenMP kernels against the serial reference paths and checks
// that both produce bitwise-identical results (reductions are serial and
// fixed-order by design, so the parallel path only changes evaluation order).

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <vector>

#include "hmtk/norms.hpp"
#include "hmtk/parallel.hpp"
#include "hmtk/supsearch.hpp"
#include "hmtk/verifier.hpp"

namespace {

using hmtk::Complex;

double now_ms() {
    using clock = std::chrono::steady_clock;
    return std::chrono::duration<double, std::milli>(clock::now().time_since_epoch()).count();
}

struct Row {
    const char* name;
    double serial_ms, parallel_ms;
    bool identical;
};

template <class Fn>
double time_ms(Fn&& fn, int reps) {
    const double t0 = now_ms();
    for (int i = 0; i < reps; ++i) fn();
    return (now_ms() - t0) / reps;
}

}  // namespace

int main() {
    const hmtk::HarmonicPolynomial f =
        hmtk::random_polynomial(/*seed=*/7, /*trial=*/0, /*max_degree=*/8, /*coeff_bound=*/1.0,
                                /*require_nonconstant=*/true);
    std::vector<Row> rows;

    {  // grid evaluation of the Bloch field
        const auto pts = hmtk::polar_grid(256, 512, 1.0);
        auto field = [&](Complex z) {
            return (1.0 - std::norm(z)) * hmtk::derivatives(f, z, true).lambda_max;
        };
        std::vector<double> a, b;
        const double ts = time_ms([&] { a = hmtk::eval_field(field, pts, false); }, 3);
        const double tp = time_ms([&] { b = hmtk::eval_field(field, pts, true); }, 3);
        rows.push_back({"bloch field grid 256x512", ts, tp, a == b});
    }

    {  // one large disk integral
        hmtk::QuadratureSpec quad;
        quad.angular_nodes = 1024;
        quad.radial_nodes = 48;
        quad.radial_panels = 8;
        quad.max_refinements = 0;
        const hmtk::DiskWindow window(hmtk::PointInDisk(Complex(0.0, 0.0)), 0.9);
        auto integrand = [&](Complex z) {
            const double m = std::abs(f(z));
            return Complex(m * m * m * m, 0.0);
        };
        Complex a, b;
        quad.parallel = false;
        const double ts = time_ms([&] { a = hmtk::disk_integral(integrand, window, quad).value; }, 3);
        quad.parallel = true;
        const double tp = time_ms([&] { b = hmtk::disk_integral(integrand, window, quad).value; }, 3);
        rows.push_back({"disk integral |f|^4 1024x384", ts, tp, a == b});
    }

    {  // full sup search over the disk
        hmtk::SupSearchSpec spec;
        spec.radial_cells = 96;
        spec.angular_cells = 192;
        auto field = [&](Complex z) {
            return (1.0 - std::norm(z)) * hmtk::derivatives(f, z, true).lambda_max;
        };
        hmtk::SupResult a{}, b{};
        spec.parallel = false;
        const double ts = time_ms([&] { a = hmtk::sup_over_disk(field, spec); }, 3);
        spec.parallel = true;
        const double tp = time_ms([&] { b = hmtk::sup_over_disk(field, spec); }, 3);
        rows.push_back({"sup search 96x192", ts, tp,
                        a.value == b.value && a.argmax == b.argmax});
    }

    {  // chart-mode BMO_2 norm (sup of disk integrals)
        hmtk::SupSearchSpec search;
        search.radial_cells = 24;
        search.angular_cells = 48;
        search.refine_iters = 16;
        hmtk::QuadratureSpec quad;
        double a = 0, b = 0;
        search.parallel = false;
        quad.parallel = false;
        const double ts = time_ms(
            [&] { a = hmtk::bmo_norm(f, 2.0, search, quad).norm; }, 1);
        search.parallel = true;
        quad.parallel = true;
        const double tp = time_ms(
            [&] { b = hmtk::bmo_norm(f, 2.0, search, quad).norm; }, 1);
        rows.push_back({"BMO_2 chart norm 24x48", ts, tp, a == b});
    }

    std::printf("threads: %d\n", hmtk::thread_count());
    std::printf("%-32s %10s %10s %8s %10s\n", "kernel", "serial ms", "omp ms", "speedup",
                "identical");
    bool all_identical = true;
    for (const Row& r : rows) {
        std::printf("%-32s %10.2f %10.2f %7.2fx %10s\n", r.name, r.serial_ms, r.parallel_ms,
                    r.serial_ms / r.parallel_ms, r.identical ? "yes" : "NO");
        all_identical = all_identical && r.identical;
    }
    return all_identical ? 0 : 1;
}
