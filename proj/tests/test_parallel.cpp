#include <doctest.h>

#include <atomic>
#include <cmath>
#include <stdexcept>
#include <vector>

#include "hmtk/norms.hpp"
#include "hmtk/parallel.hpp"
#include "hmtk/supsearch.hpp"
#include "hmtk/verifier.hpp"

using namespace hmtk;

TEST_CASE("thread_count is at least one") { CHECK(thread_count() >= 1); }

TEST_CASE("parallel_for covers every index exactly once") {
    std::vector<std::atomic<int>> hits(1000);
    parallel_for(hits.size(), [&](std::size_t i) { hits[i].fetch_add(1); });
    for (const auto& h : hits) CHECK(h.load() == 1);
    parallel_for(0, [&](std::size_t) { CHECK(false); });
}

TEST_CASE("parallel_for rethrows exceptions from workers") {
    CHECK_THROWS_AS(parallel_for(64,
                                 [](std::size_t i) {
                                     if (i == 13) throw DomainError("boom");
                                 }),
                    DomainError);
}

TEST_CASE("serial reference and OpenMP kernels agree bitwise") {
    const auto f = random_polynomial(2024, 0, 8, 1.0, true);

    // grid evaluation
    const auto pts = polar_grid(48, 96, 1.0);
    auto field = [&](Complex z) {
        return (1.0 - std::norm(z)) * derivatives(f, z, true).lambda_max;
    };
    CHECK(eval_field(field, pts, false) == eval_field(field, pts, true));

    // disk integral
    QuadratureSpec quad;
    quad.max_refinements = 0;
    const DiskWindow w(PointInDisk(Complex(0.1, -0.2)), 0.5);
    auto integrand = [&](Complex z) { return Complex(std::norm(f(z)), 0.0); };
    quad.parallel = false;
    const Complex serial = disk_integral(integrand, w, quad).value;
    quad.parallel = true;
    const Complex parallel = disk_integral(integrand, w, quad).value;
    CHECK(serial == parallel);

    // full sup search
    SupSearchSpec spec;
    spec.parallel = false;
    const SupResult a = sup_over_disk(field, spec);
    spec.parallel = true;
    const SupResult b = sup_over_disk(field, spec);
    CHECK(a.value == b.value);
    CHECK(a.argmax == b.argmax);

    // end-to-end: a BMO norm computed both ways
    SupSearchSpec small;
    small.radial_cells = 16;
    small.angular_cells = 32;
    small.refine_iters = 10;
    QuadratureSpec q2;
    small.parallel = false;
    q2.parallel = false;
    const double bmo_serial = bmo_norm(f, 2.0, small, q2).norm;
    small.parallel = true;
    q2.parallel = true;
    const double bmo_parallel = bmo_norm(f, 2.0, small, q2).norm;
    CHECK(bmo_serial == bmo_parallel);
}
