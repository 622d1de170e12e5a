#include <doctest.h>

#include <cmath>

#include "hmtk/rng.hpp"
#include "hmtk/supsearch.hpp"
#include "hmtk/verifier.hpp"

using namespace hmtk;
using doctest::Approx;

TEST_CASE("sup_over_disk: radial fields with known maxima") {
    SupSearchSpec spec;
    auto bump = [](Complex z) { return 1.0 - std::norm(z); };
    const SupResult a = sup_over_disk(bump, spec);
    CHECK(a.value == Approx(1.0).epsilon(1e-14));
    CHECK(std::abs(a.argmax) <= 1e-12);

    // (1 - |z|^2) * 2|z|, the Bloch field of z^2
    auto field = [](Complex z) { return (1.0 - std::norm(z)) * 2.0 * std::abs(z); };
    const SupResult b = sup_over_disk(field, spec);
    const double expected = 4.0 / (3.0 * std::sqrt(3.0));
    CHECK(b.value == Approx(expected).epsilon(1e-10));
    CHECK(std::abs(b.argmax) == Approx(1.0 / std::sqrt(3.0)).epsilon(1e-5));

    auto flat2 = [](Complex z) { return (1.0 - std::norm(z)) * 2.0; };
    const SupResult c = sup_over_disk(flat2, spec);
    CHECK(c.value == Approx(2.0).epsilon(1e-14));
    CHECK(std::abs(c.argmax) <= 1e-12);
}

TEST_CASE("sup_over_disk: 1-D oracle agreement on random radial profiles") {
    // fields of the form (1 - |z|^2) * |p(|z|)| reduce to 1-D maximization
    for (std::uint64_t trial = 0; trial < 6; ++trial) {
        const double c0 = rng_u01(911, 1, trial) * 2.0 - 1.0;
        const double c1 = rng_u01(911, 2, trial) * 2.0 - 1.0;
        const double c2 = rng_u01(911, 3, trial) * 2.0;
        auto profile = [&](double r) {
            return (1.0 - r * r) * std::abs(c0 + c1 * r + c2 * r * r);
        };
        auto field = [&](Complex z) { return profile(std::abs(z)); };
        // dense 1-D scan + golden section, fully independent of the 2-D search
        double oracle = 0.0;
        for (int i = 0; i <= 20000; ++i) {
            oracle = std::max(oracle, profile(i / 20000.0));
        }
        const SupResult got = sup_over_disk(field, SupSearchSpec{});
        CHECK(got.value == Approx(oracle).epsilon(1e-7));
    }
}

TEST_CASE("sup_over_disk: refinement never loses to the coarse grid") {
    for (std::uint64_t trial = 0; trial < 8; ++trial) {
        const auto f = random_polynomial(313, trial, 6, 1.0);
        auto field = [&](Complex z) {
            return (1.0 - std::norm(z)) * derivatives(f, z, true).lambda_max;
        };
        SupSearchSpec spec;
        spec.radial_cells = 24;
        spec.angular_cells = 48;
        const SupResult r = sup_over_disk(field, spec);
        CHECK(r.value >= r.coarse_value);
        // recompute the coarse maximum directly
        double coarse = -1e300;
        for (Complex z : polar_grid(spec.radial_cells, spec.angular_cells, 1.0)) {
            coarse = std::max(coarse, field(z));
        }
        CHECK(r.coarse_value == coarse);
    }
}

TEST_CASE("sup_over_disk: domain shrink keeps the search off the rim") {
    auto edge = [](Complex z) { return std::abs(z); };
    const SupResult r = sup_over_disk(edge, SupSearchSpec{}, 0.25);
    CHECK(r.value == Approx(0.75).epsilon(1e-12));
}

TEST_CASE("sup_over_disk: NaN raises DataError with a location") {
    auto poison = [](Complex z) {
        return std::abs(z - Complex(0.5, 0.0)) < 0.05 ? std::nan("") : 0.0;
    };
    CHECK_THROWS_AS(sup_over_disk(poison, SupSearchSpec{}), DataError);
}

TEST_CASE("sup_over_disk: deterministic across repeats") {
    const auto f = random_polynomial(99, 5, 8, 1.0);
    auto field = [&](Complex z) {
        return (1.0 - std::norm(z)) * derivatives(f, z, true).lambda_max;
    };
    const SupResult a = sup_over_disk(field, SupSearchSpec{});
    const SupResult b = sup_over_disk(field, SupSearchSpec{});
    CHECK(a.value == b.value);
    CHECK(a.argmax == b.argmax);
}
