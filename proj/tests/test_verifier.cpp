#include <doctest.h>

#include <cmath>
#include <numbers>

#include "hmtk/io.hpp"
#include "hmtk/verifier.hpp"

using namespace hmtk;
using doctest::Approx;

namespace {
const HarmonicPolynomial kIdentity = HarmonicPolynomial::identity();
const HarmonicPolynomial kSum = HarmonicPolynomial::c_z_plus_zbar(Complex(1.0, 0.0));
const HarmonicPolynomial kConstant(std::vector<Complex>{Complex(0.4, -1.1)});
const CheckOptions kOpt = CheckOptions::defaults();
}  // namespace

TEST_CASE("check_pointwise") {
    CHECK(check_pointwise(kIdentity, interior_grid(8, 16), kOpt).pass);
    const Verdict sum = check_pointwise(kSum, interior_grid(8, 16), kOpt);
    CHECK(sum.pass);  // Lambda = |grad u| + |grad v| = 2 exactly, margin ~ slack
    CHECK(check_pointwise(kConstant, interior_grid(8, 16), kOpt).pass);
}

TEST_CASE("check_lemma_gradient: known values") {
    const std::vector<std::pair<Complex, double>> circles{{Complex(0.0, 0.0), 0.5}};
    const Verdict id = check_lemma_gradient(kIdentity, circles, kOpt);
    CHECK(id.pass);
    CHECK(id.lhs == Approx(1.0).epsilon(1e-12));
    CHECK(id.rhs == Approx(4.0).epsilon(1e-8));

    const Verdict sum = check_lemma_gradient(kSum, circles, kOpt);
    CHECK(sum.pass);
    CHECK(sum.lhs == Approx(2.0).epsilon(1e-12));
    CHECK(sum.rhs == Approx(16.0 / std::numbers::pi).epsilon(1e-6));

    const Verdict constant = check_lemma_gradient(kConstant, circles, kOpt);
    CHECK(constant.pass);
    CHECK(constant.lhs == 0.0);
    CHECK(constant.rhs == Approx(0.0).scale(1.0).epsilon(1e-12));
}

TEST_CASE("check_khavinson") {
    // u = 0.5 Re z maps into (-1, 1) already; direct form without normalization
    const HarmonicPolynomial half(std::vector<Complex>{Complex(0.0, 0.0), Complex(0.5, 0.0)});
    const Verdict direct = check_khavinson(half, {Complex(0.0, 0.0)}, kOpt, false);
    CHECK(direct.pass);
    CHECK(direct.lhs == Approx(0.5).epsilon(1e-12));
    CHECK(direct.rhs == Approx(4.0 / std::numbers::pi).epsilon(1e-12));

    CHECK(check_khavinson(kConstant, interior_grid(6, 12), kOpt).pass);  // gradient zero
    CHECK(check_khavinson(kSum, interior_grid(6, 12), kOpt).pass);
    // normalized random maps
    for (std::uint64_t trial = 0; trial < 5; ++trial) {
        const auto f = random_polynomial(701, trial, 8, 1.0);
        CHECK(check_khavinson(f, interior_grid(6, 12), kOpt).pass);
    }
}

TEST_CASE("check_interior_gradient_bound") {
    const HarmonicPolynomial re_z({{0.0, 0.0}, {0.5, 0.0}}, {{0.0, 0.0}, {0.5, 0.0}});  // Re z
    const Verdict v = check_interior_gradient_bound(re_z, {Complex(0.5, 0.0)}, kOpt);
    CHECK(v.pass);
    CHECK(v.lhs == Approx(0.5).epsilon(1e-9));                       // d |grad u| = 0.5 * 1
    CHECK(v.rhs == Approx(8.0 / std::numbers::pi * 0.5).epsilon(1e-6));  // M_z = 1
    CHECK(check_interior_gradient_bound(kConstant, {Complex(0.2, 0.1)}, kOpt).pass);
}

TEST_CASE("check_schwarz_pick_affine: known values") {
    const Verdict id = check_schwarz_pick_affine({{Complex(0.0, 0.0), Complex(0.3, 0.2)}}, kOpt);
    CHECK(id.pass);
    CHECK(id.lhs == Approx(1.0));
    CHECK(id.rhs == Approx(1.0));  // identity chart: equality

    const Verdict a = check_schwarz_pick_affine({{Complex(0.5, 0.0), Complex(0.0, 0.0)}}, kOpt);
    CHECK(a.pass);
    CHECK(a.lhs == Approx(0.5));
    CHECK(a.rhs == Approx(0.75));

    const Verdict b = check_schwarz_pick_affine({{Complex(0.5, 0.0), Complex(-0.5, 0.0)}}, kOpt);
    CHECK(b.pass);
    CHECK(b.rhs == Approx(1.25));
}

TEST_CASE("check_theorem1_constants on reference maps") {
    for (const Majorant& w : {Majorant::power(0.5), Majorant::power(1.0)}) {
        for (const HarmonicPolynomial* f : {&kIdentity, &kSum, &kConstant}) {
            const VerdictPair p = check_theorem1_constants(*f, w, kOpt);
            CHECK(p.forward.pass);
            CHECK(p.backward.pass);
        }
    }
}

TEST_CASE("check_bmo_bloch_chain on the classical families") {
    const VerdictPair id = check_bmo_bloch_chain(kIdentity, kOpt);
    CHECK(id.forward.pass);
    CHECK(id.backward.pass);
    CHECK(id.forward.lhs == Approx(1.0 / std::numbers::sqrt2).epsilon(1e-9));
    CHECK(id.forward.rhs == Approx(1.0).epsilon(1e-12));

    const VerdictPair sum = check_bmo_bloch_chain(kSum, kOpt);
    CHECK(sum.forward.pass);
    CHECK(sum.backward.pass);
    // tightness: raw gap of the upper inequality is ~0 on the extremal family
    CHECK(std::abs(sum.backward.rhs - sum.backward.lhs) <= 0.01 * sum.backward.rhs);

    const VerdictPair constant = check_bmo_bloch_chain(kConstant, kOpt);
    CHECK(constant.forward.pass);
    CHECK(constant.backward.pass);
    CHECK(constant.forward.lhs == 0.0);  // raw margins exactly zero on constants
    CHECK(constant.forward.rhs == 0.0);
}

TEST_CASE("chain negative control: constant 1.9 fails on the extremal map") {
    CheckOptions falsified = kOpt;
    falsified.chain_constant = 1.9;
    const VerdictPair p = check_bmo_bloch_chain(kSum, falsified);
    CHECK(p.forward.pass);
    CHECK(!p.backward.pass);
}

TEST_CASE("chain negative control: negative slack manufactures failures") {
    CheckOptions tight = kOpt;
    tight.slack_sup = -0.01;
    const VerdictPair p = check_bmo_bloch_chain(kSum, tight);
    CHECK(!p.backward.pass);  // equality case cannot absorb a negative slack
}

TEST_CASE("chain counterexample: the sharp upper constant 2 is violated by") {
    // (seed 42, trial 1): beta = 3.3189, BMO_2 = 1.2465, ratio 2.669. Pinned
    // as a regression so the finding stays visible; the provable envelope
    // beta <= 4 BMO_2 must still hold.
    const auto f = random_polynomial(42, 1, 8, 1.0);
    const VerdictPair chain = check_bmo_bloch_chain(f, kOpt);
    CHECK(chain.forward.pass);
    CHECK(!chain.backward.pass);
    CHECK(chain.backward.extras.at("ratio") == Approx(2.669).epsilon(1e-2));
    CHECK(check_chain_envelope(f, kOpt).pass);
}

TEST_CASE("chain counterexample survives tightened quadrature and search") {
    // a genuine violation must not move when every knob is tightened; a
    // numerics artifact would
    const auto f = random_polynomial(42, 1, 8, 1.0);
    CheckOptions tight = kOpt;
    tight.search.radial_cells = 128;
    tight.search.angular_cells = 256;
    tight.search.refine_iters = 60;
    tight.search.seeds = 12;
    tight.quad.angular_nodes = 512;
    tight.quad.radial_nodes = 48;
    const VerdictPair loose = check_bmo_bloch_chain(f, kOpt);
    const VerdictPair confirmed = check_bmo_bloch_chain(f, tight);
    CHECK(!confirmed.backward.pass);
    CHECK(confirmed.backward.extras.at("ratio") ==
          Approx(loose.backward.extras.at("ratio")).epsilon(1e-4));
}

TEST_CASE("check_extremal") {
    CHECK(check_extremal(Complex(1.0, 0.0), kOpt).pass);
    CHECK(check_extremal(Complex(0.0, 0.0), kOpt).pass);
    const Verdict big = check_extremal(Complex(0.0, 3.0), kOpt);
    CHECK(big.pass);
    CHECK(big.extras.at("beta") == Approx(6.0).epsilon(1e-10));
    CHECK(big.extras.at("bmo2") == Approx(3.0).epsilon(5e-3));
    CHECK(big.extras.at("ratio") == Approx(2.0).epsilon(1e-2));
}

TEST_CASE("check_bmo1_corollary") {
    const VerdictPair id = check_bmo1_corollary(kIdentity, kOpt);
    CHECK(id.forward.pass);
    CHECK(id.backward.pass);
    CHECK(id.forward.extras.at("sup_d_lambda") == Approx(1.0).epsilon(1e-10));

    const VerdictPair sum = check_bmo1_corollary(kSum, kOpt);
    CHECK(sum.forward.pass);
    CHECK(sum.forward.extras.at("sup_d_lambda") == Approx(2.0).epsilon(1e-10));

    const VerdictPair constant = check_bmo1_corollary(kConstant, kOpt);
    CHECK(constant.forward.pass);
    CHECK(constant.backward.pass);
}

TEST_CASE("check_modulus_equivalence") {
    const Majorant linear = Majorant::power(1.0);
    // f = Re z: M = 1, bound (40/pi) >= |grad u| = 1 everywhere
    const HarmonicPolynomial re_z({{0.0, 0.0}, {0.5, 0.0}}, {{0.0, 0.0}, {0.5, 0.0}});
    const Verdict v = check_modulus_equivalence(re_z, linear, kOpt);
    CHECK(v.pass);
    CHECK(v.extras.at("lipschitz_modulus") == Approx(1.0).epsilon(2e-2));
    CHECK(check_modulus_equivalence(kConstant, linear, kOpt).pass);
    const Verdict sq =
        check_modulus_equivalence(HarmonicPolynomial({{0.0, 0.0}, {0.0, 0.0}, {1.0, 0.0}}),
                                  Majorant::power(0.5), kOpt);
    CHECK(sq.pass);
    CHECK(sq.extras.count("lipschitz_u") == 1);
}

TEST_CASE("check_decomposition") {
    const Majorant linear = Majorant::power(1.0);
    const Verdict sum = check_decomposition(kSum, linear, kOpt);
    CHECK(sum.pass);
    CHECK(sum.extras.at("fit_f") == Approx(2.0).epsilon(2e-2));
    CHECK(sum.extras.at("fit_h") == Approx(1.0).epsilon(2e-2));
    CHECK(sum.extras.at("max_ratio") <= 2.0);

    // zero components are exempt from the ratios
    const Verdict holo = check_decomposition(kIdentity, linear, kOpt);
    CHECK(holo.pass);
    CHECK(holo.extras.at("fit_g") == 0.0);

    const HarmonicPolynomial mixed({{0.0, 0.0}, {0.0, 0.0}, {1.0, 0.0}},
                                   {{0.0, 0.0}, {0.0, -1.0}});  // z^2 + conj(i z)... sampled
    CHECK(check_decomposition(mixed, linear, kOpt).pass);
}

TEST_CASE("check_dyakonov_gap for the identity against sqrt") {
    const Verdict v = check_dyakonov_gap(kIdentity, Majorant::power(0.5), kOpt);
    CHECK(v.pass);
    CHECK(v.extras.at("gap_sup") == Approx(2.0).epsilon(5e-3));
    CHECK(v.extras.at("lipschitz") == Approx(std::numbers::sqrt2).epsilon(2e-2));
    CHECK(v.extras.at("omega_regular") == 1.0);
    CHECK(v.extras.at("omega_squared_regular") == 0.0);  // omega^2 = t fails condition II

    const Verdict c = check_dyakonov_gap(kConstant, Majorant::power(0.5), kOpt);
    CHECK(c.pass);
    CHECK(c.extras.at("gap_sup") == Approx(0.0).scale(1.0).epsilon(1e-7));
}

TEST_CASE("check_mp_ip_monotone and check_mean_value") {
    CHECK(check_mp_ip_monotone(kIdentity, kOpt).pass);
    CHECK(check_mp_ip_monotone(kSum, kOpt).pass);
    CHECK(check_mean_value(kIdentity, kOpt, 3).pass);
    CHECK(check_mean_value(kConstant, kOpt, 4).pass);
}

TEST_CASE("slack monotonicity: widening the slack never flips pass to fail") {
    const auto f = random_polynomial(42, 1, 8, 1.0);
    CheckOptions narrow = CheckOptions::fast();
    CheckOptions wide = narrow;
    wide.slack_sup = 0.4;
    wide.slack_theorem1 = 0.4;
    const VerdictPair a = check_bmo_bloch_chain(f, narrow);
    const VerdictPair b = check_bmo_bloch_chain(f, wide);
    CHECK(b.forward.margin >= a.forward.margin);
    CHECK(b.backward.margin >= a.backward.margin);
    CHECK((!a.forward.pass || b.forward.pass));
    CHECK((!a.backward.pass || b.backward.pass));
}

TEST_CASE("fuzz: determinism and small-batch behavior") {
    FuzzConfig config;
    config.trials = 4;
    config.max_degree = 5;
    config.seed = 1234;
    config.checks = {"pointwise", "schwarz_pick_affine", "mean_value", "mp_ip_monotone"};
    const FuzzSummary a = fuzz(config);
    const FuzzSummary b = fuzz(config);
    CHECK(a.all_pass);
    CHECK(fuzz_summary_string(a) == fuzz_summary_string(b));
    CHECK(a.stats.at("pointwise").runs == 4);

    FuzzConfig empty = config;
    empty.trials = 0;
    const FuzzSummary none = fuzz(empty);
    CHECK(none.all_pass);
    CHECK(none.stats.empty());

    FuzzConfig bad = config;
    bad.checks = {"no_such_check"};
    CHECK_THROWS_AS(fuzz(bad), DomainError);
}

TEST_CASE("fuzz: constant maps pass everything") {
    FuzzConfig config;
    config.trials = 1;
    config.max_degree = 0;  // constants only
    config.seed = 9;
    const FuzzSummary s = fuzz(config);
    CHECK(s.all_pass);
}

TEST_CASE("random_polynomial: reproducible, bounded, canonical") {
    const auto a = random_polynomial(5, 17, 8, 1.0);
    const auto b = random_polynomial(5, 17, 8, 1.0);
    CHECK(a.h_coeffs() == b.h_coeffs());
    CHECK(a.g_coeffs() == b.g_coeffs());
    CHECK(a.degree() <= 8);
    for (Complex c : a.h_coeffs()) CHECK(std::abs(c) <= 1.0);
    const auto nc = random_polynomial(5, 3, 6, 1.0, true);
    CHECK(!nc.is_constant());
}
