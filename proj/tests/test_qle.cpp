#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "cavsq/analysis.hpp"
#include "cavsq/errors.hpp"
#include "cavsq/params.hpp"
#include "cavsq/qle.hpp"

using namespace cavsq;

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

SystemParams reference_params(double kappa_hz) {
    SystemParams p;
    p.gamma = kTwoPi * 360e3;
    p.nu = kTwoPi * 3e6;
    p.eta = 0.1;
    p.omega_rabi = kTwoPi * 18e6;
    p.delta = -kTwoPi * 60e6;
    p.g1 = p.g2 = kTwoPi * 0.6e6;
    p.theta_c = std::numbers::pi / 2.0;
    p.kappa1 = p.kappa2 = kTwoPi * kappa_hz;
    p.kappa_b = kTwoPi * 1.0;
    p.nbar = 100.0;
    return p;
}

// Lossless couplings only: no radiative rates, no trap noise.
DerivedCouplings ideal_couplings(double chi1, double chi2) {
    DerivedCouplings dc;
    dc.chi1 = dc.chi1_bar = Complex(chi1, 0);
    dc.chi2 = dc.chi2_bar = Complex(chi2, 0);
    std::tie(dc.theta_big, dc.sigma_big) = theta_sigma(dc.chi1, dc.chi2);
    return dc;
}

SystemParams ideal_params(double kappa) {
    SystemParams p;
    p.nu = 1.0;
    p.kappa1 = p.kappa2 = kappa;
    return p;
}

}  // namespace

TEST_CASE("zero-coupling vacuum model is pure shot noise") {
    const SystemParams p = reference_params(1e3);
    DerivedCouplings dc;  // all couplings zero
    SystemParams q = p;
    q.nbar = 0.0;
    const LinearNoiseModel model = build_model(dc, q);

    for (int r = 0; r < 6; ++r)
        for (int c = 0; c < 6; ++c)
            if (r != c) CHECK(std::abs(model.drift(r, c)) == 0.0);

    for (double w : {0.0, 0.3, 1.0, 5.0, 100.0}) {
        const double omega = w * p.kappa1;
        CHECK(std::abs(output_spectrum(model, omega, Quadrature::Minus) - 1.0) <
              1e-12);
        CHECK(std::abs(output_spectrum(model, omega, Quadrature::Plus) - 1.0) <
              1e-12);
    }
}

TEST_CASE("gamma = 0 removes the radiative ports") {
    SystemParams p = reference_params(1e3);
    p.gamma = 0.0;
    const DerivedCouplings dc = derive_couplings(p);
    CHECK(std::abs(dc.rates.kbar_1l) == 0.0);
    CHECK(std::abs(dc.rates.kbar_2b) == 0.0);
    CHECK(dc.rates.kappa_1l == 0.0);
}

TEST_CASE("reference drift is stable with decay of order kappa") {
    const SystemParams p = reference_params(1e3);
    const DerivedCouplings dc = derive_couplings(p, NuPrimeMode::FixedPoint);
    const LinearNoiseModel model = build_model(dc, p);
    const double abscissa = spectral_abscissa(model);
    CHECK(abscissa < 0.0);
    CHECK(std::abs(abscissa) > 0.05 * p.kappa1);
    CHECK(std::abs(abscissa) < 5.0 * p.kappa1);
}

TEST_CASE("unstable drift is rejected") {
    // Swapping the couplings puts the model in the amplification regime.
    DerivedCouplings dc = ideal_couplings(1.0, 2.0);
    std::swap(dc.chi1, dc.chi2);
    std::swap(dc.chi1_bar, dc.chi2_bar);
    CHECK_THROWS_AS(build_model(dc, ideal_params(0.1)), PhysicsError);
}

TEST_CASE("ideal-limit solver matches the closed form") {
    std::mt19937 rng(31);
    std::uniform_real_distribution<double> u(0.1, 2.0);
    std::uniform_real_distribution<double> wdist(-4.0, 4.0);
    for (int k = 0; k < 50; ++k) {
        const double chi1 = u(rng);
        const double chi2 = chi1 + u(rng);
        const double kappa = u(rng);
        const DerivedCouplings dc = ideal_couplings(chi1, chi2);
        const LinearNoiseModel model = build_model(dc, ideal_params(kappa));
        const double omega = wdist(rng) * dc.theta_big;
        const double expected =
            s_analytic(omega, dc.theta_big, dc.sigma_big, kappa);
        for (Quadrature q : {Quadrature::Minus, Quadrature::Plus}) {
            const double s = output_spectrum(model, omega, q);
            CHECK(std::abs(s - expected) <=
                  1e-8 * std::max(1.0, std::abs(expected)));
        }
    }
}

TEST_CASE("spectrum symmetry properties") {
    const SystemParams p = reference_params(1e3);
    const DerivedCouplings dc = derive_couplings(p, NuPrimeMode::FixedPoint);
    const LinearNoiseModel model = build_model(dc, p);
    for (double w : {0.0, 0.2, 0.5, 0.9, 1.0, 1.3, 2.0}) {
        const double omega = w * dc.theta_big;
        const double sm = output_spectrum(model, omega, Quadrature::Minus);
        const double sp = output_spectrum(model, omega, Quadrature::Plus);
        const double sm_neg = output_spectrum(model, -omega, Quadrature::Minus);
        CHECK(std::abs(sm - sp) < 1e-10);
        CHECK(std::abs(sm - sm_neg) < 1e-10);
        CHECK(sm >= 0.0);
    }
}

TEST_CASE("reference center value and high-frequency rolloff") {
    const SystemParams p = reference_params(1e3);
    const DerivedCouplings dc = derive_couplings(p, NuPrimeMode::FixedPoint);
    const LinearNoiseModel model = build_model(dc, p);

    const double s0 = output_spectrum(model, 0.0, Quadrature::Minus);
    // Frozen from an independent full-model evaluation.
    CHECK(s0 == doctest::Approx(0.021196).epsilon(1e-3));
    const double s0_ideal = s_analytic(0.0, dc.theta_big, dc.sigma_big, p.kappa1);
    CHECK(std::abs(s0 - s0_ideal) < 0.02);

    const double far = 100.0 * std::max(dc.theta_big, p.kappa1);
    CHECK(std::abs(output_spectrum(model, far, Quadrature::Minus) - 1.0) <
          1e-3);
}

TEST_CASE("spontaneous photon loss only degrades the center squeezing") {
    const SystemParams p = reference_params(1e3);
    DerivedCouplings dc = derive_couplings(p, NuPrimeMode::FixedPoint);
    const Complex kbar_1l = dc.rates.kbar_1l;
    const Complex kbar_2l = dc.rates.kbar_2l;
    const double k1l = dc.rates.kappa_1l;
    const double k2l = dc.rates.kappa_2l;

    double previous = -1.0;
    for (double f : {0.0, 0.5, 1.0, 2.0, 4.0, 8.0}) {
        dc.rates.kbar_1l = f * kbar_1l;
        dc.rates.kbar_2l = f * kbar_2l;
        dc.rates.kappa_1l = f * f * k1l;
        dc.rates.kappa_2l = f * f * k2l;
        const double s0 = output_spectrum(build_model(dc, p), 0.0,
                                          Quadrature::Minus);
        CHECK(s0 >= previous);
        previous = s0;
    }
}

TEST_CASE("sweep plumbing") {
    const SystemParams p = reference_params(1e3);
    const DerivedCouplings dc = derive_couplings(p, NuPrimeMode::FixedPoint);
    const LinearNoiseModel model = build_model(dc, p);

    CHECK(spectrum_sweep(model, {}).s_minus.empty());

    std::vector<double> grid;
    const int n = 2001;
    for (int i = 0; i < n; ++i)
        grid.push_back((-2.0 + 4.0 * i / (n - 1)) * dc.theta_big);
    const SpectrumSamples s = spectrum_sweep(model, grid);
    for (size_t i = 0; i < grid.size(); ++i)
        CHECK(std::abs(s.s_minus[i] - s.s_minus[grid.size() - 1 - i]) < 1e-10);

    const auto dips = extract_minima(grid, s.s_minus);
    REQUIRE(dips.size() == 3);
    CHECK(std::abs(dips[1].location) < 2.5 * (grid[1] - grid[0]));
    CHECK(std::abs(dips[0].location + dips[2].location) <
          2.5 * (grid[1] - grid[0]));
    CHECK(std::abs(std::abs(dips[2].location) - dc.theta_big) <
          0.05 * dc.theta_big);
}

TEST_CASE("trap heating barely moves the center value") {
    SystemParams p = reference_params(1e3);
    const DerivedCouplings dc = derive_couplings(p, NuPrimeMode::FixedPoint);
    const double with = output_spectrum(build_model(dc, p), 0.0,
                                        Quadrature::Minus);
    p.kappa_b = 0.0;
    p.nbar = 0.0;
    const double without = output_spectrum(build_model(dc, p), 0.0,
                                           Quadrature::Minus);
    CHECK(std::abs(with - without) < 0.01);
}
