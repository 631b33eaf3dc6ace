#pragma once

#include <vector>

#include <Eigen/Dense>

#include "cavsq/coherent.hpp"
#include "cavsq/params.hpp"

namespace cavsq {

// Fourier convention used throughout: F[x](omega) = Int dt e^{+i omega t} x(t),
// so the two-frequency correlator pairs omega with -omega. Flipping this sign
// silently swaps the sidebands; it is fixed here and nowhere else.

using Matrix6x10cd = Eigen::Matrix<Complex, 6, 10>;
using Matrix10d = Eigen::Matrix<double, 10, 10>;

// Diagonal frequency mismatches kept when operating away from the exact
// resonance conditions; all zero when the laser is tuned per the resonance
// conditions (the figure presets).
struct DetuningOffsets {
    double a1 = 0.0;  // nu' - delta_1 + delta_1L
    double a2 = 0.0;  // nu' + delta_2 - delta_2L
    double b = 0.0;   // nu' - nu - delta_b
};

// Linear noise model for the doubled mode vector (a1, a2, b, conjugates).
// Noise ports, in order: a1_in, a2_in, a1L_in, a2L_in, b_in, then their
// conjugates. The radiative ports a1L_in / a2L_in each feed both a cavity
// row and the motional row: cavity photon loss and motional radiative noise
// share the spontaneous-emission reservoir and are correlated. The two
// radiative ports are mutually uncorrelated.
struct LinearNoiseModel {
    Matrix6cd drift;            // deterministic generator A
    Matrix6x10cd noise_routing; // amplitudes B, transcribed with kbar phases
    Matrix10d input_corr;       // <n_i(t) n_j(t')> = D_ij delta(t - t')
    double kappa1 = 0.0, kappa2 = 0.0;  // output-coupling rates
};

// Assembles the effective equations of motion. Throws PhysicsError when the
// drift has a non-negative eigenvalue real part (unstable linearized model).
LinearNoiseModel build_model(const DerivedCouplings& dc, const SystemParams& p,
                             const DetuningOffsets& offsets = {});

// Largest drift eigenvalue real part (< 0 for a usable model).
double spectral_abscissa(const LinearNoiseModel& model);

enum class Quadrature {
    Minus,  // difference of amplitude quadratures
    Plus,   // sum of phase quadratures
};

// Stationary squeezing spectrum of the cavity output at sideband frequency
// omega, normalized so shot noise is 1. Even in omega by construction.
double output_spectrum(const LinearNoiseModel& model, double omega,
                       Quadrature quadrature);

struct SpectrumSamples {
    std::vector<double> omega;
    std::vector<double> s_plus;
    std::vector<double> s_minus;
};

// Both quadratures over a monotone grid. Evaluations at distinct omega are
// independent; the model is immutable and shareable across threads.
SpectrumSamples spectrum_sweep(const LinearNoiseModel& model,
                               const std::vector<double>& omega_grid);

}  // namespace cavsq
