#pragma once

#include <Eigen/Dense>

#include "cavsq/params.hpp"

namespace cavsq {

using Matrix6cd = Eigen::Matrix<Complex, 6, 6>;
using Vector6cd = Eigen::Matrix<Complex, 6, 1>;

// Linear Heisenberg-picture map on the doubled mode vector
// (a1, a2, b, a1^dag, a2^dag, b^dag) generated by the lossless
// beam-splitter + two-mode-squeezing interaction.
struct ModeMap {
    Matrix6cd entries;
    double time = 0.0;
};

// Symmetrized second moments <x_i x_j^dag>_sym of the doubled vector;
// vacuum is identity/2. Means are zero throughout.
struct GaussianState {
    Matrix6cd cov;
};

// Commutator metric preserved by any valid ModeMap: M J M^dag = J.
Matrix6cd commutator_metric();

// Evolution for time t. Requires |chi2| > |chi1| (periodic regime);
// throws PhysicsError otherwise.
ModeMap evolution_map(Complex chi1, Complex chi2, double t);

// Max absolute entry deviation between the finite-difference derivative of
// the map at t = 0 and the generator read off the interaction Hamiltonian.
double generator_check(Complex chi1, Complex chi2);

GaussianState vacuum_state();
GaussianState propagate_vacuum(const ModeMap& map);

// Variance of a Hermitian combination sum_i c_i x_i of doubled-mode
// operators (the caller is responsible for c describing a Hermitian
// observable, i.e. c[i+3] = conj(c[i])).
double quadrature_variance(const GaussianState& state, const Vector6cd& coeffs);

// Var(X1 - X2) + Var(P1 + P2) with X = (a + a^dag)/sqrt(2),
// P = -i(a - a^dag)/sqrt(2); vacuum level is 2.
double duan_combination(const GaussianState& state);

}  // namespace cavsq
