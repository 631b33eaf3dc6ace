#include "cavsq/coherent.hpp"

#include <cmath>

#include "cavsq/errors.hpp"

namespace cavsq {

namespace {

// Permutation mapping each doubled-mode index to its conjugate partner.
int conj_index(int i) { return (i + 3) % 6; }

Matrix6cd generator(Complex chi1, Complex chi2) {
    Matrix6cd g = Matrix6cd::Zero();
    g(0, 5) = chi1;              // da1/dt = chi1 b^dag
    g(1, 2) = chi2;              // da2/dt = chi2 b
    g(2, 1) = -std::conj(chi2);  // db/dt = -chi2* a2 + chi1 a1^dag
    g(2, 3) = chi1;
    for (int r = 0; r < 3; ++r)
        for (int c = 0; c < 6; ++c)
            g(conj_index(r), conj_index(c)) = std::conj(g(r, c));
    return g;
}

}  // namespace

Matrix6cd commutator_metric() {
    Matrix6cd j = Matrix6cd::Zero();
    for (int i = 0; i < 3; ++i) {
        j(i, i) = 1.0;
        j(i + 3, i + 3) = -1.0;
    }
    return j;
}

ModeMap evolution_map(Complex chi1, Complex chi2, double t) {
    const double m1 = std::norm(chi1);
    const double m2 = std::norm(chi2);
    if (m2 <= m1)
        throw PhysicsError("amplification regime: no periodic dynamics "
                           "(requires |chi2| > |chi1|)");
    const double theta2 = m2 - m1;
    const double theta = std::sqrt(theta2);
    const double c = std::cos(theta * t);
    const double s = std::sin(theta * t);

    Matrix6cd m = Matrix6cd::Zero();
    m(0, 0) = (m2 - m1 * c) / theta2;
    m(0, 4) = -chi1 * chi2 * (1.0 - c) / theta2;
    m(0, 5) = chi1 * s / theta;
    m(1, 1) = -(m1 - m2 * c) / theta2;
    m(1, 2) = chi2 * s / theta;
    m(1, 3) = chi1 * chi2 * (1.0 - c) / theta2;
    m(2, 2) = c;
    m(2, 1) = -std::conj(chi2) * s / theta;
    m(2, 3) = chi1 * s / theta;
    for (int r = 0; r < 3; ++r)
        for (int col = 0; col < 6; ++col)
            m(conj_index(r), conj_index(col)) = std::conj(m(r, col));
    return {m, t};
}

double generator_check(Complex chi1, Complex chi2) {
    const double theta =
        std::sqrt(std::norm(chi2) - std::norm(chi1));
    const double h = 1e-6 / theta;
    const Matrix6cd forward = evolution_map(chi1, chi2, h).entries;
    const Matrix6cd backward = evolution_map(chi1, chi2, -h).entries;
    const Matrix6cd fd = (forward - backward) / (2.0 * h);
    return (fd - generator(chi1, chi2)).cwiseAbs().maxCoeff();
}

GaussianState vacuum_state() {
    return {Matrix6cd::Identity() * 0.5};
}

GaussianState propagate_vacuum(const ModeMap& map) {
    return {map.entries * vacuum_state().cov * map.entries.adjoint()};
}

double quadrature_variance(const GaussianState& state, const Vector6cd& c) {
    // <O^2> with O = sum c_i x_i; <x_i x_j>_sym = cov(i, conj(j)).
    Complex var = 0.0;
    for (int i = 0; i < 6; ++i)
        for (int j = 0; j < 6; ++j)
            var += c(i) * c(j) * state.cov(i, conj_index(j));
    return var.real();
}

double duan_combination(const GaussianState& state) {
    const double r = 1.0 / std::sqrt(2.0);
    Vector6cd x_rel, p_sum;
    x_rel << r, -r, 0, r, -r, 0;
    const Complex i(0, 1);
    p_sum << -i * r, -i * r, 0, i * r, i * r, 0;
    return quadrature_variance(state, x_rel) +
           quadrature_variance(state, p_sum);
}

}  // namespace cavsq
