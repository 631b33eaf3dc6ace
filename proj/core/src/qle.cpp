#include "cavsq/qle.hpp"

#include <cassert>
#include <cmath>
#include <fmt/format.h>

#include <Eigen/Eigenvalues>

#include "cavsq/errors.hpp"

namespace cavsq {

namespace {

// Port indices; +5 for the conjugate partner.
enum Port { kA1In = 0, kA2In = 1, kA1LIn = 2, kA2LIn = 3, kBIn = 4 };

int conj_index(int i) { return (i + 3) % 6; }

}  // namespace

LinearNoiseModel build_model(const DerivedCouplings& dc, const SystemParams& p,
                             const DetuningOffsets& offsets) {
    LinearNoiseModel m;
    m.kappa1 = p.kappa1;
    m.kappa2 = p.kappa2;

    const RadiativeRates& r = dc.rates;
    const Complex i(0, 1);

    Matrix6cd a = Matrix6cd::Zero();
    // Rows are written for (a1, a2, b); the a1 row is the conjugate of the
    // equation of motion of a1^dag.
    a(0, 0) = -(p.kappa1 + r.kappa_1l) - i * offsets.a1;
    a(0, 5) = dc.chi1;
    a(1, 1) = -(p.kappa2 + r.kappa_2l) + i * offsets.a2;
    a(1, 2) = dc.chi2;
    a(2, 2) = -(p.kappa_b + r.kappa_2b - r.kappa_1b) + i * offsets.b;
    a(2, 3) = dc.chi1_bar;
    a(2, 1) = -std::conj(dc.chi2_bar);
    for (int row = 0; row < 3; ++row)
        for (int col = 0; col < 6; ++col)
            a(conj_index(row), conj_index(col)) = std::conj(a(row, col));
    m.drift = a;

    const double s2 = std::sqrt(2.0);
    Matrix6x10cd b = Matrix6x10cd::Zero();
    b(0, kA1In) = std::sqrt(2.0 * p.kappa1);
    b(0, kA1LIn) = s2 * std::conj(r.kbar_1l);
    b(1, kA2In) = std::sqrt(2.0 * p.kappa2);
    b(1, kA2LIn) = s2 * r.kbar_2l;
    b(2, kBIn) = std::sqrt(2.0 * p.kappa_b);
    b(2, kA2LIn) = s2 * r.kbar_2b;
    b(2, kA1LIn + 5) = -s2 * r.kbar_1b;
    for (int row = 0; row < 3; ++row)
        for (int col = 0; col < 10; ++col)
            b(conj_index(row), (col + 5) % 10) = std::conj(b(row, col));
    m.noise_routing = b;

    Matrix10d d = Matrix10d::Zero();
    for (int port = kA1In; port <= kA2LIn; ++port)
        d(port, port + 5) = 1.0;  // vacuum: <x x^dag> = delta, <x^dag x> = 0
    d(kBIn, kBIn + 5) = p.nbar + 1.0;
    d(kBIn + 5, kBIn) = p.nbar;
    m.input_corr = d;

    // Modes with no dynamics and no noise are inert and carry a harmless
    // zero eigenvalue; stability applies to the active submatrix.
    std::vector<int> active;
    for (int r = 0; r < 6; ++r) {
        const bool quiet = m.drift.row(r).isZero() &&
                           m.drift.col(r).isZero() &&
                           m.noise_routing.row(r).isZero();
        if (!quiet) active.push_back(r);
    }
    Eigen::MatrixXcd sub(active.size(), active.size());
    for (size_t r = 0; r < active.size(); ++r)
        for (size_t c = 0; c < active.size(); ++c)
            sub(r, c) = m.drift(active[r], active[c]);
    if (active.size() > 0) {
        Eigen::ComplexEigenSolver<Eigen::MatrixXcd> solver(sub, false);
        if (solver.eigenvalues().real().maxCoeff() >= 0.0)
            throw PhysicsError("unstable linearized model: drift spectral "
                               "abscissa is non-negative");
    }
    return m;
}

double spectral_abscissa(const LinearNoiseModel& model) {
    Eigen::ComplexEigenSolver<Matrix6cd> solver(model.drift, false);
    return solver.eigenvalues().real().maxCoeff();
}

double output_spectrum(const LinearNoiseModel& model, double omega,
                       Quadrature quadrature) {
    // Output vector (a1_out, a2_out, a1_out^dag, a2_out^dag):
    // a_out = sqrt(2 kappa) a - a_in.
    Eigen::Matrix<Complex, 4, 6> c = Eigen::Matrix<Complex, 4, 6>::Zero();
    c(0, 0) = std::sqrt(2.0 * model.kappa1);
    c(1, 1) = std::sqrt(2.0 * model.kappa2);
    c(2, 3) = std::sqrt(2.0 * model.kappa1);
    c(3, 4) = std::sqrt(2.0 * model.kappa2);
    Eigen::Matrix<Complex, 4, 10> e = Eigen::Matrix<Complex, 4, 10>::Zero();
    e(0, 0) = -1.0;
    e(1, 1) = -1.0;
    e(2, 5) = -1.0;
    e(3, 6) = -1.0;

    const Complex i(0, 1);
    Eigen::Matrix<Complex, 1, 4> v;
    if (quadrature == Quadrature::Minus)
        v << 1, -1, 1, -1;
    else
        v << -i, -i, i, i;

    auto transfer = [&](double w) -> Eigen::Matrix<Complex, 1, 10> {
        // x_hat(w) = (-i w I - A)^{-1} B n_hat(w); the resolvent is regular
        // for real w because the drift is strictly stable.
        Matrix6cd resolvent = -i * w * Matrix6cd::Identity() - model.drift;
        Eigen::PartialPivLU<Matrix6cd> lu(resolvent);
        Eigen::Matrix<Complex, 6, 10> x = lu.solve(model.noise_routing);
        return v * (c * x + e);
    };

    const Eigen::Matrix<Complex, 1, 10> w_pos = transfer(omega);
    const Eigen::Matrix<Complex, 1, 10> w_neg = transfer(-omega);
    const Matrix10d& d = model.input_corr;
    const Complex s = 0.25 * (w_pos * d.cast<Complex>() * w_neg.transpose() +
                              w_neg * d.cast<Complex>() * w_pos.transpose())
                                 .value();
    assert(std::abs(s.imag()) < 1e-9 * (1.0 + std::abs(s.real())));
    return s.real();
}

SpectrumSamples spectrum_sweep(const LinearNoiseModel& model,
                               const std::vector<double>& omega_grid) {
    SpectrumSamples out;
    out.omega = omega_grid;
    out.s_plus.resize(omega_grid.size());
    out.s_minus.resize(omega_grid.size());
#pragma omp parallel for schedule(static)
    for (std::ptrdiff_t k = 0; k < std::ssize(omega_grid); ++k) {
        out.s_plus[k] = output_spectrum(model, omega_grid[k], Quadrature::Plus);
        out.s_minus[k] =
            output_spectrum(model, omega_grid[k], Quadrature::Minus);
    }
    return out;
}

}  // namespace cavsq
