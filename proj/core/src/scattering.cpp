#include "cavsq/scattering.hpp"

#include <cmath>
#include <cstdlib>

namespace cavsq {

namespace {
double sqr(double x) { return x * x; }
}  // namespace

SpontaneousAmplitudes spontaneous_amplitudes(const SystemParams& p,
                                             double theta_ks, double nu_ref) {
    SpontaneousAmplitudes a;
    a.theta_ks = theta_ks;
    const Complex carrier(p.delta, 0.5 * p.gamma);
    const double go = p.gamma * p.omega_rabi;
    a.t0 = go / carrier;
    a.t_plus = p.eta * go * (std::cos(p.theta_l) / Complex(p.delta - nu_ref, 0.5 * p.gamma) +
                             std::cos(theta_ks) / carrier);
    a.t_minus = p.eta * go * (std::cos(p.theta_l) / Complex(p.delta + nu_ref, 0.5 * p.gamma) +
                              std::cos(theta_ks) / carrier);
    return a;
}

SpontaneousAmplitudes spontaneous_amplitudes(const SystemParams& p,
                                             double theta_ks) {
    return spontaneous_amplitudes(p, theta_ks, p.nu);
}

double spontaneous_rate(const SpontaneousAmplitudes& amps, double gamma, int n,
                        int n_prime) {
    if (n < 0 || n_prime < 0) return 0.0;
    if (std::abs(n - n_prime) > 1) return 0.0;  // beyond first order in eta
    if (n_prime == n) return std::norm(amps.t0) / gamma;
    if (n_prime == n + 1) return std::norm(amps.t_plus) * (n + 1) / gamma;
    return std::norm(amps.t_minus) * n / gamma;
}

double motional_decoherence_rate(const SystemParams& p, double alpha) {
    return sqr(p.eta) * (sqr(std::cos(p.theta_l)) + alpha) * p.gamma *
           sqr(p.omega_rabi) / sqr(p.delta);
}

CavityAmplitudes cavity_amplitudes(const SystemParams& p, int j,
                                   double nu_ref) {
    const double g = (j == 1) ? p.g1 : p.g2;
    const double phi = (j == 1) ? p.phi1 : p.phi2;
    const Complex carrier(p.delta, 0.5 * p.gamma);
    const Complex i(0, 1);
    CavityAmplitudes a;
    a.t0 = p.omega_rabi * g * std::cos(phi) / carrier;
    const Complex cav_term = std::cos(p.theta_c) * std::tan(phi) / carrier;
    a.t_plus = p.eta * p.omega_rabi * g * std::cos(phi) *
               (i * std::cos(p.theta_l) / Complex(p.delta - nu_ref, 0.5 * p.gamma) -
                cav_term);
    a.t_minus = p.eta * p.omega_rabi * g * std::cos(phi) *
                (i * std::cos(p.theta_l) / Complex(p.delta + nu_ref, 0.5 * p.gamma) -
                 cav_term);
    return a;
}

double cavity_scattering_rate(const SystemParams& p, int j, int n, int n_prime,
                              double delta_j, double nu_ref) {
    if (n < 0 || n_prime < 0 || std::abs(n - n_prime) > 1) return 0.0;
    const double kappa = (j == 1) ? p.kappa1 : p.kappa2;
    const CavityAmplitudes a = cavity_amplitudes(p, j, nu_ref);
    if (n_prime == n)
        return 2.0 * kappa / (sqr(delta_j) + sqr(kappa)) * std::norm(a.t0);
    if (n_prime == n + 1)
        return 2.0 * kappa / (sqr(delta_j - nu_ref) + sqr(kappa)) *
               std::norm(a.t_plus) * (n + 1);
    return 2.0 * kappa / (sqr(delta_j + nu_ref) + sqr(kappa)) *
           std::norm(a.t_minus) * n;
}

double cavity_spontaneous_loss(const SystemParams& p, int j, int m_j,
                               double delta_j) {
    if (m_j < 1) return 0.0;
    const double g = (j == 1) ? p.g1 : p.g2;
    return p.gamma * sqr(g) * m_j /
           (sqr(p.delta - delta_j) + sqr(p.gamma) / 4.0);
}

double stark_shift_per_phonon(const SystemParams& p, double nu_ref) {
    const double g24 = sqr(p.gamma) / 4.0;
    const double u = sqr(p.delta) - sqr(nu_ref) + g24;
    return sqr(p.eta * p.omega_rabi * std::cos(p.theta_l)) *
           (2.0 * p.delta * u / (sqr(u) + sqr(p.gamma * nu_ref)) -
            p.delta / (sqr(p.delta) + g24));
}

double stark_shift_per_photon(const SystemParams& p, int j, double delta_j) {
    const double g = (j == 1) ? p.g1 : p.g2;
    const double phi = (j == 1) ? p.phi1 : p.phi2;
    const double d = p.delta - delta_j;
    return sqr(g * std::cos(phi)) * d / (sqr(d) + sqr(p.gamma) / 4.0);
}

}  // namespace cavsq
