#include "cavsq/params.hpp"

#include <cmath>
#include <fmt/format.h>

#include "cavsq/errors.hpp"

namespace cavsq {

namespace {

constexpr double kRegimeFactor = 5.0;

double sqr(double x) { return x * x; }

// Motional a.c.-Stark shift of the trap frequency, evaluated at trial
// frequency x. nu'(x) = nu + shift(x); the closed form uses x = nu.
double nu_shift(const SystemParams& p, double x) {
    const double c2 = sqr(std::cos(p.theta_l));
    const double o2 = sqr(p.eta * p.omega_rabi) * c2;
    const double g24 = sqr(p.gamma) / 4.0;
    const double u = g24 + sqr(p.delta) - sqr(x);
    const double lorentz = u / (sqr(u) + sqr(x * p.gamma));
    return 2.0 * p.delta * o2 * lorentz - o2 * p.delta / (sqr(p.delta) + g24);
}

}  // namespace

std::vector<std::string> validate(const SystemParams& p) {
    auto require = [](bool ok, const char* what) {
        if (!ok) throw ConfigError(std::string("invalid parameters: ") + what);
    };
    require(p.gamma >= 0, "gamma must be nonnegative");
    require(p.nu > 0, "nu must be positive");
    require(p.eta >= 0, "eta must be nonnegative");
    require(p.eta < 1, "eta must be < 1 (Lamb-Dicke regime)");
    require(p.omega_rabi >= 0, "omega_rabi must be nonnegative");
    require(p.g1 >= 0 && p.g2 >= 0, "g1, g2 must be nonnegative");
    require(p.kappa1 >= 0 && p.kappa2 >= 0, "kappa1, kappa2 must be nonnegative");
    require(p.kappa_b >= 0, "kappa_b must be nonnegative");
    require(p.nbar >= 0, "nbar must be nonnegative");

    std::vector<std::string> warnings;
    if (p.eta > 0.3)
        warnings.push_back(fmt::format(
            "eta = {:.3g} is large for a first-order Lamb-Dicke expansion", p.eta));
    const double drive_scale =
        std::max({p.gamma, p.omega_rabi, p.g1, p.g2});
    if (std::abs(p.delta) < kRegimeFactor * drive_scale)
        warnings.push_back(fmt::format(
            "|delta| = {:.4g} rad/s is not >= {}x max(gamma, omega_rabi, g_j); "
            "adiabatic elimination of the dipole is marginal",
            std::abs(p.delta), kRegimeFactor));
    const double sideband_scale = std::max(
        {p.gamma, p.kappa1, p.kappa2, p.g1, p.g2, p.omega_rabi * p.eta});
    if (p.nu < kRegimeFactor * sideband_scale)
        warnings.push_back(fmt::format(
            "nu = {:.4g} rad/s is not >= {}x max(gamma, kappa_j, g_j, eta*omega_rabi); "
            "sidebands are only marginally resolved",
            p.nu, kRegimeFactor));
    return warnings;
}

double effective_trap_frequency(const SystemParams& p, NuPrimeMode mode) {
    if (mode == NuPrimeMode::ClosedForm) return p.nu + nu_shift(p, p.nu);

    double x = p.nu;
    for (int i = 0; i < 100; ++i) {
        const double next = p.nu + nu_shift(p, x);
        if (std::abs(next - x) < 1e-9 * p.nu) return next;
        x = next;
    }
    throw PhysicsError("no self-consistent nu'");
}

Complex coupling_chi(const SystemParams& p, double nu_prime, int mode,
                     bool barred) {
    const double g = (mode == 1) ? p.g1 : p.g2;
    const double phi = (mode == 1) ? p.phi1 : p.phi2;
    const double sideband = (mode == 1) ? -nu_prime : +nu_prime;

    const double cos_tc = std::cos(p.theta_c);
    if (std::abs(cos_tc) > 1e-9 && std::abs(std::cos(phi)) < 1e-6)
        throw ConfigError(fmt::format(
            "phi{} sits on a standing-wave node (cos(phi) ~ 0) with "
            "cos(theta_c) != 0; the tan(phi) coupling term diverges",
            mode));

    const double half_gamma = (barred ? -0.5 : 0.5) * p.gamma;
    const Complex d_sideband(p.delta + sideband, half_gamma);
    const Complex d_carrier(p.delta, 0.5 * p.gamma);
    // Denominators cannot vanish for gamma > 0 or |delta| > nu'.
    const Complex bracket = std::cos(p.theta_l) / d_sideband +
                            Complex(0, 1) * std::tan(phi) * cos_tc / d_carrier;
    return p.eta * p.omega_rabi * g * std::cos(phi) * bracket;
}

std::pair<double, double> theta_sigma(Complex chi1, Complex chi2) {
    const double m1 = std::norm(chi1);
    const double m2 = std::norm(chi2);
    if (m2 <= m1)
        throw PhysicsError("amplification regime: no periodic dynamics "
                           "(requires |chi2| > |chi1|)");
    const double theta = std::sqrt(m2 - m1);
    const double sigma = std::sqrt(std::abs(m2 + m1 - 2.0 * chi1 * chi2));
    return {theta, sigma};
}

RadiativeRates radiative_rates(const SystemParams& p, double nu_prime) {
    RadiativeRates r;
    const double g24 = sqr(p.gamma) / 4.0;
    const double dm = p.delta - nu_prime;  // blue-sideband denominator
    const double dp = p.delta + nu_prime;  // red-sideband denominator
    const double half_gamma = p.gamma / 2.0;
    const double mech = sqr(p.eta * p.omega_rabi * std::cos(p.theta_l));

    r.kappa_1l = half_gamma * sqr(p.g1 * std::cos(p.phi1)) / (g24 + sqr(dm));
    r.kappa_2l = half_gamma * sqr(p.g2 * std::cos(p.phi2)) / (g24 + sqr(dp));
    r.kappa_1b = half_gamma * mech / (g24 + sqr(dm));
    r.kappa_2b = half_gamma * mech / (g24 + sqr(dp));

    const double root = std::sqrt(half_gamma);
    r.kbar_1l = Complex(0, -1) * root * p.g1 * std::cos(p.phi1) /
                Complex(half_gamma, dm);
    r.kbar_2l = Complex(0, 1) * root * p.g2 * std::cos(p.phi2) /
                Complex(half_gamma, -dp);
    r.kbar_1b = root * p.eta * p.omega_rabi * std::cos(p.theta_l) /
                Complex(half_gamma, dm);
    r.kbar_2b = root * p.eta * p.omega_rabi * std::cos(p.theta_l) /
                Complex(half_gamma, -dp);
    return r;
}

StarkShifts stark_shifts(const SystemParams& p, double nu_prime) {
    StarkShifts s;
    const double g24 = sqr(p.gamma) / 4.0;
    const double dm = p.delta - nu_prime;
    const double dp = p.delta + nu_prime;
    s.delta_1l = dm * sqr(p.g1 * std::cos(p.phi1)) / (g24 + sqr(dm));
    s.delta_2l = dp * sqr(p.g2 * std::cos(p.phi2)) / (g24 + sqr(dp));
    s.delta_b = nu_shift(p, nu_prime);
    return s;
}

std::pair<double, double> resonance_detunings(double delta_1l, double delta_2l,
                                              double nu_prime) {
    return {delta_1l + nu_prime, delta_2l - nu_prime};
}

double thermal_occupation(double kappa_1b, double kappa_2b) {
    if (kappa_2b <= kappa_1b)
        throw PhysicsError("heating regime: kappa_2b <= kappa_1b, "
                           "no radiative steady state for the motion");
    return kappa_1b / (kappa_2b - kappa_1b);
}

DerivedCouplings derive_couplings(const SystemParams& p, NuPrimeMode mode) {
    DerivedCouplings dc;
    dc.nu_prime = effective_trap_frequency(p, mode);
    dc.chi1 = coupling_chi(p, dc.nu_prime, 1);
    dc.chi2 = coupling_chi(p, dc.nu_prime, 2);
    dc.chi1_bar = coupling_chi(p, dc.nu_prime, 1, /*barred=*/true);
    dc.chi2_bar = coupling_chi(p, dc.nu_prime, 2, /*barred=*/true);
    std::tie(dc.theta_big, dc.sigma_big) = theta_sigma(dc.chi1, dc.chi2);
    dc.rates = radiative_rates(p, dc.nu_prime);
    dc.shifts = stark_shifts(p, dc.nu_prime);
    std::tie(dc.delta_1, dc.delta_2) =
        resonance_detunings(dc.shifts.delta_1l, dc.shifts.delta_2l, dc.nu_prime);
    // No spontaneous emission means no radiative thermalization at all.
    dc.n_th = (dc.rates.kappa_2b == 0.0 && dc.rates.kappa_1b == 0.0)
                  ? 0.0
                  : thermal_occupation(dc.rates.kappa_1b, dc.rates.kappa_2b);
    dc.n_th_approx = std::abs(p.delta) / (4.0 * dc.nu_prime);
    return dc;
}

}  // namespace cavsq
