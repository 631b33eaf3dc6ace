#pragma once

#include <complex>
#include <string>
#include <utility>
#include <vector>

namespace cavsq {

using Complex = std::complex<double>;

// Raw physical inputs. All frequencies and rates are angular (rad/s);
// `delta` is the signed laser-atom detuning (negative = red-detuned).
struct SystemParams {
    double gamma = 0.0;       // atomic linewidth
    double nu = 0.0;          // bare trap frequency
    double eta = 0.0;         // Lamb-Dicke parameter
    double omega_rabi = 0.0;  // laser Rabi frequency (real, >= 0)
    double delta = 0.0;       // laser-atom detuning, signed
    double g1 = 0.0, g2 = 0.0;      // vacuum Rabi couplings
    double phi1 = 0.0, phi2 = 0.0;  // standing-wave position angles
    double theta_l = 0.0;     // angle motional axis <-> laser
    double theta_c = 0.0;     // angle motional axis <-> cavity axis
    double kappa1 = 0.0, kappa2 = 0.0;  // cavity amplitude decay rates
    double kappa_b = 0.0;     // phenomenological motional coupling to trap noise
    double nbar = 0.0;        // thermal occupation of the motional reservoir
};

// Checks hard invariants (throws ConfigError) and returns a list of
// non-fatal regime warnings: the model formulas stay evaluable at regime
// boundaries, so those are only reported.
std::vector<std::string> validate(const SystemParams& p);

enum class NuPrimeMode {
    ClosedForm,  // one-shot evaluation with the bare trap frequency inside the shift
    FixedPoint,  // self-consistent iteration of the shift equation
};

// Renormalized trap frequency nu' (trap frequency plus the motional
// a.c.-Stark shift of the laser). FixedPoint iterates until
// |change| < 1e-9 * nu; throws PhysicsError if it does not settle.
double effective_trap_frequency(const SystemParams& p,
                                NuPrimeMode mode = NuPrimeMode::ClosedForm);

// Raman coupling between cavity mode `mode` (1 or 2) and the motion.
// `barred` flips the sign of the i*gamma/2 term in the sideband denominator
// (the coefficient entering the motional equation). Throws ConfigError when
// phi_j sits on a standing-wave node with cos(theta_c) != 0.
Complex coupling_chi(const SystemParams& p, double nu_prime, int mode,
                     bool barred = false);

// (Theta, Sigma) from the two couplings. Theta is the frequency of the
// periodic coherent dynamics; requires |chi2| > |chi1| (throws PhysicsError
// otherwise: amplification regime, no periodic dynamics).
std::pair<double, double> theta_sigma(Complex chi1, Complex chi2);

struct RadiativeRates {
    double kappa_1l = 0.0, kappa_2l = 0.0;  // cavity loss via atomic scattering
    double kappa_1b = 0.0, kappa_2b = 0.0;  // motional anti-damping / damping
    Complex kbar_1l, kbar_2l;  // amplitude factors, kappa = |kbar|^2
    Complex kbar_1b, kbar_2b;
};

RadiativeRates radiative_rates(const SystemParams& p, double nu_prime);

struct StarkShifts {
    double delta_1l = 0.0;  // a.c.-Stark shift of cavity mode 1
    double delta_2l = 0.0;  // of cavity mode 2
    double delta_b = 0.0;   // of the vibrational motion
};

StarkShifts stark_shifts(const SystemParams& p, double nu_prime);

// Laser-cavity detunings that put both modes on the motional sidebands.
std::pair<double, double> resonance_detunings(double delta_1l, double delta_2l,
                                              double nu_prime);

// Steady-state occupation from the radiative rates alone. Throws PhysicsError
// when kappa_2b <= kappa_1b (heating regime).
double thermal_occupation(double kappa_1b, double kappa_2b);

// Everything the effective linear model needs, in one bundle.
struct DerivedCouplings {
    double nu_prime = 0.0;
    Complex chi1, chi2, chi1_bar, chi2_bar;
    double theta_big = 0.0;
    double sigma_big = 0.0;
    RadiativeRates rates;
    StarkShifts shifts;
    double delta_1 = 0.0, delta_2 = 0.0;  // resonance detunings
    double n_th = 0.0;
    double n_th_approx = 0.0;  // |delta| / (4 nu'), the textbook shorthand
};

DerivedCouplings derive_couplings(const SystemParams& p,
                                  NuPrimeMode mode = NuPrimeMode::ClosedForm);

}  // namespace cavsq
