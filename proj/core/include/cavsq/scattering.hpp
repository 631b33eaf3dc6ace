#pragma once

#include "cavsq/params.hpp"

namespace cavsq {

// Scattering-matrix amplitudes and rates. These are diagnostics and an
// independent cross-check of the effective-model coefficients; the sideband
// frequency is always an explicit argument so the caller controls whether
// the bare or the renormalized trap frequency is used.

struct SpontaneousAmplitudes {
    Complex t0;       // carrier
    Complex t_plus;   // blue sideband (phonon created)
    Complex t_minus;  // red sideband (phonon annihilated)
    double theta_ks = 0.0;  // representative emission-direction angle
};

// Laser photon scattered into free space. `nu_ref` is the sideband splitting
// used in the denominators (defaults to the bare trap frequency).
SpontaneousAmplitudes spontaneous_amplitudes(const SystemParams& p,
                                             double theta_ks);
SpontaneousAmplitudes spontaneous_amplitudes(const SystemParams& p,
                                             double theta_ks, double nu_ref);

// Rate of |n> -> |n'> by spontaneous scattering; zero outside |n - n'| <= 1.
double spontaneous_rate(const SpontaneousAmplitudes& amps, double gamma, int n,
                        int n_prime);

// Decoherence rate of the motional state from the sideband spontaneous
// processes; `alpha` summarizes the angular dispersion of the emitted photons.
double motional_decoherence_rate(const SystemParams& p, double alpha);

struct CavityAmplitudes {
    Complex t0;
    Complex t_plus;
    Complex t_minus;
};

// Laser photon scattered into cavity mode j (1 or 2).
CavityAmplitudes cavity_amplitudes(const SystemParams& p, int j, double nu_ref);

// Rate of scattering a laser photon into mode j while changing the motional
// state |n> -> |n'>, for laser-cavity detuning delta_j.
double cavity_scattering_rate(const SystemParams& p, int j, int n, int n_prime,
                              double delta_j, double nu_ref);

// Effective cavity loss from reabsorption of a cavity photon followed by
// spontaneous emission, with m_j photons in mode j (assumes tan(phi_j) = 0).
double cavity_spontaneous_loss(const SystemParams& p, int j, int m_j,
                               double delta_j);

// Per-phonon trap-frequency shift and per-photon cavity-mode shift.
double stark_shift_per_phonon(const SystemParams& p, double nu_ref);
double stark_shift_per_photon(const SystemParams& p, int j, double delta_j);

}  // namespace cavsq
