#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "cavsq/params.hpp"

namespace cavsq {

// Closed-form spectrum in the limit where radiative losses and trap heating
// are negligible and both cavity modes decay at the same rate kappa.
double s_analytic(double omega, double theta, double sigma, double kappa);

// Same with kappa = theta substituted (the flat, broadband optimum).
double s_flat(double omega, double theta, double sigma);

// The three poles of the analytic spectrum in the lower half-plane.
std::array<Complex, 3> poles(double theta, double kappa);

enum class Regime {
    ThreePeak,     // resolved dips at 0 and +-theta
    Merged,        // theta ~ kappa, single broad flat-bottomed band
    SingleNarrow,  // theta <= kappa/2, one narrow dip at 0
};

struct RegimeInfo {
    Regime regime = Regime::ThreePeak;
    bool weakly_resolved = false;  // kappa/2 < theta < kappa
};

std::string to_string(Regime regime);

// Scale-invariant classification by theta/kappa.
RegimeInfo classify_regime(double theta, double kappa);

struct Dip {
    double location = 0.0;
    double value = 0.0;
    std::optional<double> fwhm;  // absent when the dip is cut by the grid edge
};

// Local minima below shot noise, with parabolic location refinement and
// FWHM measured at half depth between 1 and the dip minimum.
std::vector<Dip> extract_minima(const std::vector<double>& omega,
                                const std::vector<double>& s);

struct EntanglementCheck {
    bool duan_satisfied = false;     // s_plus + s_minus < 2
    bool product_satisfied = false;  // s_plus * s_minus < 1
};

EntanglementCheck entanglement_criteria(double s_plus, double s_minus);

// One sampled spectrum with everything the CLI reports about it.
struct SpectrumTrace {
    std::vector<double> omega_grid;
    std::vector<double> s_full_plus;
    std::vector<double> s_full_minus;
    std::vector<double> s_analytic;
    std::vector<double> s_flat;
    std::vector<Dip> minima;  // extracted from s_full_minus
    RegimeInfo regime;
};

}  // namespace cavsq
