#include "cavsq/analysis.hpp"

#include <cmath>

namespace cavsq {

namespace {
double sqr(double x) { return x * x; }
}  // namespace

double s_analytic(double omega, double theta, double sigma, double kappa) {
    const double w2 = sqr(omega);
    const double numer = sqr(kappa) * (sqr(sqr(theta)) - sqr(sqr(sigma)));
    const double denom =
        (sqr(kappa) + w2) * (sqr(w2 - sqr(theta)) + w2 * sqr(kappa));
    return 1.0 - numer / denom;
}

double s_flat(double omega, double theta, double sigma) {
    const double t2 = sqr(theta);
    const double numer = t2 * (sqr(t2) - sqr(sqr(sigma)));
    return 1.0 - numer / (t2 * sqr(t2) + sqr(omega) * sqr(sqr(omega)));
}

std::array<Complex, 3> poles(double theta, double kappa) {
    const Complex i(0, 1);
    const double disc = sqr(theta) - sqr(kappa) / 4.0;
    const Complex root = (disc >= 0) ? Complex(std::sqrt(disc), 0)
                                     : Complex(0, std::sqrt(-disc));
    return {-i * kappa, -i * kappa / 2.0 + root, -i * kappa / 2.0 - root};
}

std::string to_string(Regime regime) {
    switch (regime) {
        case Regime::ThreePeak: return "ThreePeak";
        case Regime::Merged: return "Merged";
        case Regime::SingleNarrow: return "SingleNarrow";
    }
    return "?";
}

RegimeInfo classify_regime(double theta, double kappa) {
    if (std::abs(theta - kappa) <= 0.05 * kappa) return {Regime::Merged, false};
    if (theta > kappa) return {Regime::ThreePeak, false};
    if (theta <= kappa / 2.0) return {Regime::SingleNarrow, false};
    return {Regime::ThreePeak, true};
}

std::vector<Dip> extract_minima(const std::vector<double>& omega,
                                const std::vector<double>& s) {
    std::vector<Dip> dips;
    const std::ptrdiff_t n = std::ssize(s);
    for (std::ptrdiff_t i = 1; i + 1 < n; ++i) {
        if (!(s[i] < s[i - 1] && s[i] < s[i + 1] && s[i] < 1.0)) continue;

        Dip dip;
        dip.value = s[i];
        // Parabolic refinement through the three bracketing samples.
        const double a = s[i - 1], b = s[i], c = s[i + 1];
        const double denom = a - 2.0 * b + c;
        double frac = 0.0;
        if (denom > 0.0) {
            frac = 0.5 * (a - c) / denom;
            dip.value = b - 0.25 * (a - c) * frac;
        }
        dip.location = omega[i] + frac * (omega[i + 1] - omega[i]);

        const double half = 0.5 * (1.0 + dip.value);
        std::ptrdiff_t left = i;
        while (left > 0 && s[left] < half) --left;
        std::ptrdiff_t right = i;
        while (right + 1 < n && s[right] < half) ++right;
        if (s[left] >= half && s[right] >= half) {
            const double xl =
                omega[left] + (half - s[left]) / (s[left + 1] - s[left]) *
                                  (omega[left + 1] - omega[left]);
            const double xr =
                omega[right - 1] + (half - s[right - 1]) /
                                       (s[right] - s[right - 1]) *
                                       (omega[right] - omega[right - 1]);
            dip.fwhm = xr - xl;
        }
        dips.push_back(dip);
    }
    return dips;
}

EntanglementCheck entanglement_criteria(double s_plus, double s_minus) {
    return {s_plus + s_minus < 2.0, s_plus * s_minus < 1.0};
}

}  // namespace cavsq
