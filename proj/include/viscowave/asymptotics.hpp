#pragma once

#include <complex>
#include <functional>
#include <optional>
#include <string>

#include "viscowave/measures.hpp"
#include "viscowave/models.hpp"

namespace viscowave {

enum class Regime { Low, High };

/// quantity ~ coefficient * omega^exponent in the stated regime.
struct AsymptoticPrediction {
    Regime regime = Regime::High;
    double exponent = 0.0;
    double coefficient = 0.0;
    std::string validity;

    double at(double omega) const;
};

// nu([0,r]) ~ l r^{1-alpha} at infinity, 0 < alpha < 1, l constant.
AsymptoticPrediction highfreq_attenuation(double alpha, double l = 1.0);
AsymptoticPrediction highfreq_dispersion(double alpha, double l = 1.0);
double highfreq_attenuation(double alpha, double l, double omega);
double highfreq_dispersion(double alpha, double l, double omega);

struct LowFreqPrediction {
    AsymptoticPrediction attenuation;
    AsymptoticPrediction dispersion;
};

/// nu([0,r]) ~ l r^gamma at 0, 0 < gamma < 1. D/A tends to tan(gamma pi/2).
LowFreqPrediction lowfreq_prediction(double gamma, double l = 1.0);

/// Leading-order attenuation of a shipped model, derived from its closed-form
/// beta. Empty when the model has no power-law asymptote in that regime.
std::optional<AsymptoticPrediction> model_attenuation_asymptote(const RelaxationModel& model, Regime regime);

enum class WavefrontTag { DiscontinuityPossible, Smoothed, NoWavefront };

std::string to_string(WavefrontTag tag);

struct WavefrontRegime {
    WavefrontTag tag = WavefrontTag::DiscontinuityPossible;
    // Strongly singular case only: G(t) ~ t^{-alpha}, kappa ~ p^gamma.
    std::optional<double> alpha;
    std::optional<double> gamma;
    std::optional<double> c_alpha;
};

/// Decided from tail metadata only. An infinite wavefront speed means a
/// strongly singular relaxation modulus; then nu([0,r]) ~ r^{1 - alpha/2}.
WavefrontRegime classify_wavefront(const SpectralMeasure& m, double c_inf);
WavefrontRegime classify_wavefront(const RelaxationModel& model);
/// Regime for a relaxation measure mu([0,r]) ~ r^alpha at infinity.
WavefrontRegime strongly_singular_regime(double alpha);

/// sum_{n=0}^{N} (-1)^n a_n p^{-n}; requires every moment to be finite.
std::complex<double> beta_moment_series(const SpectralMeasure& m, int N, std::complex<double> p);

/// Least-squares slope of log f against log omega on npts log-spaced points
/// covering [omega_lo, omega_lo * 10^decades].
double loglog_slope(const std::function<double(double)>& f, double omega_lo, double decades = 2.0, int npts = 50);

}  // namespace viscowave
