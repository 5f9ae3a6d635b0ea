#include "viscowave/asymptotics.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace viscowave {

namespace {

using std::numbers::pi;

template <class... Ts>
struct overloaded : Ts... {
    using Ts::operator()...;
};

void require_unit_open(double v, const char* what) {
    if (!(v > 0.0 && v < 1.0)) throw std::invalid_argument(what);
}

}  // namespace

double AsymptoticPrediction::at(double omega) const { return coefficient * std::pow(omega, exponent); }

AsymptoticPrediction highfreq_attenuation(double alpha, double l) {
    require_unit_open(alpha, "highfreq_attenuation: alpha must lie in (0,1)");
    return {Regime::High, 1.0 - alpha, (1.0 - alpha) * pi / (2.0 * std::cos(alpha * pi / 2.0)) * l,
            "omega -> infinity, nu([0,r]) ~ l r^(1-alpha)"};
}

AsymptoticPrediction highfreq_dispersion(double alpha, double l) {
    require_unit_open(alpha, "highfreq_dispersion: alpha must lie in (0,1)");
    return {Regime::High, 1.0 - alpha, (1.0 - alpha) * pi / (2.0 * std::sin(alpha * pi / 2.0)) * l,
            "omega -> infinity, nu([0,r]) ~ l r^(1-alpha)"};
}

double highfreq_attenuation(double alpha, double l, double omega) { return highfreq_attenuation(alpha, l).at(omega); }
double highfreq_dispersion(double alpha, double l, double omega) { return highfreq_dispersion(alpha, l).at(omega); }

LowFreqPrediction lowfreq_prediction(double gamma, double l) {
    require_unit_open(gamma, "lowfreq_prediction: gamma must lie in (0,1)");
    const char* note = "omega -> 0, nu([0,r]) ~ l r^gamma";
    LowFreqPrediction out;
    out.attenuation = {Regime::Low, gamma, gamma * pi / (2.0 * std::sin(gamma * pi / 2.0)) * l, note};
    out.dispersion = {Regime::Low, gamma, gamma * pi / (2.0 * std::cos(gamma * pi / 2.0)) * l, note};
    return out;
}

std::optional<AsymptoticPrediction> model_attenuation_asymptote(const RelaxationModel& model, Regime regime) {
    using Opt = std::optional<AsymptoticPrediction>;
    const bool high = regime == Regime::High;
    return std::visit(
        overloaded{
            [&](const ColeCole& m) -> Opt {
                const double c0 = std::sqrt(m.G_inf / m.rho);
                const double s = std::sin(m.alpha * pi / 2.0);
                if (high) {
                    const double ci = std::sqrt(m.a) * c0;
                    const double k = (m.a - 1.0) / (2.0 * m.a * ci * m.tau) * s;
                    return AsymptoticPrediction{regime, 1.0 - m.alpha, k * std::pow(m.tau, 1.0 - m.alpha), "tau omega >> 1"};
                }
                const double k = (m.a - 1.0) / (2.0 * c0 * m.tau) * s;
                return AsymptoticPrediction{regime, 1.0 + m.alpha, k * std::pow(m.tau, 1.0 + m.alpha), "tau omega << 1"};
            },
            [&](const StandardLinearSolid& m) -> Opt {
                const double c0 = std::sqrt(m.G_inf / m.rho);
                if (high) {
                    const double ci = std::sqrt(m.a) * c0;
                    return AsymptoticPrediction{regime, 0.0, (m.a - 1.0) / (2.0 * m.a * ci * m.tau), "tau omega >> 1"};
                }
                return AsymptoticPrediction{regime, 2.0, (m.a - 1.0) * m.tau / (2.0 * c0), "tau omega << 1"};
            },
            [&](const HavriliakNegami& m) -> Opt {
                const double ci = std::sqrt(m.G_0 / m.rho);
                if (high) {
                    const double e = 1.0 - m.alpha * m.gamma;
                    const double k = m.b / (2.0 * ci * m.tau) * std::sin(pi * m.alpha * m.gamma / 2.0);
                    return AsymptoticPrediction{regime, e, k * std::pow(m.tau, e), "tau omega >> 1"};
                }
                if (m.b >= 1.0) return std::nullopt;
                const double c0 = ci * std::sqrt(1.0 - m.b);
                const double k = m.b * m.gamma / (2.0 * c0 * (1.0 - m.b) * m.tau) * std::sin(pi * m.alpha / 2.0);
                return AsymptoticPrediction{regime, 1.0 + m.alpha, k * std::pow(m.tau, 1.0 + m.alpha), "tau omega << 1"};
            },
            [&](const ColeDavidson& m) -> Opt {
                const double ci = std::sqrt(m.G_0 / m.rho);
                if (high) {
                    const double e = 1.0 - m.gamma;
                    const double k = m.b / (2.0 * ci * m.tau) * std::sin(pi * m.gamma / 2.0);
                    return AsymptoticPrediction{regime, e, k * std::pow(m.tau, e), "tau omega >> 1"};
                }
                if (m.b >= 1.0) return std::nullopt;
                const double c0 = ci * std::sqrt(1.0 - m.b);
                return AsymptoticPrediction{regime, 2.0, m.gamma * m.b * m.tau / (2.0 * c0 * (1.0 - m.b)), "tau omega << 1"};
            },
            [&](const PowerLawMeasure& m) -> Opt {
                // exact at every frequency
                auto p = lowfreq_prediction(m.gamma_exp, m.a_coef).attenuation;
                p.regime = regime;
                p.validity = "all omega";
                return p;
            },
            [&](const FiniteBand& m) -> Opt {
                if (high) return AsymptoticPrediction{regime, 0.0, m.C * (m.b_hi - m.a_lo), "omega >> b_hi"};
                if (m.a_lo > 0.0) {
                    const double k = m.C * (1.0 / m.a_lo - 1.0 / m.b_hi);
                    return AsymptoticPrediction{regime, 2.0, k, "omega << a_lo"};
                }
                return AsymptoticPrediction{regime, 1.0, m.C * pi / 2.0, "omega << b_hi"};
            },
        },
        model);
}

std::string to_string(WavefrontTag tag) {
    switch (tag) {
        case WavefrontTag::DiscontinuityPossible: return "discontinuity-possible";
        case WavefrontTag::Smoothed: return "smoothed";
        case WavefrontTag::NoWavefront: return "no-wavefront";
    }
    return "unknown";
}

WavefrontRegime strongly_singular_regime(double alpha) {
    require_unit_open(alpha, "strongly_singular_regime: alpha must lie in (0,1)");
    WavefrontRegime w;
    w.tag = WavefrontTag::NoWavefront;
    w.alpha = alpha;
    w.gamma = 1.0 - alpha / 2.0;
    w.c_alpha = pi * alpha / std::sin(pi * alpha);
    return w;
}

WavefrontRegime classify_wavefront(const SpectralMeasure& m, double c_inf) {
    if (std::isinf(c_inf)) {
        // h ~ r^{-sigma} means nu([0,r]) ~ r^{1-sigma} = r^{1-alpha/2}
        const double alpha = 2.0 * m.tail_exponent_high;
        if (m.high_tail == HighTail::Algebraic && alpha > 0.0 && alpha < 1.0) return strongly_singular_regime(alpha);
        WavefrontRegime w;
        w.tag = WavefrontTag::NoWavefront;
        return w;
    }
    WavefrontRegime w;
    w.tag = m.all_moments_finite() ? WavefrontTag::DiscontinuityPossible : WavefrontTag::Smoothed;
    return w;
}

WavefrontRegime classify_wavefront(const RelaxationModel& model) {
    return classify_wavefront(measure_of(model), c_inf(model));
}

std::complex<double> beta_moment_series(const SpectralMeasure& m, int N, std::complex<double> p) {
    if (N < 0) throw std::invalid_argument("beta_moment_series: N must be >= 0");
    if (m.zero) return 0.0;
    if (!m.all_moments_finite()) throw std::domain_error("beta_moment_series: measure has infinite moments");
    std::complex<double> sum = 0.0;
    std::complex<double> q = 1.0;
    for (int n = 0; n <= N; ++n) {
        sum += q * *measure_moment(m, n);
        q *= -1.0 / p;
    }
    return sum;
}

double loglog_slope(const std::function<double(double)>& f, double omega_lo, double decades, int npts) {
    if (!(omega_lo > 0.0) || !(decades > 0.0) || npts < 2) throw std::invalid_argument("loglog_slope: bad window");
    double sx = 0, sy = 0, sxx = 0, sxy = 0;
    const double l0 = std::log(omega_lo);
    const double span = decades * std::log(10.0);
    for (int i = 0; i < npts; ++i) {
        const double x = l0 + span * i / (npts - 1);
        const double v = f(std::exp(x));
        if (!(v > 0.0)) throw std::domain_error("loglog_slope: function must be positive");
        const double y = std::log(v);
        sx += x;
        sy += y;
        sxx += x * x;
        sxy += x * y;
    }
    const double n = npts;
    return (n * sxy - sx * sy) / (n * sxx - sx * sx);
}

}  // namespace viscowave
