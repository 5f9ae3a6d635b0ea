#include "viscowave/mittag_leffler.hpp"

#include <boost/math/special_functions/gamma.hpp>
#include <boost/math/special_functions/sin_pi.hpp>
#include <boost/multiprecision/cpp_bin_float.hpp>
#include <cmath>
#include <limits>
#include <numbers>
#include <vector>
#include <stdexcept>

#include "viscowave/errors.hpp"
#include "viscowave/quadrature.hpp"

namespace viscowave {

namespace {

constexpr double kTol = 1e-8;

bool is_nonpositive_integer(double v) { return v <= 0.0 && v == std::floor(v); }

// Asymptotic expansion -sum_{k>=1} z^{-k}/Gamma(beta - alpha k), truncated
// before the minimum of its envelope. For w = beta - alpha k < 0 the
// reflection 1/Gamma(w) = Gamma(1-w) sin(pi w)/pi is used; the envelope drops
// the sine so terms that dip near the poles of Gamma cannot fake convergence.
MLValue ml_asymptotic(double alpha, double beta, double x) {
    MLValue out;
    out.method = MLMethod::Asymptotic;
    const double lx = std::log(x);
    std::vector<double> terms;
    double best_env = std::numeric_limits<double>::infinity();
    std::size_t best_k = 0;
    for (int k = 1; k < 5000; ++k) {
        const double w = beta - alpha * k;
        double lenv, sgn;
        if (w > 0.0) {
            lenv = -k * lx - std::lgamma(w);
            sgn = std::tgamma(w) > 0.0 ? 1.0 : -1.0;
        } else {
            lenv = -k * lx + std::lgamma(1.0 - w) - std::log(std::numbers::pi);
            sgn = is_nonpositive_integer(w) ? 0.0 : boost::math::sin_pi(w);
        }
        const double env = std::exp(lenv);
        // z^{-k} = (-1)^k x^{-k}, and the series carries an overall minus sign
        terms.push_back(env * sgn * ((k % 2 == 0) ? -1.0 : 1.0));
        if (env < best_env) {
            best_env = env;
            best_k = terms.size() - 1;
        }
        if (env > 1e8 * best_env || env == 0.0) break;
    }
    double sum = 0.0;
    for (std::size_t i = 0; i < best_k; ++i) sum += terms[i];
    out.value = sum;
    out.rel_error = sum != 0.0 ? best_env / std::abs(sum) : std::numeric_limits<double>::infinity();
    return out;
}

MLValue ml_power_series(double alpha, double beta, double x) {
    MLValue out;
    out.method = MLMethod::PowerSeries;
    const long double lx = std::log(static_cast<long double>(x));
    long double sum = 0.0L;
    long double max_term = 0.0L;
    long double last = 0.0L;
    int k = 0;
    for (; k < 20000; ++k) {
        const long double arg = alpha * static_cast<long double>(k) + beta;
        const long double lmag = k * lx - std::lgamma(arg);
        if (lmag > 11000.0L) break;
        const long double mag = std::exp(lmag);
        const long double term = (k % 2 == 0) ? mag : -mag;
        sum += term;
        max_term = std::max(max_term, mag);
        last = mag;
        if (k > 2 && arg > 2.0L && mag < 1e-22L * std::abs(sum) && mag < 1e-22L * max_term) break;
    }
    const long double eps = std::numeric_limits<long double>::epsilon();
    // lgamma and exp each contribute a few ulps of relative error per term
    const long double round = max_term * eps * 8.0L * std::sqrt(static_cast<long double>(k + 1));
    out.value = static_cast<double>(sum);
    const long double err = round + last;
    out.rel_error = sum != 0.0L ? static_cast<double>(err / std::abs(sum)) : std::numeric_limits<double>::infinity();
    return out;
}

// E_alpha(-t^alpha) = int_0^inf e^{-r t} K(r) dr with
// K(r) = (1/pi) r^{alpha-1} sin(alpha pi)/(r^{2 alpha} + 2 r^alpha cos(alpha pi) + 1).
// With s = r^alpha the integrand becomes smooth at 0; the half-line s > 1 is
// mapped to v = 1/s in (0, 1].
MLValue ml_integral(double alpha, double x) {
    MLValue out;
    out.method = MLMethod::Integral;
    const double t = std::pow(x, 1.0 / alpha);
    const double sa = std::sin(alpha * std::numbers::pi);
    const double ca = std::cos(alpha * std::numbers::pi);
    const double pref = sa / (std::numbers::pi * alpha);
    auto inner = [&](double s) {
        if (s <= 0.0) return pref / 1.0;
        return pref * std::exp(-std::pow(s, 1.0 / alpha) * t) / (s * s + 2.0 * s * ca + 1.0);
    };
    auto outer = [&](double v) {
        if (v <= 0.0) return 0.0;
        return pref * std::exp(-std::pow(v, -1.0 / alpha) * t) / (1.0 + 2.0 * v * ca + v * v);
    };
    quad::Options opt;
    opt.rel_tol = 1e-12;
    // the exponential cut-off sits near s = 1/x
    const double s_knee = std::min(1.0, 1.0 / x);
    auto r1 = quad::integrate(inner, 0.0, s_knee, opt);
    auto r2 = s_knee < 1.0 ? quad::integrate(inner, s_knee, 1.0, opt) : quad::Result{};
    auto r3 = quad::integrate(outer, 0.0, 1.0, opt);
    out.value = r1.value + r2.value + r3.value;
    const double err = r1.abs_error + r2.abs_error + r3.abs_error;
    out.rel_error = out.value != 0.0 ? err / std::abs(out.value) : std::numeric_limits<double>::infinity();
    return out;
}

MLValue ml_multiprecision(double alpha, double beta, double x) {
    using mp = boost::multiprecision::cpp_bin_float_50;
    MLValue out;
    out.method = MLMethod::Multiprecision;
    const mp X = x, A = alpha, B = beta;
    const mp lx = log(X);
    mp sum = 0, max_term = 0, last = 0;
    for (int k = 0; k < 20000; ++k) {
        const mp arg = A * k + B;
        const mp mag = exp(k * lx - boost::math::lgamma(arg));
        sum += (k % 2 == 0) ? mag : mp(-mag);
        if (mag > max_term) max_term = mag;
        last = mag;
        if (k > 2 && arg > 2 && mag < mp(1e-30) * abs(sum) && mag < mp(1e-30) * max_term) break;
    }
    const mp eps = std::numeric_limits<mp>::epsilon();
    const mp err = max_term * eps * 1000 + last;
    out.value = sum.convert_to<double>();
    out.rel_error = sum != 0 ? mp(err / abs(sum)).convert_to<double>() : std::numeric_limits<double>::infinity();
    return out;
}

}  // namespace

MLValue ml_detailed(double alpha, double beta, double z) {
    if (!(alpha > 0.0 && alpha <= 1.0)) throw std::invalid_argument("ml: alpha must lie in (0,1]");
    if (!(beta > 0.0) || !std::isfinite(beta)) throw std::invalid_argument("ml: beta must be > 0");
    if (!(z <= 0.0) || !std::isfinite(z)) throw std::invalid_argument("ml: z must be a finite value <= 0");
    if (z == 0.0) return {1.0 / std::tgamma(beta), 0.0, MLMethod::Closed};
    if (alpha == 1.0 && beta == 1.0) return {std::exp(z), 0.0, MLMethod::Closed};
    const double x = -z;

    MLValue best = ml_power_series(alpha, beta, x);
    if (best.rel_error > kTol * 1e-3) {
        const MLValue asym = ml_asymptotic(alpha, beta, x);
        if (asym.rel_error < best.rel_error) best = asym;
    }
    if (best.rel_error <= kTol) return best;
    if (beta == 1.0) {
        const MLValue in = ml_integral(alpha, x);
        if (in.rel_error < best.rel_error) best = in;
        if (best.rel_error <= kTol) return best;
    }
    const MLValue hp = ml_multiprecision(alpha, beta, x);
    if (hp.rel_error < best.rel_error) best = hp;
    if (best.rel_error <= kTol) return best;
    throw NumericalError("ml: tolerance 1e-8 not reached", best.rel_error);
}

double ml(double alpha, double beta, double z) { return ml_detailed(alpha, beta, z).value; }

double relaxation_modulus_cc(const ColeCole& model, double t) {
    if (!(t > 0.0)) throw std::invalid_argument("relaxation_modulus_cc: t must be > 0");
    const double z = -std::pow(t / model.tau, model.alpha);
    return model.G_inf * (1.0 + (model.a - 1.0) * ml(model.alpha, 1.0, z));
}

}  // namespace viscowave
