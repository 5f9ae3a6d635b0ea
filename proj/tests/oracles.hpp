#pragma once

// Reference values computed independently of the library code paths.

#include <boost/math/quadrature/exp_sinh.hpp>
#include <boost/math/quadrature/tanh_sinh.hpp>
#include <boost/multiprecision/cpp_bin_float.hpp>

#include <cmath>
#include <complex>
#include <functional>
#include <numbers>
#include <vector>


namespace oracle {

using mp50 = boost::multiprecision::cpp_bin_float_50;

// gamma * int_0^inf y^{gamma-1}/(1+y^2) dy in 50 digits, folded onto [0,1]
// by y -> 1/y.
inline double powerlaw_attenuation_constant(double gamma) {
    const mp50 g = gamma;
    boost::math::quadrature::tanh_sinh<mp50> ts;
    auto f = [&g](mp50 y) {
        if (y <= 0) return mp50(0);
        return (pow(y, g - 1) + pow(y, 1 - g)) / (1 + y * y);
    };
    const mp50 v = ts.integrate(f, mp50(0), mp50(1));
    return static_cast<double>(g * v);
}

// e^{x^2} erfc(x), using the continued fraction for large x where the
// product would overflow.
inline double erfcx(double x) {
    if (x < 25.0) return std::exp(x * x) * std::erfc(x);
    long double s = 0.0L;
    for (int k = 60; k >= 1; --k) s = (k / 2.0L) / (x + s);
    return static_cast<double>(1.0L / (std::sqrt(std::numbers::pi_v<long double>) * (x + s)));
}

// int_0^inf e^{-p t} g(t) dt by exp-sinh quadrature in the scaled time p t.
inline double laplace(const std::function<double(double)>& g, double p) {
    boost::math::quadrature::exp_sinh<double> es;
    auto h = [&](double s) { return std::exp(-s) * g(s / p); };
    return es.integrate(h, 1e-12) / p;
}

// Least-squares slope of log f against log x.
inline double fit_slope(const std::vector<double>& x, const std::vector<double>& f) {
    const std::size_t n = x.size();
    double sx = 0, sy = 0, sxx = 0, sxy = 0;
    for (std::size_t i = 0; i < n; ++i) {
        const double lx = std::log(x[i]), ly = std::log(f[i]);
        sx += lx;
        sy += ly;
        sxx += lx * lx;
        sxy += lx * ly;
    }
    return (n * sxy - sx * sy) / (n * sxx - sx * sx);
}

inline std::vector<double> logspace(double lo, double hi, int n) {
    std::vector<double> v(n);
    for (int i = 0; i < n; ++i) v[i] = lo * std::pow(hi / lo, n == 1 ? 0.0 : double(i) / (n - 1));
    return v;
}

}  // namespace oracle
