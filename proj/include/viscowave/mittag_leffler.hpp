#pragma once

#include "viscowave/models.hpp"

namespace viscowave {

/// How a Mittag-Leffler value was obtained.
enum class MLMethod { Closed, PowerSeries, Asymptotic, Integral, Multiprecision };

struct MLValue {
    double value = 0.0;
    double rel_error = 0.0;  ///< estimated
    MLMethod method = MLMethod::Closed;
};

/// E_{alpha,beta}(z) for real z <= 0, 0 < alpha <= 1, beta > 0, to 1e-8
/// relative. The power series and the asymptotic expansion are both tried
/// and the one with the smaller error estimate is kept; where neither
/// reaches the tolerance (small alpha, moderate |z|) an integral
/// representation (beta = 1) or a 50-digit series takes over. Throws
/// NumericalError with the achieved accuracy otherwise.
MLValue ml_detailed(double alpha, double beta, double z);
double ml(double alpha, double beta, double z);

/// Cole-Cole relaxation modulus G_inf [1 + (a-1) E_alpha(-(t/tau)^alpha)], t > 0.
double relaxation_modulus_cc(const ColeCole& model, double t);

}  // namespace viscowave
