#pragma once

#include <functional>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "viscowave/models.hpp"
#include "viscowave/quadrature.hpp"

namespace viscowave {

enum class HighTail {
    Compact,    ///< bounded support: every moment is finite
    Algebraic,  ///< h(r) = O(r^{-sigma}) at infinity
};

/// Dispersion-attenuation spectral measure nu(dr) = h(r) dr.
///
/// The density is exposed as an evaluator plus the metadata the quadrature
/// engine needs to place nodes: support, tail exponents, interior
/// breakpoints and an inverse-square-root singularity flag at r_lo.
struct SpectralMeasure {
    std::string name;
    std::function<double(double)> density;  ///< r [1/s] -> h(r); only called on [r_lo, r_hi]
    double r_lo = 0.0;
    double r_hi = kInf;
    HighTail high_tail = HighTail::Compact;
    double tail_exponent_high = 0.0;  ///< sigma, meaningful for HighTail::Algebraic
    double tail_exponent_low = 0.0;   ///< h(r) ~ r^k as r -> 0 when r_lo = 0
    bool D_finite = true;             ///< int h(r)/r dr < infinity
    bool singular_lo = false;         ///< h ~ (r - r_lo)^{-1/2} at the lower end
    std::vector<double> breakpoints;  ///< interior points where h is not smooth
    bool zero = false;

    /// h(r), zero outside the support.
    double operator()(double r) const;

    bool all_moments_finite() const { return zero || high_tail == HighTail::Compact; }
};

// Closed-form densities of the analytic models. r >= 0 in 1/s.
double cc_spectral_density(const ColeCole& model, double r);
double sls_spectral_density(const StandardLinearSolid& model, double r);
double hn_spectral_density(const HavriliakNegami& model, double r);
double cd_spectral_density(const ColeDavidson& model, double r);

SpectralMeasure make_powerlaw_measure(double a_coef, double gamma_exp);
SpectralMeasure make_finiteband_measure(double C, double a_lo, double b_hi);
SpectralMeasure make_zero_measure();

/// The dispersion-attenuation measure of any shipped model.
SpectralMeasure measure_of(const RelaxationModel& model);

/// Integral of kernel(r) h(r) over the support. Extra break points (e.g. the
/// peak of the kernel) are honoured; semi-infinite pieces are mapped to
/// log r and closed with an analytic power-law tail estimate.
quad::Result integrate_density(const SpectralMeasure& m, const std::function<double(double)>& kernel,
                               std::span<const double> extra_breaks = {}, double rel_tol = 1e-12);

/// D = int h(r)/r dr; empty when infinite.
std::optional<double> measure_D_constant(const SpectralMeasure& m);

/// a_n = int r^n h(r) dr; empty when infinite.
std::optional<double> measure_moment(const SpectralMeasure& m, int n);

}  // namespace viscowave
