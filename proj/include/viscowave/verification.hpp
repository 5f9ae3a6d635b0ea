#pragma once

#include <complex>
#include <functional>
#include <span>
#include <string>
#include <vector>

#include "viscowave/measures.hpp"
#include "viscowave/models.hpp"
#include "viscowave/wavenumber.hpp"

namespace viscowave {

/// Outcome of a sampled property check. A pass means no violation was found
/// on the grid, not that the property is proven.
struct CheckReport {
    std::string name;
    bool pass = true;
    double worst_violation = 0.0;
    std::string location;
    std::string grid;
    double tolerance = 0.0;

    std::string to_json() const;
};

struct HalfPlaneGrid {
    std::vector<cplx> points;
    std::string description;
};

struct RealAxisGrid {
    std::vector<double> points;  ///< increasing
    std::string description;
};

/// Radii log-spaced over [center 10^-decades/2, center 10^decades/2], angles
/// strictly inside (0, pi).
HalfPlaneGrid log_polar_grid(double center, double decades, int n_radii, int n_angles);
RealAxisGrid real_axis_grid(double center, double decades, int n);

/// Im Q(p) >= 0 on the half-plane grid and Q(p)/p >= 0 on the positive axis.
CheckReport cm_check_relaxation(const ComplexWaveNumber& w, const HalfPlaneGrid& hp, const RealAxisGrid& ra);
CheckReport cm_check_relaxation(const RelaxationModel& model, const HalfPlaneGrid& hp, const RealAxisGrid& ra);

/// Pick-Nevanlinna sampling test: Im f >= 0 on the grid, f real non-negative
/// and non-decreasing on the positive axis.
CheckReport cbf_check(const std::string& name, const std::function<cplx(cplx)>& f, const HalfPlaneGrid& hp,
                      const RealAxisGrid& ra);

/// cbf_check on kappa, kappa^2/p and Q.
std::vector<CheckReport> admissibility_battery(const ComplexWaveNumber& w, const HalfPlaneGrid& hp,
                                               const RealAxisGrid& ra);

struct KKResult {
    double lhs = 0.0;  ///< A(omega) - A(omega0)
    double rhs = 0.0;  ///< principal-value integral of the dispersion function
    double residual = 0.0;
};

/// Kramers-Kronig relation with one subtraction. omega != omega0, both > 0.
KKResult kk_check(const SpectralMeasure& m, double omega, double omega0);
double kk_residual(const SpectralMeasure& m, double omega, double omega0);

/// f(t) = int (1 - e^{-t r}) h(r)/r dr, the primitive of the Laplace
/// transform of nu. t >= 0.
double bernstein_primitive_f(const SpectralMeasure& m, double t);

struct OmegaRect {
    double re_min, re_max, im_min, im_max;
};

/// Rectangle [-1e3 s, 1e3 s] x [1e-3 s, 1e3 s] in the omega plane.
OmegaRect default_omega_rect(double scale);

/// Winding number of g along the boundary of the rectangle (counter-clockwise).
int winding_number(const std::function<cplx(cplx)>& g, const OmegaRect& rect);

/// g(omega) must not vanish in the upper omega half-plane: sampled |g| > 0
/// inside the rectangle and zero winding along its boundary.
CheckReport minimum_phase_check(const std::string& name, const std::function<cplx(cplx)>& g, const OmegaRect& rect);
/// Applied to omega -> kappa(-i omega).
CheckReport minimum_phase_check(const ComplexWaveNumber& w, const OmegaRect& rect);

struct PaleyWienerResult {
    double integral = 0.0;      ///< int |ln|M|| /(1 + omega^2) over the real line
    double tail_bound = 0.0;    ///< estimate of the part beyond the last sample
    double growth_exponent = 0.0;
    bool finite = true;
};

/// Samples of |M| on a non-negative increasing grid; M is taken even in omega.
PaleyWienerResult paley_wiener_diagnostic(std::span<const double> abs_m, std::span<const double> omega);

/// Divided differences of f on the grid up to order signs.size()-1; the n-th
/// must have sign signs[n]. CM functions use +,-,+,-; Bernstein functions
/// use +,+,-,+. Values carry relative noise `noise`, which is propagated
/// through the difference table and tolerated.
CheckReport divided_difference_check(const std::string& name, std::span<const double> x, std::span<const double> f,
                                     std::span<const int> signs, double noise = 1e-13);

}  // namespace viscowave
