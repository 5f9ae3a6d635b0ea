#pragma once

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "viscowave/measures.hpp"
#include "viscowave/models.hpp"

namespace viscowave {

/// A(omega) = omega^2 int h(r)/(omega^2 + r^2) dr in 1/m. Even in omega.
/// Throws NumericalError when the quadrature cannot reach 1e-8 relative.
double attenuation(const SpectralMeasure& m, double omega);

/// D(omega) = omega int r h(r)/(omega^2 + r^2) dr in 1/m. Odd in omega.
double dispersion(const SpectralMeasure& m, double omega);

/// 1/c(omega) = 1/c_inf + D(omega)/omega, omega > 0.
double phase_speed(const SpectralMeasure& m, double c_inf, double omega);
double phase_speed(const RelaxationModel& model, double omega);

struct DispersionCurve {
    std::string model;
    std::vector<double> omega;        ///< rad/s
    std::vector<double> attenuation;  ///< 1/m
    std::vector<double> dispersion;   ///< 1/m
    std::vector<double> phase_speed;  ///< m/s
    double c_inf = kInf;
    std::optional<double> c_0;
};

/// Evaluates all three functions on a strictly increasing positive grid.
/// Grid points are spread over threads; the result does not depend on the
/// thread count.
DispersionCurve curve(const SpectralMeasure& m, double c_inf, std::optional<double> c_0,
                      std::span<const double> omega_grid);
DispersionCurve curve(const RelaxationModel& model, std::span<const double> omega_grid);

/// n_per_decade log-spaced points from lo to hi inclusive.
std::vector<double> log_grid(double lo, double hi, int n_per_decade);

}  // namespace viscowave
