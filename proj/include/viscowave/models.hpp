#pragma once

#include <limits>
#include <optional>
#include <string>
#include <variant>

namespace viscowave {

inline constexpr double kInf = std::numeric_limits<double>::infinity();

// All models use SI units: tau in s, moduli in Pa, rho in kg/m^3.
// Constructors validate parameter ranges and throw std::invalid_argument.

/// Cole-Cole: G~(p) = (G_inf/p) (1 + a (tau p)^alpha) / (1 + (tau p)^alpha).
struct ColeCole {
    ColeCole(double a, double alpha, double tau, double G_inf, double rho = 1.0);
    /// Parameterize by the wavefront speed instead of G_inf.
    static ColeCole from_c_inf(double a, double alpha, double tau, double c_inf, double rho = 1.0);

    double a;
    double alpha;
    double tau;
    double G_inf;
    double rho;
};

/// Standard linear solid: the Cole-Cole modulus with alpha = 1.
struct StandardLinearSolid {
    StandardLinearSolid(double a, double tau, double G_inf, double rho = 1.0);
    static StandardLinearSolid from_c_inf(double a, double tau, double c_inf, double rho = 1.0);

    double a;
    double tau;
    double G_inf;
    double rho;
};

/// Havriliak-Negami: G~(p) = (G_0/p) [1 - b / (1 + (tau p)^alpha)^gamma].
struct HavriliakNegami {
    HavriliakNegami(double b, double alpha, double gamma, double tau, double G_0, double rho = 1.0);
    static HavriliakNegami from_c_inf(double b, double alpha, double gamma, double tau, double c_inf,
                                      double rho = 1.0);

    double b;
    double alpha;
    double gamma;
    double tau;
    double G_0;
    double rho;
};

/// Cole-Davidson: Havriliak-Negami with alpha = 1.
struct ColeDavidson {
    ColeDavidson(double b, double gamma, double tau, double G_0, double rho = 1.0);
    static ColeDavidson from_c_inf(double b, double gamma, double tau, double c_inf, double rho = 1.0);

    double b;
    double gamma;
    double tau;
    double G_0;
    double rho;
};

/// Medium defined directly by the power-law measure nu([0,r]) = a_coef r^gamma_exp.
/// c_inf may be infinite (no wavefront).
struct PowerLawMeasure {
    PowerLawMeasure(double a_coef, double gamma_exp, double c_inf = kInf, double rho = 1.0);

    double a_coef;
    double gamma_exp;
    double c_inf;
    double rho;
};

/// Medium defined by the finite-bandwidth density C on [a_lo, b_hi].
struct FiniteBand {
    FiniteBand(double C, double a_lo, double b_hi, double c_inf, double rho = 1.0);

    double C;
    double a_lo;
    double b_hi;
    double c_inf;
    double rho;
};

using RelaxationModel = std::variant<ColeCole, StandardLinearSolid, HavriliakNegami, ColeDavidson,
                                     PowerLawMeasure, FiniteBand>;

/// Short kebab-case family name ("cole-cole", "sls", ...).
std::string model_name(const RelaxationModel& model);

/// Wavefront speed (G_0/rho)^{1/2}; may be infinite for PowerLawMeasure.
double c_inf(const RelaxationModel& model);

/// Low-frequency speed (G_inf/rho)^{1/2}; empty when G_inf = 0 (a fluid).
std::optional<double> c_0(const RelaxationModel& model);

double density_rho(const RelaxationModel& model);

/// Characteristic relaxation time; empty for the measure-defined media.
std::optional<double> relaxation_time(const RelaxationModel& model);

/// Canonical "key=value;..." text, stable across runs (17 significant digits).
std::string describe(const RelaxationModel& model);

}  // namespace viscowave
