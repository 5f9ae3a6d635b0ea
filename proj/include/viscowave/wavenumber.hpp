#pragma once

#include <complex>
#include <functional>
#include <optional>
#include <string>

#include "viscowave/measures.hpp"
#include "viscowave/models.hpp"

namespace viscowave {

using cplx = std::complex<double>;

/// True when p lies on the closed negative real axis (the branch cut).
bool on_branch_cut(cplx p);

// Closed-form evaluators on the cut plane |arg p| < pi. Points on the cut
// throw std::domain_error.
cplx modulus_Q(const RelaxationModel& model, cplx p);
cplx kappa(const RelaxationModel& model, cplx p);
/// kappa(p) - p/c_inf, evaluated without the cancellation of the difference.
cplx beta(const RelaxationModel& model, cplx p);

struct JumpEstimate {
    double value = 0.0;
    double error = 0.0;
    bool converged = true;
};

/// Density of the dispersion-attenuation measure recovered from the jump of
/// lambda(p) = kappa(p)/p across the cut: (1/pi) Im lambda approached from
/// below the axis at arg p = -(pi - eps), Richardson-extrapolated over
/// eps, eps/2, eps/4.
JumpEstimate jump_density_oracle(const RelaxationModel& model, double r, double eps = 1e-3);
JumpEstimate jump_density_oracle(const std::function<cplx(cplx)>& beta_fn, double r, double eps = 1e-3);

/// Evaluator for kappa, beta and Q. Either wraps a shipped model or a
/// user-supplied kappa (used for counterexamples and strongly singular media).
class ComplexWaveNumber {
public:
    static ComplexWaveNumber from_model(const RelaxationModel& model);
    /// c_inf may be infinite; beta then equals kappa.
    static ComplexWaveNumber custom(std::string name, std::function<cplx(cplx)> kappa_fn, double c_inf,
                                    std::optional<double> c_0, double rho = 1.0);
    /// Non-dispersive medium: zero spectral measure, kappa = p/c.
    static ComplexWaveNumber elastic(double c, double rho = 1.0);

    cplx kappa(cplx p) const;
    cplx beta(cplx p) const;
    cplx modulus(cplx p) const;

    const std::string& name() const { return name_; }
    double c_inf() const { return c_inf_; }
    std::optional<double> c_0() const { return c_0_; }
    double rho() const { return rho_; }
    const std::optional<RelaxationModel>& model() const { return model_; }
    /// Spectral measure of beta when known (shipped models, elastic medium).
    std::optional<SpectralMeasure> measure() const;

private:
    ComplexWaveNumber() = default;

    std::string name_;
    std::optional<RelaxationModel> model_;
    std::function<cplx(cplx)> kappa_fn_;
    bool elastic_ = false;
    double c_inf_ = kInf;
    std::optional<double> c_0_;
    double rho_ = 1.0;
};

}  // namespace viscowave
