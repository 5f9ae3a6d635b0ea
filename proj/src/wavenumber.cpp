#include "viscowave/wavenumber.hpp"

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

void require_off_cut(cplx p) {
    if (on_branch_cut(p)) throw std::domain_error("p lies on the branch cut (-inf, 0]");
}

// beta for Q = G_inf (1 + a x)/(1 + x), x = (tau p)^alpha:
// kappa = (p/c0) sqrt(W), W = (1+x)/(1+ax), and sqrt(W) - a^{-1/2} rewritten
// as (W - 1/a)/(sqrt(W) + a^{-1/2}) with W - 1/a = (a-1)/(a(1+ax)).
cplx beta_cc_like(double a, double alpha, double tau, double c0, cplx p) {
    const cplx x = alpha == 1.0 ? tau * p : std::pow(tau * p, alpha);
    const cplx W = (1.0 + x) / (1.0 + a * x);
    const cplx num = (a - 1.0) / (a * (1.0 + a * x));
    return (p / c0) * num / (std::sqrt(W) + 1.0 / std::sqrt(a));
}

// beta for Q = G0 (1 - b/Y), Y = (1 + (tau p)^alpha)^gamma:
// kappa = (p/c_inf)/s with s = sqrt(1 - b/Y); beta = (p/c_inf)(1 - s)/s.
cplx beta_hn_like(double b, double alpha, double gamma, double tau, double cinf, cplx p) {
    const cplx x = alpha == 1.0 ? tau * p : std::pow(tau * p, alpha);
    const cplx Y = std::pow(1.0 + x, gamma);
    const cplx q = b / Y;
    const cplx s = std::sqrt(1.0 - q);
    return (p / cinf) * (q / (1.0 + s)) / s;
}

double inv(double c) { return std::isinf(c) ? 0.0 : 1.0 / c; }

}  // namespace

bool on_branch_cut(cplx p) { return p.imag() == 0.0 && p.real() <= 0.0; }

cplx beta(const RelaxationModel& model, cplx p) {
    require_off_cut(p);
    return std::visit(
        overloaded{
            [p](const ColeCole& m) { return beta_cc_like(m.a, m.alpha, m.tau, std::sqrt(m.G_inf / m.rho), p); },
            [p](const StandardLinearSolid& m) { return beta_cc_like(m.a, 1.0, m.tau, std::sqrt(m.G_inf / m.rho), p); },
            [p](const HavriliakNegami& m) {
                return beta_hn_like(m.b, m.alpha, m.gamma, m.tau, std::sqrt(m.G_0 / m.rho), p);
            },
            [p](const ColeDavidson& m) { return beta_hn_like(m.b, 1.0, m.gamma, m.tau, std::sqrt(m.G_0 / m.rho), p); },
            [p](const PowerLawMeasure& m) {
                return m.a_coef * pi * m.gamma_exp / std::sin(pi * m.gamma_exp) * std::pow(p, m.gamma_exp);
            },
            [p](const FiniteBand& m) { return m.C * p * (std::log(p + m.b_hi) - std::log(p + m.a_lo)); },
        },
        model);
}

cplx kappa(const RelaxationModel& model, cplx p) {
    // Principal roots in beta already give Re kappa(-i omega) >= 0.
    return p * inv(c_inf(model)) + beta(model, p);
}

cplx modulus_Q(const RelaxationModel& model, cplx p) {
    require_off_cut(p);
    return std::visit(overloaded{
                          [p](const ColeCole& m) {
                              const cplx x = std::pow(m.tau * p, m.alpha);
                              return m.G_inf * (1.0 + m.a * x) / (1.0 + x);
                          },
                          [p](const StandardLinearSolid& m) {
                              const cplx x = m.tau * p;
                              return m.G_inf * (1.0 + m.a * x) / (1.0 + x);
                          },
                          [p](const HavriliakNegami& m) {
                              return m.G_0 * (1.0 - m.b / std::pow(1.0 + std::pow(m.tau * p, m.alpha), m.gamma));
                          },
                          [p](const ColeDavidson& m) {
                              return m.G_0 * (1.0 - m.b / std::pow(1.0 + m.tau * p, m.gamma));
                          },
                          [&model, p](const auto& m) {
                              const cplx k = kappa(model, p);
                              return m.rho * p * p / (k * k);
                          },
                      },
                      model);
}

JumpEstimate jump_density_oracle(const std::function<cplx(cplx)>& beta_fn, double r, double eps) {
    if (!(r > 0.0) || !std::isfinite(r)) throw std::invalid_argument("jump_density_oracle: r must be > 0");
    if (!(eps > 0.0 && eps <= 1e-3)) throw std::invalid_argument("jump_density_oracle: eps must lie in (0, 1e-3]");
    auto f = [&](double e) {
        const cplx p = std::polar(r, -(pi - e));
        return (beta_fn(p) / p).imag() / pi;
    };
    const double f0 = f(eps), f1 = f(eps / 2), f2 = f(eps / 4);
    const double r1 = 2.0 * f1 - f0;
    const double r2 = 2.0 * f2 - f1;
    JumpEstimate out;
    out.value = (4.0 * r2 - r1) / 3.0;
    out.error = std::abs(out.value - r2);
    const double d1 = std::abs(f1 - f0), d2 = std::abs(f2 - f1);
    const double floor = 1e-14 * std::max({std::abs(f0), std::abs(f1), std::abs(f2), 1e-300});
    out.converged = d2 < d1 || d2 <= floor;
    return out;
}

JumpEstimate jump_density_oracle(const RelaxationModel& model, double r, double eps) {
    return jump_density_oracle([&model](cplx p) { return beta(model, p); }, r, eps);
}

ComplexWaveNumber ComplexWaveNumber::from_model(const RelaxationModel& model) {
    ComplexWaveNumber w;
    w.name_ = model_name(model);
    w.model_ = model;
    w.c_inf_ = viscowave::c_inf(model);
    w.c_0_ = viscowave::c_0(model);
    w.rho_ = density_rho(model);
    return w;
}

ComplexWaveNumber ComplexWaveNumber::custom(std::string name, std::function<cplx(cplx)> kappa_fn, double c_inf,
                                            std::optional<double> c_0, double rho) {
    if (!kappa_fn) throw std::invalid_argument("ComplexWaveNumber::custom: empty kappa");
    if (!(c_inf > 0.0)) throw std::invalid_argument("ComplexWaveNumber::custom: c_inf must be > 0");
    if (!(rho > 0.0)) throw std::invalid_argument("ComplexWaveNumber::custom: rho must be > 0");
    ComplexWaveNumber w;
    w.name_ = std::move(name);
    w.kappa_fn_ = std::move(kappa_fn);
    w.c_inf_ = c_inf;
    w.c_0_ = c_0;
    w.rho_ = rho;
    return w;
}

ComplexWaveNumber ComplexWaveNumber::elastic(double c, double rho) {
    if (!(c > 0.0) || !std::isfinite(c)) throw std::invalid_argument("ComplexWaveNumber::elastic: c must be finite and > 0");
    auto w = custom("elastic", [c](cplx p) { return p / c; }, c, c, rho);
    w.elastic_ = true;
    return w;
}

std::optional<SpectralMeasure> ComplexWaveNumber::measure() const {
    if (model_) return measure_of(*model_);
    if (elastic_) return make_zero_measure();
    return std::nullopt;
}

cplx ComplexWaveNumber::kappa(cplx p) const {
    if (model_) return viscowave::kappa(*model_, p);
    require_off_cut(p);
    return kappa_fn_(p);
}

cplx ComplexWaveNumber::beta(cplx p) const {
    if (model_) return viscowave::beta(*model_, p);
    return kappa(p) - p * inv(c_inf_);
}

cplx ComplexWaveNumber::modulus(cplx p) const {
    if (model_) return modulus_Q(*model_, p);
    const cplx k = kappa(p);
    return rho_ * p * p / (k * k);
}

}  // namespace viscowave
