#include "viscowave/models.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>

#include "format.hpp"

namespace viscowave {

namespace {

void require(bool ok, const char* what) {
    if (!ok) {
        throw std::invalid_argument(what);
    }
}

bool positive_finite(double v) { return std::isfinite(v) && v > 0.0; }

template <class... Ts>
struct overloaded : Ts... {
    using Ts::operator()...;
};

}  // namespace

ColeCole::ColeCole(double a_, double alpha_, double tau_, double G_inf_, double rho_)
    : a(a_), alpha(alpha_), tau(tau_), G_inf(G_inf_), rho(rho_) {
    require(std::isfinite(a) && a > 1.0, "cole-cole: a must satisfy a > 1");
    require(alpha > 0.0 && alpha < 1.0, "cole-cole: alpha must lie in (0,1)");
    require(positive_finite(tau), "cole-cole: tau must be > 0");
    require(positive_finite(G_inf), "cole-cole: G_inf must be > 0");
    require(positive_finite(rho), "cole-cole: rho must be > 0");
}

ColeCole ColeCole::from_c_inf(double a, double alpha, double tau, double c_inf, double rho) {
    require(positive_finite(c_inf), "cole-cole: c_inf must be > 0");
    require(std::isfinite(a) && a > 1.0, "cole-cole: a must satisfy a > 1");
    return ColeCole(a, alpha, tau, rho * c_inf * c_inf / a, rho);
}

StandardLinearSolid::StandardLinearSolid(double a_, double tau_, double G_inf_, double rho_)
    : a(a_), tau(tau_), G_inf(G_inf_), rho(rho_) {
    require(std::isfinite(a) && a > 1.0, "sls: a must satisfy a > 1");
    require(positive_finite(tau), "sls: tau must be > 0");
    require(positive_finite(G_inf), "sls: G_inf must be > 0");
    require(positive_finite(rho), "sls: rho must be > 0");
}

StandardLinearSolid StandardLinearSolid::from_c_inf(double a, double tau, double c_inf, double rho) {
    require(positive_finite(c_inf), "sls: c_inf must be > 0");
    require(std::isfinite(a) && a > 1.0, "sls: a must satisfy a > 1");
    return StandardLinearSolid(a, tau, rho * c_inf * c_inf / a, rho);
}

HavriliakNegami::HavriliakNegami(double b_, double alpha_, double gamma_, double tau_, double G_0_,
                                 double rho_)
    : b(b_), alpha(alpha_), gamma(gamma_), tau(tau_), G_0(G_0_), rho(rho_) {
    require(b > 0.0 && b <= 1.0, "havriliak-negami: b must lie in (0,1]");
    require(alpha > 0.0 && alpha < 1.0, "havriliak-negami: alpha must lie in (0,1)");
    require(gamma > 0.0 && gamma <= 1.0, "havriliak-negami: gamma must lie in (0,1]");
    require(positive_finite(tau), "havriliak-negami: tau must be > 0");
    require(positive_finite(G_0), "havriliak-negami: G_0 must be > 0");
    require(positive_finite(rho), "havriliak-negami: rho must be > 0");
}

HavriliakNegami HavriliakNegami::from_c_inf(double b, double alpha, double gamma, double tau,
                                            double c_inf, double rho) {
    require(positive_finite(c_inf), "havriliak-negami: c_inf must be > 0");
    return HavriliakNegami(b, alpha, gamma, tau, rho * c_inf * c_inf, rho);
}

ColeDavidson::ColeDavidson(double b_, double gamma_, double tau_, double G_0_, double rho_)
    : b(b_), gamma(gamma_), tau(tau_), G_0(G_0_), rho(rho_) {
    require(b > 0.0 && b <= 1.0, "cole-davidson: b must lie in (0,1]");
    require(gamma > 0.0 && gamma <= 1.0, "cole-davidson: gamma must lie in (0,1]");
    require(positive_finite(tau), "cole-davidson: tau must be > 0");
    require(positive_finite(G_0), "cole-davidson: G_0 must be > 0");
    require(positive_finite(rho), "cole-davidson: rho must be > 0");
}

ColeDavidson ColeDavidson::from_c_inf(double b, double gamma, double tau, double c_inf, double rho) {
    require(positive_finite(c_inf), "cole-davidson: c_inf must be > 0");
    return ColeDavidson(b, gamma, tau, rho * c_inf * c_inf, rho);
}

PowerLawMeasure::PowerLawMeasure(double a_coef_, double gamma_exp_, double c_inf_, double rho_)
    : a_coef(a_coef_), gamma_exp(gamma_exp_), c_inf(c_inf_), rho(rho_) {
    require(positive_finite(a_coef), "power-law: a_coef must be > 0");
    require(gamma_exp > 0.0 && gamma_exp < 1.0, "power-law: gamma must lie in (0,1)");
    require(c_inf > 0.0 && !std::isnan(c_inf), "power-law: c_inf must be > 0 (may be infinite)");
    require(positive_finite(rho), "power-law: rho must be > 0");
}

FiniteBand::FiniteBand(double C_, double a_lo_, double b_hi_, double c_inf_, double rho_)
    : C(C_), a_lo(a_lo_), b_hi(b_hi_), c_inf(c_inf_), rho(rho_) {
    require(positive_finite(C), "finite-band: C must be > 0");
    require(std::isfinite(a_lo) && a_lo >= 0.0, "finite-band: a_lo must be >= 0");
    require(std::isfinite(b_hi) && b_hi > a_lo, "finite-band: b_hi must exceed a_lo");
    require(c_inf > 0.0 && !std::isnan(c_inf), "finite-band: c_inf must be > 0");
    require(positive_finite(rho), "finite-band: rho must be > 0");
}

std::string model_name(const RelaxationModel& model) {
    return std::visit(overloaded{
                          [](const ColeCole&) { return std::string("cole-cole"); },
                          [](const StandardLinearSolid&) { return std::string("sls"); },
                          [](const HavriliakNegami&) { return std::string("havriliak-negami"); },
                          [](const ColeDavidson&) { return std::string("cole-davidson"); },
                          [](const PowerLawMeasure&) { return std::string("power-law"); },
                          [](const FiniteBand&) { return std::string("finite-band"); },
                      },
                      model);
}

double c_inf(const RelaxationModel& model) {
    return std::visit(overloaded{
                          [](const ColeCole& m) { return std::sqrt(m.a * m.G_inf / m.rho); },
                          [](const StandardLinearSolid& m) { return std::sqrt(m.a * m.G_inf / m.rho); },
                          [](const HavriliakNegami& m) { return std::sqrt(m.G_0 / m.rho); },
                          [](const ColeDavidson& m) { return std::sqrt(m.G_0 / m.rho); },
                          [](const PowerLawMeasure& m) { return m.c_inf; },
                          [](const FiniteBand& m) { return m.c_inf; },
                      },
                      model);
}

std::optional<double> c_0(const RelaxationModel& model) {
    return std::visit(
        overloaded{
            [](const ColeCole& m) -> std::optional<double> { return std::sqrt(m.G_inf / m.rho); },
            [](const StandardLinearSolid& m) -> std::optional<double> { return std::sqrt(m.G_inf / m.rho); },
            [](const HavriliakNegami& m) -> std::optional<double> {
                if (m.b >= 1.0) return std::nullopt;
                return std::sqrt(m.G_0 * (1.0 - m.b) / m.rho);
            },
            [](const ColeDavidson& m) -> std::optional<double> {
                if (m.b >= 1.0) return std::nullopt;
                return std::sqrt(m.G_0 * (1.0 - m.b) / m.rho);
            },
            // nu([0,r]) ~ r^gamma with gamma < 1 makes D infinite: a fluid.
            [](const PowerLawMeasure&) -> std::optional<double> { return std::nullopt; },
            [](const FiniteBand& m) -> std::optional<double> {
                if (m.a_lo <= 0.0) return std::nullopt;
                return 1.0 / (1.0 / m.c_inf + m.C * std::log(m.b_hi / m.a_lo));
            },
        },
        model);
}

double density_rho(const RelaxationModel& model) {
    return std::visit([](const auto& m) { return m.rho; }, model);
}

std::optional<double> relaxation_time(const RelaxationModel& model) {
    return std::visit(overloaded{
                          [](const PowerLawMeasure&) -> std::optional<double> { return std::nullopt; },
                          [](const FiniteBand&) -> std::optional<double> { return std::nullopt; },
                          [](const auto& m) -> std::optional<double> { return m.tau; },
                      },
                      model);
}

std::string describe(const RelaxationModel& model) {
    std::ostringstream os;
    os << "model=" << model_name(model);
    std::visit(overloaded{
                   [&](const ColeCole& m) {
                       os << ";a=" << fmt17(m.a) << ";alpha=" << fmt17(m.alpha) << ";tau=" << fmt17(m.tau)
                          << ";G_inf=" << fmt17(m.G_inf) << ";rho=" << fmt17(m.rho);
                   },
                   [&](const StandardLinearSolid& m) {
                       os << ";a=" << fmt17(m.a) << ";tau=" << fmt17(m.tau) << ";G_inf=" << fmt17(m.G_inf)
                          << ";rho=" << fmt17(m.rho);
                   },
                   [&](const HavriliakNegami& m) {
                       os << ";b=" << fmt17(m.b) << ";alpha=" << fmt17(m.alpha) << ";gamma=" << fmt17(m.gamma)
                          << ";tau=" << fmt17(m.tau) << ";G_0=" << fmt17(m.G_0) << ";rho=" << fmt17(m.rho);
                   },
                   [&](const ColeDavidson& m) {
                       os << ";b=" << fmt17(m.b) << ";gamma=" << fmt17(m.gamma) << ";tau=" << fmt17(m.tau)
                          << ";G_0=" << fmt17(m.G_0) << ";rho=" << fmt17(m.rho);
                   },
                   [&](const PowerLawMeasure& m) {
                       os << ";a_coef=" << fmt17(m.a_coef) << ";gamma=" << fmt17(m.gamma_exp)
                          << ";c_inf=" << fmt17(m.c_inf) << ";rho=" << fmt17(m.rho);
                   },
                   [&](const FiniteBand& m) {
                       os << ";C=" << fmt17(m.C) << ";a_lo=" << fmt17(m.a_lo) << ";b_hi=" << fmt17(m.b_hi)
                          << ";c_inf=" << fmt17(m.c_inf) << ";rho=" << fmt17(m.rho);
                   },
               },
               model);
    return os.str();
}

}  // namespace viscowave
