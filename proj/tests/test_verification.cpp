#include <doctest.h>
#include <json.hpp>

#include <cmath>
#include <numbers>

#include "oracles.hpp"
#include "viscowave/dispersion.hpp"
#include "viscowave/verification.hpp"

using namespace viscowave;
using std::numbers::pi;

namespace {

const double kTau = 1e-6;

std::vector<RelaxationModel> shipped() {
    return {ColeCole::from_c_inf(1.5, 0.5, kTau, 5000), StandardLinearSolid::from_c_inf(1.5, kTau, 5000),
            HavriliakNegami::from_c_inf(0.5, 1 / 1.3, 1.3 / 2, kTau, 5000), ColeDavidson::from_c_inf(0.5, 0.5, kTau, 5000),
            FiniteBand(1e-4, 1e4, 1e7, 5000), PowerLawMeasure(1e-3, 0.75, 5000)};
}

const auto kHalfPlane = log_polar_grid(1 / kTau, 12, 40, 25);
const auto kRealAxis = real_axis_grid(1 / kTau, 12, 1000);

double rel(double a, double b) { return std::abs(a - b) / std::abs(b); }

}  // namespace

TEST_SUITE("verification") {

TEST_CASE("grids") {
    CHECK(kHalfPlane.points.size() == 1000);
    for (cplx p : kHalfPlane.points) CHECK(p.imag() > 0.0);
    CHECK(kRealAxis.points.size() == 1000);
    CHECK(kRealAxis.points.front() == doctest::Approx(1e-6 / kTau));
    CHECK_THROWS(log_polar_grid(-1.0, 12, 4, 4));
}

TEST_CASE("shipped models pass the CM and CBF batteries") {
    for (const auto& m : shipped()) {
        const auto w = ComplexWaveNumber::from_model(m);
        const auto cm = cm_check_relaxation(w, kHalfPlane, kRealAxis);
        CHECK_MESSAGE(cm.pass, cm.name << " " << cm.location);
        for (const auto& r : admissibility_battery(w, kHalfPlane, kRealAxis)) CHECK_MESSAGE(r.pass, r.name << " " << r.location);
    }
}

TEST_CASE("inadmissible wave numbers are flagged") {
    const auto bad = ComplexWaveNumber::custom("p/(1+p)", [](cplx p) { return p / (1.0 + p); }, kInf, 1.0);
    const auto hp = log_polar_grid(1.0, 12, 40, 25);
    const auto ra = real_axis_grid(1.0, 12, 1000);
    bool any_fail = false;
    for (const auto& r : admissibility_battery(bad, hp, ra)) {
        if (r.name.find("kappa^2/p") != std::string::npos) CHECK_FALSE(r.pass);
        any_fail = any_fail || !r.pass;
    }
    CHECK(any_fail);
    CHECK_FALSE(cm_check_relaxation(bad, hp, ra).pass);

    // beta = p^0.3: beta^2/p = p^{-0.4} is not a Bernstein function
    const auto pl = ComplexWaveNumber::from_model(PowerLawMeasure(1.0, 0.3));
    for (const auto& r : admissibility_battery(pl, hp, ra)) {
        if (r.name.find("kappa^2/p") != std::string::npos) CHECK_FALSE(r.pass);
        if (r.name.find(":kappa") != std::string::npos && r.name.find("^2") == std::string::npos) CHECK(r.pass);
    }
}

TEST_CASE("cbf_check on explicit functions") {
    const auto hp = log_polar_grid(1.0, 6, 20, 10);
    const auto ra = real_axis_grid(1.0, 6, 100);
    CHECK(cbf_check("sqrt", [](cplx p) { return std::sqrt(p); }, hp, ra).pass);
    CHECK_FALSE(cbf_check("p^1.2", [](cplx p) { return std::pow(p, 1.2); }, hp, ra).pass);
    CHECK_FALSE(cbf_check("-p", [](cplx p) { return -p; }, hp, ra).pass);
}

TEST_CASE("Kramers-Kronig with one subtraction") {
    const auto cc = measure_of(ColeCole::from_c_inf(1.5, 0.5, kTau, 5000));
    const auto r = kk_check(cc, 1 / kTau, 0.1 / kTau);
    CHECK(r.residual <= 1e-2 * attenuation(cc, 1 / kTau));
    CHECK(rel(r.lhs, attenuation(cc, 1 / kTau) - attenuation(cc, 0.1 / kTau)) < 1e-12);
    const auto fb = make_finiteband_measure(1e-4, 1e4, 1e7);
    const auto q = kk_check(fb, 1e6, 1e5);
    CHECK(q.residual <= 1e-2 * std::abs(q.lhs));
    CHECK_THROWS(kk_check(fb, 1e6, 1e6));
    CHECK_THROWS(kk_check(fb, -1.0, 1e6));
}

TEST_CASE("Bernstein primitive") {
    CHECK(bernstein_primitive_f(make_finiteband_measure(1, 1, 2), 0.0) == 0.0);
    for (double g : {0.25, 0.5, 0.75}) {
        // beta = C p^g with C = pi g / sin(pi g): f(t) = C t^{1-g} / Gamma(2-g)
        const auto m = make_powerlaw_measure(1.0, g);
        const double C = pi * g / std::sin(pi * g);
        for (double t : {1e-3, 1.0, 1e3}) CHECK(rel(bernstein_primitive_f(m, t), C * std::pow(t, 1 - g) / std::tgamma(2 - g)) < 1e-8);
    }
    // long-time limit: int h(r)/r dr = C ln(b/a)
    const auto fb = make_finiteband_measure(3.0, 1.0, 2.0);
    CHECK(rel(bernstein_primitive_f(fb, 1e3), 3.0 * std::log(2.0)) < 1e-12);

    const auto cc = measure_of(ColeCole::from_c_inf(1.5, 0.5, kTau, 5000));
    std::vector<double> t, f;
    for (int i = 1; i <= 60; ++i) {
        t.push_back(i * 0.1 * kTau);
        f.push_back(bernstein_primitive_f(cc, t.back()));
    }
    const std::array<int, 4> bernstein{+1, +1, -1, +1};
    const auto rep = divided_difference_check("f", t, f, bernstein, 1e-10);
    CHECK_MESSAGE(rep.pass, rep.location);
}

TEST_CASE("minimum phase") {
    for (const auto& m : shipped()) {
        const auto rep = minimum_phase_check(ComplexWaveNumber::from_model(m), default_omega_rect(1 / kTau));
        CHECK_MESSAGE(rep.pass, rep.name << " " << rep.location);
    }
    const auto rect = default_omega_rect(1.0);
    auto zero = [](cplx w) { return w - cplx(0.5, 2.0); };
    CHECK(winding_number(zero, rect) == 1);
    CHECK_FALSE(minimum_phase_check("zero", zero, rect).pass);
    CHECK(winding_number([](cplx w) { return w + cplx(0.0, 1.0); }, rect) == 0);
}

TEST_CASE("Paley-Wiener diagnostic") {
    const auto m = measure_of(ColeCole::from_c_inf(1.5, 0.5, kTau, 5000));
    const double x = 1e-3;
    std::vector<double> w{0.0}, M{1.0};
    for (double v : oracle::logspace(1e-2 / kTau, 1e6 / kTau, 400)) {
        w.push_back(v);
        M.push_back(std::exp(-attenuation(m, v) * x));
    }
    const auto cc = paley_wiener_diagnostic(M, w);
    CHECK(cc.finite);
    CHECK(std::abs(cc.growth_exponent - 0.5) < 0.02);

    std::vector<double> w2, lin, one;
    for (double v : oracle::logspace(1e-3, 1e2, 400)) {
        w2.push_back(v);
        lin.push_back(std::exp(-2.0 * v));
        one.push_back(1.0);
    }
    CHECK_FALSE(paley_wiener_diagnostic(lin, w2).finite);
    CHECK(paley_wiener_diagnostic(one, w2).integral == 0.0);
    std::vector<double> with_zero = one;
    with_zero[3] = 0.0;
    CHECK_THROWS(paley_wiener_diagnostic(with_zero, w2));
}

TEST_CASE("report serialization") {
    CheckReport r;
    r.name = "x";
    r.pass = false;
    r.worst_violation = 0.25;
    r.location = "p=1";
    r.grid = "g";
    r.tolerance = 1e-12;
    const auto j = nlohmann::json::parse(r.to_json());
    CHECK(j["name"] == "x");
    CHECK(j["pass"] == false);
    CHECK(j["worst_violation"] == 0.25);
    CHECK(j["location"] == "p=1");
    CHECK(j["grid"] == "g");
}

}  // TEST_SUITE
