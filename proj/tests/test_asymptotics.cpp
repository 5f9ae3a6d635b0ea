#include <doctest.h>

#include <cmath>
#include <numbers>

#include "oracles.hpp"
#include "viscowave/asymptotics.hpp"
#include "viscowave/dispersion.hpp"
#include "viscowave/wavenumber.hpp"

using namespace viscowave;
using std::numbers::pi;

namespace {

double rel(double a, double b) { return std::abs(a - b) / std::abs(b); }

const double kTau = 1e-6;

// Slope of the engine attenuation over two decades from w0.
double engine_slope(const SpectralMeasure& m, double w0) {
    const auto x = oracle::logspace(w0, 100 * w0, 50);
    std::vector<double> f;
    for (double w : x) f.push_back(attenuation(m, w));
    return oracle::fit_slope(x, f);
}

}  // namespace

TEST_SUITE("asymptotics") {

TEST_CASE("high-frequency exponents") {
    CHECK(highfreq_attenuation(0.5).exponent == 0.5);
    CHECK_THROWS(highfreq_attenuation(1.0));
    CHECK_THROWS(highfreq_attenuation(0.0));
    // D/A -> cot(alpha pi/2)
    for (double a : {0.3, 0.5, 0.8}) {
        CHECK(rel(highfreq_dispersion(a, 1.0, 1e6) / highfreq_attenuation(a, 1.0, 1e6), 1 / std::tan(a * pi / 2)) < 1e-14);
    }
}

TEST_CASE("Cole-Cole slopes and coefficients") {
    const auto cc = ColeCole::from_c_inf(1.5, 0.5, kTau, 5000);
    const auto m = measure_of(cc);
    CHECK(std::abs(engine_slope(m, 1e8 / kTau) - 0.5) < 0.01);
    CHECK(std::abs(engine_slope(m, 1e-6 / kTau) - 1.5) < 0.01);
    // library fit agrees with the independent fit
    auto A = [&m](double w) { return attenuation(m, w); };
    CHECK(std::abs(loglog_slope(A, 1e8 / kTau) - engine_slope(m, 1e8 / kTau)) < 1e-12);
    const auto hi = model_attenuation_asymptote(cc, Regime::High);
    REQUIRE(hi);
    CHECK(rel(attenuation(m, 1e12 / kTau), hi->at(1e12 / kTau)) < 1e-4);
    const auto lo = model_attenuation_asymptote(cc, Regime::Low);
    REQUIRE(lo);
    CHECK(lo->exponent == 1.5);
    CHECK(rel(attenuation(m, 1e-10 / kTau), lo->at(1e-10 / kTau)) < 1e-4);
    // D/A -> cot(pi/4) = 1
    CHECK(rel(dispersion(m, 1e14 / kTau) / attenuation(m, 1e14 / kTau), 1.0) < 1e-5);
}

TEST_CASE("Havriliak-Negami and Cole-Davidson slopes") {
    const double al = 1 / 1.3, ga = 1.3 / 2;
    const auto hn = HavriliakNegami::from_c_inf(0.5, al, ga, kTau, 5000);
    CHECK(std::abs(engine_slope(measure_of(hn), 1e8 / kTau) - (1 - al * ga)) < 0.01);
    const auto cd = ColeDavidson::from_c_inf(0.5, 0.5, kTau, 5000);
    CHECK(std::abs(engine_slope(measure_of(cd), 1e-6 / kTau) - 2.0) < 0.01);
    const auto lo = model_attenuation_asymptote(cd, Regime::Low);
    REQUIRE(lo);
    // gamma b tau omega^2 / (2 c0 (1 - b))
    CHECK(rel(lo->coefficient, 0.5 * 0.5 * kTau / (2 * *c_0(cd) * 0.5)) < 1e-14);
    CHECK(rel(attenuation(measure_of(cd), 1e-6 / kTau), lo->at(1e-6 / kTau)) < 1e-4);
}

TEST_CASE("low-frequency prediction for power-law measures") {
    const auto pred = lowfreq_prediction(0.5);
    CHECK(rel(pred.attenuation.coefficient, oracle::powerlaw_attenuation_constant(0.5)) < 1e-14);
    CHECK_THROWS(lowfreq_prediction(1.0));
    for (double g : {0.25, 0.5, 0.75}) {
        const auto m = make_powerlaw_measure(1.0, g);
        const double w = 1e-6;
        CHECK(rel(dispersion(m, w) / attenuation(m, w), std::tan(g * pi / 2)) < 1e-8);
        const auto p = lowfreq_prediction(g);
        CHECK(rel(p.dispersion.at(w) / p.attenuation.at(w), std::tan(g * pi / 2)) < 1e-14);
        CHECK(rel(attenuation(m, w), p.attenuation.at(w)) < 1e-8);
        CHECK(rel(dispersion(m, w), p.dispersion.at(w)) < 1e-8);
    }
}

TEST_CASE("wavefront classification") {
    CHECK(classify_wavefront(FiniteBand(1.0, 1.0, 2.0, 5000)).tag == WavefrontTag::DiscontinuityPossible);
    CHECK(classify_wavefront(StandardLinearSolid::from_c_inf(1.5, kTau, 5000)).tag == WavefrontTag::DiscontinuityPossible);
    CHECK(classify_wavefront(ColeCole::from_c_inf(1.5, 0.5, kTau, 5000)).tag == WavefrontTag::Smoothed);
    const auto s = strongly_singular_regime(0.5);
    CHECK(s.tag == WavefrontTag::NoWavefront);
    CHECK(*s.gamma == 0.75);
    CHECK(rel(*s.c_alpha, pi / 2) < 1e-15);
    const auto pl = classify_wavefront(PowerLawMeasure(1.0, 0.75));
    CHECK(pl.tag == WavefrontTag::NoWavefront);
    CHECK(rel(*pl.alpha, 0.5) < 1e-15);
    CHECK(to_string(WavefrontTag::Smoothed) == "smoothed");
}

TEST_CASE("moment series") {
    const auto fb = make_finiteband_measure(1.0, 1.0, 2.0);
    CHECK(rel(beta_moment_series(fb, 0, 100.0).real(), 1.0) < 1e-12);
    const cplx p = 100.0;
    const cplx exact = p * std::log((p + 2.0) / (p + 1.0));
    for (int N : {1, 2, 3, 4}) CHECK(std::abs(beta_moment_series(fb, N, p) - exact) < 3.0 * std::pow(2.0 / 100.0, N + 1));
    CHECK(beta_moment_series(make_zero_measure(), 3, p) == cplx(0.0));
    CHECK_THROWS(beta_moment_series(measure_of(ColeCole::from_c_inf(1.5, 0.5, kTau, 5000)), 2, p));
}

}  // TEST_SUITE
