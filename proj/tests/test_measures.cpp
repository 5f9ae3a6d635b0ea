#include <doctest.h>

#include <cmath>
#include <numbers>

#include "oracles.hpp"
#include "viscowave/measures.hpp"
#include "viscowave/wavenumber.hpp"

using namespace viscowave;
using std::numbers::pi;

namespace {

const double kTau = 1e-6;
const double kCinf = 5000.0;

ColeCole cc_model() { return ColeCole::from_c_inf(1.5, 0.5, kTau, kCinf); }
StandardLinearSolid sls_model() { return StandardLinearSolid::from_c_inf(1.5, kTau, kCinf); }
HavriliakNegami hn_model() { return HavriliakNegami::from_c_inf(0.5, 1 / 1.3, 1.3 / 2, kTau, kCinf); }
ColeDavidson cd_model() { return ColeDavidson::from_c_inf(0.5, 0.5, kTau, kCinf); }

double rel(double a, double b) { return std::abs(a - b) / std::abs(b); }

}  // namespace

TEST_SUITE("measures") {

TEST_CASE("model parameter ranges are enforced") {
    CHECK_THROWS_AS(ColeCole(1.0, 0.5, 1e-6, 1e7), std::invalid_argument);
    CHECK_THROWS_AS(ColeCole(1.5, 1.0, 1e-6, 1e7), std::invalid_argument);
    CHECK_THROWS_AS(ColeCole(1.5, 0.5, 0.0, 1e7), std::invalid_argument);
    CHECK_THROWS_AS(HavriliakNegami(1.5, 0.5, 0.5, 1e-6, 1e7), std::invalid_argument);
    CHECK_THROWS_AS(HavriliakNegami(0.5, 0.5, 1.5, 1e-6, 1e7), std::invalid_argument);
    CHECK_THROWS_AS(PowerLawMeasure(1.0, 1.0), std::invalid_argument);
    CHECK_THROWS_AS(FiniteBand(1.0, 2.0, 1.0, 5000), std::invalid_argument);
    CHECK_NOTHROW(HavriliakNegami(1.0, 0.5, 1.0, 1e-6, 1e7));
}

TEST_CASE("derived speeds") {
    const auto cc = cc_model();
    CHECK(c_inf(cc) == doctest::Approx(kCinf).epsilon(1e-14));
    CHECK(*c_0(cc) == doctest::Approx(kCinf / std::sqrt(1.5)).epsilon(1e-14));
    CHECK_FALSE(c_0(HavriliakNegami::from_c_inf(1.0, 0.5, 0.5, kTau, kCinf)).has_value());
}

TEST_CASE("Cole-Cole density") {
    const auto cc = cc_model();
    const double c0 = *c_0(cc);
    CHECK(cc_spectral_density(cc, 0.0) == 0.0);
    // small r: h ~ (a-1) sin(alpha pi) (tau r)^alpha / (2 pi c0), from expanding
    // sqrt((1+x)/(1+ax)) to first order in x
    for (double tr : {1e-12, 1e-14}) {
        const double h = cc_spectral_density(cc, tr / kTau);
        CHECK(rel(h, 0.5 * std::sin(0.5 * pi) * std::pow(tr, 0.5) / (2 * pi * c0)) < 1e-5);
    }
    // large r: h ~ (a-1)/(2a) sin(alpha pi) (tau r)^{-alpha} / (pi c_inf)
    const double h = cc_spectral_density(cc, 1e12 / kTau);
    CHECK(rel(h, 0.5 / 3.0 * std::pow(1e12, -0.5) / (pi * kCinf)) < 1e-5);
    const auto j = jump_density_oracle(cc, 1 / kTau);
    CHECK(j.converged);
    CHECK(rel(cc_spectral_density(cc, 1 / kTau), j.value) < 1e-6);
}

TEST_CASE("SLS density") {
    const auto sls = sls_model();
    CHECK(sls_spectral_density(sls, 1.5 / kTau) == 0.0);
    CHECK(sls_spectral_density(sls, 1.0 / kTau) == 0.0);
    CHECK(sls_spectral_density(sls, 0.5 / kTau) == 0.0);
    const double mid = (1 / 1.5 + 1) / 2 / kTau;
    CHECK(rel(sls_spectral_density(sls, mid), jump_density_oracle(sls, mid).value) < 1e-6);
    // closed form (1/(pi c0)) sqrt((1 - tau r)/(a tau r - 1))
    const double tr = 0.9;
    CHECK(rel(sls_spectral_density(sls, tr / kTau), std::sqrt((1 - tr) / (1.5 * tr - 1)) / (pi * *c_0(sls))) < 1e-14);
}

TEST_CASE("Havriliak-Negami density") {
    const auto hn = hn_model();
    CHECK(hn_spectral_density(hn, 0.0) == 0.0);
    CHECK(rel(hn_spectral_density(hn, 1 / kTau), jump_density_oracle(hn, 1 / kTau).value) < 1e-6);

    // gamma = 1 is Cole-Cole with a = 1/(1-b)
    const double b = 0.4, alpha = 0.6;
    const HavriliakNegami hn1 = HavriliakNegami::from_c_inf(b, alpha, 1.0, kTau, kCinf);
    const ColeCole cc1 = ColeCole::from_c_inf(1 / (1 - b), alpha, kTau, kCinf);
    for (double tr : oracle::logspace(1e-6, 1e6, 200)) {
        const double a = hn_spectral_density(hn1, tr / kTau), c = cc_spectral_density(cc1, tr / kTau);
        CHECK(std::abs(a - c) <= 1e-12 * std::abs(c));
    }
}

TEST_CASE("Cole-Davidson density") {
    const auto cd = cd_model();
    CHECK(cd_spectral_density(cd, 0.5 / kTau) == 0.0);
    CHECK(rel(cd_spectral_density(cd, 2 / kTau), jump_density_oracle(cd, 2 / kTau).value) < 1e-6);
    // tau r -> infinity: k1 -> 1 and h ~ b sin(pi gamma) (tau r)^{-gamma} / (2 pi c_inf)
    const double tr = 1e14;
    CHECK(rel(cd_spectral_density(cd, tr / kTau), 0.5 * std::sin(pi * 0.5) * std::pow(tr, -0.5) / (2 * pi * kCinf)) < 1e-6);
    // band below tau r = 1 where Q(-r) < 0
    const double r_in = 0.9 / kTau;
    CHECK(cd_spectral_density(cd, r_in) > 0.0);
    CHECK(rel(cd_spectral_density(cd, r_in), jump_density_oracle(cd, r_in).value) < 1e-6);
}

TEST_CASE("power-law and finite-band measures") {
    const auto pl = make_powerlaw_measure(1.0, 0.5);
    CHECK(pl(1.0) == doctest::Approx(0.5).epsilon(1e-15));
    CHECK_FALSE(pl.D_finite);
    CHECK_FALSE(measure_D_constant(pl).has_value());
    const auto fb = make_finiteband_measure(1.0, 1.0, 2.0);
    CHECK(fb(1.5) == 1.0);
    CHECK(fb(3.0) == 0.0);
    CHECK(fb.D_finite);
    CHECK_THROWS(make_powerlaw_measure(-1.0, 0.5));
    CHECK_THROWS(make_finiteband_measure(1.0, -1.0, 2.0));
}

TEST_CASE("D constant") {
    const auto fb = make_finiteband_measure(2.0, 3.0, 7.0);
    CHECK(rel(*measure_D_constant(fb), 2.0 * std::log(7.0 / 3.0)) < 1e-12);
    CHECK(*measure_D_constant(make_zero_measure()) == 0.0);
    const auto cc = ColeCole::from_c_inf(1.5, 0.5, 1e-13, kCinf);
    CHECK(rel(*measure_D_constant(measure_of(cc)), 1 / *c_0(cc) - 1 / kCinf) < 1e-8);
    for (const RelaxationModel& m : {RelaxationModel(sls_model()), RelaxationModel(cd_model()), RelaxationModel(hn_model())}) {
        CHECK(rel(*measure_D_constant(measure_of(m)), 1 / *c_0(m) - 1 / c_inf(m)) < 1e-8);
    }
}

TEST_CASE("densities are non-negative and in the admissible class") {
    const std::vector<RelaxationModel> models = {cc_model(), sls_model(), hn_model(), cd_model(),
                                                 ColeDavidson::from_c_inf(0.8, 0.3, kTau, kCinf)};
    for (const auto& model : models) {
        const auto m = measure_of(model);
        for (double tr : oracle::logspace(1e-6, 1e6, 10000)) CHECK(m(tr / kTau) >= 0.0);
        if (m.high_tail == HighTail::Algebraic) CHECK(m.tail_exponent_high > 0.0);
        const auto res = integrate_density(m, [](double r) { return 1.0 / (1.0 + r); });
        CHECK(res.converged);
        CHECK(std::isfinite(res.value));
    }
}

TEST_CASE("moments of the finite band") {
    const auto fb = make_finiteband_measure(1.0, 1.0, 2.0);
    for (int n = 0; n < 4; ++n) CHECK(rel(*measure_moment(fb, n), (std::pow(2.0, n + 1) - 1) / (n + 1)) < 1e-12);
    CHECK_FALSE(measure_moment(measure_of(cc_model()), 1).has_value());
}

}  // TEST_SUITE
