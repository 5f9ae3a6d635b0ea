#include <doctest.h>

#include <cmath>
#include <random>

#include "oracles.hpp"
#include "viscowave/measures.hpp"
#include "viscowave/wavenumber.hpp"

using namespace viscowave;

namespace {

const double kTau = 1e-6;

std::vector<RelaxationModel> shipped() {
    return {ColeCole::from_c_inf(1.5, 0.5, kTau, 5000), StandardLinearSolid::from_c_inf(1.5, kTau, 5000),
            HavriliakNegami::from_c_inf(0.5, 1 / 1.3, 1.3 / 2, kTau, 5000), ColeDavidson::from_c_inf(0.5, 0.5, kTau, 5000)};
}

double rel(double a, double b) { return std::abs(a - b) / std::abs(b); }

}  // namespace

TEST_SUITE("wavenumber") {

TEST_CASE("points on the cut are rejected") {
    const auto cc = ColeCole::from_c_inf(1.5, 0.5, kTau, 5000);
    CHECK_THROWS_AS(kappa(cc, cplx(-1.0, 0.0)), std::domain_error);
    CHECK_THROWS_AS(modulus_Q(cc, cplx(0.0, 0.0)), std::domain_error);
    CHECK_NOTHROW(kappa(cc, cplx(-1.0, 1e-300)));
}

TEST_CASE("Cole-Cole modulus limits") {
    const auto cc = ColeCole::from_c_inf(1.5, 0.5, kTau, 5000);
    CHECK(rel(modulus_Q(cc, cplx(1e-12 / kTau)).real(), cc.G_inf) < 1e-5);
    CHECK(rel(modulus_Q(cc, cplx(1e12 / kTau)).real(), 1.5 * cc.G_inf) < 1e-5);
}

TEST_CASE("kappa on the positive axis and its slopes") {
    const auto cc = ColeCole::from_c_inf(1.5, 0.5, kTau, 5000);
    double prev = 0.0;
    for (double x : oracle::logspace(1e-3 / kTau, 1e3 / kTau, 200)) {
        const cplx k = kappa(cc, cplx(x));
        CHECK(k.imag() == 0.0);
        CHECK(k.real() > prev);
        prev = k.real();
    }
    const double w = 1e-10 / kTau;
    CHECK(rel((kappa(cc, cplx(0, -w)) / cplx(0, -w)).real(), 1 / *c_0(cc)) < 1e-4);
    const cplx P(1e14 / kTau, 0);
    CHECK(rel((kappa(cc, P) / P).real(), 1 / c_inf(cc)) < 1e-6);
}

TEST_CASE("conjugate symmetry and Herglotz sign") {
    std::mt19937_64 rng(7);
    std::uniform_real_distribution<double> lr(-8, 8), ang(1e-6, 3.14159);
    for (const auto& m : shipped()) {
        for (int i = 0; i < 1000; ++i) {
            const cplx p = std::polar(std::pow(10.0, lr(rng)) / kTau, ang(rng));
            const cplx k = kappa(m, p), kc = kappa(m, std::conj(p));
            CHECK(std::abs(kc - std::conj(k)) <= 1e-14 * std::abs(k));
            CHECK(k.imag() >= -1e-12 * std::abs(k));
        }
    }
}

TEST_CASE("|Q| grows along rays of the right half-plane") {
    for (const auto& m : shipped()) {
        for (double phi : {-1.5, -0.7, 0.0, 0.7, 1.5}) {
            double prev = 0.0;
            for (double r : oracle::logspace(1e-6 / kTau, 1e6 / kTau, 300)) {
                const double q = std::abs(modulus_Q(m, std::polar(r, phi)));
                CHECK(q >= prev * (1 - 1e-13));
                prev = q;
            }
        }
    }
}

TEST_CASE("Re beta >= 0 on the imaginary axis") {
    for (const auto& m : shipped()) {
        for (double w : oracle::logspace(1e-8 / kTau, 1e8 / kTau, 1000)) CHECK(beta(m, cplx(0, -w)).real() >= 0.0);
    }
}

TEST_CASE("beta/p vanishes at infinity uniformly in the right half-plane") {
    const auto cc = ColeCole::from_c_inf(1.5, 0.5, 1e-13, 5000);
    double prev = kInf;
    for (double R : {1e6, 1e9, 1e12, 1e15, 1e18}) {
        double worst = 0.0;
        for (int k = 0; k <= 20; ++k) {
            const double phi = -std::numbers::pi / 2 + std::numbers::pi * k / 20;
            const cplx p = std::polar(R, phi);
            worst = std::max(worst, std::abs(beta(cc, p) / p));
        }
        CHECK(worst < prev);
        prev = worst;
    }
    // Cole-Cole: beta/p ~ (a-1)/(2a) (tau p)^{-alpha}/c_inf
    CHECK(prev < 1e-3 * (1.0 / 5000));
}

TEST_CASE("beta matches its Stieltjes representation") {
    const auto cc = ColeCole::from_c_inf(1.5, 0.5, kTau, 5000);
    const auto m = measure_of(cc);
    const double p = 1 / kTau;
    const auto res = integrate_density(m, [p](double r) { return p / (p + r); }, std::array<double, 1>{p});
    CHECK(rel(res.value, beta(cc, cplx(p)).real()) < 1e-6);
}

TEST_CASE("jump oracle") {
    const auto cc = ColeCole::from_c_inf(1.5, 0.5, kTau, 5000);
    for (double tr : {0.1, 1.0, 10.0}) CHECK(rel(jump_density_oracle(cc, tr / kTau).value, cc_spectral_density(cc, tr / kTau)) < 1e-6);
    const auto sls = StandardLinearSolid::from_c_inf(1.5, kTau, 5000);
    CHECK(rel(jump_density_oracle(sls, 0.9 / kTau).value, sls_spectral_density(sls, 0.9 / kTau)) < 1e-6);
    CHECK(std::abs(jump_density_oracle(sls, 2 / kTau).value) < 1e-8);
    CHECK_THROWS(jump_density_oracle(cc, 1.0, 0.1));
    CHECK_THROWS(jump_density_oracle(cc, -1.0));
}

TEST_CASE("ComplexWaveNumber wrappers") {
    const auto w = ComplexWaveNumber::from_model(ColeCole::from_c_inf(1.5, 0.5, kTau, 5000));
    CHECK(w.name() == "cole-cole");
    CHECK(w.measure().has_value());
    const cplx p(3e5, 2e6);
    CHECK(std::abs(w.kappa(p) - (p / w.c_inf() + w.beta(p))) <= 1e-14 * std::abs(w.kappa(p)));
    const auto e = ComplexWaveNumber::elastic(3000.0);
    CHECK(e.beta(p) == cplx(0.0));
    CHECK(e.measure()->zero);
    const auto bad = ComplexWaveNumber::custom("bad", [](cplx q) { return q / (1.0 + q); }, 1.0, 1.0);
    CHECK_FALSE(bad.measure().has_value());
    CHECK(std::abs(bad.modulus(cplx(2.0)) - cplx(9.0)) < 1e-14);
}

}  // TEST_SUITE
