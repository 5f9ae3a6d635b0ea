#include "viscowave/measures.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <numbers>
#include <stdexcept>

namespace viscowave {

namespace {

using std::numbers::pi;

template <class... Ts>
struct overloaded : Ts... {
    using Ts::operator()...;
};

// sqrt of a radicand that is non-negative in exact arithmetic.
double guarded_sqrt(double v, double scale) {
    if (v >= 0.0) return std::sqrt(v);
    if (v >= -1e-12 * std::max(scale, 1.0)) return 0.0;
    throw std::logic_error("spectral density: negative radicand beyond roundoff");
}

// (1/pi) |Im Z^{-1/2}| for Z = re + i im, in a cancellation-free form:
// Im Z^{1/2} = sqrt((|Z| - Re Z)/2) and |Z| - Re Z = Im^2/(|Z| + Re Z) for Re Z > 0.
double im_inv_sqrt_over_pi(double re, double im) {
    const double mod = std::hypot(re, im);
    if (mod == 0.0) return kInf;
    const double rad = re > 0.0 ? im * im / (mod + re) : guarded_sqrt(mod - re, mod) * guarded_sqrt(mod - re, mod);
    return std::sqrt(0.5 * rad) / mod / pi;
}

}  // namespace

double SpectralMeasure::operator()(double r) const {
    if (zero || !(r >= r_lo) || !(r <= r_hi)) return 0.0;
    return density(r);
}

double cc_spectral_density(const ColeCole& m, double r) {
    if (r < 0.0) throw std::invalid_argument("cc_spectral_density: r must be >= 0");
    if (r == 0.0) return 0.0;
    const double c0 = std::sqrt(m.G_inf / m.rho);
    const double x = std::pow(m.tau * r, m.alpha);
    const double s = std::sin(pi * m.alpha);
    const double c = std::cos(pi * m.alpha);
    const double J1 = -(m.a - 1.0) * s * x;
    const double R1 = 1.0 + m.a * x * x + (m.a + 1.0) * c * x;
    const double Z = std::sqrt(1.0 + m.a * m.a * x * x + 2.0 * m.a * c * x);
    const double N = std::hypot(R1, J1);
    // |R1| [sqrt(1 + (J1/R1)^2) - sgn R1] == N - R1
    const double rad = R1 > 0.0 ? J1 * J1 / (N + R1) : guarded_sqrt(N - R1, N) * guarded_sqrt(N - R1, N);
    return std::sqrt(rad) / (pi * c0 * std::numbers::sqrt2 * Z);
}

double sls_spectral_density(const StandardLinearSolid& m, double r) {
    if (r < 0.0) throw std::invalid_argument("sls_spectral_density: r must be >= 0");
    const double x = m.tau * r;
    const double lo = m.a * x - 1.0;
    if (lo <= 0.0 || x >= 1.0) return 0.0;
    const double c0 = std::sqrt(m.G_inf / m.rho);
    return std::sqrt((1.0 - x) / lo) / (pi * c0);
}

double hn_spectral_density(const HavriliakNegami& m, double r) {
    if (r < 0.0) throw std::invalid_argument("hn_spectral_density: r must be >= 0");
    if (r == 0.0) return m.b < 1.0 ? 0.0 : kInf;
    const double cinf = std::sqrt(m.G_0 / m.rho);
    const double x = std::pow(m.tau * r, m.alpha);
    const double s = std::sin(pi * m.alpha);
    const double c = std::cos(pi * m.alpha);
    // Y = (1 + x e^{i pi alpha})^gamma = g e^{i gamma f}
    const double g = std::pow(1.0 + 2.0 * x * c + x * x, 0.5 * m.gamma);
    const double f = std::atan2(x * s, 1.0 + x * c);
    // Z = 1 - b / Y
    const double re = 1.0 - m.b * std::cos(m.gamma * f) / g;
    const double im = m.b * std::sin(m.gamma * f) / g;
    return im_inv_sqrt_over_pi(re, im) / cinf;
}

double cd_spectral_density(const ColeDavidson& m, double r) {
    if (r < 0.0) throw std::invalid_argument("cd_spectral_density: r must be >= 0");
    const double cinf = std::sqrt(m.G_0 / m.rho);
    const double u = m.tau * r - 1.0;
    if (u > 0.0) {
        // Y = u^gamma e^{i pi gamma} on the upper rim of the cut
        const double ug = std::pow(u, -m.gamma);
        const double re = 1.0 - m.b * std::cos(pi * m.gamma) * ug;
        const double im = m.b * std::sin(pi * m.gamma) * ug;
        return im_inv_sqrt_over_pi(re, im) / cinf;
    }
    if (u == 0.0) return 0.0;
    // 0 < tau r < 1: Y real, and Q(-r) < 0 once (1 - tau r)^gamma < b.
    const double Z = 1.0 - m.b * std::pow(-u, -m.gamma);
    if (Z >= 0.0) return 0.0;
    return 1.0 / (pi * cinf * std::sqrt(-Z));
}

SpectralMeasure make_powerlaw_measure(double a_coef, double gamma_exp) {
    if (!(a_coef > 0.0) || !std::isfinite(a_coef)) throw std::invalid_argument("power-law measure: a_coef must be > 0");
    if (!(gamma_exp > 0.0 && gamma_exp < 1.0)) throw std::invalid_argument("power-law measure: gamma must lie in (0,1)");
    SpectralMeasure m;
    m.name = "power-law";
    m.density = [a_coef, gamma_exp](double r) { return a_coef * gamma_exp * std::pow(r, gamma_exp - 1.0); };
    m.r_lo = 0.0;
    m.r_hi = kInf;
    m.high_tail = HighTail::Algebraic;
    m.tail_exponent_high = 1.0 - gamma_exp;
    m.tail_exponent_low = gamma_exp - 1.0;
    m.D_finite = false;
    return m;
}

SpectralMeasure make_finiteband_measure(double C, double a_lo, double b_hi) {
    if (!(C > 0.0) || !std::isfinite(C)) throw std::invalid_argument("finite-band measure: C must be > 0");
    if (!(a_lo >= 0.0) || !std::isfinite(a_lo)) throw std::invalid_argument("finite-band measure: a_lo must be >= 0");
    if (!(b_hi > a_lo) || !std::isfinite(b_hi)) throw std::invalid_argument("finite-band measure: b_hi must exceed a_lo");
    SpectralMeasure m;
    m.name = "finite-band";
    m.density = [C](double) { return C; };
    m.r_lo = a_lo;
    m.r_hi = b_hi;
    m.high_tail = HighTail::Compact;
    m.tail_exponent_low = 0.0;
    m.D_finite = a_lo > 0.0;
    return m;
}

SpectralMeasure make_zero_measure() {
    SpectralMeasure m;
    m.name = "zero";
    m.density = [](double) { return 0.0; };
    m.r_lo = 0.0;
    m.r_hi = 0.0;
    m.zero = true;
    return m;
}

SpectralMeasure measure_of(const RelaxationModel& model) {
    return std::visit(
        overloaded{
            [](const ColeCole& cc) {
                SpectralMeasure m;
                m.name = "cole-cole";
                m.density = [cc](double r) { return cc_spectral_density(cc, r); };
                m.high_tail = HighTail::Algebraic;
                m.tail_exponent_high = cc.alpha;
                m.tail_exponent_low = cc.alpha;
                m.breakpoints = {1.0 / cc.tau};
                return m;
            },
            [](const StandardLinearSolid& sls) {
                SpectralMeasure m;
                m.name = "sls";
                m.density = [sls](double r) { return sls_spectral_density(sls, r); };
                m.r_lo = 1.0 / (sls.a * sls.tau);
                m.r_hi = 1.0 / sls.tau;
                m.singular_lo = true;
                m.high_tail = HighTail::Compact;
                return m;
            },
            [](const HavriliakNegami& hn) {
                SpectralMeasure m;
                m.name = "havriliak-negami";
                m.density = [hn](double r) { return hn_spectral_density(hn, r); };
                m.high_tail = HighTail::Algebraic;
                m.tail_exponent_high = hn.alpha * hn.gamma;
                m.tail_exponent_low = hn.b < 1.0 ? hn.alpha : -0.5 * hn.alpha;
                m.D_finite = hn.b < 1.0;
                m.breakpoints = {1.0 / hn.tau};
                return m;
            },
            [](const ColeDavidson& cd) {
                SpectralMeasure m;
                m.name = "cole-davidson";
                m.density = [cd](double r) { return cd_spectral_density(cd, r); };
                m.r_lo = (1.0 - std::pow(cd.b, 1.0 / cd.gamma)) / cd.tau;
                m.singular_lo = true;
                m.high_tail = HighTail::Algebraic;
                m.tail_exponent_high = cd.gamma;
                m.tail_exponent_low = -0.5;
                m.D_finite = cd.b < 1.0;
                m.breakpoints = {1.0 / cd.tau};
                return m;
            },
            [](const PowerLawMeasure& pl) { return make_powerlaw_measure(pl.a_coef, pl.gamma_exp); },
            [](const FiniteBand& fb) { return make_finiteband_measure(fb.C, fb.a_lo, fb.b_hi); },
        },
        model);
}

quad::Result integrate_density(const SpectralMeasure& m, const std::function<double(double)>& kernel,
                               std::span<const double> extra_breaks, double rel_tol) {
    quad::Result total;
    if (m.zero) return total;

    std::vector<double> pts;
    pts.push_back(m.r_lo);
    for (double b : m.breakpoints) {
        if (b > m.r_lo && b < m.r_hi) pts.push_back(b);
    }
    for (double b : extra_breaks) {
        if (std::isfinite(b) && b > m.r_lo && b < m.r_hi) pts.push_back(b);
    }
    if (m.r_lo == 0.0 && std::isinf(m.r_hi) && pts.size() == 1) pts.push_back(1.0);
    pts.push_back(m.r_hi);
    std::sort(pts.begin() + 1, pts.end() - 1);
    pts.erase(std::unique(pts.begin(), pts.end()), pts.end());

    auto hk = [&](double r) {
        const double h = m.density(r);
        if (h == 0.0) return 0.0;
        return kernel(r) * h;
    };
    auto in_log = [&](double u) {
        const double r = std::exp(u);
        return hk(r) * r;
    };
    auto add = [&](const quad::Result& r) {
        total.value += r.value;
        total.abs_error += r.abs_error;
        total.evaluations += r.evaluations;
        total.converged = total.converged && r.converged;
    };

    quad::Options opt;
    opt.rel_tol = rel_tol;
    // With an inverse square-root singularity at r_lo, everything up to the
    // first interior break of the measure itself is integrated in
    // v = sqrt(r - r_lo), where the integrand is smooth.
    double sing_end = m.r_lo;
    if (m.singular_lo) {
        sing_end = m.r_hi;
        for (double b : m.breakpoints) {
            if (b > m.r_lo && b < sing_end) sing_end = b;
        }
        if (std::isinf(sing_end)) {
            sing_end = pts.size() > 2 ? pts[pts.size() - 2] : 2.0 * m.r_lo + 1.0;
        }
    }
    auto in_v = [&](double v) { return 2.0 * v * hk(m.r_lo + v * v); };
    auto in_logv = [&](double w) {
        const double v = std::exp(w);
        return 2.0 * v * v * hk(m.r_lo + v * v);
    };

    for (std::size_t i = 0; i + 1 < pts.size(); ++i) {
        const double s0 = pts[i];
        const double s1 = pts[i + 1];
        if (m.singular_lo && s1 <= sing_end) {
            const double v0 = std::sqrt(s0 - m.r_lo), v1 = std::sqrt(s1 - m.r_lo);
            if (v0 > 0.0 && v1 > 2.0 * v0) {
                add(quad::integrate(in_logv, std::log(v0), std::log(v1), opt));
            } else {
                add(quad::integrate(in_v, v0, v1, opt));
            }
        } else if (std::isinf(s1)) {
            add(quad::integrate_log_decades(in_log, std::log(s0), +1, rel_tol));
        } else if (s0 == 0.0) {
            add(quad::integrate_log_decades(in_log, std::log(s1), -1, rel_tol));
        } else if (s1 > 2.0 * s0) {
            add(quad::integrate(in_log, std::log(s0), std::log(s1), opt));
        } else {
            add(quad::integrate(hk, s0, s1, opt));
        }
    }
    return total;
}

std::optional<double> measure_D_constant(const SpectralMeasure& m) {
    if (m.zero) return 0.0;
    if (!m.D_finite) return std::nullopt;
    auto res = integrate_density(m, [](double r) { return 1.0 / r; }, {}, 1e-13);
    return res.value;
}

std::optional<double> measure_moment(const SpectralMeasure& m, int n) {
    if (n < 0) throw std::invalid_argument("measure_moment: order must be >= 0");
    if (m.zero) return 0.0;
    if (!m.all_moments_finite()) return std::nullopt;
    auto res = integrate_density(m, [n](double r) { return std::pow(r, n); }, {}, 1e-13);
    return res.value;
}

}  // namespace viscowave
