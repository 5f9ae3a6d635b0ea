#include "viscowave/greens.hpp"

#include <fftw3.h>

#include <algorithm>
#include <cmath>
#include <mutex>
#include <numbers>
#include <stdexcept>

#include "format.hpp"
#include "viscowave/errors.hpp"
#include "viscowave/measures.hpp"

namespace viscowave {

namespace {

using std::numbers::pi;

// FFTW planning is not thread-safe; execution on distinct arrays is.
std::mutex& fftw_planner_mutex() {
    static std::mutex m;
    return m;
}

double binom(int n, int k) {
    double r = 1.0;
    for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
    return r;
}

double factorial(int n) { return n <= 1 ? 1.0 : n * factorial(n - 1); }

// Coefficients of the large-p expansion of G(p) e^{p t_w} in q = 1/p, where
// G is the 1D or 3D transform, given the moments a_n of a measure with
// finite moments: beta = sum (-1)^n a_n q^n.
std::vector<double> highfreq_series(int dim, double x, double c_inf, const std::vector<double>& moments, int order) {
    const int M = order + 1;
    std::vector<double> bs(M, 0.0);
    for (int i = 0; i < M && i < static_cast<int>(moments.size()); ++i) bs[i] = (i % 2 == 0 ? 1.0 : -1.0) * moments[i];
    // E = exp(-x beta(q)) as a power series
    std::vector<double> c(M), E(M, 0.0);
    for (int i = 0; i < M; ++i) c[i] = -x * bs[i];
    E[0] = std::exp(c[0]);
    for (int m = 1; m < M; ++m) {
        double s = 0.0;
        for (int i = 1; i <= m; ++i) s += i * c[i] * E[m - i];
        E[m] = s / m;
    }
    // A = 1/c_inf + q beta
    std::vector<double> A(M, 0.0);
    A[0] = 1.0 / c_inf;
    for (int i = 1; i < M; ++i) A[i] = bs[i - 1];
    auto mul = [M](const std::vector<double>& f, const std::vector<double>& g) {
        std::vector<double> h(M, 0.0);
        for (int i = 0; i < M; ++i)
            for (int j = 0; i + j < M; ++j) h[i + j] += f[i] * g[j];
        return h;
    };
    std::vector<double> e(M, 0.0);
    if (dim == 1) {
        // (q/2) A E
        const auto AE = mul(A, E);
        for (int m = 1; m < M; ++m) e[m] = 0.5 * AE[m - 1];
    } else {
        const auto AAE = mul(mul(A, A), E);
        for (int m = 0; m < M; ++m) e[m] = AAE[m] / (4.0 * pi * x);
    }
    return e;
}

Waveform synthesize(const ComplexWaveNumber& w, int dim, double x, const GreenOptions& opt) {
    const int n = opt.n_samples;
    if (!(x > 0.0) || !std::isfinite(x)) throw std::invalid_argument("green: x must be > 0");
    if (n < 4096 || (n & (n - 1)) != 0) throw std::invalid_argument("green: n_samples must be a power of two >= 4096");
    if (!(opt.T > 0.0) || !std::isfinite(opt.T)) throw std::invalid_argument("green: T must be > 0");
    if (opt.jump_terms < 0 || opt.jump_terms > 6) throw std::invalid_argument("green: jump_terms must lie in [0,6]");
    const double cinf = w.c_inf();
    const bool has_front = std::isfinite(cinf);
    const double tw = has_front ? x / cinf : 0.0;
    if (has_front && !(opt.T > tw)) throw std::invalid_argument("green: T must exceed the wavefront time x/c_inf");

    const int N = 2 * n;
    const double dt = opt.T / n;
    const double P = N * dt;
    const double eps = 9.0 / opt.T;
    const double s = 20.0 / opt.T;

    Waveform out;
    out.dim = dim;
    out.x = x;
    out.model = w.name();
    if (has_front) out.wavefront_time = tw;
    // Residue of kappa/(2p^2) at p = 0; the 3D transform is regular there.
    if (auto c0 = w.c_0(); c0 && dim == 1) out.dc_step_amplitude = 1.0 / (2.0 * *c0);

    // Wavefront singularities of bounded spectra.
    std::vector<double> d(opt.jump_terms + 1, 0.0);
    double impulse = 0.0;
    if (has_front && opt.jump_terms > 0) {
        const auto m = w.measure();
        if (m && m->all_moments_finite()) {
            std::vector<double> mom;
            for (int k = 0; k <= opt.jump_terms; ++k) mom.push_back(measure_moment(*m, k).value_or(0.0));
            const auto e = highfreq_series(dim, x, cinf, mom, opt.jump_terms);
            impulse = e[0];
            for (int k = 1; k <= opt.jump_terms; ++k) {
                double acc = e[k];
                for (int j = 1; j < k; ++j) acc -= d[j] * ((k - j) % 2 == 0 ? 1.0 : -1.0) * binom(k - 1, k - j) * std::pow(s, k - j);
                d[k] = acc;
            }
        }
    }
    out.wavefront_impulse = impulse;

    fftw_complex* buf = fftw_alloc_complex(N);
    if (!buf) throw std::bad_alloc();
    fftw_plan plan;
    {
        std::lock_guard<std::mutex> lock(fftw_planner_mutex());
        plan = fftw_plan_dft_1d(N, buf, buf, FFTW_BACKWARD, FFTW_ESTIMATE);
    }

    std::vector<std::complex<double>> R(n);
    for (int k = 0; k < n; ++k) {
        const cplx p(eps, 2.0 * pi * k / P);
        const cplx kap = w.kappa(p);
        const cplx b = has_front ? w.beta(p) : kap;
        cplx G = dim == 1 ? kap / (2.0 * p * p) : kap * kap / (4.0 * pi * x * p * p);
        G *= std::exp(-b * x);
        if (impulse != 0.0) G -= impulse;
        for (int j = 1; j <= opt.jump_terms; ++j) {
            if (d[j] != 0.0) G -= d[j] / std::pow(p + s, j);
        }
        if (has_front) G *= std::exp(-p * tw);
        if (opt.taper && k > 0.9 * n) G *= 0.5 * (1.0 + std::cos(pi * (k - 0.9 * n) / (0.1 * n)));
        if (!std::isfinite(G.real()) || !std::isfinite(G.imag())) {
            std::lock_guard<std::mutex> lock(fftw_planner_mutex());
            fftw_destroy_plan(plan);
            fftw_free(buf);
            throw NumericalError("green: non-finite spectrum at omega=" + fmt17(p.imag()), kInf);
        }
        R[k] = G;
    }
    // conjugate-symmetric spectrum, Nyquist bin zeroed
    for (int k = 0; k < n; ++k) {
        buf[k][0] = R[k].real();
        buf[k][1] = R[k].imag();
    }
    buf[n][0] = buf[n][1] = 0.0;
    for (int k = 1; k < n; ++k) {
        buf[N - k][0] = R[k].real();
        buf[N - k][1] = -R[k].imag();
    }
    fftw_execute(plan);

    out.t.resize(n);
    out.u.resize(n);
    double max_im = 0.0;
    for (int j = 0; j < n; ++j) {
        const double t = j * dt;
        const double g = std::exp(eps * t) / P;
        out.t[j] = t;
        out.u[j] = g * buf[j][0];
        max_im = std::max(max_im, std::abs(g * buf[j][1]));
    }
    {
        std::lock_guard<std::mutex> lock(fftw_planner_mutex());
        fftw_destroy_plan(plan);
    }
    fftw_free(buf);

    for (int k = 1; k <= opt.jump_terms; ++k) {
        if (d[k] == 0.0) continue;
        for (int j = 0; j < n; ++j) {
            const double tp = out.t[j] - tw;
            if (tp > 0.0) {
                out.u[j] += d[k] * std::pow(tp, k - 1) * std::exp(-s * tp) / factorial(k - 1);
            } else if (tp == 0.0 && k == 1) {
                out.u[j] += 0.5 * d[k];
            }
        }
    }

    double peak = 0.0;
    for (double v : out.u) peak = std::max(peak, std::abs(v));
    out.imag_residual = peak > 0.0 ? max_im / peak : max_im;
    // Truncation error: the part of the Bromwich integral beyond the Nyquist
    // frequency, extrapolated from the local log-log decay of the top band.
    const int k1 = static_cast<int>(0.95 * n), k2 = n - 1;
    const double r1 = std::abs(R[k1]), r2 = std::abs(R[k2]);
    const double omega_n = pi / dt;
    double slope = 0.0;
    if (r1 > 0.0 && r2 > 0.0) slope = -std::log(r2 / r1) / std::log(static_cast<double>(k2) / k1);
    double tail_band = 0.0;
    for (int k = k1; k < n; ++k) tail_band = std::max(tail_band, std::abs(R[k]));
    const double beyond = slope > 1.5 ? r2 * omega_n / (slope - 1.0) : tail_band * omega_n;
    const double est = beyond / pi * std::exp(eps * opt.T);
    // A delta of weight w is worth w/dt in sample units.
    const double scale = std::max(peak, std::abs(impulse) / dt);
    out.aliasing_error = scale > 0.0 ? est / scale : est;
    if (scale > 0.0 && out.aliasing_error > 1e-4 && !opt.taper) {
        throw NumericalError("green: spectrum not resolved (estimated truncation error " + fmt17(out.aliasing_error) +
                                 " of peak); increase n_samples",
                             out.aliasing_error);
    }
    return out;
}

}  // namespace

Waveform green1d(const ComplexWaveNumber& w, double x, const GreenOptions& opt) { return synthesize(w, 1, x, opt); }

Waveform green1d(const RelaxationModel& model, double x, int n_samples, double T) {
    GreenOptions opt;
    opt.n_samples = n_samples;
    opt.T = T;
    return green1d(ComplexWaveNumber::from_model(model), x, opt);
}

Waveform green3d(const ComplexWaveNumber& w, double x, const GreenOptions& opt) { return synthesize(w, 3, x, opt); }

Waveform green3d(const RelaxationModel& model, double x, int n_samples, double T) {
    GreenOptions opt;
    opt.n_samples = n_samples;
    opt.T = T;
    return green3d(ComplexWaveNumber::from_model(model), x, opt);
}

double causality_metric(const Waveform& w) {
    if (!w.wavefront_time) throw std::invalid_argument("causality_metric: waveform has no wavefront");
    const double tw = *w.wavefront_time;
    const double dt = w.dt();
    if (w.t.empty() || !(tw > 0.0) || !(tw < w.t.back())) throw std::invalid_argument("causality_metric: wavefront not interior");
    double pre = 0.0, peak = 0.0;
    for (std::size_t j = 0; j < w.u.size(); ++j) {
        peak = std::max(peak, std::abs(w.u[j]));
        if (w.t[j] < tw - 2.0 * dt) pre = std::max(pre, std::abs(w.u[j]));
    }
    return peak > 0.0 ? pre / peak : 0.0;
}

std::vector<double> wavefront_smoothness(const Waveform& w, int order) {
    if (!w.wavefront_time) throw std::invalid_argument("wavefront_smoothness: waveform has no wavefront");
    if (order < 0 || order > 3) throw std::invalid_argument("wavefront_smoothness: order must lie in [0,3]");
    const double tw = *w.wavefront_time;
    const double dt = w.dt();
    const long n = static_cast<long>(w.u.size());
    const long i = static_cast<long>(std::ceil(tw / dt - 1e-9));
    if (i < 2 || i + 2 >= n) throw std::invalid_argument("wavefront_smoothness: wavefront not interior");
    double peak = 0.0;
    for (double v : w.u) peak = std::max(peak, std::abs(v));
    std::vector<double> out(order + 1, 0.0);
    if (peak == 0.0) return out;
    out[0] = std::abs(w.u[i + 1] - w.u[i - 1]) / peak;
    // Centered differences at the front sample, relative to their largest
    // magnitude anywhere on the waveform.
    auto centered = [&w](int k, long j) {
        const auto& u = w.u;
        switch (k) {
            case 1: return u[j + 1] - u[j - 1];
            case 2: return u[j + 1] - 2.0 * u[j] + u[j - 1];
            default: return u[j + 2] - 2.0 * u[j + 1] + 2.0 * u[j - 1] - u[j - 2];
        }
    };
    for (int k = 1; k <= order; ++k) {
        double global = 0.0;
        for (long j = 2; j + 2 < n; ++j) global = std::max(global, std::abs(centered(k, j)));
        out[k] = global > 0.0 ? std::abs(centered(k, i)) / global : 0.0;
    }
    return out;
}

void write_csv(std::ostream& os, const Waveform& w, const std::string& model_json) {
    os << "# model: " << model_json << "\n";
    os << "# dim: " << w.dim << "\n";
    os << "# x_m: " << fmt17(w.x) << "\n";
    os << "# wavefront_time_s: " << (w.wavefront_time ? fmt17(*w.wavefront_time) : "none") << "\n";
    os << "# dc_step_amplitude: " << (w.dc_step_amplitude ? fmt17(*w.dc_step_amplitude) : "none") << "\n";
    os << "# wavefront_impulse: " << fmt17(w.wavefront_impulse) << "\n";
    os << "# aliasing_error: " << fmt17(w.aliasing_error) << "\n";
    os << "t_seconds,u\n";
    for (std::size_t j = 0; j < w.t.size(); ++j) os << fmt17(w.t[j]) << "," << fmt17(w.u[j]) << "\n";
}

}  // namespace viscowave
