#include "viscowave/dispersion.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <stdexcept>
#include <thread>

#include "viscowave/errors.hpp"

namespace viscowave {

namespace {

constexpr double kRelTol = 1e-8;
constexpr double kAbsScale = 1e-10;

double finish(const quad::Result& res, const char* what, double omega) {
    const double tol = std::max(kRelTol * std::abs(res.value), kAbsScale * std::abs(res.value));
    if (!std::isfinite(res.value) || res.abs_error > tol) {
        const double achieved = res.value != 0.0 ? res.abs_error / std::abs(res.value) : res.abs_error;
        throw NumericalError(std::string(what) + ": quadrature did not converge at omega=" + std::to_string(omega) +
                                 " (value " + std::to_string(res.value) + ", error " + std::to_string(res.abs_error) + ")",
                             achieved);
    }
    return res.value;
}

}  // namespace

double attenuation(const SpectralMeasure& m, double omega) {
    if (!std::isfinite(omega)) throw std::invalid_argument("attenuation: omega must be finite");
    omega = std::abs(omega);
    if (omega == 0.0 || m.zero) return 0.0;
    // omega^2/(omega^2 + r^2) written to stay finite for r/omega up to 1e300
    auto kernel = [omega](double r) {
        const double t = r / omega;
        if (t <= 1.0) return 1.0 / (1.0 + t * t);
        const double s = 1.0 / t;
        return s * s / (1.0 + s * s);
    };
    const std::array<double, 1> brk{omega};
    return finish(integrate_density(m, kernel, brk), "attenuation", omega);
}

double dispersion(const SpectralMeasure& m, double omega) {
    if (!std::isfinite(omega)) throw std::invalid_argument("dispersion: omega must be finite");
    if (omega == 0.0 || m.zero) return 0.0;
    const double sgn = omega > 0.0 ? 1.0 : -1.0;
    omega = std::abs(omega);
    auto kernel = [omega](double r) {
        const double t = r / omega;
        if (t <= 1.0) return t / (1.0 + t * t);
        return 1.0 / (t + 1.0 / t);
    };
    const std::array<double, 1> brk{omega};
    const double d = finish(integrate_density(m, kernel, brk), "dispersion", omega);
    if (d < 0.0) throw NumericalError("dispersion: sign differs from sign of omega", std::abs(d));
    return sgn * d;
}

double phase_speed(const SpectralMeasure& m, double c_inf, double omega) {
    if (!(omega > 0.0)) throw std::invalid_argument("phase_speed: omega must be > 0");
    const double slow = (std::isinf(c_inf) ? 0.0 : 1.0 / c_inf) + dispersion(m, omega) / omega;
    return 1.0 / slow;
}

double phase_speed(const RelaxationModel& model, double omega) {
    return phase_speed(measure_of(model), c_inf(model), omega);
}

DispersionCurve curve(const SpectralMeasure& m, double c_inf, std::optional<double> c_0,
                      std::span<const double> omega_grid) {
    if (omega_grid.empty()) throw std::invalid_argument("curve: empty frequency grid");
    for (std::size_t i = 0; i < omega_grid.size(); ++i) {
        if (!(omega_grid[i] > 0.0) || !std::isfinite(omega_grid[i]))
            throw std::invalid_argument("curve: frequencies must be positive and finite");
        if (i > 0 && !(omega_grid[i] > omega_grid[i - 1]))
            throw std::invalid_argument("curve: frequencies must be strictly increasing");
    }
    const std::size_t n = omega_grid.size();
    DispersionCurve out;
    out.model = m.name;
    out.omega.assign(omega_grid.begin(), omega_grid.end());
    out.attenuation.resize(n);
    out.dispersion.resize(n);
    out.phase_speed.resize(n);
    out.c_inf = c_inf;
    out.c_0 = c_0;

    // Each index is written by exactly one worker; the first failure is rethrown.
    std::vector<std::exception_ptr> errors(n);
    auto work = [&](std::size_t i) {
        try {
            const double w = omega_grid[i];
            out.attenuation[i] = attenuation(m, w);
            out.dispersion[i] = dispersion(m, w);
            out.phase_speed[i] = 1.0 / ((std::isinf(c_inf) ? 0.0 : 1.0 / c_inf) + out.dispersion[i] / w);
        } catch (...) {
            errors[i] = std::current_exception();
        }
    };
    const std::size_t workers = std::min<std::size_t>(n, std::max(1u, std::thread::hardware_concurrency()));
    if (workers <= 1) {
        for (std::size_t i = 0; i < n; ++i) work(i);
    } else {
        std::vector<std::thread> pool;
        for (std::size_t t = 0; t < workers; ++t) {
            pool.emplace_back([&, t] {
                for (std::size_t i = t; i < n; i += workers) work(i);
            });
        }
        for (auto& th : pool) th.join();
    }
    for (auto& e : errors) {
        if (e) std::rethrow_exception(e);
    }
    return out;
}

DispersionCurve curve(const RelaxationModel& model, std::span<const double> omega_grid) {
    auto c = curve(measure_of(model), c_inf(model), c_0(model), omega_grid);
    c.model = model_name(model);
    return c;
}

std::vector<double> log_grid(double lo, double hi, int n_per_decade) {
    if (!(lo > 0.0) || !(hi >= lo) || !std::isfinite(hi)) throw std::invalid_argument("log_grid: need 0 < lo <= hi");
    if (n_per_decade < 1) throw std::invalid_argument("log_grid: points per decade must be >= 1");
    const double l0 = std::log10(lo);
    const double span = std::log10(hi) - l0;
    const long steps = static_cast<long>(std::floor(span * n_per_decade + 1e-9));
    std::vector<double> g;
    g.reserve(steps + 2);
    for (long k = 0; k <= steps; ++k) g.push_back(std::pow(10.0, l0 + static_cast<double>(k) / n_per_decade));
    g.front() = lo;
    if (g.back() < hi * (1.0 - 1e-12)) g.push_back(hi);
    else g.back() = hi;
    return g;
}

}  // namespace viscowave
