#include "viscowave/verification.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <json.hpp>
#include <numbers>
#include <sstream>
#include <stdexcept>

#include "format.hpp"
#include "viscowave/dispersion.hpp"
#include "viscowave/errors.hpp"
#include "viscowave/quadrature.hpp"

namespace viscowave {

namespace {

using std::numbers::pi;

constexpr double kSignTol = 1e-12;

std::string at(cplx p) { return "p=" + fmt17(p.real()) + (p.imag() < 0 ? "" : "+") + fmt17(p.imag()) + "i"; }

// Records the largest relative violation seen so far.
struct Worst {
    double v = 0.0;
    std::string where;
    void offer(double violation, const std::string& loc) {
        if (violation > v) {
            v = violation;
            where = loc;
        }
    }
};

CheckReport make_report(std::string name, const Worst& w, std::string grid, double tol) {
    CheckReport r;
    r.name = std::move(name);
    r.worst_violation = w.v;
    r.location = w.where;
    r.grid = std::move(grid);
    r.tolerance = tol;
    r.pass = w.v <= tol;
    return r;
}

}  // namespace

std::string CheckReport::to_json() const {
    nlohmann::json j;
    j["name"] = name;
    j["pass"] = pass;
    j["worst_violation"] = worst_violation;
    j["location"] = location;
    j["grid"] = grid;
    j["tolerance"] = tolerance;
    return j.dump();
}

HalfPlaneGrid log_polar_grid(double center, double decades, int n_radii, int n_angles) {
    if (!(center > 0.0) || !(decades > 0.0) || n_radii < 1 || n_angles < 1)
        throw std::invalid_argument("log_polar_grid: bad parameters");
    HalfPlaneGrid g;
    const double l0 = std::log10(center) - decades / 2.0;
    for (int i = 0; i < n_radii; ++i) {
        const double r = std::pow(10.0, l0 + (n_radii == 1 ? decades / 2.0 : decades * i / (n_radii - 1)));
        for (int j = 0; j < n_angles; ++j) {
            const double th = pi * (j + 0.5) / n_angles;
            g.points.push_back(std::polar(r, th));
        }
    }
    std::ostringstream os;
    os << "log-polar " << n_radii << "x" << n_angles << " radii " << fmt17(center) << "*10^[" << -decades / 2 << ","
       << decades / 2 << "]";
    g.description = os.str();
    return g;
}

RealAxisGrid real_axis_grid(double center, double decades, int n) {
    if (!(center > 0.0) || !(decades > 0.0) || n < 2) throw std::invalid_argument("real_axis_grid: bad parameters");
    RealAxisGrid g;
    const double l0 = std::log10(center) - decades / 2.0;
    for (int i = 0; i < n; ++i) g.points.push_back(std::pow(10.0, l0 + decades * i / (n - 1)));
    std::ostringstream os;
    os << "real axis " << n << " points " << fmt17(center) << "*10^[" << -decades / 2 << "," << decades / 2 << "]";
    g.description = os.str();
    return g;
}

CheckReport cm_check_relaxation(const ComplexWaveNumber& w, const HalfPlaneGrid& hp, const RealAxisGrid& ra) {
    if (hp.points.empty() || ra.points.empty()) throw std::invalid_argument("cm_check_relaxation: empty grid");
    Worst worst;
    for (cplx p : hp.points) {
        if (!(p.imag() > 0.0)) throw std::invalid_argument("cm_check_relaxation: grid point outside the open half-plane");
        const cplx q = w.modulus(p);
        if (!std::isfinite(q.real()) || !std::isfinite(q.imag())) {
            worst.offer(kInf, at(p));
            continue;
        }
        worst.offer(-q.imag() / std::abs(q), "Im Q < 0 at " + at(p));
    }
    for (double x : ra.points) {
        const cplx g = w.modulus(cplx(x, 0.0)) / x;
        worst.offer(-g.real() / std::abs(g), "Q(p)/p < 0 at p=" + fmt17(x));
        worst.offer(std::abs(g.imag()) / std::abs(g) - 1e-10, "Q(p)/p not real at p=" + fmt17(x));
    }
    return make_report("cm_relaxation:" + w.name(), worst, hp.description + "; " + ra.description, kSignTol);
}

CheckReport cm_check_relaxation(const RelaxationModel& model, const HalfPlaneGrid& hp, const RealAxisGrid& ra) {
    return cm_check_relaxation(ComplexWaveNumber::from_model(model), hp, ra);
}

CheckReport cbf_check(const std::string& name, const std::function<cplx(cplx)>& f, const HalfPlaneGrid& hp,
                      const RealAxisGrid& ra) {
    if (hp.points.empty() || ra.points.empty()) throw std::invalid_argument("cbf_check: empty grid");
    Worst worst;
    for (cplx p : hp.points) {
        const cplx v = f(p);
        if (!std::isfinite(v.real()) || !std::isfinite(v.imag())) {
            worst.offer(kInf, "non-finite at " + at(p));
            continue;
        }
        const double mag = std::abs(v);
        if (mag > 0.0) worst.offer(-v.imag() / mag, "Im f < 0 at " + at(p));
    }
    double prev = -kInf;
    for (double x : ra.points) {
        const cplx v = f(cplx(x, 0.0));
        const double mag = std::abs(v);
        if (mag == 0.0) continue;
        worst.offer(-v.real() / mag, "f < 0 at p=" + fmt17(x));
        worst.offer(std::abs(v.imag()) / mag - 1e-10, "f not real at p=" + fmt17(x));
        if (std::isfinite(prev)) worst.offer((prev - v.real()) / mag, "f decreasing at p=" + fmt17(x));
        prev = v.real();
    }
    return make_report("cbf:" + name, worst, hp.description + "; " + ra.description, kSignTol);
}

std::vector<CheckReport> admissibility_battery(const ComplexWaveNumber& w, const HalfPlaneGrid& hp,
                                               const RealAxisGrid& ra) {
    std::vector<CheckReport> out;
    out.push_back(cbf_check(w.name() + ":kappa", [&w](cplx p) { return w.kappa(p); }, hp, ra));
    out.push_back(cbf_check(
        w.name() + ":kappa^2/p",
        [&w](cplx p) {
            const cplx k = w.kappa(p);
            return k * k / p;
        },
        hp, ra));
    out.push_back(cbf_check(w.name() + ":Q", [&w](cplx p) { return w.modulus(p); }, hp, ra));
    return out;
}

KKResult kk_check(const SpectralMeasure& m, double omega, double omega0) {
    if (!(omega > 0.0) || !(omega0 > 0.0)) throw std::invalid_argument("kk_check: frequencies must be > 0");
    if (omega == omega0) throw std::invalid_argument("kk_check: omega must differ from omega0");
    const double D0 = dispersion(m, omega0);
    auto phi = [&](double s) {
        if (std::abs(s - omega0) < 1e-9 * omega0) {
            const double h = 1e-5 * omega0;
            return (dispersion(m, omega0 + h) - dispersion(m, omega0 - h)) / (2.0 * h);
        }
        return (dispersion(m, s) - D0) / (s - omega0);
    };
    quad::Options opt;
    opt.rel_tol = 1e-10;
    auto accumulate = [](quad::Result& acc, const quad::Result& r) {
        acc.value += r.value;
        acc.abs_error += r.abs_error;
        acc.converged = acc.converged && r.converged;
    };

    // PV int_0^inf phi(s)/(s - omega) ds, folded symmetrically about omega.
    quad::Result I1;
    {
        auto folded = [&](double u) { return (phi(omega + u) - phi(omega - u)) / u; };
        std::vector<double> cuts{0.0};
        const double d = std::abs(omega0 - omega);
        if (d < omega) cuts.push_back(d);
        cuts.push_back(omega);
        for (std::size_t i = 0; i + 1 < cuts.size(); ++i) accumulate(I1, quad::integrate(folded, cuts[i], cuts[i + 1], opt));
        auto rest = [&](double s) { return phi(s) / (s - omega); };
        double lo = 2.0 * omega;
        if (omega0 > lo) {
            accumulate(I1, quad::integrate(rest, lo, omega0, opt));
            accumulate(I1, quad::integrate(rest, omega0, 2.0 * omega0, opt));
            lo = 2.0 * omega0;
        }
        accumulate(I1, quad::integrate_to_infinity(rest, lo, 1e-10));
    }
    // Negative half-line folded with D odd.
    quad::Result I2;
    {
        auto g = [&](double s) { return (dispersion(m, s) + D0) / ((s + omega0) * (s + omega)); };
        const double a = std::min(omega, omega0), b = std::max(omega, omega0);
        accumulate(I2, quad::integrate(g, 0.0, a, opt));
        accumulate(I2, quad::integrate(g, a, b, opt));
        accumulate(I2, quad::integrate_to_infinity(g, b, 1e-10));
    }
    const double total = I1.value - I2.value;
    const double err = I1.abs_error + I2.abs_error;
    if (!std::isfinite(total) || err > 1e-6 * std::max(std::abs(I1.value), std::abs(I2.value)))
        throw NumericalError("kk_check: principal-value quadrature did not converge", err);

    KKResult out;
    out.lhs = attenuation(m, omega) - attenuation(m, omega0);
    out.rhs = -(omega - omega0) / pi * total;
    out.residual = std::abs(out.lhs - out.rhs);
    return out;
}

double kk_residual(const SpectralMeasure& m, double omega, double omega0) { return kk_check(m, omega, omega0).residual; }

double bernstein_primitive_f(const SpectralMeasure& m, double t) {
    if (!(t >= 0.0) || !std::isfinite(t)) throw std::invalid_argument("bernstein_primitive_f: t must be >= 0");
    if (t == 0.0 || m.zero) return 0.0;
    auto kernel = [t](double r) { return -std::expm1(-t * r) / r; };
    const std::array<double, 1> brk{1.0 / t};
    const auto res = integrate_density(m, kernel, brk);
    if (res.abs_error > 1e-8 * std::abs(res.value))
        throw NumericalError("bernstein_primitive_f: quadrature did not converge", res.abs_error);
    return res.value;
}

OmegaRect default_omega_rect(double scale) {
    if (!(scale > 0.0)) throw std::invalid_argument("default_omega_rect: scale must be > 0");
    return {-1e3 * scale, 1e3 * scale, 1e-3 * scale, 1e3 * scale};
}

namespace {

// Adds the argument increment of g between a and b, bisecting until each
// step turns by less than 0.25 rad.
void arg_walk(const std::function<cplx(cplx)>& g, cplx a, cplx b, cplx ga, cplx gb, double& total, int depth) {
    const double d = std::arg(gb / ga);
    if (std::abs(d) < 0.25 || depth > 50) {
        if (depth > 50) throw NumericalError("winding_number: contour passes too close to a zero", std::abs(ga));
        total += d;
        return;
    }
    const cplx mid = 0.5 * (a + b);
    const cplx gm = g(mid);
    arg_walk(g, a, mid, ga, gm, total, depth + 1);
    arg_walk(g, mid, b, gm, gb, total, depth + 1);
}

std::vector<double> signed_log_points(double lo, double hi, double floor) {
    // Points from lo to hi (lo < 0 < hi allowed), log-dense near zero.
    std::vector<double> pts;
    auto side = [&](double end, std::vector<double>& out) {
        const double l0 = std::log10(floor), l1 = std::log10(std::abs(end));
        const int n = std::max(2, static_cast<int>(std::ceil((l1 - l0) * 20.0)));
        for (int i = 0; i <= n; ++i) out.push_back(std::copysign(std::pow(10.0, l0 + (l1 - l0) * i / n), end));
    };
    if (lo < 0.0 && hi > 0.0) {
        std::vector<double> neg, pos;
        side(lo, neg);
        side(hi, pos);
        pts.assign(neg.rbegin(), neg.rend());
        pts.push_back(0.0);
        pts.insert(pts.end(), pos.begin(), pos.end());
    } else {
        const int n = 200;
        for (int i = 0; i <= n; ++i) pts.push_back(lo + (hi - lo) * i / n);
    }
    return pts;
}

}  // namespace

int winding_number(const std::function<cplx(cplx)>& g, const OmegaRect& rc) {
    if (!(rc.re_min < rc.re_max) || !(rc.im_min < rc.im_max)) throw std::invalid_argument("winding_number: bad rectangle");
    std::vector<cplx> path;
    const double floor = rc.im_min;
    for (double x : signed_log_points(rc.re_min, rc.re_max, floor)) path.emplace_back(x, rc.im_min);
    const double l0 = std::log10(rc.im_min), l1 = std::log10(rc.im_max);
    const int nv = std::max(2, static_cast<int>(std::ceil((l1 - l0) * 20.0)));
    for (int i = 1; i <= nv; ++i) path.emplace_back(rc.re_max, std::pow(10.0, l0 + (l1 - l0) * i / nv));
    auto top = signed_log_points(rc.re_min, rc.re_max, floor);
    for (auto it = top.rbegin() + 1; it != top.rend(); ++it) path.emplace_back(*it, rc.im_max);
    for (int i = nv - 1; i >= 0; --i) path.emplace_back(rc.re_min, std::pow(10.0, l0 + (l1 - l0) * i / nv));

    double total = 0.0;
    cplx ga = g(path[0]);
    for (std::size_t i = 0; i + 1 < path.size(); ++i) {
        const cplx gb = g(path[i + 1]);
        if (std::abs(ga) == 0.0 || std::abs(gb) == 0.0)
            throw NumericalError("winding_number: zero on the contour", 0.0);
        arg_walk(g, path[i], path[i + 1], ga, gb, total, 0);
        ga = gb;
    }
    return static_cast<int>(std::lround(total / (2.0 * pi)));
}

CheckReport minimum_phase_check(const std::string& name, const std::function<cplx(cplx)>& g, const OmegaRect& rc) {
    Worst worst;
    // interior sampling of |g|
    const int n = 30;
    double gmax = 0.0, gmin = kInf;
    std::string where;
    for (int i = 0; i < n; ++i) {
        const double y = rc.im_min * std::pow(rc.im_max / rc.im_min, (i + 0.5) / n);
        for (int j = 0; j < n; ++j) {
            const double x = rc.re_min + (rc.re_max - rc.re_min) * (j + 0.5) / n;
            const double a = std::abs(g(cplx(x, y)));
            gmax = std::max(gmax, a);
            if (a < gmin) {
                gmin = a;
                where = "omega=" + fmt17(x) + "+" + fmt17(y) + "i";
            }
        }
    }
    if (!(gmin > 0.0)) worst.offer(1.0, "zero at " + where);
    const int wn = winding_number(g, rc);
    if (wn != 0) worst.offer(std::abs(wn), "winding number " + std::to_string(wn));
    std::ostringstream os;
    os << "omega rectangle [" << fmt17(rc.re_min) << "," << fmt17(rc.re_max) << "]x[" << fmt17(rc.im_min) << ","
       << fmt17(rc.im_max) << "], " << n << "x" << n << " interior samples";
    return make_report("minimum_phase:" + name, worst, os.str(), 0.0);
}

CheckReport minimum_phase_check(const ComplexWaveNumber& w, const OmegaRect& rc) {
    return minimum_phase_check(w.name(), [&w](cplx om) { return w.kappa(cplx(0.0, -1.0) * om); }, rc);
}

PaleyWienerResult paley_wiener_diagnostic(std::span<const double> abs_m, std::span<const double> omega) {
    if (abs_m.size() != omega.size() || omega.size() < 2)
        throw std::invalid_argument("paley_wiener_diagnostic: need matching samples (at least 2)");
    std::vector<double> L(omega.size());
    for (std::size_t i = 0; i < omega.size(); ++i) {
        if (!(abs_m[i] > 0.0)) throw std::domain_error("paley_wiener_diagnostic: |M| must be > 0");
        if (!(omega[i] >= 0.0) || (i > 0 && !(omega[i] > omega[i - 1])))
            throw std::invalid_argument("paley_wiener_diagnostic: grid must be non-negative and increasing");
        L[i] = std::abs(std::log(abs_m[i]));
    }
    PaleyWienerResult out;
    double s = 0.0;
    for (std::size_t i = 0; i + 1 < L.size(); ++i) {
        const double f0 = L[i] / (1.0 + omega[i] * omega[i]);
        const double f1 = L[i + 1] / (1.0 + omega[i + 1] * omega[i + 1]);
        s += 0.5 * (f0 + f1) * (omega[i + 1] - omega[i]);
    }
    out.integral = 2.0 * s;  // M is even in omega

    // growth exponent of |ln|M|| over the last decade of the grid
    const double wmax = omega.back();
    double sx = 0, sy = 0, sxx = 0, sxy = 0;
    int cnt = 0;
    for (std::size_t i = 0; i < L.size(); ++i) {
        if (omega[i] >= wmax / 10.0 && omega[i] > 0.0 && L[i] > 0.0) {
            const double x = std::log(omega[i]), y = std::log(L[i]);
            sx += x, sy += y, sxx += x * x, sxy += x * y;
            ++cnt;
        }
    }
    if (cnt >= 2 && cnt * sxx - sx * sx > 0.0) out.growth_exponent = (cnt * sxy - sx * sy) / (cnt * sxx - sx * sx);
    out.finite = out.growth_exponent < 0.98;
    if (out.finite) {
        const double e = std::max(out.growth_exponent, 0.0);
        out.tail_bound = 2.0 * L.back() / (wmax * (1.0 - e));
    } else {
        out.tail_bound = kInf;
    }
    return out;
}

CheckReport divided_difference_check(const std::string& name, std::span<const double> x, std::span<const double> f,
                                     std::span<const int> signs, double noise) {
    if (x.size() != f.size() || x.size() < signs.size())
        throw std::invalid_argument("divided_difference_check: grid too small");
    Worst worst;
    std::vector<double> d(f.begin(), f.end());
    std::vector<double> e(f.size());
    for (std::size_t i = 0; i < f.size(); ++i) e[i] = noise * std::abs(f[i]);
    for (std::size_t n = 0; n < signs.size(); ++n) {
        if (n > 0) {
            for (std::size_t i = 0; i + n < x.size(); ++i) {
                const double h = x[i + n] - x[i];
                d[i] = (d[i + 1] - d[i]) / h;
                e[i] = (e[i + 1] + e[i]) / h;
            }
            d.resize(x.size() - n);
            e.resize(x.size() - n);
        }
        double scale = 0.0;
        for (double v : d) scale = std::max(scale, std::abs(v));
        if (scale == 0.0) continue;
        for (std::size_t i = 0; i < d.size(); ++i) {
            const double bad = -signs[n] * d[i] - e[i];
            if (bad > 0.0) worst.offer(bad / scale, "order " + std::to_string(n) + " at x=" + fmt17(x[i]));
        }
    }
    std::ostringstream os;
    os << x.size() << " points on [" << fmt17(x.front()) << "," << fmt17(x.back()) << "], orders 0.." << signs.size() - 1;
    return make_report("divided_differences:" + name, worst, os.str(), 0.0);
}

}  // namespace viscowave
