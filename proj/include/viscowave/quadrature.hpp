#pragma once

#include <algorithm>
#include <array>
#include <cmath>
#include <queue>
#include <vector>

namespace viscowave::quad {

struct Result {
    double value = 0.0;
    double abs_error = 0.0;
    int evaluations = 0;
    bool converged = true;
};

struct Options {
    double rel_tol = 1e-12;
    double abs_tol = 0.0;
    int max_subdivisions = 4000;
};

namespace detail {

// 7-point Gauss / 15-point Kronrod abscissae and weights on [-1, 1].
inline constexpr std::array<double, 8> kXgk = {
    0.991455371120812639206854697526329, 0.949107912342758524526189684047851,
    0.864864423359769072789712788640926, 0.741531185599394439863864773280788,
    0.586087235467691130294144845693013, 0.405845151377397166906606412076961,
    0.207784955007898467600689403773245, 0.000000000000000000000000000000000};
inline constexpr std::array<double, 8> kWgk = {
    0.022935322010529224963732008058970, 0.063092092629978553290700663189204,
    0.104790010322250183839876322541518, 0.140653259715525918745189590510238,
    0.169004726639267902826583426598550, 0.190350578064785409913256402421014,
    0.204432940075298892414161999234649, 0.209482141084727828012999174891714};
inline constexpr std::array<double, 4> kWg = {
    0.129484966168869693270611432679082, 0.279705391489276667901467771423780,
    0.381830050505118944950369775488975, 0.417959183673469387755102040816327};

struct Segment {
    double a, b, value, error;
    bool operator<(const Segment& o) const { return error < o.error; }
};

template <class F>
Segment gk15(const F& f, double a, double b) {
    const double c = 0.5 * (a + b);
    const double h = 0.5 * (b - a);
    const double fc = f(c);
    double resk = fc * kWgk[7];
    double resg = fc * kWg[3];
    double fv1[7], fv2[7];
    for (int j = 0; j < 7; ++j) {
        const double dx = h * kXgk[j];
        fv1[j] = f(c - dx);
        fv2[j] = f(c + dx);
        resk += kWgk[j] * (fv1[j] + fv2[j]);
        if (j % 2 == 1) resg += kWg[j / 2] * (fv1[j] + fv2[j]);
    }
    // QUADPACK-style error scaling.
    const double reskh = resk * 0.5;
    double resasc = kWgk[7] * std::abs(fc - reskh);
    for (int j = 0; j < 7; ++j) {
        resasc += kWgk[j] * (std::abs(fv1[j] - reskh) + std::abs(fv2[j] - reskh));
    }
    resasc *= std::abs(h);
    double err = std::abs((resk - resg) * h);
    if (resasc != 0.0 && err != 0.0) {
        err = resasc * std::min(1.0, std::pow(200.0 * err / resasc, 1.5));
    }
    return {a, b, resk * h, err};
}

}  // namespace detail

/// Globally adaptive Gauss-Kronrod (7/15) quadrature on a finite interval.
/// The interval with the largest error estimate is bisected until the total
/// error meets max(abs_tol, rel_tol * |I|) or the subdivision budget runs out.
template <class F>
Result integrate(const F& f, double a, double b, const Options& opt = {}) {
    Result out;
    if (a == b) return out;
    std::priority_queue<detail::Segment> heap;
    auto first = detail::gk15(f, a, b);
    out.evaluations = 15;
    double total = first.value;
    double error = first.error;
    heap.push(first);
    int subdivisions = 0;
    auto done = [&] { return error <= std::max(opt.abs_tol, opt.rel_tol * std::abs(total)); };
    while (!done()) {
        if (subdivisions >= opt.max_subdivisions) {
            out.converged = false;
            break;
        }
        auto worst = heap.top();
        heap.pop();
        const double mid = 0.5 * (worst.a + worst.b);
        if (!(mid > std::min(worst.a, worst.b) && mid < std::max(worst.a, worst.b))) {
            // Interval cannot be split further in floating point.
            out.converged = false;
            heap.push(worst);
            break;
        }
        auto left = detail::gk15(f, worst.a, mid);
        auto right = detail::gk15(f, mid, worst.b);
        out.evaluations += 30;
        total += left.value + right.value - worst.value;
        error += left.error + right.error - worst.error;
        heap.push(left);
        heap.push(right);
        ++subdivisions;
    }
    // Re-sum to shed accumulated cancellation from the running updates.
    total = 0.0;
    error = 0.0;
    while (!heap.empty()) {
        total += heap.top().value;
        error += heap.top().error;
        heap.pop();
    }
    out.value = total;
    out.abs_error = error;
    if (!out.converged) out.converged = done();
    return out;
}

/// Integral over a half-line in the log variable u = ln r: decade-sized
/// pieces are summed outward from u_start (dir = +1 towards infinity, -1
/// towards zero) until the geometric tail of the decade contributions is
/// negligible; that tail estimate is then added.
template <class F>
Result integrate_log_decades(const F& g, double u_start, int dir, double rel_tol = 1e-12) {
    constexpr double kDecade = 2.302585092994046;
    constexpr double kLogMax = 690.0;
    Result out;
    double prev = 0.0, prev2 = 0.0;
    double last_value = 0.0;
    double u = u_start;
    for (int k = 0; k < 2000; ++k) {
        const double u_next = u + dir * kDecade;
        if (std::abs(u_next) > kLogMax) {
            // Out of range: close with the geometric tail of the last decades.
            const double q = prev2 > 0.0 ? prev / prev2 : 1.0;
            if (q < 1.0) {
                const double tail = last_value * q / (1.0 - q);
                out.value += tail;
                out.abs_error += 1e-2 * std::abs(tail);
            } else {
                out.converged = false;
            }
            break;
        }
        Options opt;
        opt.rel_tol = rel_tol;
        opt.abs_tol = 1e-17 * std::abs(out.value);
        auto piece = dir > 0 ? integrate(g, u, u_next, opt) : integrate(g, u_next, u, opt);
        out.value += piece.value;
        out.abs_error += piece.abs_error;
        out.evaluations += piece.evaluations;
        out.converged = out.converged && piece.converged;
        u = u_next;
        last_value = piece.value;
        const double last = std::abs(piece.value);
        if (k >= 2 && last == 0.0) return out;
        if (k >= 2 && prev > 0.0) {
            const double q = last / prev;
            if (q < 1.0) {
                const double tail = piece.value * q / (1.0 - q);
                if (std::abs(tail) <= 1e-14 * std::abs(out.value)) {
                    out.value += tail;
                    out.abs_error += 1e-2 * std::abs(tail);
                    return out;
                }
            }
        }
        prev2 = prev;
        prev = last;
    }
    return out;
}

/// Integral of f over [a, infinity), a > 0, through r = e^u.
template <class F>
Result integrate_to_infinity(const F& f, double a, double rel_tol = 1e-12) {
    auto g = [&f](double u) {
        const double r = std::exp(u);
        return f(r) * r;
    };
    return integrate_log_decades(g, std::log(a), +1, rel_tol);
}

}  // namespace viscowave::quad
