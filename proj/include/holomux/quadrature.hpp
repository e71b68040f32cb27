#pragma once

#include <cmath>
#include <queue>
#include <vector>

#include "holomux/errors.hpp"

namespace holomux {

struct QuadResult {
    double value;
    double error;  // estimated absolute error
    int panels;
};

namespace detail {

// Gauss-Kronrod 7-15 pair (QUADPACK dqk15 constants).
inline constexpr double gk_x[8] = {
    0.991455371120812639206854697526329, 0.949107912342758524526189684047851,
    0.864864423359769072789712788640926, 0.741531185599394439863864773280788,
    0.586087235467691130294144838258730, 0.405845151377397166906606412076961,
    0.207784955007898467600689403773245, 0.000000000000000000000000000000000};
inline constexpr double gk_wk[8] = {
    0.022935322010529224963732008058970, 0.063092092629978553290700663189204,
    0.104790010322250183839876322541518, 0.140653259715525918745189590510238,
    0.169004726639267902826583426598550, 0.190350578064785409913256402421014,
    0.204432940075298892414161999234649, 0.209482141084727828012999174891714};
inline constexpr double gk_wg[4] = {
    0.129484966168869693270611432679082, 0.279705391489276667901467771423780,
    0.381830050505118944950369775488975, 0.417959183673469387755102040816327};

template <class F>
inline void gk15(F& f, double a, double b, double& value, double& error) {
    const double mid = 0.5 * (a + b);
    const double half = 0.5 * (b - a);
    const double f0 = f(mid);
    double k = gk_wk[7] * f0;
    double g = gk_wg[3] * f0;
    for (int i = 0; i < 7; ++i) {
        const double dx = half * gk_x[i];
        const double fs = f(mid + dx) + f(mid - dx);
        k += gk_wk[i] * fs;
        if (i % 2 == 1) g += gk_wg[i / 2] * fs;
    }
    value = k * half;
    // |K15 - G7| estimates the G7 error, which dominates the K15 error;
    // summing it over panels is a conservative bound for the K15 total.
    error = std::abs((k - g) * half);
}

struct Panel {
    double a, b, value, error;
    bool operator<(const Panel& o) const { return error < o.error; }
};

}  // namespace detail

/// Adaptive Gauss-Kronrod integration of f over [a, b]: fixed-order rule per
/// panel, worst panel split first, hard cap on the panel count.
/// Terminates when the accumulated error estimate is below
/// max(rel_tol*|integral|, abs_tol). Throws numeric_error (carrying the best
/// estimate) if the budget is exhausted.
template <class F>
QuadResult integrate_adaptive(F&& f, double a, double b, double rel_tol,
                              double abs_tol = 0.0, int max_panels = 1 << 18) {
    if (!(b > a)) return {0.0, 0.0, 0};

    std::priority_queue<detail::Panel> heap;
    detail::Panel p{a, b, 0.0, 0.0};
    detail::gk15(f, a, b, p.value, p.error);
    double total = p.value, err = p.error;
    heap.push(p);
    int panels = 1;

    const double min_width = 1e-15 * (std::abs(a) + std::abs(b) + 1.0);
    while (err > std::max(rel_tol * std::abs(total), abs_tol)) {
        if (panels >= max_panels)
            throw numeric_error("integrate_adaptive: panel budget exhausted", total);
        detail::Panel worst = heap.top();
        if (worst.b - worst.a < min_width)
            throw numeric_error("integrate_adaptive: panel width underflow", total);
        heap.pop();
        total -= worst.value;
        err -= worst.error;
        const double mid = 0.5 * (worst.a + worst.b);
        detail::Panel left{worst.a, mid, 0.0, 0.0};
        detail::Panel right{mid, worst.b, 0.0, 0.0};
        detail::gk15(f, left.a, left.b, left.value, left.error);
        detail::gk15(f, right.a, right.b, right.value, right.error);
        total += left.value + right.value;
        err += left.error + right.error;
        heap.push(left);
        heap.push(right);
        ++panels;
    }
    return {total, err, panels};
}

}  // namespace holomux
