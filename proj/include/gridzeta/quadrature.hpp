#ifndef GRIDZETA_QUADRATURE_HPP
#define GRIDZETA_QUADRATURE_HPP

#include <algorithm>
#include <array>
#include <cmath>
#include <cstddef>
#include <queue>
#include <vector>

#include "errors.hpp"

namespace gridzeta::quad
{

struct quadrature_options
{
    double abs_tol = 1e-10;
    double rel_tol = 1e-10;
    std::size_t max_subdivisions = 2000;
};

template <typename V>
struct quadrature_result
{
    V value;
    double error;
    std::size_t subdivisions;
};

namespace detail
{

// Gauss-Kronrod 7/15 nodes and weights (QUADPACK qk15).
inline constexpr std::array<double, 8> xgk = {
    0.991455371120812639206854697526329, 0.949107912342758524526189684047851, 0.864864423359769072789712788640926,
    0.741531185599394439863864773280788, 0.586087235467691130294144845693013, 0.405845151377397166906606412076961,
    0.207784955007898467600689403773245, 0.000000000000000000000000000000000};
inline constexpr std::array<double, 8> wgk = {
    0.022935322010529224963732008058970, 0.063092092629978553290700663189204, 0.104790010322250183839876322541518,
    0.140653259715525918745189590510238, 0.169004726639267902826583426598550, 0.190350578064785409913256402421014,
    0.204432940075298892414161999234649, 0.209482141084727828012999174891714};
inline constexpr std::array<double, 4> wg = {0.129484966168869693270611432679082, 0.279705391489276667901467771423780,
                                              0.381830050505118944950369775488975, 0.417959183673469387755102040816327};

template <typename V>
struct segment
{
    double a, b;
    V value;
    double error;
    bool operator<(const segment &o) const
    {
        return error < o.error;
    }
};

template <typename V, typename F>
segment<V> gk15(F &f, double a, double b)
{
    using std::abs;
    const double c = 0.5 * (a + b), h = 0.5 * (b - a);
    const V fc = f(c);
    V kron = fc * wgk[7];
    V gauss = fc * wg[3];
    for (std::size_t j = 0; j < 7; ++j) {
        const double dx = h * xgk[j];
        const V fsum = f(c - dx) + f(c + dx);
        kron += fsum * wgk[j];
        if (j % 2u == 1u) {
            gauss += fsum * wg[j / 2u];
        }
    }
    return {a, b, kron * h, static_cast<double>(abs(V((kron - gauss) * h)))};
}

}

/// Globally adaptive Gauss-Kronrod (7/15) integration of a real- or
/// complex-valued function over [a, b]. Throws precision_error when the
/// requested tolerance is not met within opts.max_subdivisions bisections.
template <typename F>
auto integrate(F f, double a, double b, const quadrature_options &opts)
{
    using std::abs;
    using V = decltype(f(a));
    std::priority_queue<detail::segment<V>> heap;
    auto first = detail::gk15<V>(f, a, b);
    V total = first.value;
    double err = first.error;
    heap.push(first);
    std::size_t n = 0;
    while (err > std::max(opts.abs_tol, opts.rel_tol * static_cast<double>(abs(total)))) {
        if (n >= opts.max_subdivisions) {
            throw precision_error("integrate: tolerance not met within max_subdivisions");
        }
        const auto worst = heap.top();
        heap.pop();
        const double mid = 0.5 * (worst.a + worst.b);
        auto left = detail::gk15<V>(f, worst.a, mid), right = detail::gk15<V>(f, mid, worst.b);
        total += left.value + right.value - worst.value;
        err += left.error + right.error - worst.error;
        heap.push(left);
        heap.push(right);
        ++n;
        if (n % 64u == 0u) {
            // Re-accumulate to shed drift from the running updates.
            auto copy = heap;
            total = V(0);
            err = 0;
            while (!copy.empty()) {
                total += copy.top().value;
                err += copy.top().error;
                copy.pop();
            }
        }
    }
    return quadrature_result<V>{total, err, n};
}

/// Equispaced (trapezoid) rule for a 2 pi periodic function; spectrally
/// accurate for smooth periodic integrands. Returns the mean value.
template <typename F>
auto periodic_mean(F f, std::size_t n)
{
    using V = decltype(f(0.0));
    const double h = 2.0 * M_PI / static_cast<double>(n);
    V acc(0);
    for (std::size_t i = 0; i < n; ++i) {
        acc += f(h * static_cast<double>(i));
    }
    return acc / static_cast<double>(n);
}

}

#endif
