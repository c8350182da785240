#ifndef GRIDZETA_ORACLES_HPP
#define GRIDZETA_ORACLES_HPP

#include <array>
#include <cmath>
#include <complex>
#include <cstdint>
#include <cstdlib>
#include <vector>

#include "errors.hpp"
#include "quadrature.hpp"
#include "region.hpp"
#include "series.hpp"
#include "special_functions.hpp"

// Independent routes to the grid zeta function: numerical integration of
// log(1 + 3u^2 - 2u cos s - 2u cos t) over the torus, and brute-force
// counting of lattice walks.

namespace gridzeta::oracles
{

using quad::quadrature_options;

namespace detail
{

inline void require_omega(complex u, const char *who)
{
    if (!in_omega(u)) {
        throw domain_error(std::string(who) + ": u must lie in Omega");
    }
}

}

/// Tr log(1 - A u + 3u^2) as the normalized double integral over the torus,
/// evaluated as an iterated adaptive Gauss-Kronrod rule on [0, pi]^2.
inline complex log_det_torus_quadrature(complex u, const quadrature_options &opts = {})
{
    detail::require_omega(u, "log_det_torus_quadrature");
    if (u == complex(0.0)) {
        return 0.0;
    }
    const double pi = M_PI;
    const complex base = 1.0 + 3.0 * u * u;
    quadrature_options inner = opts;
    inner.abs_tol = opts.abs_tol * pi / 4.0;
    inner.rel_tol = opts.rel_tol / 4.0;
    quadrature_options outer = opts;
    outer.abs_tol = opts.abs_tol * pi * pi / 2.0;
    outer.rel_tol = opts.rel_tol / 2.0;
    auto row = [&](double t) {
        const complex c = base - 2.0 * u * std::cos(t);
        return quad::integrate([&](double s) { return std::log(c - 2.0 * u * std::cos(s)); }, 0.0, pi, inner).value;
    };
    return quad::integrate(row, 0.0, pi, outer).value / (pi * pi);
}

/// Same quantity on an n x n equispaced grid (periodic trapezoid rule).
inline complex log_det_torus_trapezoid(complex u, std::size_t n)
{
    detail::require_omega(u, "log_det_torus_trapezoid");
    const complex base = 1.0 + 3.0 * u * u;
    return quad::periodic_mean(
        [&](double t) {
            const complex c = base - 2.0 * u * std::cos(t);
            return quad::periodic_mean([&](double s) { return std::log(c - 2.0 * u * std::cos(s)); }, n);
        },
        n);
}

/// One-dimensional form: log((1+3u^2)/2) + (2/pi) int_0^{pi/2} log(1 + sqrt(1 - k^2 sin^2 w)) dw.
inline complex log_det_1d_quadrature(complex u, const quadrature_options &opts = {})
{
    detail::require_omega(u, "log_det_1d_quadrature");
    if (u == complex(0.0)) {
        return 0.0;
    }
    const complex k = sf::modulus_from_u(u);
    const complex k2 = k * k;
    quadrature_options s = opts;
    s.abs_tol = opts.abs_tol * M_PI / 4.0;
    s.rel_tol = opts.rel_tol / 2.0;
    const complex integral = quad::integrate(
                                 [&](double w) {
                                     const double sw = std::sin(w);
                                     return std::log(1.0 + std::sqrt(1.0 - k2 * sw * sw));
                                 },
                                 0.0, M_PI / 2.0, s)
                                 .value;
    return std::log((1.0 + 3.0 * u * u) / 2.0) + 2.0 / M_PI * integral;
}

/// |mean over the circle of log(1 - z cos theta) - log((1 + sqrt(1 - z^2)) / 2)|.
inline double zint_identity_residual(double z)
{
    if (!(z > -1.0 && z < 1.0)) {
        throw domain_error("zint_identity_residual: z must lie in (-1, 1)");
    }
    const quadrature_options opts{1e-15, 1e-15, 4000};
    const double lhs =
        quad::integrate([z](double th) { return std::log(1.0 - z * std::cos(th)); }, 0.0, M_PI, opts).value / M_PI;
    return std::abs(lhs - std::log(0.5 * (1.0 + std::sqrt(1.0 - z * z))));
}

/// exp(-Tr log(1 - A u + 3u^2)) / (1 - u^2) with the determinant from the torus integral.
inline complex zeta_via_quadrature(complex u, const quadrature_options &opts = {})
{
    if (u == complex(1.0) || u == complex(-1.0)) {
        throw pole_error("zeta_via_quadrature: u = +-1");
    }
    return std::exp(-log_det_torus_quadrature(u, opts)) / (1.0 - u * u);
}

// Lattice walk counters. Directions: 0 = +x, 1 = +y, 2 = -x, 3 = -y.

namespace detail
{

inline constexpr std::array<int, 4> dx = {1, 0, -1, 0};
inline constexpr std::array<int, 4> dy = {0, 1, 0, -1};

inline constexpr unsigned reverse(unsigned d)
{
    return (d + 2u) % 4u;
}

// Square table of counts over [-radius, radius]^2.
class lattice_table
{
    public:
        explicit lattice_table(int radius)
            : m_radius(radius), m_side(2 * radius + 1),
              m_cells(static_cast<std::size_t>(m_side) * static_cast<std::size_t>(m_side))
        {}
        exact::big_int &at(int x, int y)
        {
            return m_cells[index(x, y)];
        }
        const exact::big_int &at(int x, int y) const
        {
            return m_cells[index(x, y)];
        }
        int radius() const
        {
            return m_radius;
        }

    private:
        std::size_t index(int x, int y) const
        {
            return static_cast<std::size_t>(y + m_radius) * static_cast<std::size_t>(m_side) +
                   static_cast<std::size_t>(x + m_radius);
        }
        int m_radius;
        int m_side;
        std::vector<exact::big_int> m_cells;
};

}

/// Number of closed walks of length 2k from the origin of Z^2, by stepwise
/// convolution of the walk distribution.
inline exact::big_int closed_walk_count_dp(unsigned k)
{
    if (k > 32u) {
        throw domain_error("closed_walk_count_dp: k must be <= 32");
    }
    const int len = static_cast<int>(2u * k);
    detail::lattice_table cur(len);
    cur.at(0, 0) = 1;
    for (int step = 0; step < len; ++step) {
        detail::lattice_table next(len);
        // After `step` steps only |x| + |y| <= step is reachable.
        for (int y = -step; y <= step; ++y) {
            for (int x = -(step - std::abs(y)); x <= step - std::abs(y); ++x) {
                const auto &c = cur.at(x, y);
                if (c == 0) {
                    continue;
                }
                for (unsigned d = 0; d < 4u; ++d) {
                    next.at(x + detail::dx[d], y + detail::dy[d]) += c;
                }
            }
        }
        cur = std::move(next);
    }
    return cur.at(0, 0);
}

/// N_m: closed, non-backtracking, tailless walks of length m based at the
/// origin. State is (position, incoming direction); the tailless condition
/// (first step not the reverse of the last) is applied at closure.
inline exact::big_int geodesic_count_dp(unsigned m)
{
    if (m < 1u || m > 16u) {
        throw domain_error("geodesic_count_dp: m must lie in [1, 16]");
    }
    const int radius = static_cast<int>(m);
    exact::big_int total = 0;
    for (unsigned first = 0; first < 4u; ++first) {
        std::array<detail::lattice_table, 4> cur{detail::lattice_table(radius), detail::lattice_table(radius),
                                                 detail::lattice_table(radius), detail::lattice_table(radius)};
        cur[first].at(detail::dx[first], detail::dy[first]) = 1;
        for (unsigned step = 1; step < m; ++step) {
            std::array<detail::lattice_table, 4> next{detail::lattice_table(radius), detail::lattice_table(radius),
                                                      detail::lattice_table(radius), detail::lattice_table(radius)};
            const int reach = static_cast<int>(step);
            for (unsigned d = 0; d < 4u; ++d) {
                for (int y = -reach; y <= reach; ++y) {
                    for (int x = -(reach - std::abs(y)); x <= reach - std::abs(y); ++x) {
                        const auto &c = cur[d].at(x, y);
                        if (c == 0) {
                            continue;
                        }
                        for (unsigned e = 0; e < 4u; ++e) {
                            if (e != detail::reverse(d)) {
                                next[e].at(x + detail::dx[e], y + detail::dy[e]) += c;
                            }
                        }
                    }
                }
            }
            cur = std::move(next);
        }
        for (unsigned d = 0; d < 4u; ++d) {
            if (d != detail::reverse(first)) {
                total += cur[d].at(0, 0);
            }
        }
    }
    return total;
}

namespace detail
{

struct class_enumerator
{
    unsigned m;
    bool oriented;
    std::vector<unsigned> word;
    std::uint64_t count = 0;

    // w < every nontrivial rotation of w (primitive and rotation-minimal),
    // and for unoriented classes also w <= every rotation of its reverse.
    bool canonical() const
    {
        for (unsigned r = 1; r < m; ++r) {
            if (!less_than_rotation(word, r)) {
                return false;
            }
        }
        if (!oriented) {
            std::vector<unsigned> rev(m);
            for (unsigned i = 0; i < m; ++i) {
                rev[i] = reverse(word[m - 1u - i]);
            }
            for (unsigned r = 0; r < m; ++r) {
                if (compare_rotation(rev, r) < 0) {
                    return false;
                }
            }
        }
        return true;
    }
    bool less_than_rotation(const std::vector<unsigned> &w, unsigned r) const
    {
        for (unsigned i = 0; i < m; ++i) {
            const unsigned a = w[i], b = w[(i + r) % m];
            if (a != b) {
                return a < b;
            }
        }
        return false;
    }
    // Sign of (rotation r of other) - word.
    int compare_rotation(const std::vector<unsigned> &other, unsigned r) const
    {
        for (unsigned i = 0; i < m; ++i) {
            const unsigned a = other[(i + r) % m], b = word[i];
            if (a != b) {
                return a < b ? -1 : 1;
            }
        }
        return 0;
    }
    void run(unsigned depth, int x, int y)
    {
        const int remaining = static_cast<int>(m - depth);
        if (std::abs(x) + std::abs(y) > remaining) {
            return;
        }
        if (depth == m) {
            if (x == 0 && y == 0 && word.back() != reverse(word.front()) && canonical()) {
                ++count;
            }
            return;
        }
        for (unsigned d = 0; d < 4u; ++d) {
            if (depth > 0 && d == reverse(word[depth - 1u])) {
                continue;
            }
            word[depth] = d;
            run(depth + 1u, x + dx[d], y + dy[d]);
        }
    }
};

}

/// Number of primitive classes of closed non-backtracking cycles of length m,
/// up to translation (and, when !oriented, reversal of orientation).
inline std::uint64_t primitive_class_count(unsigned m, bool oriented)
{
    if (m < 1u || m > 12u) {
        throw domain_error("primitive_class_count: m must lie in [1, 12]");
    }
    detail::class_enumerator e{m, oriented, std::vector<unsigned>(m), 0};
    e.run(0, 0, 0);
    return e.count;
}

}

#endif
