#ifndef GRIDZETA_FINITE_GRAPHS_HPP
#define GRIDZETA_FINITE_GRAPHS_HPP

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstddef>
#include <ostream>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "errors.hpp"
#include "region.hpp"
#include "special_functions.hpp"
#include "surface.hpp"

// Square grid graphs P_n x P_m and torus graphs C_n x C_m, their Ihara zeta
// functions through the Bass determinant
//     1/zeta(u) = (1 - u^2)^(e - v) det(I - A u + (D - I) u^2),
// and the normalized limit zeta^(1/(nm)) -> Z of the infinite grid.

namespace gridzeta::graphs
{

enum class graph_family { generic, grid, torus };

inline std::string_view to_string(graph_family f)
{
    switch (f) {
        case graph_family::generic:
            return "generic";
        case graph_family::grid:
            return "grid";
        case graph_family::torus:
            return "torus";
    }
    return "?";
}

/// Undirected multigraph without loops, stored as neighbour lists.
class finite_graph
{
    public:
        using edge = std::pair<std::size_t, std::size_t>;

        finite_graph(std::size_t n_vertices, std::vector<edge> edges, graph_family family = graph_family::generic,
                     std::size_t rows = 0, std::size_t cols = 0)
            : m_edges(std::move(edges)), m_neighbours(n_vertices), m_family(family), m_rows(rows), m_cols(cols)
        {
            if (n_vertices == 0) {
                throw domain_error("finite_graph: need at least one vertex");
            }
            for (const auto &[i, j] : m_edges) {
                if (i >= n_vertices || j >= n_vertices || i == j) {
                    throw domain_error("finite_graph: invalid edge");
                }
                m_neighbours[i].push_back(j);
                m_neighbours[j].push_back(i);
                m_bandwidth = std::max(m_bandwidth, i > j ? i - j : j - i);
            }
            for (const auto &nb : m_neighbours) {
                if (nb.empty()) {
                    throw domain_error("finite_graph: isolated vertex");
                }
            }
        }

        std::size_t n_vertices() const noexcept
        {
            return m_neighbours.size();
        }
        std::size_t n_edges() const noexcept
        {
            return m_edges.size();
        }
        std::size_t degree(std::size_t i) const
        {
            return m_neighbours.at(i).size();
        }
        const std::vector<std::size_t> &neighbours(std::size_t i) const
        {
            return m_neighbours.at(i);
        }
        const std::vector<edge> &edges() const noexcept
        {
            return m_edges;
        }
        /// Number of edges joining i and j.
        std::size_t adjacency(std::size_t i, std::size_t j) const
        {
            const auto &nb = m_neighbours.at(i);
            return static_cast<std::size_t>(std::count(nb.begin(), nb.end(), j));
        }
        /// max |i - j| over edges; the half-width of the Bass matrix band.
        std::size_t bandwidth() const noexcept
        {
            return m_bandwidth;
        }
        graph_family family() const noexcept
        {
            return m_family;
        }
        std::size_t rows() const noexcept
        {
            return m_rows;
        }
        std::size_t cols() const noexcept
        {
            return m_cols;
        }
        bool is_regular(std::size_t d) const
        {
            return std::all_of(m_neighbours.begin(), m_neighbours.end(), [d](const auto &nb) { return nb.size() == d; });
        }

    private:
        std::vector<edge> m_edges;
        std::vector<std::vector<std::size_t>> m_neighbours;
        std::size_t m_bandwidth = 0;
        graph_family m_family;
        std::size_t m_rows;
        std::size_t m_cols;
};

/// P_n x P_m; vertex (x, y) is labelled x m + y.
inline finite_graph grid_graph(std::size_t n, std::size_t m)
{
    if (n < 2u || m < 2u) {
        throw domain_error("grid_graph: n, m must be >= 2");
    }
    std::vector<finite_graph::edge> edges;
    for (std::size_t x = 0; x < n; ++x) {
        for (std::size_t y = 0; y < m; ++y) {
            const std::size_t v = x * m + y;
            if (y + 1u < m) {
                edges.emplace_back(v, v + 1u);
            }
            if (x + 1u < n) {
                edges.emplace_back(v, v + m);
            }
        }
    }
    return finite_graph(n * m, std::move(edges), graph_family::grid, n, m);
}

namespace detail
{

// Position of cycle vertex x in the order 0, n-1, 1, n-2, 2, ...; neighbours
// on the cycle end up at most two positions apart.
inline std::size_t folded(std::size_t x, std::size_t n)
{
    return x < (n + 1u) / 2u ? 2u * x : 2u * (n - 1u - x) + 1u;
}

}

/// C_n x C_m. Vertices are labelled in folded order along both cycles so that
/// the Bass matrix has bandwidth 2m rather than (n - 1) m.
inline finite_graph torus_graph(std::size_t n, std::size_t m)
{
    if (n < 3u || m < 3u) {
        throw domain_error("torus_graph: n, m must be >= 3");
    }
    auto label = [n, m](std::size_t x, std::size_t y) { return detail::folded(x, n) * m + detail::folded(y, m); };
    std::vector<finite_graph::edge> edges;
    edges.reserve(2u * n * m);
    for (std::size_t x = 0; x < n; ++x) {
        for (std::size_t y = 0; y < m; ++y) {
            edges.emplace_back(label(x, y), label(x, (y + 1u) % m));
            edges.emplace_back(label(x, y), label((x + 1u) % n, y));
        }
    }
    return finite_graph(n * m, std::move(edges), graph_family::torus, n, m);
}

/// One "i j" pair per line.
inline void write_edge_list(std::ostream &os, const finite_graph &g)
{
    for (const auto &[i, j] : g.edges()) {
        os << i << ' ' << j << '\n';
    }
}

template <typename Scalar>
struct band_factorization
{
    std::vector<Scalar> pivots;
    std::size_t swaps = 0;
};

/// LU factorization with partial pivoting of I - A u + (D - I) u^2 in band
/// storage. Rows keep columns [i - bw, i + 2 bw] to absorb pivoting fill-in.
template <typename Scalar>
band_factorization<Scalar> bass_factorize(const finite_graph &g, const Scalar &u)
{
    using sf::detail::magnitude;
    const std::size_t n = g.n_vertices(), bw = g.bandwidth();
    const std::size_t width = 3u * bw + 1u;
    std::vector<Scalar> band(n * width, Scalar(0));
    auto at = [&](std::size_t i, std::size_t j) -> Scalar & { return band[i * width + (j + bw - i)]; };
    const Scalar u2 = u * u;
    for (std::size_t i = 0; i < n; ++i) {
        at(i, i) = Scalar(1) + Scalar(static_cast<double>(g.degree(i)) - 1.0) * u2;
        for (std::size_t j : g.neighbours(i)) {
            at(i, j) -= u;
        }
    }
    band_factorization<Scalar> out;
    out.pivots.reserve(n);
    for (std::size_t i = 0; i < n; ++i) {
        const std::size_t last_row = std::min(n - 1u, i + bw);
        const std::size_t last_col = std::min(n - 1u, i + 2u * bw);
        std::size_t p = i;
        for (std::size_t r = i + 1u; r <= last_row; ++r) {
            if (magnitude(at(r, i)) > magnitude(at(p, i))) {
                p = r;
            }
        }
        if (p != i) {
            for (std::size_t j = i; j <= last_col; ++j) {
                std::swap(at(i, j), at(p, j));
            }
            ++out.swaps;
        }
        const Scalar pivot = at(i, i);
        out.pivots.push_back(pivot);
        if (pivot == Scalar(0)) {
            continue;
        }
        for (std::size_t r = i + 1u; r <= last_row; ++r) {
            if (at(r, i) == Scalar(0)) {
                continue;
            }
            const Scalar f = at(r, i) / pivot;
            at(r, i) = Scalar(0);
            for (std::size_t j = i + 1u; j <= last_col; ++j) {
                at(r, j) -= f * at(i, j);
            }
        }
    }
    return out;
}

/// log det(I - A u + (D - I) u^2) as the sum of principal logs of the LU
/// pivots (plus i pi per row swap). With \p continuous_branch set, any row
/// swap or pivot with nonpositive real part is reported as a branch_error
/// instead of being wrapped.
template <typename Scalar>
Scalar bass_log_det(const finite_graph &g, const Scalar &u, bool continuous_branch = false)
{
    using std::log;
    using sf::detail::real_part;
    const auto lu = bass_factorize(g, u);
    if (continuous_branch && lu.swaps != 0u) {
        throw branch_error("bass_log_det: row exchanges break the continuous branch (" + std::to_string(lu.swaps) +
                           " swaps)");
    }
    Scalar acc(0);
    for (std::size_t i = 0; i < lu.pivots.size(); ++i) {
        const Scalar &p = lu.pivots[i];
        if (p == Scalar(0)) {
            throw pole_error("bass_log_det: singular matrix (|det| = 0)");
        }
        if (continuous_branch && !(real_part(p) > 0)) {
            throw branch_error("bass_log_det: pivot " + std::to_string(i) + " has nonpositive real part");
        }
        if constexpr (sf::detail::is_complex_v<Scalar>) {
            acc += log(p);
        } else {
            if (p < Scalar(0)) {
                throw branch_error("bass_log_det: negative pivot in real arithmetic");
            }
            acc += log(p);
        }
    }
    if constexpr (sf::detail::is_complex_v<Scalar>) {
        if (lu.swaps % 2u) {
            acc += Scalar(0, M_PI);
        }
    }
    return acc;
}

/// det(I - A u + (D - I) u^2) via the band LU.
inline complex bass_determinant(const finite_graph &g, complex u)
{
    const auto lu = bass_factorize(g, u);
    complex d = lu.swaps % 2u ? -1.0 : 1.0;
    for (const auto &p : lu.pivots) {
        d *= p;
    }
    return d;
}

namespace detail
{

inline void require_not_pole(const finite_graph &g, complex u, const char *who)
{
    if (g.n_edges() > g.n_vertices() && (u == complex(1.0) || u == complex(-1.0))) {
        throw pole_error(std::string(who) + ": u = +-1 is a pole when e > v");
    }
}

// log zeta from log det, checking |det| against the pole threshold.
inline complex log_zeta_from_log_det(const finite_graph &g, complex u, complex log_det, const char *who)
{
    if (log_det.real() < std::log(1e-12)) {
        throw pole_error(std::string(who) + ": |det| = " + std::to_string(std::exp(log_det.real())) +
                         " is below 1e-12");
    }
    const double excess = static_cast<double>(g.n_edges()) - static_cast<double>(g.n_vertices());
    return -excess * std::log(1.0 - u * u) - log_det;
}

}

/// Ihara zeta function of a finite graph via the Bass determinant formula.
inline complex ihara_zeta_finite(const finite_graph &g, complex u)
{
    detail::require_not_pole(g, u, "ihara_zeta_finite");
    if (u == complex(0.0)) {
        return 1.0;
    }
    return std::exp(detail::log_zeta_from_log_det(g, u, bass_log_det(g, u), "ihara_zeta_finite"));
}

/// Adjacency eigenvalue 2 cos(2 pi j / n) + 2 cos(2 pi l / m) of C_n x C_m.
template <typename Real>
Real torus_eigenvalue(std::size_t j, std::size_t l, std::size_t n, std::size_t m)
{
    using std::cos;
    const Real two_pi = Real(2) * boost::math::constants::pi<Real>();
    return Real(2) * cos(Real(two_pi * Real(j)) / Real(n)) + Real(2) * cos(Real(two_pi * Real(l)) / Real(m));
}

/// det(I - A u + 3u^2) for C_n x C_m as prod_{j,l} (1 - lambda_{jl} u + 3u^2).
inline complex torus_determinant_eigen(std::size_t n, std::size_t m, complex u)
{
    complex d = 1.0;
    for (std::size_t j = 0; j < n; ++j) {
        for (std::size_t l = 0; l < m; ++l) {
            d *= 1.0 - torus_eigenvalue<double>(j, l, n, m) * u + 3.0 * u * u;
        }
    }
    return d;
}

/// sum over eigenvalues of log(1 - lambda u + 3u^2); each factor must have
/// positive real part so the principal logs add up to a continuous branch.
template <typename Scalar>
Scalar torus_log_det_eigen(std::size_t n, std::size_t m, const Scalar &u)
{
    using std::log;
    using R = sf::detail::real_t<Scalar>;
    Scalar acc(0);
    const Scalar base = Scalar(1) + R(3) * u * u;
    for (std::size_t j = 0; j < n; ++j) {
        for (std::size_t l = 0; l < m; ++l) {
            const Scalar factor = base - torus_eigenvalue<R>(j, l, n, m) * u;
            if (!(sf::detail::real_part(factor) > R(0))) {
                throw branch_error("torus_log_det_eigen: factor (j, l) = (" + std::to_string(j) + ", " +
                                   std::to_string(l) + ") has nonpositive real part");
            }
            acc += log(factor);
        }
    }
    return acc;
}

/// Radius of the disk on which the square-grid limit is asserted: 1/(4 + sqrt(22)).
inline const double grid_limit_radius = 1.0 / (4.0 + std::sqrt(22.0));

/// (log zeta) / (number of vertices) on the continuous branch through u = 0.
/// Torus graphs use the Fourier eigenvalues, other graphs the band LU pivots.
template <typename Scalar>
Scalar normalized_log_zeta(const finite_graph &g, const Scalar &u)
{
    using std::log;
    using R = sf::detail::real_t<Scalar>;
    if (u == Scalar(0)) {
        return Scalar(0);
    }
    const R mag = sf::detail::magnitude(u);
    const complex ud(static_cast<double>(sf::detail::real_part(u)), static_cast<double>(sf::detail::imag_part(u)));
    if (g.family() == graph_family::torus && !in_omega(ud)) {
        throw domain_error("normalized_log_zeta: torus limit needs u in Omega");
    }
    if (g.family() == graph_family::grid && !(mag < R(grid_limit_radius))) {
        throw domain_error("normalized_log_zeta: grid limit needs |u| < 1/(4 + sqrt(22))");
    }
    const Scalar log_det = g.family() == graph_family::torus ? torus_log_det_eigen(g.rows(), g.cols(), u)
                                                             : bass_log_det(g, u, true);
    const R v = R(static_cast<double>(g.n_vertices()));
    const R excess = R(static_cast<double>(g.n_edges())) - v;
    return (-excess * log(Scalar(Scalar(1) - u * u)) - log_det) / v;
}

/// Relative residual of the functional equation of a 4-regular graph
///     zeta(1/(3u)) = 3^(2e - v) u^(2e) ((1 - u^2) / (9u^2 - 1))^(e - v) zeta(u),
/// with both sides evaluated through the Bass determinant in log form. The
/// exponent e - v comes from the (1 - u^2)^(e - v) prefactor in Bass's formula
/// and is 1 for the per-vertex quotient of the grid (v = 1, e = 2).
inline double finite_functional_equation_residual(const finite_graph &g, complex u)
{
    if (!g.is_regular(4u)) {
        throw domain_error("finite_functional_equation_residual: graph must be 4-regular");
    }
    if (u == complex(0.0) || 9.0 * u * u == complex(1.0)) {
        throw domain_error("finite_functional_equation_residual: u and 1/(3u) must be finite non-poles");
    }
    detail::require_not_pole(g, u, "finite_functional_equation_residual");
    const complex dual = 1.0 / (3.0 * u);
    detail::require_not_pole(g, dual, "finite_functional_equation_residual");
    complex log_lhs, log_zeta;
    try {
        log_zeta = detail::log_zeta_from_log_det(g, u, bass_log_det(g, u), "finite_functional_equation_residual");
        log_lhs = detail::log_zeta_from_log_det(g, dual, bass_log_det(g, dual), "finite_functional_equation_residual");
    } catch (const pole_error &e) {
        throw precision_error(std::string("conditioning: ") + e.what());
    }
    const double v = static_cast<double>(g.n_vertices()), e = static_cast<double>(g.n_edges());
    const complex log_rhs = (2.0 * e - v) * std::log(3.0) + 2.0 * e * std::log(u) +
                            (e - v) * (std::log(1.0 - u * u) - std::log(9.0 * u * u - 1.0)) + log_zeta;
    return std::abs(1.0 - std::exp(log_rhs - log_lhs));
}

struct convergence_row
{
    std::size_t size;
    double error;
};

/// |normalized_log_zeta(G_n, u) - log Z(u)| for n x n members of a family, at
/// real u, with log Z from the closed form on the principal lift. All
/// arithmetic is carried out in Real.
template <typename Real = double>
std::vector<convergence_row> convergence_table(graph_family family, const Real &u, std::span<const std::size_t> sizes)
{
    if (family == graph_family::generic) {
        throw domain_error("convergence_table: family must be grid or torus");
    }
    for (std::size_t i = 1; i < sizes.size(); ++i) {
        if (sizes[i] <= sizes[i - 1u]) {
            throw domain_error("convergence_table: sizes must be increasing");
        }
    }
    const Real reference = surface::log_zeta_real(u);
    std::vector<convergence_row> rows;
    for (std::size_t n : sizes) {
        const finite_graph g = family == graph_family::torus ? torus_graph(n, n) : grid_graph(n, n);
        using std::abs;
        const Real err = abs(Real(normalized_log_zeta(g, u) - reference));
        rows.push_back({n, static_cast<double>(err)});
    }
    return rows;
}

}

#endif
