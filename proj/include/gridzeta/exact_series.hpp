#ifndef GRIDZETA_EXACT_SERIES_HPP
#define GRIDZETA_EXACT_SERIES_HPP

#include <cstddef>
#include <utility>
#include <vector>

#include "errors.hpp"
#include "series.hpp"

// Exact power series attached to the grid zeta function: the combinatorial
// expansion of log det(1 - A u + 3u^2) from closed lattice walks, and the
// theta-function side (theta constants, k(t), F(t), t(u)) whose composition
// must reproduce it coefficient for coefficient.

namespace gridzeta::exact
{

inline big_int binomial(unsigned n, unsigned k)
{
    if (k > n) {
        return 0;
    }
    k = std::min(k, n - k);
    big_int r = 1;
    for (unsigned i = 1; i <= k; ++i) {
        r *= n - k + i;
        r /= i;
    }
    return r;
}

/// Trace of (a + 1/a + b + 1/b)^(2k) in the group ring of Z x Z, i.e. the
/// number of closed walks of length 2k on the grid: C(2k, k)^2.
inline big_int closed_walk_moment(unsigned k)
{
    const big_int c = binomial(2 * k, k);
    return c * c;
}

/// Exact series of Tr log(1 - A u + 3u^2) through u^(2 max_m):
/// [u^(2M)] = -sum_{k=0}^{M} (-3)^(M-k) / (M+k) C(M+k, 2k) C(2k, k)^2.
inline exact_series trlog_series(unsigned max_m)
{
    if (max_m < 1u) {
        throw domain_error("trlog_series: max_m must be >= 1");
    }
    exact_series s(2u * max_m);
    for (unsigned m = 1; m <= max_m; ++m) {
        big_rational sum = 0;
        for (unsigned k = 0; k <= m; ++k) {
            big_int term = binomial(m + k, 2 * k) * closed_walk_moment(k);
            big_int p3 = boost::multiprecision::pow(big_int(3), m - k);
            if ((m - k) % 2u) {
                p3 = -p3;
            }
            sum += big_rational(term * p3, big_int(m + k));
        }
        s[2u * m] = -sum;
    }
    return s;
}

/// det(1 - A u + 3u^2) = exp(Tr log), through u^(2 max_m).
inline exact_series det_series(unsigned max_m)
{
    return exp(trlog_series(max_m));
}

/// Z(u) = 1 / ((1 - u^2) det(1 - A u + 3u^2)), through u^(2 max_m).
inline exact_series zeta_series(unsigned max_m)
{
    const exact_series det = det_series(max_m);
    exact_series one_minus_u2 = exact_series::constant(1, det.order());
    one_minus_u2[2] = -1;
    return reciprocal(one_minus_u2 * det);
}

// Integer theta series. Variables: q for theta_3 and theta_4, t = q^(1/2)
// for theta_2^2.

/// theta_3(q) = 1 + 2 sum_{n>=1} q^(n^2).
inline integer_series theta3_integer_series(std::size_t order)
{
    integer_series s = integer_series::constant(1, order);
    for (std::size_t n = 1; n * n <= order; ++n) {
        s[n * n] = 2;
    }
    return s;
}

/// theta_4(q) = 1 + 2 sum_{n>=1} (-1)^n q^(n^2).
inline integer_series theta4_integer_series(std::size_t order)
{
    integer_series s = integer_series::constant(1, order);
    for (std::size_t n = 1; n * n <= order; ++n) {
        s[n * n] = (n % 2u) ? -2 : 2;
    }
    return s;
}

/// theta_2^2(t) / (4t) = (sum_{n>=0} t^(2n(n+1)))^2, in t.
inline integer_series theta2_sq_over_4t_integer_series(std::size_t order)
{
    integer_series h(order);
    for (std::size_t n = 0; 2 * n * (n + 1) <= order; ++n) {
        h[2 * n * (n + 1)] = 1;
    }
    return h * h;
}

/// s(x^2), truncated at the given order in x.
template <typename Coeff>
basic_series<Coeff> substitute_square(const basic_series<Coeff> &s, std::size_t order)
{
    basic_series<Coeff> r(order);
    for (std::size_t i = 0; 2 * i <= order; ++i) {
        r[2 * i] = s.coeff(i);
    }
    return r;
}

struct theta_series_set
{
    exact_series theta2_sq_over_4t; // in t
    exact_series theta3;            // in q
    exact_series theta4;            // in q
};

/// Exact integer-coefficient series of the theta constants through \p order.
inline theta_series_set theta_series_exact(std::size_t order)
{
    return {to_rational(theta2_sq_over_4t_integer_series(order)), to_rational(theta3_integer_series(order)),
            to_rational(theta4_integer_series(order))};
}

/// theta_3(t^2)^2 theta_4(t^2)^4 as an integer series in t.
inline integer_series theta3sq_theta4quart_in_t(std::size_t order)
{
    const std::size_t qorder = order / 2u;
    const integer_series th3 = theta3_integer_series(qorder), th4 = theta4_integer_series(qorder);
    const integer_series th4sq = th4 * th4;
    return substitute_square(th3 * th3 * (th4sq * th4sq), order);
}

struct f_and_F
{
    exact_series f; // (1 - theta_3^2 theta_4^4) / t, through t^(order-1)
    exact_series F; // primitive of f with F(0) = 0, through t^order
};

/// f(t) = (1 - theta_3^2(t^2) theta_4^4(t^2)) / t and its primitive F.
inline f_and_F f_and_F_series(std::size_t order)
{
    if (order < 2u) {
        throw domain_error("f_and_F_series: order must be >= 2");
    }
    integer_series p = -theta3sq_theta4quart_in_t(order);
    p[0] += 1;
    exact_series f = to_rational(shift_down(p, 1));
    exact_series F = integral(f);
    return {std::move(f), std::move(F)};
}

/// k(t) = theta_2^2(t) / theta_3(t^2)^2 = 4t + O(t^5), through t^order.
inline exact_series k_series_in_t(std::size_t order)
{
    exact_series th2sq(order);
    const integer_series h = theta2_sq_over_4t_integer_series(order);
    for (std::size_t i = 0; i + 1 <= order; ++i) {
        th2sq[i + 1] = big_rational(4 * h[i]);
    }
    const integer_series th3 = substitute_square(theta3_integer_series(order / 2u), order);
    return th2sq * reciprocal(to_rational(th3 * th3));
}

/// 4u / (1 + 3u^2) through u^order.
inline exact_series modulus_series_in_u(std::size_t order)
{
    exact_series s(order);
    big_int c = 4;
    for (std::size_t i = 1; i <= order; i += 2) {
        s[i] = big_rational(c);
        c *= -3;
    }
    return s;
}

/// The branch t(u) = u + O(u^3) of k(t) = 4u/(1+3u^2), through u^order.
inline exact_series t_series_in_u(std::size_t order)
{
    if (order < 1u) {
        throw domain_error("t_series_in_u: order must be >= 1");
    }
    return compose(inverse(k_series_in_t(order)), modulus_series_in_u(order));
}

/// (t(u)/u) e^(-F(t(u))) / (1 - u^2) through u^(2 max_m): the closed form
/// of the zeta function expanded around the removable point (0,0).
inline exact_series zeta_series_via_theta(unsigned max_m)
{
    const std::size_t n = 2u * max_m;
    const exact_series tu = t_series_in_u(n + 1u);
    const exact_series ratio = shift_down(tu, 1);
    const exact_series F = f_and_F_series(std::max<std::size_t>(n, 2u)).F.truncated(n);
    const exact_series e = exp(-compose(F, tu.truncated(n)));
    exact_series one_minus_u2 = exact_series::constant(1, n);
    if (n >= 2u) {
        one_minus_u2[2] = -1;
    }
    return ratio * e * reciprocal(one_minus_u2);
}

/// log Z = -log(1 - u^2) - Tr log(1 - A u + 3u^2) through u^(2 max_m).
inline exact_series log_zeta_series(unsigned max_m)
{
    exact_series s = -trlog_series(max_m);
    for (unsigned j = 1; j <= max_m; ++j) {
        s[2u * j] += big_rational(1, j);
    }
    return s;
}

/// N_m = m [u^m] log Z for m = 1..max_m: the number of based, tailless,
/// non-backtracking closed walks of length m from a fixed vertex.
inline std::vector<std::pair<unsigned, big_int>> geodesic_counts_from_series(unsigned max_m)
{
    const unsigned half = std::max(1u, (max_m + 1u) / 2u);
    const exact_series lz = log_zeta_series(half);
    std::vector<std::pair<unsigned, big_int>> out;
    out.reserve(max_m);
    for (unsigned m = 1; m <= max_m; ++m) {
        const big_rational n = lz[m] * m;
        if (!is_integer(n)) {
            throw invariant_error("geodesic_counts_from_series: non-integer count at m = " + std::to_string(m));
        }
        out.emplace_back(m, boost::multiprecision::numerator(n));
    }
    return out;
}

}

#endif
