#ifndef GRIDZETA_SURFACE_HPP
#define GRIDZETA_SURFACE_HPP

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <complex>
#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "errors.hpp"
#include "exact_series.hpp"
#include "region.hpp"
#include "special_functions.hpp"

// The surface S = {(u, t) : 4u/(1+3u^2) = k(t)} carrying the extended zeta
// function Z(u, t) = t e^(-F(t)) / (u (1 - u^2)), its involution
// (u, t) -> (1/(3u), t), and navigation between sheets over a fixed u by
// Mobius transformations of tau = (2 / (i pi)) log t.

namespace gridzeta::surface
{

/// Largest |t| at which F, and with it Z, is evaluated.
inline constexpr double max_abs_t = 0.95;
/// Tolerance on the defining relation k(u) = k(t).
inline constexpr double relation_tolerance = 1e-10;
/// Points with |4 - 3k^2| below this are treated as branch points.
inline constexpr double branch_guard = 1e-8;

/// A point sigma = (u, t) of S.
class surface_point
{
    public:
        /// Validates |t| < 1, the defining relation and the branch-point guard.
        surface_point(complex u, complex t) : m_u(u), m_t(t)
        {
            if (u == complex(0.0) && t == complex(0.0)) {
                return;
            }
            if (u == complex(0.0) || t == complex(0.0)) {
                throw domain_error("surface_point: (0, t) and (u, 0) lie on S only at the origin");
            }
            if (!(std::abs(t) < 1.0)) {
                throw domain_error("surface_point: |t| must be < 1");
            }
            const complex kt = sf::modulus_from_t(t);
            const complex ku = sf::modulus_from_u(u);
            if (std::abs(4.0 - 3.0 * kt * kt) < branch_guard) {
                throw branch_error("surface_point: k(t) is a branch point +-2/sqrt(3)");
            }
            const double residual = std::abs(ku - kt);
            if (!(residual < relation_tolerance)) {
                throw domain_error("surface_point: defining relation violated, |k(u) - k(t)| = " +
                                   std::to_string(residual));
            }
        }

        /// The distinguished point (0, 0).
        static surface_point origin()
        {
            return surface_point(0.0, 0.0);
        }

        complex u() const noexcept
        {
            return m_u;
        }
        complex t() const noexcept
        {
            return m_t;
        }
        bool is_origin() const noexcept
        {
            return m_u == complex(0.0) && m_t == complex(0.0);
        }

    private:
        complex m_u;
        complex m_t;
};

/// |k(u) - k(t)| at sigma.
inline double relation_residual(const surface_point &s)
{
    if (s.is_origin()) {
        return 0.0;
    }
    return std::abs(sf::modulus_from_u(s.u()) - sf::modulus_from_t(s.t()));
}

// F(t): the primitive of (1 - theta_3^2 theta_4^4)/t with F(0) = 0. It is an
// even series in t; the table holds the coefficients of t^(2j).

/// t-order of the F table; enough for |t| <= max_abs_t at double precision.
inline constexpr std::size_t f_table_order = 1200;

namespace detail
{

struct f_table
{
    std::vector<exact::big_rational> exact; // [j] -> coefficient of t^(2j)
    std::vector<double> numeric;
};

inline const f_table &f_coefficients()
{
    static const f_table table = [] {
        const exact::exact_series F = exact::f_and_F_series(f_table_order).F;
        f_table tab;
        for (std::size_t i = 0; i <= F.order(); i += 2) {
            tab.exact.push_back(F[i]);
            tab.numeric.push_back(F[i].convert_to<double>());
        }
        return tab;
    }();
    return table;
}

}

/// F(t) for |t| <= max_abs_t from the exact series.
inline complex F_eval(complex t)
{
    if (std::abs(t) > max_abs_t) {
        throw precision_error("F_eval: |t| exceeds " + std::to_string(max_abs_t));
    }
    if (t == complex(0.0)) {
        return 0.0;
    }
    const auto &c = detail::f_coefficients().numeric;
    const complex x = t * t;
    complex acc = 0.0;
    for (std::size_t j = c.size(); j-- > 1;) {
        acc = acc * x + c[j];
    }
    acc *= x;
    const std::size_t last = c.size() - 1u;
    const double tail = std::abs(c[last]) * std::pow(std::abs(x), static_cast<double>(last));
    if (tail > 1e-14 * std::max(1.0, std::abs(acc))) {
        throw precision_error("F_eval: series order insufficient at this |t|");
    }
    return acc;
}

/// F(t) for real t in any real precision.
template <typename Real>
Real F_eval_real(const Real &t)
{
    using std::abs;
    if (t == Real(0)) {
        return Real(0);
    }
    if (abs(t) > Real(max_abs_t)) {
        throw precision_error("F_eval_real: |t| exceeds the evaluation cap");
    }
    const auto &c = detail::f_coefficients().exact;
    const Real x = t * t;
    const Real eps = std::numeric_limits<Real>::epsilon();
    Real acc(0), xp(x);
    unsigned small = 0;
    for (std::size_t j = 1; j < c.size(); ++j) {
        const Real term = Real(c[j]) * xp;
        acc += term;
        if (c[j] != 0) {
            small = abs(term) <= eps * abs(acc) ? small + 1u : 0u;
            if (small == 4u) {
                return acc;
            }
        }
        xp *= x;
    }
    throw precision_error("F_eval_real: series order insufficient for this precision");
}

/// The principal lift (u, t(u)) of u in Omega.
inline surface_point lift_principal(complex u)
{
    if (u == complex(0.0)) {
        return surface_point::origin();
    }
    if (!in_omega(u)) {
        throw domain_error("lift_principal: u is not in Omega; other sheets are reached with deck words");
    }
    return surface_point(u, sf::nome_t_from_u(u));
}

/// iota(u, t) = (1/(3u), t).
inline surface_point involution(const surface_point &s)
{
    if (s.is_origin()) {
        throw domain_error("involution: undefined at the origin");
    }
    return surface_point(1.0 / (3.0 * s.u()), s.t());
}

/// Extended zeta function; equals 1 at the origin.
inline complex zeta_tilde(const surface_point &s)
{
    if (s.is_origin()) {
        return 1.0;
    }
    const complex u = s.u(), t = s.t();
    if (u == complex(1.0) || u == complex(-1.0)) {
        throw pole_error("zeta_tilde: u = +-1");
    }
    return t * std::exp(-F_eval(t)) / (u * (1.0 - u * u));
}

/// log Z = log(t/u) - F(t) - log(1 - u^2), principal logarithms.
inline complex log_zeta_tilde(const surface_point &s)
{
    if (s.is_origin()) {
        return 0.0;
    }
    const complex u = s.u(), t = s.t();
    return std::log(t / u) - F_eval(t) - std::log(1.0 - u * u);
}

/// log Z on the real segment (-1/3, 1/3), principal lift, in any real precision.
template <typename Real>
Real log_zeta_real(const Real &u)
{
    using std::log;
    if (u == Real(0)) {
        return Real(0);
    }
    const Real t = sf::nome_t_from_u_real(u);
    return log(Real(t / u)) - F_eval_real(t) - log(Real(Real(1) - u * u));
}

/// |Z(iota(s)) - 27 u^4 (1 - u^2) / (9u^2 - 1) Z(s)| / |Z(iota(s))|.
inline double functional_equation_residual(const surface_point &s)
{
    if (s.is_origin()) {
        throw domain_error("functional_equation_residual: undefined at the origin");
    }
    const complex u = s.u();
    const complex u2 = u * u;
    if (std::abs(9.0 * u2 - 1.0) == 0.0) {
        throw domain_error("functional_equation_residual: 9u^2 = 1");
    }
    const complex lhs = zeta_tilde(involution(s));
    const complex rhs = 27.0 * u2 * u2 * (1.0 - u2) / (9.0 * u2 - 1.0) * zeta_tilde(s);
    return std::abs(lhs - rhs) / std::abs(lhs);
}

// Deck transformations.

/// Integer 2x2 matrix acting on the upper half plane by Mobius transformations.
struct mobius
{
    std::int64_t a, b, c, d;

    friend bool operator==(const mobius &, const mobius &) = default;

    std::int64_t det() const
    {
        return a * d - b * c;
    }
    mobius inverse() const
    {
        return {d, -b, -c, a};
    }
    complex apply(complex tau) const
    {
        return (static_cast<double>(a) * tau + static_cast<double>(b)) /
               (static_cast<double>(c) * tau + static_cast<double>(d));
    }
    friend mobius operator*(const mobius &x, const mobius &y)
    {
        auto mul_add = [](std::int64_t p, std::int64_t q, std::int64_t r, std::int64_t s) {
            std::int64_t pq, rs, out;
            if (__builtin_mul_overflow(p, q, &pq) || __builtin_mul_overflow(r, s, &rs) ||
                __builtin_add_overflow(pq, rs, &out)) {
                throw domain_error("mobius: matrix entries overflow");
            }
            return out;
        };
        return {mul_add(x.a, y.a, x.b, y.c), mul_add(x.a, y.b, x.b, y.d), mul_add(x.c, y.a, x.d, y.c),
                mul_add(x.c, y.b, x.d, y.d)};
    }
};

/// det = 1, congruent to the identity mod 2, upper-right entry divisible by 4.
inline bool in_deck_group(const mobius &m)
{
    auto even = [](std::int64_t x) { return x % 2 == 0; };
    auto odd = [](std::int64_t x) { return x % 2 != 0; };
    return m.det() == 1 && odd(m.a) && odd(m.d) && even(m.c) && m.b % 4 == 0;
}

/// Generators 1, 2, 3 of the deck group: A^2, B and A B A^-1 with
/// A = [[1,2],[0,1]], B = [[1,0],[2,1]]. A^2 (tau -> tau + 4) fixes t.
inline const std::array<mobius, 3> &deck_generators()
{
    static const std::array<mobius, 3> gens = [] {
        const mobius a{1, 2, 0, 1}, b{1, 0, 2, 1};
        const std::array<mobius, 3> g{a * a, b, a * b * a.inverse()};
        for (const auto &m : g) {
            if (!in_deck_group(m)) {
                throw invariant_error("deck_generators: generator outside the deck group");
            }
        }
        return g;
    }();
    return gens;
}

struct deck_letter
{
    unsigned generator; // 1, 2 or 3
    int exponent;

    friend bool operator==(const deck_letter &, const deck_letter &) = default;
};

using deck_word = std::vector<deck_letter>;

/// The matrix g_{i1}^{e1} g_{i2}^{e2} ... of a word.
inline mobius word_matrix(const deck_word &w)
{
    mobius m{1, 0, 0, 1};
    for (const auto &letter : w) {
        if (letter.generator < 1u || letter.generator > 3u) {
            throw domain_error("word_matrix: generator index must be 1, 2 or 3");
        }
        const mobius g = deck_generators()[letter.generator - 1u];
        const mobius step = letter.exponent >= 0 ? g : g.inverse();
        for (int i = 0; i < std::abs(letter.exponent); ++i) {
            m = m * step;
        }
    }
    return m;
}

/// Moves sigma to the sheet obtained by acting with w on tau = (2/(i pi)) log t
/// (principal log). The u coordinate is kept; t' = exp(i pi tau' / 2).
inline surface_point deck_transform(const surface_point &s, const deck_word &w)
{
    if (s.is_origin()) {
        throw domain_error("deck_transform: the origin is not moved by deck transformations");
    }
    if (w.empty()) {
        return s;
    }
    const mobius m = word_matrix(w);
    const complex i(0.0, 1.0);
    const complex tau = std::log(s.t()) * 2.0 / (i * M_PI);
    const complex tau2 = m.apply(tau);
    const complex t2 = std::exp(i * M_PI * tau2 / 2.0);
    if (std::abs(t2) >= max_abs_t) {
        throw precision_error("deck_transform: |t'| >= " + std::to_string(max_abs_t));
    }
    const auto roots = sf::u_pair_from_t(t2);
    const complex u = s.u();
    const double tol = 1e-8 * std::max(1.0, std::abs(u));
    const bool plus = std::abs(roots.plus - u) <= tol, minus = std::abs(roots.minus - u) <= tol;
    if (plus == minus) {
        throw branch_error("deck_transform: cannot match u to exactly one root over t'");
    }
    return surface_point(u, t2);
}

/// All reduced words of length <= depth in the letters g_i^{+-1}.
inline std::vector<deck_word> reduced_words(unsigned depth)
{
    std::vector<deck_word> out{deck_word{}};
    std::vector<deck_word> frontier{deck_word{}};
    for (unsigned len = 1; len <= depth; ++len) {
        std::vector<deck_word> next;
        for (const auto &w : frontier) {
            for (unsigned g = 1; g <= 3u; ++g) {
                for (int e : {1, -1}) {
                    if (!w.empty() && w.back().generator == g && w.back().exponent == -e) {
                        continue;
                    }
                    deck_word v = w;
                    v.push_back({g, e});
                    next.push_back(v);
                }
            }
        }
        out.insert(out.end(), next.begin(), next.end());
        frontier = std::move(next);
    }
    return out;
}

struct sheet_value
{
    deck_word word;
    surface_point point;
    complex zeta;
};

/// Values of Z over u in Omega on the sheets reached by reduced words of
/// length <= depth. Words whose image lies beyond the |t| cap are skipped.
inline std::vector<sheet_value> enumerate_sheets(complex u, unsigned depth)
{
    const surface_point base = lift_principal(u);
    std::vector<sheet_value> out;
    for (const auto &w : reduced_words(depth)) {
        if (base.is_origin() && !w.empty()) {
            break;
        }
        try {
            const surface_point p = deck_transform(base, w);
            out.push_back({w, p, zeta_tilde(p)});
        } catch (const precision_error &) {
        }
    }
    return out;
}

/// Number of values pairwise separated by more than rel_tol (relative).
inline std::size_t count_distinct(const std::vector<complex> &values, double rel_tol = 1e-9)
{
    std::vector<complex> seen;
    for (const auto &v : values) {
        bool dup = false;
        for (const auto &s : seen) {
            if (std::abs(v - s) <= rel_tol * std::max(std::abs(v), std::abs(s))) {
                dup = true;
                break;
            }
        }
        if (!dup) {
            seen.push_back(v);
        }
    }
    return seen.size();
}

}

#endif
