#ifndef GRIDZETA_SERIES_HPP
#define GRIDZETA_SERIES_HPP

#include <algorithm>
#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "errors.hpp"

namespace gridzeta::exact
{

using big_int = boost::multiprecision::cpp_int;
using big_rational = boost::multiprecision::cpp_rational;

/// Truncated formal power series sum_{i=0}^{order} c_i x^i.
///
/// The order is inclusive and every operation is exact through the smallest
/// order among its operands. Coeff must be a ring; division-based operations
/// (exp, log, reciprocal, inverse, integral) additionally need a field.
template <typename Coeff>
class basic_series
{
    public:
        using coeff_type = Coeff;

        basic_series() : m_coeffs(1, Coeff(0)) {}
        explicit basic_series(std::size_t order) : m_coeffs(order + 1, Coeff(0)) {}
        explicit basic_series(std::vector<Coeff> coeffs) : m_coeffs(std::move(coeffs))
        {
            if (m_coeffs.empty()) {
                m_coeffs.emplace_back(0);
            }
        }

        static basic_series constant(const Coeff &c, std::size_t order)
        {
            basic_series s(order);
            s.m_coeffs[0] = c;
            return s;
        }
        /// c x^power, truncated at order (zero if power > order).
        static basic_series monomial(std::size_t power, std::size_t order, const Coeff &c = Coeff(1))
        {
            basic_series s(order);
            if (power <= order) {
                s.m_coeffs[power] = c;
            }
            return s;
        }

        std::size_t order() const noexcept
        {
            return m_coeffs.size() - 1u;
        }
        const Coeff &operator[](std::size_t i) const
        {
            return m_coeffs[i];
        }
        Coeff &operator[](std::size_t i)
        {
            return m_coeffs[i];
        }
        /// Coefficient of x^i, or zero beyond the order.
        Coeff coeff(std::size_t i) const
        {
            return i <= order() ? m_coeffs[i] : Coeff(0);
        }
        const std::vector<Coeff> &coeffs() const noexcept
        {
            return m_coeffs;
        }

        basic_series truncated(std::size_t order) const
        {
            basic_series s(order);
            const std::size_t n = std::min(order, this->order());
            std::copy(m_coeffs.begin(), m_coeffs.begin() + static_cast<std::ptrdiff_t>(n + 1), s.m_coeffs.begin());
            return s;
        }

        basic_series &operator+=(const basic_series &other)
        {
            resize_to_min(other);
            for (std::size_t i = 0; i <= order(); ++i) {
                m_coeffs[i] += other.m_coeffs[i];
            }
            return *this;
        }
        basic_series &operator-=(const basic_series &other)
        {
            resize_to_min(other);
            for (std::size_t i = 0; i <= order(); ++i) {
                m_coeffs[i] -= other.m_coeffs[i];
            }
            return *this;
        }
        basic_series &operator*=(const Coeff &c)
        {
            for (auto &x : m_coeffs) {
                x *= c;
            }
            return *this;
        }

        friend basic_series operator+(basic_series a, const basic_series &b)
        {
            return a += b;
        }
        friend basic_series operator-(basic_series a, const basic_series &b)
        {
            return a -= b;
        }
        friend basic_series operator-(basic_series a)
        {
            for (auto &x : a.m_coeffs) {
                x = -x;
            }
            return a;
        }
        friend basic_series operator*(basic_series a, const Coeff &c)
        {
            return a *= c;
        }
        friend basic_series operator*(const Coeff &c, basic_series a)
        {
            return a *= c;
        }
        /// Truncated product; zero coefficients are skipped, which keeps
        /// products of lacunary series (theta functions) cheap.
        friend basic_series operator*(const basic_series &a, const basic_series &b)
        {
            const std::size_t n = std::min(a.order(), b.order());
            basic_series r(n);
            for (std::size_t i = 0; i <= n; ++i) {
                if (a.m_coeffs[i] == 0) {
                    continue;
                }
                for (std::size_t j = 0; i + j <= n; ++j) {
                    if (b.m_coeffs[j] == 0) {
                        continue;
                    }
                    r.m_coeffs[i + j] += a.m_coeffs[i] * b.m_coeffs[j];
                }
            }
            return r;
        }
        friend bool operator==(const basic_series &a, const basic_series &b)
        {
            return a.m_coeffs == b.m_coeffs;
        }

    private:
        void resize_to_min(const basic_series &other)
        {
            if (other.order() < order()) {
                m_coeffs.resize(other.order() + 1u);
            }
        }

        std::vector<Coeff> m_coeffs;
};

using exact_series = basic_series<big_rational>;
using integer_series = basic_series<big_int>;

inline exact_series to_rational(const integer_series &s)
{
    exact_series r(s.order());
    for (std::size_t i = 0; i <= s.order(); ++i) {
        r[i] = big_rational(s[i]);
    }
    return r;
}

/// s(x) / x^k for a series whose first k coefficients vanish; order drops by k.
template <typename Coeff>
basic_series<Coeff> shift_down(const basic_series<Coeff> &s, std::size_t k)
{
    if (k > s.order()) {
        throw domain_error("shift_down: shift exceeds the order");
    }
    for (std::size_t i = 0; i < k; ++i) {
        if (s[i] != 0) {
            throw domain_error("shift_down: series is not divisible by x^k");
        }
    }
    basic_series<Coeff> r(s.order() - k);
    for (std::size_t i = 0; i <= r.order(); ++i) {
        r[i] = s[i + k];
    }
    return r;
}

template <typename Coeff>
basic_series<Coeff> derivative(const basic_series<Coeff> &s)
{
    if (s.order() == 0) {
        return basic_series<Coeff>(0);
    }
    basic_series<Coeff> r(s.order() - 1u);
    for (std::size_t i = 1; i <= s.order(); ++i) {
        r[i - 1u] = s[i] * Coeff(static_cast<unsigned long>(i));
    }
    return r;
}

/// Primitive with zero constant term; the order grows by one.
template <typename Coeff>
basic_series<Coeff> integral(const basic_series<Coeff> &s)
{
    basic_series<Coeff> r(s.order() + 1u);
    for (std::size_t i = 0; i <= s.order(); ++i) {
        r[i + 1u] = s[i] / Coeff(static_cast<unsigned long>(i + 1u));
    }
    return r;
}

/// 1/s; requires a nonzero constant term.
template <typename Coeff>
basic_series<Coeff> reciprocal(const basic_series<Coeff> &s)
{
    if (s[0] == 0) {
        throw domain_error("reciprocal: constant term must be nonzero");
    }
    const std::size_t n = s.order();
    basic_series<Coeff> r(n);
    const Coeff inv0 = Coeff(1) / s[0];
    r[0] = inv0;
    for (std::size_t i = 1; i <= n; ++i) {
        Coeff acc(0);
        for (std::size_t j = 1; j <= i; ++j) {
            if (s[j] != 0) {
                acc += s[j] * r[i - j];
            }
        }
        r[i] = -acc * inv0;
    }
    return r;
}

/// exp(s); requires a zero constant term. Uses (exp s)' = s' exp s.
template <typename Coeff>
basic_series<Coeff> exp(const basic_series<Coeff> &s)
{
    if (s[0] != 0) {
        throw domain_error("exp: constant term must be zero");
    }
    const std::size_t n = s.order();
    basic_series<Coeff> r(n);
    r[0] = Coeff(1);
    for (std::size_t i = 1; i <= n; ++i) {
        Coeff acc(0);
        for (std::size_t j = 1; j <= i; ++j) {
            if (s[j] != 0) {
                acc += Coeff(static_cast<unsigned long>(j)) * s[j] * r[i - j];
            }
        }
        r[i] = acc / Coeff(static_cast<unsigned long>(i));
    }
    return r;
}

/// log(s); requires constant term one. Uses (log s)' = s'/s.
template <typename Coeff>
basic_series<Coeff> log(const basic_series<Coeff> &s)
{
    if (s[0] != 1) {
        throw domain_error("log: constant term must be one");
    }
    if (s.order() == 0) {
        return basic_series<Coeff>(0);
    }
    return integral(derivative(s) * reciprocal(s.truncated(s.order() - 1u)));
}

/// f(g(x)); requires g(0) = 0. Horner evaluation with truncated products.
template <typename Coeff>
basic_series<Coeff> compose(const basic_series<Coeff> &f, const basic_series<Coeff> &g)
{
    if (g[0] != 0) {
        throw domain_error("compose: inner series must have zero constant term");
    }
    const std::size_t n = std::min(f.order(), g.order());
    basic_series<Coeff> r = basic_series<Coeff>::constant(f[n], n);
    const basic_series<Coeff> gn = g.truncated(n);
    for (std::size_t i = n; i-- > 0;) {
        r = r * gn;
        r[0] += f[i];
    }
    return r;
}

/// Compositional inverse g with s(g(x)) = x through the order of s.
///
/// Newton iteration g <- g - (s(g) - x) / s'(g), doubling the number of
/// correct coefficients each step.
template <typename Coeff>
basic_series<Coeff> inverse(const basic_series<Coeff> &s)
{
    if (s.order() < 1u || s[0] != 0 || s[1] == 0) {
        throw domain_error("inverse: need zero constant term and nonzero linear term");
    }
    const std::size_t n = s.order();
    const basic_series<Coeff> ds = derivative(s);
    basic_series<Coeff> g = basic_series<Coeff>::monomial(1, 1, Coeff(1) / s[1]);
    std::size_t prec = 1;
    while (prec < n) {
        prec = std::min(2 * prec, n);
        g = g.truncated(prec);
        basic_series<Coeff> residual = compose(s.truncated(prec), g);
        residual[1] -= Coeff(1);
        const basic_series<Coeff> slope = compose(ds.truncated(prec), g);
        g -= residual * reciprocal(slope);
    }
    return g;
}

/// "num/den" in lowest terms.
inline std::string to_fraction_string(const big_rational &c)
{
    return boost::multiprecision::numerator(c).str() + "/" + boost::multiprecision::denominator(c).str();
}

inline bool is_integer(const big_rational &c)
{
    return boost::multiprecision::denominator(c) == 1;
}

}

#endif
