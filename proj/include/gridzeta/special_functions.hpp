#ifndef GRIDZETA_SPECIAL_FUNCTIONS_HPP
#define GRIDZETA_SPECIAL_FUNCTIONS_HPP

#include <cmath>
#include <complex>
#include <cstddef>
#include <limits>
#include <string>
#include <type_traits>

#include <boost/math/constants/constants.hpp>

#include "errors.hpp"
#include "region.hpp"

// Complete elliptic integral K, the theta constants and the maps between the
// grid parameter u, the modulus k and the half-nome t = exp(i pi tau / 2).
//
// Everything here is templated on the scalar type T, which may be a real type
// (double, long double, boost multiprecision floats) or std::complex of one.
// The complex<double> instantiations are the public workhorses; the real
// instantiations are used for high-precision evaluation along the real axis.

namespace gridzeta::sf
{

/// Stopping rule for the theta series: stop once the current term is below
/// tail_tolerance times the partial sum and the terms are decreasing. A
/// tolerance of 0 means a tenth of the epsilon of the working type.
struct truncation_policy
{
    std::size_t max_terms = 2048;
    double tail_tolerance = 0.0;
};

namespace detail
{

template <typename R>
R tail_tolerance(const truncation_policy &p)
{
    return p.tail_tolerance > 0.0 ? R(p.tail_tolerance) : std::numeric_limits<R>::epsilon() / R(10);
}

template <typename T>
struct real_of
{
    using type = T;
};

template <typename R>
struct real_of<std::complex<R>>
{
    using type = R;
};

template <typename T>
using real_t = typename real_of<T>::type;

template <typename T>
inline constexpr bool is_complex_v = !std::is_same_v<T, real_t<T>>;

template <typename T>
real_t<T> magnitude(const T &x)
{
    using std::abs;
    return abs(x);
}

template <typename T>
real_t<T> real_part(const T &x)
{
    if constexpr (is_complex_v<T>) {
        return x.real();
    } else {
        return x;
    }
}

template <typename T>
real_t<T> imag_part(const T &x)
{
    if constexpr (is_complex_v<T>) {
        return x.imag();
    } else {
        return real_t<T>(0);
    }
}

template <typename T>
real_t<T> pi()
{
    return boost::math::constants::pi<real_t<T>>();
}

// True when x is a real number lying in [lo, inf) (exactly on the real axis).
template <typename T>
bool on_real_ray(const T &x, const real_t<T> &lo)
{
    return imag_part(x) == real_t<T>(0) && real_part(x) >= lo;
}

}

/// Arithmetic-geometric mean of \p a and \p b.
///
/// At each step the geometric mean takes the sign for which
/// |a_n - b_n| <= |a_n + b_n| (the "right" choice), which for Re(b/a) > 0
/// is the principal square root and yields the principal value of the AGM.
template <typename T>
T agm(T a, T b, std::size_t max_iter = 64)
{
    using std::sqrt;
    using R = detail::real_t<T>;
    if (a == T(0) || b == T(0)) {
        throw domain_error("agm: arguments must be nonzero");
    }
    const T ratio = a / b;
    if (detail::imag_part(ratio) == R(0) && detail::real_part(ratio) < R(0)) {
        throw domain_error("agm: a/b is a negative real number");
    }
    const R eps = std::numeric_limits<R>::epsilon();
    for (std::size_t i = 0; i < max_iter; ++i) {
        if (detail::magnitude(T(a - b)) <= R(4) * eps * detail::magnitude(a)) {
            return (a + b) / R(2);
        }
        const T am = (a + b) / R(2);
        T gm = sqrt(a * b);
        if (detail::magnitude(T(am - gm)) > detail::magnitude(T(am + gm))) {
            gm = -gm;
        }
        a = am;
        b = gm;
    }
    throw iteration_limit_error("agm: no convergence after " + std::to_string(max_iter) + " iterations");
}

/// Complete elliptic integral of the first kind, principal branch:
/// K(k) = pi / (2 agm(1, sqrt(1 - k^2))).
template <typename T>
T elliptic_k(const T &k)
{
    using std::sqrt;
    using R = detail::real_t<T>;
    const T k2 = k * k;
    if (k2 == T(1)) {
        throw pole_error("elliptic_k: pole at k = +-1");
    }
    if (detail::on_real_ray(k2, R(1))) {
        throw branch_error("elliptic_k: k^2 lies on the branch cut (1, inf)");
    }
    return detail::pi<T>() / (R(2) * agm(T(1), T(sqrt(T(1) - k2))));
}

/// theta_3(q) = sum over n in Z of q^(n^2).
template <typename T>
T theta3(const T &q, const truncation_policy &policy = {})
{
    using R = detail::real_t<T>;
    if (detail::magnitude(q) >= R(1)) {
        throw domain_error("theta3: |q| must be < 1");
    }
    T sum(1), qn2(q), step(q * q * q);
    const T q2 = q * q;
    R prev = std::numeric_limits<R>::infinity();
    for (std::size_t n = 1; n <= policy.max_terms; ++n) {
        const T term = R(2) * qn2;
        sum += term;
        const R mag = detail::magnitude(term);
        if (mag <= detail::tail_tolerance<R>(policy) * detail::magnitude(sum) && mag <= prev) {
            return sum;
        }
        prev = mag;
        qn2 *= step;
        step *= q2;
    }
    throw precision_error("theta3: series tail not resolved within max_terms");
}

/// theta_4(q) = sum over n in Z of (-1)^n q^(n^2).
template <typename T>
T theta4(const T &q, const truncation_policy &policy = {})
{
    return theta3(T(-q), policy);
}

/// theta_2^2 as an analytic function of t = q^(1/2):
/// 4t prod_{n>=1} (1 - t^(4n))^2 (1 + t^(4n))^4.
template <typename T>
T theta2_sq(const T &t, const truncation_policy &policy = {})
{
    using R = detail::real_t<T>;
    if (detail::magnitude(t) >= R(1)) {
        throw domain_error("theta2_sq: |t| must be < 1");
    }
    if (t == T(0)) {
        return T(0);
    }
    const T t4 = t * t * t * t;
    T prod(1), x(t4);
    for (std::size_t n = 1; n <= policy.max_terms; ++n) {
        const T a = T(1) - x, b = T(1) + x;
        const T b2 = b * b;
        prod *= a * a * b2 * b2;
        if (detail::magnitude(x) <= detail::tail_tolerance<R>(policy)) {
            return R(4) * t * prod;
        }
        x *= t4;
    }
    throw precision_error("theta2_sq: product not resolved within max_terms");
}

/// k = 4u / (1 + 3u^2).
template <typename T>
T modulus_from_u(const T &u)
{
    using R = detail::real_t<T>;
    const T den = T(1) + R(3) * u * u;
    if (detail::magnitude(den) <= R(4) * std::numeric_limits<R>::epsilon()) {
        throw pole_error("modulus_from_u: pole at u = +-i/sqrt(3)");
    }
    return R(4) * u / den;
}

/// k(t) = theta_2^2(t) / theta_3(t^2)^2, analytic on the unit disk, k ~ 4t.
template <typename T>
T modulus_from_t(const T &t, const truncation_policy &policy = {})
{
    if (t == T(0)) {
        return T(0);
    }
    const T th3 = theta3(T(t * t), policy);
    return theta2_sq(t, policy) / (th3 * th3);
}

/// Half-nome of a modulus: the t with k(t) = k on the principal lift,
/// t = exp(i pi tau / 2), tau = i K(sqrt(1-k^2)) / K(k).
///
/// K(sqrt(1-k^2)) is evaluated as pi / (2 agm(1, sqrt(k^2))). The principal
/// sqrt(k^2) equals -k on the left half plane (and on the lower imaginary
/// axis); there the formula produces the half-nome of -k, and since k(t) is
/// odd in t the result is negated.
template <typename T>
T nome_t_from_modulus(const T &k)
{
    using std::exp;
    using std::sqrt;
    using R = detail::real_t<T>;
    if (k == T(0)) {
        return T(0);
    }
    const T k2 = k * k;
    if (detail::on_real_ray(k2, R(1))) {
        throw branch_error("nome_t_from_modulus: k^2 lies on [1, inf)");
    }
    const R re = detail::real_part(k), im = detail::imag_part(k);
    const bool flip = re < R(0) || (re == R(0) && im < R(0));
    const T kr = flip ? T(-k) : k;
    const T kp = sqrt(T(1) - k2);
    const T t = exp(T(-detail::pi<T>() / R(2) * agm(T(1), kp) / agm(T(1), kr)));
    return flip ? T(-t) : t;
}

/// exp(-pi K'(k) / (2 K(k))) with every root principal. Depends on k^2 only,
/// so it is even in k and jumps across the cuts of sqrt(k^2); kept for
/// plotting those jumps.
template <typename T>
T nome_t_principal_formula(const T &k)
{
    using std::exp;
    using std::sqrt;
    using R = detail::real_t<T>;
    if (k == T(0)) {
        return T(0);
    }
    const T k2 = k * k;
    if (detail::on_real_ray(k2, R(1))) {
        throw branch_error("nome_t_principal_formula: k^2 lies on [1, inf)");
    }
    return exp(T(-detail::pi<T>() / R(2) * agm(T(1), T(sqrt(T(1) - k2))) / agm(T(1), T(sqrt(k2)))));
}

/// Principal half-nome t(u) on Omega; t(0) = 0 and t/u -> 1 as u -> 0.
inline complex nome_t_from_u(complex u)
{
    if (u == complex(0.0)) {
        return complex(0.0);
    }
    if (!in_omega(u)) {
        throw domain_error("nome_t_from_u: u is not in Omega; use deck words to reach other sheets");
    }
    return nome_t_from_modulus(modulus_from_u(u));
}

/// Real-axis variant for -1/3 < u < 1/3, in any real precision.
template <typename Real>
Real nome_t_from_u_real(const Real &u)
{
    using std::abs;
    if (!(abs(u) < Real(1) / Real(3))) {
        throw domain_error("nome_t_from_u_real: u must lie in (-1/3, 1/3)");
    }
    return nome_t_from_modulus(modulus_from_u(u));
}

template <typename T>
struct u_pair
{
    T plus;
    T minus;
};

/// The two points u over a given t: u_+- = (2 +- sqrt(4 - 3k^2)) / (3k).
/// u_minus is the root that tends to zero with t; u_plus * u_minus = 1/3.
template <typename T>
u_pair<T> u_pair_from_t(const T &t, const truncation_policy &policy = {})
{
    using std::sqrt;
    using R = detail::real_t<T>;
    if (t == T(0)) {
        throw domain_error("u_pair_from_t: t = 0 has the single preimage u = 0");
    }
    const T k = modulus_from_t(t, policy);
    if (k == T(0)) {
        throw invariant_error("u_pair_from_t: k(t) vanished at t != 0");
    }
    const T disc = T(4) - R(3) * k * k;
    if (detail::magnitude(disc) < R(1e-8)) {
        throw branch_error("u_pair_from_t: k(t) is at a branch point k = +-2/sqrt(3)");
    }
    const T s = sqrt(disc);
    // |2 + s| >= |2 - s| for the principal root, so the small root is k/(2+s).
    return {(T(2) + s) / (R(3) * k), k / (T(2) + s)};
}

}

#endif
