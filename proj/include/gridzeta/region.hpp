#ifndef GRIDZETA_REGION_HPP
#define GRIDZETA_REGION_HPP

#include <array>
#include <cmath>
#include <complex>
#include <string_view>

namespace gridzeta
{

using complex = std::complex<double>;

/// Position of a point u relative to the singular set D, the disk component
/// Omega of its complement, and the punctured plane Y.
enum class region_tag { in_omega, on_d, outside_omega_in_y, excluded_point };

inline constexpr std::string_view to_string(region_tag r) noexcept
{
    switch (r) {
        case region_tag::in_omega:
            return "InOmega";
        case region_tag::on_d:
            return "OnD";
        case region_tag::outside_omega_in_y:
            return "OutsideOmegaInY";
        case region_tag::excluded_point:
            return "ExcludedPoint";
    }
    return "?";
}

namespace detail
{

inline const double inv_sqrt3 = 1.0 / std::sqrt(3.0);

// The eight points removed from the plane to form Y.
inline std::array<complex, 8> excluded_points()
{
    return {{{1.0 / 3.0, 0.0}, {-1.0 / 3.0, 0.0}, {inv_sqrt3, 0.0}, {-inv_sqrt3, 0.0},
             {0.0, inv_sqrt3}, {0.0, -inv_sqrt3}, {1.0, 0.0}, {-1.0, 0.0}}};
}

}

/// Classifies u against D = {|u| = 1/sqrt(3)} u [-1,-1/3] u [1/3,1].
///
/// Omega is the open disk of radius 1/sqrt(3) with the slits [1/3, 1/sqrt(3))
/// and (-1/sqrt(3), -1/3] removed. Points within \p tol of D are reported as
/// on_d, points within \p tol of the eight punctures of Y as excluded_point.
inline region_tag classify_u(complex u, double tol = 1e-12)
{
    for (const auto &p : detail::excluded_points()) {
        if (std::abs(u - p) <= tol) {
            return region_tag::excluded_point;
        }
    }
    const double r = std::abs(u);
    if (std::abs(r - detail::inv_sqrt3) <= tol) {
        return region_tag::on_d;
    }
    const double ax = std::abs(u.real());
    if (std::abs(u.imag()) <= tol && ax >= 1.0 / 3.0 - tol && ax <= 1.0 + tol) {
        return region_tag::on_d;
    }
    return r < detail::inv_sqrt3 ? region_tag::in_omega : region_tag::outside_omega_in_y;
}

inline bool in_omega(complex u, double tol = 1e-12)
{
    return classify_u(u, tol) == region_tag::in_omega;
}

}

#endif
