#ifndef GRIDZETA_FROZEN_THRESHOLDS_HPP
#define GRIDZETA_FROZEN_THRESHOLDS_HPP

#include <array>
#include <cstddef>

// Absolute error ceilings for the finite-graph limit, frozen from the first
// run of the convergence tables. Observed values are kept alongside.
//
// torus C_n x C_n, u = 0.1, 100-digit arithmetic:
//   n = 8   8.2556e-09
//   n = 16  1.3388e-16
//   n = 32  1.1392e-31
//   n = 64  2.4776e-61
// grid P_n x P_n, u = 0.11, double:
//   n = 16  3.6873e-05
//   n = 64  9.4446e-06

namespace gridzeta::testing
{

struct frozen_row
{
    std::size_t size;
    double ceiling;
};

inline constexpr double torus_u = 0.1;
inline constexpr std::array<frozen_row, 4> torus_ceilings{{{8, 1e-8}, {16, 1e-15}, {32, 1e-30}, {64, 1e-59}}};

inline constexpr double grid_u = 0.11;
inline constexpr std::array<frozen_row, 2> grid_ceilings{{{16, 4e-5}, {64, 1e-5}}};

}

#endif
