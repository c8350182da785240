#ifndef GRIDZETA_HPP
#define GRIDZETA_HPP

#include "gridzeta/errors.hpp"
#include "gridzeta/region.hpp"
#include "gridzeta/special_functions.hpp"
#include "gridzeta/series.hpp"
#include "gridzeta/exact_series.hpp"
#include "gridzeta/quadrature.hpp"
#include "gridzeta/oracles.hpp"
#include "gridzeta/surface.hpp"
#include "gridzeta/finite_graphs.hpp"
#include "gridzeta/io.hpp"

#endif
