#ifndef GHPOLY_GHPOLY_HPP
#define GHPOLY_GHPOLY_HPP

#include "ghpoly/correspondence.hpp"
#include "ghpoly/gh_exact.hpp"
#include "ghpoly/metric_io.hpp"
#include "ghpoly/metric_space.hpp"
#include "ghpoly/partition.hpp"
#include "ghpoly/pi_rational.hpp"
#include "ghpoly/polygon.hpp"
#include "ghpoly/simplex.hpp"
#include "ghpoly/ultrametric.hpp"

#endif
