#pragma once

// Umbrella header: the fractional Schrodinger infinite-well toolkit.

#include "version.hpp"
#include "errors.hpp"
#include "specfun.hpp"
#include "quadrature.hpp"
#include "riesz.hpp"
#include "spectral.hpp"
#include "mlf_well.hpp"
