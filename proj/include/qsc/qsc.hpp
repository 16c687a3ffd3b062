#pragma once

/**
 * @file qsc.hpp
 * @brief Umbrella header.
 */

#include "qsc/cohomology_rings.hpp"
#include "qsc/determinant.hpp"
#include "qsc/frobenius.hpp"
#include "qsc/groebner.hpp"
#include "qsc/parser.hpp"
#include "qsc/polynomial.hpp"
#include "qsc/render.hpp"
#include "qsc/toric_bundle.hpp"
#include "qsc/toric_data.hpp"
