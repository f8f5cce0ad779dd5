#pragma once

// Umbrella header for the library (everything except the CLI front end).

#include "desargues/constructions.hpp"
#include "desargues/crossratio_maps.hpp"
#include "desargues/error.hpp"
#include "desargues/expression.hpp"
#include "desargues/field.hpp"
#include "desargues/plane.hpp"
#include "desargues/prime_field.hpp"
#include "desargues/quaternion.hpp"
#include "desargues/random.hpp"
#include "desargues/ratios.hpp"
#include "desargues/rational.hpp"
#include "desargues/selftest.hpp"
#include "desargues/svg.hpp"
#include "desargues/sylvester.hpp"
#include "desargues/text.hpp"
#include "desargues/verify.hpp"
