#pragma once

// Umbrella include for the whole library.

#include "bernoulli.hpp"
#include "cyclotomic.hpp"
#include "dirichlet.hpp"
#include "errors.hpp"
#include "frobenius_euler.hpp"
#include "json_io.hpp"
#include "lambda.hpp"
#include "log_poly.hpp"
#include "padic.hpp"
#include "rational.hpp"
#include "series.hpp"
#include "special_values.hpp"
#include "verify.hpp"
