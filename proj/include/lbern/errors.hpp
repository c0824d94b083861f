#pragma once

#include <stdexcept>
#include <string>

namespace lbern {

// Base class for all library errors.
struct error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Attempt to invert an exact zero.
struct zero_inverse : error { using error::error; };

// Binary operation on cyclotomic elements of different orders.
struct order_mismatch : error { using error::error; };

// Division of a log-polynomial by a divisor of positive L-degree.
struct divisor_not_scalar : error { using error::error; };

// Argument outside the documented domain of an operation.
struct invalid_parameter : error { using error::error; };

// Series division by a series whose constant term is not an invertible scalar.
struct non_invertible_constant_term : error { using error::error; };

// Modulus passed to a character sum is not a multiple of the character modulus.
struct conductor_mismatch : error { using error::error; };

// Numeric series failed to reach the requested tolerance.
struct non_convergent : error { using error::error; };

// Evaluation of a zeta/L series at its pole.
struct pole_at_one : error { using error::error; };

// Index outside a table or enumeration.
struct range_error : error { using error::error; };

// p-adic inversion/logarithm of a non-unit.
struct not_a_unit : error { using error::error; };

// p-adic operation outside its convergence/representability domain.
struct outside_domain : error { using error::error; };

// Requested p-adic precision cannot be guaranteed by the computation.
struct precision_loss : error { using error::error; };

// Character values do not embed into the requested p-adic field.
struct character_not_representable : error { using error::error; };

} // namespace lbern
