#ifndef JETSOLVE_SCALAR_HPP
#define JETSOLVE_SCALAR_HPP

#include <gmpxx.h>

#include <map>
#include <string>
#include <string_view>

namespace jetsolve {

/// Exact rational number. Always kept in lowest terms with a positive
/// denominator; every arithmetic operation is exact.
using Scalar = mpq_class;

/// Exact integer, used for fraction-free elimination.
using Integer = mpz_class;

/// Variable name -> value. Keyed by name so that points can be shared across
/// polynomials with different variable tables.
using Assignment = std::map<std::string, Scalar, std::less<>>;

/// Parses "p", "-p" or "p/q" (decimal integers). Throws ParseError.
Scalar parse_scalar(std::string_view text);

/// "p" for integers, "p/q" otherwise.
std::string to_string(const Scalar& value);

inline bool is_integer(const Scalar& value) { return value.get_den() == 1; }

}  // namespace jetsolve

#endif  // JETSOLVE_SCALAR_HPP
