#ifndef JETSOLVE_ORACLE_HPP
#define JETSOLVE_ORACLE_HPP

#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "jetsolve/polynomial.hpp"

// Reference algorithms kept deliberately separate from the reduction code so
// that agreement between the two is meaningful.

namespace jetsolve {

/// Monic gcd by Euclid's algorithm. Both inputs must be univariate in `var`
/// (constants allowed) and not both zero; throws ShapeError otherwise.
Polynomial gcd_univariate(const Polynomial& f, const Polynomial& g, std::string_view var);

/// Exact remainder of f modulo g (univariate, g nonzero).
Polynomial remainder_univariate(const Polynomial& f, const Polynomial& g, std::string_view var);

/// Determinant of the Sylvester matrix of f and g in `var`. The deg_var(f)
/// rows of g's coefficients come first, then the deg_var(g) rows of f's.
/// Zero if either input is zero. Throws UndefinedResultantError if neither
/// involves `var`.
Polynomial sylvester_resultant(const Polynomial& f, const Polynomial& g, std::string_view var);

/// Every point over `variables` whose coordinates are p/q with |p| <= bound,
/// 1 <= q <= bound that zeroes all of `system`. Sorted ascending.
std::vector<Assignment> rational_root_search(std::span<const Polynomial> system,
                                             std::span<const std::string> variables, unsigned bound);

/// Same, over the occurring variables in natural name order.
std::vector<Assignment> rational_root_search(std::span<const Polynomial> system, unsigned bound);

}  // namespace jetsolve

#endif  // JETSOLVE_ORACLE_HPP
