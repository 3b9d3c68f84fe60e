#ifndef JETSOLVE_DETERMINANT_HPP
#define JETSOLVE_DETERMINANT_HPP

#include <vector>

#include "jetsolve/polynomial.hpp"

namespace jetsolve {

using PolyMatrix = std::vector<std::vector<Polynomial>>;

/// Division-free determinant over the polynomial ring (Laplace expansion
/// along rows, memoized on the set of used columns). Intended for the small
/// matrices met in resultants and top-order extraction; at most 24 columns.
Polynomial determinant(const PolyMatrix& matrix);

}  // namespace jetsolve

#endif  // JETSOLVE_DETERMINANT_HPP
