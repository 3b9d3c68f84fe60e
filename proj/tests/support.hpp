#ifndef JETSOLVE_TESTS_SUPPORT_HPP
#define JETSOLVE_TESTS_SUPPORT_HPP

#include <random>
#include <string>
#include <string_view>
#include <vector>

#include "jetsolve/jet.hpp"
#include "jetsolve/polynomial.hpp"
#include "jetsolve/rank.hpp"

namespace support {

using jetsolve::Polynomial;
using jetsolve::Scalar;

inline Polynomial P(std::string_view text) { return Polynomial::parse(text); }

/// p/q with |p| <= num, 1 <= q <= den.
Scalar small_rational(std::mt19937& rng, int num = 5, int den = 3);
Scalar small_nonzero_rational(std::mt19937& rng, int num = 5, int den = 3);

/// Univariate polynomial of exactly `degree` with small rational coefficients.
Polynomial random_univariate(std::mt19937& rng, const std::string& var, int degree);
/// Product of (var - r_i) for the given roots, times a nonzero constant.
Polynomial from_roots(const std::vector<Scalar>& roots, const std::string& var, const Scalar& scale = 1);

/// Up to `terms` random monomials over `vars` of total degree <= max_degree.
Polynomial random_polynomial(std::mt19937& rng, const std::vector<std::string>& vars, int max_degree, int terms);

/// Random first-order PDE system with p functions, n surplus equations over m
/// base variables x1..xm; each equation has total degree <= max_degree.
jetsolve::PdeSystem random_pde(std::mt19937& rng, unsigned p, unsigned n, unsigned m, int max_degree);

/// Rank by plain Gaussian elimination over the rationals.
std::size_t naive_rank(jetsolve::ScalarMatrix matrix);

/// Jet names of S_v up to the given orders, mapped to derivatives of the
/// given polynomial functions of the base variables.
std::map<std::string, Polynomial, std::less<>> jet_images(const std::vector<Polynomial>& functions,
                                                          const std::vector<std::string>& base,
                                                          unsigned max_order);

/// Common rational roots of two univariate polynomials, by direct evaluation
/// at the rational roots of the first nonzero one.
std::vector<Scalar> common_roots(const Polynomial& f, const Polynomial& g, const std::string& var);

}  // namespace support

#endif  // JETSOLVE_TESTS_SUPPORT_HPP
