#ifndef JETSOLVE_POLYNOMIAL_HPP
#define JETSOLVE_POLYNOMIAL_HPP

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <limits>
#include <map>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "jetsolve/scalar.hpp"

namespace jetsolve {

/// Total order on variable names used for every variable table. Runs of
/// decimal digits compare by numeric value, everything else bytewise, so
/// S1[2] < S1[10] and x2 < x10.
bool natural_less(std::string_view a, std::string_view b);

using VarIndex = std::uint32_t;

/// Power product over the variables of one table. Only nonzero exponents are
/// stored, sorted by variable index.
class Monomial {
 public:
  using Power = std::pair<VarIndex, unsigned>;

  Monomial() = default;
  explicit Monomial(std::vector<Power> powers);

  static Monomial of(VarIndex var, unsigned exponent = 1);

  unsigned degree() const noexcept { return degree_; }
  unsigned exponent(VarIndex var) const noexcept;
  const std::vector<Power>& powers() const noexcept { return powers_; }
  bool is_one() const noexcept { return powers_.empty(); }

  Monomial operator*(const Monomial& other) const;
  /// Copy with the exponent of `var` set to `exponent` (0 removes it).
  Monomial with_exponent(VarIndex var, unsigned exponent) const;
  /// Renumber variables through a strictly increasing map.
  Monomial remapped(std::span<const VarIndex> index_map) const;

  friend bool operator==(const Monomial&, const Monomial&) = default;
  /// Graded lexicographic order; lower variable index is more significant.
  friend std::strong_ordering operator<=>(const Monomial& a, const Monomial& b);

 private:
  std::vector<Power> powers_;
  unsigned degree_ = 0;
};

/// Sparse multivariate polynomial with exact rational coefficients.
///
/// Canonical form: the variable table holds exactly the variables that occur,
/// sorted by natural_less; terms are keyed by monomial in descending graded
/// lexicographic order and never carry a zero coefficient. Two polynomials are
/// equal iff their canonical forms are identical, so operator== is structural.
/// Binary operations merge variable tables by name.
class Polynomial {
 public:
  using TermMap = std::map<Monomial, Scalar, std::greater<>>;

  /// degree_in() of the zero polynomial.
  static constexpr int kDegreeOfZero = std::numeric_limits<int>::min();

  Polynomial() = default;
  Polynomial(const Scalar& constant);  // NOLINT(google-explicit-constructor)
  Polynomial(long constant) : Polynomial(Scalar(constant)) {}  // NOLINT(google-explicit-constructor)
  Polynomial(int constant) : Polynomial(Scalar(constant)) {}  // NOLINT(google-explicit-constructor)

  static Polynomial variable(std::string name, unsigned exponent = 1);
  /// Parses the text syntax: `+ - * ^`, parentheses, integer or rational
  /// literals (`-3/4`), identifiers optionally followed by a bracketed index
  /// list (`S1[2,0]`). Implicit multiplication is rejected.
  static Polynomial parse(std::string_view text);

  const std::vector<std::string>& variables() const noexcept { return vars_; }
  const TermMap& terms() const noexcept { return terms_; }
  std::size_t term_count() const noexcept { return terms_.size(); }

  bool is_zero() const noexcept { return terms_.empty(); }
  bool is_constant() const noexcept { return vars_.empty(); }
  /// Coefficient of the constant monomial.
  Scalar constant_term() const;
  bool involves(std::string_view var) const { return index_of(var) != kAbsent; }

  int degree_in(std::string_view var) const;
  int total_degree() const;
  /// [A0, ..., Ad] with d = degree_in(var) and f = sum Ai * var^i; empty for 0.
  std::vector<Polynomial> coefficients_in(std::string_view var) const;
  Polynomial leading_coefficient_in(std::string_view var) const;

  Polynomial partial_derivative(std::string_view var) const;
  /// Throws MissingAssignmentError naming the first unassigned variable.
  Scalar evaluate(const Assignment& point) const;
  /// Substitutes the assigned variables only; others stay symbolic.
  Polynomial partial_evaluate(const Assignment& point) const;
  Polynomial substitute(const std::map<std::string, Polynomial, std::less<>>& images) const;
  Polynomial rename(const std::map<std::string, std::string, std::less<>>& names) const;
  Polynomial pow(unsigned exponent) const;

  std::string to_string() const;

  Polynomial operator-() const;
  Polynomial& operator+=(const Polynomial& other);
  Polynomial& operator-=(const Polynomial& other);
  Polynomial& operator*=(const Polynomial& other);
  Polynomial& operator*=(const Scalar& factor);

  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator*(Polynomial a, const Scalar& b) { return a *= b; }
  friend Polynomial operator*(const Scalar& a, Polynomial b) { return b *= a; }

  friend bool operator==(const Polynomial&, const Polynomial&) = default;

 private:
  static constexpr VarIndex kAbsent = std::numeric_limits<VarIndex>::max();

  Polynomial(std::vector<std::string> vars, TermMap terms);

  VarIndex index_of(std::string_view var) const;
  void add_scaled(const Polynomial& other, const Scalar& factor);
  void prune();

  std::vector<std::string> vars_;
  TermMap terms_;
};

std::ostream& operator<<(std::ostream& os, const Polynomial& p);

}  // namespace jetsolve

#endif  // JETSOLVE_POLYNOMIAL_HPP
