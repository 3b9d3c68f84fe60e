#ifndef JETSOLVE_JET_HPP
#define JETSOLVE_JET_HPP

#include <compare>
#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "jetsolve/determinant.hpp"
#include "jetsolve/polynomial.hpp"
#include "jetsolve/side_condition.hpp"

namespace jetsolve {

/// Differentiation orders (j_1, ..., j_m), one per independent variable.
class MultiIndex {
 public:
  MultiIndex() = default;
  explicit MultiIndex(std::vector<unsigned> orders) : orders_(std::move(orders)) {}

  static MultiIndex zero(std::size_t dimension) { return MultiIndex(std::vector<unsigned>(dimension, 0)); }
  static MultiIndex unit(std::size_t dimension, std::size_t axis);

  std::size_t size() const noexcept { return orders_.size(); }
  unsigned operator[](std::size_t axis) const { return orders_[axis]; }
  const std::vector<unsigned>& orders() const noexcept { return orders_; }
  unsigned total() const noexcept;
  bool is_zero() const noexcept { return total() == 0; }

  /// Copy with orders[axis] + 1.
  MultiIndex raised(std::size_t axis) const;
  /// Copy with orders[axis] - 1; the component must be positive.
  MultiIndex lowered(std::size_t axis) const;

  std::string to_string() const;

  friend auto operator<=>(const MultiIndex&, const MultiIndex&) = default;

 private:
  std::vector<unsigned> orders_;
};

/// Jet variable: the derivative of unknown function S_v (v is 1-based) with
/// orders `index`. The zero multi-index denotes S_v itself. Named
/// "S<v>[j1,...,jm]" inside polynomials.
struct JetVar {
  unsigned function = 1;
  MultiIndex index;

  std::string name() const;
  /// Accepts "S<v>[j1,...,jm]" and the shorthand "S<v>" for the zero index of
  /// length `dimension`. Returns nullopt for names that are not jet tokens;
  /// throws RangeError for a jet token whose index length is not `dimension`.
  static std::optional<JetVar> parse(std::string_view name, std::size_t dimension);

  friend auto operator<=>(const JetVar&, const JetVar&) = default;
};

/// Prolongation orders (N_1, ..., N_m), all at least 1.
class OrderVector {
 public:
  explicit OrderVector(std::vector<unsigned> orders);

  std::size_t size() const noexcept { return orders_.size(); }
  unsigned operator[](std::size_t axis) const { return orders_[axis]; }
  const std::vector<unsigned>& values() const noexcept { return orders_; }

  friend bool operator==(const OrderVector&, const OrderVector&) = default;

 private:
  std::vector<unsigned> orders_;
};

enum class Flavor { plain, extended };

std::string_view to_string(Flavor flavor);

/// Closed-form sizes of the plain and extended prolonged systems.
struct Counts {
  std::uint64_t n_h = 0;      ///< (p+n) N_1 ... N_m
  std::uint64_t n_s = 0;      ///< p (N_1+1) ... (N_m+1)
  std::uint64_t n_h_ext = 0;  ///< (p+n) (N_1+1) ... (N_m+1)
  std::uint64_t n_s_ext = 0;  ///< p (N_1+2) ... (N_m+2)
};

Counts counts(unsigned p, unsigned n, const OrderVector& orders);

/// Upper bound on the number of jet unknowns that can occur:
/// N_H p/(p+n) (1 + sum 1/N_l). For the extended flavor the same formula is
/// applied to the extended ranges (N_l + 1).
Scalar active_unknown_bound(unsigned p, unsigned n, const OrderVector& orders, Flavor flavor);

/// Mixed-radix numbering of equations (alpha, over (k, i)) and unknowns
/// (beta, over (v, j)), both 1-based.
///
///   plain:    i_s in 0..N_s-1, j_s in 0..N_s
///             alpha = k + i_1 (p+n) + i_2 (p+n) N_1 + ...
///             beta  = v + j_1 p + j_2 p (N_1+1) + ...
///   extended: i_s in 0..N_s,   j_s in 0..N_s+1
///             alpha = k + i_1 (p+n) + i_2 (p+n) (N_1+1) + ...
///             beta  = v + j_1 p + j_2 p (N_1+2) + ...
class IndexCodec {
 public:
  IndexCodec(unsigned p, unsigned n, OrderVector orders, Flavor flavor);

  unsigned functions() const noexcept { return p_; }
  unsigned surplus() const noexcept { return n_; }
  unsigned equations_per_index() const noexcept { return p_ + n_; }
  std::size_t dimension() const noexcept { return orders_.size(); }
  const OrderVector& orders() const noexcept { return orders_; }
  Flavor flavor() const noexcept { return flavor_; }

  unsigned max_equation_order(std::size_t axis) const;
  unsigned max_jet_order(std::size_t axis) const;
  bool contains_equation(const MultiIndex& i) const;
  bool contains_jet(const MultiIndex& j) const;

  std::size_t equation_count() const;
  std::size_t unknown_count() const;

  std::size_t encode_alpha(unsigned k, const MultiIndex& i) const;
  std::pair<unsigned, MultiIndex> decode_alpha(std::size_t alpha) const;
  std::size_t encode_beta(unsigned v, const MultiIndex& j) const;
  JetVar decode_beta(std::size_t beta) const;

  friend bool operator==(const IndexCodec&, const IndexCodec&) = default;

 private:
  unsigned p_;
  unsigned n_;
  OrderVector orders_;
  Flavor flavor_;
};

/// First-order system H_1 .. H_{p+n} = 0 in unknown functions S_1 .. S_p of
/// the base variables x_1 .. x_m. Equations are polynomials over jet
/// variables of order <= 1 and the base variables.
struct PdeSystem {
  unsigned functions = 0;
  unsigned surplus = 0;
  std::vector<std::string> base_variables;
  std::vector<Polynomial> equations;

  std::size_t dimension() const noexcept { return base_variables.size(); }
  /// Throws ShapeError/RangeError when the invariants above do not hold.
  void validate() const;
};

/// Rewrites shorthand jet tokens ("S1") to their canonical form ("S1[0,0]").
Polynomial normalize_jet_names(const Polynomial& p, std::size_t dimension);

/// Formal total derivative along base variable `axis` (0-based):
///   sum over jets Q of (dP/dQ) * Q' + dP/dx_axis,
/// where Q' raises Q's order in `axis` by one. Symbols that are neither jets
/// nor base variables are treated as constants. Throws RangeError when a raised
/// jet leaves the codec's jet range or a jet token is malformed.
Polynomial total_derivative(const Polynomial& p, std::size_t axis, const IndexCodec& codec,
                            std::span<const std::string> base_variables);

struct ProlongedEquation {
  std::size_t alpha = 0;
  unsigned k = 0;
  MultiIndex index;
  Polynomial polynomial;
};

/// Prolonged algebraic system. Equations are ordered by alpha and cover the
/// codec's whole equation range.
class ProlongedSystem {
 public:
  ProlongedSystem(IndexCodec codec, std::vector<std::string> base_variables,
                  std::vector<ProlongedEquation> equations);

  const IndexCodec& codec() const noexcept { return codec_; }
  const std::vector<std::string>& base_variables() const noexcept { return base_variables_; }
  const std::vector<ProlongedEquation>& equations() const noexcept { return equations_; }
  /// All jet unknowns in beta order.
  std::vector<JetVar> unknowns() const;
  const ProlongedEquation& equation(unsigned k, const MultiIndex& i) const;
  Counts counts() const;

 private:
  IndexCodec codec_;
  std::vector<std::string> base_variables_;
  std::vector<ProlongedEquation> equations_;
};

/// Generates prolonged equations on demand. P(k, 0) = H_k; P(k, i) is the
/// total derivative of P(k, i - e_s) along the last axis s with i_s > 0, so
/// differentiation runs x_1 first, then x_2, and so on. Every entry is computed
/// once and reused across orders and flavors.
class Prolongator {
 public:
  explicit Prolongator(PdeSystem system);

  const PdeSystem& system() const noexcept { return system_; }
  /// P(k, i); `orders` bounds the jet range used for range checks.
  const Polynomial& equation(unsigned k, const MultiIndex& i, const OrderVector& orders);
  ProlongedSystem prolong(const OrderVector& orders, Flavor flavor);

 private:
  PdeSystem system_;
  std::map<std::pair<unsigned, MultiIndex>, Polynomial> cache_;
};

ProlongedSystem prolong(const PdeSystem& system, const OrderVector& orders, Flavor flavor);

struct TopJetSolution {
  JetVar jet;
  Polynomial numerator;
  Polynomial denominator;
};

/// Linear solve for the m*p highest jets Q(v, i + e_s) of the p+n equations
/// P(k, i), k = 1..p+n.
struct TopOrderExtraction {
  bool solved = false;
  /// Why extraction failed (empty on success).
  std::string failure;
  std::vector<JetVar> top_jets;
  /// (p+n) x (m p) coefficients of the top jets; on rank deficiency this is
  /// the deficient matrix.
  PolyMatrix coefficients;
  /// Parts of each equation free of top jets.
  std::vector<Polynomial> remainders;
  /// top jet = numerator / denominator, one per top jet, in top_jets order.
  std::vector<TopJetSolution> solutions;
  /// Consistency constraints left over after solving (p+n - m p of them).
  std::vector<Polynomial> residuals;
  /// Pivots of the fraction-free elimination, asserted nonzero.
  std::vector<SideCondition> conditions;
  /// Determinant of the coefficient matrix when it is square.
  std::optional<Polynomial> determinant;
};

/// Throws ShapeError if n < (m-1) p, RangeError if i lies outside the
/// prolonged system's equation range.
TopOrderExtraction top_order_extraction(const PdeSystem& system, const ProlongedSystem& prolonged,
                                        const MultiIndex& i);

struct MinimalOrders {
  OrderVector orders{{1}};
  std::uint64_t n_h = 0;
  std::uint64_t n_s = 0;
  /// (p+n) (m p / n)^m
  Scalar estimate;
  bool estimate_holds = false;
  /// m p / n, the approximate location of the minimum.
  Scalar target;
  /// |N_l - m p / n| per component.
  std::vector<Scalar> distances;
};

/// Exhaustive search over 1 <= N_l <= cap for the smallest N_H with N_H >= N_S.
/// Ties go to the lexicographically smallest order vector. Throws
/// InfeasibleError when no grid point qualifies.
MinimalOrders minimal_orders(unsigned p, unsigned n, unsigned m, unsigned cap);

}  // namespace jetsolve

#endif  // JETSOLVE_JET_HPP
