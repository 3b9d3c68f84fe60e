#ifndef JETSOLVE_REDUCTION_HPP
#define JETSOLVE_REDUCTION_HPP

#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "jetsolve/polynomial.hpp"
#include "jetsolve/side_condition.hpp"

namespace jetsolve {

enum class StepKind {
  pair_reduce,
  absorb_multiply,
  linear_solve,
  rational_roots,
  inconsistency,
  residual,
  branch_skipped,
};

std::string_view to_string(StepKind kind);
std::optional<StepKind> parse_step_kind(std::string_view text);

/// One recorded transformation. `outputs` can be recomputed from `inputs`,
/// `kind` and `variable` alone (see replay()).
struct ReductionStep {
  StepKind kind = StepKind::residual;
  std::string variable;
  std::vector<Polynomial> inputs;
  std::vector<Polynomial> outputs;
  std::vector<SideCondition> conditions;
  std::string note;
};

enum class Status { solved, inconsistent, residual, degenerate };

std::string_view to_string(Status status);

struct ReductionOutcome {
  Status status = Status::residual;
  /// Each point zeroes every input polynomial exactly.
  std::vector<Assignment> solutions;
  std::vector<Polynomial> residual_system;
  std::vector<SideCondition> conditions;
  std::vector<ReductionStep> trace;
};

/// Result of lowering an equal-degree pair {f, g} to {c, d}.
struct PairReduction {
  Polynomial c;
  Polynomial d;
  std::vector<SideCondition> conditions;
  /// Cross-multiplied form, used when the leading coefficient of f is not a constant.
  bool pseudo = false;
  /// The condition c_{n-1} != 0 fails identically; {c, d} is not equivalent to {f, g}.
  bool degenerate = false;
};

/// One degree-lowering step for two polynomials of equal degree n >= 1 in `var`.
///
/// With a_i, b_i the coefficients of f and g in `var`:
///   c_j = b_j - (b_n / a_n) a_j              (j < n)
///   d_j = c_{j-1} - (c_{n-1} / a_n) a_j      (c_{-1} = 0)
/// When a_n is a polynomial in other variables the divisions are cleared:
///   c = a_n g - b_n f,   d = a_n var c - c_{n-1} f,
/// and a_n != 0 is recorded next to c_{n-1} != 0. Under the recorded
/// conditions {f, g} and {c, d} have the same common zeros.
///
/// Throws DegreeMismatchError if the degrees differ or are < 1, and
/// ZeroLeadingCoefficientError if either polynomial is zero.
PairReduction reduce_pair(const Polynomial& f, const Polynomial& g, std::string_view var);

struct Absorption {
  Polynomial result;
  std::vector<SideCondition> conditions;
};

/// Cancels the leading term of `higher` against var^k * `lower`, where
/// k = deg(higher) - deg(lower) >= 0 and deg(lower) >= 1. Divides by the
/// leading coefficient of `lower` when it is a constant, cross-multiplies
/// (and records it as a condition) otherwise.
Absorption absorb(const Polynomial& higher, const Polynomial& lower, std::string_view var);

/// Chains reduce_pair down to the linear case for a univariate pair with
/// constant coefficients, then solves the linear pair and checks the 2x2
/// consistency determinant. Falls back to absorb() whenever the pair-reduction
/// condition fails identically or the degrees differ.
ReductionOutcome reduce_chain(const Polynomial& f, const Polynomial& g, std::string_view var);

struct Elimination {
  /// One fewer member than the input, all free of the eliminated variable.
  std::vector<Polynomial> reduced;
  std::vector<SideCondition> conditions;
  std::vector<ReductionStep> trace;
  /// Equation determining the eliminated variable once the others are known.
  /// Linear (A var + B) whenever the chain reached the linear case.
  Polynomial solver;
  /// Every member is a constant multiple of the first one.
  bool degenerate = false;
};

/// Removes `var` from an overdetermined system by reducing every member
/// against a pivot until the pivot is linear in `var`, then cross-multiplying
/// the linear pivot into the others.
///
/// Pivot: among members involving `var`, those with a constant leading
/// coefficient are preferred; then lowest degree; then input order.
/// Throws EliminationError if no member involves `var`.
Elimination eliminate_variable(std::span<const Polynomial> system, std::string_view var);

/// Solves m+1 polynomial equations in the given m variables by eliminating
/// variables from the last one down, solving the univariate remainder, and
/// back-substituting. Every reported point is re-verified against `system`.
/// Branches on which a side condition vanishes are recorded, not explored.
/// Throws ShapeError unless system.size() == variables.size() + 1 and every
/// occurring variable is listed.
ReductionOutcome solve_overdetermined(std::span<const Polynomial> system,
                                      std::span<const std::string> variables);

/// Same, with the occurring variables in table order.
ReductionOutcome solve_overdetermined(std::span<const Polynomial> system);

/// Recomputes a step's outputs from its inputs.
std::vector<Polynomial> replay(const ReductionStep& step);

struct RationalRoots {
  /// Distinct rational roots, ascending.
  std::vector<Scalar> roots;
  /// The polynomial splits into linear factors over the rationals.
  bool complete = false;
};

/// Rational roots of a nonzero univariate polynomial by the rational root
/// theorem. Returns nullopt when the extreme coefficients are too large to
/// enumerate their divisors. Throws ShapeError for other variables.
std::optional<RationalRoots> rational_roots(const Polynomial& f, std::string_view var);

}  // namespace jetsolve

#endif  // JETSOLVE_REDUCTION_HPP
