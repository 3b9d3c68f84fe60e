#ifndef JETSOLVE_SIDE_CONDITION_HPP
#define JETSOLVE_SIDE_CONDITION_HPP

#include <string_view>

#include "jetsolve/polynomial.hpp"

namespace jetsolve {

enum class ConditionState { holds, violated, symbolic };

std::string_view to_string(ConditionState state);

/// A polynomial asserted to be nonzero. Results derived under a condition are
/// valid only on the locus where it does not vanish.
struct SideCondition {
  Polynomial polynomial;

  /// Constant conditions are decided immediately; others stay symbolic.
  ConditionState state() const;

  friend bool operator==(const SideCondition&, const SideCondition&) = default;
};

}  // namespace jetsolve

#endif  // JETSOLVE_SIDE_CONDITION_HPP
