#ifndef JETSOLVE_RANK_HPP
#define JETSOLVE_RANK_HPP

#include <cstddef>
#include <vector>

#include "jetsolve/jet.hpp"
#include "jetsolve/scalar.hpp"

namespace jetsolve {

using ScalarMatrix = std::vector<std::vector<Scalar>>;

/// dP_alpha / dQ_beta at a point. Row a is alpha = a + 1, column b is
/// beta = b + 1.
struct JacobianMatrix {
  std::vector<JetVar> unknowns;
  ScalarMatrix entries;

  std::size_t rows() const noexcept { return entries.size(); }
  std::size_t cols() const noexcept { return unknowns.size(); }
};

/// Throws MissingAssignmentError unless `point` assigns every variable that
/// occurs in the prolonged system.
JacobianMatrix jacobian(const ProlongedSystem& prolonged, const Assignment& point);

/// Rank over the rationals (rows scaled to integers, then Bareiss elimination).
std::size_t exact_rank(const ScalarMatrix& matrix);

/// Number of unknowns Q_beta with dP_alpha/dQ_beta not identically zero for
/// some alpha.
std::size_t count_active_unknowns(const ProlongedSystem& prolonged);

struct RankReport {
  std::size_t rank = 0;
  std::size_t n_s_real = 0;
  std::size_t n_h = 0;
  std::size_t n_s = 0;
  bool certified = false;
  /// n_s_real <= bound
  bool bound_holds = false;
  bool n_h_ge_n_s = false;
  Scalar bound;
};

/// Checks that `point` zeroes every equation (NotASolutionError naming the
/// first alpha that fails), then compares the Jacobian rank at the point with
/// the number of active unknowns.
RankReport certify(const ProlongedSystem& prolonged, const Assignment& point);

}  // namespace jetsolve

#endif  // JETSOLVE_RANK_HPP
