#include "jetsolve/determinant.hpp"

#include <bit>
#include <cstdint>
#include <unordered_map>

#include "jetsolve/errors.hpp"

namespace jetsolve {

namespace {

class Expansion {
 public:
  explicit Expansion(const PolyMatrix& m) : m_(m), n_(m.size()) {}

  // Determinant of the minor built from rows [row, n) and the columns in `free_cols`.
  Polynomial minor(std::uint32_t free_cols) {
    if (free_cols == 0) return Polynomial(1);
    auto it = memo_.find(free_cols);
    if (it != memo_.end()) return it->second;
    const std::size_t row = n_ - static_cast<std::size_t>(std::popcount(free_cols));
    Polynomial total;
    int sign = 1;
    for (std::size_t col = 0; col < n_; ++col) {
      const std::uint32_t bit = 1U << col;
      if ((free_cols & bit) == 0) continue;
      const Polynomial& entry = m_[row][col];
      if (!entry.is_zero()) {
        Polynomial term = entry * minor(free_cols & ~bit);
        if (sign > 0)
          total += term;
        else
          total -= term;
      }
      sign = -sign;
    }
    memo_.emplace(free_cols, total);
    return total;
  }

 private:
  const PolyMatrix& m_;
  std::size_t n_;
  std::unordered_map<std::uint32_t, Polynomial> memo_;
};

}  // namespace

Polynomial determinant(const PolyMatrix& matrix) {
  const std::size_t n = matrix.size();
  for (const auto& row : matrix)
    if (row.size() != n) throw ShapeError("determinant of a non-square matrix");
  if (n > 24) throw ShapeError("determinant: matrix too large for cofactor expansion");
  if (n == 0) return Polynomial(1);
  Expansion expansion(matrix);
  return expansion.minor((1U << n) - 1U);
}

}  // namespace jetsolve
