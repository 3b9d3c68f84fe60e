#include "jetsolve/rank.hpp"

#include <stdexcept>

#include "jetsolve/errors.hpp"

namespace jetsolve {

namespace {

void require_assigned(const ProlongedSystem& prolonged, const Assignment& point) {
  for (const auto& eq : prolonged.equations())
    for (const auto& name : eq.polynomial.variables())
      if (!point.contains(name)) throw MissingAssignmentError(name);
}

std::vector<std::vector<Integer>> integer_rows(const ScalarMatrix& matrix) {
  std::vector<std::vector<Integer>> out;
  out.reserve(matrix.size());
  for (const auto& row : matrix) {
    Integer scale = 1;
    for (const auto& x : row) scale = lcm(scale, Integer(x.get_den()));
    std::vector<Integer> scaled;
    scaled.reserve(row.size());
    for (const auto& x : row) scaled.push_back(x.get_num() * (scale / x.get_den()));
    out.push_back(std::move(scaled));
  }
  return out;
}

}  // namespace

JacobianMatrix jacobian(const ProlongedSystem& prolonged, const Assignment& point) {
  require_assigned(prolonged, point);
  JacobianMatrix out;
  out.unknowns = prolonged.unknowns();
  out.entries.assign(prolonged.equations().size(), std::vector<Scalar>(out.unknowns.size(), Scalar(0)));
  for (std::size_t a = 0; a < prolonged.equations().size(); ++a) {
    const Polynomial& eq = prolonged.equations()[a].polynomial;
    for (std::size_t b = 0; b < out.unknowns.size(); ++b) {
      const std::string name = out.unknowns[b].name();
      if (eq.involves(name)) out.entries[a][b] = eq.partial_derivative(name).evaluate(point);
    }
  }
  return out;
}

std::size_t exact_rank(const ScalarMatrix& matrix) {
  auto a = integer_rows(matrix);
  const std::size_t rows = a.size();
  const std::size_t cols = rows == 0 ? 0 : a.front().size();
  Integer previous = 1;
  std::size_t rank = 0;
  for (std::size_t c = 0; c < cols && rank < rows; ++c) {
    std::size_t pivot = rank;
    while (pivot < rows && a[pivot][c] == 0) ++pivot;
    if (pivot == rows) continue;
    std::swap(a[rank], a[pivot]);
    for (std::size_t r = rank + 1; r < rows; ++r) {
      for (std::size_t q = c + 1; q < cols; ++q) {
        Integer value = a[rank][c] * a[r][q] - a[r][c] * a[rank][q];
        if (!mpz_divisible_p(value.get_mpz_t(), previous.get_mpz_t()))
          throw std::logic_error("fraction-free elimination lost exactness");
        mpz_divexact(value.get_mpz_t(), value.get_mpz_t(), previous.get_mpz_t());
        a[r][q] = std::move(value);
      }
      a[r][c] = 0;
    }
    previous = a[rank][c];
    ++rank;
  }
  return rank;
}

std::size_t count_active_unknowns(const ProlongedSystem& prolonged) {
  std::size_t count = 0;
  for (const auto& jet : prolonged.unknowns()) {
    const std::string name = jet.name();
    for (const auto& eq : prolonged.equations()) {
      if (eq.polynomial.involves(name)) {
        ++count;
        break;
      }
    }
  }
  return count;
}

RankReport certify(const ProlongedSystem& prolonged, const Assignment& point) {
  require_assigned(prolonged, point);
  for (const auto& eq : prolonged.equations())
    if (eq.polynomial.evaluate(point) != 0) throw NotASolutionError(eq.alpha);

  const IndexCodec& codec = prolonged.codec();
  RankReport report;
  report.rank = exact_rank(jacobian(prolonged, point).entries);
  report.n_s_real = count_active_unknowns(prolonged);
  report.n_h = codec.equation_count();
  report.n_s = codec.unknown_count();
  report.certified = report.rank == report.n_s_real;
  report.bound = active_unknown_bound(codec.functions(), codec.surplus(), codec.orders(), codec.flavor());
  report.bound_holds = Scalar(static_cast<long>(report.n_s_real)) <= report.bound;
  report.n_h_ge_n_s = report.n_h >= report.n_s;
  return report;
}

}  // namespace jetsolve
