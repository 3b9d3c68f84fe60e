#include <algorithm>

#include "jetsolve/errors.hpp"
#include "jetsolve/jet.hpp"

namespace jetsolve {

namespace {

void add_condition(std::vector<SideCondition>& conditions, const Polynomial& p) {
  if (p.is_constant()) return;
  SideCondition c{p};
  if (std::find(conditions.begin(), conditions.end(), c) == conditions.end()) conditions.push_back(std::move(c));
}

// Splits p into sum M_t * t + L. Returns false if some top jet enters nonlinearly.
bool split_linear(const Polynomial& p, const std::vector<std::string>& tops, std::vector<Polynomial>& row,
                  Polynomial& rest) {
  Assignment zeros;
  for (const auto& t : tops) zeros.emplace(t, Scalar(0));
  row.assign(tops.size(), Polynomial());
  rest = p.partial_evaluate(zeros);
  Polynomial rebuilt = rest;
  for (std::size_t c = 0; c < tops.size(); ++c) {
    const int degree = p.degree_in(tops[c]);
    if (degree > 1) return false;
    if (degree < 1) continue;
    row[c] = p.coefficients_in(tops[c])[1];
    for (const auto& t : tops)
      if (row[c].involves(t)) return false;
    rebuilt += row[c] * Polynomial::variable(tops[c]);
  }
  return rebuilt == p;
}

}  // namespace

TopOrderExtraction top_order_extraction(const PdeSystem& system, const ProlongedSystem& prolonged,
                                        const MultiIndex& i) {
  const IndexCodec& codec = prolonged.codec();
  const std::size_t p = system.functions;
  const std::size_t n = system.surplus;
  const std::size_t m = system.dimension();
  if (codec.functions() != p || codec.surplus() != n || codec.dimension() != m)
    throw ShapeError("prolonged system does not belong to the PDE system");
  if (n + p < m * p) throw ShapeError("top-order extraction needs n >= (m-1)p");
  if (!codec.contains_equation(i)) throw RangeError("equation multi-index " + i.to_string() + " out of range");

  TopOrderExtraction out;
  std::vector<std::string> tops;
  for (std::size_t s = 0; s < m; ++s)
    for (unsigned v = 1; v <= p; ++v) {
      out.top_jets.push_back(JetVar{v, i.raised(s)});
      tops.push_back(out.top_jets.back().name());
    }

  const std::size_t rows = p + n;
  const std::size_t cols = tops.size();
  out.coefficients.resize(rows);
  out.remainders.resize(rows);
  for (std::size_t k = 0; k < rows; ++k) {
    const Polynomial& eq = prolonged.equation(static_cast<unsigned>(k + 1), i).polynomial;
    if (!split_linear(eq, tops, out.coefficients[k], out.remainders[k])) {
      out.failure = "equation k=" + std::to_string(k + 1) + " is not linear in the top-order jets";
      return out;
    }
  }
  if (rows == cols && cols <= 24) out.determinant = determinant(out.coefficients);

  // Fraction-free Gauss-Jordan on [M | L].
  PolyMatrix a = out.coefficients;
  std::vector<Polynomial> l = out.remainders;
  for (std::size_t c = 0; c < cols; ++c) {
    std::size_t pivot = rows;
    for (std::size_t r = c; r < rows; ++r) {
      if (a[r][c].is_zero()) continue;
      if (pivot == rows) pivot = r;
      if (a[r][c].is_constant()) {
        pivot = r;
        break;
      }
    }
    if (pivot == rows) {
      out.failure = "coefficient matrix of the top-order jets is rank deficient";
      out.coefficients = std::move(a);
      out.conditions.clear();
      return out;
    }
    std::swap(a[c], a[pivot]);
    std::swap(l[c], l[pivot]);
    const Polynomial piv = a[c][c];
    add_condition(out.conditions, piv);
    for (std::size_t r = 0; r < rows; ++r) {
      if (r == c || a[r][c].is_zero()) continue;
      const Polynomial factor = a[r][c];
      for (std::size_t q = 0; q < cols; ++q) a[r][q] = piv * a[r][q] - factor * a[c][q];
      l[r] = piv * l[r] - factor * l[c];
    }
  }

  for (std::size_t c = 0; c < cols; ++c) {
    const Polynomial& diag = a[c][c];
    TopJetSolution solution{out.top_jets[c], -l[c], diag};
    if (diag.is_constant()) {
      solution.numerator *= Scalar(1) / diag.constant_term();
      solution.denominator = Polynomial(1);
    } else {
      add_condition(out.conditions, diag);
    }
    out.solutions.push_back(std::move(solution));
  }
  for (std::size_t r = cols; r < rows; ++r) out.residuals.push_back(l[r]);
  out.solved = true;
  return out;
}

}  // namespace jetsolve
