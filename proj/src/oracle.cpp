#include "jetsolve/oracle.hpp"

#include <algorithm>
#include <set>

#include "jetsolve/determinant.hpp"
#include "jetsolve/errors.hpp"

namespace jetsolve {

namespace {

// Dense coefficients, index = power; empty for zero.
using Dense = std::vector<Scalar>;

Dense to_dense(const Polynomial& p, std::string_view var) {
  for (const auto& name : p.variables())
    if (name != var) throw ShapeError("'" + p.to_string() + "' is not univariate in " + std::string(var));
  Dense out;
  for (const auto& c : p.coefficients_in(var)) out.push_back(c.constant_term());
  return out;
}

Polynomial from_dense(const Dense& d, std::string_view var) {
  Polynomial out;
  for (std::size_t i = 0; i < d.size(); ++i)
    if (d[i] != 0) out += Polynomial(d[i]) * Polynomial::variable(std::string(var), static_cast<unsigned>(i));
  return out;
}

void trim(Dense& d) {
  while (!d.empty() && d.back() == 0) d.pop_back();
}

Dense remainder(Dense f, const Dense& g) {
  trim(f);
  while (f.size() >= g.size()) {
    const Scalar factor = f.back() / g.back();
    const std::size_t shift = f.size() - g.size();
    for (std::size_t i = 0; i < g.size(); ++i) f[shift + i] -= factor * g[i];
    f.pop_back();
    trim(f);
  }
  return f;
}

std::vector<Scalar> candidate_values(unsigned bound) {
  std::set<Scalar> values;
  for (unsigned q = 1; q <= bound; ++q)
    for (long p = -static_cast<long>(bound); p <= static_cast<long>(bound); ++p) {
      Scalar x(p, q);
      x.canonicalize();
      values.insert(x);
    }
  return {values.begin(), values.end()};
}

class Search {
 public:
  Search(std::span<const Polynomial> system, std::span<const std::string> variables, unsigned bound)
      : system_(system), variables_(variables), values_(candidate_values(bound)) {
    // Check each polynomial as soon as its last variable is assigned.
    ready_.resize(variables.size() + 1);
    for (std::size_t e = 0; e < system.size(); ++e) {
      std::size_t last = 0;
      for (const auto& name : system[e].variables()) {
        auto it = std::find(variables.begin(), variables.end(), name);
        if (it == variables.end()) throw ShapeError("variable '" + name + "' is not listed");
        last = std::max(last, static_cast<std::size_t>(it - variables.begin()) + 1);
      }
      ready_[last].push_back(e);
    }
  }

  std::vector<Assignment> run() {
    if (passes(0)) descend(0);
    std::sort(found_.begin(), found_.end());
    return found_;
  }

 private:
  bool passes(std::size_t depth) const {
    for (std::size_t e : ready_[depth])
      if (system_[e].evaluate(point_) != 0) return false;
    return true;
  }

  void descend(std::size_t depth) {
    if (depth == variables_.size()) {
      found_.push_back(point_);
      return;
    }
    for (const auto& x : values_) {
      point_[variables_[depth]] = x;
      if (passes(depth + 1)) descend(depth + 1);
    }
    point_.erase(variables_[depth]);
  }

  std::span<const Polynomial> system_;
  std::span<const std::string> variables_;
  std::vector<Scalar> values_;
  std::vector<std::vector<std::size_t>> ready_;
  Assignment point_;
  std::vector<Assignment> found_;
};

}  // namespace

Polynomial remainder_univariate(const Polynomial& f, const Polynomial& g, std::string_view var) {
  const Dense dg = to_dense(g, var);
  if (dg.empty()) throw ShapeError("division by the zero polynomial");
  return from_dense(remainder(to_dense(f, var), dg), var);
}

Polynomial gcd_univariate(const Polynomial& f, const Polynomial& g, std::string_view var) {
  Dense a = to_dense(f, var);
  Dense b = to_dense(g, var);
  if (a.empty() && b.empty()) throw ShapeError("gcd of two zero polynomials is undefined");
  while (!b.empty()) {
    Dense r = remainder(a, b);
    a = std::move(b);
    b = std::move(r);
  }
  const Scalar lead = a.back();
  for (auto& c : a) c /= lead;
  return from_dense(a, var);
}

Polynomial sylvester_resultant(const Polynomial& f, const Polynomial& g, std::string_view var) {
  if (!f.involves(var) && !g.involves(var))
    throw UndefinedResultantError("neither polynomial involves " + std::string(var));
  if (f.is_zero() || g.is_zero()) return Polynomial();
  const auto cf = f.coefficients_in(var);
  const auto cg = g.coefficients_in(var);
  const std::size_t df = cf.size() - 1;
  const std::size_t dg = cg.size() - 1;
  const std::size_t size = df + dg;
  PolyMatrix m(size, std::vector<Polynomial>(size));
  for (std::size_t r = 0; r < df; ++r)
    for (std::size_t i = 0; i <= dg; ++i) m[r][r + i] = cg[dg - i];
  for (std::size_t r = 0; r < dg; ++r)
    for (std::size_t i = 0; i <= df; ++i) m[df + r][r + i] = cf[df - i];
  return determinant(m);
}

std::vector<Assignment> rational_root_search(std::span<const Polynomial> system,
                                             std::span<const std::string> variables, unsigned bound) {
  if (bound < 1) throw ShapeError("search bound must be at least 1");
  return Search(system, variables, bound).run();
}

std::vector<Assignment> rational_root_search(std::span<const Polynomial> system, unsigned bound) {
  std::set<std::string, decltype(&natural_less)> names(&natural_less);
  for (const auto& p : system) names.insert(p.variables().begin(), p.variables().end());
  const std::vector<std::string> variables(names.begin(), names.end());
  return rational_root_search(system, variables, bound);
}

}  // namespace jetsolve
