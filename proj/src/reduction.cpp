#include "jetsolve/reduction.hpp"

#include <algorithm>
#include <array>
#include <set>
#include <stdexcept>

#include "jetsolve/errors.hpp"

namespace jetsolve {

namespace {

constexpr std::array kStepNames{
    std::pair{StepKind::pair_reduce, std::string_view("pair-reduce")},
    std::pair{StepKind::absorb_multiply, std::string_view("absorb-multiply")},
    std::pair{StepKind::linear_solve, std::string_view("linear-solve")},
    std::pair{StepKind::rational_roots, std::string_view("rational-roots")},
    std::pair{StepKind::inconsistency, std::string_view("inconsistency")},
    std::pair{StepKind::residual, std::string_view("residual")},
    std::pair{StepKind::branch_skipped, std::string_view("branch-skipped")},
};

Polynomial coefficient(const std::vector<Polynomial>& coeffs, int j) {
  if (j < 0 || static_cast<std::size_t>(j) >= coeffs.size()) return {};
  return coeffs[static_cast<std::size_t>(j)];
}

// Accumulates steps and the union of their side conditions.
class Recorder {
 public:
  void add(ReductionStep step) {
    for (const auto& condition : step.conditions)
      if (std::find(conditions_.begin(), conditions_.end(), condition) == conditions_.end())
        conditions_.push_back(condition);
    trace_.push_back(std::move(step));
  }

  void absorb_into(std::vector<ReductionStep>& trace, std::vector<SideCondition>& conditions) {
    for (auto& step : trace_) trace.push_back(std::move(step));
    for (auto& condition : conditions_)
      if (std::find(conditions.begin(), conditions.end(), condition) == conditions.end())
        conditions.push_back(std::move(condition));
    trace_.clear();
    conditions_.clear();
  }

  std::vector<ReductionStep>& trace() { return trace_; }
  std::vector<SideCondition>& conditions() { return conditions_; }

 private:
  std::vector<ReductionStep> trace_;
  std::vector<SideCondition> conditions_;
};

ReductionStep make_step(StepKind kind, std::string_view var, std::vector<Polynomial> inputs,
                        std::vector<Polynomial> outputs, std::vector<SideCondition> conditions = {},
                        std::string note = {}) {
  return ReductionStep{kind, std::string(var), std::move(inputs), std::move(outputs), std::move(conditions),
                       std::move(note)};
}

bool zeroes_all(std::span<const Polynomial> system, const Assignment& point) {
  return std::all_of(system.begin(), system.end(), [&](const Polynomial& p) { return p.evaluate(point) == 0; });
}

Polynomial linear_determinant(const Polynomial& first, const Polynomial& second, std::string_view var) {
  const auto a = first.coefficients_in(var);
  const auto b = second.coefficients_in(var);
  return coefficient(a, 1) * coefficient(b, 0) - coefficient(a, 0) * coefficient(b, 1);
}

Scalar linear_root(const Polynomial& linear, std::string_view var) {
  const auto c = linear.coefficients_in(var);
  return -c[0].constant_term() / c[1].constant_term();
}

void require_univariate(const Polynomial& p, std::string_view var) {
  for (const auto& name : p.variables())
    if (name != var)
      throw ShapeError("expected a polynomial in '" + std::string(var) + "' only, found '" + name + "' in " +
                       p.to_string());
}

bool proportional(const Polynomial& a, const Polynomial& b) {
  if (a.is_zero() || b.is_zero()) return a.is_zero() && b.is_zero();
  const Scalar ratio = b.terms().begin()->second / a.terms().begin()->second;
  return a * ratio == b;
}

// --------------------------------------------------------- rational roots

constexpr unsigned long kDivisorLimit = 1'000'000'000'000UL;

std::vector<unsigned long> divisors(unsigned long n) {
  std::vector<unsigned long> small, large;
  for (unsigned long d = 1; d * d <= n; ++d) {
    if (n % d != 0) continue;
    small.push_back(d);
    if (d != n / d) large.push_back(n / d);
  }
  small.insert(small.end(), large.rbegin(), large.rend());
  return small;
}

Scalar horner(const std::vector<Scalar>& coeffs, const Scalar& x) {
  Scalar acc = 0;
  for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) acc = acc * x + *it;
  return acc;
}

// Divides by (x - root); coefficients are low-to-high.
std::vector<Scalar> deflate(const std::vector<Scalar>& coeffs, const Scalar& root) {
  std::vector<Scalar> quotient(coeffs.size() - 1);
  Scalar carry = 0;
  for (std::size_t i = coeffs.size() - 1; i > 0; --i) {
    carry = carry * root + coeffs[i];
    quotient[i - 1] = carry;
  }
  return quotient;
}

// --------------------------------------------------------------- chains

class PairChain {
 public:
  PairChain(std::string_view var, Recorder& rec) : var_(var), rec_(rec) {}

  ReductionOutcome run(Polynomial f, Polynomial g) {
    for (;;) {
      if (f.is_zero() || g.is_zero()) return finish_single(f.is_zero() ? g : f);
      if (f.is_constant() || g.is_constant()) {
        const Polynomial& constant = f.is_constant() ? f : g;
        rec_.add(make_step(StepKind::inconsistency, var_, {constant}, {}, {}, "nonzero constant"));
        return with_status(Status::inconsistent);
      }
      const int df = f.degree_in(var_);
      const int dg = g.degree_in(var_);
      if (df == 1 && dg == 1) return linear_pair(f, g);
      if (df == dg) {
        PairReduction pr = reduce_pair(f, g, var_);
        if (!pr.degenerate) {
          rec_.add(make_step(StepKind::pair_reduce, var_, {f, g}, {pr.c, pr.d}, pr.conditions));
          f = std::move(pr.c);
          g = std::move(pr.d);
        } else {
          Absorption ab = absorb(g, f, var_);
          rec_.add(make_step(StepKind::absorb_multiply, var_, {g, f}, {ab.result, f}, ab.conditions,
                             "pair reduction condition fails identically"));
          g = std::move(ab.result);
        }
        continue;
      }
      Polynomial& higher = df > dg ? f : g;
      const Polynomial& lower = df > dg ? g : f;
      Absorption ab = absorb(higher, lower, var_);
      rec_.add(make_step(StepKind::absorb_multiply, var_, {higher, lower}, {ab.result, lower}, ab.conditions));
      higher = std::move(ab.result);
    }
  }

 private:
  ReductionOutcome with_status(Status status) {
    ReductionOutcome out;
    out.status = status;
    return out;
  }

  ReductionOutcome linear_pair(const Polynomial& f, const Polynomial& g) {
    const Polynomial det = linear_determinant(f, g, var_);
    const Polynomial lead = f.leading_coefficient_in(var_);
    const Scalar root = linear_root(f, var_);
    rec_.add(make_step(StepKind::linear_solve, var_, {f, g}, {f, det}, {SideCondition{lead}},
                       std::string(var_) + " = " + to_string(root)));
    if (!det.is_zero()) {
      rec_.add(make_step(StepKind::inconsistency, var_, {det}, {}, {}, "consistency determinant is nonzero"));
      return with_status(Status::inconsistent);
    }
    ReductionOutcome out = with_status(Status::solved);
    out.solutions.push_back(Assignment{{std::string(var_), root}});
    return out;
  }

  ReductionOutcome finish_single(const Polynomial& r) {
    const int degree = r.degree_in(var_);
    if (degree == Polynomial::kDegreeOfZero) {
      rec_.add(make_step(StepKind::residual, var_, {r}, {r}, {}, "both members vanish"));
      ReductionOutcome out = with_status(Status::residual);
      return out;
    }
    if (degree == 0) {
      rec_.add(make_step(StepKind::inconsistency, var_, {r}, {}, {}, "nonzero constant"));
      return with_status(Status::inconsistent);
    }
    if (degree == 1) {
      const Scalar root = linear_root(r, var_);
      rec_.add(make_step(StepKind::linear_solve, var_, {r}, {r}, {SideCondition{r.leading_coefficient_in(var_)}},
                         std::string(var_) + " = " + to_string(root)));
      ReductionOutcome out = with_status(Status::solved);
      out.solutions.push_back(Assignment{{std::string(var_), root}});
      return out;
    }
    rec_.add(make_step(StepKind::residual, var_, {r}, {r}, {}, "common factor of degree " + std::to_string(degree)));
    ReductionOutcome out = with_status(Status::residual);
    out.residual_system.push_back(r);
    return out;
  }

  std::string_view var_;
  Recorder& rec_;
};

struct UnivariateResult {
  bool inconsistent = false;
  bool free = false;
  bool incomplete = false;
  std::vector<Scalar> values;
  std::vector<Polynomial> residual;
};

// Rational roots of r, recorded as a step. Marks the result incomplete when r
// does not split over the rationals.
void enumerate_roots(const Polynomial& r, std::string_view var, Recorder& rec, UnivariateResult& out) {
  const auto found = rational_roots(r, var);
  if (!found) {
    rec.add(make_step(StepKind::residual, var, {r}, {r}, {}, "coefficients too large for root enumeration"));
    out.incomplete = true;
    out.residual.push_back(r);
    return;
  }
  std::vector<Polynomial> factors;
  for (const auto& root : found->roots) factors.push_back(Polynomial::variable(std::string(var)) - Polynomial(root));
  rec.add(make_step(StepKind::rational_roots, var, {r}, factors, {},
                    found->complete ? "splits over the rationals" : "irrational or complex roots remain"));
  out.values = found->roots;
  if (!found->complete) {
    out.incomplete = true;
    out.residual.push_back(r);
  }
}

UnivariateResult solve_univariate(const std::vector<Polynomial>& system, std::string_view var, Recorder& rec) {
  UnivariateResult out;
  std::vector<Polynomial> members;
  for (const auto& p : system)
    if (!p.is_zero()) members.push_back(p);
  for (const auto& p : members) {
    if (p.is_constant()) {
      rec.add(make_step(StepKind::inconsistency, var, {p}, {}, {}, "nonzero constant"));
      out.inconsistent = true;
      return out;
    }
  }
  if (members.empty()) {
    out.free = true;
    return out;
  }
  if (members.size() == 1) {
    if (members[0].degree_in(var) == 1) {
      const Scalar root = linear_root(members[0], var);
      rec.add(make_step(StepKind::linear_solve, var, {members[0]}, {members[0]},
                        {SideCondition{members[0].leading_coefficient_in(var)}},
                        std::string(var) + " = " + to_string(root)));
      out.values.push_back(root);
    } else {
      enumerate_roots(members[0], var, rec, out);
    }
    return out;
  }
  PairChain chain(var, rec);
  ReductionOutcome pair = chain.run(members[0], members[1]);
  switch (pair.status) {
    case Status::inconsistent:
      out.inconsistent = true;
      return out;
    case Status::solved:
      out.values.push_back(pair.solutions.front().begin()->second);
      break;
    case Status::residual:
    case Status::degenerate:
      if (pair.residual_system.empty()) {
        out.free = true;
        return out;
      }
      enumerate_roots(pair.residual_system.front(), var, rec, out);
      break;
  }
  // Members beyond the first pair filter the candidates.
  for (std::size_t i = 2; i < members.size(); ++i) {
    std::erase_if(out.values, [&](const Scalar& v) {
      return members[i].evaluate(Assignment{{std::string(var), v}}) != 0;
    });
  }
  if (out.values.empty() && !out.incomplete) {
    rec.add(make_step(StepKind::inconsistency, var, members, {}, {}, "no common root"));
    out.inconsistent = true;
  }
  return out;
}

std::size_t choose_pivot(const std::vector<Polynomial>& members, const std::vector<std::size_t>& active,
                         std::string_view var) {
  auto better = [&](std::size_t a, std::size_t b) {
    const bool ca = members[a].leading_coefficient_in(var).is_constant();
    const bool cb = members[b].leading_coefficient_in(var).is_constant();
    if (ca != cb) return ca;
    const int da = members[a].degree_in(var);
    const int db = members[b].degree_in(var);
    if (da != db) return da < db;
    return a < b;
  };
  return *std::min_element(active.begin(), active.end(), better);
}

}  // namespace

// --------------------------------------------------------------- public API

ConditionState SideCondition::state() const {
  if (!polynomial.is_constant()) return ConditionState::symbolic;
  return polynomial.is_zero() ? ConditionState::violated : ConditionState::holds;
}

std::string_view to_string(ConditionState state) {
  switch (state) {
    case ConditionState::holds: return "holds";
    case ConditionState::violated: return "violated";
    case ConditionState::symbolic: return "symbolic";
  }
  return "unknown";
}

std::string_view to_string(StepKind kind) {
  for (const auto& [k, name] : kStepNames)
    if (k == kind) return name;
  return "unknown";
}

std::optional<StepKind> parse_step_kind(std::string_view text) {
  for (const auto& [k, name] : kStepNames)
    if (name == text) return k;
  return std::nullopt;
}

std::string_view to_string(Status status) {
  switch (status) {
    case Status::solved: return "solved";
    case Status::inconsistent: return "inconsistent";
    case Status::residual: return "residual";
    case Status::degenerate: return "degenerate";
  }
  return "unknown";
}

PairReduction reduce_pair(const Polynomial& f, const Polynomial& g, std::string_view var) {
  if (f.is_zero() || g.is_zero()) throw ZeroLeadingCoefficientError("reduce_pair: zero polynomial has no leading coefficient");
  const int n = f.degree_in(var);
  if (n != g.degree_in(var))
    throw DegreeMismatchError("reduce_pair: degrees in " + std::string(var) + " differ (" + std::to_string(n) +
                              " vs " + std::to_string(g.degree_in(var)) + ")");
  if (n < 1) throw DegreeMismatchError("reduce_pair: degree in " + std::string(var) + " must be at least 1");

  const Polynomial x = Polynomial::variable(std::string(var));
  const Polynomial a_n = f.leading_coefficient_in(var);
  const Polynomial b_n = g.leading_coefficient_in(var);
  PairReduction out;
  out.pseudo = !a_n.is_constant();
  if (!out.pseudo) {
    const Scalar inv = 1 / a_n.constant_term();
    out.c = g - b_n * f * inv;
    const Polynomial c_top = coefficient(out.c.coefficients_in(var), n - 1);
    out.d = x * out.c - c_top * f * inv;
    out.conditions.push_back(SideCondition{c_top});
    out.degenerate = c_top.is_zero();
  } else {
    out.c = a_n * g - b_n * f;
    const Polynomial c_top = coefficient(out.c.coefficients_in(var), n - 1);
    out.d = a_n * x * out.c - c_top * f;
    out.conditions.push_back(SideCondition{a_n});
    out.conditions.push_back(SideCondition{c_top});
    out.degenerate = c_top.is_zero();
  }
  return out;
}

Absorption absorb(const Polynomial& higher, const Polynomial& lower, std::string_view var) {
  const int dh = higher.degree_in(var);
  const int dl = lower.degree_in(var);
  if (dl < 1 || dh < dl)
    throw DegreeMismatchError("absorb: need deg(higher) >= deg(lower) >= 1 in " + std::string(var));
  const Polynomial shift = Polynomial::variable(std::string(var), static_cast<unsigned>(dh - dl));
  const Polynomial lead_h = higher.leading_coefficient_in(var);
  const Polynomial lead_l = lower.leading_coefficient_in(var);
  Absorption out;
  if (lead_l.is_constant()) {
    out.result = higher - lead_h * shift * lower * (1 / lead_l.constant_term());
  } else {
    out.result = lead_l * higher - lead_h * shift * lower;
    out.conditions.push_back(SideCondition{lead_l});
  }
  return out;
}

ReductionOutcome reduce_chain(const Polynomial& f, const Polynomial& g, std::string_view var) {
  if (f.is_zero() || g.is_zero()) throw ShapeError("reduce_chain: both polynomials must be nonzero");
  require_univariate(f, var);
  require_univariate(g, var);
  Recorder rec;
  PairChain chain(var, rec);
  ReductionOutcome out = chain.run(f, g);
  rec.absorb_into(out.trace, out.conditions);
  const std::array inputs{f, g};
  for (const auto& point : out.solutions)
    if (!zeroes_all(inputs, point)) throw std::logic_error("reduce_chain produced a non-solution");
  return out;
}

Elimination eliminate_variable(std::span<const Polynomial> system, std::string_view var) {
  if (system.size() < 2) throw ShapeError("eliminate_variable: need at least two equations");
  std::vector<Polynomial> members(system.begin(), system.end());
  if (std::none_of(members.begin(), members.end(), [&](const Polynomial& p) { return p.degree_in(var) >= 1; }))
    throw EliminationError("eliminate_variable: no equation involves '" + std::string(var) + "'");

  Elimination out;
  out.degenerate = std::all_of(members.begin() + 1, members.end(),
                               [&](const Polynomial& p) { return proportional(members.front(), p); });
  Recorder rec;
  std::size_t pivot = 0;
  for (;;) {
    std::vector<std::size_t> active;
    for (std::size_t i = 0; i < members.size(); ++i)
      if (members[i].degree_in(var) >= 1) active.push_back(i);
    pivot = choose_pivot(members, active, var);
    const int n = members[pivot].degree_in(var);

    if (n == 1) {
      rec.add(make_step(StepKind::linear_solve, var, {members[pivot]}, {members[pivot]},
                        {SideCondition{members[pivot].leading_coefficient_in(var)}}, "solve for " + std::string(var)));
      for (std::size_t j : active) {
        if (j == pivot) continue;
        while (members[j].degree_in(var) >= 1) {
          Absorption ab = absorb(members[j], members[pivot], var);
          rec.add(make_step(StepKind::absorb_multiply, var, {members[j], members[pivot]},
                            {ab.result, members[pivot]}, ab.conditions));
          members[j] = std::move(ab.result);
        }
      }
      break;
    }

    std::vector<std::size_t> others;
    for (std::size_t j : active)
      if (j != pivot) others.push_back(j);
    if (others.empty()) {
      rec.add(make_step(StepKind::residual, var, {members[pivot]}, {members[pivot]}, {},
                        "no partner left to lower degree " + std::to_string(n)));
      break;
    }
    const std::size_t partner = others.front();
    if (members[partner].degree_in(var) > n) {
      Absorption ab = absorb(members[partner], members[pivot], var);
      rec.add(make_step(StepKind::absorb_multiply, var, {members[partner], members[pivot]},
                        {ab.result, members[pivot]}, ab.conditions));
      members[partner] = std::move(ab.result);
      continue;
    }
    if (members[partner].degree_in(var) < n) {
      // The pivot won on its constant leading coefficient but has the higher
      // degree; lower it against the partner first.
      Absorption ab = absorb(members[pivot], members[partner], var);
      rec.add(make_step(StepKind::absorb_multiply, var, {members[pivot], members[partner]},
                        {ab.result, members[partner]}, ab.conditions));
      members[pivot] = std::move(ab.result);
      continue;
    }
    PairReduction pr = reduce_pair(members[pivot], members[partner], var);
    if (!pr.degenerate) {
      rec.add(make_step(StepKind::pair_reduce, var, {members[pivot], members[partner]}, {pr.c, pr.d},
                        pr.conditions));
      members[pivot] = std::move(pr.c);
      members[partner] = std::move(pr.d);
    } else {
      Absorption ab = absorb(members[partner], members[pivot], var);
      rec.add(make_step(StepKind::absorb_multiply, var, {members[partner], members[pivot]},
                        {ab.result, members[pivot]}, ab.conditions, "pair reduction condition fails identically"));
      members[partner] = std::move(ab.result);
    }
  }

  out.solver = members[pivot];
  for (std::size_t i = 0; i < members.size(); ++i)
    if (i != pivot) out.reduced.push_back(std::move(members[i]));
  rec.absorb_into(out.trace, out.conditions);
  return out;
}

ReductionOutcome solve_overdetermined(std::span<const Polynomial> system, std::span<const std::string> variables) {
  if (variables.empty()) throw ShapeError("solve: no variables");
  if (system.size() != variables.size() + 1)
    throw ShapeError("solve: expected " + std::to_string(variables.size() + 1) + " equations in " +
                     std::to_string(variables.size()) + " variables, got " + std::to_string(system.size()));
  for (const auto& p : system)
    for (const auto& name : p.variables())
      if (std::find(variables.begin(), variables.end(), name) == variables.end())
        throw ShapeError("solve: equation uses undeclared variable '" + name + "'");

  ReductionOutcome out;
  Recorder rec;
  std::vector<Polynomial> current(system.begin(), system.end());
  std::vector<Polynomial> solvers(variables.size());
  for (std::size_t idx = variables.size() - 1; idx >= 1; --idx) {
    Elimination elim = eliminate_variable(current, variables[idx]);
    for (auto& step : elim.trace) rec.add(std::move(step));
    if (elim.degenerate) {
      out.status = Status::degenerate;
      out.residual_system.push_back(elim.solver);
      rec.absorb_into(out.trace, out.conditions);
      return out;
    }
    solvers[idx] = std::move(elim.solver);
    current = std::move(elim.reduced);
  }

  UnivariateResult base = solve_univariate(current, variables[0], rec);
  if (base.inconsistent) {
    out.status = Status::inconsistent;
    rec.absorb_into(out.trace, out.conditions);
    return out;
  }
  bool incomplete = base.incomplete;
  std::vector<Polynomial> residual = base.residual;
  if (base.free) {
    incomplete = true;
    for (const auto& p : current)
      if (!p.is_zero()) residual.push_back(p);
    for (std::size_t idx = 1; idx < variables.size(); ++idx)
      if (!solvers[idx].is_zero()) residual.push_back(solvers[idx]);
    rec.add(make_step(StepKind::residual, variables[0], residual, residual, {}, variables[0] + " is undetermined"));
  }

  std::vector<Assignment> points;
  for (const auto& v : base.values) points.push_back(Assignment{{variables[0], v}});
  for (std::size_t idx = 1; idx < variables.size(); ++idx) {
    const std::string& var = variables[idx];
    const Polynomial& solver = solvers[idx];
    const int solver_degree = solver.degree_in(var);
    std::vector<Assignment> extended;
    bool free_here = false;
    for (const auto& point : points) {
      const Polynomial local = solver.partial_evaluate(point);
      if (local.is_zero()) {
        free_here = true;
        continue;
      }
      if (local.degree_in(var) < solver_degree) {
        rec.add(make_step(StepKind::branch_skipped, var, {solver.leading_coefficient_in(var)}, {}, {},
                          "leading coefficient vanishes at a partial solution"));
        continue;
      }
      std::vector<Scalar> values;
      if (solver_degree == 1) {
        values.push_back(linear_root(local, var));
      } else {
        UnivariateResult roots;
        enumerate_roots(local, var, rec, roots);
        if (roots.incomplete) {
          incomplete = true;
          residual.push_back(solver);
        }
        values = std::move(roots.values);
      }
      for (const auto& v : values) {
        Assignment next = point;
        next.emplace(var, v);
        extended.push_back(std::move(next));
      }
    }
    if (free_here) {
      incomplete = true;
      residual.push_back(solver);
      rec.add(make_step(StepKind::residual, var, {solver}, {solver}, {}, var + " is undetermined"));
    }
    points = std::move(extended);
  }

  for (const auto& point : points) {
    if (zeroes_all(system, point)) {
      out.solutions.push_back(point);
    } else {
      std::string where;
      for (const auto& name : variables) where += (where.empty() ? "" : ", ") + name + " = " + to_string(point.at(name));
      rec.add(make_step(StepKind::branch_skipped, variables[0], {}, {}, {},
                        "candidate (" + where + ") fails verification against the original system"));
    }
  }
  std::sort(out.solutions.begin(), out.solutions.end(), [&](const Assignment& a, const Assignment& b) {
    for (const auto& name : variables) {
      const Scalar& x = a.at(name);
      const Scalar& y = b.at(name);
      if (x != y) return x < y;
    }
    return false;
  });

  if (incomplete || out.solutions.empty()) {
    out.status = Status::residual;
    out.residual_system = residual.empty() ? std::vector<Polynomial>(system.begin(), system.end()) : residual;
  } else {
    out.status = Status::solved;
  }
  rec.absorb_into(out.trace, out.conditions);
  return out;
}

ReductionOutcome solve_overdetermined(std::span<const Polynomial> system) {
  std::set<std::string, decltype([](const std::string& a, const std::string& b) { return natural_less(a, b); })>
      names;
  for (const auto& p : system) names.insert(p.variables().begin(), p.variables().end());
  const std::vector<std::string> variables(names.begin(), names.end());
  return solve_overdetermined(system, variables);
}

std::vector<Polynomial> replay(const ReductionStep& step) {
  const auto& in = step.inputs;
  auto need = [&](std::size_t count) {
    if (in.size() < count) throw ShapeError("replay: step '" + std::string(to_string(step.kind)) + "' lacks inputs");
  };
  switch (step.kind) {
    case StepKind::pair_reduce: {
      need(2);
      PairReduction pr = reduce_pair(in[0], in[1], step.variable);
      return {pr.c, pr.d};
    }
    case StepKind::absorb_multiply:
      need(2);
      return {absorb(in[0], in[1], step.variable).result, in[1]};
    case StepKind::linear_solve:
      need(1);
      if (in.size() == 1) return {in[0]};
      return {in[0], linear_determinant(in[0], in[1], step.variable)};
    case StepKind::rational_roots: {
      need(1);
      std::vector<Polynomial> factors;
      if (const auto found = rational_roots(in[0], step.variable))
        for (const auto& root : found->roots) factors.push_back(Polynomial::variable(step.variable) - Polynomial(root));
      return factors;
    }
    case StepKind::residual:
      return in;
    case StepKind::inconsistency:
    case StepKind::branch_skipped:
      return {};
  }
  return {};
}

std::optional<RationalRoots> rational_roots(const Polynomial& f, std::string_view var) {
  if (f.is_zero()) throw ShapeError("rational_roots: zero polynomial");
  require_univariate(f, var);
  const auto coeffs_poly = f.coefficients_in(var);
  Integer lcm = 1;
  for (const auto& c : coeffs_poly) {
    const Scalar value = c.constant_term();
    mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), value.get_den_mpz_t());
  }
  std::vector<Scalar> coeffs;
  for (const auto& c : coeffs_poly) coeffs.push_back(c.constant_term() * lcm);

  RationalRoots out;
  std::size_t low = 0;
  while (coeffs[low] == 0) ++low;
  std::size_t multiplicity_total = low;
  if (low > 0) out.roots.push_back(Scalar(0));
  std::vector<Scalar> reduced(coeffs.begin() + static_cast<std::ptrdiff_t>(low), coeffs.end());

  if (reduced.size() > 1) {
    const Integer a0 = abs(reduced.front().get_num());
    const Integer an = abs(reduced.back().get_num());
    if (a0 > kDivisorLimit || an > kDivisorLimit) return std::nullopt;
    std::set<Scalar> candidates;
    for (auto p : divisors(a0.get_ui()))
      for (auto q : divisors(an.get_ui())) {
        Scalar r{Integer(p), Integer(q)};
        r.canonicalize();
        candidates.insert(r);
        candidates.insert(-r);
      }
    for (const auto& r : candidates) {
      if (horner(reduced, r) != 0) continue;
      out.roots.push_back(r);
      while (reduced.size() > 1 && horner(reduced, r) == 0) {
        reduced = deflate(reduced, r);
        ++multiplicity_total;
      }
    }
  }
  std::sort(out.roots.begin(), out.roots.end());
  out.complete = multiplicity_total == static_cast<std::size_t>(f.degree_in(var));
  return out;
}

}  // namespace jetsolve
