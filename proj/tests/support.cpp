#include "support.hpp"

#include <algorithm>
#include <set>

#include "jetsolve/oracle.hpp"

namespace support {

using jetsolve::Integer;

Scalar small_rational(std::mt19937& rng, int num, int den) {
  std::uniform_int_distribution<int> p(-num, num);
  std::uniform_int_distribution<int> q(1, den);
  Scalar x(p(rng), q(rng));
  x.canonicalize();
  return x;
}

Scalar small_nonzero_rational(std::mt19937& rng, int num, int den) {
  for (;;) {
    Scalar x = small_rational(rng, num, den);
    if (x != 0) return x;
  }
}

Polynomial random_univariate(std::mt19937& rng, const std::string& var, int degree) {
  Polynomial out = Polynomial(small_nonzero_rational(rng)) * Polynomial::variable(var, static_cast<unsigned>(degree));
  for (int i = 0; i < degree; ++i)
    out += Polynomial(small_rational(rng)) * Polynomial::variable(var, static_cast<unsigned>(i));
  return out;
}

Polynomial from_roots(const std::vector<Scalar>& roots, const std::string& var, const Scalar& scale) {
  Polynomial out(scale);
  for (const auto& r : roots) out *= Polynomial::variable(var) - Polynomial(r);
  return out;
}

Polynomial random_polynomial(std::mt19937& rng, const std::vector<std::string>& vars, int max_degree, int terms) {
  std::uniform_int_distribution<int> deg(0, max_degree);
  std::uniform_int_distribution<std::size_t> pick(0, vars.size() - 1);
  Polynomial out;
  for (int t = 0; t < terms; ++t) {
    Polynomial term(small_nonzero_rational(rng));
    const int d = deg(rng);
    for (int k = 0; k < d; ++k) term *= Polynomial::variable(vars[pick(rng)]);
    out += term;
  }
  return out;
}

jetsolve::PdeSystem random_pde(std::mt19937& rng, unsigned p, unsigned n, unsigned m, int max_degree) {
  jetsolve::PdeSystem system;
  system.functions = p;
  system.surplus = n;
  std::vector<std::string> vars;
  for (unsigned s = 1; s <= m; ++s) system.base_variables.push_back("x" + std::to_string(s));
  for (unsigned v = 1; v <= p; ++v) {
    vars.push_back(jetsolve::JetVar{v, jetsolve::MultiIndex::zero(m)}.name());
    for (unsigned s = 0; s < m; ++s) vars.push_back(jetsolve::JetVar{v, jetsolve::MultiIndex::unit(m, s)}.name());
  }
  vars.push_back(system.base_variables.front());
  std::uniform_int_distribution<int> terms(1, 4);
  for (unsigned k = 0; k < p + n; ++k) system.equations.push_back(random_polynomial(rng, vars, max_degree, terms(rng)));
  return system;
}

std::size_t naive_rank(jetsolve::ScalarMatrix a) {
  std::size_t rank = 0;
  const std::size_t rows = a.size();
  const std::size_t cols = rows == 0 ? 0 : a[0].size();
  for (std::size_t c = 0; c < cols; ++c) {
    std::size_t r = rank;
    while (r < rows && a[r][c] == 0) ++r;
    if (r == rows) continue;
    std::swap(a[r], a[rank]);
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == rank || a[i][c] == 0) continue;
      const Scalar f = a[i][c] / a[rank][c];
      for (std::size_t q = 0; q < cols; ++q) a[i][q] -= f * a[rank][q];
    }
    ++rank;
  }
  return rank;
}

std::map<std::string, Polynomial, std::less<>> jet_images(const std::vector<Polynomial>& functions,
                                                          const std::vector<std::string>& base,
                                                          unsigned max_order) {
  std::map<std::string, Polynomial, std::less<>> out;
  const std::size_t m = base.size();
  std::vector<unsigned> j(m, 0);
  for (;;) {
    for (std::size_t v = 0; v < functions.size(); ++v) {
      Polynomial d = functions[v];
      for (std::size_t s = 0; s < m; ++s)
        for (unsigned t = 0; t < j[s]; ++t) d = d.partial_derivative(base[s]);
      out.emplace(jetsolve::JetVar{static_cast<unsigned>(v + 1), jetsolve::MultiIndex(j)}.name(), d);
    }
    std::size_t s = 0;
    while (s < m && j[s] == max_order) j[s++] = 0;
    if (s == m) break;
    ++j[s];
  }
  return out;
}

namespace {

std::vector<Integer> divisors(const Integer& n) {
  std::vector<Integer> out;
  for (Integer d = 1; d <= n; ++d)
    if (n % d == 0) out.push_back(d);
  return out;
}

std::vector<Scalar> naive_rational_roots(const Polynomial& f, const std::string& var) {
  std::vector<Scalar> out;
  if (f.is_zero() || f.is_constant()) return out;
  const auto coeffs = f.coefficients_in(var);
  Integer scale = 1;
  for (const auto& c : coeffs) scale = lcm(scale, Integer(c.constant_term().get_den()));
  std::size_t low = 0;
  while (coeffs[low].is_zero()) ++low;
  std::set<Scalar> candidates;
  if (low > 0) candidates.insert(Scalar(0));
  const Integer a0 = abs(Integer(coeffs[low].constant_term() * scale));
  const Integer an = abs(Integer(coeffs.back().constant_term() * scale));
  for (const auto& p : divisors(a0))
    for (const auto& q : divisors(an)) {
      Scalar r(p, q);
      r.canonicalize();
      candidates.insert(r);
      candidates.insert(-r);
    }
  for (const auto& r : candidates)
    if (f.evaluate({{var, r}}) == 0) out.push_back(r);
  return out;
}

}  // namespace

std::vector<Scalar> common_roots(const Polynomial& f, const Polynomial& g, const std::string& var) {
  if (f.is_zero() && g.is_zero()) return {};
  return naive_rational_roots(jetsolve::gcd_univariate(f, g, var), var);
}

}  // namespace support
