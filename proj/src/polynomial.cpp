#include "jetsolve/polynomial.hpp"

#include <algorithm>
#include <cctype>
#include <ostream>
#include <sstream>

#include "jetsolve/errors.hpp"

namespace jetsolve {

namespace {

bool is_digit(char c) { return std::isdigit(static_cast<unsigned char>(c)) != 0; }

Scalar power(const Scalar& base, unsigned exponent) {
  Integer num, den;
  mpz_pow_ui(num.get_mpz_t(), base.get_num_mpz_t(), exponent);
  mpz_pow_ui(den.get_mpz_t(), base.get_den_mpz_t(), exponent);
  return Scalar(num, den);  // already in lowest terms
}

struct Alignment {
  std::vector<std::string> vars;
  std::vector<VarIndex> left;
  std::vector<VarIndex> right;
  bool left_identity = true;
  bool right_identity = true;
};

Alignment align(const std::vector<std::string>& a, const std::vector<std::string>& b) {
  Alignment out;
  out.vars.reserve(a.size() + b.size());
  out.left.resize(a.size());
  out.right.resize(b.size());
  std::size_t i = 0, j = 0;
  while (i < a.size() || j < b.size()) {
    const auto next = static_cast<VarIndex>(out.vars.size());
    if (j == b.size() || (i < a.size() && natural_less(a[i], b[j]))) {
      out.left_identity &= (next == i);
      out.left[i] = next;
      out.vars.push_back(a[i++]);
    } else if (i == a.size() || natural_less(b[j], a[i])) {
      out.right_identity &= (next == j);
      out.right[j] = next;
      out.vars.push_back(b[j++]);
    } else {
      out.left_identity &= (next == i);
      out.right_identity &= (next == j);
      out.left[i++] = next;
      out.right[j++] = next;
      out.vars.push_back(a[i - 1]);
    }
  }
  return out;
}

// Monotone renumbering preserves the term order, so entries can be appended.
Polynomial::TermMap remap(const Polynomial::TermMap& terms, std::span<const VarIndex> index_map) {
  Polynomial::TermMap out;
  for (const auto& [mono, coeff] : terms) out.emplace_hint(out.end(), mono.remapped(index_map), coeff);
  return out;
}

void append_monomial(std::ostream& os, const Monomial& mono, const std::vector<std::string>& vars) {
  bool first = true;
  for (const auto& [var, exp] : mono.powers()) {
    if (!first) os << '*';
    first = false;
    os << vars[var];
    if (exp != 1) os << '^' << exp;
  }
}

}  // namespace

bool natural_less(std::string_view a, std::string_view b) {
  std::size_t i = 0, j = 0;
  while (i < a.size() && j < b.size()) {
    if (is_digit(a[i]) && is_digit(b[j])) {
      std::size_t ie = i, je = j;
      while (ie < a.size() && is_digit(a[ie])) ++ie;
      while (je < b.size() && is_digit(b[je])) ++je;
      std::size_t is = i, js = j;
      while (is + 1 < ie && a[is] == '0') ++is;
      while (js + 1 < je && b[js] == '0') ++js;
      const auto ra = a.substr(is, ie - is);
      const auto rb = b.substr(js, je - js);
      if (ra.size() != rb.size()) return ra.size() < rb.size();
      if (ra != rb) return ra < rb;
      if (ie - i != je - j) return ie - i < je - j;
      i = ie;
      j = je;
      continue;
    }
    if (a[i] != b[j]) return static_cast<unsigned char>(a[i]) < static_cast<unsigned char>(b[j]);
    ++i;
    ++j;
  }
  return a.size() - i < b.size() - j;
}

// ---------------------------------------------------------------- Monomial

Monomial::Monomial(std::vector<Power> powers) {
  std::sort(powers.begin(), powers.end());
  for (const auto& [var, exp] : powers) {
    if (exp == 0) continue;
    if (!powers_.empty() && powers_.back().first == var)
      powers_.back().second += exp;
    else
      powers_.emplace_back(var, exp);
    degree_ += exp;
  }
}

Monomial Monomial::of(VarIndex var, unsigned exponent) { return Monomial({{var, exponent}}); }

unsigned Monomial::exponent(VarIndex var) const noexcept {
  auto it = std::lower_bound(powers_.begin(), powers_.end(), var,
                             [](const Power& p, VarIndex v) { return p.first < v; });
  return (it != powers_.end() && it->first == var) ? it->second : 0;
}

Monomial Monomial::operator*(const Monomial& other) const {
  Monomial out;
  out.powers_.reserve(powers_.size() + other.powers_.size());
  auto a = powers_.begin();
  auto b = other.powers_.begin();
  while (a != powers_.end() || b != other.powers_.end()) {
    if (b == other.powers_.end() || (a != powers_.end() && a->first < b->first)) {
      out.powers_.push_back(*a++);
    } else if (a == powers_.end() || b->first < a->first) {
      out.powers_.push_back(*b++);
    } else {
      out.powers_.emplace_back(a->first, a->second + b->second);
      ++a;
      ++b;
    }
  }
  out.degree_ = degree_ + other.degree_;
  return out;
}

Monomial Monomial::with_exponent(VarIndex var, unsigned exponent) const {
  Monomial out;
  out.powers_.reserve(powers_.size() + 1);
  bool placed = false;
  for (const auto& p : powers_) {
    if (!placed && p.first >= var) {
      placed = true;
      if (exponent != 0) out.powers_.emplace_back(var, exponent);
      if (p.first == var) continue;
    }
    out.powers_.push_back(p);
  }
  if (!placed && exponent != 0) out.powers_.emplace_back(var, exponent);
  for (const auto& p : out.powers_) out.degree_ += p.second;
  return out;
}

Monomial Monomial::remapped(std::span<const VarIndex> index_map) const {
  Monomial out = *this;
  for (auto& p : out.powers_) p.first = index_map[p.first];
  return out;
}

std::strong_ordering operator<=>(const Monomial& a, const Monomial& b) {
  if (a.degree_ != b.degree_) return a.degree_ <=> b.degree_;
  auto x = a.powers_.begin();
  auto y = b.powers_.begin();
  while (x != a.powers_.end() && y != b.powers_.end()) {
    if (x->first != y->first)
      return x->first < y->first ? std::strong_ordering::greater : std::strong_ordering::less;
    if (x->second != y->second) return x->second <=> y->second;
    ++x;
    ++y;
  }
  if (x != a.powers_.end()) return std::strong_ordering::greater;
  if (y != b.powers_.end()) return std::strong_ordering::less;
  return std::strong_ordering::equal;
}

// -------------------------------------------------------------- Polynomial

Polynomial::Polynomial(const Scalar& constant) {
  if (constant != 0) terms_.emplace(Monomial{}, constant);
}

Polynomial::Polynomial(std::vector<std::string> vars, TermMap terms)
    : vars_(std::move(vars)), terms_(std::move(terms)) {
  prune();
}

Polynomial Polynomial::variable(std::string name, unsigned exponent) {
  if (exponent == 0) return Polynomial(1);
  Polynomial p;
  p.vars_.push_back(std::move(name));
  p.terms_.emplace(Monomial::of(0, exponent), Scalar(1));
  return p;
}

VarIndex Polynomial::index_of(std::string_view var) const {
  auto it = std::lower_bound(vars_.begin(), vars_.end(), var,
                             [](const std::string& a, std::string_view b) { return natural_less(a, b); });
  if (it == vars_.end() || *it != var) return kAbsent;
  return static_cast<VarIndex>(it - vars_.begin());
}

void Polynomial::prune() {
  if (vars_.empty()) return;
  std::vector<bool> used(vars_.size(), false);
  for (const auto& [mono, coeff] : terms_)
    for (const auto& [var, exp] : mono.powers()) used[var] = true;
  if (std::all_of(used.begin(), used.end(), [](bool u) { return u; })) return;
  std::vector<VarIndex> index_map(vars_.size(), kAbsent);
  std::vector<std::string> kept;
  for (std::size_t i = 0; i < vars_.size(); ++i) {
    if (!used[i]) continue;
    index_map[i] = static_cast<VarIndex>(kept.size());
    kept.push_back(std::move(vars_[i]));
  }
  vars_ = std::move(kept);
  terms_ = remap(terms_, index_map);
}

Scalar Polynomial::constant_term() const {
  auto it = terms_.find(Monomial{});
  return it == terms_.end() ? Scalar(0) : it->second;
}

int Polynomial::degree_in(std::string_view var) const {
  if (is_zero()) return kDegreeOfZero;
  const VarIndex idx = index_of(var);
  if (idx == kAbsent) return 0;
  unsigned best = 0;
  for (const auto& [mono, coeff] : terms_) best = std::max(best, mono.exponent(idx));
  return static_cast<int>(best);
}

int Polynomial::total_degree() const {
  if (is_zero()) return kDegreeOfZero;
  return static_cast<int>(terms_.begin()->first.degree());
}

std::vector<Polynomial> Polynomial::coefficients_in(std::string_view var) const {
  const int degree = degree_in(var);
  if (degree == kDegreeOfZero) return {};
  const VarIndex idx = index_of(var);
  if (idx == kAbsent) return {*this};
  std::vector<TermMap> parts(static_cast<std::size_t>(degree) + 1);
  for (const auto& [mono, coeff] : terms_)
    parts[mono.exponent(idx)].emplace(mono.with_exponent(idx, 0), coeff);
  std::vector<Polynomial> out;
  out.reserve(parts.size());
  for (auto& part : parts) out.push_back(Polynomial(vars_, std::move(part)));
  return out;
}

Polynomial Polynomial::leading_coefficient_in(std::string_view var) const {
  auto coeffs = coefficients_in(var);
  return coeffs.empty() ? Polynomial() : std::move(coeffs.back());
}

Polynomial Polynomial::partial_derivative(std::string_view var) const {
  const VarIndex idx = index_of(var);
  if (idx == kAbsent) return {};
  TermMap out;
  for (const auto& [mono, coeff] : terms_) {
    const unsigned e = mono.exponent(idx);
    if (e == 0) continue;
    out.emplace(mono.with_exponent(idx, e - 1), coeff * e);
  }
  return Polynomial(vars_, std::move(out));
}

Scalar Polynomial::evaluate(const Assignment& point) const {
  std::vector<const Scalar*> values(vars_.size());
  for (std::size_t i = 0; i < vars_.size(); ++i) {
    auto it = point.find(vars_[i]);
    if (it == point.end()) throw MissingAssignmentError(vars_[i]);
    values[i] = &it->second;
  }
  Scalar total = 0;
  for (const auto& [mono, coeff] : terms_) {
    Scalar term = coeff;
    for (const auto& [var, exp] : mono.powers()) term *= power(*values[var], exp);
    total += term;
  }
  return total;
}

Polynomial Polynomial::partial_evaluate(const Assignment& point) const {
  std::vector<const Scalar*> values(vars_.size(), nullptr);
  bool any = false;
  for (std::size_t i = 0; i < vars_.size(); ++i) {
    auto it = point.find(vars_[i]);
    if (it != point.end()) {
      values[i] = &it->second;
      any = true;
    }
  }
  if (!any) return *this;
  TermMap out;
  for (const auto& [mono, coeff] : terms_) {
    Scalar factor = coeff;
    Monomial rest = mono;
    for (const auto& [var, exp] : mono.powers()) {
      if (values[var] == nullptr) continue;
      factor *= power(*values[var], exp);
      rest = rest.with_exponent(var, 0);
    }
    if (factor == 0) continue;
    auto [it, inserted] = out.emplace(std::move(rest), factor);
    if (!inserted) {
      it->second += factor;
      if (it->second == 0) out.erase(it);
    }
  }
  return Polynomial(vars_, std::move(out));
}

Polynomial Polynomial::substitute(const std::map<std::string, Polynomial, std::less<>>& images) const {
  std::vector<Polynomial> bases;
  bases.reserve(vars_.size());
  for (const auto& name : vars_) {
    auto it = images.find(name);
    bases.push_back(it != images.end() ? it->second : Polynomial::variable(name));
  }
  std::map<std::pair<VarIndex, unsigned>, Polynomial> powers;
  auto power_of = [&](VarIndex var, unsigned exp) -> const Polynomial& {
    auto key = std::make_pair(var, exp);
    auto it = powers.find(key);
    if (it == powers.end()) it = powers.emplace(key, bases[var].pow(exp)).first;
    return it->second;
  };
  Polynomial out;
  for (const auto& [mono, coeff] : terms_) {
    Polynomial term(coeff);
    for (const auto& [var, exp] : mono.powers()) term *= power_of(var, exp);
    out += term;
  }
  return out;
}

Polynomial Polynomial::rename(const std::map<std::string, std::string, std::less<>>& names) const {
  std::map<std::string, Polynomial, std::less<>> images;
  for (const auto& [from, to] : names) images.emplace(from, Polynomial::variable(to));
  return substitute(images);
}

Polynomial Polynomial::pow(unsigned exponent) const {
  Polynomial result(1);
  Polynomial base = *this;
  while (exponent > 0) {
    if (exponent & 1U) result *= base;
    exponent >>= 1U;
    if (exponent > 0) base *= base;
  }
  return result;
}

void Polynomial::add_scaled(const Polynomial& other, const Scalar& factor) {
  if (other.is_zero() || factor == 0) return;
  const Alignment al = align(vars_, other.vars_);
  if (!al.left_identity) terms_ = remap(terms_, al.left);
  vars_ = al.vars;
  for (const auto& [mono, coeff] : other.terms_) {
    Monomial key = al.right_identity ? mono : mono.remapped(al.right);
    auto [it, inserted] = terms_.emplace(std::move(key), coeff * factor);
    if (!inserted) {
      it->second += coeff * factor;
      if (it->second == 0) terms_.erase(it);
    }
  }
  prune();
}

Polynomial Polynomial::operator-() const {
  Polynomial out = *this;
  for (auto& [mono, coeff] : out.terms_) coeff = -coeff;
  return out;
}

Polynomial& Polynomial::operator+=(const Polynomial& other) {
  add_scaled(other, Scalar(1));
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& other) {
  add_scaled(other, Scalar(-1));
  return *this;
}

Polynomial& Polynomial::operator*=(const Polynomial& other) {
  *this = *this * other;
  return *this;
}

Polynomial& Polynomial::operator*=(const Scalar& factor) {
  if (factor == 0) {
    *this = Polynomial();
    return *this;
  }
  for (auto& [mono, coeff] : terms_) coeff *= factor;
  return *this;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  if (a.is_zero() || b.is_zero()) return {};
  const Alignment al = align(a.vars_, b.vars_);
  const Polynomial::TermMap left = al.left_identity ? a.terms_ : remap(a.terms_, al.left);
  const Polynomial::TermMap right = al.right_identity ? b.terms_ : remap(b.terms_, al.right);
  Polynomial::TermMap out;
  for (const auto& [ma, ca] : left) {
    for (const auto& [mb, cb] : right) {
      auto [it, inserted] = out.emplace(ma * mb, ca * cb);
      if (!inserted) it->second += ca * cb;
    }
  }
  std::erase_if(out, [](const auto& entry) { return entry.second == 0; });
  return Polynomial(al.vars, std::move(out));
}

std::string Polynomial::to_string() const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [mono, coeff] : terms_) {
    const bool negative = coeff < 0;
    if (first)
      os << (negative ? "-" : "");
    else
      os << (negative ? " - " : " + ");
    first = false;
    const Scalar magnitude = abs(coeff);
    if (mono.is_one()) {
      os << jetsolve::to_string(magnitude);
      continue;
    }
    if (magnitude != 1) os << jetsolve::to_string(magnitude) << '*';
    append_monomial(os, mono, vars_);
  }
  return os.str();
}

std::ostream& operator<<(std::ostream& os, const Polynomial& p) { return os << p.to_string(); }

}  // namespace jetsolve
