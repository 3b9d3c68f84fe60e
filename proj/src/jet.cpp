#include "jetsolve/jet.hpp"

#include <algorithm>
#include <charconv>
#include <numeric>
#include <set>

#include "jetsolve/errors.hpp"

namespace jetsolve {

namespace {

std::uint64_t checked_mul(std::uint64_t a, std::uint64_t b) {
  std::uint64_t out = 0;
  if (__builtin_mul_overflow(a, b, &out)) throw RangeError("count overflows 64 bits");
  return out;
}

std::uint64_t product_plus(const OrderVector& orders, unsigned shift, std::uint64_t factor) {
  std::uint64_t out = factor;
  for (unsigned value : orders.values()) out = checked_mul(out, std::uint64_t{value} + shift);
  return out;
}

bool parse_uint(std::string_view text, unsigned& out) {
  if (text.empty()) return false;
  const auto* end = text.data() + text.size();
  auto [ptr, ec] = std::from_chars(text.data(), end, out);
  return ec == std::errc{} && ptr == end;
}

}  // namespace

MultiIndex MultiIndex::unit(std::size_t dimension, std::size_t axis) {
  MultiIndex out = zero(dimension);
  out.orders_.at(axis) = 1;
  return out;
}

unsigned MultiIndex::total() const noexcept { return std::accumulate(orders_.begin(), orders_.end(), 0U); }

MultiIndex MultiIndex::raised(std::size_t axis) const {
  MultiIndex out = *this;
  ++out.orders_.at(axis);
  return out;
}

MultiIndex MultiIndex::lowered(std::size_t axis) const {
  if (orders_.at(axis) == 0) throw RangeError("cannot lower a zero component");
  MultiIndex out = *this;
  --out.orders_[axis];
  return out;
}

std::string MultiIndex::to_string() const {
  std::string out = "[";
  for (std::size_t s = 0; s < orders_.size(); ++s) {
    if (s > 0) out += ',';
    out += std::to_string(orders_[s]);
  }
  return out + "]";
}

std::string JetVar::name() const { return "S" + std::to_string(function) + index.to_string(); }

std::optional<JetVar> JetVar::parse(std::string_view name, std::size_t dimension) {
  if (name.size() < 2 || name.front() != 'S') return std::nullopt;
  const std::size_t bracket = name.find('[');
  unsigned function = 0;
  if (!parse_uint(name.substr(1, bracket == std::string_view::npos ? std::string_view::npos : bracket - 1),
                  function))
    return std::nullopt;
  if (function == 0) throw RangeError("function index must be at least 1 in '" + std::string(name) + "'");
  if (bracket == std::string_view::npos) return JetVar{function, MultiIndex::zero(dimension)};
  if (name.back() != ']') return std::nullopt;
  std::vector<unsigned> orders;
  std::string_view list = name.substr(bracket + 1, name.size() - bracket - 2);
  for (;;) {
    const std::size_t comma = list.find(',');
    unsigned value = 0;
    if (!parse_uint(list.substr(0, comma), value)) return std::nullopt;
    orders.push_back(value);
    if (comma == std::string_view::npos) break;
    list.remove_prefix(comma + 1);
  }
  if (orders.size() != dimension)
    throw RangeError("jet '" + std::string(name) + "' has " + std::to_string(orders.size()) +
                     " indices, expected " + std::to_string(dimension));
  return JetVar{function, MultiIndex(std::move(orders))};
}

OrderVector::OrderVector(std::vector<unsigned> orders) : orders_(std::move(orders)) {
  if (orders_.empty()) throw RangeError("order vector is empty");
  for (unsigned value : orders_)
    if (value == 0) throw RangeError("prolongation orders must be at least 1");
}

std::string_view to_string(Flavor flavor) { return flavor == Flavor::plain ? "plain" : "extended"; }

Counts counts(unsigned p, unsigned n, const OrderVector& orders) {
  Counts out;
  out.n_h = product_plus(orders, 0, p + n);
  out.n_s = product_plus(orders, 1, p);
  out.n_h_ext = product_plus(orders, 1, p + n);
  out.n_s_ext = product_plus(orders, 2, p);
  return out;
}

Scalar active_unknown_bound(unsigned p, unsigned n, const OrderVector& orders, Flavor flavor) {
  const unsigned shift = flavor == Flavor::plain ? 0 : 1;
  Scalar n_h(static_cast<long>(p + n));
  Scalar spread(1);
  for (unsigned value : orders.values()) {
    n_h *= Scalar(static_cast<long>(value + shift));
    spread += Scalar(1, value + shift);
  }
  Scalar out = n_h * Scalar(p, p + n) * spread;
  out.canonicalize();
  return out;
}

IndexCodec::IndexCodec(unsigned p, unsigned n, OrderVector orders, Flavor flavor)
    : p_(p), n_(n), orders_(std::move(orders)), flavor_(flavor) {
  if (p_ == 0) throw RangeError("at least one unknown function is required");
}

unsigned IndexCodec::max_equation_order(std::size_t axis) const {
  return flavor_ == Flavor::plain ? orders_[axis] - 1 : orders_[axis];
}

unsigned IndexCodec::max_jet_order(std::size_t axis) const {
  return flavor_ == Flavor::plain ? orders_[axis] : orders_[axis] + 1;
}

bool IndexCodec::contains_equation(const MultiIndex& i) const {
  if (i.size() != dimension()) return false;
  for (std::size_t s = 0; s < dimension(); ++s)
    if (i[s] > max_equation_order(s)) return false;
  return true;
}

bool IndexCodec::contains_jet(const MultiIndex& j) const {
  if (j.size() != dimension()) return false;
  for (std::size_t s = 0; s < dimension(); ++s)
    if (j[s] > max_jet_order(s)) return false;
  return true;
}

std::size_t IndexCodec::equation_count() const {
  const Counts c = counts(p_, n_, orders_);
  return flavor_ == Flavor::plain ? c.n_h : c.n_h_ext;
}

std::size_t IndexCodec::unknown_count() const {
  const Counts c = counts(p_, n_, orders_);
  return flavor_ == Flavor::plain ? c.n_s : c.n_s_ext;
}

std::size_t IndexCodec::encode_alpha(unsigned k, const MultiIndex& i) const {
  if (k < 1 || k > p_ + n_) throw RangeError("equation index k=" + std::to_string(k) + " out of range");
  if (!contains_equation(i)) throw RangeError("equation multi-index " + i.to_string() + " out of range");
  std::size_t alpha = k;
  std::size_t radix = p_ + n_;
  for (std::size_t s = 0; s < dimension(); ++s) {
    alpha += i[s] * radix;
    radix *= max_equation_order(s) + 1;
  }
  return alpha;
}

std::pair<unsigned, MultiIndex> IndexCodec::decode_alpha(std::size_t alpha) const {
  if (alpha < 1 || alpha > equation_count()) throw RangeError("alpha=" + std::to_string(alpha) + " out of range");
  std::size_t rest = alpha - 1;
  const auto k = static_cast<unsigned>(rest % (p_ + n_) + 1);
  rest /= p_ + n_;
  std::vector<unsigned> i(dimension());
  for (std::size_t s = 0; s < dimension(); ++s) {
    const std::size_t size = max_equation_order(s) + 1;
    i[s] = static_cast<unsigned>(rest % size);
    rest /= size;
  }
  return {k, MultiIndex(std::move(i))};
}

std::size_t IndexCodec::encode_beta(unsigned v, const MultiIndex& j) const {
  if (v < 1 || v > p_) throw RangeError("function index v=" + std::to_string(v) + " out of range");
  if (!contains_jet(j)) throw RangeError("jet multi-index " + j.to_string() + " out of range");
  std::size_t beta = v;
  std::size_t radix = p_;
  for (std::size_t s = 0; s < dimension(); ++s) {
    beta += j[s] * radix;
    radix *= max_jet_order(s) + 1;
  }
  return beta;
}

JetVar IndexCodec::decode_beta(std::size_t beta) const {
  if (beta < 1 || beta > unknown_count()) throw RangeError("beta=" + std::to_string(beta) + " out of range");
  std::size_t rest = beta - 1;
  const auto v = static_cast<unsigned>(rest % p_ + 1);
  rest /= p_;
  std::vector<unsigned> j(dimension());
  for (std::size_t s = 0; s < dimension(); ++s) {
    const std::size_t size = max_jet_order(s) + 1;
    j[s] = static_cast<unsigned>(rest % size);
    rest /= size;
  }
  return JetVar{v, MultiIndex(std::move(j))};
}

void PdeSystem::validate() const {
  if (functions == 0) throw ShapeError("a PDE system needs at least one unknown function");
  if (base_variables.empty()) throw ShapeError("a PDE system needs at least one base variable");
  if (equations.size() != functions + surplus)
    throw ShapeError("expected " + std::to_string(functions + surplus) + " equations, got " +
                     std::to_string(equations.size()));
  const std::set<std::string, std::less<>> bases(base_variables.begin(), base_variables.end());
  if (bases.size() != base_variables.size()) throw ShapeError("duplicate base variable");
  for (const auto& name : base_variables)
    if (JetVar::parse(name, dimension())) throw ShapeError("base variable '" + name + "' looks like a jet");
  for (const auto& h : equations) {
    for (const auto& name : h.variables()) {
      if (bases.contains(name)) continue;
      const auto jet = JetVar::parse(name, dimension());
      if (!jet) throw ShapeError("unknown symbol '" + name + "'");
      if (jet->name() != name) throw ShapeError("non-canonical jet token '" + name + "'");
      if (jet->function > functions) throw RangeError("jet '" + name + "' refers to a missing function");
      if (jet->index.total() > 1) throw RangeError("jet '" + name + "' has order above one");
    }
  }
}

Polynomial normalize_jet_names(const Polynomial& p, std::size_t dimension) {
  std::map<std::string, std::string, std::less<>> names;
  for (const auto& name : p.variables()) {
    const auto jet = JetVar::parse(name, dimension);
    if (jet && jet->name() != name) names.emplace(name, jet->name());
  }
  return names.empty() ? p : p.rename(names);
}

Polynomial total_derivative(const Polynomial& p, std::size_t axis, const IndexCodec& codec,
                            std::span<const std::string> base_variables) {
  if (axis >= codec.dimension()) throw RangeError("axis out of range");
  if (base_variables.size() != codec.dimension()) throw ShapeError("base variable count differs from the codec's");
  Polynomial out;
  for (const auto& name : p.variables()) {
    if (name == base_variables[axis]) {
      out += p.partial_derivative(name);
      continue;
    }
    if (std::find(base_variables.begin(), base_variables.end(), name) != base_variables.end()) continue;
    const auto jet = JetVar::parse(name, codec.dimension());
    if (!jet) continue;
    const JetVar shifted{jet->function, jet->index.raised(axis)};
    if (jet->function > codec.functions() || !codec.contains_jet(shifted.index))
      throw RangeError("total derivative of '" + name + "' leaves the jet range");
    out += p.partial_derivative(name) * Polynomial::variable(shifted.name());
  }
  return out;
}

ProlongedSystem::ProlongedSystem(IndexCodec codec, std::vector<std::string> base_variables,
                                 std::vector<ProlongedEquation> equations)
    : codec_(std::move(codec)), base_variables_(std::move(base_variables)), equations_(std::move(equations)) {
  if (base_variables_.size() != codec_.dimension()) throw ShapeError("base variable count differs from the codec's");
  if (equations_.size() != codec_.equation_count())
    throw ShapeError("expected " + std::to_string(codec_.equation_count()) + " prolonged equations");
  for (std::size_t a = 0; a < equations_.size(); ++a) {
    const auto& eq = equations_[a];
    if (eq.alpha != a + 1 || codec_.encode_alpha(eq.k, eq.index) != eq.alpha)
      throw ShapeError("prolonged equation " + std::to_string(a + 1) + " is out of alpha order");
  }
}

std::vector<JetVar> ProlongedSystem::unknowns() const {
  std::vector<JetVar> out;
  out.reserve(codec_.unknown_count());
  for (std::size_t beta = 1; beta <= codec_.unknown_count(); ++beta) out.push_back(codec_.decode_beta(beta));
  return out;
}

const ProlongedEquation& ProlongedSystem::equation(unsigned k, const MultiIndex& i) const {
  return equations_[codec_.encode_alpha(k, i) - 1];
}

Counts ProlongedSystem::counts() const { return jetsolve::counts(codec_.functions(), codec_.surplus(), codec_.orders()); }

Prolongator::Prolongator(PdeSystem system) : system_(std::move(system)) { system_.validate(); }

const Polynomial& Prolongator::equation(unsigned k, const MultiIndex& i, const OrderVector& orders) {
  const IndexCodec codec(system_.functions, system_.surplus, orders, Flavor::extended);
  if (orders.size() != system_.dimension()) throw ShapeError("order vector length differs from the base variable count");
  if (k < 1 || k > system_.equations.size()) throw RangeError("equation index k=" + std::to_string(k) + " out of range");
  if (!codec.contains_equation(i)) throw RangeError("equation multi-index " + i.to_string() + " out of range");
  const auto key = std::make_pair(k, i);
  if (auto it = cache_.find(key); it != cache_.end()) return it->second;
  if (i.is_zero()) return cache_.emplace(key, system_.equations[k - 1]).first->second;
  std::size_t axis = i.size();
  while (i[axis - 1] == 0) --axis;
  --axis;
  const Polynomial& lower = equation(k, i.lowered(axis), orders);
  Polynomial next = total_derivative(lower, axis, codec, system_.base_variables);
  return cache_.emplace(key, std::move(next)).first->second;
}

ProlongedSystem Prolongator::prolong(const OrderVector& orders, Flavor flavor) {
  if (orders.size() != system_.dimension()) throw ShapeError("order vector length differs from the base variable count");
  IndexCodec codec(system_.functions, system_.surplus, orders, flavor);
  std::vector<ProlongedEquation> equations;
  equations.reserve(codec.equation_count());
  for (std::size_t alpha = 1; alpha <= codec.equation_count(); ++alpha) {
    auto [k, i] = codec.decode_alpha(alpha);
    const Polynomial& p = equation(k, i, orders);
    equations.push_back(ProlongedEquation{alpha, k, std::move(i), p});
  }
  return ProlongedSystem(std::move(codec), system_.base_variables, std::move(equations));
}

ProlongedSystem prolong(const PdeSystem& system, const OrderVector& orders, Flavor flavor) {
  return Prolongator(system).prolong(orders, flavor);
}

MinimalOrders minimal_orders(unsigned p, unsigned n, unsigned m, unsigned cap) {
  if (p == 0 || n == 0 || m == 0 || cap == 0) throw RangeError("p, n, m and cap must be at least 1");
  std::vector<unsigned> current(m, 1);
  std::optional<MinimalOrders> best;
  for (;;) {
    const OrderVector orders(current);
    const Counts c = counts(p, n, orders);
    if (c.n_h >= c.n_s && (!best || c.n_h < best->n_h)) {
      best.emplace();
      best->orders = orders;
      best->n_h = c.n_h;
      best->n_s = c.n_s;
    }
    std::size_t s = m;
    while (s > 0 && current[s - 1] == cap) current[--s] = 1;
    if (s == 0) break;
    ++current[s - 1];
  }
  if (!best)
    throw InfeasibleError("no order vector with components up to " + std::to_string(cap) + " gives N_H >= N_S");
  best->target = Scalar(m * p, n);
  best->target.canonicalize();
  Scalar estimate(static_cast<long>(p + n));
  for (unsigned l = 0; l < m; ++l) estimate *= best->target;
  best->estimate = estimate;
  best->estimate_holds = Scalar(mpz_class(std::to_string(best->n_h))) >= estimate;
  for (unsigned value : best->orders.values()) best->distances.push_back(abs(Scalar(static_cast<long>(value)) - best->target));
  return *best;
}

}  // namespace jetsolve
