#include "jetsolve/cli.hpp"

#include <CLI11.hpp>
#include <algorithm>
#include <fstream>
#include <ostream>
#include <set>
#include <sstream>

#include "jetsolve/errors.hpp"
#include "jetsolve/io.hpp"
#include "jetsolve/jet.hpp"
#include "jetsolve/oracle.hpp"
#include "jetsolve/rank.hpp"
#include "jetsolve/reduction.hpp"

namespace jetsolve::cli {

namespace {

class UsageError : public Error {
 public:
  using Error::Error;
};

struct Globals {
  std::string format = "text";
  bool trace = false;
  std::string output;

  bool json() const { return format == "json"; }
};

std::vector<unsigned> parse_list(const std::string& text, const char* what) {
  std::vector<unsigned> out;
  std::stringstream in(text);
  for (std::string item; std::getline(in, item, ',');) {
    if (item.empty() || item.size() > 9 || item.find_first_not_of("0123456789") != std::string::npos)
      throw UsageError(std::string("bad ") + what + " '" + text + "'");
    out.push_back(static_cast<unsigned>(std::stoul(item)));
  }
  if (out.empty()) throw UsageError(std::string("empty ") + what);
  return out;
}

OrderVector parse_orders(const std::string& text, std::size_t dimension) {
  if (text.empty()) throw UsageError("--orders is required");
  OrderVector orders(parse_list(text, "order list"));
  if (orders.size() != dimension)
    throw UsageError("--orders has " + std::to_string(orders.size()) + " entries, expected " +
                     std::to_string(dimension));
  return orders;
}

int status_code(Status status) {
  switch (status) {
    case Status::solved:
      return kSolved;
    case Status::inconsistent:
      return kInconsistent;
    case Status::residual:
    case Status::degenerate:
      return kResidual;
  }
  return kError;
}

std::string point_text(const Assignment& point, std::span<const std::string> order = {}) {
  std::string out;
  auto append = [&](const std::string& name, const Scalar& value) {
    if (!out.empty()) out += ", ";
    out += name + " = " + to_string(value);
  };
  if (order.empty()) {
    for (const auto& [name, value] : point) append(name, value);
  } else {
    for (const auto& name : order)
      if (auto it = point.find(name); it != point.end()) append(name, it->second);
  }
  return out;
}

void write_conditions(std::ostream& os, const std::vector<SideCondition>& conditions, const char* indent) {
  for (const auto& c : conditions)
    os << indent << "condition: " << c.polynomial << " != 0 [" << to_string(c.state()) << "]\n";
}

void write_steps(std::ostream& os, const std::vector<ReductionStep>& steps) {
  std::size_t number = 0;
  for (const auto& step : steps) {
    os << "step " << ++number << ": " << to_string(step.kind);
    if (!step.variable.empty()) os << " in " << step.variable;
    os << '\n';
    for (const auto& p : step.inputs) os << "  in:  " << p << '\n';
    for (const auto& p : step.outputs) os << "  out: " << p << '\n';
    write_conditions(os, step.conditions, "  ");
    if (!step.note.empty()) os << "  note: " << step.note << '\n';
  }
}

void write_outcome(std::ostream& os, const ReductionOutcome& outcome, std::span<const std::string> order,
                   bool trace) {
  os << "status: " << to_string(outcome.status) << '\n';
  for (const auto& point : outcome.solutions) os << "solution: " << point_text(point, order) << '\n';
  for (const auto& p : outcome.residual_system) os << "residual: " << p << " = 0\n";
  write_conditions(os, outcome.conditions, "");
  if (trace) write_steps(os, outcome.trace);
}

void write_report(std::ostream& os, const RankReport& r) {
  os << "rank: " << r.rank << '\n'
     << "n_s_real: " << r.n_s_real << '\n'
     << "n_h: " << r.n_h << '\n'
     << "n_s: " << r.n_s << '\n'
     << "bound: " << to_string(r.bound) << (r.bound_holds ? " (holds)" : " (violated)") << '\n'
     << "n_h >= n_s: " << (r.n_h_ge_n_s ? "yes" : "no") << '\n'
     << "certified: " << (r.certified ? "yes" : "no") << '\n';
}

std::pair<std::size_t, std::size_t> parse_pair(const std::string& text, std::size_t size) {
  const auto values = parse_list(text, "pair");
  if (values.size() != 2) throw UsageError("--pair needs two equation numbers");
  for (unsigned v : values)
    if (v < 1 || v > size) throw UsageError("--pair refers to a missing equation");
  return {values[0] - 1, values[1] - 1};
}

std::string single_variable(const std::vector<Polynomial>& polys, const std::string& given) {
  if (!given.empty()) return given;
  std::set<std::string> names;
  for (const auto& p : polys) names.insert(p.variables().begin(), p.variables().end());
  if (names.size() != 1) throw UsageError("--var is required unless the input has exactly one variable");
  return *names.begin();
}

bool is_pde_path(const std::string& path) { return std::filesystem::path(path).extension() == ".pde"; }

// Unknowns that occur, in beta order, followed by occurring base variables.
std::vector<std::string> occurring_variables(const ProlongedSystem& prolonged) {
  std::set<std::string, std::less<>> present;
  for (const auto& eq : prolonged.equations()) present.insert(eq.polynomial.variables().begin(), eq.polynomial.variables().end());
  std::vector<std::string> out;
  for (const auto& jet : prolonged.unknowns())
    if (present.contains(jet.name())) out.push_back(jet.name());
  for (const auto& x : prolonged.base_variables())
    if (present.contains(x)) out.push_back(x);
  return out;
}

struct Command {
  CLI::App* app = nullptr;
  std::string input;
  std::string orders;
  std::string var;
  std::string pair = "1,2";
  std::string point;
  std::string action;
  bool extended = false;
  bool minimize = false;
  unsigned p = 0;
  unsigned n = 0;
  unsigned m = 0;
  unsigned cap = 20;
  unsigned bound = 10;
};

Flavor flavor_of(const Command& c) { return c.extended ? Flavor::extended : Flavor::plain; }

int cmd_counts(const Command& c, const Globals& g, std::ostream& os, std::ostream& err) {
  if (c.p < 1 || c.m < 1) throw UsageError("--p and --m must be at least 1");
  if (c.orders.empty() && !c.minimize) throw UsageError("counts needs --orders or --minimize");
  Json json = Json::object();
  json["p"] = c.p;
  json["n"] = c.n;
  json["m"] = c.m;
  Json warnings = Json::array();
  if (!c.orders.empty()) {
    const OrderVector orders = parse_orders(c.orders, c.m);
    const Counts counts = jetsolve::counts(c.p, c.n, orders);
    json["orders"] = orders.values();
    json["counts"] = to_json(counts);
    json["bound"] = to_string(active_unknown_bound(c.p, c.n, orders, Flavor::plain));
    json["bound_extended"] = to_string(active_unknown_bound(c.p, c.n, orders, Flavor::extended));
    if (counts.n_h < counts.n_s) warnings.push_back("N_H < N_S: the prolonged system is not overdetermined");
    if (!g.json()) {
      os << "N_H = " << counts.n_h << '\n'
         << "N_S = " << counts.n_s << '\n'
         << "N_H^w = " << counts.n_h_ext << '\n'
         << "N_S^w = " << counts.n_s_ext << '\n'
         << "active unknown bound = " << json["bound"].get<std::string>() << '\n';
    }
  }
  if (c.minimize) {
    if (c.n < 1) throw UsageError("--minimize needs --n >= 1");
    const MinimalOrders minimal = minimal_orders(c.p, c.n, c.m, c.cap);
    json["minimal"] = to_json(minimal);
    if (!minimal.estimate_holds)
      warnings.push_back("minimal N_H is below the estimate (p+n)(mp/n)^m");
    if (!g.json()) {
      os << "minimal orders = ";
      for (std::size_t s = 0; s < minimal.orders.size(); ++s) os << (s ? "," : "") << minimal.orders[s];
      os << '\n'
         << "N_H = " << minimal.n_h << '\n'
         << "N_S = " << minimal.n_s << '\n'
         << "estimate = " << to_string(minimal.estimate) << (minimal.estimate_holds ? " (holds)" : " (violated)")
         << '\n';
    }
  }
  for (const auto& w : warnings) err << "warning: " << w.get<std::string>() << '\n';
  if (g.json()) {
    json["warnings"] = std::move(warnings);
    os << dump(json);
  }
  return kSolved;
}

int cmd_prolong(const Command& c, const Globals& g, std::ostream& os) {
  const PdeSystem system = load_pde_system(c.input);
  const ProlongedSystem prolonged = prolong(system, parse_orders(c.orders, system.dimension()), flavor_of(c));
  if (g.json()) {
    os << dump(to_json(prolonged));
    return kSolved;
  }
  const IndexCodec& codec = prolonged.codec();
  os << "flavor: " << to_string(codec.flavor()) << '\n'
     << "equations: " << codec.equation_count() << '\n'
     << "unknowns: " << codec.unknown_count() << '\n';
  for (const auto& eq : prolonged.equations())
    os << "P" << eq.alpha << " (k=" << eq.k << ", i=" << eq.index.to_string() << "): " << eq.polynomial << '\n';
  return kSolved;
}

int cmd_reduce(const Command& c, const Globals& g, std::ostream& os) {
  const PolySystem file = load_poly_system(c.input);
  const auto [a, b] = parse_pair(c.pair, file.equations.size());
  const std::vector<Polynomial> pair{file.equations[a], file.equations[b]};
  const std::string var = single_variable(pair, c.var);
  const ReductionOutcome outcome = reduce_chain(pair[0], pair[1], var);
  if (g.json())
    os << dump(to_json(outcome));
  else
    write_outcome(os, outcome, {}, g.trace);
  return status_code(outcome.status);
}

int cmd_eliminate(const Command& c, const Globals& g, std::ostream& os) {
  if (c.var.empty()) throw UsageError("eliminate needs --var");
  const PolySystem file = load_poly_system(c.input);
  const Elimination e = eliminate_variable(file.equations, c.var);
  if (g.json()) {
    os << dump(to_json(e));
    return kSolved;
  }
  for (const auto& p : e.reduced) os << "reduced: " << p << '\n';
  os << "solver: " << e.solver << '\n';
  if (e.degenerate) os << "degenerate: yes\n";
  write_conditions(os, e.conditions, "");
  if (g.trace) write_steps(os, e.trace);
  return kSolved;
}

int cmd_solve(const Command& c, const Globals& g, std::ostream& os) {
  if (!is_pde_path(c.input)) {
    const PolySystem file = load_poly_system(c.input);
    const ReductionOutcome outcome = solve_overdetermined(file.equations, file.variables);
    if (g.json())
      os << dump(to_json(outcome));
    else
      write_outcome(os, outcome, file.variables, g.trace);
    return status_code(outcome.status);
  }

  const PdeSystem system = load_pde_system(c.input);
  const ProlongedSystem prolonged = prolong(system, parse_orders(c.orders, system.dimension()), flavor_of(c));
  const std::vector<std::string> variables = occurring_variables(prolonged);
  std::vector<Polynomial> equations;
  for (const auto& eq : prolonged.equations()) equations.push_back(eq.polynomial);
  const ReductionOutcome outcome = solve_overdetermined(equations, variables);

  Json extractions = Json::array();
  std::vector<std::pair<MultiIndex, TopOrderExtraction>> extracted;
  if (system.surplus + system.functions >= system.dimension() * system.functions) {
    const IndexCodec plain(system.functions, system.surplus, prolonged.codec().orders(), Flavor::plain);
    for (std::size_t alpha = 1; alpha <= plain.equation_count(); alpha += plain.equations_per_index()) {
      const MultiIndex i = plain.decode_alpha(alpha).second;
      extracted.emplace_back(i, top_order_extraction(system, prolonged, i));
      Json entry{{"i", i.orders()}};
      entry.update(to_json(extracted.back().second));
      extractions.push_back(std::move(entry));
    }
  }
  std::vector<RankReport> reports;
  Json certification = Json::array();
  for (const auto& point : outcome.solutions) {
    reports.push_back(certify(prolonged, point));
    certification.push_back(to_json(reports.back()));
  }

  if (g.json()) {
    Json json = to_json(outcome);
    json["counts"] = to_json(prolonged.counts());
    json["top_order"] = std::move(extractions);
    json["certification"] = std::move(certification);
    os << dump(json);
  } else {
    write_outcome(os, outcome, variables, g.trace);
    for (const auto& [i, x] : extracted) {
      os << "top order at i=" << i.to_string() << ": " << (x.solved ? "solved" : x.failure) << '\n';
      for (const auto& s : x.solutions) {
        os << "  " << s.jet.name() << " = " << s.numerator;
        if (s.denominator != Polynomial(1)) os << " / (" << s.denominator << ")";
        os << '\n';
      }
      for (const auto& r : x.residuals) os << "  residual: " << r << " = 0\n";
    }
    for (std::size_t s = 0; s < reports.size(); ++s) {
      os << "certification of solution " << s + 1 << ":\n";
      std::ostringstream block;
      write_report(block, reports[s]);
      std::istringstream lines(block.str());
      for (std::string line; std::getline(lines, line);) os << "  " << line << '\n';
    }
  }
  return status_code(outcome.status);
}

int cmd_rank(const Command& c, const Globals& g, std::ostream& os, std::ostream& err) {
  if (c.point.empty()) throw UsageError("rank needs --point");
  const PdeSystem system = load_pde_system(c.input);
  const ProlongedSystem prolonged = prolong(system, parse_orders(c.orders, system.dimension()), flavor_of(c));
  const Assignment point = load_point(c.point, system.dimension());
  try {
    const RankReport report = certify(prolonged, point);
    if (g.json())
      os << dump(to_json(report));
    else
      write_report(os, report);
    return report.certified ? kSolved : kNotCertified;
  } catch (const NotASolutionError& e) {
    const auto [k, i] = prolonged.codec().decode_alpha(e.alpha());
    err << "error: point does not satisfy equation alpha=" << e.alpha() << " (k=" << k << ", i=" << i.to_string()
        << "): " << prolonged.equations()[e.alpha() - 1].polynomial << '\n';
    return kNotASolution;
  }
}

int cmd_oracle(const Command& c, const Globals& g, std::ostream& os) {
  const PolySystem file = load_poly_system(c.input);
  if (c.action == "roots") {
    if (c.bound < 1) throw UsageError("--bound must be at least 1");
    const auto roots = rational_root_search(file.equations, file.variables, c.bound);
    if (g.json()) {
      Json list = Json::array();
      for (const auto& point : roots) list.push_back(to_json(point));
      os << dump(Json{{"bound", c.bound}, {"roots", std::move(list)}});
    } else {
      for (const auto& point : roots) os << "root: " << point_text(point, file.variables) << '\n';
      if (roots.empty()) os << "no rational roots within bound " << c.bound << '\n';
    }
    return kSolved;
  }
  const auto [a, b] = parse_pair(c.pair, file.equations.size());
  const std::vector<Polynomial> pair{file.equations[a], file.equations[b]};
  Polynomial result;
  std::string var;
  if (c.action == "gcd") {
    var = single_variable(pair, c.var);
    result = gcd_univariate(pair[0], pair[1], var);
  } else if (c.action == "resultant") {
    if (c.var.empty()) throw UsageError("resultant needs --var");
    var = c.var;
    result = sylvester_resultant(pair[0], pair[1], var);
  } else {
    throw UsageError("unknown oracle '" + c.action + "' (expected gcd, resultant or roots)");
  }
  if (g.json())
    os << dump(Json{{c.action, result.to_string()}, {"variable", var}});
  else
    os << result << '\n';
  return kSolved;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Prolongs overdetermined first-order PDE systems and solves overdetermined polynomial systems."};
  app.name("jetsolve");
  app.fallthrough();
  app.require_subcommand(1);
  Globals globals;
  app.add_option("--format", globals.format, "text or json")->check(CLI::IsMember({"text", "json"}));
  app.add_flag("--trace", globals.trace, "print every reduction step");
  app.add_option("--output", globals.output, "write the result to this file");

  Command counts, prolong_cmd, reduce, eliminate, solve, rank, oracle;
  counts.app = app.add_subcommand("counts", "equation and unknown counts of prolonged systems");
  counts.app->add_option("--p", counts.p, "unknown functions")->required();
  counts.app->add_option("--n", counts.n, "surplus equations")->required();
  counts.app->add_option("--m", counts.m, "base variables")->required();
  counts.app->add_option("--orders", counts.orders, "N_1,...,N_m");
  counts.app->add_flag("--minimize", counts.minimize, "search for the smallest N_H with N_H >= N_S");
  counts.app->add_option("--cap", counts.cap, "largest order tried by --minimize");

  prolong_cmd.app = app.add_subcommand("prolong", "dump the prolonged system of a .pde file");
  prolong_cmd.app->add_option("input", prolong_cmd.input)->required();
  prolong_cmd.app->add_option("--orders", prolong_cmd.orders)->required();
  prolong_cmd.app->add_flag("--extended", prolong_cmd.extended);

  reduce.app = app.add_subcommand("reduce", "reduce a univariate pair from a .poly file");
  reduce.app->add_option("input", reduce.input)->required();
  reduce.app->add_option("--var", reduce.var);
  reduce.app->add_option("--pair", reduce.pair, "equation numbers, default 1,2");

  eliminate.app = app.add_subcommand("eliminate", "eliminate one variable from a .poly system");
  eliminate.app->add_option("input", eliminate.input)->required();
  eliminate.app->add_option("--var", eliminate.var)->required();

  solve.app = app.add_subcommand("solve", "solve a .poly system, or a prolonged .pde system");
  solve.app->add_option("input", solve.input)->required();
  solve.app->add_option("--orders", solve.orders, "required for .pde input");
  solve.app->add_flag("--extended", solve.extended);

  rank.app = app.add_subcommand("rank", "certify a point of a prolonged .pde system");
  rank.app->add_option("input", rank.input)->required();
  rank.app->add_option("--orders", rank.orders)->required();
  rank.app->add_option("--point", rank.point)->required();
  rank.app->add_flag("--extended", rank.extended);

  oracle.app = app.add_subcommand("oracle", "reference gcd, resultant and rational root search");
  oracle.app->add_option("action", oracle.action, "gcd, resultant or roots")
      ->required()
      ->check(CLI::IsMember({"gcd", "resultant", "roots"}));
  oracle.app->add_option("input", oracle.input)->required();
  oracle.app->add_option("--var", oracle.var);
  oracle.app->add_option("--pair", oracle.pair, "equation numbers, default 1,2");
  oracle.app->add_option("--bound", oracle.bound, "numerator and denominator bound for roots");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return kError;
  }

  std::ostringstream body;
  int code = kError;
  try {
    if (*counts.app)
      code = cmd_counts(counts, globals, body, err);
    else if (*prolong_cmd.app)
      code = cmd_prolong(prolong_cmd, globals, body);
    else if (*reduce.app)
      code = cmd_reduce(reduce, globals, body);
    else if (*eliminate.app)
      code = cmd_eliminate(eliminate, globals, body);
    else if (*solve.app)
      code = cmd_solve(solve, globals, body);
    else if (*rank.app)
      code = cmd_rank(rank, globals, body, err);
    else if (*oracle.app)
      code = cmd_oracle(oracle, globals, body);
  } catch (const NotASolutionError& e) {
    err << "error: " << e.what() << '\n';
    return kNotASolution;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kError;
  }

  if (globals.output.empty()) {
    out << body.str();
  } else {
    std::ofstream file(globals.output, std::ios::binary);
    if (!(file << body.str())) {
      err << "error: cannot write '" << globals.output << "'\n";
      return kError;
    }
  }
  return code;
}

}  // namespace jetsolve::cli
