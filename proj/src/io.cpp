#include "jetsolve/io.hpp"

#include <algorithm>
#include <fstream>
#include <set>
#include <sstream>

#include "jetsolve/errors.hpp"

namespace jetsolve {

namespace {

struct Line {
  std::size_t number;
  std::string keyword;
  std::string rest;
};

std::string trim(std::string_view s) {
  const auto begin = s.find_first_not_of(" \t\r");
  if (begin == std::string_view::npos) return {};
  const auto end = s.find_last_not_of(" \t\r");
  return std::string(s.substr(begin, end - begin + 1));
}

std::vector<Line> split_lines(std::string_view text) {
  std::vector<Line> out;
  std::istringstream in{std::string(text)};
  std::string raw;
  std::size_t number = 0;
  while (std::getline(in, raw)) {
    ++number;
    if (auto hash = raw.find('#'); hash != std::string::npos) raw.erase(hash);
    const std::string line = trim(raw);
    if (line.empty()) continue;
    const auto space = line.find_first_of(" \t");
    out.push_back(Line{number, line.substr(0, space), space == std::string::npos ? "" : trim(line.substr(space))});
  }
  return out;
}

[[noreturn]] void fail(const Line& line, const std::string& what) {
  throw ParseError("line " + std::to_string(line.number) + ": " + what);
}

std::vector<std::string> words(const std::string& text) {
  std::istringstream in(text);
  std::vector<std::string> out;
  for (std::string w; in >> w;) out.push_back(w);
  return out;
}

Polynomial parse_line_polynomial(const Line& line) {
  if (line.rest.empty()) fail(line, "empty equation");
  try {
    return Polynomial::parse(line.rest);
  } catch (const ParseError& e) {
    fail(line, e.what());
  }
}

unsigned parse_count(const Line& line) {
  const auto w = words(line.rest);
  if (w.size() != 1 || w[0].find_first_not_of("0123456789") != std::string::npos || w[0].size() > 6)
    fail(line, "expected a non-negative integer after '" + line.keyword + "'");
  return static_cast<unsigned>(std::stoul(w[0]));
}

Json polynomial_list(const std::vector<Polynomial>& polys) {
  Json out = Json::array();
  for (const auto& p : polys) out.push_back(p.to_string());
  return out;
}

Json conditions_json(const std::vector<SideCondition>& conditions) {
  Json out = Json::array();
  for (const auto& c : conditions) out.push_back(to_json(c));
  return out;
}

Json index_json(const MultiIndex& i) { return Json(i.orders()); }

std::uint64_t count_field(const Json& json, const char* key) { return json.at(key).get<std::uint64_t>(); }

}  // namespace

PolySystem parse_poly_system(std::string_view text) {
  PolySystem out;
  bool have_vars = false;
  for (const auto& line : split_lines(text)) {
    if (line.keyword == "vars") {
      if (have_vars) fail(line, "duplicate 'vars' line");
      out.variables = words(line.rest);
      const std::set<std::string> unique(out.variables.begin(), out.variables.end());
      if (unique.size() != out.variables.size()) fail(line, "duplicate variable name");
      for (const auto& name : out.variables) {
        const auto probe = Polynomial::variable(name);
        try {
          if (Polynomial::parse(name) != probe) fail(line, "invalid variable name '" + name + "'");
        } catch (const ParseError&) {
          fail(line, "invalid variable name '" + name + "'");
        }
      }
      have_vars = true;
    } else if (line.keyword == "eq") {
      Polynomial p = parse_line_polynomial(line);
      if (have_vars)
        for (const auto& name : p.variables())
          if (std::find(out.variables.begin(), out.variables.end(), name) == out.variables.end())
            fail(line, "variable '" + name + "' is not declared");
      out.equations.push_back(std::move(p));
    } else {
      fail(line, "unknown keyword '" + line.keyword + "'");
    }
  }
  if (out.equations.empty()) throw ParseError("no 'eq' lines");
  if (!have_vars) {
    std::set<std::string, decltype(&natural_less)> names(&natural_less);
    for (const auto& p : out.equations) names.insert(p.variables().begin(), p.variables().end());
    out.variables.assign(names.begin(), names.end());
  }
  return out;
}

PdeSystem parse_pde_system(std::string_view text) {
  PdeSystem out;
  bool have_p = false;
  bool have_n = false;
  bool have_vars = false;
  for (const auto& line : split_lines(text)) {
    if (line.keyword == "unknowns") {
      out.functions = parse_count(line);
      if (out.functions == 0) fail(line, "at least one unknown function is required");
      have_p = true;
    } else if (line.keyword == "surplus") {
      out.surplus = parse_count(line);
      have_n = true;
    } else if (line.keyword == "vars") {
      out.base_variables = words(line.rest);
      if (out.base_variables.empty()) fail(line, "at least one base variable is required");
      have_vars = true;
    } else if (line.keyword == "eq") {
      if (!have_p || !have_vars) fail(line, "'unknowns' and 'vars' must precede 'eq'");
      Polynomial p;
      try {
        p = normalize_jet_names(parse_line_polynomial(line), out.base_variables.size());
      } catch (const RangeError& e) {
        fail(line, e.what());
      }
      for (const auto& name : p.variables()) {
        if (std::find(out.base_variables.begin(), out.base_variables.end(), name) != out.base_variables.end())
          continue;
        const auto jet = JetVar::parse(name, out.base_variables.size());
        if (!jet) fail(line, "unknown symbol '" + name + "'");
        if (jet->function > out.functions) fail(line, "jet '" + name + "' refers to a missing function");
        if (jet->index.total() > 1) fail(line, "jet '" + name + "' has order above one");
      }
      out.equations.push_back(std::move(p));
    } else {
      fail(line, "unknown keyword '" + line.keyword + "'");
    }
  }
  if (!have_p || !have_n || !have_vars) throw ParseError("'unknowns', 'surplus' and 'vars' are required");
  if (out.equations.size() != out.functions + out.surplus)
    throw ParseError("expected " + std::to_string(out.functions + out.surplus) + " 'eq' lines, got " +
                     std::to_string(out.equations.size()));
  try {
    out.validate();
  } catch (const Error& e) {
    throw ParseError(e.what());
  }
  return out;
}

Assignment parse_point(std::string_view text, std::size_t dimension) {
  Json json;
  try {
    json = Json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError(std::string("point: ") + e.what());
  }
  if (!json.is_object()) throw ParseError("point: expected a JSON object");
  Assignment out;
  for (const auto& [key, value] : json.items()) {
    std::string name = key;
    if (const auto jet = JetVar::parse(key, dimension)) name = jet->name();
    Scalar x;
    if (value.is_string())
      x = parse_scalar(value.get<std::string>());
    else if (value.is_number_integer())
      x = parse_scalar(value.dump());
    else
      throw ParseError("point: value of '" + key + "' must be an integer or a rational string");
    if (!out.emplace(name, x).second) throw ParseError("point: '" + key + "' assigned twice");
  }
  return out;
}

std::string read_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot open '" + path.string() + "'");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

PolySystem load_poly_system(const std::filesystem::path& path) {
  try {
    return parse_poly_system(read_file(path));
  } catch (const ParseError& e) {
    throw ParseError(path.string() + ": " + e.what());
  }
}

PdeSystem load_pde_system(const std::filesystem::path& path) {
  try {
    return parse_pde_system(read_file(path));
  } catch (const ParseError& e) {
    throw ParseError(path.string() + ": " + e.what());
  }
}

Assignment load_point(const std::filesystem::path& path, std::size_t dimension) {
  return parse_point(read_file(path), dimension);
}

Json to_json(const Counts& counts) {
  return Json{{"N_H", counts.n_h}, {"N_S", counts.n_s}, {"N_H_w", counts.n_h_ext}, {"N_S_w", counts.n_s_ext}};
}

Json to_json(const SideCondition& condition) {
  return Json{{"polynomial", condition.polynomial.to_string()},
              {"relation", "!= 0"},
              {"state", std::string(to_string(condition.state()))}};
}

Json to_json(const ReductionStep& step) {
  Json out{{"kind", std::string(to_string(step.kind))},
           {"variable", step.variable},
           {"inputs", polynomial_list(step.inputs)},
           {"outputs", polynomial_list(step.outputs)},
           {"conditions", conditions_json(step.conditions)}};
  if (!step.note.empty()) out["note"] = step.note;
  return out;
}

Json to_json(const Assignment& point) {
  Json out = Json::object();
  for (const auto& [name, value] : point) out[name] = to_string(value);
  return out;
}

Json to_json(const ReductionOutcome& outcome, bool with_steps) {
  Json solutions = Json::array();
  for (const auto& point : outcome.solutions) solutions.push_back(to_json(point));
  Json out{{"status", std::string(to_string(outcome.status))},
           {"solutions", std::move(solutions)},
           {"residual", polynomial_list(outcome.residual_system)},
           {"conditions", conditions_json(outcome.conditions)}};
  if (with_steps) {
    Json steps = Json::array();
    for (const auto& step : outcome.trace) steps.push_back(to_json(step));
    out["steps"] = std::move(steps);
  }
  return out;
}

Json to_json(const Elimination& elimination) {
  Json steps = Json::array();
  for (const auto& step : elimination.trace) steps.push_back(to_json(step));
  return Json{{"reduced", polynomial_list(elimination.reduced)},
              {"solver", elimination.solver.to_string()},
              {"degenerate", elimination.degenerate},
              {"conditions", conditions_json(elimination.conditions)},
              {"steps", std::move(steps)}};
}

Json to_json(const RankReport& report) {
  return Json{{"rank", report.rank},
              {"n_s_real", report.n_s_real},
              {"n_h", report.n_h},
              {"n_s", report.n_s},
              {"certified", report.certified},
              {"bound_holds", report.bound_holds},
              {"bound", to_string(report.bound)},
              {"n_h_ge_n_s", report.n_h_ge_n_s}};
}

Json to_json(const ProlongedSystem& prolonged) {
  const IndexCodec& codec = prolonged.codec();
  Json unknowns = Json::array();
  std::size_t beta = 0;
  for (const auto& jet : prolonged.unknowns())
    unknowns.push_back(Json{{"beta", ++beta}, {"v", jet.function}, {"j", index_json(jet.index)}, {"name", jet.name()}});
  Json equations = Json::array();
  for (const auto& eq : prolonged.equations())
    equations.push_back(
        Json{{"alpha", eq.alpha}, {"k", eq.k}, {"i", index_json(eq.index)}, {"polynomial", eq.polynomial.to_string()}});
  return Json{{"p", codec.functions()},
              {"n", codec.surplus()},
              {"m", codec.dimension()},
              {"vars", prolonged.base_variables()},
              {"orders", codec.orders().values()},
              {"flavor", std::string(to_string(codec.flavor()))},
              {"counts", to_json(prolonged.counts())},
              {"unknowns", std::move(unknowns)},
              {"equations", std::move(equations)}};
}

ProlongedSystem prolonged_from_json(const Json& json) {
  try {
    const auto p = json.at("p").get<unsigned>();
    const auto n = json.at("n").get<unsigned>();
    const auto vars = json.at("vars").get<std::vector<std::string>>();
    const OrderVector orders(json.at("orders").get<std::vector<unsigned>>());
    const std::string flavor_name = json.at("flavor").get<std::string>();
    if (flavor_name != "plain" && flavor_name != "extended") throw ParseError("unknown flavor '" + flavor_name + "'");
    const Flavor flavor = flavor_name == "plain" ? Flavor::plain : Flavor::extended;
    if (json.at("m").get<std::size_t>() != orders.size() || vars.size() != orders.size())
      throw ParseError("m, vars and orders disagree");
    IndexCodec codec(p, n, orders, flavor);
    const Counts expected = counts(p, n, orders);
    const Json& c = json.at("counts");
    if (count_field(c, "N_H") != expected.n_h || count_field(c, "N_S") != expected.n_s ||
        count_field(c, "N_H_w") != expected.n_h_ext || count_field(c, "N_S_w") != expected.n_s_ext)
      throw ParseError("counts do not match the order vector");
    std::vector<ProlongedEquation> equations;
    for (const auto& e : json.at("equations")) {
      ProlongedEquation eq;
      eq.alpha = e.at("alpha").get<std::size_t>();
      eq.k = e.at("k").get<unsigned>();
      eq.index = MultiIndex(e.at("i").get<std::vector<unsigned>>());
      eq.polynomial = Polynomial::parse(e.at("polynomial").get<std::string>());
      equations.push_back(std::move(eq));
    }
    ProlongedSystem out(std::move(codec), vars, std::move(equations));
    const auto listed = json.at("unknowns");
    const auto unknowns = out.unknowns();
    if (listed.size() != unknowns.size()) throw ParseError("unknown list has the wrong length");
    for (std::size_t b = 0; b < unknowns.size(); ++b)
      if (listed[b].at("name").get<std::string>() != unknowns[b].name())
        throw ParseError("unknown beta=" + std::to_string(b + 1) + " does not match the codec");
    return out;
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("prolonged system: ") + e.what());
  } catch (const ShapeError& e) {
    throw ParseError(std::string("prolonged system: ") + e.what());
  } catch (const RangeError& e) {
    throw ParseError(std::string("prolonged system: ") + e.what());
  }
}

Json to_json(const TopOrderExtraction& extraction) {
  Json top = Json::array();
  for (const auto& jet : extraction.top_jets) top.push_back(jet.name());
  Json solutions = Json::array();
  for (const auto& s : extraction.solutions)
    solutions.push_back(Json{{"jet", s.jet.name()},
                             {"numerator", s.numerator.to_string()},
                             {"denominator", s.denominator.to_string()}});
  Json out{{"solved", extraction.solved}};
  if (!extraction.failure.empty()) out["failure"] = extraction.failure;
  out["top_jets"] = std::move(top);
  out["solutions"] = std::move(solutions);
  out["residuals"] = polynomial_list(extraction.residuals);
  out["conditions"] = conditions_json(extraction.conditions);
  if (extraction.determinant) out["determinant"] = extraction.determinant->to_string();
  return out;
}

Json to_json(const MinimalOrders& minimal) {
  Json distances = Json::array();
  for (const auto& d : minimal.distances) distances.push_back(to_string(d));
  return Json{{"orders", minimal.orders.values()},
              {"N_H", minimal.n_h},
              {"N_S", minimal.n_s},
              {"estimate", to_string(minimal.estimate)},
              {"estimate_holds", minimal.estimate_holds},
              {"target", to_string(minimal.target)},
              {"distances", std::move(distances)}};
}

std::string dump(const Json& json) { return json.dump(2) + "\n"; }

}  // namespace jetsolve
