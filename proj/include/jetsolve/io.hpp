#ifndef JETSOLVE_IO_HPP
#define JETSOLVE_IO_HPP

#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "jetsolve/jet.hpp"
#include "jetsolve/rank.hpp"
#include "jetsolve/reduction.hpp"

namespace jetsolve {

using Json = nlohmann::ordered_json;

/// Contents of a .poly file:
///   vars x y
///   eq x^2 + y^2 - 5
/// Blank lines and '#' comments are ignored.
struct PolySystem {
  std::vector<std::string> variables;
  std::vector<Polynomial> equations;
};

/// Throws ParseError naming the offending line.
PolySystem parse_poly_system(std::string_view text);
/// Reads and parses a .pde file:
///   unknowns 1
///   surplus 1
///   vars x
///   eq S1[1] - S1^2
/// Jet shorthand S<v> is expanded to the zero multi-index.
PdeSystem parse_pde_system(std::string_view text);
/// JSON object mapping variable names (jet shorthand allowed) to rational
/// strings or integers.
Assignment parse_point(std::string_view text, std::size_t dimension);

std::string read_file(const std::filesystem::path& path);
PolySystem load_poly_system(const std::filesystem::path& path);
PdeSystem load_pde_system(const std::filesystem::path& path);
Assignment load_point(const std::filesystem::path& path, std::size_t dimension);

Json to_json(const Counts& counts);
Json to_json(const SideCondition& condition);
Json to_json(const ReductionStep& step);
Json to_json(const ReductionOutcome& outcome, bool with_steps = true);
Json to_json(const Elimination& elimination);
Json to_json(const Assignment& point);
Json to_json(const RankReport& report);
Json to_json(const ProlongedSystem& prolonged);
Json to_json(const TopOrderExtraction& extraction);
Json to_json(const MinimalOrders& minimal);

/// Inverse of to_json(const ProlongedSystem&). Polynomials are re-parsed and
/// the codec rebuilt from p, n, orders and flavor.
ProlongedSystem prolonged_from_json(const Json& json);

/// Two-space indented dump with a trailing newline.
std::string dump(const Json& json);

}  // namespace jetsolve

#endif  // JETSOLVE_IO_HPP
