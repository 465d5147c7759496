// Subcommand implementations. Each returns a JSON result and, where the data
// is tabular, a CSV rendering; main() wraps the result in the report envelope.
#pragma once

#include <entkit/convex_roof.hpp>
#include <entkit/tensor_core.hpp>
#include <entkit/tgx_construct.hpp>

#include <json.hpp>

#include <cstdint>
#include <optional>
#include <string>

#include "state_io.hpp"

namespace entkit::cli {

inline constexpr const char* REPORT_SCHEMA = "entkit-report-v1";

struct RunConfig {
  std::uint64_t seed = 1;
  std::string format = "json";
  int jobs = 1;
  double fuzz_tolerance = 1e-9;
};

struct CommandResult {
  int exit_code = 0;
  nlohmann::json result = nlohmann::json::object();
  std::string csv;  // empty when the command has no tabular form
};

// Envelope {"schema", "command", "config", "ok", "result"} or the CSV body.
std::string render(const std::string& command, const RunConfig& cfg, const CommandResult& r);
std::string render_error(const std::string& command, const RunConfig& cfg, const std::string& message);

CommandResult cmd_compute(const StateInput& in, const RoofGrid& grid);
CommandResult cmd_lstar(const ModeStructure& s);
CommandResult cmd_a13(const ModeStructure& s, int start, std::optional<int> lstar, bool trace);
CommandResult cmd_tables(int which, const RunConfig& cfg);
CommandResult cmd_meb(const ModeStructure& s, std::optional<int> lstar, std::optional<int> index, bool expand,
                      std::size_t limit);
CommandResult cmd_theta_sweep(const ModeStructure& s, int points, std::optional<LevelSet> levels);
CommandResult cmd_squeezed(double r_max, int points, int cutoff);
struct EnsembleRequest {
  bool normalize = false;
  int random_states = 200;
};
CommandResult cmd_entarray(const StateInput& in, const RoofGrid& grid, const EnsembleRequest& ens, const RunConfig& cfg);
CommandResult cmd_gm(const StateInput& in, const RoofGrid& grid);
CommandResult cmd_roof(const StateInput& in, const std::string& measure, const RoofGrid& grid);
CommandResult cmd_fuzz(int count, int max_n, const RunConfig& cfg);
CommandResult cmd_figdata(int figure, const RunConfig& cfg);

}  // namespace entkit::cli
