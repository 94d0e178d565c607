#ifndef WIRTINGER_REPORT_HPP
#define WIRTINGER_REPORT_HPP

#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "wirtinger/function_handle.hpp"
#include "wirtinger/functionals.hpp"
#include "wirtinger/polynomial.hpp"
#include "wirtinger/spaces.hpp"

namespace wirtinger {

using ordered_json = nlohmann::ordered_json;

/// Configuration or schema failure; carries every violation found.
class ConfigError : public std::runtime_error {
  public:
    explicit ConfigError(std::vector<std::string> violations);
    const std::vector<std::string>& violations() const { return violations_; }

  private:
    std::vector<std::string> violations_;
};

/// A parsed function spec; the polynomial is kept when available so exact
/// code paths (roots, critical points, derivatives) stay exact.
struct ParsedFunction {
    std::optional<Polynomial> poly;
    FunctionHandle handle;
};

ParsedFunction parse_function_spec(const ordered_json& spec);
SpaceSpec parse_space_spec(const ordered_json& spec);
PsiGen parse_psi_spec(const ordered_json& spec);

struct RunConfig {
    std::string command;  // norm | fundamental | constant | verify | sweep
    ordered_json raw;     // validated config, echoed into reports
    std::string format = "json";
    std::string output_path;
    bool timing = false;
};

/// Parses and validates config text. Throws ConfigError listing all schema
/// violations (or the JSON parse error with byte offset).
RunConfig parse_config(const std::string& text);

struct ReportDocument {
    std::string tool_version;
    ordered_json config_echo;
    ordered_json results;  // array of verdict / value entries
    long timing_ms = 0;
    std::vector<std::string> warnings;

    ordered_json to_json() const;
    std::string to_csv() const;
    std::string to_text() const;

    /// 0 iff all verdicts satisfied, 1 if any violated.
    int exit_status() const;
};

/// Dispatches the config to the module operations and assembles the report.
ReportDocument run(const RunConfig& config);

ordered_json verdict_to_json(const VerdictReport& v);

} // namespace wirtinger

#endif
