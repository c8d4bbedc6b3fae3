#pragma once

#include <string>
#include <vector>

#include "plexrank/ingest.hpp"
#include "plexrank/sensitivity.hpp"

namespace plexrank {

/// Everything one analysis run needs. Defaults follow the CLI defaults:
/// all four methods, integer betas -20..20, thresholds 2/2, all formats.
struct RunConfig {
    std::string manifest_path;
    DegreeMode degree_mode = DegreeMode::Total;
    std::vector<NormMethod> methods = {NormMethod::M1, NormMethod::M2,
                                       NormMethod::M3, NormMethod::M4};
    std::vector<double> betas = default_beta_grid();
    int tau_agg = 2;
    int tau_norm = 2;
    std::string out_dir = ".";
    bool write_csv = true;
    bool write_json = true;
    bool write_svg = true;
    std::vector<std::string> nodes;  // node labels for the curves command
};

/// Exit codes shared by all commands: 0 ok, 1 IO/parse/usage error,
/// 2 empty (or too small) common node set.
inline constexpr int kExitOk = 0;
inline constexpr int kExitError = 1;
inline constexpr int kExitEmptyCommon = 2;

int cmd_analyze(const RunConfig& config);
int cmd_cdf(const RunConfig& config, NormMethod method);
int cmd_curves(const RunConfig& config);
int cmd_scatter(const RunConfig& config);

/// Serialization helpers, exposed for tests.
std::string format_beta(double beta);          // 6 significant digits
std::string format_value(double v);            // scores and cdf values
std::string csv_field(const std::string& raw); // RFC-style quoting when needed

std::string rankings_csv(const RankingTable& table, const NodeRegistry& registry);
std::string sensitivity_csv(const std::vector<SensitivityRecord>& records,
                            const NodeRegistry& registry);
std::string summary_json(const MultiplexNetwork& network, DegreeMode mode);

}  // namespace plexrank
