#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "plexrank/report.hpp"

namespace {

std::vector<std::string> split_list(const std::string& s) {
    std::vector<std::string> out;
    std::string item;
    for (char c : s) {
        if (c == ',') {
            if (!item.empty()) out.push_back(item);
            item.clear();
        } else {
            item += c;
        }
    }
    if (!item.empty()) out.push_back(item);
    return out;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Degree centrality rankings of multiplex networks and their "
                 "sensitivity to normalization and aggregation choices"};
    app.require_subcommand(1);

    std::string manifest;
    std::string degree_mode = "total";
    std::string betas = "-20:20:1";
    std::string methods = "1,2,3,4";
    std::string formats = "csv,json,svg";
    std::string out_dir = ".";
    std::string nodes;
    std::string cdf_method = "2";
    int tau_agg = 2;
    int tau_norm = 2;

    auto add_common = [&](CLI::App* cmd) {
        cmd->add_option("--manifest", manifest, "Layer manifest file")->required();
        cmd->add_option("--degree-mode", degree_mode, "Degree mode: total|in|out");
        cmd->add_option("--betas", betas, "Beta grid as MIN:MAX:STEP");
        cmd->add_option("--methods", methods,
                        "Normalization methods to run, e.g. 1,2,4");
        cmd->add_option("--tau-agg", tau_agg,
                        "Aggregation sensitivity threshold (A+ above this)");
        cmd->add_option("--tau-norm", tau_norm,
                        "Normalization sensitivity threshold (N+ above this)");
        cmd->add_option("--out", out_dir, "Output directory");
        cmd->add_option("--format", formats, "Outputs to write, subset of csv,json,svg");
    };

    CLI::App* analyze =
        app.add_subcommand("analyze", "Write ranking, sensitivity and summary tables");
    add_common(analyze);

    CLI::App* cdf = app.add_subcommand(
        "cdf", "Write per-layer distributions of the normalized degree");
    add_common(cdf);
    cdf->add_option("--method", cdf_method, "Normalization method to plot");

    CLI::App* curves = app.add_subcommand(
        "curves", "Write position-vs-beta curves for selected nodes");
    add_common(curves);
    curves->add_option("--nodes", nodes, "Node labels, comma separated")->required();

    CLI::App* scatter = app.add_subcommand(
        "scatter", "Write the sensitivity scatter with threshold guides");
    add_common(scatter);

    CLI11_PARSE(app, argc, argv);

    plexrank::RunConfig config;
    config.manifest_path = manifest;
    config.out_dir = out_dir;
    config.tau_agg = tau_agg;
    config.tau_norm = tau_norm;
    config.nodes = split_list(nodes);

    const auto mode = plexrank::degree_mode_from_string(degree_mode);
    if (!mode) {
        std::cerr << "error: unknown degree mode '" << degree_mode
                  << "' (expected total, in or out)\n";
        return plexrank::kExitError;
    }
    config.degree_mode = *mode;

    config.methods.clear();
    for (const auto& token : split_list(methods)) {
        const auto method = plexrank::norm_method_from_string(token);
        if (!method) {
            std::cerr << "error: unknown normalization method '" << token
                      << "' (expected 1, 2, 3 or 4)\n";
            return plexrank::kExitError;
        }
        config.methods.push_back(*method);
    }
    if (config.methods.empty()) {
        std::cerr << "error: --methods selected nothing\n";
        return plexrank::kExitError;
    }

    try {
        config.betas = plexrank::parse_beta_grid(betas);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return plexrank::kExitError;
    }

    config.write_csv = config.write_json = config.write_svg = false;
    for (const auto& token : split_list(formats)) {
        if (token == "csv") {
            config.write_csv = true;
        } else if (token == "json") {
            config.write_json = true;
        } else if (token == "svg") {
            config.write_svg = true;
        } else {
            std::cerr << "error: unknown output format '" << token
                      << "' (expected csv, json or svg)\n";
            return plexrank::kExitError;
        }
    }
    if (!config.write_csv && !config.write_json && !config.write_svg) {
        std::cerr << "error: --format selected nothing\n";
        return plexrank::kExitError;
    }

    if (analyze->parsed()) {
        return plexrank::cmd_analyze(config);
    }
    if (cdf->parsed()) {
        const auto method = plexrank::norm_method_from_string(cdf_method);
        if (!method) {
            std::cerr << "error: unknown normalization method '" << cdf_method
                      << "' (expected 1, 2, 3 or 4)\n";
            return plexrank::kExitError;
        }
        return plexrank::cmd_cdf(config, *method);
    }
    if (curves->parsed()) {
        return plexrank::cmd_curves(config);
    }
    return plexrank::cmd_scatter(config);
}
