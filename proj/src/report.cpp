#include "plexrank/report.hpp"

#include <algorithm>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <vector>

#include "json.hpp"
#include "plexrank/svg.hpp"

namespace fs = std::filesystem;

namespace plexrank {

namespace {

MultiplexNetwork load_network(const RunConfig& config) {
    auto manifest = LayerManifest::parse_file(config.manifest_path);
    return build_network(manifest);
}

fs::path ensure_out_dir(const RunConfig& config) {
    fs::path dir = config.out_dir.empty() ? fs::path(".") : fs::path(config.out_dir);
    std::error_code ec;
    fs::create_directories(dir, ec);
    if (ec) {
        throw IoError("cannot create output directory " + dir.string() + ": " + ec.message());
    }
    return dir;
}

void write_file(const fs::path& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) {
        throw IoError("cannot open " + path.string() + " for writing");
    }
    out << content;
    out.flush();
    if (!out) {
        throw IoError("write failed for " + path.string());
    }
}

template <typename F>
int run_command(F&& body) {
    try {
        body();
        return kExitOk;
    } catch (const EmptyCommonSet& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitEmptyCommon;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitError;
    }
}

std::string safe_filename(const std::string& label) {
    std::string out;
    for (char c : label) {
        bool keep = (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') ||
                    (c >= '0' && c <= '9') || c == '.' || c == '_' || c == '-';
        out += keep ? c : '_';
    }
    return out.empty() ? std::string("node") : out;
}

}  // namespace

std::string format_beta(double beta) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%g", beta);
    return buf;
}

std::string format_value(double v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.10g", v);
    return buf;
}

std::string csv_field(const std::string& raw) {
    if (raw.find_first_of(",\"\n\r") == std::string::npos) {
        return raw;
    }
    std::string quoted = "\"";
    for (char c : raw) {
        if (c == '"') quoted += '"';
        quoted += c;
    }
    quoted += '"';
    return quoted;
}

std::string rankings_csv(const RankingTable& table, const NodeRegistry& registry) {
    std::ostringstream out;
    out << "node,method,beta,position,score\n";
    for (std::size_t k = 0; k < table.node_order.size(); ++k) {
        const std::string node = csv_field(registry.label(table.node_order[k]));
        for (std::size_t m = 0; m < table.methods.size(); ++m) {
            for (std::size_t b = 0; b < table.betas.size(); ++b) {
                out << node << ',' << to_string(table.methods[m]) << ','
                    << format_beta(table.betas[b]) << ',' << table.positions[m][b][k]
                    << ',' << format_value(table.scores[m][b][k]) << '\n';
            }
        }
    }
    return out.str();
}

std::string sensitivity_csv(const std::vector<SensitivityRecord>& records,
                            const NodeRegistry& registry) {
    std::ostringstream out;
    out << "node,delta_agg,delta_norm,quadrant\n";
    for (const auto& rec : records) {
        out << csv_field(registry.label(rec.node)) << ',' << rec.delta_agg << ','
            << rec.delta_norm << ',' << to_string(rec.quadrant) << '\n';
    }
    return out.str();
}

std::string summary_json(const MultiplexNetwork& network, DegreeMode mode) {
    const auto stats = layer_degree_stats(network, network.common_nodes(), mode);
    nlohmann::ordered_json doc;
    doc["degree_mode"] = to_string(mode);
    doc["common_nodes"] = network.common_nodes().size();
    auto& layers = doc["layers"] = nlohmann::ordered_json::array();
    for (std::size_t i = 0; i < network.layer_count(); ++i) {
        const Layer& layer = network.layer(i);
        nlohmann::ordered_json entry;
        entry["name"] = layer.name();
        entry["directed"] = layer.directed();
        entry["nodes"] = layer.node_count();
        entry["edges"] = layer.edge_count();
        entry["min_degree"] = stats[i].min_all;
        entry["max_degree"] = stats[i].max_all;
        entry["min_degree_common"] = stats[i].min_common;
        entry["max_degree_common"] = stats[i].max_common;
        layers.push_back(std::move(entry));
    }
    return doc.dump(2) + "\n";
}

int cmd_analyze(const RunConfig& config) {
    return run_command([&] {
        const auto network = load_network(config);
        const auto table =
            beta_sweep(network, config.methods, config.betas, config.degree_mode);
        const auto dir = ensure_out_dir(config);
        if (config.write_csv) {
            write_file(dir / "rankings.csv", rankings_csv(table, network.registry()));
            const auto records = sensitivity_report(table, config.tau_agg,
                                                    config.tau_norm, network.registry());
            write_file(dir / "sensitivity.csv",
                       sensitivity_csv(records, network.registry()));
        }
        if (config.write_json) {
            write_file(dir / "summary.json", summary_json(network, config.degree_mode));
        }
    });
}

int cmd_cdf(const RunConfig& config, NormMethod method) {
    return run_command([&] {
        const auto network = load_network(config);
        const auto stats = layer_degree_stats(network, network.common_nodes_by_label(),
                                              config.degree_mode);

        std::ostringstream csv;
        csv << "layer,x,y\n";
        svg::Chart chart;
        chart.title = std::string("Normalized degree distribution (") +
                      to_string(method) + ")";
        chart.x_label = "normalized degree";
        chart.y_label = "fraction of nodes >= x";
        double x_lo = 0.0, x_hi = 1.0;
        bool first = true;
        for (std::size_t i = 0; i < network.layer_count(); ++i) {
            const auto values =
                normalize_layer(network, i, stats, config.degree_mode, method);
            const auto series = cumulative_distribution(values);
            svg::Series plotted;
            plotted.label = network.layer(i).name();
            plotted.step = true;
            for (const auto& pt : series) {
                csv << csv_field(network.layer(i).name()) << ',' << format_value(pt.x)
                    << ',' << format_value(pt.y) << '\n';
                plotted.points.push_back({pt.x, pt.y});
                if (first) {
                    x_lo = x_hi = pt.x;
                    first = false;
                } else {
                    x_lo = std::min(x_lo, pt.x);
                    x_hi = std::max(x_hi, pt.x);
                }
            }
            chart.series.push_back(std::move(plotted));
        }
        chart.x_min = x_lo;
        chart.x_max = x_hi;
        chart.y_min = 0.0;
        chart.y_max = 1.0;

        const auto dir = ensure_out_dir(config);
        if (config.write_csv) {
            write_file(dir / "cdf.csv", csv.str());
        }
        if (config.write_svg) {
            write_file(dir / "cdf.svg", chart.render());
        }
    });
}

int cmd_curves(const RunConfig& config) {
    return run_command([&] {
        if (config.nodes.empty()) {
            throw Error("no node labels requested; pass --nodes LABEL[,LABEL...]");
        }
        const auto network = load_network(config);
        const auto table =
            beta_sweep(network, config.methods, config.betas, config.degree_mode);

        std::vector<std::size_t> picked;
        for (const auto& label : config.nodes) {
            const auto idx = network.registry().find(label);
            std::size_t k = table.node_order.size();
            if (idx) {
                for (std::size_t j = 0; j < table.node_order.size(); ++j) {
                    if (table.node_order[j] == *idx) {
                        k = j;
                        break;
                    }
                }
            }
            if (k == table.node_order.size()) {
                std::ostringstream msg;
                msg << "unknown node label '" << label << "'; valid labels:";
                for (NodeIndex v : table.node_order) {
                    msg << ' ' << network.registry().label(v);
                }
                throw Error(msg.str());
            }
            picked.push_back(k);
        }

        const auto dir = ensure_out_dir(config);
        const int n = static_cast<int>(table.node_order.size());
        for (std::size_t p = 0; p < picked.size(); ++p) {
            const std::size_t k = picked[p];
            const std::string label = network.registry().label(table.node_order[k]);

            std::ostringstream csv;
            csv << "beta";
            for (NormMethod m : table.methods) {
                csv << ',' << to_string(m);
            }
            csv << '\n';
            for (std::size_t b = 0; b < table.betas.size(); ++b) {
                csv << format_beta(table.betas[b]);
                for (std::size_t m = 0; m < table.methods.size(); ++m) {
                    csv << ',' << table.positions[m][b][k];
                }
                csv << '\n';
            }

            svg::Chart chart;
            chart.title = "Ranking position of " + label;
            chart.x_label = "beta";
            chart.y_label = "position (1 = least central)";
            chart.x_min = table.betas.front();
            chart.x_max = table.betas.back();
            chart.y_min = 1.0;
            chart.y_max = static_cast<double>(n);
            for (std::size_t m = 0; m < table.methods.size(); ++m) {
                svg::Series plotted;
                plotted.label = to_string(table.methods[m]);
                for (std::size_t b = 0; b < table.betas.size(); ++b) {
                    plotted.points.push_back(
                        {table.betas[b], static_cast<double>(table.positions[m][b][k])});
                }
                chart.series.push_back(std::move(plotted));
            }

            const std::string stem = "curves_" + safe_filename(label);
            if (config.write_csv) {
                write_file(dir / (stem + ".csv"), csv.str());
            }
            if (config.write_svg) {
                write_file(dir / (stem + ".svg"), chart.render());
            }
        }
    });
}

int cmd_scatter(const RunConfig& config) {
    return run_command([&] {
        const auto network = load_network(config);
        const auto table =
            beta_sweep(network, config.methods, config.betas, config.degree_mode);
        const auto records = sensitivity_report(table, config.tau_agg, config.tau_norm,
                                                network.registry());

        int max_agg = 0, max_norm = 0;
        for (const auto& rec : records) {
            max_agg = std::max(max_agg, rec.delta_agg);
            max_norm = std::max(max_norm, rec.delta_norm);
        }

        // Call out the corners: largest and smallest delta sum, plus the
        // records attaining the per-axis maxima.
        std::vector<NodeIndex> labeled;
        auto mark = [&](const SensitivityRecord& rec) {
            if (std::find(labeled.begin(), labeled.end(), rec.node) == labeled.end()) {
                labeled.push_back(rec.node);
            }
        };
        if (!records.empty()) {
            mark(records.front());
            mark(records.back());
            for (const auto& rec : records) {
                if (rec.delta_agg == max_agg) {
                    mark(rec);
                    break;
                }
            }
            for (const auto& rec : records) {
                if (rec.delta_norm == max_norm) {
                    mark(rec);
                    break;
                }
            }
        }

        svg::Chart chart;
        chart.title = "Ranking sensitivity";
        chart.x_label = "delta_agg";
        chart.y_label = "delta_norm";
        chart.x_min = 0.0;
        chart.x_max = static_cast<double>(std::max(max_agg, config.tau_agg)) + 1.0;
        chart.y_min = 0.0;
        chart.y_max = static_cast<double>(std::max(max_norm, config.tau_norm)) + 1.0;
        chart.x_guides.push_back(static_cast<double>(config.tau_agg));
        chart.y_guides.push_back(static_cast<double>(config.tau_norm));
        for (const auto& rec : records) {
            svg::Marker marker;
            marker.x = static_cast<double>(rec.delta_agg);
            marker.y = static_cast<double>(rec.delta_norm);
            if (std::find(labeled.begin(), labeled.end(), rec.node) != labeled.end()) {
                marker.label = network.registry().label(rec.node);
            }
            chart.markers.push_back(std::move(marker));
        }

        const auto dir = ensure_out_dir(config);
        if (config.write_csv) {
            write_file(dir / "scatter.csv", sensitivity_csv(records, network.registry()));
        }
        if (config.write_svg) {
            write_file(dir / "scatter.svg", chart.render());
        }
    });
}

}  // namespace plexrank
