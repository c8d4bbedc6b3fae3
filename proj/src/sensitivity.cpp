#include "plexrank/sensitivity.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <sstream>

namespace plexrank {

std::vector<int> rank_nodes(std::span<const double> scores) {
    const std::size_t n = scores.size();
    std::vector<std::size_t> order(n);
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::sort(order.begin(), order.end(),
              [&](std::size_t a, std::size_t b) { return scores[a] < scores[b]; });
    std::vector<int> positions(n, 0);
    for (std::size_t i = 0; i < n; ++i) {
        if (i > 0 && scores[order[i]] == scores[order[i - 1]]) {
            positions[order[i]] = positions[order[i - 1]];
        } else {
            positions[order[i]] = static_cast<int>(i) + 1;
        }
    }
    return positions;
}

std::size_t RankingTable::node_pos(NodeIndex v) const {
    for (std::size_t k = 0; k < node_order.size(); ++k) {
        if (node_order[k] == v) return k;
    }
    throw NodeNotInTable("node index " + std::to_string(v) + " is not in the ranking table");
}

std::vector<double> parse_beta_grid(const std::string& spec) {
    double lo = 0.0, hi = 0.0, step = 0.0;
    char c1 = 0, c2 = 0;
    std::istringstream iss(spec);
    if (!(iss >> lo >> c1 >> hi >> c2 >> step) || c1 != ':' || c2 != ':' ||
        !(iss >> std::ws).eof()) {
        throw ParseError("beta grid must be MIN:MAX:STEP, got '" + spec + "'");
    }
    if (!(step > 0.0) || hi < lo) {
        throw ParseError("beta grid needs STEP > 0 and MAX >= MIN, got '" + spec + "'");
    }
    std::vector<double> grid;
    for (std::size_t i = 0;; ++i) {
        double v = lo + static_cast<double>(i) * step;
        if (v > hi + step * 1e-9) break;
        grid.push_back(v);
    }
    return grid;
}

std::vector<double> default_beta_grid() {
    std::vector<double> grid;
    for (int b = -20; b <= 20; ++b) grid.push_back(static_cast<double>(b));
    return grid;
}

RankingTable beta_sweep(const MultiplexNetwork& network,
                        const std::vector<NormMethod>& methods,
                        const std::vector<double>& betas,
                        DegreeMode mode) {
    if (network.layer_count() < 2) {
        throw InvalidArity("beta_sweep needs at least 2 layers");
    }
    RankingTable table;
    table.node_order = network.common_nodes_by_label();
    if (table.node_order.size() < 2) {
        throw EmptyCommonSet("beta_sweep needs at least 2 common nodes, have " +
                             std::to_string(table.node_order.size()));
    }
    table.methods = methods;
    table.betas = betas;

    const std::size_t n_layers = network.layer_count();
    const std::size_t n_nodes = table.node_order.size();

    std::vector<WeightVector> weights;
    weights.reserve(betas.size());
    for (double beta : betas) weights.push_back(meowa_weights(beta, n_layers));

    table.positions.resize(methods.size());
    table.scores.resize(methods.size());
    std::vector<double> per_node(n_layers);
    for (std::size_t m = 0; m < methods.size(); ++m) {
        NormalizedMatrix matrix = normalize(network, table.node_order, mode, methods[m]);
        table.positions[m].resize(betas.size());
        table.scores[m].resize(betas.size());
        for (std::size_t b = 0; b < betas.size(); ++b) {
            std::vector<double> scores(n_nodes);
            for (std::size_t k = 0; k < n_nodes; ++k) {
                for (std::size_t i = 0; i < n_layers; ++i) per_node[i] = matrix.values[i][k];
                scores[k] = aggregate(per_node, weights[b]);
            }
            table.positions[m][b] = rank_nodes(scores);
            table.scores[m][b] = std::move(scores);
        }
    }
    return table;
}

int delta_agg(const RankingTable& table, NodeIndex v) {
    const std::size_t k = table.node_pos(v);
    int best = 0;
    for (std::size_t m = 0; m < table.methods.size(); ++m) {
        int lo = table.positions[m].front()[k];
        int hi = lo;
        for (std::size_t b = 0; b < table.betas.size(); ++b) {
            int p = table.positions[m][b][k];
            lo = std::min(lo, p);
            hi = std::max(hi, p);
        }
        best = std::max(best, hi - lo);
    }
    return best;
}

int delta_norm(const RankingTable& table, NodeIndex v) {
    const std::size_t k = table.node_pos(v);
    int best = 0;
    for (std::size_t b = 0; b < table.betas.size(); ++b) {
        int lo = table.positions.front()[b][k];
        int hi = lo;
        for (std::size_t m = 0; m < table.methods.size(); ++m) {
            int p = table.positions[m][b][k];
            lo = std::min(lo, p);
            hi = std::max(hi, p);
        }
        best = std::max(best, hi - lo);
    }
    return best;
}

const char* to_string(Quadrant q) {
    switch (q) {
        case Quadrant::A0N0: return "A0N0";
        case Quadrant::AplusN0: return "A+N0";
        case Quadrant::A0Nplus: return "A0N+";
        case Quadrant::AplusNplus: return "A+N+";
    }
    return "A0N0";
}

Quadrant classify(int delta_agg, int delta_norm, int tau_agg, int tau_norm) {
    const bool a = delta_agg > tau_agg;
    const bool n = delta_norm > tau_norm;
    if (a && n) return Quadrant::AplusNplus;
    if (a) return Quadrant::AplusN0;
    if (n) return Quadrant::A0Nplus;
    return Quadrant::A0N0;
}

std::vector<SensitivityRecord> sensitivity_report(const RankingTable& table,
                                                  int tau_agg, int tau_norm,
                                                  const NodeRegistry& registry) {
    std::vector<SensitivityRecord> records;
    records.reserve(table.node_order.size());
    for (NodeIndex v : table.node_order) {
        SensitivityRecord record;
        record.node = v;
        record.delta_agg = delta_agg(table, v);
        record.delta_norm = delta_norm(table, v);
        record.quadrant = classify(record.delta_agg, record.delta_norm, tau_agg, tau_norm);
        records.push_back(record);
    }
    std::sort(records.begin(), records.end(),
              [&](const SensitivityRecord& a, const SensitivityRecord& b) {
                  int sa = a.delta_agg + a.delta_norm;
                  int sb = b.delta_agg + b.delta_norm;
                  if (sa != sb) return sa > sb;
                  return registry.label(a.node) < registry.label(b.node);
              });
    return records;
}

}  // namespace plexrank
