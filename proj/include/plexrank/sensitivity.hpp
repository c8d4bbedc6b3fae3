#pragma once

#include <span>
#include <string>
#include <vector>

#include "plexrank/meowa.hpp"
#include "plexrank/normalize.hpp"

namespace plexrank {

/// Ranking positions for one score vector: position 1 = lowest score = least
/// central, position n = most central. Ties all take the minimum position of
/// their group (competition ranking).
std::vector<int> rank_nodes(std::span<const double> scores);

/// Ranking positions (and the aggregated scores behind them) of the common
/// nodes under every (normalization method, beta) combination.
struct RankingTable {
    std::vector<NodeIndex> node_order;
    std::vector<NormMethod> methods;
    std::vector<double> betas;
    /// positions[m][b][k] = position of node_order[k] under methods[m], betas[b]
    std::vector<std::vector<std::vector<int>>> positions;
    std::vector<std::vector<std::vector<double>>> scores;

    /// Index of v in node_order. Throws NodeNotInTable.
    std::size_t node_pos(NodeIndex v) const;
};

/// Inclusive arithmetic grid, parsed from "MIN:MAX:STEP".
std::vector<double> parse_beta_grid(const std::string& spec);
std::vector<double> default_beta_grid();  // -20..20 step 1

/// Normalize per method, aggregate per beta, rank per (method, beta), over
/// V* in label order. Throws EmptyCommonSet if |V*| < 2 and InvalidArity if
/// the network has fewer than 2 layers.
RankingTable beta_sweep(const MultiplexNetwork& network,
                        const std::vector<NormMethod>& methods,
                        const std::vector<double>& betas,
                        DegreeMode mode);

/// Largest ranking spread across beta within any single method.
int delta_agg(const RankingTable& table, NodeIndex v);

/// Largest ranking spread across methods at any single beta.
int delta_norm(const RankingTable& table, NodeIndex v);

enum class Quadrant { A0N0, AplusN0, A0Nplus, AplusNplus };

const char* to_string(Quadrant q);

/// A is "+" iff delta_agg > tau_agg; N is "+" iff delta_norm > tau_norm.
Quadrant classify(int delta_agg, int delta_norm, int tau_agg, int tau_norm);

struct SensitivityRecord {
    NodeIndex node = 0;
    int delta_agg = 0;
    int delta_norm = 0;
    Quadrant quadrant = Quadrant::A0N0;
};

/// One record per node, sorted by delta_agg + delta_norm descending, then by
/// label ascending.
std::vector<SensitivityRecord> sensitivity_report(const RankingTable& table,
                                                  int tau_agg, int tau_norm,
                                                  const NodeRegistry& registry);

}  // namespace plexrank
