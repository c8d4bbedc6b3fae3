#pragma once

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "plexrank/multiplex.hpp"

namespace plexrank {

/// The four degree normalization methods. All produced values share one
/// orientation: higher = more central.
///   M1  min-max over the common node set V*
///   M2  min-max over the layer's full node set V_i
///   M3  M2 rescaled by maxdeg_i / maxdeg over all layers' nodes
///   M4  1 - r_i(v)/n_i where r_i(v) is the competition rank of v when all
///       of V_i is sorted by descending degree (rank 1 = top degree)
enum class NormMethod { M1 = 1, M2 = 2, M3 = 3, M4 = 4 };

const char* to_string(NormMethod method);
std::optional<NormMethod> norm_method_from_string(const std::string& s);

/// Per-layer degree extrema for one degree mode, over V* and over V_i.
struct LayerDegreeStats {
    int min_common = 0;
    int max_common = 0;
    int min_all = 0;
    int max_all = 0;
};

/// Extrema per layer. `common_order` must be non-empty and contained in every
/// layer (throws EmptyCommonSet / NodeNotInLayer otherwise).
std::vector<LayerDegreeStats> layer_degree_stats(const MultiplexNetwork& network,
                                                 const std::vector<NodeIndex>& common_order,
                                                 DegreeMode mode);

struct NormalizedMatrix {
    NormMethod method = NormMethod::M1;
    std::vector<NodeIndex> node_order;
    /// values[layer][k] for node_order[k]; higher = more central.
    std::vector<std::vector<double>> values;
};

/// A layer whose degree extrema coincide over the relevant node set gets the
/// neutral value 0.5 for every node, under every method.
bool is_degenerate_for(NormMethod method, const LayerDegreeStats& stats);

NormalizedMatrix norm_method1(const CentralityMatrix& degrees,
                              const std::vector<LayerDegreeStats>& stats);
NormalizedMatrix norm_method2(const CentralityMatrix& degrees,
                              const std::vector<LayerDegreeStats>& stats);
NormalizedMatrix norm_method3(const CentralityMatrix& degrees,
                              const std::vector<LayerDegreeStats>& stats);
NormalizedMatrix norm_method4(const MultiplexNetwork& network,
                              const std::vector<NodeIndex>& node_order,
                              DegreeMode mode);

/// Unoriented rank fractions r_i(v)/n_i as written out by method 4 before the
/// orientation fix (smaller = more central). Exposed for inspection only; the
/// pipeline uses the oriented values.
std::vector<std::vector<double>> method4_raw(const MultiplexNetwork& network,
                                             const std::vector<NodeIndex>& node_order,
                                             DegreeMode mode);

/// Dispatch over NormMethod, computing the stats it needs internally.
NormalizedMatrix normalize(const MultiplexNetwork& network,
                           const std::vector<NodeIndex>& node_order,
                           DegreeMode mode, NormMethod method);

/// Normalized values for every node of one layer (ascending node index
/// order), with the same per-layer statistics the V*-restricted matrices use.
/// This is the series behind the per-layer cumulative distribution plots.
/// Note M1 evaluated outside V* can leave [0,1] since its extrema come from V*.
std::vector<double> normalize_layer(const MultiplexNetwork& network,
                                    std::size_t layer_index,
                                    const std::vector<LayerDegreeStats>& stats,
                                    DegreeMode mode, NormMethod method);

struct CdfPoint {
    double x = 0.0;
    double y = 0.0;
};

/// Empirical survival function: one point per distinct observed value x,
/// ascending, with y = fraction of values >= x. y is non-increasing and
/// y at the smallest x is 1.
using CdfSeries = std::vector<CdfPoint>;

CdfSeries cumulative_distribution(std::span<const double> values);
CdfSeries cumulative_distribution(const NormalizedMatrix& matrix, std::size_t layer_index);

}  // namespace plexrank
