#include "plexrank/normalize.hpp"

#include <algorithm>
#include <functional>
#include <limits>

namespace plexrank {

const char* to_string(NormMethod method) {
    switch (method) {
        case NormMethod::M1: return "M1";
        case NormMethod::M2: return "M2";
        case NormMethod::M3: return "M3";
        case NormMethod::M4: return "M4";
    }
    return "M1";
}

std::optional<NormMethod> norm_method_from_string(const std::string& s) {
    if (s == "1" || s == "M1" || s == "m1") return NormMethod::M1;
    if (s == "2" || s == "M2" || s == "m2") return NormMethod::M2;
    if (s == "3" || s == "M3" || s == "m3") return NormMethod::M3;
    if (s == "4" || s == "M4" || s == "m4") return NormMethod::M4;
    return std::nullopt;
}

std::vector<LayerDegreeStats> layer_degree_stats(const MultiplexNetwork& network,
                                                 const std::vector<NodeIndex>& common_order,
                                                 DegreeMode mode) {
    if (common_order.empty()) {
        throw EmptyCommonSet("layer_degree_stats: empty common node set");
    }
    std::vector<LayerDegreeStats> stats;
    stats.reserve(network.layer_count());
    for (const Layer& layer : network.layers()) {
        LayerDegreeStats s;
        s.min_common = std::numeric_limits<int>::max();
        s.max_common = std::numeric_limits<int>::min();
        for (NodeIndex v : common_order) {
            int d = layer.degree(v, mode);
            s.min_common = std::min(s.min_common, d);
            s.max_common = std::max(s.max_common, d);
        }
        s.min_all = std::numeric_limits<int>::max();
        s.max_all = std::numeric_limits<int>::min();
        for (NodeIndex v : layer.nodes()) {
            int d = layer.degree(v, mode);
            s.min_all = std::min(s.min_all, d);
            s.max_all = std::max(s.max_all, d);
        }
        stats.push_back(s);
    }
    return stats;
}

bool is_degenerate_for(NormMethod method, const LayerDegreeStats& stats) {
    if (method == NormMethod::M1) return stats.max_common == stats.min_common;
    return stats.max_all == stats.min_all;
}

namespace {

constexpr double kNeutralValue = 0.5;

int global_max_degree(const std::vector<LayerDegreeStats>& stats) {
    int global = std::numeric_limits<int>::min();
    for (const LayerDegreeStats& s : stats) global = std::max(global, s.max_all);
    return global;
}

NormalizedMatrix min_max_normalize(const CentralityMatrix& degrees,
                                   const std::vector<LayerDegreeStats>& stats,
                                   NormMethod method,
                                   const std::function<double(std::size_t)>& scale) {
    NormalizedMatrix out;
    out.method = method;
    out.node_order = degrees.node_order;
    out.values.resize(degrees.values.size());
    for (std::size_t i = 0; i < degrees.values.size(); ++i) {
        const LayerDegreeStats& s = stats.at(i);
        std::vector<double>& column = out.values[i];
        column.resize(degrees.node_order.size());
        if (is_degenerate_for(method, s)) {
            std::fill(column.begin(), column.end(), kNeutralValue);
            continue;
        }
        const int lo = method == NormMethod::M1 ? s.min_common : s.min_all;
        const int hi = method == NormMethod::M1 ? s.max_common : s.max_all;
        const double span = static_cast<double>(hi - lo);
        const double factor = scale(i);
        for (std::size_t k = 0; k < column.size(); ++k) {
            column[k] = (static_cast<double>(degrees.values[i][k] - lo) / span) * factor;
        }
    }
    return out;
}

/// Competition rank of `deg` in a descending-sorted degree list: 1 + the
/// number of strictly larger degrees.
int rank_of(const std::vector<int>& sorted_desc, int deg) {
    auto it = std::lower_bound(sorted_desc.begin(), sorted_desc.end(), deg,
                               std::greater<int>());
    return static_cast<int>(it - sorted_desc.begin()) + 1;
}

std::vector<int> layer_degrees_desc(const Layer& layer, DegreeMode mode) {
    std::vector<int> degs;
    degs.reserve(layer.node_count());
    for (NodeIndex v : layer.nodes()) degs.push_back(layer.degree(v, mode));
    std::sort(degs.begin(), degs.end(), std::greater<int>());
    return degs;
}

}  // namespace

NormalizedMatrix norm_method1(const CentralityMatrix& degrees,
                              const std::vector<LayerDegreeStats>& stats) {
    return min_max_normalize(degrees, stats, NormMethod::M1,
                             [](std::size_t) { return 1.0; });
}

NormalizedMatrix norm_method2(const CentralityMatrix& degrees,
                              const std::vector<LayerDegreeStats>& stats) {
    return min_max_normalize(degrees, stats, NormMethod::M2,
                             [](std::size_t) { return 1.0; });
}

NormalizedMatrix norm_method3(const CentralityMatrix& degrees,
                              const std::vector<LayerDegreeStats>& stats) {
    const double global = static_cast<double>(global_max_degree(stats));
    return min_max_normalize(degrees, stats, NormMethod::M3,
                             [&stats, global](std::size_t i) {
                                 return static_cast<double>(stats[i].max_all) / global;
                             });
}

NormalizedMatrix norm_method4(const MultiplexNetwork& network,
                              const std::vector<NodeIndex>& node_order,
                              DegreeMode mode) {
    NormalizedMatrix out;
    out.method = NormMethod::M4;
    out.node_order = node_order;
    out.values.resize(network.layer_count());
    for (std::size_t i = 0; i < network.layer_count(); ++i) {
        const Layer& layer = network.layer(i);
        std::vector<double>& column = out.values[i];
        column.resize(node_order.size());
        std::vector<int> sorted_desc = layer_degrees_desc(layer, mode);
        if (sorted_desc.empty() || sorted_desc.front() == sorted_desc.back()) {
            std::fill(column.begin(), column.end(), kNeutralValue);
            continue;
        }
        const double n_i = static_cast<double>(layer.node_count());
        for (std::size_t k = 0; k < node_order.size(); ++k) {
            int r = rank_of(sorted_desc, layer.degree(node_order[k], mode));
            column[k] = 1.0 - static_cast<double>(r) / n_i;
        }
    }
    return out;
}

std::vector<std::vector<double>> method4_raw(const MultiplexNetwork& network,
                                             const std::vector<NodeIndex>& node_order,
                                             DegreeMode mode) {
    std::vector<std::vector<double>> out(network.layer_count());
    for (std::size_t i = 0; i < network.layer_count(); ++i) {
        const Layer& layer = network.layer(i);
        std::vector<int> sorted_desc = layer_degrees_desc(layer, mode);
        const double n_i = static_cast<double>(layer.node_count());
        out[i].resize(node_order.size());
        for (std::size_t k = 0; k < node_order.size(); ++k) {
            int r = rank_of(sorted_desc, layer.degree(node_order[k], mode));
            out[i][k] = static_cast<double>(r) / n_i;
        }
    }
    return out;
}

NormalizedMatrix normalize(const MultiplexNetwork& network,
                           const std::vector<NodeIndex>& node_order,
                           DegreeMode mode, NormMethod method) {
    if (method == NormMethod::M4) return norm_method4(network, node_order, mode);
    CentralityMatrix degrees = degree_matrix(network, node_order, mode);
    std::vector<LayerDegreeStats> stats = layer_degree_stats(network, node_order, mode);
    if (method == NormMethod::M2) return norm_method2(degrees, stats);
    if (method == NormMethod::M3) return norm_method3(degrees, stats);
    return norm_method1(degrees, stats);
}

std::vector<double> normalize_layer(const MultiplexNetwork& network,
                                    std::size_t layer_index,
                                    const std::vector<LayerDegreeStats>& stats,
                                    DegreeMode mode, NormMethod method) {
    const Layer& layer = network.layer(layer_index);
    const LayerDegreeStats& s = stats.at(layer_index);
    std::vector<NodeIndex> nodes = layer.nodes();
    std::vector<double> out(nodes.size());
    if (is_degenerate_for(method, s)) {
        std::fill(out.begin(), out.end(), kNeutralValue);
        return out;
    }
    switch (method) {
        case NormMethod::M1: {
            const double span = static_cast<double>(s.max_common - s.min_common);
            for (std::size_t k = 0; k < nodes.size(); ++k) {
                out[k] = static_cast<double>(layer.degree(nodes[k], mode) - s.min_common) / span;
            }
            break;
        }
        case NormMethod::M2:
        case NormMethod::M3: {
            const double span = static_cast<double>(s.max_all - s.min_all);
            const double factor =
                method == NormMethod::M3
                    ? static_cast<double>(s.max_all) / static_cast<double>(global_max_degree(stats))
                    : 1.0;
            for (std::size_t k = 0; k < nodes.size(); ++k) {
                out[k] = (static_cast<double>(layer.degree(nodes[k], mode) - s.min_all) / span) * factor;
            }
            break;
        }
        case NormMethod::M4: {
            std::vector<int> sorted_desc = layer_degrees_desc(layer, mode);
            const double n_i = static_cast<double>(layer.node_count());
            for (std::size_t k = 0; k < nodes.size(); ++k) {
                int r = rank_of(sorted_desc, layer.degree(nodes[k], mode));
                out[k] = 1.0 - static_cast<double>(r) / n_i;
            }
            break;
        }
    }
    return out;
}

CdfSeries cumulative_distribution(std::span<const double> values) {
    CdfSeries series;
    if (values.empty()) return series;
    std::vector<double> sorted(values.begin(), values.end());
    std::sort(sorted.begin(), sorted.end());
    const double total = static_cast<double>(sorted.size());
    std::size_t k = 0;
    while (k < sorted.size()) {
        double x = sorted[k];
        // all entries from k on are >= x
        series.push_back({x, static_cast<double>(sorted.size() - k) / total});
        while (k < sorted.size() && sorted[k] == x) ++k;
    }
    return series;
}

CdfSeries cumulative_distribution(const NormalizedMatrix& matrix, std::size_t layer_index) {
    return cumulative_distribution(matrix.values.at(layer_index));
}

}  // namespace plexrank
