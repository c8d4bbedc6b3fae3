#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "plexrank/errors.hpp"

namespace plexrank {

/// Dense node index within one network. The label <-> index mapping lives in
/// the NodeRegistry shared by all layers of a MultiplexNetwork.
using NodeIndex = std::uint32_t;

enum class DegreeMode { Total, In, Out };

const char* to_string(DegreeMode mode);
std::optional<DegreeMode> degree_mode_from_string(const std::string& s);

/// Bijection between string node labels and dense indices. Indices are
/// assigned in order of first appearance, so identical inputs produce
/// identical mappings.
class NodeRegistry {
public:
    NodeIndex intern(const std::string& label);
    std::optional<NodeIndex> find(const std::string& label) const;
    const std::string& label(NodeIndex index) const;
    std::size_t size() const { return labels_.size(); }

private:
    std::vector<std::string> labels_;
    std::unordered_map<std::string, NodeIndex> index_of_;
};

/// One layer of a multiplex network: a simple graph, directed or undirected.
/// Self-loops are dropped and duplicate edges collapsed on insertion; the
/// counts are kept so ingestion can report what was discarded.
class Layer {
public:
    Layer(std::string name, bool directed)
        : name_(std::move(name)), directed_(directed) {}

    const std::string& name() const { return name_; }
    bool directed() const { return directed_; }

    std::size_t node_count() const { return degrees_.size(); }
    std::size_t edge_count() const { return edges_.size(); }
    bool contains(NodeIndex v) const { return degrees_.count(v) != 0; }

    /// Node indices in ascending order.
    std::vector<NodeIndex> nodes() const;

    /// Canonical edge list, ascending. Undirected edges are stored with
    /// first <= second.
    const std::set<std::pair<NodeIndex, NodeIndex>>& edges() const { return edges_; }

    /// Number of incident edges (undirected), or in/out/in+out (directed).
    /// Throws NodeNotInLayer for unknown nodes.
    int degree(NodeIndex v, DegreeMode mode = DegreeMode::Total) const;

    std::size_t self_loops_dropped() const { return self_loops_dropped_; }
    std::size_t duplicates_dropped() const { return duplicates_dropped_; }

    void add_node(NodeIndex v);
    /// Returns true if the edge was inserted, false if it was a self-loop or
    /// a duplicate. Endpoints are added to the node set either way.
    bool add_edge(NodeIndex u, NodeIndex v);

private:
    struct Deg {
        int in = 0;
        int out = 0;
    };

    std::string name_;
    bool directed_;
    std::map<NodeIndex, Deg> degrees_;
    std::set<std::pair<NodeIndex, NodeIndex>> edges_;
    std::size_t self_loops_dropped_ = 0;
    std::size_t duplicates_dropped_ = 0;
};

/// Intersection of all layers' node sets, ascending by index.
std::vector<NodeIndex> common_nodes(const std::vector<Layer>& layers);

/// Immutable multiplex network: an ordered list of layers over one shared
/// node registry, plus the precomputed common node set V*.
class MultiplexNetwork {
public:
    /// Throws Error if layers is empty or layer names collide.
    MultiplexNetwork(NodeRegistry registry, std::vector<Layer> layers);

    const NodeRegistry& registry() const { return registry_; }
    const std::vector<Layer>& layers() const { return layers_; }
    const Layer& layer(std::size_t i) const { return layers_.at(i); }
    std::size_t layer_count() const { return layers_.size(); }
    std::optional<std::size_t> layer_index(const std::string& name) const;

    /// V*, ascending by node index.
    const std::vector<NodeIndex>& common_nodes() const { return common_nodes_; }

    /// V* ordered by label (lexicographic ascending). This is the canonical
    /// node order used for matrices, rankings and reports.
    std::vector<NodeIndex> common_nodes_by_label() const;

private:
    NodeRegistry registry_;
    std::vector<Layer> layers_;
    std::vector<NodeIndex> common_nodes_;
};

/// Raw per-layer degrees for a fixed node order.
struct CentralityMatrix {
    std::vector<NodeIndex> node_order;
    DegreeMode mode = DegreeMode::Total;
    /// values[layer][k] = degree of node_order[k] in that layer.
    std::vector<std::vector<int>> values;
};

/// Degrees of `nodes` in every layer. Throws NodeNotInLayer if a requested
/// node is missing from any layer; the intended use is nodes ⊆ V*.
CentralityMatrix degree_matrix(const MultiplexNetwork& network,
                               const std::vector<NodeIndex>& nodes,
                               DegreeMode mode);

}  // namespace plexrank
