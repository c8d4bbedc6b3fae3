#include "plexrank/multiplex.hpp"

#include <algorithm>
#include <set>

namespace plexrank {

const char* to_string(DegreeMode mode) {
    switch (mode) {
        case DegreeMode::Total: return "total";
        case DegreeMode::In: return "in";
        case DegreeMode::Out: return "out";
    }
    return "total";
}

std::optional<DegreeMode> degree_mode_from_string(const std::string& s) {
    if (s == "total") return DegreeMode::Total;
    if (s == "in") return DegreeMode::In;
    if (s == "out") return DegreeMode::Out;
    return std::nullopt;
}

NodeIndex NodeRegistry::intern(const std::string& label) {
    auto it = index_of_.find(label);
    if (it != index_of_.end()) return it->second;
    NodeIndex index = static_cast<NodeIndex>(labels_.size());
    labels_.push_back(label);
    index_of_.emplace(label, index);
    return index;
}

std::optional<NodeIndex> NodeRegistry::find(const std::string& label) const {
    auto it = index_of_.find(label);
    if (it == index_of_.end()) return std::nullopt;
    return it->second;
}

const std::string& NodeRegistry::label(NodeIndex index) const {
    return labels_.at(index);
}

std::vector<NodeIndex> Layer::nodes() const {
    std::vector<NodeIndex> out;
    out.reserve(degrees_.size());
    for (const auto& [v, deg] : degrees_) out.push_back(v);
    return out;
}

int Layer::degree(NodeIndex v, DegreeMode mode) const {
    auto it = degrees_.find(v);
    if (it == degrees_.end()) {
        throw NodeNotInLayer("node index " + std::to_string(v) +
                             " is not in layer '" + name_ + "'");
    }
    const Deg& d = it->second;
    if (!directed_) return d.out;  // undirected: in = out = total = incident count
    switch (mode) {
        case DegreeMode::In: return d.in;
        case DegreeMode::Out: return d.out;
        case DegreeMode::Total: return d.in + d.out;
    }
    return d.in + d.out;
}

void Layer::add_node(NodeIndex v) {
    degrees_.emplace(v, Deg{});
}

bool Layer::add_edge(NodeIndex u, NodeIndex v) {
    add_node(u);
    add_node(v);
    if (u == v) {
        ++self_loops_dropped_;
        return false;
    }
    std::pair<NodeIndex, NodeIndex> key =
        directed_ ? std::make_pair(u, v)
                  : std::make_pair(std::min(u, v), std::max(u, v));
    if (!edges_.insert(key).second) {
        ++duplicates_dropped_;
        return false;
    }
    if (directed_) {
        degrees_[u].out += 1;
        degrees_[v].in += 1;
    } else {
        degrees_[u].out += 1;
        degrees_[v].out += 1;
    }
    return true;
}

std::vector<NodeIndex> common_nodes(const std::vector<Layer>& layers) {
    if (layers.empty()) return {};
    std::vector<NodeIndex> current = layers.front().nodes();
    for (std::size_t i = 1; i < layers.size() && !current.empty(); ++i) {
        std::vector<NodeIndex> next;
        next.reserve(current.size());
        for (NodeIndex v : current) {
            if (layers[i].contains(v)) next.push_back(v);
        }
        current = std::move(next);
    }
    return current;
}

MultiplexNetwork::MultiplexNetwork(NodeRegistry registry, std::vector<Layer> layers)
    : registry_(std::move(registry)), layers_(std::move(layers)) {
    if (layers_.empty()) throw Error("a multiplex network needs at least one layer");
    std::set<std::string> names;
    for (const Layer& l : layers_) {
        if (!names.insert(l.name()).second) {
            throw Error("duplicate layer name '" + l.name() + "'");
        }
    }
    common_nodes_ = plexrank::common_nodes(layers_);
}

std::optional<std::size_t> MultiplexNetwork::layer_index(const std::string& name) const {
    for (std::size_t i = 0; i < layers_.size(); ++i) {
        if (layers_[i].name() == name) return i;
    }
    return std::nullopt;
}

std::vector<NodeIndex> MultiplexNetwork::common_nodes_by_label() const {
    std::vector<NodeIndex> out = common_nodes_;
    std::sort(out.begin(), out.end(), [&](NodeIndex a, NodeIndex b) {
        return registry_.label(a) < registry_.label(b);
    });
    return out;
}

CentralityMatrix degree_matrix(const MultiplexNetwork& network,
                               const std::vector<NodeIndex>& nodes,
                               DegreeMode mode) {
    CentralityMatrix matrix;
    matrix.node_order = nodes;
    matrix.mode = mode;
    matrix.values.reserve(network.layer_count());
    for (const Layer& layer : network.layers()) {
        std::vector<int> column;
        column.reserve(nodes.size());
        for (NodeIndex v : nodes) column.push_back(layer.degree(v, mode));
        matrix.values.push_back(std::move(column));
    }
    return matrix;
}

}  // namespace plexrank
