#include "plexrank/ingest.hpp"

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <unordered_map>

namespace plexrank {

namespace {

std::vector<std::string> split_ws(const std::string& line) {
    std::vector<std::string> tokens;
    std::istringstream iss(line);
    std::string tok;
    while (iss >> tok) tokens.push_back(tok);
    return tokens;
}

bool is_comment_or_blank(const std::string& line) {
    for (char c : line) {
        if (c == ' ' || c == '\t' || c == '\r') continue;
        return c == '#' || c == '%';
    }
    return true;
}

std::ifstream open_or_throw(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw IoError("cannot open '" + path + "'");
    return in;
}

std::vector<std::string> split_tabs(const std::string& line) {
    std::vector<std::string> fields;
    std::string current;
    for (char c : line) {
        if (c == '\t') {
            fields.push_back(current);
            current.clear();
        } else if (c != '\r') {
            current += c;
        }
    }
    fields.push_back(current);
    for (std::string& f : fields) {
        auto b = f.find_first_not_of(" \t");
        auto e = f.find_last_not_of(" \t");
        f = b == std::string::npos ? std::string() : f.substr(b, e - b + 1);
    }
    return fields;
}

}  // namespace

LayerManifest LayerManifest::parse(std::istream& in, const std::string& base_dir) {
    LayerManifest manifest;
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (is_comment_or_blank(line)) continue;
        std::vector<std::string> fields = split_tabs(line);
        if (fields.size() < 4) {
            throw ParseError("manifest line needs name, path, directedness, preprocess",
                             line_no);
        }
        ManifestEntry entry;
        entry.name = fields[0];
        entry.path = fields[1];
        if (!base_dir.empty() && std::filesystem::path(entry.path).is_relative()) {
            entry.path = (std::filesystem::path(base_dir) / entry.path).string();
        }
        if (fields[2] == "directed") {
            entry.directed = true;
        } else if (fields[2] == "undirected") {
            entry.directed = false;
        } else {
            throw ParseError("expected 'directed' or 'undirected', got '" + fields[2] + "'",
                             line_no);
        }
        if (fields[3] == "none") {
            entry.preprocess = Preprocess::None;
        } else if (fields[3] == "largest_scc") {
            entry.preprocess = Preprocess::LargestScc;
        } else {
            throw ParseError("expected 'none' or 'largest_scc', got '" + fields[3] + "'",
                             line_no);
        }
        if (fields.size() > 4 && !fields[4].empty()) {
            if (fields[4].rfind("layer=", 0) != 0) {
                throw ParseError("expected 'layer=ID', got '" + fields[4] + "'", line_no);
            }
            entry.layer_filter = fields[4].substr(6);
        }
        if (entry.name == "@combined") {
            entry.name.clear();
            entry.combined_all = true;
            if (entry.layer_filter) {
                throw ParseError("@combined cannot take a layer filter", line_no);
            }
        } else if (entry.name.empty()) {
            throw ParseError("empty layer name", line_no);
        }
        manifest.entries.push_back(std::move(entry));
    }
    std::vector<std::string> names;
    for (const ManifestEntry& e : manifest.entries) {
        if (e.combined_all) continue;
        if (std::find(names.begin(), names.end(), e.name) != names.end()) {
            throw ParseError("duplicate layer name '" + e.name + "' in manifest");
        }
        names.push_back(e.name);
    }
    return manifest;
}

LayerManifest LayerManifest::parse_file(const std::string& path) {
    std::ifstream in = open_or_throw(path);
    return parse(in, std::filesystem::path(path).parent_path().string());
}

Layer parse_edge_list(std::istream& in, bool directed, NodeRegistry& registry,
                      const std::string& layer_name) {
    Layer layer(layer_name, directed);
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (is_comment_or_blank(line)) continue;
        std::vector<std::string> tokens = split_ws(line);
        if (tokens.size() < 2) {
            throw ParseError("edge line needs at least 'src dst'", line_no);
        }
        const NodeIndex src = registry.intern(tokens[0]);
        const NodeIndex dst = registry.intern(tokens[1]);
        layer.add_edge(src, dst);
    }
    return layer;
}

Layer parse_edge_list(const std::string& path, bool directed, NodeRegistry& registry,
                      const std::string& layer_name) {
    std::ifstream in = open_or_throw(path);
    return parse_edge_list(in, directed, registry, layer_name);
}

std::vector<Layer> parse_combined(std::istream& in, bool directed, NodeRegistry& registry) {
    std::vector<Layer> layers;
    std::unordered_map<std::string, std::size_t> index_of;
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (is_comment_or_blank(line)) continue;
        std::vector<std::string> tokens = split_ws(line);
        if (tokens.size() < 3) {
            throw ParseError("combined line needs 'layer src dst'", line_no);
        }
        auto [it, inserted] = index_of.emplace(tokens[0], layers.size());
        if (inserted) layers.emplace_back(tokens[0], directed);
        const NodeIndex src = registry.intern(tokens[1]);
        const NodeIndex dst = registry.intern(tokens[2]);
        layers[it->second].add_edge(src, dst);
    }
    return layers;
}

std::vector<Layer> parse_combined(const std::string& path, bool directed,
                                  NodeRegistry& registry) {
    std::ifstream in = open_or_throw(path);
    return parse_combined(in, directed, registry);
}

Layer parse_combined_layer(const std::string& path, bool directed, NodeRegistry& registry,
                           const std::string& layer_id, const std::string& layer_name) {
    std::ifstream in = open_or_throw(path);
    Layer layer(layer_name, directed);
    std::string line;
    std::size_t line_no = 0;
    bool seen = false;
    while (std::getline(in, line)) {
        ++line_no;
        if (is_comment_or_blank(line)) continue;
        std::vector<std::string> tokens = split_ws(line);
        if (tokens.size() < 3) {
            throw ParseError("combined line needs 'layer src dst'", line_no);
        }
        if (tokens[0] != layer_id) continue;
        seen = true;
        const NodeIndex src = registry.intern(tokens[1]);
        const NodeIndex dst = registry.intern(tokens[2]);
        layer.add_edge(src, dst);
    }
    if (!seen) {
        throw ParseError("layer id '" + layer_id + "' not found in '" + path + "'");
    }
    return layer;
}

namespace {

/// Iterative Tarjan; recursion would overflow on long paths in large layers.
std::vector<std::vector<int>> strongly_connected_components(
    const std::vector<std::vector<int>>& adj) {
    const int n = static_cast<int>(adj.size());
    std::vector<int> index(n, -1), lowlink(n, 0);
    std::vector<bool> on_stack(n, false);
    std::vector<int> stack;
    std::vector<std::vector<int>> components;
    int next_index = 0;

    struct Frame {
        int v;
        std::size_t child;
    };
    std::vector<Frame> call;

    for (int root = 0; root < n; ++root) {
        if (index[root] != -1) continue;
        call.push_back({root, 0});
        while (!call.empty()) {
            Frame& frame = call.back();
            int v = frame.v;
            if (frame.child == 0) {
                index[v] = lowlink[v] = next_index++;
                stack.push_back(v);
                on_stack[v] = true;
            }
            bool descended = false;
            while (frame.child < adj[v].size()) {
                int w = adj[v][frame.child++];
                if (index[w] == -1) {
                    call.push_back({w, 0});
                    descended = true;
                    break;
                }
                if (on_stack[w]) lowlink[v] = std::min(lowlink[v], index[w]);
            }
            if (descended) continue;
            if (lowlink[v] == index[v]) {
                std::vector<int> component;
                int w;
                do {
                    w = stack.back();
                    stack.pop_back();
                    on_stack[w] = false;
                    component.push_back(w);
                } while (w != v);
                components.push_back(std::move(component));
            }
            call.pop_back();
            if (!call.empty()) {
                lowlink[call.back().v] = std::min(lowlink[call.back().v], lowlink[v]);
            }
        }
    }
    return components;
}

std::vector<std::vector<int>> connected_components(const std::vector<std::vector<int>>& adj) {
    const int n = static_cast<int>(adj.size());
    std::vector<int> component_of(n, -1);
    std::vector<std::vector<int>> components;
    for (int start = 0; start < n; ++start) {
        if (component_of[start] != -1) continue;
        std::vector<int> queue = {start};
        component_of[start] = static_cast<int>(components.size());
        std::vector<int> members;
        while (!queue.empty()) {
            int v = queue.back();
            queue.pop_back();
            members.push_back(v);
            for (int w : adj[v]) {
                if (component_of[w] == -1) {
                    component_of[w] = component_of[start];
                    queue.push_back(w);
                }
            }
        }
        components.push_back(std::move(members));
    }
    return components;
}

}  // namespace

Layer largest_scc(const Layer& layer, const NodeRegistry& registry) {
    if (layer.node_count() == 0) {
        throw EmptyLayer("largest_scc: layer '" + layer.name() + "' has no nodes");
    }
    const std::vector<NodeIndex> nodes = layer.nodes();
    std::unordered_map<NodeIndex, int> local;
    local.reserve(nodes.size());
    for (std::size_t i = 0; i < nodes.size(); ++i) {
        local.emplace(nodes[i], static_cast<int>(i));
    }
    std::vector<std::vector<int>> adj(nodes.size());
    for (const auto& [u, v] : layer.edges()) {
        int lu = local[u], lv = local[v];
        adj[lu].push_back(lv);
        if (!layer.directed()) adj[lv].push_back(lu);
    }

    std::vector<std::vector<int>> components;
    if (layer.directed()) {
        components = strongly_connected_components(adj);
    } else {
        std::cerr << "notice: layer '" << layer.name()
                  << "' is undirected; largest_scc uses the largest connected component\n";
        components = connected_components(adj);
    }

    // largest component; ties broken by the lexicographically smallest label
    const std::vector<int>* best = nullptr;
    std::string best_min_label;
    for (const std::vector<int>& component : components) {
        std::string min_label = registry.label(nodes[component.front()]);
        for (int m : component) {
            const std::string& lab = registry.label(nodes[m]);
            if (lab < min_label) min_label = lab;
        }
        if (best == nullptr || component.size() > best->size() ||
            (component.size() == best->size() && min_label < best_min_label)) {
            best = &component;
            best_min_label = min_label;
        }
    }

    Layer induced(layer.name(), layer.directed());
    std::vector<bool> keep(nodes.size(), false);
    for (int m : *best) keep[m] = true;
    for (int m : *best) induced.add_node(nodes[m]);
    for (const auto& [u, v] : layer.edges()) {
        if (keep[local[u]] && keep[local[v]]) induced.add_edge(u, v);
    }
    return induced;
}

MultiplexNetwork build_network(const LayerManifest& manifest) {
    NodeRegistry registry;
    std::vector<Layer> layers;
    for (const ManifestEntry& entry : manifest.entries) {
        std::vector<Layer> parsed;
        if (entry.combined_all) {
            parsed = parse_combined(entry.path, entry.directed, registry);
        } else if (entry.layer_filter) {
            parsed.push_back(parse_combined_layer(entry.path, entry.directed, registry,
                                                  *entry.layer_filter, entry.name));
        } else {
            parsed.push_back(parse_edge_list(entry.path, entry.directed, registry, entry.name));
        }
        for (Layer& layer : parsed) {
            if (layer.self_loops_dropped() > 0) {
                std::cerr << "warning: layer '" << layer.name() << "': dropped "
                          << layer.self_loops_dropped() << " self-loop(s)\n";
            }
            if (entry.preprocess == Preprocess::LargestScc) {
                layer = largest_scc(layer, registry);
            }
            layers.push_back(std::move(layer));
        }
    }
    MultiplexNetwork network(std::move(registry), std::move(layers));
    if (network.common_nodes().empty()) {
        std::cerr << "warning: the layers share no common nodes\n";
    }
    return network;
}

}  // namespace plexrank
