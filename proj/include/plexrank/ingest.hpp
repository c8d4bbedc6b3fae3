#pragma once

#include <istream>
#include <optional>
#include <string>
#include <vector>

#include "plexrank/multiplex.hpp"

namespace plexrank {

enum class Preprocess { None, LargestScc };

/// One line of a manifest. Either a plain per-layer edge-list file, a single
/// layer selected out of a combined "layerID src dst [weight]" file
/// (layer_filter set), or an expand-all combined entry (combined_all set,
/// one layer per distinct layer id, named by the id).
struct ManifestEntry {
    std::string name;
    std::string path;
    bool directed = false;
    Preprocess preprocess = Preprocess::None;
    std::optional<std::string> layer_filter;
    bool combined_all = false;
};

/// Manifest format, one layer per line, tab-separated:
///   name <TAB> path <TAB> directed|undirected <TAB> none|largest_scc [<TAB> layer=ID]
///   @combined <TAB> path <TAB> directed|undirected <TAB> none|largest_scc
/// '#' starts a comment; blank lines are skipped. Relative paths are resolved
/// against the manifest's directory.
struct LayerManifest {
    std::vector<ManifestEntry> entries;

    static LayerManifest parse(std::istream& in, const std::string& base_dir);
    static LayerManifest parse_file(const std::string& path);
};

/// Edge-list format: whitespace-separated `src dst [extra...]` per line,
/// '#' or '%' comments. Extra tokens (weights, timestamps) are ignored.
/// Duplicate edges collapse silently; self-loops are dropped and counted.
Layer parse_edge_list(std::istream& in, bool directed, NodeRegistry& registry,
                      const std::string& layer_name);
Layer parse_edge_list(const std::string& path, bool directed, NodeRegistry& registry,
                      const std::string& layer_name);

/// Combined format: `layer src dst [weight]` per line. Returns one layer per
/// distinct layer id, in order of first appearance, named by the id.
std::vector<Layer> parse_combined(std::istream& in, bool directed, NodeRegistry& registry);
std::vector<Layer> parse_combined(const std::string& path, bool directed, NodeRegistry& registry);

/// Single layer selected from a combined file. Throws ParseError if the id
/// never occurs.
Layer parse_combined_layer(const std::string& path, bool directed, NodeRegistry& registry,
                           const std::string& layer_id, const std::string& layer_name);

/// Induced subgraph on the largest strongly connected component (directed
/// layers) or the largest connected component (undirected layers, with a
/// notice on stderr). Ties in component size go to the component containing
/// the lexicographically smallest node label. Throws EmptyLayer.
Layer largest_scc(const Layer& layer, const NodeRegistry& registry);

/// Parse every manifest entry, apply its preprocessing, and assemble the
/// network. Warns on stderr when the common node set comes out empty.
MultiplexNetwork build_network(const LayerManifest& manifest);

}  // namespace plexrank
