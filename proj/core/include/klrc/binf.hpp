#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "klrc/cartan.hpp"
#include "klrc/crystal.hpp"

namespace klrc {

// One node of a generated crystal graph.  Coordinates are string coordinates
// in the reference model with trailing zeros trimmed; `vertex_coords[i]` is
// the image of the node in the vertex-i-first model, obtained by replaying
// the lowering path there (its first entry is eps_i^vee).
struct CrystalNodeData {
    std::vector<int> coords;
    std::vector<std::vector<int>> vertex_coords;
    std::vector<int> path;
    RootVector content;
    std::vector<long long> eps_vee;
    int depth = 0;
};

struct CrystalEdge {
    size_t from = 0;
    int label = 0;
    size_t to = 0;

    auto operator<=>(const CrystalEdge&) const = default;
};

struct CrystalGraph {
    static constexpr long long kAbsent = -1;

    CartanDatum datum;
    std::optional<DominantWeight> lambda;  // engaged for the highest-weight crystal
    int depth_cap = 0;
    size_t truncation_length = 0;
    bool complete = false;  // true when closed under every lowering operator
    std::vector<CrystalNodeData> nodes;  // index 0 is the highest node
    std::vector<CrystalEdge> edges;
    std::map<std::vector<int>, size_t> index;
    // lower_target[v][i] / raise_target[v][i]: node id, or kAbsent for the
    // zero symbol (or a target outside the generated portion).
    std::vector<std::vector<long long>> lower_target;
    std::vector<std::vector<long long>> raise_target;

    std::optional<size_t> find(const std::vector<int>& trimmed_coords) const;
};

struct GenerationOptions {
    LoweringRule rule = LoweringRule::Standard;
    size_t initial_truncation = 0;  // 0 selects (depth_cap + 2) * rank
    size_t max_regrow = 8;
};

// Closure of the highest node under lowering operators up to `depth` steps.
CrystalGraph binf_generate(const CartanDatum& d, int depth, GenerationOptions options = {});

// Subgraph of nodes with eps_i^vee <= lambda_i for every vertex; lowerings
// leaving the subgraph act as zero.  `complete` is false when the depth cap
// cut off reachable members.
CrystalGraph blambda_generate(const CartanDatum& d, const DominantWeight& lambda, int depth_cap,
                              GenerationOptions options = {});

struct NodeStats {
    long long eps = 0;
    long long eps_vee = 0;
    long long weight = 0;  // <h_i, -nu>
    long long jump = 0;    // eps + eps_vee + weight
    long long phi = 0;     // eps + weight
    std::optional<long long> phi_lambda;  // lambda_i + eps + weight
};

NodeStats binf_stats(const CrystalGraph& g, size_t node, int i,
                     const DominantWeight* lambda = nullptr);

// Node counts keyed by content nu (the weight is -nu, shifted by Lambda for
// highest-weight crystals).
std::map<RootVector, long long> weight_multiplicities(const CrystalGraph& g);

// Deterministic Graphviz rendering.
std::string to_dot(const CrystalGraph& g);

// Pads trimmed string coordinates with zeros up to `length`.
std::vector<int> expand_coords(const std::vector<int>& trimmed, size_t length);

// Removes trailing zeros.
std::vector<int> trim_coords(std::vector<int> coords);

}  // namespace klrc
