#include "klrc/binf.hpp"

#include <algorithm>
#include <deque>
#include <sstream>

#include "klrc/errors.hpp"

namespace klrc {

std::vector<int> expand_coords(const std::vector<int>& trimmed, size_t length) {
    if (trimmed.size() > length) {
        throw Error(ErrorCode::UsageError, "coordinates longer than the truncation");
    }
    std::vector<int> coords(length, 0);
    std::copy(trimmed.begin(), trimmed.end(), coords.begin());
    return coords;
}

std::vector<int> trim_coords(std::vector<int> coords) {
    while (!coords.empty() && coords.back() == 0) coords.pop_back();
    return coords;
}

std::optional<size_t> CrystalGraph::find(const std::vector<int>& trimmed_coords) const {
    auto it = index.find(trimmed_coords);
    if (it == index.end()) return std::nullopt;
    return it->second;
}

namespace {

class GraphBuilder {
  public:
    GraphBuilder(const CartanDatum& d, const DominantWeight* lambda, int depth_cap,
                 const GenerationOptions& options)
        : datum_(d), lambda_(lambda), depth_cap_(depth_cap), options_(options) {
        if (depth_cap < 0) {
            throw Error(ErrorCode::UsageError, "depth cap must be nonnegative");
        }
        if (lambda_ && lambda_->rank() != datum_.rank()) {
            throw Error(ErrorCode::ContentMismatch, "weight length does not match the datum rank");
        }
    }

    CrystalGraph build() {
        const size_t rank = static_cast<size_t>(datum_.rank());
        size_t length = options_.initial_truncation != 0
                            ? options_.initial_truncation
                            : (static_cast<size_t>(depth_cap_) + 2) * rank;
        for (size_t attempt = 0;; ++attempt) {
            try {
                return build_once(length);
            } catch (const Error& error) {
                if (error.code() != ErrorCode::TruncationExceeded ||
                    attempt >= options_.max_regrow) {
                    throw;
                }
                length += 2 * rank;
            }
        }
    }

  private:
    CrystalGraph build_once(size_t length) {
        const size_t rank = static_cast<size_t>(datum_.rank());
        StringModel reference(datum_, reference_sequence(datum_, length), options_.rule);
        std::vector<StringModel> vertex_models;
        vertex_models.reserve(rank);
        for (size_t i = 0; i < rank; ++i) {
            vertex_models.emplace_back(
                datum_, vertex_first_sequence(datum_, static_cast<int>(i), length + 1),
                options_.rule);
        }

        CrystalGraph graph;
        graph.datum = datum_;
        if (lambda_) graph.lambda = *lambda_;
        graph.depth_cap = depth_cap_;
        graph.truncation_length = length;

        CrystalNodeData highest;
        highest.coords = {};
        highest.vertex_coords.assign(rank, {});
        highest.path = {};
        highest.content = RootVector::zero(datum_.rank());
        highest.eps_vee.assign(rank, 0);
        highest.depth = 0;
        graph.nodes.push_back(std::move(highest));
        graph.index.emplace(std::vector<int>{}, 0);
        graph.lower_target.push_back(std::vector<long long>(rank, CrystalGraph::kAbsent));
        graph.raise_target.push_back(std::vector<long long>(rank, CrystalGraph::kAbsent));

        bool blocked_by_depth = false;
        std::deque<size_t> queue{0};
        while (!queue.empty()) {
            const size_t id = queue.front();
            queue.pop_front();
            for (size_t i = 0; i < rank; ++i) {
                // Copy the parent data: growing `nodes` below invalidates
                // references into it.
                const CrystalNodeData parent = graph.nodes[id];
                std::vector<int> lowered = trim_coords(reference.apply_lower(
                    expand_coords(parent.coords, length), static_cast<int>(i)));
                if (auto existing = graph.index.find(lowered); existing != graph.index.end()) {
                    graph.lower_target[id][i] = static_cast<long long>(existing->second);
                    graph.edges.push_back(
                        {id, static_cast<int>(i), existing->second});
                    continue;
                }

                CrystalNodeData child;
                child.coords = std::move(lowered);
                child.vertex_coords.assign(rank, {});
                child.eps_vee.assign(rank, 0);
                bool member = true;
                for (size_t j = 0; j < rank; ++j) {
                    std::vector<int> replay = trim_coords(vertex_models[j].apply_lower(
                        expand_coords(parent.vertex_coords[j], length + 1),
                        static_cast<int>(i)));
                    child.eps_vee[j] = replay.empty() ? 0 : replay.front();
                    child.vertex_coords[j] = std::move(replay);
                    if (lambda_ && child.eps_vee[j] > (*lambda_)[static_cast<int>(j)]) {
                        member = false;
                    }
                }
                if (!member) continue;  // the lowering acts as zero on the subgraph
                if (parent.depth >= depth_cap_) {
                    blocked_by_depth = true;
                    continue;
                }
                child.path = parent.path;
                child.path.push_back(static_cast<int>(i));
                child.content = parent.content.plus_alpha(static_cast<int>(i));
                child.depth = parent.depth + 1;

                const size_t child_id = graph.nodes.size();
                graph.index.emplace(child.coords, child_id);
                graph.nodes.push_back(std::move(child));
                graph.lower_target.push_back(
                    std::vector<long long>(rank, CrystalGraph::kAbsent));
                graph.raise_target.push_back(
                    std::vector<long long>(rank, CrystalGraph::kAbsent));
                graph.lower_target[id][i] = static_cast<long long>(child_id);
                graph.edges.push_back({id, static_cast<int>(i), child_id});
                queue.push_back(child_id);
            }
        }

        graph.complete = !blocked_by_depth;
        for (size_t id = 0; id < graph.nodes.size(); ++id) {
            for (size_t i = 0; i < rank; ++i) {
                auto raised = reference.apply_raise(
                    expand_coords(graph.nodes[id].coords, length), static_cast<int>(i));
                if (!raised) continue;
                if (auto target = graph.find(trim_coords(*raised))) {
                    graph.raise_target[id][i] = static_cast<long long>(*target);
                }
            }
        }
        std::sort(graph.edges.begin(), graph.edges.end());
        return graph;
    }

    const CartanDatum& datum_;
    const DominantWeight* lambda_;
    int depth_cap_;
    GenerationOptions options_;
};

}  // namespace

CrystalGraph binf_generate(const CartanDatum& d, int depth, GenerationOptions options) {
    return GraphBuilder(d, nullptr, depth, options).build();
}

CrystalGraph blambda_generate(const CartanDatum& d, const DominantWeight& lambda, int depth_cap,
                              GenerationOptions options) {
    return GraphBuilder(d, &lambda, depth_cap, options).build();
}

NodeStats binf_stats(const CrystalGraph& g, size_t node, int i, const DominantWeight* lambda) {
    if (node >= g.nodes.size()) {
        throw Error(ErrorCode::IndexOutOfRange, "node id out of range");
    }
    if (i < 0 || i >= g.datum.rank()) {
        throw Error(ErrorCode::IndexOutOfRange, "vertex out of range");
    }
    const CrystalNodeData& data = g.nodes[node];
    StringModel reference(g.datum, reference_sequence(g.datum, g.truncation_length));
    NodeStats stats;
    stats.eps = reference.eps(expand_coords(data.coords, g.truncation_length), i);
    stats.eps_vee = data.eps_vee[static_cast<size_t>(i)];
    stats.weight = -pairing(g.datum, i, data.content);
    stats.jump = stats.eps + stats.eps_vee + stats.weight;
    stats.phi = stats.eps + stats.weight;
    const DominantWeight* effective = lambda ? lambda : (g.lambda ? &*g.lambda : nullptr);
    if (effective) {
        stats.phi_lambda = (*effective)[i] + stats.eps + stats.weight;
    }
    return stats;
}

std::map<RootVector, long long> weight_multiplicities(const CrystalGraph& g) {
    std::map<RootVector, long long> table;
    for (const CrystalNodeData& node : g.nodes) {
        table[node.content] += 1;
    }
    return table;
}

std::string to_dot(const CrystalGraph& g) {
    std::ostringstream out;
    out << "digraph crystal {\n";
    out << "  rankdir=TB;\n";
    for (size_t id = 0; id < g.nodes.size(); ++id) {
        const RootVector& nu = g.nodes[id].content;
        out << "  n" << id << " [label=\"(";
        for (int j = 0; j < nu.rank(); ++j) {
            if (j > 0) out << ",";
            out << nu[j];
        }
        out << ")\"];\n";
    }
    for (const CrystalEdge& edge : g.edges) {
        out << "  n" << edge.from << " -> n" << edge.to << " [label=\""
            << g.datum.label(edge.label) << "\"];\n";
    }
    out << "}\n";
    return out.str();
}

}  // namespace klrc
