#pragma once

#include <algorithm>
#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "dpo/error.hpp"
#include "dpo/labels.hpp"

namespace dpo {

using Vertex = std::uint32_t;

/// Finite labeled simple graph. Vertices are dense indices 0..n-1 fixed at
/// construction time (file order when parsed); every later total order on
/// vertices is this index order. Immutable once built.
class LabeledGraph {
public:
    struct Edge {
        Vertex u, v; // u < v
        LabelId label;
        bool operator==(const Edge&) const = default;
    };

    LabeledGraph() = default;

    LabeledGraph(std::vector<LabelId> vertex_labels, std::vector<Edge> edges,
                 std::string name = {})
        : name_(std::move(name)), vlabels_(std::move(vertex_labels)) {
        edges_.reserve(edges.size());
        adj_.resize(vlabels_.size());
        for (Edge e : edges) {
            if (e.u == e.v)
                throw InvalidGraph("self-loop at vertex " + std::to_string(e.u));
            if (e.u >= vlabels_.size() || e.v >= vlabels_.size())
                throw InvalidGraph("edge endpoint out of range");
            if (e.u > e.v)
                std::swap(e.u, e.v);
            edges_.push_back(e);
        }
        std::sort(edges_.begin(), edges_.end(), [](const Edge& a, const Edge& b) {
            return std::tie(a.u, a.v) < std::tie(b.u, b.v);
        });
        for (std::size_t i = 1; i < edges_.size(); ++i)
            if (edges_[i].u == edges_[i - 1].u && edges_[i].v == edges_[i - 1].v)
                throw InvalidGraph("parallel edge " + std::to_string(edges_[i].u) + "-" +
                                   std::to_string(edges_[i].v));
        for (const Edge& e : edges_) {
            adj_[e.u].push_back({e.v, e.label});
            adj_[e.v].push_back({e.u, e.label});
        }
        for (auto& nbrs : adj_)
            std::sort(nbrs.begin(), nbrs.end());
        connected_ = compute_connected();
    }

    Vertex vertex_count() const { return static_cast<Vertex>(vlabels_.size()); }
    std::size_t edge_count() const { return edges_.size(); }
    LabelId vertex_label(Vertex v) const { return vlabels_[v]; }
    const std::vector<LabelId>& vertex_labels() const { return vlabels_; }
    const std::vector<Edge>& edges() const { return edges_; }
    const std::string& name() const { return name_; }
    bool is_connected() const { return connected_; }

    /// Neighbors of v as (neighbor, edge label), sorted by neighbor index.
    const std::vector<std::pair<Vertex, LabelId>>& neighbors(Vertex v) const { return adj_[v]; }

    Vertex degree(Vertex v) const { return static_cast<Vertex>(adj_[v].size()); }

    bool has_edge(Vertex u, Vertex v) const {
        const auto& nbrs = adj_[u].size() <= adj_[v].size() ? adj_[u] : adj_[v];
        Vertex other = adj_[u].size() <= adj_[v].size() ? v : u;
        auto it = std::lower_bound(nbrs.begin(), nbrs.end(),
                                   std::pair<Vertex, LabelId>{other, 0});
        return it != nbrs.end() && it->first == other;
    }

    std::optional<LabelId> edge_label(Vertex u, Vertex v) const {
        for (const auto& [w, lbl] : adj_[u])
            if (w == v)
                return lbl;
        return std::nullopt;
    }

    /// Structural equality: identical vertex labels and edge set. The name is
    /// presentation only and does not participate.
    bool operator==(const LabeledGraph& other) const {
        return vlabels_ == other.vlabels_ && edges_ == other.edges_;
    }

private:
    bool compute_connected() const {
        if (vlabels_.empty())
            return true;
        std::vector<bool> seen(vlabels_.size(), false);
        std::vector<Vertex> stack{0};
        seen[0] = true;
        std::size_t reached = 1;
        while (!stack.empty()) {
            Vertex v = stack.back();
            stack.pop_back();
            for (const auto& [w, lbl] : adj_[v])
                if (!seen[w]) {
                    seen[w] = true;
                    ++reached;
                    stack.push_back(w);
                }
        }
        return reached == vlabels_.size();
    }

    std::string name_;
    std::vector<LabelId> vlabels_;
    std::vector<Edge> edges_;
    std::vector<std::vector<std::pair<Vertex, LabelId>>> adj_;
    bool connected_ = true;
};

using GraphPtr = std::shared_ptr<const LabeledGraph>;

/// Convenience builder used by parsers, generators and tests.
class GraphBuilder {
public:
    explicit GraphBuilder(std::string name = {}) : name_(std::move(name)) {}

    Vertex add_vertex(std::string_view label) {
        vlabels_.push_back(label_id(label));
        return static_cast<Vertex>(vlabels_.size() - 1);
    }

    void add_edge(Vertex u, Vertex v, std::string_view label) {
        edges_.push_back({u, v, label_id(label)});
    }

    LabeledGraph build() const { return LabeledGraph(vlabels_, edges_, name_); }
    GraphPtr build_shared() const { return std::make_shared<LabeledGraph>(build()); }

private:
    std::string name_;
    std::vector<LabelId> vlabels_;
    std::vector<LabeledGraph::Edge> edges_;
};

/// Injective label- and edge-preserving map between two graphs, stored as the
/// image vector over the pattern's vertex order.
struct Monomorphism {
    const LabeledGraph* pattern = nullptr;
    const LabeledGraph* host = nullptr;
    std::vector<Vertex> map;

    bool operator==(const Monomorphism& other) const {
        return pattern == other.pattern && host == other.host && map == other.map;
    }
};

/// Full validity check, used by tests and the oracle rather than hot paths.
inline bool is_monomorphism(const LabeledGraph& pattern, const LabeledGraph& host,
                            const std::vector<Vertex>& map) {
    if (map.size() != pattern.vertex_count())
        return false;
    std::vector<bool> used(host.vertex_count(), false);
    for (Vertex v = 0; v < pattern.vertex_count(); ++v) {
        if (map[v] >= host.vertex_count() || used[map[v]])
            return false;
        used[map[v]] = true;
        if (pattern.vertex_label(v) != host.vertex_label(map[v]))
            return false;
    }
    for (const auto& e : pattern.edges()) {
        auto lbl = host.edge_label(map[e.u], map[e.v]);
        if (!lbl || *lbl != e.label)
            return false;
    }
    return true;
}

} // namespace dpo
