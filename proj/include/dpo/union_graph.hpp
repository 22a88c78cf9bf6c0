#pragma once

#include <memory>
#include <utility>
#include <vector>

#include "dpo/error.hpp"
#include "dpo/graph.hpp"

namespace dpo {

/// Ordered vector of connected graphs denoting their disjoint union. Vertices
/// of the union are addressed either globally (0..total-1, components laid out
/// in order) or as (component, local vertex); the bijection between the two is
/// exposed via locate()/global_of().
class UnionGraph {
public:
    UnionGraph() = default;

    explicit UnionGraph(std::vector<GraphPtr> comps) : comps_(std::move(comps)) {
        offsets_.reserve(comps_.size() + 1);
        offsets_.push_back(0);
        for (const auto& c : comps_) {
            if (!c->is_connected())
                throw NotConnected();
            offsets_.push_back(offsets_.back() + c->vertex_count());
        }
    }

    std::size_t component_count() const { return comps_.size(); }
    const std::vector<GraphPtr>& components() const { return comps_; }
    const LabeledGraph& component(std::size_t i) const { return *comps_[i]; }
    Vertex total_vertices() const { return offsets_.empty() ? 0 : offsets_.back(); }
    Vertex offset(std::size_t comp) const { return offsets_[comp]; }

    std::pair<std::size_t, Vertex> locate(Vertex global) const {
        std::size_t lo = 0, hi = comps_.size();
        while (lo + 1 < hi) {
            std::size_t mid = (lo + hi) / 2;
            (offsets_[mid] <= global ? lo : hi) = mid;
        }
        return {lo, global - offsets_[lo]};
    }

    Vertex global_of(std::size_t comp, Vertex local) const { return offsets_[comp] + local; }

    UnionGraph extend(GraphPtr g) const {
        if (!g->is_connected())
            throw NotConnected();
        UnionGraph out;
        out.comps_ = comps_;
        out.comps_.push_back(std::move(g));
        out.offsets_ = offsets_;
        if (out.offsets_.empty())
            out.offsets_.push_back(0);
        out.offsets_.push_back(out.offsets_.back() + out.comps_.back()->vertex_count());
        return out;
    }

    UnionGraph pop() const {
        if (comps_.empty())
            throw EmptyUnion();
        UnionGraph out;
        out.comps_.assign(comps_.begin(), comps_.end() - 1);
        out.offsets_.assign(offsets_.begin(), offsets_.end() - 1);
        if (out.offsets_.empty())
            out.offsets_.push_back(0);
        return out;
    }

    /// Materializes the disjoint union as a single graph in global indexing.
    LabeledGraph flatten() const {
        std::vector<LabelId> labels;
        std::vector<LabeledGraph::Edge> edges;
        labels.reserve(total_vertices());
        for (std::size_t i = 0; i < comps_.size(); ++i) {
            Vertex off = offsets_[i];
            for (Vertex v = 0; v < comps_[i]->vertex_count(); ++v)
                labels.push_back(comps_[i]->vertex_label(v));
            for (const auto& e : comps_[i]->edges())
                edges.push_back({off + e.u, off + e.v, e.label});
        }
        return LabeledGraph(std::move(labels), std::move(edges));
    }

    bool operator==(const UnionGraph& other) const {
        if (comps_.size() != other.comps_.size())
            return false;
        for (std::size_t i = 0; i < comps_.size(); ++i)
            if (!(*comps_[i] == *other.comps_[i]))
                return false;
        return true;
    }

private:
    std::vector<GraphPtr> comps_;
    std::vector<Vertex> offsets_; // offsets_[i] = first global index of component i
};

/// Result of splitting a graph into connected components. Components are
/// listed in order of their smallest original vertex index; the two tables
/// record the original index of every part vertex and back.
struct ComponentSplit {
    UnionGraph parts;
    std::vector<std::pair<std::uint32_t, Vertex>> to_part; // original -> (component, local)
    std::vector<std::vector<Vertex>> to_original;          // [component][local] -> original
};

inline ComponentSplit connected_components(const LabeledGraph& g) {
    const Vertex n = g.vertex_count();
    std::vector<std::int64_t> comp_of(n, -1);
    std::vector<std::vector<Vertex>> members;
    for (Vertex start = 0; start < n; ++start) {
        if (comp_of[start] >= 0)
            continue;
        std::uint32_t c = static_cast<std::uint32_t>(members.size());
        members.emplace_back();
        std::vector<Vertex> stack{start};
        comp_of[start] = c;
        while (!stack.empty()) {
            Vertex v = stack.back();
            stack.pop_back();
            members[c].push_back(v);
            for (const auto& [w, lbl] : g.neighbors(v))
                if (comp_of[w] < 0) {
                    comp_of[w] = c;
                    stack.push_back(w);
                }
        }
        std::sort(members[c].begin(), members[c].end());
    }

    ComponentSplit out;
    out.to_part.resize(n);
    std::vector<GraphPtr> comps;
    for (std::uint32_t c = 0; c < members.size(); ++c) {
        std::vector<Vertex> local_of(n);
        std::vector<LabelId> labels;
        labels.reserve(members[c].size());
        for (Vertex local = 0; local < members[c].size(); ++local) {
            Vertex orig = members[c][local];
            local_of[orig] = local;
            out.to_part[orig] = {c, local};
            labels.push_back(g.vertex_label(orig));
        }
        std::vector<LabeledGraph::Edge> edges;
        for (const auto& e : g.edges())
            if (comp_of[e.u] == c)
                edges.push_back({local_of[e.u], local_of[e.v], e.label});
        comps.push_back(std::make_shared<LabeledGraph>(std::move(labels), std::move(edges)));
        out.to_original.push_back(std::move(members[c]));
    }
    out.parts = UnionGraph(std::move(comps));
    return out;
}

} // namespace dpo
