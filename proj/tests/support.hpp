#pragma once

// Shared helpers for the test suites: a deterministic RNG, small graph
// constructors and random graph generators.

#include <cstdint>
#include <string>
#include <vector>

#include "dpo/graph.hpp"
#include "dpo/graph_io.hpp"
#include "dpo/perm.hpp"

namespace dpotest {

// xorshift-based PRNG so test data is identical on every platform.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : state_(seed ? seed : 0x9e3779b97f4a7c15ull) {}

    std::uint64_t next() {
        state_ ^= state_ << 13;
        state_ ^= state_ >> 7;
        state_ ^= state_ << 17;
        return state_;
    }

    std::uint32_t below(std::uint32_t n) { return n ? static_cast<std::uint32_t>(next() % n) : 0; }

    bool chance(double p) { return static_cast<double>(next() % 1000000) < p * 1000000; }

private:
    std::uint64_t state_;
};

inline dpo::LabeledGraph path_graph(const std::vector<std::string>& labels,
                                    const std::string& edge_label = "-") {
    dpo::GraphBuilder b;
    for (const auto& l : labels)
        b.add_vertex(l);
    for (std::uint32_t i = 0; i + 1 < labels.size(); ++i)
        b.add_edge(i, i + 1, edge_label);
    return b.build();
}

inline dpo::LabeledGraph cycle_graph(std::uint32_t n, const std::string& label = "X",
                                     const std::string& edge_label = "-") {
    dpo::GraphBuilder b;
    for (std::uint32_t i = 0; i < n; ++i)
        b.add_vertex(label);
    for (std::uint32_t i = 0; i < n; ++i)
        b.add_edge(i, (i + 1) % n, edge_label);
    return b.build();
}

// C with 4 H leaves.
inline dpo::LabeledGraph methane_graph() {
    dpo::GraphBuilder b;
    auto c = b.add_vertex("C");
    for (int i = 0; i < 4; ++i) {
        auto h = b.add_vertex("H");
        b.add_edge(c, h, "-");
    }
    return b.build();
}

inline dpo::LabeledGraph single_vertex(const std::string& label) {
    dpo::GraphBuilder b;
    b.add_vertex(label);
    return b.build();
}

// Random simple graph over a small label alphabet; not necessarily connected.
inline dpo::LabeledGraph random_graph(Rng& rng, std::uint32_t max_vertices,
                                      const std::vector<std::string>& vlabels,
                                      const std::vector<std::string>& elabels,
                                      double edge_prob) {
    std::uint32_t n = 1 + rng.below(max_vertices);
    dpo::GraphBuilder b;
    for (std::uint32_t v = 0; v < n; ++v)
        b.add_vertex(vlabels[rng.below(static_cast<std::uint32_t>(vlabels.size()))]);
    for (std::uint32_t u = 0; u < n; ++u)
        for (std::uint32_t v = u + 1; v < n; ++v)
            if (rng.chance(edge_prob))
                b.add_edge(u, v, elabels[rng.below(static_cast<std::uint32_t>(elabels.size()))]);
    return b.build();
}

// Random connected graph: random graph plus a random spanning chain.
inline dpo::LabeledGraph random_connected_graph(Rng& rng, std::uint32_t max_vertices,
                                                const std::vector<std::string>& vlabels,
                                                const std::vector<std::string>& elabels,
                                                double edge_prob) {
    std::uint32_t n = 1 + rng.below(max_vertices);
    dpo::GraphBuilder b;
    for (std::uint32_t v = 0; v < n; ++v)
        b.add_vertex(vlabels[rng.below(static_cast<std::uint32_t>(vlabels.size()))]);
    std::vector<std::pair<std::uint32_t, std::uint32_t>> chosen;
    for (std::uint32_t v = 1; v < n; ++v) {
        std::uint32_t u = rng.below(v);
        chosen.push_back({u, v});
    }
    for (std::uint32_t u = 0; u < n; ++u)
        for (std::uint32_t v = u + 1; v < n; ++v) {
            bool have = false;
            for (auto& c : chosen)
                have = have || (c.first == u && c.second == v);
            if (!have && rng.chance(edge_prob))
                chosen.push_back({u, v});
        }
    for (auto& c : chosen)
        b.add_edge(c.first, c.second,
                   elabels[rng.below(static_cast<std::uint32_t>(elabels.size()))]);
    return b.build();
}

// Relabels g's vertices by the permutation (new index = perm[old index]).
inline dpo::LabeledGraph permuted_graph(const dpo::LabeledGraph& g, const dpo::Perm& perm) {
    std::vector<dpo::LabelId> labels(g.vertex_count());
    for (dpo::Vertex v = 0; v < g.vertex_count(); ++v)
        labels[perm[v]] = g.vertex_label(v);
    std::vector<dpo::LabeledGraph::Edge> edges;
    for (const auto& e : g.edges())
        edges.push_back({perm[e.u], perm[e.v], e.label});
    return dpo::LabeledGraph(std::move(labels), std::move(edges));
}

inline dpo::Perm random_perm(Rng& rng, std::uint32_t n) {
    dpo::Perm p = dpo::identity_perm(n);
    for (std::uint32_t i = n; i > 1; --i)
        std::swap(p[i - 1], p[rng.below(i)]);
    return p;
}

} // namespace dpotest
