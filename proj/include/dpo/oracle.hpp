#pragma once

#include <algorithm>
#include <cstdint>
#include <vector>

#include "dpo/error.hpp"
#include "dpo/graph.hpp"
#include "dpo/perm.hpp"

namespace dpo {

/// Size limits for the brute-force reference enumerations.
struct OracleBudget {
    std::size_t max_components_in_l = 4;
    std::size_t max_multiset_size = 4;
    std::size_t max_host_vertices = 24;
    std::size_t max_maps = 50'000'000;
};

/// All label- and edge-preserving vertex permutations, by enumeration over
/// every permutation of the vertex set.
inline std::vector<Perm> brute_force_aut(const LabeledGraph& g) {
    const Vertex n = g.vertex_count();
    if (n > 9)
        throw BudgetExceeded("brute_force_aut limited to 9 vertices");
    Perm p = identity_perm(n);
    std::vector<Perm> out;
    do {
        bool ok = true;
        for (Vertex v = 0; v < n && ok; ++v)
            ok = g.vertex_label(p[v]) == g.vertex_label(v);
        for (const auto& e : g.edges()) {
            if (!ok)
                break;
            auto lbl = g.edge_label(p[e.u], p[e.v]);
            ok = lbl && *lbl == e.label;
        }
        if (ok)
            out.push_back(p);
    } while (std::next_permutation(p.begin(), p.end()));
    // next_permutation needs ascending start; identity is ascending, and the
    // loop above visits every permutation exactly once.
    return out;
}

} // namespace dpo
