#pragma once

#include <algorithm>
#include <cstdint>
#include <memory>
#include <mutex>
#include <string>
#include <unordered_map>
#include <vector>

#include "dpo/graph.hpp"

namespace dpo {

/// Graph with opaque byte-string colors on vertices and edges. This is the
/// input shape of the canonicalization engine; plain labeled graphs and the
/// composite encodings of rules and derivations both reduce to it.
struct ColoredGraph {
    struct CEdge {
        Vertex u, v;
        std::string key;
    };
    std::vector<std::string> vertex_key; // one per vertex
    std::vector<CEdge> edges;

    Vertex vertex_count() const { return static_cast<Vertex>(vertex_key.size()); }
};

/// Output of canonicalization: a byte certificate identifying the isomorphism
/// class, the canonical labeling, and automorphism generators discovered as
/// certificate-equal leaves of the search tree.
struct CanonResult {
    std::string code;                            // bit-exact persistence key
    std::vector<Vertex> labeling;                // original vertex -> canonical position
    std::vector<std::vector<Vertex>> generators; // automorphisms, original indexing
};

inline std::string to_hex(const std::string& bytes) {
    static const char* digits = "0123456789abcdef";
    std::string out;
    out.reserve(bytes.size() * 2);
    for (unsigned char c : bytes) {
        out.push_back(digits[c >> 4]);
        out.push_back(digits[c & 0xf]);
    }
    return out;
}

namespace detail {

inline void put_u32(std::string& out, std::uint32_t x) {
    out.push_back(static_cast<char>(x >> 24));
    out.push_back(static_cast<char>(x >> 16));
    out.push_back(static_cast<char>(x >> 8));
    out.push_back(static_cast<char>(x));
}

/// Individualization-refinement search over a colored graph.
class CanonSearch {
public:
    explicit CanonSearch(const ColoredGraph& g) : n_(g.vertex_count()) {
        // Dense color ids ranked by sorted unique key; the ranks are
        // isomorphism-invariant because they only depend on the key strings.
        vkeys_ = sorted_unique(g.vertex_key);
        init_color_.resize(n_);
        for (Vertex v = 0; v < n_; ++v)
            init_color_[v] = rank_of(vkeys_, g.vertex_key[v]);
        std::vector<std::string> all_ekeys;
        all_ekeys.reserve(g.edges.size());
        for (const auto& e : g.edges)
            all_ekeys.push_back(e.key);
        ekeys_ = sorted_unique(all_ekeys);
        adj_.resize(n_);
        edge_count_ = static_cast<std::uint32_t>(g.edges.size());
        for (const auto& e : g.edges) {
            std::uint32_t ec = rank_of(ekeys_, e.key);
            adj_[e.u].push_back({e.v, ec});
            adj_[e.v].push_back({e.u, ec});
        }
        for (auto& nb : adj_)
            std::sort(nb.begin(), nb.end());
    }

    CanonResult run() {
        if (n_ == 0) {
            CanonResult r;
            r.code = final_code("");
            return r;
        }
        std::vector<std::uint32_t> colors = init_color_;
        normalize(colors);
        search(colors);
        CanonResult r;
        r.code = final_code(best_cert_);
        r.labeling = best_labeling_;
        r.generators = std::move(generators_);
        return r;
    }

private:
    static std::vector<std::string> sorted_unique(std::vector<std::string> keys) {
        std::sort(keys.begin(), keys.end());
        keys.erase(std::unique(keys.begin(), keys.end()), keys.end());
        return keys;
    }

    static std::uint32_t rank_of(const std::vector<std::string>& table, const std::string& key) {
        return static_cast<std::uint32_t>(
            std::lower_bound(table.begin(), table.end(), key) - table.begin());
    }

    // Renumber color values to dense ranks preserving order.
    void normalize(std::vector<std::uint32_t>& colors) const {
        std::vector<std::uint32_t> vals(colors);
        std::sort(vals.begin(), vals.end());
        vals.erase(std::unique(vals.begin(), vals.end()), vals.end());
        for (auto& c : colors)
            c = static_cast<std::uint32_t>(
                std::lower_bound(vals.begin(), vals.end(), c) - vals.begin());
    }

    std::size_t color_count(const std::vector<std::uint32_t>& colors) const {
        std::uint32_t mx = 0;
        for (auto c : colors)
            mx = std::max(mx, c);
        return colors.empty() ? 0 : mx + 1;
    }

    /// Iterated color refinement: signature of a vertex is its color plus the
    /// multiset of (edge color, neighbor color) pairs. Cells only ever split,
    /// and the new ranks depend only on invariant data.
    void refine(std::vector<std::uint32_t>& colors) const {
        using Sig = std::pair<std::uint32_t, std::vector<std::pair<std::uint32_t, std::uint32_t>>>;
        std::size_t count = color_count(colors);
        for (;;) {
            std::vector<Sig> sig(n_);
            for (Vertex v = 0; v < n_; ++v) {
                sig[v].first = colors[v];
                auto& nb = sig[v].second;
                nb.reserve(adj_[v].size());
                for (const auto& [w, ec] : adj_[v])
                    nb.push_back({ec, colors[w]});
                std::sort(nb.begin(), nb.end());
            }
            std::vector<Vertex> order(n_);
            for (Vertex v = 0; v < n_; ++v)
                order[v] = v;
            std::sort(order.begin(), order.end(),
                      [&](Vertex a, Vertex b) { return sig[a] < sig[b]; });
            std::uint32_t next = 0;
            std::vector<std::uint32_t> fresh(n_);
            for (std::size_t i = 0; i < order.size(); ++i) {
                if (i > 0 && sig[order[i]] != sig[order[i - 1]])
                    ++next;
                fresh[order[i]] = next;
            }
            std::size_t fresh_count = n_ ? next + 1 : 0;
            colors.swap(fresh);
            if (fresh_count == count)
                return;
            count = fresh_count;
        }
    }

    std::vector<std::uint32_t> individualized(const std::vector<std::uint32_t>& colors,
                                              Vertex v) const {
        std::vector<std::uint32_t> out(n_);
        for (Vertex u = 0; u < n_; ++u)
            out[u] = colors[u] * 2 + (u == v ? 0 : 1);
        normalize(out);
        return out;
    }

    std::string leaf_cert(const std::vector<Vertex>& labeling) const {
        std::string cert;
        cert.reserve(4u * (n_ + 1 + 3 * edge_count_));
        std::vector<Vertex> inv(n_);
        for (Vertex v = 0; v < n_; ++v)
            inv[labeling[v]] = v;
        for (Vertex pos = 0; pos < n_; ++pos)
            put_u32(cert, init_color_[inv[pos]]);
        std::vector<std::array<std::uint32_t, 3>> edges;
        edges.reserve(edge_count_);
        for (Vertex v = 0; v < n_; ++v)
            for (const auto& [w, ec] : adj_[v])
                if (v < w) {
                    std::uint32_t a = labeling[v], b = labeling[w];
                    if (a > b)
                        std::swap(a, b);
                    edges.push_back({a, b, ec});
                }
        std::sort(edges.begin(), edges.end());
        put_u32(cert, static_cast<std::uint32_t>(edges.size()));
        for (const auto& e : edges) {
            put_u32(cert, e[0]);
            put_u32(cert, e[1]);
            put_u32(cert, e[2]);
        }
        return cert;
    }

    bool is_automorphism(const std::vector<Vertex>& perm) const {
        for (Vertex v = 0; v < n_; ++v)
            if (init_color_[perm[v]] != init_color_[v])
                return false;
        for (Vertex v = 0; v < n_; ++v) {
            for (const auto& [w, ec] : adj_[v]) {
                Vertex a = perm[v], b = perm[w];
                const auto& nb = adj_[a];
                auto it = std::lower_bound(nb.begin(), nb.end(),
                                           std::pair<Vertex, std::uint32_t>{b, 0});
                if (it == nb.end() || it->first != b || it->second != ec)
                    return false;
            }
        }
        return true;
    }

    void record_automorphism(const std::vector<Vertex>& reference_inv,
                             const std::vector<Vertex>& labeling) {
        std::vector<Vertex> alpha(n_);
        bool identity = true;
        for (Vertex v = 0; v < n_; ++v) {
            alpha[v] = reference_inv[labeling[v]];
            identity = identity && alpha[v] == v;
        }
        if (identity || !is_automorphism(alpha))
            return;
        for (const auto& g : generators_)
            if (g == alpha)
                return;
        generators_.push_back(std::move(alpha));
    }

    void search(std::vector<std::uint32_t> colors) {
        refine(colors);
        std::size_t cells = color_count(colors);
        if (cells == n_) {
            // Discrete partition: a leaf labeling.
            std::vector<Vertex> labeling(colors.begin(), colors.end());
            std::string cert = leaf_cert(labeling);
            if (first_cert_.empty()) {
                first_cert_ = cert;
                first_inv_.resize(n_);
                for (Vertex v = 0; v < n_; ++v)
                    first_inv_[labeling[v]] = v;
                best_cert_ = std::move(cert);
                best_labeling_ = std::move(labeling);
                return;
            }
            if (cert == first_cert_)
                record_automorphism(first_inv_, labeling);
            if (cert == best_cert_ && best_cert_ != first_cert_) {
                std::vector<Vertex> best_inv(n_);
                for (Vertex v = 0; v < n_; ++v)
                    best_inv[best_labeling_[v]] = v;
                record_automorphism(best_inv, labeling);
            } else if (cert < best_cert_) {
                best_cert_ = std::move(cert);
                best_labeling_ = std::move(labeling);
            }
            return;
        }

        // Target cell: first smallest non-singleton cell in color order.
        std::vector<std::uint32_t> cell_size(cells, 0);
        for (auto c : colors)
            ++cell_size[c];
        std::uint32_t target = 0, target_size = 0;
        for (std::uint32_t c = 0; c < cells; ++c)
            if (cell_size[c] > 1 && (target_size == 0 || cell_size[c] < target_size)) {
                target = c;
                target_size = cell_size[c];
            }
        std::vector<Vertex> members;
        members.reserve(target_size);
        for (Vertex v = 0; v < n_; ++v)
            if (colors[v] == target)
                members.push_back(v);

        // Skip candidates equivalent to an explored sibling under discovered
        // automorphisms fixing the current individualization path.
        std::vector<Vertex> processed;
        std::vector<Vertex> uf;
        std::size_t gens_seen = SIZE_MAX;
        auto find = [&](Vertex x) {
            while (uf[x] != x)
                x = uf[x] = uf[uf[x]];
            return x;
        };
        for (Vertex w : members) {
            if (!processed.empty()) {
                if (gens_seen != generators_.size()) {
                    gens_seen = generators_.size();
                    uf.resize(n_);
                    for (Vertex v = 0; v < n_; ++v)
                        uf[v] = v;
                    for (const auto& g : generators_) {
                        bool fixes_path = true;
                        for (Vertex p : path_)
                            if (g[p] != p) {
                                fixes_path = false;
                                break;
                            }
                        if (!fixes_path)
                            continue;
                        for (Vertex v = 0; v < n_; ++v) {
                            Vertex a = find(v), b = find(g[v]);
                            if (a != b)
                                uf[a] = b;
                        }
                    }
                }
                bool skip = false;
                for (Vertex p : processed)
                    if (find(p) == find(w)) {
                        skip = true;
                        break;
                    }
                if (skip)
                    continue;
            }
            processed.push_back(w);
            path_.push_back(w);
            search(individualized(colors, w));
            path_.pop_back();
        }
    }

    std::string final_code(const std::string& cert) const {
        std::string code;
        put_u32(code, n_);
        put_u32(code, static_cast<std::uint32_t>(vkeys_.size()));
        for (const auto& k : vkeys_) {
            put_u32(code, static_cast<std::uint32_t>(k.size()));
            code += k;
        }
        put_u32(code, static_cast<std::uint32_t>(ekeys_.size()));
        for (const auto& k : ekeys_) {
            put_u32(code, static_cast<std::uint32_t>(k.size()));
            code += k;
        }
        code += cert;
        return code;
    }

    Vertex n_;
    std::uint32_t edge_count_ = 0;
    std::vector<std::string> vkeys_, ekeys_;
    std::vector<std::uint32_t> init_color_;
    std::vector<std::vector<std::pair<Vertex, std::uint32_t>>> adj_;

    std::vector<Vertex> path_;
    std::string first_cert_, best_cert_;
    std::vector<Vertex> first_inv_, best_labeling_;
    std::vector<std::vector<Vertex>> generators_;
};

} // namespace detail

inline CanonResult canonicalize(const ColoredGraph& g) { return detail::CanonSearch(g).run(); }

inline ColoredGraph to_colored(const LabeledGraph& g) {
    ColoredGraph cg;
    cg.vertex_key.reserve(g.vertex_count());
    for (Vertex v = 0; v < g.vertex_count(); ++v)
        cg.vertex_key.push_back(label_text(g.vertex_label(v)));
    cg.edges.reserve(g.edge_count());
    for (const auto& e : g.edges())
        cg.edges.push_back({e.u, e.v, label_text(e.label)});
    return cg;
}

inline CanonResult canonicalize(const LabeledGraph& g) { return canonicalize(to_colored(g)); }

inline bool is_isomorphic(const LabeledGraph& a, const LabeledGraph& b) {
    if (a.vertex_count() != b.vertex_count() || a.edge_count() != b.edge_count())
        return false;
    return canonicalize(a).code == canonicalize(b).code;
}

/// Memoizes canonicalization results keyed by graph identity. Holding the
/// shared_ptr pins the graph so the pointer key cannot be reused.
class CanonCache {
public:
    std::shared_ptr<const CanonResult> get(const GraphPtr& g) {
        {
            std::lock_guard<std::mutex> lock(mutex_);
            auto it = cache_.find(g.get());
            if (it != cache_.end())
                return it->second.second;
        }
        auto result = std::make_shared<const CanonResult>(canonicalize(*g));
        std::lock_guard<std::mutex> lock(mutex_);
        auto [it, inserted] = cache_.emplace(g.get(), std::make_pair(g, result));
        return it->second.second;
    }

    const std::string& code(const GraphPtr& g) { return get(g)->code; }

private:
    std::mutex mutex_;
    std::unordered_map<const LabeledGraph*,
                       std::pair<GraphPtr, std::shared_ptr<const CanonResult>>>
        cache_;
};

} // namespace dpo
