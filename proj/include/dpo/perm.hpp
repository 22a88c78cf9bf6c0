#pragma once

#include <algorithm>
#include <cstdint>
#include <limits>
#include <vector>

#include "dpo/error.hpp"
#include "dpo/graph.hpp"

namespace dpo {

/// Permutation of 0..degree-1 as its image vector.
using Perm = std::vector<Vertex>;

inline Perm identity_perm(std::size_t degree) {
    Perm p(degree);
    for (std::size_t i = 0; i < degree; ++i)
        p[i] = static_cast<Vertex>(i);
    return p;
}

inline bool is_identity(const Perm& p) {
    for (std::size_t i = 0; i < p.size(); ++i)
        if (p[i] != i)
            return false;
    return true;
}

/// (a * b)(x) = a(b(x))
inline Perm compose(const Perm& a, const Perm& b) {
    Perm r(b.size());
    for (std::size_t i = 0; i < b.size(); ++i)
        r[i] = a[b[i]];
    return r;
}

inline Perm inverse(const Perm& p) {
    Perm r(p.size());
    for (std::size_t i = 0; i < p.size(); ++i)
        r[p[i]] = static_cast<Vertex>(i);
    return r;
}

inline void check_permutation(std::size_t degree, const Perm& p) {
    if (p.size() != degree)
        throw InvalidPermutation("degree mismatch");
    std::vector<bool> seen(degree, false);
    for (Vertex v : p) {
        if (v >= degree || seen[v])
            throw InvalidPermutation("image vector is not a bijection");
        seen[v] = true;
    }
}

/// Permutation group as a base and strong generating set, built with the
/// deterministic Schreier-Sims algorithm. The base may start with a caller
/// prescribed prefix, which is how pointwise stabilizers and the ordered
/// minimality search address the chain.
class PermGroup {
public:
    struct Level {
        Vertex base_point = 0;
        std::vector<Perm> gens;            // generators fixing all earlier base points
        std::vector<std::int32_t> orbit_pos; // point -> index into orbit, or -1
        std::vector<Vertex> orbit;           // BFS order, orbit[0] == base_point
        std::vector<Perm> transversal;       // transversal[i] maps base_point to orbit[i]
    };

    PermGroup() = default;

    static PermGroup build(std::size_t degree, const std::vector<Perm>& generators,
                           const std::vector<Vertex>& base_prefix = {}) {
        for (const Perm& g : generators)
            check_permutation(degree, g);
        PermGroup g;
        g.degree_ = degree;
        for (Vertex b : base_prefix)
            g.push_level(b);
        for (const Perm& gen : generators)
            g.place_generator(gen);
        for (std::size_t i = g.levels_.size(); i-- > 0;)
            g.close_level(i);
        return g;
    }

    std::size_t degree() const { return degree_; }
    const std::vector<Level>& levels() const { return levels_; }

    bool contains(const Perm& p) const {
        if (p.size() != degree_)
            return false;
        Perm residue;
        return sift(p, 0, residue) && is_identity(residue);
    }

    /// Group order, saturating at max. `exact` reports whether it overflowed.
    unsigned long long order(bool* exact = nullptr) const {
        unsigned long long o = 1;
        bool ok = true;
        for (const auto& lvl : levels_) {
            unsigned long long s = lvl.orbit.size();
            if (s != 0 && o > std::numeric_limits<unsigned long long>::max() / s) {
                ok = false;
                o = std::numeric_limits<unsigned long long>::max();
                break;
            }
            o *= s;
        }
        if (exact)
            *exact = ok;
        return o;
    }

    /// Enumerates distinct elements, stopping after `cap` and reporting the
    /// truncation. The identity is always first.
    std::vector<Perm> elements(std::size_t cap, bool* truncated = nullptr) const {
        std::vector<Perm> out;
        bool trunc = false;
        Perm id = identity_perm(degree_);
        enumerate(0, id, cap, out, trunc);
        if (truncated)
            *truncated = trunc;
        return out;
    }

    /// Subgroup fixing every point in `points` pointwise.
    PermGroup pointwise_stabilizer(const std::vector<Vertex>& points) const {
        std::vector<Perm> gens;
        for (const auto& lvl : levels_)
            for (const auto& g : lvl.gens)
                gens.push_back(g);
        PermGroup chain = build(degree_, gens, points);
        std::vector<Perm> fixing;
        if (points.size() < chain.levels_.size())
            fixing = chain.levels_[points.size()].gens;
        return build(degree_, fixing);
    }

    std::vector<Perm> strong_generators() const {
        return levels_.empty() ? std::vector<Perm>{} : levels_[0].gens;
    }

private:
    void push_level(Vertex b) {
        Level lvl;
        lvl.base_point = b;
        lvl.orbit_pos.assign(degree_, -1);
        lvl.orbit = {b};
        lvl.orbit_pos[b] = 0;
        lvl.transversal = {identity_perm(degree_)};
        levels_.push_back(std::move(lvl));
    }

    // Adds g to every level whose base prefix it fixes, extending the base if
    // g fixes all current base points.
    void place_generator(const Perm& g) {
        if (is_identity(g))
            return;
        std::size_t j = 0;
        while (j < levels_.size() && g[levels_[j].base_point] == levels_[j].base_point)
            ++j;
        if (j == levels_.size()) {
            for (Vertex v = 0; v < degree_; ++v)
                if (g[v] != v) {
                    push_level(v);
                    break;
                }
        }
        for (std::size_t l = 0; l <= j && l < levels_.size(); ++l)
            levels_[l].gens.push_back(g);
    }

    void recompute_orbit(std::size_t i) {
        Level& lvl = levels_[i];
        lvl.orbit_pos.assign(degree_, -1);
        lvl.orbit = {lvl.base_point};
        lvl.orbit_pos[lvl.base_point] = 0;
        lvl.transversal = {identity_perm(degree_)};
        for (std::size_t qi = 0; qi < lvl.orbit.size(); ++qi) {
            Vertex delta = lvl.orbit[qi];
            for (const Perm& s : lvl.gens) {
                Vertex img = s[delta];
                if (lvl.orbit_pos[img] < 0) {
                    lvl.orbit_pos[img] = static_cast<std::int32_t>(lvl.orbit.size());
                    lvl.orbit.push_back(img);
                    lvl.transversal.push_back(compose(s, lvl.transversal[qi]));
                }
            }
        }
    }

    // Strips p through levels starting at `from`; returns false plus the
    // residue when an orbit lookup fails.
    bool sift(Perm p, std::size_t from, Perm& residue) const {
        for (std::size_t i = from; i < levels_.size(); ++i) {
            const Level& lvl = levels_[i];
            Vertex img = p[lvl.base_point];
            if (lvl.orbit_pos[img] < 0) {
                residue = std::move(p);
                return false;
            }
            p = compose(inverse(lvl.transversal[lvl.orbit_pos[img]]), p);
        }
        residue = std::move(p);
        return true;
    }

    // Verifies the orbit-stabilizer property at level i, pushing any
    // non-trivial Schreier residue into the deeper levels and re-closing them.
    // levels_ may reallocate during recursion, so no Level reference is held
    // across the inner calls.
    void close_level(std::size_t i) {
        recompute_orbit(i);
        const std::size_t orbit_size = levels_[i].orbit.size();
        const std::size_t gen_count = levels_[i].gens.size();
        for (std::size_t qi = 0; qi < orbit_size; ++qi) {
            for (std::size_t si = 0; si < gen_count; ++si) {
                Perm x = compose(levels_[i].gens[si], levels_[i].transversal[qi]);
                Vertex img = x[levels_[i].base_point];
                Perm schreier =
                    compose(inverse(levels_[i].transversal[levels_[i].orbit_pos[img]]), x);
                if (is_identity(schreier))
                    continue;
                Perm residue;
                bool sank = sift(std::move(schreier), i + 1, residue);
                if (sank && is_identity(residue))
                    continue;
                std::size_t j = i + 1;
                while (j < levels_.size() && residue[levels_[j].base_point] == levels_[j].base_point)
                    ++j;
                if (j == levels_.size()) {
                    for (Vertex v = 0; v < degree_; ++v)
                        if (residue[v] != v) {
                            push_level(v);
                            break;
                        }
                }
                for (std::size_t l = i + 1; l <= j && l < levels_.size(); ++l)
                    levels_[l].gens.push_back(residue);
                for (std::size_t l = std::min(j, levels_.size() - 1); l >= i + 1; --l) {
                    close_level(l);
                    if (l == i + 1)
                        break;
                }
            }
        }
    }

    void enumerate(std::size_t level, const Perm& acc, std::size_t cap, std::vector<Perm>& out,
                   bool& trunc) const {
        if (trunc)
            return;
        if (level == levels_.size()) {
            if (out.size() >= cap) {
                trunc = true;
                return;
            }
            out.push_back(acc);
            return;
        }
        for (const Perm& t : levels_[level].transversal) {
            enumerate(level + 1, compose(acc, t), cap, out, trunc);
            if (trunc)
                return;
        }
    }

    std::size_t degree_ = 0;
    std::vector<Level> levels_;
};

inline PermGroup build_group(std::size_t degree, const std::vector<Perm>& generators) {
    return PermGroup::build(degree, generators);
}

/// Decides whether some element of the group generated by `generators` that
/// fixes `fixed` pointwise maps the sequence `w` to something lexicographically
/// smaller than `v` (positionwise). Exact for groups of any order: the walk
/// follows a stabilizer chain instead of enumerating elements.
inline bool exists_smaller_image(std::size_t degree, const std::vector<Perm>& generators,
                                 const std::vector<Vertex>& fixed, const std::vector<Vertex>& w,
                                 const std::vector<Vertex>& v) {
    std::vector<Vertex> base(fixed);
    base.insert(base.end(), w.begin(), w.end());
    PermGroup chain = PermGroup::build(degree, generators, base);
    const auto& levels = chain.levels();
    Perm u = identity_perm(degree);
    for (std::size_t p = 0; p < w.size(); ++p) {
        std::size_t lvl_index = fixed.size() + p;
        if (lvl_index >= levels.size()) {
            // Chain ended early: remaining stabilizer is trivial.
            for (std::size_t q = p; q < w.size(); ++q) {
                if (u[w[q]] < v[q])
                    return true;
                if (u[w[q]] > v[q])
                    return false;
            }
            return false;
        }
        const auto& lvl = levels[lvl_index];
        std::int32_t descend = -1;
        for (std::size_t qi = 0; qi < lvl.orbit.size(); ++qi) {
            Vertex img = u[lvl.orbit[qi]];
            if (img < v[p])
                return true;
            if (img == v[p])
                descend = static_cast<std::int32_t>(qi);
        }
        if (descend < 0)
            return false;
        u = compose(u, lvl.transversal[descend]);
    }
    return false; // maps w exactly onto v, not smaller
}

} // namespace dpo
