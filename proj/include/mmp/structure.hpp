#pragma once

// Structural transformations on MMPHs: edge stripping, multiplicity-1
// vertex dropping, vertex deletion, filling to uniform edge size,
// connected components, and loop order.  All operations preserve vertex
// names, so a coordinatization of the input restricts to one of the
// output.

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <set>
#include <string>
#include <vector>

#include "hypergraph.hpp"
#include "rng.hpp"

namespace mmp {

// Removes the given hyperedges (by index).  Remaining edges keep order;
// vertices left without any edge disappear implicitly.
inline Mmph strip_edges(const Mmph& h, const std::set<size_t>& drop) {
    if (drop.size() >= h.edges.size())
        throw MmpError("cannot strip all hyperedges");
    for (size_t i : drop)
        if (i >= h.edges.size())
            throw MmpError("edge index " + std::to_string(i) + " out of range");
    Mmph out;
    out.dimension = h.dimension;
    for (size_t i = 0; i < h.edges.size(); ++i)
        if (!drop.count(i)) out.edges.push_back(h.edges[i]);
    return out;
}

// Removes `count` hyperedges chosen uniformly at random.
inline Mmph strip_edges(const Mmph& h, size_t count, SeededRng& rng) {
    if (count >= h.edges.size())
        throw MmpError("cannot strip all hyperedges");
    std::vector<size_t> idx(h.edges.size());
    std::iota(idx.begin(), idx.end(), 0);
    rng.shuffle(idx);
    return strip_edges(h, std::set<size_t>(idx.begin(), idx.begin() + count));
}

// Drops every vertex of multiplicity 1; hyperedges reduced below 2
// vertices are deleted.  Single pass by default; with fixpoint, repeats
// until no multiplicity-1 vertex remains (edge deletion can create new
// ones).
inline Mmph drop_m1_vertices(const Mmph& h, bool fixpoint = false) {
    Mmph cur = h;
    for (;;) {
        std::map<Label, size_t> m;
        for (const auto& e : cur.edges)
            for (const auto& v : e) ++m[v];
        bool any_m1 = false;
        Mmph next;
        next.dimension = cur.dimension;
        for (const auto& e : cur.edges) {
            std::vector<Label> kept;
            for (const auto& v : e)
                if (m[v] >= 2)
                    kept.push_back(v);
                else
                    any_m1 = true;
            if (kept.size() >= 2) next.edges.push_back(std::move(kept));
        }
        if (next.edges.empty())
            throw MmpError("dropping multiplicity-1 vertices left no hyperedges");
        // deduplicate edges that collapsed onto each other
        std::set<std::set<Label>> seen;
        Mmph dedup;
        dedup.dimension = next.dimension;
        for (auto& e : next.edges)
            if (seen.insert({e.begin(), e.end()}).second)
                dedup.edges.push_back(std::move(e));
        if (!any_m1 || !fixpoint) return dedup;
        cur = std::move(dedup);
    }
}

// Deletes the given vertices from every hyperedge.  Hyperedges reduced
// below 2 vertices are deleted; exact duplicates merge; edges that become
// subsets of other edges are kept (removing a constraint could flip a
// non-binary hypergraph to binary).
inline Mmph delete_vertices(const Mmph& h, const std::set<Label>& victims) {
    std::set<Label> present;
    for (const auto& e : h.edges) present.insert(e.begin(), e.end());
    for (const auto& v : victims)
        if (!present.count(v))
            throw MmpError("vertex '" + v + "' not present");
    Mmph out;
    out.dimension = h.dimension;
    std::set<std::set<Label>> seen;
    for (const auto& e : h.edges) {
        std::vector<Label> kept;
        for (const auto& v : e)
            if (!victims.count(v)) kept.push_back(v);
        if (kept.size() < 2) continue;
        if (seen.insert({kept.begin(), kept.end()}).second)
            out.edges.push_back(std::move(kept));
    }
    if (out.edges.empty())
        throw MmpError("vertex deletion left no hyperedges");
    return out;
}

// Adds fresh vertices until every hyperedge has exactly n.  Fresh labels
// are the first labels in MMP alphabet order not already used, allocated
// iterating edges in order.
inline Mmph fill(const Mmph& h, int n) {
    if (n < static_cast<int>(h.max_edge_size()))
        throw MmpError("fill dimension smaller than largest hyperedge");
    std::set<Label> used;
    for (const auto& e : h.edges) used.insert(e.begin(), e.end());
    Mmph out;
    out.dimension = n;
    size_t cursor = 0;
    auto fresh = [&] {
        while (used.count(label_at(cursor))) ++cursor;
        Label lab = label_at(cursor);
        used.insert(lab);
        return lab;
    };
    for (const auto& e : h.edges) {
        std::vector<Label> edge = e;
        while (edge.size() < static_cast<size_t>(n)) edge.push_back(fresh());
        out.edges.push_back(std::move(edge));
    }
    return out;
}

// Partitions into maximal parts whose edges are connected by shared
// vertices.  Parts preserve edge order; their edge lists partition the
// input's.
inline std::vector<Mmph> connected_components(const Mmph& h) {
    size_t l = h.edges.size();
    std::vector<size_t> parent(l);
    std::iota(parent.begin(), parent.end(), 0);
    std::function<size_t(size_t)> find = [&](size_t x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    };
    std::map<Label, size_t> first_edge;
    for (size_t i = 0; i < l; ++i)
        for (const auto& v : h.edges[i]) {
            auto [it, fresh] = first_edge.emplace(v, i);
            if (!fresh) parent[find(i)] = find(it->second);
        }
    std::map<size_t, Mmph> parts;
    for (size_t i = 0; i < l; ++i) {
        Mmph& part = parts[find(i)];
        part.edges.push_back(h.edges[i]);
    }
    std::vector<Mmph> out;
    for (auto& [root, part] : parts) {
        part.dimension = h.dimension;
        out.push_back(std::move(part));
    }
    return out;
}

struct LoopReport {
    size_t max_order = 0;
    std::vector<size_t> witness;  // edge index cycle realizing max_order
};

// Loop order.  A loop of order r >= 3 is a cyclic sequence of r distinct
// hyperedges in which consecutive edges intersect in exactly one vertex
// of multiplicity 2 in the whole hypergraph, the r connecting vertices
// are pairwise distinct, and non-adjacent edges of the cycle are disjoint
// (a "loose cycle" through simple connectors).  A loop of order 2 is a
// pair of edges sharing at least 2 vertices.  max_order is the largest r
// realized, 0 if none.
//
// This definition is a reconstruction; it is isolated here so it can be
// swapped, and it is used only for descriptive reports, never for
// classification.  The search is exponential in principle, so it carries
// a node budget.
inline LoopReport max_loop_order(const Mmph& h, size_t budget = 10'000'000) {
    size_t l = h.edges.size();
    std::vector<std::set<Label>> sets;
    sets.reserve(l);
    for (const auto& e : h.edges) sets.emplace_back(e.begin(), e.end());

    auto common = [&](size_t i, size_t j) {
        std::vector<Label> out;
        for (const auto& v : sets[i])
            if (sets[j].count(v)) out.push_back(v);
        return out;
    };

    LoopReport report;
    // order 2: any pair sharing >= 2 vertices
    for (size_t i = 0; i < l && report.max_order < 2; ++i)
        for (size_t j = i + 1; j < l; ++j)
            if (common(i, j).size() >= 2) {
                report.max_order = 2;
                report.witness = {i, j};
                break;
            }

    // adjacency: edges sharing exactly one multiplicity-2 vertex, with
    // that connector
    std::map<Label, size_t> mult;
    for (const auto& e : h.edges)
        for (const auto& v : e) ++mult[v];
    std::vector<std::vector<std::pair<size_t, Label>>> adj(l);
    for (size_t i = 0; i < l; ++i)
        for (size_t j = 0; j < l; ++j) {
            if (i == j) continue;
            auto c = common(i, j);
            if (c.size() == 1 && mult[c[0]] == 2)
                adj[i].push_back({j, c[0]});
        }

    // DFS over loose chains; each cycle is found once, rooted at its
    // least edge index.
    std::vector<char> on_path(l, 0);
    std::vector<size_t> path;
    std::set<Label> connectors;
    size_t nodes = 0;
    std::function<void(size_t, size_t)> dfs = [&](size_t start, size_t at) {
        if (++nodes > budget)
            throw MmpError("loop search budget exceeded");
        for (const auto& [next, conn] : adj[at]) {
            if (next == start && path.size() >= 3 && !connectors.count(conn)) {
                // closing: cycle edges non-adjacent to start (all path
                // entries except the second and the current last) must be
                // disjoint from it
                bool valid = true;
                for (size_t i = 2; i + 1 < path.size(); ++i)
                    if (!common(path[i], start).empty()) {
                        valid = false;
                        break;
                    }
                if (valid && path.size() > report.max_order) {
                    report.max_order = path.size();
                    report.witness = path;
                }
            }
            if (next <= start || on_path[next] || connectors.count(conn))
                continue;
            // non-adjacent edges of the cycle must be disjoint: while the
            // chain is open, next may intersect only its predecessor `at`
            // and possibly start (checked when the cycle closes)
            bool disjoint = true;
            for (size_t p : path)
                if (p != at && p != start && !common(p, next).empty()) {
                    disjoint = false;
                    break;
                }
            if (!disjoint) continue;
            on_path[next] = 1;
            path.push_back(next);
            connectors.insert(conn);
            dfs(start, next);
            connectors.erase(conn);
            path.pop_back();
            on_path[next] = 0;
        }
    };
    for (size_t s = 0; s + 2 < l; ++s) {
        on_path[s] = 1;
        path = {s};
        dfs(s, s);
        on_path[s] = 0;
    }
    return report;
}

}  // namespace mmp
