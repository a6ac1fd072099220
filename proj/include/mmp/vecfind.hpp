#pragma once

// Master generation from vector components: enumerate all nonzero vectors
// over a component alphabet, canonicalize projectively (vectors equal up
// to a nonzero field scalar are one vertex), connect orthogonal pairs,
// and emit every n-clique as a hyperedge.  Vertices in no n-clique are
// dropped.  In dimension n no n+1 vectors can be mutually orthogonal, so
// n-cliques are exactly the maximal cliques of size n.

#include <algorithm>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "hypergraph.hpp"
#include "vectors.hpp"

namespace mmp {

struct Master {
    Mmph mmph;
    Coordinatization coord;
};

namespace detail {

// Bron-Kerbosch with pivoting over word-packed vertex sets, keeping only
// cliques of exactly `target` vertices.  `budget` caps recursion nodes.
class CliqueFinder {
public:
    CliqueFinder(const std::vector<std::vector<std::uint64_t>>& adj,
                 size_t vertex_count, size_t target, std::uint64_t budget)
        : adj_(adj),
          words_((vertex_count + 63) / 64),
          count_(vertex_count),
          target_(target),
          budget_(budget) {}

    std::vector<std::vector<int>> run() {
        std::vector<std::uint64_t> p(words_, 0), x(words_, 0);
        for (size_t v = 0; v < count_; ++v) p[v / 64] |= 1ull << (v % 64);
        std::vector<int> r;
        expand(r, p, x);
        return cliques_;
    }

private:
    const std::vector<std::vector<std::uint64_t>>& adj_;
    size_t words_, count_, target_;
    std::uint64_t budget_, nodes_ = 0;
    std::vector<std::vector<int>> cliques_;

    static size_t popcount(const std::vector<std::uint64_t>& s) {
        size_t n = 0;
        for (auto word : s) n += static_cast<size_t>(__builtin_popcountll(word));
        return n;
    }

    void expand(std::vector<int>& r, std::vector<std::uint64_t> p,
                std::vector<std::uint64_t> x) {
        if (++nodes_ > budget_)
            throw MmpError("clique enumeration budget exceeded");
        size_t psize = popcount(p);
        if (r.size() + psize < target_) return;  // cannot reach target
        if (psize == 0) {
            if (popcount(x) == 0 && r.size() == target_)
                cliques_.push_back(r);
            return;
        }
        // pivot: vertex of P | X with the most neighbours in P
        int pivot = -1;
        size_t best = 0;
        for (size_t w = 0; w < words_; ++w) {
            std::uint64_t both = p[w] | x[w];
            while (both) {
                int v = static_cast<int>(w * 64 +
                                         __builtin_ctzll(both & -both));
                both &= both - 1;
                size_t deg = 0;
                for (size_t u = 0; u < words_; ++u)
                    deg += static_cast<size_t>(
                        __builtin_popcountll(p[u] & adj_[v][u]));
                if (pivot < 0 || deg > best) {
                    pivot = v;
                    best = deg;
                }
            }
        }
        for (size_t w = 0; w < words_; ++w) {
            std::uint64_t candidates = p[w] & ~adj_[pivot][w];
            while (candidates) {
                int v = static_cast<int>(w * 64 +
                                         __builtin_ctzll(candidates & -candidates));
                candidates &= candidates - 1;
                std::vector<std::uint64_t> np(words_), nx(words_);
                for (size_t u = 0; u < words_; ++u) {
                    np[u] = p[u] & adj_[v][u];
                    nx[u] = x[u] & adj_[v][u];
                }
                r.push_back(v);
                expand(r, np, nx);
                r.pop_back();
                p[w] &= ~(1ull << (v % 64));
                x[w] |= 1ull << (v % 64);
            }
        }
    }
};

}  // namespace detail

// Scales v so its first nonzero component is 1.
inline ExactVector canonical_ray(const ExactVector& v) {
    for (const auto& x : v)
        if (!x.is_zero()) {
            ExactScalar inv = x.inverse();
            ExactVector out;
            out.reserve(v.size());
            for (const auto& y : v) out.push_back(inv * y);
            return out;
        }
    throw MmpError("zero vector has no canonical ray");
}

// Generates the master hypergraph of an alphabet: all projective vectors
// over components^n, hyperedges = n-cliques of the orthogonality graph.
// Output labels follow canonical vector order; edges are sorted by their
// vertex tuples; the result is deterministic.
inline Master vecfind_master(int n, const std::vector<ExactScalar>& components,
                             Ring ring, std::uint64_t budget = 500'000'000) {
    if (n < 2) throw MmpError("dimension must be at least 2");
    bool has_zero = false, has_nonzero = false;
    for (const auto& c : components) (c.is_zero() ? has_zero : has_nonzero) = true;
    if (!has_zero || !has_nonzero)
        throw MmpError("components must include 0 and a nonzero value");

    // all canonical rays over components^n, deduplicated and sorted
    std::map<ExactVector, int> seen;
    std::vector<size_t> odometer(n, 0);
    for (;;) {
        ExactVector v;
        v.reserve(n);
        bool zero = true;
        for (int i = 0; i < n; ++i) {
            const auto& c = components[odometer[i]];
            v.push_back(ExactScalar(ring, c.a(), c.b()));
            if (!c.is_zero()) zero = false;
        }
        if (!zero) seen.emplace(canonical_ray(v), 0);
        int pos = n - 1;
        while (pos >= 0 && ++odometer[pos] == components.size())
            odometer[pos--] = 0;
        if (pos < 0) break;
    }
    std::vector<ExactVector> rays;
    rays.reserve(seen.size());
    for (auto& [ray, idx] : seen) {
        idx = static_cast<int>(rays.size());
        rays.push_back(ray);
    }

    // orthogonality graph as packed adjacency rows
    size_t count = rays.size();
    size_t words = (count + 63) / 64;
    std::vector<std::vector<std::uint64_t>> adj(count,
                                                std::vector<std::uint64_t>(words, 0));
    for (size_t i = 0; i < count; ++i)
        for (size_t j = i + 1; j < count; ++j)
            if (inner_product(rays[i], rays[j]).is_zero()) {
                adj[i][j / 64] |= 1ull << (j % 64);
                adj[j][i / 64] |= 1ull << (i % 64);
            }

    detail::CliqueFinder finder(adj, count, static_cast<size_t>(n), budget);
    std::vector<std::vector<int>> cliques = finder.run();
    for (auto& c : cliques) std::sort(c.begin(), c.end());
    std::sort(cliques.begin(), cliques.end());

    // survivors: rays used by at least one clique, relabeled densely in
    // canonical order
    std::vector<int> rank(count, -1);
    for (const auto& c : cliques)
        for (int v : c) rank[v] = 0;
    int next = 0;
    for (size_t i = 0; i < count; ++i)
        if (rank[i] == 0) rank[i] = next++;

    Master out;
    out.mmph.dimension = n;
    for (const auto& c : cliques) {
        std::vector<Label> edge;
        edge.reserve(c.size());
        for (int v : c) edge.push_back(label_at(static_cast<size_t>(rank[v])));
        out.mmph.edges.push_back(std::move(edge));
    }
    out.coord.ring = ring;
    out.coord.dimension = n;
    for (size_t i = 0; i < count; ++i)
        if (rank[i] >= 0) {
            Label lab = label_at(static_cast<size_t>(rank[i]));
            out.coord.vectors.emplace(lab, rays[i]);
            out.coord.order.push_back(lab);
        }
    return out;
}

}  // namespace mmp
