#pragma once

// Binarity decision and the classifications built on it.  A 0/1 assignment
// is valid when every hyperedge contains exactly one vertex valued 1; a
// hypergraph admitting one is binary (BMMPH), otherwise non-binary
// (NBMMPH).  Non-binary splits into KS (every hyperedge has exactly n
// vertices) and non-KS (some hyperedge is smaller).
//
// The solver branches on "which vertex of this edge is the 1" with unit
// propagation, in deterministic order, so witnesses are reproducible.

#include <algorithm>
#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "hypergraph.hpp"
#include "rng.hpp"
#include "structure.hpp"

namespace mmp {

using Assignment = std::map<Label, int>;

namespace detail {

// Indexed view: vertices as dense ints, edges as int lists.
struct Indexed {
    std::vector<Label> labels;
    std::vector<std::vector<int>> edges;
    std::vector<std::vector<int>> edges_of;  // vertex -> edge indices

    explicit Indexed(const Mmph& h) {
        std::map<Label, int> id;
        for (const auto& e : h.edges) {
            edges.emplace_back();
            for (const auto& v : e) {
                auto [it, fresh] = id.emplace(v, static_cast<int>(labels.size()));
                if (fresh) {
                    labels.push_back(v);
                    edges_of.emplace_back();
                }
                edges.back().push_back(it->second);
                edges_of[it->second].push_back(
                    static_cast<int>(edges.size()) - 1);
            }
        }
    }
};

// Backtracking search.  value: -1 unknown, 0, 1.  Propagation keeps two
// counters per edge: assigned zeros and whether a 1 is placed; an edge
// with a 1 forces 0 elsewhere, an edge with size-1 zeros forces the last
// vertex to 1, an edge of all zeros is a conflict.
class Solver {
public:
    explicit Solver(const Indexed& ix) : ix_(ix) {}

    std::optional<std::vector<int>> solve() {
        value_.assign(ix_.labels.size(), -1);
        zeros_.assign(ix_.edges.size(), 0);
        has_one_.assign(ix_.edges.size(), 0);
        if (search(0)) return value_;
        return std::nullopt;
    }

private:
    const Indexed& ix_;
    std::vector<int> value_;
    std::vector<int> zeros_;
    std::vector<char> has_one_;
    std::vector<int> trail_;

    bool assign(int v, int val) {
        if (value_[v] != -1) return value_[v] == val;
        value_[v] = val;
        trail_.push_back(v);
        for (int e : ix_.edges_of[v]) {
            if (val == 1) {
                if (has_one_[e]) return false;
                has_one_[e] = 1;
                for (int u : ix_.edges[e])
                    if (u != v && !assign(u, 0)) return false;
            } else {
                ++zeros_[e];
                size_t sz = ix_.edges[e].size();
                if (zeros_[e] == static_cast<int>(sz) && !has_one_[e])
                    return false;
                if (zeros_[e] == static_cast<int>(sz) - 1 && !has_one_[e]) {
                    for (int u : ix_.edges[e])
                        if (value_[u] == -1 && !assign(u, 1)) return false;
                }
            }
        }
        return true;
    }

    void undo(size_t mark) {
        while (trail_.size() > mark) {
            int v = trail_.back();
            trail_.pop_back();
            for (int e : ix_.edges_of[v]) {
                if (value_[v] == 1)
                    has_one_[e] = 0;
                else
                    --zeros_[e];
            }
            value_[v] = -1;
        }
    }

    bool search(size_t from) {
        // lowest-index edge without a 1
        size_t e = from;
        while (e < ix_.edges.size() && has_one_[e]) ++e;
        if (e == ix_.edges.size()) {
            // all edges satisfied; unknowns default to 0 (cannot violate:
            // every edge already has its 1)
            for (auto& v : value_)
                if (v == -1) v = 0;
            return true;
        }
        for (int v : ix_.edges[e]) {
            if (value_[v] != -1) continue;  // 0-forced or already tried
            size_t mark = trail_.size();
            if (assign(v, 1) && search(e + 1)) return true;
            undo(mark);
            if (!assign(v, 0)) return false;  // caller unwinds the trail
            // committing v=0 may have unit-propagated this edge's 1, which
            // subsumes the remaining branches
            if (has_one_[e]) return search(e + 1);
        }
        return false;
    }
};

}  // namespace detail

// Returns a valid assignment iff one exists; deterministic witness.
inline std::optional<Assignment> find_assignment(const Mmph& h) {
    detail::Indexed ix(h);
    detail::Solver solver(ix);
    auto values = solver.solve();
    if (!values) return std::nullopt;
    Assignment out;
    for (size_t i = 0; i < ix.labels.size(); ++i)
        out[ix.labels[i]] = (*values)[i];
    return out;
}

inline bool is_valid_assignment(const Mmph& h, const Assignment& a) {
    for (const auto& e : h.edges) {
        int ones = 0;
        for (const auto& v : e) {
            auto it = a.find(v);
            if (it == a.end()) return false;
            ones += it->second;
        }
        if (ones != 1) return false;
    }
    return true;
}

// Exhaustive 2^k count of valid assignments; the oracle for the solver.
inline std::uint64_t enumerate_assignments(const Mmph& h) {
    detail::Indexed ix(h);
    size_t k = ix.labels.size();
    if (k > 24) throw MmpError("enumerate_assignments limited to k <= 24");
    std::vector<std::uint32_t> masks;
    for (const auto& e : ix.edges) {
        std::uint32_t m = 0;
        for (int v : e) m |= std::uint32_t{1} << v;
        masks.push_back(m);
    }
    std::uint64_t count = 0;
    for (std::uint32_t a = 0; a < (std::uint32_t{1} << k); ++a) {
        bool ok = true;
        for (std::uint32_t m : masks)
            if (__builtin_popcount(a & m) != 1) {
                ok = false;
                break;
            }
        count += ok;
    }
    return count;
}

enum class Kind { BMMPH, KS_NBMMPH, NonKS_NBMMPH };

inline std::string to_string(Kind kind) {
    switch (kind) {
        case Kind::BMMPH: return "BMMPH";
        case Kind::KS_NBMMPH: return "KS-NBMMPH";
        default: return "nonKS-NBMMPH";
    }
}

struct Classification {
    Kind kind;
    std::optional<Assignment> witness;  // present iff BMMPH
};

// BMMPH if an assignment exists; otherwise KS iff every hyperedge has
// exactly n vertices.
inline Classification classify(const Mmph& h) {
    auto witness = find_assignment(h);
    if (witness) return {Kind::BMMPH, std::move(witness)};
    bool all_full = true;
    for (const auto& e : h.edges)
        if (e.size() != static_cast<size_t>(h.dimension)) {
            all_full = false;
            break;
        }
    return {all_full ? Kind::KS_NBMMPH : Kind::NonKS_NBMMPH, std::nullopt};
}

// True iff h is non-binary and removing any single hyperedge leaves a
// binary remainder (orphaned vertices dropped implicitly).
inline bool is_critical(const Mmph& h) {
    if (find_assignment(h)) return false;
    for (size_t i = 0; i < h.edges.size(); ++i) {
        Mmph rest;
        rest.dimension = h.dimension;
        for (size_t j = 0; j < h.edges.size(); ++j)
            if (j != i) rest.edges.push_back(h.edges[j]);
        if (rest.edges.empty()) return true;  // single-edge non-binary
        if (!find_assignment(rest)) return false;
    }
    return true;
}

// Greedily removes hyperedges in seeded random order while the remainder
// stays non-binary; the result is critical and its hyperedges are a
// subset of the input's, with vertex names preserved.
inline Mmph criticalize(const Mmph& h, SeededRng& rng) {
    if (find_assignment(h)) throw MmpError("criticalize requires a non-binary input");
    Mmph cur = h;
    for (;;) {
        std::vector<size_t> order(cur.edges.size());
        std::iota(order.begin(), order.end(), 0);
        rng.shuffle(order);
        bool committed = false;
        for (size_t i : order) {
            if (cur.edges.size() == 1) break;
            Mmph rest;
            rest.dimension = cur.dimension;
            for (size_t j = 0; j < cur.edges.size(); ++j)
                if (j != i) rest.edges.push_back(cur.edges[j]);
            if (!find_assignment(rest)) {
                cur = std::move(rest);
                committed = true;
                break;
            }
        }
        if (!committed) return cur;
    }
}

inline Mmph criticalize(const Mmph& h, std::uint64_t seed) {
    SeededRng rng(seed);
    return criticalize(h, rng);
}

// Parity proof: an odd number of hyperedges in which every vertex has
// even multiplicity.  Summing "exactly one 1 per edge" over all edges
// then counts each 1-valued vertex an even number of times, yet the total
// must equal the odd edge count -- impossible, so a parity proof implies
// non-binarity.
inline bool has_parity_proof(const Mmph& h) {
    if (h.edges.size() % 2 == 0) return false;
    for (const auto& [v, m] : multiplicities(h))
        if (m % 2 != 0) return false;
    return true;
}

enum class FullEdgeFilter { off, relaxed, strict };

// True iff some hyperedge has exactly n vertices (relaxed), all of
// multiplicity >= 2 (strict).
inline bool filter_full_edge_no_m1(const Mmph& h,
                                   FullEdgeFilter mode = FullEdgeFilter::strict) {
    if (mode == FullEdgeFilter::off) return true;
    std::map<Label, size_t> m;
    for (const auto& e : h.edges)
        for (const auto& v : e) ++m[v];
    for (const auto& e : h.edges) {
        if (e.size() != static_cast<size_t>(h.dimension)) continue;
        if (mode == FullEdgeFilter::relaxed) return true;
        bool all_m2 = true;
        for (const auto& v : e)
            if (m[v] < 2) {
                all_m2 = false;
                break;
            }
        if (all_m2) return true;
    }
    return false;
}

}  // namespace mmp
