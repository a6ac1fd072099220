#pragma once

// The M1/M2/M3 random pipelines that harvest critical non-KS NBMMPHs from
// master hypergraphs, plus (k,l)-distribution statistics.
//
//   M1: strip random hyperedges, drop multiplicity-1 vertices, then
//       criticalize whatever stayed non-binary.
//   M2: first add random hyperedges from a pool (the same master family,
//       so vertex names stay meaningful), then proceed as M1.
//   M3: delete random vertices until the hypergraph stops being KS, then
//       criticalize the non-KS remainder.
//
// All methods preserve vertex names, so a master's coordinatization
// restricts to every output.  Runs are independent: run i uses a child
// RNG derived from (seed, i), which makes result multisets reproducible
// and embarrassingly parallel.

#include <algorithm>
#include <cstdint>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "hypergraph.hpp"
#include "rng.hpp"
#include "solver.hpp"
#include "structure.hpp"

namespace mmp {

enum class Method { M1, M2, M3 };

inline std::string to_string(Method m) {
    switch (m) {
        case Method::M1: return "M1";
        case Method::M2: return "M2";
        default: return "M3";
    }
}

inline Method parse_method(const std::string& name) {
    if (name == "M1" || name == "m1") return Method::M1;
    if (name == "M2" || name == "m2") return Method::M2;
    if (name == "M3" || name == "m3") return Method::M3;
    throw MmpError("unknown method '" + name + "'");
}

struct GenerationConfig {
    Method method = Method::M1;
    std::uint64_t seed = 0;
    size_t runs = 1;
    bool require_nonks = true;
    FullEdgeFilter full_edge_filter = FullEdgeFilter::off;
    size_t max_strip = 1;    // M1/M2: strip count drawn from [1, max_strip]
    size_t max_add = 0;      // M2: 0 means "up to all available pool edges"
    bool batch_delete = false;  // M3: delete a batch per step instead of 1
    size_t max_delete = 1;   // M3 batch mode: batch size from [1, max_delete]
};

struct RunLog {
    size_t runs = 0;
    size_t emitted = 0;
    size_t binary_failures = 0;      // candidate went binary
    size_t structural_failures = 0;  // stripping/deletion left nothing usable
    size_t filtered_out = 0;         // valid candidate rejected by filters

    std::string summary() const {
        return "runs=" + std::to_string(runs) +
               " emitted=" + std::to_string(emitted) +
               " binary=" + std::to_string(binary_failures) +
               " structural=" + std::to_string(structural_failures) +
               " filtered=" + std::to_string(filtered_out);
    }
};

struct GenerationResult {
    std::vector<Mmph> emitted;
    RunLog log;
};

namespace detail {

// Criticalizes a non-binary candidate and applies the configured filters;
// emits into the result or counts the rejection.
inline void finish_candidate(const Mmph& candidate, const GenerationConfig& cfg,
                             SeededRng& rng, GenerationResult& result) {
    Mmph critical = criticalize(candidate, rng);
    if (cfg.require_nonks &&
        classify(critical).kind != Kind::NonKS_NBMMPH) {
        ++result.log.filtered_out;
        return;
    }
    if (!filter_full_edge_no_m1(critical, cfg.full_edge_filter)) {
        ++result.log.filtered_out;
        return;
    }
    result.emitted.push_back(std::move(critical));
    ++result.log.emitted;
}

inline void one_m1_run(const Mmph& master, const GenerationConfig& cfg,
                       SeededRng& rng, GenerationResult& result) {
    size_t limit = std::min(cfg.max_strip, master.edges.size() - 1);
    if (limit == 0) {
        ++result.log.structural_failures;
        return;
    }
    size_t count = rng.between(1, limit);
    Mmph candidate;
    try {
        candidate = drop_m1_vertices(strip_edges(master, count, rng));
    } catch (const MmpError&) {
        ++result.log.structural_failures;
        return;
    }
    if (find_assignment(candidate)) {
        ++result.log.binary_failures;
        return;
    }
    finish_candidate(candidate, cfg, rng, result);
}

inline void one_m2_run(const Mmph& base, const Mmph& pool,
                       const GenerationConfig& cfg, SeededRng& rng,
                       GenerationResult& result) {
    std::set<std::set<Label>> present;
    for (const auto& e : base.edges) present.insert({e.begin(), e.end()});
    std::vector<size_t> available;
    for (size_t i = 0; i < pool.edges.size(); ++i)
        if (!present.count({pool.edges[i].begin(), pool.edges[i].end()}))
            available.push_back(i);

    Mmph enlarged = base;
    enlarged.dimension = std::max(base.dimension, pool.dimension);
    if (!available.empty()) {
        rng.shuffle(available);
        size_t cap = cfg.max_add ? std::min(cfg.max_add, available.size())
                                 : available.size();
        size_t count = rng.between(1, cap);
        for (size_t i = 0; i < count; ++i)
            enlarged.edges.push_back(pool.edges[available[i]]);
    }
    one_m1_run(enlarged, cfg, rng, result);
}

inline void one_m3_run(const Mmph& master, const GenerationConfig& cfg,
                       SeededRng& rng, GenerationResult& result) {
    Mmph cur = master;
    for (;;) {
        Classification cls = classify(cur);
        if (cls.kind == Kind::BMMPH) {
            ++result.log.binary_failures;
            return;
        }
        if (cls.kind == Kind::NonKS_NBMMPH) {
            finish_candidate(cur, cfg, rng, result);
            return;
        }
        // still KS: delete random vertices and re-test
        std::vector<Label> verts = cur.vertices();
        size_t batch = 1;
        if (cfg.batch_delete)
            batch = rng.between(1, std::min(cfg.max_delete, verts.size()));
        rng.shuffle(verts);
        std::set<Label> victims(verts.begin(), verts.begin() + batch);
        try {
            cur = delete_vertices(cur, victims);
        } catch (const MmpError&) {
            ++result.log.structural_failures;
            return;
        }
    }
}

}  // namespace detail

// Runs the configured number of independent pipeline runs.  M2 requires a
// pool sharing labels with the base master.
inline GenerationResult generate(const Mmph& master, const GenerationConfig& cfg,
                                 const Mmph* pool = nullptr) {
    if (cfg.method == Method::M2) {
        if (!pool) throw MmpError("M2 requires an addition pool");
        std::set<Label> base_labels;
        for (const auto& e : master.edges)
            base_labels.insert(e.begin(), e.end());
        bool overlap = false;
        for (const auto& e : pool->edges)
            for (const auto& v : e)
                if (base_labels.count(v)) {
                    overlap = true;
                    break;
                }
        if (!overlap)
            throw MmpError("M2 pool shares no labels with the base master");
    }
    SeededRng root(cfg.seed);
    GenerationResult result;
    for (size_t run = 0; run < cfg.runs; ++run) {
        SeededRng rng = root.derive(run);
        ++result.log.runs;
        switch (cfg.method) {
            case Method::M1:
                detail::one_m1_run(master, cfg, rng, result);
                break;
            case Method::M2:
                detail::one_m2_run(master, *pool, cfg, rng, result);
                break;
            case Method::M3:
                detail::one_m3_run(master, cfg, rng, result);
                break;
        }
    }
    return result;
}

struct Distribution {
    std::map<std::pair<size_t, size_t>, size_t> cells;  // (k, l) -> count
    size_t total = 0;
};

inline Distribution collect_distribution(const std::vector<Mmph>& results) {
    Distribution d;
    for (const auto& h : results) {
        ++d.cells[{h.k(), h.l()}];
        ++d.total;
    }
    return d;
}

// CSV rows `k,l,count` sorted by (l, k), with a header line.
inline std::string distribution_csv(const Distribution& d) {
    std::vector<std::pair<std::pair<size_t, size_t>, size_t>> rows(
        d.cells.begin(), d.cells.end());
    std::sort(rows.begin(), rows.end(), [](const auto& x, const auto& y) {
        if (x.first.second != y.first.second)
            return x.first.second < y.first.second;
        return x.first.first < y.first.first;
    });
    std::string out = "k,l,count\n";
    for (const auto& [cell, count] : rows)
        out += std::to_string(cell.first) + "," + std::to_string(cell.second) +
               "," + std::to_string(count) + "\n";
    return out;
}

}  // namespace mmp
