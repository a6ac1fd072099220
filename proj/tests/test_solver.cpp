#include <catch2/catch_amalgamated.hpp>

#include <mmp/solver.hpp>
#include <mmp/structure.hpp>

#include "fixture_util.hpp"

using namespace mmp;

namespace {

Mmph fx(const std::string& name) {
    return parse_mmph(fixtures::mmp_text(name));
}

}  // namespace

TEST_CASE("find_assignment solves hand-checked instances") {
    // an odd cycle of 2-edges has no exactly-one-1 assignment
    CHECK_FALSE(find_assignment(parse_mmph("12,23,31.", 2)));
    // an even cycle has two
    auto square = find_assignment(parse_mmph("12,23,34,41.", 2));
    REQUIRE(square);
    CHECK(is_valid_assignment(parse_mmph("12,23,34,41.", 2), *square));
    // overlapping 4-edges
    Mmph trio = parse_mmph("1234,12LM,34NO.", 4);
    auto w = find_assignment(trio);
    REQUIRE(w);
    CHECK(is_valid_assignment(trio, *w));
}

TEST_CASE("is_valid_assignment demands exactly one 1 per hyperedge") {
    Mmph square = parse_mmph("12,23,34,41.", 2);
    Assignment good = {{"1", 1}, {"2", 0}, {"3", 1}, {"4", 0}};
    Assignment twos = {{"1", 1}, {"2", 1}, {"3", 1}, {"4", 0}};
    Assignment zeros = {{"1", 0}, {"2", 0}, {"3", 0}, {"4", 0}};
    Assignment partial = {{"1", 1}, {"2", 0}};
    CHECK(is_valid_assignment(square, good));
    CHECK_FALSE(is_valid_assignment(square, twos));
    CHECK_FALSE(is_valid_assignment(square, zeros));
    CHECK_FALSE(is_valid_assignment(square, partial));
}

TEST_CASE("enumerate_assignments counts hand-checked instances") {
    CHECK(enumerate_assignments(parse_mmph("12.", 2)) == 2);
    CHECK(enumerate_assignments(parse_mmph("12,23,31.", 2)) == 0);
    CHECK(enumerate_assignments(parse_mmph("12,23,34,41.", 2)) == 2);
    CHECK(enumerate_assignments(parse_mmph("1234,12LM,34NO.", 4)) == 8);
    CHECK(enumerate_assignments(fx("4d_8-3")) == 8);
    CHECK(enumerate_assignments(fx("3d_13-7")) == 14);
    CHECK(enumerate_assignments(fx("3d_8-7")) == 0);
}

TEST_CASE("solver agrees with the brute-force count on random instances") {
    SeededRng rng(20260814);
    for (int trial = 0; trial < 300; ++trial) {
        Mmph h;
        h.dimension = 3;
        size_t k = 3 + rng.below(8);
        size_t l = 1 + rng.below(6);
        std::set<std::set<Label>> seen;
        for (size_t e = 0; e < l; ++e) {
            std::set<Label> edge;
            size_t size = 2 + rng.below(2);
            while (edge.size() < size)
                edge.insert(label_at(rng.below(k)));
            if (edge.size() >= 2 && seen.insert(edge).second)
                h.edges.push_back({edge.begin(), edge.end()});
        }
        if (h.edges.empty()) continue;
        INFO(serialize_mmph(h));
        bool solvable = find_assignment(h).has_value();
        CHECK(solvable == (enumerate_assignments(h) > 0));
        if (solvable) CHECK(is_valid_assignment(h, *find_assignment(h)));
    }
}

TEST_CASE("corpus criticals are non-binary, their filled parents binary") {
    for (const char* name : {"3d_8-7", "4d_4-3", "5d_7-5", "5d_10-9",
                             "6d_11-7", "7d_14-8", "8d_15-9", "9d_13-6"}) {
        INFO(name);
        CHECK_FALSE(find_assignment(fx(name)));
    }
    for (const char* name : {"4d_8-3", "3d_13-7", "5d_16-5"}) {
        INFO(name);
        auto w = find_assignment(fx(name));
        REQUIRE(w);
        CHECK(is_valid_assignment(fx(name), *w));
    }
}

TEST_CASE("every single-edge remainder of the filled bug is binary") {
    Mmph h = fx("3d_13-7");
    for (size_t i = 0; i < h.edges.size(); ++i) {
        Mmph rest = strip_edges(h, {i});
        INFO("minus edge " << i);
        CHECK(find_assignment(rest));
    }
}

TEST_CASE("classify distinguishes BMMPH, KS, and non-KS") {
    Classification square = classify(parse_mmph("12,23,34,41.", 2));
    CHECK(square.kind == Kind::BMMPH);
    REQUIRE(square.witness);

    Classification peres = classify(fx("4d_24-24"));
    CHECK(peres.kind == Kind::KS_NBMMPH);
    CHECK_FALSE(peres.witness);

    Classification bug = classify(fx("3d_8-7"));
    CHECK(bug.kind == Kind::NonKS_NBMMPH);

    CHECK(to_string(Kind::BMMPH) == "BMMPH");
    CHECK(to_string(Kind::KS_NBMMPH) == "KS-NBMMPH");
    CHECK(to_string(Kind::NonKS_NBMMPH) == "nonKS-NBMMPH");
}

TEST_CASE("is_critical accepts the small criticals and rejects others") {
    CHECK(is_critical(fx("3d_8-7")));
    CHECK(is_critical(fx("4d_4-3")));
    CHECK(is_critical(fx("5d_7-5")));
    // binary, so not critical
    CHECK_FALSE(is_critical(fx("3d_13-7")));
    // a master: some single-edge remainder stays non-binary
    CHECK_FALSE(is_critical(fx("4d_24-24")));
}

TEST_CASE("criticalize yields a critical sub-hypergraph, reproducibly") {
    Mmph peres = fx("4d_24-24");
    Mmph a = criticalize(peres, 42);
    Mmph b = criticalize(peres, 42);
    Mmph c = criticalize(peres, 43);
    CHECK(same_edge_sets(a, b));
    CHECK(is_critical(a));
    CHECK(is_critical(c));
    CHECK(a.l() <= peres.l());
    CHECK_FALSE(find_assignment(a));
    // every edge of the result is an edge of the input
    std::set<std::set<Label>> pool;
    for (const auto& e : peres.edges) pool.insert({e.begin(), e.end()});
    for (const auto& e : a.edges)
        CHECK(pool.count(std::set<Label>(e.begin(), e.end())));

    // criticalizing a critical is the identity
    CHECK(same_edge_sets(criticalize(fx("3d_8-7"), 7), fx("3d_8-7")));
}

TEST_CASE("has_parity_proof matches the corpus parity facts") {
    for (const char* name : {"3d_8-7", "4d_4-3", "5d_7-5", "4d_16-9b",
                             "8d_15-9", "8d_36-9"}) {
        INFO(name);
        CHECK(has_parity_proof(fx(name)));
    }
    for (const char* name : {"4d_16-9a", "3d_13-7", "9d_13-6", "4d_8-3"}) {
        INFO(name);
        CHECK_FALSE(has_parity_proof(fx(name)));
    }
    CHECK(has_parity_proof(parse_mmph("12,23,31.", 2)));
    CHECK_FALSE(has_parity_proof(parse_mmph("12,23,34,41.", 2)));
}

TEST_CASE("parity proofs imply non-binarity on random hypergraphs") {
    SeededRng rng(99);
    int parity_hits = 0;
    for (int trial = 0; trial < 2000; ++trial) {
        Mmph h;
        h.dimension = 3;
        size_t k = 3 + rng.below(6);
        size_t l = 1 + rng.below(7);
        std::set<std::set<Label>> seen;
        for (size_t e = 0; e < l; ++e) {
            std::set<Label> edge;
            size_t size = 2 + rng.below(2);
            while (edge.size() < size)
                edge.insert(label_at(rng.below(k)));
            if (seen.insert(edge).second)
                h.edges.push_back({edge.begin(), edge.end()});
        }
        if (h.edges.empty()) continue;
        if (has_parity_proof(h)) {
            ++parity_hits;
            INFO(serialize_mmph(h));
            CHECK(enumerate_assignments(h) == 0);
        }
    }
    CHECK(parity_hits > 0);  // the property was actually exercised
}

TEST_CASE("full-edge filters check edge size and multiplicities") {
    Mmph bug = fx("3d_8-7");  // edges 123 and 567 are full, all m = 2
    CHECK(filter_full_edge_no_m1(bug, FullEdgeFilter::off));
    CHECK(filter_full_edge_no_m1(bug, FullEdgeFilter::relaxed));
    CHECK(filter_full_edge_no_m1(bug, FullEdgeFilter::strict));

    // full edge exists but carries multiplicity-1 vertices
    Mmph weak = parse_mmph("123,14.", 3);
    CHECK(filter_full_edge_no_m1(weak, FullEdgeFilter::relaxed));
    CHECK_FALSE(filter_full_edge_no_m1(weak, FullEdgeFilter::strict));

    // no full edge at all
    Mmph none = parse_mmph("12,23.", 3);
    CHECK_FALSE(filter_full_edge_no_m1(none, FullEdgeFilter::relaxed));
    CHECK_FALSE(filter_full_edge_no_m1(none, FullEdgeFilter::strict));
    CHECK(filter_full_edge_no_m1(none, FullEdgeFilter::off));
}
