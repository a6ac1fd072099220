#include <catch2/catch_amalgamated.hpp>

#include <mmp/hypergraph.hpp>

#include "fixture_util.hpp"

using namespace mmp;

TEST_CASE("label alphabet holds the 90 legal characters in order") {
    const std::string& a = label_alphabet();
    REQUIRE(a.size() == 90);
    CHECK(a.substr(0, 9) == "123456789");
    CHECK(a.substr(9, 26) == "ABCDEFGHIJKLMNOPQRSTUVWXYZ");
    CHECK(a.substr(35, 26) == "abcdefghijklmnopqrstuvwxyz");
    CHECK(a.substr(61) == R"(!"#$%&'()*-/:;<=>?@[\]^_`{|}~)");
    CHECK(a.find('0') == std::string::npos);
    CHECK(a.find('+') == std::string::npos);
    CHECK(a.find(',') == std::string::npos);
    CHECK(a.find('.') == std::string::npos);
    CHECK(a.find(' ') == std::string::npos);
}

TEST_CASE("label_at and label_index are inverse") {
    CHECK(label_at(0) == "1");
    CHECK(label_at(89) == "~");
    CHECK(label_at(90) == "+1");
    CHECK(label_at(183) == "++" + std::string(1, label_alphabet()[3]));
    for (size_t i : {size_t{0}, size_t{13}, size_t{89}, size_t{90}, size_t{200}})
        CHECK(label_index(label_at(i)) == i);
    CHECK_THROWS_AS(label_index("0"), MmpError);
    CHECK_THROWS_AS(label_index("+"), MmpError);
    CHECK_THROWS_AS(label_index(""), MmpError);
}

TEST_CASE("parse handles edges, inferred dimension, and k/l") {
    Mmph h = parse_mmph("123,34,45,567,78,81,26.");
    CHECK(h.k() == 8);
    CHECK(h.l() == 7);
    CHECK(h.dimension == 3);
    CHECK(h.edges[0] == std::vector<Label>{"1", "2", "3"});
    CHECK(h.vertices().front() == "1");
}

TEST_CASE("parse accepts single-edge strings with explicit dimension") {
    Mmph h = parse_mmph("12.", 3);
    CHECK(h.k() == 2);
    CHECK(h.l() == 1);
    CHECK(h.dimension == 3);
}

TEST_CASE("parse binds '+' prefixes to the following base character") {
    Mmph h = parse_mmph("1+A2,+A3.");
    CHECK(h.k() == 4);
    CHECK(h.l() == 2);
    CHECK(h.edges[0] == std::vector<Label>{"1", "+A", "2"});
    CHECK(h.edges[1] == std::vector<Label>{"+A", "3"});
}

TEST_CASE("parse ignores whitespace anywhere between tokens") {
    Mmph wrapped = parse_mmph("12 3,3\n4,45,5 67,\t78,81,26.\n");
    CHECK(serialize_mmph(wrapped) == "123,34,45,567,78,81,26.");
}

TEST_CASE("parse rejects malformed strings") {
    CHECK_THROWS_WITH(parse_mmph("12,34"), Catch::Matchers::ContainsSubstring(
                                               "missing terminal period"));
    CHECK_THROWS_WITH(parse_mmph("10,23."),
                      Catch::Matchers::ContainsSubstring("illegal character"));
    CHECK_THROWS_WITH(parse_mmph("12,,34."),
                      Catch::Matchers::ContainsSubstring("empty hyperedge"));
    CHECK_THROWS_WITH(parse_mmph("12,34,+."),
                      Catch::Matchers::ContainsSubstring("illegal character"));
    CHECK_THROWS_WITH(parse_mmph("12+"), Catch::Matchers::ContainsSubstring(
                                             "dangling '+'"));
    CHECK_THROWS_WITH(parse_mmph("123.", 2), Catch::Matchers::ContainsSubstring(
                                                 "dimension"));
    CHECK_THROWS_WITH(parse_mmph("12,12."),
                      Catch::Matchers::ContainsSubstring("duplicate hyperedge"));
    CHECK_THROWS_WITH(parse_mmph("121."), Catch::Matchers::ContainsSubstring(
                                              "repeated vertex"));
    CHECK_THROWS_WITH(parse_mmph("12. 34."), Catch::Matchers::ContainsSubstring(
                                                 "after terminal period"));
}

TEST_CASE("serialize is the inverse of parse") {
    for (const char* s : {"12,34,1234.", "12.", "1+A2,+A3.", "123,45,16."}) {
        Mmph h = parse_mmph(s, 4);
        CHECK(serialize_mmph(h) == s);
        CHECK(same_edge_sets(parse_mmph(serialize_mmph(h), 4), h));
    }
}

TEST_CASE("every corpus string parses with its manifest counts") {
    for (const auto& e : fixtures::manifest()) {
        if (!e.has_string) continue;
        INFO(e.name);
        Mmph h = parse_mmph(fixtures::mmp_text(e.name));
        CHECK(h.k() == e.k);
        CHECK(h.l() == e.l);
        CHECK(h.dimension == e.dim);
    }
}

TEST_CASE("corpus strings reserialize byte-identically modulo whitespace") {
    for (const auto& e : fixtures::manifest()) {
        if (!e.has_string) continue;
        INFO(e.name);
        std::string text = fixtures::mmp_text(e.name);
        std::string stripped;
        for (char c : text)
            if (!std::isspace(static_cast<unsigned char>(c))) stripped += c;
        CHECK(serialize_mmph(parse_mmph(text)) == stripped);
    }
}

TEST_CASE("validate reports sizes, intersections, and duplicates") {
    // item-4 violation: 3 shared vertices > n-2 = 2
    Mmph bad = parse_mmph("1234,1235.", 4);
    ValidationReport r = validate(bad);
    REQUIRE_FALSE(r.lenient_pass);
    CHECK(r.violations.size() == 1);
    CHECK(r.violations[0].rule == 4);

    // the 8-7: lenient-clean, but strict mode flags one-vertex overlaps
    Mmph bug = parse_mmph(fixtures::mmp_text("3d_8-7"));
    CHECK(validate(bug).lenient_pass);
    CHECK(validate(bug).violations.empty());
    ValidationReport strict = validate(bug, ValidationMode::strict);
    CHECK(strict.lenient_pass);
    CHECK_FALSE(strict.strict_pass);
    for (const auto& v : strict.violations) CHECK(v.rule == 3);

    // oversized edge
    Mmph wide = parse_mmph("123,45.", 3);
    wide.dimension = 2;
    CHECK_FALSE(validate(wide).lenient_pass);

    // programmatic duplicate edges
    Mmph dup;
    dup.dimension = 4;
    dup.edges = {{"1", "2"}, {"2", "1"}};
    ValidationReport dr = validate(dup);
    REQUIRE_FALSE(dr.lenient_pass);
    CHECK(dr.violations[0].rule == 6);
}

TEST_CASE("the Peres 24-24 is item-4 clean") {
    Mmph peres = parse_mmph(fixtures::mmp_text("4d_24-24"));
    ValidationReport r = validate(peres);
    CHECK(r.lenient_pass);
    CHECK(r.violations.empty());
}

TEST_CASE("multiplicities count hyperedge membership") {
    Mmph bug = parse_mmph(fixtures::mmp_text("3d_8-7"));
    size_t total = 0;
    for (const auto& [v, m] : multiplicities(bug)) {
        total += m;
        if (v == "3") CHECK(m == 2);
    }
    size_t edge_sum = 0;
    for (const auto& e : bug.edges) edge_sum += e.size();
    CHECK(total == edge_sum);

    Mmph single = parse_mmph("12.", 3);
    for (const auto& [v, m] : multiplicities(single)) CHECK(m == 1);
}
