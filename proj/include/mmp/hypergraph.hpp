#pragma once

// MMPH hypergraphs: the ASCII string format, parsing, serialization, and
// well-formedness validation.
//
// An MMPH string encodes hyperedges as runs of single-character vertex
// labels separated by commas and terminated by a period.  A label is any
// printable ASCII character except space, '0', '+', ',' and '.'; once the
// 90 single characters run out, labels repeat with one or more '+'
// prefixes ("+A", "++A", ...).  Whitespace is ignored everywhere, so
// line-wrapped strings parse unchanged.

#include <algorithm>
#include <cstdint>
#include <map>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

namespace mmp {

// Error type for all domain failures in this library (parse errors,
// precondition violations, budget exhaustion).
struct MmpError : std::runtime_error {
    explicit MmpError(const std::string& what) : std::runtime_error(what) {}
};

// A vertex label: one base character with zero or more '+' prefixes.
using Label = std::string;

// The 90 legal base characters in MMP alphabet order: digits without '0',
// upper case, lower case, then the remaining punctuation in ASCII order.
inline const std::string& label_alphabet() {
    static const std::string a = [] {
        std::string s;
        for (char c = '1'; c <= '9'; ++c) s += c;
        for (char c = 'A'; c <= 'Z'; ++c) s += c;
        for (char c = 'a'; c <= 'z'; ++c) s += c;
        for (char c = '!'; c <= '~'; ++c)
            if (s.find(c) == std::string::npos && c != '0' && c != '+' &&
                c != ',' && c != '.')
                s += c;
        return s;
    }();
    return a;
}

inline bool is_legal_base(char c) {
    return c > ' ' && c <= '~' && c != '0' && c != '+' && c != ',' && c != '.';
}

inline bool is_legal_label(const Label& lab) {
    if (lab.empty()) return false;
    size_t i = 0;
    while (i < lab.size() && lab[i] == '+') ++i;
    return i + 1 == lab.size() && is_legal_base(lab[i]);
}

// index -> label in MMP alphabet order: 0..89 are single characters,
// 90..179 their '+'-prefixed repeats, and so on.
inline Label label_at(size_t index) {
    const std::string& a = label_alphabet();
    return std::string(index / a.size(), '+') + a[index % a.size()];
}

// label -> index in MMP alphabet order; throws on illegal labels.
inline size_t label_index(const Label& lab) {
    if (!is_legal_label(lab)) throw MmpError("illegal label '" + lab + "'");
    const std::string& a = label_alphabet();
    size_t prefixes = lab.size() - 1;
    return prefixes * a.size() + a.find(lab.back());
}

// Orders labels by MMP alphabet position, not by raw string comparison.
struct LabelOrder {
    bool operator()(const Label& x, const Label& y) const {
        if (x.size() != y.size()) return x.size() < y.size();
        const std::string& a = label_alphabet();
        return a.find(x.back()) < a.find(y.back());
    }
};

// An n-dim hypergraph: ordered hyperedges of vertex labels.  The vertex
// set is implicit (every vertex occurs in some hyperedge); vertices() and
// vertex order are derived by first appearance.
struct Mmph {
    int dimension = 0;                        // n
    std::vector<std::vector<Label>> edges;    // hyperedges, order preserved

    size_t l() const { return edges.size(); }

    // Vertices in order of first appearance across edges.
    std::vector<Label> vertices() const {
        std::vector<Label> out;
        std::set<Label> seen;
        for (const auto& e : edges)
            for (const auto& v : e)
                if (seen.insert(v).second) out.push_back(v);
        return out;
    }

    size_t k() const {
        std::set<Label> seen;
        for (const auto& e : edges) seen.insert(e.begin(), e.end());
        return seen.size();
    }

    size_t max_edge_size() const {
        size_t m = 0;
        for (const auto& e : edges) m = std::max(m, e.size());
        return m;
    }
};

// Structural equality up to edge order and in-edge vertex order.
inline bool same_edge_sets(const Mmph& x, const Mmph& y) {
    auto key = [](const Mmph& h) {
        std::set<std::set<Label>> s;
        for (const auto& e : h.edges) s.insert({e.begin(), e.end()});
        return s;
    };
    return key(x) == key(y);
}

// Parses an MMPH string.  Whitespace is skipped; '+' binds to the next
// base character; edge and vertex order are preserved.  If dimension is 0
// it is inferred as the largest hyperedge size.
inline Mmph parse_mmph(const std::string& text, int dimension = 0) {
    Mmph h;
    std::vector<Label> edge;
    std::set<Label> edge_set;
    std::set<std::set<Label>> edge_sets;
    bool terminated = false;

    auto end_edge = [&] {
        if (edge.empty()) throw MmpError("empty hyperedge");
        if (!edge_sets.insert(edge_set).second) {
            std::string flat;
            for (const auto& v : edge) flat += v;
            throw MmpError("duplicate hyperedge '" + flat + "'");
        }
        h.edges.push_back(std::move(edge));
        edge.clear();
        edge_set.clear();
    };

    for (size_t i = 0; i < text.size(); ++i) {
        char c = text[i];
        if (c == ' ' || c == '\t' || c == '\n' || c == '\r') continue;
        if (terminated)
            throw MmpError("content after terminal period");
        if (c == ',') {
            end_edge();
        } else if (c == '.') {
            end_edge();
            terminated = true;
        } else {
            std::string prefix;
            while (text[i] == '+') {
                prefix += '+';
                if (++i >= text.size())
                    throw MmpError("dangling '+' at end of input");
            }
            c = text[i];
            if (c == ' ' || c == '\t' || c == '\n' || c == '\r')
                throw MmpError("whitespace after '+' prefix");
            if (!is_legal_base(c))
                throw MmpError(std::string("illegal character '") + c + "'");
            Label lab = prefix + c;
            if (!edge_set.insert(lab).second)
                throw MmpError("repeated vertex '" + lab + "' in a hyperedge");
            edge.push_back(std::move(lab));
        }
    }
    if (!terminated) throw MmpError("missing terminal period");

    size_t widest = h.max_edge_size();
    if (dimension == 0) {
        h.dimension = static_cast<int>(widest);
    } else {
        if (static_cast<size_t>(dimension) < widest)
            throw MmpError("dimension " + std::to_string(dimension) +
                           " smaller than largest hyperedge (" +
                           std::to_string(widest) + ")");
        h.dimension = dimension;
    }
    return h;
}

// Serializes to the canonical whitespace-free string.
inline std::string serialize_mmph(const Mmph& h) {
    std::string out;
    for (size_t i = 0; i < h.edges.size(); ++i) {
        for (const auto& v : h.edges[i]) out += v;
        out += (i + 1 == h.edges.size()) ? '.' : ',';
    }
    return out;
}

// One well-formedness finding.  Rules: 2 = edge size out of [2, n],
// 3 = two edges sharing exactly one vertex (informational), 4 = two edges
// sharing more than n-2 vertices, 5 = repeated vertex inside an edge,
// 6 = two edges identical as sets.
struct Violation {
    int rule = 0;
    std::vector<size_t> edge_indices;
    std::string message;
};

struct ValidationReport {
    std::vector<Violation> violations;
    bool strict_pass = true;    // no findings at all
    bool lenient_pass = true;   // no findings besides rule 3
};

enum class ValidationMode { strict, lenient };

// Checks hyperedge sizes, in-edge repeats, and pairwise intersections.
// Pairs sharing exactly one vertex are reported only in strict mode and
// never fail lenient_pass: most known MMPHs of interest contain such
// pairs, so the rule is informational.
inline ValidationReport validate(const Mmph& h,
                                 ValidationMode mode = ValidationMode::lenient) {
    ValidationReport r;
    size_t n = static_cast<size_t>(h.dimension);
    auto add = [&](int rule, std::vector<size_t> idx, std::string msg) {
        r.violations.push_back({rule, std::move(idx), std::move(msg)});
        r.strict_pass = false;
        if (rule != 3) r.lenient_pass = false;
    };

    std::vector<std::set<Label>> sets;
    for (size_t i = 0; i < h.edges.size(); ++i) {
        const auto& e = h.edges[i];
        std::set<Label> s(e.begin(), e.end());
        if (s.size() != e.size())
            add(5, {i}, "hyperedge " + std::to_string(i) + " repeats a vertex");
        if (e.size() < 2 || e.size() > n)
            add(2, {i},
                "hyperedge " + std::to_string(i) + " has " +
                    std::to_string(e.size()) + " vertices (n=" +
                    std::to_string(n) + ")");
        sets.push_back(std::move(s));
    }
    for (size_t i = 0; i < sets.size(); ++i)
        for (size_t j = i + 1; j < sets.size(); ++j) {
            size_t shared = 0;
            for (const auto& v : sets[i]) shared += sets[j].count(v);
            if (sets[i] == sets[j])
                add(6, {i, j},
                    "hyperedges " + std::to_string(i) + " and " +
                        std::to_string(j) + " are identical");
            else if (shared + 2 > n && n >= 2)
                add(4, {i, j},
                    "hyperedges " + std::to_string(i) + " and " +
                        std::to_string(j) + " share " + std::to_string(shared) +
                        " vertices (> n-2)");
            else if (shared == 1 && mode == ValidationMode::strict)
                add(3, {i, j},
                    "hyperedges " + std::to_string(i) + " and " +
                        std::to_string(j) + " share exactly one vertex");
        }
    return r;
}

// Vertex multiplicities: m(v) = number of hyperedges containing v, in
// first-appearance vertex order.
inline std::vector<std::pair<Label, size_t>> multiplicities(const Mmph& h) {
    std::map<Label, size_t> m;
    for (const auto& e : h.edges)
        for (const auto& v : e) ++m[v];
    std::vector<std::pair<Label, size_t>> out;
    for (const auto& v : h.vertices()) out.emplace_back(v, m[v]);
    return out;
}

}  // namespace mmp
