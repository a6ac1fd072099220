#pragma once

// Exact vectors, coordinatization files, Hermitian orthogonality
// verification, and orthogonal-complement completion.
//
// A coordinatization assigns one nonzero vector per vertex; a hyperedge is
// valid when its vertices' vectors are mutually orthogonal under the
// Hermitian product sum(conj(u_i) * v_i).  Conjugation is the identity on
// the rational and golden rings, so the product is plain symmetric there.

#include <cctype>
#include <map>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "exact.hpp"
#include "hypergraph.hpp"

namespace mmp {

using ExactVector = std::vector<ExactScalar>;

struct Coordinatization {
    Ring ring = Ring::rational;
    int dimension = 0;
    std::map<Label, ExactVector> vectors;
    std::vector<Label> order;  // file/insertion order of labels
};

// Parses one vector component: a signed expression of at most two terms
// over {integer, phi, w, w2}, e.g. "-2", "phi-1", "w2", "1+w".
inline ExactScalar parse_component(const std::string& text, Ring ring) {
    size_t i = 0;
    auto term = [&]() -> ExactScalar {
        size_t start = i;
        if (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) {
            while (i < text.size() &&
                   std::isdigit(static_cast<unsigned char>(text[i])))
                ++i;
            return ExactScalar(std::stoll(text.substr(start, i - start)));
        }
        if (text.compare(i, 3, "phi") == 0) {
            i += 3;
            if (ring != Ring::golden)
                throw MmpError("'phi' outside the golden ring");
            return ExactScalar::phi();
        }
        if (text.compare(i, 2, "w2") == 0) {
            i += 2;
            if (ring != Ring::eisenstein)
                throw MmpError("'w2' outside the eisenstein ring");
            return ExactScalar::omega2();
        }
        if (text.compare(i, 1, "w") == 0) {
            i += 1;
            if (ring != Ring::eisenstein)
                throw MmpError("'w' outside the eisenstein ring");
            return ExactScalar::omega();
        }
        throw MmpError("bad component '" + text + "'");
    };

    bool negate = false;
    if (i < text.size() && (text[i] == '-' || text[i] == '+')) {
        negate = text[i] == '-';
        ++i;
    }
    ExactScalar value = term();
    if (negate) value = -value;
    if (i < text.size()) {
        if (text[i] != '+' && text[i] != '-')
            throw MmpError("bad component '" + text + "'");
        bool minus = text[i] == '-';
        ++i;
        ExactScalar second = term();
        value = minus ? value - second : value + second;
    }
    if (i != text.size()) throw MmpError("bad component '" + text + "'");
    // pin the ring even when only integers appeared
    return ExactScalar(ring, value.a(), value.b());
}

// Parses a coordinatization file: lines `<label> = (c1,...,cn)`.  Because
// '#' and '=' are legal vertex labels, the entry pattern takes priority;
// only non-entry lines starting with '#' are comments.
inline Coordinatization parse_coordinatization(const std::string& text, Ring ring) {
    Coordinatization c;
    c.ring = ring;
    std::istringstream in(text);
    std::string line;
    while (std::getline(in, line)) {
        while (!line.empty() && (line.back() == '\r' || line.back() == ' '))
            line.pop_back();
        size_t first = line.find_first_not_of(' ');
        if (first == std::string::npos) continue;
        line = line.substr(first);

        size_t sep = line.find(" = (");
        if (sep == std::string::npos || line.back() != ')' ||
            line.find(' ') < sep) {
            if (line[0] == '#') continue;  // comment
            throw MmpError("bad coordinatization line: " + line);
        }
        Label label = line.substr(0, sep);
        if (!is_legal_label(label))
            throw MmpError("illegal vertex label '" + label + "'");
        std::string body = line.substr(sep + 4, line.size() - sep - 5);

        ExactVector vec;
        std::string comp;
        std::istringstream comps(body);
        while (std::getline(comps, comp, ',')) {
            size_t b = comp.find_first_not_of(' ');
            size_t e = comp.find_last_not_of(' ');
            if (b == std::string::npos)
                throw MmpError("empty component in line: " + line);
            vec.push_back(parse_component(comp.substr(b, e - b + 1), ring));
        }
        if (vec.empty()) throw MmpError("empty vector in line: " + line);

        if (c.dimension == 0)
            c.dimension = static_cast<int>(vec.size());
        else if (c.dimension != static_cast<int>(vec.size()))
            throw MmpError("ragged vector length for '" + label + "'");

        bool zero = true;
        for (const auto& x : vec)
            if (!x.is_zero()) {
                zero = false;
                break;
            }
        if (zero) throw MmpError("zero vector for '" + label + "'");

        if (!c.vectors.emplace(label, std::move(vec)).second)
            throw MmpError("duplicate vector label '" + label + "'");
        c.order.push_back(label);
    }
    if (c.vectors.empty()) throw MmpError("empty coordinatization");
    return c;
}

inline std::string serialize_coordinatization(const Coordinatization& c) {
    std::string out;
    for (const auto& label : c.order) {
        out += label + " = (";
        const auto& vec = c.vectors.at(label);
        for (size_t i = 0; i < vec.size(); ++i) {
            if (i) out += ",";
            out += vec[i].to_string();
        }
        out += ")\n";
    }
    return out;
}

// Hermitian inner product sum(conj(u_i) * v_i), exact.
inline ExactScalar inner_product(const ExactVector& u, const ExactVector& v) {
    if (u.size() != v.size()) throw MmpError("inner product length mismatch");
    ExactScalar acc;
    for (size_t i = 0; i < u.size(); ++i) acc += u[i].conj() * v[i];
    return acc;
}

// True iff u = lambda * v for some nonzero field scalar lambda.
inline bool parallel(const ExactVector& u, const ExactVector& v) {
    if (u.size() != v.size()) return false;
    std::optional<size_t> pivot;
    for (size_t i = 0; i < u.size(); ++i) {
        if (u[i].is_zero() != v[i].is_zero()) return false;
        if (!pivot && !u[i].is_zero()) pivot = i;
    }
    if (!pivot) return true;  // both zero
    ExactScalar lambda = u[*pivot] / v[*pivot];
    for (size_t i = 0; i < u.size(); ++i)
        if (u[i] != lambda * v[i]) return false;
    return true;
}

struct OrthoFailure {
    size_t edge_index;
    Label first, second;
    ExactScalar value;
};

struct OrthoReport {
    bool passed = true;
    std::vector<OrthoFailure> failures;                          // nonzero pairs
    std::vector<std::pair<size_t, std::pair<Label, Label>>> parallel_pairs;
    std::vector<Label> missing;  // vertices with no vector
};

// Checks every unordered pair inside every hyperedge for exact
// orthogonality, and flags parallel pairs.  Vertices without vectors are
// reported rather than fatal so a single pass can enumerate all errata in
// a defective coordinatization.
inline OrthoReport verify_coordinatization(const Mmph& h, const Coordinatization& c) {
    OrthoReport r;
    std::set<Label> missing;
    for (size_t ei = 0; ei < h.edges.size(); ++ei) {
        const auto& e = h.edges[ei];
        for (size_t i = 0; i < e.size(); ++i) {
            if (!c.vectors.count(e[i])) {
                missing.insert(e[i]);
                continue;
            }
            for (size_t j = i + 1; j < e.size(); ++j) {
                if (!c.vectors.count(e[j])) continue;
                const auto& u = c.vectors.at(e[i]);
                const auto& v = c.vectors.at(e[j]);
                ExactScalar ip = inner_product(u, v);
                if (!ip.is_zero())
                    r.failures.push_back({ei, e[i], e[j], ip});
                if (parallel(u, v))
                    r.parallel_pairs.push_back({ei, {e[i], e[j]}});
            }
        }
    }
    r.missing.assign(missing.begin(), missing.end());
    r.passed = r.failures.empty() && r.parallel_pairs.empty() && r.missing.empty();
    return r;
}

// Restricts a coordinatization to the given vertices (e.g. a hypergraph
// derived from a master inherits the master's vectors by name).  Labels
// without vectors are skipped; verification then reports them as missing.
inline Coordinatization restrict_coordinatization(const Coordinatization& c,
                                                  const std::vector<Label>& keep) {
    Coordinatization out;
    out.ring = c.ring;
    out.dimension = c.dimension;
    for (const auto& label : keep) {
        auto it = c.vectors.find(label);
        if (it == c.vectors.end()) continue;
        out.vectors.emplace(label, it->second);
        out.order.push_back(label);
    }
    return out;
}

// Extends s mutually orthogonal vectors to an orthogonal basis of the
// whole space, returning the n - s new vectors.  Gram-Schmidt against the
// standard basis, exact, unnormalized: each output is scaled to clear
// denominators but not to unit norm (norms are generally irrational).
inline std::vector<ExactVector> complete_hyperedge(std::vector<ExactVector> basis,
                                                   int n) {
    size_t s = basis.size();
    if (s > static_cast<size_t>(n))
        throw MmpError("more vectors than the dimension");
    for (const auto& v : basis)
        if (v.size() != static_cast<size_t>(n))
            throw MmpError("vector length differs from dimension");
    for (size_t i = 0; i < s; ++i)
        for (size_t j = i + 1; j < s; ++j)
            if (!inner_product(basis[i], basis[j]).is_zero())
                throw MmpError("input vectors not mutually orthogonal");
    for (const auto& v : basis) {
        bool zero = true;
        for (const auto& x : v)
            if (!x.is_zero()) zero = false;
        if (zero) throw MmpError("input vectors linearly dependent");
    }

    std::vector<ExactVector> out;
    Ring ring = Ring::rational;
    if (s) ring = basis[0].empty() ? Ring::rational : basis[0][0].ring();
    for (int axis = 0; axis < n && basis.size() < static_cast<size_t>(n); ++axis) {
        ExactVector cand(n, ExactScalar(ring, 0));
        cand[axis] = ExactScalar(ring, 1);
        // subtract projections on everything accumulated so far
        for (const auto& u : basis) {
            ExactScalar coeff = inner_product(u, cand) / inner_product(u, u);
            for (int i = 0; i < n; ++i) cand[i] -= coeff * u[i];
        }
        bool zero = true;
        for (const auto& x : cand)
            if (!x.is_zero()) zero = false;
        if (zero) continue;
        // clear rational denominators for readability
        Rational scale = 1;
        for (const auto& x : cand) {
            if (x.a().den() != 1) scale = scale * Rational(x.a().den(), 1);
            if (x.b().den() != 1) scale = scale * Rational(x.b().den(), 1);
        }
        if (scale != Rational(1)) {
            ExactScalar f(ring, scale);
            for (auto& x : cand) x *= f;
        }
        basis.push_back(cand);
        out.push_back(std::move(cand));
    }
    if (basis.size() < static_cast<size_t>(n))
        throw MmpError("input vectors linearly dependent");
    return out;
}

}  // namespace mmp
