#pragma once

// Test-only helpers: fixture paths, file slurping, and the transcription
// manifest (tests/fixtures/manifest.json) that drives corpus-wide tests.

#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include <mmp/exact.hpp>

namespace fixtures {

inline std::string dir() { return MMP_FIXTURE_DIR; }

inline std::string path(const std::string& name, const std::string& ext) {
    return dir() + "/" + name + ext;
}

inline bool exists(const std::string& p) { return std::ifstream(p).good(); }

inline std::string slurp(const std::string& p) {
    std::ifstream in(p, std::ios::binary);
    if (!in) throw std::runtime_error("missing fixture file: " + p);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

struct Entry {
    std::string name;
    int dim = 0;
    size_t k = 0, l = 0;
    bool has_string = false;
    bool has_coord = false;
    mmp::Ring ring = mmp::Ring::rational;
    bool coord_ok = true;
    bool name_counts_match = true;
};

inline const std::vector<Entry>& manifest() {
    static const std::vector<Entry> entries = [] {
        auto doc = nlohmann::json::parse(slurp(dir() + "/manifest.json"));
        std::vector<Entry> out;
        for (const auto& item : doc) {
            Entry e;
            e.name = item.at("name").get<std::string>();
            e.dim = item.at("dim").get<int>();
            e.k = item.at("k").get<size_t>();
            e.l = item.at("l").get<size_t>();
            e.has_string = item.at("string").get<bool>();
            if (!item.at("ring").is_null()) {
                e.has_coord = true;
                e.ring = mmp::parse_ring(item.at("ring").get<std::string>());
                e.coord_ok = item.at("coord_ok").get<bool>();
            }
            e.name_counts_match = !item.contains("name_counts");
            out.push_back(e);
        }
        return out;
    }();
    return entries;
}

inline const Entry& entry(const std::string& name) {
    for (const auto& e : manifest())
        if (e.name == name) return e;
    throw std::runtime_error("no manifest entry: " + name);
}

inline std::string mmp_text(const std::string& name) {
    return slurp(path(name, ".mmp"));
}

inline std::string vec_text(const std::string& name) {
    return slurp(path(name, ".vec"));
}

}  // namespace fixtures
