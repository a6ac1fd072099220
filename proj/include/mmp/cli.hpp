#pragma once

// Command-line surface.  Every subcommand is a thin wrapper over one
// library operation; no logic lives only here.  Batch files carry one
// MMPH string per line.  Exit codes: 0 success, 1 domain-negative answer
// under --assert, 2 usage or input errors.

#include <cctype>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "generate.hpp"
#include "hypergraph.hpp"
#include "solver.hpp"
#include "structure.hpp"
#include "vecfind.hpp"
#include "vectors.hpp"

#include <CLI11.hpp>

namespace mmp {

namespace detail {

inline std::string read_file(const std::string& path) {
    if (path == "-") {
        std::ostringstream ss;
        ss << std::cin.rdbuf();
        return ss.str();
    }
    std::ifstream in(path, std::ios::binary);
    if (!in) throw MmpError("cannot open '" + path + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

inline void write_file(const std::string& path, const std::string& content,
                       std::ostream& out) {
    if (path.empty() || path == "-") {
        out << content;
        return;
    }
    std::ofstream f(path, std::ios::binary);
    if (!f) throw MmpError("cannot open '" + path + "' for writing");
    f << content;
}

inline Mmph load_mmph(const std::string& path, int dimension) {
    return parse_mmph(read_file(path), dimension);
}

// Batch form: every '.'-terminated string in the file (one per line by
// convention, but any whitespace layout parses).
inline std::vector<Mmph> load_mmph_batch(const std::string& path, int dimension) {
    std::string text = read_file(path);
    std::vector<Mmph> out;
    std::string chunk;
    for (char c : text) {
        chunk += c;
        if (c == '.') {
            out.push_back(parse_mmph(chunk, dimension));
            chunk.clear();
        }
    }
    for (char c : chunk)
        if (!std::isspace(static_cast<unsigned char>(c)))
            throw MmpError("trailing content after last string");
    if (out.empty()) throw MmpError("no MMPH strings in '" + path + "'");
    return out;
}

inline std::vector<ExactScalar> parse_component_list(const std::string& text,
                                                     Ring ring) {
    std::vector<ExactScalar> out;
    std::string item;
    std::istringstream in(text);
    while (std::getline(in, item, ','))
        out.push_back(parse_component(item, ring));
    return out;
}

}  // namespace detail

// Dispatches a full command line; streams results to `out`, errors to
// `err`.  Never exits the process, so tests drive it directly.
inline int run_cli(std::vector<std::string> args, std::ostream& out,
                   std::ostream& err) {
    CLI::App app{"MMP hypergraph toolkit"};
    app.require_subcommand(1);

    // shared option storage
    std::string file, vec_file, out_file, csv_file, pool_file;
    int dimension = 0;
    bool assert_flag = false, strict = false, fixpoint = false;
    bool multiplicities_flag = false;
    std::uint64_t seed = 0;
    std::string ring_name = "rational", components, vertices_arg, edges_arg;
    size_t count = 0, runs = 1, max_strip = 1, max_add = 0, max_delete = 1;
    bool batch_delete = false;
    std::string method_name = "M1", filter_name = "off";
    bool no_require_nonks = false;
    std::uint64_t budget = 500'000'000;
    int fill_n = 0;

    auto add_input = [&](CLI::App* cmd) {
        cmd->add_option("file", file, "input MMPH string file ('-' = stdin)")
            ->required();
        cmd->add_option("--n", dimension, "explicit dimension override");
    };

    CLI::App* parse_cmd = app.add_subcommand("parse", "parse and reserialize");
    add_input(parse_cmd);

    CLI::App* validate_cmd = app.add_subcommand("validate", "well-formedness report");
    add_input(validate_cmd);
    validate_cmd->add_flag("--strict", strict, "also report rule-3 findings");
    validate_cmd->add_flag("--assert", assert_flag, "exit 1 unless validation passes");

    CLI::App* info_cmd = app.add_subcommand("info", "k, l, n and multiplicities");
    add_input(info_cmd);
    info_cmd->add_flag("--multiplicities", multiplicities_flag,
                       "also list vertex multiplicities");

    CLI::App* solve_cmd = app.add_subcommand("solve", "find a 0/1 assignment");
    add_input(solve_cmd);
    solve_cmd->add_flag("--assert", assert_flag, "exit 1 when non-binary");

    CLI::App* classify_cmd = app.add_subcommand("classify",
                                                "BMMPH / KS-NBMMPH / nonKS-NBMMPH");
    add_input(classify_cmd);

    CLI::App* critical_cmd = app.add_subcommand("critical", "criticality check");
    add_input(critical_cmd);
    critical_cmd->add_flag("--assert", assert_flag, "exit 1 unless critical");

    CLI::App* criticalize_cmd = app.add_subcommand("criticalize",
                                                   "strip to a critical core");
    add_input(criticalize_cmd);
    criticalize_cmd->add_option("--seed", seed, "RNG seed")->required();

    CLI::App* strip_cmd = app.add_subcommand("strip", "remove hyperedges");
    add_input(strip_cmd);
    strip_cmd->add_option("--count", count, "how many random edges to remove");
    strip_cmd->add_option("--edges", edges_arg, "explicit edge indices (comma-separated)");
    strip_cmd->add_option("--seed", seed, "RNG seed (required with --count)");

    CLI::App* fill_cmd = app.add_subcommand("fill", "fill edges to n vertices");
    fill_cmd->add_option("file", file, "input MMPH string file ('-' = stdin)")
        ->required();
    fill_cmd->add_option("--n", fill_n, "target edge size (the filled dimension)")
        ->required();

    CLI::App* dropm1_cmd = app.add_subcommand("drop-m1",
                                              "drop multiplicity-1 vertices");
    add_input(dropm1_cmd);
    dropm1_cmd->add_flag("--fixpoint", fixpoint, "repeat until none remain");

    CLI::App* delete_cmd = app.add_subcommand("delete-vertices", "delete vertices");
    add_input(delete_cmd);
    delete_cmd->add_option("--vertices", vertices_arg,
                           "labels to delete (comma-separated)")
        ->required();

    CLI::App* parity_cmd = app.add_subcommand("parity", "parity-proof check");
    add_input(parity_cmd);
    parity_cmd->add_flag("--assert", assert_flag, "exit 1 unless a parity proof exists");

    CLI::App* loops_cmd = app.add_subcommand("loops", "maximum loop order");
    add_input(loops_cmd);

    CLI::App* components_cmd = app.add_subcommand("components",
                                                  "connected components");
    add_input(components_cmd);

    CLI::App* vecfind_cmd = app.add_subcommand(
        "vecfind", "generate a master from vector components");
    vecfind_cmd->add_option("--n", dimension, "dimension")->required();
    vecfind_cmd->add_option("--components", components,
                            "component alphabet, e.g. '0,1,-1' or '0,phi,-phi,phi-1'")
        ->required();
    vecfind_cmd->add_option("--ring", ring_name, "rational | golden | eisenstein");
    vecfind_cmd->add_option("-o,--out", out_file, "output MMPH file (default stdout)");
    vecfind_cmd->add_option("--vec", vec_file, "output coordinatization file");
    vecfind_cmd->add_option("--budget", budget, "clique search node budget");

    CLI::App* verify_cmd = app.add_subcommand("verify-coord",
                                              "verify a coordinatization");
    add_input(verify_cmd);
    verify_cmd->add_option("--vec", vec_file, "coordinatization file")->required();
    verify_cmd->add_option("--ring", ring_name, "rational | golden | eisenstein");
    verify_cmd->add_flag("--assert", assert_flag, "exit 1 unless verification passes");

    CLI::App* complete_cmd = app.add_subcommand(
        "complete", "orthogonal complement of a vector list");
    complete_cmd->add_option("--vec", vec_file, "input coordinatization file")
        ->required();
    complete_cmd->add_option("--n", dimension, "dimension")->required();
    complete_cmd->add_option("--ring", ring_name, "rational | golden | eisenstein");

    CLI::App* generate_cmd = app.add_subcommand("generate",
                                                "M1/M2/M3 random pipelines");
    generate_cmd->add_option("--master", file, "master MMPH file")->required();
    generate_cmd->add_option("--n", dimension, "explicit dimension override");
    generate_cmd->add_option("--method", method_name, "M1 | M2 | M3");
    generate_cmd->add_option("--seed", seed, "RNG seed")->required();
    generate_cmd->add_option("--runs", runs, "number of runs");
    generate_cmd->add_option("--pool", pool_file, "edge pool for M2");
    generate_cmd->add_option("--max-strip", max_strip, "strip count upper bound");
    generate_cmd->add_option("--max-add", max_add, "M2 addition upper bound");
    generate_cmd->add_flag("--batch-delete", batch_delete,
                           "M3: delete a random batch per step");
    generate_cmd->add_option("--max-delete", max_delete,
                             "M3 batch size upper bound");
    generate_cmd->add_option("--filter", filter_name,
                             "full-edge filter: off | relaxed | strict");
    generate_cmd->add_flag("--allow-ks", no_require_nonks,
                           "emit KS criticals too (default filters to non-KS)");
    generate_cmd->add_option("-o,--out", out_file, "output file (default stdout)");
    generate_cmd->add_option("--csv", csv_file, "write (k,l) distribution CSV");

    CLI::App* stats_cmd = app.add_subcommand("stats",
                                             "(k,l) distribution of a batch file");
    stats_cmd->add_option("file", file, "batch MMPH file")->required();
    stats_cmd->add_option("--n", dimension, "explicit dimension override");

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) {   // --help
            out << app.help();
            return 0;
        }
        err << "error: " << e.what() << "\n";
        return 2;
    }

    try {
        if (*parse_cmd) {
            out << serialize_mmph(detail::load_mmph(file, dimension)) << "\n";
        } else if (*validate_cmd) {
            Mmph h = detail::load_mmph(file, dimension);
            ValidationReport r = validate(
                h, strict ? ValidationMode::strict : ValidationMode::lenient);
            for (const auto& v : r.violations)
                out << "rule " << v.rule << ": " << v.message << "\n";
            out << (r.lenient_pass ? "pass" : "fail")
                << (strict && r.lenient_pass && !r.strict_pass
                        ? " (strict findings present)"
                        : "")
                << "\n";
            if (assert_flag && !r.lenient_pass) return 1;
        } else if (*info_cmd) {
            Mmph h = detail::load_mmph(file, dimension);
            out << "k=" << h.k() << " l=" << h.l() << " n=" << h.dimension << "\n";
            if (multiplicities_flag)
                for (const auto& [v, m] : multiplicities(h))
                    out << v << " m=" << m << "\n";
        } else if (*solve_cmd) {
            Mmph h = detail::load_mmph(file, dimension);
            auto witness = find_assignment(h);
            if (!witness) {
                out << "non-binary\n";
                if (assert_flag) return 1;
            } else {
                for (const auto& [v, value] : *witness)
                    out << v << "=" << value << "\n";
            }
        } else if (*classify_cmd) {
            out << to_string(classify(detail::load_mmph(file, dimension)).kind)
                << "\n";
        } else if (*critical_cmd) {
            bool crit = is_critical(detail::load_mmph(file, dimension));
            out << (crit ? "critical" : "not critical") << "\n";
            if (assert_flag && !crit) return 1;
        } else if (*criticalize_cmd) {
            out << serialize_mmph(
                       criticalize(detail::load_mmph(file, dimension), seed))
                << "\n";
        } else if (*strip_cmd) {
            Mmph h = detail::load_mmph(file, dimension);
            if (!edges_arg.empty()) {
                std::set<size_t> drop;
                std::string item;
                std::istringstream in(edges_arg);
                while (std::getline(in, item, ','))
                    drop.insert(std::stoul(item));
                out << serialize_mmph(strip_edges(h, drop)) << "\n";
            } else if (count > 0) {
                if (!strip_cmd->count("--seed"))
                    throw CLI::ValidationError("strip", "--count requires --seed");
                SeededRng rng(seed);
                out << serialize_mmph(strip_edges(h, count, rng)) << "\n";
            } else {
                throw CLI::ValidationError("strip", "need --count or --edges");
            }
        } else if (*fill_cmd) {
            out << serialize_mmph(fill(detail::load_mmph(file, 0), fill_n)) << "\n";
        } else if (*dropm1_cmd) {
            out << serialize_mmph(
                       drop_m1_vertices(detail::load_mmph(file, dimension), fixpoint))
                << "\n";
        } else if (*delete_cmd) {
            std::set<Label> victims;
            std::string item;
            std::istringstream in(vertices_arg);
            while (std::getline(in, item, ','))
                victims.insert(item);
            out << serialize_mmph(
                       delete_vertices(detail::load_mmph(file, dimension), victims))
                << "\n";
        } else if (*parity_cmd) {
            bool parity = has_parity_proof(detail::load_mmph(file, dimension));
            out << "parity proof: " << (parity ? "yes" : "no") << "\n";
            if (assert_flag && !parity) return 1;
        } else if (*loops_cmd) {
            LoopReport r = max_loop_order(detail::load_mmph(file, dimension));
            out << "max loop order: " << r.max_order << "\n";
            if (!r.witness.empty()) {
                out << "witness edges:";
                for (size_t i : r.witness) out << " " << i;
                out << "\n";
            }
        } else if (*components_cmd) {
            for (const auto& part :
                 connected_components(detail::load_mmph(file, dimension)))
                out << serialize_mmph(part) << "\n";
        } else if (*vecfind_cmd) {
            Ring ring = parse_ring(ring_name);
            Master master = vecfind_master(
                dimension, detail::parse_component_list(components, ring), ring,
                budget);
            out << "k=" << master.mmph.k() << " l=" << master.mmph.l() << "\n";
            detail::write_file(out_file, serialize_mmph(master.mmph) + "\n", out);
            if (!vec_file.empty())
                detail::write_file(vec_file,
                                   serialize_coordinatization(master.coord), out);
        } else if (*verify_cmd) {
            Mmph h = detail::load_mmph(file, dimension);
            Coordinatization c =
                parse_coordinatization(detail::read_file(vec_file),
                                       parse_ring(ring_name));
            OrthoReport r = verify_coordinatization(h, c);
            for (const auto& f : r.failures)
                out << "edge " << f.edge_index << " pair (" << f.first << ","
                    << f.second << ") inner product " << f.value.to_string()
                    << "\n";
            for (const auto& [edge, pair] : r.parallel_pairs)
                out << "edge " << edge << " pair (" << pair.first << ","
                    << pair.second << ") parallel vectors\n";
            for (const auto& v : r.missing)
                out << "vertex " << v << " has no vector\n";
            out << (r.passed ? "pass" : "fail") << "\n";
            if (assert_flag && !r.passed) return 1;
        } else if (*complete_cmd) {
            Ring ring = parse_ring(ring_name);
            Coordinatization c =
                parse_coordinatization(detail::read_file(vec_file), ring);
            std::vector<ExactVector> basis;
            for (const auto& label : c.order)
                basis.push_back(c.vectors.at(label));
            for (const auto& v : complete_hyperedge(basis, dimension)) {
                out << "(";
                for (size_t i = 0; i < v.size(); ++i)
                    out << (i ? "," : "") << v[i].to_string();
                out << ")\n";
            }
        } else if (*generate_cmd) {
            GenerationConfig cfg;
            cfg.method = parse_method(method_name);
            cfg.seed = seed;
            cfg.runs = runs;
            cfg.require_nonks = !no_require_nonks;
            cfg.full_edge_filter = filter_name == "strict" ? FullEdgeFilter::strict
                                   : filter_name == "relaxed"
                                       ? FullEdgeFilter::relaxed
                                       : FullEdgeFilter::off;
            if (filter_name != "off" && filter_name != "relaxed" &&
                filter_name != "strict")
                throw CLI::ValidationError("generate", "bad --filter value");
            cfg.max_strip = max_strip;
            cfg.max_add = max_add;
            cfg.batch_delete = batch_delete;
            cfg.max_delete = max_delete;
            Mmph master = detail::load_mmph(file, dimension);
            std::optional<Mmph> pool;
            if (!pool_file.empty())
                pool = detail::load_mmph(pool_file, dimension);
            GenerationResult result =
                generate(master, cfg, pool ? &*pool : nullptr);
            std::string lines;
            for (const auto& h : result.emitted)
                lines += serialize_mmph(h) + "\n";
            detail::write_file(out_file, lines, out);
            if (!csv_file.empty())
                detail::write_file(
                    csv_file, distribution_csv(collect_distribution(result.emitted)),
                    out);
            err << result.log.summary() << "\n";
        } else if (*stats_cmd) {
            out << distribution_csv(
                collect_distribution(detail::load_mmph_batch(file, dimension)));
        }
    } catch (const CLI::ValidationError& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    } catch (const MmpError& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    }
    return 0;
}

}  // namespace mmp
