#include "pilat/cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

#include "pilat/antichains.hpp"
#include "pilat/cardinal_expr.hpp"
#include "pilat/chains.hpp"
#include "pilat/complements.hpp"
#include "pilat/error.hpp"
#include "pilat/hasse.hpp"
#include "pilat/io.hpp"
#include "pilat/lattice_enum.hpp"
#include "pilat/ortho.hpp"
#include "pilat/version.hpp"

namespace pilat {

namespace {

using nlohmann::json;

struct RunConfig {
    int n = -1;
    int k = -1;
    std::string format = "text";
    std::string output;
    unsigned jobs = 1;
    std::string file;
    std::string literal;
    std::string expression;
    std::string model = "gch";
    bool count = false;
    bool verify = false;
    bool require_maximal = false;
    bool exhaustive = false;
    bool no_prune = false;
    bool list = false;
    std::string chain_file;
    std::string antichain_file;
};

std::vector<Partition> read_file(const std::string& path, int n) {
    if (path == "-") return read_partition_lines(std::cin, n);
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open '" + path + "'");
    return read_partition_lines(in, n);
}

int ground_of(const std::vector<Partition>& ps, int n) {
    if (n >= 0) return n;
    if (ps.empty()) throw DomainError("empty input; pass --n");
    return ps.front().ground_size();
}

void require_format(const RunConfig& cfg, std::initializer_list<const char*> allowed) {
    for (const char* f : allowed)
        if (cfg.format == f) return;
    throw DomainError("output format '" + cfg.format + "' not supported by this command");
}

void write_lines(std::ostream& out, std::span<const Partition> ps) {
    for (const auto& p : ps) out << format(p) << '\n';
}

void write_json(std::ostream& out, json j) {
    j["generator"] = std::string("pilat ") + kVersion;
    out << j.dump(2) << '\n';
}

std::string pair_text(const std::pair<std::size_t, std::size_t>& p) {
    return std::to_string(p.first) + "," + std::to_string(p.second);
}

// ---- enumerate ----------------------------------------------------------------------------

int cmd_enumerate(const RunConfig& cfg, const Limits& limits, std::ostream& out) {
    require_format(cfg, {"text", "json"});
    if (cfg.count) {
        json j{{"n", cfg.n}, {"bell", bell(cfg.n)}};
        json stirling = json::array();
        for (int k = 0; k <= cfg.n; ++k) stirling.push_back(stirling2(cfg.n, k));
        j["stirling2"] = stirling;
        j["atoms"] = cfg.n >= 2 ? binomial(cfg.n, 2) : 0;
        j["coatoms"] = cfg.n >= 2 ? stirling2(cfg.n, 2) : 0;
        if (cfg.format == "json") {
            write_json(out, j);
            return kExitOk;
        }
        out << "bell " << j["bell"] << '\n';
        for (int k = 0; k <= cfg.n; ++k) out << "stirling2 " << cfg.n << ' ' << k << ' ' << stirling[static_cast<std::size_t>(k)] << '\n';
        out << "atoms " << j["atoms"] << '\n' << "coatoms " << j["coatoms"] << '\n';
        return kExitOk;
    }
    require_cap("enumerate", cfg.n, limits.enumerate);
    if (cfg.format == "json") {
        json arr = json::array();
        for_each_partition(cfg.n, [&](const Partition& p) { arr.push_back(p); });
        write_json(out, json{{"n", cfg.n}, {"partitions", arr}});
        return kExitOk;
    }
    for_each_partition(cfg.n, [&](const Partition& p) { out << format(p) << '\n'; });
    return kExitOk;
}

// ---- chains -------------------------------------------------------------------------------

void write_chain_report(std::ostream& out, const ChainReport& r) {
    out << "chain " << (r.is_chain ? "yes" : "no") << '\n';
    out << "saturated " << (r.is_saturated ? "yes" : "no") << '\n';
    out << "maximal " << (r.is_maximal ? "yes" : "no") << '\n';
    if (r.failing_pair) out << "failing_pair " << pair_text(*r.failing_pair) << '\n';
    if (r.insertable) out << "insertable " << format(*r.insertable) << '\n';
}

int cmd_chains_keyframe(const RunConfig& cfg, const Limits& limits, std::ostream& out) {
    const Chain c = keyframe_chain(cfg.k, limits);
    if (cfg.format == "dot") {
        out << hasse_dot(c);
        return kExitOk;
    }
    require_format(cfg, {"text"});
    write_lines(out, c);
    return kExitOk;
}

int cmd_chains_verify(const RunConfig& cfg, std::ostream& out) {
    const auto chain = read_file(cfg.file, cfg.n);
    const ChainReport r = verify_chain(chain);
    write_chain_report(out, r);
    const bool pass = cfg.require_maximal ? r.is_maximal : r.is_chain;
    return pass ? kExitOk : kExitCheckFailed;
}

int cmd_chains_extend(const RunConfig& cfg, std::ostream& out) {
    const auto chain = read_file(cfg.file, cfg.n);
    if (!verify_chain(chain).is_chain) {
        out << "not a chain\n";
        return kExitCheckFailed;
    }
    write_lines(out, extend_to_maximal(chain));
    return kExitOk;
}

int cmd_chains_maximal(const RunConfig& cfg, const Limits& limits, std::ostream& out) {
    std::size_t count = 0;
    for_each_maximal_chain(
        cfg.n,
        [&](const Chain& c) {
            ++count;
            if (!cfg.list) return;
            for (std::size_t i = 0; i < c.size(); ++i) out << (i ? " < " : "") << format(c[i]);
            out << '\n';
        },
        limits);
    out << "maximal_chains " << count << '\n';
    return kExitOk;
}

// ---- antichains ---------------------------------------------------------------------------

int report_antichain(std::ostream& out, const AntichainReport& r) {
    out << "# antichain " << (r.is_antichain ? "yes" : "no") << '\n';
    if (r.maximality_checked) out << "# maximal " << (r.is_maximal ? "yes" : "no") << '\n';
    if (r.comparable_pair) out << "# comparable_pair " << pair_text(*r.comparable_pair) << '\n';
    if (r.extension) out << "# extension " << format(*r.extension) << '\n';
    const bool pass = r.is_antichain && (!r.maximality_checked || r.is_maximal);
    return pass ? kExitOk : kExitCheckFailed;
}

int cmd_antichains_construct(bool doubleton, const RunConfig& cfg, const Limits& limits, std::ostream& out) {
    const Antichain a = doubleton ? doubleton_antichain(cfg.n) : bipartition_antichain(cfg.n);
    write_lines(out, a);
    out << "# size " << a.size() << '\n';
    if (!cfg.verify) return kExitOk;
    const bool maximality = cfg.n <= limits.antichain_maximality;
    return report_antichain(out, verify_antichain(a, cfg.n, maximality, limits));
}

int cmd_antichains_verify(const RunConfig& cfg, const Limits& limits, std::ostream& out) {
    const auto members = read_file(cfg.file, cfg.n);
    return report_antichain(out, verify_antichain(members, ground_of(members, cfg.n), true, limits));
}

int cmd_antichains_extend(const RunConfig& cfg, const Limits& limits, std::ostream& out) {
    const auto members = read_file(cfg.file, cfg.n);
    const int n = ground_of(members, cfg.n);
    if (!is_antichain(members)) {
        out << "# antichain no\n";
        return kExitCheckFailed;
    }
    write_lines(out, extend_to_maximal_antichain(members, n, limits));
    return kExitOk;
}

// ---- complements --------------------------------------------------------------------------

std::string sizes_text(const std::vector<int>& sizes) {
    std::string s;
    for (std::size_t i = 0; i < sizes.size(); ++i) s += (i ? "+" : "") + std::to_string(sizes[i]);
    return s;
}

int cmd_complements_census(const RunConfig& cfg, const Limits& limits, std::ostream& out) {
    require_format(cfg, {"text", "csv", "json"});
    const auto rows = complement_census(cfg.n, cfg.jobs, limits);
    bool grieser_ok = true;
    for (const auto& r : rows) grieser_ok = grieser_ok && r.grieser == r.count_nm1;
    if (cfg.format == "csv") {
        out << "# pilat " << kVersion << '\n';
        out << "partition,m,block_sizes,total,count_nm1,grieser\n";
        for (const auto& r : rows)
            out << format(r.partition) << ',' << r.blocks << ',' << sizes_text(r.block_sizes) << ',' << r.total << ','
                << r.count_nm1 << ',' << r.grieser << '\n';
    } else if (cfg.format == "json") {
        json arr = json::array();
        for (const auto& r : rows)
            arr.push_back(json{{"partition", format(r.partition)},
                               {"m", r.blocks},
                               {"block_sizes", r.block_sizes},
                               {"total", r.total},
                               {"count_nm1", r.count_nm1},
                               {"grieser", r.grieser}});
        write_json(out, json{{"n", cfg.n}, {"rows", arr}, {"grieser_matches", grieser_ok}});
    } else {
        for (const auto& r : rows)
            out << format(r.partition) << "  m=" << r.blocks << " sizes=" << sizes_text(r.block_sizes)
                << " total=" << r.total << " count_nm1=" << r.count_nm1 << " grieser=" << r.grieser << '\n';
        out << "grieser " << (grieser_ok ? "matches" : "MISMATCH") << '\n';
    }
    return grieser_ok ? kExitOk : kExitCheckFailed;
}

int cmd_complements_list(const RunConfig& cfg, const Limits& limits, std::ostream& out) {
    const Partition p = cfg.n >= 0 ? parse(cfg.literal, cfg.n) : parse(cfg.literal);
    const auto qs = enumerate_complements(p, limits);
    write_lines(out, qs);
    out << "# total " << qs.size() << '\n';
    out << "# grieser " << grieser_count(p) << '\n';
    return kExitOk;
}

// ---- ortho --------------------------------------------------------------------------------

int cmd_ortho_search(const RunConfig& cfg, const Limits& limits, std::ostream& out) {
    OrthoSearchOptions options;
    options.exhaustive = cfg.exhaustive;
    options.prune = !cfg.no_prune;
    const auto result = search_orthocomplementation(cfg.n, options, limits);
    if (!result.map) {
        out << "none\n";
        return kExitOk;
    }
    const LatticeUniverse u = LatticeUniverse::build(cfg.n, limits);
    out << "found\n";
    for (std::size_t i = 0; i < u.size(); ++i) out << format(u[i]) << " -> " << format(u[result.map->image[i]]) << '\n';
    return kExitOk;
}

int cmd_ortho_witness(const RunConfig& cfg, std::ostream& out) {
    const auto w = non_ortho_witness(cfg.n);
    if (cfg.format == "json") {
        write_json(out, json{{"n", w.n}, {"atom_count", w.atom_count}, {"coatom_count", w.coatom_count}, {"reason", w.reason}});
        return kExitOk;
    }
    out << "atoms " << w.atom_count << '\n' << "coatoms " << w.coatom_count << '\n' << "reason " << w.reason << '\n';
    return kExitOk;
}

// ---- cardinal / hasse ---------------------------------------------------------------------

int cmd_cardinal_eval(const RunConfig& cfg, std::ostream& out) {
    const ContinuumModel model = load_model(cfg.model);
    out << to_string(evaluate_expression(cfg.expression, model)) << '\n';
    return kExitOk;
}

int cmd_hasse(const RunConfig& cfg, const Limits& limits, std::ostream& out) {
    const int sources = (cfg.n >= 0) + !cfg.chain_file.empty() + !cfg.antichain_file.empty();
    if (sources != 1) throw DomainError("hasse: give exactly one of --n, --chain, --antichain");
    if (cfg.n >= 0) {
        out << hasse_dot(cfg.n, limits);
        return kExitOk;
    }
    const auto members = read_file(cfg.chain_file.empty() ? cfg.antichain_file : cfg.chain_file, -1);
    out << hasse_dot(members);
    return kExitOk;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    RunConfig cfg;
    CLI::App app{"pilat: partition lattice engine"};
    app.set_version_flag("--version", std::string("pilat ") + kVersion);
    app.require_subcommand(1);
    app.add_option("--output", cfg.output, "Write output to this file instead of stdout");

    auto n_opt = [&](CLI::App* sub, bool required) {
        auto* o = sub->add_option("--n", cfg.n, "Ground-set size")->check(CLI::Range(0, kMaxGround));
        if (required) o->required();
    };
    auto out_opt = [&](CLI::App* sub, std::vector<std::string> formats) {
        sub->add_option("--out", cfg.format, "Output format")->check(CLI::IsMember(formats));
    };

    auto* enumerate = app.add_subcommand("enumerate", "List Pi_n in RGS order, or print its counts");
    n_opt(enumerate, true);
    enumerate->add_flag("--count", cfg.count, "Print Bell/Stirling/atom/coatom counts");
    out_opt(enumerate, {"text", "json"});

    auto* chains = app.add_subcommand("chains", "Chain constructions and checks");
    chains->require_subcommand(1);
    auto* keyframe = chains->add_subcommand("keyframe", "Keyframe/inbetween maximal chain on 2^k elements");
    keyframe->add_option("--k", cfg.k, "Bit length")->required()->check(CLI::Range(0, 30));
    out_opt(keyframe, {"text", "dot"});
    auto* cverify = chains->add_subcommand("verify", "Check a chain file (one literal per line)");
    cverify->add_option("file", cfg.file, "Chain file, - for stdin")->required();
    n_opt(cverify, false);
    cverify->add_flag("--maximal", cfg.require_maximal, "Fail unless the chain is maximal");
    auto* cextend = chains->add_subcommand("extend", "Extend a chain file to a maximal chain");
    cextend->add_option("file", cfg.file, "Chain file, - for stdin")->required();
    n_opt(cextend, false);
    auto* cmaximal = chains->add_subcommand("maximal", "Count (or list) every maximal chain of Pi_n");
    n_opt(cmaximal, true);
    cmaximal->add_flag("--list", cfg.list, "Print each chain");

    auto* antichains = app.add_subcommand("antichains", "Antichain constructions and checks");
    antichains->require_subcommand(1);
    auto* doubleton = antichains->add_subcommand("doubleton", "Singular partitions with a doubleton block");
    auto* bipartition = antichains->add_subcommand("bipartition", "All two-block partitions");
    for (auto* sub : {doubleton, bipartition}) {
        n_opt(sub, true);
        sub->add_flag("--verify", cfg.verify, "Check the antichain property and maximality");
    }
    auto* averify = antichains->add_subcommand("verify", "Check an antichain file");
    auto* aextend = antichains->add_subcommand("extend", "Greedily extend an antichain file to a maximal one");
    for (auto* sub : {averify, aextend}) {
        sub->add_option("file", cfg.file, "Antichain file, - for stdin")->required();
        n_opt(sub, false);
    }

    auto* complements = app.add_subcommand("complements", "Complement enumeration and census");
    complements->require_subcommand(1);
    auto* census = complements->add_subcommand("census", "Complement counts for every partition of Pi_n");
    n_opt(census, true);
    out_opt(census, {"text", "csv", "json"});
    census->add_option("--jobs", cfg.jobs, "Worker threads")->check(CLI::Range(1u, 256u));
    auto* clist = complements->add_subcommand("list", "All complements of one partition");
    clist->add_option("partition", cfg.literal, "Partition literal, e.g. \"0 1|2 3\"")->required();
    n_opt(clist, false);

    auto* ortho = app.add_subcommand("ortho", "Orthocomplementation audit");
    ortho->require_subcommand(1);
    auto* osearch = ortho->add_subcommand("search", "Search for an orthocomplementation of Pi_n");
    n_opt(osearch, true);
    osearch->add_flag("--exhaustive", cfg.exhaustive, "Allow the larger search cap");
    osearch->add_flag("--no-prune", cfg.no_prune, "Plain backtracking without cover-profile pruning");
    auto* owitness = ortho->add_subcommand("witness", "Atom/coatom counting witness for n >= 5");
    n_opt(owitness, true);
    out_opt(owitness, {"text", "json"});

    auto* cardinal = app.add_subcommand("cardinal", "Symbolic cardinal arithmetic");
    cardinal->require_subcommand(1);
    auto* eval = cardinal->add_subcommand("eval", "Evaluate a cardinal expression");
    eval->add_option("expr", cfg.expression, "Expression, e.g. \"pow(aleph(0),aleph(0))\"")->required();
    eval->add_option("--model", cfg.model, "gch or a model JSON file");

    auto* hasse = app.add_subcommand("hasse", "Hasse diagram in DOT");
    hasse->add_option("--n", cfg.n, "Whole lattice Pi_n")->check(CLI::Range(0, kMaxGround));
    hasse->add_option("--chain", cfg.chain_file, "Chain file");
    hasse->add_option("--antichain", cfg.antichain_file, "Antichain file");

    std::vector<const char*> argv{"pilat"};
    for (const auto& a : args) argv.push_back(a.c_str());
    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kExitOk;
    } catch (const CLI::CallForVersion&) {
        out << "pilat " << kVersion << '\n';
        return kExitOk;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << '\n';
        return kExitUsage;
    }

    std::ostringstream buffer;
    int code = kExitOk;
    try {
        const Limits limits = Limits::from_env();
        if (*enumerate) code = cmd_enumerate(cfg, limits, buffer);
        else if (*keyframe) code = cmd_chains_keyframe(cfg, limits, buffer);
        else if (*cverify) code = cmd_chains_verify(cfg, buffer);
        else if (*cextend) code = cmd_chains_extend(cfg, buffer);
        else if (*cmaximal) code = cmd_chains_maximal(cfg, limits, buffer);
        else if (*doubleton) code = cmd_antichains_construct(true, cfg, limits, buffer);
        else if (*bipartition) code = cmd_antichains_construct(false, cfg, limits, buffer);
        else if (*averify) code = cmd_antichains_verify(cfg, limits, buffer);
        else if (*aextend) code = cmd_antichains_extend(cfg, limits, buffer);
        else if (*census) code = cmd_complements_census(cfg, limits, buffer);
        else if (*clist) code = cmd_complements_list(cfg, limits, buffer);
        else if (*osearch) code = cmd_ortho_search(cfg, limits, buffer);
        else if (*owitness) code = cmd_ortho_witness(cfg, buffer);
        else if (*eval) code = cmd_cardinal_eval(cfg, buffer);
        else if (*hasse) code = cmd_hasse(cfg, limits, buffer);
    } catch (const Error& e) {
        err << "error: " << e.what() << '\n';
        return kExitUsage;
    }

    if (cfg.output.empty()) {
        out << buffer.str();
    } else {
        std::ofstream file(cfg.output, std::ios::binary);
        if (!file) {
            err << "error: cannot write '" << cfg.output << "'\n";
            return kExitUsage;
        }
        file << buffer.str();
    }
    return code;
}

}  // namespace pilat
