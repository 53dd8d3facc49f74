#include "mohcs/cli.hpp"

#include <atomic>
#include <chrono>
#include <cstdlib>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <optional>
#include <sstream>
#include <thread>

#include "CLI11.hpp"
#include "mohcs/connectivity.hpp"
#include "mohcs/edge_list.hpp"
#include "mohcs/hcs.hpp"
#include "mohcs/mining.hpp"
#include "mohcs/report.hpp"
#include "mohcs/synthgen.hpp"

namespace mohcs::cli {

namespace {

constexpr std::size_t large_mincut_vertices = 100000;
constexpr std::uint64_t default_seed = 1;

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct RunConfig {
    std::string input;
    std::string output;
    std::string truth_output;
    std::string shrinkage_output;
    std::string format = "text";
    std::size_t min_size = default_min_size;
    bool via_cut = false;
    bool allow_large = false;
    bool quiet = false;
    std::size_t k = 0;
    std::size_t n = 0;
    double p = 0.0;
    double q = 0.0;
    std::optional<std::uint64_t> seed;
    std::size_t repetitions = 1;
    std::size_t jobs = 1;
};

ParsedGraph load(const std::string& path) {
    if (path == "-") {
        return read_edge_list(std::cin);
    }
    return read_edge_list_file(path);
}

// Writes to the --output file when given, else to the default stream.
class Sink {
  public:
    Sink(const std::string& path, std::ostream& fallback) : stream_(&fallback) {
        if (!path.empty()) {
            file_.open(path, std::ios::binary);
            if (!file_) {
                throw UsageError("cannot write '" + path + "'");
            }
            stream_ = &file_;
        }
    }
    std::ostream& stream() { return *stream_; }

  private:
    std::ofstream file_;
    std::ostream* stream_;
};

ReportFormat parse_format(const std::string& name) {
    if (name == "text") {
        return ReportFormat::text;
    }
    if (name == "structured") {
        return ReportFormat::structured;
    }
    throw UsageError("unknown format '" + name + "'");
}

void report_ingest(std::ostream& err, const ParsedGraph& parsed, bool quiet) {
    if (quiet) {
        return;
    }
    err << "read " << parsed.graph.vertex_count() << " vertices, " << parsed.graph.edge_count()
        << " edges";
    if (parsed.stats.duplicate_edges + parsed.stats.self_loops > 0) {
        err << " (dropped " << parsed.stats.duplicate_edges << " duplicate edges, "
            << parsed.stats.self_loops << " self-loops)";
    }
    err << '\n';
}

PlantedSpec planted_spec(const RunConfig& cfg, std::uint64_t seed) {
    PlantedSpec spec{cfg.k, cfg.n, cfg.p, cfg.q, seed};
    try {
        validate(spec);
    } catch (const GraphError& e) {
        throw UsageError(e.what());
    }
    return spec;
}

std::uint64_t resolve_seed(const RunConfig& cfg, std::ostream& err) {
    const std::uint64_t seed = cfg.seed.value_or(default_seed);
    err << "seed: " << seed << '\n';
    return seed;
}

int cmd_check(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
    const ParsedGraph parsed = load(cfg.input);
    report_ingest(err, parsed, cfg.quiet);
    const Graph& g = parsed.graph;
    out << "vertices: " << g.vertex_count() << '\n' << "edges: " << g.edge_count() << '\n';
    if (g.empty()) {
        out << "highly_connected: undefined (empty graph)\n";
        return exit_ok;
    }
    out << "min_degree: " << g.min_degree() << '\n';
    out << "highly_connected: " << (is_highly_connected(g) ? "true" : "false") << '\n';
    if (cfg.via_cut && g.vertex_count() >= 2) {
        const auto connectivity = edge_connectivity(g);
        const bool via_cut = 2 * connectivity.size >= g.vertex_count();
        out << "edge_connectivity: " << connectivity.size << '\n';
        out << "highly_connected_via_cut: " << (via_cut ? "true" : "false") << '\n';
        if (via_cut != is_highly_connected(g)) {
            throw InvariantError("degree test and cut test disagree");
        }
    }
    return exit_ok;
}

int cmd_mincut(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
    const ParsedGraph parsed = load(cfg.input);
    report_ingest(err, parsed, cfg.quiet);
    const Graph& g = parsed.graph;
    if (g.vertex_count() > large_mincut_vertices && !cfg.allow_large) {
        throw UsageError("graph has " + std::to_string(g.vertex_count()) +
                         " vertices; the minimum cut is cubic-time in the worst case, pass "
                         "--allow-large to run it anyway");
    }
    if (g.vertex_count() < 2) {
        throw UsageError("minimum cut needs at least two vertices");
    }
    const auto result = edge_connectivity(g);
    Sink sink(cfg.output, out);
    std::ostream& o = sink.stream();
    o << "edge_connectivity: " << result.size << '\n';
    o << "side_a:";
    for (const auto& label : sorted_labels(g, result.cut.side_a)) {
        o << ' ' << label;
    }
    o << "\nside_b:";
    for (const auto& label : sorted_labels(g, result.cut.side_b)) {
        o << ' ' << label;
    }
    o << "\ncut_edges:\n";
    for (auto [u, v] : result.cut.cut_edges) {
        o << g.label(u) << ' ' << g.label(v) << '\n';
    }
    return exit_ok;
}

int cmd_cluster(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
    const ReportFormat format = parse_format(cfg.format);
    const ParsedGraph parsed = load(cfg.input);
    report_ingest(err, parsed, cfg.quiet);
    const MiningReport report =
        mine(parsed.graph, {cfg.min_size, format == ReportFormat::structured});
    {
        Sink sink(cfg.output, out);
        write_report(sink.stream(), parsed.graph, report, format, cfg.min_size);
    }
    if (!cfg.shrinkage_output.empty()) {
        Sink sink(cfg.shrinkage_output, out);
        write_shrinkage(sink.stream(), report);
    }
    if (!cfg.quiet) {
        write_summary(err, report.subgraphs, report.singletons.size());
        err << "remaining vertices per iteration:";
        for (std::size_t size : report.working_sizes) {
            err << ' ' << size;
        }
        err << '\n';
    }
    return exit_ok;
}

int cmd_hcs(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
    const ReportFormat format = parse_format(cfg.format);
    const ParsedGraph parsed = load(cfg.input);
    report_ingest(err, parsed, cfg.quiet);
    const HcsResult result = hcs(parsed.graph, cfg.min_size);
    Sink sink(cfg.output, out);
    write_report(sink.stream(), parsed.graph, result, format, cfg.min_size);
    if (!cfg.quiet) {
        write_summary(err, result.subgraphs, result.singletons.size());
    }
    return exit_ok;
}

int cmd_gen(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
    const PlantedSpec spec = planted_spec(cfg, resolve_seed(cfg, err));
    for (const auto& warning : validate(spec)) {
        err << "warning: " << warning << '\n';
    }
    const PlantedGraph planted = generate_planted(spec);
    {
        Sink sink(cfg.output, out);
        write_edge_list(sink.stream(), planted.graph);
    }
    std::string truth_path = cfg.truth_output;
    if (truth_path.empty() && !cfg.output.empty()) {
        truth_path = cfg.output + ".truth";
    }
    if (!truth_path.empty()) {
        Sink sink(truth_path, out);
        write_vertex_sets(sink.stream(), planted.graph, planted.truth);
    }
    if (!cfg.quiet) {
        err << "generated " << planted.graph.vertex_count() << " vertices, "
            << planted.graph.edge_count() << " edges\n";
    }
    return exit_ok;
}

int cmd_linegraph(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
    const ParsedGraph parsed = load(cfg.input);
    report_ingest(err, parsed, cfg.quiet);
    const LineGraph lg = line_graph(parsed.graph);
    Sink sink(cfg.output, out);
    write_edge_list(sink.stream(), lg.graph);
    if (!cfg.quiet) {
        err << "line graph: " << lg.graph.vertex_count() << " vertices, " << lg.graph.edge_count()
            << " edges\n";
    }
    return exit_ok;
}

struct BenchRow {
    std::uint64_t seed = 0;
    std::size_t vertices = 0;
    std::size_t edges = 0;
    std::size_t mohcs_found = 0;
    RecoveryScore mohcs;
    std::size_t hcs_found = 0;
    RecoveryScore hcs;
    double mohcs_ms = 0.0;
    double hcs_ms = 0.0;
};

std::vector<VertexSet> member_sets(const std::vector<SubgraphRecord>& records) {
    std::vector<VertexSet> sets;
    sets.reserve(records.size());
    for (const auto& record : records) {
        sets.push_back(record.members);
    }
    return sets;
}

BenchRow bench_once(const PlantedSpec& spec, std::size_t min_size) {
    using clock = std::chrono::steady_clock;
    const PlantedGraph planted = generate_planted(spec);
    BenchRow row;
    row.seed = spec.seed;
    row.vertices = planted.graph.vertex_count();
    row.edges = planted.graph.edge_count();

    auto start = clock::now();
    const MiningReport report = mine(planted.graph, {min_size, false});
    row.mohcs_ms = std::chrono::duration<double, std::milli>(clock::now() - start).count();
    row.mohcs_found = report.subgraphs.size();
    row.mohcs = recovery_score(member_sets(report.subgraphs), planted.truth);

    start = clock::now();
    const HcsResult baseline = hcs(planted.graph, min_size);
    row.hcs_ms = std::chrono::duration<double, std::milli>(clock::now() - start).count();
    row.hcs_found = baseline.subgraphs.size();
    row.hcs = recovery_score(member_sets(baseline.subgraphs), planted.truth);
    return row;
}

int cmd_bench(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
    const std::uint64_t seed = resolve_seed(cfg, err);
    const PlantedSpec base = planted_spec(cfg, seed);
    for (const auto& warning : validate(base)) {
        err << "warning: " << warning << '\n';
    }
    std::vector<BenchRow> rows(cfg.repetitions);
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
        for (std::size_t rep = next++; rep < rows.size(); rep = next++) {
            PlantedSpec spec = base;
            spec.seed = seed + rep;
            rows[rep] = bench_once(spec, cfg.min_size);
        }
    };
    const std::size_t jobs = std::max<std::size_t>(1, std::min(cfg.jobs, rows.size()));
    std::vector<std::thread> threads;
    for (std::size_t j = 1; j < jobs; ++j) {
        threads.emplace_back(worker);
    }
    worker();
    for (auto& t : threads) {
        t.join();
    }

    Sink sink(cfg.output, out);
    std::ostream& o = sink.stream();
    o << std::fixed << std::setprecision(4);
    o << "# k=" << cfg.k << " n=" << cfg.n << " p=" << cfg.p << " q=" << cfg.q
      << " reps=" << cfg.repetitions << " seed=" << seed << " min_size=" << cfg.min_size << '\n';
    o << "rep\tseed\tvertices\tedges\tmohcs_found\tmohcs_exact\tmohcs_jaccard\thcs_found\t"
         "hcs_exact\thcs_jaccard\n";
    double mohcs_exact = 0, mohcs_jaccard = 0, hcs_exact = 0, hcs_jaccard = 0;
    double mohcs_ms = 0, hcs_ms = 0;
    for (std::size_t rep = 0; rep < rows.size(); ++rep) {
        const BenchRow& r = rows[rep];
        o << rep << '\t' << r.seed << '\t' << r.vertices << '\t' << r.edges << '\t'
          << r.mohcs_found << '\t' << r.mohcs.exact_matches << '\t' << r.mohcs.mean_jaccard()
          << '\t' << r.hcs_found << '\t' << r.hcs.exact_matches << '\t' << r.hcs.mean_jaccard()
          << '\n';
        mohcs_exact += static_cast<double>(r.mohcs.exact_matches);
        mohcs_jaccard += r.mohcs.mean_jaccard();
        hcs_exact += static_cast<double>(r.hcs.exact_matches);
        hcs_jaccard += r.hcs.mean_jaccard();
        mohcs_ms += r.mohcs_ms;
        hcs_ms += r.hcs_ms;
    }
    const auto reps = static_cast<double>(rows.size());
    o << "mean\t-\t-\t-\t-\t" << mohcs_exact / reps << '\t' << mohcs_jaccard / reps << "\t-\t"
      << hcs_exact / reps << '\t' << hcs_jaccard / reps << '\n';

    // Wall-clock times vary run to run, so they stay out of the table.
    err << std::fixed << std::setprecision(3);
    err << "timing (ms)\trep\tmohcs\thcs\n";
    for (std::size_t rep = 0; rep < rows.size(); ++rep) {
        err << "timing\t" << rep << '\t' << rows[rep].mohcs_ms << '\t' << rows[rep].hcs_ms << '\n';
    }
    err << "timing\tmean\t" << mohcs_ms / reps << '\t' << hcs_ms / reps << '\n';
    return exit_ok;
}

std::size_t default_jobs() {
    if (const char* env = std::getenv(jobs_env_var)) {
        try {
            const long value = std::stol(env);
            if (value >= 1) {
                return static_cast<std::size_t>(value);
            }
        } catch (const std::exception&) {
        }
    }
    return 1;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Mining overlapping highly connected subgraphs", "mohcs"};
    app.require_subcommand(1);
    RunConfig cfg;
    cfg.jobs = default_jobs();

    auto add_input = [&cfg](CLI::App* sub) {
        sub->add_option("input", cfg.input, "Edge-list file ('-' for stdin)")->required();
    };
    auto add_output = [&cfg](CLI::App* sub) {
        sub->add_option("-o,--output", cfg.output, "Write output to this file");
    };
    auto add_quiet = [&cfg](CLI::App* sub) {
        sub->add_flag("--quiet", cfg.quiet, "Suppress diagnostics on stderr");
    };
    auto add_min_size = [&cfg](CLI::App* sub) {
        sub->add_option("--min-size", cfg.min_size, "Smallest subgraph reported")
            ->check(CLI::Range(std::size_t{2}, std::numeric_limits<std::size_t>::max()));
    };
    auto add_format = [&cfg](CLI::App* sub) {
        sub->add_option("--format", cfg.format, "Report format")
            ->check(CLI::IsMember({"text", "structured"}));
    };
    auto add_planted = [&cfg](CLI::App* sub) {
        sub->add_option("--k", cfg.k, "Number of planted clusters")->required();
        sub->add_option("--n", cfg.n, "Vertices per cluster")->required();
        sub->add_option("--p", cfg.p, "Intra-cluster edge probability")->required();
        sub->add_option("--q", cfg.q, "Inter-cluster edge probability")->required();
        sub->add_option("--seed", cfg.seed, "RNG seed (default 1)");
    };

    auto* check = app.add_subcommand("check", "Test whether a graph is highly connected");
    add_input(check);
    add_quiet(check);
    check->add_flag("--via-cut", cfg.via_cut, "Also run the minimum-cut based test");

    auto* mincut = app.add_subcommand("mincut", "Global minimum edge cut");
    add_input(mincut);
    add_output(mincut);
    add_quiet(mincut);
    mincut->add_flag("--allow-large", cfg.allow_large, "Permit graphs above 100000 vertices");

    auto* cluster = app.add_subcommand("cluster", "Mine overlapping highly connected subgraphs");
    add_input(cluster);
    add_output(cluster);
    add_quiet(cluster);
    add_min_size(cluster);
    add_format(cluster);
    cluster->add_option("--shrinkage", cfg.shrinkage_output,
                        "Write per-iteration remaining vertex counts to this file");

    auto* hcs_cmd = app.add_subcommand("hcs", "Minimum-cut clustering baseline");
    add_input(hcs_cmd);
    add_output(hcs_cmd);
    add_quiet(hcs_cmd);
    add_min_size(hcs_cmd);
    add_format(hcs_cmd);

    auto* gen = app.add_subcommand("gen", "Generate a planted-partition graph");
    add_planted(gen);
    add_output(gen);
    add_quiet(gen);
    gen->add_option("--truth", cfg.truth_output,
                    "Ground-truth file (default: <output>.truth when --output is set)");

    auto* linegraph = app.add_subcommand("linegraph", "Line graph of an edge list");
    add_input(linegraph);
    add_output(linegraph);
    add_quiet(linegraph);

    auto* bench = app.add_subcommand("bench", "Compare MOHCS and HCS on planted graphs");
    add_planted(bench);
    add_output(bench);
    add_min_size(bench);
    bench->add_option("--reps", cfg.repetitions, "Repetitions")
        ->check(CLI::Range(std::size_t{1}, std::numeric_limits<std::size_t>::max()));
    bench->add_option("--jobs", cfg.jobs, "Parallel repetitions (default $MOHCS_JOBS or 1)")
        ->check(CLI::Range(std::size_t{1}, std::size_t{1024}));

    std::vector<const char*> argv;
    argv.reserve(args.size());
    for (const auto& a : args) {
        argv.push_back(a.c_str());
    }
    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? exit_ok : exit_usage;
    }

    try {
        if (*check) return cmd_check(cfg, out, err);
        if (*mincut) return cmd_mincut(cfg, out, err);
        if (*cluster) return cmd_cluster(cfg, out, err);
        if (*hcs_cmd) return cmd_hcs(cfg, out, err);
        if (*gen) return cmd_gen(cfg, out, err);
        if (*linegraph) return cmd_linegraph(cfg, out, err);
        if (*bench) return cmd_bench(cfg, out, err);
    } catch (const UsageError& e) {
        err << "error: " << e.what() << '\n';
        return exit_usage;
    } catch (const ParseError& e) {
        err << "error: " << e.what() << '\n';
        return exit_input;
    } catch (const GraphError& e) {
        err << "error: " << e.what() << '\n';
        return exit_input;
    } catch (const InvariantError& e) {
        err << "internal error: " << e.what() << '\n';
        return exit_internal;
    }
    return exit_usage;
}

}  // namespace mohcs::cli
