// pcf: command-line front door for proper conflict-free list coloring.
//
//   pcf verify     <graph> <lists> <coloring>
//   pcf solve      <graph> <lists> [--strategy ...] [-o coloring]
//   pcf choosable  <graph> --k <extra> | --f-file <sizes> [--out lists]
//   pcf gadget     t4|subdiv ... --out <prefix>
//   pcf bench      <corpus-dir> [--seeds N] [--jobs N] [--out report]
//
// Exit codes: 0 ok/satisfiable/choosable, 1 violation/unsatisfiable/not
// choosable/bench expectation failed, 2 parse or precondition error,
// 3 resource limit.  PCF_NODE_LIMIT overrides the search node budget.

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "CLI11.hpp"

#include "pcf/coloring.hpp"
#include "pcf/constructive.hpp"
#include "pcf/degree4.hpp"
#include "pcf/errors.hpp"
#include "pcf/gadgets.hpp"
#include "pcf/graph.hpp"
#include "pcf/oracle.hpp"

using namespace pcf;
namespace fs = std::filesystem;

namespace {

std::string slurp(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ParseError("cannot read file: " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

void spill(const std::string& path, const std::string& text) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw ParseError("cannot write file: " + path);
    out << text;
}

std::uint64_t default_node_limit() {
    const char* env = std::getenv("PCF_NODE_LIMIT");
    if (!env || !*env) return kDefaultNodeLimit;
    char* end = nullptr;
    const unsigned long long v = std::strtoull(env, &end, 10);
    if (end == env || *end != '\0' || v == 0)
        throw std::invalid_argument("PCF_NODE_LIMIT must be a positive integer");
    return v;
}

// "K5", "P4", "C7", "K3,3", "petersen", or a graph file path.
Graph graph_by_name_or_file(const std::string& spec) {
    if (fs::exists(spec)) return parse_graph(slurp(spec));
    if (spec == "petersen") return make_petersen();
    if (spec.size() >= 2 && (spec[0] == 'K' || spec[0] == 'P' || spec[0] == 'C')) {
        const std::string rest = spec.substr(1);
        try {
            if (const auto comma = rest.find(','); comma != std::string::npos && spec[0] == 'K')
                return make_complete_bipartite(std::stoi(rest.substr(0, comma)),
                                               std::stoi(rest.substr(comma + 1)));
            const int n = std::stoi(rest);
            if (spec[0] == 'K') return make_complete(n);
            if (spec[0] == 'P') return make_path(n);
            return make_cycle(n);
        } catch (const std::logic_error&) {
            // fall through to the error below
        }
    }
    throw std::invalid_argument("not a named graph (K5, P4, C7, K3,3, petersen) or file: " + spec);
}

bool lists_at_least_degree_plus(const Graph& g, const ListAssignment& L, int extra) {
    for (int v = 0; v < g.vertex_count(); ++v)
        if (L.list_size(v) < g.degree(v) + extra) return false;
    return true;
}

bool is_five_cycle(const Graph& g) { return g.vertex_count() == 5 && is_cycle_graph(g); }

// --- solve ----------------------------------------------------------------------

std::string route_auto(const Graph& g, const ListAssignment& L) {
    if (is_connected(g) && g.max_degree() <= 3 && lists_at_least_degree_plus(g, L, 2) &&
        !is_five_cycle(g))
        return "constructive";
    if (g.max_degree() <= 4 && lists_at_least_degree_plus(g, L, 3)) return "degree4";
    return "bruteforce";
}

int run_solve(const std::string& graph_file, const std::string& lists_file,
              std::string strategy, std::uint64_t limit, std::optional<std::uint64_t> seed,
              const std::string& out_file) {
    const Graph g = parse_graph(slurp(graph_file));
    const ListAssignment L = parse_lists(slurp(lists_file), g.vertex_count());

    if (strategy == "auto") strategy = route_auto(g, L);

    PartialColoring phi;
    std::string detail;
    if (strategy == "constructive") {
        if (!is_connected(g))
            throw std::invalid_argument("constructive strategy needs a connected graph");
        if (g.max_degree() > 3)
            throw std::invalid_argument("constructive strategy needs max degree <= 3");
        if (!lists_at_least_degree_plus(g, L, 2))
            throw std::invalid_argument("constructive strategy needs |L(v)| >= degree(v)+2");
        if (is_five_cycle(g))
            throw std::invalid_argument(
                "the 5-cycle is the one excluded graph; use bruteforce (it needs 5 colors)");
        const SubcubicResult r = solve_subcubic(g, L, limit);
        phi = r.coloring;
        if (r.used_oracle_core) detail = ", oracle core";
    } else if (strategy == "degree4") {
        if (g.max_degree() > 4)
            throw std::invalid_argument("degree4 strategy needs max degree <= 4");
        if (!lists_at_least_degree_plus(g, L, 3))
            throw std::invalid_argument("degree4 strategy needs |L(v)| >= degree(v)+3");
        Degree4Options opt;
        opt.node_limit = limit;
        const Degree4Result r = solve_maxdeg4_components(g, L, opt);
        phi = r.coloring;
        if (r.stats.fallback_used) detail = ", fallback";
    } else { // bruteforce
        const SolveOutcome o = solve_exhaustive(g, L, limit);
        if (o.status == SolveOutcome::Status::ResourceLimit) {
            std::cerr << "resource limit: " << o.nodes << " nodes explored\n";
            return 3;
        }
        if (o.status == SolveOutcome::Status::Unsatisfiable) {
            std::cout << "unsatisfiable (bruteforce, " << o.nodes << " nodes)\n";
            return 1;
        }
        phi = o.witness;
        detail = ", " + std::to_string(o.nodes) + " nodes";
    }

    if (const auto bad = verify_pcf(g, L, phi))
        throw InternalContradictionError("solver output failed verification: " + bad->describe());
    std::cout << "satisfiable (" << strategy << detail << "), coloring verified";
    if (seed) std::cout << " [seed " << *seed << "]";
    std::cout << '\n';
    if (out_file.empty()) {
        std::cout << serialize_coloring(phi);
    } else {
        spill(out_file, serialize_coloring(phi));
        std::cout << "written: " << out_file << '\n';
    }
    return 0;
}

// --- choosable ------------------------------------------------------------------

std::vector<int> parse_sizes(const std::string& text, int n) {
    std::vector<int> out;
    std::istringstream in(text);
    std::string line;
    while (std::getline(in, line)) {
        if (const auto hash = line.find('#'); hash != std::string::npos) line.resize(hash);
        std::istringstream ls(line);
        int x;
        while (ls >> x) out.push_back(x);
        if (!ls.eof()) throw ParseError("size file: non-integer token in: " + line);
    }
    if (static_cast<int>(out.size()) != n)
        throw ParseError("size file: expected " + std::to_string(n) + " values, got " +
                         std::to_string(out.size()));
    return out;
}

int run_choosable(const std::string& graph_file, std::optional<int> extra,
                  const std::string& f_file, std::uint64_t budget, std::uint64_t limit,
                  int max_n, const std::string& out_file) {
    const Graph g = parse_graph(slurp(graph_file));
    std::vector<int> f;
    if (extra) {
        for (int v = 0; v < g.vertex_count(); ++v) f.push_back(g.degree(v) + *extra);
    } else {
        f = parse_sizes(slurp(f_file), g.vertex_count());
    }

    ChoosabilityBudget b;
    b.max_assignments = budget;
    b.node_limit = limit;
    b.guard_n = max_n;
    const ChoosabilityVerdict v = check_pcf_choosable(g, f, b);
    if (v.status == ChoosabilityVerdict::Status::ResourceLimit) {
        std::cerr << "resource limit after " << v.assignments_tested << " assignments\n";
        return 3;
    }
    if (v.status == ChoosabilityVerdict::Status::Choosable) {
        std::cout << "choosable (" << v.assignments_tested << " canonical assignments)\n";
        return 0;
    }
    std::cout << "not choosable (assignment " << v.assignments_tested << ")\n";
    const std::string lists = serialize_lists(*v.counterexample);
    if (out_file.empty()) {
        std::cout << lists;
    } else {
        spill(out_file, lists);
        std::cout << "counterexample written: " << out_file << '\n';
    }
    return 1;
}

// --- gadget ---------------------------------------------------------------------

int write_gadget(const GadgetInstance& gad, const std::string& prefix) {
    spill(prefix + ".graph", serialize_gadget_graph(gad));
    spill(prefix + ".lists", serialize_gadget_lists(gad));
    std::cout << "gadget " << gad.construction << " (" << gad.params << "): " << prefix
              << ".graph, " << prefix << ".lists\n";
    return 0;
}

// --- bench ----------------------------------------------------------------------

struct BenchRun {
    std::string name;
    std::string seed = "-";
    fs::path graph_file;
    std::optional<fs::path> lists_file;
    std::uint64_t seed_value = 0;
    std::optional<bool> expect_sat;

    // filled by the worker
    std::string strategy, status, detail = "-", fallback = "-", verified = "-", expect = "-";
    long long ms = 0;
    bool ok = true;
};

void bench_one(BenchRun& r, int extra, int universe, std::uint64_t limit) {
    const auto t0 = std::chrono::steady_clock::now();
    try {
        const Graph g = parse_graph(slurp(r.graph_file.string()));
        ListAssignment L;
        if (r.lists_file) {
            L = parse_lists(slurp(r.lists_file->string()), g.vertex_count());
        } else {
            const int k = extra > 0 ? extra : (g.max_degree() <= 3 ? 2 : 3);
            L = degree_plus_k_lists(g, k, universe, r.seed_value);
        }
        r.strategy = route_auto(g, L);
        bool sat = false;
        PartialColoring phi;
        if (r.strategy == "constructive") {
            const SubcubicResult res = solve_subcubic(g, L, limit);
            phi = res.coloring;
            sat = true;
            r.fallback = res.used_oracle_core ? "oracle-core" : "no";
        } else if (r.strategy == "degree4") {
            Degree4Options opt;
            opt.node_limit = limit;
            const Degree4Result res = solve_maxdeg4_components(g, L, opt);
            phi = res.coloring;
            sat = true;
            r.fallback = res.stats.fallback_used ? "yes" : "no";
        } else {
            const SolveOutcome o = solve_exhaustive(g, L, limit);
            if (o.status == SolveOutcome::Status::ResourceLimit) {
                r.status = "limit";
                r.ok = false;
                return;
            }
            sat = o.status == SolveOutcome::Status::Satisfiable;
            phi = o.witness;
            r.detail = std::to_string(o.nodes);
        }
        r.status = sat ? "sat" : "unsat";
        if (sat) {
            const bool good = !verify_pcf(g, L, phi).has_value();
            r.verified = good ? "yes" : "NO";
            r.ok = good;
        }
        if (r.expect_sat) {
            const bool match = *r.expect_sat == sat;
            r.expect = match ? "ok" : "VIOLATION";
            r.ok = r.ok && match;
        }
    } catch (const std::exception& e) {
        r.status = "error";
        r.detail = e.what();
        r.ok = false;
    }
    r.ms = std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() -
                                                                 t0)
               .count();
}

int run_bench(const std::string& dir, int seeds, int jobs, int extra, int universe,
              std::uint64_t limit, const std::string& out_file) {
    std::vector<fs::path> graphs;
    for (const auto& entry : fs::directory_iterator(dir))
        if (entry.is_regular_file() && entry.path().extension() == ".graph")
            graphs.push_back(entry.path());
    std::sort(graphs.begin(), graphs.end());
    if (graphs.empty()) throw std::invalid_argument("no .graph files in " + dir);

    std::vector<BenchRun> runs;
    for (const auto& gf : graphs) {
        BenchRun base;
        base.name = gf.stem().string();
        base.graph_file = gf;
        fs::path lf = gf;
        lf.replace_extension(".lists");
        if (fs::exists(lf)) base.lists_file = lf;
        fs::path ef = gf;
        ef.replace_extension(".expect");
        if (fs::exists(ef)) {
            std::string want = slurp(ef.string());
            want.erase(std::remove_if(want.begin(), want.end(), ::isspace), want.end());
            if (want != "sat" && want != "unsat")
                throw ParseError(ef.string() + ": expected 'sat' or 'unsat'");
            base.expect_sat = want == "sat";
        }
        if (base.lists_file) {
            runs.push_back(base);
        } else {
            for (int s = 0; s < seeds; ++s) {
                BenchRun r = base;
                r.seed = std::to_string(s);
                r.seed_value = static_cast<std::uint64_t>(s);
                runs.push_back(std::move(r));
            }
        }
    }

    std::atomic<std::size_t> next{0};
    auto worker = [&] {
        for (std::size_t i = next.fetch_add(1); i < runs.size(); i = next.fetch_add(1))
            bench_one(runs[i], extra, universe, limit);
    };
    const int nthreads = std::max(1, std::min<int>(jobs, static_cast<int>(runs.size())));
    std::vector<std::thread> pool;
    for (int t = 1; t < nthreads; ++t) pool.emplace_back(worker);
    worker();
    for (auto& t : pool) t.join();

    std::ostringstream rep;
    rep << "name\tseed\tstrategy\tstatus\tnodes\tfallback\tverified\tms\texpect\n";
    int verified = 0, fallbacks = 0, bad = 0;
    long long total_ms = 0;
    for (const auto& r : runs) {
        rep << r.name << '\t' << r.seed << '\t' << r.strategy << '\t' << r.status << '\t'
            << r.detail << '\t' << r.fallback << '\t' << r.verified << '\t' << r.ms << '\t'
            << r.expect << '\n';
        verified += r.verified == "yes";
        fallbacks += r.fallback == "yes" || r.fallback == "oracle-core";
        bad += !r.ok;
        total_ms += r.ms;
    }
    rep << "# " << runs.size() << " runs, " << verified << " verified colorings, " << fallbacks
        << " fallbacks, " << bad << " failures, " << total_ms << " ms total\n";
    if (out_file.empty()) {
        std::cout << rep.str();
    } else {
        spill(out_file, rep.str());
        std::cout << "report written: " << out_file << '\n';
    }
    return bad == 0 ? 0 : 1;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"proper conflict-free list coloring toolkit"};
    app.require_subcommand(1);

    std::string graph_file, lists_file, coloring_file, out_file, strategy = "auto", f_file;
    std::optional<std::uint64_t> seed;
    std::optional<int> extra_colors;
    std::uint64_t limit = 0, budget = 10'000'000;
    int max_n = 7, seeds = 5, jobs = 1, bench_extra = 0, universe = 12;

    auto* verify = app.add_subcommand("verify", "check a coloring against a graph and lists");
    verify->add_option("graph", graph_file)->required();
    verify->add_option("lists", lists_file)->required();
    verify->add_option("coloring", coloring_file)->required();

    auto* solve = app.add_subcommand("solve", "find a coloring");
    solve->add_option("graph", graph_file)->required();
    solve->add_option("lists", lists_file)->required();
    solve->add_option("--strategy", strategy, "auto|bruteforce|constructive|degree4")
        ->check(CLI::IsMember({"auto", "bruteforce", "constructive", "degree4"}));
    solve->add_option("--seed", seed, "echoed in the report; all strategies are deterministic");
    solve->add_option("--limit", limit, "search node budget (default: PCF_NODE_LIMIT or 1e8)");
    solve->add_option("-o,--output", out_file, "coloring file (default: stdout)");

    auto* choosable = app.add_subcommand("choosable", "decide PCF f-choosability (small graphs)");
    choosable->add_option("graph", graph_file)->required();
    auto* kopt = choosable->add_option("--k", extra_colors, "list sizes = degree + k");
    choosable->add_option("--f-file", f_file, "whitespace-separated list sizes, one per vertex")
        ->excludes(kopt);
    choosable->add_option("--budget", budget, "max list assignments examined");
    choosable->add_option("--limit", limit, "per-assignment search node budget");
    choosable->add_option("--max-n", max_n, "refuse graphs larger than this");
    choosable->add_option("-o,--out", out_file, "counterexample lists file");

    auto* gadget = app.add_subcommand("gadget", "emit a non-choosability gadget");
    gadget->require_subcommand(1);
    std::string base = "K1", prefix;
    int v0 = 0, subdiv_k = 1;
    auto* t4 = gadget->add_subcommand("t4", "four-cycles glued around a replaced vertex");
    t4->add_option("--base", base, "named graph (K1, P3, K3,3, petersen) or graph file");
    t4->add_option("--v0", v0, "vertex of the base to replace");
    t4->add_option("-o,--out", prefix, "output prefix")->required();
    auto* subdiv = gadget->add_subcommand("subdiv", "subdivided cycle with uniform triples");
    subdiv->add_option("--k", subdiv_k, "emits the cycle C(6k+2)")->required();
    subdiv->add_option("-o,--out", prefix, "output prefix")->required();

    auto* bench = app.add_subcommand("bench", "solve every instance in a corpus directory");
    std::string corpus_dir;
    bench->add_option("corpus-dir", corpus_dir, "directory of .graph/.lists/.expect files")
        ->required();
    bench->add_option("--seeds", seeds, "seeded list draws per graph without fixed lists");
    bench->add_option("--jobs", jobs, "worker threads");
    bench->add_option("--extra", bench_extra, "list size = degree + extra (0: pick by degree)");
    bench->add_option("--universe", universe, "colors drawn from {0..universe-1}");
    bench->add_option("--limit", limit, "search node budget per instance");
    bench->add_option("-o,--out", out_file, "report file (default: stdout)");

    CLI11_PARSE(app, argc, argv);

    try {
        if (limit == 0) limit = default_node_limit();
        if (*verify) {
            const Graph g = parse_graph(slurp(graph_file));
            const ListAssignment L = parse_lists(slurp(lists_file), g.vertex_count());
            const PartialColoring phi = parse_coloring(slurp(coloring_file), g.vertex_count());
            if (const auto bad = verify_pcf(g, L, phi)) {
                std::cout << bad->describe() << '\n';
                return 1;
            }
            std::cout << "OK\n";
            return 0;
        }
        if (*solve) return run_solve(graph_file, lists_file, strategy, limit, seed, out_file);
        if (*choosable) {
            if (!extra_colors && f_file.empty())
                throw std::invalid_argument("choosable: need --k or --f-file");
            return run_choosable(graph_file, extra_colors, f_file, budget, limit, max_n,
                                 out_file);
        }
        if (*t4) return write_gadget(t4_gadget(graph_by_name_or_file(base), v0), prefix);
        if (*subdiv) return write_gadget(subdivision_counterexample(subdiv_k), prefix);
        if (*bench)
            return run_bench(corpus_dir, seeds, jobs, bench_extra, universe, limit, out_file);
    } catch (const ParseError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    } catch (const ResourceLimitError& e) {
        std::cerr << "resource limit: " << e.what() << '\n';
        return 3;
    } catch (const InternalContradictionError& e) {
        std::cerr << "internal error: " << e.what() << '\n';
        return 70;
    }
    return 0;
}
