#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "dechop/hopset.hpp"
#include "dechop/io.hpp"
#include "dechop/run.hpp"

using namespace dechop;

namespace {

struct Flags {
    std::string graph, updates, queries, out = "-", query_out, manifest;
    std::string mode = "hopset", rho = "1/2", eps = "1/2";
    int k = 2;
    std::uint64_t seed = 1;
    std::uint64_t verify_every = 1;
    std::size_t pairs = 200;
    std::vector<Vertex> sources;
    std::size_t upto = static_cast<std::size_t>(-1);
};

void add_config_flags(CLI::App* app, Flags& f) {
    app->add_option("--graph", f.graph, "graph file: 'n m' then 'u v w' lines")->required();
    app->add_option("--updates", f.updates, "update file: 'D u v' / 'I u v delta' lines");
    app->add_option("--mode", f.mode, "hopset | sssp | mssp | oracle");
    app->add_option("--k", f.k, "hierarchy parameter k");
    app->add_option("--rho", f.rho, "rho in (0,1), e.g. 1/2");
    app->add_option("--eps", f.eps, "eps in (0,1), e.g. 1/4 or 0.25");
    app->add_option("--seed", f.seed, "master seed (DECHOP_SEED overrides)");
    app->add_option("--pairs", f.pairs, "sampled pairs per audit when n > 64");
    app->add_option("--sources", f.sources, "sources for sssp/mssp")->delimiter(',');
    app->add_option("--manifest", f.manifest, "write the parameter manifest here");
}

std::uint64_t effective_seed(std::uint64_t seed) {
    if (const char* env = std::getenv("DECHOP_SEED")) {
        try {
            std::size_t pos = 0;
            auto v = std::stoull(env, &pos);
            if (pos == std::string(env).size()) return v;
        } catch (const std::exception&) {
        }
        throw ParseError(std::string("DECHOP_SEED is not an integer: ") + env);
    }
    return seed;
}

RunConfig make_config(const Flags& f) {
    RunConfig c;
    c.mode = parse_mode(f.mode);
    c.k = f.k;
    c.rho = Rational::parse(f.rho);
    c.eps = Rational::parse(f.eps);
    c.seed = effective_seed(f.seed);
    c.verify_every = f.verify_every;
    c.pairs_sample = f.pairs;
    c.sources = f.sources;
    return c;
}

Workload load_workload(const Flags& f) {
    Workload w;
    w.graph = read_graph_file(f.graph);
    if (!f.updates.empty()) w.updates = read_update_file(f.updates, w.graph.n);
    check_updates(w.graph, w.updates, f.updates);
    return w;
}

void emit(const std::string& path, const std::string& text) {
    if (path.empty()) return;
    if (path == "-") {
        std::cout << text;
        return;
    }
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot write " + path);
    out << text;
}

int cmd_gen(std::size_t n, std::size_t m, Weight wmax, std::size_t deletions, std::uint64_t seed,
            const std::string& graph_out, const std::string& updates_out) {
    Workload w = generate(n, m, wmax, deletions, effective_seed(seed));
    std::ostringstream g, u;
    write_graph(g, w.graph);
    write_updates(u, w.updates);
    emit(graph_out, g.str());
    emit(updates_out, u.str());
    return 0;
}

int cmd_run(const Flags& f) {
    RunConfig cfg = make_config(f);
    Workload w = load_workload(f);
    std::vector<Query> queries;
    if (!f.queries.empty()) queries = read_query_file(f.queries, w.graph.n);
    RunOutput out = run(cfg, w, queries);
    emit(f.out, out.metrics);
    emit(f.manifest, out.manifest);
    if (!out.ok) {
        std::cerr << "audit failure: " << out.witness;
        return 2;
    }
    if (!f.queries.empty()) emit(f.query_out.empty() ? std::string("-") : f.query_out, out.queries);
    return 0;
}

int cmd_verify(const Flags& f) {
    RunConfig cfg = make_config(f);
    Workload w = load_workload(f);
    RunOutput out = verify_snapshot(cfg, w, f.upto);
    emit(f.out, out.metrics);
    emit(f.manifest, out.manifest);
    if (!out.ok) {
        std::cerr << "audit failure: " << out.witness;
        return 2;
    }
    return 0;
}

int cmd_bench(const std::vector<std::size_t>& sizes, std::size_t seeds, const Flags& f) {
    RunConfig cfg = make_config(f);
    std::ostringstream os;
    os << "n,m,seed,updates,hopset_edges_initial,scans_total,scans_per_update,scan_ratio\n";
    for (std::size_t n : sizes) {
        for (std::size_t s = 0; s < seeds; ++s) {
            std::uint64_t seed = cfg.seed + s;
            std::size_t m = std::min(4 * n, n * (n - 1) / 2);
            Workload w = generate(n, m, 8, m, seed);
            DynamicGraph g = load_graph(n, w.graph.edges);
            std::vector<std::size_t> deg(n);
            for (Vertex v = 0; v < n; ++v) deg[v] = g.neighbors(v).size();
            HopsetState hs(g, {cfg.k, cfg.rho, cfg.eps, seed});
            std::size_t initial = hs.hopset_size();
            std::uint64_t before = hs.scans_total();
            for (const auto& up : w.updates) hs.delete_edge(up.u, up.v);
            std::uint64_t scans = hs.scans_total() - before;
            char ratio[32], per[32];
            std::snprintf(ratio, sizeof ratio, "%.4f", scan_ratio(hs, deg));
            std::snprintf(per, sizeof per, "%.1f", w.updates.empty() ? 0.0 : double(scans) / w.updates.size());
            os << n << ',' << m << ',' << seed << ',' << w.updates.size() << ',' << initial << ',' << scans << ','
               << per << ',' << ratio << '\n';
        }
    }
    emit(f.out, os.str());
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"decremental hopsets, shortest paths and distance oracles"};
    app.require_subcommand(1);

    std::size_t n = 64, m = 256, deletions = 0;
    Weight wmax = 8;
    std::uint64_t gen_seed = 1;
    std::string graph_out = "-", updates_out;
    auto* gen = app.add_subcommand("gen", "generate a random graph and deletion stream");
    gen->add_option("--n", n, "vertices")->required();
    gen->add_option("--m", m, "edges")->required();
    gen->add_option("--wmax", wmax, "weights uniform in [1, wmax]");
    gen->add_option("--deletions", deletions, "length of the deletion stream");
    gen->add_option("--seed", gen_seed, "seed (DECHOP_SEED overrides)");
    gen->add_option("--graph-out", graph_out, "graph file ('-' for stdout)");
    gen->add_option("--updates-out", updates_out, "update file");

    Flags rf;
    auto* runc = app.add_subcommand("run", "replay updates with audits and emit CSV metrics");
    add_config_flags(runc, rf);
    runc->add_option("--queries", rf.queries, "query file: 'Q s v' lines");
    runc->add_option("--verify-every", rf.verify_every, "audit every N-th update (0 = never)");
    runc->add_option("--out", rf.out, "metrics CSV ('-' for stdout)");
    runc->add_option("--query-out", rf.query_out, "query CSV (default stdout)");

    Flags vf;
    auto* ver = app.add_subcommand("verify", "audit one snapshot");
    add_config_flags(ver, vf);
    ver->add_option("--upto", vf.upto, "apply only the first N updates");
    ver->add_option("--out", vf.out, "audit CSV ('-' for stdout)");

    Flags bf;
    std::vector<std::size_t> sizes{64, 128, 256};
    std::size_t seeds = 1;
    auto* bench = app.add_subcommand("bench", "scan counts over full deletion sequences");
    bench->add_option("--sizes", sizes, "vertex counts")->delimiter(',');
    bench->add_option("--seeds", seeds, "seeds per size");
    bench->add_option("--k", bf.k, "hierarchy parameter k");
    bench->add_option("--rho", bf.rho, "rho in (0,1)");
    bench->add_option("--eps", bf.eps, "eps in (0,1)");
    bench->add_option("--seed", bf.seed, "first seed (DECHOP_SEED overrides)");
    bench->add_option("--out", bf.out, "CSV ('-' for stdout)");

    CLI11_PARSE(app, argc, argv);

    try {
        if (*gen) return cmd_gen(n, m, wmax, deletions, gen_seed, graph_out, updates_out);
        if (*runc) return cmd_run(rf);
        if (*ver) return cmd_verify(vf);
        if (*bench) return cmd_bench(sizes, seeds, bf);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    }
    return 0;
}
