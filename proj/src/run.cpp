#include "dechop/run.hpp"

#include <algorithm>
#include <cstdio>
#include <memory>
#include <set>
#include <sstream>
#include <stdexcept>

#include "dechop/hierarchy.hpp"
#include "dechop/hopset.hpp"
#include "dechop/oracle.hpp"
#include "dechop/sssp.hpp"
#include "dechop/verifier.hpp"

namespace dechop {

Mode parse_mode(const std::string& s) {
    if (s == "hopset") return Mode::kHopset;
    if (s == "sssp") return Mode::kSssp;
    if (s == "mssp") return Mode::kMssp;
    if (s == "oracle") return Mode::kOracle;
    throw std::invalid_argument("unknown mode '" + s + "'");
}

const char* mode_name(Mode m) {
    switch (m) {
        case Mode::kHopset: return "hopset";
        case Mode::kSssp: return "sssp";
        case Mode::kMssp: return "mssp";
        case Mode::kOracle: return "oracle";
    }
    return "?";
}

std::vector<Vertex> resolve_sources(const RunConfig& cfg, std::size_t n, const std::vector<Query>& queries) {
    std::vector<Vertex> out = cfg.sources;
    if (out.empty()) {
        std::set<Vertex> seen;
        for (const auto& q : queries)
            if (seen.insert(q.s).second) out.push_back(q.s);
    }
    if (out.empty()) {
        std::size_t count = cfg.mode == Mode::kMssp ? std::min<std::size_t>(8, n) : std::min<std::size_t>(1, n);
        for (Vertex v = 0; v < count; ++v) out.push_back(v);
    }
    if (cfg.mode == Mode::kSssp && out.size() != 1) throw std::invalid_argument("sssp mode takes exactly one source");
    return out;
}

namespace {

std::string fmt_ratio(const Rational& r) {
    if (r.is_infinite()) return "inf";
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.6f", r.to_double());
    return buf;
}

bool is_stretch(const std::string& name) {
    return name == "hopset_stretch" || name == "sssp_stretch" || name == "oracle_stretch";
}

// Everything one run keeps alive; built after the workload is validated.
struct Pipeline {
    DynamicGraph g;
    std::unique_ptr<HopsetState> hs;
    std::unique_ptr<SourceSet> ss;
    std::unique_ptr<DistanceOracle> oracle;
    std::vector<std::pair<Vertex, Vertex>> pairs;
    RunConfig cfg;

    Pipeline(const RunConfig& c, const Workload& w, const std::vector<Query>& queries) : cfg(c) {
        g = load_graph(w.graph.n, w.graph.edges);
        hs = std::make_unique<HopsetState>(g, HopsetParams{c.k, c.rho, c.eps, c.seed});
        if (c.mode == Mode::kSssp || c.mode == Mode::kMssp)
            ss = std::make_unique<SourceSet>(*hs, resolve_sources(c, w.graph.n, queries));
        if (c.mode == Mode::kOracle) oracle = std::make_unique<DistanceOracle>(*hs, c.k, c.eps, c.seed);
        pairs = sample_pairs(w.graph.n, c.pairs_sample, c.seed);
    }

    void apply(const Update& up) {
        if (up.kind == 'D')
            hs->delete_edge(up.u, up.v);
        else
            hs->increase_weight(up.u, up.v, up.delta);
        if (ss) ss->update();
        if (oracle) oracle->update();
    }

    AuditReport audit() const {
        AuditReport r;
        switch (cfg.mode) {
            case Mode::kHopset: {
                r = audit_hopset(*hs, pairs);
                auto s = audit_scales(*hs, pairs);
                r.checks.insert(r.checks.end(), s.checks.begin(), s.checks.end());
                break;
            }
            case Mode::kSssp:
            case Mode::kMssp: r = audit_sources(*ss, g, cfg.eps); break;
            case Mode::kOracle: r = audit_oracle(*oracle, g, pairs); break;
        }
        r.t = g.time();
        return r;
    }

    std::uint64_t scans() const {
        std::uint64_t s = hs->scans_total();
        if (ss) s += ss->scans_total();
        if (oracle) s += oracle->scans_total();
        return s;
    }

    Rational estimate(Vertex s, Vertex v) const {
        if (ss) return ss->query(s, v);
        if (oracle) return oracle->query(s, v);
        AuditGraph ag(g, hs->hopset_edges());
        return bounded_hop_distance(ag, hs->hop_cap(), s, v);
    }
};

void metrics_row(std::ostream& os, const Pipeline& p, std::uint64_t applied, const AuditReport* r) {
    os << p.g.time() << ',' << mode_name(p.cfg.mode) << ',' << applied << ',' << p.hs->hopset_size() << ',';
    if (r) {
        Rational worst(1);
        for (const auto& c : r->checks)
            if (is_stretch(c.name)) worst = max(worst, c.worst_ratio);
        os << fmt_ratio(worst);
    }
    os << ',' << p.scans() << '\n';
}

}  // namespace

RunOutput run(const RunConfig& cfg, const Workload& w, const std::vector<Query>& queries) {
    RunOutput out;
    Pipeline p(cfg, w, queries);
    if (p.ss)
        for (const auto& q : queries)
            if (!p.ss->is_source(q.s)) throw std::invalid_argument("query source " + std::to_string(q.s) + " is not a source");
    out.manifest = p.hs->manifest();

    std::ostringstream m;
    m << "t,mode,updates_applied,hopset_edges,worst_ratio,scans_total\n";
    auto step = [&](std::uint64_t applied) {
        if (cfg.verify_every == 0 || applied % cfg.verify_every != 0) {
            metrics_row(m, p, applied, nullptr);
            return true;
        }
        AuditReport r = p.audit();
        metrics_row(m, p, applied, &r);
        if (r.pass()) return true;
        AuditReport only{r.t, {*r.first_failure()}, {}};
        out.witness = only.csv();
        out.ok = false;
        return false;
    };
    bool good = step(0);
    for (std::size_t i = 0; good && i < w.updates.size(); ++i) {
        p.apply(w.updates[i]);
        good = step(i + 1);
    }
    out.metrics = m.str();
    if (!good) return out;

    std::ostringstream q;
    q << "t,s,v,estimate_num,estimate_den,exact,ratio\n";
    std::vector<Weight> dist;
    Vertex last = kNoVertex;
    for (const auto& qu : queries) {
        if (qu.s != last) {
            dist = exact_dijkstra(p.g, qu.s);
            last = qu.s;
        }
        Rational est = p.estimate(qu.s, qu.v);
        Weight d = dist[qu.v];
        q << p.g.time() << ',' << qu.s << ',' << qu.v << ',';
        if (est.is_infinite())
            q << "inf,1,";
        else
            q << est.num() << ',' << est.den() << ',';
        if (d == kUnreachable) {
            q << "inf," << (est.is_infinite() ? "1.000000" : "0.000000") << '\n';
        } else {
            q << d << ',' << (d == 0 ? std::string(est == Rational(0) ? "1.000000" : "inf")
                                     : fmt_ratio(est / Rational(d)))
              << '\n';
        }
    }
    out.queries = q.str();
    return out;
}

RunOutput verify_snapshot(const RunConfig& cfg, const Workload& w, std::size_t upto) {
    RunOutput out;
    Pipeline p(cfg, w, {});
    out.manifest = p.hs->manifest();
    upto = std::min(upto, w.updates.size());
    for (std::size_t i = 0; i < upto; ++i) p.apply(w.updates[i]);
    AuditReport r = p.audit();
    out.metrics = AuditReport::csv_header() + "\n" + r.csv();
    out.ok = r.pass();
    if (!out.ok) out.witness = AuditReport{r.t, {*r.first_failure()}, {}}.csv();
    return out;
}

double scan_ratio(const HopsetState& hs, const std::vector<std::size_t>& initial_degree) {
    double worst = 0;
    const auto& q = hs.hierarchy().q();
    double d = static_cast<double>(hs.depth());
    for (int j = 0; j <= hs.num_scales(); ++j) {
        if (!hs.active(j)) continue;
        const auto& cs = hs.clusters(j);
        for (int i = 0; i < cs.hierarchy().top() && i < static_cast<int>(q.size()); ++i) {
            const auto& sc = cs.level_scans(i);
            for (Vertex v = 0; v < sc.size(); ++v) {
                if (initial_degree[v] == 0) continue;
                double times = static_cast<double>(sc[v]) / static_cast<double>(initial_degree[v]);
                worst = std::max(worst, times / (d / q[i]));
            }
        }
    }
    return worst;
}

}  // namespace dechop
