#include "dechop/io.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <istream>
#include <numeric>
#include <ostream>
#include <random>
#include <sstream>
#include <unordered_set>

namespace dechop {

namespace {

[[noreturn]] void fail(const std::string& name, std::size_t line, const std::string& what) {
    throw ParseError(name + ":" + std::to_string(line) + ": " + what);
}

std::vector<std::string_view> tokens(std::string_view s) {
    std::vector<std::string_view> out;
    std::size_t i = 0;
    while (i < s.size()) {
        while (i < s.size() && (s[i] == ' ' || s[i] == '\t' || s[i] == '\r')) ++i;
        std::size_t j = i;
        while (j < s.size() && s[j] != ' ' && s[j] != '\t' && s[j] != '\r') ++j;
        if (j > i) out.push_back(s.substr(i, j - i));
        i = j;
    }
    return out;
}

std::int64_t integer(std::string_view tok, const std::string& name, std::size_t line) {
    std::int64_t x = 0;
    auto [p, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), x);
    if (ec != std::errc() || p != tok.data() + tok.size()) fail(name, line, "bad integer '" + std::string(tok) + "'");
    return x;
}

Vertex vertex(std::string_view tok, std::size_t n, const std::string& name, std::size_t line) {
    std::int64_t x = integer(tok, name, line);
    if (x < 0 || static_cast<std::uint64_t>(x) >= n) fail(name, line, "vertex " + std::string(tok) + " out of range");
    return static_cast<Vertex>(x);
}

// Non-blank lines with their 1-based line numbers.
std::vector<std::pair<std::size_t, std::vector<std::string_view>>> lines(const std::string& text) {
    std::vector<std::pair<std::size_t, std::vector<std::string_view>>> out;
    std::string_view all(text);
    std::size_t no = 0, pos = 0;
    while (pos < all.size()) {
        std::size_t end = all.find('\n', pos);
        if (end == std::string_view::npos) end = all.size();
        ++no;
        auto toks = tokens(all.substr(pos, end - pos));
        if (!toks.empty()) out.push_back({no, std::move(toks)});
        pos = end + 1;
    }
    return out;
}

std::string slurp(std::istream& in) {
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

std::ifstream open(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ParseError(path + ": cannot open");
    return in;
}

}  // namespace

GraphFile parse_graph(std::istream& in, const std::string& name) {
    std::string text = slurp(in);
    auto ls = lines(text);
    if (ls.empty()) fail(name, 1, "missing header 'n m'");
    auto& [hl, head] = ls[0];
    if (head.size() != 2) fail(name, hl, "header must be 'n m'");
    std::int64_t n = integer(head[0], name, hl), m = integer(head[1], name, hl);
    if (n < 0 || m < 0) fail(name, hl, "negative count");
    if (ls.size() - 1 != static_cast<std::size_t>(m))
        fail(name, hl, "header says " + std::to_string(m) + " edges, found " + std::to_string(ls.size() - 1));
    GraphFile g;
    g.n = static_cast<std::size_t>(n);
    std::unordered_set<std::uint64_t> seen;
    for (std::size_t i = 1; i < ls.size(); ++i) {
        auto& [no, t] = ls[i];
        if (t.size() != 3) fail(name, no, "edge line must be 'u v w'");
        Vertex u = vertex(t[0], g.n, name, no), v = vertex(t[1], g.n, name, no);
        Weight w = integer(t[2], name, no);
        if (u == v) fail(name, no, "self loop");
        if (w < 1) fail(name, no, "weight must be >= 1");
        if (!seen.insert(pair_key(u, v)).second) fail(name, no, "duplicate edge");
        g.edges.push_back({u, v, w});
    }
    return g;
}

std::vector<Update> parse_updates(std::istream& in, const std::string& name, std::size_t n) {
    std::string text = slurp(in);
    std::vector<Update> out;
    for (auto& [no, t] : lines(text)) {
        Update up;
        if (t[0] == "D" && t.size() == 3) {
            up.kind = 'D';
        } else if (t[0] == "I" && t.size() == 4) {
            up.kind = 'I';
            up.delta = integer(t[3], name, no);
            if (up.delta < 1) fail(name, no, "delta must be >= 1");
        } else {
            fail(name, no, "update line must be 'D u v' or 'I u v delta'");
        }
        up.u = vertex(t[1], n, name, no);
        up.v = vertex(t[2], n, name, no);
        out.push_back(up);
    }
    return out;
}

std::vector<Query> parse_queries(std::istream& in, const std::string& name, std::size_t n) {
    std::string text = slurp(in);
    std::vector<Query> out;
    for (auto& [no, t] : lines(text)) {
        if (t.size() != 3 || t[0] != "Q") fail(name, no, "query line must be 'Q s v'");
        out.push_back({vertex(t[1], n, name, no), vertex(t[2], n, name, no)});
    }
    return out;
}

GraphFile read_graph_file(const std::string& path) {
    auto in = open(path);
    return parse_graph(in, path);
}

std::vector<Update> read_update_file(const std::string& path, std::size_t n) {
    auto in = open(path);
    return parse_updates(in, path, n);
}

std::vector<Query> read_query_file(const std::string& path, std::size_t n) {
    auto in = open(path);
    return parse_queries(in, path, n);
}

void write_graph(std::ostream& out, const GraphFile& g) {
    out << g.n << ' ' << g.edges.size() << '\n';
    for (const auto& e : g.edges) out << e.u << ' ' << e.v << ' ' << e.w << '\n';
}

void write_updates(std::ostream& out, const std::vector<Update>& updates) {
    for (const auto& up : updates) {
        out << up.kind << ' ' << up.u << ' ' << up.v;
        if (up.kind == 'I') out << ' ' << up.delta;
        out << '\n';
    }
}

void check_updates(const GraphFile& g, const std::vector<Update>& updates, const std::string& name) {
    DynamicGraph scratch;
    try {
        scratch = load_graph(g.n, g.edges);
    } catch (const std::exception& e) {
        throw ParseError(std::string("graph: ") + e.what());
    }
    for (std::size_t i = 0; i < updates.size(); ++i) {
        const auto& up = updates[i];
        try {
            if (up.kind == 'D')
                scratch.delete_edge(up.u, up.v);
            else
                scratch.increase_weight(up.u, up.v, up.delta);
        } catch (const std::exception& e) {
            throw ParseError(name + ": update " + std::to_string(i + 1) + ": " + e.what());
        }
    }
}

Workload generate(std::size_t n, std::size_t m, Weight weight_max, std::size_t deletions, std::uint64_t seed) {
    std::size_t max_m = n * (n - (n > 0 ? 1 : 0)) / 2;
    if (m > max_m)
        throw std::invalid_argument("m=" + std::to_string(m) + " exceeds n(n-1)/2=" + std::to_string(max_m));
    if (deletions > m) throw std::invalid_argument("more deletions than edges");
    if (weight_max < 1) throw std::invalid_argument("weight_max must be >= 1");
    std::mt19937_64 rng(seed);
    // Bounded draws by rejection, so output does not depend on the
    // standard library's distribution implementation.
    auto below = [&](std::uint64_t bound) {
        std::uint64_t limit = ~std::uint64_t{0} - (~std::uint64_t{0} % bound);
        std::uint64_t x;
        do x = rng();
        while (x >= limit);
        return x % bound;
    };
    // Floyd's sampling of m pair indices out of n(n-1)/2.
    std::vector<std::uint64_t> picked;
    std::unordered_set<std::uint64_t> chosen;
    for (std::uint64_t j = max_m - m; j < max_m; ++j) {
        std::uint64_t t = below(j + 1);
        if (!chosen.insert(t).second) {
            chosen.insert(j);
            picked.push_back(j);
        } else {
            picked.push_back(t);
        }
    }
    std::sort(picked.begin(), picked.end());
    Workload w;
    w.graph.n = n;
    for (std::uint64_t idx : picked) {
        // index -> (u, v) in row-major order over u < v
        Vertex u = 0;
        std::uint64_t rem = idx;
        while (rem >= n - 1 - u) {
            rem -= n - 1 - u;
            ++u;
        }
        Vertex v = static_cast<Vertex>(u + 1 + rem);
        w.graph.edges.push_back({u, v, static_cast<Weight>(1 + below(static_cast<std::uint64_t>(weight_max)))});
    }
    std::vector<std::size_t> order(m);
    std::iota(order.begin(), order.end(), 0);
    for (std::size_t i = m; i > 1; --i) std::swap(order[i - 1], order[below(i)]);
    for (std::size_t i = 0; i < deletions; ++i) {
        const auto& e = w.graph.edges[order[i]];
        w.updates.push_back({'D', e.u, e.v, 0});
    }
    return w;
}

}  // namespace dechop
