#pragma once

#include <cstdint>
#include <iosfwd>
#include <stdexcept>
#include <string>
#include <vector>

#include "dechop/graph.hpp"

namespace dechop {

struct ParseError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct GraphFile {
    std::size_t n = 0;
    std::vector<Edge> edges;
};

// `D u v` deletes, `I u v delta` raises the weight by delta.
struct Update {
    char kind = 'D';
    Vertex u = 0;
    Vertex v = 0;
    Weight delta = 0;
    friend bool operator==(const Update&, const Update&) = default;
};

struct Query {
    Vertex s = 0;
    Vertex v = 0;
};

// `name` only labels error messages ("graph.txt:3: ...").
GraphFile parse_graph(std::istream& in, const std::string& name);
std::vector<Update> parse_updates(std::istream& in, const std::string& name, std::size_t n);
std::vector<Query> parse_queries(std::istream& in, const std::string& name, std::size_t n);

GraphFile read_graph_file(const std::string& path);
std::vector<Update> read_update_file(const std::string& path, std::size_t n);
std::vector<Query> read_query_file(const std::string& path, std::size_t n);

void write_graph(std::ostream& out, const GraphFile& g);
void write_updates(std::ostream& out, const std::vector<Update>& updates);

// Replays the updates on a scratch copy; throws ParseError naming the
// first update that does not apply (missing edge, weight over the cap).
void check_updates(const GraphFile& g, const std::vector<Update>& updates, const std::string& name);

struct Workload {
    GraphFile graph;
    std::vector<Update> updates;
};

// m distinct pairs chosen uniformly, weights uniform in [1, weight_max],
// and a deletion stream that is a prefix of a uniform permutation of them.
Workload generate(std::size_t n, std::size_t m, Weight weight_max, std::size_t deletions, std::uint64_t seed);

}  // namespace dechop
