#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "dechop/io.hpp"
#include "dechop/rational.hpp"

namespace dechop {

class HopsetState;

enum class Mode { kHopset, kSssp, kMssp, kOracle };
Mode parse_mode(const std::string& s);
const char* mode_name(Mode m);

struct RunConfig {
    Mode mode = Mode::kHopset;
    int k = 2;
    Rational rho{1, 2};
    Rational eps{1, 2};
    std::uint64_t seed = 1;
    std::uint64_t verify_every = 1;  // 0 disables audits
    std::size_t pairs_sample = 200;
    std::vector<Vertex> sources;  // sssp/mssp; empty means derive
};

struct RunOutput {
    std::string metrics;   // t,mode,updates_applied,hopset_edges,worst_ratio,scans_total
    std::string queries;   // t,s,v,estimate_num,estimate_den,exact,ratio
    std::string manifest;
    std::string witness;   // first failing audit row, empty on success
    bool ok = true;
};

// Sources for sssp/mssp: explicit list, else the distinct query sources,
// else vertex 0 (sssp) or the first min(8, n) vertices (mssp).
std::vector<Vertex> resolve_sources(const RunConfig& cfg, std::size_t n, const std::vector<Query>& queries);

// Replays the workload. Rows are written for t = 0 and after each update;
// worst_ratio is left empty on rows without an audit. Queries are answered
// once, after the last update. Stops at the first failing audit.
RunOutput run(const RunConfig& cfg, const Workload& w, const std::vector<Query>& queries);

// Applies the first `upto` updates without auditing, then audits once.
// Returns the audit CSV (with header); `ok` is false on any failure.
RunOutput verify_snapshot(const RunConfig& cfg, const Workload& w, std::size_t upto);

// max over scales, levels i and vertices v of
//   (cluster scans of v at level i / initial deg v) / (depth / q_i).
double scan_ratio(const HopsetState& hs, const std::vector<std::size_t>& initial_degree);

}  // namespace dechop
