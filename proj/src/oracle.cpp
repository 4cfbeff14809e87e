#include "dechop/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <cstring>
#include <set>
#include <stdexcept>

namespace dechop {

namespace {

constexpr std::uint8_t kPivotFlag = 0x80;

template <typename T>
void put_le(std::string& out, T value) {
    auto u = static_cast<std::make_unsigned_t<T>>(value);
    for (std::size_t b = 0; b < sizeof(T); ++b) out.push_back(static_cast<char>((u >> (8 * b)) & 0xff));
}

template <typename T>
T get_le(std::string_view in, std::size_t& pos) {
    if (pos + sizeof(T) > in.size()) throw std::invalid_argument("truncated sketch");
    std::make_unsigned_t<T> u = 0;
    for (std::size_t b = 0; b < sizeof(T); ++b)
        u |= static_cast<std::make_unsigned_t<T>>(static_cast<unsigned char>(in[pos + b])) << (8 * b);
    pos += sizeof(T);
    return static_cast<T>(u);
}

void put_record(std::string& out, Vertex v, std::uint8_t tag, const Rational& d) {
    put_le<std::uint32_t>(out, v);
    put_le<std::uint8_t>(out, tag);
    put_le<std::int64_t>(out, d.num());
    put_le<std::int64_t>(out, d.den());
}

}  // namespace

std::string serialize_sketch(const Sketch& s) {
    std::vector<Vertex> ids;
    for (const auto& [v, m] : s.members) ids.push_back(v);
    std::sort(ids.begin(), ids.end());
    std::string out;
    put_le<std::uint32_t>(out, static_cast<std::uint32_t>(sketch_entries(s)));
    for (Vertex v : ids) {
        const auto& m = s.members.at(v);
        put_record(out, v, m.rank, m.dist);
    }
    for (std::size_t i = 0; i < s.pivots.size(); ++i)
        if (s.pivots[i] != kNoVertex)
            put_record(out, s.pivots[i], kPivotFlag | static_cast<std::uint8_t>(i), s.members.at(s.pivots[i]).dist);
    return out;
}

Sketch parse_sketch(std::string_view bytes) {
    std::size_t pos = 0;
    auto count = get_le<std::uint32_t>(bytes, pos);
    Sketch s;
    for (std::uint32_t r = 0; r < count; ++r) {
        auto v = get_le<std::uint32_t>(bytes, pos);
        auto tag = get_le<std::uint8_t>(bytes, pos);
        auto num = get_le<std::int64_t>(bytes, pos);
        auto den = get_le<std::int64_t>(bytes, pos);
        Rational d = den == 0 ? Rational::infinity() : Rational(num, den);
        if (tag & kPivotFlag) {
            std::size_t i = tag & ~kPivotFlag;
            if (s.pivots.size() <= i) s.pivots.resize(i + 1, kNoVertex);
            s.pivots[i] = v;
            auto it = s.members.find(v);
            if (it == s.members.end() || d < it->second.dist) s.members[v] = {d, 0};
        } else {
            s.members[v] = {d, tag};
        }
    }
    if (pos != bytes.size()) throw std::invalid_argument("trailing bytes in sketch");
    if (s.pivots.empty() || s.pivots[0] == kNoVertex) throw std::invalid_argument("sketch without owner");
    return s;
}

std::size_t sketch_entries(const Sketch& s) {
    std::size_t n = s.members.size();
    for (Vertex p : s.pivots) n += p != kNoVertex;
    return n;
}

Rational tz_query(const Sketch& su, const Sketch& sv, int* iterations) {
    const Sketch* a = &su;
    const Sketch* b = &sv;
    Vertex w = a->pivots[0];
    std::size_t i = 0;
    int hops = 0;
    while (!b->members.count(w)) {
        ++i;
        std::swap(a, b);
        if (i >= a->pivots.size() || a->pivots[i] == kNoVertex) {
            if (iterations) *iterations = hops;
            return Rational::infinity();
        }
        w = a->pivots[i];
        ++hops;
    }
    if (iterations) *iterations = hops;
    return a->members.at(w).dist + b->members.at(w).dist;
}

DistanceOracle::DistanceOracle(const HopsetState& hs, int k, const Rational& eps, std::uint64_t seed)
    : hs_(&hs), k_(k), eps_(eps) {
    if (k < 2) throw std::invalid_argument("oracle needs k >= 2");
    if (eps <= Rational(0) || eps >= Rational(1)) throw std::invalid_argument("eps must lie in (0,1)");
    std::size_t n = hs.graph().num_vertices();
    double p = n > 0 ? std::pow(static_cast<double>(n), -1.0 / k) : 1.0;
    h_ = sample_uniform_hierarchy(n, k, p, mix_seed(seed, 1));
    Rational eps0 = eps / Rational(3);
    Weight ell = hs.hop_cap() + 1;
    depth_ = (Rational(6 * ell) / eps).ceil();
    for (int j = 0; j <= hs.num_scales(); ++j) {
        views_.push_back(std::make_unique<ScaledView>(hs.edges(), j, hs.radius(j), eps0, ell));
        clusters_.push_back(std::make_unique<ClusterState>(views_.back()->graph(), h_, depth_, Rational(0)));
    }
    sketches_.resize(n);
    for (Vertex v = 0; v < n; ++v) rebuild_sketch(v);
}

void DistanceOracle::rebuild_sketch(Vertex v) {
    Sketch s;
    s.pivots.assign(k_, kNoVertex);
    s.pivots[0] = v;
    auto offer = [&](Vertex w, const Rational& d) {
        auto it = s.members.find(w);
        if (it == s.members.end())
            s.members.emplace(w, SketchMember{d, static_cast<std::uint8_t>(h_.rank(w))});
        else if (d < it->second.dist)
            it->second.dist = d;
    };
    for (std::size_t j = 0; j < clusters_.size(); ++j) {
        const auto& cs = *clusters_[j];
        for (Vertex z : cs.bunch(v)) offer(z, views_[j]->unscale(cs.cluster_level(z, v)));
    }
    // p_i(v) is the nearest A_i vertex over all scales; ties keep the lower scale.
    for (int i = 1; i < k_; ++i) {
        Rational best = Rational::infinity();
        for (std::size_t j = 0; j < clusters_.size(); ++j) {
            const auto& cs = *clusters_[j];
            Vertex p = cs.pivot(i - 1, v);
            if (p == kNoVertex) continue;
            Rational d = views_[j]->unscale(cs.pivot_level(i - 1, v));
            if (d < best) {
                best = d;
                s.pivots[i] = p;
            }
        }
        if (s.pivots[i] != kNoVertex) offer(s.pivots[i], best);
    }
    sketches_[v] = std::move(s);
}

void DistanceOracle::update() {
    std::set<Vertex> affected;
    for (std::size_t j = 0; j < clusters_.size(); ++j) {
        std::vector<EdgeChange> changes;
        for (auto key : hs_->last_dirty())
            if (auto c = views_[j]->refresh(key)) changes.push_back(*c);
        if (changes.empty()) continue;
        for (const auto& c : clusters_[j]->update(changes)) affected.insert(c.tag.b);
    }
    for (Vertex v : affected) rebuild_sketch(v);
}

Rational DistanceOracle::query(Vertex u, Vertex v, int* iterations) const {
    if (u >= sketches_.size() || v >= sketches_.size()) throw std::invalid_argument("vertex out of range");
    return tz_query(sketches_[u], sketches_[v], iterations);
}

Rational DistanceOracle::sketch_query(std::string_view a, std::string_view b, int* iterations) {
    return tz_query(parse_sketch(a), parse_sketch(b), iterations);
}

std::uint64_t DistanceOracle::scans_total() const {
    std::uint64_t total = 0;
    for (const auto& c : clusters_) total += c->total_scans();
    return total;
}

}  // namespace dechop
