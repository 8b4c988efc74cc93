#include "isectlab/oracles.hpp"

#include <algorithm>
#include <cmath>
#include <deque>
#include <random>
#include <stdexcept>
#include <string>

namespace isectlab {

namespace {

void check_vertex(const ReductionGraph& graph, VertexId v) {
    if (v >= graph.num_vertices()) {
        throw std::out_of_range("vertex id " + std::to_string(v) + " out of range");
    }
}

double unit_draw(std::mt19937_64& rng) {
    return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

std::uint64_t mix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

}  // namespace

std::vector<int> bfs_from(const ReductionGraph& graph, VertexId source) {
    check_vertex(graph, source);
    std::vector<int> dist(graph.num_vertices(), kUnreachable);
    std::deque<VertexId> queue;
    dist[source] = 0;
    queue.push_back(source);
    while (!queue.empty()) {
        const VertexId v = queue.front();
        queue.pop_front();
        for (const VertexId w : graph.neighbors(v)) {
            if (dist[w] == kUnreachable) {
                dist[w] = dist[v] + 1;
                queue.push_back(w);
            }
        }
    }
    return dist;
}

double bfs_distance(const ReductionGraph& graph, VertexId u, VertexId v) {
    check_vertex(graph, u);
    check_vertex(graph, v);
    if (u == v) return 0.0;
    const auto dist = bfs_from(graph, u);
    return dist[v] == kUnreachable ? kInfiniteDistance : static_cast<double>(dist[v]);
}

const std::vector<int>& ExactOracle::distances_from(VertexId source) const {
    std::lock_guard<std::mutex> lock(cache_mutex_);
    auto it = cache_.find(source);
    if (it == cache_.end()) {
        it = cache_.emplace(source, bfs_from(*graph_, source)).first;
    }
    return it->second;
}

double ExactOracle::estimate(VertexId u, VertexId v) const {
    check_vertex(*graph_, u);
    check_vertex(*graph_, v);
    const int d = distances_from(u)[v];
    return d == kUnreachable ? kInfiniteDistance : static_cast<double>(d);
}

TZOracle::TZOracle(const ReductionGraph& graph, std::size_t k, std::uint64_t seed) : k_(k) {
    if (k < 1) {
        throw std::invalid_argument("TZ oracle requires k >= 1");
    }
    const std::size_t num_vertices = graph.num_vertices();
    std::mt19937_64 rng(seed);

    level_member_.assign(k, std::vector<char>(num_vertices, 0));
    std::fill(level_member_[0].begin(), level_member_[0].end(), char{1});
    const double sample_prob =
        num_vertices > 0 ? std::pow(static_cast<double>(num_vertices), -1.0 / static_cast<double>(k))
                         : 0.0;
    for (std::size_t level = 1; level < k; ++level) {
        std::vector<VertexId> parent;
        for (VertexId v = 0; v < num_vertices; ++v) {
            if (level_member_[level - 1][v]) parent.push_back(v);
        }
        bool nonempty = false;
        for (int attempt = 0; attempt < 64 && !nonempty; ++attempt) {
            std::fill(level_member_[level].begin(), level_member_[level].end(), char{0});
            for (const VertexId v : parent) {
                if (unit_draw(rng) < sample_prob) {
                    level_member_[level][v] = 1;
                    nonempty = true;
                }
            }
        }
        if (!nonempty) {
            // degenerate sampling probability; keep one landmark so the
            // query walk stays total
            const VertexId pick = parent[rng() % parent.size()];
            level_member_[level][pick] = 1;
        }
    }

    // per-level witnesses via multi-source BFS
    level_distance_.assign(k, std::vector<int>(num_vertices, kUnreachable));
    level_witness_.assign(k, std::vector<VertexId>(num_vertices, 0));
    for (std::size_t level = 0; level < k; ++level) {
        auto& dist = level_distance_[level];
        auto& witness = level_witness_[level];
        std::deque<VertexId> queue;
        for (VertexId v = 0; v < num_vertices; ++v) {
            if (level_member_[level][v]) {
                dist[v] = 0;
                witness[v] = v;
                queue.push_back(v);
            }
        }
        while (!queue.empty()) {
            const VertexId v = queue.front();
            queue.pop_front();
            for (const VertexId w : graph.neighbors(v)) {
                if (dist[w] == kUnreachable) {
                    dist[w] = dist[v] + 1;
                    witness[w] = witness[v];
                    queue.push_back(w);
                }
            }
        }
    }

    // bunches via per-landmark BFS pruned at the next level's witness
    // distance: expand v only while d(w, v) < d(A_{top+1}, v)
    bunches_.assign(num_vertices, {});
    std::vector<int> landmark_dist(num_vertices);
    for (VertexId w = 0; w < num_vertices; ++w) {
        std::size_t top = 0;
        for (std::size_t level = k; level-- > 0;) {
            if (level_member_[level][w]) {
                top = level;
                break;
            }
        }
        const bool last_level = top + 1 == k;
        auto bound = [&](VertexId v) {
            if (last_level) return true;
            const int next = level_distance_[top + 1][v];
            return next == kUnreachable || landmark_dist[v] < next;
        };

        std::fill(landmark_dist.begin(), landmark_dist.end(), kUnreachable);
        landmark_dist[w] = 0;
        if (!bound(w)) continue;
        bunches_[w].emplace(w, 0);
        std::deque<VertexId> queue{w};
        while (!queue.empty()) {
            const VertexId v = queue.front();
            queue.pop_front();
            for (const VertexId x : graph.neighbors(v)) {
                if (landmark_dist[x] != kUnreachable) continue;
                landmark_dist[x] = landmark_dist[v] + 1;
                if (bound(x)) {
                    bunches_[x].emplace(w, landmark_dist[x]);
                    queue.push_back(x);
                }
            }
        }
    }
}

double TZOracle::walk(VertexId u, VertexId v) const {
    VertexId w = u;  // = p_0(u)
    std::size_t level = 0;
    for (;;) {
        const auto& bunch_v = bunches_[v];
        const auto it = bunch_v.find(w);
        if (it != bunch_v.end()) {
            return static_cast<double>(level_distance_[level][u] + it->second);
        }
        ++level;
        if (level == k_) return kInfiniteDistance;
        std::swap(u, v);
        if (level_distance_[level][u] == kUnreachable) return kInfiniteDistance;
        w = level_witness_[level][u];
    }
}

double TZOracle::estimate(VertexId u, VertexId v) const {
    if (u >= bunches_.size() || v >= bunches_.size()) {
        throw std::out_of_range("vertex id out of range");
    }
    // canonical order makes the walk symmetric
    if (u > v) std::swap(u, v);
    return walk(u, v);
}

MockMode parse_mock_mode(const std::string& text) {
    if (text == "exact") return MockMode::Exact;
    if (text == "always-max") return MockMode::AlwaysMax;
    if (text == "random") return MockMode::Random;
    throw std::invalid_argument("unknown mock mode \"" + text + "\"");
}

MockOracle::MockOracle(const ReductionGraph& graph, double mult, double add, MockMode mode,
                       std::uint64_t seed)
    : truth_(graph), mult_(mult), add_(add), mode_(mode), seed_(seed) {
    if (mult < 1.0 || add < 0.0) {
        throw std::invalid_argument("mock contract requires mult >= 1 and add >= 0");
    }
}

double MockOracle::estimate(VertexId u, VertexId v) const {
    const double truth = truth_.estimate(u, v);
    if (std::isinf(truth)) return kInfiniteDistance;
    switch (mode_) {
        case MockMode::Exact:
            return truth;
        case MockMode::AlwaysMax:
            return mult_ * truth + add_;
        case MockMode::Random: {
            const VertexId lo = std::min(u, v);
            const VertexId hi = std::max(u, v);
            std::mt19937_64 rng(mix64(seed_ ^ mix64((std::uint64_t{lo} << 32) | hi)));
            const double upper = mult_ * truth + add_;
            return truth + unit_draw(rng) * (upper - truth);
        }
    }
    throw std::logic_error("unreachable mock mode");
}

std::unique_ptr<DistanceOracle> make_oracle(const std::string& spec, const ReductionGraph& graph,
                                            std::uint64_t seed) {
    std::vector<std::string> parts;
    std::size_t start = 0;
    for (;;) {
        const auto colon = spec.find(':', start);
        if (colon == std::string::npos) {
            parts.push_back(spec.substr(start));
            break;
        }
        parts.push_back(spec.substr(start, colon - start));
        start = colon + 1;
    }

    if (parts[0] == "exact" && parts.size() == 1) {
        return std::make_unique<ExactOracle>(graph);
    }
    if (parts[0] == "tz" && parts.size() == 2) {
        const long k = std::stol(parts[1]);
        if (k < 1) throw std::invalid_argument("tz oracle requires k >= 1");
        return std::make_unique<TZOracle>(graph, static_cast<std::size_t>(k), seed);
    }
    if (parts[0] == "mock" && parts.size() == 4) {
        return std::make_unique<MockOracle>(graph, std::stod(parts[2]), std::stod(parts[3]),
                                            parse_mock_mode(parts[1]), seed);
    }
    throw std::invalid_argument("unknown oracle spec \"" + spec + "\"");
}

}  // namespace isectlab
