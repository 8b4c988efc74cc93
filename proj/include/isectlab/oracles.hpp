#pragma once

#include <cstddef>
#include <cstdint>
#include <limits>
#include <memory>
#include <mutex>
#include <unordered_map>
#include <vector>

#include "isectlab/reduction.hpp"

namespace isectlab {

inline constexpr double kInfiniteDistance = std::numeric_limits<double>::infinity();
inline constexpr int kUnreachable = -1;

/// Single-source BFS; kUnreachable marks vertices in other components.
std::vector<int> bfs_from(const ReductionGraph& graph, VertexId source);

/// Exact hop distance, infinity when disconnected.
double bfs_distance(const ReductionGraph& graph, VertexId u, VertexId v);

/// Anything answering estimate(u, v) with a declared (mult, add)
/// guarantee: true <= estimate <= mult * true + add on connected pairs,
/// and infinity exactly on disconnected pairs.
class DistanceOracle {
public:
    virtual ~DistanceOracle() = default;
    virtual double estimate(VertexId u, VertexId v) const = 0;
    virtual double guarantee_mult() const = 0;
    virtual double guarantee_add() const = 0;
};

/// (1, 0) oracle backed by on-demand BFS with a per-source cache.
class ExactOracle : public DistanceOracle {
public:
    explicit ExactOracle(const ReductionGraph& graph) : graph_(&graph) {}

    double estimate(VertexId u, VertexId v) const override;
    double guarantee_mult() const override { return 1.0; }
    double guarantee_add() const override { return 0.0; }

private:
    const std::vector<int>& distances_from(VertexId source) const;

    const ReductionGraph* graph_;
    mutable std::mutex cache_mutex_;
    mutable std::unordered_map<VertexId, std::vector<int>> cache_;
};

/// Landmark/bunch approximate oracle with stretch 2k - 1.
///
/// Level samples A_0 = V down to A_{k-1}; each vertex stores its
/// nearest landmark per level and a bunch of exact distances to the
/// landmarks that beat the next level's witness.
class TZOracle : public DistanceOracle {
public:
    TZOracle(const ReductionGraph& graph, std::size_t k, std::uint64_t seed);

    double estimate(VertexId u, VertexId v) const override;
    double guarantee_mult() const override { return static_cast<double>(2 * k_ - 1); }
    double guarantee_add() const override { return 0.0; }

    std::size_t num_levels() const { return k_; }
    bool in_level(std::size_t level, VertexId v) const { return level_member_[level][v]; }
    /// d(A_level, v); kUnreachable when no level vertex shares v's component.
    int level_distance(std::size_t level, VertexId v) const { return level_distance_[level][v]; }
    const std::unordered_map<VertexId, int>& bunch(VertexId v) const { return bunches_[v]; }

private:
    double walk(VertexId u, VertexId v) const;

    std::size_t k_;
    std::vector<std::vector<char>> level_member_;      // k x V
    std::vector<std::vector<int>> level_distance_;     // k x V, d(A_i, v)
    std::vector<std::vector<VertexId>> level_witness_; // k x V, p_i(v)
    std::vector<std::unordered_map<VertexId, int>> bunches_;
};

enum class MockMode { Exact, AlwaysMax, Random };

MockMode parse_mock_mode(const std::string& text);

/// Adversarial oracle emitting arbitrary estimates within a declared
/// (mult, add) contract: exact truth, the contract's upper bound, or a
/// deterministic symmetric uniform draw from the contract interval.
class MockOracle : public DistanceOracle {
public:
    MockOracle(const ReductionGraph& graph, double mult, double add, MockMode mode,
               std::uint64_t seed);

    double estimate(VertexId u, VertexId v) const override;
    double guarantee_mult() const override { return mult_; }
    double guarantee_add() const override { return add_; }

private:
    ExactOracle truth_;
    double mult_;
    double add_;
    MockMode mode_;
    std::uint64_t seed_;
};

/// CLI-facing factory: "exact", "tz:<k>", "mock:<mode>:<mult>:<add>".
std::unique_ptr<DistanceOracle> make_oracle(const std::string& spec, const ReductionGraph& graph,
                                            std::uint64_t seed);

}  // namespace isectlab
