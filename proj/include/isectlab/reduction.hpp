#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "isectlab/set_family.hpp"

namespace isectlab {

class DistanceOracle;

/// Exact rational, used for the approximation parameter eps so that
/// subdivision lengths and thresholds are computed without
/// floating-point ambiguity.
struct Rational {
    std::int64_t num = 0;
    std::int64_t den = 1;

    double value() const { return static_cast<double>(num) / static_cast<double>(den); }
    bool operator==(const Rational&) const = default;
};

/// Parses "p/q" or a bare integer "p". Throws std::invalid_argument on
/// malformed input or q == 0.
Rational parse_rational(const std::string& text);

/// The (2 - eps, c) oracle contract parameters. eps must lie in (0, 1]
/// and c must be non-negative.
struct OracleParams {
    Rational eps{1, 1};
    std::int64_t additive = 0;  // c

    double mult() const { return 2.0 - eps.value(); }
};

/// Validates eps in (0, 1] and c >= 0; throws std::invalid_argument.
void validate_params(const OracleParams& params);

using VertexId = std::uint32_t;

/// The bipartite membership graph of a set family, optionally with
/// every membership edge subdivided into a path of L edges.
///
/// V1 holds one vertex per set, V2 one per universe element;
/// subdivision vertices (degree 2) are numbered after V1 and V2 in
/// edge-construction order. Immutable after construction.
class ReductionGraph {
public:
    ReductionGraph(const SetFamily& family, std::size_t subdivision_edges);

    std::size_t num_vertices() const { return adjacency_.size(); }
    std::size_t num_edges() const { return num_edges_; }
    std::size_t subdivision_length() const { return subdivision_length_; }

    std::size_t num_set_vertices() const { return num_set_vertices_; }
    std::size_t num_element_vertices() const { return num_element_vertices_; }

    VertexId set_vertex(std::size_t set_index) const;
    VertexId element_vertex(ElementId element) const;

    const std::vector<VertexId>& neighbors(VertexId v) const;

private:
    std::size_t num_set_vertices_ = 0;
    std::size_t num_element_vertices_ = 0;
    std::size_t subdivision_length_ = 1;
    std::size_t num_edges_ = 0;
    std::vector<std::vector<VertexId>> adjacency_;
};

/// Plain membership graph (L = 1): m + u vertices, n edges.
ReductionGraph build_bipartite(const SetFamily& family);

/// Path length, in edges, that each membership edge is stretched into
/// so the additive error c cannot blur the distance gap:
///   L = max(ceil(2(c-1)/eps), floor(c/(2 eps)) + 1, 1).
/// The second term enforces (2-eps)*2L + c < 4L.
std::size_t subdivision_length(const OracleParams& params);

/// Membership graph with each edge replaced by a fresh path of
/// subdivision_length(params) edges.
ReductionGraph build_subdivided(const SetFamily& family, const OracleParams& params);

/// Answers "do S_i and S_j intersect?" through the oracle: accepts iff
/// estimate(set_vertex(i), set_vertex(j)) < 4L. Correct for every
/// oracle satisfying true <= estimate <= (2-eps)*true + c on the graph.
/// i == j is rejected (self-distance carries no information).
bool decide_intersection(const ReductionGraph& graph, const DistanceOracle& oracle,
                         const OracleParams& params, std::size_t i, std::size_t j);

enum class ExportFormat { EdgeList, Dimacs };

/// Deterministic text export. Edge list: "V E" header then "a b" lines
/// with a < b in increasing pair order; DIMACS: "p edge V E" then
/// 1-indexed "e a b" lines.
std::string export_graph(const ReductionGraph& graph, ExportFormat format);

}  // namespace isectlab
