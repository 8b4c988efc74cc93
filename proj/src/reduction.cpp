#include "isectlab/reduction.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>
#include <utility>

#include "isectlab/oracles.hpp"

namespace isectlab {

Rational parse_rational(const std::string& text) {
    std::int64_t num = 0;
    std::int64_t den = 1;
    const auto slash = text.find('/');
    std::size_t pos = 0;
    try {
        if (slash == std::string::npos) {
            num = std::stoll(text, &pos);
            if (pos != text.size()) throw std::invalid_argument(text);
        } else {
            num = std::stoll(text.substr(0, slash), &pos);
            if (pos != slash) throw std::invalid_argument(text);
            const std::string den_text = text.substr(slash + 1);
            den = std::stoll(den_text, &pos);
            if (pos != den_text.size()) throw std::invalid_argument(text);
        }
    } catch (const std::exception&) {
        throw std::invalid_argument("malformed rational \"" + text + "\"");
    }
    if (den == 0) {
        throw std::invalid_argument("rational with zero denominator");
    }
    if (den < 0) {
        num = -num;
        den = -den;
    }
    return Rational{num, den};
}

void validate_params(const OracleParams& params) {
    const auto& eps = params.eps;
    if (eps.den <= 0 || eps.num <= 0 || eps.num > eps.den) {
        throw std::invalid_argument("eps must lie in (0, 1]");
    }
    if (params.additive < 0) {
        throw std::invalid_argument("additive error c must be >= 0");
    }
}

ReductionGraph::ReductionGraph(const SetFamily& family, std::size_t subdivision_edges)
    : num_set_vertices_(family.num_sets()),
      num_element_vertices_(family.universe_size()),
      subdivision_length_(subdivision_edges) {
    if (subdivision_edges < 1) {
        throw std::invalid_argument("subdivision length must be >= 1");
    }
    const std::size_t L = subdivision_edges;
    const std::size_t n = family.total_size();
    adjacency_.resize(num_set_vertices_ + num_element_vertices_ + n * (L - 1));

    auto add_edge = [this](VertexId a, VertexId b) {
        adjacency_[a].push_back(b);
        adjacency_[b].push_back(a);
        ++num_edges_;
    };

    VertexId next_interior = static_cast<VertexId>(num_set_vertices_ + num_element_vertices_);
    for (std::size_t i = 0; i < family.num_sets(); ++i) {
        for (const ElementId e : family.set(i)) {
            VertexId prev = set_vertex(i);
            for (std::size_t step = 0; step + 1 < L; ++step) {
                add_edge(prev, next_interior);
                prev = next_interior++;
            }
            add_edge(prev, element_vertex(e));
        }
    }
    for (auto& nbrs : adjacency_) {
        std::sort(nbrs.begin(), nbrs.end());
    }
}

VertexId ReductionGraph::set_vertex(std::size_t set_index) const {
    if (set_index >= num_set_vertices_) {
        throw std::out_of_range("set index out of range");
    }
    return static_cast<VertexId>(set_index);
}

VertexId ReductionGraph::element_vertex(ElementId element) const {
    if (element >= num_element_vertices_) {
        throw std::out_of_range("element id out of range");
    }
    return static_cast<VertexId>(num_set_vertices_ + element);
}

const std::vector<VertexId>& ReductionGraph::neighbors(VertexId v) const {
    if (v >= adjacency_.size()) {
        throw std::out_of_range("vertex id out of range");
    }
    return adjacency_[v];
}

ReductionGraph build_bipartite(const SetFamily& family) {
    return ReductionGraph(family, 1);
}

namespace {

std::int64_t ceil_div(std::int64_t a, std::int64_t b) {
    // b > 0
    return a >= 0 ? (a + b - 1) / b : -((-a) / b);
}

std::int64_t floor_div(std::int64_t a, std::int64_t b) {
    // b > 0
    return a >= 0 ? a / b : -ceil_div(-a, b);
}

}  // namespace

std::size_t subdivision_length(const OracleParams& params) {
    validate_params(params);
    const std::int64_t p = params.eps.num;
    const std::int64_t q = params.eps.den;
    const std::int64_t c = params.additive;
    // ceil(2(c-1)/eps) with eps = p/q
    const std::int64_t gap_term = ceil_div(2 * (c - 1) * q, p);
    // floor(c/(2 eps)) + 1, the smallest L with (2-eps)*2L + c < 4L
    const std::int64_t separation_term = floor_div(c * q, 2 * p) + 1;
    const std::int64_t L = std::max({gap_term, separation_term, std::int64_t{1}});
    return static_cast<std::size_t>(L);
}

ReductionGraph build_subdivided(const SetFamily& family, const OracleParams& params) {
    return ReductionGraph(family, subdivision_length(params));
}

bool decide_intersection(const ReductionGraph& graph, const DistanceOracle& oracle,
                         const OracleParams& params, std::size_t i, std::size_t j) {
    validate_params(params);
    if (i == j) {
        throw std::invalid_argument("decide_intersection requires i != j");
    }
    if (graph.subdivision_length() != subdivision_length(params)) {
        throw std::invalid_argument("graph subdivision length inconsistent with params");
    }
    const double threshold = 4.0 * static_cast<double>(graph.subdivision_length());
    const double estimate = oracle.estimate(graph.set_vertex(i), graph.set_vertex(j));
    return estimate < threshold;  // infinity compares >= threshold
}

std::string export_graph(const ReductionGraph& graph, ExportFormat format) {
    std::vector<std::pair<VertexId, VertexId>> edges;
    edges.reserve(graph.num_edges());
    for (VertexId v = 0; v < graph.num_vertices(); ++v) {
        for (const VertexId w : graph.neighbors(v)) {
            if (v < w) edges.emplace_back(v, w);
        }
    }
    std::sort(edges.begin(), edges.end());

    std::ostringstream out;
    if (format == ExportFormat::EdgeList) {
        out << graph.num_vertices() << ' ' << graph.num_edges() << '\n';
        for (const auto& [a, b] : edges) {
            out << a << ' ' << b << '\n';
        }
    } else {
        out << "p edge " << graph.num_vertices() << ' ' << graph.num_edges() << '\n';
        for (const auto& [a, b] : edges) {
            out << "e " << (a + 1) << ' ' << (b + 1) << '\n';
        }
    }
    return out.str();
}

}  // namespace isectlab
