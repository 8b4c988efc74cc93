#include "isectlab/bench.hpp"

#include <chrono>
#include <random>
#include <sstream>
#include <stdexcept>

#include "isectlab/isect_index.hpp"
#include "isectlab/oracles.hpp"

namespace isectlab {

std::vector<TradeoffRow> sweep_threshold(const SetFamily& family,
                                         const std::vector<std::size_t>& t_values,
                                         std::size_t query_sample, std::uint64_t seed) {
    if (t_values.empty()) {
        throw std::invalid_argument("sweep requires at least one threshold");
    }
    using clock = std::chrono::steady_clock;

    std::vector<TradeoffRow> rows;
    rows.reserve(t_values.size());
    const std::size_t m = family.num_sets();
    for (const std::size_t t : t_values) {
        TradeoffRow row;
        row.t = t;

        const auto build_start = clock::now();
        const IntersectionIndex index(family, t);
        row.build_ms =
            std::chrono::duration<double, std::milli>(clock::now() - build_start).count();

        const auto report = index.space_report();
        row.num_large = report.num_large;
        row.matrix_bits = report.matrix_bits;

        std::mt19937_64 rng(seed);
        std::size_t total_probes = 0;
        const auto query_start = clock::now();
        for (std::size_t q = 0; q < query_sample && m > 0; ++q) {
            const auto i = static_cast<std::size_t>(rng() % m);
            const auto j = static_cast<std::size_t>(rng() % m);
            const auto result = index.query(i, j);
            total_probes += result.probes;
            row.max_probes = std::max(row.max_probes, result.probes);
        }
        const double query_total_ns =
            std::chrono::duration<double, std::nano>(clock::now() - query_start).count();
        if (query_sample > 0 && m > 0) {
            row.mean_probes = static_cast<double>(total_probes) / static_cast<double>(query_sample);
            row.query_ns = query_total_ns / static_cast<double>(query_sample);
        }
        rows.push_back(row);
    }
    return rows;
}

bool verify_tradeoff(const std::vector<TradeoffRow>& rows, std::size_t n) {
    for (const auto& row : rows) {
        if (row.num_large > 0) {
            if (row.num_large * row.t >= n) return false;
            // matrix_bits <= (n/t)^2, compared in integers
            if (row.matrix_bits * row.t * row.t > n * n) return false;
        }
        if (row.max_probes > row.t) return false;
    }
    return true;
}

std::string rows_to_tsv(const std::vector<TradeoffRow>& rows) {
    std::ostringstream out;
    out << "t\tnum_large\tmatrix_bits\tmax_probes\tmean_probes\tbuild_ms\tquery_ns\n";
    for (const auto& row : rows) {
        out << row.t << '\t' << row.num_large << '\t' << row.matrix_bits << '\t' << row.max_probes
            << '\t' << row.mean_probes << '\t' << row.build_ms << '\t' << row.query_ns << '\n';
    }
    return out.str();
}

FailureDemo adversarial_failure_demo(const SetFamily& family, double mult,
                                     const OracleParams& params) {
    const ReductionGraph graph = build_subdivided(family, params);
    const MockOracle adversary(graph, mult, static_cast<double>(params.additive),
                               MockMode::AlwaysMax, 0);

    FailureDemo demo;
    const std::size_t m = family.num_sets();
    for (std::size_t i = 0; i < m; ++i) {
        for (std::size_t j = i + 1; j < m; ++j) {
            const bool decided = decide_intersection(graph, adversary, params, i, j);
            const bool truth = brute_force_intersect(family, i, j).intersects;
            if (decided != truth) {
                demo.found = true;
                demo.i = i;
                demo.j = j;
                demo.estimate = adversary.estimate(graph.set_vertex(i), graph.set_vertex(j));
                demo.truth = truth;
                return demo;
            }
        }
    }
    return demo;
}

}  // namespace isectlab
