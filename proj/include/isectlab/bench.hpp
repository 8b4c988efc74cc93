#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "isectlab/reduction.hpp"
#include "isectlab/set_family.hpp"

namespace isectlab {

/// One sweep point of the query-time / matrix-space tradeoff.
/// Timing fields are informational only and never asserted.
struct TradeoffRow {
    std::size_t t = 0;
    std::size_t num_large = 0;
    std::size_t matrix_bits = 0;
    std::size_t max_probes = 0;
    double mean_probes = 0.0;
    double build_ms = 0.0;
    double query_ns = 0.0;
};

/// Builds one index per threshold and runs `query_sample` seeded random
/// pair queries against each, recording probe statistics.
std::vector<TradeoffRow> sweep_threshold(const SetFamily& family,
                                         const std::vector<std::size_t>& t_values,
                                         std::size_t query_sample, std::uint64_t seed);

/// Checks every row against the structural bounds: num_large * t < n
/// (or num_large == 0), matrix_bits <= (n/t)^2, and max_probes <= t.
bool verify_tradeoff(const std::vector<TradeoffRow>& rows, std::size_t n);

/// TSV rendering with a header line.
std::string rows_to_tsv(const std::vector<TradeoffRow>& rows);

struct FailureDemo {
    bool found = false;
    std::size_t i = 0;
    std::size_t j = 0;
    double estimate = 0.0;
    bool truth = false;
};

/// Constructive converse of the reduction: an always-max oracle with
/// mult >= 2 pushes every intersecting pair's estimate to or past the
/// 4L threshold, so the first such pair is returned misclassified.
FailureDemo adversarial_failure_demo(const SetFamily& family, double mult,
                                     const OracleParams& params);

}  // namespace isectlab
