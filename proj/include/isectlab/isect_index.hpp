#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <unordered_set>
#include <vector>

#include "isectlab/set_family.hpp"

namespace isectlab {

/// The tunable large-set / bit-matrix intersection structure.
///
/// Sets with more than `t` elements are large; pairwise answers for
/// large sets are precomputed into a symmetric bit matrix. All other
/// queries scan the smaller set, probing a per-set membership table.
///
/// Holds a reference to the indexed family; the family must outlive
/// the index. Immutable after construction, safe for concurrent reads.
class IntersectionIndex {
public:
    struct SpaceReport {
        std::size_t num_large = 0;
        std::size_t matrix_bits = 0;
        std::size_t membership_entries = 0;
    };

    IntersectionIndex(const SetFamily& family, std::size_t t);

    /// ceil(sqrt(n)), and 1 when n == 0.
    static std::size_t default_threshold(std::size_t n);

    std::size_t threshold() const { return threshold_; }
    const SetFamily& family() const { return *family_; }
    const std::vector<std::size_t>& large_ids() const { return large_ids_; }

    bool is_large(std::size_t i) const;
    bool matrix_bit(std::size_t rank_a, std::size_t rank_b) const;

    IntersectResult query(std::size_t i, std::size_t j) const;
    SpaceReport space_report() const;

private:
    void set_matrix_bit(std::size_t rank_a, std::size_t rank_b);

    const SetFamily* family_;
    std::size_t threshold_;
    std::vector<std::size_t> large_ids_;
    std::vector<std::size_t> large_rank_;  // npos for non-large sets
    std::vector<std::uint64_t> matrix_;    // packed num_large x num_large bits
    std::vector<std::unordered_set<ElementId>> membership_;

    static constexpr std::size_t npos = static_cast<std::size_t>(-1);
};

/// Builds the index; threshold defaults to ceil(sqrt(n)).
IntersectionIndex build_index(const SetFamily& family,
                              std::optional<std::size_t> t = std::nullopt);

}  // namespace isectlab
