#include "isectlab/isect_index.hpp"

#include <cmath>
#include <stdexcept>

namespace isectlab {

std::size_t IntersectionIndex::default_threshold(std::size_t n) {
    if (n == 0) return 1;
    auto s = static_cast<std::size_t>(std::sqrt(static_cast<double>(n)));
    while (s * s < n) ++s;
    while (s > 1 && (s - 1) * (s - 1) >= n) --s;
    return s;
}

IntersectionIndex::IntersectionIndex(const SetFamily& family, std::size_t t)
    : family_(&family), threshold_(t) {
    if (t < 1) {
        throw std::invalid_argument("threshold must be >= 1");
    }
    const std::size_t m = family.num_sets();
    large_rank_.assign(m, npos);
    for (std::size_t i = 0; i < m; ++i) {
        if (family.set(i).size() > t) {
            large_rank_[i] = large_ids_.size();
            large_ids_.push_back(i);
        }
    }

    const std::size_t num_large = large_ids_.size();
    matrix_.assign((num_large * num_large + 63) / 64, 0);
    for (std::size_t a = 0; a < num_large; ++a) {
        set_matrix_bit(a, a);  // large sets are nonempty
        for (std::size_t b = a + 1; b < num_large; ++b) {
            if (brute_force_intersect(family, large_ids_[a], large_ids_[b]).intersects) {
                set_matrix_bit(a, b);
                set_matrix_bit(b, a);
            }
        }
    }

    membership_.resize(m);
    for (std::size_t i = 0; i < m; ++i) {
        const auto& s = family.set(i);
        membership_[i].insert(s.begin(), s.end());
    }
}

bool IntersectionIndex::is_large(std::size_t i) const {
    return large_rank_.at(i) != npos;
}

void IntersectionIndex::set_matrix_bit(std::size_t rank_a, std::size_t rank_b) {
    const std::size_t bit = rank_a * large_ids_.size() + rank_b;
    matrix_[bit / 64] |= std::uint64_t{1} << (bit % 64);
}

bool IntersectionIndex::matrix_bit(std::size_t rank_a, std::size_t rank_b) const {
    const std::size_t bit = rank_a * large_ids_.size() + rank_b;
    return (matrix_[bit / 64] >> (bit % 64)) & 1;
}

IntersectResult IntersectionIndex::query(std::size_t i, std::size_t j) const {
    const std::size_t m = family_->num_sets();
    if (i >= m || j >= m) {
        throw std::out_of_range("query index out of range");
    }
    IntersectResult result;
    if (i == j) {
        const auto& s = family_->set(i);
        result.intersects = !s.empty();
        if (!s.empty()) result.witness = s.front();
        return result;
    }
    if (large_rank_[i] != npos && large_rank_[j] != npos) {
        result.intersects = matrix_bit(large_rank_[i], large_rank_[j]);
        return result;
    }
    // at least one set is non-large; scan the smaller, ties to the
    // smaller index for deterministic witnesses and probe counts
    std::size_t scan = i;
    std::size_t other = j;
    const std::size_t si = family_->set(i).size();
    const std::size_t sj = family_->set(j).size();
    if (sj < si || (sj == si && j < i)) {
        scan = j;
        other = i;
    }
    const auto& table = membership_[other];
    for (const ElementId e : family_->set(scan)) {
        ++result.probes;
        if (table.contains(e)) {
            result.intersects = true;
            result.witness = e;
            return result;
        }
    }
    return result;
}

IntersectionIndex::SpaceReport IntersectionIndex::space_report() const {
    SpaceReport report;
    report.num_large = large_ids_.size();
    report.matrix_bits = report.num_large * report.num_large;
    report.membership_entries = family_->total_size();
    return report;
}

IntersectionIndex build_index(const SetFamily& family, std::optional<std::size_t> t) {
    return IntersectionIndex(family,
                             t.value_or(IntersectionIndex::default_threshold(family.total_size())));
}

}  // namespace isectlab
