#pragma once

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace isectlab {

/// Raised when a SETS text stream violates the format.
struct ParseError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

using ElementId = std::uint32_t;

/// Outcome of an intersection query. `witness` is the minimum common
/// element when the query path produced one (matrix hits carry none).
/// `probes` counts membership tests performed by the query.
struct IntersectResult {
    bool intersects = false;
    std::optional<ElementId> witness;
    std::size_t probes = 0;
};

/// An immutable family of m sets over the universe [0, u).
/// Each set is a strictly increasing list of element ids; n is the
/// total input size (sum of set lengths).
class SetFamily {
public:
    SetFamily(std::size_t universe_size, std::vector<std::vector<ElementId>> sets);

    std::size_t num_sets() const { return sets_.size(); }
    std::size_t universe_size() const { return universe_size_; }
    std::size_t total_size() const { return total_size_; }

    const std::vector<ElementId>& set(std::size_t i) const;
    const std::vector<std::vector<ElementId>>& sets() const { return sets_; }

    bool operator==(const SetFamily& other) const = default;

private:
    std::size_t universe_size_ = 0;
    std::size_t total_size_ = 0;
    std::vector<std::vector<ElementId>> sets_;
};

/// Parses the SETS text format:
///   line 1: "m u"; then exactly m lines of strictly increasing
///   space-separated element ids (an empty line is an empty set).
///   '#' comment lines are allowed before the header only.
/// Throws ParseError on malformed input, out-of-universe elements,
/// duplicates within a set, or a wrong number of set lines.
SetFamily parse_family(std::istream& in);
SetFamily parse_family(const std::string& text);

/// Inverse of parse_family; parse_family(render_family(f)) == f.
std::string render_family(const SetFamily& family);

/// Merge-scan of two sorted sets. The reference oracle for all
/// property tests; witness is the minimum common element.
IntersectResult brute_force_intersect(const SetFamily& family, std::size_t i, std::size_t j);

/// Deterministic random instance: every (set, element) membership is an
/// independent coin flip with the given probability.
SetFamily random_family(std::size_t m, std::size_t u, double density, std::uint64_t seed);

}  // namespace isectlab
