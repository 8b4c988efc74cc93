#include "isectlab/set_family.hpp"

#include <algorithm>
#include <random>
#include <sstream>
#include <stdexcept>

namespace isectlab {

namespace {

std::vector<ElementId> parse_set_line(const std::string& line, std::size_t universe_size,
                                      std::size_t line_no) {
    std::vector<ElementId> out;
    std::istringstream ss(line);
    long long value = 0;
    while (ss >> value) {
        if (value < 0 || static_cast<unsigned long long>(value) >= universe_size) {
            throw ParseError("line " + std::to_string(line_no) + ": element " +
                             std::to_string(value) + " out of universe [0, " +
                             std::to_string(universe_size) + ")");
        }
        const auto e = static_cast<ElementId>(value);
        if (!out.empty() && e <= out.back()) {
            throw ParseError("line " + std::to_string(line_no) +
                             ": elements not strictly increasing at " + std::to_string(value));
        }
        out.push_back(e);
    }
    if (!ss.eof()) {
        throw ParseError("line " + std::to_string(line_no) + ": non-numeric token");
    }
    return out;
}

}  // namespace

SetFamily::SetFamily(std::size_t universe_size, std::vector<std::vector<ElementId>> sets)
    : universe_size_(universe_size), sets_(std::move(sets)) {
    for (std::size_t i = 0; i < sets_.size(); ++i) {
        const auto& s = sets_[i];
        for (std::size_t p = 0; p < s.size(); ++p) {
            if (s[p] >= universe_size_) {
                throw std::invalid_argument("set " + std::to_string(i) + ": element " +
                                            std::to_string(s[p]) + " out of universe");
            }
            if (p > 0 && s[p] <= s[p - 1]) {
                throw std::invalid_argument("set " + std::to_string(i) +
                                            ": elements not strictly increasing");
            }
        }
        total_size_ += s.size();
    }
}

const std::vector<ElementId>& SetFamily::set(std::size_t i) const {
    if (i >= sets_.size()) {
        throw std::out_of_range("set index " + std::to_string(i) + " out of range");
    }
    return sets_[i];
}

SetFamily parse_family(std::istream& in) {
    std::string line;
    std::size_t line_no = 0;
    // comment lines are permitted before the header only
    for (;;) {
        if (!std::getline(in, line)) {
            throw ParseError("missing header line");
        }
        ++line_no;
        if (line.empty() || line[0] != '#') {
            break;
        }
    }
    std::istringstream header(line);
    long long m = -1;
    long long u = -1;
    if (!(header >> m >> u) || m < 0 || u < 0) {
        throw ParseError("malformed header, expected \"m u\"");
    }
    std::string trailing;
    if (header >> trailing) {
        throw ParseError("malformed header, trailing content");
    }

    std::vector<std::vector<ElementId>> sets;
    sets.reserve(static_cast<std::size_t>(m));
    for (long long i = 0; i < m; ++i) {
        if (!std::getline(in, line)) {
            throw ParseError("expected " + std::to_string(m) + " set lines, got " +
                             std::to_string(i));
        }
        ++line_no;
        sets.push_back(parse_set_line(line, static_cast<std::size_t>(u), line_no));
    }
    if (std::getline(in, line)) {
        throw ParseError("more set lines than the declared " + std::to_string(m));
    }
    return SetFamily(static_cast<std::size_t>(u), std::move(sets));
}

SetFamily parse_family(const std::string& text) {
    std::istringstream in(text);
    return parse_family(in);
}

std::string render_family(const SetFamily& family) {
    std::ostringstream out;
    out << family.num_sets() << ' ' << family.universe_size() << '\n';
    for (const auto& s : family.sets()) {
        for (std::size_t p = 0; p < s.size(); ++p) {
            if (p > 0) out << ' ';
            out << s[p];
        }
        out << '\n';
    }
    return out.str();
}

IntersectResult brute_force_intersect(const SetFamily& family, std::size_t i, std::size_t j) {
    const auto& a = family.set(i);
    const auto& b = family.set(j);
    IntersectResult result;
    std::size_t pa = 0;
    std::size_t pb = 0;
    while (pa < a.size() && pb < b.size()) {
        if (a[pa] == b[pb]) {
            result.intersects = true;
            result.witness = a[pa];
            return result;
        }
        if (a[pa] < b[pb]) {
            ++pa;
        } else {
            ++pb;
        }
    }
    return result;
}

SetFamily random_family(std::size_t m, std::size_t u, double density, std::uint64_t seed) {
    if (m < 1 || u < 1) {
        throw std::invalid_argument("random_family requires m >= 1 and u >= 1");
    }
    if (density < 0.0 || density > 1.0) {
        throw std::invalid_argument("density must lie in [0, 1]");
    }
    std::mt19937_64 rng(seed);
    std::vector<std::vector<ElementId>> sets(m);
    for (std::size_t i = 0; i < m; ++i) {
        for (std::size_t e = 0; e < u; ++e) {
            // top-53-bit draw keeps the stream independent of library
            // distribution internals
            const double x = static_cast<double>(rng() >> 11) * 0x1.0p-53;
            if (x < density) {
                sets[i].push_back(static_cast<ElementId>(e));
            }
        }
    }
    return SetFamily(u, std::move(sets));
}

}  // namespace isectlab
