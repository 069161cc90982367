#ifndef HOMLEX_CODES_HPP
#define HOMLEX_CODES_HPP

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "homlex/graph.hpp"

namespace homlex {

// Codes are stored in construction order: bits[0] belongs to the earliest
// coded vertex. The paper writes codes right to left, so all display strings
// are the reverse of the stored sequence; the boundary between the two
// conventions is from_display/display.

/// Construction sequence of a threshold graph on n vertices: n-1 bits, one
/// per vertex after the first. 1 = dominating, 0 = isolated at insertion.
struct ThresholdCode {
    std::vector<std::uint8_t> bits;

    int order() const { return static_cast<int>(bits.size()) + 1; }

    /// Edge count of the decoded graph: sum of (i+1) over 1-bits at index i.
    std::int64_t edge_count() const;

    static ThresholdCode from_display(std::string_view s);
    std::string display() const;

    bool operator==(const ThresholdCode&) const = default;
};

/// Construction sequence of a loop-threshold graph on n vertices: n bits,
/// including the first vertex. 1 = looped dominating, 0 = unlooped isolated.
struct LoopThresholdCode {
    std::vector<std::uint8_t> bits;

    int order() const { return static_cast<int>(bits.size()); }

    /// Edge count excluding loops: sum of i over 1-bits at index i.
    std::int64_t edge_count() const;
    int loop_count() const;

    static LoopThresholdCode from_display(std::string_view s);
    std::string display() const;

    bool operator==(const LoopThresholdCode&) const = default;
};

/// Builds the loop-free graph whose vertex i+1 with bit 1 is adjacent to all
/// of 0..i. The empty code yields K_1.
Graph decode_threshold(const ThresholdCode& code);

/// Builds the looped image graph: a 1-bit vertex is looped and adjacent to
/// every earlier vertex. Rejects the empty code (a graph needs a vertex).
Graph decode_loop_threshold(const LoopThresholdCode& code);

/// Recovers the construction sequence by peeling dominating/isolated
/// vertices. Throws NotThresholdError if some step has neither. The result
/// is canonical: isomorphic threshold graphs yield equal codes.
ThresholdCode encode_threshold(const Graph& g);

// The paper's two- and three-vertex images, with the labeling of the codes
// "10" and "010": vertex 0 unlooped, vertex 1 looped.
Graph make_h_ind();
Graph make_j();

} // namespace homlex

#endif
