#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "khpages/braid.hpp"

namespace khpages {

/// One crossing of a planar diagram.
///
/// slots lists the four incident edge ids counterclockwise starting from the
/// incoming under-strand edge, so the under strand runs slot0 -> slot2 and
/// the over strand occupies slots 1 and 3. Sign +1 means the over strand
/// runs slot3 -> slot1; sign -1 means slot1 -> slot3.
///
/// The 0-resolution joins (slot0,slot1) and (slot2,slot3); the 1-resolution
/// joins (slot1,slot2) and (slot3,slot0). With this convention the
/// 0-resolution of a positive crossing is its oriented (Seifert) smoothing.
struct Crossing {
    int sign = +1;
    std::array<int, 4> slots{};
};

/// Signed-crossing combinatorial link diagram with a marked edge.
/// Edges are 0..edge_count-1. A component with no crossings is stored as an
/// explicit free circle (its edge id appears in no crossing slot).
struct PlanarDiagram {
    std::vector<Crossing> crossings;
    int edge_count = 0;
    std::vector<int> free_circles;
    int marked_edge = 0;
    int n_plus = 0;
    int n_minus = 0;

    int crossing_count() const { return static_cast<int>(crossings.size()); }
    int writhe() const { return n_plus - n_minus; }
    bool is_connected() const;

    /// Structural checks: every non-free edge fills exactly one in-slot and
    /// one out-slot, free circles fill none, sign counts match, marked edge
    /// exists. Throws DomainError.
    void validate() const;
};

/// Resolution choice, one bit per crossing (0- or 1-smoothing).
struct ResolutionVector {
    std::vector<uint8_t> bits;

    static ResolutionVector from_mask(uint64_t mask, int crossing_count);
    uint64_t to_mask() const;
    int weight() const;  // number of 1s
};

/// Circles of a fully resolved diagram. Circle indices are ordered by each
/// circle's smallest edge id.
struct CircleSet {
    int circle_count = 0;
    std::vector<int> circle_of_edge;
    int marked_circle = 0;
};

/// Closure of a braid word. Positive letters become sign +1 crossings; the
/// marked edge is strand 1's closure arc; strands that meet no crossing
/// close up into free circles.
PlanarDiagram braid_to_diagram(const BraidWord&);

CircleSet resolve(const PlanarDiagram&, const ResolutionVector&);

/// 0 at every positive crossing, 1 at every negative crossing; resolving
/// there yields the Seifert circles.
ResolutionVector oriented_resolution(const PlanarDiagram&);

/// Splice d2 into d1 along the two marked edges (orientation-respecting).
/// The result's marked edge is the splice edge.
PlanarDiagram connected_sum(const PlanarDiagram& d1, const PlanarDiagram& d2);

/// PD-code JSON: {"pd": [[a,b,c,d,"+"|"-"], ...], "free": [e, ...], "marked": e}.
/// Edge ids are normalized to 0..E-1 in increasing order of the original ids;
/// "free" and "marked" are optional (marked defaults to the lowest edge id).
PlanarDiagram parse_pd_json(const std::string& json_text);
std::string to_pd_json(const PlanarDiagram&);

/// Dispatch on a leading '{': PD JSON, otherwise the braid grammar.
PlanarDiagram parse_diagram(const std::string& text);

}  // namespace khpages
