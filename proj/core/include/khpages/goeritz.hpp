#pragma once

#include <vector>

#include "khpages/diagram.hpp"

namespace khpages {

/// Faces of the diagram's underlying 4-valent planar graph with a two-coloring.
/// Corner c*4+r is the region of crossing c between slots r and r+1 (mod 4).
struct CheckerboardColoring {
    int face_count = 0;
    std::vector<int> face_of_corner;
    std::vector<uint8_t> color_of_face;
};

/// Traces faces from the rotational slot order and two-colors them.
/// Throws DomainError when the diagram is disconnected or the trace is not
/// planar (face count must be crossings + 2).
CheckerboardColoring checkerboard_coloring(const PlanarDiagram&);

/// Symmetric integer matrix on the white faces with one face deleted.
struct GoeritzMatrix {
    std::vector<std::vector<long long>> entries;
    int size() const { return static_cast<int>(entries.size()); }
};

/// Canonical choice: white = color of face 0, delete the first white face.
GoeritzMatrix goeritz_matrix(const PlanarDiagram&);
GoeritzMatrix goeritz_matrix(const PlanarDiagram&, int white_color, int deleted_white_index);

/// Exact integer determinant (Bareiss); the empty matrix has determinant 1.
long long goeritz_determinant(const GoeritzMatrix&);

/// Link determinant |det(Goeritz)|. Zero-crossing unknot convention: 1.
long long determinant(const PlanarDiagram&);

/// |graded Euler characteristic at q = i|; throws DomainError when the value
/// is not purely real or purely imaginary.
long long jones_determinant_check(const PlanarDiagram&);

}  // namespace khpages
