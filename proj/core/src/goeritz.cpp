#include "khpages/goeritz.hpp"

#include <algorithm>
#include <array>
#include <cstdlib>
#include <numeric>

#include "khpages/errors.hpp"
#include "khpages/khovanov.hpp"

namespace khpages {

namespace {

// Dart = (crossing, slot) endpoint of an edge. For each edge we need both
// incidences; loops (same edge twice at one crossing) keep slot order.
struct Dart {
    int crossing = -1;
    int slot = -1;
};

}  // namespace

CheckerboardColoring checkerboard_coloring(const PlanarDiagram& d) {
    d.validate();
    if (!d.is_connected()) throw DomainError("checkerboard: diagram is disconnected");
    const int m = d.crossing_count();
    if (m == 0) throw DomainError("checkerboard: no crossings to trace");

    // The two darts of each edge, in slot-scan order.
    std::vector<std::array<Dart, 2>> darts(static_cast<size_t>(d.edge_count));
    std::vector<int> dart_count(static_cast<size_t>(d.edge_count), 0);
    for (int c = 0; c < m; ++c) {
        for (int s = 0; s < 4; ++s) {
            int e = d.crossings[static_cast<size_t>(c)].slots[static_cast<size_t>(s)];
            darts[static_cast<size_t>(e)][static_cast<size_t>(dart_count[static_cast<size_t>(e)]++)] =
                Dart{c, s};
        }
    }

    // Walk: having arrived into (c, s), leave along the edge at slot s+1 and
    // arrive at its far end. Orbits of this walk are the faces; the corner
    // passed at (c, s) is region s of crossing c.
    auto far_end = [&](int c, int s) -> Dart {
        int e = d.crossings[static_cast<size_t>(c)].slots[static_cast<size_t>(s)];
        const auto& pair = darts[static_cast<size_t>(e)];
        if (pair[0].crossing == c && pair[0].slot == s) return pair[1];
        return pair[0];
    };

    CheckerboardColoring out;
    out.face_of_corner.assign(static_cast<size_t>(4 * m), -1);
    for (int start = 0; start < 4 * m; ++start) {
        if (out.face_of_corner[static_cast<size_t>(start)] >= 0) continue;
        int face = out.face_count++;
        int c = start / 4, s = start % 4;
        while (out.face_of_corner[static_cast<size_t>(4 * c + s)] < 0) {
            out.face_of_corner[static_cast<size_t>(4 * c + s)] = face;
            Dart next = far_end(c, (s + 1) % 4);
            c = next.crossing;
            s = next.slot;
        }
    }
    if (out.face_count != m + 2)
        throw DomainError("checkerboard: face count is not crossings + 2 (trace not planar)");

    // Two-color: the faces on either side of each edge get opposite colors.
    // The edge at slot s separates regions s-1 and s of that crossing.
    out.color_of_face.assign(static_cast<size_t>(out.face_count), 2);
    std::vector<int> stack{0};
    out.color_of_face[0] = 0;
    std::vector<std::vector<int>> adjacency(static_cast<size_t>(out.face_count));
    for (int c = 0; c < m; ++c) {
        for (int s = 0; s < 4; ++s) {
            int a = out.face_of_corner[static_cast<size_t>(4 * c + s)];
            int b = out.face_of_corner[static_cast<size_t>(4 * c + (s + 3) % 4)];
            adjacency[static_cast<size_t>(a)].push_back(b);
            adjacency[static_cast<size_t>(b)].push_back(a);
        }
    }
    while (!stack.empty()) {
        int face = stack.back();
        stack.pop_back();
        for (int next : adjacency[static_cast<size_t>(face)]) {
            if (out.color_of_face[static_cast<size_t>(next)] == 2) {
                out.color_of_face[static_cast<size_t>(next)] =
                    static_cast<uint8_t>(1 - out.color_of_face[static_cast<size_t>(face)]);
                stack.push_back(next);
            } else if (out.color_of_face[static_cast<size_t>(next)] ==
                       out.color_of_face[static_cast<size_t>(face)]) {
                throw DomainError("checkerboard: faces are not two-colorable");
            }
        }
    }
    return out;
}

GoeritzMatrix goeritz_matrix(const PlanarDiagram& d, int white_color, int deleted_white_index) {
    CheckerboardColoring coloring = checkerboard_coloring(d);
    const int m = d.crossing_count();

    std::vector<int> white_faces;
    for (int face = 0; face < coloring.face_count; ++face) {
        if (coloring.color_of_face[static_cast<size_t>(face)] == white_color) white_faces.push_back(face);
    }
    if (white_faces.empty()) throw DomainError("goeritz: no white faces");
    if (deleted_white_index < 0 || deleted_white_index >= static_cast<int>(white_faces.size()))
        throw DomainError("goeritz: deleted face index out of range");

    std::vector<int> index_of_face(static_cast<size_t>(coloring.face_count), -1);
    int n = 0;
    for (int i = 0; i < static_cast<int>(white_faces.size()); ++i) {
        if (i == deleted_white_index) continue;
        index_of_face[static_cast<size_t>(white_faces[static_cast<size_t>(i)])] = n++;
    }

    GoeritzMatrix g;
    g.entries.assign(static_cast<size_t>(n), std::vector<long long>(static_cast<size_t>(n), 0));
    std::vector<long long> row_total(static_cast<size_t>(white_faces.size()), 0);

    for (int c = 0; c < m; ++c) {
        // Opposite regions share a color; the white pair is (0,2) or (1,3).
        int f0 = coloring.face_of_corner[static_cast<size_t>(4 * c)];
        int type;
        int wa, wb;
        if (coloring.color_of_face[static_cast<size_t>(f0)] == white_color) {
            wa = f0;
            wb = coloring.face_of_corner[static_cast<size_t>(4 * c + 2)];
            type = +1;  // white pair between slots (0,1) and (2,3)
        } else {
            wa = coloring.face_of_corner[static_cast<size_t>(4 * c + 1)];
            wb = coloring.face_of_corner[static_cast<size_t>(4 * c + 3)];
            type = -1;  // white pair in the regions swept by the A-smoothing
        }
        if (wa == wb) continue;  // nugatory: drops out of the form
        int ia = index_of_face[static_cast<size_t>(wa)];
        int ib = index_of_face[static_cast<size_t>(wb)];
        if (ia >= 0 && ib >= 0) {
            g.entries[static_cast<size_t>(ia)][static_cast<size_t>(ib)] -= type;
            g.entries[static_cast<size_t>(ib)][static_cast<size_t>(ia)] -= type;
        }
        // Diagonal = minus the sum of the crossing types at the face,
        // including crossings shared with the deleted face.
        for (int w : {wa, wb}) {
            int idx = index_of_face[static_cast<size_t>(w)];
            if (idx >= 0) g.entries[static_cast<size_t>(idx)][static_cast<size_t>(idx)] += type;
        }
    }
    return g;
}

GoeritzMatrix goeritz_matrix(const PlanarDiagram& d) { return goeritz_matrix(d, 0, 0); }

long long goeritz_determinant(const GoeritzMatrix& g) {
    const int n = g.size();
    if (n == 0) return 1;
    // Bareiss fraction-free elimination; exact over the integers.
    std::vector<std::vector<long long>> a = g.entries;
    long long prev = 1;
    int sign = 1;
    for (int k = 0; k < n - 1; ++k) {
        if (a[static_cast<size_t>(k)][static_cast<size_t>(k)] == 0) {
            int swap_row = -1;
            for (int r = k + 1; r < n; ++r) {
                if (a[static_cast<size_t>(r)][static_cast<size_t>(k)] != 0) {
                    swap_row = r;
                    break;
                }
            }
            if (swap_row < 0) return 0;
            std::swap(a[static_cast<size_t>(k)], a[static_cast<size_t>(swap_row)]);
            sign = -sign;
        }
        for (int i = k + 1; i < n; ++i) {
            for (int j = k + 1; j < n; ++j) {
                long long num = a[static_cast<size_t>(i)][static_cast<size_t>(j)] *
                                    a[static_cast<size_t>(k)][static_cast<size_t>(k)] -
                                a[static_cast<size_t>(i)][static_cast<size_t>(k)] *
                                    a[static_cast<size_t>(k)][static_cast<size_t>(j)];
                a[static_cast<size_t>(i)][static_cast<size_t>(j)] = num / prev;
            }
            a[static_cast<size_t>(i)][static_cast<size_t>(k)] = 0;
        }
        prev = a[static_cast<size_t>(k)][static_cast<size_t>(k)];
    }
    return sign * a[static_cast<size_t>(n - 1)][static_cast<size_t>(n - 1)];
}

long long determinant(const PlanarDiagram& d) {
    d.validate();
    if (d.crossing_count() == 0) {
        if (!d.is_connected()) throw DomainError("determinant: diagram is disconnected");
        return 1;
    }
    return std::llabs(goeritz_determinant(goeritz_matrix(d)));
}

long long jones_determinant_check(const PlanarDiagram& d) {
    LaurentPoly chi = graded_euler_characteristic(build_reduced_complex(d));
    auto [re, im] = chi.eval_at_i();
    if (re != 0 && im != 0)
        throw DomainError("jones determinant: evaluation at i is not purely real or imaginary");
    return std::llabs(re) + std::llabs(im);
}

}  // namespace khpages
