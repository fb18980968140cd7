#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "khpages/complex.hpp"
#include "khpages/diagram.hpp"
#include "khpages/poly.hpp"

namespace khpages {

/// Reduced Khovanov cube complex of a diagram over GF(2).
///
/// Generators are labelings of the circles of each resolution by plus/minus
/// with the marked circle fixed to minus; f is the homological grading
/// h = |I| - n_minus and aux is the quantum grading
/// q = (#plus - #minus) + |I| + n_plus - 2 n_minus + 1. The differential sums
/// merge/split maps over cube edges, raises h by exactly 1 and preserves q.
struct CubeComplex {
    GradedComplex complex;
    PlanarDiagram diagram;
    std::vector<uint64_t> vertex_of_generator;
    std::vector<uint32_t> labels_of_generator;  // bit set = unmarked circle labeled plus
    std::vector<int64_t> vertex_base;           // resolution mask -> first generator index
    std::vector<uint8_t> vertex_circles;        // resolution mask -> circle count

    int generator_count() const { return complex.size(); }
    /// Generator index of a labeling at a vertex; label bits follow the
    /// canonical circle order with the marked circle skipped.
    int generator_at(uint64_t vertex, uint32_t label_bits) const;
};

/// Builds the full cube. Vertex work is pure and runs on `threads` workers
/// (the result is identical for any thread count).
CubeComplex build_reduced_complex(const PlanarDiagram&, int threads = 1);

/// Reduced Khovanov homology ranks per (h, q).
BigradedRanks kh_homology(const PlanarDiagram&, int threads = 1);
BigradedRanks kh_homology(const CubeComplex&);

/// "h^0q^6 + h^2q^10 + ..." with terms ascending in (h, q); ranks >= 2 print
/// as a leading coefficient; "0" for an empty table.
std::string poincare_polynomial(const BigradedRanks&);

/// Distinct delta = q/2 - h values with nonzero rank (stored doubled to stay
/// integral) and the width max - min + 1 in the table's delta lattice.
struct DeltaSupport {
    std::vector<int> twice_deltas;  // ascending
    int width = 0;
};
DeltaSupport delta_support(const BigradedRanks&);

/// Sum of (-1)^h q^(q-grading) over chain generators; the reduced Jones
/// polynomial in this normalization (unknot -> 1).
LaurentPoly graded_euler_characteristic(const CubeComplex&);

}  // namespace khpages
