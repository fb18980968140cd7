#pragma once

#include <map>
#include <utility>
#include <vector>

#include "khpages/f2.hpp"

namespace khpages {

/// Rank table keyed by a grading pair. Used both as (filtration, aux) for
/// generic filtered complexes and as (h, q) for Khovanov-style tables.
using GradedRanks = std::map<std::pair<int, int>, int>;
using BigradedRanks = GradedRanks;

/// Finite chain complex over GF(2). Each generator carries a primary grading
/// f (homological / filtration) and a conserved auxiliary grading aux (the
/// quantum grading for cube complexes; all zero otherwise).
struct GradedComplex {
    std::vector<int> f;
    std::vector<int> aux;
    std::vector<std::vector<int>> d;  // d[i] = sorted target indices of generator i

    int size() const { return static_cast<int>(f.size()); }

    static GradedComplex from_matrix(std::vector<int> f, std::vector<int> aux,
                                     const SparseMatrixF2& diff);
    SparseMatrixF2 to_matrix() const;

    bool d_squared_is_zero() const;
    /// Bounds, sortedness, matching grading vector lengths, d*d = 0.
    /// Throws DomainError on violation.
    void validate() const;
    /// True when every differential component raises f by exactly `shift`
    /// and preserves aux.
    bool is_homogeneous(int shift) const;
    /// True when no differential component lowers f (filtered complex).
    bool is_filtered() const;

    GradedRanks generator_ranks() const;
};

/// Homology ranks per (f, aux). Requires a homological complex: every
/// differential component raises f by exactly 1 and preserves aux.
/// Throws DomainError otherwise or when d*d != 0.
GradedRanks homology(const GradedComplex&);

/// Gaussian cancellation of the differential entry (k, l): the returned
/// complex drops x_k and x_l and carries d'(x_i) = d(x_i) + d(x_i,x_l) d(x_k).
/// It is chain homotopy equivalent to the input; the maps are recorded as
///   inclusion  x_i -> x_i + d(x_i,x_l) x_k   (inclusion_col = supports of d(.,l))
///   projection x_l -> sum of d(x_k,.), x_k -> 0
/// in the original indexing.
struct CancelPairResult {
    GradedComplex complex;
    std::vector<int> old_index;       // new index -> old index
    std::vector<int> new_index;       // old index -> new index, -1 for k and l
    std::vector<int> projection_row;  // targets of d(x_k), minus {k, l}
    std::vector<int> inclusion_col;   // sources with d(x_i, x_l) = 1, minus {k, l}
};
CancelPairResult cancel_pair(const GradedComplex&, int k, int l);

}  // namespace khpages
