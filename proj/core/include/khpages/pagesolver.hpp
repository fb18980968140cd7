#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "khpages/complex.hpp"
#include "khpages/poly.hpp"

namespace khpages {

/// Constraints for determining pages E^k from an E^2 rank table.
struct SolverConstraints {
    /// Acknowledges the shift law: the page-k differential moves (h, q) by
    /// (k, 2k-2), i.e. delta by -1. The solver refuses to run without it.
    bool assume_delta_shift = false;
    /// Total rank the stable page must reach, when known.
    std::optional<int> e_infinity_rank;
    /// Bigradings that must keep rank >= 1 on every page.
    std::vector<std::pair<int, int>> survivors;
    /// Cap on reported pages. Enumeration always runs until stabilization
    /// (bounded by the homological span), which the E-infinity constraint needs.
    int max_page = 8;
    /// Cap on distinct page sequences listed when the outcome is ambiguous.
    int ambiguity_cap = 64;
};

/// A rank-r arrow E^k at (h,q) -> (h+k, q+2k-2).
struct PageArrow {
    int page = 0;
    int h = 0;
    int q = 0;
    int rank = 0;
    bool operator==(const PageArrow&) const = default;
};

struct PageSequence {
    std::vector<BigradedRanks> pages;  // pages[j] = E^(j+2)
    int stable_page = 2;               // k with E^k = E^infinity
    std::vector<PageArrow> pattern;
};

enum class SolverStatus { Unique, Ambiguous, Infeasible };

struct SolverResult {
    SolverStatus status = SolverStatus::Infeasible;
    long long pattern_count = 0;              // consistent arrow patterns found
    std::vector<PageSequence> sequences;      // distinct page sequences (capped)
    long long sequence_count = 0;             // distinct page sequences found
    int deepest_page = 2;                     // furthest page any branch reached
};

/// Exhaustive depth-first enumeration of arrow-rank patterns consistent with
/// the shift law, the survivor constraints and the E-infinity rank target.
SolverResult solve_pages(const BigradedRanks& e2, const SolverConstraints&);

/// V^k(q) = sum over (h,q) of (-1)^h rank q^(q/2). The returned polynomial
/// stores doubled exponents; print with to_string_half_exponents.
LaurentPoly vk_polynomial(const BigradedRanks& page);

/// Rank-table convolution under (h, q) addition.
BigradedRanks tensor_pages(const BigradedRanks&, const BigradedRanks&);

}  // namespace khpages
