#pragma once

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "khpages/complex.hpp"

namespace khpages {

/// One page of the spectral sequence of a filtered complex: the graded rank
/// table of the reduced complex after stage k of cancellation (stage n
/// cancels every differential component shifting f by n-1, repeating until
/// none remain), plus the components of the reduced differential that shift
/// f by exactly k — the page-k differential.
struct Page {
    int k = 0;
    bool is_final = false;  // reduced differential identically zero from here on
    GradedRanks ranks;      // keyed (f, aux) over surviving generators
    std::vector<std::pair<int, int>> differential;  // entries with f-shift == k, original indices
};

struct PageRunOptions {
    int max_page = 8;
    /// When set, cancellations inside each stage are performed in a seeded
    /// random order instead of (source, target) order. Order-independence of
    /// the page tables is part of the contract; this exists to test it.
    std::optional<uint32_t> shuffle_seed;
};

/// Pages E^1 .. E^max_page by staged cancellation. Stops early at the first
/// page whose differential vanishes, marking it is_final (the E-infinity page).
/// Requires a filtered complex (no component may lower f).
std::vector<Page> compute_pages(const GradedComplex&, int max_page);
std::vector<Page> compute_pages(const GradedComplex&, const PageRunOptions&);

/// Independent subquotient oracle: rank of
///   Z^k_p / (D(Z^{k-1}_{p-k+1}) + Z^{k-1}_{p+1})
/// with F_p spanned by generators of filtration >= p and
/// Z^k_p = F_p with differential into F_{p+k}, all by Gaussian elimination on
/// explicit spanning sets. Requires aux to be preserved by the differential.
std::vector<GradedRanks> oracle_pages(const GradedComplex&, int max_page);

/// Page-by-page fate of a cycle's class under staged cancellation. The cycle
/// must be homogeneous in f; its class representative on each page is the
/// filtration-level component of the projected chain, and the class is zero
/// exactly when that component is empty.
struct CycleFate {
    int page = 0;
    std::vector<int> representative;  // original generator indices
    bool zero = false;
};
std::vector<CycleFate> track_cycle(const GradedComplex&, const std::vector<int>& cycle, int max_page);

}  // namespace khpages
