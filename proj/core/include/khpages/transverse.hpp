#pragma once

#include <utility>
#include <vector>

#include "khpages/braid.hpp"
#include "khpages/khovanov.hpp"
#include "khpages/pagesolver.hpp"

namespace khpages {

/// The distinguished cycle of a braid closure: the all-minus labeling of the
/// oriented resolution. Lives in bigrading (0, writhe - strands + 1).
struct PsiChain {
    BraidWord braid;
    int h = 0;
    int q = 0;
    int generator = 0;  // index in build_reduced_complex(braid_to_diagram(braid))
};

/// Constructs the chain and verifies it is a cycle (every outgoing cube edge
/// at the oriented resolution merges two minus circles). The generator field
/// is located lazily per cube by psi_generator_index.
PsiChain psi_chain(const BraidWord&);

/// Index of the psi generator inside a cube built from the same braid's closure.
int psi_generator_index(const CubeComplex&, const PsiChain&);

struct PsiClass {
    bool nonzero = false;
    int h = 0;
    int q = 0;
};

/// The class of the psi chain in reduced Khovanov homology, by tracking the
/// cycle through the full cube cancellation.
PsiClass psi_class(const BraidWord&);

enum class PageFateKind { Nonzero, Zero, Unknown };

struct PageFate {
    int page = 0;
    PageFateKind fate = PageFateKind::Unknown;
};

struct PsiReport {
    int h = 0;
    int q = 0;
    bool e2_nonzero = false;
    std::vector<PageFate> page_fates;
    bool fillability_obstruction = false;
};

/// Literal hypothesis check of the vanishing criterion: the obstruction flag
/// is set only when the class is zero on some page that is supported in
/// non-positive homological gradings. Page fates beyond E^2 come from rank
/// tables: "nonzero" when survival is forced by an empty source bigrading,
/// never by assumption. When solver pages are supplied their E^2 table must
/// match the braid's Khovanov table (DomainError otherwise).
PsiReport fillability_report(const BraidWord&, const SolverResult* pages = nullptr);

/// The same check on explicit tables (tables[j] = the page-(j+2) rank table).
PsiReport fillability_from_tables(std::pair<int, int> bigrading, bool e2_nonzero,
                                  const std::vector<BigradedRanks>& tables);

}  // namespace khpages
