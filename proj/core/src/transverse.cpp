#include "khpages/transverse.hpp"

#include <algorithm>

#include "khpages/errors.hpp"
#include "khpages/pages.hpp"

namespace khpages {

PsiChain psi_chain(const BraidWord& braid) {
    braid.validate();
    PlanarDiagram d = braid_to_diagram(braid);
    ResolutionVector io = oriented_resolution(d);
    CircleSet seifert = resolve(d, io);
    if (seifert.circle_count != braid.strands)
        throw DomainError("psi_chain: oriented resolution has the wrong circle count");

    // Every cube edge leaving the oriented resolution must merge two distinct
    // circles; the all-minus labeling then maps to zero along each of them,
    // so the chain is a cycle.
    for (int j = 0; j < d.crossing_count(); ++j) {
        if (io.bits[static_cast<size_t>(j)] != 0) continue;  // already 1: no outgoing edge here
        ResolutionVector flipped = io;
        flipped.bits[static_cast<size_t>(j)] ^= 1;
        CircleSet next = resolve(d, flipped);
        if (next.circle_count != seifert.circle_count - 1)
            throw DomainError("psi_chain: outgoing cube edge is not a merge");
    }

    PsiChain psi;
    psi.braid = braid;
    psi.h = 0;
    psi.q = braid.writhe() - braid.strands + 1;
    psi.generator = -1;  // located per cube by psi_generator_index
    return psi;
}

int psi_generator_index(const CubeComplex& cube, const PsiChain& psi) {
    uint64_t vertex = oriented_resolution(cube.diagram).to_mask();
    int g = cube.generator_at(vertex, 0);  // all-minus labeling
    if (cube.complex.f[static_cast<size_t>(g)] != psi.h ||
        cube.complex.aux[static_cast<size_t>(g)] != psi.q)
        throw DomainError("psi: bigrading bookkeeping mismatch");
    return g;
}

PsiClass psi_class(const BraidWord& braid) {
    PsiChain psi = psi_chain(braid);
    CubeComplex cube = build_reduced_complex(braid_to_diagram(braid));
    int generator = psi_generator_index(cube, psi);

    // The differential preserves q, so the chain's fate is decided inside its
    // own q-sector; extract that subcomplex before cancelling.
    std::vector<int> sector;
    std::vector<int> local(static_cast<size_t>(cube.complex.size()), -1);
    for (int i = 0; i < cube.complex.size(); ++i) {
        if (cube.complex.aux[static_cast<size_t>(i)] == psi.q) {
            local[static_cast<size_t>(i)] = static_cast<int>(sector.size());
            sector.push_back(i);
        }
    }
    GradedComplex sub;
    for (int i : sector) {
        sub.f.push_back(cube.complex.f[static_cast<size_t>(i)]);
        sub.aux.push_back(psi.q);
        std::vector<int> row;
        for (int j : cube.complex.d[static_cast<size_t>(i)]) row.push_back(local[static_cast<size_t>(j)]);
        sub.d.push_back(std::move(row));
    }

    auto fates = track_cycle(sub, {local[static_cast<size_t>(generator)]}, 2);
    PsiClass out;
    out.h = psi.h;
    out.q = psi.q;
    out.nonzero = !fates.back().zero;
    return out;
}

namespace {

int rank_at(const BigradedRanks& t, int h, int q) {
    auto it = t.find({h, q});
    return it == t.end() ? 0 : it->second;
}

bool supported_in_nonpositive_h(const BigradedRanks& t) {
    for (auto [hq, r] : t)
        if (r > 0 && hq.first > 0) return false;
    return true;
}

}  // namespace

PsiReport fillability_from_tables(std::pair<int, int> bigrading, bool e2_nonzero,
                                  const std::vector<BigradedRanks>& tables) {
    PsiReport report;
    report.h = bigrading.first;
    report.q = bigrading.second;
    report.e2_nonzero = e2_nonzero;
    report.fillability_obstruction = false;

    PageFateKind prev = e2_nonzero ? PageFateKind::Nonzero : PageFateKind::Zero;
    for (size_t j = 0; j < tables.size(); ++j) {
        const int k = static_cast<int>(j) + 2;
        const BigradedRanks& table = tables[j];
        PageFateKind fate;
        if (k == 2) {
            fate = prev;
        } else if (rank_at(table, bigrading.first, bigrading.second) == 0) {
            fate = PageFateKind::Zero;
        } else if (prev == PageFateKind::Nonzero &&
                   rank_at(tables[j - 1], bigrading.first - (k - 1),
                           bigrading.second - 2 * (k - 1) + 2) == 0) {
            // The class is a cycle; it could only die by being hit from
            // (h-(k-1), q-2(k-1)+2) on the previous page, which is empty.
            fate = PageFateKind::Nonzero;
        } else {
            fate = PageFateKind::Unknown;
        }
        report.page_fates.push_back({k, fate});
        if (fate == PageFateKind::Zero && supported_in_nonpositive_h(table))
            report.fillability_obstruction = true;
        prev = fate;
    }
    return report;
}

PsiReport fillability_report(const BraidWord& braid, const SolverResult* pages) {
    PsiClass cls = psi_class(braid);
    BigradedRanks kh = kh_homology(braid_to_diagram(braid));

    std::vector<BigradedRanks> tables{kh};
    if (pages != nullptr) {
        if (pages->status != SolverStatus::Unique)
            throw DomainError("fillability_report: solver pages must be a unique sequence");
        const PageSequence& seq = pages->sequences.front();
        if (seq.pages.empty() || seq.pages.front() != kh)
            throw DomainError("fillability_report: solver pages do not match this link");
        tables = seq.pages;
    }
    return fillability_from_tables({cls.h, cls.q}, cls.nonzero, tables);
}

}  // namespace khpages
