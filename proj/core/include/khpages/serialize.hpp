#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "khpages/khovanov.hpp"
#include "khpages/pagesolver.hpp"
#include "khpages/transverse.hpp"

namespace khpages {

/// [{"h":0,"q":6,"rank":1}, ...] sorted by (h, q).
std::string rank_table_json(const BigradedRanks&);

/// {"bigrading":[0,q],"e2_nonzero":b,"page_fates":[...],"fillability_obstruction":b}
std::string psi_report_json(const PsiReport&);

struct PagesRunInfo {
    bool delta_shift = true;
    std::optional<int> einf_rank;
    std::string einf_source;  // "user" | "lspace" | "none"
    std::vector<std::pair<int, int>> survivors;
};

/// {"assumptions":{...},"status":"unique","pages":[{"k":2,"table":[...]},...],"vk":[...]}
std::string pages_result_json(const PagesRunInfo&, const SolverResult&);

std::string determinant_json(long long determinant, long long goeritz, long long jones_eval);

}  // namespace khpages
