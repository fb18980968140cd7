#include "khpages/serialize.hpp"

#include <nlohmann/json.hpp>

namespace khpages {

namespace {

using nlohmann::json;

json rank_table_value(const BigradedRanks& table) {
    json rows = json::array();
    for (auto [hq, rank] : table) {
        if (rank == 0) continue;
        json row;
        row["h"] = hq.first;
        row["q"] = hq.second;
        row["rank"] = rank;
        rows.push_back(row);
    }
    return rows;
}

const char* fate_name(PageFateKind kind) {
    switch (kind) {
        case PageFateKind::Nonzero: return "nonzero";
        case PageFateKind::Zero: return "zero";
        case PageFateKind::Unknown: return "unknown";
    }
    return "unknown";
}

std::string dump(const json& j) { return j.dump(2) + "\n"; }

}  // namespace

std::string rank_table_json(const BigradedRanks& table) { return dump(rank_table_value(table)); }

std::string psi_report_json(const PsiReport& report) {
    json j;
    j["bigrading"] = json::array({report.h, report.q});
    j["e2_nonzero"] = report.e2_nonzero;
    json fates = json::array();
    for (const PageFate& fate : report.page_fates) {
        json f;
        f["k"] = fate.page;
        f["fate"] = fate_name(fate.fate);
        fates.push_back(f);
    }
    j["page_fates"] = fates;
    j["fillability_obstruction"] = report.fillability_obstruction;
    return dump(j);
}

std::string pages_result_json(const PagesRunInfo& info, const SolverResult& result) {
    json j;
    json assumptions;
    assumptions["delta_shift"] = info.delta_shift;
    if (info.einf_rank)
        assumptions["einf_rank"] = *info.einf_rank;
    else
        assumptions["einf_rank"] = nullptr;
    assumptions["einf_source"] = info.einf_source;
    json survivors = json::array();
    for (auto [h, q] : info.survivors) survivors.push_back(json::array({h, q}));
    assumptions["survivors"] = survivors;
    j["assumptions"] = assumptions;

    switch (result.status) {
        case SolverStatus::Unique: j["status"] = "unique"; break;
        case SolverStatus::Ambiguous: j["status"] = "ambiguous"; break;
        case SolverStatus::Infeasible: j["status"] = "infeasible"; break;
    }

    if (result.status == SolverStatus::Unique) {
        const PageSequence& seq = result.sequences.front();
        json pages = json::array();
        json vk = json::array();
        for (size_t i = 0; i < seq.pages.size(); ++i) {
            json page;
            page["k"] = static_cast<int>(i) + 2;
            if (static_cast<int>(i) + 2 == seq.stable_page) page["einf"] = true;
            page["table"] = rank_table_value(seq.pages[i]);
            pages.push_back(page);
            vk.push_back(vk_polynomial(seq.pages[i]).to_string_half_exponents());
        }
        j["pages"] = pages;
        j["vk"] = vk;
        json pattern = json::array();
        for (const PageArrow& arrow : seq.pattern) {
            json a;
            a["k"] = arrow.page;
            a["from"] = json::array({arrow.h, arrow.q});
            a["to"] = json::array({arrow.h + arrow.page, arrow.q + 2 * arrow.page - 2});
            a["rank"] = arrow.rank;
            pattern.push_back(a);
        }
        j["pattern"] = pattern;
    } else if (result.status == SolverStatus::Ambiguous) {
        j["sequence_count"] = result.sequence_count;
        j["pattern_count"] = result.pattern_count;
        json all = json::array();
        for (const PageSequence& seq : result.sequences) {
            json pages = json::array();
            for (size_t i = 0; i < seq.pages.size(); ++i) {
                json page;
                page["k"] = static_cast<int>(i) + 2;
                page["table"] = rank_table_value(seq.pages[i]);
                pages.push_back(page);
            }
            all.push_back(pages);
        }
        j["sequences"] = all;
    } else {
        j["deepest_page"] = result.deepest_page;
    }
    return dump(j);
}

std::string determinant_json(long long det, long long goeritz, long long jones_eval) {
    json j;
    j["determinant"] = det;
    j["goeritz"] = goeritz;
    j["jones_eval"] = jones_eval;
    return dump(j);
}

}  // namespace khpages
