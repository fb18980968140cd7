#include "khpages/pagesolver.hpp"

#include <algorithm>

#include "khpages/errors.hpp"

namespace khpages {

namespace {

int rank_at(const BigradedRanks& t, int h, int q) {
    auto it = t.find({h, q});
    return it == t.end() ? 0 : it->second;
}

int total_rank(const BigradedRanks& t) {
    int total = 0;
    for (auto [hq, r] : t) total += r;
    return total;
}

BigradedRanks pruned(BigradedRanks t) {
    for (auto it = t.begin(); it != t.end();) {
        if (it->second == 0)
            it = t.erase(it);
        else
            ++it;
    }
    return t;
}

int h_span(const BigradedRanks& t) {
    if (t.empty()) return 0;
    int lo = t.begin()->first.first, hi = lo;
    for (auto [hq, r] : t) {
        lo = std::min(lo, hq.first);
        hi = std::max(hi, hq.first);
    }
    return hi - lo;
}

/// No differential can act on this table at page k or any later page.
bool is_stable_from(const BigradedRanks& t, int k) {
    int span = h_span(t);
    for (int page = k; page <= span; ++page) {
        for (auto [hq, r] : t) {
            if (r > 0 && rank_at(t, hq.first + page, hq.second + 2 * page - 2) > 0) return false;
        }
    }
    return true;
}

struct Search {
    const SolverConstraints& constraints;
    long long pattern_count = 0;
    long long explored = 0;
    int deepest_page = 2;
    std::vector<PageSequence> sequences;         // one witness per distinct page sequence
    std::vector<std::vector<BigradedRanks>> seen;  // distinct page lists (uncapped)

    static constexpr long long kExploreCap = 1'000'000;

    void record(const std::vector<BigradedRanks>& pages, int stable_page,
                const std::vector<PageArrow>& pattern) {
        ++pattern_count;
        auto it = std::find(seen.begin(), seen.end(), pages);
        if (it != seen.end()) return;
        seen.push_back(pages);
        if (static_cast<int>(sequences.size()) < constraints.ambiguity_cap) {
            PageSequence seq;
            seq.pages = pages;
            seq.stable_page = stable_page;
            seq.pattern = pattern;
            sequences.push_back(std::move(seq));
        }
    }

    bool survivors_ok(const BigradedRanks& t) const {
        for (auto [h, q] : constraints.survivors)
            if (rank_at(t, h, q) < 1) return false;
        return true;
    }

    void run(std::vector<BigradedRanks>& pages, std::vector<PageArrow>& pattern, int k) {
        if (++explored > kExploreCap)
            throw DomainError("solve_pages: search space exceeds the exploration cap");
        deepest_page = std::max(deepest_page, k);
        const BigradedRanks& current = pages.back();

        if (is_stable_from(current, k)) {
            if (constraints.e_infinity_rank && total_rank(current) != *constraints.e_infinity_rank)
                return;
            record(pages, k, pattern);
            return;
        }

        // Candidate arrows at page k, in (h, q) order.
        std::vector<std::pair<int, int>> sources;
        for (auto [hq, r] : current) {
            if (r > 0 && rank_at(current, hq.first + k, hq.second + 2 * k - 2) > 0)
                sources.push_back(hq);
        }

        std::vector<int> choice(sources.size(), 0);
        // Odometer over arrow ranks; feasibility checked on the updated table.
        while (true) {
            BigradedRanks next = current;
            bool feasible = true;
            for (size_t i = 0; i < sources.size() && feasible; ++i) {
                if (choice[i] == 0) continue;
                auto [h, q] = sources[i];
                next[{h, q}] -= choice[i];
                next[{h + k, q + 2 * k - 2}] -= choice[i];
                if (next[{h, q}] < 0 || next[{h + k, q + 2 * k - 2}] < 0) feasible = false;
            }
            if (feasible) {
                BigradedRanks cleaned = pruned(next);
                if (survivors_ok(cleaned)) {
                    // Bookkeeping identity: each rank-r arrow at (h,q) removes
                    // (-1)^h q^(j/2) + (-1)^(h+k) q^(j/2+k-1) from V^k.
                    LaurentPoly expected = vk_polynomial(current);
                    for (size_t i = 0; i < sources.size(); ++i) {
                        if (choice[i] == 0) continue;
                        auto [h, q] = sources[i];
                        long long sign_src = h % 2 ? -1 : 1;
                        long long sign_tgt = (h + k) % 2 ? -1 : 1;
                        expected.add_term(-sign_src * choice[i], q);
                        expected.add_term(-sign_tgt * choice[i], q + 2 * k - 2);
                    }
                    if (!(expected == vk_polynomial(cleaned)))
                        throw DomainError("solve_pages: page bookkeeping identity violated");

                    size_t pattern_mark = pattern.size();
                    for (size_t i = 0; i < sources.size(); ++i) {
                        if (choice[i] > 0)
                            pattern.push_back({k, sources[i].first, sources[i].second, choice[i]});
                    }
                    pages.push_back(cleaned);
                    run(pages, pattern, k + 1);
                    pages.pop_back();
                    pattern.resize(pattern_mark);
                }
            }
            // Advance the odometer.
            size_t i = 0;
            for (; i < sources.size(); ++i) {
                auto [h, q] = sources[i];
                int bound = std::min(rank_at(current, h, q),
                                     rank_at(current, h + k, q + 2 * k - 2));
                if (choice[i] < bound) {
                    ++choice[i];
                    std::fill(choice.begin(), choice.begin() + static_cast<std::ptrdiff_t>(i), 0);
                    break;
                }
            }
            if (i == sources.size()) break;
        }
    }
};

}  // namespace

SolverResult solve_pages(const BigradedRanks& e2, const SolverConstraints& constraints) {
    if (!constraints.assume_delta_shift)
        throw DomainError("solve_pages: the (k, 2k-2) shift rule must be acknowledged");
    if (constraints.max_page < 2) throw DomainError("solve_pages: max_page must be >= 2");
    BigradedRanks start = pruned(e2);
    for (auto [hq, r] : start)
        if (r < 0) throw DomainError("solve_pages: negative rank in E^2 table");
    for (auto [h, q] : constraints.survivors) {
        if (rank_at(start, h, q) < 1)
            throw DomainError("solve_pages: survivor (" + std::to_string(h) + "," + std::to_string(q) +
                              ") is not in the support of E^2");
    }
    if (constraints.e_infinity_rank && *constraints.e_infinity_rank < 0)
        throw DomainError("solve_pages: negative E-infinity rank target");

    Search search{constraints};
    std::vector<BigradedRanks> pages{start};
    std::vector<PageArrow> pattern;
    search.run(pages, pattern, 2);

    SolverResult result;
    result.pattern_count = search.pattern_count;
    result.sequence_count = static_cast<long long>(search.seen.size());
    result.deepest_page = search.deepest_page;
    result.sequences = std::move(search.sequences);
    if (search.pattern_count == 0)
        result.status = SolverStatus::Infeasible;
    else if (search.pattern_count == 1)
        result.status = SolverStatus::Unique;
    else
        result.status = SolverStatus::Ambiguous;
    return result;
}

LaurentPoly vk_polynomial(const BigradedRanks& page) {
    LaurentPoly v;
    for (auto [hq, r] : page) {
        if (r == 0) continue;
        v.add_term((hq.first % 2 ? -1 : 1) * static_cast<long long>(r), hq.second);
    }
    return v;
}

BigradedRanks tensor_pages(const BigradedRanks& a, const BigradedRanks& b) {
    BigradedRanks out;
    for (auto [hq1, r1] : a) {
        if (r1 == 0) continue;
        for (auto [hq2, r2] : b) {
            if (r2 == 0) continue;
            out[{hq1.first + hq2.first, hq1.second + hq2.second}] += r1 * r2;
        }
    }
    return out;
}

}  // namespace khpages
