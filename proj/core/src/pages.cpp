#include "khpages/pages.hpp"

#include <algorithm>
#include <random>

#include "khpages/errors.hpp"

namespace khpages {

namespace {

std::vector<int> symdiff(const std::vector<int>& a, const std::vector<int>& b) {
    std::vector<int> out;
    out.reserve(a.size() + b.size());
    std::set_symmetric_difference(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return out;
}

void sorted_erase(std::vector<int>& v, int x) {
    auto it = std::lower_bound(v.begin(), v.end(), x);
    if (it != v.end() && *it == x) v.erase(it);
}

void sorted_toggle(std::vector<int>& v, int x) {
    auto it = std::lower_bound(v.begin(), v.end(), x);
    if (it != v.end() && *it == x)
        v.erase(it);
    else
        v.insert(it, x);
}

/// In-place staged Gaussian cancellation with optional cycle tracking.
class Reducer {
public:
    Reducer(const GradedComplex& c, std::optional<uint32_t> shuffle_seed)
        : f_(c.f), aux_(c.aux), out_(c.d), in_(c.size()), alive_(c.size(), 1), seed_(shuffle_seed) {
        for (int i = 0; i < c.size(); ++i)
            for (int j : out_[i]) in_[j].push_back(i);
        for (auto& col : in_) std::sort(col.begin(), col.end());
    }

    void set_chain(std::vector<int> chain) {
        chain_ = std::move(chain);
        tracking_ = true;
    }

    /// Cancels every component with f-shift == stage-1 (new same-shift
    /// components created along the way included). Returns when none remain.
    void run_stage(int stage) {
        const int shift = stage - 1;
        if (seed_) {
            run_stage_shuffled(shift);
            return;
        }
        bool changed = true;
        while (changed) {
            changed = false;
            for (int k = 0; k < static_cast<int>(out_.size()); ++k) {
                if (!alive_[k]) continue;
                int l = find_target(k, shift);
                if (l >= 0) {
                    cancel(k, l);
                    changed = true;
                }
            }
        }
    }

    Page snapshot(int k) const {
        Page page;
        page.k = k;
        bool any = false;
        for (int i = 0; i < static_cast<int>(out_.size()); ++i) {
            if (!alive_[i]) continue;
            page.ranks[{f_[i], aux_[i]}]++;
            for (int j : out_[i]) {
                any = true;
                if (f_[j] - f_[i] == k) page.differential.emplace_back(i, j);
            }
        }
        page.is_final = !any;
        return page;
    }

    std::vector<int> chain_at(int level) const {
        std::vector<int> rep;
        for (int i : chain_)
            if (f_[i] == level) rep.push_back(i);
        return rep;
    }

private:
    int find_target(int k, int shift) const {
        for (int l : out_[k])
            if (l != k && f_[l] - f_[k] == shift) return l;
        return -1;
    }

    void run_stage_shuffled(int shift) {
        std::mt19937 rng(*seed_);
        while (true) {
            std::vector<std::pair<int, int>> candidates;
            for (int k = 0; k < static_cast<int>(out_.size()); ++k) {
                if (!alive_[k]) continue;
                for (int l : out_[k])
                    if (l != k && f_[l] - f_[k] == shift) candidates.emplace_back(k, l);
            }
            if (candidates.empty()) return;
            auto [k, l] = candidates[std::uniform_int_distribution<size_t>(0, candidates.size() - 1)(rng)];
            cancel(k, l);
        }
    }

    void cancel(int k, int l) {
        const std::vector<int> row_k = out_[k];
        const std::vector<int> col_l = in_[l];

        if (tracking_) {
            // Projection: x_k -> 0, x_l -> d(x_k) restricted to survivors.
            if (std::binary_search(chain_.begin(), chain_.end(), l)) chain_ = symdiff(chain_, row_k);
            sorted_erase(chain_, k);
            sorted_erase(chain_, l);
        }

        for (int i : col_l) {
            if (i == k || i == l || !alive_[i]) continue;
            // d'(x_i) = d(x_i) + d(x_k); the l entries cancel since both rows hold l.
            for (int j : row_k) {
                sorted_toggle(out_[i], j);
                sorted_toggle(in_[j], i);
            }
        }

        for (int j : out_[k]) sorted_erase(in_[j], k);
        for (int i : in_[k]) sorted_erase(out_[i], k);
        for (int j : out_[l]) sorted_erase(in_[j], l);
        for (int i : in_[l]) sorted_erase(out_[i], l);
        out_[k].clear();
        in_[k].clear();
        out_[l].clear();
        in_[l].clear();
        alive_[k] = 0;
        alive_[l] = 0;
    }

    const std::vector<int>& f_;
    const std::vector<int>& aux_;
    std::vector<std::vector<int>> out_, in_;
    std::vector<char> alive_;
    std::vector<int> chain_;
    bool tracking_ = false;
    std::optional<uint32_t> seed_;
};

}  // namespace

std::vector<Page> compute_pages(const GradedComplex& c, int max_page) {
    return compute_pages(c, PageRunOptions{.max_page = max_page, .shuffle_seed = std::nullopt});
}

std::vector<Page> compute_pages(const GradedComplex& c, const PageRunOptions& options) {
    c.validate();
    if (!c.is_filtered()) throw DomainError("compute_pages: differential must not lower f");
    Reducer reducer(c, options.shuffle_seed);
    std::vector<Page> pages;
    for (int k = 1; k <= options.max_page; ++k) {
        reducer.run_stage(k);
        pages.push_back(reducer.snapshot(k));
        if (pages.back().is_final) break;
    }
    return pages;
}

std::vector<GradedRanks> oracle_pages(const GradedComplex& c, int max_page) {
    c.validate();
    if (!c.is_filtered()) throw DomainError("oracle_pages: differential must not lower f");
    for (int i = 0; i < c.size(); ++i)
        for (int j : c.d[i])
            if (c.aux[j] != c.aux[i])
                throw DomainError("oracle_pages: differential must preserve the auxiliary grading");

    const int n = c.size();
    std::vector<GradedRanks> result(static_cast<size_t>(max_page));
    if (n == 0) return result;

    // The complex is block-diagonal over aux; run the subquotient computation
    // one sector at a time.
    std::map<int, std::vector<int>> sectors;
    for (int i = 0; i < n; ++i) sectors[c.aux[i]].push_back(i);

    for (auto& [aux_value, gens] : sectors) {
        const int m = static_cast<int>(gens.size());
        std::vector<int> local_f(static_cast<size_t>(m));
        std::map<int, int> local_of_global;
        for (int t = 0; t < m; ++t) {
            local_f[t] = c.f[gens[t]];
            local_of_global[gens[t]] = t;
        }
        // Dense rows of the sector differential.
        BitMatrix dmat(m, m);
        for (int t = 0; t < m; ++t)
            for (int j : c.d[gens[t]]) dmat.set(t, local_of_global.at(j));

        int f_min = *std::min_element(local_f.begin(), local_f.end());
        int f_max = *std::max_element(local_f.begin(), local_f.end());

        // Z^k_p = { v supported on {f >= p} : (Dv)_j = 0 for all j with f_j < p+k }.
        auto cycle_space = [&](int k, int p) {
            std::vector<int> cols, rows;
            for (int t = 0; t < m; ++t) {
                if (local_f[t] >= p) cols.push_back(t);
                if (local_f[t] < p + k) rows.push_back(t);
            }
            BitMatrix constraint(static_cast<int>(rows.size()), static_cast<int>(cols.size()));
            for (size_t ci = 0; ci < cols.size(); ++ci) {
                for (size_t rj = 0; rj < rows.size(); ++rj) {
                    if (dmat.get(cols[ci], rows[rj])) constraint.set(static_cast<int>(rj), static_cast<int>(ci));
                }
            }
            std::vector<std::vector<int>> basis;  // vectors in sector-local indices
            for (const auto& vec : constraint.kernel_basis()) {
                std::vector<int> expanded;
                expanded.reserve(vec.size());
                for (int idx : vec) expanded.push_back(cols[idx]);
                std::sort(expanded.begin(), expanded.end());
                basis.push_back(std::move(expanded));
            }
            return basis;
        };
        auto apply_d = [&](const std::vector<int>& v) {
            std::vector<int> acc;
            for (int t : v) {
                std::vector<int> row;
                for (int j = 0; j < m; ++j)
                    if (dmat.get(t, j)) row.push_back(j);
                std::vector<int> merged;
                std::set_symmetric_difference(acc.begin(), acc.end(), row.begin(), row.end(),
                                              std::back_inserter(merged));
                acc = std::move(merged);
            }
            return acc;
        };

        for (int k = 1; k <= max_page; ++k) {
            for (int p = f_min; p <= f_max; ++p) {
                auto z_kp = cycle_space(k, p);
                if (z_kp.empty()) continue;
                const int z_dim = static_cast<int>(z_kp.size());
                // dim of D(Z^{k-1}_{p-k+1}) + Z^{k-1}_{p+1}; both are subspaces
                // of Z^k_p, so the quotient rank is the dimension difference.
                // Z^0_p is all of F_p for a filtered complex.
                RowSpace span(m);
                int denom = 0;
                if (k == 1) {
                    for (int t = 0; t < m; ++t)
                        if (local_f[t] >= p && span.insert(apply_d({t}))) ++denom;
                } else {
                    for (const auto& v : cycle_space(k - 1, p - k + 1))
                        if (span.insert(apply_d(v))) ++denom;
                }
                for (const auto& v : cycle_space(std::max(k - 1, 0), p + 1))
                    if (span.insert(v)) ++denom;
                int rank = z_dim - denom;
                if (rank > 0) result[static_cast<size_t>(k - 1)][{p, aux_value}] += rank;
            }
        }
    }
    return result;
}

std::vector<CycleFate> track_cycle(const GradedComplex& c, const std::vector<int>& cycle, int max_page) {
    c.validate();
    if (!c.is_filtered()) throw DomainError("track_cycle: differential must not lower f");
    std::vector<int> chain = cycle;
    std::sort(chain.begin(), chain.end());
    chain.erase(std::unique(chain.begin(), chain.end()), chain.end());
    if (chain.empty()) throw DomainError("track_cycle: empty chain");
    for (int i : chain)
        if (i < 0 || i >= c.size()) throw DomainError("track_cycle: chain index out of range");
    const int level = c.f[chain.front()];
    for (int i : chain)
        if (c.f[i] != level) throw DomainError("track_cycle: chain is not homogeneous in f");
    {
        std::vector<int> image;
        for (int i : chain) image = symdiff(image, c.d[i]);
        if (!image.empty()) throw DomainError("track_cycle: chain is not a cycle");
    }

    Reducer reducer(c, std::nullopt);
    reducer.set_chain(chain);
    std::vector<CycleFate> fates;
    for (int k = 1; k <= max_page; ++k) {
        reducer.run_stage(k);
        CycleFate fate;
        fate.page = k;
        fate.representative = reducer.chain_at(level);
        fate.zero = fate.representative.empty();
        fates.push_back(std::move(fate));
        if (reducer.snapshot(k).is_final) break;
    }
    return fates;
}

}  // namespace khpages
