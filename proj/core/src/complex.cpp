#include "khpages/complex.hpp"

#include <algorithm>

#include "khpages/errors.hpp"

namespace khpages {

namespace {

std::vector<int> symmetric_difference(const std::vector<int>& a, const std::vector<int>& b) {
    std::vector<int> out;
    out.reserve(a.size() + b.size());
    size_t i = 0, j = 0;
    while (i < a.size() && j < b.size()) {
        if (a[i] < b[j])
            out.push_back(a[i++]);
        else if (b[j] < a[i])
            out.push_back(b[j++]);
        else {
            ++i;
            ++j;
        }
    }
    out.insert(out.end(), a.begin() + static_cast<std::ptrdiff_t>(i), a.end());
    out.insert(out.end(), b.begin() + static_cast<std::ptrdiff_t>(j), b.end());
    return out;
}

}  // namespace

GradedComplex GradedComplex::from_matrix(std::vector<int> f, std::vector<int> aux,
                                         const SparseMatrixF2& diff) {
    GradedComplex c;
    c.f = std::move(f);
    c.aux = std::move(aux);
    if (c.aux.empty()) c.aux.assign(c.f.size(), 0);
    c.d.assign(c.f.size(), {});
    SparseMatrixF2 m = diff;
    m.normalize();
    m.validate();
    if (m.rows != c.size() || m.cols != c.size())
        throw DomainError("complex: differential must be square of generator count");
    for (auto [r, col] : m.entries) c.d[r].push_back(col);
    return c;
}

SparseMatrixF2 GradedComplex::to_matrix() const {
    SparseMatrixF2 m(size(), size());
    for (int i = 0; i < size(); ++i)
        for (int j : d[i]) m.push(i, j);
    m.normalize();
    return m;
}

bool GradedComplex::d_squared_is_zero() const {
    for (int i = 0; i < size(); ++i) {
        std::vector<int> acc;
        for (int j : d[i]) acc = symmetric_difference(acc, d[j]);
        if (!acc.empty()) return false;
    }
    return true;
}

void GradedComplex::validate() const {
    if (aux.size() != f.size() || d.size() != f.size())
        throw DomainError("complex: grading/differential sizes disagree");
    for (int i = 0; i < size(); ++i) {
        const auto& row = d[i];
        for (size_t t = 0; t < row.size(); ++t) {
            if (row[t] < 0 || row[t] >= size()) throw DomainError("complex: differential target out of range");
            if (t + 1 < row.size() && row[t] >= row[t + 1])
                throw DomainError("complex: differential rows must be sorted sets");
        }
    }
    if (!d_squared_is_zero()) throw DomainError("complex: d o d != 0");
}

bool GradedComplex::is_homogeneous(int shift) const {
    for (int i = 0; i < size(); ++i)
        for (int j : d[i])
            if (f[j] - f[i] != shift || aux[j] != aux[i]) return false;
    return true;
}

bool GradedComplex::is_filtered() const {
    for (int i = 0; i < size(); ++i)
        for (int j : d[i])
            if (f[j] < f[i]) return false;
    return true;
}

GradedRanks GradedComplex::generator_ranks() const {
    GradedRanks ranks;
    for (int i = 0; i < size(); ++i) ranks[{f[i], aux[i]}]++;
    return ranks;
}

GradedRanks homology(const GradedComplex& c) {
    c.validate();
    if (!c.is_homogeneous(1))
        throw DomainError("homology: differential must raise f by exactly 1 and preserve aux");

    // The complex splits into blocks per aux, then per f level. The rank of
    // each block map drops out of both its source and target homology.
    std::map<std::pair<int, int>, std::vector<int>> block;  // (aux, f) -> generators
    for (int i = 0; i < c.size(); ++i) block[{c.aux[i], c.f[i]}].push_back(i);

    std::map<std::pair<int, int>, int> out_rank;  // rank of d on block (aux, f)
    for (auto& [key, gens] : block) {
        auto [a, h] = key;
        auto tgt = block.find({a, h + 1});
        if (tgt == block.end()) continue;
        std::map<int, int> tgt_index;
        for (size_t t = 0; t < tgt->second.size(); ++t) tgt_index[tgt->second[t]] = static_cast<int>(t);
        BitMatrix m(static_cast<int>(gens.size()), static_cast<int>(tgt->second.size()));
        for (size_t r = 0; r < gens.size(); ++r)
            for (int j : c.d[gens[r]]) m.set(static_cast<int>(r), tgt_index.at(j));
        out_rank[key] = m.rank();
    }

    GradedRanks result;
    for (auto& [key, gens] : block) {
        auto [a, h] = key;
        int dim = static_cast<int>(gens.size());
        int r_out = out_rank.count(key) ? out_rank[key] : 0;
        auto below = out_rank.find({a, h - 1});
        int r_in = below != out_rank.end() ? below->second : 0;
        int rank = dim - r_out - r_in;
        if (rank != 0) result[{h, a}] = rank;
    }
    return result;
}

CancelPairResult cancel_pair(const GradedComplex& c, int k, int l) {
    c.validate();
    if (k < 0 || k >= c.size() || l < 0 || l >= c.size() || k == l)
        throw DomainError("cancel_pair: bad generator pair");
    if (!std::binary_search(c.d[k].begin(), c.d[k].end(), l))
        throw DomainError("cancel_pair: d(x_k, x_l) = 0, cannot cancel");

    CancelPairResult res;
    res.new_index.assign(c.size(), -1);
    for (int i = 0; i < c.size(); ++i) {
        if (i == k || i == l) continue;
        res.new_index[i] = static_cast<int>(res.old_index.size());
        res.old_index.push_back(i);
    }
    for (int j : c.d[k])
        if (j != k && j != l) res.projection_row.push_back(j);

    GradedComplex out;
    for (int i : res.old_index) {
        out.f.push_back(c.f[i]);
        out.aux.push_back(c.aux[i]);
    }
    out.d.resize(res.old_index.size());
    for (int i = 0; i < c.size(); ++i) {
        if (i == k || i == l) continue;
        std::vector<int> row = c.d[i];
        bool hits_l = std::binary_search(row.begin(), row.end(), l);
        if (hits_l) {
            res.inclusion_col.push_back(i);
            row = symmetric_difference(row, c.d[k]);
        }
        std::vector<int>& target = out.d[res.new_index[i]];
        for (int j : row) {
            if (j == k || j == l) continue;
            target.push_back(res.new_index[j]);
        }
    }
    res.complex = std::move(out);
    return res;
}

}  // namespace khpages
