#include "khpages/f2.hpp"

#include <algorithm>
#include <bit>

#include "khpages/errors.hpp"

namespace khpages {

namespace {
constexpr int kWordBits = 64;
int stride_for(int cols) { return (cols + kWordBits - 1) / kWordBits; }
}  // namespace

BitMatrix::BitMatrix(int rows, int cols)
    : rows_(rows), cols_(cols), stride_(stride_for(cols)), bits_(static_cast<size_t>(rows) * stride_, 0) {}

void BitMatrix::set(int r, int c, bool value) {
    uint64_t& word = bits_[static_cast<size_t>(r) * stride_ + c / kWordBits];
    uint64_t mask = uint64_t{1} << (c % kWordBits);
    if (value)
        word |= mask;
    else
        word &= ~mask;
}

bool BitMatrix::get(int r, int c) const {
    return (bits_[static_cast<size_t>(r) * stride_ + c / kWordBits] >> (c % kWordBits)) & 1;
}

void BitMatrix::xor_row_into(int src, int dst) {
    const uint64_t* s = bits_.data() + static_cast<size_t>(src) * stride_;
    uint64_t* d = bits_.data() + static_cast<size_t>(dst) * stride_;
    for (int w = 0; w < stride_; ++w) d[w] ^= s[w];
}

int BitMatrix::rank() const {
    BitMatrix m = *this;
    int rank = 0;
    for (int c = 0; c < m.cols_ && rank < m.rows_; ++c) {
        int pivot = -1;
        for (int r = rank; r < m.rows_; ++r) {
            if (m.get(r, c)) {
                pivot = r;
                break;
            }
        }
        if (pivot < 0) continue;
        if (pivot != rank) {
            for (int w = 0; w < m.stride_; ++w)
                std::swap(m.bits_[static_cast<size_t>(pivot) * m.stride_ + w],
                          m.bits_[static_cast<size_t>(rank) * m.stride_ + w]);
        }
        for (int r = 0; r < m.rows_; ++r) {
            if (r != rank && m.get(r, c)) m.xor_row_into(rank, r);
        }
        ++rank;
    }
    return rank;
}

std::vector<std::vector<int>> BitMatrix::kernel_basis() const {
    BitMatrix m = *this;
    std::vector<int> pivot_col;  // pivot column of each echelon row
    int rank = 0;
    std::vector<int> col_pivot_row(cols_, -1);
    for (int c = 0; c < m.cols_ && rank < m.rows_; ++c) {
        int pivot = -1;
        for (int r = rank; r < m.rows_; ++r) {
            if (m.get(r, c)) {
                pivot = r;
                break;
            }
        }
        if (pivot < 0) continue;
        if (pivot != rank) {
            for (int w = 0; w < m.stride_; ++w)
                std::swap(m.bits_[static_cast<size_t>(pivot) * m.stride_ + w],
                          m.bits_[static_cast<size_t>(rank) * m.stride_ + w]);
        }
        for (int r = 0; r < m.rows_; ++r) {
            if (r != rank && m.get(r, c)) m.xor_row_into(rank, r);
        }
        pivot_col.push_back(c);
        col_pivot_row[c] = rank;
        ++rank;
    }
    std::vector<std::vector<int>> basis;
    for (int c = 0; c < cols_; ++c) {
        if (col_pivot_row[c] >= 0) continue;  // pivot column
        std::vector<int> vec{c};
        for (int r = 0; r < rank; ++r) {
            if (m.get(r, c)) vec.push_back(pivot_col[r]);
        }
        std::sort(vec.begin(), vec.end());
        basis.push_back(std::move(vec));
    }
    return basis;
}

BitMatrix BitMatrix::multiplied_by(const BitMatrix& rhs) const {
    BitMatrix out(rows_, rhs.cols_);
    for (int r = 0; r < rows_; ++r) {
        uint64_t* dst = out.bits_.data() + static_cast<size_t>(r) * out.stride_;
        for (int c = 0; c < cols_; ++c) {
            if (!get(r, c)) continue;
            const uint64_t* src = rhs.bits_.data() + static_cast<size_t>(c) * rhs.stride_;
            for (int w = 0; w < rhs.stride_; ++w) dst[w] ^= src[w];
        }
    }
    return out;
}

RowSpace::RowSpace(int width) : width_(width), stride_(stride_for(width)) {}

std::vector<uint64_t> RowSpace::pack(const std::vector<int>& support) const {
    std::vector<uint64_t> row(stride_, 0);
    for (int c : support) row[c / kWordBits] ^= uint64_t{1} << (c % kWordBits);
    return row;
}

int RowSpace::reduce(std::vector<uint64_t>& row) const {
    for (size_t i = 0; i < rows_.size(); ++i) {
        int p = pivots_[i];
        if ((row[p / kWordBits] >> (p % kWordBits)) & 1) {
            for (int w = 0; w < stride_; ++w) row[w] ^= rows_[i][w];
        }
    }
    for (int w = 0; w < stride_; ++w) {
        if (row[w]) return w * kWordBits + std::countr_zero(row[w]);
    }
    return -1;
}

bool RowSpace::insert(const std::vector<int>& support) { return insert_packed(pack(support)); }

bool RowSpace::insert_packed(std::vector<uint64_t> row) {
    int pivot = reduce(row);
    if (pivot < 0) return false;
    rows_.push_back(std::move(row));
    pivots_.push_back(pivot);
    return true;
}

bool RowSpace::contains(const std::vector<int>& support) const {
    std::vector<uint64_t> row = pack(support);
    return reduce(row) < 0;
}

void SparseMatrixF2::normalize() {
    std::sort(entries.begin(), entries.end());
    std::vector<std::pair<int, int>> out;
    out.reserve(entries.size());
    for (size_t i = 0; i < entries.size();) {
        size_t j = i;
        while (j < entries.size() && entries[j] == entries[i]) ++j;
        if ((j - i) % 2) out.push_back(entries[i]);
        i = j;
    }
    entries = std::move(out);
}

bool SparseMatrixF2::is_normalized() const {
    for (size_t i = 0; i + 1 < entries.size(); ++i) {
        if (!(entries[i] < entries[i + 1])) return false;
    }
    return true;
}

void SparseMatrixF2::validate() const {
    if (!is_normalized()) throw DomainError("SparseMatrixF2: entries not a sorted set");
    for (auto [r, c] : entries) {
        if (r < 0 || r >= rows || c < 0 || c >= cols)
            throw DomainError("SparseMatrixF2: entry out of bounds");
    }
}

int SparseMatrixF2::rank() const {
    BitMatrix m(rows, cols);
    for (auto [r, c] : entries) m.set(r, c);
    return m.rank();
}

}  // namespace khpages
