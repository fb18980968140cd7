#pragma once

#include <cstdint>
#include <utility>
#include <vector>

namespace khpages {

/// Dense GF(2) matrix with 64-bit packed rows. Interpreted as a linear
/// system: kernel vectors x satisfy M x = 0 with x indexed by columns.
class BitMatrix {
public:
    BitMatrix() = default;
    BitMatrix(int rows, int cols);

    int rows() const { return rows_; }
    int cols() const { return cols_; }

    void set(int r, int c, bool value = true);
    bool get(int r, int c) const;
    void xor_row_into(int src, int dst);  // row dst ^= row src

    /// Rank by Gaussian elimination (operates on a copy).
    int rank() const;

    /// Basis of {x : M x = 0}, each vector as a sorted column-index support list.
    std::vector<std::vector<int>> kernel_basis() const;

    BitMatrix multiplied_by(const BitMatrix& rhs) const;  // this * rhs

private:
    int rows_ = 0, cols_ = 0, stride_ = 0;
    std::vector<uint64_t> bits_;
};

/// Incremental row-echelon accumulator over GF(2); tracks span dimension.
class RowSpace {
public:
    explicit RowSpace(int width);

    /// Insert a vector (sorted support). Returns true if the dimension grew.
    bool insert(const std::vector<int>& support);
    bool insert_packed(std::vector<uint64_t> row);
    bool contains(const std::vector<int>& support) const;

    int dim() const { return static_cast<int>(rows_.size()); }
    int width() const { return width_; }

private:
    std::vector<uint64_t> pack(const std::vector<int>& support) const;
    // Reduces row against the stored echelon rows; returns pivot or -1.
    int reduce(std::vector<uint64_t>& row) const;

    int width_ = 0, stride_ = 0;
    std::vector<std::vector<uint64_t>> rows_;
    std::vector<int> pivots_;
};

/// Sparse GF(2) matrix held as a sorted duplicate-free set of (row, col)
/// positions. Accumulation is mod 2: push entries freely, then normalize().
struct SparseMatrixF2 {
    int rows = 0;
    int cols = 0;
    std::vector<std::pair<int, int>> entries;

    SparseMatrixF2() = default;
    SparseMatrixF2(int rows_, int cols_) : rows(rows_), cols(cols_) {}

    void push(int r, int c) { entries.emplace_back(r, c); }
    void normalize();          // sort, cancel duplicate pairs mod 2
    bool is_normalized() const;
    void validate() const;     // bounds + set semantics; throws DomainError

    /// Rank over GF(2) by Gaussian elimination.
    int rank() const;
};

}  // namespace khpages
