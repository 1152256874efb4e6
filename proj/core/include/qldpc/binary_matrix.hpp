#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "qldpc/bitvec.hpp"

namespace qldpc {

// Dense bit-packed GF(2) matrix. Rows are contiguous word runs so that row
// reduction and syndrome products run at word speed; sparse index views are
// produced on demand for factor-graph construction.
class BinaryMatrix {
  public:
    BinaryMatrix() = default;
    BinaryMatrix(std::size_t rows, std::size_t cols);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    bool get(std::size_t r, std::size_t c) const;
    void set(std::size_t r, std::size_t c, bool v = true);

    static BinaryMatrix identity(std::size_t n);
    // Row i is first_row cyclically shifted right by i.
    static BinaryMatrix circulant(const BitVec& first_row);
    static BinaryMatrix from_rows(const std::vector<BitVec>& rows, std::size_t cols);

    BitVec row(std::size_t r) const;
    void set_row(std::size_t r, const BitVec& v);
    void xor_row(std::size_t r, const BitVec& v);

    BinaryMatrix transposed() const;
    BinaryMatrix concat_cols(const BinaryMatrix& right) const;  // [A | B]
    BinaryMatrix stack_rows(const BinaryMatrix& below) const;   // [A ; B]
    BinaryMatrix submatrix_rows(const std::vector<std::size_t>& keep) const;

    friend BinaryMatrix operator*(const BinaryMatrix& a, const BinaryMatrix& b);
    friend BinaryMatrix operator+(const BinaryMatrix& a, const BinaryMatrix& b);
    bool operator==(const BinaryMatrix& o) const;

    bool is_zero() const;
    BitVec mul_vec(const BitVec& v) const;  // A * v with v of length cols()

    std::size_t row_weight(std::size_t r) const;
    std::vector<std::size_t> column_weights() const;
    std::vector<std::size_t> row_support(std::size_t r) const;

    std::size_t rank() const;

    // Number of unordered row/column pairs with all four incidences present,
    // i.e. length-4 cycles of the bipartite adjacency graph.
    std::uint64_t count_4cycles() const;

    // Text format: "rows cols" then one line per row listing nonzero column
    // indices.
    void write_text(std::ostream& os) const;
    static BinaryMatrix read_text(std::istream& is);
    std::string to_text() const;

  private:
    std::size_t rows_ = 0, cols_ = 0, wpr_ = 0;
    std::vector<std::uint64_t> data_;

    friend class RowSpace;
    const std::uint64_t* row_ptr(std::size_t r) const { return data_.data() + r * wpr_; }
    std::uint64_t* row_ptr(std::size_t r) { return data_.data() + r * wpr_; }
};

// Reduced row-echelon basis of a matrix's row space, supporting O(rank)
// word-parallel membership tests. Built once, queried per decoded trial.
class RowSpace {
  public:
    RowSpace() = default;
    explicit RowSpace(const BinaryMatrix& m);

    std::size_t rank() const { return pivots_.size(); }
    std::size_t dim() const { return cols_; }
    bool contains(const BitVec& v) const;

  private:
    std::size_t cols_ = 0;
    std::vector<std::size_t> pivots_;
    std::vector<BitVec> basis_;  // in reduced echelon form, pivot order
};

inline std::size_t binary_rank(const BinaryMatrix& m) { return m.rank(); }

inline bool row_space_contains(const BinaryMatrix& m, const BitVec& v) {
    return RowSpace(m).contains(v);
}

}  // namespace qldpc
