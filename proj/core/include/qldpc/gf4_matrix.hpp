#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "qldpc/binary_matrix.hpp"
#include "qldpc/bitvec.hpp"
#include "qldpc/gf4.hpp"

namespace qldpc {

// Sparse GF(4) matrix in row-major coordinate form; all stored coefficients
// are nonzero.
class GF4Matrix {
  public:
    struct Entry {
        std::uint32_t row;
        std::uint32_t col;
        GF4 value;
    };

    GF4Matrix() = default;
    GF4Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols) {}

    // H = HX + w * HZ entrywise.
    static GF4Matrix from_xz(const BinaryMatrix& hx, const BinaryMatrix& hz);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    const std::vector<Entry>& entries() const { return entries_; }

    void add_entry(std::size_t r, std::size_t c, GF4 v);
    GF4 get(std::size_t r, std::size_t c) const;

    // z_i = tr(sum_j H_ij * conj(e_j))
    BitVec trace_syndrome(const std::vector<GF4>& e) const;

    // Incidence pattern of nonzero entries as a binary matrix.
    BinaryMatrix incidence() const;
    std::uint64_t count_4cycles() const { return incidence().count_4cycles(); }

    // Text format: "rows cols" then per row "col:sym" tokens, sym in {1,w,W}.
    void write_text(std::ostream& os) const;
    static GF4Matrix read_text(std::istream& is);
    std::string to_text() const;

  private:
    std::size_t rows_ = 0, cols_ = 0;
    std::vector<Entry> entries_;  // sorted by (row, col)
};

// Symplectic inner product of two length-2n binary vectors a = (u|v),
// b = (u'|v'): u.v' + u'.v over GF(2). Zero iff the represented Pauli
// operators commute.
std::uint8_t symplectic_inner_product(const BitVec& a, const BitVec& b);

// The GF(2)^2n -> GF(4)^n representation map: (u|v) -> u + w*v.
std::vector<GF4> gf4_from_symplectic(const BitVec& a);

}  // namespace qldpc
