#include "qldpc/binary_matrix.hpp"

#include <bit>
#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>

namespace qldpc {

BinaryMatrix::BinaryMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), wpr_((cols + 63) / 64), data_(rows * wpr_, 0) {}

bool BinaryMatrix::get(std::size_t r, std::size_t c) const {
    return (row_ptr(r)[c >> 6] >> (c & 63)) & 1;
}

void BinaryMatrix::set(std::size_t r, std::size_t c, bool v) {
    if (r >= rows_ || c >= cols_) throw std::invalid_argument("BinaryMatrix::set: out of bounds");
    if (v)
        row_ptr(r)[c >> 6] |= 1ULL << (c & 63);
    else
        row_ptr(r)[c >> 6] &= ~(1ULL << (c & 63));
}

BinaryMatrix BinaryMatrix::identity(std::size_t n) {
    BinaryMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m.set(i, i);
    return m;
}

BinaryMatrix BinaryMatrix::circulant(const BitVec& first_row) {
    const std::size_t v = first_row.size();
    if (v == 0) throw std::invalid_argument("circulant: empty first row");
    BinaryMatrix m(v, v);
    const auto support = first_row.support();
    for (std::size_t r = 0; r < v; ++r)
        for (std::size_t c : support) m.set(r, (c + r) % v);
    return m;
}

BinaryMatrix BinaryMatrix::from_rows(const std::vector<BitVec>& rows, std::size_t cols) {
    BinaryMatrix m(rows.size(), cols);
    for (std::size_t r = 0; r < rows.size(); ++r) m.set_row(r, rows[r]);
    return m;
}

BitVec BinaryMatrix::row(std::size_t r) const {
    BitVec v(cols_);
    std::copy(row_ptr(r), row_ptr(r) + wpr_, v.words().begin());
    return v;
}

void BinaryMatrix::set_row(std::size_t r, const BitVec& v) {
    if (v.size() != cols_) throw std::invalid_argument("set_row: length mismatch");
    std::copy(v.words().begin(), v.words().end(), row_ptr(r));
}

void BinaryMatrix::xor_row(std::size_t r, const BitVec& v) {
    if (v.size() != cols_) throw std::invalid_argument("xor_row: length mismatch");
    auto* p = row_ptr(r);
    for (std::size_t w = 0; w < wpr_; ++w) p[w] ^= v.words()[w];
}

BinaryMatrix BinaryMatrix::transposed() const {
    BinaryMatrix t(cols_, rows_);
    for (std::size_t r = 0; r < rows_; ++r)
        for (std::size_t c : row_support(r)) t.set(c, r);
    return t;
}

BinaryMatrix BinaryMatrix::concat_cols(const BinaryMatrix& right) const {
    if (right.rows_ != rows_) throw std::invalid_argument("concat_cols: row count mismatch");
    BinaryMatrix m(rows_, cols_ + right.cols_);
    for (std::size_t r = 0; r < rows_; ++r) {
        for (std::size_t c : row_support(r)) m.set(r, c);
        for (std::size_t c : right.row_support(r)) m.set(r, cols_ + c);
    }
    return m;
}

BinaryMatrix BinaryMatrix::stack_rows(const BinaryMatrix& below) const {
    if (below.cols_ != cols_) throw std::invalid_argument("stack_rows: column count mismatch");
    BinaryMatrix m(rows_ + below.rows_, cols_);
    std::copy(data_.begin(), data_.end(), m.data_.begin());
    std::copy(below.data_.begin(), below.data_.end(), m.data_.begin() + rows_ * wpr_);
    return m;
}

BinaryMatrix BinaryMatrix::submatrix_rows(const std::vector<std::size_t>& keep) const {
    BinaryMatrix m(keep.size(), cols_);
    for (std::size_t i = 0; i < keep.size(); ++i) {
        if (keep[i] >= rows_) throw std::invalid_argument("submatrix_rows: row index out of range");
        std::copy(row_ptr(keep[i]), row_ptr(keep[i]) + wpr_, m.row_ptr(i));
    }
    return m;
}

BinaryMatrix operator*(const BinaryMatrix& a, const BinaryMatrix& b) {
    if (a.cols_ != b.rows_) throw std::invalid_argument("matrix product: dimension mismatch");
    BinaryMatrix out(a.rows_, b.cols_);
    for (std::size_t r = 0; r < a.rows_; ++r) {
        auto* acc = out.row_ptr(r);
        for (std::size_t k : a.row_support(r)) {
            const auto* brow = b.row_ptr(k);
            for (std::size_t w = 0; w < b.wpr_; ++w) acc[w] ^= brow[w];
        }
    }
    return out;
}

BinaryMatrix operator+(const BinaryMatrix& a, const BinaryMatrix& b) {
    if (a.rows_ != b.rows_ || a.cols_ != b.cols_)
        throw std::invalid_argument("matrix sum: dimension mismatch");
    BinaryMatrix out = a;
    for (std::size_t i = 0; i < out.data_.size(); ++i) out.data_[i] ^= b.data_[i];
    return out;
}

bool BinaryMatrix::operator==(const BinaryMatrix& o) const {
    return rows_ == o.rows_ && cols_ == o.cols_ && data_ == o.data_;
}

bool BinaryMatrix::is_zero() const {
    for (auto w : data_)
        if (w) return false;
    return true;
}

BitVec BinaryMatrix::mul_vec(const BitVec& v) const {
    if (v.size() != cols_) throw std::invalid_argument("mul_vec: length mismatch");
    BitVec out(rows_);
    for (std::size_t r = 0; r < rows_; ++r) {
        std::uint64_t acc = 0;
        const auto* p = row_ptr(r);
        for (std::size_t w = 0; w < wpr_; ++w) acc ^= p[w] & v.words()[w];
        if (std::popcount(acc) & 1) out.set(r);
    }
    return out;
}

std::size_t BinaryMatrix::row_weight(std::size_t r) const {
    std::size_t c = 0;
    const auto* p = row_ptr(r);
    for (std::size_t w = 0; w < wpr_; ++w) c += std::popcount(p[w]);
    return c;
}

std::vector<std::size_t> BinaryMatrix::column_weights() const {
    std::vector<std::size_t> weights(cols_, 0);
    for (std::size_t r = 0; r < rows_; ++r)
        for (std::size_t c : row_support(r)) ++weights[c];
    return weights;
}

std::vector<std::size_t> BinaryMatrix::row_support(std::size_t r) const {
    std::vector<std::size_t> idx;
    const auto* p = row_ptr(r);
    for (std::size_t w = 0; w < wpr_; ++w) {
        std::uint64_t bits = p[w];
        while (bits) {
            idx.push_back(w * 64 + std::countr_zero(bits));
            bits &= bits - 1;
        }
    }
    return idx;
}

std::size_t BinaryMatrix::rank() const {
    std::vector<std::uint64_t> work(data_);
    auto rp = [&](std::size_t r) { return work.data() + r * wpr_; };
    std::size_t rank = 0;
    for (std::size_t c = 0; c < cols_ && rank < rows_; ++c) {
        const std::size_t w = c >> 6;
        const std::uint64_t bit = 1ULL << (c & 63);
        std::size_t pivot = rows_;
        for (std::size_t r = rank; r < rows_; ++r)
            if (rp(r)[w] & bit) {
                pivot = r;
                break;
            }
        if (pivot == rows_) continue;
        if (pivot != rank)
            for (std::size_t k = 0; k < wpr_; ++k) std::swap(rp(pivot)[k], rp(rank)[k]);
        for (std::size_t r = rank + 1; r < rows_; ++r)
            if (rp(r)[w] & bit)
                for (std::size_t k = w; k < wpr_; ++k) rp(r)[k] ^= rp(rank)[k];
        ++rank;
    }
    return rank;
}

std::uint64_t BinaryMatrix::count_4cycles() const {
    std::uint64_t count = 0;
    for (std::size_t r = 0; r + 1 < rows_; ++r) {
        const auto* pr = row_ptr(r);
        for (std::size_t s = r + 1; s < rows_; ++s) {
            const auto* ps = row_ptr(s);
            std::uint64_t overlap = 0;
            for (std::size_t w = 0; w < wpr_; ++w) overlap += std::popcount(pr[w] & ps[w]);
            count += overlap * (overlap - 1) / 2;
        }
    }
    return count;
}

void BinaryMatrix::write_text(std::ostream& os) const {
    os << rows_ << ' ' << cols_ << '\n';
    for (std::size_t r = 0; r < rows_; ++r) {
        bool first = true;
        for (std::size_t c : row_support(r)) {
            if (!first) os << ' ';
            os << c;
            first = false;
        }
        os << '\n';
    }
}

BinaryMatrix BinaryMatrix::read_text(std::istream& is) {
    std::size_t rows = 0, cols = 0;
    if (!(is >> rows >> cols)) throw std::runtime_error("matrix text: missing header");
    is.ignore();  // rest of header line
    BinaryMatrix m(rows, cols);
    std::string line;
    for (std::size_t r = 0; r < rows; ++r) {
        if (!std::getline(is, line)) throw std::runtime_error("matrix text: truncated rows");
        std::istringstream ls(line);
        std::size_t c;
        while (ls >> c) {
            if (c >= cols) throw std::runtime_error("matrix text: column index out of range");
            m.set(r, c);
        }
    }
    return m;
}

std::string BinaryMatrix::to_text() const {
    std::ostringstream os;
    write_text(os);
    return os.str();
}

RowSpace::RowSpace(const BinaryMatrix& m) : cols_(m.cols()) {
    for (std::size_t r = 0; r < m.rows(); ++r) {
        BitVec v = m.row(r);
        // reduce against current basis
        for (std::size_t b = 0; b < basis_.size(); ++b)
            if (v.get(pivots_[b])) v ^= basis_[b];
        if (v.is_zero()) continue;
        const std::size_t pivot = v.support().front();
        // back-reduce existing rows so the basis stays fully reduced
        for (std::size_t b = 0; b < basis_.size(); ++b)
            if (basis_[b].get(pivot)) basis_[b] ^= v;
        std::size_t pos = 0;
        while (pos < pivots_.size() && pivots_[pos] < pivot) ++pos;
        pivots_.insert(pivots_.begin() + pos, pivot);
        basis_.insert(basis_.begin() + pos, std::move(v));
    }
}

bool RowSpace::contains(const BitVec& v) const {
    if (v.size() != cols_) throw std::invalid_argument("RowSpace::contains: length mismatch");
    BitVec w = v;
    for (std::size_t b = 0; b < basis_.size(); ++b)
        if (w.get(pivots_[b])) w ^= basis_[b];
    return w.is_zero();
}

}  // namespace qldpc
