#include "qldpc/gf4_matrix.hpp"

#include <algorithm>
#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>

namespace qldpc {

GF4Matrix GF4Matrix::from_xz(const BinaryMatrix& hx, const BinaryMatrix& hz) {
    if (hx.rows() != hz.rows() || hx.cols() != hz.cols())
        throw std::invalid_argument("GF4Matrix::from_xz: shape mismatch");
    GF4Matrix m(hx.rows(), hx.cols());
    for (std::size_t r = 0; r < hx.rows(); ++r) {
        auto sx = hx.row_support(r);
        auto sz = hz.row_support(r);
        std::size_t i = 0, j = 0;
        while (i < sx.size() || j < sz.size()) {
            std::size_t cx = i < sx.size() ? sx[i] : SIZE_MAX;
            std::size_t cz = j < sz.size() ? sz[j] : SIZE_MAX;
            if (cx == cz) {
                m.add_entry(r, cx, gf4_from_bits(1, 1));
                ++i, ++j;
            } else if (cx < cz) {
                m.add_entry(r, cx, gf4_from_bits(1, 0));
                ++i;
            } else {
                m.add_entry(r, cz, gf4_from_bits(0, 1));
                ++j;
            }
        }
    }
    return m;
}

void GF4Matrix::add_entry(std::size_t r, std::size_t c, GF4 v) {
    if (r >= rows_ || c >= cols_) throw std::invalid_argument("GF4Matrix::add_entry: out of bounds");
    if (v == 0) throw std::invalid_argument("GF4Matrix::add_entry: zero coefficient");
    entries_.push_back({static_cast<std::uint32_t>(r), static_cast<std::uint32_t>(c), v});
}

GF4 GF4Matrix::get(std::size_t r, std::size_t c) const {
    for (const auto& e : entries_)
        if (e.row == r && e.col == c) return e.value;
    return 0;
}

BitVec GF4Matrix::trace_syndrome(const std::vector<GF4>& e) const {
    if (e.size() != cols_) throw std::invalid_argument("trace_syndrome: length mismatch");
    std::vector<GF4> acc(rows_, 0);
    for (const auto& entry : entries_)
        acc[entry.row] = gf4_add(acc[entry.row], gf4_mul(entry.value, gf4_conj(e[entry.col])));
    BitVec z(rows_);
    for (std::size_t r = 0; r < rows_; ++r)
        if (gf4_trace(acc[r])) z.set(r);
    return z;
}

BinaryMatrix GF4Matrix::incidence() const {
    BinaryMatrix m(rows_, cols_);
    for (const auto& e : entries_) m.set(e.row, e.col);
    return m;
}

namespace {
char symbol_char(GF4 v) {
    switch (v) {
        case gf4_one: return '1';
        case gf4_omega: return 'w';
        case gf4_omega_bar: return 'W';
        default: throw std::logic_error("symbol_char: zero");
    }
}

GF4 parse_symbol(char c) {
    switch (c) {
        case '1': return gf4_one;
        case 'w': return gf4_omega;
        case 'W': return gf4_omega_bar;
        default: throw std::runtime_error("gf4 matrix text: bad symbol");
    }
}
}  // namespace

void GF4Matrix::write_text(std::ostream& os) const {
    os << rows_ << ' ' << cols_ << '\n';
    std::vector<Entry> sorted(entries_);
    std::sort(sorted.begin(), sorted.end(), [](const Entry& a, const Entry& b) {
        return a.row != b.row ? a.row < b.row : a.col < b.col;
    });
    std::size_t at = 0;
    for (std::size_t r = 0; r < rows_; ++r) {
        bool first = true;
        while (at < sorted.size() && sorted[at].row == r) {
            if (!first) os << ' ';
            os << sorted[at].col << ':' << symbol_char(sorted[at].value);
            first = false;
            ++at;
        }
        os << '\n';
    }
}

GF4Matrix GF4Matrix::read_text(std::istream& is) {
    std::size_t rows = 0, cols = 0;
    if (!(is >> rows >> cols)) throw std::runtime_error("gf4 matrix text: missing header");
    is.ignore();
    GF4Matrix m(rows, cols);
    std::string line;
    for (std::size_t r = 0; r < rows; ++r) {
        if (!std::getline(is, line)) throw std::runtime_error("gf4 matrix text: truncated rows");
        std::istringstream ls(line);
        std::string tok;
        while (ls >> tok) {
            const auto sep = tok.find(':');
            if (sep == std::string::npos || sep + 2 != tok.size())
                throw std::runtime_error("gf4 matrix text: bad token");
            const std::size_t c = std::stoull(tok.substr(0, sep));
            if (c >= cols) throw std::runtime_error("gf4 matrix text: column out of range");
            m.add_entry(r, c, parse_symbol(tok[sep + 1]));
        }
    }
    return m;
}

std::string GF4Matrix::to_text() const {
    std::ostringstream os;
    write_text(os);
    return os.str();
}

std::uint8_t symplectic_inner_product(const BitVec& a, const BitVec& b) {
    if (a.size() != b.size()) throw std::invalid_argument("symplectic_inner_product: length mismatch");
    if (a.size() % 2 != 0) throw std::invalid_argument("symplectic_inner_product: odd length");
    const std::size_t n = a.size() / 2;
    std::uint8_t acc = 0;
    for (std::size_t i = 0; i < n; ++i) {
        acc ^= static_cast<std::uint8_t>(a.get(i) & b.get(n + i));
        acc ^= static_cast<std::uint8_t>(b.get(i) & a.get(n + i));
    }
    return acc;
}

std::vector<GF4> gf4_from_symplectic(const BitVec& a) {
    if (a.size() % 2 != 0) throw std::invalid_argument("gf4_from_symplectic: odd length");
    const std::size_t n = a.size() / 2;
    std::vector<GF4> out(n);
    for (std::size_t i = 0; i < n; ++i) out[i] = gf4_from_bits(a.get(i), a.get(n + i));
    return out;
}

}  // namespace qldpc
