#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "qldpc/binary_matrix.hpp"
#include "qldpc/bitvec.hpp"
#include "qldpc/gf4_matrix.hpp"

namespace qldpc {

// Pauli error on n qubits, stored as the binary symplectic pair
// E ~ X^ex Z^ez. Equivalently a GF(4) vector through the bit-pair encoding.
struct PauliErrorVec {
    BitVec ex;
    BitVec ez;

    PauliErrorVec() = default;
    explicit PauliErrorVec(std::size_t n) : ex(n), ez(n) {}

    std::size_t n() const { return ex.size(); }

    GF4 symbol(std::size_t i) const { return gf4_from_bits(ex.get(i), ez.get(i)); }
    void set_symbol(std::size_t i, GF4 s) {
        ex.assign(i, gf4_x_bit(s));
        ez.assign(i, gf4_z_bit(s));
    }

    std::vector<GF4> to_gf4() const {
        std::vector<GF4> v(n());
        for (std::size_t i = 0; i < n(); ++i) v[i] = symbol(i);
        return v;
    }
    static PauliErrorVec from_gf4(const std::vector<GF4>& v) {
        PauliErrorVec e(v.size());
        for (std::size_t i = 0; i < v.size(); ++i) e.set_symbol(i, v[i]);
        return e;
    }

    // (ex | ez) as a single length-2n vector.
    BitVec symplectic() const {
        BitVec v(2 * n());
        for (std::size_t i = 0; i < n(); ++i) {
            if (ex.get(i)) v.set(i);
            if (ez.get(i)) v.set(n() + i);
        }
        return v;
    }

    // Number of qubits acted on nontrivially.
    std::size_t weight() const {
        std::size_t w = 0;
        for (std::size_t i = 0; i < ex.words().size(); ++i)
            w += std::popcount(ex.words()[i] | ez.words()[i]);
        return w;
    }

    bool operator==(const PauliErrorVec& o) const { return ex == o.ex && ez == o.ez; }
};

using Syndrome = BitVec;

enum class Outcome { Success, Detected, Undetected };

const char* to_string(Outcome o);

// Stabilizer code held in binary symplectic form (hx | hz), one generator per
// row, with the GF(4) form and CSS structure derived at construction. All
// derived data is immutable afterwards, so codes are safe to share across
// trial workers.
class StabilizerCode {
  public:
    StabilizerCode(BinaryMatrix hx, BinaryMatrix hz, std::string kind = "custom",
                   std::uint64_t seed = 0);

    std::size_t n() const { return n_; }
    std::size_t m() const { return hx_.rows(); }
    std::size_t k() const { return k_; }

    const BinaryMatrix& hx() const { return hx_; }
    const BinaryMatrix& hz() const { return hz_; }
    const GF4Matrix& gf4() const { return gf4_; }

    bool is_css() const { return is_css_; }
    bool is_dual_containing() const { return is_dual_containing_; }

    // For CSS codes: the pure-X block ~HX (rows whose hz part is zero) and
    // pure-Z block ~HZ. Generator ordering is X block first, then Z block.
    const BinaryMatrix& css_hx() const;
    const BinaryMatrix& css_hz() const;
    const std::vector<std::size_t>& x_rows() const { return x_rows_; }
    const std::vector<std::size_t>& z_rows() const { return z_rows_; }

    // True iff all generators commute and derived fields are consistent.
    // On failure the diagnostic names the first violating row pair.
    bool validate(std::string* diagnostic = nullptr) const;

    // z_i = row_i(hx).ez + row_i(hz).ex over GF(2)  (z = H P e)
    Syndrome binary_syndrome(const PauliErrorVec& e) const;
    // z = tr(H conj(e)) in the GF(4) representation
    Syndrome gf4_syndrome(const std::vector<GF4>& e) const;

    Outcome classify_outcome(const PauliErrorVec& e, const PauliErrorVec& estimate) const;

    // True iff v commutes with every generator but lies outside the
    // generator row space; weight(v) then upper-bounds the distance.
    bool verify_logical(const PauliErrorVec& v) const;

    const std::string& kind() const { return kind_; }
    std::uint64_t seed() const { return seed_; }

    // Header line "n m kind seed" followed by the hx and hz text blocks.
    // Lines starting with '#' before the header are skipped on read.
    void write_text(std::ostream& os) const;
    static StabilizerCode read_text(std::istream& is);

  private:
    std::size_t n_;
    BinaryMatrix hx_, hz_;
    GF4Matrix gf4_;
    std::size_t k_ = 0;
    bool is_css_ = false;
    bool is_dual_containing_ = false;
    std::vector<std::size_t> x_rows_, z_rows_;
    std::optional<BinaryMatrix> css_hx_, css_hz_;
    RowSpace generator_space_;
    std::string kind_;
    std::uint64_t seed_;
};

}  // namespace qldpc
