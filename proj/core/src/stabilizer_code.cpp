#include "qldpc/stabilizer_code.hpp"

#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>

namespace qldpc {

const char* to_string(Outcome o) {
    switch (o) {
        case Outcome::Success: return "success";
        case Outcome::Detected: return "detected";
        case Outcome::Undetected: return "undetected";
    }
    return "?";
}

StabilizerCode::StabilizerCode(BinaryMatrix hx, BinaryMatrix hz, std::string kind,
                               std::uint64_t seed)
    : n_(hx.cols()), hx_(std::move(hx)), hz_(std::move(hz)), kind_(std::move(kind)), seed_(seed) {
    if (hx_.rows() != hz_.rows() || hx_.cols() != hz_.cols())
        throw std::invalid_argument("StabilizerCode: hx/hz shape mismatch");
    gf4_ = GF4Matrix::from_xz(hx_, hz_);

    const BinaryMatrix full = hx_.concat_cols(hz_);
    generator_space_ = RowSpace(full);
    k_ = n_ - generator_space_.rank();

    // CSS iff every generator is pure X type or pure Z type.
    is_css_ = true;
    for (std::size_t r = 0; r < m(); ++r) {
        const bool has_x = hx_.row_weight(r) > 0;
        const bool has_z = hz_.row_weight(r) > 0;
        if (has_x && has_z) {
            is_css_ = false;
            break;
        }
        (has_x ? x_rows_ : z_rows_).push_back(r);
    }
    if (!is_css_) {
        x_rows_.clear();
        z_rows_.clear();
        return;
    }
    css_hx_ = hx_.submatrix_rows(x_rows_);
    css_hz_ = hz_.submatrix_rows(z_rows_);

    // Dual containing: equal X and Z blocks in the (H;H) row layout used by
    // the supernode decoder, which pairs generator i with i + m/2.
    is_dual_containing_ = x_rows_.size() == z_rows_.size() && !x_rows_.empty() &&
                          *css_hx_ == *css_hz_;
    if (is_dual_containing_) {
        for (std::size_t i = 0; i < x_rows_.size(); ++i)
            if (x_rows_[i] != i || z_rows_[i] != x_rows_.size() + i) {
                is_dual_containing_ = false;
                break;
            }
    }
}

const BinaryMatrix& StabilizerCode::css_hx() const {
    if (!css_hx_) throw std::logic_error("css_hx: not a CSS code");
    return *css_hx_;
}

const BinaryMatrix& StabilizerCode::css_hz() const {
    if (!css_hz_) throw std::logic_error("css_hz: not a CSS code");
    return *css_hz_;
}

bool StabilizerCode::validate(std::string* diagnostic) const {
    // H_X H_Z^T + H_Z H_X^T = 0, checked pairwise to name the first offender.
    for (std::size_t r = 0; r < m(); ++r) {
        const BitVec rx = hx_.row(r), rz = hz_.row(r);
        for (std::size_t s = r; s < m(); ++s) {
            const std::uint8_t sym = rx.dot(hz_.row(s)) ^ rz.dot(hx_.row(s));
            if (sym) {
                if (diagnostic) {
                    std::ostringstream os;
                    os << "generators " << r << " and " << s << " anticommute";
                    *diagnostic = os.str();
                }
                return false;
            }
        }
    }
    if (k_ != n_ - hx_.concat_cols(hz_).rank()) {
        if (diagnostic) *diagnostic = "stored k inconsistent with rank";
        return false;
    }
    return true;
}

Syndrome StabilizerCode::binary_syndrome(const PauliErrorVec& e) const {
    if (e.n() != n_) throw std::invalid_argument("binary_syndrome: length mismatch");
    Syndrome z = hx_.mul_vec(e.ez);
    z ^= hz_.mul_vec(e.ex);
    return z;
}

Syndrome StabilizerCode::gf4_syndrome(const std::vector<GF4>& e) const {
    if (e.size() != n_) throw std::invalid_argument("gf4_syndrome: length mismatch");
    return gf4_.trace_syndrome(e);
}

Outcome StabilizerCode::classify_outcome(const PauliErrorVec& e,
                                         const PauliErrorVec& estimate) const {
    if (e.n() != n_ || estimate.n() != n_)
        throw std::invalid_argument("classify_outcome: length mismatch");
    if (binary_syndrome(estimate) != binary_syndrome(e)) return Outcome::Detected;
    PauliErrorVec residual(n_);
    residual.ex = e.ex ^ estimate.ex;
    residual.ez = e.ez ^ estimate.ez;
    return generator_space_.contains(residual.symplectic()) ? Outcome::Success
                                                            : Outcome::Undetected;
}

bool StabilizerCode::verify_logical(const PauliErrorVec& v) const {
    if (v.n() != n_) throw std::invalid_argument("verify_logical: length mismatch");
    if (!binary_syndrome(v).is_zero()) return false;
    return !generator_space_.contains(v.symplectic());
}

void StabilizerCode::write_text(std::ostream& os) const {
    os << n_ << ' ' << m() << ' ' << kind_ << ' ' << seed_ << '\n';
    hx_.write_text(os);
    hz_.write_text(os);
}

StabilizerCode StabilizerCode::read_text(std::istream& is) {
    std::string line;
    // skip provenance comments and blank lines before the header
    while (std::getline(is, line)) {
        if (!line.empty() && line[0] != '#') break;
    }
    std::istringstream header(line);
    std::size_t n = 0, m = 0;
    std::string kind;
    std::uint64_t seed = 0;
    if (!(header >> n >> m >> kind >> seed)) throw std::runtime_error("code text: bad header");
    BinaryMatrix hx = BinaryMatrix::read_text(is);
    BinaryMatrix hz = BinaryMatrix::read_text(is);
    if (hx.rows() != m || hx.cols() != n || hz.rows() != m || hz.cols() != n)
        throw std::runtime_error("code text: block shape disagrees with header");
    return StabilizerCode(std::move(hx), std::move(hz), kind, seed);
}

}  // namespace qldpc
