#include "qldpc/channel.hpp"

#include <cmath>
#include <stdexcept>

namespace qldpc {

const char* to_string(ChannelKind kind) {
    return kind == ChannelKind::Depolarizing ? "depolarizing" : "xz";
}

std::optional<ChannelKind> parse_channel_kind(std::string_view name) {
    if (name == "depolarizing") return ChannelKind::Depolarizing;
    if (name == "xz") return ChannelKind::XZ;
    return std::nullopt;
}

PauliChannel make_channel(ChannelKind kind, double p) {
    return kind == ChannelKind::Depolarizing ? depolarizing(p) : xz_channel(p);
}

PauliChannel::PauliChannel(double pi_, double px_, double py_, double pz_)
    : pi(pi_), px(px_), py(py_), pz(pz_) {
    for (double v : {pi, px, py, pz})
        if (!(v >= 0.0 && v <= 1.0)) throw std::invalid_argument("PauliChannel: component out of [0,1]");
    if (std::abs(pi + px + py + pz - 1.0) > 1e-12)
        throw std::invalid_argument("PauliChannel: components must sum to 1");
}

PauliChannel depolarizing(double p) {
    if (!(p >= 0.0 && p <= 1.0)) throw std::invalid_argument("depolarizing: p out of range");
    return PauliChannel(1.0 - p, p / 3.0, p / 3.0, p / 3.0);
}

PauliChannel xz_channel(double p) {
    if (!(p >= 0.0 && p <= 1.0)) throw std::invalid_argument("xz_channel: p out of range");
    const double s = std::sqrt(1.0 - p);
    const double q = 1.0 - s;
    return PauliChannel(s * s, s * q, q * q, s * q);
}

Gf2Priors gf2_priors(const PauliChannel& ch) { return {ch.px + ch.py, ch.py + ch.pz}; }

PauliErrorVec sample_error(const PauliChannel& ch, std::size_t n, Rng& rng) {
    PauliErrorVec e(n);
    const double c1 = ch.pi;
    const double c2 = c1 + ch.px;
    const double c3 = c2 + ch.py;
    for (std::size_t i = 0; i < n; ++i) {
        const double u = rng.next_double();
        if (u < c1) continue;
        if (u < c2)
            e.ex.set(i);  // X
        else if (u < c3) {
            e.ex.set(i);  // Y
            e.ez.set(i);
        } else
            e.ez.set(i);  // Z
    }
    return e;
}

std::vector<double> adjusted_priors(const PauliChannel& ch, const BitVec& other_estimate,
                                    AdjustedKind which) {
    const std::size_t n = other_estimate.size();
    std::vector<double> out(n);
    double on, off;
    if (which == AdjustedKind::ZgivenX) {
        on = ch.py / (ch.px + ch.py);
        off = ch.pz / (1.0 - (ch.px + ch.py));
    } else {
        on = ch.py / (ch.py + ch.pz);
        off = ch.px / (1.0 - (ch.py + ch.pz));
    }
    for (std::size_t i = 0; i < n; ++i) out[i] = other_estimate.get(i) ? on : off;
    return out;
}

}  // namespace qldpc
