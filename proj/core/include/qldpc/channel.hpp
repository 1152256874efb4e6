#pragma once

#include <array>
#include <optional>
#include <string_view>
#include <vector>

#include "qldpc/bitvec.hpp"
#include "qldpc/gf4.hpp"
#include "qldpc/rng.hpp"
#include "qldpc/stabilizer_code.hpp"

namespace qldpc {

enum class ChannelKind { Depolarizing, XZ };

const char* to_string(ChannelKind kind);
std::optional<ChannelKind> parse_channel_kind(std::string_view name);

// Independent single-qubit Pauli channel (p_I, p_X, p_Y, p_Z).
struct PauliChannel {
    double pi, px, py, pz;

    PauliChannel(double pi_, double px_, double py_, double pz_);

    double total_error() const { return px + py + pz; }

    // Prior 4-vector indexed by GF(4) symbol (0,1,w,W) = (I,X,Z,Y).
    std::array<double, 4> gf4_priors() const { return {pi, px, pz, py}; }
};

// p_I = 1-p, p_X = p_Y = p_Z = p/3.
PauliChannel depolarizing(double p);

// Independent X/Z components with equal marginal q = 1 - sqrt(1-p):
// p_X = p_Z = sqrt(1-p) (1-sqrt(1-p)), p_Y = (1-sqrt(1-p))^2.
PauliChannel xz_channel(double p);

PauliChannel make_channel(ChannelKind kind, double p);

// (P(ex=1), P(ez=1)) = (p_X + p_Y, p_Y + p_Z).
struct Gf2Priors {
    double px1;
    double pz1;
};
Gf2Priors gf2_priors(const PauliChannel& ch);

// One uniform draw per qubit against the cumulative 4-vector in the fixed
// order I, X, Y, Z.
PauliErrorVec sample_error(const PauliChannel& ch, std::size_t n, Rng& rng);

enum class AdjustedKind {
    ZgivenX,  // P(ez=1 | estimated ex)
    XgivenZ,  // P(ex=1 | estimated ez)
};

// Per-qubit flip probabilities for one binary component conditioned on the
// other component's estimate:
//   P(ez=1|ex=1) = pY/(pX+pY)        P(ez=1|ex=0) = pZ/(1-(pX+pY))
//   P(ex=1|ez=1) = pY/(pY+pZ)        P(ex=1|ez=0) = pX/(1-(pY+pZ))
std::vector<double> adjusted_priors(const PauliChannel& ch, const BitVec& other_estimate,
                                    AdjustedKind which);

}  // namespace qldpc
