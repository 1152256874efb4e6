#pragma once

#include <array>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <vector>

namespace qldpc {

// GF(4) = {0, 1, w, W} with W = w^2 = conj(w). Elements are stored as a bit
// pair (x, z) packed into value = x | z<<1:
//
//   0 <-> (0,0) <-> I,  1 <-> (1,0) <-> X,  w <-> (0,1) <-> Z,  W <-> (1,1) <-> Y
//
// Addition is then bitwise XOR and the Pauli isomorphism is the identity on
// bit pairs: a Pauli X^ex Z^ez maps to the symbol ex + w*ez.
using GF4 = std::uint8_t;

inline constexpr GF4 gf4_zero = 0;
inline constexpr GF4 gf4_one = 1;
inline constexpr GF4 gf4_omega = 2;
inline constexpr GF4 gf4_omega_bar = 3;

inline constexpr GF4 gf4_add(GF4 a, GF4 b) { return a ^ b; }

inline constexpr GF4 gf4_mul(GF4 a, GF4 b) {
    // 4x4 lookup of the nonzero cyclic group {1, w, W}; row-major in (a, b).
    constexpr std::uint8_t table[16] = {
        0, 0, 0, 0,   // 0 * x
        0, 1, 2, 3,   // 1 * x
        0, 2, 3, 1,   // w * x  (w*w = W, w*W = 1)
        0, 3, 1, 2,   // W * x  (W*w = 1, W*W = w)
    };
    return table[(a << 2) | b];
}

// Conjugation x -> x^2; swaps w and W, fixes 0 and 1. Equals the
// multiplicative inverse on nonzero elements.
inline constexpr GF4 gf4_conj(GF4 a) {
    constexpr std::uint8_t table[4] = {0, 1, 3, 2};
    return table[a];
}

// tr(x) = x + conj(x): 0 on {0,1}, 1 on {w,W}. With the bit-pair encoding
// this is just the z bit.
inline constexpr std::uint8_t gf4_trace(GF4 a) { return (a >> 1) & 1; }

inline constexpr std::uint8_t gf4_x_bit(GF4 a) { return a & 1; }
inline constexpr std::uint8_t gf4_z_bit(GF4 a) { return (a >> 1) & 1; }
inline constexpr GF4 gf4_from_bits(std::uint8_t x, std::uint8_t z) {
    return static_cast<GF4>((x & 1) | ((z & 1) << 1));
}

// Pauli symbol of a GF(4) element under the standard isomorphism.
inline constexpr char gf4_pauli_char(GF4 a) {
    constexpr char table[4] = {'I', 'X', 'Z', 'Y'};
    return table[a];
}

// tr(a . conj(b)) over equal-length vectors; zero iff the represented Pauli
// operators commute.
inline std::uint8_t trace_inner_product(std::span<const GF4> a, std::span<const GF4> b) {
    if (a.size() != b.size()) throw std::invalid_argument("trace_inner_product: length mismatch");
    GF4 acc = 0;
    for (std::size_t i = 0; i < a.size(); ++i) acc = gf4_add(acc, gf4_mul(a[i], gf4_conj(b[i])));
    return gf4_trace(acc);
}

// In-place Walsh-Hadamard transform of a length-2 or length-4 real vector,
// with GF(2)/GF(4) elements ordered (0,1) and (0,1,w,W). Self-inverse up to
// the positive factor q, which message normalization absorbs.
inline void hadamard_transform(std::span<double> v) {
    if (v.size() == 2) {
        const double a = v[0], b = v[1];
        v[0] = a + b;
        v[1] = a - b;
        return;
    }
    if (v.size() == 4) {
        const double a = v[0] + v[1], b = v[0] - v[1];
        const double c = v[2] + v[3], d = v[2] - v[3];
        v[0] = a + c;
        v[1] = b + d;
        v[2] = a - c;
        v[3] = b - d;
        return;
    }
    throw std::invalid_argument("hadamard_transform: length must be 2 or 4");
}

inline std::vector<double> hadamard_transform(const std::vector<double>& v) {
    std::vector<double> out(v);
    hadamard_transform(std::span<double>(out));
    return out;
}

}  // namespace qldpc
