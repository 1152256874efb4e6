#pragma once

#include <cstdint>

#include "qldpc/stabilizer_code.hpp"

namespace qldpc {

// Dual-containing CSS code from a random n/2 x n/2 circulant A of row weight
// w/2: H0 = [A A^T] with (n-m)/2 rows removed, keeping column weights as
// uniform as possible. Retries internally (reseeding deterministically from
// `seed`) until the kept rows are full rank, so that k = n - m.
StabilizerCode build_bicycle(std::size_t n, std::size_t m, std::size_t w, std::uint64_t seed);

// Dual-containing CSS code from the Bose difference-family BIBD over
// GF(6t+1) (6t+1 prime, alpha primitive): t base blocks {0, a^i, a^(2t+i),
// a^(4t+i)}, developed cyclically. The incidence matrix is a row of t
// (6t+1)x(6t+1) weight-4 circulants; pairwise intersection 2 makes it
// self-orthogonal.
StabilizerCode build_bibd_bose(std::size_t t, std::size_t alpha);

// Perfume predicate: sigma is a fulfillment of P (coprime, and 1 - sigma^i
// coprime to P for 1 <= i < ord(sigma)), tau is coprime to P, and tau lies
// outside the cyclic group generated by sigma.
bool is_perfume(std::size_t p, std::size_t sigma, std::size_t tau);

// Non-dual-containing CSS code lifted from JxL and KxL base matrices over
// Z_P built from the perfume (P, sigma, tau); each base entry s becomes the
// PxP identity circularly right-shifted by s. Both lifted factor graphs are
// 4-cycle free.
StabilizerCode build_quasicyclic(std::size_t p, std::size_t sigma, std::size_t tau,
                                 std::size_t j_rows, std::size_t k_rows);

// Non-dual-containing CSS code ~HX = (A_1 ... A_a), ~HZ the half-shifted
// block row, from random v x v circulants of the given weight. The last
// block is solved for in the circulant polynomial ring so that
// ~HZ ~HX^T = 0 (transpose-pair completion when no solution of the target
// weight exists).
StabilizerCode build_bicycle_like(std::size_t v, std::size_t a, std::size_t weight,
                                  std::uint64_t seed);

// Non-CSS codes from circulant B blocks and random permutations P_i
// (P_i^T = P_i^-1). Variant A uses the 2x2 block form
//   A^(i) = (B  B^T P^T ; P B^T  P B P^T),
// variant B the 1x2 form A^(i) = (B  B^T P^T). expected_k = 0 skips the
// dimension check; a nonzero value reseeds internally until k matches.
StabilizerCode build_ncss_a(std::size_t a, std::size_t block_size, std::size_t weight,
                            std::uint64_t seed, std::size_t expected_k = 0);
StabilizerCode build_ncss_b(std::size_t a, std::size_t block_size, std::size_t weight,
                            std::uint64_t seed, std::size_t expected_k = 0);

inline std::uint64_t count_4cycles(const BinaryMatrix& m) { return m.count_4cycles(); }
inline std::uint64_t count_4cycles(const GF4Matrix& m) { return m.count_4cycles(); }

}  // namespace qldpc
