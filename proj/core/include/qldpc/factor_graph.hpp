#pragma once

#include <cstdint>
#include <vector>

#include "qldpc/binary_matrix.hpp"
#include "qldpc/bitvec.hpp"
#include "qldpc/gf4_matrix.hpp"

namespace qldpc {

// Alphabet and check-constraint flavour of a factor graph.
//   Gf2      binary symbols, constraint sum_j e_j = z_i (bit syndrome)
//   Gf4Trace GF(4) symbols, constraint tr(sum_j H_ij conj(e_j)) = z_i (bit)
//   Gf4Plain GF(4) symbols, constraint sum_j e_j = z_i with z_i in GF(4)
//            (supernode form; coefficients are all 1)
enum class CheckKind { Gf2, Gf4Trace, Gf4Plain };

// Immutable bipartite check/error adjacency with per-edge coefficients,
// stored CSR both ways. Edges are ordered ascending by (check, var); the
// variable-side view lists the same edges ascending by (var, check).
struct FactorGraph {
    CheckKind kind = CheckKind::Gf2;
    std::size_t num_checks = 0;
    std::size_t num_vars = 0;

    std::vector<std::uint32_t> check_offset;  // num_checks + 1
    std::vector<std::uint32_t> edge_var;      // per edge (check order)
    std::vector<GF4> edge_coeff;              // per edge; 1 for Gf2/Gf4Plain

    std::vector<std::uint32_t> var_offset;    // num_vars + 1
    std::vector<std::uint32_t> var_edge;      // edge ids in (var, check) order
    std::vector<std::uint32_t> edge_check;    // per edge (check order)

    std::size_t q() const { return kind == CheckKind::Gf2 ? 2 : 4; }
    std::size_t num_edges() const { return edge_var.size(); }
    std::size_t check_degree(std::size_t i) const { return check_offset[i + 1] - check_offset[i]; }
    std::size_t max_check_degree() const;
    std::size_t max_var_degree() const;
};

// One check node per row of H plus one per duplicated row index, appended in
// the order given.
FactorGraph build_graph(const BinaryMatrix& h,
                        const std::vector<std::size_t>& duplication = {});
FactorGraph build_graph(const GF4Matrix& h,
                        const std::vector<std::size_t>& duplication = {});
// Supernode graph over the dual-containing block ~H; all coefficients 1.
FactorGraph build_supernode_graph(const BinaryMatrix& h_tilde,
                                  const std::vector<std::size_t>& duplication = {});

// Per-check syndrome targets. Bit values for Gf2/Gf4Trace graphs; GF(4)
// symbols z~_i = w z_Z + z_X for supernode graphs.
std::vector<std::uint8_t> bit_targets(const BitVec& z);
std::vector<std::uint8_t> supernode_targets(const BitVec& z_z, const BitVec& z_x);

// z_A = (z ; z_delta): append the entries of the duplicated rows.
std::vector<std::uint8_t> extend_targets(const std::vector<std::uint8_t>& targets,
                                         const std::vector<std::size_t>& duplication);

}  // namespace qldpc
