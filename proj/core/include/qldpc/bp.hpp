#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "qldpc/factor_graph.hpp"
#include "qldpc/stabilizer_code.hpp"

namespace qldpc {

struct BpConfig {
    int i_max = 100;            // check-to-variable rounds per attempt
    double epsilon_floor = 1e-30;  // smallest message entry kept after normalization
};

struct BpResult {
    std::vector<std::uint8_t> estimate;  // per-variable symbol (bit or GF(4))
    bool converged = false;
    int iterations = 0;  // check rounds executed
};

// Reusable message workspace; all buffers are sized on first use with a given
// graph. One instance per concurrent decode.
struct MessageState {
    std::vector<double> mu;        // variable-to-check, per edge (stride q)
    std::vector<double> lambda;    // check-to-variable, per edge (stride q)
    std::vector<double> marginal;  // per variable (stride q); valid after decode
    std::vector<std::uint8_t> hard;
    std::vector<std::uint8_t> synd;
    std::vector<double> fwd, bwd;  // prefix/suffix scratch

    void resize(const FactorGraph& g);
};

// One check-node update: incoming holds the neighbor messages in edge order
// (degree x q values), outgoing receives the message to every neighbor. The
// update is the Hadamard product-of-transforms evaluation of the check
// constraint; it matches the direct delta-sum with all other neighbors
// marginalized.
void check_update(CheckKind kind, std::size_t degree, std::span<const double> incoming,
                  std::span<const GF4> coeffs, std::uint8_t target, std::span<double> outgoing,
                  double floor);

// Syndrome of a symbol assignment on the graph, one target per check.
void graph_syndrome(const FactorGraph& g, std::span<const std::uint8_t> estimate,
                    std::vector<std::uint8_t>& out);

// Flooding-schedule syndrome BP. priors is a flat n x q array of per-variable
// symbol probabilities. Marginals are computed after every check round; the
// decode stops as soon as the hard decision reproduces the targets, else
// after cfg.i_max rounds (the last estimate is returned either way). After
// the call ws->marginal holds the final marginal estimates.
BpResult bp_decode(const FactorGraph& g, std::span<const std::uint8_t> targets,
                   std::span<const double> priors, const BpConfig& cfg,
                   MessageState* ws = nullptr);

// Decoding with duplicated check rows, run on the original graph via the
// equivalent altered message rules: duplicated checks contribute their
// outgoing message squared to marginals, and once to their own incoming
// message. dup_rows lists the duplicated check indices in append order, so
// products accumulate in the same order as a literally augmented graph.
BpResult bp_decode_duplicated(const FactorGraph& g, std::span<const std::uint8_t> targets,
                              std::span<const double> priors, const BpConfig& cfg,
                              const std::vector<std::size_t>& dup_rows,
                              MessageState* ws = nullptr);

struct ExactResult {
    std::vector<std::uint8_t> ml;    // most probable consistent assignment
    std::vector<double> marginals;   // n x q, normalized
};

// Exhaustive evaluation of the syndrome decoding problem; requires
// q^n <= 2^20. ML ties break toward the lexicographically smallest error.
ExactResult brute_force_exact(const FactorGraph& g, std::span<const std::uint8_t> targets,
                              std::span<const double> priors);

// Splits a CSS code's syndrome into (z_Z, z_X): the bits of the pure-X rows
// (which detect the Z component) and of the pure-Z rows.
struct CssSyndrome {
    BitVec z_z;
    BitVec z_x;
};
CssSyndrome css_syndrome_split(const StabilizerCode& code, const Syndrome& z);

// Independent binary decoding of the two error components of a CSS code:
// the X component from (~HZ, z_X) and the Z component from (~HX, z_Z).
// priors_* hold per-qubit flip probabilities.
struct PairResult {
    BpResult x;
    BpResult z;
};
PairResult gf2_pair_decode(const StabilizerCode& code, const Syndrome& z,
                           std::span<const double> priors_x, std::span<const double> priors_z,
                           const BpConfig& cfg);

}  // namespace qldpc
