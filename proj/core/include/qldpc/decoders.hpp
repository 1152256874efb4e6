#pragma once

#include <array>
#include <optional>
#include <string_view>
#include <vector>

#include "qldpc/bp.hpp"
#include "qldpc/channel.hpp"
#include "qldpc/rng.hpp"

namespace qldpc {

enum class DecoderId {
    Gf2,
    Gf4,
    Supernode,
    Adjusted,
    EfbGf4,
    EfbSupernode,
    PerturbGf4,
    PerturbSupernode,
    AugGf2,
    AugGf4,
    AugSupernode,
    Combined,
};

const char* to_string(DecoderId id);
std::optional<DecoderId> parse_decoder_id(std::string_view name);
const std::vector<DecoderId>& all_decoder_ids();

// The standard decoder a modified decoder retries on top of.
DecoderId baseline_of(DecoderId id);

struct RetryPolicy {
    int n_attempts = 100;  // N, counting the initial attempt
    double delta = 0.0;    // perturbation strength / augmentation density
};

// Tuned delta per (code family, channel, decoder); nullopt for decoders
// without a delta or unlisted combinations. The combined decoder always
// shares the augmented GF(2) value.
std::optional<double> default_delta(std::string_view code_kind, ChannelKind channel, DecoderId id);

struct DecodeOutcome {
    PauliErrorVec estimate;
    bool converged = false;
    long iterations = 0;  // total check rounds; max over components for pair decoders
    int attempts = 1;
    long iterations_x = 0;  // per-component totals, pair decoders only
    long iterations_z = 0;
    bool has_components = false;
};

// Perturbed channel priors (4-vector in GF(4) symbol order I,X,Z,Y): the
// identity entry is kept, X/Y/Z entries scale by (1+delta_{X,Y,Z}), then the
// vector is renormalized.
std::array<double, 4> perturb_priors(const std::array<double, 4>& priors, double delta_x,
                                     double delta_y, double delta_z);

// H_A = (H ; H_delta) with round(delta*m) distinct rows chosen uniformly
// (at least one when delta > 0), returned together with the chosen row
// indices in ascending order so the caller can build z_A = (z ; z_delta).
std::pair<BinaryMatrix, std::vector<std::size_t>> augment_matrix(const BinaryMatrix& h,
                                                                 double delta, Rng& rng);
std::vector<std::size_t> draw_augmentation_rows(std::size_t m, double delta, Rng& rng);

// One decoding strategy bound to a code and channel. Instances own mutable
// message state and are meant to be per-worker; the code itself is shared
// read-only. decode() is deterministic given (syndrome, rng state).
class Decoder {
  public:
    Decoder(const StabilizerCode& code, DecoderId id, const PauliChannel& channel,
            RetryPolicy policy = {}, BpConfig cfg = {});

    DecodeOutcome decode(const Syndrome& z, Rng& rng);

    DecoderId id() const { return id_; }
    const StabilizerCode& code() const { return code_; }
    const RetryPolicy& policy() const { return policy_; }

  private:
    enum class Base { Gf2Pair, Gf4, Supernode };

    DecodeOutcome decode_standard_gf4(const Syndrome& z);
    DecodeOutcome decode_standard_supernode(const Syndrome& z);
    DecodeOutcome decode_standard_gf2(const Syndrome& z);
    DecodeOutcome decode_perturb(const Syndrome& z, Rng& rng);
    DecodeOutcome decode_efb(const Syndrome& z);
    DecodeOutcome decode_adjusted(const Syndrome& z);
    DecodeOutcome decode_augmented_gf4_like(const Syndrome& z, Rng& rng);
    DecodeOutcome decode_augmented_gf2(const Syndrome& z, Rng& rng);
    DecodeOutcome decode_combined(const Syndrome& z, Rng& rng);

    Base base() const;
    std::vector<std::uint8_t> base_targets(const Syndrome& z) const;
    const FactorGraph& base_graph() const;
    const BinaryMatrix& supernode_matrix() const;

    const StabilizerCode& code_;
    DecoderId id_;
    PauliChannel channel_;
    RetryPolicy policy_;
    BpConfig cfg_;

    FactorGraph graph_gf4_;        // gf4-based ids
    FactorGraph graph_sn_;         // supernode-based ids
    FactorGraph graph_x_, graph_z_;  // component graphs, gf2-based ids
    std::vector<double> prior4_;     // n x 4
    std::vector<double> prior_x_, prior_z_;  // n x 2
    MessageState ws_;
    std::vector<std::uint8_t> synd_scratch_;
};

}  // namespace qldpc
