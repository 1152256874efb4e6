#include "qldpc/decoders.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

namespace qldpc {

namespace {

struct IdName {
    DecoderId id;
    const char* name;
};

constexpr IdName kIdNames[] = {
    {DecoderId::Gf2, "gf2"},
    {DecoderId::Gf4, "gf4"},
    {DecoderId::Supernode, "supernode"},
    {DecoderId::Adjusted, "adjusted"},
    {DecoderId::EfbGf4, "efb-gf4"},
    {DecoderId::EfbSupernode, "efb-supernode"},
    {DecoderId::PerturbGf4, "perturb-gf4"},
    {DecoderId::PerturbSupernode, "perturb-supernode"},
    {DecoderId::AugGf2, "aug-gf2"},
    {DecoderId::AugGf4, "aug-gf4"},
    {DecoderId::AugSupernode, "aug-supernode"},
    {DecoderId::Combined, "combined"},
};

}  // namespace

const char* to_string(DecoderId id) {
    for (const auto& e : kIdNames)
        if (e.id == id) return e.name;
    return "?";
}

std::optional<DecoderId> parse_decoder_id(std::string_view name) {
    for (const auto& e : kIdNames)
        if (name == e.name) return e.id;
    return std::nullopt;
}

const std::vector<DecoderId>& all_decoder_ids() {
    static const std::vector<DecoderId> ids = [] {
        std::vector<DecoderId> v;
        for (const auto& e : kIdNames) v.push_back(e.id);
        return v;
    }();
    return ids;
}

DecoderId baseline_of(DecoderId id) {
    switch (id) {
        case DecoderId::Gf2:
        case DecoderId::Adjusted:
        case DecoderId::AugGf2:
        case DecoderId::Combined:
            return DecoderId::Gf2;
        case DecoderId::Gf4:
        case DecoderId::EfbGf4:
        case DecoderId::PerturbGf4:
        case DecoderId::AugGf4:
            return DecoderId::Gf4;
        default:
            return DecoderId::Supernode;
    }
}

std::optional<double> default_delta(std::string_view code_kind, ChannelKind channel, DecoderId id) {
    if (id == DecoderId::Combined) id = DecoderId::AugGf2;
    const bool aug2 = id == DecoderId::AugGf2;
    const bool aug4 = id == DecoderId::AugGf4;
    const bool augs = id == DecoderId::AugSupernode;
    const bool pert4 = id == DecoderId::PerturbGf4;
    const bool perts = id == DecoderId::PerturbSupernode;
    if (!(aug2 || aug4 || augs || pert4 || perts)) return std::nullopt;
    if (code_kind == "bicycle") {
        if (channel == ChannelKind::XZ) {
            if (aug2 || aug4 || augs) return 0.15;
            return 100.0;
        }
        if (aug2) return 0.1;
        if (aug4 || augs) return 0.15;
        if (pert4) return 100.0;
        return 200.0;
    }
    if (code_kind == "bibd") {
        if (aug2 || aug4 || augs) return 0.3;
        if (pert4) return 200.0;
        return 400.0;
    }
    if (code_kind == "quasicyclic") {
        if (aug2) return 0.07;
        if (aug4) return 0.05;
        if (pert4) return 50.0;
        return std::nullopt;
    }
    if (code_kind == "bicycle_like") {
        if (aug2) return 0.1;
        if (aug4) return 0.15;
        if (pert4) return 100.0;
        return std::nullopt;
    }
    if (code_kind == "ncss_a") {
        if (aug4) return 0.1;
        if (pert4) return 25.0;
        return std::nullopt;
    }
    if (code_kind == "ncss_b") {
        if (aug4) return 0.05;
        if (pert4) return 25.0;
        return std::nullopt;
    }
    return std::nullopt;
}

std::array<double, 4> perturb_priors(const std::array<double, 4>& priors, double delta_x,
                                     double delta_y, double delta_z) {
    if (delta_x < 0 || delta_y < 0 || delta_z < 0)
        throw std::invalid_argument("perturb_priors: deltas must be nonnegative");
    // symbol order (I, X, Z, Y)
    std::array<double, 4> out{priors[0], priors[1] * (1.0 + delta_x), priors[2] * (1.0 + delta_z),
                              priors[3] * (1.0 + delta_y)};
    const double sum = out[0] + out[1] + out[2] + out[3];
    for (double& v : out) v /= sum;
    return out;
}

std::vector<std::size_t> draw_augmentation_rows(std::size_t m, double delta, Rng& rng) {
    if (delta < 0.0 || delta > 1.0) throw std::invalid_argument("augmentation density out of [0,1]");
    std::size_t count = static_cast<std::size_t>(std::floor(delta * static_cast<double>(m) + 0.5));
    if (delta > 0.0 && count == 0) count = 1;
    count = std::min(count, m);
    // partial Fisher-Yates for a uniform distinct subset
    std::vector<std::size_t> idx(m);
    std::iota(idx.begin(), idx.end(), 0);
    for (std::size_t i = 0; i < count; ++i)
        std::swap(idx[i], idx[i + rng.next_below(m - i)]);
    std::vector<std::size_t> rows(idx.begin(), idx.begin() + count);
    std::sort(rows.begin(), rows.end());
    return rows;
}

std::pair<BinaryMatrix, std::vector<std::size_t>> augment_matrix(const BinaryMatrix& h,
                                                                 double delta, Rng& rng) {
    auto rows = draw_augmentation_rows(h.rows(), delta, rng);
    if (rows.empty()) return {h, rows};
    return {h.stack_rows(h.submatrix_rows(rows)), rows};
}

Decoder::Decoder(const StabilizerCode& code, DecoderId id, const PauliChannel& channel,
                 RetryPolicy policy, BpConfig cfg)
    : code_(code), id_(id), channel_(channel), policy_(policy), cfg_(cfg) {
    if (policy_.n_attempts < 1) throw std::invalid_argument("Decoder: n_attempts must be >= 1");
    const DecoderId base_id = baseline_of(id_);
    if (base_id == DecoderId::Gf2) {
        if (!code.is_css()) throw std::invalid_argument("Decoder: GF(2) based ids require a CSS code");
        graph_x_ = build_graph(code.css_hz());
        graph_z_ = build_graph(code.css_hx());
        const Gf2Priors p = gf2_priors(channel_);
        prior_x_.resize(2 * code.n());
        prior_z_.resize(2 * code.n());
        for (std::size_t i = 0; i < code.n(); ++i) {
            prior_x_[2 * i] = 1.0 - p.px1;
            prior_x_[2 * i + 1] = p.px1;
            prior_z_[2 * i] = 1.0 - p.pz1;
            prior_z_[2 * i + 1] = p.pz1;
        }
    } else if (base_id == DecoderId::Supernode) {
        if (!code.is_dual_containing())
            throw std::invalid_argument("Decoder: supernode ids require a dual-containing code");
        graph_sn_ = build_supernode_graph(code.css_hx());
    } else {
        graph_gf4_ = build_graph(code.gf4());
    }
    if (base_id != DecoderId::Gf2) {
        const std::array<double, 4> p4 = channel_.gf4_priors();
        prior4_.resize(4 * code.n());
        for (std::size_t i = 0; i < code.n(); ++i)
            for (std::size_t s = 0; s < 4; ++s) prior4_[4 * i + s] = p4[s];
    }
    if (id_ == DecoderId::EfbGf4 || id_ == DecoderId::EfbSupernode) {
        const double p = channel_.total_error();
        const double third = p / 3.0;
        if (std::abs(channel_.px - third) > 1e-9 || std::abs(channel_.py - third) > 1e-9 ||
            std::abs(channel_.pz - third) > 1e-9)
            throw std::invalid_argument("Decoder: EFB requires a depolarizing channel");
    }
}

Decoder::Base Decoder::base() const {
    switch (baseline_of(id_)) {
        case DecoderId::Gf2: return Base::Gf2Pair;
        case DecoderId::Gf4: return Base::Gf4;
        default: return Base::Supernode;
    }
}

const FactorGraph& Decoder::base_graph() const {
    return base() == Base::Gf4 ? graph_gf4_ : graph_sn_;
}

const BinaryMatrix& Decoder::supernode_matrix() const { return code_.css_hx(); }

std::vector<std::uint8_t> Decoder::base_targets(const Syndrome& z) const {
    if (base() == Base::Gf4) return bit_targets(z);
    const CssSyndrome split = css_syndrome_split(code_, z);
    return supernode_targets(split.z_z, split.z_x);
}

DecodeOutcome Decoder::decode(const Syndrome& z, Rng& rng) {
    if (z.size() != code_.m()) throw std::invalid_argument("Decoder::decode: syndrome length");
    switch (id_) {
        case DecoderId::Gf2: return decode_standard_gf2(z);
        case DecoderId::Gf4: return decode_standard_gf4(z);
        case DecoderId::Supernode: return decode_standard_supernode(z);
        case DecoderId::Adjusted: return decode_adjusted(z);
        case DecoderId::EfbGf4:
        case DecoderId::EfbSupernode: return decode_efb(z);
        case DecoderId::PerturbGf4:
        case DecoderId::PerturbSupernode: return decode_perturb(z, rng);
        case DecoderId::AugGf2: return decode_augmented_gf2(z, rng);
        case DecoderId::AugGf4:
        case DecoderId::AugSupernode: return decode_augmented_gf4_like(z, rng);
        case DecoderId::Combined: return decode_combined(z, rng);
    }
    throw std::logic_error("Decoder::decode: unknown id");
}

namespace {

DecodeOutcome from_gf4_result(const BpResult& res, int attempts, long total_iters) {
    DecodeOutcome out;
    out.estimate = PauliErrorVec::from_gf4(res.estimate);
    out.converged = res.converged;
    out.iterations = total_iters;
    out.attempts = attempts;
    return out;
}

void fill_component_bits(BitVec& bits, const std::vector<std::uint8_t>& estimate) {
    for (std::size_t i = 0; i < estimate.size(); ++i) bits.assign(i, estimate[i]);
}

DecodeOutcome from_pair(const StabilizerCode& code, const BpResult& rx, const BpResult& rz,
                        long ix, long iz, int attempts) {
    DecodeOutcome out;
    out.estimate = PauliErrorVec(code.n());
    fill_component_bits(out.estimate.ex, rx.estimate);
    fill_component_bits(out.estimate.ez, rz.estimate);
    out.converged = rx.converged && rz.converged;
    out.has_components = true;
    out.iterations_x = ix;
    out.iterations_z = iz;
    out.iterations = std::max(ix, iz);
    out.attempts = attempts;
    return out;
}

}  // namespace

DecodeOutcome Decoder::decode_standard_gf4(const Syndrome& z) {
    const auto targets = bit_targets(z);
    const BpResult res = bp_decode(graph_gf4_, targets, prior4_, cfg_, &ws_);
    return from_gf4_result(res, 1, res.iterations);
}

DecodeOutcome Decoder::decode_standard_supernode(const Syndrome& z) {
    const auto targets = base_targets(z);
    const BpResult res = bp_decode(graph_sn_, targets, prior4_, cfg_, &ws_);
    return from_gf4_result(res, 1, res.iterations);
}

DecodeOutcome Decoder::decode_standard_gf2(const Syndrome& z) {
    const CssSyndrome split = css_syndrome_split(code_, z);
    const auto tx = bit_targets(split.z_x);
    const auto tz = bit_targets(split.z_z);
    const BpResult rx = bp_decode(graph_x_, tx, prior_x_, cfg_, &ws_);
    const BpResult rz = bp_decode(graph_z_, tz, prior_z_, cfg_, &ws_);
    return from_pair(code_, rx, rz, rx.iterations, rz.iterations, 1);
}

DecodeOutcome Decoder::decode_perturb(const Syndrome& z, Rng& rng) {
    const FactorGraph& g = base_graph();
    const auto targets = base_targets(z);
    BpResult res = bp_decode(g, targets, prior4_, cfg_, &ws_);
    long iters = res.iterations;
    int attempts = 1;
    std::vector<double> perturbed(prior4_.size());
    while (!res.converged && attempts < policy_.n_attempts) {
        // frustrated checks of the previous attempt
        graph_syndrome(g, res.estimate, synd_scratch_);
        std::vector<std::uint32_t> frustrated;
        for (std::size_t i = 0; i < g.num_checks; ++i)
            if (synd_scratch_[i] != targets[i]) frustrated.push_back(static_cast<std::uint32_t>(i));
        if (frustrated.empty()) break;  // cannot happen with !converged; defensive exit
        const std::uint32_t check = frustrated[rng.next_below(frustrated.size())];

        std::copy(prior4_.begin(), prior4_.end(), perturbed.begin());
        for (std::uint32_t e = g.check_offset[check]; e < g.check_offset[check + 1]; ++e) {
            const std::size_t j = g.edge_var[e];
            const double dx = rng.next_double() * policy_.delta;
            const double dy = rng.next_double() * policy_.delta;
            const double dz = rng.next_double() * policy_.delta;
            const std::array<double, 4> base{prior4_[4 * j], prior4_[4 * j + 1], prior4_[4 * j + 2],
                                             prior4_[4 * j + 3]};
            const auto p = perturb_priors(base, dx, dy, dz);
            std::copy(p.begin(), p.end(), perturbed.begin() + 4 * j);
        }
        res = bp_decode(g, targets, perturbed, cfg_, &ws_);
        iters += res.iterations;
        ++attempts;
    }
    return from_gf4_result(res, attempts, iters);
}

DecodeOutcome Decoder::decode_efb(const Syndrome& z) {
    const FactorGraph& g = base_graph();
    const auto targets = base_targets(z);
    BpResult res = bp_decode(g, targets, prior4_, cfg_, &ws_);
    long iters = res.iterations;
    int attempts = 1;
    if (res.converged || policy_.n_attempts == 1) return from_gf4_result(res, attempts, iters);

    const double p = channel_.total_error();
    const bool supernode = base() == Base::Supernode;
    const std::size_t half = supernode ? code_.m() / 2 : 0;

    // Frustrated generators of the first attempt, in ascending generator
    // index; the set is not recomputed between retries. For the supernode
    // base each merged check contributes its X-type bit (the omega part of
    // z~) and its Z-type bit separately.
    struct Frustration {
        std::uint32_t check;   // check node in the decoding graph
        std::uint8_t z_bit;    // measured bit for this generator
        std::uint8_t zhat_bit; // estimated bit from the first attempt
        GF4 sigma;             // generator component at the qubit, supernode base
    };
    graph_syndrome(g, res.estimate, synd_scratch_);
    std::vector<Frustration> frustrated;
    if (!supernode) {
        for (std::size_t i = 0; i < g.num_checks; ++i)
            if (synd_scratch_[i] != targets[i])
                frustrated.push_back({static_cast<std::uint32_t>(i), targets[i], synd_scratch_[i], 0});
    } else {
        // generators 0..half-1 are the X block (z-bit of z~), half..m-1 the Z block
        for (std::size_t gidx = 0; gidx < code_.m(); ++gidx) {
            const std::size_t c = gidx < half ? gidx : gidx - half;
            const std::uint8_t zb = gidx < half ? gf4_z_bit(targets[c]) : gf4_x_bit(targets[c]);
            const std::uint8_t zh =
                gidx < half ? gf4_z_bit(synd_scratch_[c]) : gf4_x_bit(synd_scratch_[c]);
            if (zb != zh)
                frustrated.push_back({static_cast<std::uint32_t>(c), zb, zh,
                                      gidx < half ? gf4_one : gf4_omega});
        }
    }

    std::vector<double> priors(prior4_.size());
    for (const auto& f : frustrated) {
        for (std::uint32_t e = g.check_offset[f.check]; e < g.check_offset[f.check + 1]; ++e) {
            if (attempts >= policy_.n_attempts) return from_gf4_result(res, attempts, iters);
            const std::size_t j = g.edge_var[e];
            const GF4 sigma = supernode ? f.sigma : g.edge_coeff[e];
            // z_i = 1, z^_i = 0: make anticommuting errors on qubit j likely;
            // the reverse case favors commuting ones.
            const double match = f.z_bit ? p / 2.0 : (1.0 - p) / 2.0;
            const double mismatch = f.z_bit ? (1.0 - p) / 2.0 : p / 2.0;
            std::copy(prior4_.begin(), prior4_.end(), priors.begin());
            for (GF4 s = 0; s < 4; ++s)
                priors[4 * j + s] = (s == gf4_zero || s == sigma) ? match : mismatch;
            res = bp_decode(g, targets, priors, cfg_, &ws_);
            iters += res.iterations;
            ++attempts;
            if (res.converged) return from_gf4_result(res, attempts, iters);
        }
    }
    return from_gf4_result(res, attempts, iters);
}

DecodeOutcome Decoder::decode_adjusted(const Syndrome& z) {
    const CssSyndrome split = css_syndrome_split(code_, z);
    const auto tx = bit_targets(split.z_x);
    const auto tz = bit_targets(split.z_z);
    BpResult rx = bp_decode(graph_x_, tx, prior_x_, cfg_, &ws_);
    BpResult rz = bp_decode(graph_z_, tz, prior_z_, cfg_, &ws_);
    long ix = rx.iterations, iz = rz.iterations;
    int attempts = 1;
    if (rx.converged != rz.converged) {
        attempts = 2;
        if (rx.converged) {
            BitVec ex(code_.n());
            fill_component_bits(ex, rx.estimate);
            const auto adj = adjusted_priors(channel_, ex, AdjustedKind::ZgivenX);
            std::vector<double> prior(2 * code_.n());
            for (std::size_t i = 0; i < adj.size(); ++i) {
                prior[2 * i] = 1.0 - adj[i];
                prior[2 * i + 1] = adj[i];
            }
            rz = bp_decode(graph_z_, tz, prior, cfg_, &ws_);
            iz += rz.iterations;
        } else {
            BitVec ez(code_.n());
            fill_component_bits(ez, rz.estimate);
            const auto adj = adjusted_priors(channel_, ez, AdjustedKind::XgivenZ);
            std::vector<double> prior(2 * code_.n());
            for (std::size_t i = 0; i < adj.size(); ++i) {
                prior[2 * i] = 1.0 - adj[i];
                prior[2 * i + 1] = adj[i];
            }
            rx = bp_decode(graph_x_, tx, prior, cfg_, &ws_);
            ix += rx.iterations;
        }
    }
    return from_pair(code_, rx, rz, ix, iz, attempts);
}

DecodeOutcome Decoder::decode_augmented_gf4_like(const Syndrome& z, Rng& rng) {
    const bool supernode = base() == Base::Supernode;
    const FactorGraph& g = base_graph();
    const auto targets = base_targets(z);
    BpResult res = bp_decode(g, targets, prior4_, cfg_, &ws_);
    long iters = res.iterations;
    int attempts = 1;
    while (!res.converged && attempts < policy_.n_attempts) {
        const auto rows = draw_augmentation_rows(g.num_checks, policy_.delta, rng);
        const FactorGraph ga = supernode ? build_supernode_graph(supernode_matrix(), rows)
                                         : build_graph(code_.gf4(), rows);
        const auto ta = extend_targets(targets, rows);
        res = bp_decode(ga, ta, prior4_, cfg_, &ws_);
        iters += res.iterations;
        ++attempts;
    }
    // estimates from augmented attempts are over the same variables
    return from_gf4_result(res, attempts, iters);
}

DecodeOutcome Decoder::decode_augmented_gf2(const Syndrome& z, Rng& rng) {
    const CssSyndrome split = css_syndrome_split(code_, z);
    const auto tx = bit_targets(split.z_x);
    const auto tz = bit_targets(split.z_z);
    BpResult rx = bp_decode(graph_x_, tx, prior_x_, cfg_, &ws_);
    BpResult rz = bp_decode(graph_z_, tz, prior_z_, cfg_, &ws_);
    long ix = rx.iterations, iz = rz.iterations;
    int attempts = 1;
    while (!(rx.converged && rz.converged) && attempts < policy_.n_attempts) {
        ++attempts;
        if (!rx.converged) {
            const auto rows = draw_augmentation_rows(code_.css_hz().rows(), policy_.delta, rng);
            const FactorGraph ga = build_graph(code_.css_hz(), rows);
            rx = bp_decode(ga, extend_targets(tx, rows), prior_x_, cfg_, &ws_);
            ix += rx.iterations;
        }
        if (!rz.converged) {
            const auto rows = draw_augmentation_rows(code_.css_hx().rows(), policy_.delta, rng);
            const FactorGraph ga = build_graph(code_.css_hx(), rows);
            rz = bp_decode(ga, extend_targets(tz, rows), prior_z_, cfg_, &ws_);
            iz += rz.iterations;
        }
    }
    return from_pair(code_, rx, rz, ix, iz, attempts);
}

DecodeOutcome Decoder::decode_combined(const Syndrome& z, Rng& rng) {
    const CssSyndrome split = css_syndrome_split(code_, z);
    const auto tx = bit_targets(split.z_x);
    const auto tz = bit_targets(split.z_z);
    BpResult rx = bp_decode(graph_x_, tx, prior_x_, cfg_, &ws_);
    BpResult rz = bp_decode(graph_z_, tz, prior_z_, cfg_, &ws_);
    long ix = rx.iterations, iz = rz.iterations;
    int ax = 1, az = 1;

    if (!rx.converged && !rz.converged) {
        // augmented retries with standard priors: X first, then Z if needed
        for (int attempt = 2; attempt <= policy_.n_attempts && !rx.converged; ++attempt) {
            const auto rows = draw_augmentation_rows(code_.css_hz().rows(), policy_.delta, rng);
            const FactorGraph ga = build_graph(code_.css_hz(), rows);
            rx = bp_decode(ga, extend_targets(tx, rows), prior_x_, cfg_, &ws_);
            ix += rx.iterations;
            ax = attempt;
        }
        if (!rx.converged) {
            for (int attempt = 2; attempt <= policy_.n_attempts && !rz.converged; ++attempt) {
                const auto rows = draw_augmentation_rows(code_.css_hx().rows(), policy_.delta, rng);
                const FactorGraph ga = build_graph(code_.css_hx(), rows);
                rz = bp_decode(ga, extend_targets(tz, rows), prior_z_, cfg_, &ws_);
                iz += rz.iterations;
                az = attempt;
            }
        }
        if (!rx.converged && !rz.converged) return from_pair(code_, rx, rz, ix, iz, std::max(ax, az));
    }

    if (rx.converged != rz.converged) {
        // adjusted retry for the unsatisfied component, then augmented
        // retries with the same adjusted priors
        if (rx.converged) {
            BitVec ex(code_.n());
            fill_component_bits(ex, rx.estimate);
            const auto adj = adjusted_priors(channel_, ex, AdjustedKind::ZgivenX);
            std::vector<double> prior(2 * code_.n());
            for (std::size_t i = 0; i < adj.size(); ++i) {
                prior[2 * i] = 1.0 - adj[i];
                prior[2 * i + 1] = adj[i];
            }
            rz = bp_decode(graph_z_, tz, prior, cfg_, &ws_);
            iz += rz.iterations;
            ++az;
            for (int attempt = 2; attempt <= policy_.n_attempts && !rz.converged; ++attempt) {
                const auto rows = draw_augmentation_rows(code_.css_hx().rows(), policy_.delta, rng);
                const FactorGraph ga = build_graph(code_.css_hx(), rows);
                rz = bp_decode(ga, extend_targets(tz, rows), prior, cfg_, &ws_);
                iz += rz.iterations;
                ++az;
            }
        } else {
            BitVec ez(code_.n());
            fill_component_bits(ez, rz.estimate);
            const auto adj = adjusted_priors(channel_, ez, AdjustedKind::XgivenZ);
            std::vector<double> prior(2 * code_.n());
            for (std::size_t i = 0; i < adj.size(); ++i) {
                prior[2 * i] = 1.0 - adj[i];
                prior[2 * i + 1] = adj[i];
            }
            rx = bp_decode(graph_x_, tx, prior, cfg_, &ws_);
            ix += rx.iterations;
            ++ax;
            for (int attempt = 2; attempt <= policy_.n_attempts && !rx.converged; ++attempt) {
                const auto rows = draw_augmentation_rows(code_.css_hz().rows(), policy_.delta, rng);
                const FactorGraph ga = build_graph(code_.css_hz(), rows);
                rx = bp_decode(ga, extend_targets(tx, rows), prior, cfg_, &ws_);
                ix += rx.iterations;
                ++ax;
            }
        }
    }
    return from_pair(code_, rx, rz, ix, iz, std::max(ax, az));
}

}  // namespace qldpc
