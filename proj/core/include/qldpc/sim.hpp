#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "qldpc/decoders.hpp"

namespace qldpc {

// One Monte Carlo experiment: a code, a channel family, a decoder with its
// retry policy, and the stopping rule. Trial t draws its rng stream from
// mix_seed(base_seed, t), so results are independent of the worker count.
struct ExperimentSpec {
    const StabilizerCode* code = nullptr;
    std::string code_label = "code";
    ChannelKind channel = ChannelKind::Depolarizing;
    DecoderId decoder = DecoderId::Gf4;
    RetryPolicy policy{};
    BpConfig bp{};
    std::uint64_t min_errors = 100;
    std::uint64_t max_trials = 10'000'000;
    std::uint64_t base_seed = 1;
    int threads = 1;
    bool report_walltime = true;  // off: wall_s written as 0 for byte-stable output
};

struct TrialResult {
    Outcome outcome;
    long iterations;
    int attempts;
};

// Samples an error, computes its syndrome, decodes, classifies.
TrialResult run_trial(const StabilizerCode& code, const PauliChannel& channel, Decoder& decoder,
                      Rng& rng);

// Iteration count reported for a decode: total check rounds, taken as the
// larger of the two per-component totals for GF(2) pair based decoders.
long iterations_metric(const DecodeOutcome& out);

struct PointSummary {
    std::uint64_t trials = 0;
    std::uint64_t errors_detected = 0;
    std::uint64_t errors_undetected = 0;
    long long iterations_total = 0;
    long long attempts_total = 0;
    double wall_time = 0.0;
    bool low_confidence = false;  // max_trials reached before min_errors

    std::uint64_t errors() const { return errors_detected + errors_undetected; }
    double fer() const { return trials ? static_cast<double>(errors()) / trials : 0.0; }
    double fer_stderr() const;
    double avg_iterations() const { return trials ? static_cast<double>(iterations_total) / trials : 0.0; }
    double avg_attempts() const { return trials ? static_cast<double>(attempts_total) / trials : 0.0; }
};

// Runs trials in batches of 256 until at least min_errors decoding errors
// have been seen (checked on batch boundaries) or max_trials is reached.
PointSummary run_point(const ExperimentSpec& spec, double p);

// One CSV row per (p, decoder). With a baseline decoder the same seeds are
// rerun under the baseline and each p contributes a baseline row
// (norm_fer = 1) followed by the main row with norm_fer = fer / fer_base.
void run_sweep(const ExperimentSpec& spec, const std::vector<double>& p_values, std::ostream& csv,
               const std::optional<DecoderId>& baseline = std::nullopt);

std::string csv_header();

}  // namespace qldpc
