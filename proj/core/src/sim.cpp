#include "qldpc/sim.hpp"

#include <chrono>
#include <cmath>
#include <cstdio>
#include <ostream>
#include <stdexcept>
#include <thread>

namespace qldpc {

TrialResult run_trial(const StabilizerCode& code, const PauliChannel& channel, Decoder& decoder,
                      Rng& rng) {
    const PauliErrorVec error = sample_error(channel, code.n(), rng);
    const Syndrome z = code.binary_syndrome(error);
    const DecodeOutcome out = decoder.decode(z, rng);
    return {code.classify_outcome(error, out.estimate), iterations_metric(out), out.attempts};
}

long iterations_metric(const DecodeOutcome& out) {
    return out.has_components ? std::max(out.iterations_x, out.iterations_z) : out.iterations;
}

double PointSummary::fer_stderr() const {
    if (trials == 0) return 0.0;
    const double f = fer();
    return std::sqrt(f * (1.0 - f) / static_cast<double>(trials));
}

namespace {

constexpr std::uint64_t kBatch = 256;

struct WorkerTally {
    std::uint64_t detected = 0;
    std::uint64_t undetected = 0;
    long long iterations = 0;
    long long attempts = 0;
};

}  // namespace

PointSummary run_point(const ExperimentSpec& spec, double p) {
    if (!spec.code) throw std::invalid_argument("run_point: no code");
    if (spec.min_errors < 1) throw std::invalid_argument("run_point: min_errors must be >= 1");
    if (!(p > 0.0 && p < 1.0)) throw std::invalid_argument("run_point: p must be in (0,1)");
    const StabilizerCode& code = *spec.code;
    const PauliChannel channel = make_channel(spec.channel, p);
    const int threads = std::max(1, spec.threads);

    std::vector<Decoder> decoders;
    decoders.reserve(threads);
    for (int w = 0; w < threads; ++w)
        decoders.emplace_back(code, spec.decoder, channel, spec.policy, spec.bp);

    const auto t0 = std::chrono::steady_clock::now();
    PointSummary sum;
    std::uint64_t next_trial = 0;
    while (sum.errors() < spec.min_errors && next_trial < spec.max_trials) {
        const std::uint64_t batch = std::min(kBatch, spec.max_trials - next_trial);
        std::vector<WorkerTally> tallies(threads);
        auto work = [&](int w) {
            Rng rng;
            for (std::uint64_t t = next_trial + w; t < next_trial + batch;
                 t += static_cast<std::uint64_t>(threads)) {
                rng = Rng(mix_seed(spec.base_seed, t));
                const TrialResult r = run_trial(code, channel, decoders[w], rng);
                if (r.outcome == Outcome::Detected) ++tallies[w].detected;
                if (r.outcome == Outcome::Undetected) ++tallies[w].undetected;
                tallies[w].iterations += r.iterations;
                tallies[w].attempts += r.attempts;
            }
        };
        if (threads == 1) {
            work(0);
        } else {
            std::vector<std::thread> pool;
            for (int w = 0; w < threads; ++w) pool.emplace_back(work, w);
            for (auto& th : pool) th.join();
        }
        for (const auto& t : tallies) {
            sum.errors_detected += t.detected;
            sum.errors_undetected += t.undetected;
            sum.iterations_total += t.iterations;
            sum.attempts_total += t.attempts;
        }
        next_trial += batch;
        sum.trials = next_trial;
    }
    sum.low_confidence = sum.errors() < spec.min_errors;
    if (spec.report_walltime)
        sum.wall_time = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    return sum;
}

namespace {

std::string format_row(const ExperimentSpec& spec, DecoderId decoder, double delta, double p,
                       const PointSummary& s, const char* norm_fer) {
    char buf[512];
    std::snprintf(buf, sizeof buf,
                  "%s,%s,%zu,%zu,%s,%.10g,%s,%.10g,%d,%d,%llu,%llu,%llu,%llu,%.10g,%.10g,%s,%.10g,"
                  "%.10g,%.3f\n",
                  spec.code_label.c_str(), spec.code->kind().c_str(), spec.code->n(),
                  spec.code->k(), to_string(spec.channel), p, to_string(decoder), delta,
                  spec.policy.n_attempts, spec.bp.i_max,
                  static_cast<unsigned long long>(spec.base_seed),
                  static_cast<unsigned long long>(s.trials),
                  static_cast<unsigned long long>(s.errors_detected),
                  static_cast<unsigned long long>(s.errors_undetected), s.fer(), s.fer_stderr(),
                  norm_fer, s.avg_iterations(), s.avg_attempts(), s.wall_time);
    return buf;
}

}  // namespace

std::string csv_header() {
    return "code,kind,n,k,channel,p,decoder,delta,N,imax,seed,trials,detected,undetected,fer,"
           "fer_stderr,norm_fer,avg_iters,avg_attempts,wall_s\n";
}

void run_sweep(const ExperimentSpec& spec, const std::vector<double>& p_values, std::ostream& csv,
               const std::optional<DecoderId>& baseline) {
    csv << csv_header();
    for (double p : p_values) {
        double base_fer = -1.0;
        if (baseline) {
            ExperimentSpec bspec = spec;
            bspec.decoder = *baseline;
            bspec.policy = RetryPolicy{1, 0.0};
            const PointSummary bs = run_point(bspec, p);
            base_fer = bs.fer();
            csv << format_row(bspec, *baseline, 0.0, p, bs, "1");
        }
        const PointSummary s = run_point(spec, p);
        char norm[64] = "";
        if (baseline && base_fer > 0.0) std::snprintf(norm, sizeof norm, "%.10g", s.fer() / base_fer);
        csv << format_row(spec, spec.decoder, spec.policy.delta, p, s, norm);
        csv.flush();
    }
}

}  // namespace qldpc
