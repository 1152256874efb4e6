#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>
#include <thread>

#include "qldpc/constructions.hpp"
#include "qldpc/sim.hpp"

namespace {

using namespace qldpc;

StabilizerCode load_code(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open code file: " + path);
    return StabilizerCode::read_text(in);
}

void write_code(const StabilizerCode& code, const std::string& path, const std::string& params) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot open output file: " + path);
    out << "# qldpc code file\n";
    out << "# kind=" << code.kind() << ' ' << params << " seed=" << code.seed() << '\n';
    out << "# n=" << code.n() << " m=" << code.m() << " k=" << code.k()
        << " css=" << (code.is_css() ? 1 : 0)
        << " dual_containing=" << (code.is_dual_containing() ? 1 : 0) << '\n';
    out << "# 4cycles_gf4=" << code.gf4().count_4cycles();
    if (code.is_css())
        out << " 4cycles_hx=" << code.css_hx().count_4cycles()
            << " 4cycles_hz=" << code.css_hz().count_4cycles();
    out << '\n';
    code.write_text(out);
}

struct BuildArgs {
    std::string kind, out_path = "code.txt";
    std::uint64_t seed = 1;
    std::size_t n = 400, m = 200, w = 20;                              // bicycle
    std::size_t t = 10, alpha = 2;                                     // bibd
    std::size_t pp = 23, sigma = 8, tau = 20, j_rows = 6, k_rows = 6;  // quasicyclic
    std::size_t v = 100, a = 4, weight = 5;                            // bicycle_like / ncss
    std::size_t block = 100, expect_k = 0;
};

int cmd_build(CLI::App& app) {
    auto args = std::make_shared<BuildArgs>();
    auto* cmd = app.add_subcommand("build-code", "construct a code and write it to a file");
    cmd->add_option("--kind", args->kind, "bicycle|bibd|quasicyclic|bicycle_like|ncss_a|ncss_b")
        ->required();
    cmd->add_option("--out", args->out_path, "output path");
    cmd->add_option("--seed", args->seed, "construction seed (randomized kinds)");
    cmd->add_option("--n", args->n, "bicycle: code length");
    cmd->add_option("--m", args->m, "bicycle: generator count");
    cmd->add_option("--w", args->w, "bicycle: generator weight");
    cmd->add_option("--t", args->t, "bibd: number of base blocks");
    cmd->add_option("--alpha", args->alpha, "bibd: primitive element of GF(6t+1)");
    cmd->add_option("--P", args->pp, "quasicyclic: circulant size");
    cmd->add_option("--sigma", args->sigma, "quasicyclic: fulfillment");
    cmd->add_option("--tau", args->tau, "quasicyclic: perfume tau");
    cmd->add_option("--J", args->j_rows, "quasicyclic: X base rows");
    cmd->add_option("--K", args->k_rows, "quasicyclic: Z base rows");
    cmd->add_option("--v", args->v, "bicycle_like: circulant size");
    cmd->add_option("--a", args->a, "bicycle_like/ncss: block count");
    cmd->add_option("--weight", args->weight, "circulant weight");
    cmd->add_option("--block", args->block, "ncss: circulant block size");
    cmd->add_option("--expect-k", args->expect_k, "ncss: required k (reseeds until matched)");

    cmd->callback([args]() {
        const BuildArgs& a = *args;
        std::ostringstream params;
        StabilizerCode code = [&]() -> StabilizerCode {
            if (a.kind == "bicycle") {
                params << "n=" << a.n << " m=" << a.m << " w=" << a.w;
                return build_bicycle(a.n, a.m, a.w, a.seed);
            }
            if (a.kind == "bibd") {
                params << "t=" << a.t << " alpha=" << a.alpha;
                return build_bibd_bose(a.t, a.alpha);
            }
            if (a.kind == "quasicyclic") {
                params << "P=" << a.pp << " sigma=" << a.sigma << " tau=" << a.tau
                       << " J=" << a.j_rows << " K=" << a.k_rows;
                return build_quasicyclic(a.pp, a.sigma, a.tau, a.j_rows, a.k_rows);
            }
            if (a.kind == "bicycle_like") {
                params << "v=" << a.v << " a=" << a.a << " weight=" << a.weight;
                return build_bicycle_like(a.v, a.a, a.weight, a.seed);
            }
            if (a.kind == "ncss_a" || a.kind == "ncss_b") {
                params << "a=" << a.a << " block=" << a.block << " weight=" << a.weight;
                return a.kind == "ncss_a"
                           ? build_ncss_a(a.a, a.block, a.weight, a.seed, a.expect_k)
                           : build_ncss_b(a.a, a.block, a.weight, a.seed, a.expect_k);
            }
            throw CLI::ValidationError("--kind", "unknown construction kind: " + a.kind);
        }();
        write_code(code, a.out_path, params.str());
        std::cout << "wrote " << a.out_path << ": [[" << code.n() << "," << code.k() << "]] "
                  << code.kind() << (code.is_dual_containing() ? " (dual-containing CSS)"
                                     : code.is_css()           ? " (CSS)"
                                                               : " (non-CSS)")
                  << "\n";
    });
    return 0;
}

int cmd_validate(CLI::App& app) {
    auto path = std::make_shared<std::string>();
    auto* cmd = app.add_subcommand("validate", "check a code file");
    cmd->add_option("--code", *path, "code file")->required();
    cmd->callback([path]() {
        const StabilizerCode code = load_code(*path);
        std::string diag;
        const bool ok = code.validate(&diag);
        std::cout << "[[" << code.n() << "," << code.k() << "]] kind=" << code.kind()
                  << " m=" << code.m() << " css=" << code.is_css()
                  << " dual_containing=" << code.is_dual_containing() << "\n";
        if (!ok) {
            std::cout << "INVALID: " << diag << "\n";
            throw CLI::RuntimeError(1);
        }
        std::cout << "valid\n";
    });
    return 0;
}

struct SimArgs {
    std::string code_path;
    std::string decoder = "gf4";
    std::string channel = "depolarizing";
    std::string p_list = "0.01";
    std::string out_path = "results.csv";
    std::string baseline;
    double delta = -1.0;  // <0: use the per-family default
    int attempts = 100;
    int imax = 100;
    std::uint64_t min_errors = 100;
    std::uint64_t max_trials = 10'000'000;
    std::uint64_t seed = 1;
    int threads = 0;
    bool no_walltime = false;
};

int cmd_sim(CLI::App& app) {
    auto args = std::make_shared<SimArgs>();
    auto* cmd = app.add_subcommand("sim", "run a frame-error-rate sweep");
    cmd->add_option("--code", args->code_path, "code file")->required();
    cmd->add_option("--decoder", args->decoder,
                    "gf2|gf4|supernode|adjusted|efb-gf4|efb-supernode|perturb-gf4|"
                    "perturb-supernode|aug-gf2|aug-gf4|aug-supernode|combined");
    cmd->add_option("--channel", args->channel, "depolarizing|xz");
    cmd->add_option("--p", args->p_list, "comma separated physical error probabilities");
    cmd->add_option("--delta", args->delta, "perturbation strength / augmentation density");
    cmd->add_option("--attempts", args->attempts, "maximum decoding attempts N");
    cmd->add_option("--imax", args->imax, "BP iterations per attempt");
    cmd->add_option("--min-errors", args->min_errors, "stop after this many decoding errors");
    cmd->add_option("--max-trials", args->max_trials, "hard trial cap per point");
    cmd->add_option("--seed", args->seed, "base seed");
    cmd->add_option("--out", args->out_path, "CSV output path");
    cmd->add_option("--baseline", args->baseline, "also run this standard decoder on the same seeds");
    cmd->add_option("--threads", args->threads, "worker threads (0 = hardware)");
    cmd->add_flag("--no-walltime", args->no_walltime, "write wall_s as 0 for byte-stable output");

    cmd->callback([args]() {
        const StabilizerCode code = load_code(args->code_path);
        const auto decoder = parse_decoder_id(args->decoder);
        if (!decoder) throw CLI::ValidationError("--decoder", "unknown decoder " + args->decoder);
        const auto channel = parse_channel_kind(args->channel);
        if (!channel) throw CLI::ValidationError("--channel", "unknown channel " + args->channel);

        std::vector<double> ps;
        std::stringstream ss(args->p_list);
        std::string tok;
        while (std::getline(ss, tok, ',')) ps.push_back(std::stod(tok));
        if (ps.empty()) throw CLI::ValidationError("--p", "no p values");

        ExperimentSpec spec;
        spec.code = &code;
        spec.code_label = args->code_path;
        spec.channel = *channel;
        spec.decoder = *decoder;
        spec.policy.n_attempts = args->attempts;
        if (args->delta >= 0.0) {
            spec.policy.delta = args->delta;
        } else {
            spec.policy.delta = default_delta(code.kind(), *channel, *decoder).value_or(0.0);
        }
        spec.bp.i_max = args->imax;
        spec.min_errors = args->min_errors;
        spec.max_trials = args->max_trials;
        spec.base_seed = args->seed;
        spec.threads = args->threads > 0 ? args->threads
                                         : static_cast<int>(std::thread::hardware_concurrency());
        spec.report_walltime = !args->no_walltime;

        std::optional<DecoderId> baseline;
        if (!args->baseline.empty()) {
            baseline = parse_decoder_id(args->baseline);
            if (!baseline)
                throw CLI::ValidationError("--baseline", "unknown decoder " + args->baseline);
        }

        std::ofstream out(args->out_path);
        if (!out) throw CLI::RuntimeError(1);
        run_sweep(spec, ps, out, baseline);
        std::cout << "wrote " << args->out_path << "\n";
    });
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"syndrome belief propagation decoding of quantum LDPC codes"};
    app.require_subcommand(1);
    cmd_build(app);
    cmd_validate(app);
    cmd_sim(app);
    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
