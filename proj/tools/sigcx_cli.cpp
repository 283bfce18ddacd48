/**
 * sigcx_cli.cpp — command-line front end over the sigcx C API.
 *
 * Subcommands: generate, infer, evaluate, reproduce. Options can come from a
 * flat key=value config file (--config); command-line flags win. All
 * randomness flows from --seed. Exit codes: 0 ok, 1 I/O, 2 invalid argument,
 * 3 parse error, 4 internal.
 */

#include <cstdio>
#include <filesystem>
#include <map>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "sigcx.h"

namespace fs = std::filesystem;

namespace {

int fail(sigcx_status status) {
    std::fprintf(stderr, "error: %s\n", sigcx_last_error());
    return static_cast<int>(status);
}

struct Options {
    sigcx_synth_config synth{};
    sigcx_infer_config infer{};
    int runs = 20;
    std::uint64_t seed = 0;
    int threads = 1;
    std::string coherence;  // "", "project", "zero-pad", "time"
    std::string out_dir = ".";
};

void add_synth_options(CLI::App* cmd, Options& o) {
    // "--h" is the delay flag, so the help flag must not claim "-h"
    cmd->set_help_flag("--help", "Print this help message and exit");
    cmd->add_option("--n", o.synth.n, "Number of series in the chain");
    cmd->add_option("--c", o.synth.c, "Coupling strength (nonzero)");
    cmd->add_option("--sigma", o.synth.sigma, "Driving-noise std");
    cmd->add_option("--sigma-start", o.synth.sigma_start,
                    "Initial-condition std for the first series");
    cmd->add_option("--h", o.synth.h, "Delay (integer multiple of dt)");
    cmd->add_option("--dt", o.synth.dt, "Sampling step on [0,1]");
}

void add_infer_options(CLI::App* cmd, Options& o) {
    cmd->add_option("--order", o.infer.order, "Signature truncation order");
    cmd->add_option("--k-max", o.infer.k_max, "Max simplex size K");
    cmd->add_option("--lambda-ratio", o.infer.lambda_ratio,
                    "Penalty as a fraction of lambda_max");
    cmd->add_option("--lambda", o.infer.lambda,
                    "Absolute penalty (overrides --lambda-ratio when >= 0)");
    cmd->add_option("--r2-threshold", o.infer.r2_threshold,
                    "Model-quality gate on R^2");
    cmd->add_option("--n-tries", o.infer.n_tries,
                    "Random time-subset repetitions");
    cmd->add_option("--subset-len", o.infer.subset_len,
                    "Timesteps per try (0 = 60% of the grid)");
    cmd->add_option("--tau", o.infer.tau, "Frequency threshold for inclusion");
    cmd->add_option("--threads", o.threads,
                    "Worker count for tries (does not change results)");
    cmd->add_option("--coherence", o.coherence,
                    "Channel-count harmonization: project, zero-pad, or time")
        ->check(CLI::IsMember({"project", "zero-pad", "time"}));
}

void add_common_options(CLI::App* cmd, Options& o) {
    cmd->add_option("--seed", o.seed, "Master seed");
    cmd->add_option("--out", o.out_dir, "Output directory");
    cmd->set_config("--config", "", "Flat key=value config file; flags win");
}

int resolve(Options& o) {
    o.synth.seed = o.seed;
    o.infer.seed = o.seed;
    o.infer.threads = o.threads;
    if (o.coherence == "project")
        o.infer.coherence = SIGCX_COHERENCE_PROJECT;
    else if (o.coherence == "zero-pad")
        o.infer.coherence = SIGCX_COHERENCE_ZERO_PAD;
    else if (o.coherence == "time")
        o.infer.coherence = SIGCX_COHERENCE_TIME;
    else
        o.infer.coherence = SIGCX_COHERENCE_NONE;
    std::error_code ec;
    fs::create_directories(o.out_dir, ec);
    if (ec) {
        std::fprintf(stderr, "error: cannot create output directory '%s'\n",
                     o.out_dir.c_str());
        return 1;
    }
    return 0;
}

int cmd_generate(Options& o) {
    if (int rc = resolve(o)) return rc;
    sigcx_dataset* ds = nullptr;
    if (auto st = sigcx_dataset_generate(&o.synth, &ds)) return fail(st);
    std::string csv = o.out_dir + "/dataset.csv";
    std::string truth = o.out_dir + "/ground_truth.json";
    if (auto st = sigcx_dataset_save_csv(ds, csv.c_str())) {
        sigcx_dataset_free(ds);
        return fail(st);
    }
    if (auto st = sigcx_ground_truth_save(o.synth.n, truth.c_str())) {
        sigcx_dataset_free(ds);
        return fail(st);
    }
    std::printf("generated %d series, %d samples x %d channels each\n",
                sigcx_dataset_size(ds), sigcx_dataset_samples(ds, 0),
                sigcx_dataset_channels(ds, 0));
    std::printf("dataset: %s\nground truth: %s\n", csv.c_str(), truth.c_str());
    sigcx_dataset_free(ds);
    return 0;
}

int cmd_infer(Options& o, const std::string& data_path) {
    if (int rc = resolve(o)) return rc;
    sigcx_dataset* ds = nullptr;
    if (auto st = sigcx_dataset_load_csv(data_path.c_str(), &ds)) return fail(st);
    sigcx_prob_tensors* prob = nullptr;
    auto st = sigcx_infer(ds, &o.infer, &prob);
    sigcx_dataset_free(ds);
    if (st) return fail(st);
    std::string prob_path = o.out_dir + "/probability_tensors.json";
    std::string cpx_path = o.out_dir + "/complex.json";
    if (auto s2 = sigcx_prob_save(prob, o.infer.tau, prob_path.c_str())) {
        sigcx_prob_free(prob);
        return fail(s2);
    }
    sigcx_complex* cpx = nullptr;
    if (auto s2 = sigcx_prob_threshold(prob, o.infer.tau, &cpx)) {
        sigcx_prob_free(prob);
        return fail(s2);
    }
    auto s3 = sigcx_complex_save(cpx, o.infer.tau, cpx_path.c_str());
    sigcx_complex_free(cpx);
    sigcx_prob_free(prob);
    if (s3) return fail(s3);
    std::printf("probability tensors: %s\nthresholded complex: %s\n",
                prob_path.c_str(), cpx_path.c_str());
    return 0;
}

int cmd_evaluate(Options& o, const std::string& pred, const std::string& truth) {
    if (int rc = resolve(o)) return rc;
    sigcx_metrics m{};
    if (auto st = sigcx_evaluate_files(pred.c_str(), truth.c_str(), &m))
        return fail(st);
    std::string out = o.out_dir + "/metrics.json";
    if (auto st = sigcx_metrics_save(&m, out.c_str())) return fail(st);
    std::printf("TP         %.2f\nTN         %.2f\nAccuracy   %.2f\n"
                "Precision  %.2f\nRecall     %.2f\nF1-score   %.2f\n",
                m.tpe, m.tne, m.accuracy, m.precision, m.recall, m.f1);
    std::printf("metrics: %s\n", out.c_str());
    return 0;
}

int cmd_reproduce(Options& o) {
    if (int rc = resolve(o)) return rc;
    const int n_values[] = {5, 6, 7, 8};
    sigcx_metrics columns[4]{};
    if (auto st = sigcx_benchmark(&o.synth, &o.infer, n_values, 4, o.runs,
                                  o.seed, columns))
        return fail(st);
    size_t needed = 0;
    sigcx_format_table(n_values, 4, columns, 1, nullptr, 0, &needed);
    std::vector<char> buf(needed + 1);
    if (auto st = sigcx_format_table(n_values, 4, columns, 1, buf.data(),
                                     buf.size(), nullptr))
        return fail(st);
    std::string table_path = o.out_dir + "/table.txt";
    std::FILE* f = std::fopen(table_path.c_str(), "wb");
    if (!f) {
        std::fprintf(stderr, "error: cannot write '%s'\n", table_path.c_str());
        return 1;
    }
    std::fputs(buf.data(), f);
    std::fclose(f);
    std::fputs(buf.data(), stdout);
    std::printf("table: %s\n", table_path.c_str());
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    Options o;
    sigcx_synth_config_default(&o.synth);
    sigcx_infer_config_default(&o.infer);

    CLI::App app{"Simplicial-complex inference over multivariate time series"};
    app.require_subcommand(1);

    auto* gen = app.add_subcommand("generate", "Simulate the chain benchmark");
    add_synth_options(gen, o);
    add_common_options(gen, o);

    std::string data_path;
    auto* inf = app.add_subcommand("infer", "Infer probability tensors from a CSV");
    inf->add_option("data", data_path, "Dataset CSV (t,entity,channel,value)")
        ->required();
    add_infer_options(inf, o);
    add_common_options(inf, o);

    std::string pred_path, truth_path;
    auto* eval = app.add_subcommand("evaluate", "Score a prediction against truth");
    eval->add_option("prediction", pred_path, "Complex or edge-list document")
        ->required();
    eval->add_option("truth", truth_path, "Ground-truth document")->required();
    add_common_options(eval, o);

    auto* rep = app.add_subcommand("reproduce", "Averaged benchmark table, n=5..8");
    add_synth_options(rep, o);
    add_infer_options(rep, o);
    rep->add_option("--runs", o.runs, "Pipelines averaged per vertex count");
    add_common_options(rep, o);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e);
        return rc == 0 ? 0 : 2;
    }

    if (gen->parsed()) return cmd_generate(o);
    if (inf->parsed()) return cmd_infer(o, data_path);
    if (eval->parsed()) return cmd_evaluate(o, pred_path, truth_path);
    return cmd_reproduce(o);
}
