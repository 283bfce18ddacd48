/**
 * capi.cpp — extern-C shim over the C++ core. Exceptions are caught at the
 * boundary and mapped to status codes; the message is kept thread-local.
 */

#include "sigcx.h"

#include <algorithm>
#include <cstring>
#include <memory>
#include <string>
#include <vector>

#include "io.hpp"
#include "pipeline.hpp"

namespace {

thread_local std::string g_last_error;

void set_error(const std::string& msg) { g_last_error = msg; }

template <typename Fn>
sigcx_status guarded(Fn&& fn) {
    try {
        fn();
        g_last_error.clear();
        return SIGCX_OK;
    } catch (const sigcx::ParseError& e) {
        set_error(e.what());
        return SIGCX_ERR_PARSE;
    } catch (const sigcx::IoError& e) {
        set_error(e.what());
        return SIGCX_ERR_IO;
    } catch (const std::invalid_argument& e) {
        set_error(e.what());
        return SIGCX_ERR_INVALID_ARGUMENT;
    } catch (const std::out_of_range& e) {
        set_error(e.what());
        return SIGCX_ERR_INVALID_ARGUMENT;
    } catch (const std::exception& e) {
        set_error(e.what());
        return SIGCX_ERR_INTERNAL;
    }
}

sigcx::SynthConfig to_cpp(const sigcx_synth_config& c) {
    sigcx::SynthConfig out;
    out.n = c.n;
    out.c = c.c;
    out.sigma = c.sigma;
    out.sigma_start = c.sigma_start;
    out.h = c.h;
    out.dt = c.dt;
    out.seed = c.seed;
    return out;
}

sigcx::InferRunConfig to_cpp(const sigcx_infer_config& c) {
    sigcx::InferRunConfig out;
    out.inference.order = c.order;
    out.inference.k_max = c.k_max;
    out.inference.lambda_ratio = c.lambda_ratio;
    out.inference.lambda = c.lambda;
    out.inference.r2_threshold = c.r2_threshold;
    out.inference.coherence = static_cast<sigcx::CoherenceMode>(c.coherence);
    out.n_tries = c.n_tries;
    out.subset_len = c.subset_len;
    out.tau = c.tau;
    out.seed = c.seed;
    out.threads = c.threads;
    return out;
}

sigcx_metrics to_c(const sigcx::MetricsRecord& m) {
    return {m.tpe, m.tne, m.accuracy, m.precision, m.recall, m.f1,
            m.degenerate ? 1 : 0};
}

sigcx::MetricsRecord to_cpp(const sigcx_metrics& m) {
    sigcx::MetricsRecord out;
    out.tpe = m.tpe;
    out.tne = m.tne;
    out.accuracy = m.accuracy;
    out.precision = m.precision;
    out.recall = m.recall;
    out.f1 = m.f1;
    out.degenerate = m.degenerate != 0;
    return out;
}

}  // namespace

struct sigcx_dataset {
    std::vector<sigcx::MultivariatePath> paths;
};

struct sigcx_prob_tensors {
    sigcx::ProbabilityTensors prob;
};

struct sigcx_complex {
    sigcx::SimplicialComplex complex{0};
};

extern "C" {

void sigcx_synth_config_default(sigcx_synth_config* cfg) {
    *cfg = {5, 0.45, 0.08, 2.5, 0.05, 0.01, 0};
}

void sigcx_infer_config_default(sigcx_infer_config* cfg) {
    *cfg = {3, 2, 0.1, -1.0, 0.67, 50, 0, 0.5, 0, 1, SIGCX_COHERENCE_NONE};
}

const char* sigcx_last_error(void) { return g_last_error.c_str(); }

sigcx_status sigcx_dataset_generate(const sigcx_synth_config* cfg,
                                    sigcx_dataset** out) {
    return guarded([&] {
        auto ds = std::make_unique<sigcx_dataset>();
        ds->paths = sigcx::simulate_dataset(to_cpp(*cfg));
        *out = ds.release();
    });
}

sigcx_status sigcx_dataset_load_csv(const char* path, sigcx_dataset** out) {
    return guarded([&] {
        auto ds = std::make_unique<sigcx_dataset>();
        ds->paths = sigcx::read_paths_csv(path);
        *out = ds.release();
    });
}

sigcx_status sigcx_dataset_save_csv(const sigcx_dataset* ds, const char* path) {
    return guarded([&] { sigcx::write_paths_csv(ds->paths, path); });
}

int sigcx_dataset_size(const sigcx_dataset* ds) {
    return static_cast<int>(ds->paths.size());
}

int sigcx_dataset_samples(const sigcx_dataset* ds, int entity) {
    if (entity < 0 || entity >= static_cast<int>(ds->paths.size())) return -1;
    return ds->paths[entity].samples();
}

int sigcx_dataset_channels(const sigcx_dataset* ds, int entity) {
    if (entity < 0 || entity >= static_cast<int>(ds->paths.size())) return -1;
    return ds->paths[entity].dim();
}

void sigcx_dataset_free(sigcx_dataset* ds) { delete ds; }

sigcx_status sigcx_ground_truth_save(int n, const char* path) {
    return guarded(
        [&] { sigcx::write_ground_truth(sigcx::ground_truth_adjacency(n), path); });
}

sigcx_status sigcx_infer(const sigcx_dataset* ds, const sigcx_infer_config* cfg,
                         sigcx_prob_tensors** out) {
    return guarded([&] {
        auto prob = std::make_unique<sigcx_prob_tensors>();
        prob->prob = sigcx::run_inference(ds->paths, to_cpp(*cfg)).prob;
        *out = prob.release();
    });
}

sigcx_status sigcx_prob_save(const sigcx_prob_tensors* prob, double tau,
                             const char* path) {
    return guarded([&] { sigcx::write_probability_tensors(prob->prob, tau, path); });
}

sigcx_status sigcx_prob_frequency(const sigcx_prob_tensors* prob,
                                  const int* vertices, int count, double* out) {
    return guarded([&] {
        if (count < 2) throw std::invalid_argument("hyperedge needs >= 2 vertices");
        sigcx::Simplex tuple(vertices, vertices + count);
        std::sort(tuple.begin(), tuple.end());
        *out = prob->prob.frequency(count, tuple);
    });
}

sigcx_status sigcx_prob_threshold(const sigcx_prob_tensors* prob, double tau,
                                  sigcx_complex** out) {
    return guarded([&] {
        auto cpx = std::make_unique<sigcx_complex>();
        cpx->complex = sigcx::threshold_complex(prob->prob, tau);
        *out = cpx.release();
    });
}

void sigcx_prob_free(sigcx_prob_tensors* prob) { delete prob; }

sigcx_status sigcx_complex_save(const sigcx_complex* cpx, double tau,
                                const char* path) {
    return guarded([&] { sigcx::write_complex(cpx->complex, tau, path); });
}

int sigcx_complex_vertex_count(const sigcx_complex* cpx) {
    return cpx->complex.n;
}

sigcx_status sigcx_complex_adjacency(const sigcx_complex* cpx, int* out) {
    return guarded([&] {
        auto adj = sigcx::complex_adjacency(cpx->complex);
        std::memcpy(out, adj.data(), adj.size() * sizeof(int));
    });
}

void sigcx_complex_free(sigcx_complex* cpx) { delete cpx; }

sigcx_status sigcx_evaluate_files(const char* pred_path, const char* truth_path,
                                  sigcx_metrics* out) {
    return guarded([&] {
        sigcx::GroundTruth truth = sigcx::read_ground_truth(truth_path);
        int n_pred = 0;
        auto pred = sigcx::read_adjacency_document(pred_path, n_pred);
        if (n_pred != truth.n)
            throw std::invalid_argument("prediction and truth disagree on n");
        *out = to_c(sigcx::metrics(sigcx::confusion(pred, truth)));
    });
}

sigcx_status sigcx_metrics_save(const sigcx_metrics* m, const char* path) {
    return guarded([&] { sigcx::write_metrics(to_cpp(*m), path); });
}

sigcx_status sigcx_benchmark(const sigcx_synth_config* synth,
                             const sigcx_infer_config* infer,
                             const int* n_values, int n_count, int runs,
                             uint64_t seed, sigcx_metrics* out) {
    return guarded([&] {
        if (n_count < 1 || runs < 1)
            throw std::invalid_argument("need at least one n value and one run");
        sigcx::BenchmarkConfig cfg;
        cfg.synth = to_cpp(*synth);
        cfg.infer = to_cpp(*infer);
        cfg.n_values.assign(n_values, n_values + n_count);
        cfg.runs = runs;
        cfg.seed = seed;
        auto result = sigcx::run_benchmark(cfg);
        for (int i = 0; i < n_count; ++i) out[i] = to_c(result.columns[i]);
    });
}

sigcx_status sigcx_format_table(const int* n_values, int n_count,
                                const sigcx_metrics* columns,
                                int with_reference, char* buffer,
                                size_t buffer_size, size_t* needed) {
    return guarded([&] {
        std::vector<int> ns(n_values, n_values + n_count);
        std::vector<sigcx::MetricsRecord> cols;
        for (int i = 0; i < n_count; ++i) cols.push_back(to_cpp(columns[i]));
        std::string table;
        if (with_reference) {
            if (ns != std::vector<int>{5, 6, 7, 8})
                throw std::invalid_argument(
                    "reference columns exist only for n = 5,6,7,8");
            auto ref = sigcx::reference_table();
            table = sigcx::format_table(ns, cols, &ref);
        } else {
            table = sigcx::format_table(ns, cols, nullptr);
        }
        if (needed) *needed = table.size();
        if (buffer && buffer_size > 0) {
            size_t count = std::min(buffer_size - 1, table.size());
            std::memcpy(buffer, table.data(), count);
            buffer[count] = '\0';
        }
    });
}

}  // extern "C"
