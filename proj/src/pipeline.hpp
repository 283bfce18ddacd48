/**
 * pipeline.hpp — end-to-end runs shared by the C API and the CLI:
 * dataset coherence handling, inference on a loaded dataset, and the
 * multi-run benchmark table.
 */

#ifndef SIGCX_PIPELINE_HPP
#define SIGCX_PIPELINE_HPP

#include <optional>

#include "complex.hpp"
#include "evalmetrics.hpp"
#include "io.hpp"
#include "synthgen.hpp"

namespace sigcx {

/// Bring a dataset to a common channel count. Throws when channel counts
/// differ and mode is None.
std::vector<MultivariatePath> apply_coherence(
    const std::vector<MultivariatePath>& paths, CoherenceMode mode);

struct InferRunConfig {
    InferenceConfig inference;
    int n_tries = 50;
    int subset_len = 0;  // 0: 60% of the grid length
    double tau = 0.5;
    std::uint64_t seed = 0;
    int threads = 1;
};

struct InferResult {
    ProbabilityTensors prob;
    SimplicialComplex thresholded;
};

/// Probability tensors over random time subsets, then the tau-thresholded
/// complex. The common grid is the first vertex's grid.
InferResult run_inference(const std::vector<MultivariatePath>& paths,
                          const InferRunConfig& cfg);

struct BenchmarkConfig {
    SynthConfig synth;          // n is overridden per column
    InferRunConfig infer;
    std::vector<int> n_values = {5, 6, 7, 8};
    int runs = 20;
    std::uint64_t seed = 0;
};

struct BenchmarkResult {
    std::vector<int> n_values;
    std::vector<MetricsRecord> columns;  // mean over runs, per n
};

/// Seeded generate -> infer -> evaluate pipelines, averaged per vertex count.
BenchmarkResult run_benchmark(const BenchmarkConfig& cfg);

/// Reference values reported for the original experiments, same column order
/// as n_values = {5,6,7,8}.
std::vector<MetricsRecord> reference_table();

/// Order-2 adjacency of a complex as a flat row-major 0/1 matrix.
std::vector<int> complex_adjacency(const SimplicialComplex& complex);

}  // namespace sigcx

#endif
