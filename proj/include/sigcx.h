/**
 * sigcx.h — C API for simplicial-complex inference over collections of
 * multivariate time series via truncated path signatures and sparse
 * regression.
 *
 * All objects are opaque handles created and destroyed by the library.
 * Every fallible call returns a sigcx_status; on failure,
 * sigcx_last_error() describes what went wrong (thread-local).
 */

#ifndef SIGCX_H
#define SIGCX_H

#include <stddef.h>
#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

typedef enum sigcx_status {
    SIGCX_OK = 0,
    SIGCX_ERR_IO = 1,
    SIGCX_ERR_INVALID_ARGUMENT = 2,
    SIGCX_ERR_PARSE = 3,
    SIGCX_ERR_INTERNAL = 4
} sigcx_status;

typedef enum sigcx_coherence {
    SIGCX_COHERENCE_NONE = 0,     /* error out on mixed channel counts */
    SIGCX_COHERENCE_PROJECT = 1,  /* project all entities to the common channels */
    SIGCX_COHERENCE_ZERO_PAD = 2, /* zero-pad all entities to the max channels */
    SIGCX_COHERENCE_TIME = 3      /* zero-pad, then prepend a time channel */
} sigcx_coherence;

typedef struct sigcx_dataset sigcx_dataset;
typedef struct sigcx_prob_tensors sigcx_prob_tensors;
typedef struct sigcx_complex sigcx_complex;

/* Chain-of-delayed-ODEs generator parameters. */
typedef struct sigcx_synth_config {
    int n;               /* vertex count, >= 2 */
    double c;            /* coupling, nonzero */
    double sigma;        /* driving-noise std */
    double sigma_start;  /* initial-condition std of the first vertex */
    double h;            /* delay, integer multiple of dt */
    double dt;           /* step on [0,1] */
    uint64_t seed;
} sigcx_synth_config;

typedef struct sigcx_infer_config {
    int order;           /* signature truncation level */
    int k_max;           /* max simplex size considered (K >= 2) */
    double lambda_ratio; /* lambda = ratio * lambda_max */
    double lambda;       /* >= 0 overrides lambda_ratio; < 0 uses the ratio */
    double r2_threshold; /* model-quality gate */
    int n_tries;         /* random time-subset repetitions */
    int subset_len;      /* timesteps per try; 0 = 60%% of the grid */
    double tau;          /* inclusion threshold on hyperedge frequency */
    uint64_t seed;
    int threads;         /* worker count for tries; results do not depend on it */
    sigcx_coherence coherence;
} sigcx_infer_config;

typedef struct sigcx_metrics {
    double tpe, tne, accuracy, precision, recall, f1;
    int degenerate; /* some ratio had a zero denominator */
} sigcx_metrics;

void sigcx_synth_config_default(sigcx_synth_config* cfg);
void sigcx_infer_config_default(sigcx_infer_config* cfg);

/* Message for the most recent failure on this thread; empty string if none. */
const char* sigcx_last_error(void);

/* ---- datasets ---- */
sigcx_status sigcx_dataset_generate(const sigcx_synth_config* cfg,
                                    sigcx_dataset** out);
sigcx_status sigcx_dataset_load_csv(const char* path, sigcx_dataset** out);
sigcx_status sigcx_dataset_save_csv(const sigcx_dataset* ds, const char* path);
int sigcx_dataset_size(const sigcx_dataset* ds);
int sigcx_dataset_samples(const sigcx_dataset* ds, int entity);
int sigcx_dataset_channels(const sigcx_dataset* ds, int entity);
void sigcx_dataset_free(sigcx_dataset* ds);

/* Tridiagonal chain ground truth as a {n, edges} document. */
sigcx_status sigcx_ground_truth_save(int n, const char* path);

/* ---- inference ---- */
sigcx_status sigcx_infer(const sigcx_dataset* ds, const sigcx_infer_config* cfg,
                         sigcx_prob_tensors** out);
sigcx_status sigcx_prob_save(const sigcx_prob_tensors* prob, double tau,
                             const char* path);
/* Frequency of the hyperedge over `count` distinct vertices. */
sigcx_status sigcx_prob_frequency(const sigcx_prob_tensors* prob,
                                  const int* vertices, int count, double* out);
sigcx_status sigcx_prob_threshold(const sigcx_prob_tensors* prob, double tau,
                                  sigcx_complex** out);
void sigcx_prob_free(sigcx_prob_tensors* prob);

sigcx_status sigcx_complex_save(const sigcx_complex* cpx, double tau,
                               const char* path);
int sigcx_complex_vertex_count(const sigcx_complex* cpx);
/* Order-2 skeleton as a row-major n*n 0/1 matrix. */
sigcx_status sigcx_complex_adjacency(const sigcx_complex* cpx, int* out);
void sigcx_complex_free(sigcx_complex* cpx);

/* ---- evaluation ---- */
/* pred: complex or ground-truth document; truth: ground-truth document. */
sigcx_status sigcx_evaluate_files(const char* pred_path, const char* truth_path,
                                  sigcx_metrics* out);
sigcx_status sigcx_metrics_save(const sigcx_metrics* m, const char* path);

/* Seeded generate -> infer -> evaluate, `runs` times per entry of n_values;
 * writes one averaged record per entry into `out`. */
sigcx_status sigcx_benchmark(const sigcx_synth_config* synth,
                             const sigcx_infer_config* infer,
                             const int* n_values, int n_count, int runs,
                             uint64_t seed, sigcx_metrics* out);

/* Fixed-layout results table; set with_reference to print the published
 * values beside each column (n_values must then be 5,6,7,8). Returns the
 * number of bytes needed (excluding NUL); writes at most buffer_size. */
sigcx_status sigcx_format_table(const int* n_values, int n_count,
                                const sigcx_metrics* columns,
                                int with_reference, char* buffer,
                                size_t buffer_size, size_t* needed);

#ifdef __cplusplus
}
#endif

#endif /* SIGCX_H */
