/**
 * complex.hpp — simplicial complexes over labeled vertices and their
 * inference from path collections.
 *
 * Covers the downward-closed complex structure, link prediction by sparse
 * regression on signature features, whole-complex inference, hyper-adjacency
 * tensors, and the randomized time-subset estimate of per-hyperedge
 * probabilities with thresholding.
 */

#ifndef SIGCX_COMPLEX_HPP
#define SIGCX_COMPLEX_HPP

#include <cstdint>
#include <map>
#include <set>
#include <vector>

#include "lasso.hpp"
#include "signature.hpp"
#include "timeseries.hpp"

namespace sigcx {

/// Sorted distinct vertex indices; size k+1 for a k-simplex.
using Simplex = std::vector<int>;

struct SimplicialComplex {
    int n = 0;  // vertex count; all 0-simplices are implicitly present
    std::set<Simplex> simplices;

    explicit SimplicialComplex(int n_vertices = 0);

    bool contains(const Simplex& s) const { return simplices.count(s) > 0; }
    /// Insert the simplex together with all its nonempty subsets.
    void insert_with_closure(const Simplex& simplex);
    /// Every nonempty subset of a member is a member (exhaustive scan).
    bool is_downward_closed() const;
    /// Largest member size minus one.
    int max_dimension() const;
};

enum class CoherenceMode { None, Project, ZeroPad, TimeAugment };

struct InferenceConfig {
    int order = 3;              // signature truncation m
    int k_max = 2;              // K: max simplex size considered
    double lambda_ratio = 0.1;  // lambda = ratio * lambda_max
    double lambda = -1.0;       // >= 0 overrides the ratio rule
    double r2_threshold = 0.67;
    double eps_nonzero = 1e-8;
    double tol = 1e-7;
    int max_iter = 100000;
    CoherenceMode coherence = CoherenceMode::None;
};

/// Algorithm: regress the signature of vertex i on the signatures of every
/// size-k subset of the remaining vertices; return the subsets selected by
/// LASSO when the fit clears the R^2 gate, else the empty set.
std::set<Simplex> predict_k_link(const std::vector<MultivariatePath>& vertices,
                                 int i, int k, const InferenceConfig& cfg);

/// Union of per-vertex link predictions for k = 1..K-1, closed downward.
SimplicialComplex infer_complex(const std::vector<MultivariatePath>& vertices,
                                const InferenceConfig& cfg);

/// Order-i symmetric 0/1 tensor stored sparsely on sorted tuples.
struct HyperAdjacencyTensor {
    int order = 2;
    int n = 0;
    std::set<Simplex> entries;  // sorted tuples with value 1

    bool at(const Simplex& tuple) const;  // any permutation, repeats give 0
};

HyperAdjacencyTensor hyper_adjacency(const SimplicialComplex& complex, int order);

struct ProbabilityTensors {
    int n = 0;
    int n_tries = 0;
    // per order (2..K), sorted tuple -> count of tries containing it
    std::map<int, std::map<Simplex, int>> counts;

    double frequency(int order, const Simplex& sorted_tuple) const;
};

/// Algorithm: repeat n_tries times — draw l distinct timesteps uniformly,
/// restrict every vertex, infer the complex, accumulate hyper-adjacency
/// indicators. Deterministic for a fixed seed regardless of thread count.
ProbabilityTensors estimate_probability_tensors(
    const std::vector<MultivariatePath>& vertices, const InferenceConfig& cfg,
    const TimeGrid& grid, int n_tries, int l, std::uint64_t seed,
    int threads = 1);

/// Keep (with closure) every tuple whose frequency is >= tau.
SimplicialComplex threshold_complex(const ProbabilityTensors& prob, double tau);

}  // namespace sigcx

#endif
