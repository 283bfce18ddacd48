#include "complex.hpp"

#include <algorithm>
#include <atomic>
#include <future>
#include <stdexcept>

#include "rng.hpp"

namespace sigcx {

namespace {

void check_simplex(const Simplex& s, int n) {
    if (s.empty()) throw std::invalid_argument("empty simplex");
    for (std::size_t i = 0; i < s.size(); ++i) {
        if (s[i] < 0 || s[i] >= n)
            throw std::invalid_argument("vertex index out of range");
        if (i > 0 && s[i] <= s[i - 1])
            throw std::invalid_argument("simplex vertices must be sorted and distinct");
    }
}

/// All size-k subsets of `pool` in lexicographic order.
std::vector<std::vector<int>> combinations(const std::vector<int>& pool, int k) {
    std::vector<std::vector<int>> out;
    std::vector<int> idx(k);
    for (int i = 0; i < k; ++i) idx[i] = i;
    int n = static_cast<int>(pool.size());
    if (k > n || k <= 0) return out;
    while (true) {
        std::vector<int> subset(k);
        for (int i = 0; i < k; ++i) subset[i] = pool[idx[i]];
        out.push_back(std::move(subset));
        int i = k - 1;
        while (i >= 0 && idx[i] == n - k + i) --i;
        if (i < 0) break;
        ++idx[i];
        for (int j = i + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
    }
    return out;
}

}  // namespace

SimplicialComplex::SimplicialComplex(int n_vertices) : n(n_vertices) {
    for (int v = 0; v < n; ++v) simplices.insert({v});
}

void SimplicialComplex::insert_with_closure(const Simplex& simplex) {
    check_simplex(simplex, n);
    const std::size_t sz = simplex.size();
    for (std::uint32_t mask = 1; mask < (1u << sz); ++mask) {
        Simplex sub;
        for (std::size_t b = 0; b < sz; ++b)
            if (mask & (1u << b)) sub.push_back(simplex[b]);
        simplices.insert(std::move(sub));
    }
}

bool SimplicialComplex::is_downward_closed() const {
    for (int v = 0; v < n; ++v)
        if (!simplices.count({v})) return false;
    for (const auto& s : simplices) {
        const std::size_t sz = s.size();
        for (std::uint32_t mask = 1; mask < (1u << sz); ++mask) {
            Simplex sub;
            for (std::size_t b = 0; b < sz; ++b)
                if (mask & (1u << b)) sub.push_back(s[b]);
            if (!simplices.count(sub)) return false;
        }
    }
    return true;
}

int SimplicialComplex::max_dimension() const {
    std::size_t best = 1;
    for (const auto& s : simplices) best = std::max(best, s.size());
    return static_cast<int>(best) - 1;
}

std::set<Simplex> predict_k_link(const std::vector<MultivariatePath>& vertices,
                                 int i, int k, const InferenceConfig& cfg) {
    const int n = static_cast<int>(vertices.size());
    if (i < 0 || i >= n) throw std::invalid_argument("vertex index out of range");
    if (k < 1 || k > n - 1)
        throw std::invalid_argument("link dimension k must satisfy 1 <= k <= n-1");
    const int d = vertices[0].dim();
    for (const auto& v : vertices) {
        if (v.dim() != d)
            throw std::invalid_argument(
                "heterogeneous channel counts: apply a coherence augmentation first");
        if (v.t_begin() != vertices[0].t_begin() || v.t_end() != vertices[0].t_end())
            throw std::invalid_argument("vertices must share the interval [a,b]");
    }

    // response: vertex i zero-padded to the joint dimension k*d so feature
    // lengths match the predictor subset signatures
    MultivariatePath response_path =
        (k == 1) ? vertices[i] : zero_pad_augment(vertices[i], k * d);
    FeatureVector response = flatten(path_signature(response_path, cfg.order));
    const auto L = static_cast<Eigen::Index>(response.size());

    std::vector<int> others;
    for (int v = 0; v < n; ++v)
        if (v != i) others.push_back(v);
    auto subsets = combinations(others, k);

    Design design;
    design.X.resize(L, static_cast<Eigen::Index>(subsets.size()));
    design.y = Eigen::Map<const Eigen::VectorXd>(response.data(), L);
    for (std::size_t c = 0; c < subsets.size(); ++c) {
        std::vector<const MultivariatePath*> members;
        for (int v : subsets[c]) members.push_back(&vertices[v]);
        FeatureVector col = flatten(path_signature(joint_path(members), cfg.order));
        design.X.col(static_cast<Eigen::Index>(c)) =
            Eigen::Map<const Eigen::VectorXd>(col.data(), L);
    }

    LassoOptions opts;
    opts.lambda = cfg.lambda;
    opts.lambda_ratio = cfg.lambda_ratio;
    opts.tol = cfg.tol;
    opts.max_iter = cfg.max_iter;
    opts.eps_nonzero = cfg.eps_nonzero;
    LassoFit fit = lasso_fit(design, opts);

    std::set<Simplex> link;
    if (fit.degenerate || !(fit.r2 > cfg.r2_threshold)) return link;
    for (int c : fit.support) link.insert(subsets[c]);
    return link;
}

SimplicialComplex infer_complex(const std::vector<MultivariatePath>& vertices,
                                const InferenceConfig& cfg) {
    const int n = static_cast<int>(vertices.size());
    if (n < 2) throw std::invalid_argument("inference needs at least 2 vertices");
    if (cfg.k_max < 2) throw std::invalid_argument("K must be >= 2");
    SimplicialComplex complex(n);
    for (int i = 0; i < n; ++i) {
        for (int k = 1; k <= cfg.k_max - 1 && k <= n - 1; ++k) {
            for (const auto& sigma : predict_k_link(vertices, i, k, cfg)) {
                Simplex s = sigma;
                s.push_back(i);
                std::sort(s.begin(), s.end());
                complex.insert_with_closure(s);
            }
        }
    }
    return complex;
}

bool HyperAdjacencyTensor::at(const Simplex& tuple) const {
    if (static_cast<int>(tuple.size()) != order) return false;
    Simplex sorted = tuple;
    std::sort(sorted.begin(), sorted.end());
    for (std::size_t i = 1; i < sorted.size(); ++i)
        if (sorted[i] == sorted[i - 1]) return false;  // repeated index
    return entries.count(sorted) > 0;
}

HyperAdjacencyTensor hyper_adjacency(const SimplicialComplex& complex, int order) {
    if (order < 2 || order > complex.n)
        throw std::invalid_argument("tensor order must satisfy 2 <= order <= n");
    HyperAdjacencyTensor t;
    t.order = order;
    t.n = complex.n;
    for (const auto& s : complex.simplices)
        if (static_cast<int>(s.size()) == order) t.entries.insert(s);
    return t;
}

double ProbabilityTensors::frequency(int order, const Simplex& sorted_tuple) const {
    auto per_order = counts.find(order);
    if (per_order == counts.end()) return 0.0;
    auto it = per_order->second.find(sorted_tuple);
    if (it == per_order->second.end()) return 0.0;
    return static_cast<double>(it->second) / static_cast<double>(n_tries);
}

namespace {

using TryResult = std::map<int, std::set<Simplex>>;

TryResult run_one_try(const std::vector<MultivariatePath>& vertices,
                      const InferenceConfig& cfg, const TimeGrid& grid, int l,
                      std::uint64_t seed, int try_index) {
    auto rng = make_rng(seed, "try", static_cast<std::uint64_t>(try_index));
    const int N = static_cast<int>(grid.size());

    // l distinct indices without replacement (partial Fisher-Yates), sorted
    std::vector<int> pool(N);
    for (int i = 0; i < N; ++i) pool[i] = i;
    for (int i = 0; i < l; ++i) {
        std::uniform_int_distribution<int> pick(i, N - 1);
        std::swap(pool[i], pool[pick(rng)]);
    }
    std::vector<int> indices(pool.begin(), pool.begin() + l);
    std::sort(indices.begin(), indices.end());

    std::vector<MultivariatePath> restricted;
    restricted.reserve(vertices.size());
    for (const auto& v : vertices) {
        if (v.grid == grid) {
            restricted.push_back(restrict_to_indices(v, indices));
        } else {
            // vertex on its own grid: interpolate at the selected times
            TimeGrid times;
            Eigen::MatrixXd values(l, v.dim());
            for (int r = 0; r < l; ++r) {
                times.push_back(grid[indices[r]]);
                values.row(r) = interpolate_at(v, grid[indices[r]]).transpose();
            }
            restricted.emplace_back(std::move(times), std::move(values), v.label);
        }
    }

    SimplicialComplex complex = infer_complex(restricted, cfg);
    TryResult result;
    for (int order = 2; order <= cfg.k_max; ++order)
        result[order] = hyper_adjacency(complex, order).entries;
    return result;
}

}  // namespace

ProbabilityTensors estimate_probability_tensors(
    const std::vector<MultivariatePath>& vertices, const InferenceConfig& cfg,
    const TimeGrid& grid, int n_tries, int l, std::uint64_t seed, int threads) {
    if (l < 4 || l > static_cast<int>(grid.size()))
        throw std::invalid_argument("subset length must satisfy 4 <= l <= grid length");
    if (n_tries < 1) throw std::invalid_argument("n_tries must be >= 1");

    ProbabilityTensors prob;
    prob.n = static_cast<int>(vertices.size());
    prob.n_tries = n_tries;
    for (int order = 2; order <= cfg.k_max; ++order) prob.counts[order];

    std::vector<TryResult> results(n_tries);
    if (threads <= 1) {
        for (int j = 0; j < n_tries; ++j)
            results[j] = run_one_try(vertices, cfg, grid, l, seed, j);
    } else {
        // fixed per-try substreams keep the outcome independent of scheduling
        std::vector<std::future<void>> workers;
        std::atomic<int> next{0};
        for (int w = 0; w < threads; ++w)
            workers.push_back(std::async(std::launch::async, [&] {
                for (int j = next.fetch_add(1); j < n_tries; j = next.fetch_add(1))
                    results[j] = run_one_try(vertices, cfg, grid, l, seed, j);
            }));
        for (auto& f : workers) f.get();
    }
    for (const auto& res : results)
        for (const auto& [order, tuples] : res)
            for (const auto& tuple : tuples) prob.counts[order][tuple] += 1;
    return prob;
}

SimplicialComplex threshold_complex(const ProbabilityTensors& prob, double tau) {
    if (!(tau > 0.0 && tau <= 1.0))
        throw std::invalid_argument("threshold tau must lie in (0, 1]");
    SimplicialComplex complex(prob.n);
    for (const auto& [order, tuples] : prob.counts)
        for (const auto& [tuple, count] : tuples)
            if (static_cast<double>(count) / prob.n_tries >= tau)
                complex.insert_with_closure(tuple);
    return complex;
}

}  // namespace sigcx
