#include "signature.hpp"

#include <algorithm>
#include <cmath>
#include <set>

namespace sigcx {

TruncatedSignature TruncatedSignature::trivial(int dim, int order) {
    TruncatedSignature s;
    s.dim = dim;
    s.order = order;
    s.levels.resize(order);
    std::size_t sz = 1;
    for (int k = 1; k <= order; ++k) {
        sz *= dim;
        s.levels[k - 1].assign(sz, 0.0);
    }
    return s;
}

TruncatedSignature segment_signature(const Eigen::VectorXd& increment, int order) {
    if (order < 1) throw std::invalid_argument("signature order must be >= 1");
    int d = static_cast<int>(increment.size());
    TruncatedSignature s = TruncatedSignature::trivial(d, order);
    // level k = increment^{(x)k} / k!, built level by level
    for (int i = 0; i < d; ++i) s.levels[0][i] = increment(i);
    for (int k = 2; k <= order; ++k) {
        const auto& prev = s.levels[k - 2];
        auto& cur = s.levels[k - 1];
        for (std::size_t w = 0; w < prev.size(); ++w)
            for (int i = 0; i < d; ++i)
                cur[w * d + i] = prev[w] * increment(i) / k;
    }
    return s;
}

TruncatedSignature chen_product(const TruncatedSignature& s1,
                                const TruncatedSignature& s2) {
    if (s1.dim != s2.dim || s1.order != s2.order)
        throw std::invalid_argument("chen product needs matching dim and order");
    int d = s1.dim;
    TruncatedSignature out = TruncatedSignature::trivial(d, s1.order);
    for (int k = 1; k <= s1.order; ++k) {
        auto& lvl = out.levels[k - 1];
        // j = 0 and j = k terms use the implicit level-0 scalar 1
        for (std::size_t w = 0; w < lvl.size(); ++w)
            lvl[w] = s1.levels[k - 1][w] + s2.levels[k - 1][w];
        for (int j = 1; j < k; ++j) {
            const auto& a = s1.levels[j - 1];
            const auto& b = s2.levels[k - j - 1];
            for (std::size_t wa = 0; wa < a.size(); ++wa)
                for (std::size_t wb = 0; wb < b.size(); ++wb)
                    lvl[wa * b.size() + wb] += a[wa] * b[wb];
        }
    }
    return out;
}

TruncatedSignature path_signature(const MultivariatePath& path, int order) {
    if (path.samples() < 2)
        throw std::invalid_argument("path signature needs at least 2 samples");
    if (order < 1) throw std::invalid_argument("signature order must be >= 1");
    TruncatedSignature acc = segment_signature(
        (path.values.row(1) - path.values.row(0)).transpose(), order);
    for (int r = 2; r < path.samples(); ++r)
        acc = chen_product(
            acc, segment_signature(
                     (path.values.row(r) - path.values.row(r - 1)).transpose(), order));
    return acc;
}

MultivariatePath joint_path(const std::vector<const MultivariatePath*>& vertices) {
    if (vertices.empty())
        throw std::invalid_argument("joint path needs at least one vertex");
    const double a = vertices[0]->t_begin();
    const double b = vertices[0]->t_end();
    int total_dim = 0;
    bool same_grid = true;
    for (const auto* v : vertices) {
        if (v->t_begin() != a || v->t_end() != b)
            throw std::invalid_argument("joint path vertices must share [a,b]");
        total_dim += v->dim();
        if (v->grid != vertices[0]->grid) same_grid = false;
    }
    TimeGrid grid;
    if (same_grid) {
        grid = vertices[0]->grid;
    } else {
        std::set<double> times;
        for (const auto* v : vertices) times.insert(v->grid.begin(), v->grid.end());
        grid.assign(times.begin(), times.end());
    }
    Eigen::MatrixXd values(grid.size(), total_dim);
    for (std::size_t r = 0; r < grid.size(); ++r) {
        int col = 0;
        for (const auto* v : vertices) {
            if (same_grid)
                values.row(r).segment(col, v->dim()) = v->values.row(r);
            else
                values.row(r).segment(col, v->dim()) =
                    interpolate_at(*v, grid[r]).transpose();
            col += v->dim();
        }
    }
    return {std::move(grid), std::move(values), ""};
}

FeatureVector flatten(const TruncatedSignature& sig) {
    FeatureVector out;
    out.reserve(feature_length(sig.dim, sig.order));
    for (const auto& lvl : sig.levels) out.insert(out.end(), lvl.begin(), lvl.end());
    return out;
}

long feature_length(int dim, int order) {
    long total = 0, sz = 1;
    for (int k = 1; k <= order; ++k) {
        sz *= dim;
        total += sz;
    }
    return total;
}

}  // namespace sigcx
