/**
 * signature.hpp — truncated path signatures of piecewise-linear paths.
 *
 * Per-segment signatures are tensor exponentials of the increment; whole-path
 * signatures fold them with Chen's identity. Level-k tensors are stored dense
 * with d^k entries, word (i1..ik) at index i1*d^(k-1)+...+ik.
 */

#ifndef SIGCX_SIGNATURE_HPP
#define SIGCX_SIGNATURE_HPP

#include <vector>

#include "timeseries.hpp"

namespace sigcx {

struct TruncatedSignature {
    int dim = 0;
    int order = 0;
    // levels[k-1] holds level k (d^k entries); level 0 is implicitly 1.
    std::vector<std::vector<double>> levels;

    const std::vector<double>& level(int k) const { return levels[k - 1]; }
    std::vector<double>& level(int k) { return levels[k - 1]; }

    static TruncatedSignature trivial(int dim, int order);
};

/// Length d + d^2 + ... + d^m, levels concatenated in word-lexicographic order.
using FeatureVector = std::vector<double>;

/// Signature of a single linear segment: level k = increment^{tensor k} / k!.
TruncatedSignature segment_signature(const Eigen::VectorXd& increment, int order);

/// Chen product: level k of the output is sum_j s1.level(j) (x) s2.level(k-j).
TruncatedSignature chen_product(const TruncatedSignature& s1,
                                const TruncatedSignature& s2);

/// Signature of the whole path, folding segment signatures left to right.
TruncatedSignature path_signature(const MultivariatePath& path, int order);

/// Channel-stack several vertices into one path on the union grid.
/// All constituents must share the same interval [a,b].
MultivariatePath joint_path(const std::vector<const MultivariatePath*>& vertices);

FeatureVector flatten(const TruncatedSignature& sig);

/// d + d^2 + ... + d^m.
long feature_length(int dim, int order);

}  // namespace sigcx

#endif
