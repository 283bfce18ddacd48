/**
 * evalmetrics.hpp — edge-set scoring against ground truth.
 *
 * All counts are over unordered off-diagonal vertex pairs; the diagonal is
 * excluded since the inference cannot emit self-loops.
 */

#ifndef SIGCX_EVALMETRICS_HPP
#define SIGCX_EVALMETRICS_HPP

#include <string>
#include <vector>

#include "synthgen.hpp"

namespace sigcx {

struct ConfusionCounts {
    long tp = 0, fp = 0, tn = 0, fn = 0;
    long total() const { return tp + fp + tn + fn; }
};

struct MetricsRecord {
    double tpe = 0, tne = 0, accuracy = 0, precision = 0, recall = 0, f1 = 0;
    bool degenerate = false;  // some ratio had a zero denominator
};

/// pred is a symmetric n x n 0/1 matrix flattened row-major.
ConfusionCounts confusion(const std::vector<int>& pred, const GroundTruth& truth);

MetricsRecord metrics(const ConfusionCounts& counts);

/// Componentwise mean over runs.
MetricsRecord aggregate(const std::vector<MetricsRecord>& records);

/// Plain-text table, one metric per row (TP, TN, Accuracy, Precision,
/// Recall, F1-score), one column per vertex count.
std::string format_table(const std::vector<int>& n_values,
                         const std::vector<MetricsRecord>& columns,
                         const std::vector<MetricsRecord>* reference = nullptr);

}  // namespace sigcx

#endif
