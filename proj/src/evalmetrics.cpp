#include "evalmetrics.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>

namespace sigcx {

ConfusionCounts confusion(const std::vector<int>& pred, const GroundTruth& truth) {
    const int n = truth.n;
    if (static_cast<int>(pred.size()) != n * n)
        throw std::invalid_argument("prediction matrix size does not match n");
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (pred[i * n + j] != pred[j * n + i])
                throw std::invalid_argument("prediction matrix must be symmetric");
    ConfusionCounts c;
    for (int i = 0; i < n; ++i) {
        for (int j = i + 1; j < n; ++j) {
            bool p = pred[i * n + j] != 0;
            bool t = truth.has_edge(i, j);
            if (p && t) ++c.tp;
            else if (p && !t) ++c.fp;
            else if (!p && t) ++c.fn;
            else ++c.tn;
        }
    }
    return c;
}

namespace {
double ratio(long num, long den, bool& degenerate) {
    if (den == 0) {
        degenerate = true;
        return 0.0;
    }
    return static_cast<double>(num) / static_cast<double>(den);
}
}  // namespace

MetricsRecord metrics(const ConfusionCounts& c) {
    if (c.total() <= 0) throw std::invalid_argument("empty confusion counts");
    MetricsRecord m;
    m.tpe = ratio(c.tp, c.tp + c.fn, m.degenerate);
    m.tne = ratio(c.tn, c.tn + c.fp, m.degenerate);
    m.accuracy = ratio(c.tp + c.tn, c.total(), m.degenerate);
    m.precision = ratio(c.tp, c.tp + c.fp, m.degenerate);
    m.recall = m.tpe;
    if (m.precision + m.recall > 0.0)
        m.f1 = 2.0 * m.precision * m.recall / (m.precision + m.recall);
    else {
        m.f1 = 0.0;
        m.degenerate = true;
    }
    return m;
}

MetricsRecord aggregate(const std::vector<MetricsRecord>& records) {
    if (records.empty()) throw std::invalid_argument("no records to aggregate");
    MetricsRecord m;
    for (const auto& r : records) {
        m.tpe += r.tpe;
        m.tne += r.tne;
        m.accuracy += r.accuracy;
        m.precision += r.precision;
        m.recall += r.recall;
        m.f1 += r.f1;
        m.degenerate = m.degenerate || r.degenerate;
    }
    const double k = static_cast<double>(records.size());
    m.tpe /= k;
    m.tne /= k;
    m.accuracy /= k;
    m.precision /= k;
    m.recall /= k;
    m.f1 /= k;
    return m;
}

std::string format_table(const std::vector<int>& n_values,
                         const std::vector<MetricsRecord>& columns,
                         const std::vector<MetricsRecord>* reference) {
    if (n_values.size() != columns.size())
        throw std::invalid_argument("one metrics record per vertex count required");
    const char* row_names[] = {"TP", "TN", "Accuracy", "Precision", "Recall",
                               "F1-score"};
    auto field = [](const MetricsRecord& m, int r) {
        switch (r) {
            case 0: return m.tpe;
            case 1: return m.tne;
            case 2: return m.accuracy;
            case 3: return m.precision;
            case 4: return m.recall;
            default: return m.f1;
        }
    };
    std::ostringstream os;
    os << "Metric     ";
    for (int n : n_values) {
        os << "| n=" << n << "   ";
        if (reference) os << "(ref) ";
    }
    os << "\n";
    for (int r = 0; r < 6; ++r) {
        os << row_names[r];
        for (std::size_t i = std::string(row_names[r]).size(); i < 11; ++i) os << ' ';
        char buf[32];
        for (std::size_t c = 0; c < columns.size(); ++c) {
            std::snprintf(buf, sizeof buf, "| %.2f  ", field(columns[c], r));
            os << buf;
            if (reference) {
                std::snprintf(buf, sizeof buf, "%.2f  ", field((*reference)[c], r));
                os << buf;
            }
        }
        os << "\n";
    }
    return os.str();
}

}  // namespace sigcx
