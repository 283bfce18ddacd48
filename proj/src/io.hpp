/**
 * io.hpp — file formats: long-format CSV for path collections and JSON
 * documents for ground truth, probability tensors, thresholded complexes
 * and metrics.
 */

#ifndef SIGCX_IO_HPP
#define SIGCX_IO_HPP

#include <string>
#include <vector>

#include "complex.hpp"
#include "evalmetrics.hpp"
#include "synthgen.hpp"
#include "timeseries.hpp"

namespace sigcx {

struct IoError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct ParseError : std::runtime_error {
    int line;
    ParseError(const std::string& msg, int line_no)
        : std::runtime_error(msg + " (line " + std::to_string(line_no) + ")"),
          line(line_no) {}
};

/// Header `t,entity,channel,value`; rows sorted by (entity, channel, t).
void write_paths_csv(const std::vector<MultivariatePath>& paths,
                     const std::string& path);
std::vector<MultivariatePath> read_paths_csv(const std::string& path);

void write_ground_truth(const GroundTruth& gt, const std::string& path);
GroundTruth read_ground_truth(const std::string& path);

void write_probability_tensors(const ProbabilityTensors& prob, double tau,
                               const std::string& path);
ProbabilityTensors read_probability_tensors(const std::string& path);

void write_complex(const SimplicialComplex& complex, double tau,
                   const std::string& path);
SimplicialComplex read_complex(const std::string& path);

void write_metrics(const MetricsRecord& m, const std::string& path);

/// Order-2 adjacency (row-major n x n 0/1) from either a complex document
/// (`orders` key) or a ground-truth document (`edges` key).
std::vector<int> read_adjacency_document(const std::string& path, int& n_out);

}  // namespace sigcx

#endif
