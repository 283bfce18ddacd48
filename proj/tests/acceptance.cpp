// Acceptance suite: one pass/fail line per criterion, nonzero exit when any
// criterion fails. Criteria can be selected by number on the command line.

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "complex.hpp"
#include "io.hpp"
#include "lasso.hpp"
#include "oracles.hpp"
#include "pipeline.hpp"
#include "rng.hpp"
#include "signature.hpp"
#include "synthgen.hpp"

using namespace sigcx;
namespace fs = std::filesystem;

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
    return std::chrono::duration<double>(Clock::now() - start).count();
}

bool report(int criterion, bool pass, const std::string& detail) {
    std::printf("%s criterion %d: %s\n", pass ? "PASS" : "FAIL", criterion,
                detail.c_str());
    std::fflush(stdout);
    return pass;
}

// --- criterion 1: signature correctness against the Riemann oracle ---------
bool criterion1() {
    auto start = Clock::now();
    std::mt19937_64 rng(2024);
    double worst = 0.0;
    for (int trial = 0; trial < 100; ++trial) {
        auto p = test::random_path(rng, 5, 2);
        auto sig = path_signature(p, 4);
        auto oracle = test::riemann_signature(p, 4, 40000);
        worst = std::max(worst, test::max_relative_error(sig, oracle));
    }
    bool oracle_ok = worst < 1e-2;

    TimeGrid grid{0.0, 0.5, 1.0};
    Eigen::MatrixXd values(3, 2);
    values << 0, 0, 1, 0, 1, 1;
    auto s = path_signature({grid, values, ""}, 2);
    bool analytic_ok = std::abs(s.level(2)[1] - 1.0) < 1e-12 &&
                       std::abs(s.level(2)[2]) < 1e-12 &&
                       std::abs(s.level(1)[0] - 1.0) < 1e-12 &&
                       std::abs(s.level(2)[0] - 0.5) < 1e-12;
    double elapsed = seconds_since(start);
    char buf[160];
    std::snprintf(buf, sizeof buf,
                  "signature oracle: worst rel err %.2e (<1e-2), analytic %s, "
                  "%.1fs (<30s)",
                  worst, analytic_ok ? "exact" : "WRONG", elapsed);
    return report(1, oracle_ok && analytic_ok && elapsed < 30.0, buf);
}

// --- criterion 2: algebraic property suite, 1000 trials each ---------------
bool criterion2() {
    std::mt19937_64 rng(555);
    std::uniform_int_distribution<int> seg_dist(2, 6), dim_dist(1, 3);
    int chen_bad = 0, shuffle_bad = 0, translate_bad = 0, reverse_bad = 0;
    for (int trial = 0; trial < 1000; ++trial) {
        int segments = seg_dist(rng), dim = dim_dist(rng);
        auto p = test::random_path(rng, segments, dim);
        auto s = path_signature(p, 3);

        std::uniform_int_distribution<int> split_dist(1, segments - 1);
        int split = split_dist(rng);
        std::vector<int> left, right;
        for (int i = 0; i <= split; ++i) left.push_back(i);
        for (int i = split; i <= segments; ++i) right.push_back(i);
        auto glued = chen_product(path_signature(restrict_to_indices(p, left), 3),
                                  path_signature(restrict_to_indices(p, right), 3));
        for (int k = 1; k <= 3; ++k)
            for (std::size_t w = 0; w < s.level(k).size(); ++w)
                if (std::abs(glued.level(k)[w] - s.level(k)[w]) >= 1e-10)
                    ++chen_bad;

        for (int i = 0; i < dim; ++i)
            for (int j = 0; j < dim; ++j)
                if (std::abs(s.level(1)[i] * s.level(1)[j] -
                             s.level(2)[i * dim + j] -
                             s.level(2)[j * dim + i]) >= 1e-10)
                    ++shuffle_bad;

        // dyadic samples + integer shift keep the increments bitwise equal
        Eigen::MatrixXd dyadic = (p.values * 1024.0).array().round() / 1024.0;
        Eigen::RowVectorXd shift(dim);
        std::uniform_int_distribution<int> shift_dist(-8, 8);
        for (int c = 0; c < dim; ++c) shift(c) = shift_dist(rng);
        auto sd = path_signature({p.grid, dyadic, ""}, 3);
        auto s2 = path_signature({p.grid, dyadic.rowwise() + shift, ""}, 3);
        for (int k = 1; k <= 3; ++k)
            if (sd.level(k) != s2.level(k)) ++translate_bad;

        auto inv = chen_product(
            s, path_signature({p.grid, p.values.colwise().reverse(), ""}, 3));
        for (int k = 1; k <= 3; ++k)
            for (double v : inv.level(k))
                if (std::abs(v) >= 1e-10) ++reverse_bad;
    }
    char buf[160];
    std::snprintf(buf, sizeof buf,
                  "1000 trials: chen %d, shuffle %d, translation %d, "
                  "reversal %d violations",
                  chen_bad, shuffle_bad, translate_bad, reverse_bad);
    return report(2, !chen_bad && !shuffle_bad && !translate_bad && !reverse_bad,
                  buf);
}

// --- criterion 3: LASSO oracles -------------------------------------------
bool criterion3() {
    std::mt19937_64 rng(808);
    std::normal_distribution<double> gauss(0.0, 1.0);
    auto random_design = [&](int L, int p) {
        Design d;
        d.X.resize(L, p);
        d.y.resize(L);
        for (int r = 0; r < L; ++r) {
            for (int c = 0; c < p; ++c) d.X(r, c) = gauss(rng);
            d.y(r) = gauss(rng);
        }
        return d;
    };

    // orthonormal closed form
    double worst_ortho = 0.0;
    for (int trial = 0; trial < 20; ++trial) {
        int L = 60, p = 8;
        Design d = random_design(L, p);
        Eigen::MatrixXd M(L, p + 1);
        M.col(0).setOnes();
        M.rightCols(p) = d.X;
        Eigen::HouseholderQR<Eigen::MatrixXd> qr(M);
        Eigen::MatrixXd Q =
            qr.householderQ() * Eigen::MatrixXd::Identity(L, p + 1);
        d.X = std::sqrt(static_cast<double>(L)) * Q.rightCols(p);
        LassoOptions opts;
        opts.lambda = 0.07;
        opts.tol = 1e-12;
        auto fit = lasso_fit(d, opts);
        Eigen::VectorXd yc = d.y.array() - d.y.mean();
        for (int j = 0; j < p; ++j) {
            double z = d.X.col(j).dot(yc) / L;
            double expected = (z > opts.lambda)   ? z - opts.lambda
                              : (z < -opts.lambda) ? z + opts.lambda
                                                   : 0.0;
            worst_ortho = std::max(worst_ortho, std::abs(fit.beta(j) - expected));
        }
    }

    // lambda = 0 equals OLS
    double worst_ols = 0.0;
    for (int trial = 0; trial < 20; ++trial) {
        Design d = random_design(80, 6);
        LassoOptions opts;
        opts.lambda = 0.0;
        opts.tol = 1e-12;
        auto fit = lasso_fit(d, opts);
        Eigen::MatrixXd Xc = d.X.rowwise() - d.X.colwise().mean();
        Eigen::VectorXd yc = d.y.array() - d.y.mean();
        Eigen::VectorXd ols = Xc.colPivHouseholderQr().solve(yc);
        worst_ols = std::max(worst_ols, (fit.beta - ols).cwiseAbs().maxCoeff());
    }

    // KKT residuals at convergence for 100 random problems
    int kkt_bad = 0;
    std::uniform_int_distribution<int> Ld(10, 200), pd(2, 50);
    for (int trial = 0; trial < 100; ++trial) {
        Design d = random_design(Ld(rng), pd(rng));
        LassoOptions opts;
        auto fit = lasso_fit(d, opts);
        auto s = standardize(d);
        const double L = static_cast<double>(s.X.rows());
        Eigen::VectorXd beta_std(fit.beta.size());
        for (int j = 0; j < fit.beta.size(); ++j)
            beta_std(j) = fit.beta(j) * s.col_scale(j);
        Eigen::VectorXd r = s.y - s.X * beta_std;
        for (int j = 0; j < fit.beta.size(); ++j) {
            if (s.constant_column[j]) continue;
            double g = s.X.col(j).dot(r) / L;
            if (beta_std(j) == 0.0) {
                if (std::abs(g) > fit.lambda + 10 * opts.tol) ++kkt_bad;
            } else if (std::abs(g - fit.lambda * (beta_std(j) > 0 ? 1 : -1)) >
                       10 * opts.tol) {
                ++kkt_bad;
            }
        }
    }
    char buf[160];
    std::snprintf(buf, sizeof buf,
                  "ortho max err %.2e (<1e-6), OLS max err %.2e (<1e-6), "
                  "KKT violations %d",
                  worst_ortho, worst_ols, kkt_bad);
    return report(3, worst_ortho < 1e-6 && worst_ols < 1e-6 && kkt_bad == 0, buf);
}

// --- criterion 4: benchmark bands around the published table ---------------
bool criterion4() {
    auto start = Clock::now();
    BenchmarkConfig cfg;
    cfg.runs = 20;
    cfg.seed = 20240817;
    auto result = run_benchmark(cfg);
    auto ref = reference_table();
    bool ok = true;
    std::string detail = "mean acc/recall per n:";
    for (std::size_t i = 0; i < result.columns.size(); ++i) {
        const auto& m = result.columns[i];
        char buf[96];
        std::snprintf(buf, sizeof buf, " n=%d %.2f/%.2f", result.n_values[i],
                      m.accuracy, m.recall);
        detail += buf;
        if (m.accuracy < 0.60 || m.recall < 0.60) ok = false;
        if (std::abs(m.accuracy - ref[i].accuracy) > 0.15) ok = false;
        if (std::abs(m.recall - ref[i].recall) > 0.15) ok = false;
    }
    double elapsed = seconds_since(start);
    char buf[64];
    std::snprintf(buf, sizeof buf, ", %.0fs (<600s)", elapsed);
    detail += buf;
    return report(4, ok && elapsed < 600.0, detail);
}

// --- criterion 5: edge vs non-edge separation and AUC -----------------------
bool criterion5() {
    const int runs = 20;
    std::vector<double> edge_freqs, non_edge_freqs;
    GroundTruth truth = ground_truth_adjacency(5);
    for (int run = 0; run < runs; ++run) {
        SynthConfig synth;
        synth.n = 5;
        synth.seed = derive_seed(99, "c5-gen", run);
        auto ds = simulate_dataset(synth);
        InferRunConfig infer;
        infer.seed = derive_seed(99, "c5-infer", run);
        auto result = run_inference(ds, infer);
        for (int i = 0; i < 5; ++i)
            for (int j = i + 1; j < 5; ++j) {
                double f = result.prob.frequency(2, {i, j});
                (truth.has_edge(i, j) ? edge_freqs : non_edge_freqs).push_back(f);
            }
    }
    double mean_edge = 0, mean_non = 0;
    for (double f : edge_freqs) mean_edge += f;
    for (double f : non_edge_freqs) mean_non += f;
    mean_edge /= edge_freqs.size();
    mean_non /= non_edge_freqs.size();
    // AUC by pairwise comparison (ties count one half)
    double auc = 0.0;
    for (double e : edge_freqs)
        for (double n : non_edge_freqs) auc += (e > n) ? 1.0 : (e == n) ? 0.5 : 0.0;
    auc /= static_cast<double>(edge_freqs.size() * non_edge_freqs.size());
    char buf[160];
    std::snprintf(buf, sizeof buf,
                  "mean edge freq %.3f vs non-edge %.3f, AUC %.3f (>=0.7)",
                  mean_edge, mean_non, auc);
    return report(5, mean_edge > mean_non && auc >= 0.7, buf);
}

// --- criterion 6: planted duplicate recovery -------------------------------
bool criterion6() {
    const int runs = 20;
    int good = 0;
    for (int run = 0; run < runs; ++run) {
        std::mt19937_64 rng(derive_seed(7, "c6", run));
        auto base = test::random_path(rng, 100, 2);
        base.label = "A";
        auto copy = base;
        copy.label = "B";
        std::vector<MultivariatePath> vertices{base, copy};
        for (int i = 0; i < 3; ++i) {
            auto noise = test::random_path(rng, 100, 2);
            noise.values *= 5.0;
            noise.label = "N" + std::to_string(i);
            vertices.push_back(noise);
        }
        InferRunConfig infer;
        // order 5 gives the R^2 gate 62 coefficients to judge instead of 14,
        // so chance fits between independent-noise vertices stay below it
        infer.inference.order = 5;
        infer.seed = derive_seed(7, "c6-infer", run);
        auto result = run_inference(vertices, infer);
        bool run_ok = result.prob.frequency(2, {0, 1}) >= 0.9;
        for (int i = 2; i < 5 && run_ok; ++i)
            for (int j = i + 1; j < 5; ++j)
                if (result.prob.frequency(2, {i, j}) > 0.5) run_ok = false;
        if (run_ok) ++good;
    }
    char buf[96];
    std::snprintf(buf, sizeof buf, "%d/%d runs recover the duplicate (need 18)",
                  good, runs);
    return report(6, good >= 18, buf);
}

// --- criterion 7: byte-identical reproduce output ---------------------------
bool criterion7() {
#ifndef SIGCX_CLI_PATH
    return report(7, false, "CLI path not configured");
#else
    auto read_all = [](const fs::path& p) {
        std::ifstream in(p, std::ios::binary);
        return std::string((std::istreambuf_iterator<char>(in)),
                           std::istreambuf_iterator<char>());
    };
    fs::path base = fs::temp_directory_path() /
                    ("sigcx_accept_" + std::to_string(std::random_device{}()));
    fs::create_directories(base);
    std::string common = std::string(SIGCX_CLI_PATH) +
                         " reproduce --seed 7 --runs 2 --n-tries 10";
    std::string cmd1 =
        common + " --threads 1 --out " + (base / "a").string() + " >/dev/null";
    std::string cmd2 =
        common + " --threads 4 --out " + (base / "b").string() + " >/dev/null";
    int rc1 = std::system(cmd1.c_str());
    int rc2 = std::system(cmd2.c_str());
    int rc3 = std::system(cmd1.c_str());  // same invocation again
    bool ok = rc1 == 0 && rc2 == 0 && rc3 == 0;
    std::string a = read_all(base / "a" / "table.txt");
    std::string b = read_all(base / "b" / "table.txt");
    ok = ok && !a.empty() && a == b;
    fs::remove_all(base);
    return report(7, ok,
                  ok ? "reproduce --seed 7 byte-identical across reruns and "
                       "worker-pool sizes"
                     : "reproduce outputs differ or a run failed");
#endif
}

// --- criterion 8: structural invariants ------------------------------------
bool criterion8() {
    bool closed_ok = true, a2_ok = true, monotone_ok = true;
    std::mt19937_64 rng(31337);
    for (int n = 4; n <= 8; ++n) {
        SynthConfig synth;
        synth.n = n;
        synth.seed = 100 + n;
        auto ds = simulate_dataset(synth);
        InferenceConfig cfg;
        cfg.k_max = 3;
        auto c = infer_complex(ds, cfg);
        if (!c.is_downward_closed()) closed_ok = false;
        auto a2 = hyper_adjacency(c, 2);
        for (const auto& e : a2.entries) {
            if (e[0] == e[1]) a2_ok = false;
            if (!a2.at({e[1], e[0]})) a2_ok = false;
        }
        for (int v = 0; v < n; ++v)
            if (a2.at({v, v})) a2_ok = false;
    }
    // thresholding monotone in tau over randomized probability tensors
    std::uniform_real_distribution<double> uni(0.0, 1.0);
    std::uniform_int_distribution<int> vd(0, 5);
    for (int trial = 0; trial < 100; ++trial) {
        ProbabilityTensors prob;
        prob.n = 6;
        prob.n_tries = 20;
        for (int e = 0; e < 8; ++e) {
            int i = vd(rng), j = vd(rng);
            if (i == j) continue;
            if (i > j) std::swap(i, j);
            prob.counts[2][{i, j}] = 1 + static_cast<int>(uni(rng) * 19);
        }
        if (prob.counts[2].empty()) continue;
        double t1 = std::max(1e-6, uni(rng)), t2 = std::max(1e-6, uni(rng));
        if (t1 > t2) std::swap(t1, t2);
        auto c1 = threshold_complex(prob, t1);
        auto c2 = threshold_complex(prob, t2);
        for (const auto& s : c2.simplices)
            if (!c1.contains(s)) monotone_ok = false;
    }
    char buf[128];
    std::snprintf(buf, sizeof buf,
                  "closure %s, A2 symmetric zero-diagonal %s, threshold "
                  "monotone %s",
                  closed_ok ? "ok" : "BROKEN", a2_ok ? "ok" : "BROKEN",
                  monotone_ok ? "ok" : "BROKEN");
    return report(8, closed_ok && a2_ok && monotone_ok, buf);
}

}  // namespace

int main(int argc, char** argv) {
    std::set<int> selected;
    for (int i = 1; i < argc; ++i) selected.insert(std::atoi(argv[i]));
    auto want = [&](int c) { return selected.empty() || selected.count(c); };

    bool all_ok = true;
    if (want(1)) all_ok &= criterion1();
    if (want(2)) all_ok &= criterion2();
    if (want(3)) all_ok &= criterion3();
    if (want(4)) all_ok &= criterion4();
    if (want(5)) all_ok &= criterion5();
    if (want(6)) all_ok &= criterion6();
    if (want(7)) all_ok &= criterion7();
    if (want(8)) all_ok &= criterion8();
    return all_ok ? 0 : 1;
}
