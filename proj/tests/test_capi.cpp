// Exercises the extern-C surface end to end: handles, status codes,
// file outputs, and the benchmark/table entry points.

#include <doctest.h>

#include <cstring>
#include <filesystem>
#include <fstream>
#include <random>
#include <string>
#include <vector>

#include "sigcx.h"

namespace fs = std::filesystem;

namespace {

struct TempDir {
    fs::path dir;
    TempDir() {
        dir = fs::temp_directory_path() /
              ("sigcx_capi_" + std::to_string(std::random_device{}()));
        fs::create_directories(dir);
    }
    ~TempDir() { fs::remove_all(dir); }
    std::string file(const char* name) const { return (dir / name).string(); }
};

}  // namespace

TEST_CASE("defaults") {
    sigcx_synth_config synth;
    sigcx_synth_config_default(&synth);
    CHECK(synth.n == 5);
    CHECK(synth.c != 0.0);
    CHECK(synth.dt == 0.01);

    sigcx_infer_config infer;
    sigcx_infer_config_default(&infer);
    CHECK(infer.order == 3);
    CHECK(infer.k_max == 2);
    CHECK(infer.r2_threshold == 0.67);
    CHECK(infer.tau == 0.5);
    CHECK(infer.n_tries == 50);
}

TEST_CASE("dataset lifecycle and error codes") {
    TempDir tmp;
    sigcx_synth_config synth;
    sigcx_synth_config_default(&synth);
    synth.n = 3;
    synth.seed = 5;

    sigcx_dataset* ds = nullptr;
    REQUIRE(sigcx_dataset_generate(&synth, &ds) == SIGCX_OK);
    CHECK(sigcx_dataset_size(ds) == 3);
    CHECK(sigcx_dataset_samples(ds, 0) == 101);
    CHECK(sigcx_dataset_channels(ds, 0) == 2);

    auto csv = tmp.file("data.csv");
    REQUIRE(sigcx_dataset_save_csv(ds, csv.c_str()) == SIGCX_OK);
    sigcx_dataset_free(ds);

    sigcx_dataset* loaded = nullptr;
    REQUIRE(sigcx_dataset_load_csv(csv.c_str(), &loaded) == SIGCX_OK);
    CHECK(sigcx_dataset_size(loaded) == 3);
    sigcx_dataset_free(loaded);

    SUBCASE("zero coupling is an invalid argument") {
        synth.c = 0.0;
        sigcx_dataset* bad = nullptr;
        CHECK(sigcx_dataset_generate(&synth, &bad) ==
              SIGCX_ERR_INVALID_ARGUMENT);
        CHECK(std::strlen(sigcx_last_error()) > 0);
    }
    SUBCASE("missing file is an I/O error") {
        sigcx_dataset* bad = nullptr;
        CHECK(sigcx_dataset_load_csv(tmp.file("absent.csv").c_str(), &bad) ==
              SIGCX_ERR_IO);
    }
    SUBCASE("malformed CSV is a parse error") {
        std::ofstream(tmp.file("bad.csv")) << "t,entity,channel,value\nx,y\n";
        sigcx_dataset* bad = nullptr;
        CHECK(sigcx_dataset_load_csv(tmp.file("bad.csv").c_str(), &bad) ==
              SIGCX_ERR_PARSE);
    }
}

TEST_CASE("inference through the C API") {
    TempDir tmp;
    sigcx_synth_config synth;
    sigcx_synth_config_default(&synth);
    synth.n = 4;
    synth.seed = 11;
    sigcx_dataset* ds = nullptr;
    REQUIRE(sigcx_dataset_generate(&synth, &ds) == SIGCX_OK);

    sigcx_infer_config infer;
    sigcx_infer_config_default(&infer);
    infer.n_tries = 10;
    infer.seed = 11;

    sigcx_prob_tensors* prob = nullptr;
    REQUIRE(sigcx_infer(ds, &infer, &prob) == SIGCX_OK);
    sigcx_dataset_free(ds);

    REQUIRE(sigcx_prob_save(prob, infer.tau, tmp.file("prob.json").c_str()) ==
            SIGCX_OK);

    double freq = -1.0;
    int pair[2] = {0, 1};
    REQUIRE(sigcx_prob_frequency(prob, pair, 2, &freq) == SIGCX_OK);
    CHECK(freq >= 0.0);
    CHECK(freq <= 1.0);

    sigcx_complex* cpx = nullptr;
    REQUIRE(sigcx_prob_threshold(prob, infer.tau, &cpx) == SIGCX_OK);
    sigcx_prob_free(prob);

    CHECK(sigcx_complex_vertex_count(cpx) == 4);
    std::vector<int> adj(16, -1);
    REQUIRE(sigcx_complex_adjacency(cpx, adj.data()) == SIGCX_OK);
    for (int i = 0; i < 4; ++i) CHECK(adj[i * 4 + i] == 0);
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) CHECK(adj[i * 4 + j] == adj[j * 4 + i]);

    REQUIRE(sigcx_complex_save(cpx, infer.tau, tmp.file("cpx.json").c_str()) ==
            SIGCX_OK);
    sigcx_complex_free(cpx);

    // evaluate the saved prediction against the chain truth
    REQUIRE(sigcx_ground_truth_save(4, tmp.file("gt.json").c_str()) == SIGCX_OK);
    sigcx_metrics m{};
    REQUIRE(sigcx_evaluate_files(tmp.file("cpx.json").c_str(),
                                 tmp.file("gt.json").c_str(), &m) == SIGCX_OK);
    CHECK(m.accuracy >= 0.0);
    CHECK(m.accuracy <= 1.0);
    REQUIRE(sigcx_metrics_save(&m, tmp.file("metrics.json").c_str()) == SIGCX_OK);

    SUBCASE("truth evaluated against itself is all ones") {
        sigcx_metrics perfect{};
        REQUIRE(sigcx_evaluate_files(tmp.file("gt.json").c_str(),
                                     tmp.file("gt.json").c_str(),
                                     &perfect) == SIGCX_OK);
        CHECK(perfect.accuracy == 1.0);
        CHECK(perfect.f1 == 1.0);
    }
}

TEST_CASE("benchmark and table formatting") {
    sigcx_synth_config synth;
    sigcx_synth_config_default(&synth);
    sigcx_infer_config infer;
    sigcx_infer_config_default(&infer);
    infer.n_tries = 4;  // keep this test quick

    const int n_values[] = {5, 6, 7, 8};
    sigcx_metrics columns[4]{};
    REQUIRE(sigcx_benchmark(&synth, &infer, n_values, 4, 1, 3, columns) ==
            SIGCX_OK);
    for (const auto& m : columns) {
        CHECK(m.accuracy >= 0.0);
        CHECK(m.accuracy <= 1.0);
    }

    size_t needed = 0;
    REQUIRE(sigcx_format_table(n_values, 4, columns, 1, nullptr, 0, &needed) ==
            SIGCX_OK);
    REQUIRE(needed > 0);
    std::vector<char> buf(needed + 1);
    REQUIRE(sigcx_format_table(n_values, 4, columns, 1, buf.data(), buf.size(),
                               nullptr) == SIGCX_OK);
    std::string table(buf.data());
    CHECK(table.find("F1-score") != std::string::npos);
    CHECK(table.find("n=8") != std::string::npos);
    // the published reference values appear alongside
    CHECK(table.find("0.66") != std::string::npos);

    SUBCASE("reference columns require n = 5..8") {
        const int wrong[] = {4, 6, 7, 8};
        CHECK(sigcx_format_table(wrong, 4, columns, 1, nullptr, 0, &needed) ==
              SIGCX_ERR_INVALID_ARGUMENT);
    }
}
