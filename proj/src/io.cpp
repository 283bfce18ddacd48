#include "io.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <map>
#include <sstream>

#include <json.hpp>

namespace sigcx {

using nlohmann::json;

namespace {

std::ofstream open_out(const std::string& path) {
    std::ofstream out(path);
    if (!out) throw IoError("cannot open for writing: " + path);
    return out;
}

std::ifstream open_in(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw IoError("cannot open for reading: " + path);
    return in;
}

json load_json(const std::string& path) {
    auto in = open_in(path);
    try {
        return json::parse(in);
    } catch (const json::parse_error& e) {
        throw ParseError(std::string("malformed document: ") + e.what(),
                         static_cast<int>(e.byte));
    }
}

std::string fmt6(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.6f", v);
    return buf;
}

}  // namespace

void write_paths_csv(const std::vector<MultivariatePath>& paths,
                     const std::string& path) {
    // rows sorted by (entity, channel, t)
    std::vector<const MultivariatePath*> ordered;
    for (const auto& p : paths) ordered.push_back(&p);
    std::stable_sort(ordered.begin(), ordered.end(),
                     [](auto* a, auto* b) { return a->label < b->label; });
    auto out = open_out(path);
    out << "t,entity,channel,value\n";
    char buf[64];
    for (const auto* p : ordered) {
        for (int c = 0; c < p->dim(); ++c) {
            for (int r = 0; r < p->samples(); ++r) {
                std::snprintf(buf, sizeof buf, "%.12g,%s,%d,%.17g", p->grid[r],
                              p->label.c_str(), c, p->values(r, c));
                out << buf << "\n";
            }
        }
    }
}

std::vector<MultivariatePath> read_paths_csv(const std::string& path) {
    auto in = open_in(path);
    std::string line;
    int line_no = 0;
    if (!std::getline(in, line)) throw ParseError("empty file", 1);
    ++line_no;
    // tolerate trailing \r from CRLF files
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line != "t,entity,channel,value")
        throw ParseError("expected header 't,entity,channel,value'", line_no);

    struct Series {
        std::map<int, std::vector<std::pair<double, double>>> channels;
    };
    std::vector<std::string> entity_order;
    std::map<std::string, Series> entities;

    while (std::getline(in, line)) {
        ++line_no;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty()) continue;
        std::istringstream ss(line);
        std::string t_s, entity, ch_s, val_s;
        if (!std::getline(ss, t_s, ',') || !std::getline(ss, entity, ',') ||
            !std::getline(ss, ch_s, ',') || !std::getline(ss, val_s))
            throw ParseError("expected 4 comma-separated fields", line_no);
        double t, val;
        int ch;
        try {
            t = std::stod(t_s);
            ch = std::stoi(ch_s);
            val = std::stod(val_s);
        } catch (const std::exception&) {
            throw ParseError("non-numeric field", line_no);
        }
        if (ch < 0) throw ParseError("negative channel index", line_no);
        if (!std::isfinite(t) || !std::isfinite(val))
            throw ParseError("non-finite value", line_no);
        if (!entities.count(entity)) entity_order.push_back(entity);
        auto& series = entities[entity].channels[ch];
        if (!series.empty() && t <= series.back().first)
            throw ParseError("times not strictly increasing within a channel",
                             line_no);
        series.emplace_back(t, val);
    }

    std::vector<MultivariatePath> out;
    for (const auto& label : entity_order) {
        const auto& channels = entities[label].channels;
        int d = static_cast<int>(channels.size());
        if (!channels.count(0) || channels.rbegin()->first != d - 1)
            throw ParseError("entity '" + label + "' channels are not 0.." +
                                 std::to_string(d - 1),
                             line_no);
        const auto& ref = channels.at(0);
        TimeGrid grid;
        for (const auto& [t, v] : ref) grid.push_back(t);
        Eigen::MatrixXd values(grid.size(), d);
        for (int c = 0; c < d; ++c) {
            const auto& series = channels.at(c);
            if (series.size() != grid.size())
                throw ParseError("entity '" + label + "' channel lengths differ",
                                 line_no);
            for (std::size_t r = 0; r < series.size(); ++r) {
                if (series[r].first != grid[r])
                    throw ParseError(
                        "entity '" + label + "' channel grids differ", line_no);
                values(r, c) = series[r].second;
            }
        }
        out.emplace_back(std::move(grid), std::move(values), label);
    }
    if (out.empty()) throw ParseError("no data rows", line_no);
    return out;
}

void write_ground_truth(const GroundTruth& gt, const std::string& path) {
    auto out = open_out(path);
    out << "{\n  \"n\": " << gt.n << ",\n  \"edges\": [";
    for (std::size_t i = 0; i < gt.edges.size(); ++i) {
        if (i) out << ", ";
        out << "[" << gt.edges[i].first << ", " << gt.edges[i].second << "]";
    }
    out << "]\n}\n";
}

GroundTruth read_ground_truth(const std::string& path) {
    json doc = load_json(path);
    GroundTruth gt;
    gt.n = doc.at("n").get<int>();
    for (const auto& e : doc.at("edges")) {
        int i = e.at(0).get<int>(), j = e.at(1).get<int>();
        if (i > j) std::swap(i, j);
        gt.edges.emplace_back(i, j);
    }
    return gt;
}

void write_probability_tensors(const ProbabilityTensors& prob, double tau,
                               const std::string& path) {
    auto out = open_out(path);
    out << "{\n  \"n\": " << prob.n << ",\n  \"n_tries\": " << prob.n_tries
        << ",\n  \"tau\": " << fmt6(tau) << ",\n  \"orders\": [";
    bool first_order = true;
    for (const auto& [order, tuples] : prob.counts) {
        if (!first_order) out << ",";
        first_order = false;
        out << "\n    {\"order\": " << order << ", \"entries\": [";
        bool first = true;
        for (const auto& [tuple, count] : tuples) {
            if (!first) out << ",";
            first = false;
            out << "\n      {\"vertices\": [";
            for (std::size_t i = 0; i < tuple.size(); ++i)
                out << (i ? ", " : "") << tuple[i];
            out << "], \"frequency\": "
                << fmt6(static_cast<double>(count) / prob.n_tries) << "}";
        }
        out << (first ? "]}" : "\n    ]}");
    }
    out << "\n  ]\n}\n";
}

ProbabilityTensors read_probability_tensors(const std::string& path) {
    json doc = load_json(path);
    ProbabilityTensors prob;
    prob.n = doc.at("n").get<int>();
    prob.n_tries = doc.at("n_tries").get<int>();
    for (const auto& per_order : doc.at("orders")) {
        int order = per_order.at("order").get<int>();
        auto& tuples = prob.counts[order];
        for (const auto& entry : per_order.at("entries")) {
            Simplex tuple = entry.at("vertices").get<Simplex>();
            double freq = entry.at("frequency").get<double>();
            tuples[tuple] =
                static_cast<int>(std::lround(freq * prob.n_tries));
        }
    }
    return prob;
}

void write_complex(const SimplicialComplex& complex, double tau,
                   const std::string& path) {
    auto out = open_out(path);
    out << "{\n  \"n\": " << complex.n << ",\n  \"tau\": " << fmt6(tau)
        << ",\n  \"orders\": [";
    bool first_order = true;
    for (int order = 2; order <= complex.n; ++order) {
        std::vector<const Simplex*> members;
        for (const auto& s : complex.simplices)
            if (static_cast<int>(s.size()) == order) members.push_back(&s);
        if (members.empty()) continue;
        if (!first_order) out << ",";
        first_order = false;
        out << "\n    {\"order\": " << order << ", \"simplices\": [";
        for (std::size_t m = 0; m < members.size(); ++m) {
            out << (m ? ", [" : "[");
            for (std::size_t i = 0; i < members[m]->size(); ++i)
                out << (i ? ", " : "") << (*members[m])[i];
            out << "]";
        }
        out << "]}";
    }
    out << "\n  ]\n}\n";
}

SimplicialComplex read_complex(const std::string& path) {
    json doc = load_json(path);
    SimplicialComplex complex(doc.at("n").get<int>());
    for (const auto& per_order : doc.at("orders"))
        for (const auto& s : per_order.at("simplices"))
            complex.insert_with_closure(s.get<Simplex>());
    return complex;
}

void write_metrics(const MetricsRecord& m, const std::string& path) {
    auto out = open_out(path);
    out << "{\n"
        << "  \"tpe\": " << fmt6(m.tpe) << ",\n"
        << "  \"tne\": " << fmt6(m.tne) << ",\n"
        << "  \"accuracy\": " << fmt6(m.accuracy) << ",\n"
        << "  \"precision\": " << fmt6(m.precision) << ",\n"
        << "  \"recall\": " << fmt6(m.recall) << ",\n"
        << "  \"f1\": " << fmt6(m.f1) << ",\n"
        << "  \"degenerate\": " << (m.degenerate ? "true" : "false") << "\n}\n";
}

std::vector<int> read_adjacency_document(const std::string& path, int& n_out) {
    json doc = load_json(path);
    int n = doc.at("n").get<int>();
    n_out = n;
    std::vector<int> adj(n * n, 0);
    auto set_edge = [&](int i, int j) {
        if (i < 0 || j < 0 || i >= n || j >= n || i == j)
            throw ParseError("edge endpoints out of range", 0);
        adj[i * n + j] = adj[j * n + i] = 1;
    };
    if (doc.contains("edges")) {
        for (const auto& e : doc.at("edges"))
            set_edge(e.at(0).get<int>(), e.at(1).get<int>());
    } else if (doc.contains("orders")) {
        for (const auto& per_order : doc.at("orders")) {
            if (per_order.at("order").get<int>() != 2) continue;
            const char* key =
                per_order.contains("simplices") ? "simplices" : "entries";
            for (const auto& s : per_order.at(key)) {
                Simplex tuple = per_order.contains("simplices")
                                    ? s.get<Simplex>()
                                    : s.at("vertices").get<Simplex>();
                if (tuple.size() == 2) set_edge(tuple[0], tuple[1]);
            }
        }
    } else {
        throw ParseError("document has neither 'edges' nor 'orders'", 0);
    }
    return adj;
}

}  // namespace sigcx
