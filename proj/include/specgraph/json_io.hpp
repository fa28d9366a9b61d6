#pragma once

#include <fstream>
#include <limits>
#include <string>
#include <vector>

#include <json.hpp>

#include "specgraph/constructions.hpp"
#include "specgraph/eigen.hpp"
#include "specgraph/errors.hpp"
#include "specgraph/eta3.hpp"
#include "specgraph/graph.hpp"
#include "specgraph/graph6.hpp"
#include "specgraph/hoffman.hpp"
#include "specgraph/polynomial.hpp"

namespace specgraph {

using json = nlohmann::json;

// ---- graphs: {"n": int, "edges": [[u,v],...]} --------------------------------

inline json graph_to_json(const SimpleGraph& g) {
    json j;
    j["n"] = g.vertex_count();
    j["edges"] = json::array();
    for (auto [u, v] : g.edges()) j["edges"].push_back({u, v});
    return j;
}

inline SimpleGraph graph_from_json(const json& j) {
    if (!j.is_object() || !j.contains("n") || !j.contains("edges"))
        throw input_error("graph JSON needs {\"n\", \"edges\"}");
    SimpleGraph g(j.at("n").get<int>());
    for (const auto& e : j.at("edges")) {
        if (!e.is_array() || e.size() != 2) throw input_error("graph JSON: edge must be a pair");
        g.add_edge(e[0].get<int>(), e[1].get<int>());
    }
    return g;
}

// ---- Hoffman graphs: {"n", "edges", "fat": [vertex,...]} ---------------------

inline json hoffman_to_json(const HoffmanGraph& h) {
    json j = graph_to_json(h.graph);
    j["fat"] = h.fat_vertices();
    return j;
}

inline HoffmanGraph hoffman_from_json(const json& j) {
    auto g = graph_from_json(j);
    std::vector<VertexLabel> labels(static_cast<std::size_t>(g.vertex_count()), VertexLabel::slim);
    if (j.contains("fat"))
        for (const auto& v : j.at("fat")) {
            int f = v.get<int>();
            if (f < 0 || f >= g.vertex_count()) throw input_error("hoffman JSON: fat vertex out of range");
            labels[static_cast<std::size_t>(f)] = VertexLabel::fat;
        }
    return make_hoffman(std::move(g), std::move(labels));
}

// ---- polynomials --------------------------------------------------------------

/// Coefficients constant-first; values beyond int64 are emitted as decimal
/// strings so nothing is rounded.
inline json poly_to_json(const IntPolynomial& p) {
    json arr = json::array();
    for (const auto& c : p.coefficients()) {
        if (c >= std::numeric_limits<std::int64_t>::min() &&
            c <= std::numeric_limits<std::int64_t>::max())
            arr.push_back(c.convert_to<std::int64_t>());
        else
            arr.push_back(c.str());
    }
    return arr;
}

// ---- spectral reports ----------------------------------------------------------

inline json spectral_report_to_json(const SpectralReport& r) {
    json j;
    j["lambda_min"] = r.lambda_min;
    j["tolerance"] = r.tolerance;
    j["char_poly"] = r.char_poly ? poly_to_json(*r.char_poly) : json(nullptr);
    j["spectrum"] = r.spectrum ? json(*r.spectrum) : json(nullptr);
    return j;
}

// ---- construction reports -------------------------------------------------------

inline json construction_report_to_json(const ConstructionReport& r, bool include_hoffman = true) {
    json j;
    j["graph"] = graph_to_json(r.graph);
    if (r.graph.vertex_count() <= 4096) j["graph6"] = graph6_encode(r.graph);
    if (include_hoffman) j["hoffman"] = hoffman_to_json(r.hoffman);
    j["lambda_min"] = std::isnan(r.lambda_min) ? json(nullptr) : json(r.lambda_min);
    json checks = json::object();
    for (const auto& [name, c] : r.checks) {
        json cj;
        cj["passed"] = c.passed;
        if (!std::isnan(c.value)) cj["value"] = c.value;
        if (!c.note.empty()) cj["note"] = c.note;
        checks[name] = cj;
    }
    j["checks"] = checks;
    return j;
}

// ---- search results ---------------------------------------------------------------

inline json search_result_to_json(const SearchResult& r) {
    json j;
    j["complete_up_to"] = r.complete_up_to;
    j["extremal"] = json::array();
    for (std::size_t i = 0; i < r.extremal.size(); ++i) {
        json e;
        e["graph6"] = graph6_encode(r.extremal[i]);
        e["n"] = r.extremal[i].vertex_count();
        const auto& c = r.certificates[i];
        e["lambda_min"] = c.lambda_min;
        e["char_poly"] = poly_to_json(c.char_poly);
        e["verdict"] = c.verdict == BetaVerdict::equals_beta
                           ? "EQUALS_BETA"
                           : (c.verdict == BetaVerdict::in_interval ? "IN_INTERVAL" : "OUT");
        j["extremal"].push_back(e);
    }
    j["stats"] = {{"expanded", r.stats.expanded},
                  {"pruned_lambda", r.stats.pruned_lambda},
                  {"pruned_diamond", r.stats.pruned_diamond},
                  {"completed", r.stats.completed},
                  {"sibling_merges", r.stats.sibling_merges},
                  {"sibling_merges_phase2", r.stats.sibling_merges_phase2}};
    if (!r.tree.empty()) {
        json tree = json::array();
        for (const auto& n : r.tree) {
            tree.push_back({{"id", n.id},
                            {"parent", n.parent},
                            {"phase", n.phase},
                            {"graph6", n.graph6},
                            {"lambda_min", n.lambda_min},
                            {"status", node_status_string(n.status)}});
        }
        j["tree"] = tree;
    }
    return j;
}

// ---- checkpoints: one "graph6 depth phase" line per frontier node ---------------

inline std::string checkpoint_to_text(const std::vector<CheckpointEntry>& frontier) {
    std::string out;
    for (const auto& e : frontier)
        out += e.graph6 + " " + std::to_string(e.depth) + " " + std::to_string(e.phase) + "\n";
    return out;
}

inline std::vector<CheckpointEntry> checkpoint_from_text(const std::string& text) {
    std::vector<CheckpointEntry> out;
    std::size_t pos = 0;
    int lineno = 1;
    while (pos < text.size()) {
        std::size_t eol = text.find('\n', pos);
        if (eol == std::string::npos) eol = text.size();
        std::string line = text.substr(pos, eol - pos);
        if (!line.empty()) {
            std::size_t s1 = line.find(' ');
            std::size_t s2 = s1 == std::string::npos ? std::string::npos : line.find(' ', s1 + 1);
            if (s1 == std::string::npos || s2 == std::string::npos)
                throw parse_error("checkpoint: expected 'graph6 depth phase' on line " +
                                      std::to_string(lineno),
                                  pos);
            CheckpointEntry e;
            e.graph6 = line.substr(0, s1);
            try {
                e.depth = std::stoi(line.substr(s1 + 1, s2 - s1 - 1));
                e.phase = std::stoi(line.substr(s2 + 1));
            } catch (const std::exception&) {
                throw parse_error("checkpoint: bad integer on line " + std::to_string(lineno), pos);
            }
            out.push_back(std::move(e));
        }
        pos = eol + 1;
        ++lineno;
    }
    return out;
}

// ---- file helpers -------------------------------------------------------------------

inline std::string read_text_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw input_error("cannot open '" + path + "'");
    return std::string(std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>());
}

inline void write_text_file(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw input_error("cannot write '" + path + "'");
    out << content;
}

} // namespace specgraph
