// Command-line interface: spectral reports, the certified constructions,
// the Hoffman catalog, the exhaustive cubic search, and the verification
// suite. Exit codes: 0 ok, 2 input error, 3 construction/validity error,
// 4 capacity error, 5 verification failure.

#include <cstdlib>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "specgraph/constructions.hpp"
#include "specgraph/eta3.hpp"
#include "specgraph/graph6.hpp"
#include "specgraph/json_io.hpp"
#include "specgraph/manifest.hpp"
#include "specgraph/verification.hpp"
#include "specgraph/version.hpp"

namespace sg = specgraph;

namespace {

std::string join_args(int argc, char** argv) {
    std::string s;
    for (int i = 0; i < argc; ++i) {
        if (i) s += ' ';
        s += argv[i];
    }
    return s;
}

/// Input is a literal graph6 string, a path to a graph6 file, or a path to an
/// adjacency JSON document.
sg::SimpleGraph load_graph(const std::string& input) {
    std::string text = input;
    std::ifstream probe(input);
    if (probe.good()) text = sg::read_text_file(input);
    // trim trailing whitespace/newlines
    while (!text.empty() && (text.back() == '\n' || text.back() == '\r' || text.back() == ' '))
        text.pop_back();
    // graph6 strings of 60-vertex graphs also start with '{', so only treat
    // the input as JSON when it actually parses as JSON
    if (!text.empty() && text.front() == '{') {
        auto j = sg::json::parse(text, nullptr, false);
        if (!j.is_discarded()) return sg::graph_from_json(j);
    }
    return sg::graph6_decode(text);
}

void write_with_manifest(sg::RunManifest& manifest, const std::string& path, const std::string& content) {
    sg::write_text_file(path, content);
    manifest.add_output(path);
}

void finish_manifest(sg::RunManifest& manifest, const sg::WallClock& clock,
                     const std::string& manifest_path) {
    manifest.wall_time_seconds = clock.seconds();
    if (!manifest_path.empty()) sg::write_text_file(manifest_path, manifest.to_json().dump(2) + "\n");
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"spectral graph toolkit: constructions with certified smallest eigenvalues"};
    app.set_version_flag("--version", sg::version_string);
    app.set_config("--config", "", "read options from an INI/TOML config file");
    app.require_subcommand(1);

    sg::WallClock clock;
    sg::RunManifest manifest;
    manifest.command_line = join_args(argc, argv);

    // ---- eigen ---------------------------------------------------------------
    auto* eigen_cmd = app.add_subcommand("eigen", "smallest eigenvalue report for a graph");
    std::string eigen_input, eigen_out;
    double eigen_tol = 1e-9;
    bool eigen_exact = false, eigen_spectrum = false;
    eigen_cmd->add_option("input", eigen_input, "graph6 string, graph6 file, or adjacency JSON file")
        ->required();
    eigen_cmd->add_option("--tol", eigen_tol, "absolute eigenvalue tolerance")->capture_default_str();
    eigen_cmd->add_flag("--exact", eigen_exact, "attach the exact characteristic polynomial");
    eigen_cmd->add_flag("--spectrum", eigen_spectrum, "attach the full spectrum");
    eigen_cmd->add_option("--out", eigen_out, "write the JSON report here instead of stdout");

    // ---- construct -------------------------------------------------------------
    auto* con_cmd = app.add_subcommand("construct", "build a certified graph family member");
    std::string family, out_prefix = "construct_out";
    int con_k = 3, con_a = 1, con_n = 2, con_nmax = 10;
    bool con_remark = false;
    con_cmd->add_option("--family", family, "gk | trianglefree | gkwn | limitseq")->required();
    con_cmd->add_option("--k", con_k, "valency parameter");
    con_cmd->add_option("--a", con_a, "size multiplier");
    con_cmd->add_option("--n", con_n, "cycle parameter for trianglefree");
    con_cmd->add_option("--n-max", con_nmax, "sequence length for limitseq");
    con_cmd->add_flag("--remark", con_remark, "gkwn only: use the explicit partitions of {1..12}");
    std::string con_name = "H9";
    con_cmd->add_option("--name", con_name, "limitseq only: H9 or HWN")->capture_default_str();
    con_cmd->add_option("--out-prefix", out_prefix, "output file prefix")->capture_default_str();

    // ---- hoffman ----------------------------------------------------------------
    auto* hof_cmd = app.add_subcommand("hoffman", "Hoffman graph catalog export");
    auto* cat_cmd = hof_cmd->add_subcommand("catalog", "export a catalog entry");
    std::string cat_name = "H2", cat_prefix;
    cat_cmd->add_option("--name", cat_name, "H2 | H3 | H8 | H9 | HWN")->required();
    cat_cmd->add_option("--out-prefix", cat_prefix, "write <prefix>.json and <prefix>.g6");

    // ---- search-eta3 ---------------------------------------------------------------
    auto* search_cmd = app.add_subcommand("search-eta3",
                                          "exhaustive search for cubic graphs with smallest "
                                          "eigenvalue in [beta, -2)");
    sg::SearchConfig se;
    std::string tree_out, json_out, checkpoint_out, resume_in;
    std::string phase_flag = "both";
    search_cmd->add_option("--max-vertices", se.max_vertices, "search bound")->capture_default_str();
    search_cmd->add_option("--tol", se.tol, "pruning tolerance")->capture_default_str();
    search_cmd->add_option("--phase", phase_flag, "1 = diamond seed, 2 = claw seed (diamond-free)")
        ->check(CLI::IsMember({"1", "2", "both"}))
        ->capture_default_str();
    search_cmd->add_option("--workers", se.workers, "worker threads")
        ->envname("SPECGRAPH_WORKERS")
        ->capture_default_str();
    search_cmd->add_option("--node-budget", se.node_budget, "abort with a checkpoint after this many expansions");
    search_cmd->add_option("--tree", tree_out, "write the explored tree as DOT");
    search_cmd->add_option("--json", json_out, "write the full result as JSON");
    search_cmd->add_option("--checkpoint", checkpoint_out, "frontier file on budget exhaustion")
        ->capture_default_str();
    search_cmd->add_option("--resume", resume_in, "resume from a checkpoint file");

    // ---- verify ----------------------------------------------------------------------
    auto* verify_cmd = app.add_subcommand("verify", "run the full verification suite");
    bool verify_json = false;
    verify_cmd->add_flag("--json", verify_json, "machine-readable criterion list");

    std::string manifest_path;
    app.add_option("--manifest", manifest_path, "write a run manifest to this path");
    for (auto* sub : app.get_subcommands({})) sub->fallthrough();
    hof_cmd->fallthrough();
    cat_cmd->fallthrough();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2; // --help/--version exit 0, bad flags are input errors
    }

    try {
        if (*eigen_cmd) {
            auto g = load_graph(eigen_input);
            manifest.parameters = {{"tol", eigen_tol}, {"exact", eigen_exact}, {"spectrum", eigen_spectrum}};
            auto rep = sg::spectral_report(g, eigen_tol, eigen_spectrum, eigen_exact);
            std::string text = sg::spectral_report_to_json(rep).dump(2) + "\n";
            if (eigen_out.empty())
                std::cout << text;
            else
                write_with_manifest(manifest, eigen_out, text);
            finish_manifest(manifest, clock, manifest_path);
            return 0;
        }

        if (*con_cmd) {
            manifest.parameters = {{"family", family}, {"k", con_k}, {"a", con_a},
                                   {"n", con_n},       {"remark", con_remark}};
            if (family == "limitseq") {
                auto seq = sg::limit_sequence(sg::parse_catalog_name(con_name), con_nmax);
                sg::json j = sg::json::array();
                for (const auto& pt : seq)
                    j.push_back({{"n", pt.n}, {"lambda_min", pt.lambda}, {"min_valency", pt.min_valency}});
                std::string text = j.dump(2) + "\n";
                write_with_manifest(manifest, out_prefix + ".json", text);
                std::cout << text;
                finish_manifest(manifest, clock, manifest_path);
                return 0;
            }
            sg::ConstructionReport rep;
            if (family == "gk") {
                rep = sg::build_gk(sg::semiregular_bipartite(con_k, con_a));
            } else if (family == "trianglefree") {
                rep = sg::build_triangle_free(con_n);
            } else if (family == "gkwn") {
                rep = con_remark ? sg::build_gk_wn(4, sg::remark_partitions())
                                 : sg::build_gk_wn(con_k, sg::default_partitions(con_k, con_a));
            } else {
                throw sg::input_error("unknown family '" + family + "'");
            }
            write_with_manifest(manifest, out_prefix + ".json",
                                sg::construction_report_to_json(rep).dump(2) + "\n");
            if (rep.graph.vertex_count() <= 100000)
                write_with_manifest(manifest, out_prefix + ".g6", sg::graph6_encode(rep.graph) + "\n");
            std::cout << "order " << rep.graph.vertex_count() << ", lambda_min "
                      << (std::isnan(rep.lambda_min) ? std::string("certified-bounds")
                                                     : std::to_string(rep.lambda_min))
                      << ", checks " << (rep.all_passed() ? "all passed" : "FAILED") << "\n";
            finish_manifest(manifest, clock, manifest_path);
            return 0;
        }

        if (*cat_cmd) {
            auto name = sg::parse_catalog_name(cat_name);
            auto h = sg::catalog(name);
            sg::json j = sg::hoffman_to_json(h);
            j["name"] = cat_name;
            j["lambda_min_poly"] = sg::poly_to_json(sg::catalog_lambda_min_poly(name));
            j["lambda_min"] = sg::hlambda_min(h, 1e-12);
            std::string slim_g6 = sg::graph6_encode(sg::slim_graph(h));
            j["slim_graph6"] = slim_g6;
            std::string text = j.dump(2) + "\n";
            if (cat_prefix.empty()) {
                std::cout << text;
            } else {
                write_with_manifest(manifest, cat_prefix + ".json", text);
                write_with_manifest(manifest, cat_prefix + ".g6", slim_g6 + "\n");
            }
            finish_manifest(manifest, clock, manifest_path);
            return 0;
        }

        if (*search_cmd) {
            se.phase = phase_flag == "1" ? sg::SearchPhase::diamond_seed
                                         : (phase_flag == "2" ? sg::SearchPhase::claw_seed_diamond_free
                                                              : sg::SearchPhase::both);
            se.emit_tree = !tree_out.empty() || !json_out.empty();
            manifest.parameters = {{"max_vertices", se.max_vertices},
                                   {"tol", se.tol},
                                   {"phase", phase_flag},
                                   {"workers", se.workers}};
            std::optional<sg::SearchResume> resume;
            if (!resume_in.empty()) {
                resume = sg::SearchResume{sg::checkpoint_from_text(sg::read_text_file(resume_in))};
                manifest.add_input(resume_in);
            }
            sg::SearchResult res;
            try {
                res = sg::search_eta3(se, resume);
            } catch (const sg::search_budget_error& e) {
                std::string cp = checkpoint_out.empty() ? "search_checkpoint.txt" : checkpoint_out;
                sg::write_text_file(cp, sg::checkpoint_to_text(e.frontier_checkpoint));
                if (!json_out.empty())
                    sg::write_text_file(json_out,
                                        sg::search_result_to_json(e.partial_result).dump(2) + "\n");
                std::cerr << "node budget exhausted; frontier checkpoint written to " << cp << "\n";
                finish_manifest(manifest, clock, manifest_path);
                return 4;
            }
            for (std::size_t i = 0; i < res.extremal.size(); ++i) {
                const auto& c = res.certificates[i];
                std::cout << sg::graph6_encode(res.extremal[i]) << "  n=" << res.extremal[i].vertex_count()
                          << "  lambda_min=" << c.lambda_min << "  verdict="
                          << (c.verdict == sg::BetaVerdict::equals_beta
                                  ? "EQUALS_BETA"
                                  : (c.verdict == sg::BetaVerdict::in_interval ? "IN_INTERVAL" : "OUT"))
                          << "\n";
            }
            std::cout << "expanded " << res.stats.expanded << ", pruned "
                      << (res.stats.pruned_lambda + res.stats.pruned_diamond) << ", complete up to "
                      << res.complete_up_to << " vertices\n";
            if (!json_out.empty())
                write_with_manifest(manifest, json_out, sg::search_result_to_json(res).dump(2) + "\n");
            if (!tree_out.empty()) {
                std::ostringstream os;
                sg::export_tree_dot(res, os);
                write_with_manifest(manifest, tree_out, os.str());
            }
            finish_manifest(manifest, clock, manifest_path);
            return 0;
        }

        if (*verify_cmd) {
            auto results = sg::run_acceptance_criteria(verify_json ? nullptr : &std::cout);
            if (verify_json) {
                sg::json j = sg::json::array();
                for (const auto& r : results)
                    j.push_back({{"id", r.id}, {"title", r.title}, {"passed", r.passed}, {"detail", r.detail}});
                std::cout << j.dump(2) << "\n";
            }
            int failed = 0;
            for (const auto& r : results)
                if (!r.passed) ++failed;
            if (!verify_json)
                std::cout << "----\n" << (results.size() - static_cast<std::size_t>(failed)) << "/"
                          << results.size() << " criteria passed\n";
            finish_manifest(manifest, clock, manifest_path);
            return failed == 0 ? 0 : 5;
        }
    } catch (const sg::parse_error& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return 2;
    } catch (const sg::capacity_error& e) {
        std::cerr << "capacity error: " << e.what() << "\n";
        return 4;
    } catch (const sg::construction_error& e) {
        std::cerr << "construction error: " << e.what() << "\n";
        return 3;
    } catch (const sg::validity_error& e) {
        std::cerr << "validity error: " << e.what() << "\n";
        return 3;
    } catch (const sg::input_error& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 0;
}
