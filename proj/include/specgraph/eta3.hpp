#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <optional>
#include <ostream>
#include <set>
#include <string>
#include <thread>
#include <vector>

#include "specgraph/canonical.hpp"
#include "specgraph/charpoly.hpp"
#include "specgraph/constants.hpp"
#include "specgraph/eigen.hpp"
#include "specgraph/errors.hpp"
#include "specgraph/graph.hpp"
#include "specgraph/graph6.hpp"
#include "specgraph/polynomial.hpp"

namespace specgraph {

enum class SearchPhase { diamond_seed, claw_seed_diamond_free, both };

struct SearchConfig {
    int max_vertices = 16; // smallest bound at which the extremal graph appears
    double tol = 1e-9;
    SearchPhase phase = SearchPhase::both;
    bool emit_tree = false;
    int workers = 1;
    std::uint64_t node_budget = 0; // 0 = unlimited
};

enum class NodeStatus { expanded, pruned_lambda, pruned_diamond, completed, at_bound };

struct TreeNode {
    std::int64_t id = -1;
    std::int64_t parent = -1;
    int phase = 1;
    std::string graph6;
    double lambda_min = 0.0;
    NodeStatus status = NodeStatus::expanded;
};

enum class PruneDecision { keep, prune };

/// Interlacing prune: a partial graph below beta - tol cannot be an induced
/// subgraph of any target. The borderline band is kept and resolved by the
/// exact certificate at completion.
inline PruneDecision prune_test(const SimpleGraph& g, double tol = 1e-9) {
    static const double beta = min_root(minimal_polynomial(ConstantName::beta), 1e-13);
    return lambda_min(g, 1e-11) < beta - tol ? PruneDecision::prune : PruneDecision::keep;
}

enum class BetaVerdict { equals_beta, in_interval, out };

/// Exact certificate for a connected cubic graph: EQUALS_BETA when the
/// defining sextic divides the characteristic polynomial and the numeric
/// eigenvalue agrees; IN_INTERVAL for [beta - tol, -2) membership (the strict
/// -2 bound decided exactly); OUT otherwise.
struct BetaCertificate {
    IntPolynomial char_poly;
    BetaVerdict verdict = BetaVerdict::out;
    double lambda_min = 0.0;
};

inline BetaCertificate certify_beta(const SimpleGraph& g, double tol = 1e-9) {
    if (is_regular(g) != std::optional<int>(3) || !is_connected(g))
        throw input_error("certify_beta: graph must be connected and 3-regular");
    BetaCertificate cert;
    cert.char_poly = char_poly(adjacency_int_matrix(g));
    cert.lambda_min = lambda_min(g, 1e-11);
    const IntPolynomial sextic = minimal_polynomial(ConstantName::beta);
    const double beta = min_root(sextic, 1e-13);

    bool divisible = poly_divides(sextic, cert.char_poly);
    if (divisible && std::abs(cert.lambda_min - beta) <= tol) {
        cert.verdict = BetaVerdict::equals_beta;
        return cert;
    }
    // strictly below -2, decided exactly on the characteristic polynomial
    int below = roots_below(cert.char_poly, BigRat(-2));
    if (cert.char_poly.eval(BigRat(-2)) == 0) --below;
    if (below >= 1 && cert.lambda_min >= beta - tol)
        cert.verdict = BetaVerdict::in_interval;
    else
        cert.verdict = BetaVerdict::out;
    return cert;
}

struct SearchStats {
    std::uint64_t expanded = 0;
    std::uint64_t pruned_lambda = 0;
    std::uint64_t pruned_diamond = 0;
    std::uint64_t completed = 0;
    std::uint64_t sibling_merges = 0;
    std::uint64_t sibling_merges_phase2 = 0;
};

struct SearchResult {
    std::vector<SimpleGraph> extremal;          // deduplicated, canonical order
    std::vector<BetaCertificate> certificates;  // parallel to extremal
    SearchStats stats;
    int complete_up_to = 0;
    std::vector<TreeNode> tree; // populated when emit_tree is set
};

struct CheckpointEntry {
    std::string graph6;
    int depth = 0;
    int phase = 1;
};

/// Raised when the node budget runs out; carries the partial result and a
/// frontier checkpoint that can be fed back through SearchResume.
class search_budget_error : public error {
public:
    search_budget_error(SearchResult partial, std::vector<CheckpointEntry> frontier)
        : error("search_eta3: node budget exhausted"), partial_result(std::move(partial)),
          frontier_checkpoint(std::move(frontier)) {}
    SearchResult partial_result;
    std::vector<CheckpointEntry> frontier_checkpoint;
};

namespace detail {

struct EtaNode {
    SimpleGraph graph;
    std::int64_t tree_id = -1;
    int depth = 0;
};

inline bool has_induced_diamond(const SimpleGraph& g) {
    return find_induced(g, PatternKind::diamond).has_value();
}

inline std::vector<int> deficient_vertices(const SimpleGraph& g) {
    std::vector<int> out;
    for (int v = 0; v < g.vertex_count(); ++v)
        if (g.degree(v) < 3) out.push_back(v);
    return out;
}

/// Children of a node: one fresh vertex adjacent to the lowest-indexed
/// deficient vertex plus any subset of the other deficient vertices (at most
/// two more). Every node stays an induced subgraph of all its completions,
/// which is what makes the eigenvalue prune sound.
inline std::vector<SimpleGraph> grow_children(const SimpleGraph& g) {
    auto deficient = deficient_vertices(g);
    std::vector<SimpleGraph> out;
    if (deficient.empty()) return out;
    const int v = deficient.front();
    const int n = g.vertex_count();
    std::vector<int> others(deficient.begin() + 1, deficient.end());
    std::vector<std::vector<int>> subsets{{}};
    for (std::size_t i = 0; i < others.size(); ++i) {
        subsets.push_back({others[i]});
        for (std::size_t j = i + 1; j < others.size(); ++j) subsets.push_back({others[i], others[j]});
    }
    for (const auto& extra : subsets) {
        SimpleGraph h(n + 1);
        for (auto [a, b] : g.edges()) h.add_edge(a, b);
        h.add_edge(v, n);
        for (int u : extra) h.add_edge(u, n);
        out.push_back(std::move(h));
    }
    return out;
}

struct ExpandOutcome {
    // children that survived pruning, with their eigenvalues
    std::vector<std::pair<SimpleGraph, double>> kept;
    // tree rows for pruned children; ids and parent are filled at merge time
    std::vector<TreeNode> pruned_rows;
    std::uint64_t pruned_lambda = 0, pruned_diamond = 0, merges = 0;
};

inline ExpandOutcome expand_node(const SimpleGraph& g, double beta, double tol, bool diamond_free,
                                 int max_vertices, bool emit_tree) {
    ExpandOutcome out;
    std::set<std::string> sibling_forms;
    for (auto& child : grow_children(g)) {
        if (child.vertex_count() > max_vertices) continue;
        double lm = lambda_min(child, 1e-11);
        NodeStatus status = NodeStatus::expanded;
        if (lm < beta - tol) {
            status = NodeStatus::pruned_lambda;
            ++out.pruned_lambda;
        } else if (diamond_free && has_induced_diamond(child)) {
            status = NodeStatus::pruned_diamond;
            ++out.pruned_diamond;
        } else if (!sibling_forms.insert(canonical_form(child)).second) {
            ++out.merges;
            continue; // isomorphic sibling already queued
        } else {
            out.kept.emplace_back(std::move(child), lm);
            continue;
        }
        if (emit_tree) {
            TreeNode row;
            row.graph6 = graph6_encode(child);
            row.lambda_min = lm;
            row.status = status;
            out.pruned_rows.push_back(std::move(row));
        }
    }
    return out;
}

} // namespace detail

struct SearchResume {
    std::vector<CheckpointEntry> frontier;
};

inline SearchResult search_eta3(const SearchConfig& config,
                                const std::optional<SearchResume>& resume = std::nullopt);

namespace detail {

inline void run_phase(int phase_no, const SimpleGraph& seed, const SearchConfig& cfg, double beta,
                      SearchResult& result, std::vector<SimpleGraph>& completions,
                      std::uint64_t& budget_used, std::vector<EtaNode> frontier_override = {}) {
    const bool diamond_free = phase_no == 2;
    std::vector<EtaNode> frontier;
    if (!frontier_override.empty()) {
        frontier = std::move(frontier_override);
    } else {
        EtaNode root{seed, -1, 0};
        if (cfg.emit_tree) {
            TreeNode row;
            row.id = static_cast<std::int64_t>(result.tree.size());
            row.parent = -1;
            row.phase = phase_no;
            row.graph6 = graph6_encode(seed);
            row.lambda_min = lambda_min(seed, 1e-11);
            row.status = NodeStatus::expanded;
            result.tree.push_back(row);
            root.tree_id = row.id;
        }
        frontier.push_back(std::move(root));
    }

    while (!frontier.empty()) {
        // completions and budget accounting are sequential and deterministic
        std::vector<EtaNode> next;
        std::vector<detail::ExpandOutcome> outcomes(frontier.size());
        auto work = [&](std::size_t begin, std::size_t end) {
            for (std::size_t i = begin; i < end; ++i) {
                const auto& node = frontier[i];
                if (!detail::deficient_vertices(node.graph).empty())
                    outcomes[i] = detail::expand_node(node.graph, beta, cfg.tol, diamond_free,
                                                      cfg.max_vertices, cfg.emit_tree);
            }
        };
        const int workers = std::max(1, cfg.workers);
        if (workers == 1 || frontier.size() < 4) {
            work(0, frontier.size());
        } else {
            std::vector<std::thread> pool;
            std::size_t chunk = (frontier.size() + static_cast<std::size_t>(workers) - 1) /
                                static_cast<std::size_t>(workers);
            for (int w = 0; w < workers; ++w) {
                std::size_t b = static_cast<std::size_t>(w) * chunk;
                std::size_t e = std::min(frontier.size(), b + chunk);
                if (b < e) pool.emplace_back(work, b, e);
            }
            for (auto& th : pool) th.join();
        }

        for (std::size_t i = 0; i < frontier.size(); ++i) {
            auto& node = frontier[i];
            auto deficient = detail::deficient_vertices(node.graph);
            if (deficient.empty()) {
                ++result.stats.completed;
                completions.push_back(node.graph);
                if (cfg.emit_tree && node.tree_id >= 0)
                    result.tree[static_cast<std::size_t>(node.tree_id)].status = NodeStatus::completed;
                continue;
            }
            ++result.stats.expanded;
            ++budget_used;
            if (cfg.node_budget > 0 && budget_used > cfg.node_budget) {
                // assemble a resumable frontier from the unprocessed tail
                std::vector<CheckpointEntry> cp;
                for (std::size_t j = i; j < frontier.size(); ++j)
                    cp.push_back({graph6_encode(frontier[j].graph), frontier[j].depth, phase_no});
                for (auto& n2 : next) cp.push_back({graph6_encode(n2.graph), n2.depth, phase_no});
                throw search_budget_error(std::move(result), std::move(cp));
            }
            auto& oc = outcomes[i];
            result.stats.pruned_lambda += oc.pruned_lambda;
            result.stats.pruned_diamond += oc.pruned_diamond;
            result.stats.sibling_merges += oc.merges;
            if (phase_no == 2) result.stats.sibling_merges_phase2 += oc.merges;
            if (cfg.emit_tree)
                for (auto& row : oc.pruned_rows) {
                    row.id = static_cast<std::int64_t>(result.tree.size());
                    row.parent = node.tree_id;
                    row.phase = phase_no;
                    result.tree.push_back(row);
                }
            for (auto& [child, lm] : oc.kept) {
                EtaNode nn{std::move(child), -1, node.depth + 1};
                if (cfg.emit_tree) {
                    TreeNode row;
                    row.id = static_cast<std::int64_t>(result.tree.size());
                    row.parent = node.tree_id;
                    row.phase = phase_no;
                    row.graph6 = graph6_encode(nn.graph);
                    row.lambda_min = lm;
                    row.status = detail::deficient_vertices(nn.graph).empty()
                                     ? NodeStatus::completed
                                     : (nn.graph.vertex_count() == cfg.max_vertices &&
                                                !detail::deficient_vertices(nn.graph).empty()
                                            ? NodeStatus::at_bound
                                            : NodeStatus::expanded);
                    result.tree.push_back(row);
                    nn.tree_id = row.id;
                }
                next.push_back(std::move(nn));
            }
        }
        frontier = std::move(next);
    }
}

} // namespace detail

/// Exhaustive branch-and-prune enumeration of connected cubic graphs with
/// smallest eigenvalue in [beta - tol, -2), up to max_vertices. Phase 1 grows
/// from the diamond K_{2,1,1}; phase 2 grows from the 3-claw and additionally
/// prunes nodes containing an induced diamond (those targets are phase 1's).
inline SearchResult search_eta3(const SearchConfig& config, const std::optional<SearchResume>& resume) {
    if (config.max_vertices < 4) throw input_error("search_eta3: max_vertices must be >= 4");
    if (config.tol <= 0) throw input_error("search_eta3: tol must be positive");
    const double beta = min_root(minimal_polynomial(ConstantName::beta), 1e-13);

    SearchResult result;
    result.complete_up_to = config.max_vertices;
    std::vector<SimpleGraph> completions;
    std::uint64_t budget_used = 0;

    const bool p1 = config.phase != SearchPhase::claw_seed_diamond_free;
    const bool p2 = config.phase != SearchPhase::diamond_seed;
    if (resume.has_value()) {
        std::vector<detail::EtaNode> f1, f2;
        for (const auto& e : resume->frontier) {
            detail::EtaNode node{graph6_decode(e.graph6), -1, e.depth};
            (e.phase == 2 ? f2 : f1).push_back(std::move(node));
        }
        if (!f1.empty()) {
            try {
                detail::run_phase(1, diamond_graph(), config, beta, result, completions, budget_used,
                                  std::move(f1));
            } catch (search_budget_error& e) {
                // keep the untouched phase-2 frontier resumable as well
                for (const auto& n2 : f2)
                    e.frontier_checkpoint.push_back({graph6_encode(n2.graph), n2.depth, 2});
                throw;
            }
        }
        if (!f2.empty()) detail::run_phase(2, claw_graph(), config, beta, result, completions, budget_used, std::move(f2));
    } else {
        if (p1) {
            try {
                detail::run_phase(1, diamond_graph(), config, beta, result, completions, budget_used);
            } catch (search_budget_error& e) {
                if (p2) e.frontier_checkpoint.push_back({graph6_encode(claw_graph()), 0, 2});
                throw;
            }
        }
        if (p2) detail::run_phase(2, claw_graph(), config, beta, result, completions, budget_used);
    }

    // collect: connected cubic completions with lambda_min in [beta - tol, -2),
    // the strict -2 side certified exactly; deduplicate across phases
    std::set<std::string> forms;
    std::vector<std::pair<std::string, std::size_t>> ordered;
    std::vector<SimpleGraph> kept;
    std::vector<BetaCertificate> certs;
    for (const auto& g : completions) {
        double lm = lambda_min(g, 1e-11);
        if (lm < beta - config.tol || lm > -2.0 + 1e-6) continue;
        auto cert = certify_beta(g, config.tol);
        if (cert.verdict == BetaVerdict::out) continue;
        auto form = canonical_form(g);
        if (!forms.insert(form).second) continue;
        ordered.emplace_back(std::move(form), kept.size());
        kept.push_back(g);
        certs.push_back(std::move(cert));
    }
    std::sort(ordered.begin(), ordered.end());
    for (const auto& [form, idx] : ordered) {
        result.extremal.push_back(kept[idx]);
        result.certificates.push_back(certs[idx]);
    }
    return result;
}

/// DOT rendering of the explored tree (emit_tree runs only).
inline void export_tree_dot(const SearchResult& result, std::ostream& os) {
    if (result.tree.empty()) throw input_error("export_tree: search ran without emit_tree");
    os << "digraph search {\n  node [shape=box, fontname=\"monospace\"];\n";
    auto color = [](NodeStatus s) {
        switch (s) {
        case NodeStatus::completed: return "palegreen";
        case NodeStatus::pruned_lambda: return "lightpink";
        case NodeStatus::pruned_diamond: return "lightsalmon";
        case NodeStatus::at_bound: return "lightgray";
        case NodeStatus::expanded: return "white";
        }
        return "white";
    };
    for (const auto& n : result.tree) {
        os << "  n" << n.id << " [label=\"" << n.graph6 << "\\nlmin=" << n.lambda_min
           << "\", style=filled, fillcolor=" << color(n.status) << "];\n";
        if (n.parent >= 0) os << "  n" << n.parent << " -> n" << n.id << ";\n";
    }
    os << "}\n";
}

inline std::string node_status_string(NodeStatus s) {
    switch (s) {
    case NodeStatus::expanded: return "expanded";
    case NodeStatus::pruned_lambda: return "pruned_lambda";
    case NodeStatus::pruned_diamond: return "pruned_diamond";
    case NodeStatus::completed: return "completed";
    case NodeStatus::at_bound: return "at_bound";
    }
    return {};
}

} // namespace specgraph
