#pragma once

#include <set>
#include <string>
#include <vector>

#include "specgraph/canonical.hpp"
#include "specgraph/errors.hpp"
#include "specgraph/graph.hpp"

namespace specgraph {

/// All connected 3-regular graphs on at most max_n vertices, one per
/// isomorphism class. Level-by-level vertex augmentation over connected
/// graphs with maximum degree 3, deduplicated by canonical form; pruned by
/// the remaining-deficiency bound. Independent of the eigenvalue search.
inline std::vector<SimpleGraph> enumerate_connected_cubic(int max_n) {
    if (max_n < 4) return {};
    if (max_n > 14) throw capacity_error("enumerate_connected_cubic: bound above 14");
    std::vector<SimpleGraph> cubic;
    std::vector<SimpleGraph> level{SimpleGraph(1)};
    std::set<std::string> cubic_forms;
    for (int n = 2; n <= max_n; ++n) {
        std::vector<SimpleGraph> next;
        std::set<std::string> seen;
        for (const auto& g : level) {
            std::vector<int> deficient;
            for (int v = 0; v < g.vertex_count(); ++v)
                if (g.degree(v) < 3) deficient.push_back(v);
            auto attach = [&](std::initializer_list<int> subset) {
                SimpleGraph h(g.vertex_count() + 1);
                for (auto [a, b] : g.edges()) h.add_edge(a, b);
                const int w = g.vertex_count();
                for (int u : subset) h.add_edge(u, w);
                int def_total = 0;
                for (int v = 0; v <= w; ++v) def_total += 3 - h.degree(v);
                // remaining deficiency must be coverable within the bound
                if (def_total > 3 * (max_n - h.vertex_count())) return;
                auto form = canonical_form(h);
                if (!seen.insert(form).second) return;
                if (def_total == 0) {
                    if (cubic_forms.insert(form).second) cubic.push_back(std::move(h));
                } else {
                    next.push_back(std::move(h));
                }
            };
            const std::size_t dn = deficient.size();
            for (std::size_t i = 0; i < dn; ++i) {
                attach({deficient[i]});
                for (std::size_t j = i + 1; j < dn; ++j) {
                    attach({deficient[i], deficient[j]});
                    for (std::size_t k = j + 1; k < dn; ++k)
                        attach({deficient[i], deficient[j], deficient[k]});
                }
            }
        }
        level = std::move(next);
    }
    return cubic;
}

} // namespace specgraph
