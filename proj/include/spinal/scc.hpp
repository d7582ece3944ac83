#pragma once

#include <algorithm>
#include <cstddef>
#include <vector>

namespace spinal {

/// Strongly connected components of a directed graph given by adjacency
/// lists (iterative Tarjan). Returns the component id of every node.
inline std::vector<std::size_t> strongly_connected_components(const std::vector<std::vector<std::size_t>>& adj) {
    constexpr std::size_t kUnset = static_cast<std::size_t>(-1);
    const std::size_t n = adj.size();
    std::vector<std::size_t> index(n, kUnset), low(n, 0), comp(n, kUnset);
    std::vector<bool> on_stack(n, false);
    std::vector<std::size_t> stack;
    std::vector<std::pair<std::size_t, std::size_t>> call;  // (node, next edge)
    std::size_t counter = 0, ncomp = 0;

    for (std::size_t root = 0; root < n; ++root) {
        if (index[root] != kUnset) continue;
        call.emplace_back(root, 0);
        index[root] = low[root] = counter++;
        stack.push_back(root);
        on_stack[root] = true;
        while (!call.empty()) {
            auto& [v, e] = call.back();
            if (e < adj[v].size()) {
                const std::size_t w = adj[v][e++];
                if (index[w] == kUnset) {
                    index[w] = low[w] = counter++;
                    stack.push_back(w);
                    on_stack[w] = true;
                    call.emplace_back(w, 0);
                } else if (on_stack[w]) {
                    low[v] = std::min(low[v], index[w]);
                }
                continue;
            }
            const std::size_t done = v;
            call.pop_back();
            if (!call.empty()) low[call.back().first] = std::min(low[call.back().first], low[done]);
            if (low[done] == index[done]) {
                std::size_t w;
                do {
                    w = stack.back();
                    stack.pop_back();
                    on_stack[w] = false;
                    comp[w] = ncomp;
                } while (w != done);
                ++ncomp;
            }
        }
    }
    return comp;
}

/// Nodes lying on a directed cycle: members of nontrivial components or
/// nodes with a self-loop.
inline std::vector<bool> nodes_on_cycles(const std::vector<std::vector<std::size_t>>& adj) {
    const auto comp = strongly_connected_components(adj);
    std::vector<std::size_t> comp_size(adj.size(), 0);
    for (auto c : comp) ++comp_size[c];
    std::vector<bool> out(adj.size(), false);
    for (std::size_t v = 0; v < adj.size(); ++v) {
        if (comp_size[comp[v]] > 1) out[v] = true;
        for (auto w : adj[v])
            if (w == v) out[v] = true;
    }
    return out;
}

}  // namespace spinal
