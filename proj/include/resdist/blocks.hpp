#pragma once

#include <algorithm>
#include <functional>
#include <map>
#include <set>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "resdist/digraph.hpp"

namespace resdist {

/// Maximal 2-connected pieces of the underlying undirected multigraph.
/// Every arc is treated as its own undirected edge, so a digon (u,v),(v,u)
/// is a pair of parallel edges and forms a 2-connected block by itself;
/// no arc is ever a bridge in a balanced digraph.
///
/// Blocks are canonically ordered by (smallest vertex label, then
/// lexicographic arc list), each block's arc list is sorted, and all
/// vertex lists are sorted, so the decomposition is deterministic.
struct BlockDecomposition {
    std::vector<std::vector<Arc>> blocks;
    std::vector<std::vector<int>> block_vertices;      // per block, sorted labels
    std::vector<int> cut_vertices;                     // sorted labels
    std::vector<std::vector<int>> block_cut_vertices;  // per block, its cut vertices
};

/// Depth-first block decomposition (edge-stack variant, tracking edge ids
/// so parallel edges survive). Throws when the underlying graph is
/// disconnected.
inline BlockDecomposition blocks(const Digraph& d) {
    if (!is_connected_underlying(d))
        throw std::invalid_argument("blocks: underlying graph is disconnected");
    const auto& arcs = d.arcs();
    const int n = d.n();
    const int m = d.arc_count();

    std::vector<std::vector<std::pair<int, int>>> adj(n);  // (edge id, neighbor)
    for (int e = 0; e < m; ++e) {
        const int u = arcs[e].from - 1;
        const int v = arcs[e].to - 1;
        adj[u].push_back({e, v});
        adj[v].push_back({e, u});
    }

    std::vector<int> disc(n, 0), low(n, 0);
    std::vector<bool> is_cut(n, false);
    std::vector<int> edge_stack;
    std::vector<std::vector<int>> raw_blocks;
    int timer = 0;

    std::function<void(int, int)> dfs = [&](int u, int parent_edge) {
        disc[u] = low[u] = ++timer;
        int children = 0;
        for (const auto& [e, v] : adj[u]) {
            if (e == parent_edge) continue;
            if (disc[v] == 0) {
                ++children;
                edge_stack.push_back(e);
                dfs(v, e);
                low[u] = std::min(low[u], low[v]);
                if (low[v] >= disc[u]) {
                    if (parent_edge != -1) is_cut[u] = true;
                    std::vector<int> blk;
                    while (true) {
                        const int top = edge_stack.back();
                        edge_stack.pop_back();
                        blk.push_back(top);
                        if (top == e) break;
                    }
                    raw_blocks.push_back(std::move(blk));
                }
            } else if (disc[v] < disc[u]) {
                edge_stack.push_back(e);
                low[u] = std::min(low[u], disc[v]);
            }
        }
        if (parent_edge == -1 && children >= 2) is_cut[u] = true;
    };
    if (m > 0) dfs(0, -1);
    if (!edge_stack.empty())
        throw std::logic_error("blocks: edge stack not exhausted");

    BlockDecomposition out;
    for (const auto& blk : raw_blocks) {
        std::vector<Arc> as;
        as.reserve(blk.size());
        for (int e : blk) as.push_back(arcs[e]);
        std::sort(as.begin(), as.end());
        out.blocks.push_back(std::move(as));
    }
    std::sort(out.blocks.begin(), out.blocks.end());
    for (const auto& blk : out.blocks) {
        std::set<int> vs;
        for (const Arc& a : blk) {
            vs.insert(a.from);
            vs.insert(a.to);
        }
        out.block_vertices.emplace_back(vs.begin(), vs.end());
    }
    for (int v = 1; v <= n; ++v)
        if (is_cut[v - 1]) out.cut_vertices.push_back(v);
    for (const auto& vs : out.block_vertices) {
        std::vector<int> cuts;
        for (int v : vs)
            if (is_cut[v - 1]) cuts.push_back(v);
        out.block_cut_vertices.push_back(std::move(cuts));
    }
    return out;
}

/// A block reinterpreted as a standalone digraph on vertices 1..m, with the
/// original labels kept alongside: original_label[i] is the label that the
/// new vertex i+1 carried in the parent graph.
struct RelabeledBlock {
    Digraph graph;
    std::vector<int> original_label;
};

inline RelabeledBlock block_subgraph(const std::vector<Arc>& block) {
    std::set<int> vs;
    for (const Arc& a : block) {
        vs.insert(a.from);
        vs.insert(a.to);
    }
    RelabeledBlock out;
    out.original_label.assign(vs.begin(), vs.end());
    std::map<int, int> to_new;
    for (size_t i = 0; i < out.original_label.size(); ++i)
        to_new[out.original_label[i]] = static_cast<int>(i) + 1;
    std::vector<Arc> arcs;
    arcs.reserve(block.size());
    for (const Arc& a : block) arcs.push_back({to_new.at(a.from), to_new.at(a.to)});
    out.graph = Digraph(static_cast<int>(out.original_label.size()), std::move(arcs));
    return out;
}

/// Glues d2 onto d1 by identifying d2's vertex v2 with d1's vertex v1.
/// d1 keeps its labels; the remaining vertices of d2 become
/// n1+1, n1+2, ... in increasing order of their original labels. When
/// `relabel2` is given it receives the full d2 -> result label map
/// (relabel2[v-1] is the new label of d2's vertex v).
inline Digraph one_point_union(const Digraph& d1, const Digraph& d2, int v1, int v2,
                               std::vector<int>* relabel2 = nullptr) {
    if (v1 < 1 || v1 > d1.n())
        throw std::invalid_argument("one_point_union: vertex " + std::to_string(v1) +
                                    " outside 1.." + std::to_string(d1.n()));
    if (v2 < 1 || v2 > d2.n())
        throw std::invalid_argument("one_point_union: vertex " + std::to_string(v2) +
                                    " outside 1.." + std::to_string(d2.n()));
    std::vector<int> map2(d2.n());
    int next = d1.n();
    for (int v = 1; v <= d2.n(); ++v) map2[v - 1] = v == v2 ? v1 : ++next;
    std::vector<Arc> arcs = d1.arcs();
    for (const Arc& a : d2.arcs()) arcs.push_back({map2[a.from - 1], map2[a.to - 1]});
    if (relabel2) *relabel2 = map2;
    return Digraph(d1.n() + d2.n() - 1, std::move(arcs));
}

/// True when d is strongly connected, balanced, and every block is a single
/// directed cycle (digons count as directed 2-cycles).
inline bool is_directed_cactus(const Digraph& d) {
    if (!is_strongly_connected(d) || !is_balanced(d)) return false;
    const BlockDecomposition bd = blocks(d);
    for (size_t b = 0; b < bd.blocks.size(); ++b) {
        const auto& arcs = bd.blocks[b];
        const auto& verts = bd.block_vertices[b];
        if (arcs.size() != verts.size()) return false;
        std::map<int, int> next;
        for (const Arc& a : arcs)
            if (!next.emplace(a.from, a.to).second) return false;
        if (next.size() != verts.size()) return false;
        // Follow the unique out-arcs: one directed cycle visits every
        // block vertex exactly once before closing.
        const int start = verts.front();
        int cur = start;
        size_t steps = 0;
        do {
            const auto it = next.find(cur);
            if (it == next.end()) return false;
            cur = it->second;
            ++steps;
        } while (cur != start && steps <= verts.size());
        if (cur != start || steps != verts.size()) return false;
    }
    return true;
}

/// Decomposition certificate for graphs assembled by iterated one-point
/// unions: the blocks in a valid gluing order, each attached to the union
/// of its predecessors at a single shared vertex.
struct ClassCCertificate {
    bool ok = false;
    BlockDecomposition decomposition;
    std::vector<int> order;          // indices into decomposition.blocks
    std::vector<int> attach_vertex;  // per order entry; 0 for the first block
    std::string failure_reason;      // names the first offending block
};

/// Checks that d (balanced, connected) splits into blocks all satisfying
/// `base_ok`; the base family is a parameter because the membership test
/// composes with any family of balanced pieces. Each relabeled block is
/// asserted balanced and strongly connected before the predicate runs —
/// blocks of a balanced connected digraph always are, so a failure here is
/// an internal error, not bad input.
template <typename Pred>
ClassCCertificate class_c_certificate(const Digraph& d, Pred&& base_ok) {
    if (!is_connected_underlying(d))
        throw std::invalid_argument("class_c_certificate: underlying graph is disconnected");
    if (!is_balanced(d))
        throw std::invalid_argument("class_c_certificate: digraph is not balanced");

    ClassCCertificate cert;
    cert.decomposition = blocks(d);
    const auto& bd = cert.decomposition;
    const int nb = static_cast<int>(bd.blocks.size());

    // Gluing order: start from the first block and repeatedly take the
    // lowest-indexed unplaced block meeting the union built so far. Two
    // blocks share at most one vertex and the block/cut-vertex incidence
    // is a tree, so each new block touches the union in exactly one vertex.
    std::vector<bool> used(nb, false);
    std::set<int> covered;
    for (int step = 0; step < nb; ++step) {
        int pick = -1;
        int attach = 0;
        for (int b = 0; b < nb && pick < 0; ++b) {
            if (used[b]) continue;
            if (step == 0) {
                pick = b;
                break;
            }
            std::vector<int> shared;
            for (int v : bd.block_vertices[b])
                if (covered.count(v)) shared.push_back(v);
            if (shared.size() == 1) {
                pick = b;
                attach = shared.front();
            } else if (!shared.empty()) {
                throw std::logic_error("class_c_certificate: block shares " +
                                       std::to_string(shared.size()) +
                                       " vertices with the assembled union");
            }
        }
        if (pick < 0)
            throw std::logic_error("class_c_certificate: no attachable block found");
        used[pick] = true;
        cert.order.push_back(pick);
        cert.attach_vertex.push_back(attach);
        covered.insert(bd.block_vertices[pick].begin(), bd.block_vertices[pick].end());
    }

    for (int b : cert.order) {
        const RelabeledBlock sub = block_subgraph(bd.blocks[b]);
        if (!is_balanced(sub.graph) || !is_strongly_connected(sub.graph))
            throw std::logic_error(
                "class_c_certificate: block of a balanced connected digraph is not "
                "balanced and strongly connected");
        if (!base_ok(sub.graph)) {
            std::string vs;
            for (int v : bd.block_vertices[b]) vs += (vs.empty() ? "" : ",") + std::to_string(v);
            cert.failure_reason = "block " + std::to_string(b) + " (vertices {" + vs +
                                  "}) fails the base predicate";
            return cert;
        }
    }
    cert.ok = true;
    return cert;
}

}  // namespace resdist
