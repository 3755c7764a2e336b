#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <set>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "resdist/blocks.hpp"
#include "resdist/digraph.hpp"

namespace resdist {

/// Deterministic 64-bit generator (splitmix64). The exact recurrence is
/// part of the output contract — the same seed must produce the same graph
/// on every platform:
///     state += 0x9E3779B97F4A7C15
///     z = state
///     z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9
///     z = (z ^ (z >> 27)) * 0x94D049BB133111EB
///     return z ^ (z >> 31)
/// First outputs for seed 0: 0xE220A8397B1DCDAF, 0x6E789E6AA1B965F4, ...
class SplitMix64 {
  public:
    explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next() {
        std::uint64_t z = (state_ += 0x9E3779B97F4A7C15ULL);
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
        return z ^ (z >> 31);
    }

    /// Uniform-enough draw in [0, bound); bound must be positive. The tiny
    /// modulo bias is irrelevant here — draws only pick test shapes.
    std::uint64_t below(std::uint64_t bound) {
        if (bound == 0) throw std::invalid_argument("SplitMix64: zero bound");
        return next() % bound;
    }

    /// Integer in [lo, hi], inclusive.
    int range(int lo, int hi) {
        if (lo > hi) throw std::invalid_argument("SplitMix64: empty range");
        return lo + static_cast<int>(below(static_cast<std::uint64_t>(hi - lo + 1)));
    }

  private:
    std::uint64_t state_;
};

/// Directed cycle 1 -> 2 -> ... -> n -> 1.
inline Digraph gen_cycle(int n) {
    if (n < 2) throw std::invalid_argument("gen_cycle: need at least 2 vertices");
    std::vector<Arc> arcs;
    arcs.reserve(static_cast<size_t>(n));
    for (int v = 1; v < n; ++v) arcs.push_back({v, v + 1});
    arcs.push_back({n, 1});
    return Digraph(n, std::move(arcs));
}

namespace detail {

/// One random directed cycle on `len` distinct vertices of 1..n, as an arc
/// list (partial Fisher-Yates for the sample, then consecutive arcs).
inline std::vector<Arc> random_cycle_arcs(int n, int len, SplitMix64& rng) {
    std::vector<int> pool(static_cast<size_t>(n));
    for (int v = 1; v <= n; ++v) pool[static_cast<size_t>(v) - 1] = v;
    for (int t = 0; t < len; ++t) {
        const int pick = t + static_cast<int>(rng.below(static_cast<std::uint64_t>(n - t)));
        std::swap(pool[static_cast<size_t>(t)], pool[static_cast<size_t>(pick)]);
    }
    std::vector<Arc> arcs;
    arcs.reserve(static_cast<size_t>(len));
    for (int t = 0; t < len; ++t)
        arcs.push_back({pool[static_cast<size_t>(t)], pool[static_cast<size_t>((t + 1) % len)]});
    return arcs;
}

inline Digraph gen_balanced_random(int n, int target_arcs, SplitMix64& rng) {
    if (n < 2) throw std::invalid_argument("gen_balanced_random: need at least 2 vertices");
    if (target_arcs < 2 || target_arcs > static_cast<long>(n) * (n - 1))
        throw std::invalid_argument("gen_balanced_random: arc budget " +
                                    std::to_string(target_arcs) + " is unreachable");
    constexpr int kMaxAttempts = 1000;
    for (int attempt = 0; attempt < kMaxAttempts; ++attempt) {
        std::set<Arc> arcs;
        // Superpose random directed cycles. Each cycle adds len >= 2 arcs,
        // so never leave a remainder of exactly 1.
        for (int tries = 0; static_cast<int>(arcs.size()) < target_arcs && tries < 200; ++tries) {
            const int remaining = target_arcs - static_cast<int>(arcs.size());
            const int cap = std::min(n, remaining);
            if (cap < 2) break;
            const int len = rng.range(2, cap);
            if (remaining - len == 1) continue;
            const std::vector<Arc> cyc = random_cycle_arcs(n, len, rng);
            if (std::any_of(cyc.begin(), cyc.end(),
                            [&](const Arc& a) { return arcs.count(a) != 0; }))
                continue;
            arcs.insert(cyc.begin(), cyc.end());
        }
        if (static_cast<int>(arcs.size()) != target_arcs) continue;
        Digraph d(n, std::vector<Arc>(arcs.begin(), arcs.end()));
        if (is_connected_underlying(d)) return d;
    }
    throw std::runtime_error("gen_balanced_random: no connected graph with " +
                             std::to_string(target_arcs) + " arcs on " + std::to_string(n) +
                             " vertices after " + std::to_string(kMaxAttempts) + " attempts");
}

inline Digraph gen_cactus(int num_blocks, int cycle_min, int cycle_max, SplitMix64& rng) {
    if (num_blocks < 1) throw std::invalid_argument("gen_cactus: need at least one block");
    if (cycle_min < 2 || cycle_min > cycle_max)
        throw std::invalid_argument("gen_cactus: invalid cycle length range");
    Digraph g = gen_cycle(rng.range(cycle_min, cycle_max));
    for (int b = 1; b < num_blocks; ++b) {
        const Digraph cyc = gen_cycle(rng.range(cycle_min, cycle_max));
        const int glue = rng.range(1, g.n());
        g = one_point_union(g, cyc, glue, 1);
    }
    return g;
}

}  // namespace detail

/// Union of random directed cycles with exactly `target_arcs` distinct
/// arcs; balanced by construction, retried until the underlying graph is
/// connected (and therefore strongly connected).
inline Digraph gen_balanced_random(int n, int target_arcs, std::uint64_t seed) {
    SplitMix64 rng(seed);
    return detail::gen_balanced_random(n, target_arcs, rng);
}

/// Iterated one-point unions of directed cycles: every block is a single
/// cycle with length drawn from [cycle_min, cycle_max], each glued at a
/// random vertex of the graph built so far.
inline Digraph gen_cactus(int num_blocks, int cycle_min, int cycle_max, std::uint64_t seed) {
    SplitMix64 rng(seed);
    return detail::gen_cactus(num_blocks, cycle_min, cycle_max, rng);
}

/// A graph built by iterated one-point unions of balanced pieces, together
/// with the construction trace: each piece's arcs in the final labeling and
/// the vertex it was glued at. The trace is ground truth for decomposition
/// tests — the pieces are exactly the blocks of the result.
struct UnionBuild {
    Digraph graph;
    std::vector<std::vector<Arc>> pieces;  // final-label arc list per piece
    std::vector<int> glued_at;             // final label of each glue vertex; 0 for the first
};

/// Pieces are either directed cycles ("cycle") or balanced random graphs
/// ("balanced_random"), with sizes drawn from [piece_min, piece_max].
inline UnionBuild gen_class_c(int num_blocks, const std::string& block_kind, int piece_min,
                              int piece_max, std::uint64_t seed) {
    if (num_blocks < 1) throw std::invalid_argument("gen_class_c: need at least one block");
    if (piece_min < 2 || piece_min > piece_max)
        throw std::invalid_argument("gen_class_c: invalid piece size range");
    if (block_kind != "cycle" && block_kind != "balanced_random")
        throw std::invalid_argument("gen_class_c: unknown block kind '" + block_kind + "'");
    SplitMix64 rng(seed);
    auto make_piece = [&]() {
        // Each piece must be a single block (2-connected), or the pieces
        // would not be the blocks of the assembled graph. A bare cycle
        // always is; random balanced graphs are redrawn until they are.
        for (int t = 0; t < 200; ++t) {
            const int sz = rng.range(piece_min, piece_max);
            if (block_kind == "cycle") return gen_cycle(sz);
            const int budget = sz == 2 ? 2 : sz + rng.range(0, sz - 2);
            Digraph d = detail::gen_balanced_random(sz, budget, rng);
            if (blocks(d).blocks.size() == 1) return d;
        }
        throw std::runtime_error("gen_class_c: could not draw a 2-connected piece");
    };

    UnionBuild out;
    out.graph = make_piece();
    out.pieces.push_back(out.graph.arcs());
    out.glued_at.push_back(0);
    for (int b = 1; b < num_blocks; ++b) {
        const Digraph piece = make_piece();
        const int glue = rng.range(1, out.graph.n());
        std::vector<int> relabel;
        out.graph = one_point_union(out.graph, piece, glue, 1, &relabel);
        std::vector<Arc> final_arcs;
        final_arcs.reserve(piece.arcs().size());
        for (const Arc& a : piece.arcs())
            final_arcs.push_back({relabel[a.from - 1], relabel[a.to - 1]});
        std::sort(final_arcs.begin(), final_arcs.end());
        out.pieces.push_back(std::move(final_arcs));
        out.glued_at.push_back(glue);
    }
    return out;
}

/// Named fixture graphs used across the documentation and the test suite.
inline Digraph fixture(const std::string& name) {
    if (name == "FIG_D")
        return Digraph(8, {{1, 3}, {2, 1}, {2, 3}, {3, 2}, {3, 4}, {4, 6}, {5, 2}, {6, 5},
                           {6, 7}, {7, 8}, {8, 6}});
    if (name == "FIG_D1")
        return Digraph(6, {{1, 3}, {2, 1}, {2, 3}, {3, 2}, {3, 4}, {4, 6}, {5, 2}, {6, 5}});
    if (name == "FIG_D2_TRIANGLE") return gen_cycle(3);
    if (name == "CEX") return Digraph(4, {{1, 3}, {1, 4}, {2, 1}, {3, 1}, {4, 1}, {4, 2}});
    if (name == "DIGON") return gen_cycle(2);
    if (name == "C3") return gen_cycle(3);
    throw std::invalid_argument("fixture: unknown name '" + name + "'");
}

inline std::vector<std::pair<std::string, std::string>> fixture_catalog() {
    return {
        {"FIG_D",
         "8-vertex balanced strongly connected digraph: FIG_D1 with a directed triangle "
         "glued at vertex 6"},
        {"FIG_D1",
         "6-vertex balanced block: a directed triangle and a directed pentagon sharing "
         "vertices 2 and 3"},
        {"FIG_D2_TRIANGLE",
         "directed 3-cycle; gluing its vertex 1 onto FIG_D1's vertex 6 rebuilds FIG_D"},
        {"CEX",
         "4-vertex strongly connected but unbalanced digraph with r(3,1) = 23/20 > 1 = "
         "d(3,1)"},
        {"DIGON", "directed 2-cycle on vertices 1, 2"},
        {"C3", "directed 3-cycle on vertices 1, 2, 3"},
    };
}

/// Declarative request for a generated graph; see `generate`.
struct GenSpec {
    std::string kind;       // cycle | digon | cactus | balanced_random | class_c_union
    int n = 0;              // cycle, balanced_random
    int target_arcs = 0;    // balanced_random
    int blocks = 1;         // cactus, class_c_union
    int piece_min = 3;      // cactus cycle lengths / class_c piece sizes
    int piece_max = 3;
    std::string block_kind = "cycle";  // class_c_union pieces
    std::uint64_t seed = 0;
};

inline Digraph generate(const GenSpec& spec) {
    if (spec.kind == "cycle") return gen_cycle(spec.n);
    if (spec.kind == "digon") return gen_cycle(2);
    if (spec.kind == "cactus")
        return gen_cactus(spec.blocks, spec.piece_min, spec.piece_max, spec.seed);
    if (spec.kind == "balanced_random")
        return gen_balanced_random(spec.n, spec.target_arcs, spec.seed);
    if (spec.kind == "class_c_union")
        return gen_class_c(spec.blocks, spec.block_kind, spec.piece_min, spec.piece_max,
                           spec.seed)
            .graph;
    throw std::invalid_argument("generate: unknown kind '" + spec.kind + "'");
}

}  // namespace resdist
