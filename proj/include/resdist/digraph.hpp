#pragma once

#include <algorithm>
#include <compare>
#include <cstdint>
#include <limits>
#include <queue>
#include <stdexcept>
#include <string>
#include <vector>

namespace resdist {

/// Directed arc between 1-based vertex labels.
struct Arc {
    int from = 0;
    int to = 0;
    friend auto operator<=>(const Arc&, const Arc&) = default;
};

inline std::string to_string(const Arc& a) {
    return "(" + std::to_string(a.from) + "," + std::to_string(a.to) + ")";
}

/// Simple digraph on vertices 1..n: no self-loops, no parallel arcs.
/// The arc list is kept sorted, so equal graphs compare equal and every
/// traversal of the arcs is deterministic.
class Digraph {
  public:
    Digraph() = default;

    Digraph(int n, std::vector<Arc> arcs) : n_(n), arcs_(std::move(arcs)) {
        if (n_ <= 0) throw std::invalid_argument("Digraph: vertex count must be positive");
        std::sort(arcs_.begin(), arcs_.end());
        for (size_t k = 0; k < arcs_.size(); ++k) {
            const Arc& a = arcs_[k];
            if (a.from < 1 || a.from > n_ || a.to < 1 || a.to > n_)
                throw std::invalid_argument("Digraph: arc " + resdist::to_string(a) +
                                            " has a label outside 1.." + std::to_string(n_));
            if (a.from == a.to)
                throw std::invalid_argument("Digraph: self-loop " + resdist::to_string(a));
            if (k > 0 && arcs_[k - 1] == a)
                throw std::invalid_argument("Digraph: duplicate arc " + resdist::to_string(a));
        }
    }

    int n() const { return n_; }
    const std::vector<Arc>& arcs() const { return arcs_; }
    int arc_count() const { return static_cast<int>(arcs_.size()); }

    bool has_arc(int u, int v) const {
        return std::binary_search(arcs_.begin(), arcs_.end(), Arc{u, v});
    }

    friend bool operator==(const Digraph&, const Digraph&) = default;

  private:
    int n_ = 0;
    std::vector<Arc> arcs_;
};

struct Degrees {
    std::vector<int> in;   // in[v-1] = in-degree of vertex v
    std::vector<int> out;  // out[v-1] = out-degree of vertex v
};

inline Degrees degrees(const Digraph& d) {
    Degrees deg{std::vector<int>(d.n(), 0), std::vector<int>(d.n(), 0)};
    for (const Arc& a : d.arcs()) {
        ++deg.out[a.from - 1];
        ++deg.in[a.to - 1];
    }
    return deg;
}

/// True when every vertex has equal in- and out-degree.
inline bool is_balanced(const Digraph& d) {
    const Degrees deg = degrees(d);
    return deg.in == deg.out;
}

namespace detail {

inline std::vector<std::vector<int>> out_adjacency(const Digraph& d) {
    std::vector<std::vector<int>> adj(d.n());
    for (const Arc& a : d.arcs()) adj[a.from - 1].push_back(a.to - 1);
    return adj;
}

inline std::vector<bool> reachable_from(const std::vector<std::vector<int>>& adj, int start) {
    std::vector<bool> seen(adj.size(), false);
    std::vector<int> stack{start};
    seen[start] = true;
    while (!stack.empty()) {
        const int u = stack.back();
        stack.pop_back();
        for (int v : adj[u])
            if (!seen[v]) {
                seen[v] = true;
                stack.push_back(v);
            }
    }
    return seen;
}

}  // namespace detail

/// True when every ordered pair of vertices is joined by a directed path.
/// Checked as: all vertices reachable from vertex 1, in both the graph and
/// its reversal. A single vertex counts as strongly connected.
inline bool is_strongly_connected(const Digraph& d) {
    std::vector<std::vector<int>> fwd(d.n()), rev(d.n());
    for (const Arc& a : d.arcs()) {
        fwd[a.from - 1].push_back(a.to - 1);
        rev[a.to - 1].push_back(a.from - 1);
    }
    for (bool r : detail::reachable_from(fwd, 0))
        if (!r) return false;
    for (bool r : detail::reachable_from(rev, 0))
        if (!r) return false;
    return true;
}

/// True when the underlying undirected graph is connected.
inline bool is_connected_underlying(const Digraph& d) {
    std::vector<std::vector<int>> adj(d.n());
    for (const Arc& a : d.arcs()) {
        adj[a.from - 1].push_back(a.to - 1);
        adj[a.to - 1].push_back(a.from - 1);
    }
    for (bool r : detail::reachable_from(adj, 0))
        if (!r) return false;
    return true;
}

/// All-pairs directed shortest-path (hop-count) distances.
/// Row/column v-1 corresponds to vertex v; unreachable pairs hold kInf.
class DistMatrix {
  public:
    static constexpr std::int64_t kInf = std::numeric_limits<std::int64_t>::max();

    explicit DistMatrix(int n) : n_(n), d_(static_cast<size_t>(n) * n, kInf) {}

    int n() const { return n_; }
    std::int64_t& operator()(int i, int j) { return d_[idx(i, j)]; }
    std::int64_t operator()(int i, int j) const { return d_[idx(i, j)]; }

  private:
    size_t idx(int i, int j) const {
        if (i < 0 || i >= n_ || j < 0 || j >= n_)
            throw std::out_of_range("DistMatrix: index outside " + std::to_string(n_) +
                                    "x" + std::to_string(n_));
        return static_cast<size_t>(i) * static_cast<size_t>(n_) + static_cast<size_t>(j);
    }

    int n_;
    std::vector<std::int64_t> d_;
};

/// Breadth-first search from every vertex; arcs all have weight 1.
inline DistMatrix shortest_distances(const Digraph& d) {
    const auto adj = detail::out_adjacency(d);
    DistMatrix dist(d.n());
    for (int s = 0; s < d.n(); ++s) {
        dist(s, s) = 0;
        std::queue<int> q;
        q.push(s);
        while (!q.empty()) {
            const int u = q.front();
            q.pop();
            for (int v : adj[u])
                if (dist(s, v) == DistMatrix::kInf) {
                    dist(s, v) = dist(s, u) + 1;
                    q.push(v);
                }
        }
    }
    return dist;
}

}  // namespace resdist
