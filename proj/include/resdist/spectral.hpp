#pragma once

#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "resdist/blocks.hpp"
#include "resdist/digraph.hpp"
#include "resdist/linalg.hpp"
#include "resdist/matrix.hpp"
#include "resdist/rational.hpp"

namespace resdist {

/// Directed Laplacian L = diag(out-degree) - adjacency.
/// Row/column v-1 corresponds to vertex v. Row sums always vanish; column
/// sums vanish exactly when the digraph is balanced.
inline RatMatrix laplacian(const Digraph& d) {
    RatMatrix l(d.n(), d.n());
    for (const Arc& a : d.arcs()) {
        l(a.from - 1, a.to - 1) -= 1;
        l(a.from - 1, a.from - 1) += 1;
    }
    return l;
}

/// Number of spanning arborescences into a root. For balanced digraphs the
/// count is the same for every root, so it is a single graph invariant,
/// computed as a principal minor of the Laplacian. Cross-checked against a
/// second root before returning.
inline Rat kappa(const Digraph& d) {
    if (!is_balanced(d))
        throw std::invalid_argument(
            "kappa: digraph is not balanced (arborescence counts would depend on the root)");
    const RatMatrix l = laplacian(d);
    const Rat first = det(delete_rows_cols(l, {0}, {0}));
    const Rat last = det(delete_rows_cols(l, {d.n() - 1}, {d.n() - 1}));
    if (first != last)
        throw std::logic_error("kappa: cofactors at different roots disagree (" +
                               first.to_string() + " vs " + last.to_string() + ")");
    return first;
}

/// The Laplacian of a balanced digraph, with one pivot vertex moved last,
/// has the bordered shape
///     [ B      -B e  ]
///     [ -e^T B  e^T B e ]
/// with e the all-ones column. PartitionData holds the inverse C = B^-1 of
/// the reduced matrix together with its row sums x, column sums y, and the
/// normalized total x0 = (sum of C) / n^2 — everything the closed-form
/// pseudoinverse and the gluing identities are assembled from.
struct PartitionData {
    int pivot = 0;             // vertex moved to the last position
    int n = 0;                 // number of vertices
    std::vector<int> order;    // order[p] = vertex at permuted position p
    RatMatrix c;               // inverse of the reduced (n-1)x(n-1) matrix
    std::vector<Rat> x;        // x[p] = row sum of C at position p
    std::vector<Rat> y;        // y[p] = column sum of C at position p
    Rat x0;                    // sum(C) / n^2

    /// Permuted position of a non-pivot vertex.
    int position_of(int v) const {
        if (v < 1 || v > n || v == pivot)
            throw std::invalid_argument("PartitionData: vertex " + std::to_string(v) +
                                        " is the pivot or out of range");
        return v < pivot ? v - 1 : v - 2;
    }
};

inline PartitionData partition_data(const Digraph& d, int pivot) {
    if (pivot < 1 || pivot > d.n())
        throw std::invalid_argument("partition_data: pivot " + std::to_string(pivot) +
                                    " outside 1.." + std::to_string(d.n()));
    const RatMatrix l = laplacian(d);
    // The bordered shape is exactly "all row sums and column sums vanish";
    // row sums vanish for every Laplacian, column sums only when balanced.
    for (int i = 0; i < d.n(); ++i)
        if (!l.row_sum(i).is_zero() || !l.col_sum(i).is_zero())
            throw std::invalid_argument(
                "partition_data: Laplacian does not have the bordered zero-sum shape "
                "(digraph is not balanced)");

    PartitionData pd;
    pd.pivot = pivot;
    pd.n = d.n();
    for (int v = 1; v <= d.n(); ++v)
        if (v != pivot) pd.order.push_back(v);
    pd.order.push_back(pivot);

    const int m = d.n() - 1;
    RatMatrix b(m, m);
    for (int p = 0; p < m; ++p)
        for (int q = 0; q < m; ++q) b(p, q) = l(pd.order[p] - 1, pd.order[q] - 1);
    try {
        pd.c = inverse(b);
    } catch (const std::domain_error&) {
        throw std::invalid_argument(
            "partition_data: reduced matrix is singular (digraph is not connected)");
    }
    pd.x.resize(m);
    pd.y.resize(m);
    for (int p = 0; p < m; ++p) {
        pd.x[p] = pd.c.row_sum(p);
        pd.y[p] = pd.c.col_sum(p);
    }
    pd.x0 = pd.c.sum() / Rat(static_cast<long>(d.n()) * d.n());
    return pd;
}

/// Moore-Penrose pseudoinverse of the Laplacian of a balanced digraph via
/// the bordered-inverse closed form: with C = B^-1, row sums x, column
/// sums y and n the vertex count,
///     pinv[p][q]   = C[p][q] - x[p]/n - y[q]/n + x0   (p, q non-pivot)
///     pinv[p][last]= -x[p]/n + x0
///     pinv[last][q]= -y[q]/n + x0
///     pinv[last][last] = x0,
/// un-permuted back to vertex order. The result is verified against the
/// four defining pseudoinverse identities before being returned, so every
/// answer is self-certifying.
inline RatMatrix pinv_balanced(const Digraph& d, int pivot) {
    const PartitionData pd = partition_data(d, pivot);
    const int n = d.n();
    const int m = n - 1;
    const Rat inv_n = Rat(1, 1) / Rat(n);
    RatMatrix permuted(n, n);
    for (int p = 0; p < m; ++p)
        for (int q = 0; q < m; ++q)
            permuted(p, q) = pd.c(p, q) - pd.x[p] * inv_n - pd.y[q] * inv_n + pd.x0;
    for (int p = 0; p < m; ++p) {
        permuted(p, m) = pd.x0 - pd.x[p] * inv_n;
        permuted(m, p) = pd.x0 - pd.y[p] * inv_n;
    }
    permuted(m, m) = pd.x0;

    RatMatrix out(n, n);
    for (int p = 0; p < n; ++p)
        for (int q = 0; q < n; ++q) out(pd.order[p] - 1, pd.order[q] - 1) = permuted(p, q);

    if (!penrose_check(laplacian(d), out))
        throw std::logic_error("pinv_balanced: closed form failed the defining identities");
    return out;
}

inline RatMatrix pinv_balanced(const Digraph& d) { return pinv_balanced(d, d.n()); }

/// Laplacian, pseudoinverse, and the full matrix of resistances
/// r(i,j) = pinv(i,i) + pinv(j,j) - 2 pinv(i,j), all exact.
struct ResistanceResult {
    RatMatrix laplacian;
    RatMatrix pinv;
    RatMatrix r;                // r(i-1, j-1) = resistance from vertex i to j
    std::optional<Rat> kappa;   // arborescence count; only when balanced
    bool balanced_path_used = false;
};

inline ResistanceResult resistance(const Digraph& d) {
    if (!is_strongly_connected(d))
        throw std::invalid_argument("resistance: digraph is not strongly connected");
    ResistanceResult out;
    out.laplacian = laplacian(d);
    out.balanced_path_used = is_balanced(d);
    if (out.balanced_path_used) {
        out.pinv = pinv_balanced(d);
        out.kappa = kappa(d);
    } else {
        out.pinv = pinv_general(out.laplacian);
        if (!penrose_check(out.laplacian, out.pinv))
            throw std::logic_error("resistance: pseudoinverse failed the defining identities");
    }
    out.r = RatMatrix(d.n(), d.n());
    for (int i = 0; i < d.n(); ++i)
        for (int j = 0; j < d.n(); ++j) {
            if (i == j) continue;
            out.r(i, j) = out.pinv(i, i) + out.pinv(j, j) - Rat(2) * out.pinv(i, j);
        }
    return out;
}

/// Principal minor of the Laplacian with both vertex i's and vertex j's
/// row and column removed. For balanced connected digraphs this ties the
/// two resistance orientations together:
///     r(i,j) + r(j,i) = 2 * pair_cofactor(i,j) / kappa.
inline Rat pair_cofactor(const Digraph& d, int i, int j) {
    if (i < 1 || i > d.n() || j < 1 || j > d.n())
        throw std::invalid_argument("pair_cofactor: vertex outside 1.." + std::to_string(d.n()));
    if (i == j) throw std::invalid_argument("pair_cofactor: vertices must be distinct");
    return det(delete_rows_cols(laplacian(d), {i - 1, j - 1}, {i - 1, j - 1}));
}

/// Everything the one-point-union resistance identity relates, computed on
/// both sides and asserted equal before returning. For the union D of d1
/// (n vertices, keeping its labels) and d2 (k fresh vertices) glued at
/// v1 = v2, and a vertex pair i, j of d1:
///
///     r_D(i,j) = ( n * r_d1(i,j) + k * c_terms ) / (n + k)
///
/// where c_terms is read off the reduced inverse C of D partitioned at the
/// glue vertex: the single diagonal entry C[t][t] when one endpoint is the
/// glue vertex (t the other endpoint), and C[i][i] + C[j][j] - 2 C[i][j]
/// otherwise. The orientation matters: C is not symmetric in general, and
/// the identity pairs r(i,j) with the row-i, column-j entry.
struct GlueQuantities {
    Rat r_union;    // resistance between i and j in the glued graph
    Rat r_piece;    // resistance between i and j in d1 alone
    Rat c_terms;    // combination of reduced-inverse entries at the glue vertex
    int n = 0;      // |V(d1)|
    int k = 0;      // |V(d2)| - 1, the number of fresh vertices
    int total = 0;  // n + k, the size of the union
    bool endpoint_is_glue = false;
};

inline GlueQuantities glue_quantities(const Digraph& d1, const Digraph& d2, int v1, int v2,
                                      int i, int j) {
    if (i < 1 || i > d1.n() || j < 1 || j > d1.n())
        throw std::invalid_argument("glue_quantities: pair vertex outside 1.." +
                                    std::to_string(d1.n()));
    if (i == j) throw std::invalid_argument("glue_quantities: pair vertices must be distinct");
    if (!is_balanced(d1) || !is_connected_underlying(d1))
        throw std::invalid_argument("glue_quantities: d1 must be balanced and connected");
    if (!is_balanced(d2) || !is_connected_underlying(d2))
        throw std::invalid_argument("glue_quantities: d2 must be balanced and connected");

    const Digraph merged = one_point_union(d1, d2, v1, v2);
    GlueQuantities out;
    out.n = d1.n();
    out.k = d2.n() - 1;
    out.total = merged.n();
    out.endpoint_is_glue = (i == v1 || j == v1);

    const RatMatrix pu = pinv_balanced(merged);
    out.r_union = pu(i - 1, i - 1) + pu(j - 1, j - 1) - Rat(2) * pu(i - 1, j - 1);
    const RatMatrix pp = pinv_balanced(d1);
    out.r_piece = pp(i - 1, i - 1) + pp(j - 1, j - 1) - Rat(2) * pp(i - 1, j - 1);

    const PartitionData pd = partition_data(merged, v1);
    if (out.endpoint_is_glue) {
        const int t = pd.position_of(i == v1 ? j : i);
        out.c_terms = pd.c(t, t);
    } else {
        const int a = pd.position_of(i);
        const int b = pd.position_of(j);
        out.c_terms = pd.c(a, a) + pd.c(b, b) - Rat(2) * pd.c(a, b);
    }

    const Rat rhs = (Rat(out.n) * out.r_piece + Rat(out.k) * out.c_terms) / Rat(out.total);
    if (out.r_union != rhs)
        throw std::logic_error("glue_quantities: union resistance identity failed at pair (" +
                               std::to_string(i) + "," + std::to_string(j) + "): " +
                               out.r_union.to_string() + " vs " + rhs.to_string());
    return out;
}

}  // namespace resdist
