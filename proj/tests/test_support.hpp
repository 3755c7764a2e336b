#pragma once

// Shared helpers for the test binaries: independent re-implementations of
// a few results (inverse-based pseudoinverse, cofactor determinants,
// brute-force articulation points), small builders, and a subprocess
// runner for driving the CLI. Framework-free so both the unit tests and
// the acceptance binary can include it.

#include <sys/wait.h>

#include <cstdio>
#include <cstdlib>
#include <ostream>
#include <stdexcept>
#include <string>
#include <vector>

#include "resdist/resdist.hpp"

namespace resdist {

inline std::ostream& operator<<(std::ostream& os, const Rat& r) {
    return os << r.to_string();
}
inline std::ostream& operator<<(std::ostream& os, const RatMatrix& m) {
    return os << m.to_string();
}
inline std::ostream& operator<<(std::ostream& os, const Arc& a) {
    return os << to_string(a);
}

}  // namespace resdist

namespace support {

inline resdist::Rat rat(const std::string& s) { return resdist::Rat::from_string(s); }

/// Matrix from rows of "p/q" strings.
inline resdist::RatMatrix mat(const std::vector<std::vector<std::string>>& rows) {
    const int r = static_cast<int>(rows.size());
    const int c = r == 0 ? 0 : static_cast<int>(rows.front().size());
    resdist::RatMatrix m(r, c);
    for (int i = 0; i < r; ++i) {
        if (static_cast<int>(rows[static_cast<size_t>(i)].size()) != c)
            throw std::invalid_argument("mat: ragged rows");
        for (int j = 0; j < c; ++j)
            m(i, j) = rat(rows[static_cast<size_t>(i)][static_cast<size_t>(j)]);
    }
    return m;
}

/// Independent pseudoinverse for the Laplacian of a balanced connected
/// digraph: L+ = (L + J/n)^-1 - J/n with J the all-ones matrix. Valid
/// because L has zero row and column sums and rank n-1, so J/n projects
/// onto the shared null space.
inline resdist::RatMatrix pinv_via_ones_shift(const resdist::RatMatrix& l) {
    const int n = l.rows();
    const resdist::RatMatrix jn =
        resdist::RatMatrix::ones(n, n) * resdist::Rat(1, static_cast<long>(n));
    return resdist::inverse(l + jn) - jn;
}

/// Determinant by cofactor expansion along the first row; exponential, so
/// only for small test matrices.
inline resdist::Rat det_cofactor(const resdist::RatMatrix& a) {
    const int n = a.rows();
    if (n != a.cols()) throw std::invalid_argument("det_cofactor: not square");
    if (n == 0) return resdist::Rat(1);
    if (n == 1) return a(0, 0);
    resdist::Rat sum;
    for (int j = 0; j < n; ++j) {
        if (a(0, j).is_zero()) continue;
        const resdist::Rat term =
            a(0, j) * det_cofactor(resdist::delete_rows_cols(a, {0}, {j}));
        sum += (j % 2 == 0) ? term : -term;
    }
    return sum;
}

/// Brute-force articulation vertices of the underlying undirected graph:
/// vertex v is a cut vertex iff deleting it increases the component count.
inline std::vector<int> brute_cut_vertices(const resdist::Digraph& d) {
    const auto component_count = [&](int removed) {
        std::vector<std::vector<int>> adj(static_cast<size_t>(d.n()));
        for (const resdist::Arc& a : d.arcs()) {
            if (a.from == removed || a.to == removed) continue;
            adj[static_cast<size_t>(a.from) - 1].push_back(a.to - 1);
            adj[static_cast<size_t>(a.to) - 1].push_back(a.from - 1);
        }
        std::vector<bool> seen(static_cast<size_t>(d.n()), false);
        if (removed >= 1) seen[static_cast<size_t>(removed) - 1] = true;
        int comps = 0;
        for (int s = 0; s < d.n(); ++s) {
            if (seen[static_cast<size_t>(s)]) continue;
            ++comps;
            std::vector<int> stack{s};
            seen[static_cast<size_t>(s)] = true;
            while (!stack.empty()) {
                const int u = stack.back();
                stack.pop_back();
                for (int v : adj[static_cast<size_t>(u)])
                    if (!seen[static_cast<size_t>(v)]) {
                        seen[static_cast<size_t>(v)] = true;
                        stack.push_back(v);
                    }
            }
        }
        return comps;
    };
    const int base = component_count(0);
    std::vector<int> cuts;
    for (int v = 1; v <= d.n(); ++v)
        if (component_count(v) > base) cuts.push_back(v);
    return cuts;
}

/// Random matrix with integer entries in [lo, hi].
inline resdist::RatMatrix random_int_matrix(int rows, int cols, int lo, int hi,
                                            resdist::SplitMix64& rng) {
    resdist::RatMatrix m(rows, cols);
    for (int i = 0; i < rows; ++i)
        for (int j = 0; j < cols; ++j) m(i, j) = resdist::Rat(rng.range(lo, hi));
    return m;
}

/// Random matrix with small rational entries.
inline resdist::RatMatrix random_rat_matrix(int rows, int cols, resdist::SplitMix64& rng) {
    resdist::RatMatrix m(rows, cols);
    for (int i = 0; i < rows; ++i)
        for (int j = 0; j < cols; ++j)
            m(i, j) = resdist::Rat(rng.range(-5, 5), rng.range(1, 4));
    return m;
}

struct CommandResult {
    int exit_code = -1;
    std::string output;  // stdout and stderr interleaved
};

/// Runs a shell command, capturing combined stdout/stderr and the exit
/// code (-1 when the process did not exit normally).
inline CommandResult run_command(const std::string& cmd) {
    const std::string full = cmd + " 2>&1";
    FILE* pipe = popen(full.c_str(), "r");
    if (!pipe) throw std::runtime_error("popen failed for: " + cmd);
    CommandResult res;
    char buf[4096];
    size_t got;
    while ((got = fread(buf, 1, sizeof buf, pipe)) > 0) res.output.append(buf, got);
    const int status = pclose(pipe);
    if (WIFEXITED(status)) res.exit_code = WEXITSTATUS(status);
    return res;
}

inline std::string shell_quote(const std::string& s) {
    std::string out = "'";
    for (char c : s) {
        if (c == '\'')
            out += "'\\''";
        else
            out += c;
    }
    return out + "'";
}

}  // namespace support
