#pragma once

#include <chrono>
#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "resdist/blocks.hpp"
#include "resdist/digraph.hpp"
#include "resdist/spectral.hpp"

namespace resdist {

/// A pair where resistance exceeds the directed shortest-path distance.
struct Violation {
    int i = 0;
    int j = 0;
    Rat r;
    std::int64_t dist = 0;
};

struct GraphSummary {
    int n = 0;
    int arcs = 0;
    bool balanced = false;
    bool strongly_connected = false;
};

inline GraphSummary summarize(const Digraph& d) {
    return {d.n(), d.arc_count(), is_balanced(d), is_strongly_connected(d)};
}

/// Outcome of "resistance never exceeds distance" over all ordered pairs,
/// with every violating pair listed (sorted by (i, j)) and the phase
/// timings that produced it.
struct ConjectureReport {
    GraphSummary summary;
    bool holds = false;
    std::vector<Violation> violations;
    std::map<std::string, double> timings_ms;
};

namespace detail {

class PhaseTimer {
  public:
    explicit PhaseTimer(std::map<std::string, double>& sink) : sink_(sink) {}
    template <typename F>
    auto time(const std::string& phase, F&& f) {
        const auto start = std::chrono::steady_clock::now();
        auto result = f();
        const auto stop = std::chrono::steady_clock::now();
        sink_[phase] = std::chrono::duration<double, std::milli>(stop - start).count();
        return result;
    }

  private:
    std::map<std::string, double>& sink_;
};

}  // namespace detail

/// Compares every ordered resistance against the hop-count distance.
/// Requires strong connectivity (so every resistance and distance is
/// finite); balance is reported but not required — unbalanced strongly
/// connected inputs are exactly where violations live.
inline ConjectureReport check_conjecture(const Digraph& d) {
    ConjectureReport rep;
    rep.summary = summarize(d);
    detail::PhaseTimer timer(rep.timings_ms);
    const ResistanceResult rr = timer.time("resistance", [&] { return resistance(d); });
    const DistMatrix dist = timer.time("distances", [&] { return shortest_distances(d); });
    timer.time("compare", [&] {
        for (int i = 0; i < d.n(); ++i)
            for (int j = 0; j < d.n(); ++j) {
                if (i == j) continue;
                if (rr.r(i, j) > Rat(static_cast<long>(dist(i, j))))
                    rep.violations.push_back({i + 1, j + 1, rr.r(i, j), dist(i, j)});
            }
        return 0;
    });
    rep.holds = rep.violations.empty();
    return rep;
}

/// The sharpest form of the distance bound on arcs: for every arc (i, j),
/// r(i,j) <= d(i,j) = 1. Reports the maximum arc resistance and where it
/// is attained (first arc in sorted order on ties).
struct ArcBoundReport {
    bool holds = false;
    Arc worst;
    Rat worst_r;
};

inline ArcBoundReport check_arc_bound(const Digraph& d) {
    if (!is_balanced(d))
        throw std::invalid_argument("check_arc_bound: digraph is not balanced");
    if (d.arcs().empty())
        throw std::invalid_argument("check_arc_bound: digraph has no arcs");
    const ResistanceResult rr = resistance(d);
    ArcBoundReport rep;
    rep.worst = d.arcs().front();
    rep.worst_r = rr.r(rep.worst.from - 1, rep.worst.to - 1);
    for (const Arc& a : d.arcs()) {
        const Rat r = rr.r(a.from - 1, a.to - 1);
        if (r > rep.worst_r) {
            rep.worst = a;
            rep.worst_r = r;
        }
    }
    rep.holds = rep.worst_r <= Rat(1);
    return rep;
}

/// One named identity check: pass, fail (with a witness), or skipped
/// (with the reason).
struct IdentityResult {
    enum class Status { pass, fail, skipped };
    Status status = Status::skipped;
    std::string detail;  // witness on fail, reason on skip, empty on pass
};

inline const char* to_string(IdentityResult::Status s) {
    switch (s) {
        case IdentityResult::Status::pass: return "pass";
        case IdentityResult::Status::fail: return "fail";
        default: return "skipped";
    }
}

/// Runs the exact-identity suites on a strongly connected digraph and
/// returns them keyed by stable names:
///   nonnegativity          every r(i,j) >= 0
///   zero_diagonal          r(i,j) = 0 exactly when i = j
///   triangle_inequality    r(i,j) <= r(i,k) + r(k,j) for all triples
///   sum_identity           r(i,j) + r(j,i) = 2 * pair_cofactor(i,j) / kappa
///   arc_cofactor_bound     pair_cofactor(i,j) <= kappa on every arc (i,j)
///   indegree_one_arc_bound r(i,j) <= 1 on arcs whose endpoints both have
///                          in-degree 1
/// The first three are informative on any strongly connected input; the
/// last three quantify over balanced digraphs only and are skipped (with
/// reason "not balanced") otherwise.
inline std::map<std::string, IdentityResult> check_identities(const Digraph& d) {
    if (!is_strongly_connected(d))
        throw std::invalid_argument("check_identities: digraph is not strongly connected");
    const ResistanceResult rr = resistance(d);
    const int n = d.n();
    std::map<std::string, IdentityResult> out;
    using Status = IdentityResult::Status;
    auto pair_label = [](int i, int j) {
        return "(" + std::to_string(i + 1) + "," + std::to_string(j + 1) + ")";
    };

    {
        IdentityResult res{Status::pass, ""};
        for (int i = 0; i < n && res.status == Status::pass; ++i)
            for (int j = 0; j < n; ++j)
                if (rr.r(i, j) < Rat(0)) {
                    res = {Status::fail,
                           "r" + pair_label(i, j) + " = " + rr.r(i, j).to_string() + " < 0"};
                    break;
                }
        out["nonnegativity"] = res;
    }
    {
        IdentityResult res{Status::pass, ""};
        for (int i = 0; i < n && res.status == Status::pass; ++i)
            for (int j = 0; j < n; ++j) {
                const bool zero = rr.r(i, j).is_zero();
                if (zero != (i == j)) {
                    res = {Status::fail, "r" + pair_label(i, j) + " = " +
                                             rr.r(i, j).to_string()};
                    break;
                }
            }
        out["zero_diagonal"] = res;
    }
    {
        IdentityResult res{Status::pass, ""};
        for (int i = 0; i < n && res.status == Status::pass; ++i)
            for (int j = 0; j < n && res.status == Status::pass; ++j)
                for (int k = 0; k < n; ++k) {
                    if (i == j || j == k || i == k) continue;
                    if (rr.r(i, j) > rr.r(i, k) + rr.r(k, j)) {
                        res = {Status::fail,
                               "r" + pair_label(i, j) + " = " + rr.r(i, j).to_string() +
                                   " > r" + pair_label(i, k) + " + r" + pair_label(k, j) +
                                   " = " + (rr.r(i, k) + rr.r(k, j)).to_string()};
                        break;
                    }
                }
        out["triangle_inequality"] = res;
    }

    if (!rr.kappa) {
        const IdentityResult skipped{Status::skipped, "not balanced"};
        out["sum_identity"] = skipped;
        out["arc_cofactor_bound"] = skipped;
        out["indegree_one_arc_bound"] = skipped;
        return out;
    }

    const Rat kap = *rr.kappa;
    {
        IdentityResult res{Status::pass, ""};
        for (int i = 0; i < n && res.status == Status::pass; ++i)
            for (int j = i + 1; j < n; ++j) {
                const Rat lhs = rr.r(i, j) + rr.r(j, i);
                const Rat rhs = Rat(2) * pair_cofactor(d, i + 1, j + 1) / kap;
                if (lhs != rhs) {
                    res = {Status::fail, "r" + pair_label(i, j) + " + r" + pair_label(j, i) +
                                             " = " + lhs.to_string() + " but 2*minor/kappa = " +
                                             rhs.to_string()};
                    break;
                }
            }
        out["sum_identity"] = res;
    }
    {
        IdentityResult res{Status::pass, ""};
        for (const Arc& a : d.arcs()) {
            const Rat minor = pair_cofactor(d, a.from, a.to);
            if (minor > kap) {
                res = {Status::fail, "minor at arc " + resdist::to_string(a) + " = " +
                                         minor.to_string() + " > kappa = " + kap.to_string()};
                break;
            }
        }
        out["arc_cofactor_bound"] = res;
    }
    {
        const Degrees deg = degrees(d);
        IdentityResult res{Status::pass, ""};
        for (const Arc& a : d.arcs()) {
            if (deg.in[a.from - 1] != 1 || deg.in[a.to - 1] != 1) continue;
            const Rat r = rr.r(a.from - 1, a.to - 1);
            if (r > Rat(1)) {
                res = {Status::fail, "r" + pair_label(a.from - 1, a.to - 1) + " = " +
                                         r.to_string() + " > 1 on an in-degree-1 arc"};
                break;
            }
        }
        out["indegree_one_arc_bound"] = res;
    }
    return out;
}

/// Per-block outcome inside a theorem-level verification.
struct BlockCheck {
    int block_index = 0;
    std::vector<int> vertices;  // original labels
    bool holds = false;
};

/// Structure theorem check: decompose a balanced connected digraph into
/// blocks, verify the distance bound on every block, and then on the whole
/// graph. The block results certify the whole-graph claim, so a graph
/// whose blocks all pass but which itself fails is flagged as a fatal
/// internal inconsistency rather than a mere counterexample.
struct TheoremReport {
    ConjectureReport whole;
    ClassCCertificate certificate;
    std::vector<BlockCheck> block_checks;
    bool fatal_inconsistency = false;
};

inline TheoremReport verify_theorem_main(const Digraph& d) {
    TheoremReport rep;
    rep.certificate = class_c_certificate(d, [&](const Digraph& block) {
        const ConjectureReport r = check_conjecture(block);
        BlockCheck bc;
        bc.block_index = static_cast<int>(rep.block_checks.size());
        bc.holds = r.holds;
        rep.block_checks.push_back(bc);
        return r.holds;
    });
    for (size_t s = 0; s < rep.block_checks.size(); ++s) {
        const int b = rep.certificate.order[s];
        rep.block_checks[s].block_index = b;
        rep.block_checks[s].vertices = rep.certificate.decomposition.block_vertices[b];
    }
    rep.whole = check_conjecture(d);
    rep.fatal_inconsistency = rep.certificate.ok && !rep.whole.holds;
    return rep;
}

}  // namespace resdist
