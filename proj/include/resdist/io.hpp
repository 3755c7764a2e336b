#pragma once

#include <json.hpp>

#include <charconv>
#include <cstdint>
#include <set>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "resdist/digraph.hpp"
#include "resdist/generators.hpp"
#include "resdist/spectral.hpp"
#include "resdist/verify.hpp"

namespace resdist {

inline constexpr const char* kToolName = "resdist";
inline constexpr const char* kToolVersion = "1.0.0";

/// Reports preserve insertion order so identical inputs yield identical
/// bytes.
using Json = nlohmann::ordered_json;

// ---------------------------------------------------------------------------
// Edge-list format
//
//   # comment (anywhere; rest of line ignored)
//   n 8        optional header; otherwise n = largest label seen
//   1 3        one arc per line, 1-based labels
// ---------------------------------------------------------------------------

namespace detail {

inline bool parse_int_token(const std::string& tok, int& out) {
    const char* first = tok.data();
    const char* last = tok.data() + tok.size();
    const auto [ptr, ec] = std::from_chars(first, last, out);
    return ec == std::errc() && ptr == last;
}

}  // namespace detail

inline Digraph parse_edge_list(std::string_view text, const std::string& source) {
    int n = 0;
    bool have_header = false;
    std::vector<Arc> arcs;
    std::set<Arc> seen;
    int line_no = 0;
    auto fail = [&](const std::string& msg) {
        throw std::runtime_error(source + ":" + std::to_string(line_no) + ": " + msg);
    };

    std::istringstream in{std::string(text)};
    std::string line;
    while (std::getline(in, line)) {
        ++line_no;
        if (const auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
        std::istringstream ls(line);
        std::string a, b, extra;
        if (!(ls >> a)) continue;
        if (a == "n") {
            if (have_header) fail("duplicate header");
            if (!arcs.empty()) fail("header must precede all arcs");
            if (!(ls >> b) || ls >> extra) fail("header must be 'n <count>'");
            if (!detail::parse_int_token(b, n) || n < 1)
                fail("invalid vertex count '" + b + "'");
            have_header = true;
            continue;
        }
        if (!(ls >> b) || ls >> extra) fail("expected 'u v', got '" + line + "'");
        Arc arc;
        if (!detail::parse_int_token(a, arc.from) || !detail::parse_int_token(b, arc.to))
            fail("invalid arc tokens '" + a + " " + b + "'");
        if (arc.from < 1 || arc.to < 1) fail("vertex labels start at 1");
        if (have_header && (arc.from > n || arc.to > n))
            fail("arc " + to_string(arc) + " exceeds declared n " + std::to_string(n));
        if (arc.from == arc.to) fail("self-loop " + to_string(arc));
        if (!seen.insert(arc).second) fail("duplicate arc " + to_string(arc));
        arcs.push_back(arc);
        if (!have_header) n = std::max({n, arc.from, arc.to});
    }
    line_no = 0;
    if (n < 1) fail("no vertices (empty input needs an 'n <count>' header)");
    return Digraph(n, std::move(arcs));
}

inline std::string emit_edge_list(const Digraph& d) {
    std::string out = "n " + std::to_string(d.n()) + "\n";
    for (const Arc& a : d.arcs())
        out += std::to_string(a.from) + " " + std::to_string(a.to) + "\n";
    return out;
}

// ---------------------------------------------------------------------------
// JSON graph format: {"n": 8, "arcs": [[1,3],[2,1],...]}
// ---------------------------------------------------------------------------

inline Digraph parse_graph_json(std::string_view text, const std::string& source) {
    Json j;
    try {
        j = Json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw std::runtime_error(source + ": " + e.what());
    }
    auto fail = [&](const std::string& msg) { throw std::runtime_error(source + ": " + msg); };
    if (!j.is_object()) fail("top level must be an object");
    if (!j.contains("n") || !j["n"].is_number_integer()) fail("missing integer field 'n'");
    if (!j.contains("arcs") || !j["arcs"].is_array()) fail("missing array field 'arcs'");
    const int n = j["n"].get<int>();
    if (n < 1) fail("'n' must be positive");
    std::vector<Arc> arcs;
    std::set<Arc> seen;
    int idx = 0;
    for (const auto& e : j["arcs"]) {
        const std::string where = "arcs[" + std::to_string(idx++) + "]";
        if (!e.is_array() || e.size() != 2 || !e[0].is_number_integer() ||
            !e[1].is_number_integer())
            fail(where + ": expected [u, v]");
        const Arc arc{e[0].get<int>(), e[1].get<int>()};
        if (arc.from < 1 || arc.from > n || arc.to < 1 || arc.to > n)
            fail(where + ": arc " + to_string(arc) + " outside 1.." + std::to_string(n));
        if (arc.from == arc.to) fail(where + ": self-loop " + to_string(arc));
        if (!seen.insert(arc).second) fail(where + ": duplicate arc " + to_string(arc));
        arcs.push_back(arc);
    }
    return Digraph(n, std::move(arcs));
}

inline std::string emit_graph_json(const Digraph& d) {
    Json j;
    j["n"] = d.n();
    j["arcs"] = Json::array();
    for (const Arc& a : d.arcs()) j["arcs"].push_back({a.from, a.to});
    return j.dump() + "\n";
}

// ---------------------------------------------------------------------------
// Report building. Rationals render both ways: "exact" ("p/q") and
// "decimal" (fixed places, round half to even), always as strings so the
// bytes never depend on the platform's float formatting.
// ---------------------------------------------------------------------------

struct RenderOptions {
    int precision = 4;
    bool timings = false;    // timings vary run to run; off keeps reports byte-stable
    bool exact_only = false; // drop decimal renderings, leaving only "p/q" strings
};

inline Json matrix_exact_json(const RatMatrix& m) {
    Json rows = Json::array();
    for (int i = 0; i < m.rows(); ++i) {
        Json row = Json::array();
        for (int j = 0; j < m.cols(); ++j) row.push_back(m(i, j).to_string());
        rows.push_back(std::move(row));
    }
    return rows;
}

inline Json matrix_decimal_json(const RatMatrix& m, int places) {
    Json rows = Json::array();
    for (int i = 0; i < m.rows(); ++i) {
        Json row = Json::array();
        for (int j = 0; j < m.cols(); ++j) row.push_back(m(i, j).to_decimal(places));
        rows.push_back(std::move(row));
    }
    return rows;
}

/// Integer-valued matrix (e.g. a Laplacian) as plain JSON integers.
inline Json matrix_int_json(const RatMatrix& m) {
    Json rows = Json::array();
    for (int i = 0; i < m.rows(); ++i) {
        Json row = Json::array();
        for (int j = 0; j < m.cols(); ++j) {
            const Rat& e = m(i, j);
            if (!e.is_integer())
                throw std::logic_error("matrix_int_json: non-integer entry " + e.to_string());
            row.push_back(static_cast<std::int64_t>(e.num().get_si()));
        }
        rows.push_back(std::move(row));
    }
    return rows;
}

/// Distance matrix as integers, with "inf" for unreachable pairs.
inline Json dist_json(const DistMatrix& d) {
    Json rows = Json::array();
    for (int i = 0; i < d.n(); ++i) {
        Json row = Json::array();
        for (int j = 0; j < d.n(); ++j) {
            if (d(i, j) == DistMatrix::kInf)
                row.push_back("inf");
            else
                row.push_back(d(i, j));
        }
        rows.push_back(std::move(row));
    }
    return rows;
}

inline Json graph_summary_json(const GraphSummary& s) {
    Json j;
    j["n"] = s.n;
    j["arcs"] = s.arcs;
    j["balanced"] = s.balanced;
    j["strongly_connected"] = s.strongly_connected;
    return j;
}

inline Json report_header(const char* command, const Json& config) {
    Json j;
    j["tool"] = kToolName;
    j["version"] = kToolVersion;
    j["command"] = command;
    j["config"] = config;
    return j;
}

/// Laplacian, pseudoinverse, resistances, distances, and the arborescence
/// count, for a strongly connected digraph.
inline Json compute_report(const Digraph& d, const Json& config, const RenderOptions& opt) {
    if (!is_strongly_connected(d))
        throw std::runtime_error(
            "compute: digraph is not strongly connected; resistance is undefined");
    const ResistanceResult rr = resistance(d);
    Json j = report_header("compute", config);
    j["graph"] = graph_summary_json(summarize(d));
    if (rr.kappa) {
        j["kappa"] = rr.kappa->to_string();
        j["balanced_closed_form"] = rr.balanced_path_used;
    }
    j["laplacian"] = matrix_int_json(rr.laplacian);
    Json pinv{{"exact", matrix_exact_json(rr.pinv)}};
    Json res{{"exact", matrix_exact_json(rr.r)}};
    if (!opt.exact_only) {
        pinv["decimal"] = matrix_decimal_json(rr.pinv, opt.precision);
        res["decimal"] = matrix_decimal_json(rr.r, opt.precision);
    }
    j["pseudoinverse"] = std::move(pinv);
    j["resistance"] = std::move(res);
    j["distance"] = dist_json(shortest_distances(d));
    return j;
}

struct VerifyOptions {
    bool identities = false;
    bool theorem = false;
};

/// Distance-bound verdicts. `violation_found` at the top level aggregates
/// every section that ran; it is what the CLI exit code reflects.
inline Json verify_report(const Digraph& d, const Json& config, const RenderOptions& opt,
                          const VerifyOptions& vopt) {
    if (!is_strongly_connected(d))
        throw std::runtime_error("verify: digraph is not strongly connected");
    Json j = report_header("verify", config);
    j["graph"] = graph_summary_json(summarize(d));
    bool violation = false;

    const ConjectureReport conj = check_conjecture(d);
    Json cj;
    cj["holds"] = conj.holds;
    cj["violations"] = Json::array();
    for (const Violation& v : conj.violations) {
        Json e{{"i", v.i}, {"j", v.j}, {"r", v.r.to_string()}};
        if (!opt.exact_only) e["r_decimal"] = v.r.to_decimal(opt.precision);
        e["d"] = v.dist;
        cj["violations"].push_back(std::move(e));
    }
    j["conjecture"] = std::move(cj);
    violation = violation || !conj.holds;

    if (is_balanced(d)) {
        const ArcBoundReport ab = check_arc_bound(d);
        Json abj{{"status", ab.holds ? "pass" : "fail"},
                 {"worst_arc", {ab.worst.from, ab.worst.to}},
                 {"max_arc_resistance", ab.worst_r.to_string()}};
        if (!opt.exact_only)
            abj["max_arc_resistance_decimal"] = ab.worst_r.to_decimal(opt.precision);
        j["arc_bound"] = std::move(abj);
        violation = violation || !ab.holds;
    } else {
        j["arc_bound"] = Json{{"status", "skipped"}, {"reason", "not balanced"}};
    }

    if (vopt.identities) {
        Json ids;
        for (const auto& [name, res] : check_identities(d)) {
            Json e;
            e["status"] = to_string(res.status);
            if (!res.detail.empty()) e["detail"] = res.detail;
            ids[name] = std::move(e);
            violation = violation || res.status == IdentityResult::Status::fail;
        }
        j["identities"] = std::move(ids);
    }

    if (vopt.theorem) {
        const TheoremReport tr = verify_theorem_main(d);
        Json t;
        t["certificate_ok"] = tr.certificate.ok;
        t["gluing_order"] = tr.certificate.order;
        t["attach_vertices"] = tr.certificate.attach_vertex;
        Json blocks = Json::array();
        for (const BlockCheck& bc : tr.block_checks)
            blocks.push_back(
                Json{{"index", bc.block_index}, {"vertices", bc.vertices}, {"holds", bc.holds}});
        t["blocks"] = std::move(blocks);
        t["whole_graph_holds"] = tr.whole.holds;
        t["fatal_inconsistency"] = tr.fatal_inconsistency;
        if (!tr.certificate.failure_reason.empty())
            t["failure_reason"] = tr.certificate.failure_reason;
        j["theorem"] = std::move(t);
        violation = violation || !tr.certificate.ok || tr.fatal_inconsistency;
    }

    j["violation_found"] = violation;
    if (opt.timings) {
        Json t;
        for (const auto& [phase, ms] : conj.timings_ms) t[phase] = ms;
        j["timings_ms"] = std::move(t);
    }
    return j;
}

/// Blocks, cut vertices, cactus status, and (for balanced graphs) a
/// one-point-union assembly order.
inline Json decompose_report(const Digraph& d, const Json& config) {
    const BlockDecomposition bd = blocks(d);
    Json j = report_header("decompose", config);
    j["graph"] = graph_summary_json(summarize(d));
    j["cut_vertices"] = bd.cut_vertices;
    Json bj = Json::array();
    for (size_t b = 0; b < bd.blocks.size(); ++b) {
        Json e;
        e["index"] = static_cast<int>(b);
        e["vertices"] = bd.block_vertices[b];
        Json arcs = Json::array();
        for (const Arc& a : bd.blocks[b]) arcs.push_back({a.from, a.to});
        e["arcs"] = std::move(arcs);
        e["cut_vertices"] = bd.block_cut_vertices[b];
        bj.push_back(std::move(e));
    }
    j["blocks"] = std::move(bj);
    j["is_directed_cactus"] = is_directed_cactus(d);
    // A balanced connected digraph is strongly connected, so every block
    // supports a per-block distance-bound verdict.
    if (is_balanced(d)) {
        const TheoremReport tr = verify_theorem_main(d);
        Json cert;
        cert["attempted"] = true;
        cert["ok"] = tr.certificate.ok;
        cert["order"] = tr.certificate.order;
        cert["attach_vertices"] = tr.certificate.attach_vertex;
        Json bl = Json::array();
        for (const BlockCheck& bc : tr.block_checks)
            bl.push_back(Json{{"index", bc.block_index},
                              {"vertices", bc.vertices},
                              {"conjecture_holds", bc.holds}});
        cert["blocks"] = std::move(bl);
        if (!tr.certificate.failure_reason.empty())
            cert["failure_reason"] = tr.certificate.failure_reason;
        j["certificate"] = std::move(cert);
    } else {
        j["certificate"] = Json{{"attempted", false}, {"reason", "not balanced"}};
    }
    return j;
}

// ---------------------------------------------------------------------------
// Family sweeps: generate many graphs, verify the distance bound on each,
// and summarize. The "gap" is r(i,j) - d(i,j); its maximum over all pairs
// and graphs measures how close the family comes to a violation (positive
// means one was found).
// ---------------------------------------------------------------------------

struct ExploreSpec {
    std::string kind;  // cactus | class_c | balanced_random | two_overlap
    int count = 100;
    std::uint64_t seed = 0;
    int n = 6;          // balanced_random / two_overlap piece size cap
    int blocks = 4;     // cactus / class_c block count cap
    int piece_min = 2;  // cactus cycle lengths, class_c piece sizes
    int piece_max = 5;
    std::string block_kind = "cycle";  // class_c pieces
};

struct ExploreOutcome {
    Json report;
    bool violation_found = false;
};

namespace detail {

/// Glues d2 onto d1 by identifying two vertex pairs: a2 with a1 and b2
/// with b1. Unlike the one-point union this can collide arcs; collisions
/// throw (the caller discards the sample).
inline Digraph two_vertex_overlap(const Digraph& d1, const Digraph& d2, int a1, int b1,
                                  int a2, int b2) {
    std::vector<int> map2(static_cast<size_t>(d2.n()));
    int next = d1.n();
    for (int v = 1; v <= d2.n(); ++v)
        map2[static_cast<size_t>(v) - 1] = v == a2 ? a1 : v == b2 ? b1 : ++next;
    std::vector<Arc> arcs = d1.arcs();
    for (const Arc& a : d2.arcs())
        arcs.push_back({map2[static_cast<size_t>(a.from) - 1],
                        map2[static_cast<size_t>(a.to) - 1]});
    return Digraph(d1.n() + d2.n() - 2, std::move(arcs));
}

inline Digraph explore_balanced_random(int n_cap, SplitMix64& rng) {
    const int n = rng.range(2, std::max(2, n_cap));
    int extra = n == 2 ? 0 : rng.range(0, n - 2);
    return resdist::gen_balanced_random(n, n + extra, rng.next());
}

}  // namespace detail

inline ExploreOutcome explore(const ExploreSpec& spec, const Json& config) {
    SplitMix64 rng(spec.seed);
    int tested = 0;
    int discarded = 0;
    int graphs_with_violation = 0;
    bool have_gap = false;
    Rat max_gap;
    Json gap_witness;

    for (int idx = 0; idx < spec.count; ++idx) {
        Digraph g;
        if (spec.kind == "cactus") {
            g = gen_cactus(rng.range(1, spec.blocks), spec.piece_min, spec.piece_max,
                           rng.next());
        } else if (spec.kind == "class_c") {
            g = gen_class_c(rng.range(1, spec.blocks), spec.block_kind, spec.piece_min,
                            spec.piece_max, rng.next())
                    .graph;
        } else if (spec.kind == "balanced_random") {
            g = detail::explore_balanced_random(spec.n, rng);
        } else if (spec.kind == "two_overlap") {
            const Digraph d1 = detail::explore_balanced_random(spec.n, rng);
            const Digraph d2 = detail::explore_balanced_random(spec.n, rng);
            if (d1.n() < 2 || d2.n() < 2) {
                ++discarded;
                continue;
            }
            const int a1 = rng.range(1, d1.n() - 1);
            const int b1 = rng.range(a1 + 1, d1.n());
            const int a2 = rng.range(1, d2.n());
            int b2 = rng.range(1, d2.n() - 1);
            if (b2 >= a2) ++b2;
            try {
                g = detail::two_vertex_overlap(d1, d2, a1, b1, a2, b2);
            } catch (const std::invalid_argument&) {
                ++discarded;  // the two pieces collided on an arc
                continue;
            }
        } else {
            throw std::runtime_error("explore: unknown kind '" + spec.kind + "'");
        }

        if (!is_balanced(g)) {
            // Cannot occur for the generated families above (vertex
            // identification adds degrees), but the sweep only ever claims
            // verdicts about balanced graphs, so the gate stays.
            ++discarded;
            continue;
        }
        ++tested;
        const ResistanceResult rr = resistance(g);
        const DistMatrix dist = shortest_distances(g);
        bool violated = false;
        for (int i = 0; i < g.n(); ++i)
            for (int j = 0; j < g.n(); ++j) {
                if (i == j || dist(i, j) == DistMatrix::kInf) continue;
                const Rat gap = rr.r(i, j) - Rat(static_cast<long>(dist(i, j)));
                if (gap > Rat(0)) violated = true;
                if (!have_gap || gap > max_gap) {
                    have_gap = true;
                    max_gap = gap;
                    gap_witness = Json{{"graph_index", idx},
                                       {"i", i + 1},
                                       {"j", j + 1},
                                       {"r", rr.r(i, j).to_string()},
                                       {"d", dist(i, j)}};
                }
            }
        if (violated) ++graphs_with_violation;
    }

    ExploreOutcome out;
    out.violation_found = graphs_with_violation > 0;
    Json j = report_header("explore", config);
    j["kind"] = spec.kind;
    j["count"] = spec.count;
    j["tested"] = tested;
    j["discarded"] = discarded;
    j["holds"] = tested - graphs_with_violation;
    j["violations"] = graphs_with_violation;
    if (have_gap) {
        j["max_gap"] = Json{{"exact", max_gap.to_string()}, {"witness", gap_witness}};
    } else {
        j["max_gap"] = nullptr;
    }
    out.report = std::move(j);
    return out;
}

// ---------------------------------------------------------------------------
// Fixed-width table rendering of the JSON reports, for terminal reading.
// Pair listings are sorted by (i, j) ascending. Derived from the JSON so
// the two output formats can never disagree.
// ---------------------------------------------------------------------------

namespace detail {

inline std::string format_rows(const std::vector<std::vector<std::string>>& rows) {
    std::vector<size_t> widths;
    for (const auto& r : rows) {
        if (widths.size() < r.size()) widths.resize(r.size(), 0);
        for (size_t c = 0; c < r.size(); ++c) widths[c] = std::max(widths[c], r[c].size());
    }
    std::string out;
    for (const auto& r : rows) {
        std::string line;
        for (size_t c = 0; c < r.size(); ++c) {
            line += r[c];
            if (c + 1 < r.size()) line += std::string(widths[c] - r[c].size() + 2, ' ');
        }
        out += line + "\n";
    }
    return out;
}

inline std::string graph_line(const Json& g) {
    return "graph: n=" + std::to_string(g.at("n").get<int>()) +
           " arcs=" + std::to_string(g.at("arcs").get<int>()) +
           " balanced=" + (g.at("balanced").get<bool>() ? "yes" : "no") +
           " strongly_connected=" + (g.at("strongly_connected").get<bool>() ? "yes" : "no");
}

inline std::string int_list(const Json& a) {
    std::string s = "[";
    for (size_t k = 0; k < a.size(); ++k)
        s += (k ? "," : "") + std::to_string(a[k].get<long long>());
    return s + "]";
}

inline std::string dist_cell(const Json& e) {
    return e.is_string() ? e.get<std::string>() : std::to_string(e.get<long long>());
}

}  // namespace detail

inline std::string render_table(const Json& rep) {
    const std::string cmd = rep.at("command").get<std::string>();
    std::string out = std::string(kToolName) + " " + kToolVersion + " " + cmd + "\n";
    if (rep.contains("graph")) out += detail::graph_line(rep.at("graph")) + "\n";

    if (cmd == "compute") {
        if (rep.contains("kappa"))
            out += "kappa: " + rep.at("kappa").get<std::string>() + "\n";
        const Json& rx = rep.at("resistance").at("exact");
        const bool dec = rep.at("resistance").contains("decimal");
        const Json& dm = rep.at("distance");
        std::vector<std::vector<std::string>> rows;
        rows.push_back(dec ? std::vector<std::string>{"i", "j", "r", "r_decimal", "d"}
                           : std::vector<std::string>{"i", "j", "r", "d"});
        const int n = static_cast<int>(rx.size());
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) {
                if (i == j) continue;
                std::vector<std::string> row{std::to_string(i + 1), std::to_string(j + 1),
                                             rx[i][j].get<std::string>()};
                if (dec)
                    row.push_back(
                        rep.at("resistance").at("decimal")[i][j].get<std::string>());
                row.push_back(detail::dist_cell(dm[i][j]));
                rows.push_back(std::move(row));
            }
        return out + detail::format_rows(rows);
    }

    if (cmd == "verify") {
        const Json& cj = rep.at("conjecture");
        const auto& viols = cj.at("violations");
        out += std::string("conjecture: ") +
               (cj.at("holds").get<bool>()
                    ? "holds"
                    : "FAILS (" + std::to_string(viols.size()) + " violations)") +
               "\n";
        if (!viols.empty()) {
            std::vector<std::vector<std::string>> rows{{"i", "j", "r", "d"}};
            for (const auto& v : viols)
                rows.push_back({std::to_string(v.at("i").get<int>()),
                                std::to_string(v.at("j").get<int>()),
                                v.at("r").get<std::string>(),
                                std::to_string(v.at("d").get<long long>())});
            out += detail::format_rows(rows);
        }
        const Json& ab = rep.at("arc_bound");
        if (ab.at("status").get<std::string>() == "skipped") {
            out += "arc_bound: skipped (" + ab.at("reason").get<std::string>() + ")\n";
        } else {
            out += "arc_bound: " + ab.at("status").get<std::string>() + " worst_arc=" +
                   detail::int_list(ab.at("worst_arc")) + " max=" +
                   ab.at("max_arc_resistance").get<std::string>() + "\n";
        }
        if (rep.contains("identities")) {
            std::vector<std::vector<std::string>> rows;
            for (const auto& [name, e] : rep.at("identities").items()) {
                std::vector<std::string> row{name, e.at("status").get<std::string>()};
                if (e.contains("detail")) row.push_back(e.at("detail").get<std::string>());
                rows.push_back(std::move(row));
            }
            out += "identities:\n" + detail::format_rows(rows);
        }
        if (rep.contains("theorem")) {
            const Json& t = rep.at("theorem");
            out += std::string("theorem: certificate=") +
                   (t.at("certificate_ok").get<bool>() ? "ok" : "FAILED") +
                   " blocks=" + std::to_string(t.at("blocks").size()) + " whole=" +
                   (t.at("whole_graph_holds").get<bool>() ? "holds" : "FAILS") +
                   " fatal_inconsistency=" +
                   (t.at("fatal_inconsistency").get<bool>() ? "yes" : "no") + "\n";
        }
        out += std::string("violation_found: ") +
               (rep.at("violation_found").get<bool>() ? "yes" : "no") + "\n";
        return out;
    }

    if (cmd == "decompose") {
        out += "cut_vertices: " + detail::int_list(rep.at("cut_vertices")) + "\n";
        std::vector<std::vector<std::string>> rows{{"block", "vertices", "arcs", "cut"}};
        for (const auto& b : rep.at("blocks")) {
            std::string arcs;
            for (const auto& a : b.at("arcs"))
                arcs += "(" + std::to_string(a[0].get<int>()) + "," +
                        std::to_string(a[1].get<int>()) + ")";
            rows.push_back({std::to_string(b.at("index").get<int>()),
                            detail::int_list(b.at("vertices")), arcs,
                            detail::int_list(b.at("cut_vertices"))});
        }
        out += detail::format_rows(rows);
        out += std::string("is_directed_cactus: ") +
               (rep.at("is_directed_cactus").get<bool>() ? "yes" : "no") + "\n";
        const Json& cert = rep.at("certificate");
        if (!cert.at("attempted").get<bool>()) {
            out += "certificate: not attempted (" + cert.at("reason").get<std::string>() +
                   ")\n";
        } else {
            out += std::string("certificate: ") +
                   (cert.at("ok").get<bool>() ? "ok" : "FAILED") +
                   " order=" + detail::int_list(cert.at("order")) +
                   " attach=" + detail::int_list(cert.at("attach_vertices")) + "\n";
            for (const auto& b : cert.at("blocks"))
                out += "  block " + std::to_string(b.at("index").get<int>()) + " vertices=" +
                       detail::int_list(b.at("vertices")) + " conjecture=" +
                       (b.at("conjecture_holds").get<bool>() ? "holds" : "FAILS") + "\n";
        }
        return out;
    }

    if (cmd == "explore") {
        out += "kind: " + rep.at("kind").get<std::string>() +
               " count=" + std::to_string(rep.at("count").get<int>()) +
               " tested=" + std::to_string(rep.at("tested").get<int>()) +
               " discarded=" + std::to_string(rep.at("discarded").get<int>()) +
               " holds=" + std::to_string(rep.at("holds").get<int>()) +
               " violations=" + std::to_string(rep.at("violations").get<int>()) + "\n";
        if (rep.at("max_gap").is_null()) {
            out += "max_gap: none\n";
        } else {
            const Json& g = rep.at("max_gap");
            const Json& w = g.at("witness");
            out += "max_gap: " + g.at("exact").get<std::string>() + " at graph " +
                   std::to_string(w.at("graph_index").get<int>()) + " pair (" +
                   std::to_string(w.at("i").get<int>()) + "," +
                   std::to_string(w.at("j").get<int>()) + ") r=" +
                   w.at("r").get<std::string>() + " d=" +
                   std::to_string(w.at("d").get<long long>()) + "\n";
        }
        return out;
    }

    return out + rep.dump(2) + "\n";
}

}  // namespace resdist
