// Command-line front end: compute resistance matrices, verify distance
// bounds, decompose into blocks, generate graph families, and sweep
// families for near-violations.
//
// Exit codes: 0 = success / all checks hold, 1 = a mathematical violation
// (or internal inconsistency) was found, 2 = usage or input error.

#include <CLI11.hpp>

#include <cstdint>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include "resdist/resdist.hpp"

namespace {

using resdist::Json;

std::string read_all(const std::string& path) {
    if (path == "-") {
        std::ostringstream ss;
        ss << std::cin.rdbuf();
        return ss.str();
    }
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open '" + path + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void write_out(const std::string& path, const std::string& text) {
    if (path.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot write '" + path + "'");
    out << text;
}

struct InputOpts {
    std::string input;
    std::string fixture;
    std::string format = "auto";
};

void add_input_options(CLI::App* cmd, InputOpts& o) {
    auto* in = cmd->add_option("-i,--input", o.input, "graph file, '-' for stdin");
    auto* fx = cmd->add_option("--fixture", o.fixture, "named fixture graph");
    cmd->add_option("--format", o.format, "input format: edges|json (default: by extension)")
        ->check(CLI::IsMember({"auto", "edges", "json"}));
    in->excludes(fx);
    fx->excludes(in);
}

resdist::Digraph load_graph(const InputOpts& o, std::string& resolved_format) {
    if (!o.fixture.empty()) {
        resolved_format = "fixture";
        return resdist::fixture(o.fixture);
    }
    if (o.input.empty())
        throw std::runtime_error("no input given: pass --input or --fixture");
    const std::string text = read_all(o.input);
    std::string fmt = o.format;
    if (fmt == "auto") {
        if (o.input.size() >= 5 && o.input.substr(o.input.size() - 5) == ".json") {
            fmt = "json";
        } else if (o.input == "-") {
            const auto first = text.find_first_not_of(" \t\r\n");
            fmt = first != std::string::npos && text[first] == '{' ? "json" : "edges";
        } else {
            fmt = "edges";
        }
    }
    resolved_format = fmt;
    const std::string label = o.input == "-" ? "<stdin>" : o.input;
    return fmt == "json" ? resdist::parse_graph_json(text, label)
                         : resdist::parse_edge_list(text, label);
}

Json input_config(const InputOpts& o, const std::string& resolved_format, int precision) {
    Json c;
    if (!o.fixture.empty())
        c["fixture"] = o.fixture;
    else
        c["input"] = o.input == "-" ? "<stdin>" : o.input;
    c["format"] = resolved_format;
    c["precision"] = precision;
    return c;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact resistance distances on strongly connected digraphs"};
    app.set_version_flag("--version", std::string(resdist::kToolName) + " " +
                                          resdist::kToolVersion);
    app.require_subcommand(1);

    InputOpts cin_opts, vin_opts, din_opts;
    std::string c_output, v_output, d_output, g_output, e_output, f_output;
    std::string c_report = "json", v_report = "json", d_report = "json", e_report = "json";
    int c_precision = 4, v_precision = 4;
    bool v_timings = false, v_identities = false, v_theorem = false;
    bool c_exact_only = false, v_exact_only = false;

    const auto add_report_format = [](CLI::App* cmd, std::string& target) {
        cmd->add_option("--output-format", target, "report rendering (default json)")
            ->check(CLI::IsMember({"json", "table"}));
    };

    auto* cmd_compute = app.add_subcommand(
        "compute", "Laplacian, pseudoinverse, resistance and distance matrices");
    add_input_options(cmd_compute, cin_opts);
    cmd_compute->add_option("-o,--output", c_output, "write the report here");
    cmd_compute->add_option("--precision", c_precision, "decimal places (default 4)")
        ->check(CLI::Range(1, 50));
    cmd_compute->add_flag("--exact-only", c_exact_only, "omit decimal renderings");
    add_report_format(cmd_compute, c_report);

    auto* cmd_verify =
        app.add_subcommand("verify", "check resistance <= distance and related bounds");
    add_input_options(cmd_verify, vin_opts);
    cmd_verify->add_option("-o,--output", v_output, "write the report here");
    cmd_verify->add_option("--precision", v_precision, "decimal places (default 4)")
        ->check(CLI::Range(1, 50));
    cmd_verify->add_flag("--identities", v_identities, "run the exact identity suites");
    cmd_verify->add_flag("--theorem", v_theorem,
                         "verify blockwise and certify the whole-graph bound");
    cmd_verify->add_flag("--timings", v_timings,
                         "include phase timings (makes reports non-reproducible)");
    cmd_verify->add_flag("--exact-only", v_exact_only, "omit decimal renderings");
    add_report_format(cmd_verify, v_report);

    auto* cmd_decompose =
        app.add_subcommand("decompose", "blocks, cut vertices, cactus and assembly data");
    add_input_options(cmd_decompose, din_opts);
    cmd_decompose->add_option("-o,--output", d_output, "write the report here");
    add_report_format(cmd_decompose, d_report);

    std::string g_kind, g_fixture, g_block_kind = "cycle", g_format = "edges";
    int g_n = 0, g_arcs = 0, g_blocks = 1, g_pmin = 3, g_pmax = 3;
    std::uint64_t g_seed = 0;
    auto* cmd_gen = app.add_subcommand("gen", "generate a graph and print it");
    auto* gk = cmd_gen->add_option(
        "--kind", g_kind, "cycle | digon | cactus | balanced_random | class_c_union");
    auto* gf = cmd_gen->add_option("--fixture", g_fixture, "emit a named fixture instead");
    gk->excludes(gf);
    gf->excludes(gk);
    cmd_gen->add_option("--n", g_n, "vertex count (cycle, balanced_random)");
    cmd_gen->add_option("--arcs", g_arcs, "arc budget (balanced_random)");
    cmd_gen->add_option("--blocks", g_blocks, "block count (cactus, class_c_union)");
    cmd_gen->add_option("--piece-min", g_pmin, "smallest cycle length / piece size");
    cmd_gen->add_option("--piece-max", g_pmax, "largest cycle length / piece size");
    cmd_gen->add_option("--block-kind", g_block_kind, "class_c_union pieces")
        ->check(CLI::IsMember({"cycle", "balanced_random"}));
    cmd_gen->add_option("--seed", g_seed, "generator seed (default 0)");
    cmd_gen->add_option("--format", g_format, "output format")
        ->check(CLI::IsMember({"edges", "json"}));
    cmd_gen->add_option("-o,--output", g_output, "write the graph here");

    std::string f_format = "text";
    auto* cmd_fixtures = app.add_subcommand("fixtures", "list the named fixture graphs");
    cmd_fixtures->add_option("--format", f_format, "output format")
        ->check(CLI::IsMember({"text", "json"}));
    cmd_fixtures->add_option("-o,--output", f_output, "write the list here");

    resdist::ExploreSpec e_spec;
    auto* cmd_explore = app.add_subcommand(
        "explore", "sweep a generated family and report distance-bound verdicts");
    cmd_explore
        ->add_option("--kind", e_spec.kind,
                     "cactus | class_c | balanced_random | two_overlap")
        ->required();
    cmd_explore->add_option("--count", e_spec.count, "graphs to build (default 100)")
        ->check(CLI::PositiveNumber);
    cmd_explore->add_option("--seed", e_spec.seed, "sweep seed (default 0)");
    cmd_explore->add_option("--n", e_spec.n, "vertex cap for random pieces (default 6)");
    cmd_explore->add_option("--blocks", e_spec.blocks, "block count cap (default 4)");
    cmd_explore->add_option("--piece-min", e_spec.piece_min, "smallest piece (default 2)");
    cmd_explore->add_option("--piece-max", e_spec.piece_max, "largest piece (default 5)");
    cmd_explore->add_option("--block-kind", e_spec.block_kind, "class_c pieces")
        ->check(CLI::IsMember({"cycle", "balanced_random"}));
    cmd_explore->add_option("-o,--output", e_output, "write the report here");
    add_report_format(cmd_explore, e_report);

    try {
        app.parse(argc, argv);
    } catch (const CLI::Success& e) {
        return app.exit(e);  // --help / --version
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    const auto render = [](const Json& rep, const std::string& how) {
        return how == "table" ? resdist::render_table(rep) : rep.dump(2) + "\n";
    };

    try {
        if (app.got_subcommand(cmd_compute)) {
            std::string fmt;
            const resdist::Digraph d = load_graph(cin_opts, fmt);
            Json config = input_config(cin_opts, fmt, c_precision);
            config["exact_only"] = c_exact_only;
            const Json rep =
                resdist::compute_report(d, config, {c_precision, false, c_exact_only});
            write_out(c_output, render(rep, c_report));
            return 0;
        }
        if (app.got_subcommand(cmd_verify)) {
            std::string fmt;
            const resdist::Digraph d = load_graph(vin_opts, fmt);
            Json config = input_config(vin_opts, fmt, v_precision);
            config["exact_only"] = v_exact_only;
            config["identities"] = v_identities;
            config["theorem"] = v_theorem;
            const Json rep =
                resdist::verify_report(d, config, {v_precision, v_timings, v_exact_only},
                                       {v_identities, v_theorem});
            write_out(v_output, render(rep, v_report));
            return rep.at("violation_found").get<bool>() ? 1 : 0;
        }
        if (app.got_subcommand(cmd_decompose)) {
            std::string fmt;
            const resdist::Digraph d = load_graph(din_opts, fmt);
            Json config;
            if (!din_opts.fixture.empty())
                config["fixture"] = din_opts.fixture;
            else
                config["input"] = din_opts.input == "-" ? "<stdin>" : din_opts.input;
            config["format"] = fmt;
            const Json rep = resdist::decompose_report(d, config);
            write_out(d_output, render(rep, d_report));
            return 0;
        }
        if (app.got_subcommand(cmd_gen)) {
            resdist::Digraph g;
            if (!g_fixture.empty()) {
                g = resdist::fixture(g_fixture);
            } else if (!g_kind.empty()) {
                resdist::GenSpec spec;
                spec.kind = g_kind;
                spec.n = g_n;
                spec.target_arcs = g_arcs;
                spec.blocks = g_blocks;
                spec.piece_min = g_pmin;
                spec.piece_max = g_pmax;
                spec.block_kind = g_block_kind;
                spec.seed = g_seed;
                g = resdist::generate(spec);
            } else {
                throw std::runtime_error("gen: pass --kind or --fixture");
            }
            write_out(g_output, g_format == "json" ? resdist::emit_graph_json(g)
                                                   : resdist::emit_edge_list(g));
            return 0;
        }
        if (app.got_subcommand(cmd_fixtures)) {
            if (f_format == "json") {
                Json j = Json::array();
                for (const auto& [name, note] : resdist::fixture_catalog())
                    j.push_back(Json{{"name", name}, {"note", note}});
                write_out(f_output, j.dump(2) + "\n");
            } else {
                std::string out;
                for (const auto& [name, note] : resdist::fixture_catalog())
                    out += name + "  " + note + "\n";
                write_out(f_output, out);
            }
            return 0;
        }
        if (app.got_subcommand(cmd_explore)) {
            Json config;
            config["kind"] = e_spec.kind;
            config["count"] = e_spec.count;
            config["seed"] = e_spec.seed;
            config["n"] = e_spec.n;
            config["blocks"] = e_spec.blocks;
            config["piece_min"] = e_spec.piece_min;
            config["piece_max"] = e_spec.piece_max;
            config["block_kind"] = e_spec.block_kind;
            const resdist::ExploreOutcome out = resdist::explore(e_spec, config);
            write_out(e_output, render(out.report, e_report));
            return out.violation_found ? 1 : 0;
        }
    } catch (const std::invalid_argument& e) {
        // Bad arguments or bad input data (unknown fixture, malformed
        // graph, out-of-range generator parameters).
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::logic_error& e) {
        // Library self-checks (pseudoinverse identities, cross-checked
        // arborescence counts) never fail on valid state; if one fires,
        // report it as a found inconsistency, not as bad usage.
        std::cerr << "internal inconsistency: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
