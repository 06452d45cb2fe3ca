// lightsout: generate, solve and play Lights Out puzzles on arbitrary graphs.
//
// Exit codes: 0 success / solvable, 1 theorem check failed,
//             2 usage or parse error, 3 unsolvable.

#include <CLI11.hpp>

#include <csignal>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <thread>

#include "lightsout/document.hpp"
#include "lightsout/generators.hpp"
#include "lightsout/service.hpp"
#include "lightsout/solver.hpp"
#include "lightsout/theorem_check.hpp"

namespace {

using namespace lightsout;

constexpr int exit_ok = 0;
constexpr int exit_theorem_failure = 1;
constexpr int exit_usage = 2;
constexpr int exit_unsolvable = 3;

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

std::vector<std::size_t> parse_index_list(const std::string& text, const char* what) {
    std::vector<std::size_t> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        if (item.empty()) continue;
        std::size_t pos = 0;
        unsigned long long v = 0;
        try {
            if (item.front() == '-') throw std::invalid_argument("negative");
            v = std::stoull(item, &pos);
        } catch (const std::exception&) {
            pos = 0;
        }
        if (pos != item.size()) throw UsageError(std::string("bad ") + what + " entry '" + item + "'");
        out.push_back(static_cast<std::size_t>(v));
    }
    return out;
}

std::vector<bool> parse_wrap(const std::string& text, std::size_t axes) {
    if (text.empty() || text == "none") return {};
    if (text == "both" || text == "all") return std::vector<bool>(axes, true);
    std::vector<bool> out;
    for (auto v : parse_index_list(text, "wrap")) {
        if (v > 1) throw UsageError("--wrap takes none, both, all or a comma list of 0/1 flags");
        out.push_back(v == 1);
    }
    return out;
}

BitVec parse_target(const std::string& name, const Puzzle& p) {
    const auto n = p.graph.n_vertices;
    if (name == "all-off") return BitVec(n);
    if (name == "all-on") return BitVec::ones(n);
    if (name == "corollary") return self_loop_vector(p.graph);
    BitVec t;
    try {
        t = BitVec::from_string(name);
    } catch (const ValidationError&) {
        throw UsageError("--target must be all-off, all-on, corollary or a 0/1 string");
    }
    if (t.size() != n)
        throw UsageError("target has length " + std::to_string(t.size()) + ", puzzle has " + std::to_string(n) +
                         " vertices");
    return t;
}

void emit_document(const std::string& out_path, const PuzzleDocument& doc) {
    if (out_path.empty() || out_path == "-")
        std::cout << to_text(doc);
    else
        write_document(out_path, doc);
}

// Summary lines go to stdout when the document goes to a file, else stderr.
std::ostream& summary_stream(const std::string& out_path) {
    return (out_path.empty() || out_path == "-") ? std::cerr : std::cout;
}

// --- gen -------------------------------------------------------------------

struct GenArgs {
    std::string family;
    std::string dims = "3,3";
    std::string wrap = "none";
    bool diagonal = false;
    std::string self = "all";
    std::size_t rows = 3;
    std::size_t radius = 1;
    std::string mask;
    std::string green;
    bool green_none = false;
    std::string out;
};

int run_gen(const GenArgs& a) {
    TemplateSpec spec;
    spec.family = a.family;
    spec.dims = parse_index_list(a.dims, "dims");
    spec.wrap = parse_wrap(a.wrap, spec.dims.size());
    spec.diagonal = a.diagonal;
    spec.self_affect = parse_self_affect(a.self);
    spec.rows = a.rows;
    spec.radius = a.radius;
    if (!a.mask.empty()) spec.mask = parse_index_list(a.mask, "mask");
    if (!a.green.empty()) spec.green = parse_index_list(a.green, "green");
    if (a.green_none) spec.green = std::vector<std::size_t>{};

    const auto g = generate(spec);
    const PuzzleDocument doc{document_version, Puzzle::all_off(g)};
    emit_document(a.out, doc);
    summary_stream(a.out) << "vertices: " << g.n_vertices << "\nedges: " << g.edges.size()
                          << "\nself_loops: " << g.self_loops.size() << '\n';
    return exit_ok;
}

// --- solve -----------------------------------------------------------------

struct SolveArgs {
    std::string puzzle;
    std::string target = "all-off";
    bool minimal = false;
    std::size_t budget = default_nullity_budget;
    std::string clicks_out;
};

int run_solve(const SolveArgs& a) {
    const auto doc = read_document(a.puzzle);
    const auto& p = doc.puzzle;
    const auto target = parse_target(a.target, p);
    const LightsOutSystem system(p.graph);

    std::optional<MinimalClicks> result;
    if (a.minimal) {
        result = system.minimal(p.state, target, a.budget);
    } else if (auto x = system.solve(p.state, target)) {
        result = MinimalClicks{ClickSet{std::move(*x)}, system.solver().nullity() == 0, system.solver().nullity()};
    }

    if (!result) {
        std::cout << "UNSOLVABLE\nnullity: " << system.solver().nullity() << '\n';
        return exit_unsolvable;
    }
    const auto bits = result->clicks.clicks.to_string();
    std::cout << "SOLVABLE\nclicks: " << bits << "\nweight: " << result->clicks.weight()
              << "\nnullity: " << result->nullity << "\nminimal: " << (result->minimal ? "true" : "false") << '\n';
    if (!a.clicks_out.empty()) {
        std::ofstream out(a.clicks_out, std::ios::trunc);
        out << bits << '\n';
        if (!out) throw UsageError("cannot write " + a.clicks_out);
    }
    return exit_ok;
}

// --- apply -----------------------------------------------------------------

struct ApplyArgs {
    std::string puzzle;
    std::string clicks;
    std::string clicks_file;
    std::string out;
};

int run_apply(const ApplyArgs& a) {
    const auto doc = read_document(a.puzzle);
    if (a.clicks.empty() == a.clicks_file.empty())
        throw UsageError("give exactly one of --clicks or --clicks-file");
    const BitVec clicks = a.clicks_file.empty() ? parse_click_script(a.clicks) : read_click_script(a.clicks_file);
    if (clicks.size() != doc.puzzle.graph.n_vertices)
        throw UsageError("click string has length " + std::to_string(clicks.size()) + ", puzzle has " +
                         std::to_string(doc.puzzle.graph.n_vertices) + " vertices");
    const PuzzleDocument after{doc.version, apply_clicks(doc.puzzle, ClickSet{clicks})};
    emit_document(a.out, after);
    summary_stream(a.out) << "on before: " << doc.puzzle.state.weight() << "\non after: " << after.puzzle.state.weight()
                          << '\n';
    return exit_ok;
}

// --- analyze ---------------------------------------------------------------

int run_analyze(const std::string& path) {
    const auto doc = read_document(path);
    const auto a = analyze(doc.puzzle.graph);
    std::cout << "vertices: " << a.n_vertices << "\nrank: " << a.rank << "\nnullity: " << a.nullity
              << "\nreachable: 2^" << a.reachable_exponent() << " of 2^" << a.n_vertices << " states\n";
    return exit_ok;
}

// --- verify-theorem --------------------------------------------------------

struct VerifyArgs {
    std::size_t n_max = 16;
    std::size_t trials = 50;
    std::uint64_t seed = 1;
    std::size_t oracle_max = 0;
    double density = 0.5;
    double diag_density = 0.5;
    bool grid = false;
    bool records = false;
};

int run_verify(const VerifyArgs& a) {
    RngSpec spec{a.seed, Density::from_double(a.density), Density::from_double(a.diag_density)};
    SweepOptions opts;
    opts.density_grid = a.grid;
    opts.oracle_max = std::min(a.oracle_max, brute_force_max_cols);
    const auto report = sweep(a.n_max, a.trials, spec, opts);
    if (a.records) std::cout << report.record_lines();
    std::cout << report.summary_text();
    return report.failures == 0 ? exit_ok : exit_theorem_failure;
}

// --- serve -----------------------------------------------------------------

struct ServeArgs {
    std::string host = "127.0.0.1";
    int port = 8080;
    std::string state_dir;
    bool debug = false;
    std::size_t budget = default_nullity_budget;
};

int run_serve(const ServeArgs& a) {
    ServiceConfig cfg;
    if (!a.state_dir.empty()) cfg.state_dir = a.state_dir;
    cfg.debug_endpoints = a.debug;
    cfg.nullity_budget = a.budget;

    // Block SIGINT/SIGTERM in every thread; a dedicated waiter stops the server.
    sigset_t signals;
    sigemptyset(&signals);
    sigaddset(&signals, SIGINT);
    sigaddset(&signals, SIGTERM);
    pthread_sigmask(SIG_BLOCK, &signals, nullptr);

    HttpServer server(cfg);
    const int port = server.bind(a.host, a.port);
    if (port < 0) {
        std::cerr << "error: cannot bind " << a.host << ":" << a.port << '\n';
        return exit_usage;
    }
    std::cout << "listening on http://" << a.host << ":" << port << std::endl;

    std::thread waiter([&] {
        int sig = 0;
        sigwait(&signals, &sig);
        server.stop();
    });
    server.listen();
    // listen() only returns after stop(); make sure the waiter is released.
    pthread_kill(waiter.native_handle(), SIGTERM);
    waiter.join();
    std::cout << "shutting down" << std::endl;
    return exit_ok;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Lights Out laboratory: GF(2) solver, puzzle generators and play service"};
    app.require_subcommand(1);

    GenArgs gen;
    auto* gen_cmd = app.add_subcommand("gen", "Generate a puzzle document with every lamp off");
    gen_cmd->add_option("family", gen.family, "grid | torus | triangular | hexagonal")->required();
    gen_cmd->add_option("--dims", gen.dims, "Grid extents, comma separated")->capture_default_str();
    gen_cmd->add_option("--wrap", gen.wrap, "none | both | all | per-axis 0/1 list")->capture_default_str();
    gen_cmd->add_flag("--diagonal", gen.diagonal, "Cells touching at a corner are also adjacent");
    gen_cmd->add_option("--self", gen.self, "Self-loop policy: all | none")->capture_default_str();
    gen_cmd->add_option("--rows", gen.rows, "Triangular lattice rows")->capture_default_str();
    gen_cmd->add_option("--radius", gen.radius, "Hexagonal lattice radius")->capture_default_str();
    gen_cmd->add_option("--mask", gen.mask, "Keep only these vertices (comma list)");
    gen_cmd->add_option("--green", gen.green, "Self-affecting (green) vertices after masking (comma list)");
    gen_cmd->add_flag("--green-none", gen.green_none, "Make every lamp red");
    gen_cmd->add_option("-o,--out", gen.out, "Output path (default: stdout)");

    SolveArgs solve;
    auto* solve_cmd = app.add_subcommand("solve", "Find clicks reaching a target state");
    solve_cmd->add_option("puzzle", solve.puzzle, "Puzzle document")->required();
    solve_cmd->add_option("--target", solve.target, "all-off | all-on | corollary | 0/1 string")
        ->capture_default_str();
    solve_cmd->add_flag("--minimal", solve.minimal, "Search the solution coset for a minimum-weight click set");
    solve_cmd->add_option("--budget", solve.budget, "Largest nullity enumerated by --minimal")->capture_default_str();
    solve_cmd->add_option("--clicks-out", solve.clicks_out, "Also write the click string to this file");

    ApplyArgs apply;
    auto* apply_cmd = app.add_subcommand("apply", "Apply a click set to a puzzle");
    apply_cmd->add_option("puzzle", apply.puzzle, "Puzzle document")->required();
    apply_cmd->add_option("--clicks", apply.clicks, "0/1 string, one character per vertex");
    apply_cmd->add_option("--clicks-file", apply.clicks_file, "File holding a 0/1 click string");
    apply_cmd->add_option("-o,--out", apply.out, "Output path (default: stdout)");

    std::string analyze_path;
    auto* analyze_cmd = app.add_subcommand("analyze", "Rank and nullity of a puzzle's adjacency matrix");
    analyze_cmd->add_option("puzzle", analyze_path, "Puzzle document")->required();

    VerifyArgs verify;
    auto* verify_cmd = app.add_subcommand(
        "verify-theorem", "Check that symmetric GF(2) matrices have their diagonal in their range");
    verify_cmd->add_option("--n-max", verify.n_max, "Largest matrix size")->capture_default_str()->check(
        CLI::PositiveNumber);
    verify_cmd->add_option("--trials", verify.trials, "Matrices per size")->capture_default_str()->check(
        CLI::PositiveNumber);
    verify_cmd->add_option("--seed", verify.seed, "Root seed")->capture_default_str();
    verify_cmd->add_option("--oracle-max", verify.oracle_max, "Cross-check against brute force up to this size")
        ->capture_default_str()
        ->check(CLI::Range(std::size_t{0}, brute_force_max_cols));
    verify_cmd->add_option("--density", verify.density, "Off-diagonal density")->capture_default_str()->check(
        CLI::Range(0.0, 1.0));
    verify_cmd->add_option("--diag-density", verify.diag_density, "Diagonal density")
        ->capture_default_str()
        ->check(CLI::Range(0.0, 1.0));
    verify_cmd->add_flag("--grid", verify.grid, "Run every trial on the 3x3 density grid");
    verify_cmd->add_flag("--records", verify.records, "Print one machine-readable line per instance");

    ServeArgs serve;
    auto* serve_cmd = app.add_subcommand("serve", "Run the HTTP puzzle service");
    serve_cmd->add_option("--host", serve.host, "Bind address")->capture_default_str();
    serve_cmd->add_option("--port", serve.port, "Port (0 picks a free one)")->capture_default_str()->check(
        CLI::Range(0, 65535));
    serve_cmd->add_option("--state-dir", serve.state_dir, "Snapshot sessions to this directory");
    serve_cmd->add_flag("--debug", serve.debug, "Enable the consistency endpoint");
    serve_cmd->add_option("--budget", serve.budget, "Largest nullity enumerated for hints")->capture_default_str();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return exit_usage;
    }

    try {
        if (*gen_cmd) return run_gen(gen);
        if (*solve_cmd) return run_solve(solve);
        if (*apply_cmd) return run_apply(apply);
        if (*analyze_cmd) return run_analyze(analyze_path);
        if (*verify_cmd) return run_verify(verify);
        if (*serve_cmd) return run_serve(serve);
    } catch (const UsageError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return exit_usage;
    } catch (const std::invalid_argument& e) {  // ValidationError, DimensionError, DocumentError
        std::cerr << "error: " << e.what() << '\n';
        return exit_usage;
    } catch (const InternalError& e) {
        std::cerr << "internal error: " << e.what() << '\n';
        return exit_theorem_failure;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return exit_usage;
    }
    return exit_usage;
}
