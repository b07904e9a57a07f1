// Command-line front end: construct the extremal colorings, verify colorings
// against the rainbow detectors, solve small instances exactly, and report
// the color accounting for a coloring file.
//
// Exit codes: 0 success / detector absent, 1 witness found, 2 input error,
// 3 budget exhausted.

#include <CLI11.hpp>
#include <cstdlib>
#include <iostream>

#include "rainbow/json_io.hpp"
#include "rainbow/rainbow.hpp"

namespace {

std::uint64_t default_seed() {
    if (const char* env = std::getenv("RAINBOW_LAB_SEED")) {
        try {
            return std::stoull(env);
        } catch (const std::exception&) {
            throw std::runtime_error("RAINBOW_LAB_SEED is not a number");
        }
    }
    return 0;
}

rainbow::PatternKind parse_kind(const std::string& name) {
    if (name == "cancellative") return rainbow::PatternKind::Cancellative;
    if (name == "f4") return rainbow::PatternKind::F4;
    if (name == "f5") return rainbow::PatternKind::F5;
    if (name == "h1") return rainbow::PatternKind::H1;
    if (name == "h2") return rainbow::PatternKind::H2;
    if (name == "star") return rainbow::PatternKind::Star;
    if (name == "t") return rainbow::PatternKind::T;
    if (name == "o") return rainbow::PatternKind::O;
    throw std::runtime_error("unknown family '" + name + "'");
}

rainbow::Family parse_family(const std::string& name) {
    if (name == "cancellative") return rainbow::Family::Cancellative;
    if (name == "f4") return rainbow::Family::F4;
    if (name == "f5") return rainbow::Family::F5;
    if (name == "o") return rainbow::Family::O;
    throw std::runtime_error("solve family must be cancellative, f4, f5 or o");
}

std::optional<rainbow::PatternWitness> run_detector(const rainbow::Coloring& c,
                                                    rainbow::PatternKind kind, int q, int r) {
    using rainbow::PatternKind;
    switch (kind) {
        case PatternKind::Cancellative: return rainbow::find_rainbow_cancellative(c);
        case PatternKind::O: return rainbow::find_rainbow_O(c);
        case PatternKind::T: return rainbow::find_rainbow_T(c);
        case PatternKind::Star: return rainbow::find_rainbow_star(c, q, r);
        default: return rainbow::find_rainbow_p3(c, kind);
    }
}

int cmd_construct(const std::string& kind, int n, int p, int s, std::uint64_t seed, int restarts,
                  const std::string& out_path) {
    rainbow::Coloring c;
    nlohmann::json params;
    std::string detector;
    if (kind == "cancellative") {
        c = rainbow::build_cancellative_extremal(n, p);
        params = {{"n", n}, {"p", p}};
        detector = "cancellative";
    } else if (kind == "mpsts") {
        c = rainbow::build_mpsts_coloring(n, seed);
        params = {{"n", n}, {"seed", seed}};
        detector = "f4";
    } else {
        c = rainbow::build_pg_coloring(s, restarts, seed);
        params = {{"s", s}, {"restarts", restarts}, {"seed", seed}};
        detector = "f4";
    }
    rainbow::save_coloring(c, out_path);

    const auto witness = run_detector(c, parse_kind(detector), 0, 0);
    nlohmann::json sidecar = {{"kind", kind},
                              {"params", params},
                              {"colors", c.k},
                              {"coloring_path", out_path},
                              {"verification", nlohmann::json::array({nlohmann::json{
                                  {"detector", detector},
                                  {"witness", witness ? nlohmann::json(*witness) : nlohmann::json()}}})}};
    std::ofstream side(out_path + ".json");
    side << sidecar.dump(2) << "\n";
    std::cout << sidecar.dump(2) << "\n";
    if (witness) {
        std::cerr << "construct: detector " << detector << " found a rainbow copy; construction bug\n";
        return 1;
    }
    return 0;
}

int cmd_verify(const std::string& path, const std::string& family, int q, int r) {
    const rainbow::Coloring c = rainbow::load_coloring(path);
    const auto kind = parse_kind(family);
    const auto witness = run_detector(c, kind, q, r);
    nlohmann::json report = {{"coloring_path", path},
                             {"family", family},
                             {"n", c.n},
                             {"p", c.p},
                             {"colors", c.k},
                             {"witness", witness ? nlohmann::json(*witness) : nlohmann::json()}};
    std::cout << report.dump(2) << "\n";
    return witness ? 1 : 0;
}

int cmd_solve(int n, int p, const std::string& family, std::uint64_t max_nodes, double max_seconds,
              std::string witness_path) {
    rainbow::Budget budget;
    if (max_nodes > 0) budget.max_nodes = max_nodes;
    budget.max_seconds = max_seconds;
    const auto res = rainbow::solve_anti_ramsey(n, p, parse_family(family), budget);
    if (witness_path.empty())
        witness_path = "ar-witness-" + family + "-n" + std::to_string(n) + "-p" + std::to_string(p) + ".txt";
    rainbow::save_coloring(res.witness, witness_path);
    nlohmann::json report(res);
    report["n"] = n;
    report["p"] = p;
    report["family"] = family;
    report["witness_path"] = witness_path;
    std::cout << report.dump(2) << "\n";
    return res.status == rainbow::SolveStatus::Proved ? 0 : 3;
}

int cmd_diagnose(const std::string& path) {
    const rainbow::Coloring c = rainbow::load_coloring(path);
    if (c.p != 3) throw std::runtime_error("diagnose: requires a p=3 coloring");
    const auto acc = rainbow::f4_accounting(c);
    nlohmann::json report(acc);
    report["coloring_path"] = path;
    report["n"] = c.n;
    if (c.n >= 4) report["ar_f4_bounds"] = rainbow::f4_bounds(c.n);
    std::cout << report.dump(2) << "\n";
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"anti-Ramsey colorings of complete p-graphs: constructions, detectors, exact solver"};
    app.require_subcommand(1);

    std::uint64_t seed = 0;
    bool seed_given = false;

    auto* construct = app.add_subcommand("construct", "build a rainbow-free coloring and verify it");
    std::string kind, out_path = "coloring.txt";
    int cn = 7, cp = 3, cs = 3, restarts = 32;
    construct->add_option("kind", kind, "cancellative | mpsts | pg")
        ->required()
        ->check(CLI::IsMember({"cancellative", "mpsts", "pg"}));
    construct->add_option("--n", cn, "vertex count");
    construct->add_option("--p", cp, "uniformity (cancellative only)");
    construct->add_option("--s", cs, "GF(2) dimension (pg only)");
    construct->add_option("--restarts", restarts, "greedy independent-set restarts (pg only)");
    construct->add_option("--seed", seed, "RNG seed")->each([&](const std::string&) { seed_given = true; });
    construct->add_option("--out", out_path, "coloring output path");

    auto* verify = app.add_subcommand("verify", "run a rainbow detector against a coloring file");
    std::string vpath, vfamily = "cancellative";
    int vq = 0, vr = 3;
    verify->add_option("path", vpath, "coloring file")->required();
    verify->add_option("--family", vfamily, "cancellative | f4 | f5 | h1 | h2 | t | o | star")
        ->check(CLI::IsMember({"cancellative", "f4", "f5", "h1", "h2", "t", "o", "star"}));
    verify->add_option("--q", vq, "star core size (family=star)");
    verify->add_option("--r", vr, "star edge count (family=star)");

    auto* solve = app.add_subcommand("solve", "exact ar(n, family) for small instances");
    int sn = 4, sp = 3;
    std::string sfamily = "cancellative", witness_out;
    std::uint64_t max_nodes = 0;
    double max_seconds = 0.0;
    solve->add_option("--n", sn, "vertex count")->required();
    solve->add_option("--p", sp, "uniformity")->required();
    solve->add_option("--family", sfamily, "cancellative | f4 | f5 | o");
    solve->add_option("--max-nodes", max_nodes, "node budget (0 = unlimited)");
    solve->add_option("--max-seconds", max_seconds, "time budget (0 = unlimited)");
    solve->add_option("--witness-out", witness_out, "witness coloring path");

    auto* diagnose = app.add_subcommand("diagnose", "color accounting and bound checks for a coloring");
    std::string dpath;
    diagnose->add_option("path", dpath, "coloring file")->required();

    CLI11_PARSE(app, argc, argv);

    try {
        if (!seed_given) seed = default_seed();
        if (construct->parsed()) return cmd_construct(kind, cn, cp, cs, seed, restarts, out_path);
        if (verify->parsed()) return cmd_verify(vpath, vfamily, vq, vr);
        if (solve->parsed()) return cmd_solve(sn, sp, sfamily, max_nodes, max_seconds, witness_out);
        if (diagnose->parsed()) return cmd_diagnose(dpath);
    } catch (const std::exception& err) {
        std::cerr << "error: " << err.what() << "\n";
        return 2;
    }
    return 2;
}
