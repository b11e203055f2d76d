#include <cstdint>
#include <cstdlib>
#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "horo/dl.hpp"
#include "horo/errors.hpp"
#include "horo/graph_export.hpp"
#include "horo/sol.hpp"
#include "horo/tree.hpp"
#include "horo/treebolic.hpp"
#include "horo/verify.hpp"
#include "horo/walk.hpp"

namespace {

using nlohmann::json;

// "level:digits,level:digits"
horo::DlVertex parse_dl_vertex(const std::string& text, int p, int q) {
    auto comma = text.find(',');
    if (comma == std::string::npos)
        throw horo::ParseError("expected two coordinates separated by ',': " + text);
    return horo::make_dl_vertex(horo::parse_coordinate(text.substr(0, comma), p),
                                horo::parse_coordinate(text.substr(comma + 1), q));
}

// "level:digits@x" -> incident treebolic point over that vertex
horo::HtPoint parse_ht_point(const horo::HtParams& ht, const std::string& text) {
    auto at = text.find('@');
    if (at == std::string::npos)
        throw horo::ParseError("expected vertex@x: " + text);
    horo::TreeVertex v = horo::parse_coordinate(text.substr(0, at), ht.p);
    double x = 0.0;
    try {
        x = std::stod(text.substr(at + 1));
    } catch (const std::exception&) {
        throw horo::ParseError("bad horizontal coordinate in '" + text + "'");
    }
    return horo::make_ht_point(ht, horo::TreePoint::at_vertex(v), x);
}

horo::SolPoint parse_sol_point(const std::string& text) {
    horo::SolPoint pt;
    double* coords[3] = {&pt.a, &pt.b, &pt.c};
    std::size_t start = 0;
    for (int i = 0; i < 3; ++i) {
        std::size_t comma = i < 2 ? text.find(',', start) : text.size();
        if (comma == std::string::npos)
            throw horo::ParseError("expected x,y,z: " + text);
        try {
            *coords[i] = std::stod(text.substr(start, comma - start));
        } catch (const std::exception&) {
            throw horo::ParseError("bad number in '" + text + "'");
        }
        start = comma + 1;
    }
    return pt;
}

json suite_json(const horo::SuiteResult& r) {
    json checks = json::array();
    for (const horo::CheckResult& c : r.checks)
        checks.push_back({{"name", c.name}, {"passed", c.passed}, {"detail", c.detail}});
    return {{"suite", r.suite}, {"passed", r.passed()}, {"checks", checks}};
}

int run(int argc, char** argv) {
    CLI::App app{"horocyclic-product toolkit: trees, DL graphs, treebolic space, Sol"};
    app.require_subcommand(1);

    // ball
    auto* ball = app.add_subcommand("ball", "Export a ball as DOT or JSON");
    std::vector<int> dl_params;
    int gm_p = 0;
    int radius = 2;
    std::string format = "dot";
    ball->add_option("--dl", dl_params, "DL(p,q) branching numbers")->expected(2);
    ball->add_option("--grandmother", gm_p, "grandmother graph over T_p");
    ball->add_option("-r,--radius", radius, "ball radius");
    ball->add_option("--format", format, "dot or json");

    // dist
    auto* dist = app.add_subcommand("dist", "Distance report: formula vs oracle");
    std::string space;
    std::vector<int> sp_int;
    std::vector<double> sp_real;
    std::string point_a, point_b;
    dist->add_option("space", space, "tree | dl | ht | sol")->required();
    dist->add_option("-p,--params-int", sp_int, "integer parameters (tree: p; dl: p q; ht: p)");
    dist->add_option("-q,--params-real", sp_real, "real parameters (ht: q; sol: p q)");
    dist->add_option("a", point_a, "first point")->required();
    dist->add_option("b", point_b, "second point")->required();

    // verify
    auto* verify = app.add_subcommand("verify", "Run a verification suite");
    std::string suite;
    verify->add_option("suite", suite, "suite name or 'all'")->required();

    // walk
    auto* walk = app.add_subcommand("walk", "Random-walk statistics");
    std::vector<int> walk_dl;
    int steps = 1000;
    int trials = 10;
    std::int64_t seed = -1;
    bool lamplighter = false;
    walk->add_option("--dl", walk_dl, "DL(p,q) branching numbers")->expected(2)->required();
    walk->add_option("-n,--steps", steps, "steps per trial");
    walk->add_option("-T,--trials", trials, "number of trials");
    walk->add_option("--seed", seed, "random seed (required)");
    walk->add_flag("--lamplighter", lamplighter, "walk on lamplighter generators");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    if (ball->parsed()) {
        if (format != "dot" && format != "json")
            throw horo::BadFormat("format must be dot or json, got '" + format + "'");
        horo::ExportGraph g;
        if (!dl_params.empty() && gm_p != 0)
            throw horo::ParseError("choose exactly one of --dl and --grandmother");
        if (!dl_params.empty())
            g = horo::export_dl_ball(horo::DlParams(dl_params[0], dl_params[1]), radius);
        else if (gm_p != 0)
            g = horo::export_grandmother_ball(horo::TreeParams(gm_p), radius);
        else
            throw horo::ParseError("choose one of --dl and --grandmother");
        std::cout << (format == "dot" ? horo::to_dot(g) : horo::to_json(g));
        return 0;
    }

    if (dist->parsed()) {
        json out;
        out["space"] = space;
        if (space == "tree") {
            int p = sp_int.size() == 1 ? sp_int[0] : 2;
            horo::TreeVertex a = horo::parse_coordinate(point_a, p);
            horo::TreeVertex b = horo::parse_coordinate(point_b, p);
            int formula = horo::tree_distance(a, b);
            int oracle = horo::tree_bfs_distance(p, a, b);
            out["formula"] = formula;
            out["oracle"] = oracle;
            out["gap"] = std::abs(formula - oracle);
        } else if (space == "dl") {
            if (sp_int.size() != 2) throw horo::ParseError("dl needs -p p q");
            horo::DlParams dl(sp_int[0], sp_int[1]);
            horo::DlVertex a = parse_dl_vertex(point_a, dl.p, dl.q);
            horo::DlVertex b = parse_dl_vertex(point_b, dl.p, dl.q);
            int formula = horo::formula_dist(a, b);
            int oracle = horo::dl_bfs_distance(dl, a, b);
            out["formula"] = formula;
            out["oracle"] = oracle;
            out["gap"] = std::abs(formula - oracle);
        } else if (space == "ht") {
            if (sp_int.size() != 1 || sp_real.size() != 1)
                throw horo::ParseError("ht needs -p p and -q q");
            horo::HtParams ht(sp_int[0], sp_real[0]);
            horo::HtPoint a = parse_ht_point(ht, point_a);
            horo::HtPoint b = parse_ht_point(ht, point_b);
            double formula = horo::ht_dist(ht, a, b);
            double oracle = horo::ht_grid_oracle(ht, a, b);
            out["formula"] = formula;
            out["oracle"] = oracle;
            out["gap"] = std::abs(formula - oracle);
        } else if (space == "sol") {
            if (sp_real.size() != 2) throw horo::ParseError("sol needs -q p q");
            horo::SolParams s(sp_real[0], sp_real[1]);
            horo::SolPoint a = parse_sol_point(point_a);
            horo::SolPoint b = parse_sol_point(point_b);
            horo::SolUpperResult r = horo::dist_upper(s, a, b);
            auto [lower, upper] = horo::sandwich(s, a, b);
            out["upper_estimate"] = r.length;
            out["converged"] = r.converged;
            out["sandwich_lower"] = lower;
            out["sandwich_upper"] = upper;
        } else {
            throw horo::ParseError("unknown space '" + space + "'");
        }
        std::cout << out.dump(2) << "\n";
        return 0;
    }

    if (verify->parsed()) {
        std::vector<horo::SuiteResult> results = horo::run_suites(suite);
        json out;
        out["suites"] = json::array();
        bool all_ok = true;
        for (const horo::SuiteResult& r : results) {
            out["suites"].push_back(suite_json(r));
            all_ok = all_ok && r.passed();
        }
        out["passed"] = all_ok;
        std::cout << out.dump(2) << "\n";
        return all_ok ? 0 : 1;
    }

    if (walk->parsed()) {
        if (seed < 0) throw horo::MissingSeed("--seed is required for reproducible walks");
        horo::WalkConfig cfg;
        cfg.steps = steps;
        cfg.trials = trials;
        cfg.seed = static_cast<std::uint64_t>(seed);
        horo::DlParams dl(walk_dl[0], walk_dl[1]);
        horo::WalkStats stats =
            lamplighter ? horo::lamplighter_walk(dl, cfg) : horo::srw_run(dl, cfg);
        json out;
        out["checkpoints"] = stats.checkpoints;
        out["mean_distance"] = stats.mean_distance;
        out["half_width"] = stats.half_width;
        out["speed"] = stats.speed;
        out["return_frequency_even"] = stats.return_frequency_even;
        std::cout << out.dump(2) << "\n";
        return 0;
    }

    return 2;
}

} // namespace

int main(int argc, char** argv) {
    try {
        return run(argc, argv);
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}
