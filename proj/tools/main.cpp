// wirtinger: command-line front end for the function-space toolkit.
//
// Subcommands build the same JSON config that --config accepts, so the
// flag-driven and file-driven paths share one validation and dispatch route.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "wirtinger/report.hpp"

namespace {

using wirtinger::ordered_json;

ordered_json parse_inline_json(const std::string& text, const std::string& flag) {
    try {
        return ordered_json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw wirtinger::ConfigError({flag + ": " + e.what()});
    }
}

// "--psi constant" stays a shorthand string; anything else must be JSON.
ordered_json psi_arg(const std::string& text) {
    if (!text.empty() && text.front() == '{') return parse_inline_json(text, "psi");
    return ordered_json(text);
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw wirtinger::ConfigError({"config: cannot open '" + path + "'"});
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

int emit(const wirtinger::ReportDocument& doc, const wirtinger::RunConfig& cfg,
         const std::string& out_override) {
    std::string rendered;
    if (cfg.format == "json")
        rendered = doc.to_json().dump(2) + "\n";
    else if (cfg.format == "csv")
        rendered = doc.to_csv();
    else
        rendered = doc.to_text();
    const std::string path = out_override.empty() ? cfg.output_path : out_override;
    if (path.empty()) {
        std::cout << rendered;
    } else {
        std::ofstream out(path, std::ios::binary);
        if (!out) throw wirtinger::ConfigError({"out: cannot write '" + path + "'"});
        out << rendered;
    }
    return doc.exit_status();
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Numerical toolkit for Wirtinger-type inequalities over "
                 "rearrangement-invariant spaces"};
    app.require_subcommand(0, 1);

    std::string config_path, out_path, format = "json";
    bool timing = false;
    app.add_option("--config", config_path, "JSON config file (replaces subcommand)");
    app.add_option("--out", out_path, "Write the report to this path");
    app.add_option("--format", format, "json | csv | text")
        ->check(CLI::IsMember({"json", "csv", "text"}));
    app.add_flag("--timing", timing, "Record wall-clock timing in the report");

    // Shared numerical parameters (collected per subcommand into the config).
    struct Args {
        std::string id, theorem, function, psi, nu, family = "extremal";
        std::vector<std::string> spaces;
        double p = 2.0, q = 2.0, gamma = 1.0, beta = 1.0, delta = 1.0;
        double phi_power = 2.0, phi1_power = 2.0;
        int n = 2, k = 1, count = 1, degree = 8;
        unsigned seed = 42;
        bool normalized = false, natural_choice = false;
        bool p_set = false, q_set = false, phi_set = false, phi1_set = false;
        std::vector<double> p_grid, q_grid, delta_grid;
    } a;

    auto add_common = [&](CLI::App* sub) {
        sub->fallthrough();  // let --format/--out/--timing follow the subcommand
        sub->add_option("--n", a.n, "Derivative order n");
        sub->add_option("--k", a.k, "Left-endpoint zero multiplicity k");
        sub->add_option("--p", a.p)->each([&](const std::string&) { a.p_set = true; });
        sub->add_option("--q", a.q)->each([&](const std::string&) { a.q_set = true; });
        sub->add_option("--seed", a.seed, "Trial-family RNG seed");
    };

    CLI::App* c_const = app.add_subcommand("constant", "Evaluate a closed-form constant");
    c_const->add_option("--id", a.id, "Constant identifier")->required();
    add_common(c_const);

    CLI::App* c_norm = app.add_subcommand("norm", "Evaluate norms of a function");
    c_norm->fallthrough();
    c_norm->add_option("--function", a.function, "JSON function spec")->required();
    c_norm->add_option("--space", a.spaces, "JSON space spec (repeatable)")->required();
    c_norm->add_flag("--normalized", a.normalized, "Use the measure m/Delta");

    CLI::App* c_fund = app.add_subcommand("fundamental", "Evaluate fundamental functions");
    c_fund->fallthrough();
    c_fund->add_option("--space", a.spaces, "JSON space spec (repeatable)")->required();
    c_fund->add_option("--delta", a.delta, "Measure of the underlying set")->required();

    CLI::App* c_verify = app.add_subcommand("verify", "Check a theorem verdict");
    c_verify->add_option("--theorem", a.theorem,
                         "classical|beesack|ank|thm31|thm41|thm51|thm61|thm71")
        ->required();
    add_common(c_verify);
    c_verify->add_option("--function", a.function, "JSON function spec");
    c_verify->add_option("--space", a.spaces, "JSON space spec (repeatable)");
    c_verify->add_option("--psi", a.psi, "Psi spec or 'constant'");
    c_verify->add_option("--nu", a.nu, "Nu spec or 'constant'");
    c_verify->add_option("--gamma", a.gamma);
    c_verify->add_option("--beta", a.beta);
    c_verify->add_option("--phi-power", a.phi_power)
        ->each([&](const std::string&) { a.phi_set = true; });
    c_verify->add_option("--phi1-power", a.phi1_power)
        ->each([&](const std::string&) { a.phi1_set = true; });
    c_verify->add_option("--family", a.family, "extremal | random");
    c_verify->add_option("--count", a.count, "Random trial count");
    c_verify->add_option("--degree", a.degree, "Random trial degree");
    c_verify->add_flag("--natural-choice", a.natural_choice,
                       "Use psi(q) = |f'|_q in thm71");
    c_verify->add_option("--p-grid", a.p_grid);
    c_verify->add_option("--q-grid", a.q_grid);
    c_verify->add_option("--delta-grid", a.delta_grid);

    CLI::App* c_sweep = app.add_subcommand("sweep", "Delta-sweep of a two-space functional");
    c_sweep->add_option("--theorem", a.theorem, "thm31 | thm51")->required();
    add_common(c_sweep);
    c_sweep->add_option("--space", a.spaces, "JSON space spec (repeatable)");
    c_sweep->add_option("--gamma", a.gamma);
    c_sweep->add_option("--beta", a.beta);
    c_sweep->add_option("--family", a.family, "extremal | random");
    c_sweep->add_option("--count", a.count, "Random trial count");
    c_sweep->add_option("--degree", a.degree, "Random trial degree");
    c_sweep->add_option("--delta-grid", a.delta_grid);

    CLI11_PARSE(app, argc, argv);

    try {
        if (const char* threads = std::getenv("WIRTINGER_THREADS")) {
            char* end = nullptr;
            const long v = std::strtol(threads, &end, 10);
            if (end == threads || *end != '\0' || v < 1)
                throw wirtinger::ConfigError(
                    {"WIRTINGER_THREADS: positive integer required"});
        }

        ordered_json cfg;
        if (!config_path.empty()) {
            cfg = ordered_json::parse(read_file(config_path), nullptr, true);
            wirtinger::RunConfig run_cfg = wirtinger::parse_config(cfg.dump());
            if (!format.empty() && app.count("--format")) run_cfg.format = format;
            if (timing) run_cfg.timing = true;
            return emit(wirtinger::run(run_cfg), run_cfg, out_path);
        }
        if (app.get_subcommands().empty()) {
            std::cerr << app.help();
            return 2;
        }
        const std::string command = app.get_subcommands()[0]->get_name();
        cfg["command"] = command;
        cfg["format"] = format;
        if (timing) cfg["timing"] = true;

        if (command == "constant") {
            cfg["constant_id"] = a.id;
            cfg["params"] = {{"p", a.p}, {"q", a.q}, {"n", a.n}, {"k", a.k}};
        } else if (command == "norm") {
            cfg["function"] = parse_inline_json(a.function, "function");
            cfg["spaces"] = ordered_json::array();
            for (const auto& s : a.spaces)
                cfg["spaces"].push_back(parse_inline_json(s, "space"));
            if (a.normalized) cfg["normalized"] = true;
        } else if (command == "fundamental") {
            cfg["spaces"] = ordered_json::array();
            for (const auto& s : a.spaces)
                cfg["spaces"].push_back(parse_inline_json(s, "space"));
            cfg["delta"] = a.delta;
        } else {
            cfg["theorem"] = a.theorem;
            cfg["n"] = a.n;
            cfg["k"] = a.k;
            if (a.p_set || a.theorem == "thm51" || a.theorem == "beesack")
                cfg["p"] = a.p;
            if (a.q_set || a.theorem == "thm51") cfg["q"] = a.q;
            if (a.theorem == "thm51") {
                cfg["gamma"] = a.gamma;
                cfg["beta"] = a.beta;
            }
            if (a.phi_set) cfg["phi_power"] = a.phi_power;
            if (a.phi1_set) cfg["phi1_power"] = a.phi1_power;
            if (!a.function.empty())
                cfg["function"] = parse_inline_json(a.function, "function");
            if (!a.spaces.empty()) {
                cfg["spaces"] = ordered_json::array();
                for (const auto& s : a.spaces)
                    cfg["spaces"].push_back(parse_inline_json(s, "space"));
            }
            if (!a.psi.empty()) cfg["psi"] = psi_arg(a.psi);
            if (!a.nu.empty()) cfg["nu"] = psi_arg(a.nu);
            if (a.natural_choice) cfg["natural_choice"] = true;
            cfg["family"] = {{"kind", a.family},
                             {"count", a.count},
                             {"seed", a.seed},
                             {"degree", a.degree}};
            ordered_json grids = ordered_json::object();
            if (!a.p_grid.empty()) grids["p_grid"] = a.p_grid;
            if (!a.q_grid.empty()) grids["q_grid"] = a.q_grid;
            if (!a.delta_grid.empty()) grids["delta_grid"] = a.delta_grid;
            if (!grids.empty()) cfg["grids"] = grids;
        }

        wirtinger::RunConfig run_cfg = wirtinger::parse_config(cfg.dump());
        return emit(wirtinger::run(run_cfg), run_cfg, out_path);
    } catch (const wirtinger::ConfigError& e) {
        for (const auto& v : e.violations()) std::cerr << "error: " << v << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
}
