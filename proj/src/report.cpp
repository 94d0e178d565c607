#include "wirtinger/report.hpp"

#include <chrono>
#include <cmath>
#include <set>
#include <sstream>

#include "wirtinger/constants.hpp"
#include "wirtinger/norms.hpp"

namespace wirtinger {

namespace {

const char* kToolVersion = "wirtinger 1.0.0";

std::string join(const std::vector<std::string>& v, const char* sep) {
    std::string out;
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) out += sep;
        out += v[i];
    }
    return out;
}

double require_number(const ordered_json& j, const std::string& field,
                      std::vector<std::string>& errs) {
    if (!j.contains(field) || !j[field].is_number()) {
        errs.push_back("field '" + field + "': number required");
        return 0.0;
    }
    return j[field].get<double>();
}

Interval parse_domain(const ordered_json& spec) {
    if (!spec.contains("domain") || !spec["domain"].is_array() ||
        spec["domain"].size() != 2)
        throw ConfigError({"function.domain: [a,b] required"});
    return {spec["domain"][0].get<double>(), spec["domain"][1].get<double>()};
}

FunctionHandle handle_from_poly(const Polynomial& f) {
    FunctionHandle h{[f](double x) { return f(x); }, {}, f.domain()};
    Polynomial d = f;
    for (int i = 0; i < 4; ++i) {
        d = poly_derivative(d, 1);
        h.derivative_chain.push_back([d](double x) { return d(x); });
    }
    return h;
}

} // namespace

ConfigError::ConfigError(std::vector<std::string> violations)
    : std::runtime_error(join(violations, "; ")),
      violations_(std::move(violations)) {}

ParsedFunction parse_function_spec(const ordered_json& spec) {
    if (!spec.is_object() || !spec.contains("type"))
        throw ConfigError({"function: object with 'type' required"});
    const std::string type = spec["type"].get<std::string>();
    if (type == "polynomial") {
        if (!spec.contains("coeffs") || !spec["coeffs"].is_array())
            throw ConfigError({"function.coeffs: array required"});
        std::vector<double> c;
        for (const auto& v : spec["coeffs"]) c.push_back(v.get<double>());
        Polynomial p(c, parse_domain(spec), spec.value("extended_by_zero", false));
        return {p, handle_from_poly(p)};
    }
    if (type == "extremal") {
        if (!spec.contains("n") || !spec.contains("k"))
            throw ConfigError({"function: extremal requires 'n' and 'k'"});
        Polynomial p = extremal_g(spec["n"].get<int>(), spec["k"].get<int>());
        return {p, handle_from_poly(p)};
    }
    if (type == "sin") {
        if (!spec.contains("frequency"))
            throw ConfigError({"function: sin requires 'frequency'"});
        return {std::nullopt,
                make_sin(spec["frequency"].get<double>(), parse_domain(spec))};
    }
    throw ConfigError({"function.type: unknown type '" + type + "'"});
}

PsiGen parse_psi_spec(const ordered_json& spec) {
    // shorthand: "constant" means psi = 1 on (1.5, 3)
    if (spec.is_string()) {
        const std::string s = spec.get<std::string>();
        if (s == "constant") return PsiGen::constant(1.0, 1.5, 3.0);
        throw ConfigError({"psi: unknown shorthand '" + s + "'"});
    }
    std::vector<std::string> errs;
    if (!spec.is_object()) throw ConfigError({"psi: object or shorthand required"});
    const double A = require_number(spec, "A", errs);
    double B = 0.0;
    if (spec.contains("B") && spec["B"].is_string() &&
        spec["B"].get<std::string>() == "inf")
        B = std::numeric_limits<double>::infinity();
    else
        B = require_number(spec, "B", errs);
    const auto& psi = spec.contains("psi") ? spec["psi"] : spec;
    const std::string form = psi.value("form", "constant");
    std::vector<double> params;
    if (psi.contains("params"))
        for (const auto& v : psi["params"]) params.push_back(v.get<double>());
    if (!errs.empty()) throw ConfigError(errs);
    if (form == "constant")
        return PsiGen::constant(params.empty() ? 1.0 : params[0], A, B);
    if (form == "power")
        return PsiGen::power(params.size() > 0 ? params[0] : 1.0,
                             params.size() > 1 ? params[1] : 1.0, A, B);
    throw ConfigError({"psi.form: 'constant' or 'power' required"});
}

SpaceSpec parse_space_spec(const ordered_json& spec) {
    if (!spec.is_object() || !spec.contains("type"))
        throw ConfigError({"space: object with 'type' required"});
    const std::string type = spec["type"].get<std::string>();
    std::vector<std::string> errs;
    if (type == "lebesgue") {
        if (spec.contains("p") && spec["p"].is_string() &&
            spec["p"].get<std::string>() == "inf")
            return Lebesgue{std::numeric_limits<double>::infinity()};
        const double p = require_number(spec, "p", errs);
        if (!errs.empty()) throw ConfigError(errs);
        if (!(p >= 1.0)) throw ConfigError({"space.p: p >= 1 required"});
        return Lebesgue{p};
    }
    if (type == "gls") return GrandLebesgue{parse_psi_spec(spec)};
    if (type == "orlicz") {
        if (!spec.contains("phi") || !spec["phi"].is_object())
            throw ConfigError({"space.phi: object required"});
        const auto& phi = spec["phi"];
        if (phi.value("form", "") != "power")
            throw ConfigError({"space.phi.form: 'power' required"});
        const double p = require_number(phi, "p", errs);
        if (!errs.empty()) throw ConfigError(errs);
        return Orlicz{OrliczGen::power(p)};
    }
    if (type == "zygmund") {
        const double q = require_number(spec, "q", errs);
        const double gamma = require_number(spec, "gamma", errs);
        if (!errs.empty()) throw ConfigError(errs);
        return Zygmund{q, gamma, spec.value("C", 2.718281828459045)};
    }
    throw ConfigError({"space.type: unknown type '" + type + "'"});
}

RunConfig parse_config(const std::string& text) {
    ordered_json j;
    try {
        j = ordered_json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw ConfigError({"malformed JSON at byte " + std::to_string(e.byte) +
                           ": " + e.what()});
    }
    std::vector<std::string> errs;
    if (!j.is_object()) errs.push_back("config: top-level object required");
    RunConfig cfg;
    if (errs.empty()) {
        cfg.command = j.value("command", "");
        static const std::set<std::string> kCommands{"norm", "fundamental",
                                                     "constant", "verify", "sweep"};
        if (!kCommands.count(cfg.command))
            errs.push_back("command: one of norm|fundamental|constant|verify|sweep required");
        cfg.format = j.value("format", "json");
        if (cfg.format != "json" && cfg.format != "csv" && cfg.format != "text")
            errs.push_back("format: json|csv|text required");
        cfg.output_path = j.value("output_path", "");
        cfg.timing = j.value("timing", false);
        if (cfg.command == "verify" || cfg.command == "sweep") {
            if (!j.contains("theorem") || !j["theorem"].is_string())
                errs.push_back("theorem: required for verify/sweep");
        }
        if (cfg.command == "norm" && !j.contains("function"))
            errs.push_back("function: required for norm");
        if ((cfg.command == "norm" || cfg.command == "fundamental") &&
            !j.contains("spaces"))
            errs.push_back("spaces: required for norm/fundamental");
        if (cfg.command == "fundamental" && !j.contains("delta"))
            errs.push_back("delta: required for fundamental");
        if (cfg.command == "constant" &&
            (!j.contains("constant_id") || !j["constant_id"].is_string()))
            errs.push_back("constant_id: required for constant");
    }
    if (!errs.empty()) throw ConfigError(errs);
    cfg.raw = j;
    return cfg;
}

ordered_json verdict_to_json(const VerdictReport& v) {
    ordered_json j;
    j["type"] = "verdict";
    j["theorem_id"] = v.theorem_id;
    j["parameters"] = ordered_json::object();
    for (const auto& [key, val] : v.parameters) j["parameters"][key] = val;
    j["observed"] = v.observed;
    j["bound"] = v.bound;
    j["satisfied"] = v.satisfied;
    j["margin"] = v.margin;
    j["samples"] = v.samples;
    j["certified"] = v.certified;
    return j;
}

namespace {

ordered_json value_entry(const std::string& label, const NormValue& n) {
    ordered_json j;
    j["type"] = "value";
    j["label"] = label;
    j["value"] = n.value;
    j["error_estimate"] = n.error_estimate;
    return j;
}

struct Params {
    const ordered_json& j;
    double num(const std::string& name, double dflt) const {
        if (j.contains("params") && j["params"].contains(name))
            return j["params"][name].get<double>();
        if (j.contains(name) && j[name].is_number()) return j[name].get<double>();
        return dflt;
    }
    int integer(const std::string& name, int dflt) const {
        return static_cast<int>(num(name, dflt));
    }
};

TrialFamily parse_family(const ordered_json& j, int n, int k) {
    TrialFamily fam;
    fam.n = n;
    fam.k = k;
    if (j.contains("family") && j["family"].is_object()) {
        const auto& f = j["family"];
        const std::string kind = f.value("kind", "extremal");
        if (kind == "extremal")
            fam.kind = TrialFamily::Kind::Extremal;
        else if (kind == "random")
            fam.kind = TrialFamily::Kind::RandomZClass;
        else
            throw ConfigError({"family.kind: extremal|random required"});
        fam.count = f.value("count", fam.kind == TrialFamily::Kind::Extremal ? 1 : 50);
        fam.seed = f.value("seed", 42u);
        fam.degree = f.value("degree", 8);
    }
    return fam;
}

std::vector<double> parse_grid(const ordered_json& j, const std::string& name,
                               std::vector<double> dflt) {
    if (j.contains("grids") && j["grids"].contains(name)) {
        std::vector<double> g;
        for (const auto& v : j["grids"][name]) g.push_back(v.get<double>());
        if (g.empty()) throw ConfigError({"grids." + name + ": non-empty array required"});
        return g;
    }
    return dflt;
}

void run_constant(const ordered_json& j, ordered_json& results) {
    const std::string id = j["constant_id"].get<std::string>();
    const Params par{j};
    ConstantValue c{0.0, FormulaId::BrinkK};
    if (id == "brink_K")
        c = brink_K(par.num("p", 2.0), par.num("q", 2.0));
    else if (id == "beesack")
        c = beesack_constant(par.num("p", 2.0));
    else if (id == "ank_lb_gls")
        c = ank_lower_bound(par.integer("n", 2), par.integer("k", 1));
    else if (id == "ank_lb_orlicz")
        c = ank_lower_bound_orlicz(par.integer("n", 2), par.integer("k", 1));
    else if (id == "gnk_max")
        c = gnk_extrema(par.integer("n", 2), par.integer("k", 1)).max;
    else if (id == "gnk_core_min")
        c = gnk_extrema(par.integer("n", 2), par.integer("k", 1)).core_min;
    else
        throw ConfigError({"constant_id: unknown id '" + id + "'"});
    results.push_back(value_entry(formula_name(c.formula_id), {c.value, 0.0}));
}

void run_norm(const ordered_json& j, ordered_json& results) {
    const ParsedFunction fn = parse_function_spec(j["function"]);
    const Interval iv = fn.poly ? fn.poly->domain() : fn.handle.domain;
    const bool normalized = j.value("normalized", false);
    const Evaluable ev = fn.poly ? Evaluable::from(*fn.poly, iv)
                                 : Evaluable::from(fn.handle, iv);
    for (const auto& sj : j["spaces"]) {
        const SpaceSpec space = parse_space_spec(sj);
        const NormValue n = normalized
                                ? space_norm_normalized(ev, space, iv.length())
                                : space_norm(ev, space);
        results.push_back(value_entry("norm:" + space_name(space), n));
    }
}

void run_fundamental(const ordered_json& j, ordered_json& results) {
    const double delta = j["delta"].get<double>();
    for (const auto& sj : j["spaces"]) {
        const SpaceSpec space = parse_space_spec(sj);
        results.push_back(value_entry("fundamental:" + space_name(space),
                                      fundamental(space, delta)));
    }
}

void run_verify(const ordered_json& j, ordered_json& results,
                std::vector<VerdictReport>& verdicts) {
    const std::string theorem = j["theorem"].get<std::string>();
    const Params par{j};
    const int n = par.integer("n", 2);
    const int k = par.integer("k", 1);

    if (theorem == "classical") {
        const ParsedFunction fn = parse_function_spec(j.at("function"));
        const Interval iv = fn.poly ? fn.poly->domain() : fn.handle.domain;
        verdicts.push_back(classical_wirtinger_check(fn.handle, iv));
    } else if (theorem == "beesack") {
        const ParsedFunction fn = parse_function_spec(j.at("function"));
        verdicts.push_back(beesack_check(fn.handle, par.num("p", 2.0)));
    } else if (theorem == "ank") {
        verdicts.push_back(estimate_Ank(
            n, k, parse_family(j, n, k),
            parse_grid(j, "p_grid", default_pq_grid()),
            parse_grid(j, "q_grid", default_pq_grid())));
    } else if (theorem == "thm31") {
        if (!j.contains("spaces") || j["spaces"].size() != 2)
            throw ConfigError({"spaces: exactly two required for thm31"});
        verdicts.push_back(verify_w_sweep(
            parse_space_spec(j["spaces"][0]), parse_space_spec(j["spaces"][1]), n,
            k, parse_family(j, n, k),
            parse_grid(j, "delta_grid", default_delta_grid())));
    } else if (theorem == "thm41") {
        const PsiGen psi = parse_psi_spec(j.contains("psi") ? j["psi"] : "constant");
        const PsiGen nu = parse_psi_spec(j.contains("nu") ? j["nu"] : "constant");
        verdicts.push_back(v0_lower_check(
            psi, nu, n, k, parse_grid(j, "delta_grid", default_delta_grid())));
    } else if (theorem == "thm51") {
        verdicts.push_back(verify_zygmund_boundedness(
            par.num("p", 3.0), par.num("q", 2.0), par.num("gamma", 1.0),
            par.num("beta", 1.0), n, k, parse_family(j, n, k)));
    } else if (theorem == "thm61") {
        const OrliczGen phi =
            j.contains("phi_power") ? OrliczGen::power(j["phi_power"].get<double>())
                                    : OrliczGen::power(2.0);
        const OrliczGen phi1 = j.contains("phi1_power")
                                   ? OrliczGen::power(j["phi1_power"].get<double>())
                                   : OrliczGen::power(2.0);
        verdicts.push_back(orlicz_wbar(
            phi, phi1, n, k, parse_grid(j, "delta_grid", default_delta_grid())));
    } else if (theorem == "thm71") {
        const ordered_json fn_spec =
            j.contains("function")
                ? j["function"]
                : ordered_json{{"type", "extremal"}, {"n", 2}, {"k", 1}};
        ParsedFunction fn = parse_function_spec(fn_spec);
        if (!fn.poly) throw ConfigError({"function: thm71 requires a polynomial"});
        const PsiGen psi = parse_psi_spec(j.contains("psi") ? j["psi"] : "constant");
        verdicts.push_back(verify_thm71(
            *fn.poly, psi,
            parse_grid(j, "p_grid", {1.5, 2.0, 2.5, 3.0}),
            j.value("natural_choice", false)));
    } else {
        throw ConfigError({"theorem: unknown id '" + theorem + "'"});
    }
    (void)results;
}

void run_sweep(const ordered_json& j, ordered_json& results,
               std::vector<VerdictReport>& verdicts) {
    const std::string theorem = j["theorem"].get<std::string>();
    const Params par{j};
    const int n = par.integer("n", 2);
    const int k = par.integer("k", 1);
    const TrialFamily fam = parse_family(j, n, k);
    if (theorem == "thm31") {
        if (!j.contains("spaces") || j["spaces"].size() != 2)
            throw ConfigError({"spaces: exactly two required for thm31 sweep"});
        const SpaceSpec X = parse_space_spec(j["spaces"][0]);
        const SpaceSpec Y = parse_space_spec(j["spaces"][1]);
        const auto grid = parse_grid(j, "delta_grid", default_delta_grid());
        for (double d : grid) {
            std::ostringstream label;
            label << "w_functional:delta=" << d;
            results.push_back(
                value_entry(label.str(), {w_functional(X, Y, n, k, d, fam), 0.0}));
        }
        verdicts.push_back(verify_w_sweep(X, Y, n, k, fam, grid));
    } else if (theorem == "thm51") {
        const double p = par.num("p", 3.0), q = par.num("q", 2.0);
        const double gamma = par.num("gamma", 1.0), beta = par.num("beta", 1.0);
        for (double d : parse_grid(j, "delta_grid", default_delta_grid())) {
            std::ostringstream label;
            label << "zygmund_wo:delta=" << d;
            results.push_back(value_entry(
                label.str(), {zygmund_wo(p, q, gamma, beta, n, k, d, fam), 0.0}));
        }
        verdicts.push_back(
            verify_zygmund_boundedness(p, q, gamma, beta, n, k, fam));
    } else {
        throw ConfigError({"theorem: sweep supports thm31|thm51"});
    }
}

} // namespace

ReportDocument run(const RunConfig& config) {
    const auto start = std::chrono::steady_clock::now();
    ReportDocument doc;
    doc.tool_version = kToolVersion;
    doc.config_echo = config.raw;
    doc.results = ordered_json::array();

    std::vector<VerdictReport> verdicts;
    if (config.command == "constant")
        run_constant(config.raw, doc.results);
    else if (config.command == "norm")
        run_norm(config.raw, doc.results);
    else if (config.command == "fundamental")
        run_fundamental(config.raw, doc.results);
    else if (config.command == "verify")
        run_verify(config.raw, doc.results, verdicts);
    else
        run_sweep(config.raw, doc.results, verdicts);

    std::set<std::string> seen;
    for (const auto& v : verdicts) {
        doc.results.push_back(verdict_to_json(v));
        for (const auto& w : v.warnings)
            if (seen.insert(w).second) doc.warnings.push_back(w);
    }
    if (config.timing)
        doc.timing_ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                            std::chrono::steady_clock::now() - start)
                            .count();
    return doc;
}

ordered_json ReportDocument::to_json() const {
    ordered_json j;
    j["tool_version"] = tool_version;
    j["config_echo"] = config_echo;
    j["results"] = results;
    j["timing_ms"] = timing_ms;
    j["warnings"] = warnings;
    return j;
}

std::string ReportDocument::to_csv() const {
    std::ostringstream out;
    out << "type,label,theorem_id,value,error_estimate,observed,bound,"
           "satisfied,margin,samples\n";
    auto num = [](const ordered_json& j, const char* f) {
        return j.contains(f) ? j[f].dump() : std::string();
    };
    for (const auto& r : results) {
        const std::string type = r.value("type", "");
        out << type << ',' << r.value("label", "") << ','
            << r.value("theorem_id", "") << ',' << num(r, "value") << ','
            << num(r, "error_estimate") << ',' << num(r, "observed") << ','
            << num(r, "bound") << ','
            << (r.contains("satisfied") ? (r["satisfied"].get<bool>() ? "true" : "false") : "")
            << ',' << num(r, "margin") << ',' << num(r, "samples") << '\n';
    }
    return out.str();
}

std::string ReportDocument::to_text() const {
    std::ostringstream out;
    out.precision(17);
    for (const auto& r : results) {
        if (r.value("type", "") == "value") {
            out << r.value("label", "") << " = " << r["value"].get<double>()
                << "  (err<=" << r["error_estimate"].get<double>() << ")\n";
        } else {
            out << r.value("theorem_id", "") << ": "
                << (r["satisfied"].get<bool>() ? "satisfied" : "VIOLATED")
                << "  observed=" << r["observed"].get<double>()
                << "  bound=" << r["bound"].get<double>()
                << "  margin=" << r["margin"].get<double>() << '\n';
        }
    }
    for (const auto& w : warnings) out << "warning: " << w << '\n';
    return out.str();
}

int ReportDocument::exit_status() const {
    for (const auto& r : results)
        if (r.value("type", "") == "verdict" && !r["satisfied"].get<bool>())
            return 1;
    return 0;
}

} // namespace wirtinger
