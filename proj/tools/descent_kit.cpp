#include "descent/descent_map.hpp"
#include "descent/errors.hpp"
#include "descent/json_io.hpp"
#include "descent/torsor.hpp"
#include "selftest.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

using namespace descent;

namespace {

struct Job {
    std::string command;
    int p = 3;
    std::string lambda = "1";
    std::string a, b, beta, point, model, output;
    std::string constants = "corrected";
    int bound = 5;
    size_t limit = 0;
    int threads = 1;
    unsigned long long seed = 0;
    size_t order = 8;
    unsigned max_precision = 0;
    bool no_closed_form = false;
};

PrecisionConfig precision(const Job& job) {
    PrecisionConfig cfg = PrecisionConfig::from_env();
    if (job.max_precision) cfg.max_bits = job.max_precision;
    if (cfg.start_bits > cfg.max_bits) cfg.start_bits = cfg.max_bits;
    return cfg;
}

json envelope(const Job& job) {
    return {{"schema", kSchema}, {"command", job.command}, {"seed", job.seed}};
}

std::string read_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw UsageError("--model: cannot read " + path);
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

Model load_model(const Job& job, const PrecisionConfig& cfg) {
    return model_from_json(parse_json_text(read_file(job.model), "--model"), cfg);
}

Cyclo lambda_of(const Job& job) { return parse_field_arg(job.lambda, job.p, "--lambda"); }

KummerElement parse_beta(const std::string& text, const AlgebraPtr& alg) {
    auto first = text.find_first_not_of(" \t");
    if (first != std::string::npos && text[first] == '[') {
        json j = parse_json_text(text, "--beta");
        if (j.is_array() && j.size() == static_cast<size_t>(alg->p()))
            return kummer_from_json(j, alg, "--beta");
    }
    return KummerElement(alg, parse_field_arg(text, alg->p(), "--beta"));
}

json class_json(const DescentValue& v, int c, const PrecisionConfig& cfg) {
    PthPowerClass cls = make_class(v.values[c]);
    json shift = nullptr;
    if (v.shifted[c]) shift = {v.shift[c][0], v.shift[c][1]};
    return {{"value", to_json(v.values[c])}, {"class", to_json(cls.rep)},
            {"trivial", is_trivial(cls, cfg)}, {"shift", shift}};
}

int cmd_descent_eval(const Job& job, json& out) {
    auto cfg = precision(job);
    Cyclo lambda = lambda_of(job);
    Curve E = reference_curve(job.p, lambda);
    Point P = point_from_json(parse_json_text(job.point, "--point"), job.p, job.p == 3 ? 3 : 5, "--point");
    if (!on_curve(E, P)) throw UsageError("--point: not a point of the curve");
    Constants which = job.constants == "printed" ? Constants::as_printed : Constants::corrected;
    DescentFunctions F = job.p == 3 ? f3_functions(lambda, which) : f5_functions(lambda, which);
    DescentValue v = eval_descent(E, F, P);
    out["p"] = job.p;
    out["lambda"] = to_json(lambda);
    out["point"] = to_json(normalize(P));
    out["constants"] = job.constants;
    out["S"] = class_json(v, 0, cfg);
    out["T"] = class_json(v, 1, cfg);
    std::cerr << "delta(P) = (" << v.values[0] << ", " << v.values[1] << ")"
              << (out["S"]["trivial"].get<bool>() && out["T"]["trivial"].get<bool>() ? ", trivial" : "") << "\n";
    return 0;
}

int cmd_torsor_build(const Job& job, json& out) {
    auto cfg = precision(job);
    Cyclo lambda = lambda_of(job);
    Cyclo a = parse_field_arg(job.a, job.p, "--a");
    if (a.is_zero()) throw UsageError("--a: must be nonzero");
    auto alg = KummerAlgebra::make(a, cfg);
    KummerElement beta = parse_beta(job.beta, alg);
    json model = job.p == 3 ? model_to_json(build_cubic(lambda, a, beta)) : model_to_json(build_quintic(lambda, a, beta));
    out = model;
    out["command"] = job.command;
    out["seed"] = job.seed;
    std::cerr << (job.p == 3 ? "plane cubic" : "five quadrics in P^4") << " for norm(beta) = " << beta.norm() << "\n";
    return 0;
}

int cmd_torsor_verify(const Job& job, json& out) {
    auto cfg = precision(job);
    Model m = load_model(job, cfg);
    Report r = std::visit([](const auto& x) { return verify_torsor(x); }, m);
    out["report"] = to_json(r);
    for (auto& c : r.checks)
        std::cerr << (c.pass ? "  ok   " : "  FAIL ") << c.name << (c.detail.empty() ? "" : ": " + c.detail) << "\n";
    return r.all_pass() ? 0 : 1;
}

int cmd_torsor_points(const Job& job, json& out) {
    auto cfg = precision(job);
    Model m = load_model(job, cfg);
    std::vector<Form> eqs = std::visit(
        [](const auto& x) {
            if constexpr (std::is_same_v<std::decay_t<decltype(x)>, CubicTorsor>)
                return std::vector<Form>{x.form};
            else
                return x.quadrics;
        },
        m);
    auto pts = torsor_point_search(eqs, job.bound, job.limit, cfg);
    json arr = json::array();
    for (auto& P : pts) arr.push_back(to_json(P));
    out["bound"] = job.bound;
    out["count"] = pts.size();
    out["points"] = arr;
    std::cerr << pts.size() << " points of height <= " << job.bound << "\n";
    return 0;
}

int cmd_norm_solve(const Job& job, json& out) {
    auto cfg = precision(job);
    Cyclo a = parse_field_arg(job.a, job.p, "--a");
    if (a.is_zero()) throw UsageError("--a: must be nonzero");
    Cyclo b = parse_field_arg(job.b, job.p, "--b");
    if (b.is_zero()) throw UsageError("--b: must be nonzero");
    auto alg = KummerAlgebra::make(a, cfg);
    NormSearchOptions opt;
    opt.height_bound = job.bound;
    opt.precision = cfg;
    opt.use_closed_form = !job.no_closed_form;
    auto beta = solve_norm(alg, b, opt);
    out["p"] = job.p;
    out["a"] = to_json(a);
    out["b"] = to_json(b);
    out["bound"] = job.bound;
    out["split"] = alg->is_split();
    out["found"] = beta.has_value();
    out["beta"] = beta ? to_json(*beta) : json(nullptr);
    if (beta) {
        std::cerr << "beta =";
        for (size_t i = 0; i < beta->coeffs().size(); ++i) std::cerr << " (" << (*beta)[i] << ") alpha^" << i;
        std::cerr << "\n";
    } else {
        std::cerr << "no beta up to height " << job.bound << "\n";
    }
    return 0;
}

int cmd_curve_points(const Job& job, json& out) {
    auto cfg = precision(job);
    Cyclo lambda = lambda_of(job);
    Curve E = reference_curve(job.p, lambda);
    auto pts = point_search(E, job.bound, job.threads, cfg);
    json arr = json::array();
    for (auto& P : pts) arr.push_back(to_json(P));
    out["p"] = job.p;
    out["lambda"] = to_json(lambda);
    out["bound"] = job.bound;
    out["count"] = pts.size();
    out["points"] = arr;
    std::cerr << pts.size() << " points of height <= " << job.bound << "\n";
    return 0;
}

int cmd_series(const Job& job, json& out) {
    Cyclo lambda = lambda_of(job);
    Curve E = reference_curve(job.p, lambda);
    BranchSeries B = local_series(E, job.order);
    json coords = json::array();
    for (auto& s : B.coords) coords.push_back(to_json(s));
    out["p"] = job.p;
    out["lambda"] = to_json(lambda);
    out["point"] = to_json(E.origin);
    out["chart"] = B.chart;
    out["parameter"] = B.parameter;
    out["order"] = B.order;
    out["coords"] = coords;
    std::cerr << "branch at O in chart x" << B.chart << " = 1, parameter x" << B.parameter << ", order " << B.order
              << "\n";
    return 0;
}

int cmd_selftest(const Job& job, json& out) {
    auto cfg = precision(job);
    Cyclo lambda = lambda_of(job);
    Report r = run_selftest(job.p, lambda, job.threads, job.seed, cfg);
    out["p"] = job.p;
    out["lambda"] = to_json(lambda);
    out["report"] = to_json(r);
    for (auto& c : r.checks)
        std::cerr << (c.pass ? "  ok   " : "  FAIL ") << c.name << (c.detail.empty() ? "" : ": " + c.detail) << "\n";
    return r.all_pass() ? 0 : 1;
}

void emit(const Job& job, const json& out) {
    std::string text = out.dump(2) + "\n";
    if (job.output.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream f(job.output);
    if (!f) throw UsageError("--output: cannot write " + job.output);
    f << text;
}

} // namespace

int main(int argc, char** argv) {
    Job job;
    CLI::App app{"Explicit 3- and 5-descent on curves with full rational p-torsion over Q(zeta_p)"};
    app.require_subcommand(1);
    app.fallthrough();
    app.add_option("--threads", job.threads, "worker threads for searches")->check(CLI::Range(1, 256));
    app.add_option("--seed", job.seed, "seed recorded in the output and used by selftest");
    app.add_option("--max-precision", job.max_precision,
                   "precision ceiling in bits (overrides DESCENT_KIT_MAX_PRECISION)")
        ->check(CLI::Range(64u, 1u << 20));
    app.add_option("--output", job.output, "write the JSON result to a file instead of standard output");

    auto p_opt = [&](CLI::App* s) { s->add_option("--p", job.p, "3 or 5")->check(CLI::IsMember({3, 5})); };
    auto lambda_opt = [&](CLI::App* s) {
        s->add_option("--lambda", job.lambda, "curve parameter: a rational or a JSON array of p-1 rationals");
    };

    auto* descent = app.add_subcommand("descent", "descent map");
    descent->require_subcommand(1);
    auto* deval = descent->add_subcommand("eval", "evaluate (f_S, f_T) at a point modulo p-th powers");
    p_opt(deval);
    lambda_opt(deval);
    deval->add_option("--point", job.point, "JSON array of coordinates")->required();
    deval->add_option("--constants", job.constants, "normalizing constants")
        ->check(CLI::IsMember({"corrected", "printed"}));

    auto* torsor = app.add_subcommand("torsor", "torsor models");
    torsor->require_subcommand(1);
    auto* tbuild = torsor->add_subcommand("build", "build the torsor model attached to (a, beta)");
    p_opt(tbuild);
    lambda_opt(tbuild);
    tbuild->add_option("--a", job.a, "element of K")->required();
    tbuild->add_option("--beta", job.beta, "element of K[alpha]/(alpha^p - a): JSON array of p field elements")
        ->required();
    auto* tverify = torsor->add_subcommand("verify", "check every identity of a model");
    tverify->add_option("--model", job.model, "model JSON file")->required();
    auto* tpoints = torsor->add_subcommand("points", "search for K-points on a model");
    tpoints->add_option("--model", job.model, "model JSON file")->required();
    tpoints->add_option("--bound", job.bound, "height bound")->check(CLI::Range(0, 1000));
    tpoints->add_option("--limit", job.limit, "stop after this many points (0: no limit)");

    auto* norm = app.add_subcommand("norm", "norm equations");
    norm->require_subcommand(1);
    auto* nsolve = norm->add_subcommand("solve", "find beta with norm(beta) = b in K[alpha]/(alpha^p - a)");
    p_opt(nsolve);
    nsolve->add_option("--a", job.a, "element of K")->required();
    nsolve->add_option("--b", job.b, "element of K")->required();
    nsolve->add_option("--bound", job.bound, "height bound")->check(CLI::Range(0, 1000));
    nsolve->add_flag("--no-closed-form", job.no_closed_form, "search even when the split closed form applies");

    auto* curve = app.add_subcommand("curve", "the curve E_lambda");
    curve->require_subcommand(1);
    auto* cpoints = curve->add_subcommand("points", "search for K-points");
    p_opt(cpoints);
    lambda_opt(cpoints);
    cpoints->add_option("--bound", job.bound, "height bound")->check(CLI::Range(0, 1000));

    auto* series = app.add_subcommand("series", "local expansion at the origin");
    p_opt(series);
    lambda_opt(series);
    series->add_option("--order", job.order, "number of coefficients")->check(CLI::Range(2, 64));

    auto* selftest = app.add_subcommand("selftest", "quick end-to-end checks");
    p_opt(selftest);
    lambda_opt(selftest);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    using Handler = int (*)(const Job&, json&);
    std::vector<std::pair<CLI::App*, Handler>> table = {
        {deval, cmd_descent_eval},   {tbuild, cmd_torsor_build}, {tverify, cmd_torsor_verify},
        {tpoints, cmd_torsor_points}, {nsolve, cmd_norm_solve},  {cpoints, cmd_curve_points},
        {series, cmd_series},         {selftest, cmd_selftest},
    };
    for (auto& [sub, handler] : table) {
        if (!sub->parsed()) continue;
        job.command = sub->get_parent() == &app ? sub->get_name() : sub->get_parent()->get_name() + " " + sub->get_name();
        try {
            json out = envelope(job);
            int code = handler(job, out);
            emit(job, out);
            return code;
        } catch (const UsageError& e) {
            std::cerr << "error: " << e.what() << "\n";
            return 2;
        } catch (const Error& e) {
            std::cerr << "error: " << e.what() << "\n";
            return 1;
        } catch (const std::exception& e) {
            std::cerr << "error: " << e.what() << "\n";
            return 1;
        }
    }
    std::cerr << app.help();
    return 2;
}
