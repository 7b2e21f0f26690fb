// Command-line front end: exact evaluation of transalgebraic expressions,
// euler tables, identity suites and limit experiments.
//
// Exit status: 0 success, 1 verification failure, 2 usage or parse error.

#include <cstdio>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "ene/error.hpp"
#include "ene/euler.hpp"
#include "ene/expr.hpp"
#include "ene/json_io.hpp"
#include "ene/limits.hpp"
#include "ene/verify.hpp"

namespace {

using namespace ene;

struct RunConfig {
    std::string format = "text";
    int order = 16;
    double epsilon = 0.1;
};

void emit(const nlohmann::json& j) { std::cout << j.dump(2) << "\n"; }

std::string render_value(const EvalValue& v) {
    if (std::holds_alternative<RationalFunction>(v)) {
        return std::get<RationalFunction>(v).to_string();
    }
    if (std::holds_alternative<SeriesValue>(v)) {
        const SeriesValue& s = std::get<SeriesValue>(v);
        std::string out = s.body.to_string();
        if (s.has_principal) {
            out += "\nprincipal exponent part: " + s.principal.to_string();
        }
        return out;
    }
    if (std::holds_alternative<TransalgebraicFunction>(v)) {
        const TransalgebraicFunction& f = std::get<TransalgebraicFunction>(v);
        if (f.is_rational()) return f.rational_part().to_string();
        std::string out;
        if (!(f.rational_part() == RationalFunction(1))) {
            out += "(" + f.rational_part().to_string() + ") * ";
        }
        return out + "exp(" + f.exponent_part().to_string() + ")";
    }
    const EneSymbol& s = std::get<EneSymbol>(v);
    return s.kind() + " symbol: order " + std::to_string(s.order) + ", parameter " +
           s.parameter.to_string() + ", weight " + s.weight.to_string();
}

EvalValue eval_text(const std::string& text, const RunConfig& cfg) {
    EvalOptions opt;
    opt.order = cfg.order;
    return evaluate(parse_expression(text), opt);
}

int run_eval(const std::string& text, const RunConfig& cfg) {
    EvalValue v = eval_text(text, cfg);
    if (cfg.format == "json") {
        emit(eval_value_json(v));
    } else {
        std::cout << render_value(v) << "\n";
    }
    return 0;
}

int run_ene(const std::string& left, const std::string& right, const RunConfig& cfg) {
    auto node = std::make_shared<Expr>();
    node->kind = ExprKind::Ene;
    node->args = {parse_expression(left), parse_expression(right)};
    EvalOptions opt;
    opt.order = cfg.order;
    EvalValue v = evaluate(node, opt);
    if (cfg.format == "json") {
        emit(eval_value_json(v));
    } else {
        std::cout << render_value(v) << "\n";
    }
    return 0;
}

int run_series(const std::string& text, const RunConfig& cfg) {
    LaurentSeries s = value_series(eval_text(text, cfg), cfg.order);
    if (cfg.format == "json") {
        emit(series_json(s));
    } else {
        std::cout << s.to_string() << "\n";
    }
    return 0;
}

int run_euler_table(int max_k, const RunConfig& cfg) {
    if (max_k < 1) throw Error("table size must be positive");
    if (cfg.format == "json") {
        emit(euler_table_json(max_k));
    } else {
        std::cout << render_euler_table(max_k);
    }
    return 0;
}

int run_verify(const std::string& suite, const VerifyOptions& options, const RunConfig& cfg) {
    if (options.order < 8) throw Error("verify needs --order >= 8");
    VerifyReport report = run_verify_suite(suite, options);
    if (cfg.format == "json") {
        emit(verify_report_json(report));
    } else {
        std::cout << "suite " << report.suite << ": " << (report.pass ? "pass" : "FAIL") << "\n";
        for (const auto& c : report.checks) {
            std::cout << "  " << (c.pass ? "pass" : "FAIL") << "  " << c.name;
            if (!c.detail.empty()) std::cout << ": " << c.detail;
            std::cout << "\n";
        }
    }
    return report.pass ? 0 : 1;
}

int run_limit(const std::string& text, long k_min, long k_max, const std::string& grid,
              const RunConfig& cfg) {
    if (k_min < 1 || k_max < k_min) throw Error("need 1 <= kmin <= kmax");
    TransalgebraicFunction f = value_transalg(eval_text(text, cfg));
    SampleRegion region = parse_sample_grid(grid, cfg.epsilon);
    ConvergenceReport report = euler_limit_study(f, region, k_min, k_max);
    if (cfg.format == "json") {
        emit(convergence_report_json(report));
    } else {
        std::cout << "k\terror\thausdorff\n";
        for (std::size_t j = 0; j < report.ks.size(); ++j) {
            std::printf("%ld\t%.6e\t%.6e\n", report.ks[j], report.errors[j], report.hausdorff[j]);
        }
        std::printf("decay exponent: %.4f\n", report.decay_exponent);
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact calculator for the ene product on transalgebraic functions"};
    app.require_subcommand(1);
    app.fallthrough();  // global flags stay valid after a subcommand name

    RunConfig cfg;
    app.add_option("--format", cfg.format, "output format")
        ->check(CLI::IsMember({"text", "json"}))
        ->capture_default_str();
    app.add_option("--order", cfg.order, "series truncation order")->capture_default_str();
    app.add_option("--epsilon", cfg.epsilon, "guard distance around divisor points")
        ->capture_default_str();

    std::string expr_text, expr_right, suite;
    int table_k = 7;
    VerifyOptions vopt;
    vopt.order = 0;  // filled from --order below
    long k_min = 8, k_max = 256;
    std::string grid = "circle:0,0,0.5,64";

    auto* cmd_eval = app.add_subcommand("eval", "evaluate an expression exactly");
    cmd_eval->add_option("expr", expr_text, "expression")->required();

    auto* cmd_ene = app.add_subcommand("ene", "ene product of two expressions");
    cmd_ene->add_option("left", expr_text, "left operand")->required();
    cmd_ene->add_option("right", expr_right, "right operand")->required();

    auto* cmd_series = app.add_subcommand("series", "series expansion at 0");
    cmd_series->add_option("expr", expr_text, "expression")->required();

    auto* cmd_table = app.add_subcommand("euler-table", "table of euler rational functions");
    cmd_table->add_option("k", table_k, "number of rows")->required();

    auto* cmd_verify = app.add_subcommand("verify", "run an identity suite");
    cmd_verify->add_option("suite", suite, "one of: ring, euler, generators, polylog, bridge, limits")
        ->required();
    cmd_verify->add_option("--max-k", vopt.max_k, "highest euler index")->capture_default_str();
    cmd_verify->add_option("--trials", vopt.trials, "randomized cases per property")
        ->capture_default_str();
    cmd_verify->add_option("--seed", vopt.seed, "rng seed")->capture_default_str();
    cmd_verify
        ->add_flag("--negative-control", vopt.negative_control,
                   "test fixture: corrupt one bridge expectation so the suite must fail")
        ->group("");

    auto* cmd_limit = app.add_subcommand("limit", "euler approximation f_k against f");
    cmd_limit->add_option("--expr", expr_text, "expression")->required();
    cmd_limit->add_option("--kmin", k_min, "first k")->capture_default_str();
    cmd_limit->add_option("--kmax", k_max, "last k (doubling)")->capture_default_str();
    cmd_limit->add_option("--grid", grid, "sample grid: circle:cx,cy,r,n / rect:x0,y0,x1,y1,nx,ny, ';'-separated")
        ->capture_default_str();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        if (cmd_eval->parsed()) return run_eval(expr_text, cfg);
        if (cmd_ene->parsed()) return run_ene(expr_text, expr_right, cfg);
        if (cmd_series->parsed()) return run_series(expr_text, cfg);
        if (cmd_table->parsed()) return run_euler_table(table_k, cfg);
        if (cmd_verify->parsed()) {
            vopt.order = cfg.order;
            return run_verify(suite, vopt, cfg);
        }
        if (cmd_limit->parsed()) return run_limit(expr_text, k_min, k_max, grid, cfg);
    } catch (const ParseError& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return 2;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
