// confrac: command-line front end for the conformable series library.
//
//   confrac hermite --m 6 --alpha 1/2 --method all
//   confrac solve   --p p.json --q q.json --c0 1 --c1 0 --order 20
//   confrac eval    --series y.json --from 0 --to 2 --samples 101
//   confrac check   --suite hermite --m-max 10
//
// Exit status: 0 success, 1 a check failed, 2 usage or input error.

#include "confrac/errors.hpp"
#include "confrac/hermite.hpp"
#include "confrac/json_io.hpp"
#include "confrac/ode_solver.hpp"
#include "confrac/suites.hpp"

#include <CLI11.hpp>

#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>

namespace {

constexpr int kExitOk = 0;
constexpr int kExitCheckFailed = 1;
constexpr int kExitUsage = 2;

class UsageError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Inline JSON when the argument starts with '{', otherwise a file path.
confrac::Json load_json_argument(const std::string& arg) {
    std::string text = arg;
    const auto first = arg.find_first_not_of(" \t\r\n");
    if (first == std::string::npos || arg[first] != '{') {
        std::ifstream in(arg);
        if (!in) {
            throw UsageError("cannot open '" + arg + "'");
        }
        std::stringstream buf;
        buf << in.rdbuf();
        text = buf.str();
    }
    try {
        return confrac::Json::parse(text);
    } catch (const confrac::Json::parse_error& e) {
        throw UsageError(std::string("invalid JSON: ") + e.what());
    }
}

void emit(const std::string& text, const std::string& out_path) {
    if (out_path.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream out(out_path);
    if (!out) {
        throw UsageError("cannot write '" + out_path + "'");
    }
    out << text;
}

struct HermiteArgs {
    int m = 0;
    std::string alpha = "1";
    std::string method = "ode";
    std::string out;
};

int run_hermite(const HermiteArgs& args) {
    using namespace confrac;
    const Rational alpha = parse_rational(args.alpha);
    require_valid_alpha(alpha);
    if (args.m < 0) {
        throw UsageError("--m must be nonnegative");
    }
    const auto build = [&](const std::string& method) {
        if (method == "ode") return hermite_from_ode(args.m, alpha);
        if (method == "recurrence") return hermite_three_term(args.m, alpha);
        if (method == "rodrigues") return hermite_rodrigues(args.m, alpha);
        return substitution_oracle(args.m, alpha);
    };
    Json result;
    if (args.method == "all") {
        Json methods = Json::object();
        const auto reference = build("ode");
        bool agree = true;
        for (const std::string method : {"ode", "recurrence", "rodrigues", "substitution"}) {
            const auto h = build(method);
            agree = agree && h == reference;
            methods[method] = to_json(h);
        }
        result = {{"m", args.m}, {"alpha", to_string(alpha)}, {"methods", std::move(methods)}, {"agree", agree}};
    } else {
        result = to_json(build(args.method));
    }
    emit(result.dump(2) + "\n", args.out);
    return kExitOk;
}

struct SolveArgs {
    std::string p;
    std::string q;
    std::string c0 = "1";
    std::string c1 = "0";
    std::size_t order = 20;
    std::size_t window = confrac::kDefaultRadiusWindow;
    std::string out;
};

int run_solve(const SolveArgs& args) {
    using namespace confrac;
    const AlphaODE2 ode(series_from_json(load_json_argument(args.p)), series_from_json(load_json_argument(args.q)));
    const auto report = solve_series(ode, parse_rational(args.c0), parse_rational(args.c1), args.order, args.window);
    emit(to_json(report).dump(2) + "\n", args.out);
    return kExitOk;
}

struct EvalArgs {
    std::string series;
    double from = 0.0;
    double to = 1.0;
    int samples = 101;
    std::string format = "csv";
    std::string out;
};

int run_eval(const EvalArgs& args) {
    using namespace confrac;
    if (!(args.from < args.to)) {
        throw UsageError("--from must be less than --to");
    }
    if (args.samples < 1) {
        throw UsageError("--samples must be positive");
    }
    const auto json = load_json_argument(args.series);
    // Accept a bare series, a Hermite polynomial or a solve report.
    const auto s = series_from_json(json.contains("solution") ? json.at("solution") : json);
    std::vector<double> xs;
    std::vector<double> ys;
    for (int i = 0; i < args.samples; ++i) {
        const double x = args.samples == 1 ? args.from
                                           : args.from + (args.to - args.from) * i / (args.samples - 1);
        xs.push_back(x);
        ys.push_back(s.eval(x));
    }
    std::string text;
    if (args.format == "json") {
        text = Json{{"x", xs}, {"y", ys}}.dump(2) + "\n";
    } else {
        text = "x,y\n";
        char line[64];
        for (std::size_t i = 0; i < xs.size(); ++i) {
            std::snprintf(line, sizeof line, "%.17g,%.17g\n", xs[i], ys[i]);
            text += line;
        }
    }
    emit(text, args.out);
    return kExitOk;
}

struct CheckArgs {
    std::string suite;
    int m_max = 10;
    int j = 1;
    std::string alpha;
    std::uint64_t seed = confrac::SuiteOptions{}.seed;
    int instances = confrac::SuiteOptions{}.instances;
    std::string out;
};

int run_check(const CheckArgs& args) {
    using namespace confrac;
    SuiteOptions options;
    options.m_max = args.m_max;
    options.j = args.j;
    options.seed = args.seed;
    options.instances = args.instances;
    if (!args.alpha.empty()) {
        options.alpha = parse_rational(args.alpha);
        require_valid_alpha(*options.alpha);
    }
    const auto report = run_suite(args.suite, options);
    emit(report.to_json().dump(2) + "\n", args.out);
    return report.ok() ? kExitOk : kExitCheckFailed;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Conformable fractional power series: solver, Hermite polynomials, checks"};
    app.require_subcommand(1, 1);

    HermiteArgs hermite;
    auto* hermite_cmd = app.add_subcommand("hermite", "Generate a conformable Hermite polynomial");
    hermite_cmd->add_option("--m", hermite.m, "Polynomial order")->required();
    hermite_cmd->add_option("--alpha", hermite.alpha, "Rational alpha in (0,1], e.g. 1/2");
    hermite_cmd->add_option("--method", hermite.method, "Construction")
        ->check(CLI::IsMember({"ode", "recurrence", "rodrigues", "substitution", "all"}));
    hermite_cmd->add_option("--out", hermite.out, "Output file (default stdout)");

    SolveArgs solve;
    auto* solve_cmd = app.add_subcommand("solve", "Series solution of T^2 y + p T y + q y = 0");
    solve_cmd->add_option("--p", solve.p, "Series JSON for p (inline or file)")->required();
    solve_cmd->add_option("--q", solve.q, "Series JSON for q (inline or file)")->required();
    solve_cmd->add_option("--c0", solve.c0, "y(x0)");
    solve_cmd->add_option("--c1", solve.c1, "T_alpha y(x0) / alpha");
    solve_cmd->add_option("--order", solve.order, "Truncation order N");
    solve_cmd->add_option("--window", solve.window, "Ratio-test window");
    solve_cmd->add_option("--out", solve.out, "Output file (default stdout)");

    EvalArgs eval;
    auto* eval_cmd = app.add_subcommand("eval", "Sample a series on a uniform grid");
    eval_cmd->add_option("--series", eval.series, "Series JSON (inline or file)")->required();
    eval_cmd->add_option("--from", eval.from, "Left end");
    eval_cmd->add_option("--to", eval.to, "Right end");
    eval_cmd->add_option("--samples", eval.samples, "Number of samples");
    eval_cmd->add_option("--format", eval.format, "csv or json")->check(CLI::IsMember({"csv", "json"}));
    eval_cmd->add_option("--out", eval.out, "Output file (default stdout)");

    CheckArgs check;
    auto* check_cmd = app.add_subcommand("check", "Run an invariant suite");
    check_cmd->add_option("--suite", check.suite, "Suite name")->required()->check(CLI::IsMember(confrac::suite_names()));
    check_cmd->add_option("--m-max", check.m_max, "Largest polynomial order");
    check_cmd->add_option("--j", check.j, "alpha = 1/(2j+1) for orthogonality");
    check_cmd->add_option("--alpha", check.alpha, "Restrict to one alpha");
    check_cmd->add_option("--seed", check.seed, "Random seed");
    check_cmd->add_option("--instances", check.instances, "Random instances per property");
    check_cmd->add_option("--out", check.out, "Output file (default stdout)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kExitOk : kExitUsage;
    }

    try {
        if (app.got_subcommand(hermite_cmd)) return run_hermite(hermite);
        if (app.got_subcommand(solve_cmd)) return run_solve(solve);
        if (app.got_subcommand(eval_cmd)) return run_eval(eval);
        if (app.got_subcommand(check_cmd)) return run_check(check);
    } catch (const UsageError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const confrac::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    }
    return kExitUsage;
}
