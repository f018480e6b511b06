#include "cli.hpp"

#include "ho/circle.hpp"
#include "ho/errors.hpp"
#include "ho/factor.hpp"
#include "ho/grid.hpp"
#include "ho/growth.hpp"
#include "ho/hankel.hpp"
#include "ho/hardy.hpp"
#include "ho/io.hpp"
#include "ho/verify.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <optional>
#include <ostream>
#include <sstream>

namespace ho::cli {
namespace {

using io::json;

struct RunConfig {
    int grid = 4096;
    std::optional<double> radius;
    double tol = 1e-8;
    std::uint64_t seed = 7;
    std::string output;
    std::string format = "json";

    double resolved_radius() const { return radius.value_or(resolution_radius(grid)); }
};

json echo(const RunConfig& c)
{
    return {{"grid_size", c.grid},
            {"radius", c.resolved_radius()},
            {"tol", c.tol},
            {"seed", c.seed},
            {"format", c.format},
            {"output", c.output.empty() ? json(nullptr) : json(c.output)}};
}

/// Spec strings given on the command line, one slot per flag.
struct Inputs {
    std::string phi, phi1, phi2, phi3, fn, zeros, atoms, symbol, experiment;
    int size = 0;
};

[[noreturn]] void missing(const std::string& flag) { throw ParseError("missing required option " + flag); }

GrowthFunction growth_arg(const std::string& text, const std::string& flag, std::optional<GrowthFunction> fallback = {})
{
    if (text.empty()) {
        if (fallback) return *fallback;
        missing(flag);
    }
    return io::parse_growth(io::load_json(text), flag.substr(2));
}

AnalyticFunction analytic_arg(const std::string& text, const std::string& flag, int n)
{
    if (text.empty()) missing(flag);
    return io::parse_analytic(io::load_json(text), n, flag.substr(2));
}

ZeroList zeros_arg(const std::string& text)
{
    return text.empty() ? ZeroList{} : io::parse_zeros(io::load_json(text));
}

AtomicMeasure atoms_arg(const std::string& text)
{
    return text.empty() ? AtomicMeasure{} : io::parse_atoms(io::load_json(text));
}

bool is_analytic_spec(const json& j)
{
    if (!j.is_object() || !j.contains("kind") || !j["kind"].is_string()) return false;
    const std::string kind = j["kind"];
    return kind == "taylor" || kind == "from_boundary";
}

// ---------------------------------------------------------------------------
// Command bodies. Each returns the "result" object of the report.

json cmd_gf_inspect(const RunConfig&, const Inputs& in)
{
    const GrowthFunction f = growth_arg(in.phi, "--phi");
    json samples = json::array();
    for (double t : log_grid(1e-3, 1e3, 7)) {
        json row = {{"t", t}, {"phi", f.eval(t)}};
        try {
            row["inverse"] = f.inverse(t);
        } catch (const Error&) {
            row["inverse"] = nullptr;
        }
        samples.push_back(row);
    }
    return {{"function", io::to_json(f)},
            {"types", io::to_json(estimate_types(f))},
            {"indices", io::to_json(boyd_indices(f))},
            {"doubling", io::to_json(check_doubling(f))},
            {"samples", samples}};
}

json cmd_norm(const RunConfig& c, const Inputs& in)
{
    const GrowthFunction f = growth_arg(in.phi, "--phi");
    if (in.fn.empty()) missing("--fn");
    const json spec = io::load_json(in.fn);
    if (is_analytic_spec(spec)) {
        const AnalyticFunction g = io::parse_analytic(spec, c.grid);
        const RadialReport radial = hphi_norm(g, f, c.grid);
        const double r = c.resolved_radius();
        return {{"value", radial.value()},
                {"space", "H^phi"},
                {"function", io::to_json(g)},
                {"radial", io::to_json(radial)},
                {"radius_norm", {{"radius", r}, {"value", luxemburg_norm(circle_restriction(g, r, c.grid), f).value}}}};
    }
    const BoundaryFunction g = io::parse_boundary(spec, c.grid);
    const NormReport nr = luxemburg_norm(g, f);
    return {{"value", nr.value},
            {"space", "L^phi"},
            {"report", io::to_json(nr)},
            {"in_hardy_space", hardy_membership(g, c.tol)}};
}

json cmd_factor_riesz(const RunConfig& c, const Inputs& in)
{
    const GrowthFunction f = growth_arg(in.phi, "--phi", GrowthFunction::power(2.0));
    return io::to_json(divide_by_blaschke(analytic_arg(in.fn, "--fn", c.grid), zeros_arg(in.zeros), f, c.grid));
}

json cmd_factor_inner_outer(const RunConfig& c, const Inputs& in)
{
    const GrowthFunction f = growth_arg(in.phi, "--phi", GrowthFunction::power(2.0));
    return io::to_json(inner_outer(analytic_arg(in.fn, "--fn", c.grid), zeros_arg(in.zeros), atoms_arg(in.atoms), f, c.grid));
}

json cmd_factor_strong(const RunConfig& c, const Inputs& in)
{
    const GrowthFunction f1 = growth_arg(in.phi1, "--phi1");
    const GrowthFunction f2 = growth_arg(in.phi2, "--phi2");
    const GrowthFunction f3 = growth_arg(in.phi3, "--phi3", product_inverse_compose(f1, f2));
    return io::to_json(strong_factorize(analytic_arg(in.fn, "--fn", c.grid), zeros_arg(in.zeros), atoms_arg(in.atoms),
                                        f1, f2, f3, c.grid));
}

json cmd_hankel_apply(const RunConfig& c, const Inputs& in)
{
    const AnalyticFunction b = analytic_arg(in.symbol, "--symbol", c.grid);
    const AnalyticFunction g = analytic_arg(in.fn, "--fn", c.grid);
    return {{"symbol", io::to_json(b)}, {"input", io::to_json(g)}, {"output", io::to_json(hankel_apply(b, g, c.grid))}};
}

json cmd_hankel_matrix(const RunConfig& c, const Inputs& in)
{
    const AnalyticFunction b = analytic_arg(in.symbol, "--symbol", c.grid);
    const int m = in.size > 0 ? in.size : b.size();
    const HankelMatrix h = hankel_matrix(b, m);
    json j = io::to_json(h);
    j["largest_singular_value"] = h.largest_singular_value();
    return j;
}

Dictionary dictionary_arg(const Inputs& in, const RunConfig& c)
{
    if (in.experiment.empty()) return {};
    return io::parse_experiment(io::load_json(in.experiment), c.grid).dictionary;
}

json cmd_hankel_norm(const RunConfig& c, const Inputs& in)
{
    const AnalyticFunction b = analytic_arg(in.symbol, "--symbol", c.grid);
    const GrowthFunction f1 = growth_arg(in.phi1, "--phi1", GrowthFunction::power(2.0));
    const GrowthFunction f2 = growth_arg(in.phi2, "--phi2", GrowthFunction::power(2.0));
    return io::to_json(hankel_norm_estimate(b, f1, f2, dictionary_arg(in, c), c.seed, c.grid));
}

ExperimentResult run_experiment(const RunConfig& c, const Inputs& in, bool loss)
{
    if (in.experiment.empty()) missing("--experiment");
    const io::ExperimentSpec spec = io::parse_experiment(io::load_json(in.experiment), c.grid);
    const std::uint64_t seed = spec.seed.value_or(c.seed);
    return loss ? loss_experiment(spec.family, spec.phi1, spec.phi2, spec.dictionary, seed, c.grid)
                : gain_experiment(spec.family, spec.phi1, spec.phi2, spec.dictionary, seed, c.grid);
}

json verify_json(const VerifyReport& r)
{
    json checks = json::array();
    for (const CheckResult& c : r.checks) {
        checks.push_back({{"module", c.module},
                          {"name", c.name},
                          {"passed", c.passed},
                          {"measured", std::isfinite(c.measured) ? json(c.measured) : json("inf")},
                          {"limit", c.limit},
                          {"detail", c.detail}});
    }
    return {{"passed", r.all_passed()}, {"failures", r.failures()}, {"total", r.checks.size()}, {"checks", checks}};
}

// ---------------------------------------------------------------------------

void emit(const RunConfig& c, const std::string& text, std::ostream& out)
{
    if (c.output.empty()) {
        out << text;
        return;
    }
    std::ofstream file(c.output, std::ios::binary);
    if (!file) throw ParseError("cannot open output file '" + c.output + "'");
    file << text;
}

std::string json_report(const RunConfig& c, const std::string& command, const json& result)
{
    const json report = {{"schema_version", io::kSchemaVersion}, {"command", command}, {"config", echo(c)}, {"result", result}};
    return report.dump(2) + "\n";
}

std::string csv_report(const RunConfig& c, const std::string& command, const ExperimentResult& r)
{
    std::ostringstream s;
    s << "# command: " << command << "\n# config: " << echo(c).dump() << "\n";
    s << "# band: lo=" << json(r.band_lo).dump() << " hi=" << json(r.band_hi).dump()
      << " ratio=" << json(r.band_ratio).dump() << "\n";
    s << io::experiment_csv(r);
    return s.str();
}

void validate(RunConfig& c, bool grid_given)
{
    if (!grid_given) {
        if (const char* env = std::getenv("HO_GRID"); env != nullptr && *env != '\0') {
            try {
                size_t used = 0;
                c.grid = std::stoi(env, &used);
                if (used != std::string(env).size()) throw std::invalid_argument(env);
            } catch (const std::exception&) {
                throw ParseError(std::string("HO_GRID is not an integer: '") + env + "'");
            }
        }
    }
    if (c.grid < 16 || !is_power_of_two(c.grid)) throw ParseError("grid size must be a power of two >= 16, got " + std::to_string(c.grid));
    if (c.radius && !(*c.radius > 0.0 && *c.radius <= 1.0)) throw ParseError("radius must lie in (0, 1]");
    if (!(c.tol > 0.0)) throw ParseError("tol must be positive");
    if (c.format != "json" && c.format != "csv") throw ParseError("format must be json or csv");
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err)
{
    CLI::App app{"Hardy-Orlicz space computations on the unit disk", "ho"};
    app.fallthrough();
    app.require_subcommand(1);

    RunConfig config;
    Inputs in;
    double radius = 0.0;
    auto* grid_opt = app.add_option("--grid", config.grid, "Number of circle samples N (power of two; env HO_GRID)");
    auto* radius_opt = app.add_option("--radius", radius, "Radius for radius-dependent reports (default 1 - 2pi/N)");
    app.add_option("--tol", config.tol, "Tolerance for membership tests");
    app.add_option("--seed", config.seed, "Seed for random dictionaries and test families");
    app.add_option("--output", config.output, "Write the report to this file instead of stdout");
    app.add_option("--format", config.format, "json or csv (csv for hankel loss/gain)");

    std::string command;
    std::function<json()> json_body;
    std::function<ExperimentResult()> experiment_body;
    std::function<VerifyReport()> verify_body;

    auto leaf = [&](CLI::App* parent, const std::string& name, const std::string& help, const std::string& full,
                    std::initializer_list<const char*> flags) {
        CLI::App* sub = parent->add_subcommand(name, help);
        for (const char* flag : flags) {
            const std::string f = flag;
            std::string* slot = f == "--phi"        ? &in.phi
                                : f == "--phi1"       ? &in.phi1
                                : f == "--phi2"       ? &in.phi2
                                : f == "--phi3"       ? &in.phi3
                                : f == "--fn"         ? &in.fn
                                : f == "--zeros"      ? &in.zeros
                                : f == "--atoms"      ? &in.atoms
                                : f == "--symbol"     ? &in.symbol
                                : f == "--experiment" ? &in.experiment
                                                      : nullptr;
            sub->add_option(f, *slot, "JSON spec (inline or file path)");
        }
        sub->parse_complete_callback([&command, full] { command = full; });
        return sub;
    };

    CLI::App* gf = app.add_subcommand("gf", "Growth-function tools");
    gf->require_subcommand(1);
    leaf(gf, "inspect", "Types, indices and doubling constants of a growth function", "gf inspect", {"--phi"})
        ->final_callback([&] { json_body = [&] { return cmd_gf_inspect(config, in); }; });

    leaf(&app, "norm", "Luxemburg (L^phi) or Hardy-Orlicz (H^phi) norm", "norm", {"--phi", "--fn"})
        ->final_callback([&] { json_body = [&] { return cmd_norm(config, in); }; });

    CLI::App* factor = app.add_subcommand("factor", "Factorizations");
    factor->require_subcommand(1);
    leaf(factor, "riesz", "Divide by the Blaschke product of the given zeros", "factor riesz", {"--phi", "--fn", "--zeros"})
        ->final_callback([&] { json_body = [&] { return cmd_factor_riesz(config, in); }; });
    leaf(factor, "inner-outer", "Inner-outer decomposition", "factor inner-outer", {"--phi", "--fn", "--zeros", "--atoms"})
        ->final_callback([&] { json_body = [&] { return cmd_factor_inner_outer(config, in); }; });
    leaf(factor, "strong", "Strong factorization G = G1 G2", "factor strong",
         {"--phi1", "--phi2", "--phi3", "--fn", "--zeros", "--atoms"})
        ->final_callback([&] { json_body = [&] { return cmd_factor_strong(config, in); }; });

    CLI::App* hankel = app.add_subcommand("hankel", "Hankel operators");
    hankel->require_subcommand(1);
    leaf(hankel, "apply", "Apply h_b to an analytic function", "hankel apply", {"--symbol", "--fn"})
        ->final_callback([&] { json_body = [&] { return cmd_hankel_apply(config, in); }; });
    auto* matrix = leaf(hankel, "matrix", "Truncated Hankel matrix", "hankel matrix", {"--symbol"});
    matrix->add_option("--size", in.size, "Matrix size M (default: number of symbol coefficients)")->check(CLI::PositiveNumber);
    matrix->final_callback([&] { json_body = [&] { return cmd_hankel_matrix(config, in); }; });
    leaf(hankel, "norm", "Dictionary estimate of the H^phi1 -> H^phi2 operator norm", "hankel norm",
         {"--symbol", "--phi1", "--phi2", "--experiment"})
        ->final_callback([&] { json_body = [&] { return cmd_hankel_norm(config, in); }; });
    leaf(hankel, "loss", "Boundedness experiment with loss", "hankel loss", {"--experiment"})
        ->final_callback([&] { experiment_body = [&] { return run_experiment(config, in, true); }; });
    leaf(hankel, "gain", "Boundedness experiment with gain", "hankel gain", {"--experiment"})
        ->final_callback([&] { experiment_body = [&] { return run_experiment(config, in, false); }; });

    CLI::App* verify = app.add_subcommand("verify", "Invariant checks");
    verify->require_subcommand(1);
    leaf(verify, "all", "Run the full invariant suite", "verify all", {})
        ->final_callback([&] { verify_body = [&] { return verify_all(config.grid, config.seed); }; });

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return 0;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return 0;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\n";
        return static_cast<int>(ExitCode::parse);
    }

    try {
        if (*radius_opt) config.radius = radius;
        validate(config, static_cast<bool>(*grid_opt));
        if (config.format == "csv" && !experiment_body) throw ParseError("csv output is only available for hankel loss and gain");

        if (verify_body) {
            const VerifyReport r = verify_body();
            emit(config, json_report(config, command, verify_json(r)), out);
            if (!r.all_passed()) {
                for (const CheckResult& c : r.checks) {
                    if (!c.passed) err << "FAILED " << c.module << ": " << c.name << " (measured " << c.measured << ", limit " << c.limit << ") " << c.detail << "\n";
                }
                return static_cast<int>(ExitCode::numerical);
            }
            return 0;
        }
        if (experiment_body) {
            const ExperimentResult r = experiment_body();
            emit(config, config.format == "csv" ? csv_report(config, command, r) : json_report(config, command, io::to_json(r)), out);
            return 0;
        }
        emit(config, json_report(config, command, json_body()), out);
        return 0;
    } catch (const std::exception& e) {
        const ExitCode code = exit_code_for_current_exception();
        err << "error: " << e.what() << "\n";
        return static_cast<int>(code);
    }
}

}  // namespace ho::cli
