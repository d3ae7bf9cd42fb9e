// Command-line front end: every operation behind reproducible seeds and
// machine-readable output. Exit codes: 0 success, 1 validation error,
// 2 internal error. stdout carries the payload only for --format json with no
// --output; diagnostics go to stderr.

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "ldpc/bisection.hpp"
#include "ldpc/bounds.hpp"
#include "ldpc/config_model.hpp"
#include "ldpc/degree_model.hpp"
#include "ldpc/errors.hpp"
#include "ldpc/experiments.hpp"
#include "ldpc/io.hpp"

namespace {

struct Options {
    std::string input;
    std::string output;
    std::string format = "json";
    std::uint64_t seed = 0;
    std::int64_t trials = 1;
    std::int64_t a_max = -1;  // -1: derive from sigma_n
    std::optional<double> beta;
    double lambda_w = 1.0;
    double xi_tech = 1.0;
    double eta = 0.5;
    double rate = 0.5;
    double block_b = 1.0;
    double sason_c = 1.0;
    std::int64_t iterations = 1;
    int threads = 1;
    std::int64_t exact_cap = ldpc::kDefaultExactCap;
    std::int64_t enum_cap = ldpc::kDefaultEnumCap;
};

void add_io_options(CLI::App* cmd, Options& opt, bool input_required = true) {
    auto* in = cmd->add_option("--input,-i", opt.input, "input JSON file");
    if (input_required) in->required();
    cmd->add_option("--output,-o", opt.output, "output file (default: stdout for json)");
    cmd->add_option("--format", opt.format, "output format")
        ->check(CLI::IsMember({"json", "csv"}))
        ->capture_default_str();
}

void emit(const Options& opt, const std::string& payload) {
    if (!opt.output.empty()) {
        std::ofstream out(opt.output, std::ios::binary);
        if (!out) throw ldpc::Error("cannot open output file: " + opt.output);
        out << payload;
        return;
    }
    if (opt.format != "json")
        throw ldpc::Error("--output is required for --format " + opt.format);
    std::cout << payload;
}

std::string dump(const ldpc::Json& j) { return j.dump(2) + "\n"; }

ldpc::CircuitParams circuit_params(const Options& opt) {
    ldpc::CircuitParams p;
    p.wire_width = opt.lambda_w;
    p.xi_tech = opt.xi_tech;
    p.clock_cycles = 1;
    return p;
}

ldpc::CapacityParams capacity_params(const Options& opt) {
    ldpc::CapacityParams p;
    p.eta = opt.eta;
    p.rate = opt.rate;
    p.block_b = opt.block_b;
    p.sason_c = opt.sason_c;
    p.iterations = opt.iterations;
    return p;
}

int run_stats(const Options& opt, bool condition_only) {
    const auto ds = ldpc::degree_sequence_from_json(ldpc::load_json_file(opt.input));
    const auto stats = ldpc::ensemble_stats(ds);
    ldpc::Json j = condition_only ? ldpc::Json::object() : ldpc::to_json(stats);
    if (condition_only) {
        j["n"] = stats.n;
        j["m"] = stats.m;
        j["edges"] = stats.edges;
    }
    if (stats.sigma_n == 0) {
        j["condition"] = nullptr;
        j["condition_met"] = false;
        j["beta"] = nullptr;
        j["note"] = "sigma == 0: condition value undefined";
    } else {
        const double cond = ldpc::condition_value(stats);
        j["condition"] = cond;
        j["condition_met"] = cond < 0.0;
        const auto beta = ldpc::solve_beta(stats, 1e-9);
        if (beta)
            j["beta"] = *beta;
        else
            j["beta"] = nullptr;
    }
    emit(opt, dump(j));
    return 0;
}

int run_sample(const Options& opt) {
    const auto ds = ldpc::degree_sequence_from_json(ldpc::load_json_file(opt.input));
    const auto config = ldpc::sample_configuration(ds, opt.seed);
    const auto graph = ldpc::to_multigraph(config);
    ldpc::Json j = ldpc::to_json(graph);
    j["seed"] = opt.seed;
    j["pairing"] = config.pairing;
    emit(opt, dump(j));
    return 0;
}

int run_mbw(const Options& opt) {
    const auto graph = ldpc::multigraph_from_json(ldpc::load_json_file(opt.input));
    ldpc::BisectionResult result;
    if (graph.vertex_count() <= opt.exact_cap) {
        result = ldpc::exact_mbw(graph, opt.exact_cap);
    } else {
        result = ldpc::heuristic_mbw(graph, static_cast<int>(std::max<std::int64_t>(
                                                opt.trials, 1)),
                                     opt.seed);
    }
    ldpc::Json j = ldpc::to_json(result);
    j["exact_cap"] = opt.exact_cap;
    if (!result.exact) j["seed"] = opt.seed;
    emit(opt, dump(j));
    return 0;
}

int run_bound(const Options& opt) {
    const auto ds = ldpc::degree_sequence_from_json(ldpc::load_json_file(opt.input));
    std::optional<std::int64_t> a;
    if (opt.a_max >= 0) a = opt.a_max;
    const auto report =
        ldpc::make_bound_report(ds, circuit_params(opt), capacity_params(opt), opt.beta, a);
    emit(opt, dump(ldpc::to_json(report)));
    return 0;
}

int run_enumerate(const Options& opt) {
    const auto ds = ldpc::degree_sequence_from_json(ldpc::load_json_file(opt.input));
    const auto stats = ldpc::ensemble_stats(ds);
    const std::int64_t a_max =
        opt.a_max >= 0 ? opt.a_max : std::max<std::int64_t>(stats.sigma_n - 1, 0);
    const auto report =
        ldpc::enumerate_bisection_distribution(ds, a_max, opt.enum_cap, opt.threads);
    emit(opt, dump(ldpc::to_json(report)));
    return 0;
}

int run_mc(const Options& opt) {
    const auto family = ldpc::degree_sequence_family_from_json(ldpc::load_json_file(opt.input));
    ldpc::McOptions mc;
    mc.trials = opt.trials;
    mc.master_seed = opt.seed;
    mc.threads = opt.threads;
    mc.exact_cap = opt.exact_cap;
    mc.beta_override = opt.beta;
    const auto records = ldpc::mc_mbw_trend(family, mc);
    if (opt.format == "csv") {
        emit(opt, ldpc::trial_records_csv(records));
        return 0;
    }
    const auto summary = ldpc::summarize_trend(family, records, mc);
    ldpc::Json j;
    j["master_seed"] = mc.master_seed;
    j["trials"] = mc.trials;
    j["exact_cap"] = mc.exact_cap;
    ldpc::Json recs = ldpc::Json::array();
    for (const auto& rec : records) recs.push_back(ldpc::to_json(rec));
    j["records"] = std::move(recs);
    ldpc::Json sums = ldpc::Json::array();
    for (const auto& sum : summary) sums.push_back(ldpc::to_json(sum));
    j["summary"] = std::move(sums);
    emit(opt, dump(j));
    return 0;
}

int run_sweep(const Options& opt) {
    const auto j_in = ldpc::load_json_file(opt.input);
    if (!j_in.is_object() || !j_in.contains("etas") || !j_in.at("etas").is_array() ||
        j_in.at("etas").empty())
        throw ldpc::Error("sweep input needs {\"etas\": [..]}");
    std::vector<ldpc::GapScalingReport> rows;
    for (const auto& e : j_in.at("etas")) {
        if (!e.is_number()) throw ldpc::Error("eta entries must be numbers");
        ldpc::CapacityParams cap = capacity_params(opt);
        cap.eta = e.get<double>();
        rows.push_back(ldpc::gap_scaling_report(cap, opt.lambda_w, opt.beta.value_or(1.0)));
    }
    if (opt.format == "csv") {
        emit(opt, ldpc::gap_reports_csv(rows));
        return 0;
    }
    ldpc::Json j;
    j["lambda_w"] = opt.lambda_w;
    j["beta"] = opt.beta.value_or(1.0);
    j["rate"] = opt.rate;
    j["block_b"] = opt.block_b;
    j["sason_c"] = opt.sason_c;
    j["iterations"] = opt.iterations;
    ldpc::Json arr = ldpc::Json::array();
    for (const auto& row : rows) arr.push_back(ldpc::to_json(row));
    j["rows"] = std::move(arr);
    emit(opt, dump(j));
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"LDPC ensemble bisection-width and decoder energy bound toolkit"};
    app.require_subcommand(1);

    Options opt;
    double beta_flag = -1.0;
    bool beta_set = false;

    const auto add_shared = [&](CLI::App* cmd, bool needs_input = true) {
        add_io_options(cmd, opt, needs_input);
        cmd->add_option("--seed", opt.seed, "master seed (64-bit)")->capture_default_str();
        cmd->add_option("--trials", opt.trials, "trials per sequence / heuristic restarts")
            ->check(CLI::PositiveNumber)
            ->capture_default_str();
        cmd->add_option("--a-max", opt.a_max, "largest bisection size a to report");
        cmd->add_option_function<double>(
               "--beta", [&](const double v) { beta_flag = v; beta_set = true; },
               "override the solved beta");
        cmd->add_option("--lambda-w", opt.lambda_w, "wire width")->capture_default_str();
        cmd->add_option("--xi-tech", opt.xi_tech, "energy per area per cycle")
            ->capture_default_str();
        cmd->add_option("--eta", opt.eta, "gap to capacity R/C")->capture_default_str();
        cmd->add_option("--rate", opt.rate, "code rate R")->capture_default_str();
        cmd->add_option("--block-b", opt.block_b, "block length constant b")
            ->capture_default_str();
        cmd->add_option("--sason-c", opt.sason_c, "edge degree constant")
            ->capture_default_str();
        cmd->add_option("--iterations", opt.iterations, "decoder iterations N")
            ->check(CLI::PositiveNumber)
            ->capture_default_str();
        cmd->add_option("--threads", opt.threads, "worker threads")
            ->check(CLI::PositiveNumber)
            ->capture_default_str();
        cmd->add_option("--exact-cap", opt.exact_cap, "exhaustive bisection vertex cap")
            ->capture_default_str();
        cmd->add_option("--enum-cap", opt.enum_cap, "configuration enumeration socket cap")
            ->capture_default_str();
    };

    add_shared(app.add_subcommand("stats", "ensemble statistics of a degree sequence"));
    add_shared(app.add_subcommand("condition", "sufficient-condition value and beta"));
    add_shared(app.add_subcommand("sample", "sample one configuration as a multigraph"));
    add_shared(app.add_subcommand("mbw", "minimum bisection width of a multigraph"));
    add_shared(app.add_subcommand("bound", "full bound report for a degree sequence"));
    add_shared(app.add_subcommand("enumerate",
                                  "exact bisection distribution over all configurations"));
    add_shared(app.add_subcommand("mc", "Monte Carlo bisection-width trend"));
    add_shared(app.add_subcommand("sweep", "gap-to-capacity scaling table over eta values"));

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 1;
    }

    if (beta_set) opt.beta = beta_flag;

    try {
        if (app.got_subcommand("stats")) return run_stats(opt, false);
        if (app.got_subcommand("condition")) return run_stats(opt, true);
        if (app.got_subcommand("sample")) return run_sample(opt);
        if (app.got_subcommand("mbw")) return run_mbw(opt);
        if (app.got_subcommand("bound")) return run_bound(opt);
        if (app.got_subcommand("enumerate")) return run_enumerate(opt);
        if (app.got_subcommand("mc")) return run_mc(opt);
        if (app.got_subcommand("sweep")) return run_sweep(opt);
        std::cerr << "no subcommand\n";
        return 1;
    } catch (const ldpc::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 2;
    }
}
