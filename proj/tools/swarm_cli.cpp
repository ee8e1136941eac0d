// Command-line front end: `run` a single trajectory with a trace, `bench` a
// success-rate sweep, `check` the built-in self tests.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include <CLI11.hpp>

#include "swarm/swarm.hpp"

namespace {

struct CliConfig {
    std::string config_path;
    std::string function = "ackley";
    std::size_t dim = 2;
    std::vector<std::size_t> agents{50};
    std::vector<double> q{2.0};
    double lambda = 0.2;
    double gamma = 0.9;
    double h0 = 1.0;
    double tolm = 1e-4;
    double tolmerge = 1e-3;
    double tolres = 1e-4;
    std::size_t nmax = 200;
    std::vector<std::string> mode{"sbrd"};
    std::size_t runs = 200;
    std::uint64_t seed = 0;
    double box_lo = 0.0, box_hi = 0.0;
    bool box_set = false;
    std::size_t threads = 1;
    std::string out;
    std::string format = "csv";
    double success_radius = 0.1;
};

void add_solver_flags(CLI::App& app, CliConfig& cfg) {
    app.add_option("--function", cfg.function, "Objective: ackley|rastrigin|rosenbrock|styblinski")
        ->capture_default_str();
    app.add_option("--dim", cfg.dim, "Search-space dimension")->capture_default_str();
    app.add_option("--lambda", cfg.lambda, "Descent parameter in (0,1)")->capture_default_str();
    app.add_option("--gamma", cfg.gamma, "Backtracking shrinkage in (0,1)")->capture_default_str();
    app.add_option("--h0", cfg.h0, "Initial trial step")->capture_default_str();
    app.add_option("--tolm", cfg.tolm, "Elimination threshold (scaled by 1/N)")
        ->capture_default_str();
    app.add_option("--tolmerge", cfg.tolmerge, "Merge distance")->capture_default_str();
    app.add_option("--tolres", cfg.tolres, "Residual termination threshold")
        ->capture_default_str();
    app.add_option("--nmax", cfg.nmax, "Iteration cap")->capture_default_str();
    app.add_option("--seed", cfg.seed, "Base seed (SWARM_SEED env overrides)")
        ->capture_default_str();
    auto* lo = app.add_option("--box-lo", cfg.box_lo, "Init box lower bound, all coordinates");
    app.add_option("--box-hi", cfg.box_hi, "Init box upper bound, all coordinates")
        ->needs(lo);
    app.add_option("--config", cfg.config_path,
                   "Flat key=value config file; explicit flags override it");
}

std::vector<std::string> split_list(const std::string& s) {
    std::vector<std::string> out;
    std::stringstream ss(s);
    std::string item;
    while (std::getline(ss, item, ',')) out.push_back(item);
    return out;
}

// Flat key=value file mirroring the flag names. A key is applied only when
// the matching flag was not given, so flags > config file > defaults.
void apply_config_file(const CLI::App& sub, CliConfig& cfg) {
    std::ifstream is(cfg.config_path);
    if (!is) throw std::invalid_argument("cannot read config file: " + cfg.config_path);
    std::string line;
    while (std::getline(is, line)) {
        if (line.empty() || line[0] == '#') continue;
        const auto eq = line.find('=');
        if (eq == std::string::npos)
            throw std::invalid_argument("bad config line (expected key=value): " + line);
        const std::string key = line.substr(0, eq);
        const std::string value = line.substr(eq + 1);
        const std::string flag = "--" + key;
        if (sub.get_option_no_throw(flag) == nullptr)
            throw std::invalid_argument("unknown config key: " + key);
        if (sub.count(flag) > 0) continue;  // explicit flag wins

        if (key == "function") cfg.function = value;
        else if (key == "dim") cfg.dim = std::stoul(value);
        else if (key == "lambda") cfg.lambda = std::stod(value);
        else if (key == "gamma") cfg.gamma = std::stod(value);
        else if (key == "h0") cfg.h0 = std::stod(value);
        else if (key == "tolm") cfg.tolm = std::stod(value);
        else if (key == "tolmerge") cfg.tolmerge = std::stod(value);
        else if (key == "tolres") cfg.tolres = std::stod(value);
        else if (key == "nmax") cfg.nmax = std::stoul(value);
        else if (key == "seed") cfg.seed = std::stoull(value);
        else if (key == "runs") cfg.runs = std::stoul(value);
        else if (key == "threads") cfg.threads = std::stoul(value);
        else if (key == "out") cfg.out = value;
        else if (key == "format") cfg.format = value;
        else if (key == "success-radius") cfg.success_radius = std::stod(value);
        else if (key == "box-lo") { cfg.box_lo = std::stod(value); cfg.box_set = true; }
        else if (key == "box-hi") { cfg.box_hi = std::stod(value); cfg.box_set = true; }
        else if (key == "mode") cfg.mode = split_list(value);
        else if (key == "agents") {
            cfg.agents.clear();
            for (const auto& v : split_list(value)) cfg.agents.push_back(std::stoul(v));
        } else if (key == "q") {
            cfg.q.clear();
            for (const auto& v : split_list(value)) cfg.q.push_back(std::stod(v));
        } else {
            throw std::invalid_argument("config key not settable from a file: " + key);
        }
    }
}

swarm::SolverConfig to_solver_config(const CliConfig& cfg) {
    swarm::SolverConfig sc;
    sc.lambda = cfg.lambda;
    sc.gamma = cfg.gamma;
    sc.h0 = cfg.h0;
    sc.tolm = cfg.tolm;
    sc.tolmerge = cfg.tolmerge;
    sc.tolres = cfg.tolres;
    sc.nmax = cfg.nmax;
    sc.validate();
    return sc;
}

std::ofstream open_out(const std::string& path) {
    std::ofstream os(path);
    if (!os) throw std::runtime_error("cannot open output file: " + path);
    return os;
}

int cmd_run(const CliConfig& cfg) {
    swarm::ObjectiveProblem problem =
        swarm::make_benchmark(swarm::benchmark_from_string(cfg.function), cfg.dim);
    if (cfg.box_set) {
        problem.box_lower.assign(cfg.dim, cfg.box_lo);
        problem.box_upper.assign(cfg.dim, cfg.box_hi);
    }
    swarm::SolverConfig sc = to_solver_config(cfg);
    sc.n_agents = cfg.agents.front();
    sc.q_exponent = cfg.q.front();
    sc.mode = swarm::mode_from_string(cfg.mode.front());

    const swarm::RunResult result = swarm::run(problem, sc, cfg.seed);
    if (!cfg.out.empty()) {
        auto os = open_out(cfg.out);
        swarm::write_trace(os, result);
    }
    std::cout << "best_value " << result.best_value << "\n"
              << "iterations " << result.iterations_used << "\n"
              << "termination " << swarm::to_string(result.termination) << "\n";
    if (problem.known_minimizer) {
        const bool ok = swarm::success_check(result.best_position, *problem.known_minimizer,
                                             cfg.success_radius);
        std::cout << "success " << (ok ? "true" : "false") << "\n";
    }
    return 0;
}

int cmd_bench(const CliConfig& cfg) {
    swarm::ExperimentSpec spec;
    spec.benchmark = swarm::benchmark_from_string(cfg.function);
    spec.dimension = cfg.dim;
    spec.agent_counts = cfg.agents;
    spec.q_values = cfg.q;
    spec.modes.clear();
    for (const auto& m : cfg.mode) spec.modes.push_back(swarm::mode_from_string(m));
    spec.runs = cfg.runs;
    spec.base_seed = cfg.seed;
    spec.base_config = to_solver_config(cfg);
    spec.success_radius = cfg.success_radius;
    if (cfg.box_set) {
        spec.box_lower = swarm::Vec(cfg.dim, cfg.box_lo);
        spec.box_upper = swarm::Vec(cfg.dim, cfg.box_hi);
    }

    const swarm::BenchResult result = swarm::run_experiment(spec, cfg.threads);
    if (!cfg.out.empty()) {
        auto os = open_out(cfg.out);
        if (cfg.format == "json")
            swarm::write_json(os, result);
        else
            swarm::write_csv(os, result);
    }
    swarm::write_csv(std::cout, result);
    return 0;
}

int cmd_check() {
    swarm::RandomSource rng(12345);
    std::size_t failures = 0;
    auto report = [&](const std::string& name, bool ok) {
        std::cout << (ok ? "ok   " : "FAIL ") << name << "\n";
        if (!ok) ++failures;
    };

    // analytic vs finite-difference gradients on every benchmark
    for (auto id : {swarm::BenchmarkId::Ackley, swarm::BenchmarkId::Rastrigin,
                    swarm::BenchmarkId::Rosenbrock, swarm::BenchmarkId::StyblinskiTang}) {
        const std::size_t d = 4;
        const auto problem = swarm::make_benchmark(id, d);
        bool ok = true;
        for (int trial = 0; trial < 200 && ok; ++trial) {
            swarm::Vec x(d);
            for (std::size_t k = 0; k < d; ++k)
                x[k] = rng.uniform(problem.box_lower[k], problem.box_upper[k]);
            const swarm::Vec g = problem.gradient(x);
            const swarm::Vec fd = swarm::finite_diff_gradient(problem, x, 1e-6);
            const double tol = std::max(1e-5, 1e-5 * swarm::norm(g));
            for (std::size_t k = 0; k < d; ++k)
                if (std::abs(g[k] - fd[k]) > tol) ok = false;
        }
        report("gradient " + swarm::to_string(id), ok);
    }

    // mass conservation over random transfer/eliminate/merge sequences
    {
        bool ok = true;
        const auto problem = swarm::make_benchmark(swarm::BenchmarkId::Rastrigin, 3);
        swarm::SolverConfig sc;
        sc.n_agents = 20;
        for (int trial = 0; trial < 200 && ok; ++trial) {
            auto state = swarm::init_swarm(problem, sc, rng);
            for (int n = 0; n < 10; ++n) {
                swarm::merge_close(state, sc.tolmerge);
                swarm::Vec f;
                for (std::size_t i = 0; i < state.agents.size(); ++i)
                    if (state.agents[i].active) f.push_back(state.f_values[i]);
                swarm::apply_transfer(
                    state, swarm::transfer_fractions(f, sc.q_exponent, sc.epsilon));
                swarm::eliminate_light(state, sc.tolm, sc.n_agents);
                state.refresh_indices();
                if (std::abs(state.total_mass() - 1.0) > 1e-12) ok = false;
            }
        }
        report("mass conservation", ok);
    }

    // direction alignment and unit norm
    {
        bool ok = true;
        swarm::Vec grad{0.3, -1.2, 0.5, 2.0};
        for (int trial = 0; trial < 20000 && ok; ++trial) {
            const double m_rel = rng.uniform(0.01, 0.99);
            const auto s =
                swarm::random_descent_direction(grad, m_rel, swarm::Mode::SBRD, rng);
            if (std::abs(swarm::norm(s.omega) - 1.0) > 1e-12) ok = false;
            const double cosine =
                swarm::dot(s.omega, grad) / swarm::norm(grad);
            if (std::abs(cosine - s.r) > 1e-10) ok = false;
            if (s.r < 0.5 * (1.0 + m_rel) || s.r > 1.0) ok = false;
        }
        report("direction invariants", ok);
    }

    std::cout << (failures == 0 ? "all checks passed" : "self-test failures detected")
              << "\n";
    return failures == 0 ? 0 : 3;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Swarm-based random/gradient descent optimizer"};
    app.require_subcommand(1);

    CliConfig cfg;
    auto* run_cmd = app.add_subcommand("run", "Single seeded run with an optional trace file");
    add_solver_flags(*run_cmd, cfg);
    run_cmd->add_option("--agents", cfg.agents, "Number of agents")->expected(1);
    run_cmd->add_option("--q", cfg.q, "Mass transfer exponent (>= 1)")->expected(1);
    run_cmd->add_option("--mode", cfg.mode, "sbrd or sbgd")->expected(1);
    run_cmd->add_option("--out", cfg.out, "Trace output path (JSON lines)");

    auto* bench_cmd = app.add_subcommand("bench", "Multi-run success-rate sweep");
    add_solver_flags(*bench_cmd, cfg);
    bench_cmd->add_option("--agents", cfg.agents, "Agent-count grid")->delimiter(',');
    bench_cmd->add_option("--q", cfg.q, "Mass-transfer-exponent grid")->delimiter(',');
    bench_cmd->add_option("--mode", cfg.mode, "Mode grid: sbrd,sbgd")->delimiter(',');
    bench_cmd->add_option("--runs", cfg.runs, "Runs per cell")->capture_default_str();
    bench_cmd->add_option("--threads", cfg.threads, "Worker threads")->capture_default_str();
    bench_cmd->add_option("--success-radius", cfg.success_radius, "Success ball radius")
        ->capture_default_str();
    bench_cmd->add_option("--out", cfg.out, "Results output path");
    bench_cmd->add_option("--format", cfg.format, "csv or json")
        ->check(CLI::IsMember({"csv", "json"}))
        ->capture_default_str();

    auto* check_cmd = app.add_subcommand("check", "Gradient and invariant self-tests");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e) == 0 ? 0 : 1;
    }

    try {
        for (auto* sub : {run_cmd, bench_cmd})
            if (sub->parsed() && !cfg.config_path.empty()) apply_config_file(*sub, cfg);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    if (const char* env_seed = std::getenv("SWARM_SEED"))
        cfg.seed = std::strtoull(env_seed, nullptr, 10);
    for (auto* sub : {run_cmd, bench_cmd}) {
        if (sub->count("--box-lo") != sub->count("--box-hi")) {
            std::cerr << "error: --box-lo and --box-hi must be given together\n";
            return 1;
        }
        if (sub->count("--box-lo") > 0) cfg.box_set = true;
    }
    if (cfg.box_set && !(cfg.box_lo < cfg.box_hi)) {
        std::cerr << "error: --box-lo must be strictly below --box-hi\n";
        return 1;
    }

    try {
        if (run_cmd->parsed()) return cmd_run(cfg);
        if (bench_cmd->parsed()) return cmd_bench(cfg);
        if (check_cmd->parsed()) return cmd_check();
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 1;
}
