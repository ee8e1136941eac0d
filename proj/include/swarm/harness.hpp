#ifndef SWARM_HARNESS_HPP
#define SWARM_HARNESS_HPP

#include <atomic>
#include <chrono>
#include <cstring>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <thread>
#include <vector>

#include "swarm/core.hpp"
#include "swarm/objectives.hpp"
#include "swarm/rng.hpp"
#include "swarm/solver.hpp"

namespace swarm {

/// Grid of benchmark cells: every (N, q, mode) combination is one cell,
/// run k times from derived seeds.
struct ExperimentSpec {
    BenchmarkId benchmark = BenchmarkId::Ackley;
    std::size_t dimension = 2;
    std::vector<std::size_t> agent_counts{50};
    std::vector<double> q_values{2.0};
    std::vector<Mode> modes{Mode::SBRD};
    std::size_t runs = 200;
    std::uint64_t base_seed = 0;
    SolverConfig base_config;           // n_agents/q_exponent/mode overridden per cell
    std::optional<Vec> box_lower;       // init box override
    std::optional<Vec> box_upper;
    double success_radius = 0.1;
    // library-only hook: replaces the benchmark entirely (must carry a
    // known_minimizer for the success check)
    std::optional<ObjectiveProblem> problem_override;
};

struct CellResult {
    std::string function;
    std::size_t dim = 0;
    std::size_t agents = 0;
    double q = 2.0;
    Mode mode = Mode::SBRD;
    std::size_t runs = 0;
    std::size_t successes = 0;
    double rate = 0.0;
    double mean_iters = 0.0;
    double mean_fevals = 0.0;
    double mean_gevals = 0.0;
    std::size_t errors = 0;
    std::uint64_t base_seed = 0;
};

struct BenchResult {
    std::vector<CellResult> cells;
    double wall_seconds = 0.0;
};

/// Success means the reported solution lies in the closed radius-0.1 ball
/// around the known minimizer.
inline bool success_check(const Vec& x_sol, const Vec& x_star, double radius) {
    if (x_sol.size() != x_star.size())
        throw std::invalid_argument("success_check: dimension mismatch");
    return distance(x_sol, x_star) <= radius;
}

/// Seed for run r of cell c: a SplitMix64 chain over (base, cell, run).
/// Independent of thread count and scheduling.
inline std::uint64_t derive_seed(std::uint64_t base_seed, std::uint64_t cell_id,
                                 std::uint64_t run_id) {
    return splitmix64(splitmix64(base_seed ^ splitmix64(cell_id + 1)) + run_id);
}

/// k seeded runs per cell, parallel over (cell, run) pairs. Results are
/// stored by index and reduced in order, so the aggregate is identical for
/// any thread count. A run that throws counts as a failure and is tallied
/// in the cell's error column.
inline BenchResult run_experiment(const ExperimentSpec& spec, std::size_t threads = 1) {
    if (spec.runs < 1) throw std::invalid_argument("runs must be >= 1");
    if (!(spec.success_radius > 0.0)) throw std::invalid_argument("success_radius must be > 0");
    const auto t0 = std::chrono::steady_clock::now();

    struct Cell {
        std::size_t n_agents;
        double q;
        Mode mode;
        std::uint64_t id;  // content-derived, so an isolated cell reproduces
    };
    std::vector<Cell> cells;
    for (std::size_t n : spec.agent_counts)
        for (double q : spec.q_values)
            for (Mode mode : spec.modes) {
                std::uint64_t q_bits;
                static_assert(sizeof(q_bits) == sizeof(q));
                std::memcpy(&q_bits, &q, sizeof(q_bits));
                const std::uint64_t id =
                    splitmix64(splitmix64(spec.dimension * 1000 + n) ^ splitmix64(q_bits) ^
                               (mode == Mode::SBGD ? 0x5b5b5b5bULL : 0ULL));
                cells.push_back({n, q, mode, id});
            }

    ObjectiveProblem problem = spec.problem_override
                                   ? *spec.problem_override
                                   : make_benchmark(spec.benchmark, spec.dimension);
    if (spec.box_lower) problem.box_lower = *spec.box_lower;
    if (spec.box_upper) problem.box_upper = *spec.box_upper;

    struct RunOutcome {
        bool error = false;
        bool success = false;
        std::size_t iters = 0;
        std::size_t fevals = 0;
        std::size_t gevals = 0;
    };
    const std::size_t total = cells.size() * spec.runs;
    std::vector<RunOutcome> outcomes(total);

    std::atomic<std::size_t> next{0};
    auto worker = [&]() {
        for (;;) {
            const std::size_t idx = next.fetch_add(1);
            if (idx >= total) return;
            const std::size_t c = idx / spec.runs;
            const std::size_t r = idx % spec.runs;
            SolverConfig cfg = spec.base_config;
            cfg.n_agents = cells[c].n_agents;
            cfg.q_exponent = cells[c].q;
            cfg.mode = cells[c].mode;
            RunOutcome& out = outcomes[idx];
            try {
                const RunResult res =
                    run(problem, cfg, derive_seed(spec.base_seed, cells[c].id, r));
                out.success = success_check(res.best_position, *problem.known_minimizer,
                                            spec.success_radius);
                out.iters = res.iterations_used;
                if (!res.trace.empty()) {
                    out.fevals = res.trace.back().total_evals;
                    out.gevals = res.trace.back().total_grad_evals;
                }
            } catch (const std::exception&) {
                out.error = true;
            }
        }
    };
    if (threads <= 1) {
        worker();
    } else {
        std::vector<std::thread> pool;
        for (std::size_t t = 0; t < threads; ++t) pool.emplace_back(worker);
        for (auto& t : pool) t.join();
    }

    BenchResult result;
    for (std::size_t c = 0; c < cells.size(); ++c) {
        CellResult cell;
        cell.function = to_string(spec.benchmark);
        cell.dim = spec.dimension;
        cell.agents = cells[c].n_agents;
        cell.q = cells[c].q;
        cell.mode = cells[c].mode;
        cell.runs = spec.runs;
        cell.base_seed = spec.base_seed;
        double iters = 0.0, fevals = 0.0, gevals = 0.0;
        for (std::size_t r = 0; r < spec.runs; ++r) {
            const RunOutcome& out = outcomes[c * spec.runs + r];
            if (out.error) {
                ++cell.errors;
                continue;
            }
            if (out.success) ++cell.successes;
            iters += static_cast<double>(out.iters);
            fevals += static_cast<double>(out.fevals);
            gevals += static_cast<double>(out.gevals);
        }
        const double k = static_cast<double>(spec.runs);
        cell.rate = static_cast<double>(cell.successes) / k;
        cell.mean_iters = iters / k;
        cell.mean_fevals = fevals / k;
        cell.mean_gevals = gevals / k;
        result.cells.push_back(std::move(cell));
    }
    result.wall_seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    return result;
}

}  // namespace swarm

#endif
