// Acceptance suite: reduced-run success-rate checks against the published
// benchmark tables, plus the property suite. Prints one pass/fail line per
// criterion and exits nonzero if any fails.

#include <cmath>
#include <cstdio>
#include <thread>

#include "swarm/swarm.hpp"
#include "test_helpers.hpp"

using namespace swarm;

namespace {

int failures = 0;

void report(const char* name, bool ok, const std::string& detail) {
    std::printf("%s %-34s %s\n", ok ? "PASS" : "FAIL", name, detail.c_str());
    if (!ok) ++failures;
}

std::size_t worker_threads() {
    const unsigned hw = std::thread::hardware_concurrency();
    return hw == 0 ? 4 : hw;
}

double cell_rate(BenchmarkId id, std::size_t d, std::size_t n_agents, double q, Mode mode,
                 std::size_t runs, std::uint64_t seed, const Vec* lo = nullptr,
                 const Vec* hi = nullptr) {
    ExperimentSpec spec;
    spec.benchmark = id;
    spec.dimension = d;
    spec.agent_counts = {n_agents};
    spec.q_values = {q};
    spec.modes = {mode};
    spec.runs = runs;
    spec.base_seed = seed;
    if (lo) spec.box_lower = *lo;
    if (hi) spec.box_upper = *hi;
    return run_experiment(spec, worker_threads()).cells.at(0).rate;
}

char buf[256];

void criterion1() {
    const double rate =
        cell_rate(BenchmarkId::StyblinskiTang, 2, 10, 2.0, Mode::SBRD, 200, 1);
    std::snprintf(buf, sizeof buf, "styblinski d=2 N=10 rate=%.3f (need >= 0.90)", rate);
    report("criterion-1 styblinski-easy", rate >= 0.90, buf);
}

void criterion2() {
    const double rate = cell_rate(BenchmarkId::Ackley, 12, 100, 2.0, Mode::SBRD, 200, 2);
    std::snprintf(buf, sizeof buf, "ackley d=12 N=100 rate=%.3f (need >= 0.93)", rate);
    report("criterion-2 ackley-mid", rate >= 0.93, buf);
}

void criterion3() {
    const double rate = cell_rate(BenchmarkId::Ackley, 20, 10, 2.0, Mode::SBRD, 200, 3);
    std::snprintf(buf, sizeof buf, "ackley d=20 N=10 rate=%.3f (need <= 0.03)", rate);
    report("criterion-3 ackley-hard", rate <= 0.03, buf);
}

void criterion4() {
    const double sbrd = cell_rate(BenchmarkId::Ackley, 16, 50, 2.0, Mode::SBRD, 100, 4);
    const double sbgd = cell_rate(BenchmarkId::Ackley, 16, 50, 2.0, Mode::SBGD, 100, 4);
    std::snprintf(buf, sizeof buf, "sbrd=%.3f sbgd=%.3f (need >=0.30, <=0.10, sbrd>sbgd)",
                  sbrd, sbgd);
    report("criterion-4 randomization-advantage",
           sbrd >= 0.30 && sbgd <= 0.10 && sbrd > sbgd, buf);
}

void criterion5() {
    const double q2 = cell_rate(BenchmarkId::Ackley, 18, 50, 2.0, Mode::SBRD, 100, 5);
    const double q8 = cell_rate(BenchmarkId::Ackley, 18, 50, 8.0, Mode::SBRD, 100, 5);
    std::snprintf(buf, sizeof buf, "q2=%.3f q8=%.3f (need q8-q2 >= 0.20)", q2, q8);
    report("criterion-5 exponent-effect", q8 - q2 >= 0.20, buf);
}

void criterion6() {
    const Vec lo(16, -3.0), hi(16, -1.0);
    const double sbrd =
        cell_rate(BenchmarkId::Ackley, 16, 100, 2.0, Mode::SBRD, 100, 6, &lo, &hi);
    const double sbgd =
        cell_rate(BenchmarkId::Ackley, 16, 100, 2.0, Mode::SBGD, 100, 6, &lo, &hi);
    std::snprintf(buf, sizeof buf, "sbrd=%.3f sbgd=%.3f (need >=0.25 and <=0.05)", sbrd,
                  sbgd);
    report("criterion-6 off-centered-box", sbrd >= 0.25 && sbgd <= 0.05, buf);
}

// ---- criterion 7: property suite ----

bool prop_mass_conservation() {
    RandomSource rng(71);
    auto problem = swarm_test::quadratic(3);
    SolverConfig cfg;
    cfg.n_agents = 20;
    for (int trial = 0; trial < 10000; ++trial) {
        auto state = init_swarm(problem, cfg, rng);
        merge_close(state, rng.uniform(1e-4, 1.0));
        Vec f;
        for (std::size_t i = 0; i < state.agents.size(); ++i)
            if (state.agents[i].active) f.push_back(state.f_values[i]);
        apply_transfer(state, transfer_fractions(f, rng.uniform(1.0, 8.0), cfg.epsilon));
        eliminate_light(state, cfg.tolm, cfg.n_agents);
        state.refresh_indices();
        if (std::abs(state.total_mass() - 1.0) > 1e-12) return false;
    }
    return true;
}

bool prop_direction_invariants() {
    RandomSource rng(72);
    for (std::size_t d : {2, 3, 10, 20}) {
        Vec grad(d);
        for (auto& g : grad) g = rng.normal();
        const double gnorm = norm(grad);
        const double m_rel = 0.4;
        double r_sum = 0.0;
        const int samples = 100000;
        for (int t = 0; t < samples; ++t) {
            const auto s = random_descent_direction(grad, m_rel, Mode::SBRD, rng);
            if (std::abs(norm(s.omega) - 1.0) > 1e-12) return false;
            if (std::abs(dot(s.omega, grad) / gnorm - s.r) > 1e-10) return false;
            if (s.r < 0.5 * (1.0 + m_rel) - 1e-10 || s.r > 1.0) return false;
            r_sum += s.r;
        }
        const double width = 1.0 - 0.5 * (1.0 + m_rel);
        const double se = width / std::sqrt(12.0 * samples);
        if (std::abs(r_sum / samples - (3.0 + m_rel) / 4.0) > 3.0 * se) return false;
    }
    return true;
}

bool prop_backtracking() {
    RandomSource rng(73);
    Vec trial;
    for (int t = 0; t < 10000; ++t) {
        const std::size_t d = 1 + static_cast<std::size_t>(rng.uniform(0.0, 5.0));
        const double k = std::exp(rng.uniform(0.0, 6.0));
        auto p = swarm_test::quadratic(d, k);
        Vec x(d);
        for (auto& xi : x) xi = rng.uniform(-2.0, 2.0);
        const Vec grad = p.gradient(x);
        const double grad_sq = dot(grad, grad);
        if (grad_sq < 1e-12) continue;
        const double f_x = p.evaluate(x);
        const double lambda_m = rng.uniform(0.01, 0.2);
        const double gamma = rng.uniform(0.5, 0.95);
        const auto res = backtrack(p, x, grad, f_x, grad_sq, lambda_m, gamma, 1.0, 300);
        if (!res.accepted || res.evals != res.shrinks + 1) return false;
        trial.resize(d);
        for (std::size_t i = 0; i < d; ++i) trial[i] = x[i] - res.h * grad[i];
        if (p.evaluate(trial) > f_x - 0.5 * lambda_m * res.h * grad_sq) return false;
        if (res.shrinks >= 1) {
            const double hp = res.h / gamma;
            for (std::size_t i = 0; i < d; ++i) trial[i] = x[i] - hp * grad[i];
            if (p.evaluate(trial) <= f_x - 0.5 * lambda_m * hp * grad_sq) return false;
        }
    }
    return true;
}

bool prop_monotone_fmin() {
    SolverConfig cfg;
    cfg.n_agents = 15;
    cfg.nmax = 40;
    for (auto id : {BenchmarkId::Ackley, BenchmarkId::Rastrigin, BenchmarkId::Rosenbrock,
                    BenchmarkId::StyblinskiTang}) {
        auto problem = make_benchmark(id, 3);
        for (std::uint64_t seed = 0; seed < 100; ++seed) {
            const RunResult res = run(problem, cfg, seed);
            for (std::size_t n = 1; n < res.trace.size(); ++n)
                if (res.trace[n].f_min > res.trace[n - 1].f_min) return false;
        }
    }
    return true;
}

bool prop_gradients() {
    RandomSource rng(74);
    for (auto id : {BenchmarkId::Ackley, BenchmarkId::Rastrigin, BenchmarkId::Rosenbrock,
                    BenchmarkId::StyblinskiTang}) {
        auto p = make_benchmark(id, 4);
        for (int t = 0; t < 1000; ++t) {
            Vec x(4);
            for (std::size_t k = 0; k < 4; ++k)
                x[k] = rng.uniform(p.box_lower[k], p.box_upper[k]);
            const Vec g = p.gradient(x);
            const Vec fd = finite_diff_gradient(p, x, 1e-6);
            const double tol = std::max(1e-5, 1e-5 * norm(g));
            for (std::size_t k = 0; k < 4; ++k)
                if (std::abs(g[k] - fd[k]) > tol) return false;
        }
    }
    return true;
}

bool prop_determinism() {
    auto problem = make_benchmark(BenchmarkId::Rastrigin, 3);
    SolverConfig cfg;
    cfg.n_agents = 20;
    cfg.nmax = 50;
    const RunResult a = run(problem, cfg, 321);
    const RunResult b = run(problem, cfg, 321);
    if (a.trace.size() != b.trace.size() || a.best_position != b.best_position)
        return false;
    for (std::size_t n = 0; n < a.trace.size(); ++n)
        if (a.trace[n].f_min != b.trace[n].f_min ||
            a.trace[n].minimizer_pos != b.trace[n].minimizer_pos)
            return false;

    ExperimentSpec spec;
    spec.benchmark = BenchmarkId::StyblinskiTang;
    spec.dimension = 2;
    spec.agent_counts = {10};
    spec.runs = 30;
    spec.base_seed = 17;
    const BenchResult serial = run_experiment(spec, 1);
    const BenchResult parallel = run_experiment(spec, 8);
    return serial.cells[0].successes == parallel.cells[0].successes &&
           serial.cells[0].rate == parallel.cells[0].rate &&
           serial.cells[0].mean_iters == parallel.cells[0].mean_iters;
}

void criterion7() {
    struct {
        const char* name;
        bool (*fn)();
    } props[] = {{"7a mass conservation", prop_mass_conservation},
                 {"7b direction invariants", prop_direction_invariants},
                 {"7c backtracking", prop_backtracking},
                 {"7d monotone f_min", prop_monotone_fmin},
                 {"7e gradients vs finite diff", prop_gradients},
                 {"7f determinism", prop_determinism}};
    for (const auto& prop : props) report(prop.name, prop.fn(), "");
}

void criterion8() {
    // single-agent descent on F = K|x|^2/2: every accepted step must clear
    // the gamma * min(h0, 1/K) floor since K is the exact Hessian bound
    bool ok = true;
    for (double k : {1.0, 10.0, 100.0}) {
        auto problem = swarm_test::quadratic(4, k);
        SolverConfig cfg;
        cfg.n_agents = 1;
        RandomSource rng(81);
        auto state = init_swarm(problem, cfg, rng);
        const double floor = cfg.gamma * std::min(cfg.h0, 1.0 / k);
        for (int n = 0; n < 100; ++n) {
            Agent& agent = state.agents[0];
            const Vec grad = problem.gradient(agent.position);
            const double gnorm = norm(grad);
            if (gnorm <= cfg.grad_floor) break;
            const auto ls = backtrack(problem, agent.position, grad,
                                      state.f_values[0], gnorm * gnorm, cfg.lambda,
                                      cfg.gamma, cfg.h0, cfg.max_shrinks);
            if (!ls.accepted || ls.h < floor * (1.0 - 1e-12)) {
                ok = false;
                break;
            }
            for (std::size_t i = 0; i < agent.position.size(); ++i)
                agent.position[i] -= ls.h * grad[i];
            state.f_values[0] = ls.f_new;
        }
    }
    report("criterion-8 quadratic step floor", ok, "K in {1,10,100}");
}

}  // namespace

int main() {
    criterion1();
    criterion2();
    criterion3();
    criterion4();
    criterion5();
    criterion6();
    criterion7();
    criterion8();
    std::printf("%s\n", failures == 0 ? "ALL CRITERIA PASSED" : "CRITERIA FAILED");
    return failures == 0 ? 0 : 1;
}
