#ifndef SWARM_SOLVER_HPP
#define SWARM_SOLVER_HPP

#include <cmath>
#include <cstdint>
#include <vector>

#include "swarm/core.hpp"
#include "swarm/direction.hpp"
#include "swarm/linesearch.hpp"
#include "swarm/mass.hpp"
#include "swarm/rng.hpp"

namespace swarm {

/// Per-iteration diagnostics. heaviest_prev_pos is the pre-move position of
/// the agent that ends the iteration heaviest (the parent of the next
/// iteration's heaviest agent).
struct IterationRecord {
    std::size_t n = 0;
    std::size_t n_active = 0;
    double f_min = 0.0;
    double f_max = 0.0;
    Vec minimizer_pos;
    double heaviest_mass = 0.0;
    Vec heaviest_prev_pos;
    std::size_t total_evals = 0;       // cumulative objective evaluations
    std::size_t total_grad_evals = 0;  // cumulative gradient evaluations
    double mean_step = 0.0;            // mean accepted h over moved agents
};

enum class Termination { Residual, MaxIter, SingleStationaryAgent };

inline std::string to_string(Termination t) {
    switch (t) {
        case Termination::Residual: return "residual";
        case Termination::MaxIter: return "maxiter";
        case Termination::SingleStationaryAgent: return "stationary";
    }
    return "?";
}

struct RunResult {
    Vec best_position;
    double best_value = 0.0;
    std::size_t iterations_used = 0;
    Termination termination = Termination::MaxIter;
    std::vector<IterationRecord> trace;
    std::uint64_t seed = 0;
};

namespace detail {

struct StepCounters {
    std::size_t evals = 0;
    std::size_t grad_evals = 0;
};

}  // namespace detail

/// One iteration of the method: merge, mass transfer and elimination, then
/// a sampled-direction backtracking move per agent. Returns the
/// displacement of the minimizer agent, used by the residual test.
inline double step(SwarmState& state, const ObjectiveProblem& problem,
                   const SolverConfig& config, std::size_t n_initial, RandomSource& rng,
                   detail::StepCounters& counters, IterationRecord& record) {
    merge_close(state, config.tolmerge);

    // mass transfer toward the minimizer, on the pre-move f-values
    Vec active_f;
    active_f.reserve(state.agents.size());
    for (std::size_t i = 0; i < state.agents.size(); ++i)
        if (state.agents[i].active) active_f.push_back(state.f_values[i]);
    apply_transfer(state, transfer_fractions(active_f, config.q_exponent, config.epsilon));
    eliminate_light(state, config.tolm, n_initial);
    state.refresh_indices();

    const Vec m_rel = relative_masses(state);
    const std::size_t minimizer_agent = state.minimizer_index;
    record.heaviest_prev_pos = state.agents[state.heaviest_index].position;
    record.heaviest_mass = state.agents[state.heaviest_index].mass;

    double minimizer_displacement = 0.0;
    double step_sum = 0.0;
    std::size_t moved = 0;
    for (std::size_t i = 0; i < state.agents.size(); ++i) {
        Agent& agent = state.agents[i];
        if (!agent.active) continue;
        const Vec grad = problem.gradient(agent.position);
        ++counters.grad_evals;
        const double gnorm = norm(grad);
        if (!(gnorm > config.grad_floor)) continue;

        const DirectionSample dir =
            random_descent_direction(grad, m_rel[i], config.mode, rng);
        const double lambda_m =
            config.lambda * m_rel[i] * (config.full_descent ? 2.0 : 1.0);
        const LineSearchResult ls =
            backtrack(problem, agent.position, dir.p, state.f_values[i], gnorm * gnorm,
                      lambda_m, config.gamma, config.h0, config.max_shrinks);
        counters.evals += ls.evals;
        if (!ls.accepted) continue;

        for (std::size_t k = 0; k < agent.position.size(); ++k)
            agent.position[k] -= ls.h * dir.p[k];
        state.f_values[i] = ls.f_new;
        if (!std::isfinite(ls.f_new))
            throw std::runtime_error("objective returned a non-finite value");
        step_sum += ls.h;
        ++moved;
        if (i == minimizer_agent) minimizer_displacement = ls.h * norm(dir.p);
    }
    state.refresh_indices();
    ++state.iteration;

    record.n = state.iteration;
    record.n_active = state.active_count();
    record.f_min = state.f_values[state.minimizer_index];
    record.f_max = record.f_min;
    for (std::size_t i = 0; i < state.agents.size(); ++i)
        if (state.agents[i].active && state.f_values[i] > record.f_max)
            record.f_max = state.f_values[i];
    record.minimizer_pos = state.agents[state.minimizer_index].position;
    record.total_evals = counters.evals;
    record.total_grad_evals = counters.grad_evals;
    record.mean_step = moved > 0 ? step_sum / static_cast<double>(moved) : 0.0;
    return minimizer_displacement;
}

/// Full run: init, iterate until the minimizer agent's displacement drops
/// below tolres, nmax iterations elapse, or a single stationary agent
/// remains.
inline RunResult run(const ObjectiveProblem& problem, const SolverConfig& config,
                     std::uint64_t seed) {
    config.validate();
    RandomSource rng(seed);
    SwarmState state = init_swarm(problem, config, rng);
    const std::size_t n_initial = config.n_agents;

    RunResult result;
    result.seed = seed;
    result.termination = Termination::MaxIter;
    detail::StepCounters counters;
    counters.evals = config.n_agents;  // init_swarm evaluates every agent once

    for (std::size_t n = 0; n < config.nmax; ++n) {
        IterationRecord record;
        const double displacement = step(state, problem, config, n_initial, rng, counters, record);
        result.trace.push_back(std::move(record));
        if (displacement <= config.tolres) {
            // distinguish a converged residual from a stuck lone agent
            if (state.active_count() == 1 &&
                norm(problem.gradient(state.agents[state.minimizer_index].position)) <=
                    config.grad_floor)
                result.termination = Termination::SingleStationaryAgent;
            else
                result.termination = Termination::Residual;
            break;
        }
    }
    result.iterations_used = state.iteration;
    result.best_position = state.agents[state.minimizer_index].position;
    result.best_value = state.f_values[state.minimizer_index];
    return result;
}

}  // namespace swarm

#endif
