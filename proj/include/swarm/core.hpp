#ifndef SWARM_CORE_HPP
#define SWARM_CORE_HPP

#include <cmath>
#include <cstddef>
#include <functional>
#include <limits>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "swarm/rng.hpp"

namespace swarm {

using Vec = std::vector<double>;

inline double dot(const Vec& a, const Vec& b) {
    double s = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s;
}

inline double norm(const Vec& a) { return std::sqrt(dot(a, a)); }

inline double distance(const Vec& a, const Vec& b) {
    double s = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) {
        const double d = a[i] - b[i];
        s += d * d;
    }
    return std::sqrt(s);
}

/// One swarm member: a position and the weight it currently carries.
/// Inactive agents have been merged away or eliminated; their mass is zero.
struct Agent {
    Vec position;
    double mass = 0.0;
    bool active = true;
};

/// Objective with analytic gradient, an initialization box, and (for
/// benchmarks) the known global minimizer used by success checks.
/// Agents may leave the box during a run; it only bounds the initial draw.
struct ObjectiveProblem {
    std::size_t dimension = 0;
    std::function<double(const Vec&)> evaluate;
    std::function<Vec(const Vec&)> gradient;
    Vec box_lower;
    Vec box_upper;
    std::optional<Vec> known_minimizer;
};

enum class Mode { SBRD, SBGD };

inline std::string to_string(Mode m) { return m == Mode::SBRD ? "sbrd" : "sbgd"; }

inline Mode mode_from_string(const std::string& s) {
    if (s == "sbrd") return Mode::SBRD;
    if (s == "sbgd") return Mode::SBGD;
    throw std::invalid_argument("unknown mode: " + s);
}

/// All scalar knobs of the method.
struct SolverConfig {
    std::size_t n_agents = 50;
    double q_exponent = 2.0;     // mass transfer exponent, >= 1
    double lambda = 0.2;         // descent parameter, in (0,1)
    double gamma = 0.9;          // backtracking shrinkage, in (0,1)
    double h0 = 1.0;             // initial trial step
    double tolm = 1e-4;          // elimination threshold (scaled by 1/N0)
    double tolmerge = 1e-3;      // merge distance
    double tolres = 1e-4;        // residual termination threshold
    std::size_t nmax = 200;      // iteration cap
    double epsilon = 1e-12;      // denominator guard in the transfer fraction
    double grad_floor = 1e-12;   // below this gradient norm an agent stays put
    std::size_t max_shrinks = 100;
    Mode mode = Mode::SBRD;
    bool full_descent = false;   // drop the 1/2 factor in the descent guard

    void validate() const {
        if (n_agents < 1) throw std::invalid_argument("n_agents must be >= 1");
        if (!(q_exponent >= 1.0)) throw std::invalid_argument("q_exponent must be >= 1");
        if (!(lambda > 0.0 && lambda < 1.0)) throw std::invalid_argument("lambda must be in (0,1)");
        if (!(gamma > 0.0 && gamma < 1.0)) throw std::invalid_argument("gamma must be in (0,1)");
        if (!(h0 > 0.0)) throw std::invalid_argument("h0 must be positive");
        if (!(tolm > 0.0)) throw std::invalid_argument("tolm must be positive");
        if (!(tolmerge > 0.0)) throw std::invalid_argument("tolmerge must be positive");
        if (!(tolres > 0.0)) throw std::invalid_argument("tolres must be positive");
        if (!(epsilon > 0.0)) throw std::invalid_argument("epsilon must be positive");
        if (grad_floor < 0.0) throw std::invalid_argument("grad_floor must be nonnegative");
        if (max_shrinks < 1) throw std::invalid_argument("max_shrinks must be >= 1");
    }
};

/// Active agent set at iteration n plus cached objective values.
struct SwarmState {
    std::vector<Agent> agents;
    std::size_t iteration = 0;
    Vec f_values;                    // aligned with agents; stale for inactive ones
    std::size_t minimizer_index = 0; // argmin F over active agents
    std::size_t heaviest_index = 0;  // argmax mass over active agents

    std::size_t active_count() const {
        std::size_t n = 0;
        for (const auto& a : agents)
            if (a.active) ++n;
        return n;
    }

    double total_mass() const {
        double s = 0.0;
        for (const auto& a : agents)
            if (a.active) s += a.mass;
        return s;
    }

    /// Recompute minimizer/heaviest indices from the cached values.
    void refresh_indices() {
        double fmin = std::numeric_limits<double>::infinity();
        double mmax = -1.0;
        for (std::size_t i = 0; i < agents.size(); ++i) {
            if (!agents[i].active) continue;
            if (f_values[i] < fmin) {
                fmin = f_values[i];
                minimizer_index = i;
            }
            if (agents[i].mass > mmax) {
                mmax = agents[i].mass;
                heaviest_index = i;
            }
        }
    }
};

/// N agents uniform in the init box, each with mass 1/N.
inline SwarmState init_swarm(const ObjectiveProblem& problem, const SolverConfig& config,
                             RandomSource& rng) {
    if (problem.dimension < 1) throw std::invalid_argument("dimension must be >= 1");
    if (problem.box_lower.size() != problem.dimension ||
        problem.box_upper.size() != problem.dimension)
        throw std::invalid_argument("init box does not match dimension");
    for (std::size_t k = 0; k < problem.dimension; ++k)
        if (!(problem.box_lower[k] < problem.box_upper[k]))
            throw std::invalid_argument("degenerate init box");
    config.validate();

    SwarmState state;
    const std::size_t n = config.n_agents;
    state.agents.resize(n);
    state.f_values.resize(n);
    for (std::size_t i = 0; i < n; ++i) {
        Agent& a = state.agents[i];
        a.position.resize(problem.dimension);
        for (std::size_t k = 0; k < problem.dimension; ++k)
            a.position[k] = rng.uniform(problem.box_lower[k], problem.box_upper[k]);
        a.mass = 1.0 / static_cast<double>(n);
        a.active = true;
        state.f_values[i] = problem.evaluate(a.position);
        if (!std::isfinite(state.f_values[i]))
            throw std::runtime_error("objective returned a non-finite value at init");
    }
    state.refresh_indices();
    return state;
}

}  // namespace swarm

#endif
