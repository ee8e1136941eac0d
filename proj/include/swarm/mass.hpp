#ifndef SWARM_MASS_HPP
#define SWARM_MASS_HPP

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <vector>

#include "swarm/core.hpp"

namespace swarm {

/// Fraction of mass each agent sheds to the current minimizer.
struct TransferFractions {
    Vec eta;  // aligned with the f_values it was computed from
};

/// eta_i = ((F_i - Fmin) / (Fmax - Fmin + eps))^q. The minimizer gets 0;
/// a flat swarm (Fmax == Fmin) gets all zeros through the eps guard.
inline TransferFractions transfer_fractions(const Vec& f_values, double q, double epsilon) {
    if (f_values.empty()) throw std::invalid_argument("empty f_values");
    double fmin = f_values[0], fmax = f_values[0];
    for (double f : f_values) {
        if (!std::isfinite(f)) throw std::runtime_error("non-finite objective value");
        fmin = std::min(fmin, f);
        fmax = std::max(fmax, f);
    }
    TransferFractions out;
    out.eta.resize(f_values.size());
    const double denom = fmax - fmin + epsilon;
    for (std::size_t i = 0; i < f_values.size(); ++i)
        out.eta[i] = std::pow((f_values[i] - fmin) / denom, q);
    return out;
}

/// Move the shed mass to the minimizer. eta holds one entry per active
/// agent in ascending index order. Total mass is unchanged.
inline void apply_transfer(SwarmState& state, const TransferFractions& tf) {
    double gained = 0.0;
    std::size_t k = 0;
    for (std::size_t i = 0; i < state.agents.size(); ++i) {
        if (!state.agents[i].active) continue;
        const double eta = tf.eta.at(k++);
        if (i == state.minimizer_index) continue;
        const double shed = eta * state.agents[i].mass;
        state.agents[i].mass -= shed;
        gained += shed;
    }
    state.agents[state.minimizer_index].mass += gained;
}

/// Deactivate non-minimizer agents whose mass fell below tolm / N0 (strict);
/// their residual mass goes to the minimizer so the total stays 1.
inline void eliminate_light(SwarmState& state, double tolm, std::size_t n_initial) {
    const double threshold = tolm / static_cast<double>(n_initial);
    double reclaimed = 0.0;
    for (std::size_t i = 0; i < state.agents.size(); ++i) {
        if (!state.agents[i].active || i == state.minimizer_index) continue;
        if (state.agents[i].mass < threshold) {
            reclaimed += state.agents[i].mass;
            state.agents[i].mass = 0.0;
            state.agents[i].active = false;
        }
    }
    state.agents[state.minimizer_index].mass += reclaimed;
}

/// Greedy pairwise merge: whenever two active agents are closer than
/// tolmerge, the lower-F member absorbs the other's mass. Sweeps repeat
/// until no pair qualifies, so co-located clusters collapse to one agent.
inline void merge_close(SwarmState& state, double tolmerge) {
    bool merged = true;
    while (merged) {
        merged = false;
        for (std::size_t i = 0; i < state.agents.size(); ++i) {
            if (!state.agents[i].active) continue;
            for (std::size_t j = i + 1; j < state.agents.size(); ++j) {
                if (!state.agents[j].active) continue;
                if (distance(state.agents[i].position, state.agents[j].position) >= tolmerge)
                    continue;
                const std::size_t keep = state.f_values[i] <= state.f_values[j] ? i : j;
                const std::size_t drop = keep == i ? j : i;
                state.agents[keep].mass += state.agents[drop].mass;
                state.agents[drop].mass = 0.0;
                state.agents[drop].active = false;
                merged = true;
                if (drop == i) break;
            }
        }
    }
    state.refresh_indices();
}

/// m_rel_i = m_i / max_j m_j, indexed like the agent array (0 for inactive).
inline Vec relative_masses(const SwarmState& state) {
    double mmax = 0.0;
    for (const auto& a : state.agents)
        if (a.active) mmax = std::max(mmax, a.mass);
    Vec rel(state.agents.size(), 0.0);
    for (std::size_t i = 0; i < state.agents.size(); ++i)
        if (state.agents[i].active) rel[i] = state.agents[i].mass / mmax;
    return rel;
}

}  // namespace swarm

#endif
