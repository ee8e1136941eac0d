#ifndef SWARM_LINESEARCH_HPP
#define SWARM_LINESEARCH_HPP

#include <cstddef>

#include "swarm/core.hpp"

namespace swarm {

struct LineSearchResult {
    double h = 0.0;            // accepted step; h0 * gamma^shrinks when accepted
    std::size_t shrinks = 0;   // number of gamma-contractions
    double f_new = 0.0;        // objective at the accepted point
    std::size_t evals = 0;     // probe evaluations consumed (= shrinks + 1 on accept)
    bool accepted = false;     // false when max_shrinks ran out
};

/// Mass-weighted backtracking: shrink h by gamma until
///   F(x - h p) <= f_x - 1/2 * lambda_m * h * grad_sq.
/// f_x and grad_sq are the caller's cached values; only probe points are
/// evaluated here. On acceptance with shrinks >= 1 the condition fails at
/// h/gamma, so the accepted step is the largest on the gamma-grid.
inline LineSearchResult backtrack(const ObjectiveProblem& problem, const Vec& x, const Vec& p,
                                  double f_x, double grad_sq, double lambda_m, double gamma,
                                  double h0, std::size_t max_shrinks) {
    LineSearchResult res;
    double h = h0;
    Vec trial(x.size());
    for (std::size_t s = 0; s <= max_shrinks; ++s) {
        for (std::size_t k = 0; k < x.size(); ++k) trial[k] = x[k] - h * p[k];
        const double f_trial = problem.evaluate(trial);
        ++res.evals;
        if (f_trial <= f_x - 0.5 * lambda_m * h * grad_sq) {
            res.h = h;
            res.shrinks = s;
            res.f_new = f_trial;
            res.accepted = true;
            return res;
        }
        h *= gamma;
    }
    res.shrinks = max_shrinks;
    res.accepted = false;
    return res;
}

}  // namespace swarm

#endif
