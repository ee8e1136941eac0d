#ifndef SWARM_OBJECTIVES_HPP
#define SWARM_OBJECTIVES_HPP

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

#include "swarm/core.hpp"

namespace swarm {

enum class BenchmarkId { Ackley, Rastrigin, Rosenbrock, StyblinskiTang };

inline std::string to_string(BenchmarkId id) {
    switch (id) {
        case BenchmarkId::Ackley: return "ackley";
        case BenchmarkId::Rastrigin: return "rastrigin";
        case BenchmarkId::Rosenbrock: return "rosenbrock";
        case BenchmarkId::StyblinskiTang: return "styblinski";
    }
    throw std::logic_error("bad BenchmarkId");
}

inline BenchmarkId benchmark_from_string(const std::string& s) {
    if (s == "ackley") return BenchmarkId::Ackley;
    if (s == "rastrigin") return BenchmarkId::Rastrigin;
    if (s == "rosenbrock") return BenchmarkId::Rosenbrock;
    if (s == "styblinski") return BenchmarkId::StyblinskiTang;
    throw std::invalid_argument("unknown benchmark: " + s);
}

namespace detail {

inline constexpr double two_pi = 2.0 * std::numbers::pi;

inline double ackley_value(const Vec& x) {
    const double d = static_cast<double>(x.size());
    double sq = 0.0, cs = 0.0;
    for (double xi : x) {
        sq += xi * xi;
        cs += std::cos(two_pi * xi);
    }
    return -20.0 * std::exp(-0.2 * std::sqrt(sq / d)) - std::exp(cs / d) + 20.0 +
           std::numbers::e;
}

inline Vec ackley_gradient(const Vec& x) {
    const double d = static_cast<double>(x.size());
    double sq = 0.0, cs = 0.0;
    for (double xi : x) {
        sq += xi * xi;
        cs += std::cos(two_pi * xi);
    }
    Vec g(x.size(), 0.0);
    const double r = std::sqrt(sq);
    if (r == 0.0) return g;  // minimizer; the norm term is not differentiable here
    const double a = 4.0 * std::exp(-0.2 * r / std::sqrt(d)) / (std::sqrt(d) * r);
    const double b = std::exp(cs / d) * two_pi / d;
    for (std::size_t i = 0; i < x.size(); ++i)
        g[i] = a * x[i] + b * std::sin(two_pi * x[i]);
    return g;
}

inline double rastrigin_value(const Vec& x) {
    double s = 10.0 * static_cast<double>(x.size());
    for (double xi : x) s += xi * xi - 10.0 * std::cos(two_pi * xi);
    return s;
}

inline Vec rastrigin_gradient(const Vec& x) {
    Vec g(x.size());
    for (std::size_t i = 0; i < x.size(); ++i)
        g[i] = 2.0 * x[i] + 10.0 * two_pi * std::sin(two_pi * x[i]);
    return g;
}

inline double rosenbrock_value(const Vec& x) {
    double s = 0.0;
    for (std::size_t i = 0; i + 1 < x.size(); ++i) {
        const double t = x[i + 1] - x[i] * x[i];
        const double u = 1.0 - x[i];
        s += 100.0 * t * t + u * u;
    }
    return s;
}

inline Vec rosenbrock_gradient(const Vec& x) {
    Vec g(x.size(), 0.0);
    for (std::size_t i = 0; i + 1 < x.size(); ++i) {
        const double t = x[i + 1] - x[i] * x[i];
        g[i] += -400.0 * x[i] * t - 2.0 * (1.0 - x[i]);
        g[i + 1] += 200.0 * t;
    }
    return g;
}

inline double styblinski_value(const Vec& x) {
    double s = 0.0;
    for (double xi : x) {
        const double x2 = xi * xi;
        s += x2 * x2 - 16.0 * x2 + 5.0 * xi;
    }
    return 0.5 * s;
}

inline Vec styblinski_gradient(const Vec& x) {
    Vec g(x.size());
    for (std::size_t i = 0; i < x.size(); ++i)
        g[i] = 2.0 * x[i] * x[i] * x[i] - 16.0 * x[i] + 2.5;
    return g;
}

}  // namespace detail

/// Benchmark problem with its conventional init box and known minimizer.
inline ObjectiveProblem make_benchmark(BenchmarkId id, std::size_t d) {
    if (d < 1) throw std::invalid_argument("dimension must be >= 1");
    ObjectiveProblem p;
    p.dimension = d;
    switch (id) {
        case BenchmarkId::Ackley:
            p.evaluate = detail::ackley_value;
            p.gradient = detail::ackley_gradient;
            p.box_lower = Vec(d, -3.0);
            p.box_upper = Vec(d, 3.0);
            p.known_minimizer = Vec(d, 0.0);
            break;
        case BenchmarkId::Rastrigin:
            p.evaluate = detail::rastrigin_value;
            p.gradient = detail::rastrigin_gradient;
            p.box_lower = Vec(d, -5.12);
            p.box_upper = Vec(d, 5.12);
            p.known_minimizer = Vec(d, 0.0);
            break;
        case BenchmarkId::Rosenbrock:
            if (d < 2) throw std::invalid_argument("rosenbrock needs d >= 2");
            p.evaluate = detail::rosenbrock_value;
            p.gradient = detail::rosenbrock_gradient;
            p.box_lower = Vec(d, -2.048);
            p.box_upper = Vec(d, 2.048);
            p.known_minimizer = Vec(d, 1.0);
            break;
        case BenchmarkId::StyblinskiTang:
            p.evaluate = detail::styblinski_value;
            p.gradient = detail::styblinski_gradient;
            p.box_lower = Vec(d, -3.0);
            p.box_upper = Vec(d, 3.0);
            p.known_minimizer = Vec(d, -2.903534);
            break;
    }
    return p;
}

/// Central-difference gradient; validation oracle for the analytic gradients.
inline Vec finite_diff_gradient(const ObjectiveProblem& problem, const Vec& x,
                                double step = 1e-6) {
    if (!(step > 0.0)) throw std::invalid_argument("step must be positive");
    Vec g(x.size());
    Vec xp = x, xm = x;
    for (std::size_t k = 0; k < x.size(); ++k) {
        xp[k] = x[k] + step;
        xm[k] = x[k] - step;
        g[k] = (problem.evaluate(xp) - problem.evaluate(xm)) / (2.0 * step);
        xp[k] = x[k];
        xm[k] = x[k];
    }
    return g;
}

}  // namespace swarm

#endif
