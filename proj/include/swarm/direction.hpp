#ifndef SWARM_DIRECTION_HPP
#define SWARM_DIRECTION_HPP

#include <cmath>
#include <stdexcept>

#include "swarm/core.hpp"
#include "swarm/rng.hpp"

namespace swarm {

/// A sampled descent direction p = |grad| * omega with <omega, q_hat> = r.
struct DirectionSample {
    Vec p;
    double r = 1.0;
    Vec omega;
};

/// Uniform point on the rim of the spherical cap around the north pole:
/// last coordinate exactly r, the rest a random direction on S^{d-2}
/// scaled by sqrt(1 - r^2). r is the cosine of the polar angle, so the
/// sample is NOT surface-uniform over the cap; r itself carries the
/// distribution chosen by the caller.
inline Vec sample_cap_point(std::size_t d, double r, RandomSource& rng) {
    if (d < 2) throw std::invalid_argument("cap sampling needs d >= 2");
    if (!(r >= 0.0 && r <= 1.0)) throw std::invalid_argument("r must be in [0,1]");
    Vec x(d, 0.0);
    double ynorm = 0.0;
    Vec y(d - 1);
    do {
        ynorm = 0.0;
        for (std::size_t i = 0; i + 1 < d; ++i) {
            y[i] = rng.normal();
            ynorm += y[i] * y[i];
        }
        ynorm = std::sqrt(ynorm);
    } while (ynorm == 0.0);
    const double scale = std::sqrt(std::max(0.0, 1.0 - r * r)) / ynorm;
    for (std::size_t i = 0; i + 1 < d; ++i) x[i] = y[i] * scale;
    x[d - 1] = r;
    return x;
}

/// Householder reflection exchanging the north pole z with q_hat, applied
/// to X. Unitary, so norms and inner products against the swapped pair are
/// preserved: <PX, q_hat> = X(d). Identity when q_hat is the pole itself.
inline Vec reflect_to(const Vec& q_hat, const Vec& x) {
    const std::size_t d = q_hat.size();
    const double vnorm_sq = 2.0 * (1.0 - q_hat[d - 1]);  // |q_hat - z|^2
    if (vnorm_sq <= 1e-14) return x;
    Vec v = q_hat;
    v[d - 1] -= 1.0;
    const double c = 2.0 * dot(v, x) / vnorm_sq;
    Vec omega = x;
    for (std::size_t i = 0; i < d; ++i) omega[i] -= c * v[i];
    return omega;
}

/// Random descent direction for an agent with relative mass m_rel: cosine
/// r drawn uniformly from [ (1+m_rel)/2, 1 ), cap point sampled around the
/// pole, then reflected to the gradient orientation. The heaviest agent
/// (m_rel = 1), SBGD mode, and d = 1 all reduce to the plain gradient and
/// consume no draws.
inline DirectionSample random_descent_direction(const Vec& grad, double m_rel, Mode mode,
                                                RandomSource& rng) {
    const double gnorm = norm(grad);
    if (gnorm == 0.0) throw std::invalid_argument("zero gradient");
    DirectionSample s;
    if (mode == Mode::SBGD || m_rel >= 1.0 || grad.size() == 1) {
        s.p = grad;
        s.r = 1.0;
        s.omega = grad;
        for (auto& w : s.omega) w /= gnorm;
        return s;
    }
    const double r = rng.uniform(0.5 * (1.0 + m_rel), 1.0);
    Vec q_hat = grad;
    for (auto& q : q_hat) q /= gnorm;
    const Vec x = sample_cap_point(grad.size(), r, rng);
    s.omega = reflect_to(q_hat, x);
    s.r = r;
    s.p = s.omega;
    for (auto& pi : s.p) pi *= gnorm;
    return s;
}

}  // namespace swarm

#endif
