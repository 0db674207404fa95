#include "curvemono/polymath.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

namespace curvemono {

UnivariatePolynomial::UnivariatePolynomial(std::vector<cplx> coeffs) : c(std::move(coeffs)) {
    if (c.empty()) c.assign(1, cplx(0.0));
}

cplx UnivariatePolynomial::evaluate(cplx z) const {
    cplx v = 0.0;
    for (auto it = c.rbegin(); it != c.rend(); ++it) v = v * z + *it;
    return v;
}

UnivariatePolynomial UnivariatePolynomial::derivative() const {
    if (c.size() <= 1) return UnivariatePolynomial();
    std::vector<cplx> d(c.size() - 1);
    for (size_t k = 1; k < c.size(); ++k) d[k - 1] = double(k) * c[k];
    return UnivariatePolynomial(std::move(d));
}

double UnivariatePolynomial::max_coeff_magnitude() const {
    double m = 0;
    for (const auto& v : c) m = std::max(m, std::abs(v));
    return m;
}

bool UnivariatePolynomial::is_zero(double abs_tol) const {
    return max_coeff_magnitude() <= abs_tol;
}

void UnivariatePolynomial::trim(double rel_tol) {
    const double floor_ = rel_tol * max_coeff_magnitude();
    if (rel_tol > 0) {
        for (auto& v : c)
            if (std::abs(v) <= floor_) v = 0.0;
    }
    while (c.size() > 1 && std::abs(c.back()) <= floor_) c.pop_back();
}

namespace {

double root_scale(const UnivariatePolynomial& p, cplx r) {
    return p.max_coeff_magnitude() * std::pow(std::max(1.0, std::abs(r)), p.degree());
}

// Aberth-Ehrlich on a polynomial with nonzero constant and leading terms.
std::vector<cplx> aberth(const UnivariatePolynomial& p, std::vector<cplx> z, double tol) {
    const int n = p.degree();
    const UnivariatePolynomial dp = p.derivative();
    const int max_iter = 1000;

    std::vector<bool> settled(n, false);
    for (int iter = 0; iter < max_iter; ++iter) {
        bool all_done = true;
        for (int k = 0; k < n; ++k) {
            if (settled[k]) continue;
            const cplx pv = p.evaluate(z[k]);
            if (std::abs(pv) <= 5e-15 * root_scale(p, z[k])) {
                settled[k] = true;
                continue;
            }
            const cplx dv = dp.evaluate(z[k]);
            cplx ratio = (dv != 0.0) ? pv / dv : cplx(0.0);
            cplx rep = 0.0;
            for (int j = 0; j < n; ++j)
                if (j != k) rep += 1.0 / (z[k] - z[j]);
            cplx denom = 1.0 - ratio * rep;
            cplx step = (std::abs(denom) > 1e-300) ? ratio / denom : ratio;
            z[k] -= step;
            if (std::abs(step) <= 1e-14 * (1.0 + std::abs(z[k])))
                settled[k] = true;
            else
                all_done = false;
        }
        if (all_done) break;
    }

    double worst = 0;
    for (int k = 0; k < n; ++k)
        worst = std::max(worst, std::abs(p.evaluate(z[k])) / root_scale(p, z[k]));
    if (worst > tol)
        throw numerical_error("root finder did not certify: max relative residual " +
                              std::to_string(worst));
    return z;
}

std::vector<cplx> initial_guesses(const UnivariatePolynomial& p) {
    const int n = p.degree();
    const cplx lead = p.c.back();
    double bound = 0;
    for (int k = 0; k < n; ++k) bound = std::max(bound, std::abs(p.c[k] / lead));
    const double r = 0.5 * (1.0 + bound);
    std::vector<cplx> z(n);
    for (int k = 0; k < n; ++k) {
        // irregular phase offset so no guess sits on a symmetry axis
        const double th = 2.0 * std::numbers::pi * (k + 0.25) / n + 0.33;
        z[k] = r * std::exp(cplx(0.0, th));
    }
    return z;
}

std::vector<cplx> roots_impl(const UnivariatePolynomial& p, const std::vector<cplx>* seed,
                             double tol) {
    if (p.degree() < 1 || p.is_zero())
        throw std::invalid_argument("roots: polynomial must have degree >= 1");

    UnivariatePolynomial q = p;
    q.trim(0.0);  // drop exactly-zero leading coefficients

    // deflate exact zero low-order coefficients: roots at the origin
    size_t at_origin = 0;
    while (at_origin < q.c.size() - 1 && q.c[at_origin] == 0.0) ++at_origin;
    std::vector<cplx> out(at_origin, cplx(0.0));
    if (at_origin > 0) q.c.erase(q.c.begin(), q.c.begin() + at_origin);

    if (q.degree() >= 1) {
        std::vector<cplx> z;
        if (seed && static_cast<int>(seed->size()) == q.degree())
            z = *seed;
        else
            z = initial_guesses(q);
        auto found = aberth(q, std::move(z), tol);
        out.insert(out.end(), found.begin(), found.end());
    }
    return out;
}

}  // namespace

std::vector<cplx> roots(const UnivariatePolynomial& p, double tol) {
    return roots_impl(p, nullptr, tol);
}

std::vector<cplx> roots_seeded(const UnivariatePolynomial& p, const std::vector<cplx>& guesses,
                               double tol) {
    return roots_impl(p, &guesses, tol);
}

QuadratureRule gauss_legendre(int ng) {
    if (ng < 1) throw std::invalid_argument("gauss_legendre: order must be >= 1");
    QuadratureRule rule;
    rule.order = ng;
    rule.nodes.resize(ng);
    rule.weights.resize(ng);

    // Newton on P_ng for the upper half; mirror for exact antisymmetry.
    for (int i = 0; i < (ng + 1) / 2; ++i) {
        double x = std::cos(std::numbers::pi * (i + 0.75) / (ng + 0.5));
        double dp = 0;
        for (int it = 0; it < 100; ++it) {
            double p0 = 1.0, p1 = x;
            for (int k = 2; k <= ng; ++k) {
                const double p2 = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
                p0 = p1;
                p1 = p2;
            }
            dp = ng * (x * p1 - p0) / (x * x - 1.0);
            const double dx = p1 / dp;
            x -= dx;
            if (std::abs(dx) < 1e-16) break;
        }
        const double w = 2.0 / ((1.0 - x * x) * dp * dp);
        rule.nodes[ng - 1 - i] = x;
        rule.nodes[i] = -x;
        rule.weights[ng - 1 - i] = w;
        rule.weights[i] = w;
    }
    if (ng % 2 == 1) rule.nodes[ng / 2] = 0.0;
    return rule;
}

}  // namespace curvemono
