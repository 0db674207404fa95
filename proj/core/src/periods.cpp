#include "curvemono/periods.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace curvemono {

std::vector<cplx> integrate_chain(const BivariatePolynomial& f, const DifferentialSpec& spec,
                                  const std::vector<Segment>& chain,
                                  const std::vector<cplx>& ybase, int ng) {
    const int N = static_cast<int>(ybase.size());
    const BivariatePolynomial fy = f.y_derivative();
    const QuadratureRule rule = gauss_legendre(ng);

    std::vector<cplx> total(N, cplx(0.0));
    std::vector<cplx> cur = ybase;
    for (const auto& seg : chain) {
        double prev_t = 0.0;
        for (int q = 0; q <= rule.order; ++q) {
            const double t = q < rule.order ? (rule.nodes[q] + 1.0) / 2.0 : 1.0;
            detail::track(f, seg, prev_t, t, cur);
            prev_t = t;
            if (q == rule.order) break;
            const cplx x = seg.point(t);
            const cplx dz = seg.velocity(t);
            for (int i = 0; i < N; ++i)
                total[i] += 0.5 * rule.weights[q] * spec.numerator.evaluate(x, cur[i]) /
                            fy.evaluate(x, cur[i]) * dz;
        }
    }
    return total;
}

}  // namespace curvemono
