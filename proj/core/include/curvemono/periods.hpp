#pragma once

#include "curvemono/monodromy.hpp"

namespace curvemono {

// Differential p(x, y) / f_y(x, y) dx; the denominator is implicit.
struct DifferentialSpec {
    BivariatePolynomial numerator;
};

// Sheet-tracked Gauss-Legendre integration of the differential along the
// chain: the fiber is continued exactly as in continue_fiber and the
// integrand accumulated per sheet at the quadrature nodes.  Entry i is the
// integral on the sheet that starts at ybase[i].
std::vector<cplx> integrate_chain(const BivariatePolynomial& f, const DifferentialSpec& spec,
                                  const std::vector<Segment>& chain,
                                  const std::vector<cplx>& ybase, int ng = 64);

}  // namespace curvemono
