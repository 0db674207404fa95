#pragma once

#include "curvemono/polymath.hpp"

namespace curvemono {

// f(x, y) = sum_ij a[i][j] x^i y^j, a rectangular coefficient matrix with
// x-power i as the row index and y-power j as the column index.
struct BivariatePolynomial {
    std::vector<std::vector<cplx>> a;

    BivariatePolynomial() = default;
    explicit BivariatePolynomial(std::vector<std::vector<cplx>> coeffs);

    int x_degree() const { return static_cast<int>(a.size()) - 1; }
    int y_degree() const { return a.empty() ? -1 : static_cast<int>(a.front().size()) - 1; }

    cplx evaluate(cplx x, cplx y) const;
    BivariatePolynomial y_derivative() const;

    // a_j(x) as a univariate polynomial in x.
    UnivariatePolynomial y_coefficient(int j) const;
    UnivariatePolynomial leading_y_coefficient() const { return y_coefficient(y_degree()); }

    // f(x0, .) as a univariate polynomial in y.
    UnivariatePolynomial specialize(cplx x0) const;
};

// The N roots in y of f(x0, y) = 0, raw solver order.
struct Fiber {
    cplx x0;
    std::vector<cplx> values;
};

// Throws numerical_error when the leading y-coefficient (nearly) vanishes at
// x0 -- a sheet escapes to infinity there.
Fiber fiber(const BivariatePolynomial& f, cplx x0, double tol = 1e-10);

// Resultant of f and g with respect to y: determinant of the Sylvester
// matrix, evaluated numerically at scaled roots of unity (LU with partial
// pivoting) and interpolated back to coefficients by an inverse DFT.
// Throws numerical_error when the resultant vanishes identically (f not
// square-free in y).
UnivariatePolynomial sylvester_resultant_y(const BivariatePolynomial& f,
                                           const BivariatePolynomial& g);

struct DiscriminantSet {
    std::vector<cplx> points;
    // true when the point is a zero of the leading y-coefficient a_N(x)
    // rather than (only) of the resultant
    std::vector<bool> leading_zero;
};

// Deduplicated zeros of Res_y(f, f_y), clustered within cluster_tol relative
// to the largest magnitude, united with the zeros of a_N(x).
DiscriminantSet discriminant_points(const BivariatePolynomial& f, double cluster_tol = 1e-8);

}  // namespace curvemono
