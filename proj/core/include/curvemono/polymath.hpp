#pragma once

#include <complex>
#include <stdexcept>
#include <string>
#include <vector>

namespace curvemono {

using cplx = std::complex<double>;

// Thrown when a numerical routine cannot certify its result (root finder
// stagnation, indistinguishable sheets during continuation, ...).
struct numerical_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Complex polynomial in one variable, coefficients stored ascending:
// c[0] + c[1] z + ... + c[d] z^d.
struct UnivariatePolynomial {
    std::vector<cplx> c;

    UnivariatePolynomial() : c{cplx(0.0)} {}
    explicit UnivariatePolynomial(std::vector<cplx> coeffs);

    int degree() const { return static_cast<int>(c.size()) - 1; }
    cplx evaluate(cplx z) const;  // Horner
    UnivariatePolynomial derivative() const;

    // Drop leading coefficients with |c_k| <= rel_tol * max|c_i|, and with
    // rel_tol > 0 also flush interior coefficients below the threshold to
    // exact zero (see roots() for why).
    void trim(double rel_tol = 0.0);

    double max_coeff_magnitude() const;
    bool is_zero(double abs_tol = 0.0) const;  // max|c_i| <= abs_tol
};

// All complex roots, with multiplicity, via Aberth-Ehrlich simultaneous
// iteration.  Exact zero low-order coefficients are deflated first (each one
// contributes an exact root 0), which keeps high-multiplicity origin roots
// from smearing into a cluster of radius noise^(1/m).
//
// Postcondition: |p(r)| <= tol * scale(p, r) for every returned root, where
// scale(p, r) = max|c_i| * max(1, |r|)^deg.  Violations raise numerical_error.
std::vector<cplx> roots(const UnivariatePolynomial& p, double tol = 1e-10);

// As roots(), but seeded with the given initial guesses (used for warm
// starts during analytic continuation).  guesses.size() must equal degree.
std::vector<cplx> roots_seeded(const UnivariatePolynomial& p,
                               const std::vector<cplx>& guesses, double tol = 1e-10);

struct QuadratureRule {
    int order = 0;
    std::vector<double> nodes;    // ascending in (-1, 1)
    std::vector<double> weights;  // positive, sum 2
};

// Gauss-Legendre rule on [-1, 1]; nodes from Newton iteration on the
// three-term Legendre recurrence, exact for polynomials of degree 2n-1.
QuadratureRule gauss_legendre(int ng);

}  // namespace curvemono
