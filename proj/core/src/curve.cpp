#include "curvemono/curve.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

namespace curvemono {

BivariatePolynomial::BivariatePolynomial(std::vector<std::vector<cplx>> coeffs)
    : a(std::move(coeffs)) {
    if (a.empty() || a.front().empty())
        throw std::invalid_argument("BivariatePolynomial: empty coefficient matrix");
    const size_t cols = a.front().size();
    for (const auto& row : a)
        if (row.size() != cols)
            throw std::invalid_argument("BivariatePolynomial: ragged coefficient matrix");
    bool any = false;
    for (const auto& row : a)
        for (const auto& v : row)
            if (v != 0.0) any = true;
    if (!any) throw std::invalid_argument("BivariatePolynomial: zero polynomial");
}

cplx BivariatePolynomial::evaluate(cplx x, cplx y) const {
    // Horner in x of Horner-in-y row values
    cplx v = 0.0;
    for (auto it = a.rbegin(); it != a.rend(); ++it) {
        cplx row = 0.0;
        for (auto jt = it->rbegin(); jt != it->rend(); ++jt) row = row * y + *jt;
        v = v * x + row;
    }
    return v;
}

BivariatePolynomial BivariatePolynomial::y_derivative() const {
    const int N = y_degree();
    if (N < 1) throw std::invalid_argument("y_derivative: constant in y");
    std::vector<std::vector<cplx>> d(a.size(), std::vector<cplx>(N));
    for (size_t i = 0; i < a.size(); ++i)
        for (int j = 1; j <= N; ++j) d[i][j - 1] = double(j) * a[i][j];
    return BivariatePolynomial(std::move(d));
}

UnivariatePolynomial BivariatePolynomial::y_coefficient(int j) const {
    std::vector<cplx> c(a.size());
    for (size_t i = 0; i < a.size(); ++i) c[i] = a[i][j];
    UnivariatePolynomial p(std::move(c));
    p.trim(0.0);
    return p;
}

UnivariatePolynomial BivariatePolynomial::specialize(cplx x0) const {
    const int N = y_degree();
    std::vector<cplx> c(N + 1);
    for (int j = 0; j <= N; ++j) {
        cplx v = 0.0;
        for (auto it = a.rbegin(); it != a.rend(); ++it) v = v * x0 + (*it)[j];
        c[j] = v;
    }
    return UnivariatePolynomial(std::move(c));
}

Fiber fiber(const BivariatePolynomial& f, cplx x0, double tol) {
    const int N = f.y_degree();
    UnivariatePolynomial p = f.specialize(x0);
    const double lead = std::abs(p.c[N]);
    if (lead <= 1e-12 * p.max_coeff_magnitude())
        throw numerical_error("fiber: leading y-coefficient vanishes at x0 (sheet at infinity)");
    return Fiber{x0, roots(p, tol)};
}

namespace {

// determinant by LU with partial pivoting, destroys m
cplx lu_determinant(std::vector<std::vector<cplx>>& m) {
    const size_t n = m.size();
    cplx det = 1.0;
    for (size_t col = 0; col < n; ++col) {
        size_t piv = col;
        for (size_t r = col + 1; r < n; ++r)
            if (std::abs(m[r][col]) > std::abs(m[piv][col])) piv = r;
        if (m[piv][col] == 0.0) return 0.0;
        if (piv != col) {
            std::swap(m[piv], m[col]);
            det = -det;
        }
        det *= m[col][col];
        for (size_t r = col + 1; r < n; ++r) {
            const cplx factor = m[r][col] / m[col][col];
            for (size_t cidx = col; cidx < n; ++cidx) m[r][cidx] -= factor * m[col][cidx];
        }
    }
    return det;
}

}  // namespace

UnivariatePolynomial sylvester_resultant_y(const BivariatePolynomial& f,
                                           const BivariatePolynomial& g) {
    const int nf = f.y_degree(), ng = g.y_degree();
    if (nf < 1 || ng < 1)
        throw std::invalid_argument("sylvester_resultant_y: both arguments need y-degree >= 1");
    const int dim = nf + ng;
    const int degree_bound = f.x_degree() * ng + g.x_degree() * nf;
    const int samples = degree_bound + 1;

    // y-coefficient polynomials, descending: row i of the f block carries
    // (f_N, ..., f_0) shifted right by i, likewise for g.
    std::vector<UnivariatePolynomial> fc(nf + 1), gc(ng + 1);
    for (int j = 0; j <= nf; ++j) fc[j] = f.y_coefficient(nf - j);
    for (int j = 0; j <= ng; ++j) gc[j] = g.y_coefficient(ng - j);

    // evaluate the determinant at scaled roots of unity, interpolate by iDFT
    const double r = 1.0;
    std::vector<cplx> det(samples);
    std::vector<std::vector<cplx>> m(dim, std::vector<cplx>(dim));
    for (int s = 0; s < samples; ++s) {
        const cplx x = r * std::exp(cplx(0.0, 2.0 * std::numbers::pi * s / samples));
        for (auto& row : m) std::fill(row.begin(), row.end(), cplx(0.0));
        for (int i = 0; i < ng; ++i)
            for (int j = 0; j <= nf; ++j) m[i][i + j] = fc[j].evaluate(x);
        for (int i = 0; i < nf; ++i)
            for (int j = 0; j <= ng; ++j) m[ng + i][i + j] = gc[j].evaluate(x);
        det[s] = lu_determinant(m);
    }

    std::vector<cplx> coeff(samples);
    for (int j = 0; j < samples; ++j) {
        cplx acc = 0.0;
        for (int s = 0; s < samples; ++s)
            acc += det[s] * std::exp(cplx(0.0, -2.0 * std::numbers::pi * double(j) * s / samples));
        coeff[j] = acc / (double(samples) * std::pow(r, j));
    }

    UnivariatePolynomial res(std::move(coeff));
    if (res.is_zero(1e-10 * std::max(1.0, res.max_coeff_magnitude())))
        throw numerical_error("sylvester_resultant_y: resultant vanishes (not square-free in y)");
    res.trim(1e-13);
    return res;
}

DiscriminantSet discriminant_points(const BivariatePolynomial& f, double cluster_tol) {
    UnivariatePolynomial res = sylvester_resultant_y(f, f.y_derivative());
    // flush interpolation noise so high-multiplicity origin roots deflate
    // exactly instead of smearing into a cluster of radius noise^(1/m)
    res.trim(1e-11);
    std::vector<cplx> zeros = roots(res, 1e-6);

    UnivariatePolynomial lead = f.leading_y_coefficient();
    std::vector<cplx> lead_zeros;
    if (lead.degree() >= 1) {
        lead.trim(1e-13);
        if (lead.degree() >= 1) lead_zeros = roots(lead, 1e-8);
    }

    double scale = 0;
    for (const auto& z : zeros) scale = std::max(scale, std::abs(z));
    for (const auto& z : lead_zeros) scale = std::max(scale, std::abs(z));
    // the interpolated resultant's simple roots are good to ~1e-7 relative,
    // so cluster two orders of magnitude wider than the dedup tolerance
    const double tol = cluster_tol * std::max(1e-300, scale) * 1e2;

    DiscriminantSet out;
    std::vector<int> mult;
    auto add = [&](cplx z, bool from_lead) {
        for (size_t i = 0; i < out.points.size(); ++i) {
            if (std::abs(z - out.points[i]) < tol) {
                out.points[i] = (out.points[i] * double(mult[i]) + z) / double(mult[i] + 1);
                ++mult[i];
                if (from_lead) out.leading_zero[i] = true;
                return;
            }
        }
        out.points.push_back(z);
        out.leading_zero.push_back(from_lead);
        mult.push_back(1);
    };
    for (const auto& z : zeros) add(z, false);
    for (const auto& z : lead_zeros) add(z, true);
    return out;
}

}  // namespace curvemono
