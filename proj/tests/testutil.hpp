#pragma once

#include <vector>

#include "curvemono/fundgroup.hpp"
#include "curvemono/periods.hpp"

namespace testutil {

using curvemono::BivariatePolynomial;
using curvemono::cplx;

struct Term {
    int i, j;
    cplx v;
};

inline BivariatePolynomial make_curve(std::initializer_list<Term> terms) {
    int M = 0, N = 0;
    for (const auto& t : terms) {
        M = std::max(M, t.i);
        N = std::max(N, t.j);
    }
    std::vector<std::vector<cplx>> a(M + 1, std::vector<cplx>(N + 1, cplx(0.0)));
    for (const auto& t : terms) a[t.i][t.j] = t.v;
    return BivariatePolynomial(std::move(a));
}

// y^3 - 2 x^3 y - x^9: three sheets, ten discriminant points (a 9-gon plus
// the singular origin), genus 3
inline BivariatePolynomial worked_curve() {
    return make_curve({{0, 3, 1.0}, {3, 1, -2.0}, {9, 0, -1.0}});
}

// y^9 + 2 x^2 y^6 + 2 x^4 y^3 + x^6 + y^2: nine sheets, 43 discriminant
// points, genus 16
inline BivariatePolynomial big_curve() {
    return make_curve({{0, 9, 1.0}, {2, 6, 2.0}, {4, 3, 2.0}, {6, 0, 1.0}, {0, 2, 1.0}});
}

inline BivariatePolynomial parabola() { return make_curve({{0, 2, 1.0}, {1, 0, -1.0}}); }

// y^2 = x^3 - x
inline BivariatePolynomial elliptic_curve() {
    return make_curve({{0, 2, 1.0}, {3, 0, -1.0}, {1, 0, 1.0}});
}

// reference spanning tree of the worked curve, pinned: the distance ties of
// the regular 9-gon admit several equal-length trees and downstream checks
// are anchored to this one
inline curvemono::SpanningTree pinned_worked_tree(const curvemono::Configuration& config) {
    curvemono::SpanningTree tree;
    tree.edges = {{7, 1}, {1, 2}, {2, 3}, {3, 4}, {7, 10}, {10, 9}, {9, 8}, {4, 6}, {2, 5}};
    tree.selectors = curvemono::edge_endpoints(config, tree);
    return tree;
}

}  // namespace testutil
