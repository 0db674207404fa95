#pragma once

#include "curvemono/contour.hpp"

namespace curvemono {

// Bijection of {1..N}, stored as the image vector (sigma(1), ..., sigma(N)).
struct Permutation {
    std::vector<int> img;

    Permutation() = default;
    explicit Permutation(std::vector<int> images);
    static Permutation identity(int n);

    int size() const { return static_cast<int>(img.size()); }
    int operator()(int i) const { return img[i - 1]; }
    bool is_identity() const;

    // (this o other)(i) = this(other(i)); matches the path convention where
    // the product alpha*beta traces beta first.
    Permutation compose(const Permutation& other) const;
    Permutation inverse() const;

    // cycle lengths, descending, fixed points included
    std::vector<int> cycle_type() const;

    bool operator==(const Permutation&) const = default;
};

// Fiber at the base point sorted by ascending imaginary part, ties by
// ascending real part; this fixes the sheet numbering.
Fiber canonical_base_fiber(const BivariatePolynomial& f, cplx b0, double tol = 1e-10);

// Sample points along the chain: per segment its start, the Gauss-Legendre
// nodes mapped onto it (arcs in angle), and its end.
std::vector<cplx> collocate(const std::vector<Segment>& chain, const QuadratureRule& rule);

struct ContinuationResult {
    Permutation sigma;
    double residual = 0;  // max distance of the final fiber to its ybase match
};

// Analytic continuation of ybase along the chain: at each successive sample
// the fresh fiber is matched slot-wise to the nearest previous value
// (greedy, bijective); the permutation reads off the final match against
// ybase.  Throws numerical_error when the best match exceeds 0.4x the
// minimal pairwise distance of the previous fiber (sheets indistinguishable).
ContinuationResult continue_fiber(const BivariatePolynomial& f, const std::vector<Segment>& chain,
                                  const std::vector<cplx>& ybase, int ng = 64);

struct MonodromyTable {
    cplx base;
    std::vector<cplx> ybase;
    std::vector<Permutation> columns;  // sigma_k per loop, loop label order
    std::vector<double> residuals;
};

MonodromyTable monodromy(const BivariatePolynomial& f, const Configuration& config,
                         const std::vector<Loop>& loops, int ng = 64);

namespace detail {
// single tracking step; false (cur untouched) when the match is ambiguous
bool try_match_step(const std::vector<cplx>& fresh, std::vector<cplx>& cur);
// continuation along seg from t0 to t1 with adaptive bisection on ambiguity
void track(const BivariatePolynomial& f, const Segment& seg, double t0, double t1,
           std::vector<cplx>& cur, int depth = 0);
}

}  // namespace curvemono
