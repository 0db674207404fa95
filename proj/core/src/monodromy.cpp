#include "curvemono/monodromy.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace curvemono {

Permutation::Permutation(std::vector<int> images) : img(std::move(images)) {
    std::vector<bool> seen(img.size(), false);
    for (int v : img) {
        if (v < 1 || v > static_cast<int>(img.size()) || seen[v - 1])
            throw std::invalid_argument("Permutation: image vector is not a bijection");
        seen[v - 1] = true;
    }
}

Permutation Permutation::identity(int n) {
    std::vector<int> img(n);
    for (int i = 0; i < n; ++i) img[i] = i + 1;
    return Permutation(std::move(img));
}

bool Permutation::is_identity() const {
    for (int i = 0; i < size(); ++i)
        if (img[i] != i + 1) return false;
    return true;
}

Permutation Permutation::compose(const Permutation& other) const {
    std::vector<int> out(img.size());
    for (size_t i = 0; i < img.size(); ++i) out[i] = img[other.img[i] - 1];
    return Permutation(std::move(out));
}

Permutation Permutation::inverse() const {
    std::vector<int> out(img.size());
    for (size_t i = 0; i < img.size(); ++i) out[img[i] - 1] = static_cast<int>(i) + 1;
    return Permutation(std::move(out));
}

std::vector<int> Permutation::cycle_type() const {
    std::vector<int> lengths;
    std::vector<bool> seen(img.size(), false);
    for (size_t s = 0; s < img.size(); ++s) {
        if (seen[s]) continue;
        int len = 0;
        size_t j = s;
        while (!seen[j]) {
            seen[j] = true;
            j = img[j] - 1;
            ++len;
        }
        lengths.push_back(len);
    }
    std::sort(lengths.rbegin(), lengths.rend());
    return lengths;
}

Fiber canonical_base_fiber(const BivariatePolynomial& f, cplx b0, double tol) {
    Fiber fib = fiber(f, b0, tol);
    std::sort(fib.values.begin(), fib.values.end(), [](cplx a, cplx b) {
        if (a.imag() != b.imag()) return a.imag() < b.imag();
        return a.real() < b.real();
    });
    for (size_t i = 1; i < fib.values.size(); ++i)
        if (fib.values[i] == fib.values[i - 1])
            throw numerical_error("canonical_base_fiber: degenerate fiber at the base point");
    return fib;
}

std::vector<cplx> collocate(const std::vector<Segment>& chain, const QuadratureRule& rule) {
    std::vector<cplx> out;
    out.reserve(chain.size() * (rule.order + 2));
    for (const auto& seg : chain) {
        out.push_back(seg.start());
        for (double x : rule.nodes) out.push_back(seg.point((x + 1.0) / 2.0));
        out.push_back(seg.end());
    }
    return out;
}

namespace {

}  // namespace

namespace detail {

// One tracking step: fit the fresh fiber onto the current one, nearest value
// per slot, each root claimed once.  The match is rejected as ambiguous --
// cur left untouched, false returned -- when the runner-up candidate is
// within 10x of the winner while the winner already exceeds 0.4x the slot's
// separation from the other sheets: then the sheet identity is not
// trustworthy at this step size.
bool try_match_step(const std::vector<cplx>& fresh, std::vector<cplx>& cur) {
    const size_t n = cur.size();
    std::vector<bool> used(n, false);
    std::vector<cplx> next(n);
    for (size_t i = 0; i < n; ++i) {
        size_t best = n;
        double best_d = std::numeric_limits<double>::infinity();
        double second_d = std::numeric_limits<double>::infinity();
        for (size_t j = 0; j < n; ++j) {
            if (used[j]) continue;
            const double d = std::abs(fresh[j] - cur[i]);
            if (d < best_d) {
                second_d = best_d;
                best_d = d;
                best = j;
            } else if (d < second_d) {
                second_d = d;
            }
        }
        double separation = std::numeric_limits<double>::infinity();
        for (size_t j = 0; j < n; ++j)
            if (j != i) separation = std::min(separation, std::abs(cur[j] - cur[i]));
        if (best_d > 0.4 * separation && second_d < 10.0 * best_d) return false;
        used[best] = true;
        next[i] = fresh[best];
    }
    cur = std::move(next);
    return true;
}

// Continue the tracked fiber from seg.point(t0) (where cur is valid) to
// seg.point(t1), bisecting the parameter interval while the matching stays
// ambiguous.  Sheets that remain indistinguishable at the depth cap are
// genuinely (numerically) coincident.
void track(const BivariatePolynomial& f, const Segment& seg, double t0, double t1,
           std::vector<cplx>& cur, int depth) {
    const cplx x = seg.point(t1);
    const std::vector<cplx> fresh = roots_seeded(f.specialize(x), cur, 1e-9);
    if (try_match_step(fresh, cur)) return;
    if (depth >= 40)
        throw numerical_error("continue_fiber: sheets numerically indistinguishable");
    const double tm = 0.5 * (t0 + t1);
    track(f, seg, t0, tm, cur, depth + 1);
    track(f, seg, tm, t1, cur, depth + 1);
}

}  // namespace detail

ContinuationResult continue_fiber(const BivariatePolynomial& f, const std::vector<Segment>& chain,
                                  const std::vector<cplx>& ybase, int ng) {
    if (ng < 4) throw std::invalid_argument("continue_fiber: need ng >= 4");
    const QuadratureRule rule = gauss_legendre(ng);
    const int N = static_cast<int>(ybase.size());

    // walk the collocation points segment by segment; consecutive segments
    // share endpoints, so each segment continues from its own t = 0
    std::vector<cplx> cur = ybase;
    for (const auto& seg : chain) {
        double prev_t = 0.0;
        for (int q = 0; q <= rule.order; ++q) {
            const double t = q < rule.order ? (rule.nodes[q] + 1.0) / 2.0 : 1.0;
            detail::track(f, seg, prev_t, t, cur);
            prev_t = t;
        }
    }

    std::vector<int> img(N);
    std::vector<bool> taken(N, false);
    double residual = 0;
    for (int i = 0; i < N; ++i) {
        int best = -1;
        double best_d = std::numeric_limits<double>::infinity();
        for (int j = 0; j < N; ++j) {
            const double d = std::abs(ybase[j] - cur[i]);
            if (d < best_d) {
                best_d = d;
                best = j;
            }
        }
        if (taken[best])
            throw numerical_error("continue_fiber: final fiber does not match the base fiber");
        taken[best] = true;
        img[i] = best + 1;
        residual = std::max(residual, best_d);
    }
    return ContinuationResult{Permutation(std::move(img)), residual};
}

MonodromyTable monodromy(const BivariatePolynomial& f, const Configuration& config,
                         const std::vector<Loop>& loops, int ng) {
    MonodromyTable table;
    table.base = config.base;
    table.ybase = canonical_base_fiber(f, config.base).values;
    for (const auto& loop : loops) {
        auto [sigma, residual] = continue_fiber(f, loop.segments, table.ybase, ng);
        table.columns.push_back(std::move(sigma));
        table.residuals.push_back(residual);
    }
    return table;
}

}  // namespace curvemono
