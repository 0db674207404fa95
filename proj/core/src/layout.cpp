#include "curvemono/layout.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace curvemono {

cplx Configuration::marked(int label, int side) const {
    const cplx b = points[label - 1];
    return side == 1 ? b - radius : b + radius;
}

Configuration configure(const std::vector<cplx>& pts, double kappa,
                        const std::vector<bool>& leading_flags) {
    const int n = static_cast<int>(pts.size());
    if (n == 0) throw std::invalid_argument("configure: no points");
    if (kappa <= 0.0 || kappa >= 0.5)
        throw std::invalid_argument("configure: kappa must lie in (0, 1/2)");

    double dmin = std::numeric_limits<double>::infinity(), dmax = 0;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
            const double d = std::abs(pts[i] - pts[j]);
            dmin = std::min(dmin, d);
            dmax = std::max(dmax, d);
        }
    if (n > 1 && dmin == 0.0) throw std::invalid_argument("configure: coincident points");

    Configuration cfg;
    cfg.kappa = kappa;
    // with a single point the minimal distance is undefined; pick a finite R
    cfg.rho = (n == 1) ? std::max(1.0, std::abs(pts[0])) : dmin;
    cfg.radius = kappa * cfg.rho;
    cfg.delta = cfg.radius * std::sqrt(1.0 - kappa * kappa);
    cfg.spacing_warning = (n > 1 && dmin / dmax < 1e-4);

    // base: leftmost left marked point; ties by the largest imaginary part
    int base_idx = 0;
    for (int i = 1; i < n; ++i) {
        const cplx cur = pts[i] - cfg.radius, best = pts[base_idx] - cfg.radius;
        if (cur.real() < best.real() ||
            (cur.real() == best.real() && cur.imag() > best.imag()))
            base_idx = i;
    }
    cfg.base = pts[base_idx] - cfg.radius;

    // relabel by ascending arg(b_k - b0) in (-pi, pi], nearer point first on ties
    std::vector<int> order(n);
    for (int i = 0; i < n; ++i) order[i] = i;
    const cplx b0 = cfg.base;
    std::stable_sort(order.begin(), order.end(), [&](int i, int j) {
        const cplx u = pts[i] - b0, v = pts[j] - b0;
        const double au = std::arg(u), av = std::arg(v);
        if (au != av) return au < av;
        return std::abs(u) < std::abs(v);
    });

    cfg.points.resize(n);
    cfg.leading_zero.assign(n, false);
    for (int k = 0; k < n; ++k) {
        cfg.points[k] = pts[order[k]];
        if (!leading_flags.empty()) cfg.leading_zero[k] = leading_flags[order[k]];
        if (order[k] == base_idx) cfg.base_label = k + 1;
    }
    return cfg;
}

SpanningTree minimal_spanning_tree(const Configuration& config) {
    const int n = config.size();
    SpanningTree tree;
    if (n == 1) return tree;

    double dmax = 0;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            dmax = std::max(dmax, std::abs(config.points[i] - config.points[j]));
    const double tie = 1e-12 * dmax;

    std::vector<bool> attached(n + 1, false);
    attached[config.base_label] = true;
    for (int step = 1; step < n; ++step) {
        double best_d = std::numeric_limits<double>::infinity();
        int best_p = 0, best_c = 0;
        for (int c = 1; c <= n; ++c) {
            if (attached[c]) continue;
            for (int p = 1; p <= n; ++p) {
                if (!attached[p]) continue;
                const double d = std::abs(config.points[p - 1] - config.points[c - 1]);
                if (d < best_d - tie) {
                    best_d = d;
                    best_p = p;
                    best_c = c;
                } else if (d <= best_d + tie &&
                           (c < best_c || (c == best_c && p < best_p))) {
                    best_p = p;
                    best_c = c;
                }
            }
        }
        tree.edges.emplace_back(best_p, best_c);
        attached[best_c] = true;
    }
    tree.selectors = edge_endpoints(config, tree);
    return tree;
}

std::vector<std::pair<int, int>> edge_endpoints(const Configuration& config,
                                                const SpanningTree& tree) {
    std::vector<std::pair<int, int>> sel;
    sel.reserve(tree.edges.size());
    for (const auto& [p, c] : tree.edges) {
        const double d = (config.points[c - 1] - config.points[p - 1]).real();
        if (d >= config.radius)
            sel.emplace_back(2, 1);
        else if (d < -config.radius)
            sel.emplace_back(1, 2);
        else
            sel.emplace_back(1, 1);
    }
    return sel;
}

int TreeMaps::departure(int parent_label, int child_label) const {
    return depart_side[parent_label][child_label];
}

TreeMaps tree_maps(const Configuration& config, const SpanningTree& tree) {
    const int n = config.size();
    TreeMaps maps;
    maps.root = config.base_label;
    maps.children.assign(n + 1, {});
    maps.parent.assign(n + 1, 0);
    maps.arrival_side.assign(n + 1, 0);
    maps.depart_side.assign(n + 1, std::vector<int>(n + 1, 0));
    maps.arrival_side[maps.root] = 1;  // the base sits at b_{k0}^{(1)}

    auto selectors = tree.selectors.empty() ? edge_endpoints(config, tree) : tree.selectors;
    for (size_t e = 0; e < tree.edges.size(); ++e) {
        const auto [p, c] = tree.edges[e];
        const auto [dep, arr] = selectors[e];
        maps.children[p].push_back(c);
        maps.parent[c] = p;
        maps.arrival_side[c] = arr;
        maps.depart_side[p][c] = dep;
    }
    return maps;
}

}  // namespace curvemono
