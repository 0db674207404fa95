#pragma once

#include <utility>

#include "curvemono/curve.hpp"

namespace curvemono {

// Geometry of the discriminant set: circles of radius R = kappa * rho around
// each point, the two marked points b_k -+ R where each circle meets the
// horizontal line through its center, the base point, and the angular
// relabeling.  Labels are 1-based throughout.
struct Configuration {
    std::vector<cplx> points;        // points[k-1] is the point with label k
    std::vector<bool> leading_zero;  // carried over from DiscriminantSet
    double rho = 0;                  // minimal pairwise distance
    double kappa = 0;
    double radius = 0;               // R = kappa * rho
    double delta = 0;                // R * sqrt(1 - kappa^2), contour clearance
    int base_label = 0;              // k0
    cplx base;                       // b0 = points[k0-1] - R
    bool spacing_warning = false;    // min/max pairwise distance ratio < 1e-4

    int size() const { return static_cast<int>(points.size()); }
    // side 1: b_k - R (left marked point), side 2: b_k + R (right)
    cplx marked(int label, int side) const;
};

// Relabels the points by ascending arg(b_k - b0) in (-pi, pi], ties broken by
// smaller |b_k - b0|.  The base is the leftmost marked point; among equally
// leftmost candidates the one with the largest imaginary part is taken.
Configuration configure(const std::vector<cplx>& pts, double kappa = 1.0 / 2.1,
                        const std::vector<bool>& leading_flags = {});

struct SpanningTree {
    // (parent_label, child_label) in discovery order
    std::vector<std::pair<int, int>> edges;
    // per edge the marked-point pair (j, l): departure from b_parent^(j),
    // arrival at b_child^(l)
    std::vector<std::pair<int, int>> selectors;
};

// Prim growth from the base label; distance ties (relative tolerance 1e-12)
// resolved by the smallest child label, then the smallest parent label.
// Selectors are filled in via edge_endpoints().
SpanningTree minimal_spanning_tree(const Configuration& config);

// d = Re(b_child - b_parent):  d >= R -> (2,1),  d < -R -> (1,2),
// otherwise (1,1).
std::vector<std::pair<int, int>> edge_endpoints(const Configuration& config,
                                                const SpanningTree& tree);

// Adjacency of the rooted tree, shared by the contour and generator modules.
struct TreeMaps {
    std::vector<std::vector<int>> children;  // children[k], k 1-based (index 0 unused)
    std::vector<int> parent;                 // parent[k], 0 for the root
    std::vector<int> arrival_side;           // side of the marked point the path arrives at
    std::vector<std::vector<int>> depart_side;  // depart_side[p][c] via lookup helper
    int root = 0;

    int departure(int parent_label, int child_label) const;
};

TreeMaps tree_maps(const Configuration& config, const SpanningTree& tree);

}  // namespace curvemono
