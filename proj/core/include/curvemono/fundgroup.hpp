#pragma once

#include "curvemono/monodromy.hpp"

namespace curvemono {

// Marked-point junction of the tree: (label, side).
using Junction = std::pair<int, int>;

struct TreeAnalysis {
    std::vector<int> endpoints;     // leaves, ascending
    std::vector<Junction> nodes;    // junctions where >= 2 branches depart
    std::vector<Junction> vpoints;  // arrival and departure share the marked point
};

TreeAnalysis classify_tree(const Configuration& config, const SpanningTree& tree);

// Per-junction record of how the branch sequences were ordered while
// building the tree string.
struct JunctionTrace {
    Junction at;
    std::vector<std::vector<int>> branches;  // label sequences, in sorted order
};

struct TreeString {
    std::vector<int> order;  // permutation of 1..n
    std::vector<JunctionTrace> junctions;
};

// Orders the initial loops so that their left-to-right product (rightmost
// traced first) is the monodromy of a large clockwise circle around all
// finite discriminant points.  Branches at a junction are sorted by the
// counterclockwise angle, measured in (0, 2pi], of their departure chord
// against a reference ray: the reversed arrival segment (the leftward
// horizontal at the root) on the near side, the ray back through the circle
// center on the far side.  A far-side bundle sorts at the half-circle
// tangent direction of the near marked point; a junction's own point sorts
// toward its center.
TreeString tree_string(const Configuration& config, const SpanningTree& tree);

struct GeneratorSet {
    std::vector<Permutation> generators;  // phi_1..phi_n, ascending label order
    Permutation at_infinity;              // phi_inf = (phi_1 o ... o phi_n)^{-1}
    // audit trail: (m, k) means phi_m := phi_k o phi_m o phi_k^{-1}
    std::vector<std::pair<int, int>> conjugations;
};

// Bubble rearrangement: repeatedly conjugate the largest remaining label
// rightwards through the string until it is rightmost, then drop it.
GeneratorSet rearrange(const std::vector<Permutation>& initial, const std::vector<int>& order);

struct GenusReport {
    int sheets = 0;
    std::vector<int> branching;  // beta_i = L - 1 per cycle of length L >= 2
    int branch_points = 0;       // number of such cycles over all n+1 permutations
    int genus = 0;
};

// Riemann-Hurwitz: g = 1 - N + (sum of branching numbers) / 2, taken over
// the finite generators and the permutation at infinity.
GenusReport genus(const std::vector<Permutation>& generators, const Permutation& at_infinity);

}  // namespace curvemono
