#pragma once

#include "curvemono/layout.hpp"

namespace curvemono {

// One piece of a contour: a straight line between two points or a circular
// arc with a signed sweep (positive = counterclockwise).
struct Segment {
    enum class Kind { Line, Arc };
    Kind kind = Kind::Line;

    // Line
    cplx z0, z1;
    // Arc: z(theta) = center + radius * e^{i theta}, theta from th0 to th1
    cplx center;
    double radius = 0, th0 = 0, th1 = 0;

    static Segment line(cplx a, cplx b);
    static Segment arc(cplx c, double r, double a0, double a1);

    cplx start() const;
    cplx end() const;
    cplx point(double t) const;     // t in [0, 1]
    cplx velocity(double t) const;  // dz/dt
    Segment reversed() const;
};

// Closed contour from the base point around the discriminant point `label`.
struct Loop {
    int label = 0;
    cplx base;
    std::vector<Segment> segments;
};

// Traversal order and each segment's direction reversed.
std::vector<Segment> reverse_chain(const std::vector<Segment>& chain);

// Loop around a single discriminant point: follow the tree path from the
// base, bypass each intermediate point on a positive half-circle where the
// arrival and departure marked points differ, run the full positive circle
// around the target, and return along the exact reversal of the outbound
// chain.  Marked point b^(1) sits at arc angle pi, b^(2) at angle 0.
Loop build_loop(const Configuration& config, const TreeMaps& maps, int label);
std::vector<Loop> build_initial_loops(const Configuration& config, const SpanningTree& tree);

// Minimum sampled distance from the loop to any discriminant point, each
// arc's own center excluded (that distance is R by construction).
double min_clearance(const Loop& loop, const Configuration& config, int samples_per_segment = 256);

}  // namespace curvemono
