#include "curvemono/contour.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>

namespace curvemono {

namespace {
constexpr double pi = std::numbers::pi;
}

Segment Segment::line(cplx a, cplx b) {
    Segment s;
    s.kind = Kind::Line;
    s.z0 = a;
    s.z1 = b;
    return s;
}

Segment Segment::arc(cplx c, double r, double a0, double a1) {
    Segment s;
    s.kind = Kind::Arc;
    s.center = c;
    s.radius = r;
    s.th0 = a0;
    s.th1 = a1;
    return s;
}

cplx Segment::point(double t) const {
    if (kind == Kind::Line) return z0 + (z1 - z0) * t;
    return center + radius * std::exp(cplx(0.0, th0 + (th1 - th0) * t));
}

cplx Segment::start() const { return point(0.0); }
cplx Segment::end() const { return point(1.0); }

cplx Segment::velocity(double t) const {
    if (kind == Kind::Line) return z1 - z0;
    return cplx(0.0, th1 - th0) * radius * std::exp(cplx(0.0, th0 + (th1 - th0) * t));
}

Segment Segment::reversed() const {
    if (kind == Kind::Line) return line(z1, z0);
    return arc(center, radius, th1, th0);
}

std::vector<Segment> reverse_chain(const std::vector<Segment>& chain) {
    std::vector<Segment> out;
    out.reserve(chain.size());
    for (auto it = chain.rbegin(); it != chain.rend(); ++it) out.push_back(it->reversed());
    return out;
}

Loop build_loop(const Configuration& config, const TreeMaps& maps, int label) {
    // path of labels from the root down to `label`
    std::vector<int> path{label};
    while (path.front() != maps.root) path.insert(path.begin(), maps.parent[path.front()]);

    auto side_angle = [](int side) { return side == 1 ? pi : 0.0; };

    Loop loop;
    loop.label = label;
    loop.base = config.base;

    int at = maps.root, side = 1;
    for (size_t i = 1; i < path.size(); ++i) {
        const int next = path[i];
        const int dep = maps.departure(at, next);
        if (dep != side) {
            // positive half-circle bypass to the opposite marked point
            const double a0 = side_angle(side);
            loop.segments.push_back(Segment::arc(config.points[at - 1], config.radius, a0, a0 + pi));
        }
        loop.segments.push_back(
            Segment::line(config.marked(at, dep), config.marked(next, maps.arrival_side[next])));
        at = next;
        side = maps.arrival_side[next];
    }
    // full positive circle around the target, then the exact way back
    const double a0 = side_angle(side);
    const std::vector<Segment> outbound = loop.segments;
    loop.segments.push_back(Segment::arc(config.points[at - 1], config.radius, a0, a0 + 2.0 * pi));
    for (const auto& seg : reverse_chain(outbound)) loop.segments.push_back(seg);
    return loop;
}

std::vector<Loop> build_initial_loops(const Configuration& config, const SpanningTree& tree) {
    const TreeMaps maps = tree_maps(config, tree);
    std::vector<Loop> loops;
    loops.reserve(config.size());
    for (int k = 1; k <= config.size(); ++k) loops.push_back(build_loop(config, maps, k));
    return loops;
}

double min_clearance(const Loop& loop, const Configuration& config, int samples_per_segment) {
    double best = std::numeric_limits<double>::infinity();
    for (const auto& seg : loop.segments) {
        for (int s = 0; s <= samples_per_segment; ++s) {
            const cplx z = seg.point(double(s) / samples_per_segment);
            for (int k = 0; k < config.size(); ++k) {
                if (seg.kind == Segment::Kind::Arc && std::abs(seg.center - config.points[k]) < 1e-12)
                    continue;  // the arc's own center is at distance R by construction
                best = std::min(best, std::abs(z - config.points[k]));
            }
        }
    }
    return best;
}

}  // namespace curvemono
