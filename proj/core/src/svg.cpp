#include "curvemono/svg.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace curvemono {

namespace {

std::string fmt(double v) {
    std::ostringstream os;
    os.precision(8);
    os << v;
    return os.str();
}

}  // namespace

std::string render_svg(const Configuration& config, const SpanningTree& tree,
                       const std::vector<Loop>& loops) {
    double xmin = config.base.real(), xmax = config.base.real();
    double ymin = config.base.imag(), ymax = config.base.imag();
    for (const auto& p : config.points) {
        xmin = std::min(xmin, p.real() - config.radius);
        xmax = std::max(xmax, p.real() + config.radius);
        ymin = std::min(ymin, p.imag() - config.radius);
        ymax = std::max(ymax, p.imag() + config.radius);
    }
    const double margin = 0.1 * std::max({xmax - xmin, ymax - ymin, 1e-6});
    xmin -= margin;
    xmax += margin;
    ymin -= margin;
    ymax += margin;

    // SVG's y axis points down; flip the imaginary axis
    auto X = [&](cplx z) { return z.real(); };
    auto Y = [&](cplx z) { return (ymax + ymin) - z.imag(); };
    const double stroke = (xmax - xmin) / 400.0;

    std::ostringstream svg;
    svg << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
        << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" viewBox=\""
        << fmt(xmin) << " " << fmt(ymin) << " " << fmt(xmax - xmin) << " " << fmt(ymax - ymin)
        << "\">\n";

    // loop arcs first so circles and labels draw on top
    for (const auto& loop : loops) {
        for (const auto& seg : loop.segments) {
            if (seg.kind == Segment::Kind::Line) continue;
            const double sweep = seg.th1 - seg.th0;
            if (std::abs(sweep) >= 2.0 * 3.141592653589793 - 1e-9) continue;  // full circle == point circle
            const cplx a = seg.start(), b = seg.end();
            // y-flip turns counterclockwise sweeps into SVG sweep flag 0
            const int flag = sweep > 0 ? 0 : 1;
            svg << "  <path d=\"M " << fmt(X(a)) << " " << fmt(Y(a)) << " A " << fmt(seg.radius)
                << " " << fmt(seg.radius) << " 0 0 " << flag << " " << fmt(X(b)) << " "
                << fmt(Y(b)) << "\" fill=\"none\" stroke=\"#c05020\" stroke-width=\""
                << fmt(stroke) << "\"/>\n";
        }
    }

    for (const auto& [p, c] : tree.edges) {
        const cplx a = config.points[p - 1], b = config.points[c - 1];
        svg << "  <line x1=\"" << fmt(X(a)) << "\" y1=\"" << fmt(Y(a)) << "\" x2=\"" << fmt(X(b))
            << "\" y2=\"" << fmt(Y(b)) << "\" stroke=\"#808080\" stroke-width=\"" << fmt(stroke)
            << "\"/>\n";
    }

    for (int k = 1; k <= config.size(); ++k) {
        const cplx b = config.points[k - 1];
        svg << "  <circle cx=\"" << fmt(X(b)) << "\" cy=\"" << fmt(Y(b)) << "\" r=\""
            << fmt(config.radius) << "\" fill=\"none\" stroke=\"#2040c0\" stroke-width=\""
            << fmt(stroke) << "\"/>\n";
        for (int side = 1; side <= 2; ++side) {
            const cplx m = config.marked(k, side);
            svg << "  <circle cx=\"" << fmt(X(m)) << "\" cy=\"" << fmt(Y(m)) << "\" r=\""
                << fmt(2.0 * stroke) << "\" fill=\"#000000\"/>\n";
        }
        svg << "  <text x=\"" << fmt(X(b)) << "\" y=\"" << fmt(Y(b)) << "\" font-size=\""
            << fmt(config.radius * 0.8) << "\" text-anchor=\"middle\" dominant-baseline=\"middle\">"
            << k << "</text>\n";
    }

    const double sq = 3.0 * stroke;
    svg << "  <rect x=\"" << fmt(X(config.base) - sq) << "\" y=\"" << fmt(Y(config.base) - sq)
        << "\" width=\"" << fmt(2 * sq) << "\" height=\"" << fmt(2 * sq)
        << "\" fill=\"#000000\"/>\n";
    svg << "</svg>\n";
    return svg.str();
}

}  // namespace curvemono
