#include "curvemono/fundgroup.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

namespace curvemono {

namespace {
constexpr double pi = std::numbers::pi;
}

TreeAnalysis classify_tree(const Configuration& config, const SpanningTree& tree) {
    const TreeMaps maps = tree_maps(config, tree);
    TreeAnalysis out;
    for (int k = 1; k <= config.size(); ++k) {
        if (maps.arrival_side[k] == 0 && k != maps.root) continue;  // not in the tree
        if (maps.children[k].empty() && k != maps.root) out.endpoints.push_back(k);

        const int arr = maps.arrival_side[k];
        const int far = 3 - arr;
        int per_side[3] = {0, 0, 0};
        for (int c : maps.children[k]) ++per_side[maps.departure(k, c)];

        // a junction (node) is a marked point where >= 2 branches separate;
        // a far-side departure also passes through the near marked point as
        // one bundle
        if (per_side[arr] + (per_side[far] > 0 ? 1 : 0) >= 2) out.nodes.emplace_back(k, arr);
        if (per_side[far] >= 2) out.nodes.emplace_back(k, far);

        // a v-point passes straight through one marked point: arrival and
        // some departure coincide
        if (k != maps.root && per_side[arr] >= 1) out.vpoints.emplace_back(k, arr);
    }
    std::sort(out.endpoints.begin(), out.endpoints.end());
    return out;
}

namespace {

// counterclockwise angle of direction v against direction ref, in (0, 2pi]
double ccw_angle(cplx ref, cplx v) {
    double a = std::fmod(std::arg(v) - std::arg(ref), 2.0 * pi);
    if (a <= 0.0) a += 2.0 * pi;
    return a;
}

struct StringBuilder {
    const Configuration& config;
    const TreeMaps& maps;
    std::vector<JunctionTrace>* trace;

    cplx tangent(int side) const {
        // direction of the positively-oriented circle at the marked point
        return cplx(0.0, 1.0) * std::exp(cplx(0.0, side == 1 ? pi : 0.0));
    }

    std::vector<int> sorted_concat(Junction at,
                                   std::vector<std::tuple<double, int, std::vector<int>>>& items) const {
        std::sort(items.begin(), items.end(), [](const auto& a, const auto& b) {
            if (std::get<0>(a) != std::get<0>(b)) return std::get<0>(a) < std::get<0>(b);
            return std::get<1>(a) < std::get<1>(b);
        });
        // record the branch sequences meeting here, without the junction
        // point's own trailing singleton
        std::vector<std::vector<int>> branches;
        for (const auto& it : items)
            if (!(std::get<1>(it) == at.first && std::get<2>(it) == std::vector<int>{at.first}))
                branches.push_back(std::get<2>(it));
        if (trace && branches.size() >= 2) trace->push_back({at, std::move(branches)});
        std::vector<int> out;
        for (const auto& it : items)
            for (int v : std::get<2>(it)) out.push_back(v);
        return out;
    }

    std::vector<int> sequence(int j) const {
        const int arr = maps.arrival_side[j];
        const int far = 3 - arr;
        std::vector<int> near_children, far_children;
        for (int c : maps.children[j])
            (maps.departure(j, c) == arr ? near_children : far_children).push_back(c);

        // branches leaving from the marked point opposite the arrival
        std::vector<int> far_seq;
        bool have_far = false;
        if (!far_children.empty()) {
            const cplx mp = config.marked(j, far);
            const cplx ref = config.marked(j, arr) - mp;  // back through the center
            std::vector<std::tuple<double, int, std::vector<int>>> items;
            for (int c : far_children) {
                const cplx dir = config.marked(c, maps.arrival_side[c]) - mp;
                items.emplace_back(ccw_angle(ref, dir), c, sequence(c));
            }
            // the junction's own circle: direction toward the center is the
            // reversed reference, i.e. angle exactly 2pi -- always last
            items.emplace_back(ccw_angle(ref, config.points[j - 1] - mp), j, std::vector<int>{j});
            far_seq = sorted_concat({j, far}, items);
            have_far = true;
        }

        if (!near_children.empty() || j == maps.root) {
            const cplx mp = config.marked(j, arr);
            const cplx ref = (j == maps.root)
                                 ? cplx(-1.0, 0.0)  // leftward horizontal at the base
                                 : config.marked(maps.parent[j], maps.departure(maps.parent[j], j)) - mp;
            std::vector<std::tuple<double, int, std::vector<int>>> items;
            for (int c : near_children) {
                const cplx dir = config.marked(c, maps.arrival_side[c]) - mp;
                items.emplace_back(ccw_angle(ref, dir), c, sequence(c));
            }
            if (have_far)
                // the whole far-side bundle enters along the bypass half-circle
                items.emplace_back(ccw_angle(ref, tangent(arr)), j, far_seq);
            else
                items.emplace_back(ccw_angle(ref, config.points[j - 1] - mp), j,
                                   std::vector<int>{j});
            return sorted_concat({j, arr}, items);
        }
        return have_far ? far_seq : std::vector<int>{j};
    }
};

}  // namespace

TreeString tree_string(const Configuration& config, const SpanningTree& tree) {
    const TreeMaps maps = tree_maps(config, tree);
    TreeString out;
    StringBuilder builder{config, maps, &out.junctions};
    out.order = builder.sequence(maps.root);
    if (static_cast<int>(out.order.size()) != config.size())
        throw numerical_error("tree_string: sequence does not cover all labels");
    return out;
}

GeneratorSet rearrange(const std::vector<Permutation>& initial, const std::vector<int>& order) {
    const int n = static_cast<int>(initial.size());
    {
        std::vector<bool> seen(n + 1, false);
        if (static_cast<int>(order.size()) != n)
            throw std::invalid_argument("rearrange: order must be a permutation of 1..n");
        for (int v : order) {
            if (v < 1 || v > n || seen[v])
                throw std::invalid_argument("rearrange: order must be a permutation of 1..n");
            seen[v] = true;
        }
    }

    GeneratorSet out;
    out.generators = initial;
    std::vector<int> ts = order;
    while (ts.size() > 1) {
        const int m = *std::max_element(ts.begin(), ts.end());
        size_t i = std::find(ts.begin(), ts.end(), m) - ts.begin();
        while (i + 1 != ts.size()) {
            const int k = ts[i + 1];
            Permutation& pm = out.generators[m - 1];
            const Permutation& pk = out.generators[k - 1];
            pm = pk.compose(pm).compose(pk.inverse());
            out.conjugations.emplace_back(m, k);
            std::swap(ts[i], ts[i + 1]);
            ++i;
        }
        ts.pop_back();
    }

    const int N = initial.empty() ? 0 : initial.front().size();
    Permutation product = Permutation::identity(N);
    for (const auto& g : out.generators) product = product.compose(g);
    out.at_infinity = product.inverse();
    return out;
}

GenusReport genus(const std::vector<Permutation>& generators, const Permutation& at_infinity) {
    GenusReport report;
    report.sheets = at_infinity.size();
    auto account = [&](const Permutation& p) {
        for (int len : p.cycle_type())
            if (len >= 2) {
                report.branching.push_back(len - 1);
                ++report.branch_points;
            }
    };
    for (const auto& g : generators) account(g);
    account(at_infinity);

    int total = 0;
    for (int b : report.branching) total += b;
    if (total % 2 != 0)
        throw numerical_error("genus: odd total branching number (inconsistent monodromy)");
    report.genus = 1 - report.sheets + total / 2;
    if (report.genus < 0)
        throw numerical_error("genus: negative genus (inconsistent monodromy)");
    return report;
}

}  // namespace curvemono
