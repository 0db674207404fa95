// Command-line front end: reads a curve description from JSON, runs the
// branching-structure pipeline and emits text blocks, a JSON report and/or
// an SVG diagram of the contour configuration.

#include <chrono>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "curvemono/fundgroup.hpp"
#include "curvemono/periods.hpp"
#include "curvemono/svg.hpp"

using json = nlohmann::ordered_json;
using namespace curvemono;

namespace {

struct Options {
    std::string input;
    double kappa = 1.0 / 2.1;
    int ng = 64;
    std::string json_path;
    std::string svg_path;
    bool quiet = false;
};

struct CurveDocument {
    BivariatePolynomial f;
    std::vector<BivariatePolynomial> differentials;
    std::optional<double> kappa;
    std::optional<int> ng;
};

BivariatePolynomial parse_coeffs(const json& j) {
    std::vector<std::vector<cplx>> a;
    for (const auto& row : j) {
        std::vector<cplx> r;
        for (const auto& entry : row) {
            if (!entry.is_array() || entry.size() != 2)
                throw std::invalid_argument("coefficients must be [re, im] pairs");
            r.emplace_back(entry[0].get<double>(), entry[1].get<double>());
        }
        a.push_back(std::move(r));
    }
    return BivariatePolynomial(std::move(a));
}

CurveDocument load_curve(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot open " + path);
    json doc = json::parse(in);
    CurveDocument out{parse_coeffs(doc.at("coeffs")), {}, {}, {}};
    if (doc.contains("kappa")) out.kappa = doc["kappa"].get<double>();
    if (doc.contains("ng")) out.ng = doc["ng"].get<int>();
    if (doc.contains("differentials"))
        for (const auto& d : doc["differentials"]) out.differentials.push_back(parse_coeffs(d));
    return out;
}

json to_json(cplx z) { return json::array({z.real(), z.imag()}); }

std::string show(cplx z) {
    std::ostringstream os;
    os.precision(15);
    os << z.real() << (z.imag() < 0 ? "" : "+") << z.imag() << "i";
    return os.str();
}

// everything the pipeline can produce; stages fill it incrementally
struct Pipeline {
    BivariatePolynomial f;
    double kappa;
    int ng;

    DiscriminantSet disc;
    Configuration config;
    SpanningTree tree;
    TreeAnalysis analysis;
    TreeString ts;
    std::vector<Loop> loops;
    MonodromyTable table;
    GeneratorSet gens;
    GenusReport report;

    void run_discriminant() { disc = discriminant_points(f); }
    void run_tree() {
        run_discriminant();
        config = configure(disc.points, kappa, disc.leading_zero);
        tree = minimal_spanning_tree(config);
        analysis = classify_tree(config, tree);
        ts = tree_string(config, tree);
    }
    void run_monodromy() {
        run_tree();
        loops = build_initial_loops(config, tree);
        table = monodromy(f, config, loops, ng);
        gens = rearrange(table.columns, ts.order);
        report = genus(gens.generators, gens.at_infinity);
    }
};

void print_pair_list(std::ostream& os, const char* name,
                     const std::vector<std::pair<int, int>>& v) {
    os << name << " =";
    for (const auto& [a, b] : v) os << " (" << a << "," << b << ")";
    os << "\n";
}

void print_columns(std::ostream& os, const char* name, const std::vector<Permutation>& cols) {
    os << name << " =\n";
    if (cols.empty()) return;
    for (int row = 1; row <= cols.front().size(); ++row) {
        os << " ";
        for (const auto& c : cols) os << " " << c(row);
        os << "\n";
    }
}

void print_report(std::ostream& os, const Pipeline& p, const std::string& stage) {
    os.precision(15);
    os << "points =\n";
    for (int k = 1; k <= p.config.size(); ++k)
        os << "  " << k << ": " << show(p.config.points[k - 1])
           << (p.config.leading_zero[k - 1] ? "  (leading coefficient zero)" : "") << "\n";
    os << "rho = " << p.config.rho << "\n";
    os << "base = " << show(p.config.base) << "  (label " << p.config.base_label << ")\n";
    if (p.config.spacing_warning)
        os << "warning: point spacing ratio below 1e-4, results may degrade\n";
    if (stage == "discriminant") return;

    print_pair_list(os, "paths", p.tree.edges);
    print_pair_list(os, "pathind", p.tree.selectors);
    os << "endpoints =";
    for (int e : p.analysis.endpoints) os << " " << e;
    os << "\n";
    print_pair_list(os, "nodes", p.analysis.nodes);
    print_pair_list(os, "vpoints", p.analysis.vpoints);
    os << "tree =";
    for (int v : p.ts.order) os << " " << v;
    os << "\n";
    if (stage == "tree") return;

    os << "ybase =\n";
    for (const auto& y : p.table.ybase) os << "  " << show(y) << "\n";
    print_columns(os, "monodromy (initial)", p.table.columns);
    print_columns(os, "monodromy (final)", p.gens.generators);
    os << "at_infinity =";
    if (p.gens.at_infinity.is_identity())
        os << " trivial";
    else
        for (int i = 1; i <= p.gens.at_infinity.size(); ++i) os << " " << p.gens.at_infinity(i);
    os << "\n";
    os << "genus = " << p.report.genus << "\n";
}

json report_json(const Pipeline& p, const std::string& stage) {
    json j;
    j["points"] = json::array();
    for (const auto& b : p.config.points) j["points"].push_back(to_json(b));
    j["leading_zero"] = p.config.leading_zero;
    j["rho"] = p.config.rho;
    j["kappa"] = p.config.kappa;
    j["radius"] = p.config.radius;
    j["base"] = to_json(p.config.base);
    j["base_label"] = p.config.base_label;
    j["warning"] = p.config.spacing_warning;
    if (stage == "discriminant") return j;

    j["paths"] = p.tree.edges;
    j["pathind"] = p.tree.selectors;
    j["endpoints"] = p.analysis.endpoints;
    j["nodes"] = p.analysis.nodes;
    j["vpoints"] = p.analysis.vpoints;
    j["tree_string"] = p.ts.order;
    if (stage == "tree") return j;

    j["ybase"] = json::array();
    for (const auto& y : p.table.ybase) j["ybase"].push_back(to_json(y));
    j["initial_monodromy"] = json::array();
    for (const auto& c : p.table.columns) j["initial_monodromy"].push_back(c.img);
    j["residuals"] = p.table.residuals;
    j["final_monodromy"] = json::array();
    for (const auto& g : p.gens.generators) j["final_monodromy"].push_back(g.img);
    j["conjugations"] = p.gens.conjugations;
    if (p.gens.at_infinity.is_identity())
        j["at_infinity"] = "trivial";
    else
        j["at_infinity"] = p.gens.at_infinity.img;
    j["branching"] = p.report.branching;
    j["branch_points"] = p.report.branch_points;
    j["genus"] = p.report.genus;
    return j;
}

int run(const std::string& command, const Options& opt) {
    CurveDocument doc = load_curve(opt.input);
    Pipeline p{doc.f, doc.kappa.value_or(opt.kappa), doc.ng.value_or(opt.ng)};

    std::string stage;
    if (command == "discriminant") {
        p.run_discriminant();
        p.config = configure(p.disc.points, p.kappa, p.disc.leading_zero);
        stage = "discriminant";
    } else if (command == "tree" || command == "plot") {
        p.run_tree();
        stage = "tree";
    } else {
        p.run_monodromy();
        stage = "full";
    }

    if (command == "plot" && opt.svg_path.empty())
        throw std::invalid_argument("plot requires --svg <path>");

    if (!opt.quiet) {
        if (command == "genus")
            std::cout << "genus = " << p.report.genus << "\n";
        else if (command == "periods") {
            if (doc.differentials.empty())
                throw std::invalid_argument("periods requires \"differentials\" in the curve file");
            p.loops = build_initial_loops(p.config, p.tree);
            std::cout.precision(15);
            for (size_t d = 0; d < doc.differentials.size(); ++d) {
                std::cout << "differential " << d + 1 << ":\n";
                for (const auto& loop : p.loops) {
                    auto vals = integrate_chain(p.f, {doc.differentials[d]}, loop.segments,
                                                p.table.ybase, p.ng);
                    std::cout << "  loop " << loop.label << ":";
                    for (const auto& v : vals) std::cout << " " << show(v);
                    std::cout << "\n";
                }
            }
        } else {
            print_report(std::cout, p, stage);
        }
    }

    if (!opt.json_path.empty()) {
        std::ofstream out(opt.json_path);
        if (!out) throw std::invalid_argument("cannot write " + opt.json_path);
        out << report_json(p, stage).dump(2) << "\n";
    }
    if (!opt.svg_path.empty()) {
        if (p.loops.empty()) p.loops = build_initial_loops(p.config, p.tree);
        std::ofstream out(opt.svg_path);
        if (!out) throw std::invalid_argument("cannot write " + opt.svg_path);
        out << render_svg(p.config, p.tree, p.loops);
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"branching structure of a plane algebraic curve"};
    app.require_subcommand(1);

    Options opt;
    std::vector<std::string> names = {"discriminant", "tree", "monodromy", "genus", "periods", "plot"};
    for (const auto& name : names) {
        auto* sub = app.add_subcommand(name);
        sub->add_option("input", opt.input, "curve JSON file")->required();
        sub->add_option("--kappa", opt.kappa, "circle radius factor R = kappa * rho");
        sub->add_option("--ng", opt.ng, "quadrature order per segment");
        sub->add_option("--json", opt.json_path, "write the JSON report here");
        sub->add_option("--svg", opt.svg_path, "write an SVG diagram here");
        sub->add_flag("--quiet", opt.quiet, "suppress text output");
    }

    CLI11_PARSE(app, argc, argv);

    const std::string command = app.get_subcommands().front()->get_name();
    try {
        return run(command, opt);
    } catch (const numerical_error& e) {
        std::cerr << "numerical failure: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}
