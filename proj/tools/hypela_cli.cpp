// hypela: sampling, closed-curve tables, self-intersections, Dirichlet solving and verification
// for elasticae in the hyperbolic plane.

#include "hypela/closed_curves.hpp"
#include "hypela/dirichlet.hpp"
#include "hypela/elastica.hpp"
#include "hypela/errors.hpp"
#include "hypela/oracle.hpp"
#include "hypela/verification.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <limits>
#include <numbers>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

using json = nlohmann::json;

namespace {

constexpr double pi = std::numbers::pi;

std::string fmt(double v)
{
    if (std::isnan(v)) {
        return "nan";
    }
    if (std::isinf(v)) {
        return v > 0 ? "inf" : "-inf";
    }
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

// Decimal or p/q.
double parse_number(const std::string& text)
{
    auto to_double = [&](const std::string& part) {
        std::size_t used = 0;
        double v = 0.0;
        try {
            v = std::stod(part, &used);
        } catch (const std::exception&) {
            throw hypela::domain_error("not a number: '" + text + "'");
        }
        if (used != part.size()) {
            throw hypela::domain_error("not a number: '" + text + "'");
        }
        return v;
    };
    auto slash = text.find('/');
    if (slash == std::string::npos) {
        return to_double(text);
    }
    double num = to_double(text.substr(0, slash));
    double den = to_double(text.substr(slash + 1));
    if (den == 0.0) {
        throw hypela::domain_error("zero denominator in '" + text + "'");
    }
    return num / den;
}

std::vector<double> parse_list(const std::string& text, std::size_t expected, const char* what)
{
    std::vector<double> values;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        values.push_back(parse_number(item));
    }
    if (values.size() != expected) {
        throw hypela::domain_error(std::string(what) + ": expected " + std::to_string(expected) +
                                   " comma separated values");
    }
    return values;
}

struct Globals {
    std::string format;
    std::string out;
    double tol = 1e-10;
    unsigned threads = 0;
};

// Stdout unless --out was given.
class Sink {
public:
    explicit Sink(const std::string& path)
    {
        if (!path.empty()) {
            file_.open(path);
            if (!file_) {
                throw hypela::domain_error("cannot open output file '" + path + "'");
            }
        }
    }
    std::ostream& stream() { return file_.is_open() ? static_cast<std::ostream&>(file_) : std::cout; }

private:
    std::ofstream file_;
};

std::string resolve_format(const Globals& g, const std::string& fallback, std::initializer_list<const char*> allowed,
                           const char* command)
{
    std::string f = g.format.empty() ? fallback : g.format;
    for (const char* a : allowed) {
        if (f == a) {
            return f;
        }
    }
    throw hypela::domain_error(std::string("format '") + f + "' is not available for " + command);
}

const char* kind_name(hypela::CoefficientKind kind)
{
    switch (kind) {
    case hypela::CoefficientKind::orbitlike:
        return "orbitlike";
    case hypela::CoefficientKind::wavelike_a3_nonzero:
        return "wavelike";
    case hypela::CoefficientKind::wavelike_a3_zero:
        return "wavelike_a3_zero";
    }
    return "unknown";
}

json coeffs_json(const hypela::CurveCoefficients& c)
{
    return json{{"a1", c.a1}, {"a2", c.a2}, {"a3", c.a3}, {"b1", c.b1},
                {"b2", c.b2}, {"b3", c.b3}, {"kind", kind_name(c.kind)}};
}

json state_json(double s, const hypela::CurveState& st)
{
    return json{{"s", s}, {"gamma1", st.gamma1}, {"gamma2", st.gamma2}, {"phi", st.phi}, {"kappa", st.kappa}};
}

// ---- SVG -------------------------------------------------------------------------------------

struct Box {
    double x0 = std::numeric_limits<double>::infinity();
    double x1 = -std::numeric_limits<double>::infinity();
    double y0 = std::numeric_limits<double>::infinity();
    double y1 = -std::numeric_limits<double>::infinity();

    void add(double x, double y)
    {
        x0 = std::min(x0, x);
        x1 = std::max(x1, x);
        y0 = std::min(y0, y);
        y1 = std::max(y1, y);
    }
    bool empty() const { return !(x1 >= x0 && y1 >= y0); }
};

// Bounding box of the enclosure intersected with the upper half-plane. The cone is unbounded and
// is cut to the height of the samples.
Box enclosure_box(const hypela::Enclosure& e, const std::vector<hypela::CurveState>& states)
{
    Box box;
    if (e.kind == hypela::EnclosureKind::cone) {
        double top = 0.0;
        for (const auto& st : states) {
            top = std::max(top, st.gamma2);
        }
        if (top <= 0.0) {
            top = 1.0;
        }
        box.add(e.apex_x - e.slope * top, 0.0);
        box.add(e.apex_x + e.slope * top, top);
        return box;
    }
    box.add(e.Q1.x1 - e.R1, std::max(0.0, e.Q1.x2 - e.R1));
    box.add(e.Q1.x1 + e.R1, e.Q1.x2 + e.R1);
    return box;
}

void write_svg(std::ostream& os, Box box, const std::vector<hypela::CurveState>& states,
               const std::optional<hypela::Enclosure>& draw, const std::vector<hypela::HyperbolicPoint>& marks)
{
    if (box.empty()) {
        box = Box{};
        box.add(-1.0, 0.0);
        box.add(1.0, 2.0);
    }
    double w = box.x1 - box.x0;
    double h = box.y1 - box.y0;
    double side = std::max({w, h, 1e-12});
    double mx = 0.05 * std::max(w, 1e-12 * side);
    double my = 0.05 * std::max(h, 1e-12 * side);
    double vx = box.x0 - mx;
    double vy = -(box.y1 + my); // y axis points down in SVG
    double vw = w + 2.0 * mx;
    double vh = h + 2.0 * my;
    double dot = 0.006 * std::max(vw, vh);

    os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"800\" height=\"" << fmt(std::round(800.0 * vh / vw))
       << "\" viewBox=\"" << fmt(vx) << ' ' << fmt(vy) << ' ' << fmt(vw) << ' ' << fmt(vh) << "\">\n";
    os << "<g fill=\"none\" stroke-width=\"1\" vector-effect=\"non-scaling-stroke\">\n";
    os << "<line x1=\"" << fmt(vx) << "\" y1=\"0\" x2=\"" << fmt(vx + vw)
       << "\" y2=\"0\" stroke=\"#999\" vector-effect=\"non-scaling-stroke\"/>\n";
    if (draw) {
        const auto& e = *draw;
        auto circle = [&](const hypela::HyperbolicPoint& c, double r) {
            os << "<circle cx=\"" << fmt(c.x1) << "\" cy=\"" << fmt(-c.x2) << "\" r=\"" << fmt(r)
               << "\" stroke=\"#4a7\" stroke-dasharray=\"4 3\" vector-effect=\"non-scaling-stroke\"/>\n";
        };
        if (e.kind == hypela::EnclosureKind::cone) {
            double top = box.y1;
            os << "<polyline points=\"" << fmt(e.apex_x - e.slope * top) << ',' << fmt(-top) << ' ' << fmt(e.apex_x)
               << ",0 " << fmt(e.apex_x + e.slope * top) << ',' << fmt(-top)
               << "\" stroke=\"#4a7\" stroke-dasharray=\"4 3\" vector-effect=\"non-scaling-stroke\"/>\n";
        } else {
            circle(e.Q1, e.R1);
            if (e.R2 > 0.0) {
                circle(e.Q2, e.R2);
            }
        }
    }
    os << "<polyline stroke=\"#236\" vector-effect=\"non-scaling-stroke\" points=\"";
    for (std::size_t i = 0; i < states.size(); ++i) {
        os << (i ? " " : "") << fmt(states[i].gamma1) << ',' << fmt(-states[i].gamma2);
    }
    os << "\"/>\n</g>\n";
    for (const auto& p : marks) {
        os << "<circle cx=\"" << fmt(p.x1) << "\" cy=\"" << fmt(-p.x2) << "\" r=\"" << fmt(dot)
           << "\" fill=\"#c33\"/>\n";
    }
    os << "</svg>\n";
}

// ---- sample ----------------------------------------------------------------------------------

struct SampleArgs {
    std::string family = "orbitlike";
    std::string k;
    std::string rotation;
    std::string s_star = "0";
    std::string coeffs;
    std::string initial;
    std::optional<std::string> s_from;
    std::optional<std::string> s_to;
    int count = 1000;
    bool enclosure = false;
};

int cmd_sample(const Globals& g, const SampleArgs& a)
{
    std::string format = resolve_format(g, "csv", {"csv", "json", "svg"}, "sample");
    if (a.count < 0) {
        throw hypela::domain_error("--count must be >= 0");
    }
    bool orbit = a.family == "orbitlike";
    if (!orbit && a.family != "wavelike") {
        throw hypela::domain_error("--family must be orbitlike or wavelike");
    }
    if (!a.k.empty() && !a.rotation.empty()) {
        throw hypela::domain_error("give either --k or --rotation");
    }
    if (!a.coeffs.empty() && !a.initial.empty()) {
        throw hypela::domain_error("give either --coeffs or --initial");
    }
    double k = 0.8;
    if (!a.rotation.empty()) {
        if (!orbit) {
            throw hypela::domain_error("--rotation applies to the orbitlike family");
        }
        // Rotation per curvature period as a fraction of a full turn.
        k = hypela::solve_k_for_rotation(2.0 * pi * parse_number(a.rotation));
    } else if (!a.k.empty()) {
        k = parse_number(a.k);
    }
    double s_star = parse_number(a.s_star);

    hypela::CurveState start{0.0, 1.0, 0.0, 0.0, 0.0};
    if (!a.initial.empty()) {
        auto v = parse_list(a.initial, 3, "--initial");
        start.gamma1 = v[0];
        start.gamma2 = v[1];
        start.phi = v[2];
    }
    auto build = [&]() {
        if (!a.coeffs.empty()) {
            auto v = parse_list(a.coeffs, 6, "--coeffs");
            hypela::CurveCoefficients c{v[0], v[1], v[2], v[3], v[4], v[5], hypela::CoefficientKind::orbitlike};
            if (orbit) {
                return hypela::Elastica::orbitlike(hypela::OrbitlikeParams(k, s_star), c);
            }
            c.kind = v[2] == 0.0 ? hypela::CoefficientKind::wavelike_a3_zero
                                 : hypela::CoefficientKind::wavelike_a3_nonzero;
            return hypela::Elastica::wavelike(hypela::WavelikeParams(k, s_star), c);
        }
        if (orbit) {
            return hypela::Elastica::orbitlike_through(hypela::OrbitlikeParams(k, s_star), start);
        }
        return hypela::Elastica::wavelike_through(hypela::WavelikeParams(k, s_star), start);
    };
    hypela::Elastica curve = build();

    double s_from = a.s_from ? parse_number(*a.s_from) : 0.0;
    double s_to = a.s_to ? parse_number(*a.s_to) : s_from + 2.0 * curve.period();
    if (!(s_to > s_from)) {
        throw hypela::domain_error("--s-to must exceed --s-from");
    }
    std::vector<double> grid;
    grid.reserve(a.count);
    for (int i = 0; i < a.count; ++i) {
        grid.push_back(a.count == 1 ? s_from : s_from + (s_to - s_from) * i / (a.count - 1));
    }
    std::vector<hypela::CurveState> states = hypela::sample_curve(curve, grid);
    for (const auto& st : states) {
        if (!std::isfinite(st.gamma1) || !std::isfinite(st.gamma2) || !std::isfinite(st.phi)) {
            throw hypela::numeric_failure("non-finite sample");
        }
    }

    Sink sink(g.out);
    std::ostream& os = sink.stream();
    if (format == "csv") {
        os << "s,gamma1,gamma2,phi,kappa\n";
        for (std::size_t i = 0; i < states.size(); ++i) {
            const auto& st = states[i];
            os << fmt(grid[i]) << ',' << fmt(st.gamma1) << ',' << fmt(st.gamma2) << ',' << fmt(st.phi) << ','
               << fmt(st.kappa) << '\n';
        }
    } else if (format == "json") {
        json samples = json::array();
        for (std::size_t i = 0; i < states.size(); ++i) {
            samples.push_back(state_json(grid[i], states[i]));
        }
        json doc{{"family", a.family},          {"k", k},
                 {"s_star", s_star},            {"mu", curve.mu()},
                 {"period", curve.period()},    {"coefficients", coeffs_json(curve.coefficients())},
                 {"samples", std::move(samples)}};
        os << doc.dump(1) << '\n';
    } else {
        hypela::Enclosure e = hypela::enclosure(curve);
        write_svg(os, enclosure_box(e, states), states, a.enclosure ? std::optional(e) : std::nullopt, {});
    }
    return 0;
}

// ---- table -----------------------------------------------------------------------------------

int cmd_table(const Globals& g, int max_n, bool published_only)
{
    std::string format = resolve_format(g, "csv", {"csv", "json"}, "table");
    if (max_n < 1) {
        throw hypela::domain_error("--max-n must be >= 1");
    }
    std::vector<std::pair<int, int>> rows;
    if (published_only) {
        for (const auto& mn : hypela::published_table_rows()) {
            if (mn.second <= max_n) {
                rows.push_back(mn);
            }
        }
    } else {
        rows = hypela::valid_mn_pairs(max_n);
    }
    auto records = hypela::enumerate_table(rows, g.threads);

    Sink sink(g.out);
    std::ostream& os = sink.stream();
    if (format == "csv") {
        os << "n,m,k,W,L,S\n";
        for (const auto& r : records) {
            os << r.n << ',' << r.m << ',' << fmt(r.k_mn) << ',' << fmt(r.willmore_W) << ',' << fmt(r.length_L) << ','
               << r.selfint_S << '\n';
        }
    } else {
        json arr = json::array();
        for (const auto& r : records) {
            arr.push_back(
                {{"n", r.n}, {"m", r.m}, {"k", r.k_mn}, {"W", r.willmore_W}, {"L", r.length_L}, {"S", r.selfint_S}});
        }
        os << arr.dump(1) << '\n';
    }
    return 0;
}

// ---- intersections ---------------------------------------------------------------------------

int cmd_intersections(const Globals& g, int m, int n)
{
    std::string format = resolve_format(g, "csv", {"csv", "json", "svg"}, "intersections");
    hypela::require_valid_mn(m, n);
    auto points = hypela::self_intersections(m, n);

    Sink sink(g.out);
    std::ostream& os = sink.stream();
    if (format == "csv") {
        os << "l,p,s,partner_s,x,y\n";
        for (const auto& p : points) {
            os << p.l << ',' << p.p << ',' << fmt(p.s) << ',' << fmt(p.partner_s) << ',' << fmt(p.point.x1) << ','
               << fmt(p.point.x2) << '\n';
        }
    } else if (format == "json") {
        json arr = json::array();
        for (const auto& p : points) {
            arr.push_back({{"l", p.l},
                           {"p", p.p},
                           {"s", p.s},
                           {"partner_s", p.partner_s},
                           {"x", p.point.x1},
                           {"y", p.point.x2},
                           {"separation", p.separation}});
        }
        os << arr.dump(1) << '\n';
    } else {
        hypela::Elastica curve = hypela::canonical_closed_curve(m, n);
        double L = n * curve.period();
        auto states = hypela::sample_curve(curve, hypela::uniform_grid(L, 400 * n + 1));
        std::vector<hypela::HyperbolicPoint> marks;
        for (const auto& p : points) {
            marks.push_back(p.point);
        }
        hypela::Enclosure e = hypela::enclosure(curve);
        write_svg(os, enclosure_box(e, states), states, e, marks);
    }
    return 0;
}

// ---- dirichlet -------------------------------------------------------------------------------

struct DirichletArgs {
    std::string a1 = "-1", a2 = "1", b1 = "1", b2 = "1";
    std::string phi_a = "0", phi_b = "0";
    double k_min = 0.02;
    double k_max = 0.998;
    int l_max = 40;
    int grid = 48;
    std::string orientation = "positive";
    int path_samples = 101;
};

int cmd_dirichlet(const Globals& g, const DirichletArgs& a)
{
    std::string format = resolve_format(g, "json", {"json", "csv"}, "dirichlet");
    hypela::DirichletProblem problem{parse_number(a.a1),    parse_number(a.a2),   parse_number(a.b1),
                                     parse_number(a.b2),    parse_number(a.phi_a), parse_number(a.phi_b)};
    hypela::SolveConfig cfg;
    cfg.k_min = a.k_min;
    cfg.k_max = a.k_max;
    cfg.l_max = a.l_max;
    cfg.grid = a.grid;
    cfg.tol = g.tol;
    cfg.threads = g.threads;
    if (a.orientation == "positive") {
        cfg.orientation = hypela::OrientationSearch::positive;
    } else if (a.orientation == "negative") {
        cfg.orientation = hypela::OrientationSearch::negative;
    } else if (a.orientation == "both") {
        cfg.orientation = hypela::OrientationSearch::both;
    } else {
        throw hypela::domain_error("--orientation must be positive, negative or both");
    }
    if (a.path_samples < 0) {
        throw hypela::domain_error("--path-samples must be >= 0");
    }
    hypela::DirichletResult result = hypela::solve_dirichlet(problem, cfg);

    Sink sink(g.out);
    std::ostream& os = sink.stream();
    if (format == "csv") {
        os << "k,s_star,branch_l,length_L,residual_r1,residual_r2,symmetric,orientation,sigma_sign,endpoint_error\n";
        for (const auto& s : result.solutions) {
            os << fmt(s.k) << ',' << fmt(s.s_star) << ',' << s.branch_l << ',' << fmt(s.length_L) << ','
               << fmt(s.residual_r1) << ',' << fmt(s.residual_r2) << ',' << (s.symmetric ? 1 : 0) << ','
               << s.orientation << ',' << s.sigma_sign << ',' << fmt(s.endpoint_error) << '\n';
        }
        return 0;
    }
    json arr = json::array();
    for (const auto& s : result.solutions) {
        std::vector<hypela::CurveState> path;
        std::vector<double> grid = a.path_samples > 0 ? hypela::uniform_grid(s.length_L, a.path_samples)
                                                      : std::vector<double>{};
        for (double t : grid) {
            path.push_back(hypela::evaluate_solution(s, t));
        }
        hypela::unwrap_phi(path);
        json pj = json::array();
        for (std::size_t i = 0; i < path.size(); ++i) {
            pj.push_back(state_json(grid[i], path[i]));
        }
        arr.push_back({{"k", s.k},
                       {"s_star", s.s_star},
                       {"branch_l", s.branch_l},
                       {"length_L", s.length_L},
                       {"coefficients", coeffs_json(s.coeffs)},
                       {"residual_r1", s.residual_r1},
                       {"residual_r2", s.residual_r2},
                       {"symmetric", s.symmetric},
                       {"orientation", s.orientation},
                       {"sigma_sign", s.sigma_sign},
                       {"endpoint_error", s.endpoint_error},
                       {"path", std::move(pj)}});
    }
    os << arr.dump(1) << '\n';
    return 0;
}

// ---- verify ----------------------------------------------------------------------------------

int cmd_verify(const Globals& g, const std::string& suite, bool timings)
{
    std::string format = resolve_format(g, "json", {"json", "csv"}, "verify");
    auto reports = hypela::run_verification(suite, 20240611, g.threads);
    bool ok = std::all_of(reports.begin(), reports.end(), [](const auto& r) { return r.passed(); });

    Sink sink(g.out);
    std::ostream& os = sink.stream();
    if (format == "csv") {
        os << "suite,check,max_error,tolerance,samples,passed\n";
        for (const auto& r : reports) {
            for (const auto& c : r.checks) {
                std::string name = c.name;
                std::replace(name.begin(), name.end(), '"', '\'');
                os << r.suite << ",\"" << name << "\"," << fmt(c.max_error) << ',' << fmt(c.tolerance) << ','
                   << c.samples << ',' << (c.passed() ? 1 : 0) << '\n';
            }
        }
    } else {
        json suites = json::array();
        for (const auto& r : reports) {
            json checks = json::array();
            for (const auto& c : r.checks) {
                checks.push_back({{"name", c.name},
                                  {"max_error", c.max_error},
                                  {"tolerance", c.tolerance},
                                  {"samples", c.samples},
                                  {"passed", c.passed()}});
            }
            json sj{{"suite", r.suite}, {"passed", r.passed()}, {"checks", std::move(checks)}};
            if (timings) {
                sj["seconds"] = r.seconds;
            }
            suites.push_back(std::move(sj));
        }
        os << json{{"passed", ok}, {"suites", std::move(suites)}}.dump(1) << '\n';
    }
    for (const auto& r : reports) {
        for (const auto& c : r.checks) {
            if (!c.passed()) {
                std::cerr << "FAIL " << r.suite << ": " << c.name << " (error " << fmt(c.max_error) << ", tolerance "
                          << fmt(c.tolerance) << ")\n";
            }
        }
    }
    return ok ? 0 : 1;
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Elasticae in the hyperbolic plane: explicit curves, closed-curve tables, Dirichlet problems"};
    app.require_subcommand(1);
    app.fallthrough();

    Globals g;
    app.add_option("--format", g.format, "csv, json or svg (default depends on the command)")
        ->check(CLI::IsMember({"csv", "json", "svg"}));
    app.add_option("--out", g.out, "Output file (default stdout)");
    app.add_option("--tol", g.tol, "Residual tolerance for the Dirichlet solver")->capture_default_str();
    app.add_option("--threads", g.threads, "Worker threads (0: HYPELA_THREADS or hardware)")->capture_default_str();

    SampleArgs sa;
    auto* sample = app.add_subcommand("sample", "Sample an orbitlike or wavelike elastica");
    sample->add_option("--family", sa.family, "orbitlike or wavelike")->capture_default_str();
    sample->add_option("--k", sa.k, "Elliptic modulus (default 0.8)");
    sample->add_option("--rotation", sa.rotation, "Orbitlike: rotation per curvature period in turns, e.g. 2/3");
    sample->add_option("--s-star", sa.s_star, "Curvature phase shift")->capture_default_str();
    sample->add_option("--coeffs", sa.coeffs, "a1,a2,a3,b1,b2,b3");
    sample->add_option("--initial", sa.initial, "gamma1,gamma2,phi at s = 0 (default 0,1,0)");
    sample->add_option("--s-from", sa.s_from, "Start parameter (default 0)");
    sample->add_option("--s-to", sa.s_to, "End parameter (default two curvature periods)");
    sample->add_option("--count", sa.count, "Number of samples")->capture_default_str();
    sample->add_flag("--enclosure", sa.enclosure, "SVG: draw the enclosure circles or cone");

    int max_n = 20;
    bool published_only = false;
    auto* table = app.add_subcommand("table", "Closed curves gamma_{m,n} with k, W, L, S");
    table->add_option("--max-n", max_n, "Largest n")->capture_default_str();
    table->add_flag("--published-only", published_only, "Only the 26 rows of the published table");

    int im = 0, in = 0;
    auto* inter = app.add_subcommand("intersections", "Self-intersections of gamma_{m,n}");
    inter->add_option("m", im, "Turns")->required();
    inter->add_option("n", in, "Curvature periods")->required();

    DirichletArgs da;
    auto* dir = app.add_subcommand("dirichlet", "Solve the orbitlike Dirichlet problem");
    dir->add_option("--a1", da.a1)->capture_default_str();
    dir->add_option("--a2", da.a2)->capture_default_str();
    dir->add_option("--b1", da.b1)->capture_default_str();
    dir->add_option("--b2", da.b2)->capture_default_str();
    dir->add_option("--phi-a", da.phi_a)->capture_default_str();
    dir->add_option("--phi-b", da.phi_b)->capture_default_str();
    dir->add_option("--k-min", da.k_min)->capture_default_str();
    dir->add_option("--k-max", da.k_max)->capture_default_str();
    dir->add_option("--l-max", da.l_max, "Largest branch index")->capture_default_str();
    dir->add_option("--grid", da.grid, "Starts per axis")->capture_default_str();
    dir->add_option("--orientation", da.orientation, "positive, negative or both")->capture_default_str();
    dir->add_option("--path-samples", da.path_samples, "Path points per solution")->capture_default_str();

    std::string suite = "all";
    bool timings = false;
    auto* verify = app.add_subcommand("verify", "Run cross-check suites");
    verify->add_option("suite", suite, "all, special-functions, fundamental-system, oracle, closed-curves, dirichlet")
        ->capture_default_str();
    verify->add_flag("--timings", timings, "Include wall times in the JSON report");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (*sample) {
            return cmd_sample(g, sa);
        }
        if (*table) {
            return cmd_table(g, max_n, published_only);
        }
        if (*inter) {
            return cmd_intersections(g, im, in);
        }
        if (*dir) {
            return cmd_dirichlet(g, da);
        }
        return cmd_verify(g, suite, timings);
    } catch (const hypela::domain_error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    } catch (const hypela::numeric_failure& e) {
        std::cerr << "numeric failure: " << e.what() << '\n';
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    }
}
