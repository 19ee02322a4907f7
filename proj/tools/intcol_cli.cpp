#include "intcol/edge_coloring.hpp"
#include "intcol/generators.hpp"
#include "intcol/io.hpp"
#include "intcol/kernels.hpp"
#include "intcol/oracles.hpp"
#include "intcol/thickness.hpp"
#include "intcol/timetable.hpp"
#include "intcol/verify.hpp"

#include "CLI11.hpp"

#include <omp.h>

#include <chrono>
#include <fstream>
#include <iostream>

using namespace intcol;

namespace {

constexpr int kOk = 0;
constexpr int kFailed = 1;
constexpr int kError = 2;

struct Options {
    std::string out;
    std::uint64_t seed = 1;
};

void emit(const Options& o, const Json& j)
{
    const std::string text = j.dump(2) + "\n";
    if (o.out.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream f(o.out, std::ios::binary);
    if (!f)
        throw ParseError("cannot write '" + o.out + "'");
    f << text;
}

Multigraph load_graph(const std::string& path) { return parse_graph(read_file(path)); }

std::optional<EdgeColoring> class1_coloring(const Multigraph& g)
{
    if (auto cert = bipartition(g))
        return konig_color(g, *cert);
    if (g.is_simple()) {
        EdgeColoring c = vizing_color(g);
        if (c.distinct_colors() <= g.max_degree())
            return c;
    }
    if (g.edge_count() <= 20)
        return find_edge_coloring(g, g.max_degree());
    return std::nullopt;
}

EdgeColoring run_color(const Multigraph& g, const std::string& method)
{
    if (method == "konig") {
        const auto cert = bipartition(g);
        if (!cert)
            throw PreconditionError("konig: graph is not bipartite");
        return konig_color(g, *cert);
    }
    if (method == "vizing")
        return vizing_color(g);
    if (method == "shannon")
        return shannon_color(g);
    if (method == "exact")
        return exact_chromatic_index(g).witness;
    if (method == "subcubic" || method == "kernel:subcubic") {
        if (g.max_degree() > 3)
            throw PreconditionError("subcubic: maximum degree exceeds 3");
        const auto c3 = class1_coloring(g);
        if (!c3 || c3->distinct_colors() > 3)
            throw PreconditionError("subcubic: no proper 3-edge-coloring found");
        return color_subcubic(g, *c3);
    }
    if (method == "kernel:forest")
        return color_forest(g);
    if (method == "kernel:cactus")
        return color_cactus(g);
    if (method == "kernel:low_even") {
        const auto cert = bipartition(g);
        if (!cert)
            throw PreconditionError("low_even: graph is not bipartite");
        return color_low_even_bipartite(g, *cert);
    }
    if (method == "kernel:interval") {
        const auto c = exact_interval_colorable(g);
        if (!c)
            throw PreconditionError("graph is not interval colorable");
        return *c;
    }
    throw PreconditionError("unknown coloring method '" + method + "'");
}

int cmd_gen(const Options& o, const std::string& spec_text, const std::string& spec_file, const std::string& format)
{
    FamilySpec spec = spec_file.empty() ? FamilySpec::parse(spec_text, o.seed)
                                        : family_spec_from_json(Json::parse(read_file(spec_file)));
    const Generated g = generate(spec);
    if (format == "text") {
        if (o.out.empty())
            std::cout << graph_to_text(g.graph);
        else
            std::ofstream(o.out, std::ios::binary) << graph_to_text(g.graph);
        return kOk;
    }
    Json j = graph_to_json(g.graph);
    j["spec"] = spec.to_string();
    j["seed"] = spec.seed;
    if (g.coloring)
        j["coloring"] = coloring_to_json(*g.coloring);
    if (g.bipartition) {
        std::vector<int> side;
        for (Side s : g.bipartition->side)
            side.push_back(s == Side::X ? 0 : 1);
        j["bipartition"] = side;
    }
    emit(o, j);
    return kOk;
}

int cmd_color(const Options& o, const std::string& path, const std::string& method)
{
    const Multigraph g = load_graph(path);
    const EdgeColoring c = normalize(run_color(g, method));
    const bool interval_expected = method == "subcubic" || method.rfind("kernel:", 0) == 0;
    const VerifyReport r = verify(g, c, interval_expected ? VerifyMode::interval : VerifyMode::proper);
    emit(o, {{"method", method},
             {"colors", c.distinct_colors()},
             {"coloring", coloring_to_json(c)},
             {"report", report_to_json(r)}});
    return r.ok(interval_expected ? VerifyMode::interval : VerifyMode::proper) ? kOk : kFailed;
}

int cmd_decompose(const Options& o, const std::string& path, const std::string& method, const std::string& coloring,
                  int cyclic)
{
    const Multigraph g = load_graph(path);
    Json j;
    Decomposition d;
    if (method == "cyclic" || (method == "general" && !coloring.empty())) {
        if (coloring.empty())
            throw PreconditionError("--method cyclic needs --coloring");
        const EdgeColoring c = coloring_from_json(Json::parse(read_file(coloring)));
        BoundTrace t;
        if (method == "cyclic") {
            if (cyclic <= 0)
                throw PreconditionError("--method cyclic needs --cyclic t");
            d = split_cyclic(g, c, cyclic);
            t = {"cyclic_split", 2, "cyclic interval " + std::to_string(cyclic) + "-coloring, t >= 2Δ - 2: 2", 0,
                 false, ""};
        } else {
            d = decompose_general(g, c);
            const int bound = 2 * ((c.distinct_colors() + 4) / 5);
            t = {"general", bound, "2*ceil(" + std::to_string(c.distinct_colors()) + "/5) = " + std::to_string(bound),
                 0, false, ""};
        }
        t.parts = d.part_count();
        t.certified = verify_decomposition(g, d).interval;
        j["trace"] = trace_to_json(t);
    } else {
        std::optional<DispatchResult> r;
        if (method == "auto")
            r = dispatch_theta_upper(g);
        else
            r = run_method(g, method);
        if (!r)
            throw PreconditionError("method '" + method + "' does not apply to this graph");
        d = std::move(r->decomposition);
        j["trace"] = trace_to_json(r->trace);
        Json candidates = Json::array();
        for (const BoundTrace& t : r->candidates)
            candidates.push_back(trace_to_json(t));
        j["candidates"] = candidates;
    }
    const VerifyReport report = verify_decomposition(g, d);
    j["decomposition"] = decomposition_to_json(d);
    j["report"] = report_to_json(report);
    emit(o, j);
    return report.interval ? kOk : kFailed;
}

int cmd_timetable(const Options& o, const std::string& path, bool even, bool grid)
{
    const RequirementMatrix b = parse_matrix(read_file(path));
    const WeeklyTimetable w = make_weekly_timetable(b, even ? SpreadMode::even_spread : SpreadMode::fewest_days);
    const TimetableReport r = verify_timetable(b, w.timetable);
    if (grid && o.out.empty()) {
        std::cout << timetable_grid(w.timetable);
        if (!r.ok)
            for (const auto& v : r.violations)
                std::cerr << v << "\n";
        return r.ok ? kOk : kFailed;
    }
    Json j{{"days", w.timetable.day_count()},
           {"trace", trace_to_json(w.trace)},
           {"timetable", timetable_to_json(w.timetable)},
           {"report", report_to_json(r)}};
    if (grid)
        j["grid"] = timetable_grid(w.timetable);
    emit(o, j);
    return r.ok ? kOk : kFailed;
}

int cmd_verify(const Options& o, const std::string& graph_path, const std::string& path, int cyclic,
               const std::string& mode)
{
    const Multigraph g = load_graph(graph_path);
    const Json j = Json::parse(read_file(path));
    const bool is_decomposition =
        j.is_object() && (j.contains("part") || j.contains("decomposition")) && !j.contains("coloring");
    if (is_decomposition) {
        const Decomposition d = decomposition_from_json(j);
        const VerifyReport r = verify_decomposition(g, d);
        emit(o, {{"kind", "decomposition"}, {"parts", d.part_count()}, {"report", report_to_json(r)}});
        return r.interval ? kOk : kFailed;
    }
    const EdgeColoring c = coloring_from_json(j);
    VerifyMode m = VerifyMode::interval;
    if (cyclic > 0)
        m = VerifyMode::cyclic;
    else if (mode == "proper")
        m = VerifyMode::proper;
    const VerifyReport r = verify(g, c, m, cyclic);
    emit(o, {{"kind", "coloring"}, {"report", report_to_json(r)}});
    return r.ok(m) ? kOk : kFailed;
}

int cmd_oracle(const Options& o, const std::string& path, const std::string& which)
{
    const Multigraph g = load_graph(path);
    Json j{{"oracle", which}};
    if (which == "interval") {
        const auto c = exact_interval_colorable(g);
        j["interval_colorable"] = c.has_value();
        if (c)
            j["coloring"] = coloring_to_json(*c);
    } else if (which == "theta") {
        j["theta"] = exact_theta(g);
    } else if (which == "arboricity") {
        j["arboricity"] = nash_williams_arboricity(g);
    } else if (which == "chi") {
        const ChromaticIndex ci = exact_chromatic_index(g);
        j["chromatic_index"] = ci.value;
        j["coloring"] = coloring_to_json(ci.witness);
    } else {
        throw PreconditionError("unknown oracle '" + which + "'");
    }
    emit(o, j);
    return kOk;
}

// Each suite runs the same per-instance work once serially and once fanned
// out over instances; the per-instance results must agree.
int cmd_bench(const Options& o, const std::string& suite, int instances)
{
    using Clock = std::chrono::steady_clock;
    auto ms = [](Clock::duration d) { return std::chrono::duration<double, std::milli>(d).count(); };
    Json results = Json::array();
    bool consistent = true;
    auto run = [&](const std::string& name, const std::string& family, auto&& work) {
        std::vector<Multigraph> graphs;
        for (int i = 0; i < instances; ++i)
            graphs.push_back(generate(FamilySpec::parse(family, o.seed + i)).graph);
        std::vector<long long> serial(instances), parallel(instances);
        const auto t0 = Clock::now();
        for (int i = 0; i < instances; ++i)
            serial[i] = work(graphs[i]);
        const auto t1 = Clock::now();
#pragma omp parallel for schedule(dynamic, 1)
        for (int i = 0; i < instances; ++i)
            parallel[i] = work(graphs[i]);
        const auto t2 = Clock::now();
        const bool same = serial == parallel;
        consistent = consistent && same;
        results.push_back({{"suite", name},
                           {"family", family},
                           {"instances", instances},
                           {"serial_ms", ms(t1 - t0)},
                           {"parallel_ms", ms(t2 - t1)},
                           {"consistent", same}});
    };
    const bool all = suite == "all";
    bool known = all;
    if (all || suite == "verify") {
        known = true;
        run("verify", "random_simple:n=400,p=0.05", [](const Multigraph& g) {
            const EdgeColoring c = vizing_color(g);
            return static_cast<long long>(verify_serial(g, c, VerifyMode::interval).non_interval_vertices.size());
        });
    }
    if (all || suite == "arboricity") {
        known = true;
        run("arboricity", "random_simple:n=14,p=0.4", [](const Multigraph& g) {
            return static_cast<long long>(nash_williams_arboricity_serial(g));
        });
    }
    if (all || suite == "dispatch") {
        known = true;
        run("dispatch", "random_simple:n=30,p=0.2", [](const Multigraph& g) {
            return static_cast<long long>(dispatch_theta_upper_serial(g).decomposition.part_count());
        });
    }
    if (all || suite == "subcubic") {
        known = true;
        run("subcubic", "bipartite_random:a=300,b=300,p=0.01,max_degree=3", [](const Multigraph& g) {
            const EdgeColoring c = color_subcubic(g, konig_color(g, *bipartition(g)));
            return static_cast<long long>(c.distinct_colors());
        });
    }
    if (!known)
        throw PreconditionError("unknown bench suite '" + suite + "'");
    emit(o, {{"threads", omp_get_max_threads()}, {"results", results}, {"consistent", consistent}});
    return consistent ? kOk : kFailed;
}

}  // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Interval edge colorings, interval coloring thickness decompositions and no-wait timetables"};
    app.require_subcommand(1);
    app.fallthrough();
    Options o;
    app.add_option("--out,-o", o.out, "Write JSON here instead of stdout");
    app.add_option("--seed", o.seed, "Seed for all randomness")->capture_default_str();

    std::string spec_text, spec_file, format = "json";
    auto* gen = app.add_subcommand("gen", "Generate a graph from a family spec such as biregular:a=3,b=6,x=12");
    gen->add_option("spec", spec_text, "family:key=value,...");
    gen->add_option("--spec-json", spec_file, "Family spec as a JSON file");
    gen->add_option("--format", format, "json or text")->check(CLI::IsMember({"json", "text"}));

    std::string graph_path, method = "vizing";
    auto* color = app.add_subcommand("color", "Edge-color a graph");
    color->add_option("graph", graph_path)->required();
    color->add_option("--method", method,
                      "konig | vizing | shannon | subcubic | exact | kernel:{forest,cactus,low_even,subcubic,interval}");

    std::string decompose_method = "auto", coloring_path;
    int cyclic = 0;
    bool auto_flag = false;
    auto* decompose = app.add_subcommand("decompose", "Decompose a graph into interval colorable parts");
    decompose->add_option("graph", graph_path)->required();
    decompose->add_option("--method", decompose_method, "auto, general, cyclic or a dispatcher method name");
    decompose->add_flag("--auto", auto_flag, "Run every applicable method and keep the best (default)");
    decompose->add_option("--coloring", coloring_path, "Coloring JSON for --method general or cyclic");
    decompose->add_option("--cyclic", cyclic, "Cycle length t for --method cyclic");

    std::string matrix_path;
    bool even = false, grid = false;
    auto* timetable = app.add_subcommand("timetable", "Weekly timetable without interruptions from a requirement matrix");
    timetable->add_option("matrix", matrix_path, "CSV or JSON requirement matrix")->required();
    timetable->add_flag("--even", even, "Spread lectures evenly over ceil(Δ/3) days");
    timetable->add_flag("--grid", grid, "Human-readable grid");

    std::string artifact_path, verify_mode = "interval";
    auto* verify_cmd = app.add_subcommand("verify", "Check a coloring or decomposition");
    verify_cmd->add_option("graph", graph_path)->required();
    verify_cmd->add_option("artifact", artifact_path, "Coloring or decomposition JSON")->required();
    verify_cmd->add_option("--cyclic", cyclic, "Check a cyclic interval t-coloring");
    verify_cmd->add_option("--mode", verify_mode, "interval or proper")->check(CLI::IsMember({"interval", "proper"}));

    std::string which;
    auto* oracle = app.add_subcommand("oracle", "Exact small-instance oracles");
    oracle->add_option("graph", graph_path)->required();
    oracle->add_option("which", which, "interval | theta | arboricity | chi")
        ->required()
        ->check(CLI::IsMember({"interval", "theta", "arboricity", "chi"}));

    std::string suite = "all";
    int instances = 8;
    auto* bench = app.add_subcommand("bench", "Serial versus parallel fan-out over generated instances");
    bench->add_option("suite", suite, "verify | arboricity | dispatch | subcubic | all");
    bench->add_option("--instances", instances)->check(CLI::PositiveNumber);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kOk : kError;
    }

    try {
        if (*gen) {
            if (spec_text.empty() == spec_file.empty())
                throw PreconditionError("gen needs exactly one of a spec or --spec-json");
            return cmd_gen(o, spec_text, spec_file, format);
        }
        if (*color)
            return cmd_color(o, graph_path, method);
        if (*decompose)
            return cmd_decompose(o, graph_path, auto_flag ? "auto" : decompose_method, coloring_path, cyclic);
        if (*timetable)
            return cmd_timetable(o, matrix_path, even, grid);
        if (*verify_cmd)
            return cmd_verify(o, graph_path, artifact_path, cyclic, verify_mode);
        if (*oracle)
            return cmd_oracle(o, graph_path, which);
        if (*bench)
            return cmd_bench(o, suite, instances);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kError;
    }
    return kError;
}
