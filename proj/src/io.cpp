#include "intcol/io.hpp"

#include <fstream>
#include <iomanip>
#include <sstream>

namespace intcol {

namespace {

[[noreturn]] void bad(const std::string& what) { throw ParseError(what); }

Json parse_json(std::string_view text)
{
    try {
        return Json::parse(text);
    } catch (const Json::parse_error& e) {
        bad(std::string("invalid JSON: ") + e.what());
    }
}

template <class T>
T field(const Json& j, const char* key)
{
    if (!j.is_object() || !j.contains(key))
        bad(std::string("missing field '") + key + "'");
    try {
        return j.at(key).get<T>();
    } catch (const Json::exception&) {
        bad(std::string("field '") + key + "' has the wrong type");
    }
}

char first_char(std::string_view text)
{
    const auto pos = text.find_first_not_of(" \t\r\n");
    return pos == std::string_view::npos ? '\0' : text[pos];
}

Multigraph checked_graph(int n, std::vector<Edge> edges)
{
    try {
        return Multigraph(n, std::move(edges));
    } catch (const PreconditionError& e) {
        bad(e.what());
    }
}

}  // namespace

Multigraph parse_graph_text(std::string_view text)
{
    std::istringstream in{std::string(text)};
    long long n = -1, m = -1;
    if (!(in >> n >> m) || n < 0 || m < 0)
        bad("graph text must start with 'V E'");
    std::vector<Edge> edges;
    for (long long i = 0; i < m; ++i) {
        long long u = 0, v = 0;
        if (!(in >> u >> v))
            bad("graph text: expected " + std::to_string(m) + " edges, found " + std::to_string(i));
        if (u < 0 || v < 0 || u >= n || v >= n)
            bad("graph text: edge " + std::to_string(i) + " has an endpoint out of range");
        edges.push_back({static_cast<Vertex>(u), static_cast<Vertex>(v)});
    }
    std::string rest;
    if (in >> rest)
        bad("graph text: trailing content '" + rest + "'");
    return checked_graph(static_cast<int>(n), std::move(edges));
}

std::string graph_to_text(const Multigraph& g)
{
    std::string out = std::to_string(g.vertex_count()) + " " + std::to_string(g.edge_count()) + "\n";
    for (const Edge& e : g.edges())
        out += std::to_string(e.u) + " " + std::to_string(e.v) + "\n";
    return out;
}

Json graph_to_json(const Multigraph& g)
{
    Json edges = Json::array();
    for (EdgeId e = 0; e < g.edge_count(); ++e)
        edges.push_back({{"id", e}, {"u", g.edge(e).u}, {"v", g.edge(e).v}});
    return {{"vertex_count", g.vertex_count()}, {"edges", edges}};
}

Multigraph graph_from_json(const Json& j)
{
    const int n = field<int>(j, "vertex_count");
    const Json edges = field<Json>(j, "edges");
    if (!edges.is_array())
        bad("'edges' must be an array");
    std::vector<Edge> out(edges.size());
    std::vector<char> seen(edges.size(), 0);
    for (std::size_t i = 0; i < edges.size(); ++i) {
        const Json& e = edges[i];
        const int id = e.is_object() && e.contains("id") ? field<int>(e, "id") : static_cast<int>(i);
        if (id < 0 || id >= static_cast<int>(edges.size()) || seen[id])
            bad("edge ids must be dense and unique");
        seen[id] = 1;
        if (e.is_array() && e.size() == 2)
            out[id] = {e[0].get<int>(), e[1].get<int>()};
        else
            out[id] = {field<int>(e, "u"), field<int>(e, "v")};
    }
    return checked_graph(n, std::move(out));
}

Multigraph parse_graph(std::string_view text)
{
    if (first_char(text) == '{')
        return graph_from_json(parse_json(text));
    return parse_graph_text(text);
}

Json coloring_to_json(const EdgeColoring& c) { return Json(std::vector<Color>(c.colors().begin(), c.colors().end())); }

EdgeColoring coloring_from_json(const Json& j)
{
    const Json& list = j.is_object() && j.contains("coloring") ? j.at("coloring") : j;
    if (!list.is_array())
        bad("a coloring is a JSON array of integers");
    try {
        return EdgeColoring(list.get<std::vector<Color>>());
    } catch (const Json::exception&) {
        bad("a coloring is a JSON array of integers");
    }
}

Json decomposition_to_json(const Decomposition& d)
{
    Json certs = Json::array();
    for (const auto& c : d.certificates)
        certs.push_back(c ? Json(*c) : Json(nullptr));
    return {{"parts", d.part_count()}, {"part", d.part}, {"certificates", certs}};
}

Decomposition decomposition_from_json(const Json& j)
{
    const Json& body = j.contains("decomposition") ? j.at("decomposition") : j;
    Decomposition d;
    d.part = field<std::vector<int>>(body, "part");
    const Json certs = field<Json>(body, "certificates");
    if (!certs.is_array())
        bad("'certificates' must be an array");
    for (const Json& c : certs) {
        if (c.is_null())
            d.certificates.push_back(std::nullopt);
        else if (c.is_array())
            d.certificates.push_back(c.get<std::vector<Color>>());
        else
            bad("a certificate is an array of colors or null");
    }
    return d;
}

Json trace_to_json(const BoundTrace& t)
{
    Json j{{"method", t.method}, {"bound", t.bound},         {"formula", t.formula},
           {"parts", t.parts},   {"certified", t.certified}};
    if (!t.note.empty())
        j["note"] = t.note;
    return j;
}

Json report_to_json(const VerifyReport& r)
{
    return {{"proper", r.proper},
            {"interval", r.interval},
            {"cyclic_interval", r.cyclic_interval},
            {"improper_vertices", r.improper_vertices},
            {"non_interval_vertices", r.non_interval_vertices},
            {"non_cyclic_vertices", r.non_cyclic_vertices},
            {"bad_edges", r.bad_edges},
            {"message", r.message}};
}

Json report_to_json(const TimetableReport& r)
{
    return {{"ok", r.ok},
            {"totals", r.totals},
            {"columns_distinct", r.columns_distinct},
            {"class_continuous", r.class_continuous},
            {"teacher_continuous", r.teacher_continuous},
            {"violations", r.violations}};
}

Json timetable_to_json(const Timetable& t)
{
    Json days = Json::array();
    for (const auto& day : t.days) {
        Json rows = Json::array();
        for (const auto& row : day) {
            Json cells = Json::array();
            for (int j : row)
                cells.push_back(j < 0 ? Json(nullptr) : Json(j));
            rows.push_back(cells);
        }
        days.push_back(rows);
    }
    return {{"classes", t.classes}, {"teachers", t.teachers}, {"days", days}};
}

Timetable timetable_from_json(const Json& j)
{
    const Json& body = j.contains("timetable") ? j.at("timetable") : j;
    Timetable t;
    t.classes = field<int>(body, "classes");
    t.teachers = field<int>(body, "teachers");
    for (const Json& day : field<Json>(body, "days")) {
        auto& rows = t.days.emplace_back();
        for (const Json& row : day) {
            auto& cells = rows.emplace_back();
            for (const Json& cell : row)
                cells.push_back(cell.is_null() ? -1 : cell.get<int>());
        }
    }
    return t;
}

std::string timetable_grid(const Timetable& t)
{
    std::ostringstream out;
    for (int l = 0; l < t.day_count(); ++l) {
        out << "Day " << l + 1 << "\n";
        out << "      ";
        for (int h = 0; h < t.periods(l); ++h)
            out << " " << std::setw(4) << h + 1;
        out << "\n";
        for (int i = 0; i < t.classes; ++i) {
            out << "J" << std::left << std::setw(5) << i + 1 << std::right;
            for (int j : t.days[l][i])
                out << " " << std::setw(4) << (j < 0 ? std::string(".") : "P" + std::to_string(j + 1));
            out << "\n";
        }
    }
    return out.str();
}

RequirementMatrix matrix_from_json(const Json& j)
{
    const Json& rows = j.is_object() ? field<Json>(j, "b") : j;
    RequirementMatrix b;
    try {
        b.b = rows.get<std::vector<std::vector<int>>>();
    } catch (const Json::exception&) {
        bad("requirement matrix must be an array of integer rows");
    }
    b.validate();
    return b;
}

RequirementMatrix parse_matrix(std::string_view text)
{
    const char c = first_char(text);
    if (c == '[' || c == '{')
        return matrix_from_json(parse_json(text));
    return parse_requirement_csv(text);
}

FamilySpec family_spec_from_json(const Json& j)
{
    FamilySpec spec;
    spec.family = field<std::string>(j, "family");
    if (j.contains("seed"))
        spec.seed = field<std::uint64_t>(j, "seed");
    if (j.contains("params")) {
        for (const auto& [key, value] : j.at("params").items()) {
            if (value.is_string())
                spec.params[key] = value.get<std::string>();
            else if (value.is_array()) {
                std::string list;
                for (const Json& x : value)
                    list += (list.empty() ? "" : "/") + x.dump();
                spec.params[key] = list;
            } else
                spec.params[key] = value.dump();
        }
    }
    return spec;
}

std::string read_file(const std::string& path)
{
    std::ifstream in(path, std::ios::binary);
    if (!in)
        bad("cannot read '" + path + "'");
    std::ostringstream out;
    out << in.rdbuf();
    return out.str();
}

}  // namespace intcol
