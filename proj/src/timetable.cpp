#include "intcol/timetable.hpp"

#include "intcol/verify.hpp"

#include <algorithm>
#include <sstream>

namespace intcol {

void RequirementMatrix::validate() const
{
    if (b.empty() || b[0].empty())
        throw PreconditionError("requirement matrix must have at least one row and one column");
    for (const auto& row : b) {
        if (row.size() != b[0].size())
            throw PreconditionError("requirement matrix rows differ in length");
        for (int x : row)
            if (x < 0)
                throw PreconditionError("requirement matrix entries must be nonnegative");
    }
}

RequirementMatrix parse_requirement_csv(std::string_view text)
{
    RequirementMatrix out;
    std::stringstream in{std::string(text)};
    std::string line;
    int line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (line.find_first_not_of(" \t\r") == std::string::npos)
            continue;
        std::vector<int> row;
        std::stringstream cells(line);
        std::string cell;
        while (std::getline(cells, cell, ',')) {
            const auto first = cell.find_first_not_of(" \t\r");
            const auto last = cell.find_last_not_of(" \t\r");
            if (first == std::string::npos)
                throw PreconditionError("line " + std::to_string(line_no) + ": empty cell");
            const std::string token = cell.substr(first, last - first + 1);
            std::size_t used = 0;
            int value = 0;
            try {
                value = std::stoi(token, &used);
            } catch (const std::exception&) {
                used = 0;
            }
            if (used != token.size())
                throw PreconditionError("line " + std::to_string(line_no) + ": '" + token + "' is not an integer");
            row.push_back(value);
        }
        out.b.push_back(std::move(row));
    }
    out.validate();
    return out;
}

RequirementGraph build_requirement_graph(const RequirementMatrix& b)
{
    b.validate();
    const int n = b.classes(), m = b.teachers();
    RequirementGraph rg;
    std::vector<Edge> edges;
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < m; ++j)
            for (int k = 0; k < b.b[i][j]; ++k) {
                edges.push_back({i, n + j});
                rg.cell.push_back({i, j});
            }
    rg.graph = Multigraph(n + m, std::move(edges));
    rg.cert.side.assign(n + m, Side::Y);
    std::fill(rg.cert.side.begin(), rg.cert.side.begin() + n, Side::X);
    return rg;
}

namespace {

int class_count(const RequirementGraph& rg)
{
    return static_cast<int>(std::count(rg.cert.side.begin(), rg.cert.side.end(), Side::X));
}

}  // namespace

Timetable decomposition_to_timetable(const RequirementGraph& rg, const Decomposition& d)
{
    const VerifyReport report = verify_decomposition(rg.graph, d);
    if (!report.interval)
        throw PreconditionError("decomposition is not certified: " + report.message);
    Timetable t;
    t.classes = class_count(rg);
    t.teachers = rg.graph.vertex_count() - t.classes;
    for (int p = 0; p < d.part_count(); ++p) {
        const auto edges = d.part_edges(p);
        const auto& colors = *d.certificates[p];
        const Color low = colors.empty() ? 1 : *std::min_element(colors.begin(), colors.end());
        const Color high = colors.empty() ? 0 : *std::max_element(colors.begin(), colors.end());
        auto& day = t.days.emplace_back(t.classes, std::vector<int>(high - low + 1, -1));
        for (std::size_t k = 0; k < edges.size(); ++k) {
            const auto [i, j] = rg.cell[edges[k]];
            day[i][colors[k] - low] = j;
        }
    }
    return t;
}

Decomposition timetable_to_decomposition(const RequirementGraph& rg, const Timetable& t)
{
    const int n = class_count(rg);
    const int m = rg.graph.vertex_count() - n;
    if (t.classes != n || t.teachers != m)
        throw PreconditionError("timetable dimensions do not match the requirement graph");
    // Unused edges per cell, in id order.
    std::vector<std::vector<std::vector<EdgeId>>> pool(n, std::vector<std::vector<EdgeId>>(m));
    for (EdgeId e = rg.graph.edge_count() - 1; e >= 0; --e)
        pool[rg.cell[e].first][rg.cell[e].second].push_back(e);
    std::vector<int> part(rg.graph.edge_count(), -1);
    std::vector<Color> color(rg.graph.edge_count(), 0);
    for (int l = 0; l < t.day_count(); ++l)
        for (int i = 0; i < n; ++i)
            for (int h = 0; h < t.periods(l); ++h) {
                const int j = t.days[l][i][h];
                if (j < 0)
                    continue;
                if (j >= m || pool[i][j].empty())
                    throw PreconditionError("timetable has more lectures than the requirement matrix");
                const EdgeId e = pool[i][j].back();
                pool[i][j].pop_back();
                part[e] = l;
                color[e] = h + 1;
            }
    for (int p : part)
        if (p < 0)
            throw PreconditionError("timetable has fewer lectures than the requirement matrix");
    return Decomposition::from_colors(t.day_count(), std::move(part), color);
}

namespace {

// Busy periods must form one block.
bool continuous(const std::vector<char>& busy)
{
    const auto first = std::find(busy.begin(), busy.end(), 1);
    if (first == busy.end())
        return true;
    const auto last = std::find(busy.rbegin(), busy.rend(), 1).base();
    return std::find(first, last, 0) == last;
}

}  // namespace

TimetableReport verify_timetable(const RequirementMatrix& b, const Timetable& t)
{
    b.validate();
    TimetableReport r;
    auto fail = [&](bool& flag, std::string what) {
        flag = false;
        r.ok = false;
        r.violations.push_back(std::move(what));
    };
    const int n = b.classes(), m = b.teachers();
    if (t.classes != n || t.teachers != m) {
        fail(r.totals, "timetable is " + std::to_string(t.classes) + "x" + std::to_string(t.teachers) +
                           ", matrix is " + std::to_string(n) + "x" + std::to_string(m));
        return r;
    }
    std::vector<std::vector<int>> count(n, std::vector<int>(m, 0));
    for (int l = 0; l < t.day_count(); ++l) {
        const int periods = t.periods(l);
        const std::string day = "day " + std::to_string(l + 1);
        if (static_cast<int>(t.days[l].size()) != n) {
            fail(r.totals, day + ": wrong number of rows");
            continue;
        }
        std::vector<std::vector<char>> teacher_busy(m, std::vector<char>(periods, 0));
        for (int i = 0; i < n; ++i) {
            if (static_cast<int>(t.days[l][i].size()) != periods) {
                fail(r.totals, day + ": ragged row " + std::to_string(i + 1));
                continue;
            }
            std::vector<char> busy(periods, 0);
            for (int h = 0; h < periods; ++h) {
                const int j = t.days[l][i][h];
                if (j < 0)
                    continue;
                if (j >= m) {
                    fail(r.totals, day + ": unknown teacher " + std::to_string(j + 1));
                    continue;
                }
                busy[h] = 1;
                ++count[i][j];
                if (teacher_busy[j][h])
                    fail(r.columns_distinct, day + ", period " + std::to_string(h + 1) + ": teacher " +
                                                 std::to_string(j + 1) + " appears twice");
                teacher_busy[j][h] = 1;
            }
            if (!continuous(busy))
                fail(r.class_continuous, day + ": class " + std::to_string(i + 1) + " is interrupted");
        }
        for (int j = 0; j < m; ++j)
            if (!continuous(teacher_busy[j]))
                fail(r.teacher_continuous, day + ": teacher " + std::to_string(j + 1) + " is interrupted");
    }
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < m; ++j)
            if (count[i][j] != b.b[i][j])
                fail(r.totals, "class " + std::to_string(i + 1) + " meets teacher " + std::to_string(j + 1) + " " +
                                   std::to_string(count[i][j]) + " times, requires " + std::to_string(b.b[i][j]));
    return r;
}

WeeklyTimetable make_weekly_timetable(const RequirementMatrix& b, SpreadMode mode)
{
    const RequirementGraph rg = build_requirement_graph(b);
    WeeklyTimetable out;
    if (mode == SpreadMode::fewest_days) {
        DispatchResult r = dispatch_theta_upper(rg.graph);
        out.decomposition = std::move(r.decomposition);
        out.trace = std::move(r.trace);
    } else {
        out.decomposition = decompose_bipartite(rg.graph, rg.cert);
        const int delta = rg.graph.max_degree();
        out.trace.method = "even_spread";
        out.trace.bound = delta == 0 ? 0 : delta <= 3 ? 1 : (delta + 2) / 3;
        out.trace.formula = delta <= 3 ? "Δ = " + std::to_string(delta) + " ≤ 3: " + std::to_string(out.trace.bound)
                                       : "ceil(" + std::to_string(delta) + "/3) = " + std::to_string(out.trace.bound);
        out.trace.parts = out.decomposition.part_count();
        out.trace.certified = verify_decomposition(rg.graph, out.decomposition).interval;
    }
    out.timetable = decomposition_to_timetable(rg, out.decomposition);
    return out;
}

std::vector<int> daily_loads(const Timetable& t, int party)
{
    std::vector<int> load(t.day_count(), 0);
    for (int l = 0; l < t.day_count(); ++l)
        for (int i = 0; i < t.classes; ++i)
            for (int j : t.days[l][i])
                if (party < t.classes ? (i == party && j >= 0) : j == party - t.classes)
                    ++load[l];
    return load;
}

}  // namespace intcol
