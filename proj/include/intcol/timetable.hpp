#pragma once

#include "intcol/graph.hpp"
#include "intcol/thickness.hpp"

#include <string_view>

namespace intcol {

/// b[i][j] lectures between class i and teacher j.
struct RequirementMatrix {
    std::vector<std::vector<int>> b;

    int classes() const { return static_cast<int>(b.size()); }
    int teachers() const { return b.empty() ? 0 : static_cast<int>(b[0].size()); }
    /// Throws PreconditionError unless the matrix is a nonempty rectangle of
    /// nonnegative entries.
    void validate() const;
};

/// Rows of comma-separated integers; blank lines are skipped.
RequirementMatrix parse_requirement_csv(std::string_view text);

/// Class i is vertex i, teacher j is vertex n + j; b_ij parallel edges each.
struct RequirementGraph {
    Multigraph graph;
    BipartitionCert cert;
    std::vector<std::pair<int, int>> cell;  // edge -> (class, teacher)
};
RequirementGraph build_requirement_graph(const RequirementMatrix& b);

/// days[l][i][h] is the teacher meeting class i in period h + 1 of day l, or -1.
struct Timetable {
    int classes = 0;
    int teachers = 0;
    std::vector<std::vector<std::vector<int>>> days;

    int day_count() const { return static_cast<int>(days.size()); }
    int periods(int day) const { return days[day].empty() ? 0 : static_cast<int>(days[day][0].size()); }
    friend bool operator==(const Timetable&, const Timetable&) = default;
};

/// Day l is part l; an edge of cell (i, j) colored h puts teacher j in row i
/// at period h. Each day's colors are normalized to start at period 1.
Timetable decomposition_to_timetable(const RequirementGraph& rg, const Decomposition& d);

/// Inverse: one part per day, the edges of a cell are used in id order.
Decomposition timetable_to_decomposition(const RequirementGraph& rg, const Timetable& t);

struct TimetableReport {
    bool ok = true;
    bool totals = true;             // every class meets every teacher b_ij times
    bool columns_distinct = true;   // no teacher twice in one period
    bool class_continuous = true;   // no class interrupted within a day
    bool teacher_continuous = true; // no teacher interrupted within a day
    std::vector<std::string> violations;
};
TimetableReport verify_timetable(const RequirementMatrix& b, const Timetable& t);

enum class SpreadMode { fewest_days, even_spread };

struct WeeklyTimetable {
    Timetable timetable;
    Decomposition decomposition;
    BoundTrace trace;
};
/// fewest_days: the dispatcher's decomposition of G(B). even_spread: ⌈Δ/3⌉
/// days (one if Δ ≤ 3) with every party's daily loads within one of each other.
WeeklyTimetable make_weekly_timetable(const RequirementMatrix& b, SpreadMode mode);

/// Lectures of `party` per day: classes are 0..n-1, teachers n..n+m-1.
std::vector<int> daily_loads(const Timetable& t, int party);

}  // namespace intcol
