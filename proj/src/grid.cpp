#include <cmtrig/grid.hpp>

#include <exception>
#include <mutex>

namespace cmtrig
{

void for_each_index(std::size_t count, Execution exec, const std::function<void(std::size_t)> &body)
{
    if (exec == Execution::serial) {
        for (std::size_t i = 0; i < count; ++i) {
            body(i);
        }
        return;
    }
    std::exception_ptr error;
    std::mutex error_mutex;
    const auto n = static_cast<long>(count);
#pragma omp parallel for schedule(dynamic)
    for (long i = 0; i < n; ++i) {
        try {
            body(static_cast<std::size_t>(i));
        } catch (...) {
            const std::lock_guard lock(error_mutex);
            if (!error) {
                error = std::current_exception();
            }
        }
    }
    if (error) {
        std::rethrow_exception(error);
    }
}

std::string to_string(const Location &loc)
{
    std::string s = "x=" + to_string(loc.x_over_pi) + "*pi";
    if (loc.y_over_pi) {
        s += ", y=" + to_string(*loc.y_over_pi) + "*pi";
    }
    if (loc.order) {
        s += ", n=" + std::to_string(*loc.order);
    }
    return s;
}

void accumulate(GridReport &report, const std::vector<PointResult> &points)
{
    for (const auto &p : points) {
        switch (p.verdict) {
        case Verdict::skipped:
            ++report.skipped_near_pole;
            continue;
        case Verdict::fail:
            ++report.failed;
            break;
        case Verdict::inconclusive:
            ++report.inconclusive;
            break;
        case Verdict::exact_zero:
            ++report.exact_zeros;
            report.exact_zero_points.push_back(p.where);
            break;
        case Verdict::pass:
            break;
        }
        ++report.points_checked;
        if (!p.margin) {
            continue;
        }
        const bool strict = p.strict && p.verdict != Verdict::exact_zero;
        if (strict && (!report.worst_margin || compare_midpoints(*p.margin, *report.worst_margin) < 0)) {
            report.worst_margin = p.margin;
            report.worst_point = p.where;
        }
        if (!report.extremum_margin || compare_midpoints(*p.margin, *report.extremum_margin) < 0) {
            report.extremum_margin = p.margin;
            report.extremum_location = p.where;
        }
    }
    report.all_passed = report.failed == 0 && report.inconclusive == 0 && report.points_checked > 0;
}

} // namespace cmtrig
