#include <cmtrig/report.hpp>

#include <cmath>
#include <sstream>
#include <stdexcept>

namespace cmtrig
{

OutputFormat parse_output_format(const std::string &name)
{
    if (name == "json") {
        return OutputFormat::json;
    }
    if (name == "csv") {
        return OutputFormat::csv;
    }
    if (name == "text") {
        return OutputFormat::text;
    }
    throw std::invalid_argument("unknown output format '" + name + "' (expected json, csv or text)");
}

int decimal_digits(mpfr_prec_t bits)
{
    return static_cast<int>(std::ceil(static_cast<double>(bits) * std::log10(2.0))) + 1;
}

Json to_json(const PrecReal &v)
{
    return Json{{"midpoint", v.mid_string(decimal_digits(v.precision()))}, {"radius", v.rad_string(3)}};
}

Json to_json(const Location &loc)
{
    Json j{{"x_over_pi", to_string(loc.x_over_pi)}};
    if (loc.y_over_pi) {
        j["y_over_pi"] = to_string(*loc.y_over_pi);
    }
    if (loc.order) {
        j["n"] = *loc.order;
    }
    return j;
}

Json to_json(const GridReport &r)
{
    Json j{
        {"suite", r.suite},
        {"points", r.points_checked},
        {"failed", r.failed},
        {"inconclusive", r.inconclusive},
        {"exact_zeros", r.exact_zeros},
        {"skipped_near_pole", r.skipped_near_pole},
        {"all_passed", r.all_passed},
        {"detail", r.detail},
    };
    j["n"] = r.n ? Json(*r.n) : Json(nullptr);
    j["worst_margin"] = r.worst_margin ? to_json(*r.worst_margin) : Json(nullptr);
    j["worst_point"] = r.worst_point ? to_json(*r.worst_point) : Json(nullptr);
    j["extremum_location"] = r.extremum_location ? to_json(*r.extremum_location) : Json(nullptr);
    j["extremum_margin"] = r.extremum_margin ? to_json(*r.extremum_margin) : Json(nullptr);
    Json zeros = Json::array();
    for (const auto &z : r.exact_zero_points) {
        zeros.push_back(to_json(z));
    }
    j["exact_zero_points"] = zeros;
    return j;
}

Json to_json(const SeriesEval &e)
{
    Json j = to_json(e.value);
    j["terms_used"] = e.terms_used;
    j["tail_bound"] = e.tail_bound.to_string(3);
    return j;
}

int exit_status(const std::vector<GridReport> &reports)
{
    bool inconclusive = false;
    for (const auto &r : reports) {
        if (r.failed > 0 || (!r.all_passed && r.inconclusive == 0)) {
            return 3;
        }
        inconclusive = inconclusive || r.inconclusive > 0;
    }
    return inconclusive ? 2 : 0;
}

Json reports_json(const std::vector<GridReport> &reports)
{
    Json arr = Json::array();
    bool all = true;
    for (const auto &r : reports) {
        arr.push_back(to_json(r));
        all = all && r.all_passed;
    }
    return Json{{"all_passed", all}, {"reports", arr}};
}

std::string dump_canonical(const Json &j)
{
    return j.dump(2) + "\n";
}

namespace
{

std::string csv_field(const std::string &s)
{
    if (s.find_first_of(",\"\n") == std::string::npos) {
        return s;
    }
    std::string out = "\"";
    for (char c : s) {
        out += c == '"' ? std::string("\"\"") : std::string(1, c);
    }
    return out + "\"";
}

std::string opt_location(const std::optional<Location> &loc)
{
    return loc ? to_string(*loc) : "";
}

} // namespace

std::string to_csv(const std::vector<GridReport> &reports)
{
    std::ostringstream os;
    os << "suite,n,points,failed,inconclusive,exact_zeros,skipped_near_pole,all_passed,"
          "worst_margin_midpoint,worst_margin_radius,worst_point,extremum_location\n";
    for (const auto &r : reports) {
        os << csv_field(r.suite) << ',' << (r.n ? std::to_string(*r.n) : "") << ',' << r.points_checked << ','
           << r.failed << ',' << r.inconclusive << ',' << r.exact_zeros << ',' << r.skipped_near_pole << ','
           << (r.all_passed ? "true" : "false") << ',';
        if (r.worst_margin) {
            os << r.worst_margin->mid_string(decimal_digits(r.worst_margin->precision())) << ','
               << r.worst_margin->rad_string(3);
        } else {
            os << ',';
        }
        os << ',' << csv_field(opt_location(r.worst_point)) << ',' << csv_field(opt_location(r.extremum_location))
           << '\n';
    }
    return os.str();
}

std::string to_text(const std::vector<GridReport> &reports)
{
    std::ostringstream os;
    for (const auto &r : reports) {
        os << (r.all_passed ? "PASS " : "FAIL ") << r.suite;
        if (r.n) {
            os << " n=" << *r.n;
        }
        os << "  points=" << r.points_checked << " failed=" << r.failed << " inconclusive=" << r.inconclusive
           << " exact_zeros=" << r.exact_zeros << " skipped=" << r.skipped_near_pole << '\n';
        if (r.worst_margin) {
            os << "  worst margin " << r.worst_margin->to_string(20) << " at " << opt_location(r.worst_point) << '\n';
        }
        if (r.extremum_location) {
            os << "  extremum at " << to_string(*r.extremum_location) << '\n';
        }
        if (!r.detail.empty()) {
            os << "  " << r.detail << '\n';
        }
    }
    return os.str();
}

std::string render(const std::vector<GridReport> &reports, OutputFormat fmt)
{
    switch (fmt) {
    case OutputFormat::json:
        return dump_canonical(reports_json(reports));
    case OutputFormat::csv:
        return to_csv(reports);
    case OutputFormat::text:
        return to_text(reports);
    }
    return {};
}

} // namespace cmtrig
