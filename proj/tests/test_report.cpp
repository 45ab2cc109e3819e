#include <cmtrig/bounds.hpp>
#include <cmtrig/monotonicity.hpp>
#include <cmtrig/report.hpp>
#include <cmtrig/series_id.hpp>
#include <cmtrig/suites.hpp>

#include <catch_amalgamated.hpp>

#include <sstream>

using namespace cmtrig;

namespace
{

const Precision P128(128);

GridReport sample_report()
{
    return verify_simplex(0, 10, P128);
}

std::size_t count_lines(const std::string &s)
{
    std::size_t n = 0;
    for (char c : s) {
        n += c == '\n';
    }
    return n;
}

} // namespace

TEST_CASE("enclosures serialize as decimal strings with a radius")
{
    const Json j = to_json(PrecReal::pi(200));
    REQUIRE(j.contains("midpoint"));
    REQUIRE(j.contains("radius"));
    CHECK(j["midpoint"].is_string());
    CHECK(j["radius"].is_string());
    CHECK(j["midpoint"].get<std::string>().rfind("3.14159265358979323846", 0) == 0);
    CHECK(to_json(PrecReal::from_int(0, 64))["radius"].get<std::string>().find_first_not_of("0.e+-") ==
          std::string::npos);
}

TEST_CASE("report JSON carries the documented fields")
{
    const Json j = to_json(sample_report());
    for (const char *key : {"suite", "n", "points", "failed", "inconclusive", "exact_zeros", "skipped_near_pole",
                            "all_passed", "worst_margin", "worst_point", "extremum_location", "extremum_margin",
                            "exact_zero_points", "detail"}) {
        INFO(key);
        CHECK(j.contains(key));
    }
    CHECK(j["suite"] == "subadd");
    CHECK(j["n"] == 0);
    CHECK(j["points"] == 45);
    CHECK(j["all_passed"] == true);
    CHECK(j["extremum_location"]["x_over_pi"] == "1/2");
    CHECK(j["extremum_location"]["y_over_pi"] == "1/2");
    CHECK(j["worst_margin"]["midpoint"].is_string());
}

TEST_CASE("JSON output round-trips byte for byte")
{
    const std::vector<GridReport> reports{sample_report(), identity_pi(P128), zero_classification(P128, 4)};
    const std::string once = dump_canonical(reports_json(reports));
    const std::string twice = dump_canonical(Json::parse(once));
    CHECK(once == twice);
    CHECK(once.back() == '\n');
    CHECK(render(reports, OutputFormat::json) == once);

    Json series = to_json(pi_series(60, P128));
    const std::string s1 = dump_canonical(series);
    CHECK(dump_canonical(Json::parse(s1)) == s1);
    CHECK(series["terms_used"] == 60);
}

TEST_CASE("CSV has a header and one row per report")
{
    const std::vector<GridReport> reports{sample_report(), verify_simplex(1, 10, P128)};
    const std::string csv = to_csv(reports);
    CHECK(count_lines(csv) == 3);
    CHECK(csv.rfind("suite,n,points,", 0) == 0);
    std::istringstream in(csv);
    std::string header, row;
    std::getline(in, header);
    std::getline(in, row);
    CHECK(row.rfind("subadd,0,45,0,0,0,0,true,", 0) == 0);
    // Locations contain commas and are quoted.
    CHECK(row.find('"') != std::string::npos);
}

TEST_CASE("text output")
{
    const std::string text = to_text({sample_report()});
    CHECK(text.rfind("PASS subadd n=0", 0) == 0);
    CHECK(text.find("extremum at") != std::string::npos);
    GridReport failing;
    failing.suite = "demo";
    failing.failed = 1;
    CHECK(to_text({failing}).rfind("FAIL demo", 0) == 0);
}

TEST_CASE("exit status")
{
    GridReport good = sample_report();
    GridReport unsure;
    unsure.suite = "unsure";
    unsure.points_checked = 1;
    unsure.inconclusive = 1;
    GridReport bad;
    bad.suite = "bad";
    bad.points_checked = 1;
    bad.failed = 1;
    CHECK(exit_status({good}) == 0);
    CHECK(exit_status({good, unsure}) == 2);
    CHECK(exit_status({good, unsure, bad}) == 3);
    GridReport empty;
    CHECK(exit_status({empty}) == 3);
}

TEST_CASE("output formats parse")
{
    CHECK(parse_output_format("json") == OutputFormat::json);
    CHECK(parse_output_format("csv") == OutputFormat::csv);
    CHECK(parse_output_format("text") == OutputFormat::text);
    CHECK_THROWS_AS(parse_output_format("xml"), std::invalid_argument);
}
