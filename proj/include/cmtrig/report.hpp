#ifndef CMTRIG_REPORT_HPP
#define CMTRIG_REPORT_HPP

#include <cmtrig/grid.hpp>
#include <cmtrig/prec_real.hpp>
#include <cmtrig/trig_deriv.hpp>

#include <json.hpp>

#include <string>
#include <vector>

namespace cmtrig
{

using Json = nlohmann::json;

enum class OutputFormat { json, csv, text };

OutputFormat parse_output_format(const std::string &name);

// Decimal digits that represent a ball of this precision faithfully.
int decimal_digits(mpfr_prec_t bits);

/// {"midpoint": "...", "radius": "..."}; both decimal strings, the radius
/// rounded up.
Json to_json(const PrecReal &v);
Json to_json(const Location &loc);
Json to_json(const GridReport &r);
Json to_json(const SeriesEval &e);

/// Overall exit status of a set of reports: 0 all passed, 2 some
/// inconclusive and none failed, 3 something failed.
int exit_status(const std::vector<GridReport> &reports);

/// {"all_passed": ..., "reports": [...]}.
Json reports_json(const std::vector<GridReport> &reports);

/// Keys sorted, two-space indent, trailing newline. Parsing the result and
/// dumping it again gives the same bytes.
std::string dump_canonical(const Json &j);

std::string to_csv(const std::vector<GridReport> &reports);
std::string to_text(const std::vector<GridReport> &reports);

std::string render(const std::vector<GridReport> &reports, OutputFormat fmt);

} // namespace cmtrig

#endif
