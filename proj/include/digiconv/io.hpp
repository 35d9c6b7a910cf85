// Point-set file format, report serialization, trace export.
//
// Point-set files are plain text: a header line "d n", then n lines of d
// whitespace-separated integers. Lines starting with '#' and blank lines are
// ignored. Duplicate rows are allowed; loading dedups and records the fact.
#pragma once

#include <iosfwd>
#include <optional>

#include "digiconv/quickhull.hpp"
#include "digiconv/report.hpp"

namespace digiconv {

PointSet read_point_set(std::istream& in, const std::string& name = "<stream>",
                        std::optional<int> dim_override = std::nullopt);
PointSet read_point_set_file(const std::string& path, std::optional<int> dim_override = std::nullopt);

void write_point_set(std::ostream& out, const PointSet& s);
void write_point_set_file(const std::string& path, const PointSet& s);

// Key-value text document; key names are a stable interface.
std::string report_to_text(const ConvexityReport& rep);
std::string report_to_json(const ConvexityReport& rep);

// One line per step: remaining_before discarded promoted remaining_after.
void write_trace(std::ostream& out, const QuickhullTrace& trace);

}  // namespace digiconv
