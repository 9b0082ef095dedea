#pragma once

// Machine-readable reports: JSON objects with insertion-ordered keys, numbers
// printed with 17 significant digits, non-finite numbers as the strings
// "inf", "-inf" and "nan".

#include <json.hpp>
#include <string>
#include <string_view>
#include <vector>

#include "coorbit2d/grid.hpp"
#include "coorbit2d/group_model.hpp"
#include "coorbit2d/orbit_classify.hpp"

namespace coorbit2d {

using ReportDoc = nlohmann::ordered_json;

/// JSON value for a double; non-finite values become strings.
ReportDoc report_number(double v);
ReportDoc report_matrix(const Mat2& m);
ReportDoc report_vector(const Vec2& v);
ReportDoc report_lines(const LineSet& lines);
ReportDoc report_canonical(const CanonicalForm& cf);
ReportDoc report_group(const GroupSpec& spec);

/// Deterministic serialization, two-space indent, trailing newline.
std::string emit_report(const ReportDoc& doc);
ReportDoc parse_report(std::string_view text);

}  // namespace coorbit2d
