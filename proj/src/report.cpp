#include "coorbit2d/report.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <variant>

#include "coorbit2d/error.hpp"

namespace coorbit2d {

namespace {

std::string format_double(double v) {
  if (std::isnan(v)) return "\"nan\"";
  if (std::isinf(v)) return v > 0 ? "\"inf\"" : "\"-inf\"";
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  std::string s(buf);
  if (s.find_first_of(".eEn") == std::string::npos) s += ".0";
  return s;
}

void emit(const ReportDoc& j, std::string& out, int depth) {
  const std::string pad(2 * static_cast<std::size_t>(depth + 1), ' ');
  const std::string close_pad(2 * static_cast<std::size_t>(depth), ' ');
  switch (j.type()) {
    case ReportDoc::value_t::object: {
      if (j.empty()) {
        out += "{}";
        return;
      }
      out += "{\n";
      bool first = true;
      for (const auto& [key, value] : j.items()) {
        if (!first) out += ",\n";
        first = false;
        out += pad + ReportDoc(key).dump() + ": ";
        emit(value, out, depth + 1);
      }
      out += "\n" + close_pad + "}";
      return;
    }
    case ReportDoc::value_t::array: {
      if (j.empty()) {
        out += "[]";
        return;
      }
      // Arrays of scalars or small matrices stay on one line; anything holding objects is broken up.
      const bool has_object = std::any_of(j.begin(), j.end(), [](const ReportDoc& v) { return v.is_object(); });
      if (!has_object) {
        out += "[";
        bool first = true;
        for (const auto& value : j) {
          if (!first) out += ", ";
          first = false;
          emit(value, out, depth + 1);
        }
        out += "]";
        return;
      }
      out += "[\n";
      bool first = true;
      for (const auto& value : j) {
        if (!first) out += ",\n";
        first = false;
        out += pad;
        emit(value, out, depth + 1);
      }
      out += "\n" + close_pad + "]";
      return;
    }
    case ReportDoc::value_t::number_float: out += format_double(j.get<double>()); return;
    default: out += j.dump(); return;
  }
}

}  // namespace

ReportDoc report_number(double v) {
  if (std::isnan(v)) return "nan";
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  return v;
}

ReportDoc report_matrix(const Mat2& m) {
  return ReportDoc::array({ReportDoc::array({report_number(m.m11), report_number(m.m12)}),
                           ReportDoc::array({report_number(m.m21), report_number(m.m22)})});
}

ReportDoc report_vector(const Vec2& v) { return ReportDoc::array({report_number(v.x), report_number(v.y)}); }

ReportDoc report_lines(const LineSet& lines) {
  ReportDoc arr = ReportDoc::array();
  for (double a : lines.angles()) arr.push_back(report_number(a));
  return arr;
}

ReportDoc report_canonical(const CanonicalForm& cf) {
  ReportDoc j = ReportDoc::object();
  if (std::holds_alternative<SimilitudeForm>(cf)) {
    j["family"] = "similitude";
  } else if (const auto* d = std::get_if<DiagonalForm>(&cf)) {
    j["family"] = "diagonal";
    j["phi"] = report_number(d->phi);
    j["s"] = report_number(d->s);
  } else {
    const auto& s = std::get<ShearletForm>(cf);
    j["family"] = "shearlet";
    j["phi"] = report_number(s.phi);
    j["c"] = report_number(s.c);
  }
  return j;
}

ReportDoc report_group(const GroupSpec& spec) {
  ReportDoc j = ReportDoc::object();
  j["family"] = spec.family().name();
  if (spec.kind() == FamilyKind::shearlet) j["c"] = report_number(spec.family().c);
  j["conjugator"] = report_matrix(spec.conjugator());
  return j;
}

std::string emit_report(const ReportDoc& doc) {
  std::string out;
  emit(doc, out, 0);
  out += "\n";
  return out;
}

ReportDoc parse_report(std::string_view text) {
  try {
    return ReportDoc::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorKind::parse, std::string("malformed report: ") + e.what());
  }
}

}  // namespace coorbit2d
