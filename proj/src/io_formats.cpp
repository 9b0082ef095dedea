#include "coorbit2d/io_formats.hpp"

#include <bit>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <iterator>
#include <json.hpp>
#include <sstream>
#include <string_view>

#include "coorbit2d/error.hpp"

namespace coorbit2d {

namespace {

using json = nlohmann::json;

constexpr std::size_t kMaxGrid = 1u << 14;

[[noreturn]] void parse_fail(const std::string& what) { throw Error(ErrorKind::parse, what); }

double json_number(const json& v, const std::string& key) {
  if (!v.is_number()) parse_fail("key '" + key + "' must be a number");
  const double d = v.get<double>();
  if (!std::isfinite(d)) parse_fail("key '" + key + "' must be finite");
  return d;
}

void put_u16(std::vector<std::uint8_t>& out, std::uint16_t v) {
  out.push_back(static_cast<std::uint8_t>(v & 0xff));
  out.push_back(static_cast<std::uint8_t>(v >> 8));
}

void put_u32(std::vector<std::uint8_t>& out, std::uint32_t v) {
  for (int i = 0; i < 4; ++i) out.push_back(static_cast<std::uint8_t>(v >> (8 * i)));
}

void put_f64(std::vector<std::uint8_t>& out, double d) {
  const auto v = std::bit_cast<std::uint64_t>(d);
  for (int i = 0; i < 8; ++i) out.push_back(static_cast<std::uint8_t>(v >> (8 * i)));
}

std::uint64_t get_le(std::span<const std::uint8_t> b, std::size_t at, int width) {
  std::uint64_t v = 0;
  for (int i = 0; i < width; ++i) v |= static_cast<std::uint64_t>(b[at + i]) << (8 * i);
  return v;
}

double get_f64(std::span<const std::uint8_t> b, std::size_t at) { return std::bit_cast<double>(get_le(b, at, 8)); }

std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

bool parse_double(std::string_view s, double& out) {
  s = trim(s);
  if (!s.empty() && s.front() == '+') s.remove_prefix(1);
  if (s.empty()) return false;
  const auto res = std::from_chars(s.data(), s.data() + s.size(), out);
  return res.ec == std::errc() && res.ptr == s.data() + s.size() && std::isfinite(out);
}

std::string format17(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

}  // namespace

GroupSpec parse_group_spec_text(std::string_view text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::exception& e) {
    parse_fail(std::string("malformed group spec document: ") + e.what());
  }
  if (!doc.is_object()) parse_fail("group spec must be a JSON object");
  for (const auto& [key, value] : doc.items()) {
    if (key != "family" && key != "c" && key != "conjugator") parse_fail("unknown key '" + key + "'");
  }
  if (!doc.contains("family")) parse_fail("missing family");
  if (!doc["family"].is_string()) parse_fail("key 'family' must be a string");
  const auto name = doc["family"].get<std::string>();

  Family family;
  if (name == "similitude") {
    family = Family::similitude();
  } else if (name == "diagonal") {
    family = Family::diagonal();
  } else if (name == "shearlet") {
    if (!doc.contains("c")) parse_fail("missing c");
    family = Family::shearlet(json_number(doc["c"], "c"));
  } else {
    parse_fail("key 'family' has unknown value '" + name + "'");
  }
  if (family.kind != FamilyKind::shearlet && doc.contains("c")) {
    parse_fail("key 'c' is only allowed for the shearlet family");
  }

  Mat2 conj = Mat2::identity();
  if (doc.contains("conjugator")) {
    const auto& m = doc["conjugator"];
    if (!m.is_array() || m.size() != 2 || !m[0].is_array() || !m[1].is_array() || m[0].size() != 2 ||
        m[1].size() != 2) {
      parse_fail("key 'conjugator' must be a 2x2 array of numbers");
    }
    conj = {json_number(m[0][0], "conjugator"), json_number(m[0][1], "conjugator"),
            json_number(m[1][0], "conjugator"), json_number(m[1][1], "conjugator")};
    if (conj.is_singular()) parse_fail("key 'conjugator' is singular");
  }
  return GroupSpec(family, conj);
}

GroupSpec parse_group_spec(const std::filesystem::path& path) { return parse_group_spec_text(read_text_file(path)); }

std::string group_spec_to_text(const GroupSpec& spec) {
  const Mat2& b = spec.conjugator();
  std::ostringstream os;
  os << "{\"family\": \"" << spec.family().name() << "\"";
  if (spec.kind() == FamilyKind::shearlet) os << ", \"c\": " << format17(spec.family().c);
  os << ", \"conjugator\": [[" << format17(b.m11) << ", " << format17(b.m12) << "], [" << format17(b.m21) << ", "
     << format17(b.m22) << "]]}\n";
  return os.str();
}

std::vector<std::uint8_t> encode_signal_binary(const GridSignal& s) {
  s.validate();
  std::vector<std::uint8_t> out;
  out.reserve(kSignalHeaderBytes + 16 * s.data.size());
  for (char ch : std::string_view("C2D1")) out.push_back(static_cast<std::uint8_t>(ch));
  put_u16(out, kSignalVersion);
  put_u32(out, static_cast<std::uint32_t>(s.n));
  put_f64(out, s.extent);
  for (const auto& v : s.data) {
    put_f64(out, v.real());
    put_f64(out, v.imag());
  }
  return out;
}

GridSignal decode_signal_binary(std::span<const std::uint8_t> b) {
  if (b.size() < kSignalHeaderBytes) parse_fail("truncated signal header");
  if (b[0] != 'C' || b[1] != '2' || b[2] != 'D' || b[3] != '1') parse_fail("bad signal magic");
  const auto version = static_cast<std::uint16_t>(get_le(b, 4, 2));
  if (version != kSignalVersion) parse_fail("unsupported signal version " + std::to_string(version));
  const auto n = static_cast<std::size_t>(get_le(b, 6, 4));
  if (n < 8 || n > kMaxGrid || !is_power_of_two(n)) parse_fail("invalid grid size " + std::to_string(n));
  const double extent = get_f64(b, 10);
  if (!(extent > 0.0) || !std::isfinite(extent)) parse_fail("invalid grid extent");
  const std::size_t expected = kSignalHeaderBytes + 16 * n * n;
  if (b.size() < expected) parse_fail("truncated signal payload");
  if (b.size() > expected) parse_fail("trailing bytes after signal payload");
  GridSignal s;
  s.n = n;
  s.extent = extent;
  s.data.resize(n * n);
  for (std::size_t i = 0; i < n * n; ++i) {
    const std::size_t at = kSignalHeaderBytes + 16 * i;
    s.data[i] = {get_f64(b, at), get_f64(b, at + 8)};
    if (!std::isfinite(s.data[i].real()) || !std::isfinite(s.data[i].imag())) {
      parse_fail("non-finite sample at index " + std::to_string(i));
    }
  }
  return s;
}

std::string encode_signal_csv(const GridSignal& s) {
  s.validate();
  std::string out = "# L=" + format17(s.extent) + "\n";
  for (std::size_t i = 0; i < s.n; ++i) {
    for (std::size_t j = 0; j < s.n; ++j) {
      if (j) out += ',';
      out += format17(s.at(i, j).real()) + "," + format17(s.at(i, j).imag());
    }
    out += '\n';
  }
  return out;
}

GridSignal decode_signal_csv(std::string_view text) {
  double extent = -1.0;
  std::vector<std::vector<cplx>> rows;
  std::size_t line_no = 0;
  while (!text.empty()) {
    const auto eol = text.find('\n');
    std::string_view line = text.substr(0, eol);
    text = eol == std::string_view::npos ? std::string_view{} : text.substr(eol + 1);
    ++line_no;
    line = trim(line);
    if (line.empty()) continue;
    if (line.front() == '#') {
      const auto body = trim(line.substr(1));
      if (body.substr(0, 2) == "L=") {
        if (!rows.empty()) parse_fail("CSV extent line must precede the data");
        if (!parse_double(body.substr(2), extent) || extent <= 0.0) {
          parse_fail("CSV line " + std::to_string(line_no) + ": invalid extent");
        }
      }
      continue;
    }
    std::vector<double> fields;
    std::size_t col = 0;
    while (true) {
      const auto comma = line.find(',');
      const auto cell = line.substr(0, comma);
      ++col;
      double v = 0.0;
      if (!parse_double(cell, v)) {
        parse_fail("CSV parse error at row " + std::to_string(rows.size() + 1) + ", column " + std::to_string(col) +
                   ": '" + std::string(trim(cell)) + "' is not a finite number");
      }
      fields.push_back(v);
      if (comma == std::string_view::npos) break;
      line = line.substr(comma + 1);
    }
    if (fields.size() % 2 != 0) {
      parse_fail("CSV row " + std::to_string(rows.size() + 1) + " has an odd number of fields");
    }
    std::vector<cplx> row;
    for (std::size_t k = 0; k < fields.size(); k += 2) row.emplace_back(fields[k], fields[k + 1]);
    rows.push_back(std::move(row));
  }
  const std::size_t n = rows.size();
  if (n < 8 || n > kMaxGrid || !is_power_of_two(n)) parse_fail("CSV grid must have a power-of-two row count >= 8");
  GridSignal s;
  s.n = n;
  s.extent = extent > 0.0 ? extent : static_cast<double>(n);
  s.data.reserve(n * n);
  for (std::size_t r = 0; r < n; ++r) {
    if (rows[r].size() != n) {
      parse_fail("CSV row " + std::to_string(r + 1) + " has " + std::to_string(rows[r].size()) + " cells, expected " +
                 std::to_string(n));
    }
    s.data.insert(s.data.end(), rows[r].begin(), rows[r].end());
  }
  return s;
}

namespace {
bool is_csv(const std::filesystem::path& p) { return p.extension() == ".csv" || p.extension() == ".CSV"; }
}  // namespace

GridSignal read_signal(const std::filesystem::path& path) {
  if (is_csv(path)) return decode_signal_csv(read_text_file(path));
  const std::string raw = read_text_file(path);
  return decode_signal_binary(std::span(reinterpret_cast<const std::uint8_t*>(raw.data()), raw.size()));
}

void write_signal(const std::filesystem::path& path, const GridSignal& s) {
  if (is_csv(path)) {
    write_text_file(path, encode_signal_csv(s));
    return;
  }
  const auto bytes = encode_signal_binary(s);
  write_text_file(path, std::string_view(reinterpret_cast<const char*>(bytes.data()), bytes.size()));
}

std::string read_text_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorKind::io, "cannot open '" + path.string() + "' for reading");
  std::string data((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
  if (in.bad()) throw Error(ErrorKind::io, "error reading '" + path.string() + "'");
  return data;
}

void write_text_file(const std::filesystem::path& path, std::string_view text) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw Error(ErrorKind::io, "cannot open '" + path.string() + "' for writing");
  out.write(text.data(), static_cast<std::streamsize>(text.size()));
  if (!out) throw Error(ErrorKind::io, "error writing '" + path.string() + "'");
}

}  // namespace coorbit2d
