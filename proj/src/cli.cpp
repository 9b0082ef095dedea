#include "coorbit2d/cli.hpp"

#include <CLI11.hpp>
#include <algorithm>
#include <chrono>
#include <cmath>
#include <limits>
#include <numbers>
#include <optional>
#include <ostream>
#include <random>
#include <sstream>

#include "coorbit2d/coorbit_numerics.hpp"
#include "coorbit2d/error.hpp"
#include "coorbit2d/io_formats.hpp"
#include "coorbit2d/orbit_classify.hpp"
#include "coorbit2d/report.hpp"
#include "coorbit2d/sampling.hpp"
#include "coorbit2d/test_signals.hpp"

namespace coorbit2d {

namespace {

constexpr double kPi = std::numbers::pi;

struct SamplingOptions {
  double lambda_min = -2.0, lambda_max = 2.0;
  std::size_t lambda_count = 32;
  double lambda2_min = -2.0, lambda2_max = 2.0;
  std::size_t lambda2_count = 32;
  std::size_t angle_count = 32;
  double shear_min = -6.0, shear_max = 6.0;
  std::size_t shear_count = 64;

  SamplingConfig config() const {
    SamplingConfig c;
    c.log_scale = {lambda_min, lambda_max, lambda_count};
    c.log_scale2 = {lambda2_min, lambda2_max, lambda2_count};
    c.angle = {0.0, 2.0 * kPi, angle_count};
    c.shear = {shear_min, shear_max, shear_count};
    return c;
  }
};

struct Config {
  std::string group1, group2, signal, kind, matrix, out, out_signal, p_text = "2", group_for_atom;
  double tol = kDefaultTol;
  unsigned threads = 0;
  std::uint64_t seed = 1;
  bool planes = false;
  std::optional<double> max_error, max_deviation;
  SamplingOptions sampling;
  SignalParams signal_params;
  std::string center_text, position_text;
  bool random_position = false;
  std::size_t members = 5;
  double first_radius = 0.7, radius_growth = 1.4;
  double first_direction = -0.25, direction_step = -0.07;
};

void add_sampling_options(CLI::App* cmd, SamplingOptions& s) {
  cmd->add_option("--lambda-min", s.lambda_min, "Lower log-scale bound")->capture_default_str();
  cmd->add_option("--lambda-max", s.lambda_max, "Upper log-scale bound")->capture_default_str();
  cmd->add_option("--lambda-count", s.lambda_count, "Log-scale samples")->capture_default_str();
  cmd->add_option("--lambda2-min", s.lambda2_min, "Second log-scale lower bound (diagonal)")->capture_default_str();
  cmd->add_option("--lambda2-max", s.lambda2_max, "Second log-scale upper bound (diagonal)")->capture_default_str();
  cmd->add_option("--lambda2-count", s.lambda2_count, "Second log-scale samples (diagonal)")->capture_default_str();
  cmd->add_option("--angle-count", s.angle_count, "Angle samples on [0, 2pi) (similitude)")->capture_default_str();
  cmd->add_option("--shear-min", s.shear_min, "Lower shear bound (shearlet)")->capture_default_str();
  cmd->add_option("--shear-max", s.shear_max, "Upper shear bound (shearlet)")->capture_default_str();
  cmd->add_option("--shear-count", s.shear_count, "Shear samples (shearlet)")->capture_default_str();
}

std::vector<double> parse_list(const std::string& text, std::size_t expected, const char* what) {
  std::vector<double> v;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      std::size_t used = 0;
      v.push_back(std::stod(item, &used));
      if (used != item.size()) throw std::invalid_argument(item);
    } catch (const std::exception&) {
      throw Error(ErrorKind::out_of_range, std::string(what) + ": '" + item + "' is not a number");
    }
  }
  if (v.size() != expected) {
    throw Error(ErrorKind::out_of_range,
                std::string(what) + " needs " + std::to_string(expected) + " comma-separated numbers");
  }
  return v;
}

double parse_p(const std::string& text) {
  if (text == "inf" || text == "infinity") return std::numeric_limits<double>::infinity();
  const double p = parse_list(text, 1, "--p")[0];
  if (!(p > 0.0)) throw Error(ErrorKind::out_of_range, "--p must be > 0");
  return p;
}

class Reporter {
 public:
  Reporter(std::string command) : start_(std::chrono::steady_clock::now()) {
    doc_["command"] = std::move(command);
    doc_["inputs"] = ReportDoc::object();
    doc_["result"] = ReportDoc::object();
  }

  ReportDoc& inputs() { return doc_["inputs"]; }
  ReportDoc& result() { return doc_["result"]; }
  ReportDoc& operator[](const char* key) { return doc_[key]; }

  void write(const std::string& out_path, std::ostream& out) {
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start_).count();
    doc_["timing"] = {{"elapsed_seconds", secs}};
    const std::string text = emit_report(doc_);
    if (out_path.empty()) {
      out << text;
    } else {
      write_text_file(out_path, text);
    }
  }

 private:
  ReportDoc doc_ = ReportDoc::object();
  std::chrono::steady_clock::time_point start_;
};

ReportDoc sampling_report(const GroupSpec& spec, const SamplingOptions& s, std::size_t points) {
  ReportDoc j = ReportDoc::object();
  switch (spec.kind()) {
    case FamilyKind::similitude:
      j["log_scale"] = {report_number(s.lambda_min), report_number(s.lambda_max), s.lambda_count};
      j["angle"] = {0.0, report_number(2.0 * kPi), s.angle_count};
      break;
    case FamilyKind::diagonal:
      j["log_scale1"] = {report_number(s.lambda_min), report_number(s.lambda_max), s.lambda_count};
      j["log_scale2"] = {report_number(s.lambda2_min), report_number(s.lambda2_max), s.lambda2_count};
      break;
    case FamilyKind::shearlet:
      j["log_scale"] = {report_number(s.lambda_min), report_number(s.lambda_max), s.lambda_count};
      j["shear"] = {report_number(s.shear_min), report_number(s.shear_max), s.shear_count};
      break;
  }
  j["points"] = points;
  return j;
}

ReportDoc chart_report(const ChartPoint& p) {
  ReportDoc j = ReportDoc::object();
  if (const auto* s = std::get_if<SimilitudeChart>(&p)) {
    j["log_scale"] = report_number(s->log_scale);
    j["angle"] = report_number(s->angle);
  } else if (const auto* d = std::get_if<DiagonalChart>(&p)) {
    j["log_scale1"] = report_number(d->log_scale1);
    j["log_scale2"] = report_number(d->log_scale2);
    j["sign1"] = d->sign1;
    j["sign2"] = d->sign2;
  } else {
    const auto& h = std::get<ShearletChart>(p);
    j["sign"] = h.sign;
    j["log_scale"] = report_number(h.log_scale);
    j["shear"] = report_number(h.shear);
  }
  return j;
}

ReportDoc warnings_report(const std::vector<std::string>& w) {
  ReportDoc arr = ReportDoc::array();
  for (const auto& s : w) arr.push_back(s);
  return arr;
}

// A frequency comfortably inside the default sampling coverage, per family.
Vec2 interior_frequency(const GroupSpec& spec) {
  Vec2 eta;
  switch (spec.kind()) {
    case FamilyKind::similitude: eta = {1.0, 0.3}; break;
    case FamilyKind::diagonal: eta = {1.0, 0.8}; break;
    case FamilyKind::shearlet: eta = {1.0, 0.2}; break;
  }
  return spec.conjugator().inverse_transpose() * eta;
}

// Integer unimodular group element with a single-sample chart, per family.
Mat2 lattice_dilation(const GroupSpec& spec) {
  switch (spec.kind()) {
    case FamilyKind::similitude: return spec.from_standard(standard_element(spec.family(), SimilitudeChart{0.0, kPi / 2}));
    case FamilyKind::diagonal: return spec.from_standard(Mat2::diag(-1.0, 1.0));
    case FamilyKind::shearlet: return spec.from_standard(Mat2{-1.0, -1.0, 0.0, -1.0});
  }
  return Mat2::identity();
}

bool is_integer_unimodular(const Mat2& m) {
  for (double v : m.entries()) {
    if (std::abs(v - std::round(v)) > 1e-12) return false;
  }
  return std::abs(std::abs(m.det()) - 1.0) < 1e-12;
}

int cmd_classify(const Config& c, std::ostream& out) {
  Reporter r("classify");
  const GroupSpec spec = parse_group_spec(c.group1);
  r.inputs()["group"] = c.group1;
  r.inputs()["spec"] = report_group(spec);
  const auto cf = canonicalize(spec);
  const LineSet comp = orbit_complement(spec);
  r.result()["canonical"] = report_canonical(cf);
  r.result()["components"] = component_count(spec);
  r.result()["complement_radians"] = report_lines(comp);
  ReportDoc deg = ReportDoc::array();
  for (double a : comp.angles()) deg.push_back(report_number(a * 180.0 / kPi));
  r.result()["complement_degrees"] = deg;
  r.result()["representative_conjugator"] = report_matrix(rep_group(cf).conjugator());
  r["tolerances"] = {{"tol", c.tol}};
  r.write(c.out, out);
  return kExitOk;
}

int cmd_equiv(const Config& c, std::ostream& out) {
  Reporter r("equiv");
  const GroupSpec a = parse_group_spec(c.group1);
  const GroupSpec b = parse_group_spec(c.group2);
  r.inputs()["group1"] = c.group1;
  r.inputs()["group2"] = c.group2;
  r.inputs()["spec1"] = report_group(a);
  r.inputs()["spec2"] = report_group(b);
  const auto v = coorbit_equivalent(a, b, c.tol);
  r.result()["equivalent"] = v.equivalent;
  r.result()["reason"] = v.reason;
  r["certificates"] = {
      {"component_counts", {v.component_counts.first, v.component_counts.second}},
      {"complements", {report_lines(v.complements.first), report_lines(v.complements.second)}},
      {"canonicals", {report_canonical(v.canonicals.first), report_canonical(v.canonicals.second)}},
  };
  r["tolerances"] = {{"tol", c.tol}};
  r.write(c.out, out);
  return v.equivalent ? kExitOk : kExitNegative;
}

int cmd_symmetry(const Config& c, std::ostream& out) {
  Reporter r("symmetry");
  const GroupSpec spec = parse_group_spec(c.group1);
  const auto m = parse_list(c.matrix, 4, "--matrix");
  const Mat2 a{m[0], m[1], m[2], m[3]};
  require_invertible(a, "--matrix");
  r.inputs()["group"] = c.group1;
  r.inputs()["spec"] = report_group(spec);
  r.inputs()["matrix"] = report_matrix(a);
  const auto s = symmetry_membership(spec, a, c.tol);
  r.result()["normalizer"] = s.normalizer;
  r.result()["coorbit_symmetry"] = s.coorbit;
  r.result()["orbit_symmetry"] = s.orbit;
  r["certificates"] = {{"complement", report_lines(orbit_complement(spec))},
                       {"complement_image", report_lines(orbit_complement(spec.conjugated(a)))}};
  r["tolerances"] = {{"tol", c.tol}};
  r.write(c.out, out);
  return kExitOk;
}

struct NumericSetup {
  GroupSpec spec;
  GroupSampling sampling;
  WaveletSpec psi;
};

NumericSetup numeric_setup(const std::string& path, const SamplingOptions& s) {
  const GroupSpec spec = parse_group_spec(path);
  return {spec, make_sampling(spec, s.config()), default_wavelet(spec)};
}

void echo_numeric_inputs(Reporter& r, const Config& c, const NumericSetup& ns) {
  r.inputs()["group"] = c.group1;
  r.inputs()["spec"] = report_group(ns.spec);
  r.inputs()["sampling"] = sampling_report(ns.spec, c.sampling, ns.sampling.size());
  r.inputs()["wavelet"] = {{"center_scale", ns.psi.center_scale}, {"bandwidth", ns.psi.bandwidth}};
}

int cmd_analyze(const Config& c, std::ostream& out) {
  Reporter r("analyze");
  const auto ns = numeric_setup(c.group1, c.sampling);
  const GridSignal f = read_signal(c.signal);
  echo_numeric_inputs(r, c, ns);
  r.inputs()["signal"] = c.signal;
  const CoeffSlab slab = analyze(f, ns.spec, ns.sampling, ns.psi, c.threads);
  const auto energies = plane_energies(slab);
  double total = 0.0;
  for (std::size_t h = 0; h < energies.size(); ++h) total += slab.sampling.points[h].g * energies[h];
  r.result()["grid"] = {{"n", slab.n}, {"extent", slab.extent}};
  r.result()["plane_count"] = slab.planes.size();
  r.result()["max_modulus"] = report_number(slab.max_modulus());
  r.result()["l2_norm_squared"] = report_number(total);
  r.result()["signal_l2_norm_squared"] = report_number(f.l2_norm() * f.l2_norm());
  if (c.planes) {
    ReportDoc rows = ReportDoc::array();
    for (std::size_t h = 0; h < energies.size(); ++h) {
      rows.push_back({{"chart", chart_report(slab.sampling.points[h].point)},
                      {"g_weight", report_number(slab.sampling.points[h].g)},
                      {"energy", report_number(energies[h])}});
    }
    r.result()["planes"] = rows;
  }
  r["warnings"] = warnings_report(slab.warnings);
  r.write(c.out, out);
  return kExitOk;
}

int cmd_norm(const Config& c, std::ostream& out) {
  Reporter r("norm");
  const auto ns = numeric_setup(c.group1, c.sampling);
  const GridSignal f = read_signal(c.signal);
  const double p = parse_p(c.p_text);
  echo_numeric_inputs(r, c, ns);
  r.inputs()["signal"] = c.signal;
  r.inputs()["p"] = report_number(p);
  const double ps[] = {p};
  const auto res = stream_analysis(f, ns.spec, ns.sampling, ns.psi, ps, std::nullopt, c.threads);
  r.result()["norm"] = report_number(res.norms[0]);
  r["warnings"] = warnings_report(res.warnings);
  r.write(c.out, out);
  return kExitOk;
}

int cmd_invert(const Config& c, std::ostream& out) {
  Reporter r("invert");
  const auto ns = numeric_setup(c.group1, c.sampling);
  const GridSignal f = read_signal(c.signal);
  echo_numeric_inputs(r, c, ns);
  r.inputs()["signal"] = c.signal;
  const auto xi = default_calderon_samples(ns.spec);
  const auto cal = calderon_constant(ns.spec, ns.psi, xi, ns.sampling);
  const double ps[] = {2.0};
  const auto res = stream_analysis(f, ns.spec, ns.sampling, ns.psi, ps, cal.mean, c.threads);
  const double err = relative_l2_error(*res.reconstruction, f);
  const double fn = f.l2_norm();
  r.result()["calderon_constant"] = report_number(cal.mean);
  r.result()["relative_l2_error"] = report_number(err);
  r.result()["isometry_ratio"] = report_number(fn > 0 ? res.norms[0] * res.norms[0] / (cal.mean * fn * fn) : 0.0);
  if (!c.out_signal.empty()) {
    write_signal(c.out_signal, *res.reconstruction);
    r.result()["reconstruction"] = c.out_signal;
  }
  const double bound = c.max_error.value_or(5e-2);
  r["tolerances"] = {{"max_error", bound}};
  r["warnings"] = warnings_report(res.warnings);
  const bool ok = err <= bound;
  r.result()["within_tolerance"] = ok;
  r.write(c.out, out);
  return ok ? kExitOk : kExitNumeric;
}

int cmd_calderon(const Config& c, std::ostream& out) {
  Reporter r("calderon");
  const auto ns = numeric_setup(c.group1, c.sampling);
  echo_numeric_inputs(r, c, ns);
  const auto xi = default_calderon_samples(ns.spec);
  const auto cal = calderon_constant(ns.spec, ns.psi, xi, ns.sampling);
  r.result()["mean"] = report_number(cal.mean);
  r.result()["relative_deviation"] = report_number(cal.relative_deviation);
  ReportDoc rows = ReportDoc::array();
  for (std::size_t i = 0; i < xi.size(); ++i) {
    rows.push_back({{"xi", report_vector(xi[i])}, {"value", report_number(cal.values[i])}});
  }
  r.result()["samples"] = rows;
  const double bound = c.max_deviation.value_or(1e-2);
  r["tolerances"] = {{"max_deviation", bound}};
  const bool ok = cal.relative_deviation <= bound;
  r.result()["within_tolerance"] = ok;
  r.write(c.out, out);
  return ok ? kExitOk : kExitNumeric;
}

int cmd_covariance(const Config& c, std::ostream& out) {
  Reporter r("covariance");
  const GroupSpec spec = parse_group_spec(c.group1);
  const WaveletSpec psi = default_wavelet(spec);
  SignalParams sp = c.signal_params;
  sp.center = interior_frequency(spec);
  const TestSignal f = gen_test_signal(SignalKind::gaussian, sp, nullptr);
  r.inputs()["group"] = c.group1;
  r.inputs()["spec"] = report_group(spec);
  r.inputs()["signal"] = {{"kind", "gaussian"}, {"n", sp.n}, {"extent", sp.extent},
                          {"center", report_vector(sp.center)}, {"width", sp.width}};
  r.inputs()["seed"] = c.seed;

  std::mt19937_64 rng(c.seed);
  std::uniform_int_distribution<int> shift(-static_cast<int>(sp.n / 4), static_cast<int>(sp.n / 4));
  const double dx = f.grid.spacing();
  const Vec2 y{shift(rng) * dx, shift(rng) * dx};
  const ChartPoint at = *chart_from_element(spec, Mat2::identity());

  struct Case {
    std::string name;
    CovarianceCase c;
    std::optional<double> bound;
  };
  const Mat2 g = lattice_dilation(spec);
  std::vector<Case> cases = {
      {"identity", {{0.0, 0.0}, Mat2::identity(), at}, 0.0},
      {"grid_translation", {y, Mat2::identity(), at}, 1e-10},
      {"sampled_dilation", {y, g, at}, is_integer_unimodular(g) ? std::optional<double>(1e-8) : std::nullopt},
  };
  bool ok = true;
  ReportDoc rows = ReportDoc::array();
  for (const auto& k : cases) {
    const double res = covariance_residual(f, k.c, spec, psi);
    ReportDoc row = {{"case", k.name},
                     {"translation", report_vector(k.c.translation)},
                     {"dilation", report_matrix(k.c.dilation)},
                     {"residual", report_number(res)}};
    row["bound"] = k.bound ? report_number(*k.bound) : ReportDoc(nullptr);
    if (k.bound && res > *k.bound) ok = false;
    rows.push_back(row);
  }
  r.result()["cases"] = rows;
  r.result()["within_tolerance"] = ok;
  r["warnings"] = warnings_report(f.warnings);
  r.write(c.out, out);
  return ok ? kExitOk : kExitNumeric;
}

int cmd_compare(const Config& c, std::ostream& out) {
  Reporter r("compare");
  const auto a = numeric_setup(c.group1, c.sampling);
  const auto b = numeric_setup(c.group2, c.sampling);
  const double p = parse_p(c.p_text);
  r.inputs()["group1"] = c.group1;
  r.inputs()["group2"] = c.group2;
  r.inputs()["spec1"] = report_group(a.spec);
  r.inputs()["spec2"] = report_group(b.spec);
  r.inputs()["sampling"] = sampling_report(a.spec, c.sampling, a.sampling.size());
  r.inputs()["p"] = report_number(p);
  r.inputs()["seed"] = c.seed;

  std::mt19937_64 rng(c.seed);
  std::uniform_real_distribution<double> jitter(-0.01, 0.01);
  std::vector<TestSignal> family;
  ReportDoc members = ReportDoc::array();
  for (std::size_t k = 0; k < c.members; ++k) {
    SignalParams sp = c.signal_params;
    sp.radius = c.first_radius * std::pow(c.radius_growth, static_cast<double>(k));
    sp.direction = c.first_direction + static_cast<double>(k) * c.direction_step + jitter(rng);
    sp.radial_width = 0.1 * sp.radius;
    sp.angular_width = 0.05;
    family.push_back(gen_test_signal(SignalKind::packet, sp));
    members.push_back({{"radius", report_number(sp.radius)}, {"direction", report_number(sp.direction)}});
  }
  const GroupSetup g1{a.spec, a.sampling, a.psi};
  const GroupSetup g2{b.spec, b.sampling, b.psi};
  const auto prof = norm_ratio_profile(g1, g2, p, family, c.threads);
  ReportDoc rows = ReportDoc::array();
  double lo = 0, hi = 0;
  bool first = true;
  for (std::size_t k = 0; k < prof.rows.size(); ++k) {
    const auto& row = prof.rows[k];
    if (!row.degenerate) {
      lo = first ? row.ratio : std::min(lo, row.ratio);
      hi = first ? row.ratio : std::max(hi, row.ratio);
      first = false;
    }
    rows.push_back({{"member", members[k]},
                    {"norm1", report_number(row.norm1)},
                    {"norm2", report_number(row.norm2)},
                    {"ratio", report_number(row.ratio)},
                    {"degenerate", row.degenerate},
                    {"cumulative_spread", report_number(first ? std::nan("") : hi / lo)}});
  }
  r.result()["rows"] = rows;
  r.result()["min_ratio"] = report_number(prof.min_ratio);
  r.result()["max_ratio"] = report_number(prof.max_ratio);
  r.result()["spread"] = report_number(prof.spread);
  r.write(c.out, out);
  return kExitOk;
}

int cmd_gen_signal(const Config& c, std::ostream& out) {
  Reporter r("gen-signal");
  const SignalKind kind = parse_signal_kind(c.kind);
  SignalParams sp = c.signal_params;
  if (!c.center_text.empty()) {
    const auto v = parse_list(c.center_text, 2, "--center");
    sp.center = {v[0], v[1]};
  }
  if (!c.position_text.empty()) {
    const auto v = parse_list(c.position_text, 2, "--position");
    sp.position = {v[0], v[1]};
  }
  if (c.random_position) {
    std::mt19937_64 rng(c.seed);
    std::uniform_real_distribution<double> u(-sp.extent / 4, sp.extent / 4);
    sp.position = {u(rng), u(rng)};
  }
  std::optional<WaveletSpec> psi;
  if (kind == SignalKind::psi_atom) {
    if (c.group_for_atom.empty()) throw Error(ErrorKind::out_of_range, "psi-atom needs --group");
    psi = default_wavelet(parse_group_spec(c.group_for_atom));
  }
  const TestSignal s = gen_test_signal(kind, sp, psi ? &*psi : nullptr);
  if (c.out_signal.empty()) throw Error(ErrorKind::out_of_range, "gen-signal needs --out-signal");
  write_signal(c.out_signal, s.grid);
  r.inputs()["kind"] = to_string(kind);
  r.inputs()["n"] = sp.n;
  r.inputs()["extent"] = report_number(sp.extent);
  r.inputs()["amplitude"] = report_number(sp.amplitude);
  r.inputs()["center"] = report_vector(sp.center);
  r.inputs()["width"] = report_number(sp.width);
  r.inputs()["position"] = report_vector(sp.position);
  if (kind == SignalKind::packet) {
    r.inputs()["radius"] = report_number(sp.radius);
    r.inputs()["direction"] = report_number(sp.direction);
    r.inputs()["radial_width"] = report_number(sp.radial_width);
    r.inputs()["angular_width"] = report_number(sp.angular_width);
  }
  if (psi) r.inputs()["group"] = c.group_for_atom;
  r.inputs()["seed"] = c.seed;
  r.result()["path"] = c.out_signal;
  r.result()["l2_norm"] = report_number(s.grid.l2_norm());
  r.result()["analytic_l2_norm"] =
      s.analytic_energy ? report_number(std::sqrt(*s.analytic_energy)) : ReportDoc(nullptr);
  r["warnings"] = warnings_report(s.warnings);
  r.write(c.out, out);
  return kExitOk;
}

int exit_code_for(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::parse:
    case ErrorKind::io: return kExitIo;
    case ErrorKind::numeric: return kExitNumeric;
    default: return kExitUsage;
  }
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{
      "coorbit2d: classification of planar dilation groups up to coorbit equivalence and sampled "
      "continuous wavelet transforms.\n"
      "Exit codes: 0 ok/equivalent, 1 usage, 2 I/O or parse error, 3 not equivalent, 4 tolerance breach.\n"
      "Environment: COORBIT2D_THREADS caps worker threads."};
  app.name("coorbit2d");
  app.require_subcommand(1);
  Config c;

  auto common = [&c](CLI::App* cmd) {
    cmd->add_option("--out", c.out, "Write the report here instead of stdout");
    cmd->add_option("--tol", c.tol, "Relative tolerance for matrix and angle comparisons")->capture_default_str();
  };
  auto numeric = [&c](CLI::App* cmd) {
    add_sampling_options(cmd, c.sampling);
    cmd->add_option("--threads", c.threads, "Worker threads (0: COORBIT2D_THREADS or all cores)")
        ->capture_default_str();
  };
  auto signal_opts = [&c](CLI::App* cmd) {
    cmd->add_option("--n", c.signal_params.n, "Grid size (power of two)")->capture_default_str();
    cmd->add_option("--extent", c.signal_params.extent, "Grid extent L")->capture_default_str();
    cmd->add_option("--seed", c.seed, "Seed for randomized signal parameters")->capture_default_str();
  };

  auto* classify = app.add_subcommand("classify", "Canonical form, components and orbit complement");
  classify->add_option("group", c.group1, "Group spec file")->required();
  common(classify);

  auto* equiv = app.add_subcommand("equiv", "Decide coorbit equivalence (exit 0 equivalent, 3 not)");
  equiv->add_option("group1", c.group1, "First group spec")->required();
  equiv->add_option("group2", c.group2, "Second group spec")->required();
  common(equiv);

  auto* symmetry = app.add_subcommand("symmetry", "Normalizer / coorbit / orbit symmetry membership");
  symmetry->add_option("group", c.group1, "Group spec file")->required();
  symmetry->add_option("--matrix", c.matrix, "Candidate matrix a,b,c,d (row-major)")->required();
  common(symmetry);

  auto* analyze_cmd = app.add_subcommand("analyze", "Wavelet coefficients summary");
  analyze_cmd->add_option("group", c.group1, "Group spec file")->required();
  analyze_cmd->add_option("signal", c.signal, "Signal file (.c2d binary or .csv)")->required();
  analyze_cmd->add_flag("--planes", c.planes, "Include the per-plane energy table");
  common(analyze_cmd);
  numeric(analyze_cmd);

  auto* norm = app.add_subcommand("norm", "Coorbit L^p quasi-norm");
  norm->add_option("group", c.group1, "Group spec file")->required();
  norm->add_option("signal", c.signal, "Signal file")->required();
  norm->add_option("--p", c.p_text, "Exponent p > 0 or 'inf'")->capture_default_str();
  common(norm);
  numeric(norm);

  auto* invert_cmd = app.add_subcommand("invert", "Analyze, reconstruct and report the L2 error");
  invert_cmd->add_option("group", c.group1, "Group spec file")->required();
  invert_cmd->add_option("signal", c.signal, "Signal file")->required();
  invert_cmd->add_option("--out-signal", c.out_signal, "Write the reconstruction here");
  invert_cmd->add_option("--max-error", c.max_error, "Relative L2 error bound (default 0.05)");
  common(invert_cmd);
  numeric(invert_cmd);

  auto* calderon = app.add_subcommand("calderon", "Calderon constant over 16 orbit-interior frequencies");
  calderon->add_option("group", c.group1, "Group spec file")->required();
  calderon->add_option("--max-deviation", c.max_deviation, "Relative deviation bound (default 0.01)");
  common(calderon);
  numeric(calderon);

  auto* covariance = app.add_subcommand("covariance", "Covariance identity residuals");
  covariance->add_option("group", c.group1, "Group spec file")->required();
  c.signal_params.n = 64;
  c.signal_params.extent = 8.0;
  covariance->add_option("--width", c.signal_params.width, "Gaussian spectral width")->capture_default_str();
  common(covariance);
  signal_opts(covariance);

  auto* compare = app.add_subcommand("compare", "Coorbit norm ratios over a wave-packet family");
  compare->add_option("group1", c.group1, "First group spec")->required();
  compare->add_option("group2", c.group2, "Second group spec")->required();
  compare->add_option("--p", c.p_text, "Exponent p > 0 or 'inf'")->capture_default_str();
  compare->add_option("--members", c.members, "Family size")->capture_default_str();
  compare->add_option("--radius", c.first_radius, "First packet frequency")->capture_default_str();
  compare->add_option("--radius-growth", c.radius_growth, "Frequency factor between members")->capture_default_str();
  compare->add_option("--direction", c.first_direction, "First packet direction (radians)")->capture_default_str();
  compare->add_option("--direction-step", c.direction_step, "Rotation between members")->capture_default_str();
  common(compare);
  numeric(compare);
  signal_opts(compare);

  auto* gen = app.add_subcommand("gen-signal", "Write a closed-form test signal");
  gen->add_option("kind", c.kind, "gaussian | bump | packet | psi-atom | zero")->required();
  gen->add_option("--out-signal", c.out_signal, "Output signal path")->required();
  gen->add_option("--amplitude", c.signal_params.amplitude, "Amplitude")->capture_default_str();
  gen->add_option("--center", c.center_text, "Spectral center x,y (gaussian, bump)");
  gen->add_option("--width", c.signal_params.width, "Gaussian sigma or bump radius")->capture_default_str();
  gen->add_option("--position", c.position_text, "Spatial position x,y");
  gen->add_flag("--random-position", c.random_position, "Draw the spatial position from --seed");
  gen->add_option("--radius", c.signal_params.radius, "Packet center frequency")->capture_default_str();
  gen->add_option("--direction", c.signal_params.direction, "Packet direction (radians)")->capture_default_str();
  gen->add_option("--radial-width", c.signal_params.radial_width, "Packet radial width")->capture_default_str();
  gen->add_option("--angular-width", c.signal_params.angular_width, "Packet angular width")->capture_default_str();
  gen->add_option("--group", c.group_for_atom, "Group spec (psi-atom)");
  common(gen);
  signal_opts(gen);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  }

  // covariance/compare use their own signal defaults; gen-signal uses the library ones
  if (gen->parsed()) {
    const SignalParams defaults;
    if (gen->count("--n") == 0) c.signal_params.n = defaults.n;
    if (gen->count("--extent") == 0) c.signal_params.extent = defaults.extent;
  }

  try {
    if (classify->parsed()) return cmd_classify(c, out);
    if (equiv->parsed()) return cmd_equiv(c, out);
    if (symmetry->parsed()) return cmd_symmetry(c, out);
    if (analyze_cmd->parsed()) return cmd_analyze(c, out);
    if (norm->parsed()) return cmd_norm(c, out);
    if (invert_cmd->parsed()) return cmd_invert(c, out);
    if (calderon->parsed()) return cmd_calderon(c, out);
    if (covariance->parsed()) return cmd_covariance(c, out);
    if (compare->parsed()) return cmd_compare(c, out);
    if (gen->parsed()) return cmd_gen_signal(c, out);
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return exit_code_for(e.kind());
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitNumeric;
  }
  return kExitUsage;
}

}  // namespace coorbit2d
