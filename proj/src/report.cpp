#include "gnsym/report.hpp"

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace gnsym {

namespace {

// Fixed 17 significant digits so reports are byte-stable and round-trip exactly.
std::string num(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

}  // namespace

Json to_json(const Verdict& v) {
  Json j;
  j["status"] = to_string(v.status);
  j["reasons"] = Json::array();
  for (const auto& c : v.reasons) j["reasons"].push_back({{"id", c.id}, {"satisfied", c.satisfied}, {"text", c.text}});
  if (v.value) j[v.value_label.empty() ? "value" : v.value_label] = v.value->get_str();
  return j;
}

Json to_json(const SlopeReport& r) {
  Json j;
  j["version"] = kReportVersion;
  j["experiment"] = r.experiment;
  j["kind"] = r.kind;
  j["inputs"] = Json::object();
  for (const auto& [k, v] : r.inputs) j["inputs"][k] = v;
  j["samples"] = Json::array();
  for (std::size_t i = 0; i < r.abscissae.size(); ++i) {
    Json s;
    s["x"] = r.abscissae[i];
    s["y"] = r.ordinates[i];
    if (i < r.samples.size()) {
      const auto& q = r.samples[i];
      s["family"] = to_string(q.family);
      s["parameter"] = q.parameter;
      s["quotient"] = q.quotient;
      s["norm_u"] = q.norm_u;
      s["norm_p1"] = q.norm_p1;
      s["norm_p2"] = q.norm_p2;
    }
    if (i < r.upper.size() && r.upper[i]) s["young_upper"] = *r.upper[i];
    j["samples"].push_back(s);
  }
  j["fit"] = {{"slope", r.fitted_slope}, {"intercept", r.intercept}, {"residual_rms", r.residual_rms}};
  j["predicted_slope"] = r.predicted.get_str();
  j["tolerance"] = r.tolerance;
  j["verdict"] = to_string(r.verdict);
  j["untight_probe"] = r.untight_probe;
  if (r.checker_status) j["checker_status"] = to_string(*r.checker_status);
  j["notes"] = r.notes;
  return j;
}

Json to_json(const ExtremizerResult& r) {
  Json j;
  j["version"] = kReportVersion;
  j["experiment"] = "extremizer";
  j["seed"] = r.seed;
  j["grid"] = {{"d", r.grid.d}, {"n", r.grid.n}, {"L", r.grid.L}};
  j["best_quotient"] = r.best;
  j["floor_quotient"] = r.floor_value;
  j["support_size"] = r.support.size();
  j["coefficients"] = Json::array();
  for (std::size_t i = 0; i < r.support.size(); ++i)
    j["coefficients"].push_back({r.support[i], r.coefficients[i].real(), r.coefficients[i].imag()});
  j["log"] = r.log;
  return j;
}

Json to_json(const WeightedCheck& w) {
  Json j = to_json(w.verdict);
  j["scaling_exponent"] = w.scaling_exponent.get_str();
  j["integrand_exponent"] = w.integrand_exponent.get_str();
  j["converges"] = w.converges;
  if (w.integral) j["integral"] = *w.integral;
  if (!w.note.empty()) j["note"] = w.note;
  return j;
}

Json to_json(const RegionPolyline& p) {
  Json j;
  j["label"] = p.label;
  j["kind"] = p.kind;
  j["vertices"] = Json::array();
  for (const auto& [x, y] : p.vertices) j["vertices"].push_back({x.get_str(), y.get_str()});
  return j;
}

std::string slope_csv(const SlopeReport& r) {
  std::ostringstream os;
  os << "version,experiment,x,y,family,parameter,quotient,norm_u,norm_p1,norm_p2,young_upper\n";
  for (std::size_t i = 0; i < r.abscissae.size(); ++i) {
    os << kReportVersion << ',' << r.experiment << ',' << num(r.abscissae[i]) << ',' << num(r.ordinates[i]);
    if (i < r.samples.size()) {
      const auto& q = r.samples[i];
      os << ',' << to_string(q.family) << ',' << num(q.parameter) << ',' << num(q.quotient) << ',' << num(q.norm_u)
         << ',' << num(q.norm_p1) << ',' << num(q.norm_p2);
    } else {
      os << ",,,,,,";
    }
    os << ',';
    if (i < r.upper.size() && r.upper[i]) os << num(*r.upper[i]);
    os << '\n';
  }
  return os.str();
}

void write_text(const std::string& path, const std::string& text) {
  const std::filesystem::path p(path);
  if (p.has_parent_path()) std::filesystem::create_directories(p.parent_path());
  std::ofstream os(path, std::ios::binary);
  if (!os) throw std::runtime_error("cannot write " + path);
  os << text;
}

}  // namespace gnsym
