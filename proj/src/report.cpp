#include "ehm/report.hpp"

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <ctime>
#include <fstream>
#include <stdexcept>
#include <utility>

#include "json.hpp"

namespace ehm {

std::string RunConfig::default_out_dir() {
  const char* env = std::getenv("EHMAP_OUT_DIR");
  return (env && *env) ? std::string(env) : std::string(".");
}

Report::Report(std::string command, RunConfig cfg)
    : command_(std::move(command)), cfg_(std::move(cfg)) {}

void Report::add_check(const std::string& name, double measured,
                       double expected, double tolerance) {
  CheckRecord rec;
  rec.name = name;
  rec.measured = measured;
  rec.expected = expected;
  rec.tolerance = tolerance;
  rec.pass = std::isfinite(measured) &&
             std::abs(measured - expected) <= tolerance;
  checks_.push_back(std::move(rec));
}

void Report::add_flag(const std::string& name, bool pass) {
  CheckRecord rec;
  rec.name = name;
  rec.measured = pass ? 1.0 : 0.0;
  rec.expected = 1.0;
  rec.tolerance = 0.0;
  rec.pass = pass;
  checks_.push_back(std::move(rec));
}

bool Report::overall() const {
  for (const CheckRecord& rec : checks_)
    if (!rec.pass) return false;
  return true;
}

namespace {

std::string utc_timestamp() {
  const std::time_t now = std::time(nullptr);
  std::tm tm{};
  gmtime_r(&now, &tm);
  char buf[32];
  std::strftime(buf, sizeof(buf), "%Y-%m-%dT%H:%M:%SZ", &tm);
  return buf;
}

}  // namespace

std::string Report::to_json() const {
  nlohmann::json j;
  nlohmann::json checks = nlohmann::json::array();
  for (const CheckRecord& rec : checks_) {
    nlohmann::json c;
    c["expected"] = rec.expected;
    c["measured"] = rec.measured;
    c["name"] = rec.name;
    c["pass"] = rec.pass;
    c["tolerance"] = rec.tolerance;
    checks.push_back(c);
  }
  j["checks"] = checks;
  j["command"] = command_;
  j["config"] = {{"backend", cfg_.backend}, {"grid", cfg_.grid},
                 {"k", cfg_.k},             {"l", cfg_.l},
                 {"norm", cfg_.norm},       {"out_dir", cfg_.resolved_out_dir()},
                 {"seed", cfg_.seed}};
  j["overall_pass"] = overall();
  j["provenance"] = {{"backend", cfg_.backend},
                     {"calibration_kappa", kKappa},
                     {"seed", cfg_.seed},
                     {"version", kVersion}};
  j["timestamp_utc"] = utc_timestamp();
  return j.dump(2) + "\n";
}

void Report::write(const std::string& path) const {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("Report::write: cannot open " + path);
  out << to_json();
}

void write_csv(const std::string& path,
               const std::vector<GeomSample>& samples) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("write_csv: cannot open " + path);
  out << "z_re,z_im,m,cos_theta,e,A11,A12,A22,F\n";
  char buf[64];
  const auto num = [&](double v) {
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return std::string(buf);
  };
  for (const GeomSample& s : samples) {
    out << num(s.z.real()) << ',' << num(s.z.imag()) << ',' << num(s.m) << ','
        << num(s.cos_theta) << ',' << num(s.e) << ',' << num(s.A(0, 0)) << ','
        << num(s.A(0, 1)) << ',' << num(s.A(1, 1)) << ',' << num(s.F) << '\n';
  }
}

}  // namespace ehm
