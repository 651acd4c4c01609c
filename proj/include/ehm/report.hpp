#pragma once

// Run configuration, pass/fail check records, and serialization of the
// verification reports (JSON) and geometry sample tables (CSV).

#include <cstdint>
#include <string>
#include <vector>

#include "ehm/geometry.hpp"

namespace ehm {

inline constexpr const char* kVersion = "1.0.0";

struct RunConfig {
  int k = 2;
  int l = 1;
  std::uint64_t seed = 1;
  int grid = 50;
  double norm = 0.5;
  std::string backend = "float";  // "float" or "exact" (decompose only)
  std::string out_dir;            // empty means default_out_dir()

  // EHMAP_OUT_DIR from the environment, falling back to ".".
  static std::string default_out_dir();
  std::string resolved_out_dir() const {
    return out_dir.empty() ? default_out_dir() : out_dir;
  }
};

struct CheckRecord {
  std::string name;
  double measured = 0.0;
  double expected = 0.0;
  double tolerance = 0.0;
  bool pass = false;
};

class Report {
 public:
  Report(std::string command, RunConfig cfg);

  // Numeric check: pass iff |measured - expected| <= tolerance.
  void add_check(const std::string& name, double measured, double expected,
                 double tolerance);
  // Boolean check, recorded as measured 1/0 against expected 1.
  void add_flag(const std::string& name, bool pass);

  bool overall() const;
  const std::vector<CheckRecord>& checks() const { return checks_; }

  // Stable serialization: keys sorted, fixed layout; identical runs produce
  // identical bytes except for the timestamp_utc field.
  std::string to_json() const;
  void write(const std::string& path) const;

 private:
  std::string command_;
  RunConfig cfg_;
  std::vector<CheckRecord> checks_;
};

// Geometry samples as CSV with the fixed header
// z_re,z_im,m,cos_theta,e,A11,A12,A22,F.
void write_csv(const std::string& path, const std::vector<GeomSample>& samples);

}  // namespace ehm
