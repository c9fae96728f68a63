#pragma once
// Deterministic serialization: round-trip-safe float text (17 significant
// digits), JSON objects with sorted keys, and the CSV schemas shared by the
// CLI and the tests. Byte-identical output for identical inputs is a hard
// requirement, so floats are formatted by one function only.

#include <string>
#include <utility>
#include <vector>

#include "kawalab/branch.hpp"
#include "kawalab/evolution.hpp"
#include "kawalab/pf2.hpp"
#include "kawalab/petviashvili.hpp"

namespace kawalab {

std::string fmt_double(double v);  // printf %.17g

// Flat JSON object writer; keys are emitted sorted, values pre-rendered.
class JsonWriter {
 public:
  JsonWriter& put(const std::string& key, double v);
  JsonWriter& put(const std::string& key, int v);
  JsonWriter& put(const std::string& key, long long v);
  JsonWriter& put(const std::string& key, unsigned long long v);
  JsonWriter& put(const std::string& key, bool v);
  JsonWriter& put(const std::string& key, const std::string& v);
  JsonWriter& put(const std::string& key, const char* v);
  JsonWriter& put(const std::string& key, const std::vector<double>& v);
  std::string str() const;  // "{\n  \"a\": ...,\n ...}\n"

 private:
  JsonWriter& raw(const std::string& key, std::string rendered);
  std::vector<std::pair<std::string, std::string>> fields_;
};

std::string json_escape(const std::string& s);

// CSV emitters (header + %.17g rows, '.' decimal point, '\n' line ends).
std::string profile_csv(const GridProfile& profile);
std::string branch_csv(const std::vector<KawaharaBranchPoint>& points);
std::string mkawahara_branch_csv(const std::vector<MKawaharaBranchPoint>& points);
std::string diagnostics_csv(const std::vector<DiagnosticsRow>& rows);
std::string kernel_csv(const KernelSamples& kernel);

// Report JSON bodies.
std::string solve_report_json(const SolveReport& report);

struct SpectrumReportData {
  double omega = 0, gamma = 0;
  int N = 0;
  double L = 0;
  std::vector<double> eigs;
  int neg_count = 0;
  double zero_residual = 0;
  double cos_sim_zero_mode = 0;
  double index_I = 0;
  bool stable = false;
};
std::string spectrum_report_json(const SpectrumReportData& d);

std::string pf2_report_json(const LogConcavityReport& lc, const Tp2Report& tp2);

// Writes content to path; throws std::runtime_error on failure.
void write_text_file(const std::string& path, const std::string& content);

inline constexpr const char* kVersionStamp = "kawalab 1.0.0";

}  // namespace kawalab
