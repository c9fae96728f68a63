#include "kawalab/report.hpp"

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace kawalab {

std::string fmt_double(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

std::string json_escape(const std::string& s) {
  std::string out;
  out.reserve(s.size() + 2);
  for (char c : s) {
    switch (c) {
      case '"': out += "\\\""; break;
      case '\\': out += "\\\\"; break;
      case '\n': out += "\\n"; break;
      case '\t': out += "\\t"; break;
      case '\r': out += "\\r"; break;
      default:
        if (static_cast<unsigned char>(c) < 0x20) {
          char buf[8];
          std::snprintf(buf, sizeof buf, "\\u%04x", c);
          out += buf;
        } else {
          out += c;
        }
    }
  }
  return out;
}

JsonWriter& JsonWriter::raw(const std::string& key, std::string rendered) {
  fields_.emplace_back(key, std::move(rendered));
  return *this;
}

JsonWriter& JsonWriter::put(const std::string& key, double v) { return raw(key, fmt_double(v)); }
JsonWriter& JsonWriter::put(const std::string& key, int v) { return raw(key, std::to_string(v)); }
JsonWriter& JsonWriter::put(const std::string& key, long long v) {
  return raw(key, std::to_string(v));
}
JsonWriter& JsonWriter::put(const std::string& key, unsigned long long v) {
  return raw(key, std::to_string(v));
}
JsonWriter& JsonWriter::put(const std::string& key, bool v) {
  return raw(key, v ? "true" : "false");
}
JsonWriter& JsonWriter::put(const std::string& key, const std::string& v) {
  return raw(key, "\"" + json_escape(v) + "\"");
}
JsonWriter& JsonWriter::put(const std::string& key, const char* v) {
  return put(key, std::string(v));
}
JsonWriter& JsonWriter::put(const std::string& key, const std::vector<double>& v) {
  std::string s = "[";
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) s += ", ";
    s += fmt_double(v[i]);
  }
  s += "]";
  return raw(key, std::move(s));
}

std::string JsonWriter::str() const {
  auto fields = fields_;
  std::stable_sort(fields.begin(), fields.end(),
                   [](const auto& a, const auto& b) { return a.first < b.first; });
  std::string out = "{\n";
  for (std::size_t i = 0; i < fields.size(); ++i) {
    out += "  \"" + json_escape(fields[i].first) + "\": " + fields[i].second;
    if (i + 1 < fields.size()) out += ",";
    out += "\n";
  }
  out += "}\n";
  return out;
}

namespace {

std::string csv_table(const std::string& header, const std::vector<std::vector<double>>& rows,
                      const std::vector<std::string>* trailer = nullptr) {
  std::string out = header + "\n";
  for (std::size_t r = 0; r < rows.size(); ++r) {
    for (std::size_t c = 0; c < rows[r].size(); ++c) {
      if (c) out += ",";
      out += fmt_double(rows[r][c]);
    }
    if (trailer) out += "," + (*trailer)[r];
    out += "\n";
  }
  return out;
}

}  // namespace

std::string profile_csv(const GridProfile& profile) {
  std::vector<std::vector<double>> rows;
  rows.reserve(profile.values.size());
  for (int j = 0; j < profile.grid.n; ++j)
    rows.push_back({profile.grid.x(j), profile.values[static_cast<std::size_t>(j)]});
  return csv_table("xi,phi", rows);
}

std::string branch_csv(const std::vector<KawaharaBranchPoint>& points) {
  std::vector<std::vector<double>> rows;
  std::vector<std::string> sources;
  for (const auto& p : points) {
    rows.push_back({p.omega, p.lambda1, p.beta1, p.b, p.gamma1, p.norm_sq(), p.index()});
    sources.emplace_back(to_string(p.source));
  }
  return csv_table("omega,lambda1,beta1,b,gamma1,norm_sq,index,source", rows, &sources);
}

std::string mkawahara_branch_csv(const std::vector<MKawaharaBranchPoint>& points) {
  std::vector<std::vector<double>> rows;
  std::vector<std::string> conventions;
  for (const auto& p : points) {
    rows.push_back({p.c, p.alpha, p.beta2, p.gamma2, p.norm_sq(), p.index()});
    conventions.emplace_back(to_string(p.convention));
  }
  return csv_table("c,alpha,beta2,gamma2,norm_sq,index,convention", rows, &conventions);
}

std::string diagnostics_csv(const std::vector<DiagnosticsRow>& rows) {
  std::vector<std::vector<double>> data;
  for (const auto& r : rows)
    data.push_back({r.t, r.mass, r.momentum, r.energy, r.orbital_dist, r.best_shift});
  return csv_table("t,mass,momentum,energy,orbital_dist,best_shift", data);
}

std::string kernel_csv(const KernelSamples& kernel) {
  std::vector<std::vector<double>> rows;
  for (std::size_t i = 0; i < kernel.k.size(); ++i)
    rows.push_back({kernel.k[i], kernel.g[i]});
  return csv_table("k,g", rows);
}

std::string solve_report_json(const SolveReport& report) {
  JsonWriter w;
  w.put("iterations", report.iterations)
      .put("multiplier_final", report.multiplier_final)
      .put("residual_sup", report.residual_sup)
      .put("converged", report.converged);
  return w.str();
}

std::string spectrum_report_json(const SpectrumReportData& d) {
  JsonWriter w;
  w.put("omega", d.omega)
      .put("gamma", d.gamma)
      .put("N", d.N)
      .put("L", d.L)
      .put("eigs", d.eigs)
      .put("neg_count", d.neg_count)
      .put("zero_residual", d.zero_residual)
      .put("cos_sim_zero_mode", d.cos_sim_zero_mode)
      .put("index_I", d.index_I)
      .put("stable", d.stable);
  return w.str();
}

std::string pf2_report_json(const LogConcavityReport& lc, const Tp2Report& tp2) {
  JsonWriter w;
  w.put("positive", lc.positive)
      .put("log_concave", lc.log_concave)
      .put("tp2_min_det", tp2.min_det)
      .put("tp2_argmin", std::vector<double>(tp2.argmin, tp2.argmin + 4));
  return w.str();
}

void write_text_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot open for writing: " + path);
  out << content;
  if (!out.good()) throw std::runtime_error("write failed: " + path);
}

}  // namespace kawalab
