#include "maxlab/report.hpp"

#include <charconv>
#include <cmath>
#include <fstream>
#include <stdexcept>

#include <json.hpp>

namespace maxlab {

std::string format_double(double v) {
  if (std::isnan(v)) return "nan";
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  char buf[32];
  auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), v);
  if (ec != std::errc()) throw std::runtime_error("format_double failed");
  return std::string(buf, ptr);
}

std::string report_to_json(const VerificationReport& report) {
  nlohmann::ordered_json j;
  j["suite"] = report.suite;
  nlohmann::ordered_json cfg;
  for (const auto& [k, v] : report.config) cfg[k] = v;
  j["config"] = cfg;
  nlohmann::ordered_json trials = nlohmann::ordered_json::array();
  for (const auto& t : report.per_trial) {
    nlohmann::ordered_json row;
    row["trial"] = t.trial;
    row["constant"] = t.constant;
    if (t.bound)
      row["bound"] = *t.bound;
    else
      row["bound"] = nullptr;
    row["pass"] = t.pass;
    trials.push_back(std::move(row));
  }
  j["per_trial"] = std::move(trials);
  j["worst_case"] = report.worst_case;
  if (report.bound)
    j["bound"] = *report.bound;
  else
    j["bound"] = nullptr;
  j["pass"] = report.pass;
  nlohmann::ordered_json wit = nlohmann::ordered_json::array();
  for (const auto& w : report.witnesses) wit.push_back(nlohmann::ordered_json::parse(w));
  j["witnesses"] = std::move(wit);
  j["runtime_ms"] = report.runtime_ms;
  return j.dump(2) + "\n";
}

std::string report_to_csv(const VerificationReport& report) {
  std::string out = "trial,constant,bound,pass\n";
  for (const auto& t : report.per_trial) {
    out += std::to_string(t.trial);
    out += ',';
    out += format_double(t.constant);
    out += ',';
    if (t.bound) out += format_double(*t.bound);
    out += ',';
    out += t.pass ? "true" : "false";
    out += '\n';
  }
  return out;
}

std::filesystem::path emit_report(const VerificationReport& report,
                                  const std::filesystem::path& outdir) {
  std::string seed = "0";
  for (const auto& [k, v] : report.config)
    if (k == "seed") seed = v;

  std::error_code ec;
  std::filesystem::create_directories(outdir, ec);
  const auto base = outdir / (report.suite + "-" + seed);

  const auto write = [](const std::filesystem::path& p, const std::string& text) {
    std::ofstream os(p, std::ios::binary);
    if (!os) throw std::runtime_error("emit_report: cannot open " + p.string());
    os << text;
    if (!os) throw std::runtime_error("emit_report: write failed for " + p.string());
  };
  auto jpath = base;
  jpath += ".json";
  auto cpath = base;
  cpath += ".csv";
  write(jpath, report_to_json(report));
  write(cpath, report_to_csv(report));
  return jpath;
}

}  // namespace maxlab
