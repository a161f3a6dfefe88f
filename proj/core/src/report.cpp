#include "yangian/report.hpp"

#include <iomanip>
#include <sstream>

#include <nlohmann/json.hpp>

namespace yangian {

namespace {

double roundMillis(double ms) { return static_cast<double>(static_cast<long long>(ms * 1000 + 0.5)) / 1000; }

std::string toJson(const Report& report, bool stable) {
  nlohmann::ordered_json doc;
  doc["suite"] = report.suite;
  doc["m"] = report.m;
  doc["order"] = report.order;
  auto checks = nlohmann::ordered_json::array();
  for (const auto& c : report.checks) {
    nlohmann::ordered_json j;
    j["id"] = c.id;
    j["indices"] = c.indices;
    j["status"] = c.pass ? "pass" : "fail";
    j["residual_terms"] = c.residualTerms;
    j["coefficients"] = c.coefficients;
    if (!stable) j["millis"] = roundMillis(c.millis);
    if (!c.detail.empty()) j["detail"] = c.detail;
    checks.push_back(std::move(j));
  }
  doc["checks"] = std::move(checks);
  nlohmann::ordered_json totals;
  totals["checks"] = report.checks.size();
  totals["passed"] = report.passed();
  totals["failed"] = report.failed();
  if (!stable) totals["millis"] = roundMillis(report.millis);
  doc["totals"] = std::move(totals);
  return doc.dump(2) + "\n";
}

std::string toText(const Report& report, bool stable) {
  std::ostringstream out;
  out << "suite " << report.suite << "  m=" << report.m << "  order=" << report.order << "\n";
  for (const auto& c : report.checks) {
    out << (c.pass ? "PASS " : "FAIL ") << c.id;
    if (!c.indices.empty()) out << " [" << c.indices << "]";
    out << "  coefficients=" << c.coefficients << " residual_terms=" << c.residualTerms;
    if (!stable) out << " " << std::fixed << std::setprecision(1) << c.millis << "ms";
    out << "\n";
    if (!c.detail.empty()) out << "     " << c.detail << "\n";
  }
  out << report.passed() << "/" << report.checks.size() << " passed";
  if (!stable) out << " in " << std::fixed << std::setprecision(1) << report.millis << "ms";
  out << "\n";
  return out.str();
}

}  // namespace

std::string formatReport(const Report& report, const ReportStyle& style) {
  return style.format == ReportFormat::Json ? toJson(report, style.stable) : toText(report, style.stable);
}

}  // namespace yangian
