#pragma once

#include <string>

#include "yangian/suites.hpp"

namespace yangian {

enum class ReportFormat { Json, Text };

struct ReportStyle {
  ReportFormat format = ReportFormat::Json;
  // Omit timing fields.
  bool stable = false;
};

std::string formatReport(const Report& report, const ReportStyle& style = {});

}  // namespace yangian
