#pragma once

#include <span>
#include <string>
#include <string_view>

#include "kcover/cgs.hpp"
#include "kcover/metrics.hpp"

namespace kcover {

class CsvParseError : public std::runtime_error {
 public:
  CsvParseError(const std::string& file, int line, const std::string& what)
      : std::runtime_error(file + ":" + std::to_string(line) + ": " + what) {}
};

// Trace schema, bit-exact: header
//   period,alive,awake,theta1,theta2,theta3,theta_p1,theta_p2,theta_p3,messages
// decimal columns with 6 fractional digits, LF line endings, UTF-8.
inline constexpr const char* kTraceCsvHeader =
    "period,alive,awake,theta1,theta2,theta3,theta_p1,theta_p2,theta_p3,messages";

std::string trace_to_csv(const MetricsTrace& trace);
MetricsTrace trace_from_csv(std::string_view text, const std::string& name = "<csv>");

// Message log schema: period,time,kind,sender,receivers
std::string messages_to_csv(std::span<const MessageRecord> messages);

std::string read_file(const std::string& path);
void write_file(const std::string& path, std::string_view content);

}  // namespace kcover
