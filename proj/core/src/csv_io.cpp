#include "kcover/csv_io.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>
#include <vector>

#include "kcover/sim_config.hpp"

namespace kcover {

namespace {

std::string fixed6(double v) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.6f", v);
  return buf;
}

std::vector<std::string_view> split(std::string_view line, char sep) {
  std::vector<std::string_view> fields;
  std::size_t start = 0;
  while (true) {
    const std::size_t pos = line.find(sep, start);
    if (pos == std::string_view::npos) {
      fields.push_back(line.substr(start));
      break;
    }
    fields.push_back(line.substr(start, pos - start));
    start = pos + 1;
  }
  return fields;
}

double parse_double(std::string_view field, const std::string& name, int line) {
  try {
    return std::stod(std::string(field));
  } catch (const std::exception&) {
    throw CsvParseError(name, line, "expected a number, got '" + std::string(field) + "'");
  }
}

long long parse_int(std::string_view field, const std::string& name, int line) {
  try {
    return std::stoll(std::string(field));
  } catch (const std::exception&) {
    throw CsvParseError(name, line, "expected an integer, got '" + std::string(field) + "'");
  }
}

}  // namespace

std::string trace_to_csv(const MetricsTrace& trace) {
  std::string out = kTraceCsvHeader;
  out.push_back('\n');
  for (const MetricsRow& row : trace.rows) {
    out += std::to_string(row.period);
    out.push_back(',');
    out += std::to_string(row.alive);
    out.push_back(',');
    out += std::to_string(row.awake);
    for (double t : row.theta) {
      out.push_back(',');
      out += fixed6(t);
    }
    for (double t : row.theta_prime) {
      out.push_back(',');
      out += fixed6(t);
    }
    out.push_back(',');
    out += std::to_string(row.messages);
    out.push_back('\n');
  }
  return out;
}

MetricsTrace trace_from_csv(std::string_view text, const std::string& name) {
  MetricsTrace trace;
  int line_no = 0;
  std::size_t start = 0;
  while (start < text.size()) {
    std::size_t end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    const std::string_view line = text.substr(start, end - start);
    start = end + 1;
    ++line_no;
    if (line.empty()) continue;
    if (line_no == 1) {
      if (line != kTraceCsvHeader) {
        throw CsvParseError(name, 1, "unexpected header '" + std::string(line) + "'");
      }
      continue;
    }
    const auto fields = split(line, ',');
    if (fields.size() != 10) {
      throw CsvParseError(name, line_no, "expected 10 fields, got " +
                                             std::to_string(fields.size()));
    }
    MetricsRow row;
    row.period = static_cast<int>(parse_int(fields[0], name, line_no));
    row.alive = static_cast<int>(parse_int(fields[1], name, line_no));
    row.awake = static_cast<int>(parse_int(fields[2], name, line_no));
    for (int k = 0; k < kThetaColumns; ++k) {
      row.theta[static_cast<std::size_t>(k)] =
          parse_double(fields[static_cast<std::size_t>(3 + k)], name, line_no);
      row.theta_prime[static_cast<std::size_t>(k)] =
          parse_double(fields[static_cast<std::size_t>(6 + k)], name, line_no);
    }
    row.messages = parse_int(fields[9], name, line_no);
    trace.rows.push_back(row);
  }
  return trace;
}

std::string messages_to_csv(std::span<const MessageRecord> messages) {
  std::string out = "period,time,kind,sender,receivers\n";
  for (const MessageRecord& m : messages) {
    out += std::to_string(m.period);
    out.push_back(',');
    out += fixed6(m.time);
    out.push_back(',');
    out += to_string(m.kind);
    out.push_back(',');
    out += std::to_string(m.sender);
    out.push_back(',');
    out += std::to_string(m.receiver_count);
    out.push_back('\n');
  }
  return out;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open '" + path + "' for reading");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_file(const std::string& path, std::string_view content) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw IoError("cannot open '" + path + "' for writing");
  out.write(content.data(), static_cast<std::streamsize>(content.size()));
  if (!out) throw IoError("failed writing '" + path + "'");
}

}  // namespace kcover
