#pragma once

// Output records of the clonebelt tool and their CSV / JSON encodings.

#include <iosfwd>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "clonebelt/belt_analytics.hpp"

namespace clonebelt::cli {

enum class Format { csv, json };

struct OutputRecord {
  double theta1 = 0.0;
  double theta2 = 0.0;
  double alpha = 0.0;
  double beta = 0.0;
  double fbar = 0.0;
  std::string branch;
  double K = 0.0;
  double P = 0.0;
  double Q = 0.0;
  double R = 0.0;

  friend bool operator==(const OutputRecord&, const OutputRecord&) = default;
};

inline constexpr std::string_view kCsvHeader = "theta1,theta2,alpha,beta,fbar,branch,K,P,Q,R";

OutputRecord make_record(const Belt& belt);

/// Locale-free rendering with 17 significant digits.
std::string format_double(double value);

std::string to_csv_line(const OutputRecord& record);
/// Throws std::invalid_argument on a malformed line.
OutputRecord from_csv_line(std::string_view line);

std::string to_json(std::span<const OutputRecord> records);
/// Throws std::invalid_argument on malformed input or missing fields.
std::vector<OutputRecord> from_json(std::string_view text);

/// Header plus one line per record for csv; a single JSON array for json.
void write_records(std::ostream& os, std::span<const OutputRecord> records, Format format);

}  // namespace clonebelt::cli
