#include "records.hpp"

#include <array>
#include <charconv>
#include <ostream>
#include <stdexcept>
#include <system_error>

#include <nlohmann/json.hpp>

namespace clonebelt::cli {

namespace {

constexpr std::array<std::string_view, 10> kFields = {"theta1", "theta2", "alpha", "beta", "fbar",
                                                      "branch", "K",      "P",     "Q",    "R"};

double parse_double(std::string_view text) {
  double value = 0.0;
  const auto* end = text.data() + text.size();
  const auto [ptr, ec] = std::from_chars(text.data(), end, value);
  if (ec != std::errc{} || ptr != end) {
    throw std::invalid_argument("not a number: '" + std::string(text) + "'");
  }
  return value;
}

}  // namespace

OutputRecord make_record(const Belt& belt) {
  const auto consts = belt_constants(belt);
  const auto opt = solve_optimal(belt);
  OutputRecord r;
  r.theta1 = belt.theta1;
  r.theta2 = belt.theta2;
  r.alpha = opt.angles.alpha;
  r.beta = opt.angles.beta;
  r.fbar = opt.fbar;
  r.branch = std::string(to_string(opt.branch));
  r.K = consts.K;
  r.P = consts.P;
  r.Q = consts.Q;
  r.R = consts.R;
  return r;
}

std::string format_double(double value) {
  std::array<char, 64> buf{};
  const auto [ptr, ec] = std::to_chars(buf.data(), buf.data() + buf.size(), value, std::chars_format::general, 17);
  if (ec != std::errc{}) throw std::runtime_error("format_double: conversion failed");
  return std::string(buf.data(), ptr);
}

std::string to_csv_line(const OutputRecord& r) {
  std::string line;
  for (double v : {r.theta1, r.theta2, r.alpha, r.beta, r.fbar}) {
    line += format_double(v);
    line += ',';
  }
  line += r.branch;
  for (double v : {r.K, r.P, r.Q, r.R}) {
    line += ',';
    line += format_double(v);
  }
  return line;
}

OutputRecord from_csv_line(std::string_view line) {
  std::array<std::string_view, kFields.size()> cells{};
  std::size_t n = 0;
  std::size_t start = 0;
  while (true) {
    const std::size_t comma = line.find(',', start);
    if (n == cells.size()) throw std::invalid_argument("CSV record has too many fields");
    cells[n++] = line.substr(start, comma == std::string_view::npos ? std::string_view::npos : comma - start);
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  if (n != cells.size()) throw std::invalid_argument("CSV record has too few fields");

  OutputRecord r;
  r.theta1 = parse_double(cells[0]);
  r.theta2 = parse_double(cells[1]);
  r.alpha = parse_double(cells[2]);
  r.beta = parse_double(cells[3]);
  r.fbar = parse_double(cells[4]);
  r.branch = std::string(cells[5]);
  branch_from_string(r.branch);
  r.K = parse_double(cells[6]);
  r.P = parse_double(cells[7]);
  r.Q = parse_double(cells[8]);
  r.R = parse_double(cells[9]);
  return r;
}

std::string to_json(std::span<const OutputRecord> records) {
  auto arr = nlohmann::ordered_json::array();
  for (const auto& r : records) {
    nlohmann::ordered_json obj;
    obj["theta1"] = r.theta1;
    obj["theta2"] = r.theta2;
    obj["alpha"] = r.alpha;
    obj["beta"] = r.beta;
    obj["fbar"] = r.fbar;
    obj["branch"] = r.branch;
    obj["K"] = r.K;
    obj["P"] = r.P;
    obj["Q"] = r.Q;
    obj["R"] = r.R;
    arr.push_back(std::move(obj));
  }
  return arr.dump(2);
}

std::vector<OutputRecord> from_json(std::string_view text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw std::invalid_argument(std::string("invalid JSON: ") + e.what());
  }
  if (!doc.is_array()) throw std::invalid_argument("expected a JSON array of records");

  std::vector<OutputRecord> out;
  for (const auto& obj : doc) {
    if (!obj.is_object() || obj.size() != kFields.size()) {
      throw std::invalid_argument("record must be an object with exactly the OutputRecord fields");
    }
    try {
      OutputRecord r;
      r.theta1 = obj.at("theta1").get<double>();
      r.theta2 = obj.at("theta2").get<double>();
      r.alpha = obj.at("alpha").get<double>();
      r.beta = obj.at("beta").get<double>();
      r.fbar = obj.at("fbar").get<double>();
      r.branch = obj.at("branch").get<std::string>();
      r.K = obj.at("K").get<double>();
      r.P = obj.at("P").get<double>();
      r.Q = obj.at("Q").get<double>();
      r.R = obj.at("R").get<double>();
      out.push_back(std::move(r));
    } catch (const nlohmann::json::exception& e) {
      throw std::invalid_argument(std::string("bad record: ") + e.what());
    }
  }
  return out;
}

void write_records(std::ostream& os, std::span<const OutputRecord> records, Format format) {
  if (format == Format::json) {
    os << to_json(records) << '\n';
    return;
  }
  os << kCsvHeader << '\n';
  for (const auto& r : records) os << to_csv_line(r) << '\n';
}

}  // namespace clonebelt::cli
