#include "effradius/series_io.hpp"

#include <charconv>
#include <fstream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

#include "effradius/format.hpp"

namespace effradius {

namespace {

double parse_csv_number(const std::string& field, int line_no) {
  double v = 0.0;
  const char* first = field.data();
  const char* last = field.data() + field.size();
  const auto res = std::from_chars(first, last, v);
  if (res.ec != std::errc{} || res.ptr != last)
    throw std::invalid_argument("series CSV: bad number on line " + std::to_string(line_no));
  return v;
}

}  // namespace

PowerSeries read_series_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in)
    throw std::invalid_argument("cannot open series file: " + path.string());
  if (path.extension() == ".json") return read_series_json(in);
  return read_series_csv(in);
}

PowerSeries read_series_json(std::istream& in) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(in);
  } catch (const nlohmann::json::parse_error& e) {
    throw std::invalid_argument(std::string("series JSON: ") + e.what());
  }
  if (!j.is_object() || !j.contains("center") || !j.contains("coeffs"))
    throw std::invalid_argument("series JSON: expected {\"center\": c, \"coeffs\": [...]}");
  if (!j["center"].is_number() || !j["coeffs"].is_array() || j["coeffs"].empty())
    throw std::invalid_argument("series JSON: center must be a number, coeffs a non-empty array");
  Eigen::VectorXd coeffs(j["coeffs"].size());
  for (std::size_t i = 0; i < j["coeffs"].size(); ++i) {
    if (!j["coeffs"][i].is_number())
      throw std::invalid_argument("series JSON: coefficient " + std::to_string(i) +
                                  " is not a number");
    coeffs(static_cast<Eigen::Index>(i)) = j["coeffs"][i].get<double>();
  }
  try {
    return PowerSeries(j["center"].get<double>(), std::move(coeffs));
  } catch (const std::invalid_argument& e) {
    throw std::invalid_argument(std::string("series JSON: ") + e.what());
  }
}

PowerSeries read_series_csv(std::istream& in) {
  std::vector<double> coeffs;
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    if (line_no == 1 && line == "n,a_n") continue;  // header row
    const std::size_t comma = line.find(',');
    if (comma == std::string::npos)
      throw std::invalid_argument("series CSV: missing comma on line " + std::to_string(line_no));
    const double n = parse_csv_number(line.substr(0, comma), line_no);
    const double a = parse_csv_number(line.substr(comma + 1), line_no);
    if (n != static_cast<double>(coeffs.size()))
      throw std::invalid_argument("series CSV: expected consecutive indices from 0, got row " +
                                  line.substr(0, comma) + " on line " + std::to_string(line_no));
    coeffs.push_back(a);
  }
  if (coeffs.empty()) throw std::invalid_argument("series CSV: no coefficient rows");
  try {
    return PowerSeries(0.0, Eigen::Map<const Eigen::VectorXd>(coeffs.data(), coeffs.size()));
  } catch (const std::invalid_argument& e) {
    throw std::invalid_argument(std::string("series CSV: ") + e.what());
  }
}

void write_series_json(std::ostream& out, const PowerSeries& p) {
  nlohmann::json j;
  j["center"] = p.center();
  j["coeffs"] = std::vector<double>(p.coeffs().data(), p.coeffs().data() + p.coeffs().size());
  out << j.dump(2) << '\n';
}

void write_series_csv(std::ostream& out, const PowerSeries& p) {
  if (p.center() != 0.0)
    throw std::invalid_argument(
        "the CSV series format cannot represent a nonzero center; use JSON");
  out << "n,a_n\n";
  for (Eigen::Index n = 0; n < p.coeffs().size(); ++n)
    out << n << ',' << dtoa(p.coeff(n)) << '\n';
}

}  // namespace effradius
