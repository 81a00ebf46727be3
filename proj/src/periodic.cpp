#include "charbound/periodic.hpp"

#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>

namespace charbound {

PeriodicFunction make_periodic(std::int64_t q, std::vector<GaussianRational> values) {
  return PeriodicFunction(q, std::move(values));
}

namespace {

std::vector<std::string> split_fields(const std::string& line) {
  std::vector<std::string> fields;
  std::stringstream ss(line);
  std::string field;
  while (std::getline(ss, field, ',')) {
    const auto first = field.find_first_not_of(" \t\r");
    const auto last = field.find_last_not_of(" \t\r");
    fields.push_back(first == std::string::npos ? "" : field.substr(first, last - first + 1));
  }
  return fields;
}

bool is_integer(const std::string& s) {
  if (s.empty()) return false;
  std::size_t start = (s[0] == '-' || s[0] == '+') ? 1 : 0;
  if (start == s.size()) return false;
  for (std::size_t k = start; k < s.size(); ++k) {
    if (s[k] < '0' || s[k] > '9') return false;
  }
  return true;
}

}  // namespace

PeriodicFunction read_periodic_csv(std::istream& in) {
  std::vector<std::pair<long, GaussianRational>> rows;
  std::string line;
  bool first_row = true;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.find_first_not_of(" \t\r") == std::string::npos || line[0] == '#') continue;
    const auto fields = split_fields(line);
    if (first_row && !fields.empty() && !is_integer(fields[0])) {
      first_row = false;
      continue;
    }
    first_row = false;
    if (fields.size() != 3 || !is_integer(fields[0])) {
      throw UsageError("periodic csv line " + std::to_string(line_no) + ": expected residue,re,im");
    }
    rows.emplace_back(std::stol(fields[0]), GaussianRational::parse(fields[1], fields[2]));
  }
  const auto q = static_cast<long>(rows.size());
  if (q == 0) throw UsageError("periodic csv: no rows");
  std::vector<GaussianRational> values(rows.size());
  std::vector<bool> seen(rows.size(), false);
  for (auto& [residue, value] : rows) {
    if (residue < 0 || residue >= q || seen[static_cast<std::size_t>(residue)]) {
      throw UsageError("periodic csv: residues must cover 0.." + std::to_string(q - 1) + " exactly once");
    }
    seen[static_cast<std::size_t>(residue)] = true;
    values[static_cast<std::size_t>(residue)] = std::move(value);
  }
  return PeriodicFunction(q, std::move(values));
}

PeriodicFunction read_periodic_csv_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw UsageError("cannot open " + path);
  return read_periodic_csv(in);
}

void write_periodic_csv(std::ostream& out, const PeriodicFunction& f) {
  const auto values = f.values();
  for (std::size_t r = 0; r < values.size(); ++r) {
    out << r << ',' << values[r].to_string() << '\n';
  }
}

}  // namespace charbound
