#include "iman/io.hpp"

#include <charconv>
#include <cmath>
#include <fstream>
#include <sstream>

namespace iman {

namespace {

std::vector<std::string> split_line(const std::string& line) {
  std::vector<std::string> fields;
  std::string field;
  std::stringstream ss(line);
  while (std::getline(ss, field, ',')) fields.push_back(field);
  if (!line.empty() && line.back() == ',') fields.emplace_back();
  return fields;
}

std::string strip(const std::string& s) {
  std::size_t b = 0, e = s.size();
  while (b < e && (s[b] == ' ' || s[b] == '\t' || s[b] == '\r')) ++b;
  while (e > b && (s[e - 1] == ' ' || s[e - 1] == '\t' || s[e - 1] == '\r')) --e;
  return s.substr(b, e - b);
}

template <typename RowParser>
void read_rows(std::istream& in, std::vector<std::string>& header, RowParser parse_row) {
  std::string line;
  if (!std::getline(in, line)) throw DataError("empty file: missing header row");
  for (std::string& h : header = split_line(line)) h = strip(h);
  if (header.empty()) throw DataError("empty header row");

  std::size_t row_no = 0;
  while (std::getline(in, line)) {
    if (strip(line).empty()) continue;
    const std::vector<std::string> fields = split_line(line);
    if (fields.size() != header.size()) {
      throw DataError("row " + std::to_string(row_no) + " has " +
                      std::to_string(fields.size()) + " fields, expected " +
                      std::to_string(header.size()));
    }
    parse_row(row_no, fields);
    ++row_no;
  }
}

}  // namespace

ModularCsv read_modular_csv(std::istream& in, int m) {
  ModularCsv csv;
  read_rows(in, csv.header, [&](std::size_t row_no, const std::vector<std::string>& fields) {
    std::vector<int> row(fields.size());
    for (std::size_t c = 0; c < fields.size(); ++c) {
      const std::string f = strip(fields[c]);
      int v = 0;
      const auto [ptr, ec] = std::from_chars(f.data(), f.data() + f.size(), v);
      if (ec != std::errc() || ptr != f.data() + f.size()) {
        throw DataError("cannot parse integer '" + f + "' at row " + std::to_string(row_no) +
                        ", column " + std::to_string(c) + " (" + csv.header[c] + ")");
      }
      if (v < 0 || v >= m) {
        throw DataError("value " + std::to_string(v) + " out of range [0, " +
                        std::to_string(m) + ") at row " + std::to_string(row_no) +
                        ", column " + std::to_string(c) + " (" + csv.header[c] + ")");
      }
      row[c] = v;
    }
    csv.rows.push_back(std::move(row));
  });
  return csv;
}

ModularCsv read_modular_csv_file(const std::string& path, int m) {
  std::ifstream in(path);
  if (!in) throw DataError("cannot open file: " + path);
  return read_modular_csv(in, m);
}

NumericCsv read_numeric_csv(std::istream& in) {
  NumericCsv csv;
  read_rows(in, csv.header, [&](std::size_t row_no, const std::vector<std::string>& fields) {
    std::vector<double> row(fields.size());
    for (std::size_t c = 0; c < fields.size(); ++c) {
      const std::string f = strip(fields[c]);
      try {
        std::size_t consumed = 0;
        row[c] = std::stod(f, &consumed);
        if (consumed != f.size()) throw std::invalid_argument(f);
      } catch (const std::exception&) {
        throw DataError("cannot parse number '" + f + "' at row " + std::to_string(row_no) +
                        ", column " + std::to_string(c) + " (" + csv.header[c] + ")");
      }
    }
    csv.rows.push_back(std::move(row));
  });
  return csv;
}

NumericCsv read_numeric_csv_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw DataError("cannot open file: " + path);
  return read_numeric_csv(in);
}

void write_modular_csv(std::ostream& out, const std::vector<std::string>& header,
                       const std::vector<std::vector<int>>& rows) {
  for (std::size_t c = 0; c < header.size(); ++c) {
    out << (c ? "," : "") << header[c];
  }
  out << "\n";
  for (const auto& row : rows) {
    for (std::size_t c = 0; c < row.size(); ++c) {
      out << (c ? "," : "") << row[c];
    }
    out << "\n";
  }
}

void write_modular_csv_file(const std::string& path, const std::vector<std::string>& header,
                            const std::vector<std::vector<int>>& rows) {
  std::ofstream out(path);
  if (!out) throw DataError("cannot open file for writing: " + path);
  write_modular_csv(out, header, rows);
}

std::string to_dot(const std::vector<std::string>& names, const DiscoveryResult& result) {
  std::ostringstream out;
  out << "digraph iman {\n";
  for (const std::string& name : names) out << "  " << name << ";\n";
  for (const auto& [sink, parents] : result.order) {
    for (VarId p : parents) {
      out << "  " << names.at(static_cast<size_t>(p)) << " -> "
          << names.at(static_cast<size_t>(sink)) << ";\n";
    }
  }
  out << "}\n";
  return out.str();
}

int quantize_equi_width(double x, double lo, double hi, int bins) {
  if (bins < 2) throw std::invalid_argument("need at least 2 bins");
  if (!(hi > lo)) throw std::invalid_argument("need hi > lo");
  if (x < lo) return 0;
  if (x >= hi) return bins - 1;
  const double width = (hi - lo) / bins;
  const int bin = static_cast<int>(std::floor((x - lo) / width));
  return std::min(std::max(bin, 0), bins - 1);
}

int quantize_cuts(double x, const std::vector<double>& cuts) {
  if (cuts.empty()) throw std::invalid_argument("empty cut list");
  for (std::size_t i = 1; i < cuts.size(); ++i) {
    if (!(cuts[i] > cuts[i - 1])) {
      throw std::invalid_argument("cut points must be strictly increasing");
    }
  }
  int bin = 0;
  for (double c : cuts) {
    if (x >= c) ++bin;
  }
  return bin;
}

}  // namespace iman
