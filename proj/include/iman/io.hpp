#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "iman/discover.hpp"
#include "iman/errors.hpp"

namespace iman {

// Comma-separated, UTF-8, first row is the header. Modular files hold one
// integer per cell; numeric files hold decimal reals.
struct ModularCsv {
  std::vector<std::string> header;
  std::vector<std::vector<int>> rows;
};

struct NumericCsv {
  std::vector<std::string> header;
  std::vector<std::vector<double>> rows;
};

// Parses and range-checks against [0, m); errors name the offending row
// and column.
ModularCsv read_modular_csv(std::istream& in, int m);
ModularCsv read_modular_csv_file(const std::string& path, int m);

NumericCsv read_numeric_csv(std::istream& in);
NumericCsv read_numeric_csv_file(const std::string& path);

void write_modular_csv(std::ostream& out, const std::vector<std::string>& header,
                       const std::vector<std::vector<int>>& rows);
void write_modular_csv_file(const std::string& path, const std::vector<std::string>& header,
                            const std::vector<std::vector<int>>& rows);

// DOT digraph with one "parent -> sink;" line per discovered edge.
std::string to_dot(const std::vector<std::string>& names, const DiscoveryResult& result);

// Equi-width binning of x over [lo, hi) into {0..bins-1}; values at bin
// edges go to the higher bin, out-of-range values clamp to the end bins.
int quantize_equi_width(double x, double lo, double hi, int bins);

// Explicit cut points (strictly increasing): bin = number of cuts <= x.
int quantize_cuts(double x, const std::vector<double>& cuts);

}  // namespace iman
