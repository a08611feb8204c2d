#include "ibstokes/field_io.hpp"

#include <iomanip>
#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace ibstokes {

namespace {

std::vector<std::string> split(const std::string& line) {
  std::vector<std::string> out;
  std::string cell;
  std::istringstream ss(line);
  while (std::getline(ss, cell, ',')) out.push_back(cell);
  return out;
}

double to_double(const std::string& s) {
  std::size_t pos = 0;
  double v = 0.0;
  try {
    v = std::stod(s, &pos);
  } catch (const std::exception&) {
    throw std::invalid_argument("read_field_csv: bad number '" + s + "'");
  }
  if (pos != s.size()) throw std::invalid_argument("read_field_csv: bad number '" + s + "'");
  return v;
}

}  // namespace

void write_field_csv(std::ostream& os, const ScalarField& field, double h) {
  os << "layout,N,h\n";
  os << layout_name(field.layout()) << ',' << field.N() << ',' << std::setprecision(17) << h << '\n';
  for (int j = 0; j < field.ny(); ++j) {
    for (int i = 0; i < field.nx(); ++i) {
      if (i) os << ',';
      os << field(i, j);
    }
    os << '\n';
  }
}

FieldFile read_field_csv(std::istream& is) {
  std::string line;
  if (!std::getline(is, line) || line != "layout,N,h") {
    throw std::invalid_argument("read_field_csv: missing header");
  }
  if (!std::getline(is, line)) throw std::invalid_argument("read_field_csv: missing metadata");
  const auto meta = split(line);
  if (meta.size() != 3) throw std::invalid_argument("read_field_csv: bad metadata line");
  const Layout layout = layout_from_name(meta[0]);
  const int N = std::stoi(meta[1]);
  if (N < 1) throw std::invalid_argument("read_field_csv: N must be positive");
  FieldFile out{ScalarField(layout, N), to_double(meta[2])};
  for (int j = 0; j < out.field.ny(); ++j) {
    if (!std::getline(is, line)) throw std::invalid_argument("read_field_csv: too few rows");
    const auto cells = split(line);
    if (static_cast<int>(cells.size()) != out.field.nx()) {
      throw std::invalid_argument("read_field_csv: wrong row length");
    }
    for (int i = 0; i < out.field.nx(); ++i) out.field(i, j) = to_double(cells[i]);
  }
  return out;
}

}  // namespace ibstokes
