#pragma once

#include <iosfwd>

#include "ibstokes/grid.hpp"

namespace ibstokes {

/// Field CSV:
///
///   layout,N,h
///   nodes,64,0.0625
///   v(0,0),v(1,0),...      one line per j, x index fastest
///
/// Values use 17 significant digits so a round trip is exact.
void write_field_csv(std::ostream& os, const ScalarField& field, double h);

struct FieldFile {
  ScalarField field;
  double h = 0.0;
};

/// Throws std::invalid_argument on a malformed file.
FieldFile read_field_csv(std::istream& is);

}  // namespace ibstokes
