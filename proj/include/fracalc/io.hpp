#pragma once

#include <string>

#include "fracalc/extension.hpp"
#include "fracalc/grid.hpp"

namespace fracalc {
namespace io {

std::string to_string(TailKind k);
TailKind tail_kind_from_string(const std::string& name);

/// Writes "x,value" rows (%.17g) plus a <path>.json sidecar carrying the
/// grid geometry and both tail models under "schema": 1.
void write_grid(const std::string& csv_path, const GridFunction& f);
GridFunction read_grid(const std::string& csv_path);

/// Writes "x,t,value" rows plus the sidecar with alpha and the rectangle.
void write_field(const std::string& csv_path, const ExtensionField& field);

/// Writes "x,weight" rows plus a sidecar naming the exponents checked.
void write_weight(const std::string& csv_path, const GridFunction& w,
                  double p, double q);

}  // namespace io
}  // namespace fracalc
