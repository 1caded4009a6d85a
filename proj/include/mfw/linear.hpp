#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "mfw/field.hpp"

namespace mfw {

using FieldVector = std::vector<Rational>;
/// Dense row-major matrix over a coefficient field.
using FieldMatrix = std::vector<FieldVector>;

std::size_t field_rank(const Field& field, FieldMatrix m);

/// Some solution of a*v = b, or nullopt when the system is inconsistent.
/// Free variables are set to zero.
std::optional<FieldVector> field_solve(const Field& field, FieldMatrix a, const FieldVector& b);

}  // namespace mfw
