#pragma once

#include <string>
#include <vector>

#include "facering/complex.hpp"

namespace facering {

/// Built-in copies of the shipped fixture complexes, by upper-case name
/// (OCT, CROSS4, FAN4, DUNCE, BALL10, C3, C4, EDGE, PATH3, SIMPLEX2, TETRA,
/// BIPYR, RP2). Throws InputError for unknown names.
SimplicialComplex builtin_fixture(const std::string& name);

std::vector<std::string> builtin_fixture_names();

}  // namespace facering
