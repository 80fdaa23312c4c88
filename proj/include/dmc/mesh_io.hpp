#pragma once

#include "dmc/immersion.hpp"

#include <string>

namespace dmc {

/// Loads a triangle mesh from OFF or OBJ (extension-dispatched) and runs
/// full build_mesh validation.  Only vertices and triangular faces are
/// accepted; any other record is rejected with a file:line diagnostic.
Immersion load_mesh(const std::string& path);

Immersion load_off(const std::string& path);
Immersion load_obj(const std::string& path);

/// Writes vertices and faces as OFF with 17 significant digits.
void save_off(const Immersion& imm, const std::string& path);

} // namespace dmc
