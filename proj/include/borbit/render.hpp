#pragma once

#include <string>

#include "borbit/knop.hpp"
#include "borbit/orbits.hpp"
#include "borbit/polytope.hpp"

namespace borbit {

// Stable text renderings shared by the C API and the command line. All of
// them are deterministic for a fixed input.
std::string render_validation(const ValidationReport& report);
std::string render_count(const OrbitEngine& eng);
std::string render_orbits_table(const OrbitEngine& eng);
std::string render_orbits_json(const OrbitEngine& eng);
std::string render_stab(const OrbitEngine& eng, OrbitId id);
std::string render_weak_order_dot(const OrbitEngine& eng);
std::string render_knop(const BoundReport& rep);

}  // namespace borbit
