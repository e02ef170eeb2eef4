#pragma once

#include <optional>
#include <vector>

#include "borbit/rational.hpp"

namespace borbit::linalg {

using RatVec = std::vector<Rat>;
using RatMat = std::vector<RatVec>;  // row major

int rank(RatMat a);

// Any solution of a * x = b (free variables set to zero), or nullopt.
std::optional<RatVec> solve(RatMat a, RatVec b);

// Basis of { x : a * x = 0 }.
std::vector<RatVec> nullspace(RatMat a);

// Whether v lies in the integer column span of gens (a lattice membership
// test via column-style Hermite reduction). All vectors have equal length.
bool lattice_contains(std::vector<std::vector<long long>> gens,
                      std::vector<long long> v);

}  // namespace borbit::linalg
