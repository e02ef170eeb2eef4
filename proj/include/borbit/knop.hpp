#pragma once

#include <memory>
#include <string>
#include <vector>

#include "borbit/active_spec.hpp"

namespace borbit {

// Orbit count by the closed formula sum over I of |W| / |W_I|.
std::uint64_t orbit_count(const ActiveRootSpec& spec);

// The maximal-rank reduction Psi' = union of the families of one
// representative per maximal class, with delta restricted. Warnings
// collect non-antisymmetric class comparisons.
ActiveRootSpec max_rank_reduction(const ActiveRootSpec& spec,
                                  std::vector<std::string>* warnings = nullptr);

struct BoundReport {
  std::uint64_t count_h = 0;
  std::uint64_t count_tu = 0;
  std::uint64_t count_reduction = 0;
  bool satisfied = false;
  std::shared_ptr<ActiveRootSpec> reduction;
};

// count(H) <= count(reduction) <= count(TU') for the spec's root system.
BoundReport knop_check(const ActiveRootSpec& spec);

struct PiSubsystem {
  std::vector<int> basis;        // the simple roots pi(Psi_I), root indices
  std::uint64_t order = 1;       // |W'_I|
  std::uint64_t order_phi = 1;   // |W_I|
};

// For a maximal-rank spec (all classes singletons): the standard subsystem
// generated by pi(Psi_I), compared against Phi_I.
PiSubsystem pi_subsystem(const ActiveRootSpec& spec, ClassMask I);

}  // namespace borbit
