#pragma once

#include <mutex>
#include <unordered_map>
#include <vector>

#include "borbit/active_spec.hpp"
#include "borbit/weyl.hpp"

namespace borbit {

// The weakly active roots Psi# of a validated spec, the extension of delta
// to Psi#, and the per-subset data Psi#(I), Psi#_I and Phi_I. Activated and
// stabilizing sets are computed both as difference sets and through the
// evaluation inequalities; the two characterizations are cross-asserted and
// any disagreement is reported as invalid input data.
//
// Immutable after construction apart from an internal memo keyed by the
// class-subset bitmask, which is guarded for concurrent readers.
class WeakRootTable {
 public:
  explicit WeakRootTable(std::shared_ptr<const ActiveRootSpec> spec);

  const ActiveRootSpec& spec() const { return *spec_; }
  const RootSystem& rs() const { return spec_->rs(); }

  RootMask sharp() const { return sharp_; }
  bool is_sharp(int root_idx) const { return (sharp_ >> root_idx) & 1; }
  // class label of a weakly active root, -1 otherwise
  int delta_ext(int root_idx) const { return delta_ext_[root_idx]; }
  ClassMask delta_image(RootMask roots) const;

  RootMask activated(ClassMask I) const;    // Psi#(I)
  RootMask stabilizing(ClassMask I) const;  // Psi#_I
  const ClosedSubsystem& phi(ClassMask I) const;
  // {beta#_I : beta in Psi_I}; must coincide with phi(I).basis
  std::vector<int> delta_basis_formula(ClassMask I) const;

  enum class RootMove { Stable, Raises, Lowers };
  struct MoveResult {
    RootMove move;
    ClassMask target;  // resulting T-orbit label set (= I when stable)
  };
  MoveResult torbit_action(int root_idx, ClassMask I) const;

  // membership of an N-combination of the given psi positions
  bool n_combination(const IVec& v, const std::vector<int>& positions) const;

 private:
  std::shared_ptr<const ActiveRootSpec> spec_;
  RootMask sharp_ = 0;
  std::vector<int> delta_ext_;

  struct Entry {
    RootMask activated = 0;
    RootMask stabilizing = 0;
    bool have_phi = false;
    ClosedSubsystem phi;
  };
  mutable std::unordered_map<ClassMask, Entry> cache_;
  mutable std::mutex mutex_;

  Entry& entry(ClassMask I) const;
  RootMask difference_set(const std::vector<int>& tops,
                          const std::vector<int>& gens) const;
};

}  // namespace borbit
