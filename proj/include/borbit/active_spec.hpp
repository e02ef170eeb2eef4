#pragma once

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "borbit/errors.hpp"
#include "borbit/rational.hpp"
#include "borbit/root_system.hpp"

namespace borbit {

// The combinatorial data of a strongly solvable spherical subgroup H of B:
// the active roots Psi (positive roots whose root group is not in H) and
// their partition into delta-fibers indexed by the divisor classes D*.
//
// Construction performs the structural checks (axiom A1); validate() runs
// the remaining necessary conditions A2..A8. Everything downstream
// requires a spec whose report is clean.
class ActiveRootSpec {
 public:
  // active: coefficient vectors over the simple roots, file order;
  // classes: partition of {0..|active|-1} into fibers.
  static ActiveRootSpec make(std::shared_ptr<const RootSystem> rs,
                             const std::vector<IVec>& active,
                             const std::vector<std::vector<int>>& classes,
                             std::optional<int> torus_corank);

  // Psi = Delta, one class per simple root, torus corank 0.
  static ActiveRootSpec tu_prime(std::shared_ptr<const RootSystem> rs);

  static ActiveRootSpec from_json(const std::string& text,
                                  BuildOptions opts = {});
  std::string to_json() const;

  const RootSystem& rs() const { return *rs_; }
  std::shared_ptr<const RootSystem> rs_ptr() const { return rs_; }

  int psi_size() const { return static_cast<int>(psi_.size()); }
  int psi_root(int pos) const { return psi_[pos]; }
  const std::vector<int>& psi() const { return psi_; }
  RootMask psi_mask() const { return psi_mask_; }
  int psi_pos_of_root(int root_idx) const;  // -1 if not active

  int num_classes() const { return static_cast<int>(classes_.size()); }
  int class_of(int pos) const { return class_of_[pos]; }
  int class_of_root(int root_idx) const;
  const std::vector<int>& class_members(int cls) const { return classes_[cls]; }
  // positions of Psi_I for a class subset
  std::vector<int> psi_positions(ClassMask I) const;
  ClassMask all_classes() const {
    return num_classes() == 32 ? ~ClassMask(0)
                               : ((ClassMask(1) << num_classes()) - 1);
  }

  std::optional<int> torus_corank() const { return torus_corank_; }

  const ValidationReport& validate() const;
  bool validated_ok() const { return validate().ok(); }
  void require_valid() const;

  // F(beta): positions of the active roots dominated by psi_[pos].
  std::vector<int> family(int pos) const;
  // pi(beta) = beta - sum over maximal members of F(beta) minus beta,
  // as a root index; throws validation_error when the formula leaves Phi.
  int pi(int pos) const;
  // Row of the active-root table matching psi_[pos] (1..6).
  int table1_type(int pos) const;

  // Value of the valuation functional w0 rho(D) on a Z Psi vector.
  Rat eval(int cls, const IVec& x) const;

  // -w0(union of supports), a set of simple roots (root indices).
  std::vector<int> spherical_roots() const;

 private:
  std::shared_ptr<const RootSystem> rs_;
  std::vector<int> psi_;               // root indices, file order
  RootMask psi_mask_ = 0;
  std::vector<int> class_of_;          // per psi position
  std::vector<std::vector<int>> classes_;
  std::optional<int> torus_corank_;
  mutable std::optional<ValidationReport> report_;

  ValidationReport run_validation() const;
};

}  // namespace borbit
