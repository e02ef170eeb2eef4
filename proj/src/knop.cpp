#include "borbit/knop.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "borbit/weak_table.hpp"

namespace borbit {

namespace {

bool dominated(const IVec& lo, const IVec& hi) {
  for (size_t k = 0; k < lo.size(); ++k)
    if (lo[k] > hi[k]) return false;
  return true;
}

}  // namespace

std::uint64_t orbit_count(const ActiveRootSpec& spec) {
  auto shared = std::make_shared<ActiveRootSpec>(spec);
  WeakRootTable weak(shared);
  const std::uint64_t order = spec.rs().weyl_order();
  std::uint64_t total = 0;
  const ClassMask all = spec.all_classes();
  for (ClassMask I = 0;; ++I) {
    std::uint64_t sub = weak.phi(I).weyl_order;
    if (order % sub != 0)
      throw validation_error("|W_I| does not divide |W|");
    total += order / sub;
    if (I == all) break;
  }
  return total;
}

ActiveRootSpec max_rank_reduction(const ActiveRootSpec& spec,
                                  std::vector<std::string>* warnings) {
  spec.require_valid();
  const RootSystem& R = spec.rs();
  const int m = spec.num_classes();

  // Psi_i < Psi_j when some member of Psi_i is dominated by one of Psi_j;
  // taken as a preorder via transitive closure.
  std::vector<std::vector<bool>> leq(m, std::vector<bool>(m, false));
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j)
      for (int pi_ : spec.class_members(i)) {
        if (leq[i][j]) break;
        for (int pj : spec.class_members(j))
          if (dominated(R.root(spec.psi_root(pi_)), R.root(spec.psi_root(pj)))) {
            leq[i][j] = true;
            break;
          }
      }
  for (int k = 0; k < m; ++k)
    for (int i = 0; i < m; ++i)
      for (int j = 0; j < m; ++j)
        if (leq[i][k] && leq[k][j]) leq[i][j] = true;

  std::vector<int> maximal;
  for (int i = 0; i < m; ++i) {
    bool is_max = true;
    for (int j = 0; j < m; ++j) {
      if (j == i || !leq[i][j]) continue;
      if (!leq[j][i]) { is_max = false; break; }
      if (warnings)
        warnings->push_back("classes " + std::to_string(i) + " and " +
                            std::to_string(j) + " are order equivalent");
    }
    if (is_max) maximal.push_back(i);
  }

  // one representative per maximal class: its lexicographically least root
  std::set<int> chosen_positions;
  for (int cls : maximal) {
    int best = -1;
    for (int pos : spec.class_members(cls)) {
      if (best < 0 || R.root(spec.psi_root(pos)) < R.root(spec.psi_root(best)))
        best = pos;
    }
    for (int q : spec.family(best)) chosen_positions.insert(q);
  }

  // assemble (Psi', delta|_{Psi'}) keeping the original class labels' order
  std::vector<IVec> active;
  std::vector<int> old_class;
  for (int pos : chosen_positions) {
    active.push_back(R.root(spec.psi_root(pos)));
    old_class.push_back(spec.class_of(pos));
  }
  std::map<int, std::vector<int>> by_class;
  for (size_t k = 0; k < active.size(); ++k)
    by_class[old_class[k]].push_back(static_cast<int>(k));
  if (static_cast<int>(by_class.size()) != m)
    throw validation_error("maximal-rank reduction misses a divisor class");
  std::vector<std::vector<int>> classes;
  for (auto& [cls, block] : by_class) {
    if (block.size() != 1)
      throw validation_error("maximal-rank reduction is not class injective");
    classes.push_back(block);
  }

  ActiveRootSpec out = ActiveRootSpec::make(spec.rs_ptr(), active, classes, 0);
  out.require_valid();
  return out;
}

BoundReport knop_check(const ActiveRootSpec& spec) {
  spec.require_valid();
  BoundReport rep;
  rep.count_h = orbit_count(spec);
  rep.count_tu = orbit_count(ActiveRootSpec::tu_prime(spec.rs_ptr()));
  rep.reduction =
      std::make_shared<ActiveRootSpec>(max_rank_reduction(spec));
  rep.count_reduction = orbit_count(*rep.reduction);
  rep.satisfied = rep.count_h <= rep.count_tu;
  return rep;
}

PiSubsystem pi_subsystem(const ActiveRootSpec& spec, ClassMask I) {
  spec.require_valid();
  for (int cls = 0; cls < spec.num_classes(); ++cls)
    if (spec.class_members(cls).size() != 1)
      throw usage_error("pi_subsystem requires a maximal-rank spec");

  const RootSystem& R = spec.rs();
  PiSubsystem out;
  std::vector<int> pi_simples;  // simple indices (Bourbaki, 0-based)
  for (int pos : spec.psi_positions(I)) {
    int idx = spec.pi(pos);
    out.basis.push_back(idx);
    pi_simples.push_back(R.simple_index_of(idx));
  }
  std::sort(out.basis.begin(), out.basis.end());
  out.basis.erase(std::unique(out.basis.begin(), out.basis.end()),
                  out.basis.end());

  ClosedSubsystem prime = subsystem_closure(R, out.basis);
  out.order = prime.weyl_order;

  auto shared = std::make_shared<ActiveRootSpec>(spec);
  WeakRootTable weak(shared);
  out.order_phi = weak.phi(I).weyl_order;

  if (out.order > out.order_phi)
    throw validation_error("|W'_I| exceeds |W_I|");

  // in the connected simply-laced / mixed-length cases the two subsystems
  // are isomorphic, so the orders must agree
  if (!pi_simples.empty() && R.connected(pi_simples)) {
    bool simply_laced = false;
    for (const auto& comp : R.components())
      if (pi_simples.front() >= comp.first &&
          pi_simples.front() < comp.first + comp.rank)
        simply_laced = (comp.letter == 'A' || comp.letter == 'D' ||
                        comp.letter == 'E');
    bool mixed = false;
    for (size_t a = 0; a < pi_simples.size() && !mixed; ++a)
      for (size_t b = a + 1; b < pi_simples.size(); ++b) {
        IVec ea(R.rank(), 0), eb(R.rank(), 0);
        ea[pi_simples[a]] = 1;
        eb[pi_simples[b]] = 1;
        if (R.form(ea, ea) != R.form(eb, eb)) { mixed = true; break; }
      }
    if ((simply_laced || mixed) && out.order != out.order_phi)
      throw validation_error("Phi'_I and Phi_I should be isomorphic here");
  }
  return out;
}

}  // namespace borbit
