#include "borbit/weak_table.hpp"

#include <algorithm>
#include <bit>
#include <functional>
#include <set>

namespace borbit {

namespace {

bool dominated(const IVec& lo, const IVec& hi) {
  for (size_t k = 0; k < lo.size(); ++k)
    if (lo[k] > hi[k]) return false;
  return true;
}

bool is_zero(const IVec& v) {
  return std::all_of(v.begin(), v.end(), [](int c) { return c == 0; });
}

}  // namespace

WeakRootTable::WeakRootTable(std::shared_ptr<const ActiveRootSpec> spec)
    : spec_(std::move(spec)) {
  spec_->require_valid();
  const RootSystem& R = spec_->rs();
  delta_ext_.assign(R.num_positive(), -1);

  // Psi# = { alpha : some beta in Psi dominates alpha }; since the
  // N-span of the positive roots is the N-span of the simple roots, the
  // saturation test is plain dominance.
  for (int p = 0; p < R.num_positive(); ++p) {
    const IVec& alpha = R.root(p);
    for (int pos = 0; pos < spec_->psi_size(); ++pos) {
      if (dominated(alpha, R.root(spec_->psi_root(pos)))) {
        sharp_ |= RootMask(1) << p;
        break;
      }
    }
  }

  // delta extends along Psi(alpha) = (alpha + N Psi) cap Psi, and every
  // witness there must carry the same class.
  std::vector<int> all_positions(spec_->psi_size());
  for (int i = 0; i < spec_->psi_size(); ++i) all_positions[i] = i;
  for (int p = 0; p < R.num_positive(); ++p) {
    if (!is_sharp(p)) continue;
    const IVec& alpha = R.root(p);
    int cls = -1;
    for (int pos = 0; pos < spec_->psi_size(); ++pos) {
      const IVec& beta = R.root(spec_->psi_root(pos));
      if (!dominated(alpha, beta)) continue;
      IVec diff(beta);
      for (int k = 0; k < R.rank(); ++k) diff[k] -= alpha[k];
      if (!n_combination(diff, all_positions)) continue;
      int c = spec_->class_of(pos);
      if (cls < 0) cls = c;
      else if (cls != c)
        throw validation_error("delta does not extend consistently to " +
                               std::to_string(p));
    }
    if (cls < 0)
      throw validation_error(
          "weakly active root admits no active witness along N Psi");
    delta_ext_[p] = cls;
  }
}

bool WeakRootTable::n_combination(const IVec& v,
                                  const std::vector<int>& positions) const {
  const RootSystem& R = spec_->rs();
  std::function<bool(IVec&, size_t)> rec = [&](IVec& rem, size_t i) -> bool {
    if (is_zero(rem)) return true;
    if (i == positions.size()) return false;
    const IVec& g = R.root(spec_->psi_root(positions[i]));
    int cap = INT32_MAX;
    for (int k = 0; k < R.rank(); ++k)
      if (g[k] > 0) cap = std::min(cap, rem[k] / g[k]);
    for (int a = 0; a <= cap; ++a) {
      if (rec(rem, i + 1)) {
        for (int k = 0; k < R.rank(); ++k) rem[k] += a * g[k];
        return true;
      }
      if (a < cap)
        for (int k = 0; k < R.rank(); ++k) rem[k] -= g[k];
    }
    for (int k = 0; k < R.rank(); ++k) rem[k] += cap * g[k];
    return false;
  };
  IVec rem = v;
  for (int c : rem)
    if (c < 0) return false;
  return rec(rem, 0);
}

ClassMask WeakRootTable::delta_image(RootMask roots) const {
  ClassMask out = 0;
  for (int p = 0; p < rs().num_positive(); ++p)
    if ((roots >> p) & 1) {
      if (delta_ext_[p] < 0)
        throw validation_error("delta image requested on a non weakly active root");
      out |= ClassMask(1) << delta_ext_[p];
    }
  return out;
}

RootMask WeakRootTable::difference_set(const std::vector<int>& tops,
                                       const std::vector<int>& gens) const {
  const RootSystem& R = spec_->rs();
  RootMask out = 0;
  for (int pos : tops) {
    const IVec& alpha = R.root(spec_->psi_root(pos));
    // enumerate gamma in N Psi_I with gamma <= alpha, gamma != alpha
    std::function<void(IVec&, size_t)> rec = [&](IVec& rem, size_t i) {
      if (i == gens.size()) {
        if (is_zero(rem)) return;  // gamma == alpha excluded
        int idx = R.index_of(rem);
        if (idx < 0)
          throw validation_error("difference of an activation is not a positive root");
        out |= RootMask(1) << idx;
        return;
      }
      const IVec& g = R.root(spec_->psi_root(gens[i]));
      int cap = INT32_MAX;
      for (int k = 0; k < R.rank(); ++k)
        if (g[k] > 0) cap = std::min(cap, rem[k] / g[k]);
      for (int a = 0; a <= cap; ++a) {
        rec(rem, i + 1);
        if (a < cap)
          for (int k = 0; k < R.rank(); ++k) rem[k] -= g[k];
      }
      for (int k = 0; k < R.rank(); ++k) rem[k] += cap * g[k];
    };
    IVec rem = alpha;
    rec(rem, 0);
  }
  return out;
}

WeakRootTable::Entry& WeakRootTable::entry(ClassMask I) const {
  std::lock_guard<std::mutex> lock(mutex_);
  auto it = cache_.find(I);
  if (it != cache_.end()) return it->second;

  Entry e;
  std::vector<int> gens = spec_->psi_positions(I);
  std::vector<int> all(spec_->psi_size());
  for (int i = 0; i < spec_->psi_size(); ++i) all[i] = i;

  e.activated = difference_set(all, gens);
  e.stabilizing = difference_set(gens, gens);

  // Cross-check against the evaluation characterization.
  const RootSystem& R = spec_->rs();
  RootMask act_eval = 0, stab_eval = 0;
  for (int p = 0; p < R.num_positive(); ++p) {
    if (!is_sharp(p)) continue;
    bool nonpos = true, zero = true;
    for (int cls = 0; cls < spec_->num_classes(); ++cls) {
      if ((I >> cls) & 1) continue;
      Rat v = spec_->eval(cls, R.root(p));
      nonpos &= (v <= Rat(0));
      zero &= v.is_zero();
    }
    if (nonpos) act_eval |= RootMask(1) << p;
    if (zero) stab_eval |= RootMask(1) << p;
  }
  if (e.activated != act_eval || e.stabilizing != stab_eval)
    throw validation_error(
        "difference-set and evaluation characterizations disagree; "
        "the spec data is not realizable");

  // stabilizing = activated cap delta^{-1}(I)
  RootMask by_class = 0;
  for (int p = 0; p < R.num_positive(); ++p)
    if (is_sharp(p) && ((I >> delta_ext_[p]) & 1)) by_class |= RootMask(1) << p;
  if (e.stabilizing != (e.activated & by_class))
    throw validation_error("stabilizing set is not activated cap delta^{-1}(I)");

  return cache_.emplace(I, std::move(e)).first->second;
}

RootMask WeakRootTable::activated(ClassMask I) const { return entry(I).activated; }

RootMask WeakRootTable::stabilizing(ClassMask I) const {
  return entry(I).stabilizing;
}

const ClosedSubsystem& WeakRootTable::phi(ClassMask I) const {
  {
    std::lock_guard<std::mutex> lock(mutex_);
    auto it = cache_.find(I);
    if (it != cache_.end() && it->second.have_phi) return it->second.phi;
  }
  RootMask stab = stabilizing(I);  // fills the entry
  std::vector<int> gens;
  for (int pos : spec_->psi_positions(I)) gens.push_back(spec_->psi_root(pos));
  ClosedSubsystem closure = subsystem_closure(spec_->rs(), gens);

  if ((closure.positive & sharp_) != stab)
    throw validation_error("Phi+_I cap Psi# differs from Psi#_I");
  for (int b : closure.basis)
    if (!((stab >> b) & 1))
      throw validation_error("a basis root of Phi_I is not stabilizing");
  if (!closure.parabolic)
    throw validation_error("Phi_I is not parabolic; the spec data is not realizable");
  if (spec_->torus_corank()) {
    // |I| <= rk Phi_I <= torus_corank + |I|; the character lattice of the
    // T-orbit bounds the subsystem rank once the torus corank is declared
    int rk = static_cast<int>(closure.basis.size());
    int card = std::popcount(static_cast<std::uint32_t>(I));
    if (rk < card || rk > *spec_->torus_corank() + card)
      throw validation_error(
          "rank of Phi_I is inconsistent with the declared torus corank");
  }

  std::lock_guard<std::mutex> lock(mutex_);
  Entry& e = cache_[I];
  if (!e.have_phi) {
    e.phi = std::move(closure);
    e.have_phi = true;
  }
  return e.phi;
}

std::vector<int> WeakRootTable::delta_basis_formula(ClassMask I) const {
  const RootSystem& R = spec_->rs();
  std::vector<int> gens = spec_->psi_positions(I);
  std::set<int> out;
  for (int pos : gens) {
    const IVec& beta = R.root(spec_->psi_root(pos));
    // F_I(beta): members of the family inside Psi_I, beta excluded
    std::vector<int> fam;
    for (int q : spec_->family(pos))
      if (q != pos && ((I >> spec_->class_of(q)) & 1)) fam.push_back(q);
    IVec acc = beta;
    for (int q : fam) {
      const IVec& g = R.root(spec_->psi_root(q));
      bool maximal = true;
      for (int q2 : fam) {
        if (q2 == q) continue;
        if (dominated(g, R.root(spec_->psi_root(q2)))) { maximal = false; break; }
      }
      if (!maximal) continue;
      int a = INT32_MAX;
      for (int k = 0; k < R.rank(); ++k)
        if (g[k] > 0) a = std::min(a, beta[k] / g[k]);
      for (int k = 0; k < R.rank(); ++k) acc[k] -= a * g[k];
    }
    int idx = R.index_of(acc);
    if (idx < 0)
      throw validation_error("beta#_I leaves the positive roots");
    out.insert(idx);
  }
  std::vector<int> res(out.begin(), out.end());
  std::vector<int> basis = phi(I).basis;
  std::sort(basis.begin(), basis.end());
  if (res != basis)
    throw validation_error(
        "explicit Delta_I formula disagrees with the indecomposable basis");
  return res;
}

WeakRootTable::MoveResult WeakRootTable::torbit_action(int root_idx,
                                                       ClassMask I) const {
  RootMask bit = RootMask(1) << root_idx;
  if (!(activated(I) & bit)) return {RootMove::Stable, I};
  ClassMask cbit = ClassMask(1) << delta_ext_[root_idx];
  if (stabilizing(I) & bit) return {RootMove::Lowers, static_cast<ClassMask>(I & ~cbit)};
  return {RootMove::Raises, static_cast<ClassMask>(I | cbit)};
}

}  // namespace borbit
