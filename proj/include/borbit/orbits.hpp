#pragma once

#include <map>
#include <memory>
#include <string>
#include <vector>

#include "borbit/weak_table.hpp"
#include "borbit/weyl.hpp"

namespace borbit {

// Canonical name of a B-orbit: the reduced pair (w, I) with
// Phi+_I contained in the inversion set of w. Weyl elements are carried
// as indices into the canonical group enumeration.
struct OrbitId {
  int w = 0;
  ClassMask I = 0;
  bool operator==(const OrbitId& o) const { return w == o.w && I == o.I; }
  bool operator!=(const OrbitId& o) const { return !(*this == o); }
  bool operator<(const OrbitId& o) const {
    return I != o.I ? I < o.I : w < o.w;
  }
};

// Maximal representative of the same orbit.
struct ExtendedPair {
  int w = 0;
  ClassMask I = 0;
  bool operator==(const ExtendedPair& o) const { return w == o.w && I == o.I; }
  bool operator!=(const ExtendedPair& o) const { return !(*this == o); }
};

struct OrbitRecord {
  OrbitId id;
  ExtendedPair extended;
  ClassMask min_rep = 0;
  ClassMask max_rep = 0;
  int rank_offset = 0;  // rank above rk(B/H)
  int dim_offset = 0;   // dimension above dim(B/H)
  bool closed = false;
  std::uint64_t stabilizer_order = 1;
};

// Orbit engine over a validated spec: enumeration of B-orbits on G/H and
// the Weyl / Richardson-Springer monoid actions.
class OrbitEngine {
 public:
  explicit OrbitEngine(std::shared_ptr<const ActiveRootSpec> spec,
                       BuildOptions opts = {});

  const ActiveRootSpec& spec() const { return *spec_; }
  const WeakRootTable& weak() const { return weak_; }
  const WeylGroup& weyl() const { return weyl_; }
  const RootSystem& rs() const { return spec_->rs(); }

  // I(w) = delta(Psi#(I) \ Phi+(w))
  ClassMask shift_set(int w, ClassMask I) const;
  OrbitId reduce(int w, ClassMask I) const;
  ExtendedPair extend(int w, ClassMask I) const;
  bool is_reduced(int w, ClassMask I) const;
  bool is_extended(int w, ClassMask I) const;

  OrbitRecord record_for(OrbitId id) const;
  const std::vector<OrbitRecord>& enumerate() const;
  std::uint64_t count_formula() const;  // sum over I of |W| / |W_I|

  bool is_closed(OrbitId id) const;

  // Knop's Weyl group action on orbits, by a simple reflection or a
  // general element. The general action is computed letter by letter and
  // cross-asserted against coset canonicalization.
  OrbitId weyl_action_simple(int alpha, OrbitId id) const;
  OrbitId weyl_action(const WeylElement& v, OrbitId id) const;

  ExtendedPair monoid_action_simple(int alpha, ExtendedPair ep) const;
  ExtendedPair monoid_action(const WeylElement& v, ExtendedPair ep) const;

  // order of Stab_W together with the reflection generators w(Delta_I),
  // reported as positive root indices
  std::pair<std::uint64_t, std::vector<int>> stabilizer(OrbitId id) const;

  std::map<ClassMask, std::vector<OrbitId>> w_orbit_decomposition() const;

  struct PalphaResult {
    enum class Tag { U, T1, T2, TNeg } tag;
    std::vector<OrbitId> orbits;  // open orbit first
  };
  PalphaResult palpha_decompose(int alpha, OrbitId id) const;

  // Sufficient closure test: v in w W_I and J inside M_{w,I}.
  bool closure_leq_sufficient(OrbitId a, OrbitId b) const;

  struct WeakEdge {
    OrbitId from;
    int alpha;
    OrbitId to;
  };
  std::vector<WeakEdge> weak_order_edges() const;
  // weak-order minimality via the inversion criterion
  bool weak_order_minimal(ExtendedPair ep) const;

  // coset machinery for w W_I
  WeylElement coset_max(const WeylElement& u, ClassMask I) const;
  WeylElement coset_min(const WeylElement& u, ClassMask I) const;
  bool in_parabolic(const WeylElement& u, ClassMask I) const;
  std::vector<int> coset_member_indices(int w, ClassMask I) const;

  // orbit naming: "w=1,2;I=0", empty word "e", empty subset "-"
  std::string orbit_string(OrbitId id) const;
  OrbitId parse_orbit(const std::string& text) const;  // reduces any representative

 private:
  std::shared_ptr<const ActiveRootSpec> spec_;
  WeakRootTable weak_;
  WeylGroup weyl_;
  BuildOptions opts_;
  mutable std::vector<OrbitRecord> records_;
  mutable std::unordered_map<ClassMask, std::vector<WeylElement>> wi_cache_;
  mutable std::mutex mutex_;

  // signed root beta = -w^{-1}(alpha) for a 0-based simple alpha
  int beta_of(int w, int alpha) const;
  const std::vector<WeylElement>& subgroup_elements(ClassMask I) const;
};

}  // namespace borbit
