#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <unordered_map>
#include <vector>

namespace borbit {

using IVec = std::vector<int>;          // coefficients over the simple roots
using RootMask = std::uint64_t;         // subset of positive-root indices
using ClassMask = std::uint32_t;        // subset of divisor class labels

struct BuildOptions {
  std::uint64_t max_weyl = 51840;
  int max_positive_roots = 40;
};

// Crystallographic root system of a product of irreducible types A-G,
// given by its Cartan matrix with the positive roots generated by root
// strings. Immutable after construction.
//
// Conventions:
//  - cartan()[i][j] = <alpha_j, alpha_i^vee>, simple roots 0-based in
//    Bourbaki order per irreducible factor;
//  - positive roots are listed by (height, lexicographic coefficients);
//  - the Gram matrix is normalized with short roots of squared length 2
//    in every factor.
class RootSystem {
 public:
  static std::shared_ptr<const RootSystem> build(const std::string& label,
                                                 BuildOptions opts = {});

  const std::string& label() const { return label_; }
  int rank() const { return rank_; }
  const std::vector<IVec>& cartan() const { return cartan_; }

  int num_positive() const { return static_cast<int>(roots_.size()); }
  const IVec& root(int idx) const { return roots_[idx]; }
  const std::vector<IVec>& positive_roots() const { return roots_; }
  int height(int idx) const { return heights_[idx]; }
  RootMask full_mask() const {
    return num_positive() == 64 ? ~RootMask(0)
                                : ((RootMask(1) << num_positive()) - 1);
  }

  // Position of simple root alpha_{i+1} in the positive list (i 0-based).
  int simple_position(int i) const { return simple_pos_[i]; }
  // Bourbaki index (0-based) if idx is simple, else -1.
  int simple_index_of(int idx) const { return simple_index_of_[idx]; }

  // Index of a coefficient vector among the positive roots, -1 if absent.
  int index_of(const IVec& coeffs) const;

  // <beta, alpha_i^vee> for a 0-based simple index i.
  int pairing_simple(const IVec& beta, int i) const;
  // <gamma, beta^vee> for arbitrary roots.
  int pairing(const IVec& gamma, const IVec& beta) const;
  // (x, y) under the normalized invariant form.
  long long form(const IVec& x, const IVec& y) const;

  bool simples_adjacent(int i, int j) const { return i != j && cartan_[i][j] != 0; }
  // Connectivity of a set of simple indices inside the Dynkin diagram.
  bool connected(const std::vector<int>& simples) const;

  std::uint64_t weyl_order() const { return weyl_order_; }
  const BuildOptions& options() const { return opts_; }

  struct Component {
    char letter;
    int rank;
    int first;  // first simple index of the factor
  };
  const std::vector<Component>& components() const { return components_; }

 private:
  RootSystem() = default;

  std::string label_;
  int rank_ = 0;
  std::vector<IVec> cartan_;
  std::vector<int> norm_;          // (alpha_i, alpha_i) / 2
  std::vector<IVec> roots_;
  std::vector<int> heights_;
  std::vector<int> simple_pos_;
  std::vector<int> simple_index_of_;
  std::unordered_map<std::string, int> index_;
  std::uint64_t weyl_order_ = 1;
  std::vector<Component> components_;
  BuildOptions opts_;

  void generate_roots();
};

// Weyl group order of one irreducible factor, by the classical formulas.
std::uint64_t irreducible_weyl_order(char letter, int rank);

}  // namespace borbit
