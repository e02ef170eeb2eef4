#pragma once

#include <cstdint>
#include <memory>
#include <span>
#include <string>
#include <vector>

#include "borbit/root_system.hpp"

namespace borbit {

// A Weyl group element stored as its signed permutation of the positive
// roots: img()[r] encodes w(alpha_r), with t >= 0 meaning +root t and
// negative values encoding -root via bitwise complement (~t).
class WeylElement {
 public:
  WeylElement() = default;

  static WeylElement identity(std::shared_ptr<const RootSystem> rs);
  // bourbaki is the 0-based simple index
  static WeylElement simple_reflection(std::shared_ptr<const RootSystem> rs,
                                       int bourbaki);
  // reflection in an arbitrary positive root
  static WeylElement reflection(std::shared_ptr<const RootSystem> rs,
                                int root_idx);

  const RootSystem& rs() const { return *rs_; }
  std::shared_ptr<const RootSystem> rs_ptr() const { return rs_; }

  int apply_signed(int signed_root) const {
    return signed_root >= 0 ? img_[signed_root] : ~img_[~signed_root];
  }
  // (this o other)(x) = this(other(x))
  WeylElement compose(const WeylElement& other) const;
  WeylElement inverse() const;

  int length() const;
  RootMask inversion_mask() const;
  bool is_identity() const;

  // image of alpha_i (0-based simple index), signed
  int image_of_simple(int i) const { return img_[rs_->simple_position(i)]; }
  // whether i is a left descent: l(s_i w) < l(w)
  bool left_descent(int i) const;

  // lexicographically least reduced word, letters 0-based
  std::vector<int> canonical_word() const;

  bool operator==(const WeylElement& o) const { return img_ == o.img_; }
  bool operator!=(const WeylElement& o) const { return !(*this == o); }
  bool operator<(const WeylElement& o) const { return img_ < o.img_; }

  const std::vector<std::int16_t>& img() const { return img_; }

  struct Hash {
    size_t operator()(const WeylElement& w) const;
  };

 private:
  std::shared_ptr<const RootSystem> rs_;
  std::vector<std::int16_t> img_;
};

// w0, built greedily without enumerating the group.
WeylElement longest_element(std::shared_ptr<const RootSystem> rs);

// Demazure (0-Hecke) product v * w: fold a reduced word of v into w by
// m(s)m(u) = m(su) when the length goes up and m(u) otherwise.
WeylElement demazure_product(const WeylElement& v, const WeylElement& w);

// All reduced words of w (letters 0-based); exponential, intended for
// small-rank property tests.
std::vector<std::vector<int>> all_reduced_words(const WeylElement& w);

// The full group in canonical order: (length, canonical word) ascending,
// so the identity comes first and w0 last.
class WeylGroup {
 public:
  WeylGroup(std::shared_ptr<const RootSystem> rs, BuildOptions opts = {});

  int size() const { return static_cast<int>(elements_.size()); }
  const WeylElement& at(int i) const { return elements_[i]; }
  int index_of(const WeylElement& w) const;
  int inverse_index(int i) const { return inverse_idx_[i]; }
  const WeylElement& longest() const { return elements_.back(); }
  const WeylElement& simple(int i) const { return simples_[i]; }
  const RootSystem& rs() const { return *rs_; }
  std::shared_ptr<const RootSystem> rs_ptr() const { return rs_; }
  RootMask inversion_mask(int i) const { return inv_masks_[i]; }
  const std::vector<int>& canonical_word(int i) const { return words_[i]; }

 private:
  std::shared_ptr<const RootSystem> rs_;
  std::vector<WeylElement> elements_;
  std::vector<WeylElement> simples_;
  std::vector<std::vector<int>> words_;
  std::vector<RootMask> inv_masks_;
  std::vector<int> inverse_idx_;
  std::unordered_map<std::string, int> index_;
  static std::string key(const WeylElement& w);
};

// Closure data of a set of positive roots: the subsystem Phi_S = ZS cap Phi
// with its positive part, indecomposable basis, reflection-subgroup order
// (by orbit enumeration of the basis reflections) and the parabolic test
// Phi_S = QS cap Phi.
struct ClosedSubsystem {
  RootMask positive = 0;
  std::vector<int> basis;
  std::uint64_t weyl_order = 1;
  bool parabolic = true;
};

ClosedSubsystem subsystem_closure(const RootSystem& rs,
                                  std::span<const int> root_indices);

// Elements of the reflection subgroup generated by the reflections in
// `basis`, as group elements (used for cosets wW_I).
std::vector<WeylElement> reflection_subgroup_elements(
    std::shared_ptr<const RootSystem> rs, std::span<const int> basis,
    std::uint64_t budget);

}  // namespace borbit
