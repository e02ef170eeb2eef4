#include "borbit/weyl.hpp"

#include <algorithm>
#include <deque>
#include <stdexcept>
#include <unordered_set>

#include "borbit/errors.hpp"
#include "borbit/linalg.hpp"

namespace borbit {

WeylElement WeylElement::identity(std::shared_ptr<const RootSystem> rs) {
  WeylElement w;
  w.rs_ = std::move(rs);
  w.img_.resize(w.rs_->num_positive());
  for (int r = 0; r < w.rs_->num_positive(); ++r)
    w.img_[r] = static_cast<std::int16_t>(r);
  return w;
}

WeylElement WeylElement::simple_reflection(std::shared_ptr<const RootSystem> rs,
                                           int bourbaki) {
  const RootSystem& R = *rs;
  WeylElement w;
  w.rs_ = std::move(rs);
  w.img_.resize(R.num_positive());
  for (int r = 0; r < R.num_positive(); ++r) {
    IVec v = R.root(r);
    int k = R.pairing_simple(v, bourbaki);
    v[bourbaki] -= k;
    bool neg = std::all_of(v.begin(), v.end(), [](int c) { return c <= 0; });
    if (neg) {
      IVec pos = v;
      for (int& c : pos) c = -c;
      w.img_[r] = static_cast<std::int16_t>(~R.index_of(pos));
    } else {
      int idx = R.index_of(v);
      if (idx < 0) throw std::logic_error("reflection left the root system");
      w.img_[r] = static_cast<std::int16_t>(idx);
    }
  }
  return w;
}

WeylElement WeylElement::reflection(std::shared_ptr<const RootSystem> rs,
                                    int root_idx) {
  const RootSystem& R = *rs;
  const IVec& beta = R.root(root_idx);
  WeylElement w;
  w.rs_ = std::move(rs);
  w.img_.resize(R.num_positive());
  for (int r = 0; r < R.num_positive(); ++r) {
    IVec v = R.root(r);
    int k = R.pairing(v, beta);
    for (int j = 0; j < R.rank(); ++j) v[j] -= k * beta[j];
    bool neg = std::all_of(v.begin(), v.end(), [](int c) { return c <= 0; });
    int idx;
    if (neg) {
      IVec pos = v;
      for (int& c : pos) c = -c;
      idx = R.index_of(pos);
      if (idx < 0) throw std::logic_error("reflection left the root system");
      idx = ~idx;
    } else {
      idx = R.index_of(v);
      if (idx < 0) throw std::logic_error("reflection left the root system");
    }
    w.img_[r] = static_cast<std::int16_t>(idx);
  }
  return w;
}

WeylElement WeylElement::compose(const WeylElement& other) const {
  WeylElement out;
  out.rs_ = rs_;
  out.img_.resize(img_.size());
  for (size_t r = 0; r < img_.size(); ++r)
    out.img_[r] = static_cast<std::int16_t>(apply_signed(other.img_[r]));
  return out;
}

WeylElement WeylElement::inverse() const {
  WeylElement out;
  out.rs_ = rs_;
  out.img_.resize(img_.size());
  for (size_t r = 0; r < img_.size(); ++r) {
    int e = img_[r];
    if (e >= 0)
      out.img_[e] = static_cast<std::int16_t>(r);
    else
      out.img_[~e] = static_cast<std::int16_t>(~static_cast<int>(r));
  }
  return out;
}

int WeylElement::length() const {
  int l = 0;
  for (auto e : img_) l += (e < 0);
  return l;
}

RootMask WeylElement::inversion_mask() const {
  RootMask m = 0;
  for (size_t r = 0; r < img_.size(); ++r)
    if (img_[r] < 0) m |= RootMask(1) << r;
  return m;
}

bool WeylElement::is_identity() const {
  for (size_t r = 0; r < img_.size(); ++r)
    if (img_[r] != static_cast<int>(r)) return false;
  return true;
}

bool WeylElement::left_descent(int i) const {
  // l(s_i w) < l(w) iff w^{-1}(alpha_i) < 0 iff some positive root maps
  // to -alpha_i.
  int target = ~rs_->simple_position(i);
  for (auto e : img_)
    if (e == target) return true;
  return false;
}

std::vector<int> WeylElement::canonical_word() const {
  std::vector<int> word;
  WeylElement w = *this;
  int guard = rs_->num_positive() + 1;
  while (!w.is_identity()) {
    if (--guard < 0) throw std::logic_error("canonical word runaway");
    int i = 0;
    for (; i < rs_->rank(); ++i)
      if (w.left_descent(i)) break;
    if (i == rs_->rank()) throw std::logic_error("no descent on non-identity");
    word.push_back(i);
    w = WeylElement::simple_reflection(rs_, i).compose(w);
  }
  return word;
}

size_t WeylElement::Hash::operator()(const WeylElement& w) const {
  size_t h = 1469598103934665603ull;
  for (auto e : w.img()) {
    h ^= static_cast<size_t>(static_cast<std::uint16_t>(e));
    h *= 1099511628211ull;
  }
  return h;
}

WeylElement longest_element(std::shared_ptr<const RootSystem> rs) {
  WeylElement w = WeylElement::identity(rs);
  const int n = rs->rank();
  std::vector<WeylElement> s;
  for (int i = 0; i < n; ++i)
    s.push_back(WeylElement::simple_reflection(rs, i));
  bool moved = true;
  while (moved) {
    moved = false;
    for (int i = 0; i < n; ++i) {
      // l(w s_i) > l(w) iff w(alpha_i) > 0
      if (w.image_of_simple(i) >= 0) {
        w = w.compose(s[i]);
        moved = true;
      }
    }
  }
  return w;
}

WeylElement demazure_product(const WeylElement& v, const WeylElement& w) {
  auto rs = v.rs_ptr();
  std::vector<int> word = v.canonical_word();
  WeylElement acc = w;
  for (auto it = word.rbegin(); it != word.rend(); ++it) {
    WeylElement s = WeylElement::simple_reflection(rs, *it);
    WeylElement cand = s.compose(acc);
    if (cand.length() > acc.length()) acc = cand;
  }
  return acc;
}

std::vector<std::vector<int>> all_reduced_words(const WeylElement& w) {
  if (w.is_identity()) return {{}};
  std::vector<std::vector<int>> out;
  for (int i = 0; i < w.rs().rank(); ++i) {
    if (!w.left_descent(i)) continue;
    WeylElement rest =
        WeylElement::simple_reflection(w.rs_ptr(), i).compose(w);
    for (auto& tail : all_reduced_words(rest)) {
      std::vector<int> word{i};
      word.insert(word.end(), tail.begin(), tail.end());
      out.push_back(std::move(word));
    }
  }
  return out;
}

std::string WeylGroup::key(const WeylElement& w) {
  return std::string(reinterpret_cast<const char*>(w.img().data()),
                     w.img().size() * sizeof(std::int16_t));
}

WeylGroup::WeylGroup(std::shared_ptr<const RootSystem> rs, BuildOptions opts)
    : rs_(std::move(rs)) {
  for (int i = 0; i < rs_->rank(); ++i)
    simples_.push_back(WeylElement::simple_reflection(rs_, i));

  std::unordered_set<WeylElement, WeylElement::Hash> seen;
  std::deque<WeylElement> queue;
  WeylElement e = WeylElement::identity(rs_);
  seen.insert(e);
  queue.push_back(e);
  while (!queue.empty()) {
    WeylElement w = queue.front();
    queue.pop_front();
    for (int i = 0; i < rs_->rank(); ++i) {
      WeylElement n = w.compose(simples_[i]);
      if (seen.insert(n).second) {
        if (seen.size() > opts.max_weyl)
          throw budget_error("Weyl enumeration budget exceeded (" +
                             std::to_string(opts.max_weyl) + ")");
        queue.push_back(n);
      }
    }
  }

  elements_.assign(seen.begin(), seen.end());
  std::vector<std::vector<int>> words(elements_.size());
  for (size_t i = 0; i < elements_.size(); ++i)
    words[i] = elements_[i].canonical_word();
  std::vector<int> order(elements_.size());
  for (size_t i = 0; i < order.size(); ++i) order[i] = static_cast<int>(i);
  std::sort(order.begin(), order.end(), [&](int a, int b) {
    if (words[a].size() != words[b].size())
      return words[a].size() < words[b].size();
    return words[a] < words[b];
  });
  std::vector<WeylElement> sorted;
  words_.clear();
  for (int i : order) {
    sorted.push_back(std::move(elements_[i]));
    words_.push_back(std::move(words[i]));
  }
  elements_ = std::move(sorted);
  for (size_t i = 0; i < elements_.size(); ++i) {
    index_[key(elements_[i])] = static_cast<int>(i);
    inv_masks_.push_back(elements_[i].inversion_mask());
  }
  inverse_idx_.resize(elements_.size());
  for (size_t i = 0; i < elements_.size(); ++i)
    inverse_idx_[i] = index_of(elements_[i].inverse());
}

int WeylGroup::index_of(const WeylElement& w) const {
  auto it = index_.find(key(w));
  if (it == index_.end()) throw std::logic_error("element outside the group");
  return it->second;
}

ClosedSubsystem subsystem_closure(const RootSystem& rs,
                                  std::span<const int> root_indices) {
  ClosedSubsystem out;
  if (root_indices.empty()) return out;

  std::vector<std::vector<long long>> gens;
  for (int idx : root_indices) {
    const IVec& v = rs.root(idx);
    gens.emplace_back(v.begin(), v.end());
  }

  // Q-span membership by rank comparison.
  linalg::RatMat qmat(rs.rank());
  for (int i = 0; i < rs.rank(); ++i)
    for (const auto& g : gens) qmat[i].push_back(Rat(g[i]));
  int base_rank = linalg::rank(qmat);

  RootMask qmask = 0;
  for (int p = 0; p < rs.num_positive(); ++p) {
    const IVec& v = rs.root(p);
    linalg::RatMat ext = qmat;
    for (int i = 0; i < rs.rank(); ++i) ext[i].push_back(Rat(v[i]));
    if (linalg::rank(ext) == base_rank) qmask |= RootMask(1) << p;
  }

  for (int p = 0; p < rs.num_positive(); ++p) {
    if (!((qmask >> p) & 1)) continue;  // ZS subset of QS
    const IVec& v = rs.root(p);
    if (linalg::lattice_contains(gens, std::vector<long long>(v.begin(), v.end())))
      out.positive |= RootMask(1) << p;
  }
  out.parabolic = (out.positive == qmask);

  // indecomposables of the positive part
  std::vector<int> members;
  for (int p = 0; p < rs.num_positive(); ++p)
    if ((out.positive >> p) & 1) members.push_back(p);
  for (int p : members) {
    bool decomposable = false;
    for (size_t a = 0; a < members.size() && !decomposable; ++a) {
      for (size_t b = a; b < members.size(); ++b) {
        IVec sum = rs.root(members[a]);
        const IVec& vb = rs.root(members[b]);
        for (int j = 0; j < rs.rank(); ++j) sum[j] += vb[j];
        if (sum == rs.root(p)) { decomposable = true; break; }
      }
    }
    if (!decomposable) out.basis.push_back(p);
  }

  // Order of the reflection subgroup: enumerate the faithful action of the
  // basis reflections on the positive part of Phi_S.
  if (!out.basis.empty()) {
    std::vector<int> pos_of(rs.num_positive(), -1);
    for (size_t k = 0; k < members.size(); ++k) pos_of[members[k]] = static_cast<int>(k);
    const int ns = static_cast<int>(members.size());
    std::vector<std::vector<std::int16_t>> gens_perm;
    for (int b : out.basis) {
      std::vector<std::int16_t> perm(ns);
      const IVec& beta = rs.root(b);
      for (int k = 0; k < ns; ++k) {
        IVec v = rs.root(members[k]);
        int c = rs.pairing(v, beta);
        for (int j = 0; j < rs.rank(); ++j) v[j] -= c * beta[j];
        bool neg = std::all_of(v.begin(), v.end(), [](int x) { return x <= 0; });
        if (neg) for (int& x : v) x = -x;
        int idx = rs.index_of(v);
        if (idx < 0 || pos_of[idx] < 0)
          throw std::logic_error("closed subsystem not reflection stable");
        perm[k] = static_cast<std::int16_t>(neg ? ~pos_of[idx] : pos_of[idx]);
      }
      gens_perm.push_back(std::move(perm));
    }
    auto apply = [&](const std::vector<std::int16_t>& g,
                     const std::vector<std::int16_t>& w) {
      std::vector<std::int16_t> r(ns);
      for (int k = 0; k < ns; ++k) {
        int e = w[k];
        r[k] = e >= 0 ? g[e] : static_cast<std::int16_t>(~g[~e]);
      }
      return r;
    };
    struct VecHash {
      size_t operator()(const std::vector<std::int16_t>& v) const {
        size_t h = 1469598103934665603ull;
        for (auto e : v) {
          h ^= static_cast<size_t>(static_cast<std::uint16_t>(e));
          h *= 1099511628211ull;
        }
        return h;
      }
    };
    std::vector<std::int16_t> id(ns);
    for (int k = 0; k < ns; ++k) id[k] = static_cast<std::int16_t>(k);
    std::unordered_set<std::vector<std::int16_t>, VecHash> seen{id};
    std::deque<std::vector<std::int16_t>> queue{id};
    while (!queue.empty()) {
      auto w = queue.front();
      queue.pop_front();
      for (const auto& g : gens_perm) {
        auto n = apply(g, w);
        if (seen.insert(n).second) queue.push_back(n);
      }
    }
    out.weyl_order = seen.size();
  }
  return out;
}

std::vector<WeylElement> reflection_subgroup_elements(
    std::shared_ptr<const RootSystem> rs, std::span<const int> basis,
    std::uint64_t budget) {
  std::vector<WeylElement> gens;
  for (int b : basis) gens.push_back(WeylElement::reflection(rs, b));
  std::unordered_set<WeylElement, WeylElement::Hash> seen;
  std::deque<WeylElement> queue;
  WeylElement e = WeylElement::identity(rs);
  seen.insert(e);
  queue.push_back(e);
  while (!queue.empty()) {
    WeylElement w = queue.front();
    queue.pop_front();
    for (const auto& g : gens) {
      WeylElement n = w.compose(g);
      if (seen.insert(n).second) {
        if (seen.size() > budget)
          throw budget_error("reflection subgroup budget exceeded");
        queue.push_back(n);
      }
    }
  }
  return std::vector<WeylElement>(seen.begin(), seen.end());
}

}  // namespace borbit
