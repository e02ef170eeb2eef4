#include "borbit/orbits.hpp"

#include <algorithm>
#include <bit>
#include <sstream>

namespace borbit {

OrbitEngine::OrbitEngine(std::shared_ptr<const ActiveRootSpec> spec,
                         BuildOptions opts)
    : spec_(std::move(spec)),
      weak_(spec_),
      weyl_(spec_->rs_ptr(), opts),
      opts_(opts) {}

ClassMask OrbitEngine::shift_set(int w, ClassMask I) const {
  RootMask act = weak_.activated(I);
  RootMask outside = act & ~weyl_.inversion_mask(w);
  return weak_.delta_image(outside);
}

OrbitId OrbitEngine::reduce(int w, ClassMask I) const {
  return {w, static_cast<ClassMask>(I & ~shift_set(w, I))};
}

ExtendedPair OrbitEngine::extend(int w, ClassMask I) const {
  return {w, static_cast<ClassMask>(I | shift_set(w, I))};
}

bool OrbitEngine::is_reduced(int w, ClassMask I) const {
  RootMask pos = weak_.phi(I).positive;
  return (pos & ~weyl_.inversion_mask(w)) == 0;
}

bool OrbitEngine::is_extended(int w, ClassMask I) const {
  RootMask moving = weak_.activated(I) & ~weak_.stabilizing(I);
  return (moving & ~weyl_.inversion_mask(w)) == 0;
}

OrbitRecord OrbitEngine::record_for(OrbitId id) const {
  OrbitRecord rec;
  rec.id = id;
  ClassMask shift = shift_set(id.w, id.I);
  rec.min_rep = id.I & ~shift;
  rec.max_rep = id.I | shift;
  if (rec.min_rep != id.I)
    throw usage_error("record_for requires a reduced pair");
  rec.extended = {id.w, rec.max_rep};
  rec.rank_offset = std::popcount(rec.min_rep);
  int missing = spec_->num_classes() - std::popcount(rec.max_rep);
  rec.dim_offset = weyl_.at(id.w).length() - missing;
  rec.closed = is_closed(id);
  rec.stabilizer_order = weak_.phi(id.I).weyl_order;
  return rec;
}

const std::vector<OrbitRecord>& OrbitEngine::enumerate() const {
  {
    std::lock_guard<std::mutex> lock(mutex_);
    if (!records_.empty()) return records_;
  }
  std::uint64_t expected = count_formula();
  if (expected > 4000000ull)
    throw budget_error("orbit enumeration budget exceeded (" +
                       std::to_string(expected) + " orbits)");
  std::vector<OrbitRecord> recs;
  const ClassMask all = spec_->all_classes();
  for (ClassMask I = 0;; ++I) {
    RootMask pos = weak_.phi(I).positive;
    for (int w = 0; w < weyl_.size(); ++w)
      if ((pos & ~weyl_.inversion_mask(w)) == 0)
        recs.push_back(record_for({w, I}));
    if (I == all) break;
  }
  if (recs.size() != expected)
    throw validation_error("orbit enumeration disagrees with the counting formula");
  std::lock_guard<std::mutex> lock(mutex_);
  if (records_.empty()) records_ = std::move(recs);
  return records_;
}

std::uint64_t OrbitEngine::count_formula() const {
  std::uint64_t total = 0;
  const ClassMask all = spec_->all_classes();
  const std::uint64_t order = rs().weyl_order();
  for (ClassMask I = 0;; ++I) {
    std::uint64_t sub = weak_.phi(I).weyl_order;
    if (order % sub != 0)
      throw validation_error("|W_I| does not divide |W|");
    total += order / sub;
    if (I == all) break;
  }
  return total;
}

bool OrbitEngine::is_closed(OrbitId id) const {
  if (id.I != 0) return false;
  RootMask inv = weyl_.inversion_mask(id.w);
  if ((inv & ~spec_->psi_mask()) != 0) return false;  // Phi+(w) inside Psi
  // delta injective on Phi+(w)
  ClassMask hit = 0;
  for (int p = 0; p < rs().num_positive(); ++p) {
    if (!((inv >> p) & 1)) continue;
    ClassMask bit = ClassMask(1) << spec_->class_of_root(p);
    if (hit & bit) return false;
    hit |= bit;
  }
  // Psi_{delta(Phi+(w))} = Phi+(w)
  RootMask psi_hit = 0;
  for (int pos : spec_->psi_positions(hit))
    psi_hit |= RootMask(1) << spec_->psi_root(pos);
  return psi_hit == inv;
}

int OrbitEngine::beta_of(int w, int alpha) const {
  const WeylElement& winv = weyl_.at(weyl_.inverse_index(w));
  int img = winv.apply_signed(rs().simple_position(alpha));
  return ~img;  // beta = -w^{-1}(alpha)
}

OrbitId OrbitEngine::weyl_action_simple(int alpha, OrbitId id) const {
  int beta = beta_of(id.w, alpha);
  if (beta >= 0 && ((weak_.stabilizing(id.I) >> beta) & 1)) return id;
  WeylElement moved =
      weyl_.simple(alpha).compose(weyl_.at(id.w));
  OrbitId out{weyl_.index_of(moved), id.I};
  if (!is_reduced(out.w, out.I))
    throw validation_error("simple action left the reduced pairs");
  return out;
}

OrbitId OrbitEngine::weyl_action(const WeylElement& v, OrbitId id) const {
  OrbitId cur = id;
  std::vector<int> word = v.canonical_word();
  for (auto it = word.rbegin(); it != word.rend(); ++it)
    cur = weyl_action_simple(*it, cur);
  // cross-check: the result is the canonical representative of v w W_I
  WeylElement vw = v.compose(weyl_.at(id.w));
  WeylElement canon = coset_max(vw, id.I);
  if (weyl_.index_of(canon) != cur.w)
    throw validation_error("letterwise action disagrees with coset canonicalization");
  return cur;
}

ExtendedPair OrbitEngine::monoid_action_simple(int alpha, ExtendedPair ep) const {
  int beta = beta_of(ep.w, alpha);
  ClassMask I = ep.I;
  if (beta >= 0 && ((weak_.activated(I) >> beta) & 1))
    I |= ClassMask(1) << weak_.delta_ext(beta);
  WeylElement folded =
      demazure_product(weyl_.simple(alpha), weyl_.at(ep.w));
  ExtendedPair out{weyl_.index_of(folded), I};
  if (!is_extended(out.w, out.I))
    throw validation_error("monoid action left the extended pairs");
  return out;
}

ExtendedPair OrbitEngine::monoid_action(const WeylElement& v,
                                        ExtendedPair ep) const {
  std::vector<int> word = v.canonical_word();
  ExtendedPair cur = ep;
  for (auto it = word.rbegin(); it != word.rend(); ++it)
    cur = monoid_action_simple(*it, cur);
  return cur;
}

std::pair<std::uint64_t, std::vector<int>> OrbitEngine::stabilizer(
    OrbitId id) const {
  const ClosedSubsystem& sub = weak_.phi(id.I);
  const WeylElement& w = weyl_.at(id.w);
  std::vector<int> gens;
  for (int b : sub.basis) {
    int img = w.apply_signed(b);
    gens.push_back(img >= 0 ? img : ~img);
  }
  std::sort(gens.begin(), gens.end());
  return {sub.weyl_order, gens};
}

std::map<ClassMask, std::vector<OrbitId>> OrbitEngine::w_orbit_decomposition()
    const {
  std::map<ClassMask, std::vector<OrbitId>> out;
  for (const auto& rec : enumerate()) out[rec.id.I].push_back(rec.id);
  return out;
}

OrbitEngine::PalphaResult OrbitEngine::palpha_decompose(int alpha,
                                                        OrbitId id) const {
  if (!is_reduced(id.w, id.I)) throw usage_error("palpha requires a reduced pair");
  PalphaResult res;
  int beta = beta_of(id.w, alpha);
  ClassMask m = id.I;
  const WeylElement& w = weyl_.at(id.w);
  WeylElement v_elt = weyl_.simple(alpha).compose(w);
  int v = weyl_.index_of(v_elt);

  if (beta >= 0) {
    ClassMask M = extend(id.w, id.I).I;
    RootMask bit = RootMask(1) << beta;
    if (weak_.stabilizing(m) & bit) {
      // the action fixes the orbit; below sit two partners
      res.tag = PalphaResult::Tag::T1;
      ClassMask drop = m & ~(ClassMask(1) << weak_.delta_ext(beta));
      res.orbits = {id, reduce(v, m), reduce(id.w, drop)};
    } else if ((weak_.activated(m) & bit) && !(weak_.stabilizing(M) & bit)) {
      res.tag = PalphaResult::Tag::T2;
      ClassMask up = m | (ClassMask(1) << weak_.delta_ext(beta));
      res.orbits = {reduce(id.w, up), reduce(v, m), id};
    } else {
      res.tag = PalphaResult::Tag::U;
      res.orbits = {id, reduce(v, m)};
    }
  } else {
    int gamma = ~beta;  // w^{-1}(alpha), positive here
    ClassMask Mv = extend(v, m).I;
    RootMask bit = RootMask(1) << gamma;
    if ((weak_.activated(m) & bit) && !(weak_.stabilizing(Mv) & bit)) {
      res.tag = PalphaResult::Tag::TNeg;
      ClassMask up = m | (ClassMask(1) << weak_.delta_ext(gamma));
      res.orbits = {reduce(v, up), id, reduce(v, m)};
    } else {
      res.tag = PalphaResult::Tag::U;
      res.orbits = {reduce(v, m), id};
    }
  }
  return res;
}

bool OrbitEngine::closure_leq_sufficient(OrbitId a, OrbitId b) const {
  // a = (v, J), b = (w, I): require v in w W_I and J inside M_{w,I}
  WeylElement rel = weyl_.at(b.w).inverse().compose(weyl_.at(a.w));
  if (!in_parabolic(rel, b.I)) return false;
  ClassMask M = extend(b.w, b.I).I;
  return (a.I & ~M) == 0;
}

std::vector<OrbitEngine::WeakEdge> OrbitEngine::weak_order_edges() const {
  std::vector<WeakEdge> edges;
  for (const auto& rec : enumerate()) {
    ExtendedPair ep = rec.extended;
    for (int a = 0; a < rs().rank(); ++a) {
      ExtendedPair next = monoid_action_simple(a, ep);
      if (next != ep) edges.push_back({rec.id, a, reduce(next.w, next.I)});
    }
  }
  return edges;
}

bool OrbitEngine::weak_order_minimal(ExtendedPair ep) const {
  // w^{-1}(Delta^-) cap Phi+ inside Psi#(I) \ Psi#_I
  RootMask moving = weak_.activated(ep.I) & ~weak_.stabilizing(ep.I);
  const WeylElement& winv = weyl_.at(weyl_.inverse_index(ep.w));
  for (int a = 0; a < rs().rank(); ++a) {
    int img = winv.apply_signed(~rs().simple_position(a));
    if (img < 0) continue;  // lands in Phi^-
    if (!((moving >> img) & 1)) return false;
  }
  return true;
}

WeylElement OrbitEngine::coset_max(const WeylElement& u, ClassMask I) const {
  const std::vector<int>& basis = weak_.phi(I).basis;
  WeylElement cur = u;
  bool moved = true;
  while (moved) {
    moved = false;
    for (int b : basis) {
      if (cur.apply_signed(b) >= 0) {  // b not yet inverted
        cur = cur.compose(WeylElement::reflection(spec_->rs_ptr(), b));
        moved = true;
      }
    }
  }
  return cur;
}

WeylElement OrbitEngine::coset_min(const WeylElement& u, ClassMask I) const {
  const std::vector<int>& basis = weak_.phi(I).basis;
  WeylElement cur = u;
  bool moved = true;
  while (moved) {
    moved = false;
    for (int b : basis) {
      if (cur.apply_signed(b) < 0) {
        cur = cur.compose(WeylElement::reflection(spec_->rs_ptr(), b));
        moved = true;
      }
    }
  }
  return cur;
}

bool OrbitEngine::in_parabolic(const WeylElement& u, ClassMask I) const {
  return coset_min(u, I).is_identity();
}

const std::vector<WeylElement>& OrbitEngine::subgroup_elements(
    ClassMask I) const {
  {
    std::lock_guard<std::mutex> lock(mutex_);
    auto it = wi_cache_.find(I);
    if (it != wi_cache_.end()) return it->second;
  }
  const ClosedSubsystem& sub = weak_.phi(I);
  std::vector<WeylElement> elems = reflection_subgroup_elements(
      spec_->rs_ptr(), sub.basis, opts_.max_weyl);
  if (elems.size() != sub.weyl_order)
    throw validation_error("reflection subgroup order mismatch");
  std::lock_guard<std::mutex> lock(mutex_);
  auto [it, inserted] = wi_cache_.try_emplace(I, std::move(elems));
  return it->second;
}

std::vector<int> OrbitEngine::coset_member_indices(int w, ClassMask I) const {
  const WeylElement& base = weyl_.at(w);
  std::vector<int> out;
  for (const auto& v : subgroup_elements(I))
    out.push_back(weyl_.index_of(base.compose(v)));
  std::sort(out.begin(), out.end());
  return out;
}

std::string OrbitEngine::orbit_string(OrbitId id) const {
  std::ostringstream os;
  os << "w=";
  const std::vector<int>& word = weyl_.canonical_word(id.w);
  if (word.empty()) {
    os << "e";
  } else {
    for (size_t k = 0; k < word.size(); ++k) {
      if (k) os << ",";
      os << (word[k] + 1);
    }
  }
  os << ";I=";
  if (id.I == 0) {
    os << "-";
  } else {
    bool first = true;
    for (int c = 0; c < spec_->num_classes(); ++c)
      if ((id.I >> c) & 1) {
        if (!first) os << ",";
        os << c;
        first = false;
      }
  }
  return os.str();
}

OrbitId OrbitEngine::parse_orbit(const std::string& text) const {
  auto semi = text.find(';');
  if (text.rfind("w=", 0) != 0 || semi == std::string::npos ||
      text.compare(semi + 1, 2, "I=") != 0)
    throw usage_error("malformed orbit string: " + text);
  std::string wpart = text.substr(2, semi - 2);
  std::string ipart = text.substr(semi + 3);

  WeylElement w = WeylElement::identity(spec_->rs_ptr());
  if (wpart != "e") {
    std::istringstream ws(wpart);
    std::string tok;
    while (std::getline(ws, tok, ',')) {
      int letter;
      try {
        letter = std::stoi(tok);
      } catch (const std::exception&) {
        throw usage_error("malformed orbit word: " + text);
      }
      if (letter < 1 || letter > rs().rank())
        throw usage_error("simple-root index out of range: " + tok);
      w = w.compose(weyl_.simple(letter - 1));
    }
  }
  ClassMask I = 0;
  if (ipart != "-") {
    std::istringstream is(ipart);
    std::string tok;
    while (std::getline(is, tok, ',')) {
      int cls;
      try {
        cls = std::stoi(tok);
      } catch (const std::exception&) {
        throw usage_error("malformed class list: " + text);
      }
      if (cls < 0 || cls >= spec_->num_classes())
        throw usage_error("class label out of range: " + tok);
      I |= ClassMask(1) << cls;
    }
  }
  return reduce(weyl_.index_of(w), I);
}

}  // namespace borbit
