#include "borbit/polytope.hpp"

#include <algorithm>
#include <map>

#include <json.hpp>

#include "borbit/linalg.hpp"

namespace borbit {

PolytopeModel::PolytopeModel(const OrbitEngine& engine, RatVec lambda)
    : eng_(engine), lambda_(std::move(lambda)) {
  const RootSystem& R = eng_.rs();
  if (static_cast<int>(lambda_.size()) != R.rank())
    throw usage_error("lambda has wrong length");
  for (const Rat& c : lambda_)
    if (c <= Rat(0)) throw usage_error("lambda is not regular dominant");
  weights_.resize(eng_.weyl().size());
  have_.assign(eng_.weyl().size(), 0);
}

const RatVec& PolytopeModel::weight_of(int w) const {
  std::lock_guard<std::mutex> lock(mutex_);
  if (have_[w]) return weights_[w];
  const RootSystem& R = eng_.rs();
  RatVec cur = lambda_;
  // apply the word letter by letter: s_i(mu) = mu - mu_i * alpha_i, with
  // alpha_i read off the Cartan column in fundamental coordinates
  const std::vector<int>& word = eng_.weyl().canonical_word(w);
  for (auto it = word.rbegin(); it != word.rend(); ++it) {
    Rat c = cur[*it];
    for (int k = 0; k < R.rank(); ++k)
      cur[k] = cur[k] - c * Rat(R.cartan()[k][*it]);
  }
  weights_[w] = std::move(cur);
  have_[w] = 1;
  return weights_[w];
}

Subpolytope PolytopeModel::subpolytope(OrbitId id) const {
  Subpolytope out;
  out.vertices = eng_.coset_member_indices(id.w, id.I);
  // dim = rank of the differences against the first vertex
  const RatVec& base = weight_of(out.vertices.front());
  linalg::RatMat m(eng_.rs().rank());
  for (int v : out.vertices) {
    const RatVec& p = weight_of(v);
    for (int k = 0; k < eng_.rs().rank(); ++k)
      m[k].push_back(p[k] - base[k]);
  }
  out.dim = linalg::rank(m);
  return out;
}

bool PolytopeModel::cone_check(OrbitId id) const {
  const RootSystem& R = eng_.rs();
  const WeylElement& w = eng_.weyl().at(id.w);
  const std::vector<int>& basis = eng_.weak().phi(id.I).basis;

  // generators w(-Delta_I) in fundamental coordinates; Delta_I is linearly
  // independent, so membership reduces to one exact solve plus a sign scan
  linalg::RatMat gen(R.rank());
  for (int b : basis) {
    int img = w.apply_signed(b);  // w(gamma); generator is -w(gamma)
    const IVec& root = R.root(img >= 0 ? img : ~img);
    int sgn = img >= 0 ? -1 : 1;
    for (int k = 0; k < R.rank(); ++k) {
      Rat coord(0);
      for (int j = 0; j < R.rank(); ++j)
        coord = coord + Rat(R.cartan()[k][j] * root[j]);
      gen[k].push_back(Rat(sgn) * coord);
    }
  }

  std::vector<int> expected = eng_.coset_member_indices(id.w, id.I);
  const RatVec& wl = weight_of(id.w);
  std::vector<int> inside;
  for (int v = 0; v < eng_.weyl().size(); ++v) {
    const RatVec& p = weight_of(v);
    linalg::RatVec d(R.rank());
    for (int k = 0; k < R.rank(); ++k) d[k] = p[k] - wl[k];
    if (basis.empty()) {
      bool zero = std::all_of(d.begin(), d.end(), [](const Rat& c) { return c.is_zero(); });
      if (zero) inside.push_back(v);
      continue;
    }
    auto sol = linalg::solve(gen, d);
    if (!sol) continue;
    bool nonneg = std::all_of(sol->begin(), sol->end(),
                              [](const Rat& c) { return c >= Rat(0); });
    if (nonneg) inside.push_back(v);
  }
  return inside == expected;
}

PolytopeModel::EmbeddingReport PolytopeModel::embedding_check() const {
  EmbeddingReport rep;
  std::map<std::vector<int>, OrbitId> seen;
  for (const auto& rec : eng_.enumerate()) {
    Subpolytope s = subpolytope(rec.id);
    auto [it, inserted] = seen.emplace(s.vertices, rec.id);
    if (!inserted) {
      rep.injective = false;
      rep.collisions.emplace_back(it->second, rec.id);
    }
  }
  // simple-reflection equivariance
  for (const auto& rec : eng_.enumerate()) {
    Subpolytope s = subpolytope(rec.id);
    for (int a = 0; a < eng_.rs().rank(); ++a) {
      OrbitId moved = eng_.weyl_action_simple(a, rec.id);
      std::vector<int> mapped;
      for (int v : s.vertices)
        mapped.push_back(eng_.weyl().index_of(
            eng_.weyl().simple(a).compose(eng_.weyl().at(v))));
      std::sort(mapped.begin(), mapped.end());
      if (mapped != subpolytope(moved).vertices) rep.equivariant = false;
    }
  }
  return rep;
}

bool PolytopeModel::bruhat_hint(OrbitId a, OrbitId b) const {
  Subpolytope sa = subpolytope(a), sb = subpolytope(b);
  return std::includes(sb.vertices.begin(), sb.vertices.end(),
                       sa.vertices.begin(), sa.vertices.end());
}

std::string PolytopeModel::export_json() const {
  nlohmann::ordered_json j;
  auto lam = nlohmann::ordered_json::array();
  for (const Rat& c : lambda_) lam.push_back(c.str());
  j["lambda"] = lam;
  auto subs = nlohmann::ordered_json::array();
  for (const auto& rec : eng_.enumerate()) {
    Subpolytope s = subpolytope(rec.id);
    nlohmann::ordered_json entry;
    entry["orbit"] = eng_.orbit_string(rec.id);
    auto verts = nlohmann::ordered_json::array();
    for (int v : s.vertices) {
      auto coords = nlohmann::ordered_json::array();
      for (const Rat& c : weight_of(v)) coords.push_back(c.str());
      verts.push_back(coords);
    }
    entry["vertices"] = verts;
    entry["dim"] = s.dim;
    subs.push_back(entry);
  }
  j["subpolytopes"] = subs;
  return j.dump();
}

std::uint64_t face_count(const RootSystem& rs) {
  const std::uint64_t order = rs.weyl_order();
  std::uint64_t total = 0;
  std::vector<int> simples;
  for (int i = 0; i < rs.rank(); ++i) simples.push_back(rs.simple_position(i));
  for (std::uint32_t bits = 0; bits < (1u << rs.rank()); ++bits) {
    std::vector<int> subset;
    for (int i = 0; i < rs.rank(); ++i)
      if ((bits >> i) & 1) subset.push_back(simples[i]);
    ClosedSubsystem sub = subsystem_closure(rs, subset);
    total += order / sub.weyl_order;
  }
  return total;
}

}  // namespace borbit
