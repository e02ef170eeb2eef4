#include "borbit/active_spec.hpp"

#include <algorithm>
#include <set>

#include <json.hpp>

#include "borbit/linalg.hpp"
#include "borbit/weyl.hpp"

namespace borbit {

namespace {

bool dominated(const IVec& lo, const IVec& hi) {
  for (size_t k = 0; k < lo.size(); ++k)
    if (lo[k] > hi[k]) return false;
  return true;
}

std::vector<int> support_of(const IVec& v) {
  std::vector<int> s;
  for (size_t k = 0; k < v.size(); ++k)
    if (v[k] > 0) s.push_back(static_cast<int>(k));
  return s;
}

std::string root_str(const IVec& v) {
  std::string s = "(";
  for (size_t k = 0; k < v.size(); ++k) {
    if (k) s += ",";
    s += std::to_string(v[k]);
  }
  return s + ")";
}

}  // namespace

ActiveRootSpec ActiveRootSpec::make(std::shared_ptr<const RootSystem> rs,
                                    const std::vector<IVec>& active,
                                    const std::vector<std::vector<int>>& classes,
                                    std::optional<int> torus_corank) {
  ValidationReport rep;
  auto issue = [&](const std::string& msg, std::vector<IVec> roots = {}) {
    rep.issues.push_back({"A1", msg, std::move(roots)});
  };

  ActiveRootSpec spec;
  spec.rs_ = std::move(rs);
  const RootSystem& R = *spec.rs_;

  std::set<IVec> seen;
  for (const IVec& v : active) {
    if (static_cast<int>(v.size()) != R.rank()) {
      issue("active root has wrong length: " + root_str(v), {v});
      continue;
    }
    int idx = R.index_of(v);
    if (idx < 0) {
      issue("not a positive root: " + root_str(v), {v});
      continue;
    }
    if (!seen.insert(v).second) issue("duplicate active root " + root_str(v), {v});
    spec.psi_.push_back(idx);
  }
  if (rep.ok()) {
    for (int idx : spec.psi_) spec.psi_mask_ |= RootMask(1) << idx;
    std::vector<int> hit(spec.psi_.size(), 0);
    spec.class_of_.assign(spec.psi_.size(), -1);
    for (size_t c = 0; c < classes.size(); ++c) {
      if (classes[c].empty()) issue("empty class block " + std::to_string(c));
      for (int pos : classes[c]) {
        if (pos < 0 || pos >= static_cast<int>(spec.psi_.size())) {
          issue("class index out of range: " + std::to_string(pos));
          continue;
        }
        if (hit[pos]++) issue("class blocks overlap at index " + std::to_string(pos));
        spec.class_of_[pos] = static_cast<int>(c);
      }
    }
    for (size_t pos = 0; pos < spec.psi_.size(); ++pos)
      if (rep.ok() && hit[pos] == 0)
        issue("active root not covered by any class: index " + std::to_string(pos));
    if (classes.size() > 32) issue("more than 32 divisor classes");
    spec.classes_.assign(classes.begin(), classes.end());
  }
  if (torus_corank && *torus_corank < 0) issue("negative torus_corank");
  spec.torus_corank_ = torus_corank;

  if (!rep.ok()) throw validation_error(rep, "spec failed structural checks");
  return spec;
}

ActiveRootSpec ActiveRootSpec::tu_prime(std::shared_ptr<const RootSystem> rs) {
  std::vector<IVec> active;
  std::vector<std::vector<int>> classes;
  for (int i = 0; i < rs->rank(); ++i) {
    IVec v(rs->rank(), 0);
    v[i] = 1;
    active.push_back(v);
    classes.push_back({i});
  }
  return make(std::move(rs), active, classes, 0);
}

ActiveRootSpec ActiveRootSpec::from_json(const std::string& text,
                                         BuildOptions opts) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const std::exception& e) {
    ValidationReport rep;
    rep.issues.push_back({"A1", std::string("unreadable spec document: ") + e.what(), {}});
    throw validation_error(rep, "unreadable spec document");
  }
  try {
    std::string label = j.at("root_system").get<std::string>();
    auto rs = RootSystem::build(label, opts);
    std::vector<IVec> active;
    for (const auto& row : j.at("active_roots"))
      active.push_back(row.get<IVec>());
    std::vector<std::vector<int>> classes;
    for (const auto& row : j.at("classes"))
      classes.push_back(row.get<std::vector<int>>());
    std::optional<int> corank;
    if (j.contains("torus_corank") && !j["torus_corank"].is_null())
      corank = j["torus_corank"].get<int>();
    return make(std::move(rs), active, classes, corank);
  } catch (const validation_error&) {
    throw;
  } catch (const budget_error&) {
    throw;
  } catch (const usage_error& e) {
    ValidationReport rep;
    rep.issues.push_back({"A1", e.what(), {}});
    throw validation_error(rep, e.what());
  } catch (const std::exception& e) {
    ValidationReport rep;
    rep.issues.push_back({"A1", std::string("malformed spec fields: ") + e.what(), {}});
    throw validation_error(rep, "malformed spec fields");
  }
}

std::string ActiveRootSpec::to_json() const {
  nlohmann::ordered_json j;
  j["root_system"] = rs_->label();
  auto roots = nlohmann::ordered_json::array();
  for (int idx : psi_) roots.push_back(rs_->root(idx));
  j["active_roots"] = roots;
  auto cls = nlohmann::ordered_json::array();
  for (const auto& block : classes_) cls.push_back(block);
  j["classes"] = cls;
  if (torus_corank_) j["torus_corank"] = *torus_corank_;
  return j.dump();
}

int ActiveRootSpec::psi_pos_of_root(int root_idx) const {
  for (size_t pos = 0; pos < psi_.size(); ++pos)
    if (psi_[pos] == root_idx) return static_cast<int>(pos);
  return -1;
}

int ActiveRootSpec::class_of_root(int root_idx) const {
  int pos = psi_pos_of_root(root_idx);
  return pos < 0 ? -1 : class_of_[pos];
}

std::vector<int> ActiveRootSpec::psi_positions(ClassMask I) const {
  std::vector<int> out;
  for (size_t pos = 0; pos < psi_.size(); ++pos)
    if ((I >> class_of_[pos]) & 1) out.push_back(static_cast<int>(pos));
  return out;
}

std::vector<int> ActiveRootSpec::family(int pos) const {
  const IVec& beta = rs_->root(psi_[pos]);
  std::vector<int> out;
  for (size_t q = 0; q < psi_.size(); ++q)
    if (dominated(rs_->root(psi_[q]), beta)) out.push_back(static_cast<int>(q));
  return out;
}

int ActiveRootSpec::pi(int pos) const {
  const IVec& beta = rs_->root(psi_[pos]);
  std::vector<int> fam = family(pos);
  // maximal members of F(beta) \ {beta} under dominance
  std::vector<int> proper;
  for (int q : fam)
    if (q != pos) proper.push_back(q);
  IVec acc = beta;
  for (int q : proper) {
    const IVec& g = rs_->root(psi_[q]);
    bool maximal = true;
    for (int q2 : proper) {
      if (q2 == q) continue;
      if (dominated(g, rs_->root(psi_[q2]))) { maximal = false; break; }
    }
    if (!maximal) continue;
    // largest a with a*g < beta
    int a = INT32_MAX;
    for (int k = 0; k < rs_->rank(); ++k)
      if (g[k] > 0) a = std::min(a, beta[k] / g[k]);
    for (int k = 0; k < rs_->rank(); ++k) acc[k] -= a * g[k];
  }
  int idx = rs_->index_of(acc);
  if (idx < 0 || rs_->simple_index_of(idx) < 0) {
    ValidationReport rep;
    rep.issues.push_back({"A2",
                          "pi formula does not yield a simple root for " +
                              root_str(beta) + " (got " + root_str(acc) + ")",
                          {beta}});
    throw validation_error(rep, "pi formula failed");
  }
  return idx;
}

int ActiveRootSpec::table1_type(int pos) const {
  const IVec& beta = rs_->root(psi_[pos]);
  std::vector<int> supp = support_of(beta);
  const int n = static_cast<int>(supp.size());

  bool all_one = true;
  for (int s : supp) all_one &= (beta[s] == 1);
  if (all_one) return 1;

  // the remaining rows live on chains
  std::vector<std::vector<int>> adj(n);
  for (int a = 0; a < n; ++a)
    for (int b = a + 1; b < n; ++b)
      if (rs_->simples_adjacent(supp[a], supp[b])) {
        adj[a].push_back(b);
        adj[b].push_back(a);
      }
  for (int a = 0; a < n; ++a)
    if (adj[a].size() > 2) return 0;
  int end = -1;
  for (int a = 0; a < n; ++a)
    if (adj[a].size() <= 1) { end = a; break; }
  if (end < 0) return 0;
  std::vector<int> chain{end};
  std::vector<bool> used(n, false);
  used[end] = true;
  while (static_cast<int>(chain.size()) < n) {
    int cur = chain.back();
    int nxt = -1;
    for (int b : adj[cur])
      if (!used[b]) { nxt = b; break; }
    if (nxt < 0) return 0;  // disconnected support cannot match a chain row
    used[nxt] = true;
    chain.push_back(nxt);
  }

  int best = 0;
  for (int orient = 0; orient < 2; ++orient) {
    std::vector<int> ord(n);
    for (int k = 0; k < n; ++k)
      ord[k] = supp[chain[orient ? n - 1 - k : k]];
    std::vector<long long> nm(n);
    for (int k = 0; k < n; ++k) {
      IVec e(rs_->rank(), 0);
      e[ord[k]] = 1;
      nm[k] = rs_->form(e, e);
    }
    std::vector<int> mult(n - 1);
    for (int k = 0; k + 1 < n; ++k)
      mult[k] = rs_->cartan()[ord[k]][ord[k + 1]] *
                rs_->cartan()[ord[k + 1]][ord[k]];
    auto coeff = [&](int k) { return beta[ord[k]]; };

    auto consider = [&](int row) {
      if (best == 0 || row < best) best = row;
    };
    if (n == 2 && mult[0] == 3) {  // G2 rows
      if (nm[0] < nm[1] && coeff(0) == 2 && coeff(1) == 1) consider(5);
      if (nm[0] < nm[1] && coeff(0) == 3 && coeff(1) == 1) consider(6);
      continue;
    }
    bool tail_double = n >= 2 && mult[n - 2] == 2;
    bool chain_simple = true;
    for (int k = 0; k + 2 < n; ++k) chain_simple &= (mult[k] == 1);
    if (tail_double && chain_simple) {
      bool coeffs_b = coeff(n - 1) == 2, coeffs_c = coeff(n - 1) == 1;
      for (int k = 0; k + 1 < n; ++k) {
        coeffs_b &= (coeff(k) == 1);
        coeffs_c &= (coeff(k) == 2);
      }
      if (coeffs_b && nm[n - 1] < nm[n - 2]) consider(2);
      if (coeffs_c && nm[n - 1] > nm[n - 2]) consider(3);
    }
    if (n == 4 && mult[0] == 1 && mult[1] == 2 && mult[2] == 1 &&
        nm[0] == nm[1] && nm[1] > nm[2] && nm[2] == nm[3] &&
        coeff(0) == 1 && coeff(1) == 1 && coeff(2) == 2 && coeff(3) == 2)
      consider(4);
  }
  return best;
}

const ValidationReport& ActiveRootSpec::validate() const {
  if (!report_) report_ = run_validation();
  return *report_;
}

void ActiveRootSpec::require_valid() const {
  const ValidationReport& rep = validate();
  if (!rep.ok()) throw validation_error(rep, "spec failed validation");
}

ValidationReport ActiveRootSpec::run_validation() const {
  ValidationReport rep;
  const RootSystem& R = *rs_;
  auto add = [&](const char* ax, const std::string& msg,
                 std::vector<IVec> roots = {}) {
    rep.issues.push_back({ax, msg, std::move(roots)});
  };

  const int n = psi_size();
  std::vector<int> pi_of(n, -1);

  // A2: every active root matches a table row, with the pi formula landing
  // on a simple root of coefficient one.
  for (int pos = 0; pos < n; ++pos) {
    const IVec& beta = R.root(psi_[pos]);
    int row = table1_type(pos);
    if (row == 0)
      add("A2", "active root matches no table row: " + root_str(beta), {beta});
    try {
      pi_of[pos] = pi(pos);
      int simple = R.simple_index_of(pi_of[pos]);
      if (beta[simple] != 1)
        add("A2", "coefficient of pi(beta) in beta is not 1 for " + root_str(beta),
            {beta});
    } catch (const validation_error& e) {
      for (const auto& iss : e.report.issues) rep.issues.push_back(iss);
    }
  }

  // A3: pi restricted to F(beta) is a bijection onto supp(beta).
  for (int pos = 0; pos < n; ++pos) {
    const IVec& beta = R.root(psi_[pos]);
    std::vector<int> fam = family(pos);
    std::set<int> image;
    bool fail = false;
    for (int q : fam) {
      if (pi_of[q] < 0) { fail = true; break; }
      image.insert(R.simple_index_of(pi_of[q]));
    }
    std::vector<int> supp = support_of(beta);
    if (fail || image.size() != fam.size() ||
        image != std::set<int>(supp.begin(), supp.end()))
      add("A3",
          "pi is not a bijection from F(beta) onto supp(beta) for " +
              root_str(beta),
          {beta});
  }

  // A4: each family is linearly independent and delta is injective on it.
  for (int pos = 0; pos < n; ++pos) {
    std::vector<int> fam = family(pos);
    linalg::RatMat m(R.rank());
    for (int i = 0; i < R.rank(); ++i)
      for (int q : fam) m[i].push_back(Rat(R.root(psi_[q])[i]));
    if (linalg::rank(m) != static_cast<int>(fam.size()))
      add("A4", "family of " + root_str(R.root(psi_[pos])) + " is linearly dependent",
          {R.root(psi_[pos])});
    std::set<int> cls;
    for (int q : fam) cls.insert(class_of_[q]);
    if (cls.size() != fam.size())
      add("A4", "delta is not injective on the family of " +
                    root_str(R.root(psi_[pos])),
          {R.root(psi_[pos])});
  }

  // A5: equal pi forces equal delta.
  for (int a = 0; a < n; ++a)
    for (int b = a + 1; b < n; ++b)
      if (pi_of[a] >= 0 && pi_of[a] == pi_of[b] && class_of_[a] != class_of_[b])
        add("A5", "pi(beta1) = pi(beta2) but delta differs for " +
                      root_str(R.root(psi_[a])) + ", " + root_str(R.root(psi_[b])),
            {R.root(psi_[a]), R.root(psi_[b])});

  // A6: the evaluation functionals kill every rational relation in Psi.
  {
    linalg::RatMat m(R.rank());
    for (int i = 0; i < R.rank(); ++i)
      for (int pos = 0; pos < n; ++pos) m[i].push_back(Rat(R.root(psi_[pos])[i]));
    for (const auto& ker : linalg::nullspace(m)) {
      for (int cls = 0; cls < num_classes(); ++cls) {
        Rat s(0);
        for (int pos : classes_[cls]) s = s + ker[pos];
        if (!s.is_zero()) {
          add("A6", "evaluation against class " + std::to_string(cls) +
                        " is not constant on a linear relation of Psi");
          break;
        }
      }
    }
  }

  // A7: beta - beta' is a positive root for proper family members.
  for (int pos = 0; pos < n; ++pos) {
    const IVec& beta = R.root(psi_[pos]);
    for (int q : family(pos)) {
      if (q == pos) continue;
      IVec d = beta;
      const IVec& g = R.root(psi_[q]);
      for (int k = 0; k < R.rank(); ++k) d[k] -= g[k];
      if (R.index_of(d) < 0)
        add("A7", "difference " + root_str(beta) + " - " + root_str(g) +
                      " is not a positive root",
            {beta, g});
    }
  }

  // A8: every connected and co-connected support piece avoiding pi(beta)
  // is realized inside the family.
  for (int pos = 0; pos < n; ++pos) {
    if (pi_of[pos] < 0) continue;
    const IVec& beta = R.root(psi_[pos]);
    std::vector<int> supp = support_of(beta);
    int pi_simple = R.simple_index_of(pi_of[pos]);
    std::set<std::vector<int>> member_supports;
    for (int q : family(pos))
      if (q != pos) member_supports.insert(support_of(R.root(psi_[q])));
    const int sz = static_cast<int>(supp.size());
    for (int bits = 1; bits < (1 << sz) - 1; ++bits) {
      std::vector<int> A, comp;
      for (int k = 0; k < sz; ++k)
        ((bits >> k) & 1 ? A : comp).push_back(supp[k]);
      if (std::find(A.begin(), A.end(), pi_simple) != A.end()) continue;
      if (!R.connected(A) || !R.connected(comp)) continue;
      if (!member_supports.count(A))
        add("A8", "no family member of " + root_str(beta) +
                      " has the connected co-connected support piece",
            {beta});
    }
  }

  return rep;
}

Rat ActiveRootSpec::eval(int cls, const IVec& x) const {
  const RootSystem& R = *rs_;
  linalg::RatMat m(R.rank());
  linalg::RatVec b(R.rank());
  for (int i = 0; i < R.rank(); ++i) {
    for (int pos = 0; pos < psi_size(); ++pos)
      m[i].push_back(Rat(R.root(psi_[pos])[i]));
    b[i] = Rat(x[i]);
  }
  auto sol = linalg::solve(m, b);
  if (!sol) throw usage_error("eval: vector is not in the rational span of Psi");
  Rat out(0);
  for (int pos : classes_[cls]) out = out - (*sol)[pos];
  return out;
}

std::vector<int> ActiveRootSpec::spherical_roots() const {
  std::set<int> sigma;
  for (int idx : psi_)
    for (int s : support_of(rs_->root(idx))) sigma.insert(s);
  WeylElement w0 = longest_element(rs_);
  std::set<int> out;
  for (int i : sigma) {
    int e = w0.image_of_simple(i);
    if (e >= 0) throw std::logic_error("w0 does not invert a simple root");
    out.insert(~e);
  }
  return std::vector<int>(out.begin(), out.end());
}

}  // namespace borbit
