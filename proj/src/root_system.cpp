#include "borbit/root_system.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <set>

#include "borbit/errors.hpp"

namespace borbit {

namespace {

std::string key_of(const IVec& v) {
  std::string k;
  k.reserve(v.size() * 3);
  for (int c : v) { k += std::to_string(c); k += ','; }
  return k;
}

struct Factor {
  char letter;
  int rank;
};

std::vector<Factor> parse_label(const std::string& label) {
  std::vector<Factor> out;
  size_t i = 0;
  while (i < label.size()) {
    char letter = static_cast<char>(std::toupper(label[i]));
    if (letter < 'A' || letter > 'G' || letter == 'x')
      throw usage_error("unknown type token in '" + label + "'");
    ++i;
    size_t start = i;
    while (i < label.size() && std::isdigit(label[i])) ++i;
    if (start == i) throw usage_error("missing rank in '" + label + "'");
    int rank = std::stoi(label.substr(start, i - start));
    out.push_back({letter, rank});
    if (i < label.size()) {
      if (label[i] != 'x' && label[i] != 'X')
        throw usage_error("expected 'x' between factors in '" + label + "'");
      ++i;
      if (i == label.size()) throw usage_error("trailing 'x' in '" + label + "'");
    }
  }
  if (out.empty()) throw usage_error("empty Cartan type");
  return out;
}

void check_rank(char letter, int n) {
  bool ok = false;
  switch (letter) {
    case 'A': ok = n >= 1; break;
    case 'B': ok = n >= 1; break;
    case 'C': ok = n >= 1; break;
    case 'D': ok = n >= 2; break;
    case 'E': ok = n >= 6 && n <= 8; break;
    case 'F': ok = n == 4; break;
    case 'G': ok = n == 2; break;
  }
  if (!ok)
    throw usage_error(std::string("invalid rank for type ") + letter +
                      std::to_string(n));
}

// Fills the factor's Cartan block and simple-root norms (short = 1).
void fill_factor(char letter, int n, std::vector<IVec>& cartan,
                 std::vector<int>& norm, int off) {
  auto chain = [&](int from, int to) {
    cartan[off + from][off + to] = -1;
    cartan[off + to][off + from] = -1;
  };
  switch (letter) {
    case 'A':
      for (int i = 0; i + 1 < n; ++i) chain(i, i + 1);
      for (int i = 0; i < n; ++i) norm[off + i] = 1;
      break;
    case 'B':  // alpha_n short
      for (int i = 0; i + 1 < n; ++i) chain(i, i + 1);
      if (n >= 2) cartan[off + n - 1][off + n - 2] = -2;
      for (int i = 0; i < n; ++i) norm[off + i] = (i == n - 1) ? 1 : 2;
      if (n == 1) norm[off] = 1;
      break;
    case 'C':  // alpha_n long
      for (int i = 0; i + 1 < n; ++i) chain(i, i + 1);
      if (n >= 2) cartan[off + n - 2][off + n - 1] = -2;
      for (int i = 0; i < n; ++i) norm[off + i] = (i == n - 1) ? 2 : 1;
      if (n == 1) norm[off] = 1;
      break;
    case 'D':
      for (int i = 0; i + 2 < n; ++i) chain(i, i + 1);
      if (n >= 3) chain(n - 3, n - 1);
      else if (n == 2) { /* two orthogonal nodes */ }
      for (int i = 0; i < n; ++i) norm[off + i] = 1;
      break;
    case 'E':
      // Bourbaki: chain 1-3-4-5-6(-7)(-8), with 2 attached to 4.
      chain(0, 2);
      chain(2, 3);
      chain(1, 3);
      for (int i = 4; i < n; ++i) chain(i - 1, i);
      for (int i = 0; i < n; ++i) norm[off + i] = 1;
      break;
    case 'F':  // 1-2=>3-4, alpha_1, alpha_2 long
      chain(0, 1);
      chain(2, 3);
      cartan[off + 1][off + 2] = -1;
      cartan[off + 2][off + 1] = -2;
      norm[off + 0] = 2; norm[off + 1] = 2; norm[off + 2] = 1; norm[off + 3] = 1;
      break;
    case 'G':  // alpha_1 short
      cartan[off + 0][off + 1] = -3;
      cartan[off + 1][off + 0] = -1;
      norm[off + 0] = 1; norm[off + 1] = 3;
      break;
  }
}

std::uint64_t factorial(int n) {
  std::uint64_t f = 1;
  for (int i = 2; i <= n; ++i) f *= static_cast<std::uint64_t>(i);
  return f;
}

int positive_count(char letter, int n) {
  switch (letter) {
    case 'A': return n * (n + 1) / 2;
    case 'B':
    case 'C': return n * n;
    case 'D': return n * (n - 1);
    case 'E': return n == 6 ? 36 : (n == 7 ? 63 : 120);
    case 'F': return 24;
    case 'G': return 6;
  }
  return 0;
}

}  // namespace

std::uint64_t irreducible_weyl_order(char letter, int n) {
  switch (letter) {
    case 'A': return factorial(n + 1);
    case 'B':
    case 'C': return (std::uint64_t(1) << n) * factorial(n);
    case 'D': return n >= 2 ? (std::uint64_t(1) << (n - 1)) * factorial(n)
                            : 2;
    case 'E': return n == 6 ? 51840ull : (n == 7 ? 2903040ull : 696729600ull);
    case 'F': return 1152;
    case 'G': return 12;
  }
  return 1;
}

std::shared_ptr<const RootSystem> RootSystem::build(const std::string& label,
                                                    BuildOptions opts) {
  auto factors = parse_label(label);
  auto rs = std::shared_ptr<RootSystem>(new RootSystem());
  rs->opts_ = opts;
  rs->label_.clear();
  int rank = 0;
  for (auto& f : factors) {
    check_rank(f.letter, f.rank);
    rank += f.rank;
  }
  rs->rank_ = rank;
  rs->cartan_.assign(rank, IVec(rank, 0));
  for (int i = 0; i < rank; ++i) rs->cartan_[i][i] = 2;
  rs->norm_.assign(rank, 1);

  int off = 0;
  int expected_roots = 0;
  for (auto& f : factors) {
    fill_factor(f.letter, f.rank, rs->cartan_, rs->norm_, off);
    rs->components_.push_back({f.letter, f.rank, off});
    rs->weyl_order_ *= irreducible_weyl_order(f.letter, f.rank);
    expected_roots += positive_count(f.letter, f.rank);
    if (!rs->label_.empty()) rs->label_ += 'x';
    rs->label_ += f.letter;
    rs->label_ += std::to_string(f.rank);
    off += f.rank;
  }

  if (expected_roots > 63 || expected_roots > opts.max_positive_roots)
    throw budget_error("positive root budget exceeded for " + label + " (" +
                       std::to_string(expected_roots) + " roots)");
  if (rs->weyl_order_ > opts.max_weyl)
    throw budget_error("Weyl group budget exceeded for " + label + " (|W| = " +
                       std::to_string(rs->weyl_order_) + ")");

  rs->generate_roots();
  if (rs->num_positive() != expected_roots)
    throw std::logic_error("root generation mismatch for " + label);
  return rs;
}

void RootSystem::generate_roots() {
  std::set<IVec> known;
  std::vector<IVec> level;
  for (int i = 0; i < rank_; ++i) {
    IVec a(rank_, 0);
    a[i] = 1;
    known.insert(a);
    level.push_back(a);
  }
  while (!level.empty()) {
    std::vector<IVec> next;
    for (const IVec& beta : level) {
      for (int i = 0; i < rank_; ++i) {
        // alpha_i-string through beta: beta + alpha_i is a root iff
        // p - <beta, alpha_i^vee> > 0, p the depth of the string below beta.
        bool is_simple_i = true;
        for (int k = 0; k < rank_ && is_simple_i; ++k)
          is_simple_i = (beta[k] == (k == i ? 1 : 0));
        if (is_simple_i) continue;
        int p = 0;
        IVec down = beta;
        while (true) {
          down[i] -= 1;
          if (down[i] < 0 || !known.count(down)) break;
          ++p;
        }
        if (p - pairing_simple(beta, i) > 0) {
          IVec up = beta;
          up[i] += 1;
          if (known.insert(up).second) next.push_back(up);
        }
      }
    }
    level = std::move(next);
  }

  roots_.assign(known.begin(), known.end());
  std::sort(roots_.begin(), roots_.end(), [](const IVec& a, const IVec& b) {
    int ha = 0, hb = 0;
    for (int c : a) ha += c;
    for (int c : b) hb += c;
    if (ha != hb) return ha < hb;
    return a < b;
  });
  heights_.resize(roots_.size());
  simple_index_of_.assign(roots_.size(), -1);
  simple_pos_.assign(rank_, -1);
  for (size_t r = 0; r < roots_.size(); ++r) {
    int h = 0;
    for (int c : roots_[r]) h += c;
    heights_[r] = h;
    index_[key_of(roots_[r])] = static_cast<int>(r);
    if (h == 1) {
      for (int i = 0; i < rank_; ++i)
        if (roots_[r][i] == 1) {
          simple_pos_[i] = static_cast<int>(r);
          simple_index_of_[r] = i;
        }
    }
  }
}

int RootSystem::index_of(const IVec& coeffs) const {
  auto it = index_.find(key_of(coeffs));
  return it == index_.end() ? -1 : it->second;
}

int RootSystem::pairing_simple(const IVec& beta, int i) const {
  int s = 0;
  for (int j = 0; j < rank_; ++j) s += cartan_[i][j] * beta[j];
  return s;
}

long long RootSystem::form(const IVec& x, const IVec& y) const {
  long long s = 0;
  for (int i = 0; i < rank_; ++i) {
    if (x[i] == 0) continue;
    for (int j = 0; j < rank_; ++j)
      s += static_cast<long long>(x[i]) * y[j] * norm_[i] * cartan_[i][j];
  }
  return s;
}

int RootSystem::pairing(const IVec& gamma, const IVec& beta) const {
  long long bb = form(beta, beta);
  long long gb = 2 * form(gamma, beta);
  if (bb == 0 || gb % bb != 0)
    throw std::logic_error("non-integral Cartan pairing");
  return static_cast<int>(gb / bb);
}

bool RootSystem::connected(const std::vector<int>& simples) const {
  if (simples.empty()) return true;
  std::vector<bool> in(rank_, false), seen(rank_, false);
  for (int s : simples) in[s] = true;
  std::vector<int> stack{simples[0]};
  seen[simples[0]] = true;
  int found = 0;
  while (!stack.empty()) {
    int v = stack.back();
    stack.pop_back();
    ++found;
    for (int j = 0; j < rank_; ++j)
      if (in[j] && !seen[j] && simples_adjacent(v, j)) {
        seen[j] = true;
        stack.push_back(j);
      }
  }
  return found == static_cast<int>(simples.size());
}

}  // namespace borbit
