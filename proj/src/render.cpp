#include "borbit/render.hpp"

#include <sstream>

#include <json.hpp>

namespace borbit {

namespace {

std::string class_set(const OrbitEngine& eng, ClassMask I) {
  if (I == 0) return "-";
  std::string s;
  for (int c = 0; c < eng.spec().num_classes(); ++c)
    if ((I >> c) & 1) {
      if (!s.empty()) s += ",";
      s += std::to_string(c);
    }
  return s;
}

std::string root_vec(const RootSystem& rs, int idx) {
  std::string s = "(";
  const IVec& v = rs.root(idx);
  for (size_t k = 0; k < v.size(); ++k) {
    if (k) s += ",";
    s += std::to_string(v[k]);
  }
  return s + ")";
}

}  // namespace

std::string render_validation(const ValidationReport& report) {
  if (report.ok()) return "ok\n";
  std::ostringstream os;
  os << "invalid\n";
  for (const auto& issue : report.issues) {
    os << issue.axiom << ": " << issue.message << "\n";
  }
  return os.str();
}

std::string render_count(const OrbitEngine& eng) {
  std::uint64_t formula = eng.count_formula();
  std::uint64_t brute = eng.enumerate().size();
  std::ostringstream os;
  os << "formula=" << formula << " brute=" << brute
     << (formula == brute ? " ok" : " MISMATCH") << "\n";
  return os.str();
}

std::string render_orbits_table(const OrbitEngine& eng) {
  std::ostringstream os;
  bool absolute = eng.spec().torus_corank().has_value();
  os << "orbit\tmin\tmax\trank_offset\tdim_offset\tclosed\tstab_order";
  if (absolute) os << "\trank\tdim";
  os << "\n";
  int corank = absolute ? *eng.spec().torus_corank() : 0;
  int dim_bh = corank + eng.spec().psi_size();
  for (const auto& rec : eng.enumerate()) {
    os << eng.orbit_string(rec.id) << "\t" << class_set(eng, rec.min_rep)
       << "\t" << class_set(eng, rec.max_rep) << "\t" << rec.rank_offset
       << "\t" << rec.dim_offset << "\t" << (rec.closed ? "yes" : "no") << "\t"
       << rec.stabilizer_order;
    if (absolute)
      os << "\t" << corank + rec.rank_offset << "\t" << dim_bh + rec.dim_offset;
    os << "\n";
  }
  return os.str();
}

std::string render_orbits_json(const OrbitEngine& eng) {
  nlohmann::ordered_json arr = nlohmann::ordered_json::array();
  bool absolute = eng.spec().torus_corank().has_value();
  int corank = absolute ? *eng.spec().torus_corank() : 0;
  int dim_bh = corank + eng.spec().psi_size();
  for (const auto& rec : eng.enumerate()) {
    nlohmann::ordered_json o;
    o["orbit"] = eng.orbit_string(rec.id);
    o["min"] = class_set(eng, rec.min_rep);
    o["max"] = class_set(eng, rec.max_rep);
    o["rank_offset"] = rec.rank_offset;
    o["dim_offset"] = rec.dim_offset;
    o["closed"] = rec.closed;
    o["stabilizer_order"] = rec.stabilizer_order;
    if (absolute) {
      o["rank"] = corank + rec.rank_offset;
      o["dim"] = dim_bh + rec.dim_offset;
    }
    arr.push_back(o);
  }
  return arr.dump() + "\n";
}

std::string render_stab(const OrbitEngine& eng, OrbitId id) {
  auto [order, gens] = eng.stabilizer(id);
  std::ostringstream os;
  os << "order=" << order << " generators=";
  if (gens.empty()) {
    os << "-";
  } else {
    for (size_t k = 0; k < gens.size(); ++k) {
      if (k) os << " ";
      os << root_vec(eng.rs(), gens[k]);
    }
  }
  os << "\n";
  return os.str();
}

std::string render_weak_order_dot(const OrbitEngine& eng) {
  std::ostringstream os;
  os << "digraph weak_order {\n";
  for (const auto& rec : eng.enumerate())
    os << "  \"" << eng.orbit_string(rec.id) << "\";\n";
  for (const auto& e : eng.weak_order_edges())
    os << "  \"" << eng.orbit_string(e.from) << "\" -> \""
       << eng.orbit_string(e.to) << "\" [label=\"" << (e.alpha + 1) << "\"];\n";
  os << "}\n";
  return os.str();
}

std::string render_knop(const BoundReport& rep) {
  std::ostringstream os;
  os << "count_h=" << rep.count_h << " count_reduction=" << rep.count_reduction
     << " count_tu=" << rep.count_tu
     << " satisfied=" << (rep.satisfied ? "yes" : "no") << "\n";
  return os.str();
}

}  // namespace borbit
