#pragma once

#include <string>
#include <vector>

#include "borbit/orbits.hpp"
#include "borbit/rational.hpp"

namespace borbit {

using RatVec = std::vector<Rat>;

// A subpolytope of the weight polytope P = conv(W lambda): the convex hull
// of a vertex subset, recorded by the Weyl elements v with v lambda a
// vertex (lambda regular separates them).
struct Subpolytope {
  std::vector<int> vertices;  // Weyl indices, ascending
  int dim = 0;
  bool operator==(const Subpolytope& o) const { return vertices == o.vertices; }
};

// The weight-polytope model of the orbit set: O_{w,I} -> conv(w W_I lambda).
class PolytopeModel {
 public:
  // lambda in fundamental-weight coordinates, regular dominant.
  PolytopeModel(const OrbitEngine& engine, RatVec lambda);

  static RatVec rho(const RootSystem& rs) {
    return RatVec(rs.rank(), Rat(1));
  }

  const RatVec& lambda() const { return lambda_; }
  const RatVec& weight_of(int w) const;  // w(lambda), fundamental coordinates

  Subpolytope subpolytope(OrbitId id) const;
  // vertex-by-vertex check of S_{w,I} = P cap (w lambda + Q>=0 w(Phi-_I))
  bool cone_check(OrbitId id) const;

  struct EmbeddingReport {
    bool injective = true;
    std::vector<std::pair<OrbitId, OrbitId>> collisions;
    bool equivariant = true;
  };
  EmbeddingReport embedding_check() const;

  // containment of vertex sets; implies closure containment
  bool bruhat_hint(OrbitId a, OrbitId b) const;

  std::string export_json() const;

 private:
  const OrbitEngine& eng_;
  RatVec lambda_;
  mutable std::vector<RatVec> weights_;
  mutable std::vector<char> have_;
  mutable std::mutex mutex_;
};

// Number of faces of conv(W rho), the polytope itself included, by the
// orbit formula over standard parabolic subgroups.
std::uint64_t face_count(const RootSystem& rs);

}  // namespace borbit
