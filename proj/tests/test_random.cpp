#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <set>

#include "borbit/knop.hpp"
#include "borbit/polytope.hpp"
#include "sample_specs.hpp"

// Cross-module battery over sampled validated specs. Each sample runs the
// whole pipeline: enumeration, both actions, stabilizers, the polytope
// embedding and the count bound.

using namespace borbit;

TEST_CASE("sampled specs survive the full pipeline") {
  auto samples = fixtures::sample_valid_specs(25, 13371337);
  REQUIRE(samples.size() == 25);
  for (auto& s : samples) {
    CAPTURE(s.spec.to_json());
    OrbitEngine eng(std::make_shared<ActiveRootSpec>(s.spec));
    const auto& records = eng.enumerate();
    CHECK(records.size() == eng.count_formula());

    // orbit-stabilizer and W-orbit blocks
    auto blocks = eng.w_orbit_decomposition();
    CHECK(blocks.size() ==
          (std::size_t(1) << eng.spec().num_classes()));
    for (auto& [I, ids] : blocks)
      CHECK(ids.size() * eng.weak().phi(I).weyl_order ==
            static_cast<std::uint64_t>(eng.weyl().size()));

    const ExtendedPair top{eng.weyl().size() - 1, eng.spec().all_classes()};
    for (const auto& rec : records) {
      CHECK((rec.dim_offset == 0) == rec.closed);
      // generator-level action consistency
      for (int a = 0; a < eng.rs().rank(); ++a) {
        OrbitId moved = eng.weyl_action_simple(a, rec.id);
        CHECK(eng.weyl_action_simple(a, moved) == rec.id);  // involution
        ExtendedPair up = eng.monoid_action_simple(a, rec.extended);
        CHECK(eng.monoid_action_simple(a, up) == up);
      }
      // saturation to the open orbit
      CHECK(eng.monoid_action(eng.weyl().longest(), rec.extended) == top);
    }

    // polytope model at rho
    PolytopeModel model(eng, PolytopeModel::rho(eng.rs()));
    auto rep = model.embedding_check();
    CHECK(rep.injective);
    CHECK(rep.equivariant);
    for (const auto& rec : records)
      CHECK(model.cone_check(rec.id));

    // the count bound
    BoundReport bound = knop_check(s.spec);
    CHECK(bound.satisfied);
    CHECK(bound.count_h <= bound.count_reduction);
    CHECK(bound.count_reduction <= bound.count_tu);
  }
}
