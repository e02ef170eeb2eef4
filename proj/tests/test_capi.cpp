#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <string>

#include "borbit.h"

namespace {

constexpr const char* kHSpec =
    R"({"root_system":"A2","active_roots":[[0,1],[1,1]],"classes":[[0],[1]],"torus_corank":0})";

struct Ctx {
  borbit_ctx* c = nullptr;
  ~Ctx() { borbit_close(c); }
};

std::string grab(int rc, char* text) {
  REQUIRE(rc == BORBIT_OK);
  REQUIRE(text != nullptr);
  std::string out = text;
  borbit_free(text);
  return out;
}

}  // namespace

TEST_CASE("open, validate, count") {
  Ctx g;
  REQUIRE(borbit_open_json(kHSpec, 0, &g.c) == BORBIT_OK);
  char* text = nullptr;
  CHECK(borbit_validation_report(g.c, &text) == BORBIT_OK);
  CHECK(grab(BORBIT_OK, text) == "ok\n");
  text = nullptr;
  int rc = borbit_count(g.c, &text);
  CHECK(grab(rc, text) == "formula=13 brute=13 ok\n");
}

TEST_CASE("tu-prime constructor and spec json") {
  Ctx g;
  REQUIRE(borbit_open_tu_prime("A2", 0, &g.c) == BORBIT_OK);
  char* text = nullptr;
  int rc = borbit_spec_json(g.c, &text);
  std::string json = grab(rc, text);
  CHECK(json ==
        "{\"root_system\":\"A2\",\"active_roots\":[[1,0],[0,1]],"
        "\"classes\":[[0],[1]],\"torus_corank\":0}\n");

  // round-trips through open_json
  Ctx g2;
  CHECK(borbit_open_json(json.c_str(), 0, &g2.c) == BORBIT_OK);
  text = nullptr;
  rc = borbit_count(g2.c, &text);
  CHECK(grab(rc, text) == "formula=13 brute=13 ok\n");
}

TEST_CASE("orbit listing and round trips") {
  Ctx g;
  REQUIRE(borbit_open_json(kHSpec, 0, &g.c) == BORBIT_OK);
  char* text = nullptr;
  int rc = borbit_orbits(g.c, "table", &text);
  std::string table = grab(rc, text);
  CHECK(table.find("w=1,2,1;I=0,1") != std::string::npos);

  // every printed orbit string is accepted by stab
  size_t lines = 0, start = table.find('\n') + 1;
  while (start < table.size()) {
    size_t tab = table.find('\t', start);
    std::string orbit = table.substr(start, tab - start);
    text = nullptr;
    rc = borbit_stab(g.c, orbit.c_str(), &text);
    CHECK(grab(rc, text).rfind("order=", 0) == 0);
    start = table.find('\n', start) + 1;
    ++lines;
  }
  CHECK(lines == 13);

  text = nullptr;
  rc = borbit_orbits(g.c, "json", &text);
  std::string json = grab(rc, text);
  CHECK(json.find("\"closed\":true") != std::string::npos);
  // byte-identical across runs
  text = nullptr;
  rc = borbit_orbits(g.c, "json", &text);
  CHECK(grab(rc, text) == json);
  CHECK(borbit_orbits(g.c, "yaml", &text) == BORBIT_E_USAGE);
}

TEST_CASE("actions through the C surface") {
  Ctx g;
  REQUIRE(borbit_open_json(kHSpec, 0, &g.c) == BORBIT_OK);
  char* text = nullptr;
  int rc = borbit_act(g.c, "w=1,2,1;I=0", "1", &text);
  CHECK(grab(rc, text) == "w=1,2,1;I=0\n");
  text = nullptr;
  rc = borbit_act(g.c, "w=1,2,1;I=0", "2", &text);
  CHECK(grab(rc, text) == "w=1,2;I=0\n");
  text = nullptr;
  rc = borbit_mact(g.c, "w=e;I=-", "1,2,1", &text);
  CHECK(grab(rc, text) == "w=1,2,1;I=0,1\n");

  CHECK(borbit_act(g.c, "nonsense", "1", &text) == BORBIT_E_USAGE);
  CHECK(borbit_act(g.c, "w=e;I=-", "9", &text) == BORBIT_E_USAGE);
  CHECK(std::string(borbit_last_error()).size() > 0);
}

TEST_CASE("polytope and weak order exports") {
  Ctx g;
  REQUIRE(borbit_open_json(kHSpec, 0, &g.c) == BORBIT_OK);
  char* text = nullptr;
  int rc = borbit_polytope_json(g.c, nullptr, &text);
  std::string def = grab(rc, text);
  CHECK(def.find("\"lambda\":[\"1/1\",\"1/1\"]") != std::string::npos);
  text = nullptr;
  rc = borbit_polytope_json(g.c, "2,3/2", &text);
  CHECK(grab(rc, text).find("\"lambda\":[\"2/1\",\"3/2\"]") !=
        std::string::npos);
  CHECK(borbit_polytope_json(g.c, "0,1", &text) == BORBIT_E_USAGE);
  CHECK(borbit_polytope_json(g.c, "x,y", &text) == BORBIT_E_USAGE);

  text = nullptr;
  rc = borbit_weak_order_dot(g.c, &text);
  std::string dot = grab(rc, text);
  CHECK(dot.rfind("digraph weak_order {", 0) == 0);
  // the top orbit is a sink: no outgoing edge from it
  CHECK(dot.find("\"w=1,2,1;I=0,1\" ->") == std::string::npos);
}

TEST_CASE("knop through the C surface") {
  Ctx g;
  REQUIRE(borbit_open_json(kHSpec, 0, &g.c) == BORBIT_OK);
  char* text = nullptr;
  int rc = borbit_knop(g.c, &text);
  CHECK(grab(rc, text) ==
        "count_h=13 count_reduction=13 count_tu=13 satisfied=yes\n");
}

TEST_CASE("error paths") {
  borbit_ctx* c = nullptr;
  CHECK(borbit_open_json("{bad", 0, &c) == BORBIT_E_VALIDATION);
  CHECK(c == nullptr);
  CHECK(std::string(borbit_last_error()).find("A1") != std::string::npos);

  CHECK(borbit_open_json(
            R"({"root_system":"A2","active_roots":[[9,9]],"classes":[[0]]})",
            0, &c) == BORBIT_E_VALIDATION);
  CHECK(c == nullptr);

  // validation failure beyond structure: context exists, report says no
  CHECK(borbit_open_json(
            R"({"root_system":"A2","active_roots":[[1,1]],"classes":[[0]]})",
            0, &c) == BORBIT_OK);
  char* text = nullptr;
  CHECK(borbit_validation_report(c, &text) == BORBIT_E_VALIDATION);
  std::string rep = grab(BORBIT_OK, text);
  CHECK(rep.rfind("invalid", 0) == 0);
  text = nullptr;
  CHECK(borbit_count(c, &text) == BORBIT_E_VALIDATION);
  borbit_close(c);
  c = nullptr;

  CHECK(borbit_open_tu_prime("Q1", 0, &c) == BORBIT_E_USAGE);
  CHECK(borbit_open_tu_prime("E8", 0, &c) == BORBIT_E_BUDGET);
  CHECK(borbit_open_file("/nonexistent/path.json", 0, &c) == BORBIT_E_USAGE);

  // budget override is honored
  CHECK(borbit_open_tu_prime("A4", 100, &c) == BORBIT_E_BUDGET);
  CHECK(borbit_open_tu_prime("A4", 0, &c) == BORBIT_OK);
  borbit_close(c);
}
