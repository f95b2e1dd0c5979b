#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <fstream>
#include <sstream>

#include "mqd/caps.hpp"
#include "mqd/determined.hpp"
#include "mqd/workspace.hpp"

using namespace mqd;

namespace {

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  REQUIRE(in.good());
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::string fixture(const std::string& name) {
  return slurp(std::string(MQD_TEST_DATA) + "/" + name);
}

} // namespace

TEST_CASE("workspace loads and validates") {
  Workspace ws = load_workspace(fixture("dual.json"));
  CHECK(ws.algebra->dim() == 2);
  CHECK(ws.modules.size() == 4);
  CHECK(ws.module_named("L").total_dim() == 2);
  CHECK(ws.module_sum("L+S").total_dim() == 3);
  CHECK(ws.options.universe_dim == 2);
  CHECK_THROWS_AS(ws.module_named("missing"), input_error);
}

TEST_CASE("strict parsing") {
  CHECK_THROWS_AS(load_workspace("{"), input_error);
  CHECK_THROWS_AS(load_workspace("{\"field\": {\"p\": 2}}"), input_error);
  // unknown top-level key
  CHECK_THROWS_AS(
      load_workspace(
          R"({"field":{"p":2},"quiver":{"vertices":["v"],"arrows":[]},"options":{"nilpotency_cap":1},"junk":1})"),
      input_error);
  // unknown key inside a module
  CHECK_THROWS_AS(
      load_workspace(
        R"({"field":{"p":2},"quiver":{"vertices":["v"],"arrows":[]},"options":{"nilpotency_cap":1},"modules":{"M":{"dims":{"v":1},"extra":0}}})"),
      input_error);
  // module violating a relation
  std::string bad = fixture("dual.json");
  size_t pos = bad.find("[[0]]");
  bad.replace(pos, 5, "[[1]]");
  CHECK_THROWS_AS(load_workspace(bad), input_error);
  // non-prime field
  CHECK_THROWS_AS(
      load_workspace(
          R"({"field":{"p":4},"quiver":{"vertices":["v"],"arrows":[]},"options":{"nilpotency_cap":1}})"),
      input_error);
}

TEST_CASE("workspace JSON round trip") {
  Workspace ws = load_workspace(fixture("dual.json"));
  std::string dumped = workspace_to_json(ws);
  Workspace back = load_workspace(dumped);
  CHECK(back.algebra->same_structure(*ws.algebra));
  CHECK(back.modules.size() == ws.modules.size());
  CHECK(workspace_to_json(back) == dumped);
}

TEST_CASE("universe dump re-parses and re-validates") {
  Workspace ws = load_workspace(fixture("a2.json"));
  Universe u = build_universe(ws.algebra, 2);
  std::string dumped = universe_to_json(ws, u);
  Workspace back = load_workspace(dumped);
  CHECK(back.modules.size() == u.modules.size());
  for (const auto& [name, m] : back.modules) CHECK(validate(m).ok);
}

TEST_CASE("lattice JSON and the DOT contract") {
  Workspace ws = load_workspace(fixture("dual.json"));
  SubmoduleLattice lat = module_submodule_lattice(ws.module_named("C"), LatticeMode::Lambda);
  REQUIRE(lat.elements.size() == 8);

  const std::string expected_dot =
      "digraph sub {\n"
      "  rankdir=BT;\n"
      "  \"0\";\n"
      "  \"0,0,1\";\n"
      "  \"0,1,0\";\n"
      "  \"0,1,1\";\n"
      "  \"0,1,0;0,0,1\";\n"
      "  \"1,0,0;0,1,0\";\n"
      "  \"1,0,1;0,1,0\";\n"
      "  \"1,0,0;0,1,0;0,0,1\";\n"
      "  \"0\" -> \"0,0,1\";\n"
      "  \"0\" -> \"0,1,0\";\n"
      "  \"0\" -> \"0,1,1\";\n"
      "  \"0,0,1\" -> \"0,1,0;0,0,1\";\n"
      "  \"0,1,0\" -> \"0,1,0;0,0,1\";\n"
      "  \"0,1,0\" -> \"1,0,0;0,1,0\";\n"
      "  \"0,1,0\" -> \"1,0,1;0,1,0\";\n"
      "  \"0,1,1\" -> \"0,1,0;0,0,1\";\n"
      "  \"0,1,0;0,0,1\" -> \"1,0,0;0,1,0;0,0,1\";\n"
      "  \"1,0,0;0,1,0\" -> \"1,0,0;0,1,0;0,0,1\";\n"
      "  \"1,0,1;0,1,0\" -> \"1,0,0;0,1,0;0,0,1\";\n"
      "}\n";
  CHECK(lattice_to_dot(lat) == expected_dot);

  // JSON form has the same element count and covering pairs
  std::string js = lattice_to_json(lat);
  CHECK(js.find("\"ambient\": 3") != std::string::npos);
  CHECK(js.find("\"hasse\"") != std::string::npos);
}

TEST_CASE("determinism: identical inputs give byte-identical outputs") {
  Workspace ws1 = load_workspace(fixture("dual.json"));
  Workspace ws2 = load_workspace(fixture("dual.json"));
  SubmoduleLattice l1 = module_submodule_lattice(ws1.module_named("C"), LatticeMode::Lambda);
  SubmoduleLattice l2 = module_submodule_lattice(ws2.module_named("C"), LatticeMode::Lambda);
  CHECK(lattice_to_dot(l1) == lattice_to_dot(l2));
  CHECK(lattice_to_json(l1) == lattice_to_json(l2));
  Universe u1 = build_universe(ws1.algebra, 2);
  Universe u2 = build_universe(ws2.algebra, 2);
  CHECK(universe_to_json(ws1, u1) == universe_to_json(ws2, u2));
}

TEST_CASE("morphism parsing") {
  Workspace ws = load_workspace(fixture("dual.json"));
  Morphism top = parse_morphism(ws, R"({"source":"L","target":"S","blocks":{"v":[[1,0]]}})");
  CHECK(top.is_epi());
  // intertwining violations are input errors here
  CHECK_THROWS_AS(parse_morphism(ws, R"({"source":"L","target":"S","blocks":{"v":[[0,1]]}})"),
                  input_error);
  CHECK_THROWS_AS(parse_morphism(ws, R"({"source":"L","target":"S"})"), input_error);
  CHECK_THROWS_AS(parse_morphism(ws, "not json"), input_error);
}

TEST_CASE("workspace max_enum option sets the global cap") {
  uint64_t before = enum_cap();
  std::string doc = fixture("dual.json");
  size_t pos = doc.find("\"universe_dim\": 2");
  REQUIRE(pos != std::string::npos);
  doc.insert(pos, "\"max_enum\": 9999, ");
  Workspace ws = load_workspace(doc);
  CHECK(ws.options.max_enum == 9999);
  CHECK(enum_cap() == 9999);
  set_enum_cap(before);
  CHECK(enum_cap() == before);
}
