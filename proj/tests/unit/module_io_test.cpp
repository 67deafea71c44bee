#include <gtest/gtest.h>

#include "syz/betti_table.hpp"
#include "syz/error.hpp"
#include "syz/graded_module.hpp"
#include "syz/koszul.hpp"
#include "syz/module_io.hpp"
#include "syz/surface_io.hpp"

namespace {

std::string schema_path(const std::string& text) {
  try {
    syz::parse_module_json(text);
  } catch (const syz::SchemaError& e) {
    return e.path();
  }
  return "<no error>";
}

TEST(ModuleJson, RoundTrip) {
  const auto m = syz::rational_normal_curve(3, 3);
  const auto text = syz::module_to_json(m);
  const auto back = syz::parse_module_json(text);
  EXPECT_EQ(back.n(), m.n());
  EXPECT_EQ(back.dims(), m.dims());
  EXPECT_EQ(back.mult_table(), m.mult_table());
  EXPECT_EQ(syz::module_to_json(back), text);
}

TEST(ModuleJson, ReportsFieldPaths) {
  EXPECT_EQ(schema_path(R"({"n":1,"q_min":0,"q_max":1,"dims":[1],"mult":[[[]]]})"), "dims");
  EXPECT_EQ(schema_path(R"({"n":1,"q_min":0,"q_max":1,"dims":[1,"x"],"mult":[[[]]]})"),
            "dims[1]");
  EXPECT_EQ(schema_path(R"({"q_min":0,"q_max":1,"dims":[1,1],"mult":[[[]]]})"), "n");
  EXPECT_EQ(
      schema_path(R"({"n":1,"q_min":0,"q_max":1,"dims":[1,1],"mult":[[[[0,3,"1/1"]]]]})"),
      "mult[0][0][0][1]");
  EXPECT_EQ(
      schema_path(R"({"n":1,"q_min":0,"q_max":1,"dims":[1,1],"mult":[[[[0,0,"one"]]]]})"),
      "mult[0][0][0][2]");
}

TEST(ModuleJson, SyntaxErrorsCarryLineAndColumn) {
  const auto path = schema_path("{\n  \"n\": 1,\n  \"dims\": [1, 1,\n}");
  EXPECT_NE(path.find("line"), std::string::npos) << path;
}

TEST(ModuleJson, NonCommutingActionIsAnInvariantError) {
  const std::string text = R"({"n":2,"q_min":0,"q_max":2,"dims":[1,1,2],
    "mult":[[[[0,0,"1/1"]],[[0,0,"1/1"]]],
            [[[0,0,"1/1"]],[[1,0,"1/1"]]]]})";
  EXPECT_THROW(syz::parse_module_json(text), syz::InvariantError);
}

TEST(Points, TextAndJsonForms) {
  const std::vector<syz::LatticePoint> expected{{0, 0}, {1, 0}, {0, 1}};
  EXPECT_EQ(syz::parse_points("# plane\n0 0\n1,0\n\n0 1\n"), expected);
  EXPECT_EQ(syz::parse_points("[[0,0],[1,0],[0,1]]"), expected);
}

TEST(Points, Errors) {
  EXPECT_THROW(syz::parse_points("0\n1\n1\n"), syz::SchemaError);
  EXPECT_THROW(syz::parse_points("0 1\n2\n"), syz::SchemaError);
  EXPECT_THROW(syz::parse_points("0 a\n"), syz::SchemaError);
  EXPECT_THROW(syz::parse_points("# nothing\n"), syz::SchemaError);
}

TEST(BettiRender, TextCsvJson) {
  const auto t = syz::betti_table(syz::rational_normal_curve(3, 3), 3, 0, 2);
  const auto text = syz::render_text(t);
  EXPECT_NE(text.find("·"), std::string::npos);
  EXPECT_NE(text.find(" 1: · 3 2 ·"), std::string::npos) << text;
  const auto csv = syz::render_csv(t);
  EXPECT_EQ(csv.substr(0, csv.find('\n')), "q,p0,p1,p2,p3");
  EXPECT_NE(csv.find("1,0,3,2,0"), std::string::npos) << csv;
  EXPECT_EQ(syz::betti_table_from_json(syz::to_json(t)), t);
}

TEST(BettiRender, JsonSchemaErrors) {
  EXPECT_THROW(syz::betti_table_from_json(R"({"p_max":1,"q_lo":0,"q_hi":0})"), syz::SchemaError);
  EXPECT_THROW(
      syz::betti_table_from_json(
          R"({"p_max":1,"q_lo":0,"q_hi":0,"entries":[{"p":5,"q":0,"dim":1}]})"),
      syz::SchemaError);
}

TEST(SurfaceJson, ParsesNamedAndExplicitLattices) {
  const auto s = syz::parse_surface_json(
      R"({"kind":"k3","gram":"U","L":[2,3],"flags":{"ample":true}})");
  EXPECT_EQ(s.kind(), syz::SurfaceKind::K3);
  EXPECT_EQ(s.degree(), 12);
  EXPECT_TRUE(s.flags().ample);
  EXPECT_FALSE(s.flags().globally_generated);
  const auto t = syz::parse_surface_json(syz::surface_to_json(s));
  EXPECT_EQ(t.lattice().gram(), s.lattice().gram());
  EXPECT_EQ(t.polarization(), s.polarization());
  const auto e = syz::parse_surface_json(
      R"j({"kind":"enriques","gram":"U+E8(-1)","L":[3,8,0,0,0,0,0,0,0,0]})j");
  EXPECT_EQ(e.lattice().rank(), 10u);
  EXPECT_EQ(e.degree(), 48);
}

TEST(SurfaceJson, Errors) {
  auto path_of = [](const std::string& text) -> std::string {
    try {
      syz::parse_surface_json(text);
    } catch (const syz::SchemaError& e) {
      return e.path();
    }
    return "<no error>";
  };
  EXPECT_EQ(path_of(R"({"kind":"k3","gram":"U","L":[1,2,3]})"), "L");
  EXPECT_EQ(path_of(R"({"kind":"k4","gram":"U","L":[1,2]})"), "kind");
  EXPECT_EQ(path_of(R"({"kind":"k3","L":[1,2]})"), "gram");
  EXPECT_EQ(path_of(R"({"kind":"k3","gram":"U","L":[1,1],"flags":{"nef":true}})"), "flags.nef");
  // Odd lattice on a K3, and a non-positive polarization.
  EXPECT_THROW(syz::parse_surface_json(R"({"kind":"k3","gram":[[1]],"L":[1]})"),
               syz::InvariantError);
  EXPECT_THROW(syz::parse_surface_json(R"({"kind":"k3","gram":"U","L":[1,0]})"),
               syz::InvariantError);
}

}  // namespace
