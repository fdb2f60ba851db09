#include <catch2/catch_amalgamated.hpp>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <set>
#include <sstream>
#include <string>

#include "latfan/cli.hpp"
#include "latfan/io.hpp"

using namespace latfan;

namespace {

std::filesystem::path write_temp(const std::string& name, const std::string& text) {
  std::filesystem::path dir =
      std::filesystem::temp_directory_path() / "latfan_io_tests";
  std::filesystem::create_directories(dir);
  std::filesystem::path p = dir / name;
  std::ofstream out(p, std::ios::binary);
  out << text;
  return p;
}

int run(const std::vector<std::string>& args, std::string* out_text = nullptr,
        std::string* err_text = nullptr) {
  std::ostringstream out, err;
  int rc = run_command(args, out, err);
  if (out_text) *out_text = out.str();
  if (err_text) *err_text = err.str();
  return rc;
}

}  // namespace

TEST_CASE("documents round-trip through parse and emit") {
  for (const Fan& f : {sigma0_fan(3), family_i(3), sporadic(10), surface_family(4, false)}) {
    std::string text = emit_fan(f);
    Fan back = parse_fan(text);
    CHECK(back == f);
    CHECK(emit_fan(back) == text);
  }
}

TEST_CASE("parse_fan rejects malformed documents") {
  CHECK_THROWS_MATCHES(parse_fan("{"), Error,
                       Catch::Matchers::MessageMatches(
                           Catch::Matchers::ContainsSubstring("SyntaxError")));
  CHECK_THROWS_MATCHES(
      parse_fan(R"({"dimension":3,"rays":[[1,0,0]],"max_cones":[[0]],"extra":1})"),
      Error,
      Catch::Matchers::MessageMatches(
          Catch::Matchers::ContainsSubstring("SchemaError")));
  CHECK_THROWS_MATCHES(
      parse_fan(R"({"dimension":3,"rays":[[1,0],[0,1,0],[0,0,1]],"max_cones":[[0,1,2]]})"),
      Error,
      Catch::Matchers::MessageMatches(
          Catch::Matchers::ContainsSubstring("SchemaError")));
  CHECK_THROWS_MATCHES(
      parse_fan(R"({"dimension":3,"rays":[[2,2,2],[0,1,0],[0,0,1]],"max_cones":[[0,1,2]]})"),
      Error,
      Catch::Matchers::MessageMatches(
          Catch::Matchers::ContainsSubstring("NonPrimitive")));
  CHECK_THROWS_MATCHES(
      parse_fan(R"({"dimension":3,"rays":[[1,0,0],[0,1,0],[0,0,1]],"max_cones":[[0,1,3]]})"),
      Error,
      Catch::Matchers::MessageMatches(
          Catch::Matchers::ContainsSubstring("SchemaError")));
}

TEST_CASE("parse_fan builds the orthant fan") {
  Fan f = parse_fan(
      R"({"dimension":3,"rays":[[1,0,0],[0,1,0],[0,0,1]],"max_cones":[[0,1,2]]})");
  CHECK(f == sigma0_fan(3));
}

TEST_CASE("polygon files have an implicit leading origin vertex") {
  std::vector<Vec> verts = parse_polygon_file("1 2\n2 1   # apex\n\n");
  CHECK(verts == std::vector<Vec>{vec3(0, 0, 1), vec3(1, 2, 1), vec3(2, 1, 1)});
  CHECK_THROWS_AS(parse_polygon_file("1\n"), Error);
  CHECK_THROWS_AS(parse_polygon_file("1 2 3\n"), Error);
}

TEST_CASE("OFF export shapes") {
  std::string simplex = export_gamma_off(sigma0_fan(3));
  CHECK(simplex.substr(0, 4) == "OFF\n");
  CHECK(simplex.find("4 4 6\n") != std::string::npos);

  std::string s1 = export_gamma_off(sporadic(1));
  CHECK(s1.find("5 6 9\n") != std::string::npos);

  std::string f2 = export_gamma_off(family_i(2));
  CHECK(f2.find("5 6 9\n") != std::string::npos);
}

TEST_CASE("OFF output re-parses to the Gamma vertex set") {
  Fan f = sporadic(4);
  std::string off = export_gamma_off(f);
  std::istringstream in(off);
  std::string header;
  int nv = 0, nf = 0, ne = 0;
  in >> header >> nv >> nf >> ne;
  REQUIRE(header == "OFF");
  std::set<Vec> verts;
  for (int i = 0; i < nv; ++i) {
    i64 x, y, z;
    in >> x >> y >> z;
    verts.insert(vec3(x, y, z));
  }
  GammaBody g = gamma_body(f);
  std::set<Vec> expect(g.hull.vertices.begin(), g.hull.vertices.end());
  CHECK(verts == expect);
  CHECK(nf == static_cast<int>(g.hull.facets.size()));
  CHECK(nv + nf - 2 == ne);
}

TEST_CASE("cli classify prints the label and a machine line") {
  auto path = write_temp("sporadic3.json", emit_fan(sporadic(3)));
  std::string out;
  int rc = run({"classify", path.string()}, &out);
  CHECK(rc == 0);
  CHECK(out.find("Sporadic(3)\n") == 0);
  CHECK(out.find("label=Sporadic(3) key=") != std::string::npos);
}

TEST_CASE("cli check fails on the inconsistent six-ray configuration") {
  Fan case_iv = face_fan(convex_hull(
      std::vector<Vec>{vec3(0, 0, 0), vec3(1, 0, 0), vec3(0, 1, 0), vec3(0, 0, 1),
                       vec3(2, 1, 1), vec3(1, 2, 1), vec3(1, 1, 2)}));
  auto path = write_temp("case_iv.json", emit_fan(case_iv));
  std::string out;
  int rc = run({"check", path.string()}, &out);
  CHECK(rc == 1);
  CHECK(out.find("gorenstein: false") != std::string::npos);
}

TEST_CASE("cli construct, resolve and export are deterministic") {
  std::string a, b;
  CHECK(run({"construct", "family-i", "--m", "4"}, &a) == 0);
  CHECK(run({"construct", "family-i", "--m", "4"}, &b) == 0);
  CHECK(a == b);
  CHECK(parse_fan(a) == family_i(4));

  CHECK(run({"construct", "surface", "--n", "3", "--gorenstein"}, &a) == 0);
  CHECK(parse_fan(a) == surface_family(3, true));

  auto path = write_temp("gor3.json", a);
  CHECK(run({"resolve2d", path.string()}, &b) == 0);
  CHECK(parse_fan(b) == surface_family(3, false));

  auto poly = write_temp("poly.txt", "1 1\n2 1\n");
  CHECK(run({"construct", "polygon", poly.string()}, &a) == 0);
  Fan f = parse_fan(a);
  CHECK(f.max_cones.size() == 5);

  auto s1 = write_temp("s1.json", emit_fan(sporadic(1)));
  CHECK(run({"export-gamma", s1.string()}, &a) == 0);
  CHECK(a.find("5 6 9\n") != std::string::npos);
}

TEST_CASE("cli usage errors exit with status 2") {
  std::string out, err;
  CHECK(run({"frobnicate"}, &out, &err) == 2);
  CHECK(run({"construct", "family-i"}, &out, &err) == 2);  // --m missing
  CHECK(run({}, &out, &err) == 2);
  CHECK_FALSE(err.empty());
}

TEST_CASE("cli domain errors exit with status 1") {
  auto bad = write_temp("bad.json", R"({"dimension":3,"rays":[[2,2,2]],"max_cones":[[0]]})");
  std::string out, err;
  CHECK(run({"classify", bad.string()}, &out, &err) == 1);
  CHECK(err.find("cli.ValidationError") != std::string::npos);
  CHECK(run({"check", "/nonexistent/path.json"}, &out, &err) == 1);
}

TEST_CASE("cli enumerate polygons report") {
  std::string out;
  CHECK(run({"enumerate", "polygons"}, &out) == 0);
  CHECK(out.find("polygons before swap dedup: 44\n") != std::string::npos);
  std::string tail = "polygons: 23\n";
  REQUIRE(out.size() > tail.size());
  CHECK(out.substr(out.size() - tail.size()) == tail);
}

TEST_CASE("cli enumerate iib ends with the class count") {
  std::string out;
  CHECK(run({"enumerate", "iib"}, &out) == 0);
  std::string tail = "sporadic classes: 13\n";
  REQUIRE(out.size() > tail.size());
  CHECK(out.substr(out.size() - tail.size()) == tail);
  CHECK(out.find("label=Affine") != std::string::npos);
  CHECK(out.find("label=FamilyI(1)") != std::string::npos);
  CHECK(out.find("label=FamilyI(2)") != std::string::npos);
  CHECK(out.find("label=Sporadic(13)") != std::string::npos);
  // byte-identical on a second run
  std::string again;
  CHECK(run({"enumerate", "iib"}, &again) == 0);
  CHECK(again == out);
}

TEST_CASE("documents with metadata round-trip") {
  FanDocument doc = document_from_fan(family_i(2));
  doc.name = "pyramid-2";
  doc.source = "constructed";
  std::string text = emit_document(doc);
  FanDocument back = parse_document(text);
  CHECK(back.name == doc.name);
  CHECK(back.source == doc.source);
  CHECK(emit_document(back) == text);
}
