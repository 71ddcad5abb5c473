#include "doctest.h"
#include "orthoweave/errors.hpp"
#include "orthoweave/serialize.hpp"

using namespace orthoweave;

namespace {

Necklace necklace(const std::string& e) { return std::get<Necklace>(build(parse(e))); }

json stored(const Necklace& n) { return necklace_json(n, project(n).crossings.size()); }

std::size_t count(const std::string& s, const std::string& pat) {
  std::size_t n = 0;
  for (std::size_t p = s.find(pat); p != std::string::npos; p = s.find(pat, p + 1)) ++n;
  return n;
}

}  // namespace

TEST_CASE("quad ext json") {
  QuadExt x(Rat(3, 7), Rat(-2));
  json j = to_json(x);
  CHECK(j["a"] == "3/7");
  CHECK(j["b"] == "-2");
  CHECK(j["approx"].get<std::string>().rfind("-2.399", 0) == 0);
  CHECK(quad_from_json(j) == x);
  CHECK_THROWS_AS(quad_from_json(json{{"a", "1/0"}, {"b", "0"}}), ParseError);
  CHECK_THROWS_AS(quad_from_json(json{{"a", "x"}, {"b", "0"}}), ParseError);
  CHECK_THROWS_AS(quad_from_json(json{{"a", "1"}}), ParseError);
}

TEST_CASE("necklaces round trip exactly") {
  for (const char* e : {"N(t(3))", "N(t(2,2))", "D(t(2,3))", "N(t(1/3)+t(1/2)+t(1/3))"}) {
    CAPTURE(e);
    Necklace n = necklace(e);
    json j = stored(n);
    CHECK(j["counts"]["spheres"] == n.size());
    Necklace back = necklace_from_json(json::parse(j.dump()));
    CHECK(back.frame == n.frame);
    CHECK(back.spheres == n.spheres);
    CHECK(back.cycles == n.cycles);
    CHECK(check_necklace(back).empty());
    CHECK(stored(back).dump() == j.dump());
  }
  Necklace b = braid_grid("abAB", false);
  Necklace back = necklace_from_json(json::parse(stored(b).dump()));
  CHECK(back.frame == Frame::Strip);
  CHECK(back.spheres == b.spheres);
  CHECK(back.detours.empty());
  Necklace h = braid_grid("aaaa", true);
  Necklace hb = necklace_from_json(json::parse(stored(h).dump()));
  REQUIRE(hb.detours.size() == h.detours.size());
  for (const auto& [id, d] : h.detours) {
    CHECK(hb.detours.at(id).waypoints == d.waypoints);
    CHECK(hb.detours.at(id).over == d.over);
    CHECK(hb.detours.at(id).from == d.from);
  }
  CHECK(project(hb).crossings.size() == project(h).crossings.size());
}

TEST_CASE("output is deterministic") {
  CHECK(stored(necklace("N(t(2,2))")).dump() == stored(necklace("N(t(2,2))")).dump());
  CHECK(tangle_json(conway({2, 3}, false), 5).dump() == tangle_json(conway({2, 3}, false), 5).dump());
  CHECK(to_obj(necklace("N(t(3))").spheres) == to_obj(necklace("N(t(3))").spheres));
}

TEST_CASE("perturbed coordinates are rejected") {
  json j = stored(necklace("N(t(3))"));
  json bad = j;
  std::string a = bad["spheres"][2]["coords"]["coords"][0]["a"];
  Rat shifted = Rat::parse(a) + Rat(1, 1000000000);
  bad["spheres"][2]["coords"]["coords"][0]["a"] = shifted.to_string();
  CHECK_THROWS_AS(necklace_from_json(bad), DomainError);

  // a sphere swapped for a valid but distant one passes parsing and fails the packing check
  json moved = j;
  moved["spheres"][2]["coords"] = to_json(sphere_from_bend_center(QuadExt(1), {QuadExt(50), QuadExt(0), QuadExt(0)}));
  Necklace n = necklace_from_json(moved);
  CHECK(!check_necklace(n).empty());
}

TEST_CASE("structural problems are parse errors") {
  json j = stored(necklace("N(t(3))"));
  json a = j;
  a["frame"] = "hexagonal";
  CHECK_THROWS_AS(necklace_from_json(a), ParseError);
  json b = j;
  b["spheres"][0]["id"] = 7;
  CHECK_THROWS_AS(necklace_from_json(b), ParseError);
  json c = j;
  c.erase("cycles");
  CHECK_THROWS_AS(necklace_from_json(c), ParseError);
  json d = j;
  d["spheres"][0]["coords"]["kind"] = "blob";
  CHECK_THROWS_AS(necklace_from_json(d), ParseError);
  CHECK_THROWS_AS(necklace_from_json(json::array()), ParseError);
}

TEST_CASE("other records") {
  json p = to_json(orthocubic_point(Slope(3, 2)));
  CHECK(p["slope"]["text"] == "3/2");
  CHECK(p["invvec"]["kind"] == "point");
  CHECK(p["invvec"]["coords"][3]["b"] == "7");
  json s = to_json(diophantine_from(3, 2));
  CHECK(s["t"] == "7");
  std::string csv = solutions_csv(diophantine(3));
  CHECK(csv == "p,q,x,y,z,t,degenerate\n1,1,1,1,0,1,true\n2,1,2,1,1,3,false\n3,1,3,1,2,7,false\n3,2,3,2,1,7,false\n");
  LaurentPoly poly = LaurentPoly::monomial(-4, 1) + LaurentPoly::monomial(8, -2);
  CHECK(to_json(poly).dump() == R"({"-4":1,"8":-2})");
}

TEST_CASE("obj meshes") {
  Necklace n = necklace("N(t(2))");
  std::string obj = to_obj(n.spheres);
  CHECK(count(obj, "\no sphere_") + (obj.rfind("o sphere_", 0) == 0) == n.size());
  CHECK(count(obj, "\nv ") > 0);
  CHECK(count(obj, "\nf ") > 0);
  std::string half = to_obj({halfspace({QuadExt(0), QuadExt(0), QuadExt(1)}, QuadExt(0))});
  CHECK(half.find("halfspace") != std::string::npos);
}
