#include "orthoweave/serialize.hpp"

#include <cmath>
#include <cstdio>
#include <sstream>

#include "orthoweave/errors.hpp"

namespace orthoweave {

namespace {

[[noreturn]] void bad(const std::string& what) { throw ParseError("necklace json: " + what, 1, 1); }

const json& field(const json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) bad(std::string("missing field \"") + key + "\"");
  return j.at(key);
}

Rat rat_from(const json& j) {
  if (j.is_string()) return Rat::parse(j.get<std::string>());
  if (j.is_number_integer()) return Rat(j.get<long>());
  bad("rational must be a string or integer");
}

std::string frame_name(Frame f) { return f == Frame::Orthocubic ? "orthocubic" : "strip"; }

}  // namespace

json to_json(const QuadExt& x) {
  json j;
  j["a"] = x.a().to_string();
  j["b"] = x.b().to_string();
  j["approx"] = x.approx(output_precision());
  return j;
}

json to_json(const InvVec& v) {
  json j;
  j["dim"] = v.dim();
  j["kind"] = v.is_sphere() ? "sphere" : "point";
  j["coords"] = json::array();
  for (const auto& c : v.coords()) j["coords"].push_back(to_json(c));
  return j;
}

json to_json(const Slope& s) {
  json j;
  j["p"] = s.p.get_str();
  j["q"] = s.q.get_str();
  j["text"] = s.to_string();
  return j;
}

json to_json(const LaurentPoly& p) {
  json j = json::object();
  for (auto [e, c] : p.terms()) j[std::to_string(e)] = c;
  return j;
}

json to_json(const PDCode& pd) {
  json j;
  j["crossings"] = json::array();
  for (const auto& x : pd.crossings) j["crossings"].push_back(x);
  j["signs"] = pd.signs;
  j["components"] = pd.components;
  j["free_loops"] = pd.free_loops;
  return j;
}

json to_json(const OrthoPoint& p) {
  json j;
  j["slope"] = to_json(p.slope);
  j["invvec"] = to_json(p.invvec);
  j["cartesian"] = {to_json(p.cartesian[0]), to_json(p.cartesian[1])};
  return j;
}

json to_json(const DiophantineSolution& s) {
  json j;
  j["p"] = s.p.get_str();
  j["q"] = s.q.get_str();
  j["x"] = s.x.get_str();
  j["y"] = s.y.get_str();
  j["z"] = s.z.get_str();
  j["t"] = s.t.get_str();
  j["degenerate"] = s.degenerate;
  return j;
}

json spheres_json(const std::vector<InvVec>& spheres) {
  json arr = json::array();
  for (std::size_t i = 0; i < spheres.size(); ++i) {
    const InvVec& s = spheres[i];
    json j;
    j["id"] = i;
    j["coords"] = to_json(s);
    SphereGeometry g = center_radius(s);
    if (g.halfspace) {
      j["center"] = nullptr;
      j["radius"] = nullptr;
      json n = json::array();
      for (const auto& c : g.normal) n.push_back(to_json(c));
      j["normal"] = n;
      j["delta"] = to_json(g.delta);
    } else {
      json c = json::array();
      for (const auto& x : g.center) c.push_back(to_json(x));
      j["center"] = c;
      j["radius"] = to_json(g.radius);
    }
    if (s.dim() == 3 && !g.halfspace && !s[2].is_zero() && !s.bend().is_zero())
      j["color"] = to_string(z_color(s));
    else
      j["color"] = nullptr;
    arr.push_back(j);
  }
  return arr;
}

json necklace_json(const Necklace& n, std::size_t crossings) {
  json j;
  j["frame"] = frame_name(n.frame);
  j["spheres"] = spheres_json(n.spheres);
  j["cycles"] = n.cycles;
  json det = json::array();
  for (const auto& [id, d] : n.detours) {
    json w = json::array();
    for (const auto& p : d.waypoints) w.push_back({to_json(p[0]), to_json(p[1])});
    det.push_back({{"sphere", id}, {"from", d.from}, {"over", d.over}, {"waypoints", w}});
  }
  j["detours"] = det;
  j["counts"] = {{"spheres", n.spheres.size()}, {"crossings", crossings}};
  return j;
}

json tangle_json(const OrthoTangle& t, std::size_t crossings) {
  json j;
  j["spheres"] = spheres_json(t.spheres);
  j["open_paths"] = t.open_paths;
  j["closed_paths"] = t.closed_paths;
  j["corners"] = {{"NE", t.corners[NE]}, {"NW", t.corners[NW]}, {"SW", t.corners[SW]}, {"SE", t.corners[SE]}};
  j["counts"] = {{"spheres", t.spheres.size()}, {"crossings", crossings}};
  return j;
}

QuadExt quad_from_json(const json& j) {
  try {
    return QuadExt(rat_from(field(j, "a")), rat_from(field(j, "b")));
  } catch (const DomainError& e) {
    bad(e.what());
  }
}

InvVec invvec_from_json(const json& j) {
  const json& c = field(j, "coords");
  if (!c.is_array()) bad("coords must be an array");
  QVector v;
  for (const auto& x : c) v.push_back(quad_from_json(x));
  int dim = field(j, "dim").get<int>();
  std::string kind = field(j, "kind").get<std::string>();
  if (kind != "sphere" && kind != "point") bad("unknown kind " + kind);
  // a coordinate that breaks the norm is a geometric failure, not a syntax one
  return InvVec::from_coords(dim, kind == "sphere" ? VecKind::Sphere : VecKind::Point, std::move(v));
}

Necklace necklace_from_json(const json& j) {
  try {
    Necklace n;
    std::string frame = field(j, "frame").get<std::string>();
    if (frame == "orthocubic")
      n.frame = Frame::Orthocubic;
    else if (frame == "strip")
      n.frame = Frame::Strip;
    else
      bad("unknown frame " + frame);
    const json& sp = field(j, "spheres");
    if (!sp.is_array()) bad("spheres must be an array");
    for (std::size_t i = 0; i < sp.size(); ++i) {
      if (field(sp[i], "id").get<std::size_t>() != i) bad("sphere ids must be 0..n-1 in order");
      n.spheres.push_back(invvec_from_json(field(sp[i], "coords")));
    }
    n.cycles = field(j, "cycles").get<std::vector<Path>>();
    if (j.contains("detours")) {
      for (const auto& d : j.at("detours")) {
        Detour det;
        det.from = field(d, "from").get<std::size_t>();
        det.over = field(d, "over").get<bool>();
        for (const auto& w : field(d, "waypoints")) {
          if (!w.is_array() || w.size() != 2) bad("waypoint must be a pair");
          det.waypoints.push_back({quad_from_json(w[0]), quad_from_json(w[1])});
        }
        n.detours[field(d, "sphere").get<std::size_t>()] = det;
      }
    }
    return n;
  } catch (const json::exception& e) {
    bad(e.what());
  }
}

std::string to_obj(const std::vector<InvVec>& spheres) {
  constexpr int kLat = 8, kLon = 12;
  std::ostringstream os;
  char buf[160];
  std::size_t base = 1;
  for (std::size_t i = 0; i < spheres.size(); ++i) {
    SphereGeometry g = center_radius(spheres[i]);
    if (g.halfspace || g.center.size() != 3) {
      os << "# sphere " << i << " is a halfspace; skipped\n";
      continue;
    }
    double cx = g.center[0].to_double(), cy = g.center[1].to_double(), cz = g.center[2].to_double();
    double r = std::fabs(g.radius.to_double());
    std::snprintf(buf, sizeof buf, "o sphere_%zu\n# center %.9f %.9f %.9f radius %.9f\n", i, cx, cy, cz, r);
    os << buf;
    for (int a = 0; a <= kLat; ++a) {
      double th = M_PI * a / kLat;
      for (int b = 0; b < kLon; ++b) {
        double ph = 2 * M_PI * b / kLon;
        std::snprintf(buf, sizeof buf, "v %.6f %.6f %.6f\n", cx + r * std::sin(th) * std::cos(ph),
                      cy + r * std::sin(th) * std::sin(ph), cz + r * std::cos(th));
        os << buf;
      }
    }
    for (int a = 0; a < kLat; ++a)
      for (int b = 0; b < kLon; ++b) {
        std::size_t v00 = base + a * kLon + b, v01 = base + a * kLon + (b + 1) % kLon;
        std::size_t v10 = v00 + kLon, v11 = v01 + kLon;
        os << "f " << v00 << " " << v10 << " " << v11 << " " << v01 << "\n";
      }
    base += (kLat + 1) * kLon;
  }
  return os.str();
}

std::string solutions_csv(const std::vector<DiophantineSolution>& sols) {
  std::ostringstream os;
  os << "p,q,x,y,z,t,degenerate\n";
  for (const auto& s : sols)
    os << s.p << "," << s.q << "," << s.x << "," << s.y << "," << s.z << "," << s.t << ","
       << (s.degenerate ? "true" : "false") << "\n";
  return os.str();
}

}  // namespace orthoweave
