#include "orthoweave/diagram.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <numeric>
#include <sstream>
#include <unordered_map>

#include "orthoweave/errors.hpp"

namespace orthoweave {

std::strong_ordering operator<=>(const Height& x, const Height& y) {
  if (x.inf != y.inf) return x.inf <=> y.inf;
  if (x.inf != 0) return std::strong_ordering::equal;
  return x.h <=> y.h;
}

namespace {

[[noreturn]] void malformed(const std::string& what) { throw GeometryError("malformed diagram: " + what); }

QuadExt cross(const Point2& u, const Point2& v) { return u[0] * v[1] - u[1] * v[0]; }
QuadExt dot(const Point2& u, const Point2& v) { return u[0] * v[0] + u[1] * v[1]; }
Point2 sub(const Point2& u, const Point2& v) { return {u[0] - v[0], u[1] - v[1]}; }
bool is_zero(const Point2& u) { return u[0].is_zero() && u[1].is_zero(); }
int orient(const Point2& a, const Point2& b, const Point2& c) { return cross(sub(b, a), sub(c, a)).sign(); }

// Closed segment [a,b] contains p, given collinearity.
bool on_segment(const Point2& a, const Point2& b, const Point2& p) {
  if (orient(a, b, p) != 0) return false;
  return dot(sub(p, a), sub(p, b)).sign() <= 0;
}

struct Component {
  std::vector<std::size_t> spheres;
  bool closed = true;
};

class Projector {
 public:
  Projector(Frame frame, const std::vector<InvVec>& spheres, const std::map<std::size_t, Detour>& detours)
      : spheres_(spheres), detours_(detours) {
    d_.frame = frame;
  }

  CubicDiagram run(const std::vector<Component>& comps) {
    for (const auto& c : comps) add_component(c);
    build_runs();
    find_crossings();
    return std::move(d_);
  }

 private:
  struct Run {
    std::size_t comp;
    std::size_t first, last;  // positions within the component's edge list
    Point2 a, b;
  };

  DiagramVertex vertex_for(std::size_t id) const {
    const InvVec& s = spheres_[id];
    SphereGeometry g = center_radius(s);
    if (g.halfspace) malformed("a bounding plane has no drawing detour");
    DiagramVertex v;
    v.sphere = id;
    v.radius = g.radius;
    if (d_.frame == Frame::Orthocubic) {
      v.pos = {g.center[0], g.center[1]};
      v.height.h = g.center[2];
      v.color = z_color(s);
    } else {
      // view along (1,-1,0) from the side where y - x is large
      v.pos = {-(g.center[0] + g.center[1]), g.center[2]};
      v.height.h = g.center[1] - g.center[0];
    }
    return v;
  }

  void add_component(const Component& c) {
    std::vector<std::size_t> vs;
    const std::size_t n = c.spheres.size();
    for (std::size_t i = 0; i < n; ++i) {
      std::size_t id = c.spheres[i];
      auto it = detours_.find(id);
      if (it == detours_.end()) {
        vs.push_back(d_.vertices.size());
        d_.vertices.push_back(vertex_for(id));
        continue;
      }
      const Detour& det = it->second;
      bool forward = (i > 0 || c.closed) && c.spheres[(i + n - 1) % n] == det.from;
      std::vector<Point2> wps = det.waypoints;
      if (!forward) std::reverse(wps.begin(), wps.end());
      for (const auto& w : wps) {
        DiagramVertex v;
        v.sphere = id;
        v.pos = w;
        v.height.inf = det.over ? 1 : -1;
        v.waypoint = true;
        vs.push_back(d_.vertices.size());
        d_.vertices.push_back(v);
      }
    }
    std::vector<std::size_t> edges;
    std::size_t ne = c.closed ? vs.size() : vs.size() - 1;
    // a 2-cycle retraces itself; one edge stands for it
    if (c.closed && vs.size() == 2) ne = 1;
    for (std::size_t i = 0; i < ne; ++i) {
      DiagramEdge e{vs[i], vs[(i + 1) % vs.size()], false};
      const auto& ca = d_.vertices[e.a].color;
      const auto& cb = d_.vertices[e.b].color;
      e.diagonal = ca && cb && *ca == *cb;
      edges.push_back(d_.edges.size());
      d_.edges.push_back(e);
    }
    d_.components.push_back(std::move(edges));
    d_.closed.push_back(c.closed);
  }

  Point2 dir(std::size_t e) const { return sub(d_.vertices[d_.edges[e].b].pos, d_.vertices[d_.edges[e].a].pos); }

  bool continues(std::size_t e_prev, std::size_t e) const {
    Point2 u = dir(e_prev), v = dir(e);
    if (is_zero(v) || is_zero(u)) return true;
    return cross(u, v).is_zero() && dot(u, v).sign() > 0;
  }

  void build_runs() {
    for (std::size_t k = 0; k < d_.components.size(); ++k) {
      const auto& es = d_.components[k];
      const std::size_t m = es.size();
      if (m == 0) {
        comp_runs_.push_back({runs_.size(), runs_.size()});
        continue;
      }
      std::size_t start = 0;
      if (d_.closed[k] && m > 1) {
        // begin at a genuine corner so no run wraps around
        start = m;
        for (std::size_t i = 0; i < m; ++i)
          if (!continues(es[(i + m - 1) % m], es[i])) {
            start = i;
            break;
          }
        if (start == m) malformed("a closed component projects to a line");
      }
      std::vector<Run> runs;
      for (std::size_t step = 0; step < m; ++step) {
        std::size_t i = (start + step) % m;
        if (!runs.empty() && continues(es[runs.back().last], es[i])) {
          runs.back().last = i;
          continue;
        }
        runs.push_back({k, i, i, {}, {}});
      }
      for (auto& r : runs) {
        r.a = d_.vertices[d_.edges[es[r.first]].a].pos;
        r.b = d_.vertices[d_.edges[es[r.last]].b].pos;
      }
      std::size_t base = runs_.size();
      for (auto& r : runs) runs_.push_back(r);
      comp_runs_.push_back({base, runs_.size()});
    }
  }

  bool adjacent(std::size_t i, std::size_t j) const {
    const Run& a = runs_[i];
    const Run& b = runs_[j];
    if (a.comp != b.comp) return false;
    auto [lo, hi] = comp_runs_[a.comp];
    std::size_t n = hi - lo;
    std::size_t x = i - lo, y = j - lo;
    if (x + 1 == y || y + 1 == x) return true;
    return d_.closed[a.comp] && n > 1 && ((x == 0 && y == n - 1) || (y == 0 && x == n - 1));
  }

  // Locate p on run r: edge index and parameter along it.
  std::pair<std::size_t, QuadExt> locate(const Run& r, const Point2& p) const {
    const auto& es = d_.components[r.comp];
    const std::size_t m = es.size();
    for (std::size_t i = r.first;; i = (i + 1) % m) {
      std::size_t e = es[i];
      Point2 d = dir(e);
      if (!is_zero(d)) {
        QuadExt t = dot(sub(p, d_.vertices[d_.edges[e].a].pos), d) / dot(d, d);
        if (t.sign() >= 0 && t <= QuadExt(1)) {
          if (d_.frame == Frame::Orthocubic && (t.is_zero() || t == QuadExt(1)))
            malformed("crossing through a sphere center");
          if (t == QuadExt(1) && i != r.last && is_zero(dir(es[(i + 1) % m])))
            malformed("crossing at a stacked pair of centers");
          return {e, t};
        }
      }
      if (i == r.last) break;
    }
    malformed("crossing point not on its run");
  }

  Height height_at(std::size_t e, const QuadExt& t) const {
    const auto& va = d_.vertices[d_.edges[e].a];
    const auto& vb = d_.vertices[d_.edges[e].b];
    if (va.waypoint) return va.height;
    if (vb.waypoint) return vb.height;
    return Height{0, va.height.h + t * (vb.height.h - va.height.h)};
  }

  void find_crossings() {
    for (std::size_t i = 0; i < runs_.size(); ++i) {
      for (std::size_t j = i + 1; j < runs_.size(); ++j) {
        const Run& r = runs_[i];
        const Run& s = runs_[j];
        if (is_zero(sub(r.b, r.a)) || is_zero(sub(s.b, s.a))) continue;
        int o1 = orient(r.a, r.b, s.a), o2 = orient(r.a, r.b, s.b);
        int o3 = orient(s.a, s.b, r.a), o4 = orient(s.a, s.b, r.b);
        if (adjacent(i, j)) {
          // only a fold back onto itself can go wrong
          if (o1 == 0 && o2 == 0 && dot(sub(r.b, r.a), sub(s.b, s.a)).sign() < 0) malformed("overlapping segments");
          continue;
        }
        if (o1 * o2 < 0 && o3 * o4 < 0) {
          add_crossing(r, s);
          continue;
        }
        if ((o1 == 0 && on_segment(r.a, r.b, s.a)) || (o2 == 0 && on_segment(r.a, r.b, s.b)) ||
            (o3 == 0 && on_segment(s.a, s.b, r.a)) || (o4 == 0 && on_segment(s.a, s.b, r.b)))
          malformed("segments touch at an endpoint or overlap");
      }
    }
  }

  void add_crossing(const Run& r, const Run& s) {
    Point2 dr = sub(r.b, r.a), ds = sub(s.b, s.a);
    QuadExt u = cross(sub(s.a, r.a), ds) / cross(dr, ds);
    Point2 p{r.a[0] + u * dr[0], r.a[1] + u * dr[1]};
    auto [er, tr] = locate(r, p);
    auto [es, ts] = locate(s, p);
    Height hr = height_at(er, tr), hs = height_at(es, ts);
    if (hr == hs) malformed("strands meet in space");
    bool r_over = hr > hs;
    Crossing c;
    c.point = p;
    c.over_comp = r_over ? r.comp : s.comp;
    c.under_comp = r_over ? s.comp : r.comp;
    c.over_edge = r_over ? er : es;
    c.under_edge = r_over ? es : er;
    c.over_t = r_over ? tr : ts;
    c.under_t = r_over ? ts : tr;
    c.sign = cross(r_over ? dr : ds, r_over ? ds : dr).sign();
    if (d_.frame == Frame::Orthocubic) {
      const DiagramEdge& eo = d_.edges[c.over_edge];
      const DiagramEdge& eu = d_.edges[c.under_edge];
      if (!eo.diagonal || !eu.diagonal) malformed("a non-diagonal edge is crossed");
      if (*d_.vertices[eo.a].color != ZColor::Black || *d_.vertices[eu.a].color != ZColor::White)
        malformed("crossing is not black over white");
    }
    d_.crossings.push_back(c);
  }

  const std::vector<InvVec>& spheres_;
  const std::map<std::size_t, Detour>& detours_;
  CubicDiagram d_;
  std::vector<Run> runs_;
  std::vector<std::pair<std::size_t, std::size_t>> comp_runs_;
};

}  // namespace

CubicDiagram project(const Necklace& n) {
  std::vector<Component> comps;
  for (const auto& c : n.cycles) comps.push_back({c, true});
  return Projector(n.frame, n.spheres, n.detours).run(comps);
}

CubicDiagram project(const OrthoTangle& t) {
  std::vector<Component> comps;
  for (const auto& p : t.open_paths) comps.push_back({p, false});
  for (const auto& c : t.closed_paths) comps.push_back({c, true});
  static const std::map<std::size_t, Detour> none;
  return Projector(Frame::Orthocubic, t.spheres, none).run(comps);
}

PDCode pd_code(const CubicDiagram& d) {
  struct Event {
    std::size_t pos;
    QuadExt t;
    std::size_t crossing;
    bool over;
  };
  std::unordered_map<std::size_t, std::pair<std::size_t, std::size_t>> where;  // edge -> (comp, pos)
  for (std::size_t k = 0; k < d.components.size(); ++k) {
    if (!d.closed[k]) throw GeometryError("pd_code: open strand in diagram");
    for (std::size_t i = 0; i < d.components[k].size(); ++i) where[d.components[k][i]] = {k, i};
  }
  std::vector<std::vector<Event>> events(d.components.size());
  for (std::size_t c = 0; c < d.crossings.size(); ++c) {
    const Crossing& x = d.crossings[c];
    auto [ko, po] = where.at(x.over_edge);
    auto [ku, pu] = where.at(x.under_edge);
    events[ko].push_back({po, x.over_t, c, true});
    events[ku].push_back({pu, x.under_t, c, false});
  }
  PDCode pd;
  pd.components = d.components.size();
  pd.crossings.assign(d.crossings.size(), {});
  pd.signs.assign(d.crossings.size(), 0);
  pd.comps.assign(d.crossings.size(), {});
  std::vector<std::array<long, 2>> under_io(d.crossings.size()), over_io(d.crossings.size());
  long label = 1;
  for (std::size_t k = 0; k < events.size(); ++k) {
    auto& ev = events[k];
    if (ev.empty()) {
      ++pd.free_loops;
      continue;
    }
    std::sort(ev.begin(), ev.end(), [](const Event& a, const Event& b) {
      if (a.pos != b.pos) return a.pos < b.pos;
      return a.t < b.t;
    });
    const long m = static_cast<long>(ev.size());
    for (long i = 0; i < m; ++i) {
      std::array<long, 2> io{label + (i + m - 1) % m, label + i};
      if (ev[i].over)
        over_io[ev[i].crossing] = io;
      else
        under_io[ev[i].crossing] = io;
    }
    label += m;
  }
  for (std::size_t c = 0; c < d.crossings.size(); ++c) {
    const auto [iu, ou] = under_io[c];
    const auto [io, oo] = over_io[c];
    int s = d.crossings[c].sign;
    pd.crossings[c] = s > 0 ? std::array<long, 4>{iu, oo, ou, io} : std::array<long, 4>{iu, io, ou, oo};
    pd.signs[c] = s;
    pd.comps[c] = {d.crossings[c].under_comp, d.crossings[c].over_comp};
  }
  return pd;
}

// ---------------------------------------------------------------------------

LaurentPoly LaurentPoly::monomial(long exp, long long coeff) {
  LaurentPoly p;
  p.add_term(exp, coeff);
  return p;
}

long long LaurentPoly::coeff(long exp) const {
  auto it = t_.find(exp);
  return it == t_.end() ? 0 : it->second;
}

void LaurentPoly::add_term(long e, long long c) {
  if (c == 0) return;
  long long& v = t_[e];
  v += c;
  if (v == 0) t_.erase(e);
}

LaurentPoly LaurentPoly::reversed() const {
  LaurentPoly p;
  for (auto [e, c] : t_) p.add_term(-e, c);
  return p;
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& o) {
  for (auto [e, c] : o.t_) add_term(e, c);
  return *this;
}

LaurentPoly operator*(const LaurentPoly& x, const LaurentPoly& y) {
  LaurentPoly p;
  for (auto [e1, c1] : x.t_)
    for (auto [e2, c2] : y.t_) p.add_term(e1 + e2, c1 * c2);
  return p;
}

std::string LaurentPoly::to_string(const std::string& var, long denominator) const {
  if (t_.empty()) return "0";
  std::string out;
  bool first = true;
  for (auto [e, c] : t_) {
    long long mag = c < 0 ? -c : c;
    if (first)
      out += c < 0 ? "-" : "";
    else
      out += c < 0 ? " - " : " + ";
    first = false;
    if (e == 0) {
      out += std::to_string(mag);
      continue;
    }
    if (mag != 1) out += std::to_string(mag) + "*";
    out += var;
    long g = std::gcd(std::labs(e), denominator);
    long num = e / g, den = denominator / g;
    if (den == 1) {
      if (num != 1) out += "^" + std::to_string(num);
    } else {
      out += "^(" + std::to_string(num) + "/" + std::to_string(den) + ")";
    }
  }
  return out;
}

LaurentPoly kauffman_bracket(const PDCode& pd) {
  const std::size_t n = pd.crossings.size();
  if (n > kMaxBracketCrossings)
    throw DomainError("bracket state sum limited to " + std::to_string(kMaxBracketCrossings) +
                      " crossings; split the link into smaller pieces");
  // dense arc indices
  std::map<long, std::size_t> ids;
  for (const auto& x : pd.crossings)
    for (long a : x) ids.emplace(a, 0);
  std::size_t next = 0;
  for (auto& kv : ids) kv.second = next++;
  std::vector<std::array<std::size_t, 4>> xs;
  for (const auto& x : pd.crossings) xs.push_back({ids[x[0]], ids[x[1]], ids[x[2]], ids[x[3]]});

  // histogram over (#A - #B, loops)
  std::map<std::pair<long, std::size_t>, long long> hist;
  if (n == 0) {
    if (pd.free_loops == 0) throw DomainError("bracket of an empty diagram");
    hist[{0, pd.free_loops}] = 1;
  }
  std::vector<std::size_t> parent(next);
  auto find = [&](std::size_t v) {
    while (parent[v] != v) v = parent[v] = parent[parent[v]];
    return v;
  };
  auto unite = [&](std::size_t a, std::size_t b, std::size_t& roots) {
    a = find(a);
    b = find(b);
    if (a != b) {
      parent[a] = b;
      --roots;
    }
  };
  for (std::uint64_t s = 0; n > 0 && s < (std::uint64_t{1} << n); ++s) {
    std::iota(parent.begin(), parent.end(), 0);
    std::size_t roots = next;
    long ab = 0;
    for (std::size_t c = 0; c < n; ++c) {
      const auto& x = xs[c];
      if (s >> c & 1) {
        unite(x[0], x[3], roots);
        unite(x[1], x[2], roots);
        --ab;
      } else {
        unite(x[0], x[1], roots);
        unite(x[2], x[3], roots);
        ++ab;
      }
    }
    ++hist[{ab, roots + pd.free_loops}];
  }

  // delta = -A^2 - A^-2
  LaurentPoly delta = LaurentPoly::monomial(2, -1) + LaurentPoly::monomial(-2, -1);
  std::vector<LaurentPoly> dpow{LaurentPoly::monomial(0, 1)};
  LaurentPoly out;
  for (auto [key, count] : hist) {
    auto [ab, loops] = key;
    while (dpow.size() < loops) dpow.push_back(dpow.back() * delta);
    out += LaurentPoly::monomial(ab, count) * dpow[loops - 1];
  }
  return out;
}

LaurentPoly jones(const PDCode& pd) {
  long w = 0;
  for (int s : pd.signs) w += s;
  LaurentPoly f = LaurentPoly::monomial(-3 * w, (w % 2 == 0) ? 1 : -1);
  LaurentPoly v = f * kauffman_bracket(pd);
  // A = t^(-1/4)
  return v.reversed();
}

long linking_number(const PDCode& pd, std::size_t c1, std::size_t c2) {
  if (pd.components < 2) throw DomainError("linking number needs at least two components");
  if (c1 == c2 || c1 >= pd.components || c2 >= pd.components) throw DomainError("linking number needs two distinct components");
  long sum = 0;
  for (std::size_t i = 0; i < pd.crossings.size(); ++i) {
    auto [u, o] = pd.comps[i];
    if ((u == c1 && o == c2) || (u == c2 && o == c1)) sum += pd.signs[i];
  }
  if (sum % 2 != 0) throw GeometryError("odd signed crossing count between two closed components");
  return sum / 2;
}

// ---------------------------------------------------------------------------

namespace {

struct Canvas {
  double minx = 1e300, miny = 1e300, maxx = -1e300, maxy = -1e300;
  double scale = 1;
  void include(double x, double y, double r = 0) {
    minx = std::min(minx, x - r);
    maxx = std::max(maxx, x + r);
    miny = std::min(miny, y - r);
    maxy = std::max(maxy, y + r);
  }
  void finish() {
    if (minx > maxx) minx = miny = -1, maxx = maxy = 1;
    double pad = 0.05 * std::max(maxx - minx, maxy - miny) + 1e-9;
    minx -= pad;
    maxx += pad;
    miny -= pad;
    maxy += pad;
    scale = 800.0 / std::max(maxx - minx, maxy - miny);
  }
  double X(double x) const { return (x - minx) * scale; }
  double Y(double y) const { return (maxy - y) * scale; }
  int width() const { return static_cast<int>(std::ceil((maxx - minx) * scale)); }
  int height() const { return static_cast<int>(std::ceil((maxy - miny) * scale)); }
};

std::string fmt(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3f", v);
  std::string s = buf;
  return s == "-0.000" ? "0.000" : s;
}

struct Circle2 {
  bool line = false;
  double x = 0, y = 0, r = 0;  // circle
  double nx = 0, ny = 0, d = 0;  // line n.x = d
};

Circle2 circle2(const InvVec& c) {
  SphereGeometry g = center_radius(c);
  Circle2 o;
  if (g.halfspace) {
    o.line = true;
    o.nx = g.normal[0].to_double();
    o.ny = g.normal[1].to_double();
    o.d = g.delta.to_double();
  } else {
    o.x = g.center[0].to_double();
    o.y = g.center[1].to_double();
    o.r = std::fabs(g.radius.to_double());
  }
  return o;
}

void draw_background(std::ostringstream& os, const Canvas& cv, const std::vector<Circle2>& bg) {
  for (const auto& c : bg) {
    if (c.line) {
      // clip the line to the canvas diagonal extent
      double L = (cv.maxx - cv.minx) + (cv.maxy - cv.miny);
      double px = c.nx * c.d, py = c.ny * c.d;
      os << "<line x1=\"" << fmt(cv.X(px - c.ny * L)) << "\" y1=\"" << fmt(cv.Y(py + c.nx * L)) << "\" x2=\""
         << fmt(cv.X(px + c.ny * L)) << "\" y2=\"" << fmt(cv.Y(py - c.nx * L))
         << "\" stroke=\"#bbbbbb\" stroke-width=\"1\"/>\n";
    } else {
      os << "<circle cx=\"" << fmt(cv.X(c.x)) << "\" cy=\"" << fmt(cv.Y(c.y)) << "\" r=\"" << fmt(c.r * cv.scale)
         << "\" fill=\"none\" stroke=\"#bbbbbb\" stroke-width=\"1\"/>\n";
    }
  }
}

std::string header(const Canvas& cv) {
  std::ostringstream os;
  os << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
     << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" << cv.width() << "\" height=\""
     << cv.height() << "\" viewBox=\"0 0 " << cv.width() << " " << cv.height() << "\">\n"
     << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
  return os.str();
}

}  // namespace

std::string render_svg(const CubicDiagram& d, const std::vector<InvVec>& background) {
  Canvas cv;
  std::vector<Circle2> bg;
  for (const auto& b : background) {
    bg.push_back(circle2(b));
    if (!bg.back().line) cv.include(bg.back().x, bg.back().y, bg.back().r);
  }
  std::vector<std::array<double, 3>> pts;
  for (const auto& v : d.vertices) {
    pts.push_back({v.pos[0].to_double(), v.pos[1].to_double(), std::fabs(v.radius.to_double())});
    cv.include(pts.back()[0], pts.back()[1], pts.back()[2]);
  }
  cv.finish();
  std::ostringstream os;
  os << header(cv);
  draw_background(os, cv, bg);
  for (std::size_t i = 0; i < d.vertices.size(); ++i) {
    const auto& v = d.vertices[i];
    if (v.waypoint) continue;
    std::string fill = !v.color ? "#cfe3f7" : (*v.color == ZColor::Black ? "#333333" : "#ffffff");
    os << "<circle cx=\"" << fmt(cv.X(pts[i][0])) << "\" cy=\"" << fmt(cv.Y(pts[i][1])) << "\" r=\""
       << fmt(pts[i][2] * cv.scale) << "\" fill=\"" << fill << "\" fill-opacity=\"0.35\" stroke=\"#555555\"/>\n";
  }
  auto seg = [&](std::size_t a, std::size_t b, const char* color, double w) {
    os << "<line x1=\"" << fmt(cv.X(pts[a][0])) << "\" y1=\"" << fmt(cv.Y(pts[a][1])) << "\" x2=\""
       << fmt(cv.X(pts[b][0])) << "\" y2=\"" << fmt(cv.Y(pts[b][1])) << "\" stroke=\"" << color
       << "\" stroke-width=\"" << fmt(w) << "\" stroke-linecap=\"round\"/>\n";
  };
  for (const auto& e : d.edges) seg(e.a, e.b, "#c0392b", 3);
  // gaps: blank out the under strand near each crossing, then redraw the over strand
  for (const auto& c : d.crossings) {
    const auto& e = d.edges[c.under_edge];
    double px = c.point[0].to_double(), py = c.point[1].to_double();
    double dx = pts[e.b][0] - pts[e.a][0], dy = pts[e.b][1] - pts[e.a][1];
    double len = std::hypot(dx, dy);
    if (len == 0) continue;
    double g = 12.0 / cv.scale / len;
    os << "<line x1=\"" << fmt(cv.X(px - g * dx)) << "\" y1=\"" << fmt(cv.Y(py - g * dy)) << "\" x2=\""
       << fmt(cv.X(px + g * dx)) << "\" y2=\"" << fmt(cv.Y(py + g * dy))
       << "\" stroke=\"white\" stroke-width=\"9.000\" class=\"gap\"/>\n";
    seg(d.edges[c.over_edge].a, d.edges[c.over_edge].b, "#c0392b", 3);
  }
  os << "</svg>\n";
  return os.str();
}

std::string render_circles_svg(const std::vector<InvVec>& circles) {
  Canvas cv;
  std::vector<Circle2> bg;
  for (const auto& c : circles) {
    bg.push_back(circle2(c));
    if (!bg.back().line) cv.include(bg.back().x, bg.back().y, bg.back().r);
  }
  cv.finish();
  std::ostringstream os;
  os << header(cv);
  draw_background(os, cv, bg);
  os << "</svg>\n";
  return os.str();
}

}  // namespace orthoweave
